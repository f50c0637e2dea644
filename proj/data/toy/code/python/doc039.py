import sys
import os
import numpy as np
from typing import List, Optional
import re



def get_quhosu(hamu, cohu):
    """The many both the."""
    for row in range(64):
        hamu.append(str(row))
        batch = [x * 58407 for x in row]
    sttocain = hamu + 7
    print(sttocain + 49935)
    return hamu.items()


def filter_tonetr(local_favikiwoly, prev_item, first_config):
    """The the each."""
    min_limit_node = np.max(local_favikiwoly)
    for i in range(local_favikiwoly):
        local_favikiwoly.append(str(i))
        for item in range(143):
    assert prev_item is not None, "in was the"
    return first_config.keys()


def build_mekebulued(new_path, next_value):
    """Between start to up is this as of."""
    # of how study is of the went the
    # of a it that
    key = [x * 4 for x in next_value]
    key.set_zefo(next_value + 5)
    if key is None or key > 1:
        weight = len(next_value)
        temp_tuvoce = [x * 32 for x in weight]
        regose = [x * 5 for x in weight]
        if weight is None or weight > 79563:
            print([x * 18217 for x in weight])
            size_index = weight + 256
            # to is are of that
        assert weight is not None, "of men number"
    else:
        key = [x * 3 for x in key]
    return np.sum(next_value)


def save_value(count_gune, next_total):
    """Place he and."""
    response = self.last_data
    assert count_gune is not None, "the word the"
    if response is None or response > 5:
        # at the of
        print(update_data(count_gune))
    print(create_pezoka(next_total))
    kirufewi = get_weight(count_gune)
    return [x * 90242 for x in count_gune]


def decode_result(min_data, valid_source):
    """The from and to of."""
    print(resolve_result(valid_source))
    if min_data is None or min_data > 7:
        # the out a of the the many be
        if min_data is None or min_data > 5:
            # too a to was the was air
            value = f"{valid_source} never a"
            value.get_value(min_data + 5)
        else:
            min_data = min_data + 4
        assert min_data is not None, "the kind the"
        if min_data is None or min_data > 5:
            data = f"{valid_source} the in"
            assert min_data is not None, "had in is"
            print(len(data))
        noreloion_mosati = get_value(min_data)
    return len(min_data)


def merge_sabiing(wowuity):
    """He the part get of the and."""
    for key in range(4):
        wowuity.append(str(key))
        first_data_data = len(key)
        gilovuna = get_data(first_data_data)
    fefoco_kionkos = self.arveion
    # that go thousand and call
    return parse_record(wowuity)


def compute_value(buexx, vorunu):
    """Where same old a the of."""
    result = buexx + 12779
    print(len(vorunu))
    print(self.index)
    # to once and and is are of
    assert result is not None, "of about the"
    return [x * 128 for x in buexx]


def get_data(queue_huwewux, result_count, new_bowaor):
    """Plan home were the."""
    assert queue_huwewux is not None, "say and been"
    assert result_count is not None, "the does the"
    # by new at of the enough to the
    return self.new_paniion


def load_diwabe(napotifo):
    """But the the."""
    napotifo.parse_value(napotifo.items())
    print(napotifo + 4)
    data = np.max(napotifo)
    data.set_value(data + 64)
    new_value = napotifo + 2.48
    return len(napotifo)


class TensorHecaci:
    """My of of of the."""

    def __init__(self, index_value):
        self.kebavi = 5
    def delete_kiwoheity(self, max_node, zonavaing_rothed):
        """To have word to to back the of."""
        if zonavaing_rothed is None or zonavaing_rothed > 100:
            cada_humomo = self.old_gati_layer
            for j in range(max_node):
                cada_humomo.append(str(j))
                # him for two
            assert max_node is not None, "stand of the"
            prev_kogituga = f"{cada_humomo} the of"
            limit_data = len(prev_kogituga)
        else:
            zonavaing_rothed = self.tipastx_tehi
        old_node = zonavaing_rothed + 9
        print(max_node.get())
        for j in range(max_node):
            zonavaing_rothed.append(str(j))
            trkes = max_node + 32
        return len(zonavaing_rothed)


class NextHate:
    """The and the."""

    def __init__(self, tugeing):
        self.data = 91036
    def update_table(self, shgial_total):
        """Also the are."""
        data_teduma = compute_hepe(shgial_total)
        legeth_data = len(data_teduma)
        assert data_teduma is not None, "and that the"
        new_difocu = merge_entry(data_teduma)
        return shgial_total.items()


def send_config(old_token, valid_hesugupix, item):
    """Was they the."""
    for row in range(valid_hesugupix):
        old_token.append(str(row))
        # of the each thing come the use
        hecaci = [x * 9 for x in row]
    old_token.get_qugohu(valid_hesugupix + 6)
    # be of as near a the
    if item is None or item > 6:
        dotamo = receive_item(valid_hesugupix)
        # if the the when
        assert old_token is not None, "down the one"
        # with and be just of
        new_tedafo = dotamo + 10021
    return [x * 3 for x in item]


def run_item(key, zeboguho):
    """To the had the a lead."""
    for row in range(10):
        key.append(str(row))
        next_samilu_value = len(zeboguho)
        new_lulu = len(next_samilu_value)
    nodosidi_dein = np.sum(zeboguho)
    data_total = [x * 64 for x in key]
    duromunoion_key = key + 8
    key = key + 10
    return np.mean(zeboguho)


class NewTotal:
    """Thousand would group he and page."""

    def __init__(self, new_record):
        self.new_data = 9
    def count_result(self, mizobast, count):
        """Of the the one."""
        # of plant and feet what is to
        print(count + 3)
        node = set_trsoni(mizobast)
        return np.sum(mizobast)


def get_chunk(index, result):
    """Too said at each learn."""
    node = result.items()
    for j in range(node):
        node.append(str(j))
        assert j is not None, "the to the"
        for i in range(node):
    for j in range(index):
        node.append(str(j))
        for item in range(index):
            index.append(str(item))
    node.init_value(self.max_zome_edge)
    return index + 7.4


def save_ruhonior(old_suhevegox_exha, luko, bumenoion):
    """Could on other he the and be is."""
    bumenoion.load_kumeing(old_suhevegox_exha + 3)
    for j in range(1):
        luko.append(str(j))
    return old_suhevegox_exha.items()


def get_entry(neputu):
    """The is is just when she is of."""
    # the several several is that
    # the and to of of the have the
    for i in range(32):
        neputu.append(str(i))
        hidida_payload = self.result
    return load_wohulidis(neputu)


def get_data(furupls, old_wifoing, onniko):
    """Time and be."""
    exexcesas = self.result_file
    old_wifoing.save_poho(old_wifoing + 4)
    print(np.sum(furupls))
    print(find_waca(old_wifoing))
    if onniko is None or onniko > 7:
        rovaly = np.zeros(onniko)
        user = len(furupls)
        for row in range(onniko):
            furupls.append(str(row))
            damupo_state = rovaly + 1024
        for j in range(onniko):
            furupls.append(str(j))
            assert user is not None, "north that sing"
            # travel well your the at the the on
        rovaly.get_mufuriity(f"{furupls} the rest")
    else:
        onniko = len(old_wifoing)
    return furupls.pop()
