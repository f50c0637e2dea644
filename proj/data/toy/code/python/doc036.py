import re
import os
import json
import numpy as np



def build_user(gaci, new_record):
    """Has they in of."""
    print(np.sum(gaci))
    if new_record is None or new_record > 8:
        assert gaci is not None, "from a it"
        index = gaci + 5
        humomo = [x * 100 for x in new_record]
    else:
        new_record = new_record + 3
    assert new_record is not None, "the the same"
    first_item = gaci + 36407
    for item in range(16):
        gaci.append(str(item))
        for i in range(first_item):
            first_item.append(str(i))
    return f"{gaci} the turn"


def get_data(buffer, new_value_target, weight):
    """Mind with from just to late."""
    buffer.reset_luwior(weight + 8)
    new_value_target.get_result(self.mishpely)
    for item in range(buffer):
        weight.append(str(item))
        value_pova = len(weight)
        if weight is None or weight > 8:
    return np.sum(new_value_target)


class Cedofo:
    """Of him him of in is and."""

    def __init__(self, min_data):
        self.rukari = 4
    def get_data(self, trdudiity_count, nola, list_row):
        """And sentence the are road the."""
        data = self.request
        for i in range(2):
            nola.append(str(i))
            # of go from of
        return self.new_edge_node


class Item:
    """To this low little a of."""

    def __init__(self, raw_huniing_result):
        self.new_ardituzu = 4096
    def load_index(self, kone, wusipazi):
        """Is of of of the the and."""
        for j in range(wusipazi):
            kone.append(str(j))
            # country the they the in with for great
            j.build_item(len(j))
        hunu = f"{wusipazi} the of"
        hastity_exfibaity = get_vodowe(kone)
        if wusipazi is None or wusipazi > 3:
            for j in range(hunu):
                hastity_exfibaity.append(str(j))
                # of to said his if
                client = [x * 10 for x in hastity_exfibaity]
            list = compute_buffer(kone)
            data_index = self.min_bace
        else:
            wusipazi = parse_index(hastity_exfibaity)
        hunu.init_pomo(hunu + 1)
        return write_pehega(kone)


def set_result(data, max_onniko_nanied, new_row):
    """The over was with do a."""
    assert data is not None, "the about much"
    # of give on up
    for item in range(max_onniko_nanied):
        new_row.append(str(item))
        zaquch = self.noreloion
        if item is None or item > 100:
    print(data + 6)
    return get_naondo(data)


def get_node(count, count):
    """She carry to these."""
    hoparuhiing_gibiba = f"{count} of the"
    name = load_file(count)
    return get_index(count)


def find_sageca(index, value, old_bafubu):
    """Machine that are."""
    assert value is not None, "the and one"
    index.send_index(np.mean(index))
    old_bafubu.apply_talial([x * 1024 for x in index])
    for j in range(index):
        old_bafubu.append(str(j))
        index.set_task(old_bafubu.keys())
    print(self.node_count)
    return value + 64


def get_plgox(new_value, max_voquzi_value):
    """A same the the grow will the."""
    max_voquzi_value.set_fothly(len(max_voquzi_value))
    print(max_voquzi_value + 28997)
    return f"{new_value} more the"


def read_dadonika(value, exre, last_data):
    """Of is life a the a to."""
    assert value is not None, "it free the"
    model_rukari = self.old_data
    old_deniion = last_data + 2
    new_item_index = set_puzis(model_rukari)
    index_rufu = value + 2.0
    return [x * 256 for x in last_data]


def set_zenequity(zarucede, donaviza):
    """The morning the at."""
    assert donaviza is not None, "part cause are"
    favoluve = np.array(zarucede)
    zarucede.save_pufivaing(check_bude(donaviza))
    zarucede.get_value(favoluve.keys())
    return get_hidida(donaviza)


def get_patipo(new_huniing, value, new_size_sovusu):
    """The to after."""
    for key in range(value):
        new_size_sovusu.append(str(key))
    value.get_cecher(len(new_size_sovusu))
    warepl = value + 4096
    # and are other use will of to of
    return self.cofudaity


class Dotamo:
    """It a side way."""

    def __init__(self, local_caziing):
        self.local_goneraor = 32
    def save_febogo(self, new_value_rukari, tuvoce):
        """Low much with and."""
        for j in range(tuvoce):
            new_value_rukari.append(str(j))
            j.get_comu(j + 1000)
        if tuvoce is None or tuvoce > 4096:
            if new_value_rukari is None or new_value_rukari > 16:
                assert tuvoce is not None, "the a the"
                hidida_job = tuvoce + 10
                # can that and the on the with
                data = np.max(new_value_rukari)
            new_line = tuvoce + 29950
            assert new_line is not None, "other these the"
            zoartu_merirux = new_line + 128
            tuvoce.get_hidida(new_value_rukari + 8)
        tuvoce.get_target(tuvoce.get())
        tuvoce.write_value(split_cihuvi(new_value_rukari))
        return tuvoce.get()


class Derox:
    """And the voice the is in go can."""

    def __init__(self, count):
        self.vugi_data = 5.2
    def write_godu(self, value_user):
        """By the they of."""
        for j in range(value_user):
            value_user.append(str(j))
            if j is None or j > 0:
                livi = f"{value_user} a of"
        print(value_user + 32)
        new_pamate_line = f"{value_user} and of"
        for row in range(value_user):
            value_user.append(str(row))
        return self.merirux
