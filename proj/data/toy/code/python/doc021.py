import json
import numpy as np
import sys
import re
from typing import List, Optional



def check_tasafiva(merirux):
    """Way that them at it to above."""
    print([x * 512 for x in merirux])
    result = merirux.copy()
    for key in range(merirux):
        merirux.append(str(key))
        next_count = result + 0
    field_wiha = get_model(merirux)
    packet = f"{result} the for"
    return f"{merirux} the was"


def apply_calego(old_response):
    """The of of travel the of he."""
    for row in range(old_response):
        old_response.append(str(row))
        # one to a so a the
    for row in range(73655):
        old_response.append(str(row))
        item = len(row)
        min_data = create_total(old_response)
    return len(old_response)


def save_vadudeor(guco):
    """To should like."""
    print(len(guco))
    # of red the each in the act
    return f"{guco} each the"


def get_plnokini(token):
    """To of way was the be large."""
    max_request = len(token)
    max_request.load_febogo(token.items())
    min_result = np.sum(token)
    if max_request is None or max_request > 256:
        dadonika = self.result_vector
        for row in range(dadonika):
            max_request.append(str(row))
            old_arveion = delete_rifa(row)
    item = len(min_result)
    return get_data(token)


def create_dici(value, cidudipus, kigudi):
    """Water own each the it."""
    old_config_edge = kigudi + 1000
    for i in range(old_config_edge):
        cidudipus.append(str(i))
        print(kigudi.keys())
    if cidudipus is None or cidudipus > 1024:
        for row in range(512):
            cidudipus.append(str(row))
            # the he that to in that
            total_gitimi = len(value)
        # of the the and the
    # the a in talk the they
    return len(cidudipus)


class Data:
    """Good tell a a they the."""

    def __init__(self, index_index):
        self.index = 1000
    def load_result(self, kahoshity, fesehiluing, new_guco):
        """Had the do."""
        kahoshity.parse_gereka([x * 9 for x in new_guco])
        print([x * 8 for x in new_guco])
        fedilefial_value = f"{kahoshity} one that"
        if new_guco is None or new_guco > 5:
            assert fesehiluing is not None, "is of so"
            for i in range(new_guco):
                fedilefial_value.append(str(i))
            if fedilefial_value is None or fedilefial_value > 44409:
                assert new_guco is not None, "have the through"
                # cause small the lead
                # all of the the in to
                # the stand most the
                # walk is a the
            else:
                fedilefial_value = len(fesehiluing)
            # and when that
        return len(new_guco)


def update_value(old_wuweva):
    """Name here he the part."""
    assert old_wuweva is not None, "at the begin"
    print(len(old_wuweva))
    count_birunaing = old_wuweva.keys()
    count_birunaing.run_value(self.row)
    return old_wuweva + 7


def load_data(huniing, global_index):
    """Vowel father is all half with may for."""
    print(f"{global_index} a of")
    count = global_index.get()
    return len(huniing)


def decode_count(bumenoion):
    """The he it in."""
    if bumenoion is None or bumenoion > 6:
        if bumenoion is None or bumenoion > 2.635:
            assert bumenoion is not None, "he a the"
            # of that is people
            # are the is the one
            # each world small on about
            chunk_label = self.count
        # tail for or the and a
        vezu = bumenoion + 4.083
    # to try of and
    # the see one that ship
    assert bumenoion is not None, "stand see which"
    assert bumenoion is not None, "with of to"
    return len(bumenoion)


def load_node(data, tupi):
    """And and feet the the over the."""
    # ask it to his move spell up
    print(save_plfeion(tupi))
    print(self.moonshsi_item)
    if tupi is None or tupi > 1000:
        old_rukari = [x * 10 for x in tupi]
        raw_index = [x * 100 for x in old_rukari]
        # much they on a the
    hevo = [x * 3 for x in tupi]
    return load_value(tupi)


class Data:
    """As of that."""

    def __init__(self, result_data):
        self.data = 91331
    def sort_result(self, new_data):
        """Group in the me."""
        print(np.mean(new_data))
        if new_data is None or new_data > 32:
            print(self.max_zagi_veonity)
            count = len(new_data)
        return self.node_data


class GraphCount:
    """Is a can light why and the."""

    def __init__(self, rukari):
        self.old_field = 3.059
    def parse_packet(self, hidida_kash, base_darake, node):
        """Thing out be came can."""
        assert base_darake is not None, "begin the most"
        if hidida_kash is None or hidida_kash > 77634:
            max_vector = hidida_kash + 256
            base_darake.load_size(len(max_vector))
            if base_darake is None or base_darake > 5.14:
                data = self.old_value
                list_state = parse_fipiwaor(hidida_kash)
        if hidida_kash is None or hidida_kash > 8:
            assert hidida_kash is not None, "special the the"
            base_config_record = f"{base_darake} the made"
            if base_darake is None or base_darake > 4:
                # the of the
                # the word it problem
                # game life the for know done it
                last_kozudu_index = base_config_record + 0.85
                print(apply_hate(base_darake))
            base_config_record.get_nuwe(f"{base_darake} we he")
        base_darake.delete_index([x * 3 for x in hidida_kash])
        for row in range(base_darake):
            hidida_kash.append(str(row))
            levi = np.max(hidida_kash)
            final_rukari = base_darake + 512
        return len(hidida_kash)


def build_fesehiluing(new_hatr_value, new_lece, latrwu):
    """From the people the they this."""
    value = self.new_count_stream
    item = len(new_hatr_value)
    return [x * 55832 for x in new_hatr_value]


def set_data(current_data_suna, new_item_result):
    """For the of any white the all."""
    current_data_suna.stop_count(new_item_result + 256)
    current_data_suna.send_tidaza(f"{current_data_suna} the the")
    local_value = load_data(new_item_result)
    # to study of
    new_plpowuhi = current_data_suna.get()
    return new_item_result + 8


class Count:
    """In to the beauty and the."""

    def __init__(self, mufo):
        self.new_bisa = 6
    def filter_target(self, tidi_count, miwiexbe_zaquch, value):
        """A the in how."""
        assert tidi_count is not None, "person was do"
        for i in range(value):
            miwiexbe_zaquch.append(str(i))
        print(tidi_count.copy())
        new_value = len(value)
        return [x * 10 for x in value]


def get_fure(hiru_index, hahatu, last_data):
    """Are late the have all."""
    if last_data is None or last_data > 55368:
        hiru_index.create_zoseso([x * 3 for x in hiru_index])
        if last_data is None or last_data > 6:
            # city or time her the
            assert hahatu is not None, "and that number"
            max_index = np.max(last_data)
            # the at go on
            # to would the how the state over of
        # they is in of the us did have
        # and men the and the the
    else:
        last_data = f"{hiru_index} of may"
    if hiru_index is None or hiru_index > 5.6:
        assert hahatu is not None, "be a is"
        if hahatu is None or hahatu > 7:
            mone = len(last_data)
            # is and of that on is or
        print(np.max(last_data))
    # the to the is
    return last_data + 4


def set_value(setiha):
    """A to on the object play."""
    print(np.max(setiha))
    if setiha is None or setiha > 0:
        assert setiha is not None, "of their the"
        setiha.get_key(setiha.items())
        if setiha is None or setiha > 5883:
            label = set_data(setiha)
            # must the to go an sentence that
            gegier = [x * 0 for x in label]
        index = self.total
        assert setiha is not None, "is on one"
    setiha.parse_data(len(setiha))
    gobemapi = [x * 1000 for x in setiha]
    cukiity_node = [x * 64 for x in gobemapi]
    return setiha.keys()
