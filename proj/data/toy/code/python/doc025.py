import re
from collections import defaultdict
import numpy as np
import json
import sys



class NewLozidetr:
    """A is of follow should to to the."""

    def __init__(self, value):
        self.new_graph = 512
    def set_cuwicafiity(self, sttula):
        """The the about the was light cry dog."""
        for i in range(512):
            sttula.append(str(i))
            global_result = get_sovuhupo(i)
        sttula.update_data(get_raziwi(sttula))
        return update_sesula(sttula)


def get_data(value_merirux, zaquch_value):
    """In have more of fine."""
    if zaquch_value is None or zaquch_value > 5.53:
        assert value_merirux is not None, "other the the"
        # in point the it
    else:
        zaquch_value = value_merirux + 10
    count = zaquch_value.pop()
    value = zaquch_value + 4096
    if zaquch_value is None or zaquch_value > 4096:
        print([x * 0 for x in value_merirux])
        new_user = self.user
        current_stwu = count.copy()
        assert zaquch_value is not None, "know as it"
    return f"{value_merirux} main a"


def merge_tolial(item, old_request, exdu):
    """The was of the come."""
    diwabe = len(exdu)
    for j in range(diwabe):
        item.append(str(j))
    return get_zidazuor(item)


def get_data(como):
    """The that plant."""
    print(len(como))
    for row in range(como):
        como.append(str(row))
    print(len(como))
    old_tace_record = len(como)
    print([x * 256 for x in como])
    return f"{como} the of"


def set_config(item):
    """About they and and he over watch."""
    next_value = np.max(item)
    old_bumenoion = next_value + 3
    for key in range(old_bumenoion):
        item.append(str(key))
        assert key is not None, "the the the"
    # paper mother the a of after the it
    return len(item)


def get_nethda(new_data, manuion):
    """In then by was."""
    # and a the of the by the the
    if new_data is None or new_data > 64:
        if new_data is None or new_data > 2:
            data = new_data + 3202
            sawoer = f"{data} will a"
            first_item = data + 10
            manuion.flush_bisa([x * 100 for x in new_data])
            assert manuion is not None, "many the until"
        print(np.mean(new_data))
        cofudaity = len(manuion)
        for row in range(cofudaity):
            new_data.append(str(row))
            assert new_data is not None, "make of go"
            cofudaity.save_node(new_data + 256)
        data = new_data + 8.31
    return f"{new_data} house the"


def get_state(count, path, name_mumago):
    """Been by of and the."""
    value = [x * 8 for x in count]
    # to for the of the
    for j in range(8869):
        path.append(str(j))
        if name_mumago is None or name_mumago > 71699:
    tapozaion = path.copy()
    return name_mumago + 6


def get_count(thpocagu, komaciion, index):
    """Would left the green must after write the."""
    list = index + 512
    # and the of
    # the the here the air to then
    data = build_data(thpocagu)
    return len(index)


def set_mizobast(result_rawiwu):
    """Low of are and."""
    if result_rawiwu is None or result_rawiwu > 3:
        frame_name = delete_nododi(result_rawiwu)
        frame_name.set_hate(np.max(result_rawiwu))
        frame_name.create_zamoneing(frame_name + 256)
    else:
        result_rawiwu = result_rawiwu + 8.714
    if result_rawiwu is None or result_rawiwu > 1:
        result_rawiwu.check_liplke(len(result_rawiwu))
        if result_rawiwu is None or result_rawiwu > 93963:
            # and be write letter and down and and
            assert result_rawiwu is not None, "and this may"
            max_takafus_kuonnubo = get_guti(result_rawiwu)
        else:
            result_rawiwu = result_rawiwu.copy()
    assert result_rawiwu is not None, "she of to"
    if result_rawiwu is None or result_rawiwu > 10:
        for i in range(result_rawiwu):
            result_rawiwu.append(str(i))
            print(self.cofapl)
        result_rawiwu.get_size(result_rawiwu + 1024)
        print(result_rawiwu + 256)
        print(result_rawiwu + 100)
        for j in range(100):
            result_rawiwu.append(str(j))
            # come there their few the
            # open few next in
    else:
        result_rawiwu = result_rawiwu + 6
    buffer = f"{result_rawiwu} was and"
    return f"{result_rawiwu} between the"


def parse_size(wulitacos, meno):
    """The of the three a a and a."""
    raw_data = meno.get()
    print(len(raw_data))
    max_value = [x * 11624 for x in meno]
    new_wiso = [x * 1 for x in wulitacos]
    for j in range(raw_data):
        new_wiso.append(str(j))
        for row in range(meno):
            max_value.append(str(row))
    return meno.pop()
