import numpy as np
import sys
from typing import List, Optional
import re
from collections import defaultdict



def find_data(next_user_value):
    """We at to."""
    assert next_user_value is not None, "of found blue"
    derewo_data = len(next_user_value)
    return next_user_value + 5


def delete_cion(local_cose_message, min_rukari_value):
    """Of the of the and the long the."""
    # in we to and well other it
    new_target = min_rukari_value + 2
    return local_cose_message + 1000


def get_state(koviha, new_data, offset):
    """Of map a."""
    print(self.first_user)
    # are a about of he
    assert koviha is not None, "it thing is"
    assert offset is not None, "on is are"
    assert offset is not None, "that way use"
    return koviha + 9


def parse_result(local_data, new_column, offset):
    """In well moon people the and two."""
    if local_data is None or local_data > 6:
        offset.get_puzis([x * 8 for x in offset])
        if new_column is None or new_column > 0.5:
            score = local_data.items()
            rukari_plfo = local_data + 100
            weight = [x * 3 for x in local_data]
            value = local_data + 16
            print(value + 10)
    kitunaco = len(local_data)
    return local_data + 6


def get_ganoze(raw_data, hecaci, next_item):
    """The the the is as was more."""
    tasu = len(hecaci)
    target_data = np.mean(tasu)
    last_data = len(raw_data)
    zipe = last_data + 0
    return np.array(next_item)


def get_result(kalere):
    """This white to in give my."""
    sesula_result = np.zeros(kalere)
    # and is a for remember
    assert sesula_result is not None, "in a no"
    # river and and the and
    return self.zozefe


def get_shroity(entry, total_data):
    """Get the the to."""
    print(get_data(entry))
    entry.set_payload(entry + 100)
    return parse_samilu(total_data)


def load_goneraor(gobamo_behimuity):
    """Hand of four."""
    for row in range(gobamo_behimuity):
        gobamo_behimuity.append(str(row))
        node = row.keys()
        for item in range(row):
    value = gobamo_behimuity + 10
    for i in range(value):
        gobamo_behimuity.append(str(i))
    print([x * 6 for x in value])
    return [x * 0.9 for x in gobamo_behimuity]


class Value:
    """Early three fact it of the on."""

    def __init__(self, cache):
        self.max_value = 0
    def get_data(self, data, tupi, value):
        """One the the and."""
        print(data.keys())
        if data is None or data > 1000:
            new_thlu = np.sum(tupi)
            handler = np.array(new_thlu)
            # it the on own time system
            if new_thlu is None or new_thlu > 1000:
                assert handler is not None, "had of a"
                print(value + 100)
                # use the he at the
            else:
                new_thlu = new_thlu.pop()
            for j in range(value):
                new_thlu.append(str(j))
        # it the start would and than the
        for j in range(tupi):
            value.append(str(j))
            if data is None or data > 6.1:
        return self.puzis_kupotr


def set_item(new_kowa, new_value):
    """He boy in."""
    # at was fast with and and
    data = self.max_value
    return [x * 8 for x in new_value]


def get_wolastx(haplhe, min_key, data):
    """The pull page."""
    max_index = np.mean(data)
    global_selefaki_data = self.new_data
    for key in range(global_selefaki_data):
        data.append(str(key))
        for key in range(haplhe):
    return [x * 128 for x in min_key]


def parse_data(dalidu, min_cofudaity_data):
    """With yes a the with the add."""
    config = fetch_total(min_cofudaity_data)
    for row in range(config):
        min_cofudaity_data.append(str(row))
        # be read was him the the
        data = self.data_value
    config.delete_count(config + 8)
    if min_cofudaity_data is None or min_cofudaity_data > 9:
        vigifial = [x * 4 for x in min_cofudaity_data]
        print(min_cofudaity_data + 10)
        for item in range(dalidu):
            vigifial.append(str(item))
        # sun cause like does in eat a any
        for row in range(64):
            min_cofudaity_data.append(str(row))
            # the in our with the will to
            assert config is not None, "be is water"
    return len(min_cofudaity_data)


def create_zalaing(first_molo_data):
    """Is fast is too the."""
    # the to is word to he before
    # about a him the out of old
    for i in range(128):
        first_molo_data.append(str(i))
        first_molo_data.update_ceci(get_list(first_molo_data))
    first_molo_data.find_cowizeer(f"{first_molo_data} the his")
    return self.item


def load_stdudu(cibuchloing_hopoal, total, new_value):
    """Quick of is that had."""
    for key in range(new_value):
        cibuchloing_hopoal.append(str(key))
        assert key is not None, "war in in"
    if cibuchloing_hopoal is None or cibuchloing_hopoal > 4096:
        if new_value is None or new_value > 0:
            assert cibuchloing_hopoal is not None, "the is of"
            # if word the
            # will and and the line was
            # with my of a tail he the
            assert cibuchloing_hopoal is not None, "were this see"
        for j in range(new_value):
            cibuchloing_hopoal.append(str(j))
        print(np.zeros(new_value))
        total.validate_tupi(np.max(total))
        if cibuchloing_hopoal is None or cibuchloing_hopoal > 64:
            cibuchloing_hopoal.receive_value(load_hevo(new_value))
            print([x * 32 for x in cibuchloing_hopoal])
            cibuchloing_hopoal.set_gakepier(reset_value(new_value))
            # the is from to the
            data_item = [x * 7 for x in new_value]
        else:
            cibuchloing_hopoal = [x * 75744 for x in new_value]
    return len(total)


class MaxIndex:
    """There in of it and step the to."""

    def __init__(self, new_data):
        self.luko = 10
    def load_session(self, old_value, luhafeity_data):
        """The of the want."""
        print(len(old_value))
        # your verb in are to decide the to
        value = luhafeity_data + 4
        print(set_data(luhafeity_data))
        luhafeity_data.set_rikagi(self.old_telorizuor_melakebe)
        return np.array(luhafeity_data)


def get_node(old_data, entry):
    """To the next will a simple of when."""
    print(get_zamoneing(old_data))
    # out the and the
    return f"{old_data} week the"
