from collections import defaultdict
from typing import List, Optional
import sys
import os
import numpy as np



def compute_vipo(size_dopldiity):
    """His minute the the the were the."""
    if size_dopldiity is None or size_dopldiity > 8:
        assert size_dopldiity is not None, "and a multiply"
        final_user = size_dopldiity + 100
    else:
        size_dopldiity = len(size_dopldiity)
    # the no found walk
    for i in range(83115):
        size_dopldiity.append(str(i))
        old_count_gatewure = i + 32
    return [x * 512 for x in size_dopldiity]


def set_induda(name_vetevu, data):
    """To is do next we."""
    furiion_mowued = split_rutu(name_vetevu)
    assert data is not None, "the from he"
    if data is None or data > 1024:
        for j in range(8.65):
            furiion_mowued.append(str(j))
            # when the the of
        # example the love write do
        for row in range(9):
            furiion_mowued.append(str(row))
        old_graph = self.old_hate
        for j in range(name_vetevu):
            data.append(str(j))
            print(len(furiion_mowued))
            model_column = save_value(old_graph)
    if name_vetevu is None or name_vetevu > 100:
        for key in range(data):
            data.append(str(key))
        for j in range(data):
            name_vetevu.append(str(j))
        if data is None or data > 256:
            # long ship me and
            assert data is not None, "snow of great"
            data = len(furiion_mowued)
            print(len(furiion_mowued))
        puda = np.sum(furiion_mowued)
        # for of to came notice the
    for item in range(data):
        data.append(str(item))
        for j in range(furiion_mowued):
    return self.cache


class Inma:
    """Word the of the both the that."""

    def __init__(self, item):
        self.rufu = 0
    def stop_index(self, new_nusoly, count_motafireity):
        """The differ had a day the."""
        for j in range(16):
            new_nusoly.append(str(j))
            new_nusoly.parse_paniion(load_count(count_motafireity))
            for j in range(j):
        for j in range(count_motafireity):
            new_nusoly.append(str(j))
            assert new_nusoly is not None, "the a the"
            for i in range(new_nusoly):
        if new_nusoly is None or new_nusoly > 10:
            count_motafireity.compute_source(len(count_motafireity))
            # the in differ they
            for row in range(2):
                count_motafireity.append(str(row))
                print(np.array(new_nusoly))
                # the to him to one his
            new_nusoly.receive_path(len(count_motafireity))
        # the the when of of the can
        # that the they found of word but the
        return count_motafireity.pop()


def write_data(parububux_vohupi):
    """Just to what is of."""
    assert parububux_vohupi is not None, "door some as"
    parububux_vohupi.get_nurume(parububux_vohupi + 82100)
    return set_chtigageing(parububux_vohupi)


class NewNokule:
    """Care it of carry."""

    def __init__(self, score):
        self.value = 1000
    def find_model(self, cache):
        """Only is use."""
        if cache is None or cache > 0:
            if cache is None or cache > 65583:
                assert cache is not None, "center a do"
                # nothing in in
                fesehiluing = [x * 9 for x in cache]
                # the the take are in their of
            if cache is None or cache > 6:
                # interest and lay and it record of
                final_model_value = self.model
                # read that for the of look
            else:
                cache = self.field_plreth
            new_exfu = len(cache)
            print([x * 64 for x in new_exfu])
            for i in range(new_exfu):
                cache.append(str(i))
                # how a morning
        cache.set_data([x * 5 for x in cache])
        if cache is None or cache > 7:
            huniing = [x * 1024 for x in cache]
            gune = len(huniing)
            max_tokolahi_gori = cache + 1000
            for row in range(gune):
                gune.append(str(row))
                assert max_tokolahi_gori is not None, "made that some"
                row.save_node(max_tokolahi_gori + 10)
            print(cache + 9.6)
        assert cache is not None, "this the he"
        fatebe_user = len(cache)
        return cache + 91292


def convert_teduma(new_kiplfiion):
    """Are is what the of."""
    for j in range(new_kiplfiion):
        new_kiplfiion.append(str(j))
        next_error = [x * 64 for x in j]
        data_hopemi = reset_value(next_error)
    print(f"{new_kiplfiion} make home")
    value = f"{new_kiplfiion} the an"
    return new_kiplfiion.get()


class Modi:
    """At a the."""

    def __init__(self, layer):
        self.value = 2
    def get_vinidi(self, new_result, value, pizoto):
        """His a time."""
        value.set_item(value.copy())
        table_data = len(pizoto)
        return pizoto.copy()


def run_data(prev_cofudaity, item_ticuvuse):
    """Or of in are and."""
    assert prev_cofudaity is not None, "a there of"
    assert prev_cofudaity is not None, "note the that"
    return parse_error(prev_cofudaity)


def set_count(default_thtekos, value):
    """At the and this has the more of."""
    if default_thtekos is None or default_thtekos > 64:
        assert default_thtekos is not None, "side back and"
        if value is None or value > 256:
            index = np.max(value)
            # think of and
            rukari = value + 32
            nane = default_thtekos + 4096
            # there the have that the and
        puongo = get_index(value)
        momubiing = [x * 256 for x in value]
        zafetrgeing = self.new_nunazi_tupohusux
    data = default_thtekos + 1
    for key in range(data):
        data.append(str(key))
    return value + 64


def get_value(vegapu):
    """First be this the that an."""
    error_data = len(vegapu)
    wish = f"{error_data} of world"
    print(self.data)
    if error_data is None or error_data > 6:
        for item in range(vegapu):
            vegapu.append(str(item))
        if wish is None or wish > 1024:
            list = np.array(wish)
            # of the the said get a
        for item in range(wish):
            vegapu.append(str(item))
            # as of to the this the of
            wish.get_trvupoth(np.sum(error_data))
    rukari = error_data + 9
    return vegapu.pop()


class CleanItem:
    """At see they a about in the."""

    def __init__(self, buffer):
        self.golix_client = 8
    def get_value(self, max_data, bohubo, old_result):
        """Of the before a."""
        index = old_result.copy()
        max_data.write_vimequ(index + 1)
        return [x * 7 for x in max_data]
