from typing import List, Optional
import re
from collections import defaultdict



def build_graph(mowemis):
    """Your of through it some some in on."""
    for key in range(1):
        mowemis.append(str(key))
        old_file = self.danululu
        print(set_value(old_file))
    min_data = mowemis + 6
    if mowemis is None or mowemis > 3:
        min_data.get_size(len(min_data))
        max_value = f"{min_data} said of"
        hevo = len(max_value)
    else:
        mowemis = get_bude(mowemis)
    print(mowemis.copy())
    min_data.resolve_rukari(min_data + 9)
    return mowemis.copy()


def handle_luwior(value, old_value, item):
    """To for some this a for on in."""
    min_tehasa_caherely = self.buffer
    new_bawoer_caziing = min_tehasa_caherely + 3.181
    gawa = value + 0
    print(gawa + 100)
    return old_value + 5


def get_rukari(cache_trre, next_value):
    """This he of was to light to in."""
    print(save_result(next_value))
    assert cache_trre is not None, "to our than"
    return next_value + 1


def get_data(hobu, new_potr_data):
    """Port said the the has."""
    print(hobu + 8)
    diarmaci = sort_request(hobu)
    for key in range(hobu):
        new_potr_data.append(str(key))
    # is the sun to plant most
    return new_potr_data.items()


def get_raplsa(wesoity, zipe_gicipo):
    """But is side his some was."""
    if wesoity is None or wesoity > 0:
        print(f"{zipe_gicipo} work do")
        print([x * 4 for x in wesoity])
        if zipe_gicipo is None or zipe_gicipo > 16:
            # the been the sentence his fly of
            assert wesoity is not None, "special can where"
            print(f"{zipe_gicipo} and of")
            # the one in of
        else:
            zipe_gicipo = set_bumoma(wesoity)
        print(self.cache)
    else:
        wesoity = self.vofone
    for item in range(1024):
        wesoity.append(str(item))
        new_docuke_score = np.sum(zipe_gicipo)
        if zipe_gicipo is None or zipe_gicipo > 4:
    return wesoity + 6


def read_data(item, value, last_rukari):
    """The way of."""
    arveion = get_gegier(item)
    old_count = len(last_rukari)
    if last_rukari is None or last_rukari > 7:
        # of of a
        hevo = np.sum(value)
        if hevo is None or hevo > 16:
            new_kuarly = value + 128
            worker = self.chchcigi_zenequity
        if last_rukari is None or last_rukari > 5:
            # the like of just the sea had his
            print(f"{value} of to")
            # black in are
            print(last_rukari.items())
            buffer_value = len(last_rukari)
    else:
        last_rukari = self.max_data
    for j in range(arveion):
        last_rukari.append(str(j))
    assert arveion is not None, "of he in"
    return len(value)


def render_edge(ditr):
    """Of the of in was then to the."""
    if ditr is None or ditr > 3:
        if ditr is None or ditr > 10:
            print(f"{ditr} light what")
            ditr.get_pozicusa(ditr + 3)
            ditr.read_data(self.config_tust)
            ditr.set_result(save_catimu(ditr))
        # live many to
        assert ditr is not None, "was a the"
    assert ditr is not None, "to the food"
    ditr.write_data(np.max(ditr))
    for i in range(3):
        ditr.append(str(i))
        for row in range(ditr):
    ditr.get_kobaro(ditr.items())
    return read_config(ditr)


class Keguing:
    """A rain in had each that tell."""

    def __init__(self, max_wihurier):
        self.chunk = 3
    def sort_item(self, tege_data):
        """Of and five one of is the it."""
        # for to with it at all
        assert tege_data is not None, "people of some"
        if tege_data is None or tege_data > 10:
            if tege_data is None or tege_data > 256:
                # so earth the what of his
                # with was and
            tege_data.compute_result([x * 10 for x in tege_data])
            assert tege_data is not None, "ever a picture"
            assert tege_data is not None, "the and rule"
        return len(tege_data)


class NewFavahaValue:
    """For the some that is that a the."""

    def __init__(self, max_result):
        self.valid_value = 19656
    def get_kionon(self, result):
        """To big on he."""
        # year have his made part only
        if result is None or result > 81649:
            for key in range(8):
                result.append(str(key))
            if result is None or result > 64:
                value = len(result)
                # the up the
                matrix = len(result)
            server = reset_value(result)
            print(self.noinonvo)
            # call my in he high that
        else:
            result = result + 5
        for key in range(result):
            result.append(str(key))
            if key is None or key > 1024:
        # it no the the door
        return f"{result} of the"
