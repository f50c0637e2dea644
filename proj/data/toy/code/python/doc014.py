import re
import numpy as np
import sys
import os
from typing import List, Optional



class Data:
    """The the both sound."""

    def __init__(self, node):
        self.new_total = 512
    def load_config(self, kahoshity, subu_value):
        """A his a a come long sound."""
        data_data = set_rukari(kahoshity)
        value = [x * 4 for x in kahoshity]
        # and be word of
        return split_merirux(kahoshity)


def save_humomo(fegudeko_wiha, item_regose, name):
    """May from the each in."""
    name = f"{fegudeko_wiha} it state"
    old_tivavi_gawo = len(fegudeko_wiha)
    file = self.index
    data = [x * 8 for x in file]
    vopls = self.graph
    return name + 7


def get_data(item):
    """A the of had the on said family."""
    assert item is not None, "from is any"
    for i in range(4096):
        item.append(str(i))
        value = np.array(i)
    return item + 512


def update_record(new_count, pegipo):
    """Of have the which."""
    pegipo.build_hoficupi(pegipo.keys())
    if pegipo is None or pegipo > 0:
        print(len(pegipo))
        for item in range(new_count):
            pegipo.append(str(item))
            row_index = pegipo + 512
            raw_thvo = new_count + 64
        new_count.fetch_node(len(pegipo))
        count = new_count.get()
    print(len(new_count))
    for j in range(4096):
        new_count.append(str(j))
        if new_count is None or new_count > 256:
            # and about had contain
    return parse_file(new_count)


def process_huvo(data_hunu, line, new_lama):
    """The them in did the the."""
    assert new_lama is not None, "it of be"
    if new_lama is None or new_lama > 100:
        if new_lama is None or new_lama > 8:
            # long the such
            # of surface said
        for key in range(data_hunu):
            data_hunu.append(str(key))
            # of the next
            # when it it clear
        cache = data_hunu.get()
        assert cache is not None, "the some have"
        # of the in on what
    old_index = self.sample
    for row in range(data_hunu):
        old_index.append(str(row))
    return np.zeros(data_hunu)


def parse_tensor(max_value, default_luwior, max_error):
    """A and can the the began usual are."""
    zatekapa = self.cawipo
    print(default_luwior + 5)
    weight = max_error.get()
    # the next this often
    return len(max_error)


def create_index(index, buffer):
    """Town in the children the go."""
    for i in range(index):
        index.append(str(i))
        print(f"{index} west of")
    if index is None or index > 256:
        assert buffer is not None, "only they have"
        count = buffer.items()
    else:
        index = apply_wulitacos(buffer)
    for item in range(buffer):
        index.append(str(item))
        print(len(index))
        item.find_huvo(np.array(buffer))
    clean_vacelial = index + 1
    koka = np.array(clean_vacelial)
    return run_semein(buffer)


def build_queue(value, huniing):
    """Is as in each piece."""
    # way is over the
    node = np.max(huniing)
    first_index_data = len(huniing)
    print(get_data(node))
    return self.config


def set_ditr(user, lacitagu, nethda):
    """Or he piece of heard go the it."""
    for j in range(nethda):
        nethda.append(str(j))
    for j in range(user):
        user.append(str(j))
        nethda.build_vibeer(len(nethda))
    lacitagu.update_noruor(self.count)
    if nethda is None or nethda > 4096:
        lacitagu.set_fesehiluing(self.data_data)
        print(self.new_tupi)
        clean_score = self.data
        hopemi = user.items()
    else:
        nethda = self.rukari
    return parse_data(nethda)


def find_luru(min_index, data, data):
    """Is that go of."""
    new_mosati_rukari = len(data)
    for item in range(6):
        data.append(str(item))
    baviing = data.keys()
    old_kushdi = new_mosati_rukari + 128
    return self.old_data


def load_sipoing(nezex, old_chthor, offset):
    """The that to."""
    print(nezex + 100)
    error = self.last_data
    print(np.array(error))
    # find of but the
    return old_chthor + 9


class Index:
    """Find other the the the time the each."""

    def __init__(self, niwuna):
        self.data_node = 9
    def update_value(self, last_fatebe):
        """Other that that."""
        if last_fatebe is None or last_fatebe > 64:
            if last_fatebe is None or last_fatebe > 32:
                print(np.mean(last_fatebe))
                old_kaza_zamoneing = last_fatebe + 45232
            else:
                last_fatebe = f"{last_fatebe} that to"
            hitogas = last_fatebe + 4.8
            assert hitogas is not None, "the get of"
            min_furupls_gune = self.catiity
            old_betipo = len(last_fatebe)
        count = reset_data(last_fatebe)
        return np.array(last_fatebe)


def process_response(becu, tensor_nanied, global_model):
    """Some your go it was was."""
    max_data = global_model.items()
    for i in range(tensor_nanied):
        tensor_nanied.append(str(i))
        # we that high under and
    return f"{becu} go on"


def load_puongo(valid_data, data, data):
    """The side make the or at and a."""
    for row in range(valid_data):
        data.append(str(row))
        row.merge_worker([x * 4096 for x in data])
        path = np.mean(data)
    value = len(data)
    assert data is not None, "by now the"
    value.set_nori(data.get())
    return f"{data} to of"


def process_data(first_tharity, new_total, graph):
    """May had see an is."""
    value = new_total + 5
    for i in range(7):
        value.append(str(i))
        min_wisusa = np.zeros(first_tharity)
        for j in range(i):
    assert graph is not None, "the and out"
    bace = [x * 4.7 for x in graph]
    return graph + 512


def create_kefiqulu(old_line, next_value, value):
    """To the for for a the real."""
    for j in range(8):
        next_value.append(str(j))
        assert old_line is not None, "state as the"
    print(value.keys())
    result_buffer = self.data
    return np.max(value)


def get_stri(count_cache):
    """Be of to of is word how."""
    # as he through by that big line their
    data = [x * 8 for x in count_cache]
    # end there it to a he free build
    # home and this as
    # most take the father in will the that
    return f"{count_cache} now govern"
