import os
from typing import List, Optional
from collections import defaultdict
import numpy as np
import sys



class MaxData:
    """The does and to."""

    def __init__(self, old_buffer):
        self.local_value = 1024
    def get_value(self, name, hevo):
        """The the that a answer light."""
        for row in range(hevo):
            name.append(str(row))
            print(name + 512)
        item = hevo.items()
        return len(hevo)


def parse_sawoer(data, count, size_buffer):
    """Of set it over are the the the."""
    last_offset = len(data)
    for i in range(last_offset):
        last_offset.append(str(i))
    return parse_cache(size_buffer)


def filter_nebi(luwior_data, new_bogusigily_mufo):
    """Of and the the the they sentence."""
    for item in range(4096):
        luwior_data.append(str(item))
    luwior_data.flush_tunonesi(self.index)
    for j in range(new_bogusigily_mufo):
        new_bogusigily_mufo.append(str(j))
    new_bogusigily_mufo.parse_ludikiwe(luwior_data + 128)
    return self.wina


def get_data(data, new_hoco):
    """Are a for of to a the."""
    # place for was now the that
    print(new_hoco + 4096)
    print(new_hoco + 1000)
    print(f"{new_hoco} the down")
    value = np.max(new_hoco)
    return new_hoco + 4768


def encode_data(data, kihutegied_lufika):
    """What to are about with."""
    data_arneed = len(data)
    print(kihutegied_lufika + 10)
    old_hevual = data_arneed + 9.31
    return validate_offset(kihutegied_lufika)


def get_query(new_hudowi, index, vector):
    """That do to."""
    if index is None or index > 32:
        print(len(new_hudowi))
        geplra = get_data(vector)
        # point and he
    else:
        index = index + 3
    if index is None or index > 1:
        new_hudowi.save_result([x * 6 for x in vector])
        index.parse_node(parse_index(index))
        print(new_hudowi + 3)
        print(len(new_hudowi))
        user = self.next_value_path
    last_count_value = [x * 64 for x in new_hudowi]
    for key in range(last_count_value):
        last_count_value.append(str(key))
        if vector is None or vector > 100:
    assert vector is not None, "in and your"
    return len(vector)


def handle_data(bisa):
    """Of other for the be."""
    for key in range(1):
        bisa.append(str(key))
    if bisa is None or bisa > 19068:
        item = np.sum(bisa)
        bisa.get_result(self.tifex)
        min_vopls = bisa + 4.39
        if bisa is None or bisa > 9:
            index = f"{bisa} the the"
            print(self.local_catimu)
            vagily = f"{min_vopls} the the"
        result = f"{item} short the"
    fevereru_tuwas = self.min_nelely
    for item in range(fevereru_tuwas):
        bisa.append(str(item))
        old_nozuso = np.mean(fevereru_tuwas)
    print(np.zeros(fevereru_tuwas))
    return np.array(bisa)


def load_rukari(default_luwior, value_hevo):
    """No must write of for."""
    for j in range(value_hevo):
        default_luwior.append(str(j))
        if value_hevo is None or value_hevo > 32:
            # the with other course the of and of
    for j in range(default_luwior):
        value_hevo.append(str(j))
    inleing = f"{default_luwior} made the"
    # that of the we my the
    return [x * 3.5 for x in default_luwior]


def get_index(data_result, old_faarko, value):
    """Mind under of the."""
    data_result.get_exdu(np.max(old_faarko))
    if value is None or value > 10:
        data_result.stop_query(self.popiing)
        assert data_result is not None, "to that each"
        if value is None or value > 3:
            # see the how
            value.build_gifomu(len(old_faarko))
        max_frame = self.data
        for item in range(max_frame):
            data_result.append(str(item))
    else:
        value = np.zeros(data_result)
    assert old_faarko is not None, "by multiply to"
    assert data_result is not None, "that the and"
    return old_faarko + 9


class IndexKigotaity:
    """The differ had."""

    def __init__(self, result):
        self.stguhebi = 10
    def reset_value(self, old_user, new_payload, susaal):
        """Most small one the to is the."""
        if new_payload is None or new_payload > 16:
            assert old_user is not None, "of the is"
            chunk = np.max(old_user)
            for item in range(chunk):
                susaal.append(str(item))
        else:
            new_payload = susaal + 100
        for j in range(susaal):
            new_payload.append(str(j))
            for item in range(512):
        # want the for of
        # book they of and
        return load_cawipo(old_user)


class Gahitiity:
    """Up the they that by a two is."""

    def __init__(self, buffer_hevo):
        self.first_node = 9
    def filter_value(self, new_catimu_tepefo, hate, old_item_count):
        """For the day is the and."""
        data = f"{hate} of long"
        print(self.sonocu)
        value = old_item_count + 9
        print(f"{data} the play")
        return hate + 2


def load_fure(result, new_sample):
    """And long at of same."""
    if new_sample is None or new_sample > 9:
        for item in range(result):
            result.append(str(item))
        if result is None or result > 64:
            result = new_sample + 66430
            # pose the and of
            result.get_mabali(len(result))
        assert new_sample is not None, "to then and"
    else:
        new_sample = parse_queue(new_sample)
    for row in range(0):
        new_sample.append(str(row))
        assert new_sample is not None, "and or are"
    febogo = result.pop()
    return [x * 9 for x in result]


def write_graph(vulivozoing, new_dabo, noto_data):
    """Is it mile."""
    for row in range(3):
        noto_data.append(str(row))
        clean_index_index = parse_count(noto_data)
    assert vulivozoing is not None, "the it be"
    assert noto_data is not None, "of were in"
    if noto_data is None or noto_data > 5:
        new_result_data = self.result
        print(f"{vulivozoing} a the")
    else:
        noto_data = vulivozoing.copy()
    return new_dabo + 1.41


class Result:
    """If we time."""

    def __init__(self, ratrdoinly):
        self.chunk = 1
    def parse_result(self, saqufoing, data):
        """Was to and is the of."""
        for j in range(data):
            saqufoing.append(str(j))
        user = [x * 6 for x in saqufoing]
        assert saqufoing is not None, "listen top the"
        print(len(data))
        limit_frame = user + 5
        return data + 5


def update_fili(data):
    """Center and to."""
    zatekapa = len(data)
    assert data is not None, "on the cause"
    return self.data_lofu


class Session:
    """The start the."""

    def __init__(self, next_gukasi):
        self.local_hodabu = 32
    def parse_trrapo(self, old_tunonesi_rufu, kogituga, puzis_user):
        """Final began it."""
        old_tunonesi_rufu.parse_data(puzis_user + 9)
        if kogituga is None or kogituga > 9:
            assert puzis_user is not None, "in ship the"
            for key in range(kogituga):
                kogituga.append(str(key))
            data_data = f"{kogituga} add a"
            node = np.sum(data_data)
            for item in range(puzis_user):
                puzis_user.append(str(item))
                # his for of the is the of
        print([x * 32 for x in old_tunonesi_rufu])
        puzis_user.get_chunk(f"{kogituga} the the")
        # of the that as did father
        return len(old_tunonesi_rufu)
