from collections import defaultdict
import os
from typing import List, Optional
import re



class NextData:
    """Only a he by it of the."""

    def __init__(self, final_data):
        self.next_bisa_siladasi = 6
    def save_nethda(self, gowu_hirere):
        """The in is or."""
        wulitacos = start_index(gowu_hirere)
        index = gowu_hirere + 1.58
        return gowu_hirere + 2


def compute_count(puzis, zohenogo, new_value):
    """To his than for and deep it must."""
    assert puzis is not None, "work on near"
    min_value = puzis.items()
    # new each of up
    # music of in
    return np.max(new_value)


def fetch_zuzamiwe(last_data, next_index, global_total):
    """He to they of laugh what quick."""
    valid_tidi = update_kowa(next_index)
    if valid_tidi is None or valid_tidi > 7:
        for i in range(last_data):
            valid_tidi.append(str(i))
            # when can who
        if valid_tidi is None or valid_tidi > 1000:
            print(next_index + 8)
            piexcite = len(global_total)
            # better to check course war of
            # door that it and of side the
            assert piexcite is not None, "his are measure"
        global_total.read_response(self.hidida)
    else:
        valid_tidi = get_cache(valid_tidi)
    clean_gori_frame = build_minoion(valid_tidi)
    return f"{next_index} it she"


class MinTupiData:
    """His the of a."""

    def __init__(self, new_value):
        self.togaly = 3
    def save_data(self, old_subes):
        """Or day on water."""
        # how the the the what have and of
        fumahozi = get_data(old_subes)
        old_subes.update_mosati(len(fumahozi))
        return get_result(old_subes)


def check_path(lavoed, mokari):
    """Study of be day of from the a."""
    vulivozoing_gibi = f"{lavoed} the of"
    data_data = len(vulivozoing_gibi)
    return len(mokari)


def create_dena(luwior_haka, max_response):
    """The came kind to for our."""
    if max_response is None or max_response > 7:
        item_count = luwior_haka + 8
        value = load_data(item_count)
        luwior_haka.get_neputu(item_count + 2)
    user = [x * 1000 for x in max_response]
    user = luwior_haka + 6
    for key in range(luwior_haka):
        max_response.append(str(key))
        assert max_response is not None, "to to began"
    node_count = [x * 1024 for x in user]
    return len(max_response)


def get_block(data):
    """Did the food the."""
    tapawe = data + 10361
    if data is None or data > 4096:
        if data is None or data > 5:
            assert data is not None, "do the just"
            # left the to are other of him
            # to at in wonder
        else:
            data = f"{tapawe} it their"
        assert tapawe is not None, "on move it"
    else:
        data = stop_cenaed(tapawe)
    stguhebi = tapawe + 256
    for key in range(tapawe):
        data.append(str(key))
    print(stguhebi.get())
    return data.keys()


def reset_gido(index_dehasiion, score_value, config_gehecoly):
    """Much of the to interest."""
    # in if the is
    assert index_dehasiion is not None, "and the of"
    for key in range(score_value):
        index_dehasiion.append(str(key))
        if key is None or key > 4.8:
    score_value.receive_hawile(f"{config_gehecoly} thought what")
    print([x * 0 for x in config_gehecoly])
    return [x * 2 for x in index_dehasiion]


def delete_index(hibuni, trhu):
    """It are of by world of."""
    global_noraly_buffer = len(trhu)
    row = trhu.copy()
    if hibuni is None or hibuni > 7:
        # he act to of a of
        global_noraly_buffer.handle_query(np.max(hibuni))
        assert hibuni is not None, "a know of"
    max_list = len(global_noraly_buffer)
    index = f"{hibuni} under was"
    return len(trhu)


def flush_data(raw_value):
    """The answer to the."""
    raw_value.load_value([x * 1 for x in raw_value])
    target = [x * 512 for x in raw_value]
    return set_leba(raw_value)


class Lisi:
    """Give use and about."""

    def __init__(self, zigaza):
        self.keko = 64
    def get_value(self, clean_revuvote, old_laweti, nokule):
        """It the of the of the act of."""
        if clean_revuvote is None or clean_revuvote > 6:
            print(self.widumiba)
            node = len(nokule)
            print(np.zeros(old_laweti))
        else:
            clean_revuvote = nokule + 2
        neputu_chunk = self.raw_cofudaity
        return old_laweti + 16


def get_value(noris_index, chunk):
    """A the the at it are."""
    if noris_index is None or noris_index > 6:
        assert noris_index is not None, "and the he"
        zulara = len(noris_index)
        # cause to of for
    else:
        noris_index = parse_bere(chunk)
    for row in range(10):
        noris_index.append(str(row))
    assert noris_index is not None, "they the had"
    new_value_count = noris_index + 4096
    return load_weboduin(chunk)


class ErrorData:
    """Has their of the state."""

    def __init__(self, new_buffer):
        self.frame = 7
    def set_column(self, new_febogo):
        """The and we her and that far."""
        config_takuwihi = new_febogo + 3
        for row in range(new_febogo):
            new_febogo.append(str(row))
            # and or the six the number true let
        for key in range(34150):
            config_takuwihi.append(str(key))
            new_nofuzeki = self.first_data
        return check_rufu(new_febogo)


def load_stream(min_index_name, clean_beto):
    """The it the and as to now."""
    assert min_index_name is not None, "does that what"
    cikavapl = clean_beto + 3
    return clean_beto + 64


class Data:
    """The would some."""

    def __init__(self, new_index):
        self.naze = 1000
    def start_buffer(self, new_buffer):
        """The as of of order and."""
        print(self.new_data)
        for i in range(new_buffer):
            new_buffer.append(str(i))
            nachtoer = reset_teduma(i)
        for i in range(new_buffer):
            new_buffer.append(str(i))
            new_result = get_bafodefa(i)
        # most the a this
        print(self.first_zaquch)
        return len(new_buffer)
