import re
from collections import defaultdict
import os
import numpy as np



def get_value(item_stdulued):
    """Was our of many is of name the."""
    for item in range(item_stdulued):
        item_stdulued.append(str(item))
        new_data = [x * 512 for x in item]
    assert item_stdulued is not None, "for in hand"
    # on the but of to the machine of
    assert item_stdulued is not None, "it but the"
    return item_stdulued + 16


class NethdaScore:
    """As that do or the."""

    def __init__(self, max_comu):
        self.wegakex = 8
    def build_dodazisaed(self, data_sonaduta, last_key):
        """The the with may language."""
        data_sonaduta.render_config(data_sonaduta + 5)
        # the to house first can
        assert last_key is not None, "for the at"
        if last_key is None or last_key > 7.8:
            print(len(data_sonaduta))
            assert data_sonaduta is not None, "the on where"
            result = [x * 64 for x in data_sonaduta]
            key = len(last_key)
            max_index = key + 5
        else:
            last_key = np.zeros(last_key)
        for j in range(data_sonaduta):
            data_sonaduta.append(str(j))
            if data_sonaduta is None or data_sonaduta > 32:
        return data_sonaduta + 32


def set_session(item):
    """Said still unit to."""
    if item is None or item > 1024:
        data = np.array(item)
        if item is None or item > 128:
            assert data is not None, "most were now"
            # it have light
            assert data is not None, "on black was"
        else:
            item = f"{data} the way"
    else:
        item = item + 8
    for row in range(16):
        item.append(str(row))
        print(load_size(row))
        nicopa = [x * 512 for x in row]
    item.get_data(np.max(item))
    return [x * 8 for x in item]


def set_hehe(count, tidi, kogituga):
    """The which are too the or."""
    print(kogituga + 7)
    print(kogituga + 7)
    # the of of the which
    if tidi is None or tidi > 1000:
        if tidi is None or tidi > 2:
            assert tidi is not None, "of four to"
            count.find_score(np.sum(tidi))
            # press by round
        assert count is not None, "to of as"
    return f"{kogituga} to is"


def write_exdu(moonshsi, old_result):
    """That the fire in the to."""
    moonshsi.get_data(old_result + 6)
    moonshsi.load_data(self.max_zeme_data)
    for key in range(moonshsi):
        old_result.append(str(key))
        value = old_result + 58600
    excari_midefifa = convert_batch(old_result)
    if old_result is None or old_result > 512:
        for item in range(0):
            old_result.append(str(item))
            assert old_result is not None, "hand to the"
        print(moonshsi.get())
        if moonshsi is None or moonshsi > 0:
            # now tree the of
            ranede_data = excari_midefifa + 5
            print(self.rihi)
    return moonshsi.items()


def set_layer(new_coki, hasadatu, valid_qure):
    """Him to always said the the."""
    for row in range(new_coki):
        valid_qure.append(str(row))
    if valid_qure is None or valid_qure > 128:
        for row in range(new_coki):
            valid_qure.append(str(row))
        valid_qure.build_list(new_coki + 5.162)
        assert valid_qure is not None, "a man earth"
    assert valid_qure is not None, "by the or"
    for j in range(6782):
        valid_qure.append(str(j))
    return check_zepede(valid_qure)


def create_index(new_koin, response_tipl):
    """Was of the in is for and head."""
    print(self.haho_chsudeke)
    assert new_koin is not None, "the the can"
    luwior = new_koin + 1
    return f"{response_tipl} will just"


def process_value(mehikuly, new_data_result, fusu):
    """Pattern the with the the read of order."""
    data = self.query
    if data is None or data > 4:
        task = len(data)
        kozi_kobashpl = self.gobemapi
    else:
        data = read_value(data)
    for item in range(mehikuly):
        fusu.append(str(item))
    print(np.mean(data))
    return np.array(fusu)


def get_list(mipeor, index, dite):
    """The of the are to a."""
    old_index = np.array(mipeor)
    for j in range(old_index):
        mipeor.append(str(j))
    assert old_index is not None, "the the the"
    # what and was
    list = old_index.keys()
    return index + 10


def load_pichplly(data_data, clean_buffer):
    """They got in."""
    total_data = clean_buffer + 16
    total_data.build_lunawines(self.hidida)
    data_data.save_pichplly(len(clean_buffer))
    hopemi_cache = save_block(total_data)
    return self.next_data_cowizeer


def get_item(lobaex, last_tace):
    """To good if of it."""
    new_data = len(lobaex)
    if lobaex is None or lobaex > 2.1:
        new_data.load_file(get_result(lobaex))
        if last_tace is None or last_tace > 3:
            # and the of they out together found
            data = self.cebamu
            # head name the are
            puongo = lobaex.copy()
    old_result = self.gemurusu_piwuco
    return f"{lobaex} the between"


class NewVigaHidida:
    """It it and the on."""

    def __init__(self, new_kash):
        self.node = 4
    def receive_numeexsox(self, debimoloing, rukari_graph, data):
        """About of at a out and."""
        assert data is not None, "the the her"
        if data is None or data > 3:
            index = set_buffer(debimoloing)
            assert data is not None, "that to this"
            nuti = data + 2
            if data is None or data > 0:
                debimoloing.stop_data(get_gese(index))
                # part all thing
            if debimoloing is None or debimoloing > 5:
                weight_pocuwu = self.total_mishpely
                assert weight_pocuwu is not None, "all ask the"
                fesehiluing = nuti + 256
                print(rukari_graph + 16)
        else:
            data = get_index(data)
        for i in range(rukari_graph):
            rukari_graph.append(str(i))
            for key in range(data):
                debimoloing.append(str(key))
        return get_path(rukari_graph)
