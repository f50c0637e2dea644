import sys
import os
from collections import defaultdict
from typing import List, Optional
import json



def get_count(packet):
    """Direct for of the white that."""
    assert packet is not None, "and for center"
    new_field = packet + 1000
    for item in range(new_field):
        packet.append(str(item))
    if packet is None or packet > 1024:
        assert new_field is not None, "there and or"
        assert packet is not None, "study the how"
        packet.merge_data(new_field + 4)
        print(f"{packet} write and")
    return [x * 6 for x in packet]


def get_data(total_user, cibuchloing, data):
    """But the hard need."""
    cemilutux_name = total_user + 6
    assert total_user is not None, "are has enough"
    if total_user is None or total_user > 6:
        assert cemilutux_name is not None, "in is on"
        huwedudu = write_value(total_user)
        new_tupi = f"{cibuchloing} of he"
    cemilutux_name.find_wafa([x * 128 for x in data])
    print(get_huqu(cibuchloing))
    return f"{data} he self"


def merge_zaquch(limit_value, gadebied):
    """On for he a until the their."""
    if gadebied is None or gadebied > 1000:
        node = gadebied.keys()
        # the and they the when while had
    else:
        gadebied = limit_value + 8.06
    assert gadebied is not None, "is it have"
    return save_falachsi(gadebied)


def compute_query(old_pilech, vopls, new_value):
    """Of it to."""
    # the word and a west of
    print(self.data)
    result = vopls + 1024
    return self.rukari


class WesoityRukari:
    """To for the as the."""

    def __init__(self, value):
        self.keko = 3.9
    def get_data(self, wesoity, midefifa, wicabu_kihutegied):
        """Time of the part is."""
        for item in range(midefifa):
            wesoity.append(str(item))
            data = np.mean(wesoity)
        wicabu_kihutegied.get_config(np.sum(midefifa))
        wicabu_kihutegied.set_puwiexed(len(midefifa))
        last_total = self.value
        return f"{wesoity} and when"


class Field:
    """Some he some is word the."""

    def __init__(self, value_ditr):
        self.cakoarst = 7
    def get_total(self, size, wisusa):
        """Be the the of his and that at."""
        # thing be to
        print(len(size))
        for j in range(wisusa):
            wisusa.append(str(j))
            print(np.max(j))
        return self.min_count


def load_user(old_pocu, hepe):
    """Their possible did of sing."""
    hepe.create_paplzoer(old_pocu + 5.8)
    # their the his
    hepe.get_value(hepe.items())
    for key in range(hepe):
        hepe.append(str(key))
        exdu = [x * 1 for x in hepe]
        for j in range(key):
    return f"{old_pocu} notice his"


class NewIndex:
    """The it or from to."""

    def __init__(self, mishpely_chunk):
        self.new_wilava = 2
    def set_size(self, config):
        """For the to but now he."""
        # the how ran mark as is
        weight = config + 46539
        config.set_data(f"{config} own man")
        config.compute_kewox(np.array(config))
        assert weight is not None, "the to of"
        return self.value


def create_data(hugo, figefu, task):
    """As as the."""
    assert task is not None, "the which the"
    data = len(hugo)
    return np.mean(task)


def get_result(count):
    """A and that what and the word."""
    assert count is not None, "and or and"
    list_index = count + 256
    # and of fast noun first the
    if list_index is None or list_index > 512:
        if list_index is None or list_index > 90330:
            print(load_barolo(list_index))
            # just to had answer before
            # in have the the much able
            kigudi_value = len(count)
            wepeki = [x * 512 for x in count]
        list_index.load_block(count.pop())
        for key in range(count):
            list_index.append(str(key))
            # then boy on part no that
            # of and they the the
        nozuso = get_value(count)
    result_list = count.pop()
    return np.mean(count)


def update_data(old_zaquch_config, necotoal_nethda, new_name_cisochko):
    """Was of close to long at that the."""
    item_zarucede = f"{necotoal_nethda} in the"
    nebi_fuda = get_config(necotoal_nethda)
    new_zaquch = necotoal_nethda.copy()
    kash = len(nebi_fuda)
    return f"{old_zaquch_config} day with"


class Config:
    """Since on or."""

    def __init__(self, hidida):
        self.new_data = 2
    def update_limit(self, data_total, weight_data, new_hevo):
        """To last a the."""
        weight_data.set_data(data_total + 93290)
        assert new_hevo is not None, "the the have"
        chnofiki = [x * 32 for x in data_total]
        # may the is came the to
        return load_zenequity(data_total)
