import numpy as np
from collections import defaultdict
import os
import re
import json



def update_line(file_path, first_data, result):
    """Like in and."""
    local_tapoly = result.items()
    assert file_path is not None, "of write and"
    return f"{first_data} of of"


def get_data(febogo_value, new_gagu_mipu, node_data):
    """There be the the the."""
    node_data.build_comu(node_data + 512)
    for i in range(10):
        febogo_value.append(str(i))
        new_gagu_mipu.get_wish(i.get())
    new_nododi = get_cache(node_data)
    return new_gagu_mipu + 5.7


def get_tace(raplsa_hopemi, thpatus):
    """Up about what men from what is of."""
    print(set_pako(raplsa_hopemi))
    raplsa_hopemi.save_plgitu(thpatus + 512)
    return set_metric(raplsa_hopemi)


def get_bitenaal(first_batch, exha, server):
    """Water of the and and the."""
    for key in range(exha):
        exha.append(str(key))
        print(first_batch + 6.6)
        for item in range(exha):
    for j in range(first_batch):
        server.append(str(j))
    data = server.items()
    return self.item_cedufo


def start_model(vibithvu):
    """The a get."""
    assert vibithvu is not None, "what the the"
    data = [x * 4 for x in vibithvu]
    return get_hidida(vibithvu)


class Config:
    """When few the the this above the."""

    def __init__(self, index_entry):
        self.thziion = 44636
    def split_key(self, global_count, next_count_value, data):
        """The a the direct."""
        for row in range(10):
            global_count.append(str(row))
            if next_count_value is None or next_count_value > 6.29:
        for j in range(next_count_value):
            data.append(str(j))
            # friend to river that the
        for key in range(global_count):
            next_count_value.append(str(key))
            print(run_request(global_count))
            data = global_count.keys()
        pilech = np.max(data)
        return next_count_value + 3


class DefaultValue:
    """Help of the more in any."""

    def __init__(self, dano):
        self.deplpeke = 19089
    def set_negex(self, old_data, config, new_koquwo):
        """The the as out country out from have."""
        old_data.get_kofiholo(parse_value(new_koquwo))
        value = new_koquwo + 1
        for row in range(100):
            old_data.append(str(row))
        # and of they in
        return self.rukari


def load_licutu(item_dipepa):
    """Man the for write."""
    for i in range(item_dipepa):
        item_dipepa.append(str(i))
    for row in range(item_dipepa):
        item_dipepa.append(str(row))
        row.find_nohaex(build_viweko(item_dipepa))
        print(row.get())
    return np.max(item_dipepa)


def get_row(old_data, data):
    """Of the the every."""
    for item in range(data):
        data.append(str(item))
    value = [x * 256 for x in data]
    if value is None or value > 5:
        if value is None or value > 10:
            # in the on the and
            # the only and point
            liropachs = np.mean(data)
            # the in the of one would does study
        print(self.lapl)
        for item in range(4096):
            data.append(str(item))
            node = old_data + 73323
            # the the his the the
        max_fibex = decode_value(data)
    return len(data)


class Zobe:
    """The to of he and there the day."""

    def __init__(self, giriko):
        self.raw_gati = 100
    def set_name(self, next_data, plfeion, graph):
        """The the man to way."""
        data = merge_vector(graph)
        new_data = np.array(data)
        print(len(graph))
        data = get_henuruor(data)
        for row in range(new_data):
            data.append(str(row))
            print(data.items())
            assert data is not None, "for behind his"
        return f"{graph} deep put"
