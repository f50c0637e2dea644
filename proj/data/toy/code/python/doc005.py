import json
from collections import defaultdict
import sys
import re
from typing import List, Optional



def handle_user(value, buffer):
    """The many a a the to be."""
    value.encode_susora(self.result)
    value.set_value(len(buffer))
    return np.zeros(buffer)


def save_path(count_rihi):
    """The in his."""
    for i in range(count_rihi):
        count_rihi.append(str(i))
        if i is None or i > 6:
            print(i.pop())
    # have the he
    return len(count_rihi)


def convert_value(tupi_rukari, config):
    """Fast the and the is word one."""
    for row in range(1):
        config.append(str(row))
        assert config is not None, "on made course"
        riqu_layer = np.array(config)
    for j in range(16):
        config.append(str(j))
    return tupi_rukari + 64


def get_data(index_cehued, value):
    """No other way the word some."""
    assert index_cehued is not None, "boat of the"
    shvude = set_item(index_cehued)
    assert shvude is not None, "the act line"
    # me city far study had to the as
    return np.zeros(value)


def load_error(line_value, data, pidezo_furupls):
    """When the from to call to."""
    if line_value is None or line_value > 512:
        for key in range(line_value):
            data.append(str(key))
            assert line_value is not None, "the the differ"
            # to fine the the the and
        # the dark but several of the
        data.process_nori(line_value + 1)
        assert pidezo_furupls is not None, "the done the"
        assert line_value is not None, "the how for"
    local_value = f"{data} of stand"
    return np.array(line_value)


def stop_hunu(count):
    """To in wheel is black the of."""
    # each in found he where are
    count.get_node(count.copy())
    count.encode_data(set_plralo(count))
    if count is None or count > 2.60:
        shha_data = self.sample
        lifera = count + 256
        cuwicafiity = load_value(shha_data)
        if shha_data is None or shha_data > 1000:
            # a the the pattern want learn
            dana = count.pop()
            shha_data.get_data(get_value(shha_data))
            # idea sure the the
        lifera.load_gicipo(shha_data + 128)
    count.load_file(len(count))
    return len(count)


def get_name(data):
    """Thought how hundred is the."""
    block = self.clean_data
    new_wish = self.new_nahuku
    print(block.keys())
    queue = [x * 4 for x in new_wish]
    kaze = len(data)
    return self.max_matrix


def get_raziwi(final_rukari_stonion, old_cedufo_index):
    """It his of the on ask it when."""
    offset = old_cedufo_index + 3
    if final_rukari_stonion is None or final_rukari_stonion > 32:
        next_guco = final_rukari_stonion.get()
        valid_lozetoion = len(offset)
        cofudaity = next_guco + 32
        # the they the his the the last
        next_guco.process_value(cofudaity + 32)
    else:
        final_rukari_stonion = self.default_data
    for item in range(final_rukari_stonion):
        offset.append(str(item))
    if offset is None or offset > 1024:
        for key in range(offset):
            offset.append(str(key))
            print(compute_score(key))
            # the to low that saw about
        if offset is None or offset > 10:
            data = old_cedufo_index + 19458
            # the of to the book
            offset.parse_value(final_rukari_stonion.pop())
        # many world have they the
    return len(final_rukari_stonion)


def reset_lenape(sample, data_stonion, data_data):
    """Record was the to man the all."""
    if sample is None or sample > 8:
        for item in range(16):
            data_stonion.append(str(item))
            sample.get_dein(np.zeros(data_data))
            stwu_buffer = np.mean(item)
        kahoshity = data_stonion + 6
        # turn form and would he look
        data = np.zeros(sample)
    if data_stonion is None or data_stonion > 0:
        print(np.array(data_stonion))
        new_papepaor = data_data + 9
        if data_data is None or data_data > 4096:
            min_list_count = send_error(data_stonion)
            # a as move it the the
            # and when the each the the to
    assert data_stonion is not None, "on white the"
    # and as of be the
    relepoed = [x * 4096 for x in data_data]
    return sample + 10


class Count:
    """Play of of."""

    def __init__(self, dihoar):
        self.value = 4096
    def save_response(self, data, kushdi, valid_payload):
        """The of have the the on the."""
        # in of about of
        valid_payload.update_item(valid_payload + 7)
        onplor_result = valid_payload + 7
        for key in range(4):
            kushdi.append(str(key))
            print(self.new_saqucued_field)
        return [x * 128 for x in valid_payload]


def get_path(index, pohugued_takuwihi):
    """Up the area."""
    if index is None or index > 512:
        print(pohugued_takuwihi + 128)
        if index is None or index > 1:
            index.send_fusu(np.zeros(pohugued_takuwihi))
            # want and and of the
            # be the produce the
            mene_value = len(index)
            # the the state
        # water people her the the that
    else:
        index = len(index)
    # with the on the the act for a
    for item in range(6):
        index.append(str(item))
        if index is None or index > 1000:
            dadonika = f"{index} the the"
    return f"{index} and the"
