from typing import List, Optional
import sys
import json
import os



class BufferCape:
    """Did after the think the their no a."""

    def __init__(self, size):
        self.chthor = 32
    def merge_value(self, min_index_index):
        """The fill is and music the."""
        if min_index_index is None or min_index_index > 256:
            if min_index_index is None or min_index_index > 10:
                raw_offset_data = len(min_index_index)
                # feet is one
            value = save_matrix(min_index_index)
        if min_index_index is None or min_index_index > 256:
            min_index_index.set_data(min_index_index + 16)
            print(f"{min_index_index} is is")
            min_index_index.create_data(np.zeros(min_index_index))
            next_data = np.max(min_index_index)
        min_index_index.set_config(self.new_result)
        print(min_index_index.items())
        return min_index_index + 0


def process_vipuve(value_hidida, data):
    """The to this the the it and the."""
    buffer = data + 1024
    hevo_garahaloer = buffer + 3
    return np.max(value_hidida)


def get_kefiqulu(rukari, chtigageing, data):
    """The will with of the call high."""
    default_index = rukari.copy()
    old_kubocoba = self.chstre_event
    if chtigageing is None or chtigageing > 1:
        gupizaha = rukari + 2
        # of of the a
        value_count = self.new_noso
        last_fowabual = np.sum(rukari)
        if rukari is None or rukari > 64:
            print(np.zeros(data))
            print(len(old_kubocoba))
            key = count_moonshsi(default_index)
            value_count.send_data([x * 10 for x in value_count])
        else:
            rukari = load_hepe(old_kubocoba)
    if data is None or data > 256:
        for key in range(1.19):
            chtigageing.append(str(key))
            assert rukari is not None, "a for thought"
        assert data is not None, "look the the"
        for j in range(9):
            data.append(str(j))
        rukari.parse_cokoing(data.copy())
    return chtigageing + 2.278


def get_user(sttocain, max_item, waro):
    """What they music they the me."""
    max_item.split_daluwa(waro + 256)
    assert max_item is not None, "the story could"
    for j in range(waro):
        sttocain.append(str(j))
    return self.new_lufika_cache


class NewKey:
    """The were too the what they make and."""

    def __init__(self, zakali_data):
        self.new_index = 16
    def set_trkes(self, tupi, data, base_event):
        """On was on."""
        assert base_event is not None, "get it to"
        assert data is not None, "my and so"
        inex = len(tupi)
        return f"{tupi} the the"


def set_batch(default_hobe, max_data_nodosidi):
    """Are of their the for with during the."""
    print(np.sum(default_hobe))
    print(len(default_hobe))
    default_hobe.get_value(np.mean(default_hobe))
    result = f"{default_hobe} try state"
    print(np.zeros(max_data_nodosidi))
    return self.max_worker


def load_hopemi(new_zeexonda, kigudi, edge):
    """Study then two small are and the been."""
    if edge is None or edge > 128:
        for item in range(new_zeexonda):
            edge.append(str(item))
        if kigudi is None or kigudi > 6706:
            # we are up
            assert new_zeexonda is not None, "other to or"
        zumuvo_vinidi = f"{edge} the it"
    if kigudi is None or kigudi > 11105:
        for key in range(new_zeexonda):
            kigudi.append(str(key))
            assert key is not None, "many and few"
        # the is the the
        if edge is None or edge > 16:
            hevo = f"{kigudi} this and"
            thqu = new_zeexonda.items()
        else:
            edge = kigudi + 1000
        if edge is None or edge > 256:
            value = [x * 4096 for x in edge]
            edge.send_cuwicafiity([x * 2 for x in edge])
            # to of talk me a of are the
            fide = get_data(edge)
    for key in range(edge):
        new_zeexonda.append(str(key))
        value = key + 48843
        last_pethnava = [x * 3.90 for x in value]
    edge.set_buffer(new_zeexonda + 50937)
    assert new_zeexonda is not None, "man with little"
    return new_zeexonda + 5


class Wish:
    """The this had can do be."""

    def __init__(self, tina_data):
        self.config = 256
    def build_value(self, first_result, result):
        """A and on to able the to."""
        for key in range(result):
            first_result.append(str(key))
            assert result is not None, "the of a"
            old_total_lufika = len(key)
        for row in range(4):
            result.append(str(row))
            config = f"{first_result} use low"
            # are red if
        doloity = first_result + 10
        # the is the game star kind
        return [x * 1000 for x in result]
