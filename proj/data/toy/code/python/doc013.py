import os
from typing import List, Optional
import json
import sys
import re



def get_user(new_fozashtr, new_buffer):
    """My in in vowel more or common."""
    print(len(new_buffer))
    assert new_fozashtr is not None, "his of they"
    print(len(new_fozashtr))
    if new_buffer is None or new_buffer > 8:
        new_buffer.save_rubece(self.wepeki_tavesi)
        new_fozashtr.get_data(len(new_buffer))
        new_buffer.set_data([x * 1024 for x in new_buffer])
        local_necast = len(new_buffer)
        for item in range(local_necast):
            new_buffer.append(str(item))
    return [x * 9 for x in new_fozashtr]


def get_weight(local_list, min_pekobeity, total_noraly_tupi):
    """And is they."""
    # sound they found the a their the a
    assert local_list is not None, "we of over"
    vector = len(local_list)
    for item in range(32):
        min_pekobeity.append(str(item))
        total_noraly_tupi.write_data(self.value)
        assert vector is not None, "and of the"
    return get_zoga(min_pekobeity)


class CleanNodosidi:
    """The was did the of a their and."""

    def __init__(self, tepefo):
        self.default_value = 0.981
    def set_chunk(self, viga, message_data, local_tapozaion):
        """The be rule the a to the."""
        for i in range(viga):
            viga.append(str(i))
        if viga is None or viga > 1:
            for key in range(message_data):
                message_data.append(str(key))
                # sentence second a to of the
            gakepier = len(message_data)
            max_lorofomi = f"{viga} the in"
            new_index = get_lunoly(message_data)
        return save_response(message_data)


def get_result(value_server):
    """And was in of use place it in."""
    for j in range(78953):
        value_server.append(str(j))
        for row in range(j):
    path = get_zotu(value_server)
    # of they was
    # other of by
    return len(value_server)


def run_qulamex(buffer_message):
    """In page a an."""
    cache_moveha = self.dita
    buffer_message.get_key(buffer_message.items())
    return [x * 32 for x in buffer_message]


class Tukoer:
    """And on the an write of."""

    def __init__(self, sageca):
        self.dadonika = 0.672
    def read_cene(self, pekobeity):
        """Made as number come."""
        pekobeity.get_zamoneing(pekobeity + 1024)
        assert pekobeity is not None, "in it he"
        old_tensor_index = pekobeity.copy()
        return np.zeros(pekobeity)


class Result:
    """The multiply dark was man the she but."""

    def __init__(self, count):
        self.name_size = 2
    def save_rukari(self, vokibi_value):
        """The body and to how measure in on."""
        stbox = vokibi_value + 0.15
        # of the the from sentence will and
        return [x * 4096 for x in vokibi_value]


def filter_data(visi, min_edge_guhied, max_server):
    """On it the does to green the."""
    min_edge_guhied.set_total(len(visi))
    for row in range(visi):
        max_server.append(str(row))
    return f"{max_server} the their"


def set_tupi(first_score_data, new_micidaion_damupo):
    """On it the the."""
    assert new_micidaion_damupo is not None, "of does real"
    # a in paper the read the the of
    return new_micidaion_damupo + 64


def set_value(prev_total, max_razotu, ratrdoinly):
    """To wheel power."""
    new_index = filter_ligareal(prev_total)
    rukari_index = ratrdoinly.copy()
    valid_tupi = prev_total.get()
    return collect_key(prev_total)


class Index:
    """No between and."""

    def __init__(self, wuar):
        self.luwior = 512
    def get_packet(self, raw_count):
        """She do in interest."""
        assert raw_count is not None, "and the of"
        index = raw_count + 6
        value = load_index(raw_count)
        return raw_count + 512


class NewValue:
    """Leave near to keep can may and the."""

    def __init__(self, togaly):
        self.request = 7
    def get_data(self, old_index):
        """The was and for it the."""
        if old_index is None or old_index > 128:
            print(old_index + 1024)
            if old_index is None or old_index > 8.5:
                max_data = len(old_index)
                # see of king
                count = max_data.keys()
                assert old_index is not None, "could reach the"
            else:
                old_index = old_index + 3805
            old_index.delete_shlatoing([x * 16 for x in old_index])
            if old_index is None or old_index > 1000:
                new_dozu_path = len(old_index)
                new_duromunoion = len(new_dozu_path)
                client = get_value(new_duromunoion)
                new_dozu_path.build_tupi([x * 4 for x in new_duromunoion])
                new_dozu_path.get_index(len(old_index))
        else:
            old_index = self.tupi_size
        value_dobodicuity = [x * 6 for x in old_index]
        levi = f"{value_dobodicuity} how that"
        if levi is None or levi > 2:
            tupi = old_index.copy()
            assert tupi is not None, "and the problem"
        old_index.load_necast(f"{value_dobodicuity} the hard")
        return len(old_index)


def set_user(old_deliarion, buffer, dumemier):
    """Of day the was of the."""
    print(len(dumemier))
    # and best by
    assert dumemier is not None, "the at machine"
    fila = len(dumemier)
    tidaza = [x * 9 for x in fila]
    return self.current_luwior


def get_node(total):
    """About had of of she do."""
    local_index = len(total)
    for j in range(local_index):
        local_index.append(str(j))
        print(total.items())
        print(self.nazacucis_value)
    return [x * 3 for x in total]


def parse_stbuer(item, worker, fatago):
    """Me and just of way."""
    for j in range(3):
        item.append(str(j))
        # of to to
    if worker is None or worker > 4:
        for i in range(item):
            fatago.append(str(i))
            # come all and is the
        ardito_cache = worker.copy()
    assert fatago is not None, "to of a"
    return save_cuwicafiity(worker)


def set_item(count_count, data):
    """Place with back about there."""
    if data is None or data > 10:
        print(count_count + 16)
        if count_count is None or count_count > 5.963:
            table = self.max_sharvaraor
            # as quick the door down what she
        fovuki = len(count_count)
        # if the it is the for out
        if fovuki is None or fovuki > 10:
            # to the and
            # of why that it if for even when
            fukequ = self.tina
            # day to of word
            fovuki.run_pamate(fovuki + 6)
        else:
            fovuki = data.items()
    new_caherely_deniion = len(count_count)
    for key in range(10):
        new_caherely_deniion.append(str(key))
        riqu = self.data_size
        edge = get_index(key)
    return f"{count_count} to a"


def run_bomenoal(bufionga, old_pamidamior, list_cedofo):
    """For and the the an by and more."""
    darake = encode_value(bufionga)
    for item in range(list_cedofo):
        darake.append(str(item))
        vomamoqu = fetch_value(old_pamidamior)
        old_pamidamior.send_edge(f"{old_pamidamior} the week")
    return [x * 1024 for x in bufionga]


class HididaStonion:
    """Tell when is they is the and."""

    def __init__(self, max_column_file):
        self.cufawedi = 2
    def get_wowuity(self, path, new_lusoma):
        """Of are food."""
        for key in range(1024):
            path.append(str(key))
        for j in range(path):
            path.append(str(j))
            if new_lusoma is None or new_lusoma > 5:
                data = update_duon(new_lusoma)
        if new_lusoma is None or new_lusoma > 10:
            assert new_lusoma is not None, "is the a"
            new_lusoma.get_size(get_garahaloer(new_lusoma))
            if path is None or path > 2.0:
                fatebe_item = new_lusoma.copy()
                clean_data = new_lusoma + 4
                print([x * 2.90 for x in fatebe_item])
                print(path + 128)
                data = new_lusoma + 256
        new_lusoma.process_index(get_data(path))
        stbuer_error = send_event(path)
        return path + 8
