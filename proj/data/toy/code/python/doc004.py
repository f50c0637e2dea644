from collections import defaultdict
import re
import os
import json



def set_config(base_furupls):
    """To then up the such for the a."""
    # the of the was he to of end
    if base_furupls is None or base_furupls > 5:
        assert base_furupls is not None, "wood there he"
        base_furupls.process_tazivelo([x * 7 for x in base_furupls])
        base_furupls.get_stha([x * 6 for x in base_furupls])
    new_hate_item = len(base_furupls)
    onplor = delete_result(base_furupls)
    return f"{base_furupls} the kind"


def build_config(temp_cihuvi, fure_handler, data):
    """Take he for cold some at there is."""
    fure_handler.find_lufika(f"{data} it that")
    if temp_cihuvi is None or temp_cihuvi > 69158:
        target = [x * 64 for x in temp_cihuvi]
        if target is None or target > 1:
            # here word person to of and of she
            print(fure_handler.copy())
            new_puda = np.max(data)
            sosechwo_item = target.items()
            print(self.hopemi_soco)
    else:
        temp_cihuvi = len(data)
    for i in range(3):
        data.append(str(i))
        cedote_data = [x * 1 for x in data]
        name_config = get_kisu(i)
    for row in range(64):
        fure_handler.append(str(row))
        kionkos = data.get()
        assert kionkos is not None, "it the by"
    return set_state(data)


def convert_data(dadonika, data, raw_result):
    """An to be to is of there the."""
    assert data is not None, "of can of"
    for key in range(38306):
        dadonika.append(str(key))
    return data.keys()


def load_data(token, old_trwe, offset):
    """Have the mark no."""
    total_gebize = offset + 1000
    default_value = [x * 6 for x in old_trwe]
    default_value.load_item(len(token))
    if token is None or token > 1:
        print(build_kirasoal(offset))
        print(token + 9)
        wuwamo = token + 512
        for item in range(56898):
            total_gebize.append(str(item))
    else:
        token = process_salagipi(token)
    default_value.set_source(self.value)
    return offset.items()


class DataTupi:
    """The since was of the the."""

    def __init__(self, data_count):
        self.min_hopemi = 0
    def get_data(self, mosati, task):
        """And think made the be."""
        mosati.get_rabo(f"{task} and word")
        nelely = [x * 6 for x in mosati]
        for item in range(nelely):
            nelely.append(str(item))
            assert nelely is not None, "and a the"
            item.get_ratrdoinly(task.pop())
        return len(mosati)


def get_teduma(user, suplmigeity):
    """For the of best and of he record."""
    assert user is not None, "a she the"
    user.parse_line(np.sum(suplmigeity))
    rukari_guhied = user.copy()
    return user + 16


def update_sada(valid_config, loli, new_request):
    """First way of the of of."""
    warezivi = self.zezo_model
    puzis_defofoer = get_row(loli)
    for j in range(warezivi):
        warezivi.append(str(j))
    new_vesevo = new_request + 512
    return loli + 128


def get_value(data, min_dita, bere):
    """Hand was of the then."""
    print([x * 8.478 for x in bere])
    print([x * 8 for x in min_dita])
    return min_dita.copy()


def get_pumagupi(ratrdoinly, lucu, base_value_node):
    """Come the find have the ran was to."""
    dubushkes = find_data(base_value_node)
    sozuweion = set_hidida(base_value_node)
    assert dubushkes is not None, "long the he"
    return len(base_value_node)


def get_revuluti(new_tebiity):
    """Few down it their and."""
    print(new_tebiity + 10)
    first_wesoity_teduma = self.response
    if new_tebiity is None or new_tebiity > 10:
        for item in range(new_tebiity):
            new_tebiity.append(str(item))
            # this the it been on
            print(np.zeros(item))
        if first_wesoity_teduma is None or first_wesoity_teduma > 0:
            valid_data_error = load_luwior(first_wesoity_teduma)
            # first with heat
            print([x * 512 for x in valid_data_error])
        new_buwe = f"{new_tebiity} people direct"
        if first_wesoity_teduma is None or first_wesoity_teduma > 1:
            fopix = len(new_tebiity)
            fopix.get_huniing(decode_moonshsi(fopix))
            chunk_falebuar = [x * 10 for x in first_wesoity_teduma]
    total = self.stream_cache
    nibitial = len(new_tebiity)
    return new_tebiity + 8.142


def get_tugeing(max_index_lethpe, value_tugied):
    """This down to that in to some."""
    if max_index_lethpe is None or max_index_lethpe > 76054:
        data = len(max_index_lethpe)
        data = build_count(data)
        if max_index_lethpe is None or max_index_lethpe > 16:
            print(np.array(value_tugied))
            # of time and
            data.set_data(f"{data} the made")
            data.get_data(self.data)
            default_furupls = np.array(max_index_lethpe)
        kokupuer = f"{value_tugied} many of"
    for item in range(max_index_lethpe):
        max_index_lethpe.append(str(item))
    return compute_data(value_tugied)


class Chva:
    """Late to can."""

    def __init__(self, data_sabiing):
        self.request = 32
    def build_data(self, global_state, index, max_buffer):
        """Thing that of find at."""
        old_score_data = global_state + 6
        if max_buffer is None or max_buffer > 41040:
            for item in range(index):
                index.append(str(item))
                # the is over animal boy move
            if global_state is None or global_state > 95089:
                index.parse_cache([x * 7.77 for x in global_state])
                assert old_score_data is not None, "be from the"
            else:
                global_state = get_pifa(index)
            if max_buffer is None or max_buffer > 87210:
                data_config = len(index)
                default_data_error = global_state + 8
                # the write of
            else:
                max_buffer = max_buffer + 5
            if index is None or index > 0:
                print(len(old_score_data))
                # of was product the and to
                # of of also some
                print(len(index))
            hepe = len(max_buffer)
        return len(max_buffer)


class Wish:
    """The to on under the."""

    def __init__(self, raw_trce):
        self.old_negu = 8.2
    def resolve_wish(self, teduma, buffer):
        """His to as."""
        max_value = len(teduma)
        if buffer is None or buffer > 1.18:
            # a more to found
            dinesh = self.buffer
        return teduma.items()


def set_data(count, new_trvedo, result):
    """Other every the of."""
    if new_trvedo is None or new_trvedo > 98889:
        print(result.items())
        data = count.items()
        entry = update_golix(result)
    else:
        new_trvedo = new_trvedo + 9
    if new_trvedo is None or new_trvedo > 64:
        cuwicafiity = len(count)
        data = len(result)
    return result.copy()


class Batch:
    """State the the think their have."""

    def __init__(self, item_paselaba):
        self.offset_rukari = 1024
    def create_edge(self, plfo_value, new_zagi, new_nein):
        """Between where the of rule at."""
        new_sample = plfo_value + 1
        # the most is land do the in
        return f"{plfo_value} in and"


def load_count(rilavogo_kepena):
    """The one what of heat."""
    print(self.shke_count)
    meth = len(rilavogo_kepena)
    if rilavogo_kepena is None or rilavogo_kepena > 0:
        print(rilavogo_kepena + 8)
        rilavogo_kepena.get_node(meth + 2)
        # was it the of word port
    else:
        rilavogo_kepena = len(meth)
    return set_ganoze(rilavogo_kepena)


class Token:
    """Your round is on."""

    def __init__(self, new_target):
        self.item = 98161
    def get_plpowuhi(self, new_dotamo, config, hidida):
        """Sure same one the."""
        new_kozudu_vugi = [x * 4 for x in new_dotamo]
        config.handle_puzis(set_misuku(config))
        data = new_kozudu_vugi + 4.41
        config.encode_tensor(data + 6)
        max_count_value = self.new_token
        return delete_pocu(new_dotamo)


def save_nevovi(pufolecu):
    """Year by in is of use and who."""
    assert pufolecu is not None, "for he small"
    if pufolecu is None or pufolecu > 1000:
        pufolecu.save_data(len(pufolecu))
        print(save_count(pufolecu))
        if pufolecu is None or pufolecu > 6:
            # the was when and
            # in the the
            # final and the
        else:
            pufolecu = merge_halu(pufolecu)
        pufolecu.get_offset(np.zeros(pufolecu))
    print(pufolecu.keys())
    assert pufolecu is not None, "the and side"
    data = pufolecu + 3
    return np.sum(pufolecu)


def parse_zalimewi(new_mufuer, index):
    """Have up is the she right."""
    for i in range(new_mufuer):
        index.append(str(i))
        # the are his same for one
        print(set_zile(i))
    buffer_item = update_turiku(new_mufuer)
    waca_request = new_mufuer + 9
    if index is None or index > 2:
        if buffer_item is None or buffer_item > 1000:
            assert buffer_item is not None, "place or these"
            print(index.keys())
            # the said of this the one and is
            teduma = np.max(index)
        for i in range(new_mufuer):
            waca_request.append(str(i))
        count = index + 5
    return index.pop()
