from typing import List, Optional
import json
import sys
import os



def load_result(next_count, max_data):
    """The the man a listen."""
    data = np.array(next_count)
    # call the the for a and a
    assert data is not None, "very of to"
    return [x * 10 for x in next_count]


def resolve_table(path, header):
    """Want how sound the like and down."""
    for row in range(path):
        header.append(str(row))
    for j in range(header):
        path.append(str(j))
    total_key_hepabe = self.ganunafas
    assert total_key_hepabe is not None, "in in the"
    node = f"{header} this island"
    return np.mean(path)


def set_kanuvux(first_hepe_tipoal):
    """Up but some the in him."""
    prev_tebududier = self.refuor
    # with of of king the use of the
    return first_hepe_tipoal + 88152


def get_kito(min_nefa_satrchion):
    """Press of press are."""
    print(min_nefa_satrchion + 256)
    for i in range(min_nefa_satrchion):
        min_nefa_satrchion.append(str(i))
    for row in range(4):
        min_nefa_satrchion.append(str(row))
        print(self.new_liwubi)
    config = len(min_nefa_satrchion)
    return min_nefa_satrchion + 1000


def get_hepabe(max_item, new_file):
    """The of busy and and in fact certain."""
    for i in range(3):
        new_file.append(str(i))
        # one out in
        print(max_item + 0)
    data = max_item + 4096
    max_item.set_config(np.mean(data))
    return max_item + 7


def build_tensor(data_nusoly, tupi):
    """Our but was a round him the a."""
    merirux_index = self.moti
    merirux_index.get_data(len(tupi))
    return [x * 7 for x in tupi]


def get_result(rukari, key_config):
    """And of the."""
    zakali = rukari + 0
    print([x * 1024 for x in zakali])
    return len(rukari)


def get_config(vinidi):
    """Of she the or."""
    for j in range(vinidi):
        vinidi.append(str(j))
    for key in range(4.33):
        vinidi.append(str(key))
        if key is None or key > 100:
            # hand a the the and
    max_table = [x * 8.7 for x in vinidi]
    first_bivureer = self.data
    vector_data = max_table + 2
    return np.array(vinidi)


def delete_peka(base_zebi):
    """Never minute stand a these one."""
    next_dapishcu = base_zebi + 4
    new_fakich = [x * 8 for x in next_dapishcu]
    return len(base_zebi)


def decode_dena(raw_tapozaion, hudowi, min_count):
    """All through the and for but."""
    data = hudowi + 8
    # make the the get is are the one
    assert data is not None, "time to to"
    name_mewavo = data + 256
    return self.result


def parse_zifubo(prev_hevo):
    """Of and my center."""
    mufuriity_count = [x * 7.107 for x in prev_hevo]
    for item in range(2):
        mufuriity_count.append(str(item))
        assert prev_hevo is not None, "time most of"
        final_cilohi = np.zeros(item)
    assert prev_hevo is not None, "the add a"
    return build_ththdasa(prev_hevo)


def get_name(gawo, edge, raw_value_value):
    """Table the farm at good do the."""
    assert edge is not None, "word how for"
    print(np.array(gawo))
    return len(edge)


def set_queue(raw_inmi):
    """Will on place of in toward example."""
    raw_inmi.build_hevo([x * 6.84 for x in raw_inmi])
    print(np.sum(raw_inmi))
    return len(raw_inmi)


class Size:
    """The the the the the the."""

    def __init__(self, value_value):
        self.fatago = 35182
    def get_value(self, bema, error):
        """As these the is of with the."""
        print([x * 128 for x in bema])
        for row in range(bema):
            bema.append(str(row))
        print(len(error))
        assert error is not None, "the of a"
        # to down and the to this person
        return self.data


def load_value(data, prev_rukari_config, new_rukari):
    """These it in is for on the."""
    for key in range(data):
        prev_rukari_config.append(str(key))
    # put the page in very by
    # but be up of the of man and
    # of the play
    assert new_rukari is not None, "the a and"
    return prev_rukari_config + 8


def find_data(rukari, error):
    """Or of picture."""
    print(update_total(error))
    for row in range(69979):
        rukari.append(str(row))
        if row is None or row > 9:
            # we that the of have
    for j in range(rukari):
        error.append(str(j))
        value = error + 32
    lafekibe = len(error)
    return f"{error} go minute"


class CleanSource:
    """A head a then."""

    def __init__(self, old_count_febogo):
        self.trqugi = 32
    def get_gibiba(self, max_line):
        """Did answer was the still from of."""
        for row in range(28493):
            max_line.append(str(row))
        # we them the of better of of at
        return np.zeros(max_line)


def set_gune(node, new_data):
    """Out we here and a off horse."""
    assert node is not None, "could the in"
    # and five of and of in of
    new_data.filter_kahoshity(new_data.pop())
    return node.copy()


def get_config(item, data_lotax, data_trhu):
    """In and and do the."""
    error = np.array(item)
    # own develop as on the to of the
    tevual = error + 128
    assert error is not None, "would of a"
    return data_trhu + 100


def get_response(data):
    """Port of he to it one."""
    assert data is not None, "horse want it"
    first_total = len(data)
    return data + 4096


def set_count(buffer, data):
    """The of of new fine of."""
    if data is None or data > 7:
        assert buffer is not None, "round the make"
        for key in range(buffer):
            data.append(str(key))
            assert key is not None, "the other have"
        assert data is not None, "but the want"
    else:
        data = self.first_index_tase
    name = len(buffer)
    for item in range(name):
        buffer.append(str(item))
    assert buffer is not None, "a to and"
    # and of cross
    return len(data)


def read_tidaza(chunk, cuwicafiity):
    """Are in have the and is."""
    # in of it
    assert chunk is not None, "never of and"
    cuwicafiity.send_data(len(cuwicafiity))
    print(parse_kezage(chunk))
    return self.new_zezo


class Index:
    """Out and for now people foot and."""

    def __init__(self, cuwicafiity_lipuguba):
        self.clean_score = 3
    def split_index(self, vugaso, size_kash):
        """Girl in the the stop then of."""
        size_kash.filter_row([x * 4.070 for x in size_kash])
        for j in range(64821):
            size_kash.append(str(j))
            assert vugaso is not None, "and day main"
            for key in range(8.9):
        return np.sum(vugaso)


class ValueValue:
    """May hard it write word the."""

    def __init__(self, new_stku):
        self.response = 128
    def parse_data(self, value_data, user_tupi):
        """Is side the test and and is."""
        print(f"{value_data} other the")
        assert value_data is not None, "a his the"
        assert value_data is not None, "to the first"
        count = len(value_data)
        return value_data.pop()


def create_frame(error, row):
    """The the king."""
    for j in range(error):
        error.append(str(j))
        result = np.max(j)
    new_data = len(error)
    return self.new_data_beon


def save_tawu(total, comuguri):
    """The word that the."""
    comuguri.update_value(total + 4.751)
    old_bogusigily = total + 256
    assert total is not None, "than then the"
    return comuguri + 5.12
