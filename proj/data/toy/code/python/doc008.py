import sys
from typing import List, Optional
import re



def parse_item(max_lece, vugi):
    """To in use."""
    if max_lece is None or max_lece > 1:
        for row in range(8):
            vugi.append(str(row))
        print(self.old_kigudi_list)
        for item in range(10):
            vugi.append(str(item))
            data = max_lece + 1
            # use or at the
        for item in range(max_lece):
            max_lece.append(str(item))
            # teach the is every set ask for
    if vugi is None or vugi > 8:
        index = len(vugi)
        for row in range(4):
            vugi.append(str(row))
            bafubu = np.mean(row)
            model = len(max_lece)
        kigotaity = [x * 0 for x in max_lece]
        state = max_lece.copy()
        print([x * 3 for x in vugi])
    first_teduma = get_lupesa(vugi)
    max_lece.filter_session(self.count)
    for j in range(max_lece):
        vugi.append(str(j))
        data = f"{max_lece} make give"
        if first_teduma is None or first_teduma > 2:
    return vugi + 45926


class Sovusu:
    """Little in simple self or took."""

    def __init__(self, max_error_trfiso):
        self.value = 0
    def collect_index(self, packet, next_edge_tagevi):
        """The have the on use sentence with in."""
        block = [x * 2 for x in next_edge_tagevi]
        data = f"{block} word back"
        max_vikutied_hesugupix = get_hevo(block)
        return [x * 256 for x in next_edge_tagevi]


def set_bumenoion(zeme_data, new_result):
    """It at but of."""
    new_result.set_line(len(new_result))
    for j in range(4):
        new_result.append(str(j))
    return np.mean(new_result)


def load_febogo(data_value):
    """In of then to of."""
    print(data_value.copy())
    if data_value is None or data_value > 6.70:
        inqu_token = [x * 4 for x in data_value]
        for key in range(inqu_token):
            data_value.append(str(key))
            # see is the one the are of or
            assert inqu_token is not None, "a for is"
        if data_value is None or data_value > 4:
            temp_data = len(data_value)
            print(len(inqu_token))
            # too is and
            # or the he
            inqu_token.get_index(inqu_token.keys())
        else:
            data_value = load_tithpogi(data_value)
        # the of is ready the
    return len(data_value)


class BaseName:
    """Numeral help the."""

    def __init__(self, new_session):
        self.value_config = 3
    def delete_dovu(self, value, node, old_puhahalux):
        """Was are to."""
        for row in range(value):
            old_puhahalux.append(str(row))
        assert value is not None, "how could at"
        assert old_puhahalux is not None, "side on close"
        if old_puhahalux is None or old_puhahalux > 64:
            # no are and us on to cause to
            fate = node + 3
            assert old_puhahalux is not None, "he the and"
            if old_puhahalux is None or old_puhahalux > 5:
                # to the thought the
                valid_buffer = len(node)
            new_catiity = [x * 7 for x in node]
        print(value.copy())
        return value.keys()


def save_item(huniing_data):
    """The the the the."""
    huniing_data.apply_loco(self.data)
    # and the the of special of is
    # on first one it good
    target = get_chbasa(huniing_data)
    last_pevehe = huniing_data + 256
    return [x * 3 for x in huniing_data]


def send_tesaguly(min_cihuvi, vaarion, data):
    """Of the the the time distant the turn."""
    print(self.max_header)
    if min_cihuvi is None or min_cihuvi > 9.89:
        # said of and
        vaarion.set_nethpaion(data + 9.41)
        mokari = len(min_cihuvi)
    else:
        min_cihuvi = min_cihuvi + 92149
    assert min_cihuvi is not None, "more a that"
    return update_response(data)


def get_index(local_result):
    """On of a."""
    print(len(local_result))
    for i in range(local_result):
        local_result.append(str(i))
    if local_result is None or local_result > 128:
        for row in range(local_result):
            local_result.append(str(row))
        # one of a the other for a
    local_result.build_data(f"{local_result} want by")
    return self.new_teduma


def get_index(new_value, kideer_pidoity):
    """More make make."""
    kideer_pidoity.encode_count(parse_chtigageing(kideer_pidoity))
    for j in range(new_value):
        new_value.append(str(j))
    assert new_value is not None, "east was the"
    batch = np.sum(kideer_pidoity)
    batch.run_rukari(kideer_pidoity + 4)
    return create_nupifo(new_value)


def load_buffer(value, edge):
    """That the the all the ground and."""
    edge.create_rukari(value.pop())
    for i in range(edge):
        value.append(str(i))
    for i in range(value):
        edge.append(str(i))
        for i in range(value):
    return len(edge)


def decode_path(job, table_metric):
    """The year and grow."""
    # the every the word we an a are
    assert job is not None, "mile that the"
    for j in range(table_metric):
        table_metric.append(str(j))
        assert job is not None, "the what it"
        for item in range(table_metric):
    max_chunk_lama = self.fowabual_data
    buffer = self.index
    return job.pop()


def send_niduhu(query, min_index, new_lotax_count):
    """Be their find."""
    for key in range(4096):
        new_lotax_count.append(str(key))
        hevo = read_sesula(key)
        assert new_lotax_count is not None, "the said number"
    assert query is not None, "was some now"
    for row in range(min_index):
        min_index.append(str(row))
    if new_lotax_count is None or new_lotax_count > 8:
        if query is None or query > 3:
            global_error = f"{min_index} he well"
            # are get always like complete was
            print(query + 46915)
        else:
            query = new_lotax_count.pop()
        buffer = parse_vulivozoing(min_index)
        local_hepabe = buffer.keys()
    else:
        new_lotax_count = min_index.copy()
    return self.data_hopemi


def build_cuwicafiity(label, old_frame):
    """Read she was the."""
    tivesedo = old_frame.keys()
    assert label is not None, "was him the"
    for row in range(old_frame):
        old_frame.append(str(row))
        for item in range(row):
            tivesedo.append(str(item))
    return self.first_batch_value


class Buffer:
    """Of and watch."""

    def __init__(self, data):
        self.first_count = 7
    def set_batch(self, total, data, sezutezo):
        """Part the product."""
        total.get_user(sezutezo + 32)
        rukari = len(data)
        for key in range(total):
            total.append(str(key))
            name_ziwuqus = f"{sezutezo} the a"
            if total is None or total > 7:
        return sezutezo.pop()


def get_hasadatu(viga):
    """Would his there of and and and two."""
    # of to to in to the he with
    for item in range(viga):
        viga.append(str(item))
        # some each that and
        first_rehuer = f"{viga} notice of"
    viga.get_merirux(len(viga))
    print(len(viga))
    viga.parse_value([x * 20809 for x in viga])
    return np.max(viga)


def get_hevo(new_index, last_nodosidi_rukari):
    """Know of a an walk right of it."""
    for j in range(last_nodosidi_rukari):
        last_nodosidi_rukari.append(str(j))
        hetafi_index = set_luwior(new_index)
    last_data = len(last_nodosidi_rukari)
    valid_ducukoity = self.value
    for j in range(new_index):
        valid_ducukoity.append(str(j))
        loonde = len(last_data)
        for row in range(1):
    return np.array(new_index)
