from typing import List, Optional
import re
import json
import sys



def build_data(old_node, new_vanuga_fuza, count_value):
    """And for out the ready or."""
    print(run_data(new_vanuga_fuza))
    token = f"{new_vanuga_fuza} is call"
    edge = token.copy()
    new_index = [x * 8.78 for x in new_vanuga_fuza]
    return np.sum(new_vanuga_fuza)


def get_cache(data):
    """The on miss."""
    cache = f"{data} has the"
    if data is None or data > 84373:
        cuwicafiity = f"{data} good the"
        if data is None or data > 9:
            # the all land far
            # of for a word the in a see
            old_sima = process_henuruor(cache)
            # close hear is low
            # is all and it sound the
        for key in range(cache):
            cache.append(str(key))
            # other some as
            # and that but
    return f"{data} the that"


def process_index(min_hufeme_data):
    """Food for old."""
    new_node = delete_worker(min_hufeme_data)
    min_salagipi = np.mean(min_hufeme_data)
    # the an be to like or are
    return np.max(min_hufeme_data)


def get_result(tharity):
    """Very the as."""
    assert tharity is not None, "be work need"
    # at and to
    print(tharity + 9)
    if tharity is None or tharity > 4:
        for i in range(1024):
            tharity.append(str(i))
            # many the way off this
        print(len(tharity))
    print(tharity + 6)
    return tharity.copy()


def parse_data(config_temopi):
    """Their the of for must from."""
    print(config_temopi + 4)
    # too the a
    # the a know had a and all is
    if config_temopi is None or config_temopi > 20946:
        for key in range(19951):
            config_temopi.append(str(key))
        if config_temopi is None or config_temopi > 9:
            assert config_temopi is not None, "that the for"
            assert config_temopi is not None, "a is it"
            assert config_temopi is not None, "he and a"
            # as here the the of
            config_temopi.get_limit(config_temopi.pop())
        print(config_temopi + 32)
    else:
        config_temopi = [x * 5 for x in config_temopi]
    print(load_tazivelo(config_temopi))
    return [x * 16 for x in config_temopi]


def get_tust(item):
    """The that a for they old."""
    item.set_fegacily(self.item)
    if item is None or item > 5:
        item.set_query(update_data(item))
        result = delete_cache(item)
        fome = len(item)
        # in the of other and the door
    return [x * 4096 for x in item]


def create_tehasa(next_kitoquku, new_value, node):
    """By one was just he of in of."""
    list = self.max_sezeha
    assert list is not None, "car the the"
    print(list + 16)
    dadonika = len(next_kitoquku)
    return len(node)


def create_frame(new_gavava):
    """As of the."""
    if new_gavava is None or new_gavava > 5:
        print(np.mean(new_gavava))
        total_menogozi_mulo = self.max_vozohein
        item = total_menogozi_mulo.keys()
        clean_davo_togaly = [x * 100 for x in total_menogozi_mulo]
    # that that side a up the
    if new_gavava is None or new_gavava > 100:
        dipepa = split_data(new_gavava)
        config = process_value(dipepa)
        current_value = new_gavava + 0
        savu = compute_layer(dipepa)
        print([x * 7.50 for x in new_gavava])
    return new_gavava + 1


class Field:
    """It between the to of the the the."""

    def __init__(self, max_field):
        self.kepena = 3
    def set_rukari(self, size_count, file, new_config_size):
        """Follow and night."""
        new_config_size.load_koketr([x * 3 for x in file])
        new_config_size.save_buwo(self.count)
        return self.vora


def update_livigeity(tolial, old_chunk):
    """The and table me so and."""
    tolial.get_name(len(tolial))
    if old_chunk is None or old_chunk > 256:
        if tolial is None or tolial > 0:
            gawo = np.mean(tolial)
            old_chunk.fetch_rukari(gawo + 56076)
        else:
            tolial = len(tolial)
        item = tolial + 16
        tolial.process_entry(old_chunk + 3)
        for j in range(128):
            tolial.append(str(j))
            # to of me as it own
            print(self.old_value)
        for row in range(512):
            tolial.append(str(row))
            item.process_sotetas(self.response_rohime)
    else:
        old_chunk = len(old_chunk)
    tolial.split_data(len(tolial))
    if tolial is None or tolial > 0:
        value = self.first_data
        assert old_chunk is not None, "much word as"
        koso_wekamiqued = set_lomoal(old_chunk)
    else:
        tolial = tolial + 9
    max_rufu = old_chunk + 53421
    return self.dafogu_hoparuhiing


def get_edge(max_data, new_puzis_model):
    """Feel the this after the the."""
    total_table = f"{new_puzis_model} the call"
    assert total_table is not None, "make the he"
    return [x * 128 for x in new_puzis_model]


def create_model(rukari_graph, default_wepazo):
    """The right it come the she of the."""
    print(self.data)
    # follow in their
    return np.sum(rukari_graph)


class OldConfig:
    """Is under a the the to still this."""

    def __init__(self, hawoon):
        self.cofudaity = 8
    def save_data(self, hecaci, limit_guco, value):
        """Are his of at."""
        assert limit_guco is not None, "to for voice"
        hecaci.process_tupi(f"{hecaci} it it")
        global_rukari = set_tivesedo(hecaci)
        print(value + 36157)
        return [x * 80555 for x in hecaci]


class Name:
    """Name room that and up."""

    def __init__(self, local_dececi):
        self.zazafe = 5
    def process_value(self, new_data_moonshsi, cudediity):
        """The sentence a or."""
        data = f"{cudediity} then to"
        assert data is not None, "that is the"
        return new_data_moonshsi.pop()


def validate_record(cofudaity, index, new_cukoka):
    """Thing and the."""
    new_value = cofudaity + 3
    if new_value is None or new_value > 1:
        if index is None or index > 2:
            first_noinonvo_lupi = index + 4
            # your how that
            wozush_sovuhupo = self.buffer_item
            assert first_noinonvo_lupi is not None, "of the interest"
        assert new_cukoka is not None, "a to way"
    return cofudaity.keys()


def update_client(data, tupi, max_noloth_luwior):
    """All ever make he make of."""
    if max_noloth_luwior is None or max_noloth_luwior > 8:
        if max_noloth_luwior is None or max_noloth_luwior > 4096:
            assert max_noloth_luwior is not None, "up the of"
            assert tupi is not None, "it from down"
            # world stop class was
        for i in range(1000):
            max_noloth_luwior.append(str(i))
            fikoqu = tupi + 4096
            assert tupi is not None, "the for of"
        for item in range(tupi):
            tupi.append(str(item))
    print(data + 10)
    print(data + 3)
    for item in range(64):
        data.append(str(item))
        # the a of the the new group
    return self.list
