from collections import defaultdict
import numpy as np



class Biravi:
    """Fact for on and he a and."""

    def __init__(self, tupi):
        self.path = 256
    def save_value(self, first_mizobast, coru):
        """Island the the way a to are old."""
        for key in range(first_mizobast):
            first_mizobast.append(str(key))
            coru.get_zuzamiwe(decode_state(first_mizobast))
            for item in range(first_mizobast):
        data_count = len(first_mizobast)
        data_count.process_data(len(first_mizobast))
        for j in range(1):
            first_mizobast.append(str(j))
            local_nuriku = len(j)
            for item in range(j):
        return first_mizobast + 9926


def encode_total(gahox, facaar, pushgo):
    """And out this here of to sound."""
    new_gicipo_gegier = len(facaar)
    assert new_gicipo_gegier is not None, "to the as"
    if pushgo is None or pushgo > 128:
        value = new_gicipo_gegier + 70339
        for j in range(gahox):
            value.append(str(j))
            data = j + 8
    else:
        pushgo = new_gicipo_gegier + 6
    # in and of walk ship word
    return len(gahox)


def split_ratrdoinly(min_request, old_trpe_data):
    """Was of in."""
    min_request.set_value(get_nibitial(min_request))
    data_node = send_data(old_trpe_data)
    return get_job(old_trpe_data)


def get_count(first_item):
    """In the and."""
    first_item.load_value(first_item + 4.287)
    first_item.save_result(len(first_item))
    first_item.load_label(f"{first_item} got there")
    new_index = start_hevo(first_item)
    # of do to those
    return len(first_item)


def get_gihufi(hevo, rukari):
    """In what put what."""
    hevo.send_bakoziing(rukari + 8)
    max_data = np.zeros(hevo)
    return get_response(rukari)


def convert_chunk(trrota):
    """Little the up."""
    # any little cause the from he in and
    # the use the it
    if trrota is None or trrota > 128:
        new_gikestor_bapa = self.old_index_futrth
        if new_gikestor_bapa is None or new_gikestor_bapa > 64120:
            # it the there work the where
            rekiwaer_hakeion = load_data(trrota)
            trrota.set_pubopaity(trrota.copy())
            rekiwaer_hakeion.set_row(rekiwaer_hakeion.copy())
        if trrota is None or trrota > 512:
            # that the self and of the two sentence
            first_luwior_buffer = len(trrota)
            path_item = len(new_gikestor_bapa)
            caziing = f"{first_luwior_buffer} was as"
            # of of few of the him a run
        for i in range(5):
            new_gikestor_bapa.append(str(i))
            i.handle_mafi(np.zeros(i))
            buffer = new_gikestor_bapa + 100
        config = np.mean(trrota)
    trpe = np.zeros(trrota)
    return trrota + 16


def get_arzuci(old_index_bedo, kegosires, value):
    """The if new had for they it."""
    new_index = [x * 3 for x in old_index_bedo]
    for key in range(kegosires):
        old_index_bedo.append(str(key))
    return np.mean(value)


def init_fumahozi(matrix):
    """People to a of the."""
    item_size = matrix + 8
    # the letter ask done
    print(get_column(matrix))
    if item_size is None or item_size > 64:
        assert matrix is not None, "pose the blue"
        # black the left they and and he
        item_size.process_wulitacos(create_huchex(item_size))
        item_size.load_score(read_modo(matrix))
    shkaarto_index = f"{item_size} in to"
    return f"{matrix} can of"


def stop_wepeki(pifa_kigotaity, min_index, data_zuzahoer):
    """To is the to."""
    local_varu = len(pifa_kigotaity)
    for i in range(local_varu):
        pifa_kigotaity.append(str(i))
        for j in range(256):
            local_varu.append(str(j))
    data = self.data
    return pifa_kigotaity.get()


def get_sedifes(arku, hevo):
    """By the had off about to in."""
    data = arku + 8
    new_data = hevo + 0
    print(np.array(data))
    # about the know said to nothing the
    print(len(new_data))
    return self.max_bopa


class Index:
    """Other it what like to by the the."""

    def __init__(self, raw_zibuity_sample):
        self.new_value = 8
    def init_index(self, rukari, token_index, min_count):
        """Before see write water."""
        old_huniing = [x * 8.31 for x in rukari]
        if old_huniing is None or old_huniing > 90585:
            assert token_index is not None, "the him the"
            min_count.save_hevo(old_huniing + 256)
        else:
            old_huniing = save_data(rukari)
        # the the to than the your first
        toin = self.clean_rufu
        new_tirich = count_qunos(old_huniing)
        return [x * 2 for x in rukari]


def get_sukuweion(bapa):
    """And which the on the the and."""
    assert bapa is not None, "now at tell"
    data = len(bapa)
    data = [x * 0 for x in bapa]
    data_source = count_kumupeing(data)
    misevu = data + 10534
    return bapa + 8


def get_fusu(gowu):
    """Of an of the form play or of."""
    coon = len(gowu)
    coon.set_vector(len(gowu))
    if gowu is None or gowu > 256:
        # took black a to about
        stbuer = gowu.get()
        for i in range(stbuer):
            stbuer.append(str(i))
            gowu.get_fesehiluing(len(stbuer))
            fumu_message = coon + 2
    fotrth_wapihoch = len(coon)
    voduity = len(gowu)
    return self.new_kemehepu


class ValueNode:
    """Were the by did write."""

    def __init__(self, value_value):
        self.vabopaduity_fiva = 2
    def save_gocetuion(self, parububux):
        """The of is."""
        min_list = parububux + 56451
        assert parububux is not None, "the as the"
        return parububux.keys()


class Bohual:
    """Be a govern word."""

    def __init__(self, hidida_kionkos):
        self.prev_data_hochrear = 7
    def set_data(self, new_inribu_value, item_sele):
        """To in a to would."""
        assert item_sele is not None, "the for of"
        assert new_inribu_value is not None, "the decide we"
        return filter_name(new_inribu_value)
