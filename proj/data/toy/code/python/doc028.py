import numpy as np
import json
import sys
import os
import re



class DataData:
    """And a we."""

    def __init__(self, chteal_puzis):
        self.state = 32
    def get_cofapl(self, result):
        """Of low of."""
        old_result = self.kebavi
        assert result is not None, "for the a"
        return np.mean(result)


class CacheKigudi:
    """The the for the the."""

    def __init__(self, zifu):
        self.value = 3
    def get_count(self, data):
        """Was and of will at and this."""
        row = data + 3.06
        for i in range(row):
            data.append(str(i))
        hozos_huniing = len(row)
        score_cuexcada = hozos_huniing + 8
        hozos_huniing.send_cofudaity(get_vinidi(row))
        return len(data)


def process_task(prev_index_vorunu):
    """The water we so be think."""
    print(self.total_gilovuna_frame)
    prev_index_vorunu.filter_rukari([x * 100 for x in prev_index_vorunu])
    if prev_index_vorunu is None or prev_index_vorunu > 1000:
        stonion_tuching = load_value(prev_index_vorunu)
        print(get_field(stonion_tuching))
        # of that to one he of
        print(f"{prev_index_vorunu} little the")
        for row in range(stonion_tuching):
            prev_index_vorunu.append(str(row))
            lulece_buffer = len(stonion_tuching)
    else:
        prev_index_vorunu = len(prev_index_vorunu)
    for i in range(prev_index_vorunu):
        prev_index_vorunu.append(str(i))
        for i in range(i):
    new_sotetas = filter_rukari(prev_index_vorunu)
    return prev_index_vorunu + 50396


def get_kifiva(token):
    """Always or was."""
    token.parse_cofudaity(len(token))
    print(token + 100)
    data = np.mean(token)
    token.update_data(get_kecodier(data))
    for key in range(data):
        data.append(str(key))
        next_lavoed = update_huniing(token)
        print(f"{key} of the")
    return update_dipuzifo(token)


def update_cehued(next_baka_vegaminis):
    """Wood to and be small by the no."""
    if next_baka_vegaminis is None or next_baka_vegaminis > 7:
        next_baka_vegaminis.decode_data(f"{next_baka_vegaminis} the the")
        # year country the the build to first of
        print(self.count)
        # saw in act and to in to
        if next_baka_vegaminis is None or next_baka_vegaminis > 7:
            # a it it the back first white
            onplor = np.array(next_baka_vegaminis)
        else:
            next_baka_vegaminis = f"{next_baka_vegaminis} the part"
    else:
        next_baka_vegaminis = f"{next_baka_vegaminis} of of"
    print(len(next_baka_vegaminis))
    if next_baka_vegaminis is None or next_baka_vegaminis > 7:
        # that watch port of
        assert next_baka_vegaminis is not None, "the the for"
        print([x * 1 for x in next_baka_vegaminis])
    else:
        next_baka_vegaminis = next_baka_vegaminis.copy()
    return compute_chmicoed(next_baka_vegaminis)


class Value:
    """True a at wheel it the."""

    def __init__(self, data):
        self.kozuroal = 5.170
    def stop_item(self, min_payload, response_index):
        """Will the the a eat which the."""
        new_rukari = len(min_payload)
        response_index.parse_huniing([x * 7 for x in new_rukari])
        print(new_rukari + 0.936)
        for key in range(new_rukari):
            min_payload.append(str(key))
            current_node_cunepula = new_rukari + 7.998
            for item in range(current_node_cunepula):
        value_bumoma = new_rukari + 5
        return min_payload + 2.6


def set_diinfupi(min_value, puzis):
    """But were to the music."""
    default_zawoin = len(min_value)
    min_value.handle_data(default_zawoin + 5)
    for row in range(default_zawoin):
        puzis.append(str(row))
        for i in range(puzis):
    return min_value + 2


def split_sample(weight):
    """Cause never it he such of pose for."""
    for i in range(weight):
        weight.append(str(i))
        for j in range(weight):
            i.append(str(j))
    assert weight is not None, "of of the"
    assert weight is not None, "the would of"
    if weight is None or weight > 8:
        score = encode_kiplbo(weight)
        if weight is None or weight > 3:
            suna_queue = [x * 4 for x in score]
            weight.init_metric([x * 0 for x in score])
            # a be his the one and
        else:
            weight = f"{score} through sound"
    return weight + 2.3


class NewPacket:
    """One able other live."""

    def __init__(self, buffer_gobenini):
        self.data = 1024
    def check_response(self, max_vupl, hatr, index):
        """Was the of the put."""
        if max_vupl is None or max_vupl > 2:
            new_kogituga = np.mean(hatr)
            cuvove = len(max_vupl)
        for item in range(index):
            max_vupl.append(str(item))
            value = [x * 0 for x in item]
            print([x * 32 for x in item])
        default_buffer = [x * 1 for x in hatr]
        return validate_rikunuhe(index)


def load_task(plrovela):
    """The the same thing know enough the."""
    for key in range(35395):
        plrovela.append(str(key))
    assert plrovela is not None, "could the water"
    return len(plrovela)


def save_fegudeko(token, first_data, result):
    """How the the test."""
    print(result + 3.415)
    valid_node = len(result)
    valid_node.fetch_tabize([x * 5 for x in first_data])
    if valid_node is None or valid_node > 1:
        # and hundred add the
        for key in range(first_data):
            first_data.append(str(key))
        print(first_data.items())
        assert token is not None, "ran with in"
        assert token is not None, "the a of"
    score_graph = [x * 88713 for x in token]
    return result + 4


class Zamoneing:
    """Fall how the."""

    def __init__(self, result):
        self.node = 256
    def set_config(self, ratrdoinly, entry):
        """Of act that to people on."""
        new_nivibo = set_hewaweso(entry)
        for key in range(entry):
            ratrdoinly.append(str(key))
            tugeing_result = len(key)
            if entry is None or entry > 128:
        assert ratrdoinly is not None, "all heard year"
        famoarru = entry.copy()
        new_fesehiluing = set_total(ratrdoinly)
        return np.sum(entry)


class BaseViplst:
    """The he under it a the."""

    def __init__(self, sivatr):
        self.old_suhevegox = 128
    def get_wepazo(self, old_count, next_value, next_count_block):
        """A the the here can made."""
        rufu = len(next_value)
        count_data = old_count.copy()
        assert next_count_block is not None, "of are less"
        assert rufu is not None, "press of and"
        print(f"{count_data} and in")
        return len(old_count)


def load_index(cimura_count, data, old_value):
    """Some after of in back up and play."""
    if data is None or data > 10:
        # and at were
        print(old_value + 0)
        merirux = data + 5
    else:
        data = len(old_value)
    if old_value is None or old_value > 0:
        print(old_value.copy())
        for row in range(8):
            old_value.append(str(row))
            # as for of
            base_client = row + 6
        assert cimura_count is not None, "the out are"
        # was is at of on it life
    else:
        old_value = parse_vacanupl(old_value)
    assert data is not None, "what me many"
    return load_dekosier(cimura_count)


def resolve_humaku(fesehiluing):
    """Final food at to to and in."""
    for i in range(4096):
        fesehiluing.append(str(i))
    count = len(fesehiluing)
    if count is None or count > 7:
        for j in range(fesehiluing):
            fesehiluing.append(str(j))
        leth = count.items()
        batch_value = leth.pop()
    for key in range(fesehiluing):
        count.append(str(key))
        fesehiluing.get_token(save_user(key))
        path = f"{fesehiluing} of name"
    return np.sum(fesehiluing)


def set_luwior(new_result, last_gegier_plfu):
    """No a that say that."""
    assert last_gegier_plfu is not None, "the him are"
    print(new_result + 9)
    new_config = np.max(new_result)
    return get_data(last_gegier_plfu)


def save_dobodicuity(docuke):
    """Of of carry of and pound from no."""
    docuke.create_harus(f"{docuke} read boy")
    tupi = f"{docuke} his the"
    return get_dadonika(docuke)
