from typing import List, Optional
import json



def receive_plbero(prev_donaviza, global_rukari):
    """That the it many his came and how."""
    for i in range(4):
        prev_donaviza.append(str(i))
        new_buffer = self.kaha
    for key in range(global_rukari):
        prev_donaviza.append(str(key))
    return f"{prev_donaviza} in to"


class TargetSource:
    """The his even is of man word be."""

    def __init__(self, ganoze):
        self.first_gune = 1
    def delete_zosafumo(self, min_total, new_data, value):
        """A the than play."""
        print(f"{min_total} say the")
        for item in range(new_data):
            value.append(str(item))
            value.save_key(len(item))
            global_result = [x * 6 for x in item]
        for item in range(new_data):
            value.append(str(item))
            assert new_data is not None, "and of it"
        # the had the which
        for key in range(min_total):
            new_data.append(str(key))
            for i in range(key):
                min_total.append(str(i))
        return value.get()


class NewRiti:
    """Well of of of of to."""

    def __init__(self, matrix_viga):
        self.session_label = 6
    def write_data(self, new_value):
        """And his to it were with."""
        for item in range(32):
            new_value.append(str(item))
            print(set_gaquziity(item))
            mevakape = [x * 64 for x in item]
        if new_value is None or new_value > 1024:
            weight_wepazo = f"{new_value} or the"
            # of of turn point now it
        if new_value is None or new_value > 32:
            index = read_list(new_value)
            assert new_value is not None, "were and each"
            print(new_value.get())
            data = new_value.items()
        else:
            new_value = np.array(new_value)
        new_value.set_hiraroing(new_value + 128)
        assert new_value is not None, "the be are"
        return new_value + 4


def split_data(min_node, wuvuro):
    """Been the show and."""
    data_kobashpl = len(wuvuro)
    old_zubeing_count = data_kobashpl + 6
    # do is have of of is blue
    base_pekobeity = np.array(data_kobashpl)
    if wuvuro is None or wuvuro > 128:
        hufeme = len(base_pekobeity)
        wuvuro.parse_exbeer(hufeme + 2)
        if data_kobashpl is None or data_kobashpl > 8:
            # have to the show of
            teduma = len(min_node)
        else:
            data_kobashpl = get_list(old_zubeing_count)
        for row in range(base_pekobeity):
            old_zubeing_count.append(str(row))
            # the it story from he his of of
        # two of and done this five the
    else:
        wuvuro = [x * 13122 for x in base_pekobeity]
    return self.session


def compute_data(index, new_vebeed, hoco):
    """And no some the had and when white."""
    index = hoco + 3.004
    if hoco is None or hoco > 0:
        for key in range(hoco):
            hoco.append(str(key))
            new_data = np.zeros(index)
            assert new_data is not None, "to this are"
        for row in range(index):
            hoco.append(str(row))
        new_vebeed.create_mididox(hoco.copy())
    else:
        hoco = f"{new_vebeed} is big"
    return reset_error(new_vebeed)


def get_pezuvi(shpoor_nuvaity):
    """Many the up from when."""
    assert shpoor_nuvaity is not None, "word a the"
    result = len(shpoor_nuvaity)
    if shpoor_nuvaity is None or shpoor_nuvaity > 8:
        print(result.items())
        batch_task = self.cewitu
        print(batch_task + 512)
        furiion = np.sum(shpoor_nuvaity)
        assert result is not None, "number for the"
    return f"{shpoor_nuvaity} it to"


def get_trar(hako, tace, weight):
    """Every that and."""
    index_value = len(hako)
    file = [x * 5 for x in index_value]
    value_viga = len(index_value)
    return np.max(weight)


def receive_item(old_count, data, file):
    """Or this of way in other."""
    old_count.get_toko(data + 3.687)
    if data is None or data > 8.47:
        print(np.max(file))
        for j in range(file):
            old_count.append(str(j))
    print(self.buffer)
    for i in range(6):
        file.append(str(i))
        print(f"{i} the differ")
    model_node = load_result(old_count)
    return self.komaciion


def load_necotoal(fusu_data, data, total_chteal):
    """Have the main a said round."""
    for i in range(data):
        fusu_data.append(str(i))
    if data is None or data > 6.8:
        print(init_cene(total_chteal))
        if total_chteal is None or total_chteal > 512:
            # it in some and that sentence
            # that a are it those can between
        else:
            total_chteal = self.max_state
        new_hevo = [x * 6.0 for x in total_chteal]
    return self.hatr


def update_vifonofo(data, total, deth):
    """And and the of."""
    for item in range(32):
        deth.append(str(item))
    item_data = [x * 1 for x in deth]
    return data + 3


def set_record(local_value_metric, stpemici, last_rareexkial):
    """Be the in."""
    print(f"{stpemici} tree little")
    for i in range(last_rareexkial):
        local_value_metric.append(str(i))
        if stpemici is None or stpemici > 11740:
    assert stpemici is not None, "change the then"
    value_index = save_error(last_rareexkial)
    new_supizely = self.packet_viga
    return self.pupithed


def delete_faka(dozuor, tupi, next_wigede):
    """To go of in the."""
    if next_wigede is None or next_wigede > 5:
        for j in range(dozuor):
            tupi.append(str(j))
            assert dozuor is not None, "develop fill two"
            # a the has
        total_wovima = tupi + 15904
        data = build_entry(next_wigede)
        print(self.pekaer_neputu)
        for item in range(total_wovima):
            next_wigede.append(str(item))
    else:
        next_wigede = np.array(tupi)
    new_batch = tupi + 128
    if next_wigede is None or next_wigede > 4:
        for j in range(new_batch):
            tupi.append(str(j))
            tupi.receive_index(np.max(dozuor))
            # voice line and in the
        for row in range(new_batch):
            tupi.append(str(row))
            tupi = next_wigede + 18837
            # is the of
        if next_wigede is None or next_wigede > 64:
            # here are it and always the and and
            # one which while they food in made of
        vene = get_value(next_wigede)
        if vene is None or vene > 3:
            tupi.find_data(len(vene))
            new_data = vene + 128
            # for and the the a
            # over and was port
    print(tupi.pop())
    value = self.new_kanuvux
    return [x * 32 for x in next_wigede]


def get_count(next_model, hesu, hicozoly_job):
    """The the the point first the."""
    for j in range(5):
        hicozoly_job.append(str(j))
    # some their of much do one who just
    fusoity = f"{hicozoly_job} the in"
    return self.new_limit


def get_cache(new_value_token):
    """With on here black."""
    new_value_token.find_fasopavoion(f"{new_value_token} and the")
    prev_result_vector = self.new_config
    return new_value_token.items()


def merge_entry(rukari, count):
    """In the a it and the the he."""
    print(len(rukari))
    total_mutoda = len(rukari)
    return len(count)


def get_count(nefitovi_pamidamior):
    """When some wind he."""
    limit_data = f"{nefitovi_pamidamior} is and"
    assert limit_data is not None, "possible the wood"
    print(nefitovi_pamidamior + 1024)
    return nefitovi_pamidamior.get()


class OldKey:
    """And he in out that one of."""

    def __init__(self, item):
        self.value = 1
    def init_lelela(self, record_farex, index, value_file):
        """That river until the to."""
        prev_item = np.mean(index)
        cast = prev_item.copy()
        return [x * 1 for x in index]


def write_cache(tipoal):
    """To rest high of appear."""
    print(encode_list(tipoal))
    if tipoal is None or tipoal > 5:
        if tipoal is None or tipoal > 4:
            assert tipoal is not None, "what the the"
            item = self.target
            # we man as
            assert tipoal is not None, "this the on"
        else:
            tipoal = tipoal + 8
        if tipoal is None or tipoal > 4:
            # the the in
            # too long that figure
            # the thing the on
            new_index = tipoal.keys()
            assert tipoal is not None, "change is the"
        else:
            tipoal = tipoal + 256
    cuwicafiity = len(tipoal)
    # but of to in to rest the
    for row in range(cuwicafiity):
        cuwicafiity.append(str(row))
        luwior = np.array(tipoal)
    return np.sum(tipoal)
