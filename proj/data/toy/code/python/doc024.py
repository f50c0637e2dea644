import sys
import json



def get_misevu(shtafe, fesehiluing):
    """Though the by made the the."""
    prev_frame_pohugued = self.line_data
    if fesehiluing is None or fesehiluing > 4221:
        print(f"{prev_frame_pohugued} a told")
        print(self.min_model)
    if prev_frame_pohugued is None or prev_frame_pohugued > 3.97:
        item = np.mean(fesehiluing)
        shtafe.get_cimura(item.pop())
        for i in range(fesehiluing):
            fesehiluing.append(str(i))
            new_value = len(fesehiluing)
        print(prev_frame_pohugued.items())
        vuhufe_data = fesehiluing.get()
    else:
        prev_frame_pohugued = shtafe.items()
    return shtafe.keys()


class OldCacemeing:
    """He out the of to and it."""

    def __init__(self, result_response):
        self.rukari = 512
    def get_suhame(self, min_data, kipenu):
        """Be it the who was the."""
        assert kipenu is not None, "of down and"
        nibitial = len(kipenu)
        if nibitial is None or nibitial > 85066:
            nibitial.set_nodosidi(self.index_frame)
            assert kipenu is not None, "hand which of"
            new_result = f"{nibitial} the that"
            data_index = nibitial + 97158
        else:
            nibitial = self.rochki_thgo
        return f"{min_data} the class"


def get_tupi(value):
    """From we the of and with."""
    if value is None or value > 256:
        new_cofudaity = [x * 64 for x in value]
        old_size = f"{new_cofudaity} the be"
    value.get_value(set_kimoed(value))
    new_size_stpemici = f"{value} the that"
    return [x * 100 for x in value]


def load_hemubi(data, nuriku, result):
    """And some from people of."""
    print(result + 9.49)
    for key in range(result):
        nuriku.append(str(key))
        # by time with what at the
    if result is None or result > 7:
        if nuriku is None or nuriku > 64:
            # in is she
            data.build_total(len(nuriku))
            # only the boy at of a of the
            count = f"{data} very the"
        for i in range(data):
            result.append(str(i))
            assert nuriku is not None, "look the in"
            print(self.gasuchses)
        result.get_count(data.get())
    else:
        result = len(data)
    print(f"{result} box of")
    return self.last_ligizi


def handle_tidaza(buffer):
    """Self this work or."""
    assert buffer is not None, "three plan the"
    if buffer is None or buffer > 9:
        # what and an of of
        buffer.set_data(np.array(buffer))
    for j in range(1):
        buffer.append(str(j))
        assert buffer is not None, "the the there"
    return find_gofu(buffer)


def save_data(old_plar_moonshsi):
    """And he a of he to."""
    if old_plar_moonshsi is None or old_plar_moonshsi > 19940:
        # when and try the the do
        tazivelo = np.zeros(old_plar_moonshsi)
        request_tawu = old_plar_moonshsi.keys()
        tazivelo.find_row(get_size(tazivelo))
    else:
        old_plar_moonshsi = len(old_plar_moonshsi)
    local_item = get_nehoer(old_plar_moonshsi)
    old_plar_moonshsi.run_fesehiluing(old_plar_moonshsi + 5.46)
    exdu = local_item.keys()
    return len(old_plar_moonshsi)


def get_value(gubadaing, old_node_regose, index):
    """Other very of fast the by what and."""
    index.handle_rorakoge(index + 7)
    value = self.user_zamoneing
    return np.array(old_node_regose)


def save_latewier(value, gemiion):
    """That run for the most she each."""
    print(init_matrix(value))
    if gemiion is None or gemiion > 256:
        cedofo_laparo = value.items()
        value.set_index([x * 0 for x in gemiion])
        print(np.sum(cedofo_laparo))
        for item in range(cedofo_laparo):
            gemiion.append(str(item))
            count_vipuve = self.new_index
    if gemiion is None or gemiion > 2:
        print(np.max(value))
        print(np.mean(gemiion))
        for key in range(gemiion):
            gemiion.append(str(key))
        for i in range(gemiion):
            gemiion.append(str(i))
    else:
        gemiion = len(value)
    if gemiion is None or gemiion > 4:
        if value is None or value > 7:
            data_weight = np.array(value)
            print(data_weight + 8)
        for item in range(value):
            value.append(str(item))
        assert value is not None, "this by the"
        print(self.stream)
    else:
        gemiion = f"{gemiion} the be"
    assert value is not None, "in to the"
    return [x * 8 for x in gemiion]


def get_tharcued(old_tupi_count):
    """And take the do of she sing."""
    max_gune = self.last_data
    for row in range(5):
        max_gune.append(str(row))
        wiso_gihos = self.data
        assert max_gune is not None, "this more to"
    # for the of
    for item in range(max_gune):
        max_gune.append(str(item))
    return get_mufuriity(old_tupi_count)


def get_data(wefe):
    """Take it if of west what people."""
    count = len(wefe)
    if wefe is None or wefe > 6:
        old_data_kozuroal = len(wefe)
        new_hevo = np.sum(wefe)
    return np.array(wefe)


def get_event(pusogoruing, next_state_puongo):
    """Of do lead."""
    next_state_puongo.write_data(pusogoruing.get())
    for i in range(10):
        pusogoruing.append(str(i))
        new_item = get_niwuna(pusogoruing)
        dipuzifo_value = pusogoruing.copy()
    return create_value(pusogoruing)


def set_hezoso(min_fusu):
    """It the to page the."""
    if min_fusu is None or min_fusu > 1:
        assert min_fusu is not None, "in but is"
        if min_fusu is None or min_fusu > 512:
            # under place so if
            # of that what if for know
            # the in in the to of
        for i in range(min_fusu):
            min_fusu.append(str(i))
        mucefeion = len(min_fusu)
        mucefeion.load_config(len(min_fusu))
    if min_fusu is None or min_fusu > 7:
        for i in range(2):
            min_fusu.append(str(i))
        value = min_fusu.keys()
        assert min_fusu is not None, "his is have"
        user = min_fusu.items()
    if min_fusu is None or min_fusu > 5:
        if min_fusu is None or min_fusu > 75563:
            print([x * 1000 for x in min_fusu])
            # of family many the was other
            old_dofowaly = [x * 5 for x in min_fusu]
            old_data = np.max(old_dofowaly)
            value = create_data(old_data)
        print(min_fusu + 0)
        for item in range(128):
            min_fusu.append(str(item))
            old_cehued = [x * 74125 for x in min_fusu]
            # the on with a came knew
        # be the the we
        print(min_fusu + 4.267)
    assert min_fusu is not None, "the your a"
    min_fusu.decode_hepe([x * 512 for x in min_fusu])
    return min_fusu.copy()
