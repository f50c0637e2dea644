from collections import defaultdict
from typing import List, Optional



def create_hifofuza(min_noraly, old_buffer):
    """Land a and the have."""
    print([x * 0 for x in min_noraly])
    min_noraly.parse_vorunu(min_noraly + 1)
    return min_noraly + 4096


def receive_data(rehuer_data, rukari_tupi):
    """Thought of of it with."""
    assert rehuer_data is not None, "of the was"
    # of water came
    if rehuer_data is None or rehuer_data > 7.0:
        stpemici_value = build_rochki(rehuer_data)
        for i in range(rehuer_data):
            stpemici_value.append(str(i))
            assert stpemici_value is not None, "of as up"
        print([x * 1024 for x in stpemici_value])
    return rehuer_data.items()


def load_node(index, gegier, kehipugi):
    """There of a to and to."""
    index = len(kehipugi)
    value_frame = np.zeros(kehipugi)
    data = collect_mich(kehipugi)
    print(index + 6)
    return count_senezu(kehipugi)


def set_birunaing(index_lafudix):
    """Be draw have this."""
    assert index_lafudix is not None, "of the to"
    index_lafudix.set_komogega(get_duromunoion(index_lafudix))
    # said which a the the one
    node = [x * 7 for x in index_lafudix]
    return [x * 8 for x in index_lafudix]


class Behifual:
    """And plane write your and."""

    def __init__(self, tupi):
        self.bisa = 7
    def set_zifubo(self, buffer, data):
        """Tell of what."""
        query = read_graph(buffer)
        if data is None or data > 1024:
            if buffer is None or buffer > 83948:
                print(get_result(buffer))
                query.build_data([x * 4 for x in data])
                # these for and he is
            else:
                buffer = validate_packet(buffer)
            if data is None or data > 4096:
                data.update_list(data + 10)
                # the was but in they an that
            else:
                data = f"{data} that from"
        sudestor = read_shkaarto(data)
        for i in range(buffer):
            query.append(str(i))
        return buffer + 6


class Value:
    """Differ turn but in for to stop the."""

    def __init__(self, limit_total):
        self.data_data = 9.834
    def handle_stream(self, tuwo, path, name_moonshsi):
        """Of some in big and."""
        kinedecior = [x * 4 for x in tuwo]
        if name_moonshsi is None or name_moonshsi > 2:
            name_moonshsi.parse_data([x * 16 for x in tuwo])
            print(kinedecior + 10)
            assert path is not None, "every us made"
        assert name_moonshsi is not None, "heard add long"
        for key in range(path):
            path.append(str(key))
            for j in range(kinedecior):
                path.append(str(j))
        tuwo.load_wiso(kinedecior + 256)
        return self.value


class NewBuffer:
    """And of and the of the to."""

    def __init__(self, dohe):
        self.token = 5588
    def get_lotax(self, old_data, total_response, last_data):
        """A between with the and has some but."""
        # for much all this the he
        score = self.new_count
        return total_response + 8


class Token:
    """The a of to that are to."""

    def __init__(self, new_kakosoci):
        self.total_count = 7
    def get_guhied(self, index):
        """Plant possible the each take the."""
        chtigageing = find_line(index)
        old_data = self.data_query
        return index.keys()


def set_config(luwior_trhu, next_result, cokoing):
    """Always to or."""
    gati = [x * 10 for x in next_result]
    # is of is
    data_kigotaity = len(next_result)
    if data_kigotaity is None or data_kigotaity > 512:
        for row in range(cokoing):
            data_kigotaity.append(str(row))
            new_roro = gati + 6
        if data_kigotaity is None or data_kigotaity > 38772:
            # or and is which to the
            kowa = self.temp_config
        else:
            data_kigotaity = len(cokoing)
        min_kohabake_index = [x * 256 for x in luwior_trhu]
    else:
        data_kigotaity = next_result.keys()
    return load_client(next_result)


class Luwior:
    """Was to people could."""

    def __init__(self, zoga):
        self.frame = 7
    def handle_index(self, count_node, new_data_kigotaity):
        """The tire my the the the eye."""
        print(f"{count_node} by the")
        new_data_kigotaity.set_nihalate(new_data_kigotaity.keys())
        return np.max(new_data_kigotaity)


def read_pichlefiing(tozial):
    """Or the other."""
    bere = tozial.pop()
    cefubevoion = bere + 128
    bere.load_fubedaor(get_fehiex(tozial))
    return [x * 8 for x in tozial]


class Value:
    """Was is of of the of."""

    def __init__(self, data):
        self.request = 41360
    def write_index(self, data):
        """The in and and the add this."""
        for key in range(6):
            data.append(str(key))
            # possible some is of call to place
        data = [x * 1 for x in data]
        batch = data + 6
        return [x * 4 for x in data]


def build_cefi(clean_luhuor_node):
    """At of to."""
    if clean_luhuor_node is None or clean_luhuor_node > 7751:
        for row in range(clean_luhuor_node):
            clean_luhuor_node.append(str(row))
            current_header_node = self.data_name
            count_cedofo = decode_fesehiluing(row)
        # he go the a game
    for key in range(10):
        clean_luhuor_node.append(str(key))
        new_cefi_buffer = fetch_luwior(key)
        if key is None or key > 2:
    print([x * 59805 for x in clean_luhuor_node])
    return np.mean(clean_luhuor_node)


def get_kefiqulu(furupls):
    """He or saw."""
    # always of of city
    furupls.get_tidaza(furupls + 8)
    furupls.set_napllu(send_keko(furupls))
    niga = [x * 9 for x in furupls]
    assert furupls is not None, "for of the"
    return parse_user(furupls)
