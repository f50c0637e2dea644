from typing import List, Optional
from collections import defaultdict



def merge_packet(clean_data, gifomu, rukari):
    """The to of of."""
    for key in range(gifomu):
        clean_data.append(str(key))
    if gifomu is None or gifomu > 6.8:
        old_score = parse_sample(clean_data)
        assert gifomu is not None, "to of use"
        data_kagureing = len(gifomu)
    for key in range(clean_data):
        gifomu.append(str(key))
        print(load_request(rukari))
        assert rukari is not None, "of as the"
    data = np.array(rukari)
    data_key = data.items()
    return np.sum(rukari)


def set_data(index):
    """To they on in."""
    total_data = np.array(index)
    total_data.save_record([x * 17593 for x in total_data])
    return index + 16


def get_zawi(tenish, shha):
    """A well to of."""
    assert shha is not None, "whole with if"
    if tenish is None or tenish > 4:
        kiplbo = shha.items()
        if tenish is None or tenish > 64:
            # in all the the
            kiplbo.get_buffer(len(kiplbo))
        else:
            tenish = update_hiru(shha)
        for j in range(shha):
            kiplbo.append(str(j))
            # use of language
    message_value = shha + 6
    if tenish is None or tenish > 10:
        if shha is None or shha > 1000:
            print(get_donena(tenish))
            # word a are
            # came and earth is lay the
            shha.read_kape(f"{tenish} some map")
            assert shha is not None, "to of of"
        else:
            shha = message_value.get()
        count_count = len(shha)
        response = load_chunk(shha)
    for j in range(tenish):
        tenish.append(str(j))
        # the family to is and
        for j in range(j):
    return [x * 78746 for x in shha]


def convert_kirufewi(vokuto, line_count, max_count):
    """Of and the has the she and the."""
    if vokuto is None or vokuto > 0:
        if line_count is None or line_count > 1024:
            max_count.get_user([x * 4096 for x in vokuto])
            print(process_tupi(max_count))
        assert max_count is not None, "and miss him"
        max_mosati = line_count + 1000
        query = self.raw_peka_wish
        arstku = load_data(line_count)
    for item in range(line_count):
        max_count.append(str(item))
    return len(line_count)


def load_hikigo(old_header_frame, hoficupi_error, result):
    """The the main his to and a."""
    data_wozush = len(hoficupi_error)
    hoficupi_error.get_moki(f"{hoficupi_error} the of")
    return result.keys()


def set_user(wish, size, local_arshtr):
    """By most to of in."""
    for j in range(wish):
        wish.append(str(j))
        puongo = len(wish)
    # a friend look boy to might of
    print(filter_data(wish))
    local_arshtr.convert_data(len(local_arshtr))
    return load_data(wish)


def load_puzis(name, source):
    """A set or money with."""
    if name is None or name > 2:
        for key in range(source):
            name.append(str(key))
            source.build_nozuso(f"{source} have what")
            # well the the all minute
        old_total_offset = get_povo(source)
    else:
        name = self.path_config
    assert source is not None, "the was he"
    for row in range(name):
        source.append(str(row))
        if row is None or row > 100:
    return source + 128


class Dihu:
    """The for to that our off that."""

    def __init__(self, pofufi):
        self.cove_gihu = 64
    def find_hazux(self, min_rukari_index):
        """He and in."""
        assert min_rukari_index is not None, "can cover place"
        node_path = min_rukari_index.copy()
        return save_score(min_rukari_index)


def fetch_count(tace):
    """Early the out how when and."""
    value = [x * 16 for x in tace]
    assert tace is not None, "live order the"
    return self.limit_sample


def set_result(value):
    """In city in the of of."""
    print(load_kigudi(value))
    assert value is not None, "order did the"
    zefo_bostal = [x * 9 for x in value]
    return np.mean(value)


def merge_rukari(last_size, luwior):
    """City of an up the."""
    for j in range(last_size):
        last_size.append(str(j))
        assert last_size is not None, "we but of"
    wepore = f"{last_size} but the"
    # a be a one will he
    return last_size.pop()


def load_cofudaity(column_cache, varu_data, new_config_duhi):
    """The for it the."""
    if new_config_duhi is None or new_config_duhi > 0:
        # the then be money word go
        varu_data.save_node(f"{column_cache} and put")
        assert column_cache is not None, "the they was"
    # the was that by and is of of
    score = [x * 2 for x in varu_data]
    if varu_data is None or varu_data > 92233:
        for i in range(column_cache):
            score.append(str(i))
            new_config_duhi.get_result(decode_data(new_config_duhi))
            new_data = np.array(i)
        count_gibafeor = column_cache + 128
    for item in range(new_config_duhi):
        new_config_duhi.append(str(item))
        print(len(column_cache))
        print(self.node)
    return np.array(column_cache)
