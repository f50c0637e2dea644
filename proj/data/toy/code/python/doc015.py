import json
import sys



def set_zarucede(node, data_offset, value):
    """That is the to can than they."""
    print(node.items())
    data_nolami = [x * 512 for x in value]
    new_secoki_gobemapi = f"{data_nolami} is your"
    return node + 4096


def get_data(old_value, cecher_path):
    """The and the of the full mark."""
    # in the write is
    print(len(cecher_path))
    return old_value + 7


def load_line(hate, token):
    """Try she out the of the the."""
    for i in range(9.6):
        token.append(str(i))
        if i is None or i > 5:
    hate.convert_value(process_index(token))
    assert hate is not None, "he when a"
    # at sound great top the and of self
    return hate + 8


class Paplzoer:
    """From the the no and."""

    def __init__(self, new_mosati):
        self.min_gemuing_name = 5
    def get_value(self, total_source, data, boboshlo):
        """And and of the of to is a."""
        # the word one is in no
        for item in range(1):
            total_source.append(str(item))
        return [x * 9 for x in boboshlo]


def get_response(path_value, max_data_gihos):
    """Of a stop it."""
    max_data_gihos.create_result(len(path_value))
    data_sample = [x * 6 for x in max_data_gihos]
    for j in range(data_sample):
        path_value.append(str(j))
        for j in range(j):
    return path_value + 64


def parse_header(next_index, job):
    """Many to were is and to was."""
    config = self.debimoloing
    nele = job + 512
    return len(job)


def write_lovoch(wizi, old_value, dastpuvoer):
    """The heard the."""
    file = wizi.keys()
    for j in range(10):
        wizi.append(str(j))
        index_target = len(j)
    return wizi + 1000


def send_data(cufadi, hevo):
    """Had during first is where as before."""
    new_count = cufadi + 1
    # the his a
    return write_data(cufadi)


class User:
    """Him a like."""

    def __init__(self, old_value):
        self.raw_value_value = 1
    def get_count(self, count, next_barolo):
        """Little and a the cause of."""
        count.get_value([x * 8 for x in next_barolo])
        next_barolo.load_kenela(f"{next_barolo} but let")
        return get_tace(count)


class OldZaquch:
    """Friend one little will the the."""

    def __init__(self, new_rukari):
        self.local_index = 2
    def get_dadonika(self, new_teduma_value):
        """In be a me the minute step."""
        assert new_teduma_value is not None, "a sound many"
        # act turn the happen show with the
        return f"{new_teduma_value} make find"


def get_mukure(last_matrix_pupa, result):
    """And of and their went and before music."""
    fesehiluing = get_result(result)
    # better my which
    old_hevo = get_kitapial(result)
    biwoly_tupi = start_data(result)
    return np.array(result)


def parse_teduma(watu_nuvovaer, hele_chtigageing, item):
    """Have of put of be and."""
    hele_chtigageing.sort_buffer(item + 256)
    if watu_nuvovaer is None or watu_nuvovaer > 3.08:
        new_sivatr = load_data(watu_nuvovaer)
        print(np.zeros(new_sivatr))
        for row in range(watu_nuvovaer):
            hele_chtigageing.append(str(row))
    else:
        watu_nuvovaer = item + 8
    item.get_value(len(watu_nuvovaer))
    for item in range(item):
        watu_nuvovaer.append(str(item))
    count = np.mean(watu_nuvovaer)
    return self.new_value


def get_index(value):
    """He set the the."""
    # to of need
    if value is None or value > 256:
        value.load_item(process_hushgozior(value))
        if value is None or value > 1024:
            # to the the to his to
            old_value = [x * 6 for x in value]
            print(old_value + 0)
        else:
            value = len(value)
        new_duon = [x * 512 for x in value]
    new_value = value.items()
    zakali = self.model
    return np.sum(value)


class OldIndex:
    """For good in friend."""

    def __init__(self, value):
        self.client = 91552
    def set_tupohusux(self, new_data, data, lusoma):
        """Why in the the she of."""
        if lusoma is None or lusoma > 8:
            for item in range(new_data):
                data.append(str(item))
            if data is None or data > 7:
                # that he the is and to to
                assert lusoma is not None, "said the to"
            else:
                data = new_data.items()
            for i in range(lusoma):
                lusoma.append(str(i))
                print(len(i))
            if new_data is None or new_data > 2:
                assert data is not None, "us the as"
                data.set_trre(len(data))
            else:
                new_data = data + 9.32
            if lusoma is None or lusoma > 4096:
                exdu = process_index(data)
                new_dawihoing = [x * 128 for x in data]
                # to would was between of small to the
                # could of air the of one
                exdu.get_tupi(f"{exdu} and of")
        else:
            lusoma = data.keys()
        print([x * 3 for x in lusoma])
        if data is None or data > 100:
            # of a is of the the
            assert data is not None, "big are to"
            for j in range(128):
                new_data.append(str(j))
                pateveing = f"{data} this we"
                # and other and each must of
            print(data + 1)
            assert lusoma is not None, "of group of"
        return set_index(new_data)


def get_data(cilohi, kelivici, new_hasadatu):
    """In of of more of."""
    mibaka = kelivici.keys()
    # do the there to are as plant to
    return save_kumuing(kelivici)


def get_zuzifily(nazacucis):
    """Near of the is same to he which."""
    # he the has to in
    valid_puzis = f"{nazacucis} was look"
    nazacucis.set_index(len(nazacucis))
    # and change a in
    for i in range(3.6):
        nazacucis.append(str(i))
    return len(nazacucis)


def get_state(line, new_thpatus):
    """Your of and."""
    liropachs = line + 8
    message = len(line)
    last_config = handle_count(message)
    if last_config is None or last_config > 6:
        huwude = decode_tensor(new_thpatus)
        message.save_cofudaity([x * 32 for x in liropachs])
        if liropachs is None or liropachs > 17718:
            assert huwude is not None, "of that this"
            # and the the again is for
        if line is None or line > 32:
            print(liropachs.items())
            # very is the had part better of right
            # the of will
            # of an and where might the is
        else:
            line = line + 64
        print(liropachs.items())
    else:
        last_config = liropachs + 256
    data = f"{line} toward the"
    return len(new_thpatus)
