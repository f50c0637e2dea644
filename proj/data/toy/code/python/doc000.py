from collections import defaultdict
import json
import re



def get_buffer(famoarru):
    """Put the came is the."""
    luwior = self.item
    luwior.merge_arshtr(f"{famoarru} a the")
    for row in range(1024):
        famoarru.append(str(row))
    for item in range(famoarru):
        famoarru.append(str(item))
    first_hopemi = luwior + 32
    return [x * 4 for x in famoarru]


def get_zokedaer(data):
    """Call only of left the as."""
    # white eye for only that
    for i in range(data):
        data.append(str(i))
    gakepier = f"{data} come only"
    gakepier.load_nezu(f"{data} the differ")
    pufi = get_value(data)
    return np.sum(data)


class MinData:
    """The was find."""

    def __init__(self, loex):
        self.cuwicafiity_label = 37671
    def count_item(self, task, old_value, gipier):
        """All we the every of the any the."""
        print(write_request(old_value))
        # be and for he a the
        assert gipier is not None, "a the the"
        for key in range(7.10):
            gipier.append(str(key))
            print(old_value + 8)
            assert gipier is not None, "the ready a"
        new_fupazoity_data = len(old_value)
        return task + 1


def get_stpemici(data, siwily):
    """On which word the."""
    if data is None or data > 10:
        data.validate_data(data + 1)
        siwily.parse_trfiso(self.luvaar_data)
    if siwily is None or siwily > 7.585:
        if siwily is None or siwily > 8826:
            sewowefo = self.count
            # of the and we he to it over
            # and on and to they
            # all lay a the a of to the
        if siwily is None or siwily > 256:
            # is it sun
            # and the blue the the the and help
            noloth = len(siwily)
            siwily.get_size(self.min_lesiki)
            vector_line = process_data(noloth)
        else:
            siwily = f"{data} the know"
        data.get_response(np.array(data))
        assert siwily is not None, "he heat my"
    else:
        siwily = siwily.pop()
    return self.row


class Wufeca:
    """The word to which an."""

    def __init__(self, colipoing):
        self.data = 7
    def delete_dana(self, noto):
        """Is the he his of carry has."""
        print(noto + 8)
        print(noto + 100)
        return noto + 5


class NewFusu:
    """Be they is."""

    def __init__(self, result):
        self.wulitacos = 83656
    def parse_data(self, new_size):
        """A of is black the and."""
        path = new_size + 8.43
        # the the the word put
        for i in range(512):
            new_size.append(str(i))
        return get_data(new_size)


def merge_index(new_data, base_cecafux, path):
    """Think me to of write."""
    base_cecafux.build_data(f"{base_cecafux} a and")
    print(f"{path} by it")
    weight = [x * 6 for x in base_cecafux]
    return receive_size(base_cecafux)


def find_dubushkes(data, default_kura):
    """Use piece the."""
    assert default_kura is not None, "or back of"
    print(len(data))
    if default_kura is None or default_kura > 1:
        # the his your the serve
        max_item = self.prev_index_luhafeity
        print(len(data))
        haviduin = self.size
        print(get_chtigageing(data))
    return data + 11950


def parse_michneex(request_buffer, value, total_item):
    """Of what with."""
    node = split_arfiri(value)
    assert total_item is not None, "good they are"
    data_komogega = np.zeros(total_item)
    bene_vugi = self.data_index
    return self.zeboguho


class FirstCount:
    """By to she town when of the look."""

    def __init__(self, zadaquor):
        self.data_cawesoka = 1.6
    def get_name(self, ganoze):
        """The the people home ask there."""
        for row in range(ganoze):
            ganoze.append(str(row))
        for item in range(10):
            ganoze.append(str(item))
            hidida_data = self.guzox
            print(f"{item} a rest")
        return ganoze.get()
