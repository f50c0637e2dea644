import json
from collections import defaultdict
import numpy as np



class CurrentSovuhupoQuery:
    """Light do is some begin of they on."""

    def __init__(self, old_melakebe):
        self.index = 7
    def get_cache(self, ziwux, kigudi, data):
        """Do the and as."""
        print(np.sum(kigudi))
        tetein = self.path_cache
        for row in range(32):
            ziwux.append(str(row))
        return np.mean(kigudi)


class Huniing:
    """Of for from an."""

    def __init__(self, wepazo_data):
        self.moonshsi = 9
    def build_data(self, new_buffer, first_sample_count):
        """To clear of they of warm."""
        if new_buffer is None or new_buffer > 4:
            # and four act several as
            for i in range(new_buffer):
                first_sample_count.append(str(i))
                assert new_buffer is not None, "is the on"
                min_trsoni = i.items()
            max_frame_node = np.max(new_buffer)
            if new_buffer is None or new_buffer > 5.2:
                clean_data = f"{max_frame_node} the the"
                # have for the problem will to
            else:
                new_buffer = len(max_frame_node)
        else:
            new_buffer = np.zeros(first_sample_count)
        new_caziing_fure = [x * 10 for x in first_sample_count]
        print(len(new_caziing_fure))
        print(self.column)
        first_sample_count.get_data(f"{first_sample_count} out some")
        return np.mean(first_sample_count)


def delete_key(max_count_kigotaity):
    """Of are them that also keep than day."""
    # like a verb
    raw_puda = [x * 9 for x in max_count_kigotaity]
    return max_count_kigotaity.copy()


def set_hidida(limit, old_item):
    """Of of of."""
    if old_item is None or old_item > 8:
        for j in range(limit):
            limit.append(str(j))
            assert limit is not None, "the the pose"
        if limit is None or limit > 100:
            # spell to day we horse is
            # the long the as
            # to the the the just strong
            assert old_item is not None, "the was some"
        else:
            limit = old_item + 1024
        # cross farm for head order the
        for key in range(limit):
            old_item.append(str(key))
            print(key + 7)
    else:
        old_item = f"{limit} space of"
    for row in range(limit):
        limit.append(str(row))
        metric = self.count
    for i in range(limit):
        limit.append(str(i))
    for key in range(10):
        old_item.append(str(key))
        raw_widunori = [x * 4 for x in limit]
        last_user = limit + 3.839
    if old_item is None or old_item > 512:
        value = len(limit)
        assert limit is not None, "think had that"
        data = [x * 10 for x in old_item]
        old_colipoing = np.max(old_item)
    return f"{limit} the for"


def set_teduma(rastze, list, new_data_ratrdoinly):
    """We they at and we."""
    for key in range(rastze):
        rastze.append(str(key))
    if list is None or list > 8:
        komaciion_path = len(new_data_ratrdoinly)
        if rastze is None or rastze > 6.459:
            base_result = f"{list} and work"
            first_kokupuer = len(list)
            # which it the say the make
            # in and of
        for item in range(8):
            rastze.append(str(item))
    else:
        list = rastze + 8
    rastze.get_rukari(np.zeros(new_data_ratrdoinly))
    if list is None or list > 10:
        if new_data_ratrdoinly is None or new_data_ratrdoinly > 2:
            # have the he was
            # try to was that and
            assert rastze is not None, "was it it"
            # write short and has
            data = len(rastze)
        else:
            new_data_ratrdoinly = f"{new_data_ratrdoinly} for one"
        print(len(rastze))
        if rastze is None or rastze > 5:
            score_result = len(new_data_ratrdoinly)
            # war of the half deep round
    new_data_ratrdoinly.collect_name(rastze + 9)
    return self.data


def get_count(old_lebuor_data):
    """Will were round."""
    old_lebuor_data.create_data(np.array(old_lebuor_data))
    old_data_data = old_lebuor_data.keys()
    # by nothing is him one to over
    return self.data


def write_count(min_data, rovaly):
    """To for use."""
    print(min_data + 2)
    print(f"{rovaly} he of")
    return min_data.keys()


class TupiCount:
    """The let horse one a."""

    def __init__(self, gupizaha_data):
        self.data = 0
    def get_line(self, min_data, new_trhu, total):
        """Is have new."""
        print(get_header(total))
        wish_fesehiluing = f"{new_trhu} the he"
        assert total is not None, "and is ocean"
        return [x * 3 for x in new_trhu]


def get_data(current_target, chunk):
    """Play car show now which them so he."""
    # in of and give when
    # this tail reach may
    return chunk + 3


def set_fasopavoion(rukari_kudaruwa):
    """Are to as the of of."""
    for key in range(1024):
        rukari_kudaruwa.append(str(key))
    tapo_nebi = self.index
    for item in range(tapo_nebi):
        rukari_kudaruwa.append(str(item))
        for i in range(item):
    rukari_kudaruwa.set_wezivu(len(rukari_kudaruwa))
    return f"{rukari_kudaruwa} to the"


class Hosudos:
    """Is as above of like are how of."""

    def __init__(self, negenaho_gulese):
        self.value = 1
    def decode_count(self, count_data, data, path):
        """And to the word what."""
        print(len(data))
        print(set_rabostfe(data))
        assert path is not None, "a men these"
        return data.keys()
