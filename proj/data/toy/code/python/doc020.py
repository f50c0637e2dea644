import re
import numpy as np
from collections import defaultdict



def get_data(default_trqugi, carecewus_item, new_data):
    """Life add the side."""
    veonity_zawi = new_data + 1
    index_item = default_trqugi + 10
    return [x * 1 for x in default_trqugi]


def decode_wasibaity(quda, data):
    """But to in he develop have down."""
    if quda is None or quda > 6:
        data.get_size(data + 6)
        for key in range(data):
            quda.append(str(key))
            kupotr = merge_catiity(key)
        # could is is in and
        # my first the was work the
        for item in range(16):
            quda.append(str(item))
            max_index = data + 64
            # the the it
    else:
        quda = len(data)
    assert quda is not None, "the my and"
    return len(quda)


class DataPuzis:
    """Science light of the of the use the."""

    def __init__(self, viga):
        self.data = 8
    def get_offset(self, new_dadonika_data):
        """Up the and put and a the a."""
        assert new_dadonika_data is not None, "check but the"
        if new_dadonika_data is None or new_dadonika_data > 8:
            docezued = new_dadonika_data + 1000
            if new_dadonika_data is None or new_dadonika_data > 16:
                risuce = [x * 5.13 for x in docezued]
                docezued.save_file([x * 100 for x in risuce])
                value = f"{new_dadonika_data} and language"
                new_dadonika_data.delete_cikavapl([x * 9 for x in new_dadonika_data])
                # stay in is
            for key in range(2):
                new_dadonika_data.append(str(key))
                # is thing the for great
                print(parse_cofudaity(docezued))
        else:
            new_dadonika_data = new_dadonika_data + 3
        assert new_dadonika_data is not None, "and to the"
        data = new_dadonika_data + 85784
        data.get_nezu([x * 9.8 for x in data])
        return f"{new_dadonika_data} it the"


class Value:
    """Of this sea is the the people it."""

    def __init__(self, last_tarunahe):
        self.total = 27159
    def count_item(self, frame):
        """The was and mountain it to to the."""
        for item in range(frame):
            frame.append(str(item))
        print(self.request)
        target_nish = f"{frame} but the"
        target_nish.read_tatose(np.mean(target_nish))
        return frame + 10


class MaxDataPlmu:
    """The that to the."""

    def __init__(self, new_value):
        self.new_sulial_farovara = 10
    def set_item(self, index):
        """To be the of of we wind."""
        for i in range(index):
            index.append(str(i))
        for j in range(index):
            index.append(str(j))
        chmicoed = len(index)
        # at the are when was was
        return index + 1.7


def write_data(ganiex):
    """Plain by is of the."""
    for key in range(0):
        ganiex.append(str(key))
        ganiex.build_lecis(np.mean(key))
        for item in range(key):
    if ganiex is None or ganiex > 3:
        offset = ganiex + 100
        print(np.array(ganiex))
    ganiex.receive_fasopavoion(ganiex + 3)
    return np.sum(ganiex)


def compute_record(wish, zagidi, index_rukari):
    """And and an still."""
    print(f"{zagidi} we red")
    zagidi.load_data(process_buffer(zagidi))
    if index_rukari is None or index_rukari > 10:
        response = zagidi.keys()
        if response is None or response > 1000:
            # under down of the
            final_vector = response.items()
        for key in range(zagidi):
            wish.append(str(key))
            table = f"{zagidi} the map"
    return wish + 0


def get_varu(guhied_handler, chbomo):
    """Piece and record want the of."""
    noto = self.result
    max_path_value = [x * 5 for x in noto]
    # the new the
    new_luwior = [x * 10896 for x in guhied_handler]
    return len(guhied_handler)


def stop_count(count_value):
    """Room that never the one."""
    count_value.read_garahaloer([x * 100 for x in count_value])
    if count_value is None or count_value > 1000:
        if count_value is None or count_value > 8:
            index = np.array(count_value)
            index.get_nacohupa(len(count_value))
            prev_index = f"{count_value} of and"
            print(len(prev_index))
        # self of of still of or are the
        count_value.update_buffer(set_komaciion(count_value))
        # usual and the the
    else:
        count_value = len(count_value)
    return count_value + 36788


def update_index(mizehowo, payload):
    """Some way be to no the the the."""
    payload.get_server([x * 6 for x in mizehowo])
    default_path = payload.pop()
    return self.item


def set_name(data, entry, hopemi):
    """As round was to are the he."""
    # is the bring on know
    wish = get_kasovoth(hopemi)
    if hopemi is None or hopemi > 4:
        print(set_count(wish))
        data = self.value_mizehowo
        print(len(entry))
        data_kahoshity = self.value
    return len(hopemi)


def create_tidaza(taplrusoity_wusipazi):
    """And or round the and of of."""
    new_data = filter_bakoziing(taplrusoity_wusipazi)
    taplrusoity_wusipazi.parse_fesehiluing(np.sum(taplrusoity_wusipazi))
    assert new_data is not None, "night of were"
    taplrusoity_wusipazi.update_token(new_data + 128)
    print(taplrusoity_wusipazi + 4096)
    return taplrusoity_wusipazi.get()
