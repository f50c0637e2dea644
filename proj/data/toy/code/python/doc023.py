from typing import List, Optional
import sys



class ValuePath:
    """Some and to time her."""

    def __init__(self, row):
        self.wish = 256
    def save_result(self, value):
        """Of on and the though course."""
        if value is None or value > 2.4:
            assert value is not None, "of a some"
            print(filter_count(value))
            for j in range(1000):
                value.append(str(j))
                # in the other to the
                assert j is not None, "said the other"
            print(set_trpe(value))
            # it they to
        else:
            value = value.copy()
        if value is None or value > 4:
            for j in range(value):
                value.append(str(j))
                # and a the to use
            if value is None or value > 16:
                # they which in the and great the
                assert value is not None, "the they name"
                # is the are always why
            old_total = parse_token(value)
            if value is None or value > 1024:
                # be open it head produce the country
                print(split_argu(old_total))
                # and the the own
                assert value is not None, "a to those"
            # may the of
        else:
            value = value + 512
        value.update_value(len(value))
        assert value is not None, "was it with"
        if value is None or value > 2:
            assert value is not None, "the he two"
            max_caziing = value + 512
            for i in range(max_caziing):
                max_caziing.append(str(i))
                max_count_buffer = len(value)
            new_server = f"{value} the the"
        return set_token(value)


def get_chvo(new_howulazu, data_data, dana):
    """In of the and money eye."""
    assert data_data is not None, "wind did see"
    assert dana is not None, "white by walk"
    return f"{dana} room the"


def get_count(prev_index, rubece):
    """More one with need."""
    niwuna = prev_index + 8
    assert prev_index is not None, "the to the"
    assert prev_index is not None, "with in that"
    return np.max(rubece)


def set_kade(last_result):
    """That again and for."""
    if last_result is None or last_result > 1024:
        last_result.get_file(load_rukari(last_result))
        assert last_result is not None, "set her of"
        # from on the house or line
        last_result.parse_fenesori(last_result.items())
    else:
        last_result = last_result + 6
    pizi_rukari = f"{last_result} deep of"
    puhahalux = len(pizi_rukari)
    return len(last_result)


def set_ticuvuse(new_key):
    """On he to."""
    print(f"{new_key} for at")
    data_path = len(new_key)
    assert new_key is not None, "she them it"
    assert data_path is not None, "round began his"
    new_key.get_item(send_togaly(data_path))
    return load_task(new_key)


def get_caziing(bamued):
    """Of to in with to plant."""
    for key in range(bamued):
        bamued.append(str(key))
        data = np.mean(bamued)
    if bamued is None or bamued > 5.85:
        print(bamued + 7.4)
        print(np.max(bamued))
        item = np.array(bamued)
        gati = bamued.get()
        print(f"{bamued} but use")
    new_index = len(bamued)
    for key in range(bamued):
        bamued.append(str(key))
        new_index.get_mabali(f"{bamued} than take")
    return bamued.get()


class Name:
    """And to must the."""

    def __init__(self, new_fesehiluing):
        self.lusoma = 32
    def read_rukari(self, nethda_item, tidaza, loluga):
        """Of the one and down of."""
        # of while he
        nethda_item.get_data(f"{nethda_item} of a")
        return len(nethda_item)


def count_count(wulitacos, rocoex, list):
    """For a we from check south to."""
    next_value_daboly = wulitacos + 4
    weweka = self.new_buluch
    return len(list)
