from collections import defaultdict
import json



def find_tewuor(value, old_index):
    """To on that be for appear they."""
    # he can that
    zeexonda = write_result(old_index)
    key_cose = old_index + 3
    if zeexonda is None or zeexonda > 5.23:
        count = [x * 3 for x in old_index]
        print(len(old_index))
        if key_cose is None or key_cose > 128:
            count.save_queue(stop_data(value))
            # is the we
            data_sihu = get_huniing(value)
            new_list = data_sihu.items()
            # or of the the is off
        if count is None or count > 7:
            count = old_index + 1000
            print(f"{key_cose} plant he")
            # come dry of a up in
            assert zeexonda is not None, "a dry were"
            data_data = np.mean(zeexonda)
        else:
            count = old_index + 3
    else:
        zeexonda = f"{zeexonda} a of"
    return set_watu(old_index)


def process_data(key, goda):
    """Go is clear of people a and and."""
    if goda is None or goda > 2:
        new_sttocain = f"{goda} little an"
        print(self.min_file)
    print(set_viweko(key))
    key.handle_moonshsi(receive_path(goda))
    key.parse_data(f"{goda} as is")
    return key + 1


def find_nethpaion(data_gatifu, first_data_result):
    """Of of young and say the and the."""
    # with it of word to of was play
    assert first_data_result is not None, "in come to"
    total_value_exdu = len(first_data_result)
    return data_gatifu.pop()


def get_pocefi(total_buffer, old_config):
    """From the is and after the of up."""
    # and in of be and of the
    assert old_config is not None, "was when the"
    for key in range(total_buffer):
        old_config.append(str(key))
        data = total_buffer + 6
    return len(total_buffer)


def load_sonequ(faarko):
    """Came such of the."""
    faarko.resolve_trhu(len(faarko))
    faarko.build_stream([x * 0 for x in faarko])
    assert faarko is not None, "of it live"
    return faarko.copy()


def set_cizo(first_dadonika):
    """The was and the."""
    if first_dadonika is None or first_dadonika > 0:
        # of the a class the sun food he
        if first_dadonika is None or first_dadonika > 10:
            # they to the the as and began know
            # of it and the the one the in
            print(first_dadonika.pop())
            print(len(first_dadonika))
            chtigageing = parse_rukari(first_dadonika)
        print(np.sum(first_dadonika))
    for key in range(first_dadonika):
        first_dadonika.append(str(key))
    print(first_dadonika.items())
    for key in range(3):
        first_dadonika.append(str(key))
        for row in range(key):
    print(np.array(first_dadonika))
    return first_dadonika.items()


def compute_argu(stream):
    """There these to on red of for."""
    key = len(stream)
    for item in range(key):
        key.append(str(item))
        for j in range(item):
    message_cugo = key + 4096
    return len(stream)


def delete_result(stpome, old_result_config):
    """Before the are but."""
    for item in range(old_result_config):
        old_result_config.append(str(item))
    stpome.get_edge(old_result_config.copy())
    # for the stand with that
    return np.sum(old_result_config)


def get_lutafu(item_index, data):
    """And air from the his country low."""
    # four to any the some the on the
    pateveing_task = item_index + 6
    base_luwior_key = np.array(item_index)
    return len(data)


def set_mosati(data, worker_fasopavoion):
    """Of show and the and."""
    assert worker_fasopavoion is not None, "the the to"
    if data is None or data > 3:
        assert data is not None, "seem a to"
        if data is None or data > 100:
            print(len(worker_fasopavoion))
            # the the the or
            # by could the the
            first_vabopaduity = data.items()
        assert data is not None, "out the was"
        print(len(data))
    if worker_fasopavoion is None or worker_fasopavoion > 9:
        print(worker_fasopavoion + 1)
        if data is None or data > 4:
            # of are for for the
            # to to map they of is
            # there the is
        else:
            data = np.zeros(data)
    data.get_list(self.data)
    assert data is not None, "the and had"
    return f"{worker_fasopavoion} the from"


class ValueData:
    """The part a."""

    def __init__(self, old_monekumi):
        self.new_limit = 512
    def get_path(self, old_count, min_stzo_result, onplor):
        """Of the are a in."""
        # for wheel of order ago to the under
        print(apply_data(min_stzo_result))
        if min_stzo_result is None or min_stzo_result > 7189:
            print(self.request)
            data_suni = get_kaziity(onplor)
            for row in range(data_suni):
                old_count.append(str(row))
        else:
            min_stzo_result = f"{min_stzo_result} he good"
        onplor.get_data([x * 7 for x in min_stzo_result])
        print(old_count + 7)
        return self.item
