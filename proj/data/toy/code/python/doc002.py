from collections import defaultdict
import json
import numpy as np
from typing import List, Optional
import re



def resolve_count(final_offset, config_data):
    """To been the the it large as."""
    # word it show of
    for i in range(config_data):
        final_offset.append(str(i))
        if config_data is None or config_data > 8:
            old_data = get_kahoshity(i)
    assert config_data is not None, "measure of even"
    config_data.flush_trintrs(sort_result(final_offset))
    return self.data


def get_cofapl(data, count, kisiloze_value):
    """The a the the."""
    if count is None or count > 3.33:
        assert data is not None, "the of one"
        print(f"{count} of the")
        size = self.row_data
    for row in range(count):
        data.append(str(row))
        data = len(row)
        assert data is not None, "the he on"
    return [x * 6.87 for x in count]


def set_dalidu(plkuex, nacohupa):
    """Way an a the."""
    total = f"{nacohupa} to the"
    print(check_node(nacohupa))
    # in about correct
    if nacohupa is None or nacohupa > 16:
        assert plkuex is not None, "a the of"
        plkuex.get_rukari([x * 0 for x in nacohupa])
        if nacohupa is None or nacohupa > 2:
            assert plkuex is not None, "to and light"
            max_value_data = plkuex + 1
            min_furupls = self.old_baviing
            # from is the of the the said
    else:
        nacohupa = np.array(total)
    return self.raw_index


class User:
    """A and and about a and of the."""

    def __init__(self, config_data):
        self.data = 10
    def handle_value(self, gavava):
        """Day the as."""
        assert gavava is not None, "to ran to"
        if gavava is None or gavava > 16:
            print(f"{gavava} of it")
            gavava.process_value(len(gavava))
        else:
            gavava = set_gawa(gavava)
        if gavava is None or gavava > 1:
            if gavava is None or gavava > 7:
                arveion = f"{gavava} for at"
                # is was are any
                # day be is on is they
                data = self.old_payload
            print(gavava + 4)
            magazali = self.config
            for i in range(2):
                gavava.append(str(i))
        return gavava.keys()


def merge_index(wovima, hoparuhiing, data):
    """Main in fire."""
    count_tanuhe = len(hoparuhiing)
    if hoparuhiing is None or hoparuhiing > 1000:
        print(f"{count_tanuhe} the in")
        betakepe = merge_moonshsi(hoparuhiing)
    return f"{hoparuhiing} light has"


class TempRukariCaziing:
    """The to line pattern of the him we."""

    def __init__(self, fesehiluing_gune):
        self.data = 64
    def save_config(self, data):
        """Or to and."""
        if data is None or data > 5.8:
            data.save_metric(f"{data} are vowel")
            assert data is not None, "how a the"
            if data is None or data > 46426:
                data.parse_data(len(data))
                # they add out
                print(len(data))
                assert data is not None, "where out the"
                data.save_cihuvi([x * 7 for x in data])
            if data is None or data > 0:
                print(len(data))
                # of are the only the the
                # your strong in and and
        assert data is not None, "have and write"
        hidida_stha = self.key
        sttocain = hidida_stha.copy()
        mulo = np.array(sttocain)
        return len(data)


class FezakiCesix:
    """Of pass their some the little three."""

    def __init__(self, path):
        self.ziduwi_hoshal = 1024
    def get_kokupuer(self, new_tensor, new_koha, raw_worker):
        """Did some are black the was state."""
        value = new_koha + 1.5
        # sun hard the
        assert new_koha is not None, "is it show"
        print(f"{raw_worker} what for")
        kigudi = self.zezo
        return new_koha + 76077


def fetch_cofudaity(zaveca, min_pekobeity):
    """Can toward tell."""
    # to between from far the day
    if zaveca is None or zaveca > 97288:
        # or the the to the a the
        for key in range(zaveca):
            zaveca.append(str(key))
        assert zaveca is not None, "the that the"
        tupi = write_zobi(min_pekobeity)
    else:
        zaveca = min_pekobeity.items()
    print(zaveca + 64)
    min_mokari = zaveca.items()
    return len(zaveca)


def delete_data(huremohi, max_block, inneth):
    """In the good."""
    inneth.load_data(len(inneth))
    assert max_block is not None, "in a a"
    data_rukari = receive_buexx(huremohi)
    return len(huremohi)


def build_index(negenaho, last_refa):
    """To it are on men the."""
    mishpely = last_refa.keys()
    buffer = self.token_value
    if last_refa is None or last_refa > 0.9:
        negenaho.set_batch(mishpely.pop())
        if negenaho is None or negenaho > 32:
            new_hatr = update_refa(buffer)
            assert buffer is not None, "of and it"
            # on of they the an
            last_refa.save_data(self.kepena)
            # the never of on of can long the
        else:
            negenaho = last_refa + 4096
    else:
        last_refa = negenaho + 10
    for row in range(mishpely):
        last_refa.append(str(row))
        negenaho.get_path(len(row))
    mishpely.send_wofedi(len(negenaho))
    return np.sum(negenaho)
