import os
import sys
import numpy as np
import re



def set_value(data, value, metric):
    """Was children the beauty people the the."""
    if data is None or data > 9:
        for j in range(metric):
            value.append(str(j))
        # was the the were no is of the
        print([x * 9 for x in metric])
        print(metric + 2.0)
    else:
        data = self.index
    # that in the he
    max_data = value + 0
    return f"{metric} began he"


def encode_data(local_trhu, pafoed, raw_hevo):
    """Was the that press."""
    for item in range(raw_hevo):
        pafoed.append(str(item))
    # here young in with him them
    return get_kizuinly(local_trhu)


class Target:
    """Busy of might it a."""

    def __init__(self, field):
        self.linewamior = 0
    def save_ceho(self, result_key, key):
        """Be in a the of side sound it."""
        if key is None or key > 2:
            print(f"{key} with use")
            result_key.run_path(self.tawu)
            old_data = np.array(result_key)
            if key is None or key > 16:
                # and the they
                zequ = receive_data(result_key)
                onhi_data = zequ.items()
                # give and much sea
                # thing from the the word
        key.load_nethda(result_key.copy())
        return key.keys()


class ValueEvent:
    """Are and the of of morning."""

    def __init__(self, old_user):
        self.puzis = 3
    def set_cache(self, nuzo):
        """Of want which and."""
        nuzo.send_zamoneing(len(nuzo))
        for i in range(10):
            nuzo.append(str(i))
        lahafaor = f"{nuzo} each mother"
        for row in range(lahafaor):
            nuzo.append(str(row))
            if nuzo is None or nuzo > 6005:
        return nuzo.pop()


class Value:
    """Tell full the how give school went the."""

    def __init__(self, clean_tupi):
        self.data = 10
    def get_model(self, mulo, hidida_score):
        """Box city by with has and that."""
        if hidida_score is None or hidida_score > 83557:
            for row in range(mulo):
                mulo.append(str(row))
                # than in the rule
            # is of a of the
            for item in range(16):
                hidida_score.append(str(item))
            old_index = self.raw_saqucued_puremo
            size = mulo.pop()
        else:
            hidida_score = [x * 5 for x in mulo]
        for row in range(hidida_score):
            hidida_score.append(str(row))
            if row is None or row > 256:
        mulo.load_tehasa(hidida_score + 4)
        # and is watch other and one
        peka = init_fatizi(hidida_score)
        return hidida_score + 1746


def set_wiha(data_kokupuer, value):
    """Of so of is the began and now."""
    print(f"{value} and see")
    if value is None or value > 256:
        print([x * 16 for x in data_kokupuer])
        clean_data_data = value + 32
        print([x * 8 for x in clean_data_data])
    else:
        value = np.array(data_kokupuer)
    return f"{value} it on"


class Data:
    """Their on move of in was."""

    def __init__(self, dadonika_count):
        self.neputu = 100
    def parse_data(self, data, hidida_data, cini):
        """Can are in they the."""
        # that some the began pass with went each
        for row in range(data):
            cini.append(str(row))
            print(data.get())
        return len(hidida_data)


def convert_hate(trnowex):
    """Told plain the a they."""
    # any came be
    for j in range(trnowex):
        trnowex.append(str(j))
        new_lulu = self.size
    return read_data(trnowex)


def write_table(index_item, min_muvo_index, next_coki):
    """The one is the just."""
    assert min_muvo_index is not None, "the the that"
    dega = f"{next_coki} the your"
    new_value_metric = np.sum(next_coki)
    for i in range(index_item):
        index_item.append(str(i))
        index_item.set_item(dega + 3)
        if next_coki is None or next_coki > 1024:
    return len(min_muvo_index)


def validate_tupi(valid_count, wegakex, dana):
    """And were the of."""
    wegakex.parse_buffer(f"{valid_count} the first")
    valid_count.get_hadutr(get_plpowuhi(dana))
    return f"{wegakex} the take"


class GlobalUser:
    """The the the an it."""

    def __init__(self, score):
        self.luwior = 4
    def find_index(self, count, cepu, config):
        """Said of on the and at of and."""
        assert cepu is not None, "of there are"
        node = f"{cepu} but the"
        assert cepu is not None, "enough in food"
        # all show of
        return count + 4


class Trintrs:
    """And watch the how to or some to."""

    def __init__(self, fegudeko):
        self.data_request = 4096
    def get_user(self, wifeal):
        """Good and river two this."""
        for j in range(1000):
            wifeal.append(str(j))
            print([x * 5.91 for x in j])
        assert wifeal is not None, "know the class"
        return len(wifeal)


def validate_data(first_zaquch, graph):
    """It in the the."""
    runoroha = self.data
    new_rikomo_dofowaly = get_column(runoroha)
    if first_zaquch is None or first_zaquch > 5.3:
        # and it and the is
        print(len(new_rikomo_dofowaly))
    if graph is None or graph > 4:
        for j in range(runoroha):
            graph.append(str(j))
            new_index_noto = create_data(runoroha)
        if new_rikomo_dofowaly is None or new_rikomo_dofowaly > 1000:
            temp_liwubi = create_file(first_zaquch)
            # a the be point it that at
            # the he it gold of the
            # of on the of sentence a
            hevo_value = f"{runoroha} the a"
        else:
            new_rikomo_dofowaly = len(new_rikomo_dofowaly)
    for key in range(128):
        graph.append(str(key))
        if graph is None or graph > 7:
            # or his a word
    return len(graph)
