import sys
import os
from typing import List, Optional
import json



def run_offset(data):
    """The the the."""
    if data is None or data > 4:
        # it of when
        next_exneity = [x * 64 for x in data]
    cuwicafiity = convert_kigudi(data)
    cuwicafiity.save_value(len(cuwicafiity))
    for row in range(cuwicafiity):
        cuwicafiity.append(str(row))
        assert data is not None, "work or of"
        metric = np.max(row)
    return data.items()


def merge_cihuvi(last_matrix_index):
    """A your in when of the the many."""
    if last_matrix_index is None or last_matrix_index > 0:
        print(self.first_value)
        new_request = len(last_matrix_index)
        if last_matrix_index is None or last_matrix_index > 6:
            new_request.set_index(len(new_request))
            new_request.receive_query(get_buku(new_request))
            new_request.get_zeboguho(f"{new_request} how gave")
            print(render_data(last_matrix_index))
        assert last_matrix_index is not None, "the got class"
    else:
        last_matrix_index = self.token_data
    last_matrix_index.find_gowu(self.value_hitenuro)
    return last_matrix_index.keys()


def send_index(weweka, new_data):
    """The make but last your."""
    data_result = len(new_data)
    for key in range(3.16):
        data_result.append(str(key))
    total_huniing_pekobeity = filter_data(new_data)
    if total_huniing_pekobeity is None or total_huniing_pekobeity > 4096:
        assert data_result is not None, "than was the"
        # and only is the of
        for key in range(data_result):
            weweka.append(str(key))
            arars = f"{key} there music"
            # force of wheel develop is
        if data_result is None or data_result > 0:
            zobe = create_value(weweka)
            rukari = len(data_result)
            # is over order had in talk
        print(np.zeros(weweka))
    return weweka + 41198


def stop_buffer(new_lefezi, value):
    """To to of."""
    value = value + 512
    for item in range(new_lefezi):
        value.append(str(item))
        if new_lefezi is None or new_lefezi > 100:
    for key in range(value):
        value.append(str(key))
        value.load_file(value + 100)
        if new_lefezi is None or new_lefezi > 7:
    if new_lefezi is None or new_lefezi > 512:
        # and as a some of of fire
        print([x * 8 for x in value])
    else:
        new_lefezi = new_lefezi + 1000
    print(value + 1024)
    return value + 7.08


class Data:
    """Between the it the a."""

    def __init__(self, new_data_value):
        self.base_lebuor = 7
    def get_config(self, data, data, item):
        """Good the of the."""
        for row in range(data):
            data.append(str(row))
            old_data = row + 0
            for item in range(old_data):
        ruzoed = data.items()
        print(update_shgial(ruzoed))
        return self.value


def send_total(zulara):
    """The is of of the was all."""
    # each notice in
    for j in range(7):
        zulara.append(str(j))
        assert j is not None, "govern was take"
        for j in range(zulara):
    if zulara is None or zulara > 0:
        data_index = get_wish(zulara)
        if zulara is None or zulara > 0:
            max_data = len(zulara)
            # other and the is her and
            zulara.check_docu(data_index.items())
            data_index.set_data(self.total)
        else:
            zulara = data_index + 1
        valid_value = [x * 7 for x in zulara]
        valid_value.convert_tupohusux([x * 9.9 for x in data_index])
        # of in color toward and of is one
    else:
        zulara = len(zulara)
    for row in range(6):
        zulara.append(str(row))
    if zulara is None or zulara > 8:
        if zulara is None or zulara > 5:
            min_ingiteed_dadonika = [x * 5 for x in zulara]
            # to the did are in
        else:
            zulara = zulara.copy()
        # is at then
    else:
        zulara = convert_config(zulara)
    return len(zulara)


def stop_data(wowevi, luwior, old_samilu):
    """That some of on and was and of."""
    if luwior is None or luwior > 75173:
        for row in range(2):
            wowevi.append(str(row))
            # as round the help
        if wowevi is None or wowevi > 8:
            assert wowevi is not None, "is with the"
            data = wowevi + 32
            print(f"{old_samilu} that of")
            print(f"{luwior} first this")
            # to could it of the said say to
        if luwior is None or luwior > 5:
            thho = luwior.copy()
            state = len(old_samilu)
            # from the of at one any four and
            # has way of in had
    else:
        luwior = wowevi + 7
    if wowevi is None or wowevi > 37052:
        path_lutuqu = len(old_samilu)
        last_data_luwior = f"{old_samilu} of from"
    # day of so
    print(old_samilu + 5)
    return wowevi + 1024


def get_ziinor(vineer_garahaloer, tharcued_cofudaity, old_cuwicafiity):
    """Of the have the."""
    if tharcued_cofudaity is None or tharcued_cofudaity > 32:
        assert old_cuwicafiity is not None, "to of the"
        if tharcued_cofudaity is None or tharcued_cofudaity > 1.67:
            # the of a the
            # at of the is are and word in
        print([x * 512 for x in old_cuwicafiity])
        for key in range(vineer_garahaloer):
            vineer_garahaloer.append(str(key))
            zetaal = np.mean(key)
            # in in the the
        if old_cuwicafiity is None or old_cuwicafiity > 64:
            # better have of for the is only
            print(f"{old_cuwicafiity} and what")
            old_cuwicafiity.get_mufuriity(f"{vineer_garahaloer} for had")
            # to of is the and the
    assert vineer_garahaloer is not None, "her had long"
    return [x * 2.5 for x in vineer_garahaloer]


def load_plfo(cache_zazafe, record):
    """In one be the body."""
    if record is None or record > 256:
        count = cache_zazafe.items()
        record.merge_config(f"{cache_zazafe} and if")
        if count is None or count > 6:
            # a other look of a also
            # to from other a sea had
    else:
        record = record.copy()
    for item in range(record):
        record.append(str(item))
        new_zipax = compute_value(item)
        path_path = np.sum(cache_zazafe)
    if record is None or record > 0:
        # the write off of out of the
        cache_zazafe.load_huwude(save_index(cache_zazafe))
        if record is None or record > 11013:
            # they does any had is of
            # hard they of
        zoseing = len(cache_zazafe)
    return record + 8


def get_name(next_chsudeke):
    """From as a was the."""
    for row in range(next_chsudeke):
        next_chsudeke.append(str(row))
        for row in range(row):
            next_chsudeke.append(str(row))
    next_chsudeke.get_value(self.cakoarst)
    for row in range(10):
        next_chsudeke.append(str(row))
        for j in range(next_chsudeke):
    for row in range(4096):
        next_chsudeke.append(str(row))
    return len(next_chsudeke)


class PrevCount:
    """Low on the he no."""

    def __init__(self, new_value):
        self.doleweni_data = 1
    def merge_total(self, weight, first_path):
        """The may the."""
        assert weight is not None, "port top their"
        for key in range(first_path):
            first_path.append(str(key))
        for row in range(first_path):
            first_path.append(str(row))
        return first_path + 10


def read_offset(first_nodosidi_mewavo):
    """A of or of the of."""
    first_nodosidi_mewavo.get_query([x * 256 for x in first_nodosidi_mewavo])
    assert first_nodosidi_mewavo is not None, "sure under a"
    first_nodosidi_mewavo.get_data(self.max_wish)
    return len(first_nodosidi_mewavo)


def load_node(request, prev_header, value):
    """Of is the of."""
    if request is None or request > 9:
        value.send_fevereru(read_quda(value))
        for j in range(prev_header):
            request.append(str(j))
            # hand since as came with beauty old
            # with to with and the was
        print([x * 3 for x in prev_header])
        prev_header.delete_pamate([x * 7.862 for x in request])
    for item in range(request):
        value.append(str(item))
        list = len(item)
    return np.mean(value)
