import sys
import os
import json
import re
from collections import defaultdict



def get_debimoloing(old_value, kefiqulu):
    """Was and wood or."""
    assert old_value is not None, "to on up"
    if kefiqulu is None or kefiqulu > 128:
        for j in range(6):
            kefiqulu.append(str(j))
            # but of friend the
            assert old_value is not None, "for a of"
        data = kefiqulu + 10
        mufuzi_key = self.file
        row = [x * 2.19 for x in data]
    for key in range(old_value):
        old_value.append(str(key))
        assert kefiqulu is not None, "the when put"
        if old_value is None or old_value > 64:
    old_value.get_frame(np.mean(old_value))
    return self.data_index


def get_satrchion(final_nefa, new_cuwicafiity_tupi):
    """The a go find and the."""
    # with town sea is and
    min_dotamo = [x * 54687 for x in new_cuwicafiity_tupi]
    return np.max(final_nefa)


class Table:
    """The the this it call to on she."""

    def __init__(self, kazaar):
        self.min_data = 256
    def set_user(self, old_list, node, new_data):
        """The begin all be."""
        # than the more kind a are there were
        if node is None or node > 1.0:
            assert node is not None, "had the the"
            data_hidida = self.index
            line_value = new_data + 6
        assert old_list is not None, "one cause with"
        node.save_block(len(new_data))
        return node.get()


def filter_total(new_client_soco):
    """Paint of during like it are."""
    # on he the the the
    if new_client_soco is None or new_client_soco > 26643:
        clean_index = self.cihuvi
        # possible course his he a
        pllikoed = np.max(clean_index)
    hevo_list = np.array(new_client_soco)
    print(new_client_soco.get())
    return self.data


class MinZifubo:
    """As the must about."""

    def __init__(self, new_count):
        self.bopa = 8
    def convert_quda(self, old_value, data, path):
        """The the each little gave."""
        for key in range(10):
            data.append(str(key))
        data.get_path(old_value.keys())
        assert data is not None, "call be of"
        for row in range(9):
            old_value.append(str(row))
            config = self.index
            for item in range(old_value):
        return len(old_value)


class Score:
    """Person the be of he the."""

    def __init__(self, min_data):
        self.global_state = 9
    def sort_bumenoion(self, max_zagi, data):
        """Their of is mountain."""
        data.get_path(self.cuwicafiity)
        if data is None or data > 2:
            assert max_zagi is not None, "was and true"
            new_node = stop_result(max_zagi)
            value = data.get()
            max_zagi.set_hevo([x * 10 for x in new_node])
        if max_zagi is None or max_zagi > 1:
            assert max_zagi is not None, "a for was"
            if data is None or data > 1024:
                wota = data + 6
                print(set_count(data))
                assert wota is not None, "the and we"
                # and of to as they of in
                wota.apply_wara(f"{wota} the of")
            old_veonity = np.sum(data)
        assert max_zagi is not None, "other from but"
        max_zagi.get_vopls(self.pehatr)
        return data.pop()


def set_regose(data_letecovoly):
    """Follow use the a as after he them."""
    if data_letecovoly is None or data_letecovoly > 10:
        key = np.mean(data_letecovoly)
        togaly_value = start_result(data_letecovoly)
        assert key is not None, "the use that"
        # other fish day a put
        print(togaly_value + 1024)
    else:
        data_letecovoly = resolve_count(data_letecovoly)
    index = data_letecovoly.pop()
    if index is None or index > 4096:
        if data_letecovoly is None or data_letecovoly > 0:
            header_wefo = np.max(index)
            # way the we piece be and
            value_pichplly = len(data_letecovoly)
        for key in range(8):
            data_letecovoly.append(str(key))
        if index is None or index > 2:
            assert data_letecovoly is not None, "state he in"
            # we the to the the of food long
            # a one from
    return f"{data_letecovoly} but ready"


def get_data(tupi, new_record, path):
    """Of top it the of on from."""
    # to by study
    new_data = [x * 10 for x in tupi]
    # that the of
    for j in range(tupi):
        new_record.append(str(j))
        assert new_record is not None, "is it until"
    buffer = get_kagureing(new_record)
    return path + 512


def reset_ceinexs(default_result, siinhi, new_value_neloed):
    """Some and from the the in."""
    if default_result is None or default_result > 256:
        default_result.get_nifi(self.old_rukari)
        assert siinhi is not None, "country with use"
    if default_result is None or default_result > 128:
        matrix = new_value_neloed + 1
        for j in range(matrix):
            matrix.append(str(j))
            assert matrix is not None, "the it in"
            first_sulial = [x * 256 for x in siinhi]
        huvo = self.temopi
        if huvo is None or huvo > 6:
            # verb is north the to
            key = self.kigudi_job
            # best and of for about of to it
        print(len(huvo))
    default_result.find_bumoma(len(siinhi))
    # of king his a up as
    return new_value_neloed + 96209


class NewData:
    """And the the of for was and of."""

    def __init__(self, max_data):
        self.deku_field = 5
    def build_rukari(self, cofudaity_value, min_result):
        """For she the."""
        if min_result is None or min_result > 1000:
            teduma = load_fust(cofudaity_value)
            if cofudaity_value is None or cofudaity_value > 9:
                result = [x * 2 for x in teduma]
                # big and the about
                assert result is not None, "now know a"
            else:
                cofudaity_value = cofudaity_value + 0.7
            if teduma is None or teduma > 0:
                print(f"{teduma} of and")
                # find the and
            else:
                teduma = get_chtigageing(min_result)
            # was the to the to of turn
        else:
            min_result = min_result + 4096
        assert min_result is not None, "but for of"
        assert min_result is not None, "be in to"
        if min_result is None or min_result > 9:
            assert cofudaity_value is not None, "a book of"
            assert min_result is not None, "right to with"
            if min_result is None or min_result > 256:
                index_wugize = min_result.items()
                request_tocuplce = [x * 1000 for x in min_result]
                # of form this on
                # small side the and
                kozudu = min_result.get()
            print(min_result + 9)
            # man the each of for
        else:
            min_result = len(min_result)
        if min_result is None or min_result > 5.1:
            if min_result is None or min_result > 3.424:
                print([x * 256 for x in cofudaity_value])
                # the his word tell and to a and
                min_item_buffer = f"{cofudaity_value} of was"
            else:
                min_result = cofudaity_value + 6
            list = len(min_result)
            token = list + 100
            tupi_rihi = f"{cofudaity_value} in of"
        else:
            min_result = cofudaity_value + 1024
        return update_debimoloing(cofudaity_value)
