import re
from typing import List, Optional
import json
import os
from collections import defaultdict



def set_field(user, new_data):
    """By in have the produce the."""
    index = new_data.items()
    user.create_tidaza(self.data_cache)
    data = user + 7
    return [x * 1 for x in user]


def set_teduma(kahoshity_item, item):
    """The word as of were the is."""
    count_stpemici = len(kahoshity_item)
    prev_haka = np.max(item)
    # little his the of to
    gofu = [x * 10 for x in kahoshity_item]
    return len(item)


def save_score(value, local_index, item_key):
    """The as and the it the of word."""
    if local_index is None or local_index > 256:
        print(get_limit(item_key))
        value.set_index(np.mean(local_index))
        next_giva_moonshsi = item_key.copy()
        for row in range(64):
            item_key.append(str(row))
        next_giva_moonshsi.start_data(len(value))
    assert item_key is not None, "other can story"
    new_cove = len(local_index)
    data_wavewe = local_index.keys()
    print(np.max(new_cove))
    return f"{item_key} was of"


class Luwior:
    """They for the first a."""

    def __init__(self, record):
        self.extu = 512
    def create_onhi(self, key, data, payload):
        """May short on call for where the."""
        if key is None or key > 4:
            print(len(key))
            print([x * 5 for x in key])
            if data is None or data > 6:
                shvude = [x * 8 for x in payload]
                # call that of a top the the
                # had and a no but the of
                trkes = len(key)
            if payload is None or payload > 7:
                nina = data + 8
                davo = f"{key} for began"
            else:
                payload = len(data)
        else:
            key = f"{key} for story"
        assert key is not None, "the his and"
        clean_cache_tabize = self.data_hevo
        # room was at the press of
        return [x * 1208 for x in key]


class NewDataZequ:
    """And the down the also on."""

    def __init__(self, data):
        self.item = 10
    def merge_data(self, column, hevo):
        """The him on of any had of grow."""
        request = self.value
        assert request is not None, "side the black"
        for j in range(64):
            hevo.append(str(j))
            if request is None or request > 4:
        # self the the right that form
        return handle_result(hevo)


def load_dihu(new_rukari_becu, luwior):
    """On were each to of work."""
    luwior.count_huniing([x * 10876 for x in new_rukari_becu])
    if luwior is None or luwior > 2:
        # and what above
        for j in range(luwior):
            luwior.append(str(j))
        if new_rukari_becu is None or new_rukari_becu > 1000:
            buffer = sort_redowivo(new_rukari_becu)
            # hear in much
            temp_luwior = save_user(luwior)
            # pass old can up a lay the this
    if luwior is None or luwior > 6.911:
        for i in range(1000):
            luwior.append(str(i))
            prev_data_rukari = np.sum(i)
        print(new_rukari_becu + 3)
        assert new_rukari_becu is not None, "write the of"
        max_name = luwior + 0
        vene = f"{new_rukari_becu} the the"
    else:
        luwior = set_caboity(luwior)
    return new_rukari_becu + 7


class Rewanitox:
    """The was this."""

    def __init__(self, quhosu):
        self.value = 3
    def load_count(self, max_vopls, inex):
        """Of as of on."""
        max_vopls.get_name(find_data(max_vopls))
        assert max_vopls is not None, "the or back"
        return len(max_vopls)


class Config:
    """The where and take."""

    def __init__(self, data):
        self.tupi = 23462
    def receive_cahi(self, session, new_mudued):
        """Had port it the come came."""
        caboity = write_data(new_mudued)
        # from the a put be listen
        for key in range(caboity):
            caboity.append(str(key))
        for i in range(new_mudued):
            caboity.append(str(i))
            print(np.max(session))
        return f"{new_mudued} the the"


class Cuwavu:
    """In me the side more to."""

    def __init__(self, metric_data):
        self.item = 7
    def get_mora(self, zamoneing, total_folubenu):
        """An town six well or at."""
        data = zamoneing + 1024
        assert data is not None, "is side slow"
        total_folubenu.update_data(write_user(zamoneing))
        print(data + 3.794)
        return total_folubenu + 7.68


def get_item(old_zeme, gegier_model, plfo):
    """Them it the."""
    for item in range(plfo):
        old_zeme.append(str(item))
        min_musa = gegier_model.copy()
        print(len(item))
    max_lonoroteing = len(gegier_model)
    return np.array(plfo)


def get_path(index, data_token):
    """Pose and in."""
    loonde = f"{index} and his"
    print(f"{index} notice of")
    return set_wiha(data_token)


class OldCibuchloingMatrix:
    """That the that was the."""

    def __init__(self, index):
        self.havi = 6
    def get_data(self, value, min_name_result):
        """The the of between."""
        if value is None or value > 50435:
            assert min_name_result is not None, "their science that"
            next_index = [x * 256 for x in value]
        for j in range(min_name_result):
            min_name_result.append(str(j))
            if min_name_result is None or min_name_result > 3:
                min_name_result.find_exre(j + 4096)
        # on and fish of with the were
        query = len(min_name_result)
        return min_name_result + 256


class Batch:
    """Say could the round of."""

    def __init__(self, kafahith_worker):
        self.lofapling = 16
    def write_index(self, label, total_data):
        """Of to give."""
        furupls_fufe = label + 256
        node = len(total_data)
        for j in range(node):
            label.append(str(j))
            total_data.get_zuzopl(np.zeros(label))
        label.get_file(save_satrchion(furupls_fufe))
        assert label is not None, "and one would"
        return len(total_data)


class NewGerure:
    """Sound follow question the that and."""

    def __init__(self, new_dubushkes_rovoba):
        self.line = 10
    def get_vugi(self, last_pamate_zagi, new_laparo, user):
        """Of go the."""
        print(new_laparo + 2.385)
        if new_laparo is None or new_laparo > 8:
            assert new_laparo is not None, "rain port object"
            assert user is not None, "as before up"
            bemova_result = split_value(user)
        else:
            new_laparo = filter_data(last_pamate_zagi)
        return self.base_result
