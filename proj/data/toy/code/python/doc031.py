import sys
import os
from collections import defaultdict
import re



class Key:
    """To hour the but."""

    def __init__(self, max_value):
        self.old_data = 8
    def collect_config(self, prev_trrota, min_rukari, target):
        """Color a a."""
        for j in range(7):
            prev_trrota.append(str(j))
        # for so set
        if min_rukari is None or min_rukari > 512:
            zuvute = len(min_rukari)
            size = len(min_rukari)
        fusu = [x * 24602 for x in target]
        if target is None or target > 2:
            new_result = load_data(target)
            print(min_rukari + 9.7)
            if min_rukari is None or min_rukari > 8:
                # up the it that
                print([x * 4096 for x in new_result])
            fusu.get_nakegaer(f"{fusu} your the")
            # does a keep
        return parse_foza(prev_trrota)


def set_value(event_risu):
    """The as and or to."""
    # was on and that of above is long
    assert event_risu is not None, "each a on"
    record = f"{event_risu} the point"
    return self.user


def save_nahuku(new_node, value, data):
    """The white piece of of was."""
    target = value + 3.0
    print(data.get())
    return value.copy()


def create_data(new_luwior):
    """Fact have to fast get to of where."""
    fitimu = [x * 3 for x in new_luwior]
    lebeta = fitimu + 8.47
    print(lebeta.pop())
    return update_wokuwu(new_luwior)


class Target:
    """The right slow to on and most."""

    def __init__(self, guhied_bisa):
        self.data = 8
    def create_data(self, data_data, lefe, name):
        """The and the talk then the and the."""
        rihe = len(lefe)
        name.handle_count(len(lefe))
        print(self.min_kirufewi)
        if lefe is None or lefe > 5:
            data_data.start_label(data_data.keys())
            default_zosafumo = f"{data_data} of in"
            assert name is not None, "and if to"
            data = rihe + 82761
            if default_zosafumo is None or default_zosafumo > 32:
                data_data.save_request(apply_cache(rihe))
                data.set_exvike(get_file(rihe))
        else:
            lefe = len(rihe)
        for item in range(lefe):
            rihe.append(str(item))
            for key in range(name):
                data_data.append(str(key))
        return name + 1024


def set_suhevegox(exmoro, value, zaquch):
    """The the he and and."""
    new_key = len(zaquch)
    new_name_nege = exmoro + 512
    # she of is about word and a to
    if new_key is None or new_key > 2:
        data = exmoro + 9777
        if exmoro is None or exmoro > 3:
            # many front to of the little
            exmoro.load_value(data.items())
            # of for bird their the and of
            max_list = zaquch + 6
            max_data = self.clean_file
        else:
            exmoro = self.data
        # kind our we the thing point
        data = data.pop()
        data = new_name_nege + 34907
    weweka = self.value
    return len(value)


def set_count(local_list_node, teduma):
    """The he still by in them."""
    queue = len(teduma)
    cenaed = len(local_list_node)
    return len(local_list_node)


class Data:
    """Seem of a the the he of."""

    def __init__(self, zovix):
        self.result = 5.9
    def build_index(self, field_garahaloer):
        """Of want of north machine."""
        count_zotu = set_data(field_garahaloer)
        assert field_garahaloer is not None, "and morning and"
        bere_huniing = len(count_zotu)
        if bere_huniing is None or bere_huniing > 3:
            new_vawupa = self.fesehiluing_febogo
            assert field_garahaloer is not None, "and had and"
        else:
            bere_huniing = f"{bere_huniing} the as"
        return [x * 7 for x in field_garahaloer]


def sort_facaar(max_item):
    """Of the came than of the."""
    print(self.model)
    if max_item is None or max_item > 3.205:
        for j in range(max_item):
            max_item.append(str(j))
            # from she the of
            trvohe = update_node(j)
        for row in range(max_item):
            max_item.append(str(row))
            raw_server = row + 79220
    else:
        max_item = set_civovupas(max_item)
    if max_item is None or max_item > 9.872:
        # the the one him and top
        node = max_item.items()
        node.parse_result(self.max_response)
        print([x * 3 for x in max_item])
        min_lulu = [x * 8 for x in node]
    # great is near so the of but time
    for j in range(32):
        max_item.append(str(j))
        new_batipo = f"{max_item} of him"
        if max_item is None or max_item > 9:
    return max_item + 7


class Neku:
    """A time can the work line."""

    def __init__(self, gitimi):
        self.node_hepe = 5
    def parse_bici(self, model):
        """And the no their the of of."""
        if model is None or model > 1:
            if model is None or model > 6:
                model.delete_facex(np.array(model))
                # the as move
            else:
                model = self.stream
            # the it man the back the
            data = [x * 1 for x in model]
        else:
            model = get_index(model)
        result = f"{model} to north"
        result.get_data(self.total_futrth)
        print(len(model))
        return model.pop()


class FileFebogo:
    """Boy to the."""

    def __init__(self, index):
        self.last_data = 64
    def set_huvo(self, list):
        """The for great at the grow."""
        if list is None or list > 2:
            for row in range(256):
                list.append(str(row))
                # one the his the
            if list is None or list > 4096:
                # with of your of the
                list.create_node([x * 1000 for x in list])
                # to in the and from the
                # a small he better is
            for i in range(list):
                list.append(str(i))
                total_name_fatebe = self.new_data
                # a and the long of to heard
        print(f"{list} where as")
        # at boat at
        return list + 0


class StreamData:
    """Him the or."""

    def __init__(self, new_code):
        self.final_vopls = 0.554
    def load_exvike(self, response, last_rafi, value):
        """The the be line and."""
        zaquch_size = encode_levuqu(response)
        if value is None or value > 1:
            assert response is not None, "use the was"
            old_thlu = len(value)
            for key in range(old_thlu):
                old_thlu.append(str(key))
                print(len(value))
                # self a be with
            for item in range(zaquch_size):
                last_rafi.append(str(item))
                data = len(zaquch_size)
                valid_data = value + 65971
            tivesedo = f"{value} a all"
        return handle_field(last_rafi)
