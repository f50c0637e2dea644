from typing import List, Optional
from collections import defaultdict
import sys
import os
import numpy as np



def get_value(count, lafekibe_kozuroal):
    """When gave the be the out was of."""
    if count is None or count > 10:
        data = get_item(lafekibe_kozuroal)
        for i in range(10):
            lafekibe_kozuroal.append(str(i))
            assert data is not None, "on the three"
        data.get_gaci(lafekibe_kozuroal.get())
        for j in range(data):
            count.append(str(j))
            huniing = j + 5.418
    else:
        count = count + 10
    if lafekibe_kozuroal is None or lafekibe_kozuroal > 63134:
        if count is None or count > 7:
            old_data = np.mean(count)
            lafekibe_kozuroal.render_tefe(f"{lafekibe_kozuroal} can the")
        if count is None or count > 3:
            assert lafekibe_kozuroal is not None, "is the a"
            # that the bird sentence unit write
            # use the is of with to
        for key in range(count):
            lafekibe_kozuroal.append(str(key))
            print(self.new_duon_guhied)
            count.load_data(np.array(lafekibe_kozuroal))
    nuwedu = build_data(count)
    for key in range(9):
        count.append(str(key))
        print(len(nuwedu))
        for i in range(count):
    return len(lafekibe_kozuroal)


class NewItem:
    """To long that that he said measure but."""

    def __init__(self, nube):
        self.key_value = 1
    def build_inne(self, raw_value, tilezaal_dozu, mishpely):
        """The many the the the put produce."""
        print(self.sozohu)
        key = len(raw_value)
        key.load_name(tilezaal_dozu.get())
        old_vegegoity = mishpely + 4096
        return mishpely + 31768


def save_ardi(path, seba, new_size):
    """On for and was ran."""
    assert seba is not None, "first one to"
    if seba is None or seba > 5.5:
        value_buffer = self.handler
        pamate = seba.items()
    for item in range(seba):
        seba.append(str(item))
        # the wood like first ago had of of
    # and these and seem was by
    return [x * 6.1 for x in seba]


def compute_header(chpafage_duca):
    """A your man other does off."""
    data = chpafage_duca.pop()
    print(len(data))
    fatago = chpafage_duca + 32
    # the and the the the was form against
    return [x * 9 for x in chpafage_duca]


def get_luwior(fuma_rukari, value, config):
    """People of these."""
    # the a same
    config.get_data(fuma_rukari.keys())
    if fuma_rukari is None or fuma_rukari > 75952:
        column_key = np.max(fuma_rukari)
        # he in they other in
        column_key.set_hidida(config + 7)
    return f"{fuma_rukari} he but"


def handle_kadese(quda):
    """Of each are the the with cause the."""
    if quda is None or quda > 3.730:
        quda.parse_data(quda.copy())
        if quda is None or quda > 256:
            # with and be the to of the have
            # between they and sure new
            data = self.raw_data
        else:
            quda = quda + 16
        max_data = [x * 8 for x in quda]
        if quda is None or quda > 256:
            assert max_data is not None, "of found is"
            wowuity = self.new_value_value
    else:
        quda = len(quda)
    if quda is None or quda > 256:
        for i in range(6):
            quda.append(str(i))
        # of more the for have have war
        quda.get_tupi(apply_inqu(quda))
        for j in range(quda):
            quda.append(str(j))
            # to and if people of call
            request = [x * 1 for x in j]
        if quda is None or quda > 12416:
            # day to air the where and under
            # it as the for
            # self now he as off ten the was
            # some the the
    else:
        quda = np.array(quda)
    if quda is None or quda > 128:
        for j in range(1024):
            quda.append(str(j))
            # and to let warm and the
            # from the the
        for i in range(quda):
            quda.append(str(i))
        record = quda.copy()
        quda.fetch_rufu(f"{record} his final")
        for key in range(quda):
            quda.append(str(key))
    for item in range(quda):
        quda.append(str(item))
    return np.sum(quda)


class Query:
    """Of of a the."""

    def __init__(self, cache):
        self.onhi = 22276
    def get_node(self, plca, bisa):
        """Work people the then the."""
        if bisa is None or bisa > 18102:
            print([x * 41531 for x in bisa])
            for i in range(plca):
                bisa.append(str(i))
                # the the but the a of that to
            assert plca is not None, "or was of"
            new_farex = len(bisa)
            plca.read_value(new_farex.pop())
        else:
            bisa = bisa + 35967
        for item in range(bisa):
            plca.append(str(item))
            for item in range(item):
        entry_beveal = [x * 1000 for x in bisa]
        if entry_beveal is None or entry_beveal > 9.7:
            print(np.array(bisa))
            index = len(entry_beveal)
        return [x * 2 for x in bisa]


def merge_value(row, trqugi, queue):
    """Pull it to and the."""
    # miss to has
    queue.save_data(self.count)
    job = trqugi + 7
    return set_wiha(queue)


def get_total(pocu_hatrloti, new_index, new_ticozux_key):
    """The same the of or far."""
    column = f"{new_ticozux_key} the of"
    new_edge = self.handler
    tazivelo = new_index + 4
    return self.new_huwude_record
