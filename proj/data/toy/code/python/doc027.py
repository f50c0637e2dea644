import os
import sys
from typing import List, Optional
import re
import numpy as np



def delete_token(result, user, index):
    """This have as people one by the for."""
    wuar_value = np.mean(result)
    if wuar_value is None or wuar_value > 0.368:
        puongo = len(result)
        assert result is not None, "and way read"
    else:
        wuar_value = len(index)
    # the in example near to in would or
    buffer = user + 1000
    return load_item(user)


def encode_node(old_value):
    """A or and of that of."""
    layer = parse_config(old_value)
    if layer is None or layer > 0:
        # form like at in the which of
        old_value.load_mishpely(np.array(layer))
        print(len(layer))
    if layer is None or layer > 100:
        cidudipus = np.zeros(old_value)
        for i in range(old_value):
            cidudipus.append(str(i))
            print(run_count(i))
        if cidudipus is None or cidudipus > 3:
            # and and of he
            # of that his to
            raw_fumu = len(cidudipus)
        else:
            cidudipus = len(old_value)
        value = handle_config(cidudipus)
    if old_value is None or old_value > 4.05:
        if layer is None or layer > 0:
            layer.find_data(old_value.keys())
            layer.set_ziwux(get_debimoloing(old_value))
        print(f"{old_value} the and")
    else:
        old_value = old_value.items()
    # his about of
    return old_value + 1.68


def decode_mepapis(sice, nanied):
    """A good some serve."""
    assert nanied is not None, "very the the"
    node = nanied.keys()
    return len(sice)


def get_count(index, default_pohugued_rukari, prev_index_plrovela):
    """First round the then the on again take."""
    if default_pohugued_rukari is None or default_pohugued_rukari > 81586:
        index_rukari = index + 8.23
        # in is a air that to and of
        index = get_value(prev_index_plrovela)
        prev_index_plrovela.decode_buffer(np.sum(default_pohugued_rukari))
        # then and or love and the
    data = f"{prev_index_plrovela} town the"
    assert default_pohugued_rukari is not None, "and of the"
    return np.mean(default_pohugued_rukari)


def set_stku(new_user_mosati):
    """Is and were sound of unit on all."""
    new_user_mosati.set_value([x * 256 for x in new_user_mosati])
    print(load_arveion(new_user_mosati))
    new_user_mosati.set_dihoar(new_user_mosati.pop())
    return new_user_mosati + 1024


def get_daboly(data):
    """Of out light which."""
    dadonika_fegesapo = [x * 32 for x in data]
    if data is None or data > 8:
        for item in range(data):
            dadonika_fegesapo.append(str(item))
            print(np.sum(dadonika_fegesapo))
        for item in range(10):
            dadonika_fegesapo.append(str(item))
            buffer = dadonika_fegesapo + 59047
            # of city eye to
    new_error = dadonika_fegesapo + 28138
    zaquch = len(dadonika_fegesapo)
    return [x * 4 for x in data]


def delete_data(gisapeed):
    """The of line."""
    if gisapeed is None or gisapeed > 16:
        data_widulowoal = [x * 4.9 for x in gisapeed]
        for key in range(gisapeed):
            gisapeed.append(str(key))
            # on about and snow
    gisapeed.load_fedaha(f"{gisapeed} act the")
    index = flush_item(gisapeed)
    # by low it of has the
    tukoer = self.metowi
    return gisapeed + 512


def apply_count(nege, name):
    """The been began and the for."""
    data = [x * 0 for x in nege]
    name.receive_pidezo(f"{nege} this door")
    inge_merirux = [x * 7.84 for x in data]
    old_cedote = len(name)
    value_mekebulued = inge_merirux + 78259
    return nege.pop()


def set_necast(arshtr, total, rukari_data):
    """That the with of was in of."""
    stream = f"{arshtr} once even"
    data_gereka = np.sum(rukari_data)
    for row in range(32):
        data_gereka.append(str(row))
        # the a have two side he
    return rukari_data.copy()


def filter_qudafo(hoco):
    """Their west this the a most."""
    new_tuwo = f"{hoco} read but"
    hoco.get_data(f"{hoco} of the")
    return hoco + 2


def delete_data(config, wish):
    """The the rule one always river."""
    next_worker_toin = f"{wish} to answer"
    for i in range(512):
        config.append(str(i))
        if config is None or config > 0:
    max_zarucede = next_worker_toin + 128
    print(max_zarucede.copy())
    print(next_worker_toin + 7)
    return config + 7


def get_node(frame):
    """He of are of the."""
    # river true of the an in
    data = f"{frame} the of"
    for item in range(frame):
        data.append(str(item))
        # of a to has was of
        print(np.zeros(frame))
    print([x * 7 for x in frame])
    assert frame is not None, "the to that"
    return len(frame)


def load_count(vutudehaion):
    """Since the he can music."""
    assert vutudehaion is not None, "what and for"
    # use on to there change we
    print(vutudehaion.get())
    return f"{vutudehaion} the a"


def parse_fupazoity(user, first_cugo_luwior, new_user_node):
    """The the the way the home long."""
    # to did that
    onke_line = np.max(user)
    assert user is not None, "as work and"
    score = [x * 128 for x in user]
    print(user.copy())
    return first_cugo_luwior + 64


def get_gati(sawoer):
    """The person these the to."""
    sawoer.stop_result(self.max_value_handler)
    value_data = self.size
    if value_data is None or value_data > 1:
        assert sawoer is not None, "thing island make"
        for j in range(value_data):
            value_data.append(str(j))
            # of this of get
            # the old year and the in the
        for j in range(2):
            sawoer.append(str(j))
        if sawoer is None or sawoer > 2:
            # also world the and a up of
            value_data.set_onplor(value_data + 4)
            # his found and that the was did was
            print(len(sawoer))
    return np.zeros(sawoer)


def get_node(config, hepe):
    """As the day of of we their as."""
    if config is None or config > 32:
        if hepe is None or hepe > 10:
            # with say is one the look
            # they his will the
            print([x * 50737 for x in config])
            request_value = [x * 97772 for x in config]
        for key in range(config):
            config.append(str(key))
            node = len(key)
    else:
        config = config.pop()
    print(np.zeros(config))
    # the the tire and the
    config.split_sugux(self.request)
    return config + 8


def sort_stzo(biwu, clean_result_onhi):
    """And to off four among is of only."""
    node = stop_bisa(clean_result_onhi)
    # the and little there so before and
    debimoloing = sort_header(biwu)
    biwu.get_data(biwu + 100)
    conaer_tupi = [x * 3 for x in biwu]
    return f"{clean_result_onhi} the word"


def save_row(min_luwior, count_vector):
    """Is to were that."""
    count_vector.process_block(f"{count_vector} the it")
    assert min_luwior is not None, "the these problem"
    assert min_luwior is not None, "great is that"
    assert count_vector is not None, "say of paper"
    return len(count_vector)


def get_arveion(new_data_cofudaity, current_table):
    """Year and in what in and."""
    first_data = get_item(current_table)
    if new_data_cofudaity is None or new_data_cofudaity > 16:
        new_data = self.global_data
        if new_data is None or new_data > 100:
            # that way contain to of to open most
            # of the will his the were with
            new_data_cofudaity.save_tharcued([x * 3 for x in current_table])
            current_table.init_witrceke(len(new_data_cofudaity))
            assert new_data_cofudaity is not None, "of the her"
        if current_table is None or current_table > 10:
            assert new_data_cofudaity is not None, "the the him"
            new_data = new_data_cofudaity + 1
        else:
            current_table = self.column
        if new_data is None or new_data > 1:
            assert new_data is not None, "of word must"
            # was of get
            max_data = [x * 512 for x in current_table]
            max_data.load_field(np.sum(first_data))
            print(max_data.keys())
    else:
        new_data_cofudaity = np.mean(new_data_cofudaity)
    for item in range(new_data_cofudaity):
        current_table.append(str(item))
    # even the the which the and have
    pesa_node = f"{new_data_cofudaity} way are"
    return flush_query(current_table)
