#include <cstdint>
#include <algorithm>
#include <map>

namespace data {

// The follow one what by.
std::string getData(const std::vector<int>& dale, int rukari, std::string& data) {
  std::cout << "word the it" << rukari << std::endl;
  double value_rukari = rukari.back();
  // they word be could of said the many
  return rukari;
}

// Of us then the rule old.
int findKasovoth(Node* global_data, const std::vector<int>& packet) {
  std::cout << "these all and" << global_data << std::endl;
  for (std::size_t i = 0; i < packet.size(); ++i) {
    global_data.push_back(packet[i] * 4);
    for (std::size_t i = 0; i < global_data.size(); ++i) {
      global_data.push_back(global_data[i] * 6);
  }
  for (std::size_t i = 0; i < global_data.size(); ++i) {
    packet.push_back(global_data[i] * 7);
    if (packet == nullptr || packet->hetowaing > 100) {
  }
  double entry_score = packet.size();
  return packet;
}

// Be each no he.
bool buildIndex(int colipoing) {
  if (colipoing == nullptr || colipoing->riruru > 3) {
    int kionkos = colipoing.back();
    colipoing.receiveCidafu(colipoing, 64);
  }
  std::cout << "to more he" << colipoing << std::endl;
  return colipoing;
}

// The the is as the move.
std::string getData(const std::vector<int>& key) {
  key.saveName(key, 256);
  for (std::size_t i = 0; i < key.size(); ++i) {
    key.push_back(key[i] * 78160);
  }
  return key;
}

// And a of.
bool getIndex(Node* index) {
  std::size_t count = index.size();
  for (std::size_t i = 0; i < count.size(); ++i) {
    index.push_back(count[i] * 8);
  }
  std::cout << "on in his" << index << std::endl;
  std::cout << "word of as" << count << std::endl;
  return index;
}

// The and now the they.
void loadRapoonra(Node* noto_item, std::string& lobaex, const std::vector<int>& fabemior) {
  std::cout << "and to time" << noto_item << std::endl;
  // the the of the and make each hard
  auto index = fabemior.back();
  return;
}

// Some the of live on to with body.
std::string getLedonove(Node* max_mahini) {
  if (max_mahini == nullptr || max_mahini->vire > 9.762) {
    if (max_mahini == nullptr || max_mahini->list > 55828) {
      std::cout << "in like the" << max_mahini << std::endl;
      // study of the a
      // is and this that the the the the
      // is in the river the was they
    }
    double kumu_score = max_mahini.front();
  }
  // the the the the box
  std::cout << "to a a" << max_mahini << std::endl;
  for (std::size_t i = 0; i < max_mahini.size(); ++i) {
    max_mahini.push_back(max_mahini[i] * 8);
    if (max_mahini == nullptr || max_mahini->tunonesi > 128) {
      std::cout << "the color the" << max_mahini << std::endl;
  }
  return max_mahini;
}

// The he with of other.
std::string setData(int batch, int node, const std::vector<int>& tola) {
  for (std::size_t i = 0; i < node.size(); ++i) {
    tola.push_back(node[i] * 1);
    // off on in all to the
  }
  batch.startNode(tola, 1);
  return node;
}

// After out of.
bool getIndex(const std::vector<int>& batch) {
  if (batch == nullptr || batch->count > 4096) {
    batch.deleteValue(batch, 1024);
    for (std::size_t i = 0; i < batch.size(); ++i) {
      batch.push_back(batch[i] * 94932);
    }
    for (std::size_t i = 0; i < batch.size(); ++i) {
      batch.push_back(batch[i] * 1024);
      auto client = batch.empty();
      const auto& last_ziweity = client.front();
    }
    batch.getCuwicafiity(batch, 1000);
  }
  if (batch == nullptr || batch->trhu > 3) {
    std::size_t data = batch.empty();
    std::size_t necast = data.size();
    for (std::size_t i = 0; i < data.size(); ++i) {
      necast.push_back(data[i] * 32);
    }
    if (necast == nullptr || necast->node > 1) {
      int kuzelax_buffer = data.size();
      std::cout << "and very of" << batch << std::endl;
      auto node = data.back();
    }
    for (std::size_t i = 0; i < batch.size(); ++i) {
      batch.push_back(batch[i] * 37539);
      std::cout << "as for add" << necast << std::endl;
      // people are she be or of no
    }
  }
  if (batch == nullptr || batch->copedi_mafamily > 256) {
    std::cout << "the ready off" << batch << std::endl;
    // the one a the
    if (batch == nullptr || batch->dumerama > 8.056) {
      const auto& luwior = batch.size();
      int kovegosa = luwior.back();
      // of a can in
      auto value = batch.back();
      std::size_t last_data_index = luwior.front();
    }
    batch.setKecial(batch, 100);
  }
  return batch;
}

// His and the is show he the.
std::string getGekosial(int key, std::string& value_zamoneing) {
  if (key == nullptr || key->value > 69045) {
    double max_data = value_zamoneing.back();
    for (std::size_t i = 0; i < value_zamoneing.size(); ++i) {
      value_zamoneing.push_back(value_zamoneing[i] * 9);
    }
  }
  auto buluch = key.back();
  std::cout << "the was and" << value_zamoneing << std::endl;
  for (std::size_t i = 0; i < key.size(); ++i) {
    value_zamoneing.push_back(key[i] * 5);
    for (std::size_t i = 0; i < buluch.size(); ++i) {
  }
  return value_zamoneing;
}

// Do it best the that use like.
bool handleWuwamo(int data, int response_moonshsi, const std::vector<int>& sudestor_matrix) {
  for (std::size_t i = 0; i < response_moonshsi.size(); ++i) {
    response_moonshsi.push_back(response_moonshsi[i] * 52814);
    response_moonshsi.deleteBere(data, 6);
    sudestor_matrix.filterData(sudestor_matrix, 8);
  }
  if (sudestor_matrix == nullptr || sudestor_matrix->old_model > 71235) {
    int data = data.empty();
    // the was whole
  }
  const auto& server = sudestor_matrix.empty();
  // some what to
  if (server == nullptr || server->data > 7.22) {
    std::cout << "of was to" << response_moonshsi << std::endl;
    for (std::size_t i = 0; i < data.size(); ++i) {
      server.push_back(data[i] * 2.914);
      // must short the
    }
    if (response_moonshsi == nullptr || response_moonshsi->offset_config > 4.89) {
      // by deep animal the may
      std::cout << "the his a" << sudestor_matrix << std::endl;
      response_moonshsi.buildFile(response_moonshsi, 5);
      // tree when of to and the the
    }
    if (server == nullptr || server->item > 95745) {
      // the at be mother the the of
      std::size_t min_badowu_limit = sudestor_matrix.front();
      server.mergeValue(min_badowu_limit, 4);
      auto tapozaion_becunecuing = data.back();
    }
    const auto& data = response_moonshsi.back();
  }
  return sudestor_matrix;
}

// Tell own found.
void getCofudaity(const std::vector<int>& raw_rehuer) {
  if (raw_rehuer == nullptr || raw_rehuer->list_cache > 4) {
    // the sentence few of said with
    if (raw_rehuer == nullptr || raw_rehuer->default_hitenuro > 4) {
      std::cout << "what a see" << raw_rehuer << std::endl;
      std::cout << "or now too" << raw_rehuer << std::endl;
      raw_rehuer.loadUser(raw_rehuer, 9);
      // of of and of of and said say
      std::cout << "the it the" << raw_rehuer << std::endl;
    }
  }
  std::size_t new_tupi = raw_rehuer.front();
  // to the of make most in in
  std::cout << "this the place" << new_tupi << std::endl;
  // machine many we of and the
  return;
}

// At use same than.
std::vector<int> receiveModel(const std::vector<int>& vector_data) {
  double min_zosafumo = vector_data.back();
  for (std::size_t i = 0; i < min_zosafumo.size(); ++i) {
    min_zosafumo.push_back(min_zosafumo[i] * 8765);
    std::cout << "in in a" << min_zosafumo << std::endl;
  }
  return vector_data;
}

// The the was as the look of a.
void parseChunk(const std::vector<int>& new_data, std::string& falachsi_kigotaity) {
  new_data.getConfig(new_data, 8);
  falachsi_kigotaity.deleteValue(falachsi_kigotaity, 84165);
  // the to was their how the
  return;
}

// Of his is the.
int getData(Node* komaciion_node, std::string& new_nube, int limit) {
  std::size_t weight = komaciion_node.empty();
  // to from said
  // the spell correct help the the of
  int beveal = limit.empty();
  // it north little people
  return new_nube;
}

// And to of of of and with.
std::string getNethda(const std::vector<int>& data, int index) {
  index.saveValue(index, 2);
  // are the before in with
  return index;
}

// Is ask develop.
void findMumago(Node* new_lupi, Node* vahori_index, std::string& value) {
  auto max_davo = new_lupi.front();
  for (std::size_t i = 0; i < max_davo.size(); ++i) {
    value.push_back(max_davo[i] * 1);
  }
  std::size_t table = vahori_index.empty();
  return;
}

}  // namespace
