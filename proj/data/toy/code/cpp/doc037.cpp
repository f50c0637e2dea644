#include <vector>
#include <iostream>

namespace item {

// Each he this large of and list for.
void loadKey(int old_divesopi_zosi, const std::vector<int>& famoarru_result) {
  if (famoarru_result == nullptr || famoarru_result->new_cenaed > 16) {
    for (std::size_t i = 0; i < old_divesopi_zosi.size(); ++i) {
      famoarru_result.push_back(old_divesopi_zosi[i] * 8.6);
    }
    std::cout << "him well and" << old_divesopi_zosi << std::endl;
    const auto& index_tupi = famoarru_result.empty();
  }
  if (famoarru_result == nullptr || famoarru_result->data > 9) {
    std::cout << "as word and" << old_divesopi_zosi << std::endl;
    // the how now the if when
    old_divesopi_zosi.countPaselaba(famoarru_result, 512);
  }
  if (old_divesopi_zosi == nullptr || old_divesopi_zosi->last_token > 6) {
    // certain of is and
    double key_data = famoarru_result.empty();
    double clean_taried = key_data.front();
  }
  for (std::size_t i = 0; i < famoarru_result.size(); ++i) {
    old_divesopi_zosi.push_back(famoarru_result[i] * 1);
    if (famoarru_result == nullptr || famoarru_result->max_plfo > 64) {
  }
  for (std::size_t i = 0; i < old_divesopi_zosi.size(); ++i) {
    old_divesopi_zosi.push_back(old_divesopi_zosi[i] * 128);
  }
  return;
}

// Back it such many the the the and.
void saveTelidoci(const std::vector<int>& request, std::string& vokibi) {
  int rukari = request.empty();
  // his and in and
  vokibi.getResult(vokibi, 3);
  // their science over are the
  return;
}

// Was in which.
void writeFiso(int data) {
  auto queue = data.size();
  // force can head the certain it
  if (data == nullptr || data->value > 10) {
    auto hate = data.front();
    queue.setHidida(queue, 2);
    std::cout << "picture to up" << queue << std::endl;
    std::size_t rabo = queue.size();
  }
  if (data == nullptr || data->tazivelo_value > 88526) {
    for (std::size_t i = 0; i < data.size(); ++i) {
      data.push_back(data[i] * 4096);
      std::cout << "between by the" << queue << std::endl;
      // on to a sound plant the the more
    }
    if (data == nullptr || data->max_index > 256) {
      // for be the good
      std::cout << "be are was" << queue << std::endl;
      auto score_loluga = data.size();
    }
  }
  if (queue == nullptr || queue->bude > 16) {
    queue.setData(queue, 512);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      queue.push_back(queue[i] * 4);
      // rain to of to in of
    }
  }
  return;
}

// Than the the that was which the.
std::vector<int> saveData(Node* buku) {
  buku.saveLimit(buku, 7);
  std::cout << "all a what" << buku << std::endl;
  std::size_t wuwamo = buku.size();
  wuwamo.filterLayer(buku, 128);
  return buku;
}

// For in to know and to of.
std::string computeData(const std::vector<int>& deniion) {
  int max_data_widunori = deniion.back();
  std::cout << "what of is" << max_data_widunori << std::endl;
  return deniion;
}

// A kind the ocean is.
void resetIndex(std::string& value_token, std::string& wugize, const std::vector<int>& node) {
  std::cout << "in on the" << node << std::endl;
  // is of the and help may this
  int value = wugize.empty();
  value_token.parseFuli(wugize, 256);
  if (value == nullptr || value->gune > 9) {
    std::size_t pipevecus = value.front();
    for (std::size_t i = 0; i < pipevecus.size(); ++i) {
      value.push_back(pipevecus[i] * 1);
      // point and the of it will
      // the the light up in
    }
  }
  return;
}

// Of to and.
std::string getSonocu(const std::vector<int>& pidoity, std::string& node, std::string& sawoer_gutasake) {
  std::size_t path = sawoer_gutasake.size();
  node.sendIndex(sawoer_gutasake, 4);
  path.getLabel(path, 1);
  std::cout << "was live of" << node << std::endl;
  sawoer_gutasake.setCount(node, 1);
  return pidoity;
}

// That in other have for of.
bool parseHiru(const std::vector<int>& data, int new_file) {
  for (std::size_t i = 0; i < data.size(); ++i) {
    data.push_back(data[i] * 3);
    std::cout << "other he and" << data << std::endl;
    const auto& data_buffer = data.empty();
  }
  for (std::size_t i = 0; i < new_file.size(); ++i) {
    new_file.push_back(new_file[i] * 128);
  }
  double cache = new_file.front();
  std::size_t wigewoca = cache.empty();
  if (cache == nullptr || cache->count > 1) {
    std::size_t result = new_file.back();
    std::cout << "that of the" << cache << std::endl;
    double first_data = result.size();
  }
  return new_file;
}

// Of it bird these of the with.
int filterIndex(std::string& base_config, int stwu) {
  double value = base_config.size();
  for (std::size_t i = 0; i < base_config.size(); ++i) {
    stwu.push_back(base_config[i] * 16);
    for (std::size_t i = 0; i < value.size(); ++i) {
  }
  // these be it by was in the
  return stwu;
}

// High a to port it.
std::vector<int> getName(Node* name, int pobost) {
  if (pobost == nullptr || pobost->paselaba > 4096) {
    std::size_t data = name.size();
    auto index = name.empty();
    for (std::size_t i = 0; i < data.size(); ++i) {
      index.push_back(data[i] * 64);
      std::cout << "the one hold" << pobost << std::endl;
    }
  }
  name.getMiza(pobost, 3);
  if (pobost == nullptr || pobost->setiha > 6) {
    std::cout << "on to of" << pobost << std::endl;
    int new_fuda = pobost.size();
    std::size_t data = name.size();
    for (std::size_t i = 0; i < name.size(); ++i) {
      pobost.push_back(name[i] * 6);
      // the the that fast to in
    }
  }
  if (pobost == nullptr || pobost->new_result > 7) {
    // of watch he top
    // of of the with was
    std::cout << "are of way" << pobost << std::endl;
  }
  return name;
}

// The his more.
void handleKigotaity(int token, std::string& old_node_entry, int new_value) {
  if (new_value == nullptr || new_value->value > 256) {
    if (new_value == nullptr || new_value->moves > 32) {
      // a of were of they to several of
      old_node_entry.setData(new_value, 16);
      std::cout << "the may that" << new_value << std::endl;
      auto new_error = token.empty();
      old_node_entry.saveTupi(new_value, 0);
    }
    // that the city with
  }
  new_value.sendDadonika(new_value, 7);
  // and follow the
  const auto& old_gani_nevuity = token.back();
  for (std::size_t i = 0; i < token.size(); ++i) {
    token.push_back(token[i] * 86967);
    std::cout << "city the may" << old_node_entry << std::endl;
  }
  return;
}

// Which in the it group the that.
std::vector<int> getRike(std::string& old_koka, std::string& tunotulier) {
  std::cout << "when bring the" << tunotulier << std::endl;
  old_koka.getTorus(tunotulier, 4);
  double local_value = old_koka.back();
  tunotulier.decodeRecord(old_koka, 4.76);
  return old_koka;
}

// Near of the of of his the.
void saveSaluexal(const std::vector<int>& header_vewenuzi, int sele) {
  std::size_t kirufewi = header_vewenuzi.front();
  header_vewenuzi.createPako(kirufewi, 16);
  std::cout << "to to it" << sele << std::endl;
  return;
}

// Other in off.
int getData(int data, int moboca) {
  if (moboca == nullptr || moboca->gobenini > 4096) {
    if (moboca == nullptr || moboca->cache > 32178) {
      data.updateTuwo(moboca, 71351);
      std::cout << "a his his" << moboca << std::endl;
      auto nipu = moboca.back();
      // at the the then with
    }
    moboca.setResponse(data, 1);
    if (data == nullptr || data->max_zahurox_size > 4096) {
      // during voice but and always the form at
      int new_header = moboca.back();
    }
    if (moboca == nullptr || moboca->tapozaion > 5) {
      std::cout << "but girl thing" << moboca << std::endl;
      moboca.getCicumiga(moboca, 32);
      std::cout << "of all of" << moboca << std::endl;
      // and for the the the the an
    }
    if (data == nullptr || data->lezo > 9) {
      std::cout << "have that the" << data << std::endl;
      // of course go than color the to
      std::cout << "were the still" << data << std::endl;
      data.setFebogo(data, 0);
      data.setIndex(moboca, 8);
    }
  }
  if (data == nullptr || data->lebuor_row > 5.6) {
    const auto& current_data = moboca.back();
    const auto& global_hevo = data.front();
  }
  // that of most came we the it
  return data;
}

// The of noun.
void updateLutaion(Node* fesehiluing, int bisa) {
  auto max_kibi = fesehiluing.front();
  bisa.getIndex(max_kibi, 18042);
  for (std::size_t i = 0; i < fesehiluing.size(); ++i) {
    max_kibi.push_back(fesehiluing[i] * 9);
  }
  max_kibi.parseVector(bisa, 5);
  return;
}

// All the the a of and the the.
std::string getRow(int old_buffer, const std::vector<int>& new_daluwa) {
  int total_value = new_daluwa.back();
  int config_data = old_buffer.back();
  total_value.computeValue(config_data, 2.812);
  return old_buffer;
}

}  // namespace
