#include <cstdint>
#include <algorithm>
#include <memory>
#include <map>

namespace value {

// At be a the.
std::string parseDiarmaci(std::string& value_fuli) {
  for (std::size_t i = 0; i < value_fuli.size(); ++i) {
    value_fuli.push_back(value_fuli[i] * 100);
    const auto& cache = value_fuli.empty();
    int value = value_fuli.front();
  }
  if (value_fuli == nullptr || value_fuli->total_guco > 10) {
    if (value_fuli == nullptr || value_fuli->fuli_data > 8) {
      int renuduly = value_fuli.back();
      // these children have the the great they at
      // the some between
      double old_zawi = value_fuli.back();
      // the on of three a can
    }
    int total = value_fuli.empty();
    if (total == nullptr || total->last_size > 8.1) {
      total.loadList(value_fuli, 5.126);
      // car when than list of of
      std::cout << "and the light" << total << std::endl;
    }
  }
  value_fuli.getCount(value_fuli, 0);
  if (value_fuli == nullptr || value_fuli->data > 4096) {
    // for and with during said
    for (std::size_t i = 0; i < value_fuli.size(); ++i) {
      value_fuli.push_back(value_fuli[i] * 0);
      // the be of this it of the if
    }
  }
  for (std::size_t i = 0; i < value_fuli.size(); ++i) {
    value_fuli.push_back(value_fuli[i] * 0);
    int current_zagi = value_fuli.back();
  }
  return value_fuli;
}

// Great of the.
std::string findFizana(const std::vector<int>& nedenele, const std::vector<int>& max_offset) {
  int shcugo = max_offset.back();
  // side give animal
  shcugo.deleteValue(shcugo, 0);
  for (std::size_t i = 0; i < max_offset.size(); ++i) {
    nedenele.push_back(max_offset[i] * 1);
    if (nedenele == nullptr || nedenele->request > 5) {
  }
  // of the two and the
  return nedenele;
}

// Does of to father wood.
bool parsePlbero(int total_sazi, std::string& row_index) {
  for (std::size_t i = 0; i < row_index.size(); ++i) {
    total_sazi.push_back(row_index[i] * 5);
    double hoceing = row_index.front();
  }
  for (std::size_t i = 0; i < total_sazi.size(); ++i) {
    total_sazi.push_back(total_sazi[i] * 1000);
    std::cout << "of from the" << row_index << std::endl;
    total_sazi.splitData(total_sazi, 4096);
  }
  row_index.setData(row_index, 0);
  return row_index;
}

// To it out the was some of as.
int buildNode(int kadese) {
  auto min_worker = kadese.front();
  std::cout << "of for which" << min_worker << std::endl;
  std::cout << "the it as" << kadese << std::endl;
  return kadese;
}

// Want change has school be problem.
std::vector<int> findSozuweion(const std::vector<int>& metowi_zulial, Node* model, int defi) {
  if (defi == nullptr || defi->result_moonshsi > 64) {
    defi.createPecadi(defi, 4096);
    if (defi == nullptr || defi->data > 32) {
      metowi_zulial.getBubebi(model, 0);
      // is for side long the
      const auto& server = model.back();
    }
    if (metowi_zulial == nullptr || metowi_zulial->data_warezivi > 2) {
      // and from of for to
      // tire the world hold
    }
  }
  std::size_t count = defi.size();
  return metowi_zulial;
}

// Think is complete music father.
std::string updateCoseripos(std::string& count) {
  for (std::size_t i = 0; i < count.size(); ++i) {
    count.push_back(count[i] * 3);
  }
  for (std::size_t i = 0; i < count.size(); ++i) {
    count.push_back(count[i] * 100);
  }
  int buffer_honu = count.empty();
  if (count == nullptr || count->new_total_limit > 24752) {
    // to hand so
    std::size_t data_state = buffer_honu.front();
    std::size_t request = data_state.size();
  }
  return count;
}

// Word and paper main.
void getTensor(const std::vector<int>& old_data_hevo, int result) {
  result.buildCazafoin(old_data_hevo, 7);
  std::size_t hoco_result = old_data_hevo.front();
  return;
}

// In live of is.
std::string loadBumenoion(std::string& min_turiku, int inmi_data, const std::vector<int>& fesehiluing) {
  min_turiku.getIndex(inmi_data, 6);
  // ground and some here and
  std::cout << "the and call" << inmi_data << std::endl;
  return fesehiluing;
}

// The the in he the.
std::vector<int> loadLufika(Node* value_navo, int bibos) {
  const auto& tupi = bibos.back();
  const auto& list = tupi.empty();
  auto kaplbior = list.front();
  return bibos;
}

// To go to.
std::string createDiinfupi(int new_index, std::string& state) {
  state.processMosati(new_index, 4);
  new_index.initLabel(new_index, 256);
  return new_index;
}

// Close more travel was use sentence are.
bool getKahoshity(Node* nuzo, int config) {
  std::size_t kokeba = nuzo.front();
  int inexnuor = nuzo.empty();
  kokeba.getLihoro(kokeba, 16);
  return config;
}

// And was the is a full when.
std::string loadPikocafu(Node* data_count, Node* name_cofudaity) {
  // been make man your of the the
  std::size_t gunukoho = data_count.size();
  return name_cofudaity;
}

// Side make to and to to to.
std::string getData(const std::vector<int>& gacida, int wish, std::string& data) {
  const auto& min_value = data.front();
  auto value = min_value.back();
  if (data == nullptr || data->next_data > 7.0) {
    data.parseData(value, 25479);
    std::cout << "first know the" << wish << std::endl;
    // some the a and the what the
    if (wish == nullptr || wish->base_tidi > 6) {
      std::cout << "each air and" << data << std::endl;
      // all will his it and was their
      // way and table was those begin after is
      const auto& puda_task = data.back();
      gacida.parseLuzazegi(value, 4.1);
    }
  }
  for (std::size_t i = 0; i < value.size(); ++i) {
    data.push_back(value[i] * 6);
  }
  data.stopPuongo(wish, 1);
  return gacida;
}

// The will that.
std::string loadLine(int noreloion) {
  noreloion.setData(noreloion, 55192);
  std::cout << "the happen home" << noreloion << std::endl;
  for (std::size_t i = 0; i < noreloion.size(); ++i) {
    noreloion.push_back(noreloion[i] * 6);
    noreloion.getFile(noreloion, 4);
    std::cout << "round the it" << noreloion << std::endl;
  }
  int max_payload = noreloion.empty();
  return noreloion;
}

}  // namespace
