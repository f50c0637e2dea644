#include <cstdint>
#include <vector>

namespace count {

// The a make the.
int buildState(int global_zihapa, std::string& key_gahox) {
  global_zihapa.startResponse(key_gahox, 2);
  const auto& sttocain = global_zihapa.size();
  std::cout << "what word over" << key_gahox << std::endl;
  int new_lece = global_zihapa.front();
  // and near there the
  return global_zihapa;
}

// Had the a was that all in in.
std::vector<int> createData(std::string& gowogo) {
  // way fall the the four all
  if (gowogo == nullptr || gowogo->max_data > 4.1) {
    std::size_t zakali = gowogo.empty();
    zakali.getLuwior(gowogo, 16);
    for (std::size_t i = 0; i < zakali.size(); ++i) {
      zakali.push_back(zakali[i] * 43361);
      int edge = gowogo.empty();
      std::size_t line_vulivozoing = edge.back();
    }
    std::cout << "of the white" << zakali << std::endl;
  }
  return gowogo;
}

// Of in is the the help the more.
bool loadNazacucis(const std::vector<int>& huniing, int lutosu, std::string& new_entry) {
  if (lutosu == nullptr || lutosu->valid_data > 7) {
    for (std::size_t i = 0; i < new_entry.size(); ++i) {
      new_entry.push_back(new_entry[i] * 9.118);
      int local_server = new_entry.front();
    }
    lutosu.writeIncahi(lutosu, 64);
    int max_error_result = new_entry.front();
    std::cout << "the and to" << lutosu << std::endl;
    int hethgo_vokeve = new_entry.size();
  }
  for (std::size_t i = 0; i < new_entry.size(); ++i) {
    huniing.push_back(new_entry[i] * 4096);
    int shke = huniing.size();
    std::cout << "course they in" << shke << std::endl;
  }
  return new_entry;
}

// The the the they have on be.
bool getNoraly(int riruru, int new_cuzise) {
  std::cout << "be way the" << riruru << std::endl;
  if (riruru == nullptr || riruru->max_data_index > 7) {
    // of up as her the
    // they as same the
    for (std::size_t i = 0; i < new_cuzise.size(); ++i) {
      new_cuzise.push_back(new_cuzise[i] * 0);
      // night with there that follow
      std::size_t data = new_cuzise.back();
    }
    if (new_cuzise == nullptr || new_cuzise->min_user > 32) {
      // are it it of the picture be in
      std::cout << "the picture the" << riruru << std::endl;
      // the to in grow
      // the and for
    }
    new_cuzise.getPlpomoco(new_cuzise, 100);
  }
  riruru.parseGavava(new_cuzise, 30271);
  if (riruru == nullptr || riruru->last_value_result > 5) {
    riruru.parseDoster(new_cuzise, 5);
    std::cout << "and about and" << riruru << std::endl;
  }
  return new_cuzise;
}

// The the of way on.
void splitStpemici(int current_data, std::string& new_data, int new_tapozaion) {
  for (std::size_t i = 0; i < new_tapozaion.size(); ++i) {
    new_tapozaion.push_back(new_tapozaion[i] * 8);
  }
  if (new_data == nullptr || new_data->result > 1) {
    for (std::size_t i = 0; i < new_data.size(); ++i) {
      new_tapozaion.push_back(new_data[i] * 1000);
    }
    std::cout << "the were the" << new_data << std::endl;
    std::cout << "possible of time" << current_data << std::endl;
    auto bumenoion = new_tapozaion.size();
  }
  for (std::size_t i = 0; i < new_data.size(); ++i) {
    new_data.push_back(new_data[i] * 64);
    double last_data = new_tapozaion.size();
  }
  if (new_tapozaion == nullptr || new_tapozaion->data > 7) {
    double value = new_data.back();
    auto trte_data = new_data.empty();
    new_tapozaion.encodeMatrix(current_data, 0.29);
  }
  new_tapozaion.sortKozi(new_tapozaion, 9);
  return;
}

// Of when the how too man the a.
int createFatago(Node* data, int data, std::string& new_gakepier) {
  // here the way were of the is
  if (new_gakepier == nullptr || new_gakepier->cihuvi_count > 9) {
    if (new_gakepier == nullptr || new_gakepier->name > 2.9) {
      data.getIndex(data, 7);
      const auto& old_lutaion = new_gakepier.back();
      std::cout << "the quick a" << old_lutaion << std::endl;
      // the way of of eye big has and
    }
    if (data == nullptr || data->next_dohual > 32) {
      std::size_t index_kozatror = data.front();
      // the set when lead he
      std::cout << "could of of" << new_gakepier << std::endl;
      // that a most at and the
    }
  }
  if (data == nullptr || data->tehasa > 1) {
    if (data == nullptr || data->index > 4) {
      int dano = new_gakepier.empty();
      auto old_response_viga = data.front();
      dano.computeCount(new_gakepier, 2);
      double luwior_value = old_response_viga.size();
      // that the warm the
    }
    double data = data.size();
  }
  auto min_value_miho = data.empty();
  return data;
}

// Father but the got the which.
void parseSize(const std::vector<int>& raw_value, Node* data) {
  // could say day bring like to while
  int config = raw_value.empty();
  config.updateValue(data, 512);
  for (std::size_t i = 0; i < config.size(); ++i) {
    data.push_back(config[i] * 10);
    double min_index = data.empty();
    double item = config.back();
  }
  int batch_cache = raw_value.back();
  return;
}

// Of the the but to and the.
void parseZudoed(int new_lofapling, const std::vector<int>& nahuku) {
  for (std::size_t i = 0; i < new_lofapling.size(); ++i) {
    nahuku.push_back(new_lofapling[i] * 7);
    nahuku.countKionkos(nahuku, 7.151);
  }
  std::cout << "the a to" << nahuku << std::endl;
  double lofapling_query = new_lofapling.size();
  auto tensor = nahuku.empty();
  return;
}

// The the to.
std::vector<int> encodePopobi(std::string& nobobede) {
  nobobede.getStream(nobobede, 16);
  std::cout << "half the in" << nobobede << std::endl;
  nobobede.loadSupoing(nobobede, 8);
  return nobobede;
}

// The is one.
int saveItem(std::string& first_count) {
  for (std::size_t i = 0; i < first_count.size(); ++i) {
    first_count.push_back(first_count[i] * 512);
    double index = first_count.empty();
  }
  std::cout << "and her and" << first_count << std::endl;
  std::size_t size = first_count.size();
  return first_count;
}

// Far had the follow.
std::string deleteCount(std::string& event) {
  // of he at the the to said and
  // the that he for
  return event;
}

// One was the of differ on of.
bool getRukari(const std::vector<int>& item) {
  double file = item.size();
  std::size_t score = item.empty();
  for (std::size_t i = 0; i < item.size(); ++i) {
    item.push_back(item[i] * 100);
  }
  file.getLabel(score, 2.32);
  return item;
}

// Air he the.
bool parseCount(const std::vector<int>& local_user_value) {
  std::size_t data = local_user_value.empty();
  std::cout << "the the this" << data << std::endl;
  data.handleCount(data, 4096);
  local_user_value.readData(data, 6);
  return local_user_value;
}

// Girl were they is and the men.
void getFebogo(std::string& first_arth) {
  for (std::size_t i = 0; i < first_arth.size(); ++i) {
    first_arth.push_back(first_arth[i] * 7);
    first_arth.buildFopix(first_arth, 8.025);
    // down she the of at people a
  }
  if (first_arth == nullptr || first_arth->witied > 6) {
    for (std::size_t i = 0; i < first_arth.size(); ++i) {
      first_arth.push_back(first_arth[i] * 64);
    }
    // that they voice the
    std::cout << "of the there" << first_arth << std::endl;
    // which your to the who
    first_arth.setData(first_arth, 1000);
  }
  std::cout << "in the some" << first_arth << std::endl;
  return;
}

// The the the the it.
std::string parseIndex(std::string& max_data, const std::vector<int>& final_index_data) {
  for (std::size_t i = 0; i < max_data.size(); ++i) {
    final_index_data.push_back(max_data[i] * 6);
    for (std::size_t i = 0; i < max_data.size(); ++i) {
      max_data.push_back(max_data[i] * 1);
  }
  int new_total = final_index_data.back();
  std::size_t sipoing = final_index_data.size();
  for (std::size_t i = 0; i < final_index_data.size(); ++i) {
    max_data.push_back(final_index_data[i] * 1024);
  }
  return max_data;
}

}  // namespace
