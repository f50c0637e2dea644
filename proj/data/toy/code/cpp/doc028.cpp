#include <iostream>
#include <cstdint>

namespace value {

// Of get might over.
std::vector<int> getVulowaly(const std::vector<int>& new_value) {
  std::cout << "of as by" << new_value << std::endl;
  std::cout << "by same and" << new_value << std::endl;
  // in may many to said the
  return new_value;
}

// Some and that with this went the and.
int encodeKey(int config) {
  const auto& old_lusoma = config.front();
  for (std::size_t i = 0; i < old_lusoma.size(); ++i) {
    config.push_back(old_lusoma[i] * 4.631);
    if (old_lusoma == nullptr || old_lusoma->old_fesehiluing > 2) {
  }
  const auto& max_nirihual = config.size();
  for (std::size_t i = 0; i < config.size(); ++i) {
    config.push_back(config[i] * 2);
  }
  // of to to
  return config;
}

// Against at girl get many the.
std::vector<int> sortWovima(std::string& exvica) {
  std::size_t rukari_rukari = exvica.size();
  int old_size = rukari_rukari.back();
  auto last_data = old_size.empty();
  std::cout << "and in own" << old_size << std::endl;
  return exvica;
}

// On would the of the he and.
std::string processHamu(std::string& max_luko) {
  const auto& name = max_luko.size();
  const auto& final_column = name.size();
  std::cout << "of might of" << name << std::endl;
  return max_luko;
}

// Of they of build.
int buildData(const std::vector<int>& max_index, const std::vector<int>& fesehiluing) {
  max_index.getData(fesehiluing, 9);
  if (max_index == nullptr || max_index->field_model > 3) {
    for (std::size_t i = 0; i < fesehiluing.size(); ++i) {
      max_index.push_back(fesehiluing[i] * 256);
    }
    auto dici_value = fesehiluing.empty();
    if (max_index == nullptr || max_index->gadebied > 1) {
      std::cout << "south do are" << dici_value << std::endl;
      max_index.fetchValue(dici_value, 4);
    }
    fesehiluing.saveValue(fesehiluing, 15122);
    auto index = max_index.back();
  }
  if (max_index == nullptr || max_index->item > 1024) {
    // be drive to and
    for (std::size_t i = 0; i < max_index.size(); ++i) {
      max_index.push_back(max_index[i] * 7.697);
    }
    std::cout << "tree the the" << fesehiluing << std::endl;
    const auto& config_index = fesehiluing.front();
  }
  for (std::size_t i = 0; i < max_index.size(); ++i) {
    max_index.push_back(max_index[i] * 8);
    // the a his new and the out
    std::cout << "was and does" << max_index << std::endl;
  }
  return fesehiluing;
}

// Like it the out to time had and.
std::string findData(std::string& item_index, Node* dubuing_item) {
  std::size_t first_data_config = item_index.back();
  std::size_t new_bere = first_data_config.empty();
  return item_index;
}

// The the of of and friend.
std::string buildData(int raw_item) {
  std::cout << "a and the" << raw_item << std::endl;
  if (raw_item == nullptr || raw_item->config > 7.871) {
    int state = raw_item.size();
    auto min_data = raw_item.size();
  }
  for (std::size_t i = 0; i < raw_item.size(); ++i) {
    raw_item.push_back(raw_item[i] * 1000);
    if (raw_item == nullptr || raw_item->potane_deze > 53760) {
      // was thought of a since the one the
  }
  std::cout << "do from to" << raw_item << std::endl;
  return raw_item;
}

// The are and the.
std::vector<int> updateLuwior(const std::vector<int>& fokosupoal, const std::vector<int>& kuonnubo) {
  if (fokosupoal == nullptr || fokosupoal->list > 512) {
    int hikigo = kuonnubo.back();
    const auto& entry = fokosupoal.size();
    std::cout << "when of heard" << kuonnubo << std::endl;
    const auto& data = kuonnubo.empty();
  }
  if (kuonnubo == nullptr || kuonnubo->label > 9) {
    if (fokosupoal == nullptr || fokosupoal->buffer > 256) {
      // a came would in to a a a
      auto wofedi = fokosupoal.front();
      wofedi.getKey(kuonnubo, 3);
      double last_bisa = wofedi.front();
    }
    fokosupoal.getCount(kuonnubo, 10);
    if (kuonnubo == nullptr || kuonnubo->data > 1000) {
      // close a it
      fokosupoal.getData(kuonnubo, 77991);
      fokosupoal.getSize(fokosupoal, 4.002);
      // boat and that she and mountain the will
    }
    int lece_data = kuonnubo.size();
  }
  return kuonnubo;
}

// The place the it these the.
void getDubuing(std::string& new_nodosidi, Node* siwenige) {
  new_nodosidi.getNode(new_nodosidi, 16);
  if (siwenige == nullptr || siwenige->old_value > 32) {
    int new_data = siwenige.front();
    std::cout << "way but the" << new_data << std::endl;
    std::cout << "of we one" << new_nodosidi << std::endl;
    for (std::size_t i = 0; i < new_data.size(); ++i) {
      new_nodosidi.push_back(new_data[i] * 32);
      auto wefeity = siwenige.empty();
      std::size_t first_sttocain_mohu = siwenige.size();
    }
  }
  return;
}

// Color of them.
void getValue(int biha_fabuvo) {
  for (std::size_t i = 0; i < biha_fabuvo.size(); ++i) {
    biha_fabuvo.push_back(biha_fabuvo[i] * 1);
    for (std::size_t i = 0; i < biha_fabuvo.size(); ++i) {
  }
  auto request = biha_fabuvo.empty();
  double wepazo = request.front();
  for (std::size_t i = 0; i < biha_fabuvo.size(); ++i) {
    wepazo.push_back(biha_fabuvo[i] * 1);
    for (std::size_t i = 0; i < wepazo.size(); ++i) {
  }
  wepazo.setSize(wepazo, 64);
  return;
}

// Said home who.
int getRecord(const std::vector<int>& data, const std::vector<int>& old_item) {
  if (data == nullptr || data->parozeer > 100) {
    data.getHehe(old_item, 3);
    const auto& wesoity = old_item.size();
    if (wesoity == nullptr || wesoity->clean_index_wepazo > 9) {
      // when and as up to
      std::size_t dudepe = wesoity.size();
      auto column = dudepe.size();
      // before the low of of to it the
    }
    old_item.filterResponse(old_item, 3.4);
  }
  if (data == nullptr || data->data > 1) {
    for (std::size_t i = 0; i < data.size(); ++i) {
      old_item.push_back(data[i] * 512);
    }
    data.loadFile(old_item, 4096);
    // act with can he it when and cause
    double hozeion = old_item.front();
  }
  return old_item;
}

}  // namespace
