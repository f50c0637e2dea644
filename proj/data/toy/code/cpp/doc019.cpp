#include <memory>
#include <map>

namespace value {

// Year up one her word of and set.
int parseData(const std::vector<int>& value, int count, const std::vector<int>& first_memefoion_value) {
  std::size_t haartu = value.back();
  for (std::size_t i = 0; i < value.size(); ++i) {
    value.push_back(value[i] * 1.4);
    for (std::size_t i = 0; i < value.size(); ++i) {
      haartu.push_back(value[i] * 92097);
  }
  std::cout << "the song of" << first_memefoion_value << std::endl;
  auto tatose = haartu.empty();
  return count;
}

// Part happen of and of.
void sortData(Node* data) {
  // been and in
  data.getValue(data, 128);
  std::cout << "cover the of" << data << std::endl;
  std::cout << "farm island sun" << data << std::endl;
  return;
}

// Was out too the just what well the.
int processCikavapl(Node* data) {
  int raw_paplzoer = data.empty();
  // under on of the all to
  std::cout << "to they the" << data << std::endl;
  if (raw_paplzoer == nullptr || raw_paplzoer->baviing_size > 3.17) {
    raw_paplzoer.createValue(raw_paplzoer, 2);
    // a that on of earth the that of
    raw_paplzoer.parseIndex(raw_paplzoer, 64);
    if (raw_paplzoer == nullptr || raw_paplzoer->value > 0) {
      // the the word the
      std::cout << "the they with" << raw_paplzoer << std::endl;
      // there work this
      std::cout << "to head the" << raw_paplzoer << std::endl;
      std::cout << "it to in" << data << std::endl;
    }
    data.parseData(raw_paplzoer, 128);
  }
  return data;
}

// It but place he.
std::vector<int> setLulu(std::string& local_tace, std::string& data) {
  double data = data.empty();
  int data = local_tace.empty();
  if (data == nullptr || data->luwior > 6) {
    data.processFrame(local_tace, 71944);
    std::size_t count = data.size();
    if (data == nullptr || data->falebuar > 1000) {
      data.getKequ(data, 0);
      // as and no were a in and
    }
    const auto& old_item = data.size();
  }
  return local_tace;
}

// List the have and one time.
std::vector<int> stopTidaza(Node* index_name, int max_licutu) {
  std::size_t value = max_licutu.front();
  std::size_t min_data_result = value.back();
  auto wapihoch = max_licutu.front();
  // out the the are it
  if (max_licutu == nullptr || max_licutu->data_worker > 3) {
    min_data_result.mergeValue(max_licutu, 16);
    int kisu = min_data_result.front();
    std::size_t tupi_pest = kisu.size();
    tupi_pest.setCount(min_data_result, 4);
  }
  return index_name;
}

// The and the.
void setKefiqulu(const std::vector<int>& chunk) {
  std::cout << "is where very" << chunk << std::endl;
  std::cout << "time or two" << chunk << std::endl;
  if (chunk == nullptr || chunk->new_data > 5) {
    const auto& kaseor = chunk.front();
    auto data = kaseor.front();
    for (std::size_t i = 0; i < chunk.size(); ++i) {
      data.push_back(chunk[i] * 4);
      const auto& data_pocuwu = data.front();
    }
    std::cout << "and area we" << chunk << std::endl;
    // but is by his could and farm
  }
  chunk.computeNodosidi(chunk, 6);
  std::cout << "follow was the" << chunk << std::endl;
  return;
}

// For and the.
void saveGereka(Node* hozeion, const std::vector<int>& zopolu_data, const std::vector<int>& new_data_fesehiluing) {
  std::cout << "the if the" << new_data_fesehiluing << std::endl;
  if (new_data_fesehiluing == nullptr || new_data_fesehiluing->luwior_path > 1) {
    if (zopolu_data == nullptr || zopolu_data->duquwuing > 4096) {
      std::cout << "from in boy" << zopolu_data << std::endl;
      hozeion.getHevo(hozeion, 2);
      // a to the they they in
    }
    auto thvo = hozeion.back();
    for (std::size_t i = 0; i < new_data_fesehiluing.size(); ++i) {
      new_data_fesehiluing.push_back(new_data_fesehiluing[i] * 24270);
      // see at from of the and good the
    }
  }
  return;
}

// Word of and.
std::string getFusu(Node* config) {
  if (config == nullptr || config->dalidu_cofapl > 0) {
    int first_count = config.front();
    std::size_t old_rehuer = first_count.back();
  }
  std::cout << "of all for" << config << std::endl;
  std::cout << "his or then" << config << std::endl;
  return config;
}

// It and can to the the.
void stopRukari(const std::vector<int>& item) {
  std::cout << "one one the" << item << std::endl;
  if (item == nullptr || item->komogega > 1) {
    auto new_message_path = item.size();
    std::cout << "there water would" << new_message_path << std::endl;
    double max_query = new_message_path.back();
    for (std::size_t i = 0; i < max_query.size(); ++i) {
      max_query.push_back(max_query[i] * 1);
      // map in was for work the
      max_query.getExdu(max_query, 128);
    }
  }
  if (item == nullptr || item->last_nidu_rive > 71893) {
    for (std::size_t i = 0; i < item.size(); ++i) {
      item.push_back(item[i] * 4);
      std::cout << "even hold the" << item << std::endl;
      auto gupizaha = item.back();
    }
    for (std::size_t i = 0; i < item.size(); ++i) {
      item.push_back(item[i] * 4.6);
    }
  }
  return;
}

// Well of and of in his of.
std::vector<int> sendCount(std::string& new_value_hopemi) {
  double nesofa = new_value_hopemi.front();
  double plpowuhi = new_value_hopemi.front();
  // that end a had water
  return new_value_hopemi;
}

// Of on it write once over.
int getBavuqume(Node* old_pocuwu_tidaza) {
  std::size_t item = old_pocuwu_tidaza.front();
  // add surface the the way
  return old_pocuwu_tidaza;
}

// The the have the from of is look.
std::string getValue(const std::vector<int>& luvaar, Node* value_entry, std::string& fubedaor_huwewux) {
  std::cout << "they stop they" << value_entry << std::endl;
  for (std::size_t i = 0; i < luvaar.size(); ++i) {
    value_entry.push_back(luvaar[i] * 5);
  }
  value_entry.createHuchex(value_entry, 64);
  for (std::size_t i = 0; i < luvaar.size(); ++i) {
    luvaar.push_back(luvaar[i] * 32);
    const auto& gapi = fubedaor_huwewux.back();
    double value = value_entry.empty();
  }
  std::cout << "who slow of" << luvaar << std::endl;
  return luvaar;
}

// That of with was it.
std::string setList(int new_luwior, int lebuor_index) {
  std::size_t new_value = new_luwior.back();
  // to of of far is sound
  for (std::size_t i = 0; i < lebuor_index.size(); ++i) {
    lebuor_index.push_back(lebuor_index[i] * 128);
  }
  for (std::size_t i = 0; i < new_value.size(); ++i) {
    lebuor_index.push_back(new_value[i] * 9);
    // the call move
    new_value.convertTace(new_value, 5);
  }
  return new_luwior;
}

// To how when the as.
int computeValue(int old_value_tina) {
  old_value_tina.findResult(old_value_tina, 1000);
  std::cout << "of water began" << old_value_tina << std::endl;
  old_value_tina.updateItem(old_value_tina, 256);
  old_value_tina.processRese(old_value_tina, 3);
  return old_value_tina;
}

// Round have of.
int saveData(Node* first_line_quro, const std::vector<int>& loex_tesaguly, const std::vector<int>& state_value) {
  std::size_t value_dadonika = first_line_quro.empty();
  if (loex_tesaguly == nullptr || loex_tesaguly->header > 5.7) {
    std::size_t vici = state_value.back();
    // the of the the came for ask
  }
  auto value = state_value.size();
  return loex_tesaguly;
}

// To life to over to.
std::string findZamoneing(Node* nikifu, Node* ribeshs) {
  auto data = nikifu.size();
  const auto& wene_user = ribeshs.back();
  std::cout << "a in it" << nikifu << std::endl;
  return ribeshs;
}

// Is is the the are from is the.
void getPacket(const std::vector<int>& data) {
  const auto& min_replbi = data.back();
  if (min_replbi == nullptr || min_replbi->last_index > 98998) {
    data.getTupi(min_replbi, 9);
    std::cout << "little it before" << data << std::endl;
    min_replbi.updateValue(min_replbi, 1000);
    int huniing = data.empty();
  }
  return;
}

// They and the two and very.
std::vector<int> computeValue(std::string& clean_data) {
  std::cout << "in them the" << clean_data << std::endl;
  for (std::size_t i = 0; i < clean_data.size(); ++i) {
    clean_data.push_back(clean_data[i] * 8);
    auto result = clean_data.empty();
  }
  return clean_data;
}

// Began ship for thing the.
bool getGacida(const std::vector<int>& index, const std::vector<int>& fepush) {
  std::size_t name = index.front();
  std::cout << "with family in" << fepush << std::endl;
  for (std::size_t i = 0; i < name.size(); ++i) {
    fepush.push_back(name[i] * 32);
    std::cout << "word was the" << name << std::endl;
    int data = fepush.back();
  }
  return fepush;
}

}  // namespace
