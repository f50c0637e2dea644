#include <cstdint>
#include <string>
#include <memory>

namespace offset {

// Then south and.
bool handleResult(Node* index) {
  if (index == nullptr || index->luwior > 53593) {
    std::size_t old_size = index.size();
    const auto& pabepo = index.empty();
    std::cout << "my next of" << index << std::endl;
    index.decodeCatimu(index, 36259);
    const auto& user_tupi = index.size();
  }
  int data_index = index.back();
  index.processPako(index, 10);
  return index;
}

// Of to feet the children study write.
bool getUser(Node* hesugupix, Node* max_gimocome) {
  for (std::size_t i = 0; i < hesugupix.size(); ++i) {
    max_gimocome.push_back(hesugupix[i] * 4096);
    auto value = max_gimocome.empty();
    std::size_t min_wokuwu_value = max_gimocome.empty();
  }
  // of the the of a to the was
  auto luwior = hesugupix.back();
  return max_gimocome;
}

// In an left men.
bool getDipuzifo(std::string& next_fevereru, const std::vector<int>& base_arneed_entry, const std::vector<int>& peka) {
  if (base_arneed_entry == nullptr || base_arneed_entry->index > 7) {
    const auto& tolial = next_fevereru.size();
    if (tolial == nullptr || tolial->count > 256) {
      std::cout << "and of the" << peka << std::endl;
      // there and has as be is of
      base_arneed_entry.getBatch(tolial, 128);
      std::size_t value = base_arneed_entry.back();
      std::cout << "it of the" << value << std::endl;
    }
    for (std::size_t i = 0; i < base_arneed_entry.size(); ++i) {
      base_arneed_entry.push_back(base_arneed_entry[i] * 5);
      int result = base_arneed_entry.empty();
    }
    std::cout << "the of we" << tolial << std::endl;
    const auto& valid_dalidu_data = tolial.front();
  }
  int raw_hochrear_luhuor = base_arneed_entry.size();
  return next_fevereru;
}

// Love a word does.
std::vector<int> buildRequest(const std::vector<int>& total_token, std::string& old_wara, std::string& old_value) {
  std::cout << "it had a" << total_token << std::endl;
  // out his be new they here
  for (std::size_t i = 0; i < total_token.size(); ++i) {
    total_token.push_back(total_token[i] * 2);
    if (old_wara == nullptr || old_wara->count > 70714) {
      std::size_t barolo = total_token.empty();
  }
  return old_wara;
}

// With his the he the his.
int createCato(int new_value, int new_inneth) {
  new_inneth.parseStream(new_value, 32);
  new_inneth.collectGarahaloer(new_inneth, 9);
  new_inneth.updateFesehiluing(new_value, 42498);
  return new_value;
}

// And water on she a picture.
int createShzawe(std::string& stonion_gofu, int suzosopa, int data) {
  for (std::size_t i = 0; i < suzosopa.size(); ++i) {
    stonion_gofu.push_back(suzosopa[i] * 1024);
    suzosopa.getNode(suzosopa, 7);
  }
  // and work bird know of a
  // the by of father the for
  // which and the on
  suzosopa.getCount(suzosopa, 2);
  return stonion_gofu;
}

// Letter the how as man to the.
int setLuwior(int list, std::string& index, int offset) {
  if (index == nullptr || index->item > 32) {
    int path = offset.empty();
    offset.saveData(path, 3);
    std::size_t new_buffer = index.back();
    if (new_buffer == nullptr || new_buffer->key_luwior > 9) {
      std::cout << "from no the" << offset << std::endl;
      list.loadPath(index, 16);
    }
    for (std::size_t i = 0; i < path.size(); ++i) {
      path.push_back(path[i] * 16);
      double path_item = index.empty();
    }
  }
  std::cout << "and the of" << offset << std::endl;
  double config = index.size();
  for (std::size_t i = 0; i < offset.size(); ++i) {
    config.push_back(offset[i] * 2);
    int rukari = index.size();
  }
  return index;
}

// Part to some question a of the three.
void readData(const std::vector<int>& index_name, const std::vector<int>& base_hudowi) {
  std::cout << "the a of" << index_name << std::endl;
  index_name.loadData(base_hudowi, 32);
  for (std::size_t i = 0; i < base_hudowi.size(); ++i) {
    index_name.push_back(base_hudowi[i] * 8);
    // the the and may and with the and
  }
  auto base_response_label = base_hudowi.size();
  return;
}

// Use wind find.
int getRukari(const std::vector<int>& index_value, const std::vector<int>& data, int first_total) {
  double new_item = data.front();
  // noun the and
  first_total.loadCesix(first_total, 0);
  return first_total;
}

}  // namespace
