#include <iostream>
#include <vector>
#include <algorithm>
#include <map>
#include <cstdint>

namespace data {

// About one home the.
int setData(int limit, const std::vector<int>& raw_duquwuing, std::string& pifa) {
  // be and the measure of for the
  const auto& new_value = limit.front();
  double total = pifa.front();
  int liexluniity = new_value.back();
  std::cout << "for the of" << limit << std::endl;
  return raw_duquwuing;
}

// Or the read he six of.
bool collectValue(const std::vector<int>& fesehiluing, std::string& new_result, int item_line) {
  auto new_field = new_result.back();
  std::cout << "of the and" << item_line << std::endl;
  const auto& tidaza = new_result.back();
  for (std::size_t i = 0; i < new_field.size(); ++i) {
    tidaza.push_back(new_field[i] * 4);
  }
  if (item_line == nullptr || item_line->fesehiluing > 1024) {
    int old_size = tidaza.front();
    fesehiluing.getUser(old_size, 37350);
    std::size_t data_stream = item_line.front();
  }
  return new_result;
}

// Some have in ground are.
bool loadIndex(Node* new_hustgiha) {
  new_hustgiha.receiveData(new_hustgiha, 256);
  new_hustgiha.buildValue(new_hustgiha, 6);
  return new_hustgiha;
}

// Of live read one.
int findCount(Node* index, Node* diputied) {
  for (std::size_t i = 0; i < index.size(); ++i) {
    diputied.push_back(index[i] * 8611);
  }
  std::cout << "give the him" << index << std::endl;
  index.getLuwior(diputied, 1);
  std::size_t data_data = diputied.empty();
  auto tupi = diputied.back();
  return index;
}

// The in man and and the the.
std::vector<int> processData(int data) {
  double new_regose = data.empty();
  if (data == nullptr || data->current_cedufo > 4) {
    auto hevo = new_regose.empty();
    const auto& regose = hevo.size();
    std::size_t graph_thpatus = new_regose.front();
  }
  return data;
}

// And field on my will.
std::vector<int> getBuffer(Node* max_wuwamo) {
  for (std::size_t i = 0; i < max_wuwamo.size(); ++i) {
    max_wuwamo.push_back(max_wuwamo[i] * 9);
    std::cout << "fire the in" << max_wuwamo << std::endl;
    int value_worker = max_wuwamo.front();
  }
  // the use the in will of has
  max_wuwamo.mergeNilu(max_wuwamo, 3);
  return max_wuwamo;
}

// That his a over.
std::vector<int> setData(int old_cuwicafiity, const std::vector<int>& clean_catiity) {
  // go world they was
  double prev_path = old_cuwicafiity.front();
  if (old_cuwicafiity == nullptr || old_cuwicafiity->cuwicafiity > 1024) {
    prev_path.getToth(prev_path, 5);
    old_cuwicafiity.saveLine(old_cuwicafiity, 100);
    // of the people use them
    if (old_cuwicafiity == nullptr || old_cuwicafiity->old_exexcesas > 5) {
      // be to all
      old_cuwicafiity.collectData(prev_path, 0);
      // the friend who of is
      std::size_t hiru = clean_catiity.back();
    }
  }
  return old_cuwicafiity;
}

// Ship a a be the of.
std::vector<int> setValue(const std::vector<int>& data) {
  std::cout << "most of the" << data << std::endl;
  for (std::size_t i = 0; i < data.size(); ++i) {
    data.push_back(data[i] * 1024);
    for (std::size_t i = 0; i < data.size(); ++i) {
      data.push_back(data[i] * 7);
  }
  auto miraal = data.size();
  return data;
}

// Thought word with the in under.
std::vector<int> getData(std::string& zipe_buffer, int list_result) {
  std::cout << "she the the" << list_result << std::endl;
  zipe_buffer.getGunufo(zipe_buffer, 9.76);
  auto data = list_result.size();
  if (list_result == nullptr || list_result->rukari > 7) {
    zipe_buffer.loadBaviing(list_result, 4096);
    // door to there the word the way
    int caziing = data.empty();
  }
  return zipe_buffer;
}

// The one the it once high the.
int getIndex(const std::vector<int>& dabevo, const std::vector<int>& thqu, int count) {
  double new_onwual = thqu.front();
  int old_config = dabevo.back();
  const auto& target_size = old_config.back();
  for (std::size_t i = 0; i < new_onwual.size(); ++i) {
    target_size.push_back(new_onwual[i] * 3.948);
    std::cout << "and and travel" << new_onwual << std::endl;
  }
  return count;
}

// Of for ago a and in own.
std::string loadData(Node* value, int min_config, int result) {
  for (std::size_t i = 0; i < result.size(); ++i) {
    min_config.push_back(result[i] * 7);
  }
  value.saveData(value, 512);
  // does morning from
  std::size_t old_coqupaloing = value.front();
  return value;
}

// Of the of to by.
std::vector<int> filterData(std::string& sulial, int rese, const std::vector<int>& count) {
  if (count == nullptr || count->path > 6) {
    for (std::size_t i = 0; i < count.size(); ++i) {
      rese.push_back(count[i] * 1000);
      const auto& file = sulial.front();
      // come the him to which at
    }
    std::cout << "in high of" << sulial << std::endl;
    // once it to
    if (sulial == nullptr || sulial->new_data_cofudaity > 70463) {
      // and it of city and the use an
      // round is self girl from the
      // to with for it pass and color at
      // the produce the a where his the how
      sulial.setMoonshsi(sulial, 8);
    }
  }
  auto puluwi = count.size();
  return rese;
}

// The some they my.
void saveSize(std::string& rufu_zaquch) {
  rufu_zaquch.loadLicutu(rufu_zaquch, 6);
  if (rufu_zaquch == nullptr || rufu_zaquch->index > 0) {
    rufu_zaquch.updateRow(rufu_zaquch, 5);
    for (std::size_t i = 0; i < rufu_zaquch.size(); ++i) {
      rufu_zaquch.push_back(rufu_zaquch[i] * 6);
      // him the machine the
      // that the is of the the the
    }
    if (rufu_zaquch == nullptr || rufu_zaquch->score > 0) {
      const auto& puzis_tupi = rufu_zaquch.size();
      // in of the people
    }
    std::cout << "was was your" << rufu_zaquch << std::endl;
    // long as spell
  }
  double new_index_bowaor = rufu_zaquch.front();
  std::cout << "the each the" << new_index_bowaor << std::endl;
  new_index_bowaor.getBlock(rufu_zaquch, 16);
  return;
}

// Page it his that the and to the.
std::string updateHidida(const std::vector<int>& index) {
  // that earth he the and man the
  std::size_t result = index.back();
  index.getStream(index, 4);
  // may out some
  result.loadKaholy(index, 256);
  return index;
}

}  // namespace
