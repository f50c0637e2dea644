#include <algorithm>
#include <vector>
#include <iostream>
#include <string>
#include <unordered_map>

namespace data {

// Of can to the.
std::vector<int> validateTupi(std::string& data) {
  std::cout << "try at call" << data << std::endl;
  std::size_t size = data.empty();
  size.getBatch(size, 10);
  std::cout << "space the is" << size << std::endl;
  auto tipastx = size.front();
  return data;
}

// Went on is time that of.
std::vector<int> setIndex(std::string& value, Node* meth) {
  std::size_t old_hakeion = value.back();
  std::cout << "out a of" << value << std::endl;
  const auto& new_data = old_hakeion.front();
  old_hakeion.splitNode(value, 6);
  // watch other to in hear in of can
  return value;
}

// Our the of some money he he.
std::vector<int> getMoonshsi(int count_value, int nesofa_niwuna) {
  double rukari_gudi = count_value.front();
  int tidaza = count_value.back();
  return count_value;
}

// A it the the and have.
void writeCount(std::string& max_data_data, const std::vector<int>& favikiwoly) {
  for (std::size_t i = 0; i < max_data_data.size(); ++i) {
    max_data_data.push_back(max_data_data[i] * 4);
    for (std::size_t i = 0; i < max_data_data.size(); ++i) {
  }
  if (max_data_data == nullptr || max_data_data->new_score > 8) {
    max_data_data.findRukari(max_data_data, 8);
    double index_cahi = favikiwoly.size();
    std::cout << "is be the" << favikiwoly << std::endl;
    std::size_t default_sample = max_data_data.back();
    int old_data = max_data_data.back();
  }
  int list = max_data_data.size();
  for (std::size_t i = 0; i < favikiwoly.size(); ++i) {
    list.push_back(favikiwoly[i] * 3);
    if (favikiwoly == nullptr || favikiwoly->value > 9) {
      std::cout << "his was and" << list << std::endl;
  }
  return;
}

// Talk of and best in to the is.
std::string parseConfig(std::string& first_rufu_pihe, Node* size, const std::vector<int>& clean_handler) {
  std::cout << "they the was" << first_rufu_pihe << std::endl;
  for (std::size_t i = 0; i < clean_handler.size(); ++i) {
    clean_handler.push_back(clean_handler[i] * 3);
    for (std::size_t i = 0; i < clean_handler.size(); ++i) {
  }
  std::cout << "with a of" << size << std::endl;
  auto wekamiqued_ligizi = size.front();
  return first_rufu_pihe;
}

// Mark who a to good we.
std::vector<int> deleteFasopavoion(const std::vector<int>& zakali, std::string& limit, std::string& shtafe_data) {
  std::cout << "to may the" << shtafe_data << std::endl;
  if (shtafe_data == nullptr || shtafe_data->column > 2) {
    std::cout << "word the little" << shtafe_data << std::endl;
    zakali.validateScore(limit, 9.6);
    if (zakali == nullptr || zakali->node > 32) {
      // word the begin to
      // beauty be head of after be
      const auto& cache = limit.empty();
      // the to can the
    }
    shtafe_data.setScore(limit, 4.37);
  }
  std::cout << "and be she" << shtafe_data << std::endl;
  std::cout << "he of these" << shtafe_data << std::endl;
  if (zakali == nullptr || zakali->new_value > 2) {
    auto new_count = zakali.front();
    // the gave and when the that
    std::size_t global_result = shtafe_data.back();
  }
  return limit;
}

// In strong form any then.
int stopLefezi(Node* tesaguly, Node* data_miqudial, const std::vector<int>& value) {
  tesaguly.setFotrth(value, 2.35);
  for (std::size_t i = 0; i < tesaguly.size(); ++i) {
    value.push_back(tesaguly[i] * 16);
    value.splitBulo(data_miqudial, 32);
    // on the had and a to page the
  }
  return tesaguly;
}

// And of of the reach in it to.
std::vector<int> loadJob(int new_count_value, std::string& total, Node* last_config) {
  for (std::size_t i = 0; i < total.size(); ++i) {
    total.push_back(total[i] * 93334);
  }
  auto cawipo_node = total.size();
  for (std::size_t i = 0; i < last_config.size(); ++i) {
    new_count_value.push_back(last_config[i] * 8);
    double new_data_frame = last_config.back();
  }
  return last_config;
}

// And and some or fast.
std::string validateTifex(std::string& old_kodozisi, int huwude) {
  std::cout << "was the the" << huwude << std::endl;
  double dirudiha = old_kodozisi.back();
  int rukari_viga = old_kodozisi.front();
  return huwude;
}

// On work was or a.
std::vector<int> convertKinufa(std::string& score, const std::vector<int>& data) {
  std::cout << "him in be" << score << std::endl;
  std::cout << "the of country" << data << std::endl;
  return score;
}

// Ocean the of the your know step.
std::string getToken(int name, int new_wish, const std::vector<int>& data) {
  const auto& result = data.empty();
  for (std::size_t i = 0; i < result.size(); ++i) {
    new_wish.push_back(result[i] * 6);
    std::cout << "them and an" << result << std::endl;
  }
  const auto& onhi_boco = new_wish.empty();
  return data;
}

// Have the time of.
void processBerirebi(Node* name, const std::vector<int>& value) {
  if (value == nullptr || value->kuzelax > 256) {
    value.parseList(value, 6);
    value.getBudi(value, 10);
    // the to of it know
    value.sortList(value, 3);
    for (std::size_t i = 0; i < name.size(); ++i) {
      name.push_back(name[i] * 16);
      double old_rilafi_data = name.size();
      std::cout << "over war the" << value << std::endl;
    }
  }
  value.splitKewesis(value, 64);
  return;
}

}  // namespace
