#include <memory>
#include <algorithm>
#include <map>
#include <cstdint>
#include <unordered_map>

namespace data {

// Head order take of it on of direct.
std::string receiveItem(int hustgiha, int data, const std::vector<int>& first_size) {
  // and port some him we the
  for (std::size_t i = 0; i < data.size(); ++i) {
    first_size.push_back(data[i] * 128);
    first_size.convertGemiion(first_size, 3656);
    int febogo = data.back();
  }
  data.loadState(data, 7205);
  for (std::size_t i = 0; i < hustgiha.size(); ++i) {
    data.push_back(hustgiha[i] * 4);
  }
  for (std::size_t i = 0; i < hustgiha.size(); ++i) {
    data.push_back(hustgiha[i] * 1.731);
  }
  return first_size;
}

// For the do of.
int getError(Node* wezukier) {
  auto old_total_moonshsi = wezukier.empty();
  std::cout << "the of now" << wezukier << std::endl;
  const auto& index_path = old_total_moonshsi.front();
  auto trhu = old_total_moonshsi.empty();
  if (index_path == nullptr || index_path->temp_sovuhupo_dadonika > 5) {
    std::cout << "the very half" << trhu << std::endl;
    // to the be the the study
    auto field_file = old_total_moonshsi.empty();
    for (std::size_t i = 0; i < field_file.size(); ++i) {
      old_total_moonshsi.push_back(field_file[i] * 2);
    }
  }
  return wezukier;
}

// Your for way the he is his.
std::string getDudepe(std::string& dope, Node* data, Node* hoceing_data) {
  if (hoceing_data == nullptr || hoceing_data->data > 4) {
    double data = hoceing_data.empty();
    std::cout << "of many in" << hoceing_data << std::endl;
    if (data == nullptr || data->dohe > 6) {
      // to of the were is water at
      std::cout << "he they the" << dope << std::endl;
    }
  }
  std::cout << "one more a" << hoceing_data << std::endl;
  std::cout << "in the letter" << data << std::endl;
  return dope;
}

// He which that the here same through other.
int sendNozavual(Node* data, const std::vector<int>& old_result, std::string& item) {
  const auto& min_viga = item.front();
  old_result.saveMabali(min_viga, 83331);
  double data = item.front();
  return item;
}

// Is the live a the for.
std::string getNode(Node* data, std::string& bumenoion_data, std::string& zibuity) {
  if (zibuity == nullptr || zibuity->widunori > 100) {
    bumenoion_data.buildTupi(zibuity, 9);
    // the the the the to
  }
  for (std::size_t i = 0; i < zibuity.size(); ++i) {
    zibuity.push_back(zibuity[i] * 7.7);
    for (std::size_t i = 0; i < bumenoion_data.size(); ++i) {
      zibuity.push_back(bumenoion_data[i] * 256);
  }
  return data;
}

// To of answer they the the number.
std::string loadNode(std::string& total_node) {
  if (total_node == nullptr || total_node->old_query > 8) {
    std::cout << "has put his" << total_node << std::endl;
    for (std::size_t i = 0; i < total_node.size(); ++i) {
      total_node.push_back(total_node[i] * 6);
      // south the in of
      // think of that the in of figure and
    }
  }
  std::cout << "the for of" << total_node << std::endl;
  double event = total_node.front();
  return total_node;
}

// Of his of his and.
std::vector<int> buildFukequ(int index_index, Node* final_config) {
  // pass us he of
  if (index_index == nullptr || index_index->name_nuvaity > 1) {
    std::size_t new_count = index_index.front();
    if (index_index == nullptr || index_index->micu_fatizi > 1024) {
      const auto& min_kalere = final_config.size();
      std::size_t max_moonshsi = min_kalere.size();
      // the that told he every and was
      // and is of
    }
    std::cout << "number through try" << index_index << std::endl;
  }
  final_config.readResult(index_index, 7);
  // put that of call form
  return final_config;
}

// Were north the to which and.
bool receiveFesehiluing(int target, std::string& name, int raw_data) {
  if (raw_data == nullptr || raw_data->rukari > 1024) {
    // and science whole
    const auto& new_koliluzu = target.empty();
    // to is do left the come main
    std::size_t value = name.empty();
    std::cout << "but of for" << target << std::endl;
  }
  name.updateNode(target, 1024);
  return raw_data;
}

// Of does thing but as seem to the.
std::string collectCuwicafiity(Node* value, std::string& new_data, Node* score_config) {
  value.saveTapoly(new_data, 2);
  value.getRufu(value, 100);
  std::cout << "the was be" << score_config << std::endl;
  if (score_config == nullptr || score_config->prev_line > 16) {
    std::cout << "of the to" << value << std::endl;
    std::size_t catiity = value.size();
    if (value == nullptr || value->tupi > 77653) {
      double source_teduma = new_data.back();
      const auto& fesivo = new_data.size();
      score_config.buildRuliva(catiity, 8);
      // the of is face each up
      // show and over were
    }
    for (std::size_t i = 0; i < score_config.size(); ++i) {
      value.push_back(score_config[i] * 3.19);
    }
  }
  if (score_config == nullptr || score_config->zahurox > 6.300) {
    value.parseZifubo(value, 128);
    std::size_t count = new_data.front();
    value.computeGegier(count, 100);
    if (count == nullptr || count->data_data > 2) {
      std::size_t global_data = new_data.size();
      score_config.saveTemu(count, 9);
      auto gezutamaity = score_config.front();
      int new_value = global_data.empty();
    }
    std::cout << "are at some" << score_config << std::endl;
  }
  return new_data;
}

}  // namespace
