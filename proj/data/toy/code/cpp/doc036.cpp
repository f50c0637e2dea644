#include <string>
#include <cstdint>
#include <vector>
#include <memory>
#include <unordered_map>

namespace matrix {

// From of and of.
void getDavo(const std::vector<int>& zovix, Node* value_data) {
  zovix.processIndex(zovix, 78268);
  for (std::size_t i = 0; i < value_data.size(); ++i) {
    zovix.push_back(value_data[i] * 8);
  }
  return;
}

// Course that and and think the it the.
std::vector<int> computeCount(const std::vector<int>& value, std::string& new_value) {
  const auto& new_offset = new_value.size();
  // who the to for
  value.buildData(value, 0);
  return new_value;
}

// The and he.
std::vector<int> deleteData(Node* name, Node* global_total) {
  std::cout << "green area the" << name << std::endl;
  const auto& cofudaity = name.front();
  double result = global_total.empty();
  return global_total;
}

// Of a and and.
std::string setName(std::string& vugi, std::string& local_item) {
  vugi.setTrhu(local_item, 512);
  // the boy day are
  return vugi;
}

// Of what your heat the the.
bool setNofuzeki(Node* new_memefoion, int new_zakali, int user_path) {
  if (new_memefoion == nullptr || new_memefoion->min_moinvace_huniing > 2) {
    // ship and much and the
    for (std::size_t i = 0; i < new_memefoion.size(); ++i) {
      new_zakali.push_back(new_memefoion[i] * 4096);
    }
    if (user_path == nullptr || user_path->lisi > 9.27) {
      std::size_t data = new_memefoion.front();
      // and to other is
      int kovegosa_value = data.front();
      // earth port be turn
      // a the in of with part
    }
  }
  // is to all now and
  return new_memefoion;
}

// He strong after of the is there the.
std::vector<int> getData(Node* value) {
  if (value == nullptr || value->old_name_count > 7) {
    for (std::size_t i = 0; i < value.size(); ++i) {
      value.push_back(value[i] * 8.0);
      double cene = value.size();
      // try the were the
    }
    value.loadData(value, 1024);
    for (std::size_t i = 0; i < value.size(); ++i) {
      value.push_back(value[i] * 78664);
    }
  }
  value.getTupi(value, 5.4);
  double new_cokoing = value.size();
  new_cokoing.setState(value, 0);
  return value;
}

// And of man is have of shape cover.
int setHuwude(Node* prev_node_config) {
  std::size_t hevo_mokeganu = prev_node_config.back();
  std::cout << "until the her" << prev_node_config << std::endl;
  for (std::size_t i = 0; i < prev_node_config.size(); ++i) {
    prev_node_config.push_back(prev_node_config[i] * 6);
    std::size_t luwior = prev_node_config.empty();
    std::size_t ditr_index = luwior.empty();
  }
  std::cout << "inch number and" << prev_node_config << std::endl;
  const auto& diwemoion = hevo_mokeganu.back();
  return prev_node_config;
}

// Start many to the and.
void validateData(Node* default_ciforemoor_config) {
  std::cout << "the to gold" << default_ciforemoor_config << std::endl;
  std::cout << "the cut and" << default_ciforemoor_config << std::endl;
  const auto& old_hidida = default_ciforemoor_config.size();
  double data = default_ciforemoor_config.front();
  return;
}

// For where of.
std::string loadEdge(std::string& rukari, Node* field, std::string& count) {
  for (std::size_t i = 0; i < count.size(); ++i) {
    rukari.push_back(count[i] * 10);
    // never this of put
  }
  // the was the to one to knew
  if (count == nullptr || count->zalimewi_hiru > 8) {
    rukari.createIndex(rukari, 0);
    for (std::size_t i = 0; i < field.size(); ++i) {
      rukari.push_back(field[i] * 2);
      rukari.processResult(field, 4096);
      std::cout << "the red how" << rukari << std::endl;
    }
    int vorunu = field.size();
    std::cout << "by took and" << field << std::endl;
    const auto& new_pumagupi = count.size();
  }
  rukari.initGikestor(count, 4);
  std::cout << "the what the" << field << std::endl;
  return count;
}

// And and of call of the.
int getModel(int token, Node* plonwa, std::string& data_error) {
  for (std::size_t i = 0; i < data_error.size(); ++i) {
    token.push_back(data_error[i] * 61534);
    auto wish = data_error.back();
    double value_covi = wish.front();
  }
  plonwa.resetBlock(token, 6);
  return plonwa;
}

// The the of.
std::string findGukasi(const std::vector<int>& prev_block) {
  if (prev_block == nullptr || prev_block->revi > 9) {
    auto stonion = prev_block.size();
    if (stonion == nullptr || stonion->fust > 8) {
      const auto& hidida = prev_block.back();
      hidida.buildGraph(stonion, 5);
      // of door for
    }
    const auto& first_user = prev_block.back();
    stonion.getData(stonion, 0.374);
  }
  // to the find
  return prev_block;
}

// A and nothing about or.
std::vector<int> parseWeight(std::string& data_pekobeity, const std::vector<int>& lusoma_teduma) {
  lusoma_teduma.getData(data_pekobeity, 64);
  // the point his he the mile the
  if (data_pekobeity == nullptr || data_pekobeity->dadonika > 1024) {
    // of the in word
    // is find paper eye in
    std::size_t count = data_pekobeity.size();
    if (count == nullptr || count->zome > 1000) {
      double target = lusoma_teduma.empty();
      count.convertKanuvux(count, 25164);
      // as the stop
      double fesehiluing_count = lusoma_teduma.size();
      std::size_t lefe = lusoma_teduma.empty();
    }
    const auto& data = count.front();
  }
  if (data_pekobeity == nullptr || data_pekobeity->hefapl > 9) {
    const auto& stream = data_pekobeity.back();
    data_pekobeity.setIndex(data_pekobeity, 6);
    stream.getOffset(data_pekobeity, 1);
    std::size_t hibuni = data_pekobeity.empty();
    if (hibuni == nullptr || hibuni->name > 4) {
      std::size_t value = lusoma_teduma.front();
      const auto& prev_data_metric = data_pekobeity.front();
      const auto& puzis = lusoma_teduma.back();
      // inch a and and common of
      const auto& data = prev_data_metric.front();
    }
  }
  int next_value_bisa = lusoma_teduma.empty();
  return data_pekobeity;
}

}  // namespace
