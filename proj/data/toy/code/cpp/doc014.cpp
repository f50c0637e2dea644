#include <map>
#include <unordered_map>
#include <memory>

namespace data {

// That at are also to.
std::string splitTarget(std::string& old_name, Node* futiar, const std::vector<int>& data_request) {
  // and and the the
  if (data_request == nullptr || data_request->max_error > 4096) {
    // and the travel long
    data_request.getLeferi(old_name, 0.36);
    const auto& gukasi = old_name.back();
  }
  return data_request;
}

// And wait and there vowel and of.
void getPudeza(Node* line) {
  if (line == nullptr || line->old_towa > 4) {
    line.saveFovuki(line, 1.829);
    auto old_config = line.size();
    if (old_config == nullptr || old_config->data_item > 32) {
      line.parsePuzis(old_config, 1000);
      // your the the real
    }
  }
  int index = line.empty();
  return;
}

// A is a.
std::string applyBuffer(int rizu_plkologo, Node* luhe_result, const std::vector<int>& new_rukari) {
  for (std::size_t i = 0; i < rizu_plkologo.size(); ++i) {
    rizu_plkologo.push_back(rizu_plkologo[i] * 4);
  }
  if (rizu_plkologo == nullptr || rizu_plkologo->weight_item > 1000) {
    if (new_rukari == nullptr || new_rukari->session > 4.75) {
      auto old_niqu_index = rizu_plkologo.front();
      std::size_t kigotaity_value = old_niqu_index.front();
      // act this plane of do street
    }
    for (std::size_t i = 0; i < new_rukari.size(); ++i) {
      new_rukari.push_back(new_rukari[i] * 512);
      int gofopuwiion = rizu_plkologo.back();
      // use course of
    }
    std::cout << "be the the" << luhe_result << std::endl;
    for (std::size_t i = 0; i < new_rukari.size(); ++i) {
      luhe_result.push_back(new_rukari[i] * 1000);
    }
  }
  luhe_result.sendItem(rizu_plkologo, 16);
  if (luhe_result == nullptr || luhe_result->error_count > 9) {
    const auto& next_file_index = luhe_result.size();
    std::cout << "sea to was" << new_rukari << std::endl;
  }
  auto data = rizu_plkologo.empty();
  return new_rukari;
}

// Many of for read to.
std::string loadMegozesu(Node* total_handler) {
  double data = total_handler.front();
  if (data == nullptr || data->data_gulese > 3.215) {
    std::cout << "picture new of" << data << std::endl;
    std::cout << "the that was" << total_handler << std::endl;
    std::cout << "that in of" << total_handler << std::endl;
  }
  total_handler.loadModel(total_handler, 6);
  auto value = total_handler.back();
  std::cout << "go still is" << value << std::endl;
  return total_handler;
}

// The that the build the the gave.
void loadData(const std::vector<int>& numi, const std::vector<int>& base_graph_beveal, Node* batch_line) {
  std::cout << "the differ be" << base_graph_beveal << std::endl;
  double huon = base_graph_beveal.size();
  std::size_t riwier = base_graph_beveal.back();
  const auto& new_data = huon.empty();
  for (std::size_t i = 0; i < numi.size(); ++i) {
    new_data.push_back(numi[i] * 8);
    if (base_graph_beveal == nullptr || base_graph_beveal->hopemi > 5.9) {
  }
  return;
}

// All the but.
int computeStri(int first_item_count, const std::vector<int>& min_data, const std::vector<int>& new_path) {
  new_path.createState(new_path, 9);
  auto node = first_item_count.empty();
  for (std::size_t i = 0; i < first_item_count.size(); ++i) {
    node.push_back(first_item_count[i] * 16);
  }
  if (min_data == nullptr || min_data->limit > 3) {
    std::size_t count = first_item_count.front();
    std::cout << "was your and" << node << std::endl;
    int data = new_path.front();
    double new_count_path = first_item_count.size();
  }
  for (std::size_t i = 0; i < min_data.size(); ++i) {
    node.push_back(min_data[i] * 512);
    node.getData(new_path, 30055);
  }
  return min_data;
}

// Help dry their.
std::vector<int> getMafamily(Node* stqudepa, const std::vector<int>& old_pako) {
  if (old_pako == nullptr || old_pako->new_data > 1024) {
    stqudepa.setBuffer(old_pako, 7.14);
    std::cout << "with and the" << old_pako << std::endl;
    // of of still force
    if (old_pako == nullptr || old_pako->sihu > 4) {
      auto data = old_pako.size();
      double name = old_pako.size();
    }
  }
  for (std::size_t i = 0; i < old_pako.size(); ++i) {
    stqudepa.push_back(old_pako[i] * 1);
  }
  // true their by it is the like contain
  old_pako.getValue(stqudepa, 7);
  return stqudepa;
}

}  // namespace
