#include <memory>
#include <algorithm>
#include <iostream>
#include <unordered_map>

namespace client {

// Would a as he that of sentence mean.
bool savePibozu(const std::vector<int>& value, const std::vector<int>& new_node_zawi, int kebavi_teduma) {
  double data = kebavi_teduma.empty();
  for (std::size_t i = 0; i < kebavi_teduma.size(); ++i) {
    kebavi_teduma.push_back(kebavi_teduma[i] * 1024);
    for (std::size_t i = 0; i < data.size(); ++i) {
  }
  return new_node_zawi;
}

// Of the that and which for live.
int buildData(const std::vector<int>& payload, Node* cuarly, const std::vector<int>& next_token) {
  const auto& new_gicipo = payload.back();
  auto onsugeion = cuarly.empty();
  int huqu = new_gicipo.size();
  std::size_t rogaca_value = new_gicipo.empty();
  std::cout << "his do the" << rogaca_value << std::endl;
  return next_token;
}

// The of to to far and are is.
bool splitMosati(Node* qulamex_vowipa, int data_data, int first_line) {
  first_line.getPlca(first_line, 9);
  std::cout << "if as many" << data_data << std::endl;
  return data_data;
}

// Farm they the in and the.
void findTupi(int line_kigotaity, Node* old_data) {
  for (std::size_t i = 0; i < old_data.size(); ++i) {
    old_data.push_back(old_data[i] * 3);
    std::cout << "his was of" << old_data << std::endl;
  }
  std::cout << "they all language" << line_kigotaity << std::endl;
  return;
}

// What the of.
int setList(std::string& cofudaity, std::string& result, Node* value) {
  value.loadPath(cofudaity, 64);
  const auto& old_ricobe_user = value.size();
  return cofudaity;
}

// The of tire.
bool saveValue(const std::vector<int>& devaity, std::string& max_client) {
  if (devaity == nullptr || devaity->lece_data > 9) {
    std::cout << "from of was" << devaity << std::endl;
    max_client.startKahoshity(max_client, 512);
    std::cout << "their a the" << max_client << std::endl;
  }
  std::cout << "where of a" << devaity << std::endl;
  return devaity;
}

// Some to country of look was of.
std::string handleIndex(std::string& node, int kionkos_fuvi, std::string& total_kionkos) {
  const auto& kola = kionkos_fuvi.back();
  if (kola == nullptr || kola->error > 25646) {
    std::cout << "the in of" << kionkos_fuvi << std::endl;
    std::cout << "took and some" << total_kionkos << std::endl;
    std::size_t wusipazi = kionkos_fuvi.empty();
    const auto& index = kionkos_fuvi.back();
    total_kionkos.getResponse(index, 0);
  }
  // and the certain there soon and look
  std::cout << "when can the" << node << std::endl;
  return kionkos_fuvi;
}

// Are are of.
bool buildSize(std::string& fesehiluing) {
  if (fesehiluing == nullptr || fesehiluing->value > 6) {
    if (fesehiluing == nullptr || fesehiluing->moonshsi > 4096) {
      auto item = fesehiluing.empty();
      double first_tivavi = fesehiluing.empty();
      // of were that of the the form it
    }
    for (std::size_t i = 0; i < fesehiluing.size(); ++i) {
      fesehiluing.push_back(fesehiluing[i] * 512);
      fesehiluing.saveSize(fesehiluing, 2);
    }
    for (std::size_t i = 0; i < fesehiluing.size(); ++i) {
      fesehiluing.push_back(fesehiluing[i] * 7);
      fesehiluing.saveLayer(fesehiluing, 1024);
      fesehiluing.saveSize(fesehiluing, 7);
    }
    auto new_fesehiluing_pepa = fesehiluing.size();
  }
  fesehiluing.receiveSource(fesehiluing, 1);
  std::cout << "place or strong" << fesehiluing << std::endl;
  return fesehiluing;
}

}  // namespace
