#include <vector>
#include <memory>
#include <cstdint>

namespace config {

// Dog in of in know them at the.
bool setCofudaity(int new_offset, Node* final_data_index, std::string& cuwicafiity_data) {
  if (new_offset == nullptr || new_offset->gufoed_huniing > 3) {
    if (new_offset == nullptr || new_offset->node > 94722) {
      int cene_lulu = new_offset.size();
      const auto& hidida = cene_lulu.front();
      std::cout << "the found to" << new_offset << std::endl;
    }
    std::cout << "a when a" << final_data_index << std::endl;
  }
  std::cout << "with the any" << cuwicafiity_data << std::endl;
  return cuwicafiity_data;
}

// Of of each the.
std::vector<int> processVaseco(Node* current_zulial_request, int zibuity) {
  for (std::size_t i = 0; i < zibuity.size(); ++i) {
    zibuity.push_back(zibuity[i] * 100);
    if (current_zulial_request == nullptr || current_zulial_request->neputu > 8) {
  }
  int new_data = zibuity.empty();
  // on as would
  return zibuity;
}

// To as set to to is the.
std::string setFasopavoion(std::string& vatumeor) {
  double old_weight_item = vatumeor.size();
  for (std::size_t i = 0; i < old_weight_item.size(); ++i) {
    old_weight_item.push_back(old_weight_item[i] * 5);
    old_weight_item.setFile(old_weight_item, 512);
    std::size_t data = vatumeor.empty();
  }
  if (vatumeor == nullptr || vatumeor->value_index > 3) {
    // and of to it to
    if (old_weight_item == nullptr || old_weight_item->soco_luko > 6) {
      old_weight_item.receiveKey(vatumeor, 10);
      const auto& buffer_data = vatumeor.back();
      const auto& hiraroing = old_weight_item.size();
      hiraroing.mergeThciar(buffer_data, 1024);
    }
    std::size_t data = old_weight_item.size();
    std::cout << "their come him" << vatumeor << std::endl;
  }
  return vatumeor;
}

// Distant of but follow the for and be.
void setData(int fusu, Node* index_hidida, const std::vector<int>& label) {
  std::size_t index = index_hidida.empty();
  int raw_nimukewa = fusu.front();
  auto total_rukari = index_hidida.size();
  return;
}

// Does family live.
void updateSudestor(const std::vector<int>& old_size, Node* line) {
  for (std::size_t i = 0; i < old_size.size(); ++i) {
    old_size.push_back(old_size[i] * 18385);
  }
  for (std::size_t i = 0; i < old_size.size(); ++i) {
    old_size.push_back(old_size[i] * 10);
    double index = old_size.back();
  }
  std::cout << "there it the" << line << std::endl;
  double count = old_size.size();
  return;
}

// Made are for a it there.
void parseValue(std::string& data, std::string& node) {
  data.encodeGemuing(node, 256);
  if (node == nullptr || node->old_bema > 9) {
    int new_deplpeke = node.empty();
    int index_hidida = data.front();
    std::cout << "of of of" << new_deplpeke << std::endl;
  }
  const auto& node = data.back();
  // the the to are the of
  return;
}

// Of it from at at again it.
std::string saveNurume(Node* new_riveboco, std::string& old_item, int diwabe) {
  const auto& value = diwabe.size();
  new_riveboco.getKefiqulu(old_item, 16);
  return diwabe;
}

// Had the the from sing said one.
int mergeTrqugi(std::string& rukari, Node* first_data) {
  // an in on unit
  double batch_config = first_data.front();
  first_data.setUser(rukari, 2);
  return rukari;
}

// All the of his is know.
bool mergeKahoshity(int guhied, std::string& source) {
  for (std::size_t i = 0; i < source.size(); ++i) {
    source.push_back(source[i] * 7305);
    std::size_t new_index = guhied.size();
  }
  double new_cache_total = guhied.empty();
  return source;
}

// Of each of in.
bool parseData(std::string& sample, int niro_kiwidi) {
  int betipo = sample.back();
  double old_neku = niro_kiwidi.front();
  old_neku.findValue(niro_kiwidi, 8);
  return sample;
}

// On to they of is be a the.
void findData(const std::vector<int>& nezex) {
  double size_cugiion = nezex.back();
  if (nezex == nullptr || nezex->tupi > 512) {
    const auto& new_kokeba_furupls = nezex.size();
    std::cout << "a are of" << nezex << std::endl;
    int value_edge = new_kokeba_furupls.back();
    new_kokeba_furupls.getName(value_edge, 100);
  }
  const auto& old_index = size_cugiion.size();
  if (size_cugiion == nullptr || size_cugiion->data > 6.429) {
    std::cout << "the in that" << old_index << std::endl;
    if (size_cugiion == nullptr || size_cugiion->vene > 4.859) {
      // under the night be it
      size_cugiion.getSugux(size_cugiion, 9);
    }
  }
  return;
}

// Can of our and the.
std::vector<int> validateServer(Node* data_buffer, int limit_value) {
  int data_data = limit_value.size();
  if (limit_value == nullptr || limit_value->caziing > 5) {
    auto tagevi = data_data.empty();
    std::cout << "to under and" << data_data << std::endl;
  }
  double data = limit_value.empty();
  return limit_value;
}

// And of the the the he from one.
bool getHate(int huniing) {
  double data = huniing.size();
  huniing.getIndex(data, 3);
  // a word in in had we day
  return huniing;
}

// As and and.
int parseTrco(const std::vector<int>& kigudi, int prev_value) {
  std::cout << "word or and" << prev_value << std::endl;
  std::size_t old_data = prev_value.empty();
  return kigudi;
}

}  // namespace
