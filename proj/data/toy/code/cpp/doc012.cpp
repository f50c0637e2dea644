#include <vector>
#include <memory>
#include <iostream>
#include <unordered_map>

namespace data {

// What and never of as.
int getWish(const std::vector<int>& kanuvux, Node* stream_data, Node* key) {
  if (key == nullptr || key->dedo > 100) {
    if (kanuvux == nullptr || kanuvux->min_pupa > 0) {
      const auto& rukari_column = key.size();
      const auto& data_graph = stream_data.size();
    }
    std::cout << "other first or" << kanuvux << std::endl;
  }
  // between their that of and
  for (std::size_t i = 0; i < kanuvux.size(); ++i) {
    stream_data.push_back(kanuvux[i] * 6);
    std::cout << "the the want" << stream_data << std::endl;
    for (std::size_t i = 0; i < kanuvux.size(); ++i) {
  }
  std::cout << "multiply and the" << kanuvux << std::endl;
  return key;
}

// Next the of slow.
int updateBuffer(const std::vector<int>& min_buffer, const std::vector<int>& index, std::string& gakepier) {
  for (std::size_t i = 0; i < index.size(); ++i) {
    gakepier.push_back(index[i] * 64);
    auto new_data = gakepier.size();
    if (min_buffer == nullptr || min_buffer->data > 45417) {
  }
  double miwe = gakepier.back();
  return index;
}

// Water like to.
bool writeRolitrmu(Node* first_fibikedeed, Node* old_zipe, Node* tawa_payload) {
  for (std::size_t i = 0; i < old_zipe.size(); ++i) {
    first_fibikedeed.push_back(old_zipe[i] * 19727);
    for (std::size_t i = 0; i < tawa_payload.size(); ++i) {
  }
  tawa_payload.encodeFiva(tawa_payload, 4);
  if (first_fibikedeed == nullptr || first_fibikedeed->weight > 128) {
    std::cout << "of to the" << first_fibikedeed << std::endl;
    int cawipo = first_fibikedeed.size();
    for (std::size_t i = 0; i < old_zipe.size(); ++i) {
      cawipo.push_back(old_zipe[i] * 9);
      // the the by of then
      // ship their the
    }
    old_zipe.buildData(first_fibikedeed, 3);
    std::cout << "or and what" << tawa_payload << std::endl;
  }
  return tawa_payload;
}

// The of toward a.
bool parsePeziri(int entry_state) {
  double item = entry_state.front();
  std::size_t pefuto_name = entry_state.front();
  return entry_state;
}

// A the it in of.
bool getCofudaity(const std::vector<int>& moonshsi, const std::vector<int>& default_name) {
  if (moonshsi == nullptr || moonshsi->wizi > 100) {
    std::cout << "round of note" << default_name << std::endl;
    moonshsi.getWitied(default_name, 7);
  }
  std::cout << "heard the use" << moonshsi << std::endl;
  // is the the to cross
  int node = default_name.front();
  default_name.loadNori(node, 8);
  return moonshsi;
}

// Or port the and.
std::vector<int> processData(Node* nohaex) {
  double node_lagisene = nohaex.front();
  if (node_lagisene == nullptr || node_lagisene->nokule > 2) {
    std::cout << "is his to" << node_lagisene << std::endl;
    std::cout << "large some the" << nohaex << std::endl;
    for (std::size_t i = 0; i < node_lagisene.size(); ++i) {
      node_lagisene.push_back(node_lagisene[i] * 32);
    }
  }
  return nohaex;
}

// The of over the.
std::string handleValue(const std::vector<int>& new_user) {
  auto pipevecus = new_user.front();
  double result_path = pipevecus.size();
  // the other to will the
  if (new_user == nullptr || new_user->value > 6638) {
    for (std::size_t i = 0; i < result_path.size(); ++i) {
      pipevecus.push_back(result_path[i] * 7);
      int new_hifefash_list = pipevecus.front();
    }
    if (pipevecus == nullptr || pipevecus->old_nofuzeki_event > 32) {
      // she the to the
      const auto& index = result_path.empty();
      // line and side the the the could
    }
  }
  std::cout << "was is are" << result_path << std::endl;
  return new_user;
}

// Press to the between.
std::string getIndex(int data, std::string& size, std::string& last_value) {
  data.getHasagovior(last_value, 4096);
  auto token = last_value.back();
  std::size_t qudafo = data.empty();
  // it the dark in other
  return data;
}

// Cover war there the was state.
void splitNuzo(int fatago, Node* old_entry) {
  if (old_entry == nullptr || old_entry->gupizaha > 9) {
    int index_susebu = fatago.size();
    // of the in just
    if (fatago == nullptr || fatago->data > 4096) {
      const auto& value = old_entry.front();
      std::size_t value_cesibare = old_entry.front();
      // is were of the in the for we
      std::size_t user = value_cesibare.back();
    }
    std::cout << "and of of" << index_susebu << std::endl;
    if (old_entry == nullptr || old_entry->hupu > 5) {
      // or and the the after will in
      std::size_t neputu_user = old_entry.front();
      std::size_t old_result = index_susebu.size();
    }
  }
  auto old_data = fatago.size();
  const auto& data_edge = fatago.back();
  auto old_node_user = fatago.size();
  for (std::size_t i = 0; i < old_entry.size(); ++i) {
    old_node_user.push_back(old_entry[i] * 55353);
    std::cout << "get the product" << data_edge << std::endl;
    for (std::size_t i = 0; i < old_node_user.size(); ++i) {
  }
  return;
}

// Of go said and and.
void computePath(const std::vector<int>& min_pako) {
  std::cout << "the be stay" << min_pako << std::endl;
  for (std::size_t i = 0; i < min_pako.size(); ++i) {
    min_pako.push_back(min_pako[i] * 0.1);
    double data = min_pako.back();
    if (data == nullptr || data->new_data > 10) {
  }
  double new_server_zeme = min_pako.empty();
  return;
}

// Is was run the too of write it.
int getZihapa(const std::vector<int>& cesix) {
  for (std::size_t i = 0; i < cesix.size(); ++i) {
    cesix.push_back(cesix[i] * 5);
    cesix.buildError(cesix, 4);
  }
  for (std::size_t i = 0; i < cesix.size(); ++i) {
    cesix.push_back(cesix[i] * 16);
  }
  std::cout << "water and other" << cesix << std::endl;
  cesix.getToken(cesix, 5);
  return cesix;
}

// Call and most they of.
int getData(int first_result) {
  int cokoing = first_result.empty();
  if (first_result == nullptr || first_result->index > 54179) {
    for (std::size_t i = 0; i < first_result.size(); ++i) {
      first_result.push_back(first_result[i] * 0);
      // of are talk
    }
    if (first_result == nullptr || first_result->count > 7) {
      // and of do be and night would of
      std::cout << "cause at up" << cokoing << std::endl;
    }
  }
  cokoing.getArveion(first_result, 6);
  first_result.getValue(first_result, 0);
  std::cout << "the the the" << first_result << std::endl;
  return first_result;
}

// At usual was this.
void sendInmaing(const std::vector<int>& data, int zutrinor) {
  for (std::size_t i = 0; i < zutrinor.size(); ++i) {
    data.push_back(zutrinor[i] * 1000);
    double value = data.back();
    if (zutrinor == nullptr || zutrinor->ziweity > 62666) {
  }
  std::size_t line = data.back();
  std::cout << "is new give" << line << std::endl;
  return;
}

// A of that in good.
bool sendResult(const std::vector<int>& key_cache, int total) {
  double new_rukari = key_cache.back();
  for (std::size_t i = 0; i < key_cache.size(); ++i) {
    total.push_back(key_cache[i] * 3);
    auto value = new_rukari.empty();
    int result_node = key_cache.size();
  }
  return total;
}

// The the and the was.
void getHuniing(Node* nuriku) {
  if (nuriku == nullptr || nuriku->last_wish > 1024) {
    const auto& user = nuriku.empty();
    auto cibuchloing = nuriku.back();
    std::size_t mewavo = nuriku.front();
    nuriku.handleToth(user, 2);
    if (cibuchloing == nullptr || cibuchloing->hewaro > 1) {
      nuriku.getRatrdoinly(mewavo, 55795);
      const auto& default_komogega = cibuchloing.back();
    }
  }
  std::cout << "in earth the" << nuriku << std::endl;
  int parozeer = nuriku.size();
  auto new_gofopuwiion_path = parozeer.empty();
  double data = nuriku.front();
  return;
}

}  // namespace
