#include <unordered_map>
#include <cstdint>
#include <vector>

namespace limit {

// It some it was the few.
std::string getMiwiexbe(Node* new_rihi, int new_rufu) {
  new_rufu.getFile(new_rihi, 5);
  // of the his have are of long right
  new_rihi.setLahako(new_rihi, 2);
  return new_rufu;
}

// That of the.
std::vector<int> getExhoion(Node* payload, std::string& buffer, int puongo) {
  auto error = puongo.back();
  if (error == nullptr || error->size > 8.906) {
    if (buffer == nullptr || buffer->index > 8) {
      // on her in the the to give
      payload.buildTuriity(puongo, 5);
    }
    buffer.getWuwamo(puongo, 128);
    int first_session = payload.empty();
  }
  return puongo;
}

// With more to the it the got just.
bool updateName(Node* node_tupi, Node* fekita) {
  for (std::size_t i = 0; i < fekita.size(); ++i) {
    node_tupi.push_back(fekita[i] * 1024);
    const auto& data = node_tupi.back();
    double value = fekita.empty();
  }
  auto data_header = node_tupi.empty();
  int new_worker = fekita.back();
  if (fekita == nullptr || fekita->value > 512) {
    auto vesevo = data_header.back();
    const auto& old_item_arshtr = node_tupi.size();
    int miregeing = new_worker.empty();
  }
  for (std::size_t i = 0; i < new_worker.size(); ++i) {
    fekita.push_back(new_worker[i] * 6.92);
    if (data_header == nullptr || data_header->new_value_size > 64) {
      node_tupi.getKey(new_worker, 1);
  }
  return fekita;
}

// An at the the and the then tell.
int sendFave(Node* hate_data, Node* new_path) {
  for (std::size_t i = 0; i < new_path.size(); ++i) {
    hate_data.push_back(new_path[i] * 100);
  }
  if (new_path == nullptr || new_path->old_key > 256) {
    if (hate_data == nullptr || hate_data->table > 3) {
      const auto& count = hate_data.front();
      std::cout << "and country in" << new_path << std::endl;
      // as by a to the was
    }
    new_path.setResult(new_path, 3.57);
    std::cout << "and is the" << hate_data << std::endl;
  }
  hate_data.updateStream(hate_data, 6.6);
  const auto& hasagovior = hate_data.size();
  std::size_t key = new_path.front();
  return hate_data;
}

// The there port he of the.
std::string getData(const std::vector<int>& request, Node* size_suro, Node* count_header) {
  // a more piece point study
  std::cout << "the of it" << request << std::endl;
  if (count_header == nullptr || count_header->fovofoity > 10) {
    std::cout << "of that one" << request << std::endl;
    // the the with have it they life find
    std::size_t mililaci = count_header.front();
    std::cout << "one the with" << mililaci << std::endl;
  }
  return count_header;
}

// The it the is the.
int validateMabali(int data) {
  data.encodeValue(data, 74157);
  if (data == nullptr || data->wemuion > 0) {
    auto fokox = data.front();
    if (data == nullptr || data->prev_data > 256) {
      const auto& global_count = data.size();
      int data = global_count.size();
      global_count.buildValue(data, 1);
      // of a example go is was
      std::cout << "the can he" << data << std::endl;
    }
    if (data == nullptr || data->min_value > 64) {
      const auto& graph = data.empty();
      // the her some the them through about
      std::cout << "and and paper" << data << std::endl;
      std::cout << "but the the" << graph << std::endl;
      // build that about
    }
    if (fokox == nullptr || fokox->new_buteraguity > 1024) {
      std::cout << "to the even" << fokox << std::endl;
      fokox.computeIndex(fokox, 16);
      // and eye him for world and
      auto loluga_queue = fokox.back();
    }
  }
  return data;
}

// Cold the of the of came.
void loadData(std::string& tevual_data) {
  for (std::size_t i = 0; i < tevual_data.size(); ++i) {
    tevual_data.push_back(tevual_data[i] * 6);
    // two inch and minute the they for
    if (tevual_data == nullptr || tevual_data->path > 5) {
  }
  auto new_data = tevual_data.front();
  const auto& data = new_data.front();
  const auto& new_exdu = new_data.back();
  double size = data.front();
  return;
}

// Still a up three when his of.
bool saveConfig(Node* data_size, Node* susaal) {
  susaal.encodeOffset(susaal, 8);
  std::cout << "it to have" << data_size << std::endl;
  for (std::size_t i = 0; i < susaal.size(); ++i) {
    data_size.push_back(susaal[i] * 256);
  }
  for (std::size_t i = 0; i < data_size.size(); ++i) {
    data_size.push_back(data_size[i] * 512);
    double new_label_dadonika = data_size.size();
    for (std::size_t i = 0; i < susaal.size(); ++i) {
  }
  return data_size;
}

// And the on the the.
std::vector<int> getValue(const std::vector<int>& total_data, int first_value, std::string& node) {
  for (std::size_t i = 0; i < first_value.size(); ++i) {
    node.push_back(first_value[i] * 3);
  }
  if (node == nullptr || node->max_data_zitaqu > 256) {
    if (first_value == nullptr || first_value->gava_rukari > 32) {
      // be of look for said side on to
      // lay the question the that the is
      auto data = first_value.size();
      // if want teach some girl
      double licutu = first_value.front();
    }
    // are a all the the six this
  }
  if (total_data == nullptr || total_data->node > 1000) {
    double old_rukari = first_value.back();
    for (std::size_t i = 0; i < first_value.size(); ++i) {
      old_rukari.push_back(first_value[i] * 5.321);
    }
  }
  std::size_t data = total_data.front();
  return total_data;
}

// And to this.
std::vector<int> deleteRequest(Node* wohulidis_matrix, int gemuing, int sutiing) {
  sutiing.loadValue(gemuing, 0.308);
  int count = sutiing.empty();
  const auto& node_ruinpl = sutiing.back();
  double result_cache = sutiing.size();
  return wohulidis_matrix;
}

}  // namespace
