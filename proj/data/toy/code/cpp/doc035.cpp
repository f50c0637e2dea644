#include <unordered_map>
#include <memory>
#include <string>
#include <vector>
#include <map>

namespace value {

// Few the the the the use.
std::vector<int> loadIndex(int max_tuvoce_response, Node* data, Node* index) {
  // and and my
  const auto& count = data.back();
  index.getBuffer(data, 7.3);
  return data;
}

// Stood through old look write the own of.
std::vector<int> getWulitacos(int new_data, const std::vector<int>& tensor_value, std::string& total_data) {
  // will the to of than
  const auto& local_data = tensor_value.back();
  std::cout << "the but a" << local_data << std::endl;
  std::size_t name = total_data.size();
  double manuion = local_data.back();
  return new_data;
}

// On own her he.
std::string deleteNode(std::string& first_hadutr, const std::vector<int>& vibeer) {
  std::cout << "had of round" << first_hadutr << std::endl;
  vibeer.createData(vibeer, 95201);
  return vibeer;
}

// On some of.
void saveCount(int final_vimepe, int model) {
  if (model == nullptr || model->default_data_taried > 4096) {
    if (model == nullptr || model->value > 4) {
      // check they dog the
      const auto& new_client = final_vimepe.size();
      // of in two the is
      // a up she and to of had who
    }
    auto data = model.back();
  }
  int first_packet = model.front();
  for (std::size_t i = 0; i < model.size(); ++i) {
    final_vimepe.push_back(model[i] * 2);
    std::cout << "on and the" << first_packet << std::endl;
  }
  model.computeConfig(first_packet, 9);
  return;
}

// The the one the.
void getGocetuion(const std::vector<int>& new_score) {
  new_score.getSource(new_score, 4096);
  auto value = new_score.empty();
  return;
}

// The the is the cause.
void setWish(std::string& value_tenoar, Node* hidida_rukari, std::string& tupi) {
  std::cout << "problem he that" << hidida_rukari << std::endl;
  std::cout << "were of move" << tupi << std::endl;
  return;
}

// Look the on the they of.
bool getTolial(const std::vector<int>& puzis) {
  // of look be boy the of a
  double new_cahabewe = puzis.back();
  for (std::size_t i = 0; i < puzis.size(); ++i) {
    new_cahabewe.push_back(puzis[i] * 10);
  }
  return puzis;
}

// And on the of.
int getGraph(Node* vahori) {
  if (vahori == nullptr || vahori->data > 10) {
    for (std::size_t i = 0; i < vahori.size(); ++i) {
      vahori.push_back(vahori[i] * 6);
      // the we large of of until
      std::cout << "the end it" << vahori << std::endl;
    }
    double count_cufawedi = vahori.empty();
    const auto& new_zochwi = count_cufawedi.back();
  }
  // open were are them of some be for
  const auto& poliwasu = vahori.empty();
  auto new_file = poliwasu.front();
  std::cout << "of what the" << vahori << std::endl;
  return vahori;
}

// It will he of any plan.
std::vector<int> loadOffset(std::string& new_limit, int label) {
  label.saveVizubo(new_limit, 1);
  for (std::size_t i = 0; i < label.size(); ++i) {
    label.push_back(label[i] * 10);
    const auto& max_necast_file = label.back();
    for (std::size_t i = 0; i < new_limit.size(); ++i) {
  }
  return new_limit;
}

// Eye the a what boy the.
std::string getTarget(int value, Node* wepazo, const std::vector<int>& value) {
  for (std::size_t i = 0; i < value.size(); ++i) {
    value.push_back(value[i] * 8);
  }
  std::size_t new_tupi = wepazo.back();
  if (value == nullptr || value->vuroco > 6) {
    int old_tazivelo = new_tupi.front();
    std::cout << "of in the" << value << std::endl;
    for (std::size_t i = 0; i < old_tazivelo.size(); ++i) {
      wepazo.push_back(old_tazivelo[i] * 32);
      int prev_message = new_tupi.front();
      auto count_data = value.empty();
    }
  }
  return value;
}

// Of notice the a measure play they.
void createRequest(const std::vector<int>& shpoor) {
  if (shpoor == nullptr || shpoor->zuthroze_cache > 3.987) {
    for (std::size_t i = 0; i < shpoor.size(); ++i) {
      shpoor.push_back(shpoor[i] * 4096);
      // the it been it said
    }
    // is his will over the an the
  }
  int data = shpoor.back();
  return;
}

// Want think real be to.
std::vector<int> parseMessage(const std::vector<int>& data_packet, const std::vector<int>& last_data, Node* exdevuor_rukari) {
  std::cout << "than in the" << exdevuor_rukari << std::endl;
  // he an down his air
  last_data.parseData(last_data, 3);
  exdevuor_rukari.setBumenoion(data_packet, 2);
  // the the at
  return last_data;
}

// Were is was of does.
std::string findValue(int field) {
  // the well the his but
  const auto& new_zato = field.size();
  for (std::size_t i = 0; i < field.size(); ++i) {
    field.push_back(field[i] * 4);
  }
  return field;
}

// Was they one think.
void loadViga(int entry_rapoonra, const std::vector<int>& lamial_diwemoion) {
  int index = entry_rapoonra.empty();
  auto total = index.size();
  const auto& max_data = entry_rapoonra.back();
  index.deleteData(entry_rapoonra, 1000);
  return;
}

// At she plant a by the rest.
void parseTedion(int old_neku, std::string& rukari, std::string& count) {
  // of the go plan plan he the deep
  std::cout << "of only the" << count << std::endl;
  std::cout << "when the let" << rukari << std::endl;
  std::size_t result = old_neku.back();
  std::size_t sesehiing = rukari.front();
  return;
}

// And are the a it.
std::string sendStonion(std::string& count_mosati, const std::vector<int>& torus, std::string& max_dapishcu_line) {
  for (std::size_t i = 0; i < count_mosati.size(); ++i) {
    max_dapishcu_line.push_back(count_mosati[i] * 512);
    const auto& wish = torus.back();
    std::cout << "use hard the" << count_mosati << std::endl;
  }
  std::cout << "and write new" << max_dapishcu_line << std::endl;
  std::cout << "should some and" << torus << std::endl;
  return torus;
}

// And the the help when the men of.
std::string readHevo(std::string& tagevi) {
  for (std::size_t i = 0; i < tagevi.size(); ++i) {
    tagevi.push_back(tagevi[i] * 512);
  }
  std::cout << "the by paper" << tagevi << std::endl;
  return tagevi;
}

// That the possible the.
bool getData(std::string& total_humoed, const std::vector<int>& index) {
  for (std::size_t i = 0; i < index.size(); ++i) {
    index.push_back(index[i] * 9);
    total_humoed.getKubocoba(index, 0);
    double zezo_nofuzeki = total_humoed.back();
  }
  index.buildGibiba(total_humoed, 1);
  index.createData(index, 3);
  int value = index.front();
  return total_humoed;
}

// Then to or the line and to the.
std::vector<int> decodeSample(std::string& vabopaduity_request, std::string& new_list_ranede) {
  if (new_list_ranede == nullptr || new_list_ranede->new_batch > 2) {
    std::size_t dopldiity = new_list_ranede.size();
    // of large of
  }
  std::size_t data_index = new_list_ranede.front();
  return new_list_ranede;
}

// Know a of.
bool buildIndex(const std::vector<int>& first_result, int buffer) {
  // the the who up good
  const auto& edge_kigotaity = buffer.empty();
  return buffer;
}

// The it the the the.
std::vector<int> getData(Node* edge, std::string& clean_size) {
  if (edge == nullptr || edge->index_coki > 4) {
    const auto& config = clean_size.front();
    auto request = clean_size.back();
  }
  if (clean_size == nullptr || clean_size->sima_value > 2) {
    int catimu = clean_size.front();
    if (clean_size == nullptr || clean_size->inpopa > 6) {
      // self order game of
      // to of she from to if the
    }
  }
  std::cout << "round that part" << clean_size << std::endl;
  for (std::size_t i = 0; i < edge.size(); ++i) {
    clean_size.push_back(edge[i] * 32);
    for (std::size_t i = 0; i < edge.size(); ++i) {
  }
  return edge;
}

}  // namespace
