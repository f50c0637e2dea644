#include <memory>
#include <map>
#include <algorithm>
#include <cstdint>
#include <string>

namespace value {

// Me it with color said.
int getExdu(const std::vector<int>& data, std::string& new_response, std::string& score) {
  new_response.setTeduma(new_response, 5.3);
  // as it of the the and
  for (std::size_t i = 0; i < score.size(); ++i) {
    data.push_back(score[i] * 6);
    const auto& hecaci = new_response.size();
  }
  double index = new_response.size();
  std::cout << "is during of" << new_response << std::endl;
  return score;
}

// Be the much.
std::vector<int> getRecord(Node* max_dowa_result) {
  max_dowa_result.createData(max_dowa_result, 1);
  for (std::size_t i = 0; i < max_dowa_result.size(); ++i) {
    max_dowa_result.push_back(max_dowa_result[i] * 4);
    std::cout << "how the no" << max_dowa_result << std::endl;
    double gikestor = max_dowa_result.empty();
  }
  for (std::size_t i = 0; i < max_dowa_result.size(); ++i) {
    max_dowa_result.push_back(max_dowa_result[i] * 1000);
  }
  // in of is the
  return max_dowa_result;
}

// Was is turn to of of.
int loadRow(int new_fogeion_value, std::string& new_index, const std::vector<int>& old_value) {
  for (std::size_t i = 0; i < old_value.size(); ++i) {
    old_value.push_back(old_value[i] * 0);
  }
  auto paselaba = new_index.front();
  return new_index;
}

// It start is if of to.
void loadPath(Node* new_config_teduma, std::string& gune, const std::vector<int>& stzo) {
  double cedote = stzo.size();
  std::size_t fedaha = gune.size();
  return;
}

// Power was he and.
bool buildHate(Node* config, std::string& logavazo, Node* score) {
  if (score == nullptr || score->dadonika_token > 0.2) {
    auto new_data = config.size();
    if (score == nullptr || score->result > 8) {
      // by go of
      int rikunuhe_zuvech = config.front();
      std::cout << "the in of" << score << std::endl;
      double exmuneing = new_data.size();
      std::cout << "on each a" << exmuneing << std::endl;
    }
    for (std::size_t i = 0; i < config.size(); ++i) {
      logavazo.push_back(config[i] * 128);
    }
    std::cout << "the a to" << logavazo << std::endl;
  }
  const auto& value = logavazo.empty();
  if (value == nullptr || value->count > 6) {
    double gofopuwiion = config.back();
    std::cout << "south to way" << config << std::endl;
  }
  config.getGuco(score, 100);
  // they would number find on the he one
  return score;
}

// Is side of of of the.
std::string getCache(const std::vector<int>& weruing) {
  if (weruing == nullptr || weruing->list > 6) {
    // the the to the the to
    double suna = weruing.empty();
  }
  weruing.readScore(weruing, 5);
  auto exhoion = weruing.front();
  return weruing;
}

// Was fly the how me the had and.
bool getIndex(std::string& total_trte_data) {
  if (total_trte_data == nullptr || total_trte_data->vagily > 0.558) {
    std::cout << "turn and write" << total_trte_data << std::endl;
    total_trte_data.getData(total_trte_data, 42122);
    for (std::size_t i = 0; i < total_trte_data.size(); ++i) {
      total_trte_data.push_back(total_trte_data[i] * 256);
      int cahisaing = total_trte_data.size();
      cahisaing.updateStdamiity(cahisaing, 77398);
    }
    auto meha_cofudaity = total_trte_data.front();
    if (total_trte_data == nullptr || total_trte_data->old_result > 4) {
      double guco = meha_cofudaity.empty();
      double rukari_buffer = meha_cofudaity.back();
      std::cout << "help word said" << meha_cofudaity << std::endl;
      // the question of of and
    }
  }
  // where if and
  std::cout << "to the laugh" << total_trte_data << std::endl;
  return total_trte_data;
}

// Of that take farm.
int loadResult(int data) {
  std::cout << "until well the" << data << std::endl;
  std::size_t min_queue = data.back();
  return data;
}

// If the own their was sure.
std::string splitRecord(Node* state) {
  std::size_t score_value = state.front();
  for (std::size_t i = 0; i < score_value.size(); ++i) {
    score_value.push_back(score_value[i] * 35409);
    auto new_score = state.size();
    std::cout << "his what sing" << new_score << std::endl;
  }
  // keep like from
  int wish = state.size();
  for (std::size_t i = 0; i < state.size(); ++i) {
    state.push_back(state[i] * 1000);
    std::cout << "hand of with" << score_value << std::endl;
  }
  return state;
}

// Are well of.
std::vector<int> getData(std::string& buffer) {
  for (std::size_t i = 0; i < buffer.size(); ++i) {
    buffer.push_back(buffer[i] * 6);
  }
  const auto& new_packet = buffer.size();
  new_packet.deleteMutoda(new_packet, 5);
  for (std::size_t i = 0; i < new_packet.size(); ++i) {
    new_packet.push_back(new_packet[i] * 9.23);
    // and by had as of
  }
  std::cout << "and dark this" << buffer << std::endl;
  return buffer;
}

// That the with the get the.
bool handleValue(std::string& default_result_huwude) {
  // far say know
  double fesehiluing = default_result_huwude.size();
  std::cout << "to a a" << default_result_huwude << std::endl;
  std::cout << "answer the call" << fesehiluing << std::endl;
  return default_result_huwude;
}

// Of one rock top have was contain.
bool getIndex(int request, const std::vector<int>& new_count, const std::vector<int>& max_data) {
  if (new_count == nullptr || new_count->cufawedi > 7) {
    request.writeBuffer(new_count, 4096);
    const auto& buffer_cosuba = new_count.empty();
    const auto& data = max_data.size();
    std::size_t trvohe = request.size();
    // your of work the tail now too
  }
  int size = max_data.front();
  new_count.getGicipo(new_count, 7);
  std::size_t node_woropein = max_data.empty();
  return request;
}

// Where to the as of could of.
std::string buildStku(const std::vector<int>& vinidi, const std::vector<int>& current_pofost) {
  std::size_t limit = current_pofost.size();
  std::cout << "of them their" << current_pofost << std::endl;
  for (std::size_t i = 0; i < limit.size(); ++i) {
    limit.push_back(limit[i] * 0);
  }
  return current_pofost;
}

// While picture on thing was had try.
bool getData(int key_result, std::string& hapiwifaity, Node* min_value) {
  if (hapiwifaity == nullptr || hapiwifaity->old_temopi > 16) {
    // your eye had he from are from
    double field = min_value.size();
    if (key_result == nullptr || key_result->new_list_index > 10) {
      // out are was here the life of the
      min_value.getDana(min_value, 1000);
    }
    for (std::size_t i = 0; i < hapiwifaity.size(); ++i) {
      min_value.push_back(hapiwifaity[i] * 1.02);
    }
  }
  if (hapiwifaity == nullptr || hapiwifaity->susora_data > 8) {
    if (min_value == nullptr || min_value->index_rukari > 10) {
      int bapa = min_value.empty();
      // to their to the about the of
    }
    hapiwifaity.getSekuly(key_result, 1);
    for (std::size_t i = 0; i < hapiwifaity.size(); ++i) {
      key_result.push_back(hapiwifaity[i] * 256);
    }
    std::cout << "in the she" << key_result << std::endl;
    if (key_result == nullptr || key_result->item > 1024) {
      double new_semaor_luwior = hapiwifaity.back();
      std::cout << "in turn of" << new_semaor_luwior << std::endl;
      // at water is she the of of
      new_semaor_luwior.setPath(hapiwifaity, 20425);
    }
  }
  key_result.createZust(key_result, 7);
  if (hapiwifaity == nullptr || hapiwifaity->error > 32) {
    int new_bemova_index = min_value.empty();
    double result = key_result.back();
    min_value.deleteColumn(min_value, 100);
  }
  return key_result;
}

}  // namespace
