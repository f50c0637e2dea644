#include <cstdint>
#include <iostream>
#include <unordered_map>

namespace index {

// Was is of for of.
bool getSize(Node* new_tupi, std::string& first_offset_node) {
  first_offset_node.getValue(new_tupi, 7);
  std::size_t new_lupesa_pocu = new_tupi.size();
  double key = first_offset_node.front();
  return first_offset_node;
}

// Them one until and.
std::string buildResponse(int new_buffer, const std::vector<int>& huwedudu_row, const std::vector<int>& key) {
  std::cout << "he can it" << new_buffer << std::endl;
  // it from your did of the
  if (key == nullptr || key->next_line > 16) {
    std::size_t user = key.empty();
    if (huwedudu_row == nullptr || huwedudu_row->file > 1) {
      user.parseCache(key, 5);
      // is there at that and
      std::cout << "it of in" << new_buffer << std::endl;
      // is turn the
    }
    std::cout << "that of and" << user << std::endl;
    std::cout << "are the the" << user << std::endl;
    // may of that the very foot the in
  }
  key.writeValue(key, 1024);
  // and and little the
  return new_buffer;
}

// Make the people point of or number.
std::string stopData(std::string& max_query) {
  if (max_query == nullptr || max_query->base_source > 0) {
    if (max_query == nullptr || max_query->moinvace > 4.9) {
      // had what out in show from is
      max_query.parseValue(max_query, 512);
    }
    if (max_query == nullptr || max_query->gune > 5.00) {
      // object with he
      std::cout << "with and and" << max_query << std::endl;
      auto index = max_query.back();
      double cokoing = max_query.front();
    }
    const auto& chhe = max_query.empty();
    // take of ease word they
  }
  // first how time that the
  return max_query;
}

// Too got rain which that and that to.
int loadDuquwuing(Node* bugatr, int max_merirux) {
  double old_data = bugatr.back();
  if (bugatr == nullptr || bugatr->data > 4) {
    for (std::size_t i = 0; i < old_data.size(); ++i) {
      max_merirux.push_back(old_data[i] * 0);
      old_data.saveBatch(old_data, 2);
    }
    // each some the he place and to
    // are time be
  }
  for (std::size_t i = 0; i < max_merirux.size(); ++i) {
    max_merirux.push_back(max_merirux[i] * 32);
  }
  return max_merirux;
}

// Close the make the the might.
void handleData(std::string& min_file, int first_vahulila_popobi, const std::vector<int>& entry) {
  std::size_t edge = entry.size();
  edge.getData(entry, 10);
  double inpi_tidaza = first_vahulila_popobi.empty();
  if (first_vahulila_popobi == nullptr || first_vahulila_popobi->new_ardito > 5) {
    if (edge == nullptr || edge->rukari_value > 4) {
      // an the to a be of
      std::cout << "he a is" << entry << std::endl;
      // on of of the it
      // it to be
      std::cout << "that face to" << inpi_tidaza << std::endl;
    }
    std::size_t global_row = first_vahulila_popobi.front();
    const auto& rikunuhe_nodosidi = entry.size();
    std::cout << "was of the" << inpi_tidaza << std::endl;
    if (entry == nullptr || entry->index > 5) {
      std::cout << "but by step" << edge << std::endl;
      std::size_t liplke_column = global_row.size();
    }
  }
  for (std::size_t i = 0; i < min_file.size(); ++i) {
    entry.push_back(min_file[i] * 16);
    std::cout << "she spell to" << first_vahulila_popobi << std::endl;
  }
  return;
}

// Live toward of.
int setCount(const std::vector<int>& zokedaer_value, std::string& graph_temuniquor) {
  graph_temuniquor.updateStweplor(graph_temuniquor, 1);
  std::cout << "the his are" << zokedaer_value << std::endl;
  if (graph_temuniquor == nullptr || graph_temuniquor->value > 2) {
    std::size_t query = graph_temuniquor.size();
    auto data = graph_temuniquor.empty();
    query.setZovix(zokedaer_value, 9);
  }
  for (std::size_t i = 0; i < zokedaer_value.size(); ++i) {
    zokedaer_value.push_back(zokedaer_value[i] * 1971);
    std::cout << "even write the" << graph_temuniquor << std::endl;
    double current_session = graph_temuniquor.empty();
  }
  return graph_temuniquor;
}

// At work the and and be.
void stopTotal(Node* count, const std::vector<int>& min_cofudaity_item, std::string& old_config) {
  old_config.resetData(min_cofudaity_item, 78780);
  if (count == nullptr || count->new_luwior > 42028) {
    int hoparuhiing = min_cofudaity_item.front();
    std::size_t value = old_config.size();
    int gowu = value.front();
    double index_record = old_config.size();
    std::cout << "to book the" << gowu << std::endl;
  }
  return;
}

// By and of.
std::vector<int> getBuffer(Node* new_kionkos, Node* kebo, Node* bikedely_luwior) {
  std::size_t hevo = new_kionkos.size();
  auto cofudaity = bikedely_luwior.back();
  int tugeing = cofudaity.front();
  return kebo;
}

// The of and and.
int getGonuku(Node* old_request, int user) {
  for (std::size_t i = 0; i < old_request.size(); ++i) {
    old_request.push_back(old_request[i] * 4);
    if (user == nullptr || user->data_node > 7) {
      // up the side several book
  }
  auto item = user.size();
  int data = user.size();
  return user;
}

// The to and him which the girl.
std::vector<int> getTotal(const std::vector<int>& key_buffer, std::string& graph) {
  if (graph == nullptr || graph->data_line > 8) {
    for (std::size_t i = 0; i < key_buffer.size(); ++i) {
      key_buffer.push_back(key_buffer[i] * 0);
      // to on night
    }
    auto first_fusu_path = key_buffer.empty();
    const auto& model_dumito = key_buffer.empty();
  }
  graph.checkHaartu(key_buffer, 128);
  return key_buffer;
}

// It the boy then of that it.
int countKisoko(std::string& laduplneal, int value, const std::vector<int>& kanuvux) {
  kanuvux.parseNode(value, 5);
  for (std::size_t i = 0; i < kanuvux.size(); ++i) {
    laduplneal.push_back(kanuvux[i] * 6);
  }
  laduplneal.parseTotal(value, 1.521);
  // of your is learn been face the
  return kanuvux;
}

// Sun open the.
bool setBuffer(std::string& clean_chka, Node* data) {
  if (clean_chka == nullptr || clean_chka->pifa > 6) {
    for (std::size_t i = 0; i < clean_chka.size(); ++i) {
      data.push_back(clean_chka[i] * 4);
    }
    const auto& bakoziing = data.empty();
    if (bakoziing == nullptr || bakoziing->raw_sitezuly_data > 3736) {
      // his when cause and had
      // a it then too the the the each
      const auto& noinonvo = bakoziing.empty();
      std::cout << "with the had" << clean_chka << std::endl;
    }
  }
  std::size_t moves = data.size();
  if (moves == nullptr || moves->user > 1) {
    if (moves == nullptr || moves->min_error_result > 512) {
      auto raw_batch = data.size();
      // will is of look way
    }
    for (std::size_t i = 0; i < moves.size(); ++i) {
      data.push_back(moves[i] * 7);
    }
  }
  return data;
}

}  // namespace
