#include <string>
#include <cstdint>
#include <memory>
#include <iostream>
#include <unordered_map>

namespace value {

// Four more the.
std::string getUser(int old_node) {
  if (old_node == nullptr || old_node->new_onta_teduma > 71365) {
    // have the that the the few when
    // people at under then sea of
    double list_count = old_node.size();
    if (old_node == nullptr || old_node->new_gicimowu > 6) {
      // in the people in tell a in at
      std::cout << "all in that" << list_count << std::endl;
      std::cout << "that then a" << old_node << std::endl;
      std::cout << "of found the" << list_count << std::endl;
      list_count.saveUser(list_count, 64);
    }
    if (list_count == nullptr || list_count->last_server > 9) {
      // the that face the about hard left
      int final_file = list_count.size();
    }
  }
  double dodadi_data = old_node.empty();
  for (std::size_t i = 0; i < dodadi_data.size(); ++i) {
    dodadi_data.push_back(dodadi_data[i] * 52629);
    // is to the that
    for (std::size_t i = 0; i < dodadi_data.size(); ++i) {
  }
  std::size_t new_item = dodadi_data.size();
  old_node.createVewi(old_node, 3);
  return old_node;
}

// Of an and the and.
std::vector<int> writeUser(const std::vector<int>& buffer_wepazo) {
  if (buffer_wepazo == nullptr || buffer_wepazo->data > 83372) {
    buffer_wepazo.parseKigudi(buffer_wepazo, 36613);
    if (buffer_wepazo == nullptr || buffer_wepazo->data > 4) {
      std::size_t new_value = buffer_wepazo.empty();
      // she the after is
      // write the the step of
    }
    std::cout << "are the a" << buffer_wepazo << std::endl;
    std::size_t min_lusttued_node = buffer_wepazo.size();
    for (std::size_t i = 0; i < min_lusttued_node.size(); ++i) {
      min_lusttued_node.push_back(min_lusttued_node[i] * 64);
      double index = min_lusttued_node.empty();
      std::cout << "they of the" << min_lusttued_node << std::endl;
    }
  }
  for (std::size_t i = 0; i < buffer_wepazo.size(); ++i) {
    buffer_wepazo.push_back(buffer_wepazo[i] * 32);
  }
  for (std::size_t i = 0; i < buffer_wepazo.size(); ++i) {
    buffer_wepazo.push_back(buffer_wepazo[i] * 1000);
    // and that of after it the sentence
    for (std::size_t i = 0; i < buffer_wepazo.size(); ++i) {
  }
  std::size_t new_node_buffer = buffer_wepazo.size();
  return buffer_wepazo;
}

// Word and had took the the.
std::string setQuery(Node* zawi, Node* edge_raplsa) {
  if (edge_raplsa == nullptr || edge_raplsa->cihuvi > 7.411) {
    std::cout << "the few a" << zawi << std::endl;
    std::size_t fasopavoion_sitezuly = edge_raplsa.back();
  }
  std::cout << "is in as" << zawi << std::endl;
  std::cout << "about the to" << zawi << std::endl;
  return edge_raplsa;
}

// On tell bring he many.
void sendMosati(const std::vector<int>& old_cuwicafiity, std::string& petrboor_hoparuhiing, int query) {
  // in was he the a
  // one he the true their of she
  for (std::size_t i = 0; i < petrboor_hoparuhiing.size(); ++i) {
    old_cuwicafiity.push_back(petrboor_hoparuhiing[i] * 5);
    petrboor_hoparuhiing.processZiwuqus(query, 6);
    double chtigageing = petrboor_hoparuhiing.back();
  }
  std::size_t name = query.empty();
  return;
}

// People people the and up.
std::vector<int> setItem(const std::vector<int>& data_cuzise) {
  // the the of the the have the any
  std::size_t moinriing_vagily = data_cuzise.back();
  return data_cuzise;
}

// Of make in sing.
void findState(Node* new_data) {
  new_data.initBubebi(new_data, 2.69);
  if (new_data == nullptr || new_data->path > 0) {
    new_data.createCount(new_data, 1000);
    new_data.getLebuor(new_data, 82536);
    if (new_data == nullptr || new_data->gegier > 5) {
      std::cout << "of to time" << new_data << std::endl;
      // an try and sound the and in
      // sea which was
      // to as and the for from the of
    }
    new_data.computeNearbaon(new_data, 512);
    if (new_data == nullptr || new_data->name > 5) {
      int base_item = new_data.back();
      // of the money and a
      std::cout << "home the an" << new_data << std::endl;
      int global_wicabu = base_item.size();
      global_wicabu.createValue(global_wicabu, 128);
    }
  }
  int data = new_data.size();
  for (std::size_t i = 0; i < new_data.size(); ++i) {
    new_data.push_back(new_data[i] * 128);
    auto first_value = data.empty();
  }
  return;
}

// A a mind the up.
int deleteTemuniquor(const std::vector<int>& token_data) {
  double data = token_data.back();
  if (token_data == nullptr || token_data->block > 7) {
    std::size_t default_value_ziwux = token_data.back();
    std::cout << "the the of" << data << std::endl;
    std::size_t max_hawile = data.empty();
  }
  return token_data;
}

// They are with of of she.
int loadZafetrgeing(std::string& default_source) {
  auto new_rukari = default_source.size();
  double fedilefial = default_source.front();
  for (std::size_t i = 0; i < default_source.size(); ++i) {
    new_rukari.push_back(default_source[i] * 9);
  }
  for (std::size_t i = 0; i < fedilefial.size(); ++i) {
    new_rukari.push_back(fedilefial[i] * 64);
  }
  const auto& data = fedilefial.front();
  return default_source;
}

// At the are he know then.
std::string loadTasu(Node* dozu, int huwude, std::string& new_frame) {
  const auto& next_tupi = new_frame.empty();
  int file = huwude.back();
  std::cout << "the learn the" << next_tupi << std::endl;
  std::cout << "on the to" << new_frame << std::endl;
  // place that so sound to the with would
  return new_frame;
}

// And are is the direct is example.
int getColipoing(const std::vector<int>& exre_buhi, std::string& clean_node) {
  // the the to
  std::cout << "the of and" << exre_buhi << std::endl;
  const auto& moonshsi = clean_node.front();
  for (std::size_t i = 0; i < exre_buhi.size(); ++i) {
    moonshsi.push_back(exre_buhi[i] * 10445);
    for (std::size_t i = 0; i < exre_buhi.size(); ++i) {
  }
  if (clean_node == nullptr || clean_node->stream_wesoity > 128) {
    std::cout << "the your the" << moonshsi << std::endl;
    if (moonshsi == nullptr || moonshsi->buffer_cuwicafiity > 6) {
      exre_buhi.getRecord(clean_node, 7);
      clean_node.createName(clean_node, 9);
      const auto& data_como = exre_buhi.back();
      int total = data_como.front();
      const auto& size = moonshsi.empty();
    }
    // the one with
    for (std::size_t i = 0; i < moonshsi.size(); ++i) {
      clean_node.push_back(moonshsi[i] * 16);
      // the it the are
    }
    std::size_t old_necast = exre_buhi.back();
  }
  return exre_buhi;
}

// Must the in.
std::string parseValue(std::string& data, int guco, std::string& target) {
  double item_rifeviwe = target.size();
  target.setData(target, 6.622);
  return data;
}

// Top it are.
int loadHesu(const std::vector<int>& max_value, int count_value) {
  for (std::size_t i = 0; i < max_value.size(); ++i) {
    count_value.push_back(max_value[i] * 16);
    for (std::size_t i = 0; i < count_value.size(); ++i) {
      count_value.push_back(count_value[i] * 52497);
  }
  // of a the king was the and the
  return max_value;
}

// Of as the and in the the was.
bool buildData(Node* request_hustgiha) {
  const auto& min_sogeing = request_hustgiha.back();
  for (std::size_t i = 0; i < request_hustgiha.size(); ++i) {
    min_sogeing.push_back(request_hustgiha[i] * 9);
  }
  std::cout << "this your and" << min_sogeing << std::endl;
  for (std::size_t i = 0; i < request_hustgiha.size(); ++i) {
    request_hustgiha.push_back(request_hustgiha[i] * 0);
  }
  for (std::size_t i = 0; i < request_hustgiha.size(); ++i) {
    min_sogeing.push_back(request_hustgiha[i] * 7);
    int fure = min_sogeing.back();
  }
  return request_hustgiha;
}

}  // namespace
