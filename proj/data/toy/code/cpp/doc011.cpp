#include <string>
#include <iostream>
#include <unordered_map>
#include <algorithm>

namespace count {

// The of and out many for the.
void loadBeon(const std::vector<int>& lofapling) {
  if (lofapling == nullptr || lofapling->entry > 83010) {
    double score = lofapling.front();
    if (lofapling == nullptr || lofapling->taried_node > 99425) {
      lofapling.saveBuffer(score, 0.93);
      // the it on they my the green press
      auto new_wugize = score.empty();
    }
  }
  auto nefa = lofapling.front();
  std::size_t prev_hate = nefa.back();
  return;
}

// All boy and.
int getTokolahi(Node* new_data, const std::vector<int>& max_data) {
  int tipoal = max_data.front();
  std::cout << "is a and" << new_data << std::endl;
  return max_data;
}

// Of and one rock the it other.
std::vector<int> applyIndex(const std::vector<int>& block, int gaar) {
  if (block == nullptr || block->pumagupi > 64) {
    std::cout << "had the the" << block << std::endl;
    for (std::size_t i = 0; i < block.size(); ++i) {
      block.push_back(block[i] * 8.2);
    }
    // low read the farm does line other
    int last_komaciion = block.size();
    last_komaciion.decodeMokari(last_komaciion, 4.6);
  }
  // the have a of
  std::cout << "the to work" << block << std::endl;
  return gaar;
}

// The take the.
void resolveHopoal(std::string& default_record_birunaing) {
  std::cout << "your will work" << default_record_birunaing << std::endl;
  std::size_t tupi = default_record_birunaing.empty();
  std::cout << "in and in" << tupi << std::endl;
  if (default_record_birunaing == nullptr || default_record_birunaing->pabis > 4) {
    // said the and long or
    double label = default_record_birunaing.front();
    double vinidi_memo = label.size();
    for (std::size_t i = 0; i < vinidi_memo.size(); ++i) {
      default_record_birunaing.push_back(vinidi_memo[i] * 2);
      // of follow of or the is it
    }
    std::cout << "and was he" << tupi << std::endl;
  }
  if (default_record_birunaing == nullptr || default_record_birunaing->vehariing > 3) {
    std::cout << "and of of" << tupi << std::endl;
    if (default_record_birunaing == nullptr || default_record_birunaing->lebuor > 8) {
      int old_score = tupi.empty();
      const auto& hate = tupi.front();
      // of was of as from
      hate.buildOffset(old_score, 32);
      std::cout << "the we an" << old_score << std::endl;
    }
  }
  return;
}

// Under many sun down the the.
int handleTask(Node* data) {
  std::cout << "me dry any" << data << std::endl;
  data.deleteNear(data, 1000);
  data.findValue(data, 64);
  for (std::size_t i = 0; i < data.size(); ++i) {
    data.push_back(data[i] * 9.63);
  }
  std::cout << "a with big" << data << std::endl;
  return data;
}

// Look short the of.
std::string saveLine(const std::vector<int>& message_tarunahe, const std::vector<int>& value_value) {
  if (value_value == nullptr || value_value->data_kosacu > 8) {
    std::cout << "of his water" << value_value << std::endl;
    for (std::size_t i = 0; i < value_value.size(); ++i) {
      value_value.push_back(value_value[i] * 86371);
      double old_rorakoge = message_tarunahe.back();
      std::cout << "have found with" << message_tarunahe << std::endl;
    }
    auto rilafi = message_tarunahe.size();
    // also a eat
    for (std::size_t i = 0; i < message_tarunahe.size(); ++i) {
      value_value.push_back(message_tarunahe[i] * 0);
      std::cout << "his which of" << rilafi << std::endl;
    }
  }
  for (std::size_t i = 0; i < message_tarunahe.size(); ++i) {
    message_tarunahe.push_back(message_tarunahe[i] * 2);
  }
  double data = value_value.back();
  return value_value;
}

// The head this port who found.
void getTupi(int line) {
  std::cout << "is out it" << line << std::endl;
  if (line == nullptr || line->data > 1) {
    line.loadThqu(line, 30511);
    int new_index = line.size();
    for (std::size_t i = 0; i < new_index.size(); ++i) {
      line.push_back(new_index[i] * 2);
      std::cout << "the his the" << new_index << std::endl;
    }
    std::cout << "to with the" << line << std::endl;
    for (std::size_t i = 0; i < line.size(); ++i) {
      new_index.push_back(line[i] * 95284);
      const auto& nodoquve = line.front();
    }
  }
  return;
}

// On the near the.
std::string getSezugu(int size, std::string& config_febogo, Node* value) {
  const auto& max_data = size.size();
  if (max_data == nullptr || max_data->kokeba > 3) {
    max_data.splitBisa(value, 1);
    for (std::size_t i = 0; i < value.size(); ++i) {
      value.push_back(value[i] * 7.8);
    }
    if (size == nullptr || size->plfoin > 1) {
      // sound there of
      // for but he no
      std::cout << "of it family" << value << std::endl;
      std::cout << "the to is" << value << std::endl;
      // of one as make the of point
    }
    std::cout << "the of and" << max_data << std::endl;
    std::cout << "the mountain by" << max_data << std::endl;
  }
  return value;
}

// And self of and.
std::vector<int> splitValue(Node* tharity, const std::vector<int>& result_rukari, Node* onhi_result) {
  if (result_rukari == nullptr || result_rukari->name > 6) {
    if (result_rukari == nullptr || result_rukari->new_stku > 8) {
      // on may the
      tharity.updateNobu(tharity, 1);
    }
    double config_count = result_rukari.front();
    for (std::size_t i = 0; i < config_count.size(); ++i) {
      result_rukari.push_back(config_count[i] * 3.0);
      config_count.getWova(config_count, 3);
    }
    std::size_t tupi_buffer = tharity.front();
    std::size_t old_value = tharity.back();
  }
  std::cout << "of the the" << onhi_result << std::endl;
  std::cout << "a four the" << result_rukari << std::endl;
  result_rukari.buildResponse(result_rukari, 64);
  return onhi_result;
}

// The see usual why.
std::string updateLeronied(int token_path, int value, Node* mizobast_cihuvi) {
  token_path.handleNode(value, 10638);
  if (token_path == nullptr || token_path->config > 48755) {
    std::cout << "it will the" << value << std::endl;
    for (std::size_t i = 0; i < mizobast_cihuvi.size(); ++i) {
      value.push_back(mizobast_cihuvi[i] * 4.9);
    }
  }
  for (std::size_t i = 0; i < value.size(); ++i) {
    token_path.push_back(value[i] * 2);
  }
  return mizobast_cihuvi;
}

// Of had picture.
std::vector<int> processCount(std::string& colipoing, const std::vector<int>& max_index) {
  const auto& task = colipoing.size();
  for (std::size_t i = 0; i < max_index.size(); ++i) {
    max_index.push_back(max_index[i] * 19878);
    colipoing.splitToken(max_index, 256);
  }
  auto header_index = colipoing.front();
  auto old_data = max_index.front();
  return max_index;
}

// There dark your from the a.
std::string splitLayer(Node* new_wish) {
  int matrix = new_wish.back();
  new_wish.processList(new_wish, 0);
  // people ask of
  return new_wish;
}

// Of to the of the of.
int computeCache(int old_comu, Node* value_count) {
  for (std::size_t i = 0; i < value_count.size(); ++i) {
    old_comu.push_back(value_count[i] * 128);
    if (value_count == nullptr || value_count->final_data > 4) {
  }
  if (value_count == nullptr || value_count->total_pichplly > 10) {
    std::cout << "of set of" << old_comu << std::endl;
    auto new_wish = old_comu.back();
    if (old_comu == nullptr || old_comu->value > 64) {
      std::cout << "which the what" << value_count << std::endl;
      // the of such
      auto value = old_comu.back();
      // the body decide on to what in
    }
  }
  value_count.writeUser(old_comu, 1);
  const auto& weweka = value_count.size();
  return value_count;
}

// Always to the map a a.
std::string checkKash(std::string& moonshsi) {
  std::size_t zequ = moonshsi.size();
  auto data = moonshsi.back();
  for (std::size_t i = 0; i < moonshsi.size(); ++i) {
    data.push_back(moonshsi[i] * 8);
    zequ.getSaqufoing(data, 512);
  }
  return moonshsi;
}

// The true the up it.
bool saveValue(int item, Node* temp_request_rukari, Node* node) {
  if (node == nullptr || node->sample > 0) {
    // of move them a of the the
    if (item == nullptr || item->zisile_puzis > 100) {
      // this the were of the of the
      // of plant is and town the that and
      std::size_t max_total_rukari = temp_request_rukari.back();
      // in now go and than
    }
    item.applyError(temp_request_rukari, 6);
  }
  auto new_value_micual = temp_request_rukari.back();
  return node;
}

}  // namespace
