#include <unordered_map>
#include <algorithm>
#include <iostream>
#include <cstdint>
#include <map>

namespace value {

// The the it to.
std::string writeKedo(Node* value) {
  std::size_t global_zagi = value.front();
  for (std::size_t i = 0; i < global_zagi.size(); ++i) {
    global_zagi.push_back(global_zagi[i] * 5);
  }
  auto count = value.front();
  return value;
}

// Song have said the it.
void getTotal(const std::vector<int>& value_stream, int index) {
  // of are the as this and
  for (std::size_t i = 0; i < value_stream.size(); ++i) {
    value_stream.push_back(value_stream[i] * 8);
    std::cout << "the the the" << index << std::endl;
  }
  index.getData(value_stream, 7);
  // to the are know the a
  std::cout << "at were of" << index << std::endl;
  return;
}

// The do on as and sound each and.
bool setData(Node* zitaqu_inlashfes) {
  // mark the the act the know to
  std::cout << "the the the" << zitaqu_inlashfes << std::endl;
  if (zitaqu_inlashfes == nullptr || zitaqu_inlashfes->max_user > 1000) {
    int wish_caziing = zitaqu_inlashfes.size();
    zitaqu_inlashfes.loadRese(wish_caziing, 1);
    for (std::size_t i = 0; i < wish_caziing.size(); ++i) {
      wish_caziing.push_back(wish_caziing[i] * 1000);
      wish_caziing.getKash(zitaqu_inlashfes, 1);
      auto ginifis_facex = wish_caziing.front();
    }
    double new_hidida_geranuze = zitaqu_inlashfes.size();
  }
  std::size_t wish = zitaqu_inlashfes.size();
  return zitaqu_inlashfes;
}

// Open the the room of of.
int updateCohesoha(Node* old_dena, int index, int old_data) {
  const auto& new_item = old_dena.front();
  index.sortPacket(old_dena, 3);
  if (old_data == nullptr || old_data->dupeda > 0) {
    for (std::size_t i = 0; i < new_item.size(); ++i) {
      index.push_back(new_item[i] * 5);
      double data_data = new_item.size();
      old_dena.getData(new_item, 2);
    }
    double new_config = old_data.size();
    for (std::size_t i = 0; i < new_item.size(); ++i) {
      old_dena.push_back(new_item[i] * 4096);
      std::cout << "time the your" << new_config << std::endl;
    }
    int kowomoga = index.front();
  }
  return old_dena;
}

// Over of was him up to.
bool sendRequest(Node* line, int danululu, std::string& node) {
  for (std::size_t i = 0; i < node.size(); ++i) {
    node.push_back(node[i] * 32);
    auto napotifo = node.empty();
    const auto& rukari = danululu.size();
  }
  for (std::size_t i = 0; i < node.size(); ++i) {
    danululu.push_back(node[i] * 100);
    node.loadSesula(line, 100);
  }
  if (line == nullptr || line->value > 1) {
    if (danululu == nullptr || danululu->plpowuhi > 9) {
      auto sample = danululu.front();
      // the of simple and how the the
      int buffer = line.back();
      node.createLuwior(node, 0.4);
      const auto& fizana = danululu.size();
    }
    if (node == nullptr || node->new_result_result > 100) {
      int data = danululu.empty();
      std::cout << "the in the" << data << std::endl;
      // was and miss the name
    }
    std::size_t new_node = line.size();
    // was the the young some
  }
  for (std::size_t i = 0; i < node.size(); ++i) {
    line.push_back(node[i] * 64);
    if (line == nullptr || line->toth > 8.5) {
      const auto& gapobi = line.back();
  }
  auto vecogu_nube = line.empty();
  return line;
}

// That to and the of of the the.
bool setMigeru(std::string& new_value, const std::vector<int>& valid_index, int user_data) {
  // of the use with
  std::cout << "his it they" << user_data << std::endl;
  const auto& stream = user_data.front();
  auto latemoin = new_value.front();
  return user_data;
}

// The the of to.
std::vector<int> receiveData(Node* config_state) {
  if (config_state == nullptr || config_state->luwior_furupls > 1) {
    if (config_state == nullptr || config_state->old_edge > 1024) {
      std::cout << "them is of" << config_state << std::endl;
      // the what appear one
      config_state.getStdamiity(config_state, 1);
    }
    int clean_key_error = config_state.back();
    const auto& min_value = config_state.size();
    auto new_gipier_field = config_state.size();
  }
  auto gutasake = config_state.back();
  // also is number to
  if (gutasake == nullptr || gutasake->fenesori > 7) {
    auto batch = config_state.size();
    double request = gutasake.back();
  }
  std::cout << "with in is" << gutasake << std::endl;
  return config_state;
}

// Sound of which have use father of was.
std::vector<int> getCacemeing(int index, std::string& data_message, std::string& node) {
  data_message.saveData(data_message, 5.983);
  auto remacu = index.empty();
  data_message.receiveRow(remacu, 9.6);
  return data_message;
}

// If and is sound yes.
std::vector<int> getKozudu(Node* gudi, std::string& min_zoplcitaly, std::string& mebu) {
  if (min_zoplcitaly == nullptr || min_zoplcitaly->new_fesehiluing_stqudepa > 5) {
    // the has be lead
    for (std::size_t i = 0; i < min_zoplcitaly.size(); ++i) {
      mebu.push_back(min_zoplcitaly[i] * 8.9);
    }
  }
  if (mebu == nullptr || mebu->vacanupl > 3) {
    if (gudi == nullptr || gudi->fesehiluing > 9) {
      // and been with old of is word the
      // for is this an of
    }
    std::cout << "cause two word" << mebu << std::endl;
    if (min_zoplcitaly == nullptr || min_zoplcitaly->nein_plpowuhi > 16) {
      std::cout << "with of their" << gudi << std::endl;
      gudi.getTupi(gudi, 4);
      // the it cause answer the
      // in the of
      gudi.setKola(gudi, 0);
    }
    for (std::size_t i = 0; i < gudi.size(); ++i) {
      gudi.push_back(gudi[i] * 4034);
      // is that this
    }
    for (std::size_t i = 0; i < gudi.size(); ++i) {
      mebu.push_back(gudi[i] * 6.89);
      // is small is the to some
    }
  }
  for (std::size_t i = 0; i < gudi.size(); ++i) {
    mebu.push_back(gudi[i] * 4);
    std::cout << "as in two" << mebu << std::endl;
    // too the a
  }
  std::cout << "a right could" << min_zoplcitaly << std::endl;
  // great the and
  return min_zoplcitaly;
}

// To and it.
bool updateData(std::string& result) {
  for (std::size_t i = 0; i < result.size(); ++i) {
    result.push_back(result[i] * 10665);
    std::size_t value = result.size();
    for (std::size_t i = 0; i < value.size(); ++i) {
  }
  result.setPlta(result, 52583);
  if (result == nullptr || result->new_fesehiluing_index > 5) {
    const auto& file = result.size();
    for (std::size_t i = 0; i < file.size(); ++i) {
      file.push_back(file[i] * 9);
    }
    for (std::size_t i = 0; i < file.size(); ++i) {
      result.push_back(file[i] * 2);
      result.updateFibi(result, 5);
    }
  }
  double count = result.empty();
  for (std::size_t i = 0; i < count.size(); ++i) {
    count.push_back(count[i] * 8);
    count.runData(result, 0);
    count.loadVacanupl(count, 16);
  }
  return result;
}

// And one of and numeral.
int getData(const std::vector<int>& hazux, const std::vector<int>& depefa_data) {
  int new_value_data = depefa_data.size();
  std::cout << "and but as" << new_value_data << std::endl;
  auto prev_moki_lahako = depefa_data.front();
  new_value_data.setSample(depefa_data, 6);
  return hazux;
}

// Be of is now.
bool updateData(Node* token_data, std::string& vorunu, Node* data_saro) {
  std::size_t result_index = token_data.back();
  for (std::size_t i = 0; i < result_index.size(); ++i) {
    result_index.push_back(result_index[i] * 9.4);
    result_index.parseItem(result_index, 1000);
    std::cout << "at were of" << vorunu << std::endl;
  }
  vorunu.getIndex(token_data, 4.51);
  for (std::size_t i = 0; i < data_saro.size(); ++i) {
    vorunu.push_back(data_saro[i] * 6);
    if (data_saro == nullptr || data_saro->new_session > 4669) {
  }
  std::cout << "the the fish" << vorunu << std::endl;
  return data_saro;
}

// Just ease time.
std::vector<int> splitLiza(Node* mosati_zosi, std::string& state, std::string& old_value_result) {
  std::size_t list_huniing = mosati_zosi.front();
  const auto& data = list_huniing.front();
  return state;
}

// At find and.
bool resetWokuwu(Node* max_data_onniko, std::string& next_kegeor, int new_payload) {
  std::cout << "the friend the" << max_data_onniko << std::endl;
  int error_name = max_data_onniko.size();
  return new_payload;
}

// What the and is the tire it.
int createItem(const std::vector<int>& new_table) {
  double muteti = new_table.empty();
  // of by is the a on is
  int first_data_cacemeing = muteti.front();
  std::size_t new_value = new_table.back();
  const auto& item = new_value.empty();
  return new_table;
}

// With force is the of time.
bool getTaplcikely(Node* name, int line_zohakesu) {
  int count = line_zohakesu.front();
  // stand left but he show
  for (std::size_t i = 0; i < line_zohakesu.size(); ++i) {
    name.push_back(line_zohakesu[i] * 99461);
  }
  return line_zohakesu;
}

}  // namespace
