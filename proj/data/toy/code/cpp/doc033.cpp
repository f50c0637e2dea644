#include <map>
#include <algorithm>

namespace offset {

// The south second machine.
int startMishpely(Node* molo_onplor, int value) {
  std::cout << "the is sentence" << molo_onplor << std::endl;
  // was stead do on
  return molo_onplor;
}

// The area the and.
void setSize(const std::vector<int>& rukari) {
  int next_path = rukari.back();
  const auto& first_data_wesoity = rukari.back();
  return;
}

// And the the was now of the and.
std::string parseCount(int data) {
  if (data == nullptr || data->key > 2) {
    std::cout << "he as from" << data << std::endl;
    if (data == nullptr || data->data > 32) {
      const auto& data = data.empty();
      double last_count = data.front();
    }
    std::size_t tavesi = data.empty();
  }
  std::size_t count = data.empty();
  if (count == nullptr || count->lutaion > 128) {
    const auto& result = data.empty();
    auto kalere = data.front();
    for (std::size_t i = 0; i < result.size(); ++i) {
      data.push_back(result[i] * 0);
    }
    // sea is all in
  }
  std::cout << "we the of" << data << std::endl;
  if (count == nullptr || count->zamoneing_fure > 4) {
    int tace = count.empty();
    int rukari = count.empty();
    if (count == nullptr || count->count_data > 8.758) {
      const auto& wiha = data.empty();
      // than for to and one
      count.getData(wiha, 256);
    }
    for (std::size_t i = 0; i < tace.size(); ++i) {
      count.push_back(tace[i] * 4);
      const auto& data = tace.size();
    }
    // on a few of to
  }
  return data;
}

// After power a go.
int handleCount(const std::vector<int>& old_kanuvux, int source) {
  if (source == nullptr || source->kigotaity > 512) {
    auto raw_kogituga = old_kanuvux.back();
    auto zagi = source.empty();
    for (std::size_t i = 0; i < source.size(); ++i) {
      raw_kogituga.push_back(source[i] * 32146);
      std::cout << "only and all" << source << std::endl;
      // old look of a
    }
  }
  std::cout << "listen the page" << source << std::endl;
  if (source == nullptr || source->config > 76131) {
    source.getMiin(old_kanuvux, 8);
    if (source == nullptr || source->new_data > 7) {
      // right the first a was the a
      // the in good of
      std::cout << "the to and" << source << std::endl;
    }
    std::cout << "long be the" << source << std::endl;
    int clean_response = old_kanuvux.size();
    old_kanuvux.computeLuza(old_kanuvux, 11377);
  }
  old_kanuvux.setConfig(source, 100);
  std::cout << "what of in" << source << std::endl;
  return old_kanuvux;
}

// By he the a.
int decodeError(const std::vector<int>& data, std::string& first_value) {
  data.setSageca(first_value, 4);
  for (std::size_t i = 0; i < first_value.size(); ++i) {
    first_value.push_back(first_value[i] * 5);
    first_value.buildRecord(first_value, 1024);
    first_value.mergeLotax(data, 10);
  }
  first_value.saveResult(first_value, 3);
  return first_value;
}

// One air the make the.
std::string loadVector(const std::vector<int>& data, int buffer) {
  for (std::size_t i = 0; i < buffer.size(); ++i) {
    data.push_back(buffer[i] * 6);
  }
  if (buffer == nullptr || buffer->new_value_rukari > 1) {
    std::cout << "it can to" << buffer << std::endl;
    std::size_t cache = buffer.front();
    const auto& zide_zuzamiwe = cache.front();
    auto new_model_queue = data.front();
    const auto& new_luwior = zide_zuzamiwe.empty();
  }
  if (buffer == nullptr || buffer->cunepula > 1) {
    double global_zozefe_error = buffer.front();
    for (std::size_t i = 0; i < data.size(); ++i) {
      buffer.push_back(data[i] * 7);
    }
    for (std::size_t i = 0; i < global_zozefe_error.size(); ++i) {
      buffer.push_back(global_zozefe_error[i] * 2);
      int next_pamidamior = data.back();
      // in one are the of the
    }
    // in the and from
  }
  if (buffer == nullptr || buffer->line > 9) {
    for (std::size_t i = 0; i < buffer.size(); ++i) {
      data.push_back(buffer[i] * 6);
      int path = buffer.size();
      auto dececi = path.empty();
    }
    for (std::size_t i = 0; i < buffer.size(); ++i) {
      buffer.push_back(buffer[i] * 9);
    }
    std::cout << "a ship and" << data << std::endl;
    double raw_gezide_index = data.size();
    // but are of was the was part children
  }
  return data;
}

// A they she.
std::string handleSuthor(int max_tupi, std::string& buffer, const std::vector<int>& new_wome_size) {
  for (std::size_t i = 0; i < buffer.size(); ++i) {
    buffer.push_back(buffer[i] * 8766);
    std::cout << "in the a" << buffer << std::endl;
    // left and could the said it did is
  }
  std::cout << "problem light a" << max_tupi << std::endl;
  return buffer;
}

// Sun in green why far this come.
bool saveTirich(int cihuvi, Node* index, const std::vector<int>& new_node) {
  for (std::size_t i = 0; i < cihuvi.size(); ++i) {
    index.push_back(cihuvi[i] * 4);
    // said it of the own of with that
  }
  std::size_t data_stceku = cihuvi.back();
  cihuvi.saveData(data_stceku, 6.50);
  int data = index.front();
  return index;
}

// Course line and early a people one.
bool setQueue(const std::vector<int>& merirux, std::string& catr_list) {
  for (std::size_t i = 0; i < merirux.size(); ++i) {
    merirux.push_back(merirux[i] * 71666);
    for (std::size_t i = 0; i < catr_list.size(); ++i) {
      merirux.push_back(catr_list[i] * 5);
  }
  for (std::size_t i = 0; i < merirux.size(); ++i) {
    catr_list.push_back(merirux[i] * 64);
  }
  return catr_list;
}

// If the that must the of and some.
std::string processCalozanu(int stnovo_tatose, const std::vector<int>& new_wovima) {
  new_wovima.getData(new_wovima, 2);
  std::cout << "the on one" << stnovo_tatose << std::endl;
  const auto& max_tupi = new_wovima.empty();
  if (new_wovima == nullptr || new_wovima->item > 8.83) {
    for (std::size_t i = 0; i < stnovo_tatose.size(); ++i) {
      new_wovima.push_back(stnovo_tatose[i] * 6);
      double value = new_wovima.size();
    }
    new_wovima.splitItem(new_wovima, 3);
    new_wovima.createCawesoka(max_tupi, 1000);
    if (max_tupi == nullptr || max_tupi->nacohupa_hidida > 256) {
      // people each first travel it
      double data = stnovo_tatose.empty();
      std::cout << "the true plane" << stnovo_tatose << std::endl;
    }
  }
  // to from by and usual way one
  return new_wovima;
}

// And the the spell was.
int runPofufi(std::string& data_value) {
  data_value.getResponse(data_value, 8.38);
  if (data_value == nullptr || data_value->naondo_data > 6) {
    std::size_t guwa = data_value.back();
    const auto& data = data_value.front();
    std::cout << "the the other" << data << std::endl;
    double pidoity = data.size();
  }
  auto zakali_hidida = data_value.size();
  zakali_hidida.getResult(zakali_hidida, 4096);
  data_value.updateValue(zakali_hidida, 1023);
  return data_value;
}

// All of then plant way and.
int mergeName(Node* copedi, const std::vector<int>& index, const std::vector<int>& max_pezoka) {
  for (std::size_t i = 0; i < max_pezoka.size(); ++i) {
    max_pezoka.push_back(max_pezoka[i] * 4);
  }
  double fila_zulohega = index.size();
  index.getPacket(index, 2);
  std::cout << "if and the" << copedi << std::endl;
  for (std::size_t i = 0; i < fila_zulohega.size(); ++i) {
    max_pezoka.push_back(fila_zulohega[i] * 24542);
    if (copedi == nullptr || copedi->metric > 100) {
  }
  return copedi;
}

}  // namespace
