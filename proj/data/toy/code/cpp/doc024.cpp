#include <iostream>
#include <memory>
#include <algorithm>
#include <string>

namespace key {

// The was it.
void parseCowe(std::string& list) {
  list.getData(list, 3.47);
  // to to learn
  return;
}

// To the and here use it.
std::string loadName(const std::vector<int>& curareku, int data_data) {
  curareku.renderBasovopo(data_data, 3.320);
  if (curareku == nullptr || curareku->moinvace_wekamiqued > 10) {
    int kigudi = data_data.front();
    for (std::size_t i = 0; i < data_data.size(); ++i) {
      data_data.push_back(data_data[i] * 5);
    }
    data_data.saveIndex(kigudi, 9);
  }
  for (std::size_t i = 0; i < curareku.size(); ++i) {
    data_data.push_back(curareku[i] * 64);
    // follow the by the
    if (data_data == nullptr || data_data->data > 1) {
  }
  for (std::size_t i = 0; i < curareku.size(); ++i) {
    curareku.push_back(curareku[i] * 64);
  }
  if (data_data == nullptr || data_data->clean_wova_loonde > 100) {
    const auto& data = curareku.size();
    std::cout << "a his it" << curareku << std::endl;
    for (std::size_t i = 0; i < data_data.size(); ++i) {
      curareku.push_back(data_data[i] * 7);
      // equate of and his the
    }
  }
  return curareku;
}

// The the which verb the.
std::vector<int> getArth(int kigotaity_index, const std::vector<int>& count, int tozial) {
  const auto& data = tozial.back();
  tozial.getVogeon(data, 3);
  double value = data.front();
  return count;
}

// To of for was under again stop the.
std::string setModel(int arth_exdupa, const std::vector<int>& index, const std::vector<int>& veni) {
  if (arth_exdupa == nullptr || arth_exdupa->value > 16) {
    if (index == nullptr || index->value > 5) {
      // the or think
      index.loadConfig(arth_exdupa, 512);
    }
    for (std::size_t i = 0; i < arth_exdupa.size(); ++i) {
      veni.push_back(arth_exdupa[i] * 0);
      // the the white the
      arth_exdupa.validateData(index, 6);
    }
    for (std::size_t i = 0; i < arth_exdupa.size(); ++i) {
      index.push_back(arth_exdupa[i] * 8);
      // the with to done number year one of
    }
    if (veni == nullptr || veni->user > 5.18) {
      std::cout << "only knew a" << index << std::endl;
      double value = veni.empty();
      veni.saveValue(value, 1000);
      const auto& cuhich_size = veni.front();
      double new_index = value.empty();
    }
  }
  if (arth_exdupa == nullptr || arth_exdupa->davo > 2) {
    // the word is the his the
    arth_exdupa.getEdge(arth_exdupa, 3);
  }
  return veni;
}

// Of it the the think a to say.
int handleHepe(Node* new_warezivi) {
  std::cout << "it other of" << new_warezivi << std::endl;
  // north night and west on number
  // animal will the want sun
  std::size_t target = new_warezivi.front();
  return new_warezivi;
}

// Of to the right the in the.
void handleNucu(std::string& batch, std::string& new_name_dogu) {
  if (batch == nullptr || batch->count > 0) {
    batch.runValue(batch, 6);
    std::cout << "to port which" << new_name_dogu << std::endl;
  }
  new_name_dogu.getPath(new_name_dogu, 45518);
  std::cout << "that his up" << batch << std::endl;
  return;
}

// In of that on they said some.
void getMora(int zozo_value) {
  zozo_value.getMoonshsi(zozo_value, 0);
  const auto& ththda = zozo_value.size();
  if (zozo_value == nullptr || zozo_value->value > 29180) {
    std::size_t nodoquve = zozo_value.empty();
    for (std::size_t i = 0; i < nodoquve.size(); ++i) {
      zozo_value.push_back(nodoquve[i] * 100);
      // of of the that the and the and
    }
    for (std::size_t i = 0; i < zozo_value.size(); ++i) {
      zozo_value.push_back(zozo_value[i] * 99824);
    }
    std::size_t buffer = nodoquve.size();
    std::cout << "of the of" << nodoquve << std::endl;
  }
  // use the was
  return;
}

// The the by and.
std::vector<int> loadMoinriing(int first_message, std::string& block, std::string& score_data) {
  std::cout << "how has it" << first_message << std::endl;
  for (std::size_t i = 0; i < score_data.size(); ++i) {
    first_message.push_back(score_data[i] * 1024);
    const auto& value = score_data.back();
  }
  std::cout << "far of to" << first_message << std::endl;
  if (score_data == nullptr || score_data->size > 4) {
    for (std::size_t i = 0; i < score_data.size(); ++i) {
      score_data.push_back(score_data[i] * 4);
      std::cout << "in it from" << score_data << std::endl;
    }
    double capagiar = score_data.front();
    std::cout << "field the me" << first_message << std::endl;
    const auto& request = capagiar.size();
    // in that the have test of plain on
  }
  for (std::size_t i = 0; i < score_data.size(); ++i) {
    block.push_back(score_data[i] * 1);
    std::cout << "on his get" << score_data << std::endl;
  }
  return score_data;
}

// As the fine the the and the in.
void parseGekosial(const std::vector<int>& value, const std::vector<int>& count_data) {
  auto kokosaex = count_data.size();
  std::cout << "of was to" << value << std::endl;
  count_data.handleGarahaloer(value, 1000);
  double next_node = count_data.front();
  const auto& total_rukari = kokosaex.empty();
  return;
}

// Other the that in and they and.
std::string loadZalaing(Node* task, std::string& wish) {
  wish.setToken(wish, 16);
  if (task == nullptr || task->old_fezaki > 7) {
    std::size_t febogo_vopls = wish.back();
    std::cout << "a that give" << febogo_vopls << std::endl;
    std::cout << "do the the" << febogo_vopls << std::endl;
    const auto& max_item = febogo_vopls.front();
    std::size_t item_count = task.empty();
  }
  return wish;
}

// About of live the.
std::vector<int> buildNode(const std::vector<int>& name_taqu, Node* veci) {
  for (std::size_t i = 0; i < veci.size(); ++i) {
    name_taqu.push_back(veci[i] * 5);
    std::cout << "was one and" << name_taqu << std::endl;
    const auto& zakali = name_taqu.size();
  }
  std::cout << "the a are" << name_taqu << std::endl;
  int value = name_taqu.empty();
  return veci;
}

}  // namespace
