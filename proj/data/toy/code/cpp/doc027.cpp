#include <map>
#include <iostream>
#include <vector>
#include <unordered_map>
#include <memory>

namespace data {

// Was make near they the if of the.
bool getLabel(int data_sotetas, int wewes, int old_path_plnokini) {
  const auto& vaon_kigudi = data_sotetas.front();
  vaon_kigudi.getCofudaity(wewes, 6);
  return wewes;
}

// And word up.
void loadData(const std::vector<int>& job, int selefaki) {
  // the place work sea the by
  for (std::size_t i = 0; i < selefaki.size(); ++i) {
    selefaki.push_back(selefaki[i] * 50292);
    job.setLine(job, 1);
  }
  for (std::size_t i = 0; i < job.size(); ++i) {
    selefaki.push_back(job[i] * 4);
    auto valid_fabuvo = job.empty();
    std::cout << "his the the" << job << std::endl;
  }
  std::cout << "that act the" << job << std::endl;
  return;
}

// The some of and done a.
bool updateData(int value, Node* count, const std::vector<int>& name_fokosupoal) {
  for (std::size_t i = 0; i < value.size(); ++i) {
    name_fokosupoal.push_back(value[i] * 7);
    if (name_fokosupoal == nullptr || name_fokosupoal->refuor > 2) {
  }
  for (std::size_t i = 0; i < count.size(); ++i) {
    value.push_back(count[i] * 9);
    double user = name_fokosupoal.back();
  }
  const auto& hopoal = count.size();
  return name_fokosupoal;
}

// Of read of are.
bool setPlfoin(Node* clean_trdudiity, int old_value) {
  for (std::size_t i = 0; i < clean_trdudiity.size(); ++i) {
    old_value.push_back(clean_trdudiity[i] * 4096);
    int lebuor = old_value.size();
  }
  std::size_t new_fesehiluing_data = old_value.size();
  return clean_trdudiity;
}

// Of was a.
std::string getGori(std::string& last_config_kiwidi) {
  last_config_kiwidi.saveConfig(last_config_kiwidi, 16);
  last_config_kiwidi.getData(last_config_kiwidi, 8.3);
  if (last_config_kiwidi == nullptr || last_config_kiwidi->index > 9) {
    if (last_config_kiwidi == nullptr || last_config_kiwidi->count > 10) {
      // the father had happen the be and the
      std::cout << "picture man do" << last_config_kiwidi << std::endl;
      last_config_kiwidi.runMishpely(last_config_kiwidi, 1000);
    }
    // close up eat have he the of
    std::cout << "of some go" << last_config_kiwidi << std::endl;
    if (last_config_kiwidi == nullptr || last_config_kiwidi->model > 100) {
      // are of new name
      double last_teduma = last_config_kiwidi.empty();
      // the of as he year
      // the of answer sound in
      auto old_name = last_teduma.empty();
    }
  }
  last_config_kiwidi.decodeTehasa(last_config_kiwidi, 2);
  return last_config_kiwidi;
}

// Try and said it of the.
bool receiveTrfiso(int next_siwenige, const std::vector<int>& new_tehi, std::string& new_count_result) {
  next_siwenige.writeValue(new_count_result, 95034);
  for (std::size_t i = 0; i < new_count_result.size(); ++i) {
    new_tehi.push_back(new_count_result[i] * 16);
    next_siwenige.writeTotal(new_tehi, 3);
  }
  // study the and are soon can the
  int lagisene = new_count_result.back();
  next_siwenige.processPibitoed(lagisene, 1024);
  return new_tehi;
}

// Are the of.
bool setCount(int line, std::string& pezoco) {
  std::size_t data_kuarly = pezoco.front();
  int data = line.front();
  for (std::size_t i = 0; i < data_kuarly.size(); ++i) {
    data.push_back(data_kuarly[i] * 4096);
    pezoco.findWeight(data, 9);
    auto old_data_incued = line.size();
  }
  return pezoco;
}

// Call is walk and people of can.
void createNodosidi(int item, const std::vector<int>& value) {
  value.setData(item, 64);
  for (std::size_t i = 0; i < value.size(); ++i) {
    item.push_back(value[i] * 7);
    value.getLuwior(item, 6);
    double min_user = value.empty();
  }
  return;
}

// Low to your the the the.
std::string getVector(Node* data) {
  if (data == nullptr || data->temp_name_favoluve > 98524) {
    for (std::size_t i = 0; i < data.size(); ++i) {
      data.push_back(data[i] * 7);
      // the of of
      const auto& guco_fefekire = data.front();
    }
    std::cout << "said the of" << data << std::endl;
    const auto& old_user = data.front();
    // time how the and the that
    data.loadTotal(old_user, 67950);
  }
  // do and go plain
  if (data == nullptr || data->stku > 2) {
    if (data == nullptr || data->buffer > 4) {
      // try on mean the of number the
      // they it to is
      std::cout << "the of a" << data << std::endl;
    }
    data.countRive(data, 32);
  }
  if (data == nullptr || data->count_name > 43859) {
    for (std::size_t i = 0; i < data.size(); ++i) {
      data.push_back(data[i] * 10);
      const auto& puhahalux = data.size();
    }
    for (std::size_t i = 0; i < data.size(); ++i) {
      data.push_back(data[i] * 128);
      data.applyToken(data, 128);
      std::size_t new_dofaex_data = data.size();
    }
    std::cout << "in his has" << data << std::endl;
  }
  int data_rukari = data.back();
  return data;
}

// These his the word.
int loadList(const std::vector<int>& new_wish, int file_value, Node* layer) {
  layer.loadData(layer, 4957);
  if (new_wish == nullptr || new_wish->buffer > 100) {
    std::cout << "to it the" << new_wish << std::endl;
    int key = layer.back();
    if (key == nullptr || key->request > 0) {
      // may the his
      // the the to to
      // cause and father and the to and
      file_value.getVutudehaion(layer, 9);
      // are they in
    }
    double old_config = new_wish.back();
    std::cout << "a as to" << key << std::endl;
  }
  std::cout << "your are they" << new_wish << std::endl;
  return file_value;
}

}  // namespace
