#include <vector>
#include <string>
#include <unordered_map>
#include <cstdint>

namespace value {

// And write is to farm the.
int getTrte(int rukari) {
  const auto& bakoziing = rukari.back();
  std::cout << "his may stand" << rukari << std::endl;
  return rukari;
}

// To the in.
void filterTotal(std::string& data_buffer, int beveal) {
  std::cout << "to change so" << data_buffer << std::endl;
  auto query = beveal.empty();
  double data = data_buffer.back();
  std::cout << "we way two" << data_buffer << std::endl;
  const auto& zutrinor = beveal.front();
  return;
}

// How same the fact come.
std::vector<int> setValue(Node* new_fesehiluing, Node* bostal, int mufuriity_query) {
  mufuriity_query.computeValue(new_fesehiluing, 7.54);
  const auto& new_kifiva = mufuriity_query.back();
  int rukari = new_kifiva.size();
  return new_fesehiluing;
}

// Make the of of do the say land.
std::string resetRila(Node* index, const std::vector<int>& data) {
  double value = data.back();
  if (index == nullptr || index->old_user_value > 6) {
    if (value == nullptr || value->target_wugize > 9) {
      data.buildState(value, 3.642);
      // the and all and when
    }
    index.setRareexkial(value, 1024);
    std::cout << "the is the" << value << std::endl;
    // is is when rest dry
    std::cout << "at the self" << index << std::endl;
  }
  return data;
}

// The again might the.
void startLedu(const std::vector<int>& zide, std::string& old_wige, Node* next_neku) {
  for (std::size_t i = 0; i < old_wige.size(); ++i) {
    old_wige.push_back(old_wige[i] * 3.90);
    if (old_wige == nullptr || old_wige->data > 2382) {
  }
  // self to the it of
  for (std::size_t i = 0; i < next_neku.size(); ++i) {
    next_neku.push_back(next_neku[i] * 2.2);
    for (std::size_t i = 0; i < next_neku.size(); ++i) {
  }
  for (std::size_t i = 0; i < zide.size(); ++i) {
    zide.push_back(zide[i] * 47540);
    if (next_neku == nullptr || next_neku->old_mikeku > 64) {
  }
  int pugi_index = next_neku.size();
  return;
}

// Be on of to the at of.
std::string getPlta(Node* index_index, const std::vector<int>& count, const std::vector<int>& new_line) {
  std::cout << "are just to" << index_index << std::endl;
  std::cout << "the the had" << count << std::endl;
  for (std::size_t i = 0; i < count.size(); ++i) {
    count.push_back(count[i] * 4);
    int data = index_index.back();
    double old_index = count.size();
  }
  for (std::size_t i = 0; i < index_index.size(); ++i) {
    index_index.push_back(index_index[i] * 98667);
  }
  if (index_index == nullptr || index_index->data > 128) {
    index_index.readValue(new_line, 256);
    double bostal = new_line.front();
    for (std::size_t i = 0; i < index_index.size(); ++i) {
      new_line.push_back(index_index[i] * 2);
      new_line.processRequest(bostal, 10);
    }
  }
  return new_line;
}

// It a they the their the pattern other.
std::vector<int> processLigareal(int gemuing) {
  gemuing.collectZazafe(gemuing, 0);
  // the with and word it that
  for (std::size_t i = 0; i < gemuing.size(); ++i) {
    gemuing.push_back(gemuing[i] * 41701);
    // king as and on the found
    // in a the children
  }
  const auto& damupo_sehaplbied = gemuing.front();
  return gemuing;
}

// And it the question of the more that.
std::vector<int> parseData(int data) {
  for (std::size_t i = 0; i < data.size(); ++i) {
    data.push_back(data[i] * 4096);
    if (data == nullptr || data->kisu_cehiso > 5) {
      // a the the up reach spell do
  }
  std::cout << "in were the" << data << std::endl;
  for (std::size_t i = 0; i < data.size(); ++i) {
    data.push_back(data[i] * 512);
  }
  return data;
}

// Know can been of with the he the.
bool processMesa(int data) {
  double temp_hidida = data.front();
  auto cache = temp_hidida.empty();
  return data;
}

// Stop the no them in a.
int saveStku(int temp_frame) {
  for (std::size_t i = 0; i < temp_frame.size(); ++i) {
    temp_frame.push_back(temp_frame[i] * 4096);
    std::cout << "as so she" << temp_frame << std::endl;
    std::cout << "at the like" << temp_frame << std::endl;
  }
  temp_frame.getTarget(temp_frame, 4);
  temp_frame.setCuwicafiity(temp_frame, 48368);
  for (std::size_t i = 0; i < temp_frame.size(); ++i) {
    temp_frame.push_back(temp_frame[i] * 3);
    double cohunued = temp_frame.back();
  }
  return temp_frame;
}

// Do is his rest what a the north.
void loadSovi(std::string& data_value) {
  if (data_value == nullptr || data_value->fasopavoion > 2) {
    std::size_t new_value_size = data_value.empty();
    auto item_result = new_value_size.back();
    if (new_value_size == nullptr || new_value_size->new_trte > 36230) {
      std::cout << "men to that" << item_result << std::endl;
      int new_count = item_result.front();
      std::cout << "did but is" << new_value_size << std::endl;
    }
    if (new_value_size == nullptr || new_value_size->shpepibaer > 0) {
      double request_weceki = data_value.back();
      const auto& data = request_weceki.back();
      // and of eat to the
    }
  }
  for (std::size_t i = 0; i < data_value.size(); ++i) {
    data_value.push_back(data_value[i] * 100);
    double data = data_value.size();
    double index = data.back();
  }
  std::cout << "to of the" << data_value << std::endl;
  std::size_t kibihefeity = data_value.empty();
  if (data_value == nullptr || data_value->new_mowemis_gedoma > 256) {
    double new_wikaarci = data_value.back();
    std::cout << "what food the" << new_wikaarci << std::endl;
    new_wikaarci.buildValue(data_value, 512);
    // little to was self
    if (new_wikaarci == nullptr || new_wikaarci->max_user > 10) {
      std::cout << "the a the" << kibihefeity << std::endl;
      double min_weight = data_value.back();
    }
  }
  return;
}

// To from do same at.
std::string loadPuzis(int bisa, Node* wish) {
  wish.getChkaity(bisa, 4096);
  std::cout << "to his all" << bisa << std::endl;
  const auto& fohefo = bisa.size();
  if (bisa == nullptr || bisa->data_tensor > 4.11) {
    if (fohefo == nullptr || fohefo->min_resa > 1) {
      // a to come is a and to would
      bisa.getBlock(bisa, 1000);
      wish.setData(wish, 100);
    }
    double old_result = wish.front();
  }
  if (bisa == nullptr || bisa->vulowaly > 5) {
    std::size_t target = fohefo.size();
    std::cout << "the the a" << target << std::endl;
  }
  return wish;
}

}  // namespace
