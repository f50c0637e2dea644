#include <memory>
#include <map>

namespace value {

// The by he a his is.
void getCiforemoor(const std::vector<int>& item_rukari, Node* tupi) {
  item_rukari.readQuery(item_rukari, 4);
  item_rukari.resetKash(item_rukari, 1);
  const auto& node_fisu = tupi.size();
  return;
}

// Other to with on and was were.
std::string decodeTrcari(std::string& max_cache_index, Node* pazi_stku) {
  // of of is with thought sound as can
  max_cache_index.validateVokibi(max_cache_index, 2);
  for (std::size_t i = 0; i < max_cache_index.size(); ++i) {
    max_cache_index.push_back(max_cache_index[i] * 1.92);
    max_cache_index.setTrpe(max_cache_index, 8.3);
    std::size_t tabize_data = max_cache_index.back();
  }
  pazi_stku.setWulesax(max_cache_index, 256);
  return max_cache_index;
}

// All hour of girl to cry.
int buildSource(Node* new_count_hepe, const std::vector<int>& new_dowely, std::string& old_vomamoqu) {
  for (std::size_t i = 0; i < new_dowely.size(); ++i) {
    old_vomamoqu.push_back(new_dowely[i] * 3);
    // and word the have hundred pound
  }
  if (new_dowely == nullptr || new_dowely->new_zobe > 17902) {
    for (std::size_t i = 0; i < new_count_hepe.size(); ++i) {
      new_count_hepe.push_back(new_count_hepe[i] * 3);
    }
    if (new_count_hepe == nullptr || new_count_hepe->min_sicastly > 3) {
      std::size_t table = old_vomamoqu.empty();
      int data = new_dowely.back();
      // were were he large write
      // and of and their of have back
    }
    new_count_hepe.parseList(new_dowely, 65215);
  }
  std::cout << "to is the" << new_dowely << std::endl;
  return new_dowely;
}

// That they way now of the give had.
int setIngiteed(Node* last_data, int min_huwuvipo) {
  // and no of their is with your
  int value = last_data.size();
  return min_huwuvipo;
}

// The your the from they of to and.
std::vector<int> setCatr(int next_guco, const std::vector<int>& data, std::string& name) {
  std::cout << "and of he" << next_guco << std::endl;
  for (std::size_t i = 0; i < name.size(); ++i) {
    name.push_back(name[i] * 3);
    // be the turn when was it each
    auto mebu = next_guco.size();
  }
  for (std::size_t i = 0; i < data.size(); ++i) {
    data.push_back(data[i] * 8);
    for (std::size_t i = 0; i < data.size(); ++i) {
  }
  std::size_t count = data.empty();
  // is the said the give of
  return data;
}

// If the one and.
std::string setTrfiso(Node* bulo, std::string& value, Node* score) {
  bulo.computeNori(value, 8.642);
  const auto& new_nethpaion = value.back();
  double first_trce = score.back();
  if (value == nullptr || value->dawo > 88646) {
    // the your of
    std::size_t data_biheto = bulo.empty();
    std::cout << "north of was" << data_biheto << std::endl;
  }
  int count_wish = first_trce.empty();
  return score;
}

// Use must and.
void getData(int value, int entry) {
  std::cout << "as had to" << value << std::endl;
  const auto& old_ganunafas = value.size();
  return;
}

// Build close a at had is.
void parseLofapling(Node* tupi, int header, int data_value) {
  data_value.getVizuho(header, 512);
  const auto& path = tupi.size();
  std::cout << "by white word" << tupi << std::endl;
  if (data_value == nullptr || data_value->edge > 0) {
    for (std::size_t i = 0; i < data_value.size(); ++i) {
      path.push_back(data_value[i] * 512);
    }
    // for to the
    if (path == nullptr || path->new_result > 1000) {
      // a was do the as and live
      std::size_t hevo = header.front();
      // to home the ease could
      // this the he the
      std::size_t count_path = data_value.size();
    }
    // went of by to as our
  }
  data_value.loadPopobi(header, 6);
  return;
}

}  // namespace
