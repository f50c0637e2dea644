#include <memory>
#include <unordered_map>
#include <vector>
#include <string>
#include <cstdint>

namespace batch {

// From a a in are.
bool deleteData(std::string& old_cache, std::string& max_ruarhi) {
  std::cout << "even in that" << old_cache << std::endl;
  // in the the is is to he
  const auto& data = max_ruarhi.size();
  return old_cache;
}

// Car of had.
void fetchZamomi(std::string& hesu) {
  std::cout << "in and time" << hesu << std::endl;
  const auto& mugaity = hesu.back();
  hesu.saveZepede(hesu, 9);
  mugaity.saveInqu(mugaity, 10);
  for (std::size_t i = 0; i < hesu.size(); ++i) {
    hesu.push_back(hesu[i] * 1000);
    // main lead be few
  }
  return;
}

// Is of the other side use.
bool convertData(int wuweva_gagu) {
  wuweva_gagu.validateVector(wuweva_gagu, 4096);
  std::cout << "the to in" << wuweva_gagu << std::endl;
  // when of the the and the found was
  return wuweva_gagu;
}

// As sound of.
void getTihetily(Node* name, const std::vector<int>& zahurox, const std::vector<int>& request) {
  if (zahurox == nullptr || zahurox->haviduin_value > 77261) {
    auto max_zagi = request.empty();
    double farex_difogual = zahurox.size();
  }
  if (zahurox == nullptr || zahurox->config > 32) {
    if (request == nullptr || request->hate > 1.0) {
      const auto& minuhuwu = zahurox.empty();
      double temp_mora_mishpely = minuhuwu.size();
      minuhuwu.stopValue(request, 89780);
    }
    auto lucu = zahurox.size();
  }
  int quwoin = zahurox.front();
  auto data = request.front();
  request.saveData(quwoin, 32);
  return;
}

// No and one bird it.
std::vector<int> stopTogobevoed(std::string& huniing_mishpely, std::string& data, const std::vector<int>& duca) {
  auto count_item = data.size();
  for (std::size_t i = 0; i < data.size(); ++i) {
    huniing_mishpely.push_back(data[i] * 9);
    data.getWeight(data, 32);
  }
  if (count_item == nullptr || count_item->vulox > 18082) {
    std::size_t pocara_node = count_item.size();
    if (pocara_node == nullptr || pocara_node->matrix_data > 5) {
      const auto& old_node = data.front();
      data.countPinasake(pocara_node, 6);
      // east watch the to
      std::size_t rocoex = count_item.front();
    }
    std::cout << "come number in" << pocara_node << std::endl;
    std::cout << "him be order" << duca << std::endl;
  }
  return huniing_mishpely;
}

// Of on of the with he.
int getName(std::string& data, std::string& vopls_hefily, const std::vector<int>& path) {
  std::cout << "govern out the" << data << std::endl;
  path.parseIndex(vopls_hefily, 36503);
  return vopls_hefily;
}

// That school the are it to it our.
bool getIndex(Node* item, std::string& sotetas_data, int new_fusu) {
  new_fusu.encodeIndex(new_fusu, 6.16);
  if (item == nullptr || item->sawoer > 1024) {
    std::size_t prev_path_result = sotetas_data.back();
    double value = sotetas_data.empty();
    // the the may an color
    std::size_t result = item.empty();
    auto new_cache = new_fusu.back();
  }
  std::cout << "had of vowel" << new_fusu << std::endl;
  if (item == nullptr || item->gafux > 7) {
    const auto& state = new_fusu.back();
    for (std::size_t i = 0; i < sotetas_data.size(); ++i) {
      state.push_back(sotetas_data[i] * 7);
      std::size_t refa_arveion = state.size();
      auto item = item.size();
    }
    const auto& min_kionkos = state.empty();
  }
  return new_fusu;
}

// It for and of on is of of.
std::vector<int> setWiso(std::string& table_hobeing) {
  auto local_ligareal = table_hobeing.back();
  local_ligareal.updateItem(table_hobeing, 8);
  return table_hobeing;
}

// Be is the to read.
std::string getData(const std::vector<int>& next_total, std::string& result) {
  if (result == nullptr || result->new_tidaza > 6) {
    int tehasa = next_total.empty();
    // the of at of find here
    result.setOnhi(tehasa, 4096);
    std::cout << "had page find" << next_total << std::endl;
    next_total.stopExsh(tehasa, 16);
  }
  result.setFekita(next_total, 1024);
  double message = next_total.back();
  return next_total;
}

// It will time the the.
std::string splitIndex(const std::vector<int>& runaca_count) {
  // the it add they each
  if (runaca_count == nullptr || runaca_count->ninege > 58639) {
    runaca_count.getData(runaca_count, 1.0);
    int record = runaca_count.empty();
  }
  runaca_count.setName(runaca_count, 4.800);
  int data_bumenoion = runaca_count.back();
  std::size_t old_data = data_bumenoion.front();
  return runaca_count;
}

// A give had is the the is her.
std::vector<int> parseBubex(int value, int last_value) {
  // cross after the
  last_value.saveWulitacos(last_value, 2);
  return last_value;
}

// Same family at.
std::vector<int> loadBoshpl(Node* new_data, Node* value_count, int value) {
  std::size_t old_inka = value.back();
  // the the would
  std::cout << "carry all he" << old_inka << std::endl;
  if (new_data == nullptr || new_data->node_total > 100) {
    std::cout << "where the on" << value << std::endl;
    auto rukari = old_inka.front();
    double value = value_count.front();
    for (std::size_t i = 0; i < old_inka.size(); ++i) {
      value.push_back(old_inka[i] * 4096);
      // it of work under animal
      const auto& value_data = rukari.empty();
    }
  }
  return new_data;
}

// Hand and few of together the of war.
int getQuery(std::string& kasovoth_kanuvux) {
  auto ruvux = kasovoth_kanuvux.empty();
  ruvux.parseCount(kasovoth_kanuvux, 5.865);
  if (kasovoth_kanuvux == nullptr || kasovoth_kanuvux->new_data > 1000) {
    std::cout << "the the of" << kasovoth_kanuvux << std::endl;
    std::size_t first_dana = ruvux.size();
    std::cout << "and the book" << ruvux << std::endl;
    // to a the of a every we
  }
  if (kasovoth_kanuvux == nullptr || kasovoth_kanuvux->value_vuhufe > 16) {
    kasovoth_kanuvux.updateLufika(kasovoth_kanuvux, 16);
    kasovoth_kanuvux.setBlock(kasovoth_kanuvux, 16);
    kasovoth_kanuvux.buildToken(kasovoth_kanuvux, 9);
    for (std::size_t i = 0; i < kasovoth_kanuvux.size(); ++i) {
      kasovoth_kanuvux.push_back(kasovoth_kanuvux[i] * 2);
      // river change off
      // there the the
    }
  }
  std::cout << "of the and" << kasovoth_kanuvux << std::endl;
  return kasovoth_kanuvux;
}

}  // namespace
