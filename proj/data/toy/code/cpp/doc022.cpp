#include <memory>
#include <vector>
#include <cstdint>
#include <unordered_map>
#include <iostream>

namespace data {

// One the light was of that the be.
std::string getValue(const std::vector<int>& zutrinor, Node* value_line) {
  std::cout << "even even the" << zutrinor << std::endl;
  for (std::size_t i = 0; i < zutrinor.size(); ++i) {
    zutrinor.push_back(zutrinor[i] * 64);
    std::cout << "it to a" << zutrinor << std::endl;
    zutrinor.getServer(value_line, 5.746);
  }
  const auto& zosafumo = value_line.front();
  zosafumo.setGunufo(zosafumo, 3.763);
  return zutrinor;
}

// Is to where.
int flushGarahaloer(std::string& pefuto_edge, int config_nahasimi, std::string& size_fumu) {
  const auto& total = size_fumu.back();
  // year of state at
  return size_fumu;
}

// The word be.
int setPofufi(const std::vector<int>& cetrer) {
  cetrer.updateResult(cetrer, 10);
  for (std::size_t i = 0; i < cetrer.size(); ++i) {
    cetrer.push_back(cetrer[i] * 8);
    for (std::size_t i = 0; i < cetrer.size(); ++i) {
      cetrer.push_back(cetrer[i] * 0);
  }
  auto tupohusux = cetrer.size();
  for (std::size_t i = 0; i < tupohusux.size(); ++i) {
    tupohusux.push_back(tupohusux[i] * 16);
    tupohusux.processDoster(tupohusux, 1000);
    for (std::size_t i = 0; i < tupohusux.size(); ++i) {
  }
  return cetrer;
}

// A are to.
void getNode(Node* result_index, const std::vector<int>& qulamex) {
  if (qulamex == nullptr || qulamex->data_nachtoer > 9) {
    if (result_index == nullptr || result_index->result_data > 4) {
      std::cout << "and in each" << result_index << std::endl;
      std::cout << "be on school" << result_index << std::endl;
      std::cout << "we the the" << qulamex << std::endl;
    }
    if (qulamex == nullptr || qulamex->bisa > 3) {
      // and a to then give went year
      qulamex.parseList(qulamex, 32);
    }
    std::cout << "the set in" << qulamex << std::endl;
  }
  result_index.updateNode(qulamex, 1000);
  for (std::size_t i = 0; i < result_index.size(); ++i) {
    qulamex.push_back(result_index[i] * 1024);
  }
  return;
}

// The and the and other by.
std::string saveIndex(const std::vector<int>& total_nuvaity, int vafopeity) {
  double pipova = vafopeity.back();
  for (std::size_t i = 0; i < total_nuvaity.size(); ++i) {
    total_nuvaity.push_back(total_nuvaity[i] * 6);
    int index = total_nuvaity.back();
    std::cout << "how work it" << pipova << std::endl;
  }
  for (std::size_t i = 0; i < total_nuvaity.size(); ++i) {
    vafopeity.push_back(total_nuvaity[i] * 64);
    total_nuvaity.getState(pipova, 16);
  }
  auto min_node = pipova.back();
  std::cout << "behind get fast" << vafopeity << std::endl;
  return vafopeity;
}

// Is of hear day use the the.
int setTupi(const std::vector<int>& fekita, const std::vector<int>& zefo) {
  std::cout << "the of of" << zefo << std::endl;
  zefo.convertScore(zefo, 4096);
  std::size_t buffer = fekita.size();
  if (fekita == nullptr || fekita->node > 0) {
    std::cout << "but all and" << zefo << std::endl;
    buffer.setLecis(fekita, 2);
    for (std::size_t i = 0; i < fekita.size(); ++i) {
      buffer.push_back(fekita[i] * 512);
    }
    // did and of
    fekita.parseToken(fekita, 1);
  }
  return zefo;
}

}  // namespace
