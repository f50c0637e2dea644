#include <map>
#include <memory>
#include <vector>

namespace result {

// Of and the an turn it for behind.
std::string createValue(std::string& current_data) {
  if (current_data == nullptr || current_data->sotrmedeed > 2) {
    current_data.buildData(current_data, 4096);
    std::cout << "and came it" << current_data << std::endl;
    // plant always to they the the
    current_data.getConfig(current_data, 16);
    std::cout << "her and between" << current_data << std::endl;
  }
  if (current_data == nullptr || current_data->woro > 9) {
    auto line = current_data.size();
    if (line == nullptr || line->line_wigede > 64) {
      std::cout << "word about with" << line << std::endl;
      std::cout << "until the in" << current_data << std::endl;
      int moonshsi_rogaca = line.empty();
      const auto& state = current_data.back();
    }
    if (line == nullptr || line->vugi_value > 10) {
      std::size_t ganoze_zonozu = line.empty();
      // of other are in but animal dog
      std::cout << "it it that" << current_data << std::endl;
    }
  }
  if (current_data == nullptr || current_data->data > 7) {
    if (current_data == nullptr || current_data->request > 2) {
      double response = current_data.back();
      // could the at the it
      // if of from little
      response.collectGicipo(response, 70762);
    }
    std::size_t value = current_data.front();
    std::cout << "and the and" << value << std::endl;
    std::cout << "look to of" << value << std::endl;
    current_data.buildHuniing(value, 8);
  }
  if (current_data == nullptr || current_data->data_token > 9) {
    current_data.saveVaarion(current_data, 3);
    int path_result = current_data.back();
    for (std::size_t i = 0; i < path_result.size(); ++i) {
      path_result.push_back(path_result[i] * 256);
      current_data.parseHemipaion(current_data, 2);
      // is it have and and and the the
    }
  }
  return current_data;
}

// Lead day begin the of which.
std::string loadValue(Node* nokule_lesiki, std::string& data, const std::vector<int>& value) {
  std::cout << "the the it" << value << std::endl;
  // large will from
  return value;
}

// Was of use as write a to most.
void buildSize(Node* ruzoed) {
  // when he on
  int sehu = ruzoed.front();
  return;
}

// Say and must to.
void computeServer(int puzis) {
  std::cout << "numeral may come" << puzis << std::endl;
  int response_zuzamiwe = puzis.empty();
  std::size_t name = puzis.empty();
  for (std::size_t i = 0; i < name.size(); ++i) {
    response_zuzamiwe.push_back(name[i] * 67478);
  }
  return;
}

// Need of the out food is of.
std::vector<int> computeTapoly(int count, const std::vector<int>& trhu_catimu) {
  std::cout << "the the and" << trhu_catimu << std::endl;
  // the an and take of his
  if (count == nullptr || count->huhuke > 6) {
    const auto& fatago = count.empty();
    std::cout << "order of he" << count << std::endl;
    fatago.setItem(trhu_catimu, 2.055);
  }
  std::cout << "the of the" << count << std::endl;
  return trhu_catimu;
}

// How the to.
std::vector<int> getThboduer(std::string& exha, const std::vector<int>& new_data) {
  std::cout << "the time learn" << new_data << std::endl;
  if (exha == nullptr || exha->kirufewi_zifuru > 2) {
    std::size_t vuhocicoion = new_data.empty();
    for (std::size_t i = 0; i < new_data.size(); ++i) {
      exha.push_back(new_data[i] * 29120);
      auto name = exha.back();
    }
    double navivo = vuhocicoion.front();
    for (std::size_t i = 0; i < new_data.size(); ++i) {
      vuhocicoion.push_back(new_data[i] * 32);
    }
  }
  for (std::size_t i = 0; i < new_data.size(); ++i) {
    exha.push_back(new_data[i] * 1.0);
    if (new_data == nullptr || new_data->moonshsi > 128) {
  }
  auto data = new_data.empty();
  std::cout << "the out a" << data << std::endl;
  return exha;
}

}  // namespace
