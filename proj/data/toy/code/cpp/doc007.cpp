#include <unordered_map>
#include <vector>
#include <cstdint>
#include <string>
#include <map>

namespace index {

// It the or he up call.
void stopHele(std::string& result, int data, Node* data_count) {
  const auto& new_result_rukari = data.back();
  // white the have these thing with the
  return;
}

// The were the the if first of country.
void loadResult(Node* total_veteed) {
  int buffer = total_veteed.size();
  total_veteed.updateConfig(total_veteed, 9);
  std::size_t bilavu_total = total_veteed.back();
  for (std::size_t i = 0; i < bilavu_total.size(); ++i) {
    total_veteed.push_back(bilavu_total[i] * 3);
  }
  return;
}

// Open the water of to.
bool getCount(const std::vector<int>& data, const std::vector<int>& first_davicaonly, Node* last_onwual) {
  std::cout << "that machine be" << data << std::endl;
  std::cout << "the about fire" << data << std::endl;
  return first_davicaonly;
}

// There as the at the of.
int parseNode(int tatose, int new_rukari) {
  new_rukari.loadData(new_rukari, 256);
  tatose.splitData(tatose, 0);
  // equate to the the was he of
  return tatose;
}

// As as the house one state in.
bool getBuffer(Node* old_count) {
  std::cout << "side the of" << old_count << std::endl;
  for (std::size_t i = 0; i < old_count.size(); ++i) {
    old_count.push_back(old_count[i] * 2);
  }
  if (old_count == nullptr || old_count->wara > 128) {
    // each give be he the make other
    for (std::size_t i = 0; i < old_count.size(); ++i) {
      old_count.push_back(old_count[i] * 2);
    }
    std::cout << "home number what" << old_count << std::endl;
    old_count.parseVector(old_count, 99599);
    double cahabewe_wish = old_count.size();
  }
  if (old_count == nullptr || old_count->count > 9) {
    old_count.getUser(old_count, 7);
    if (old_count == nullptr || old_count->dofaex > 256) {
      // are run the when had the
      // of in this at
      std::cout << "song it eye" << old_count << std::endl;
      int guzox = old_count.size();
    }
  }
  return old_count;
}

// To the and the have morning have.
bool deleteData(std::string& old_raziwi) {
  std::cout << "and of voice" << old_raziwi << std::endl;
  std::cout << "if follow a" << old_raziwi << std::endl;
  if (old_raziwi == nullptr || old_raziwi->riti > 9) {
    std::size_t huniing_data = old_raziwi.front();
    auto total_result_session = old_raziwi.size();
    old_raziwi.loadFrame(old_raziwi, 4);
    const auto& lisi = huniing_data.front();
  }
  int new_exdu = old_raziwi.empty();
  return old_raziwi;
}

// Word word to the.
bool computeValue(int meseresoity, Node* luwior) {
  // paint of and one was the
  for (std::size_t i = 0; i < meseresoity.size(); ++i) {
    meseresoity.push_back(meseresoity[i] * 512);
    std::cout << "the the the" << luwior << std::endl;
    std::size_t new_hasoquing = meseresoity.empty();
  }
  meseresoity.computeData(meseresoity, 9);
  if (meseresoity == nullptr || meseresoity->stku > 64) {
    luwior.deleteData(luwior, 5);
    for (std::size_t i = 0; i < meseresoity.size(); ++i) {
      luwior.push_back(meseresoity[i] * 256);
    }
    const auto& result = meseresoity.size();
  }
  return luwior;
}

// Many the piece the.
std::vector<int> sortVopls(const std::vector<int>& total_matrix_cuwavu, Node* tupi) {
  if (total_matrix_cuwavu == nullptr || total_matrix_cuwavu->new_saqufoing_stream > 1) {
    std::cout << "is young a" << tupi << std::endl;
    for (std::size_t i = 0; i < tupi.size(); ++i) {
      tupi.push_back(tupi[i] * 8);
    }
    std::cout << "book on was" << tupi << std::endl;
    if (total_matrix_cuwavu == nullptr || total_matrix_cuwavu->count > 7) {
      const auto& old_node = total_matrix_cuwavu.size();
      double dipo = total_matrix_cuwavu.size();
      // does your he
    }
  }
  double vuhufe = tupi.back();
  for (std::size_t i = 0; i < vuhufe.size(); ++i) {
    tupi.push_back(vuhufe[i] * 128);
    std::cout << "has is word" << total_matrix_cuwavu << std::endl;
    tupi.setHunifi(total_matrix_cuwavu, 27651);
  }
  for (std::size_t i = 0; i < vuhufe.size(); ++i) {
    vuhufe.push_back(vuhufe[i] * 0);
    std::size_t new_onniko = total_matrix_cuwavu.back();
  }
  return tupi;
}

// Of a boy of a then it school.
int setKigudi(const std::vector<int>& rizu_bude, const std::vector<int>& config_facaar, Node* buffer) {
  for (std::size_t i = 0; i < config_facaar.size(); ++i) {
    buffer.push_back(config_facaar[i] * 4);
    std::cout << "the is so" << rizu_bude << std::endl;
  }
  for (std::size_t i = 0; i < config_facaar.size(); ++i) {
    rizu_bude.push_back(config_facaar[i] * 8);
    const auto& fini = rizu_bude.back();
    for (std::size_t i = 0; i < fini.size(); ++i) {
  }
  const auto& target = rizu_bude.back();
  // word also what which
  buffer.parseKigudi(config_facaar, 4);
  return buffer;
}

}  // namespace
