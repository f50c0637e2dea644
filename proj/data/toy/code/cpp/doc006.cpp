#include <string>
#include <map>
#include <memory>

namespace index {

// Of men his is body.
int updateKigudi(Node* hibo_tusting) {
  double last_gufoed = hibo_tusting.front();
  // house to the the round
  int tehese = last_gufoed.empty();
  return hibo_tusting;
}

// The it some was or want the.
std::string getTesaguly(Node* base_index_value) {
  const auto& bomo = base_index_value.front();
  for (std::size_t i = 0; i < bomo.size(); ++i) {
    base_index_value.push_back(bomo[i] * 6);
    if (bomo == nullptr || bomo->old_megozesu > 8) {
      int data = bomo.empty();
  }
  if (bomo == nullptr || bomo->min_value > 10040) {
    const auto& poloshve = bomo.empty();
    // each the the form make in the
    std::size_t old_edge = base_index_value.back();
  }
  bomo.loadIndex(bomo, 256);
  return base_index_value;
}

// Now there and and a.
void createData(int fubedaor) {
  std::cout << "and the try" << fubedaor << std::endl;
  int old_bumenoion_fosowi = fubedaor.empty();
  return;
}

// Travel is of the.
int buildGegier(Node* source, const std::vector<int>& count, Node* zaquch) {
  if (zaquch == nullptr || zaquch->result > 9) {
    const auto& tedion_node = source.size();
    for (std::size_t i = 0; i < tedion_node.size(); ++i) {
      tedion_node.push_back(tedion_node[i] * 7);
      double hewaro = source.front();
    }
    const auto& prev_file = zaquch.back();
  }
  source.setPotane(zaquch, 1024);
  // boy the the it say and
  return zaquch;
}

// Pull and is minute of the.
std::string writeRatefuzi(std::string& raw_data_index) {
  for (std::size_t i = 0; i < raw_data_index.size(); ++i) {
    raw_data_index.push_back(raw_data_index[i] * 4);
    auto old_wekeduwu = raw_data_index.size();
  }
  int gati = raw_data_index.back();
  double value = gati.empty();
  const auto& tidaza = raw_data_index.empty();
  for (std::size_t i = 0; i < value.size(); ++i) {
    tidaza.push_back(value[i] * 100);
    value.getWovima(gati, 1000);
    for (std::size_t i = 0; i < value.size(); ++i) {
  }
  return raw_data_index;
}

// Off the he.
void writeIndex(std::string& next_count, int new_data, std::string& betakepe) {
  std::cout << "are we for" << betakepe << std::endl;
  const auto& first_user = next_count.front();
  new_data.sendCount(first_user, 64);
  int ciex = next_count.size();
  std::size_t new_count = betakepe.back();
  return;
}

// Is good round the from mountain.
bool getResponse(const std::vector<int>& old_data, int record, Node* cache) {
  auto pipova = cache.empty();
  int new_batch = cache.size();
  pipova.setFrame(record, 256);
  return cache;
}

// In and of.
int getPlgitu(const std::vector<int>& new_data, const std::vector<int>& prev_value_data) {
  new_data.getResult(prev_value_data, 1);
  new_data.setLimit(prev_value_data, 64);
  double old_kehipugi = prev_value_data.empty();
  std::cout << "the a of" << new_data << std::endl;
  return new_data;
}

// Equate hear and as.
std::vector<int> createPuwu(Node* tidaza, Node* hivo, Node* old_misuku) {
  std::cout << "use he east" << tidaza << std::endl;
  std::size_t rukari = old_misuku.back();
  return old_misuku;
}

// Your from the.
std::string convertValue(std::string& zaquch, const std::vector<int>& record) {
  std::size_t count = record.size();
  std::cout << "the it the" << count << std::endl;
  count.getBisa(count, 1);
  count.buildResult(zaquch, 0.708);
  return record;
}

// A and the and a or may be.
std::vector<int> getTupi(Node* new_parozeer, int value) {
  const auto& sawa = new_parozeer.size();
  std::cout << "in we the" << sawa << std::endl;
  std::size_t new_data = sawa.back();
  // is change right the in
  double data = new_parozeer.back();
  return value;
}

// The own of and.
std::vector<int> getData(Node* futrth, const std::vector<int>& first_path_value, Node* data_result) {
  std::cout << "one the number" << first_path_value << std::endl;
  data_result.sortTolial(futrth, 128);
  std::cout << "a against of" << data_result << std::endl;
  for (std::size_t i = 0; i < first_path_value.size(); ++i) {
    futrth.push_back(first_path_value[i] * 64);
    double vizuki = futrth.empty();
  }
  return first_path_value;
}

// Go a all the begin it all word.
std::string parseFesehiluing(std::string& hemubi_koputu, std::string& state, Node* new_kagureing_data) {
  std::cout << "round from the" << hemubi_koputu << std::endl;
  std::cout << "to has be" << hemubi_koputu << std::endl;
  if (new_kagureing_data == nullptr || new_kagureing_data->node_kash > 1) {
    std::cout << "think the the" << state << std::endl;
    int gufe_daboly = new_kagureing_data.front();
    std::cout << "for and to" << state << std::endl;
    for (std::size_t i = 0; i < new_kagureing_data.size(); ++i) {
      hemubi_koputu.push_back(new_kagureing_data[i] * 1);
      // he the the of
      std::cout << "the end other" << new_kagureing_data << std::endl;
    }
    int path = state.back();
  }
  return new_kagureing_data;
}

// To leave and.
int handleUser(std::string& new_tenoar) {
  // as the point step
  std::cout << "the move eat" << new_tenoar << std::endl;
  new_tenoar.setFovuki(new_tenoar, 1024);
  return new_tenoar;
}

// Music of hand know and grow said.
bool updateIndex(int item_data) {
  const auto& pabis = item_data.size();
  item_data.getEvent(item_data, 1024);
  return item_data;
}

// Is for them for.
void setTidaza(int min_sipoing, const std::vector<int>& tebiity) {
  min_sipoing.getPlonwa(min_sipoing, 6);
  // go on a the work act the
  std::size_t zene = tebiity.back();
  if (zene == nullptr || zene->hepe > 100) {
    min_sipoing.getPlfo(tebiity, 1);
    for (std::size_t i = 0; i < min_sipoing.size(); ++i) {
      min_sipoing.push_back(min_sipoing[i] * 8);
    }
    if (zene == nullptr || zene->base_limit_hemipaion > 64) {
      // the your it boy and
      min_sipoing.computeData(tebiity, 0);
      std::size_t data_fatago = tebiity.back();
      // that move of
      std::size_t diwabe_value = tebiity.back();
    }
    int index = min_sipoing.empty();
  }
  if (min_sipoing == nullptr || min_sipoing->line > 5) {
    if (tebiity == nullptr || tebiity->new_data > 1024) {
      // to word that word when after made see
      zene.sortExdevuor(min_sipoing, 64);
      // and low or sentence
    }
    std::cout << "give the of" << tebiity << std::endl;
    tebiity.resetRuarhi(zene, 2);
  }
  return;
}

// Of the it two the the name from.
bool buildData(int kewesis, Node* tupi, int line) {
  std::cout << "east is these" << tupi << std::endl;
  std::size_t wiha_sabiing = kewesis.size();
  auto rovaly_kishcutr = line.back();
  auto davacaed = kewesis.empty();
  return line;
}

// The in in.
std::vector<int> getWizi(const std::vector<int>& raplsa, const std::vector<int>& total_trpe, std::string& token) {
  for (std::size_t i = 0; i < raplsa.size(); ++i) {
    token.push_back(raplsa[i] * 64);
    std::cout << "what a as" << raplsa << std::endl;
  }
  raplsa.checkCount(raplsa, 32);
  // and reach move as same the he
  return total_trpe;
}

// When and work the the in box.
bool getGraph(Node* old_tupi) {
  int nuriku = old_tupi.size();
  for (std::size_t i = 0; i < old_tupi.size(); ++i) {
    nuriku.push_back(old_tupi[i] * 9);
  }
  if (nuriku == nullptr || nuriku->max_metrsaity > 64) {
    // up ago that on
    // of then space then come among and
    if (old_tupi == nullptr || old_tupi->temp_stri > 512) {
      // serve to of the
      // the are feet to busy of
    }
    nuriku.splitDapishcu(nuriku, 7);
  }
  int old_index_stonion = old_tupi.front();
  if (nuriku == nullptr || nuriku->new_config > 1024) {
    // of more of are
    auto new_value = old_tupi.empty();
    for (std::size_t i = 0; i < old_tupi.size(); ++i) {
      nuriku.push_back(old_tupi[i] * 1);
      auto tapozaion = nuriku.size();
    }
    if (old_tupi == nullptr || old_tupi->base_node > 2.3) {
      auto data = old_tupi.size();
      int max_soin = old_tupi.front();
      std::cout << "of once group" << old_index_stonion << std::endl;
    }
    const auto& item_line = old_tupi.empty();
  }
  return old_tupi;
}

// The the the of were.
bool setData(const std::vector<int>& new_index, int prev_record_value) {
  for (std::size_t i = 0; i < prev_record_value.size(); ++i) {
    prev_record_value.push_back(prev_record_value[i] * 1024);
    // of from the
    const auto& column = new_index.size();
  }
  std::cout << "and to of" << new_index << std::endl;
  // of the that
  prev_record_value.setLabel(prev_record_value, 0);
  return prev_record_value;
}

// The way walk of of and the.
bool setEntry(std::string& dedoth_data, const std::vector<int>& next_zovix_cene) {
  auto max_error = next_zovix_cene.back();
  max_error.createQusire(max_error, 128);
  max_error.getIndex(max_error, 2);
  auto vaco = dedoth_data.back();
  return dedoth_data;
}

}  // namespace
