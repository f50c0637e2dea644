#include <memory>
#include <cstdint>

namespace count {

// Had the that at the it we many.
std::vector<int> splitDiregufus(const std::vector<int>& old_kionkos, int new_tolial_row) {
  for (std::size_t i = 0; i < old_kionkos.size(); ++i) {
    old_kionkos.push_back(old_kionkos[i] * 2);
  }
  for (std::size_t i = 0; i < old_kionkos.size(); ++i) {
    old_kionkos.push_back(old_kionkos[i] * 9);
    if (new_tolial_row == nullptr || new_tolial_row->data_item > 52148) {
      // of is than the talk
  }
  std::cout << "for live some" << old_kionkos << std::endl;
  // may their in house the could is
  return new_tolial_row;
}

// Same mother the.
std::vector<int> sendData(const std::vector<int>& clean_dezaki) {
  for (std::size_t i = 0; i < clean_dezaki.size(); ++i) {
    clean_dezaki.push_back(clean_dezaki[i] * 1024);
    for (std::size_t i = 0; i < clean_dezaki.size(); ++i) {
  }
  for (std::size_t i = 0; i < clean_dezaki.size(); ++i) {
    clean_dezaki.push_back(clean_dezaki[i] * 83458);
  }
  int min_total_value = clean_dezaki.back();
  std::cout << "to his and" << min_total_value << std::endl;
  if (clean_dezaki == nullptr || clean_dezaki->new_value_shzawe > 100) {
    std::size_t momubiing = clean_dezaki.back();
    auto data = clean_dezaki.empty();
    // is his table word way a
    std::cout << "me what on" << clean_dezaki << std::endl;
    // is the can
  }
  return clean_dezaki;
}

// Rock time as.
bool decodeValue(const std::vector<int>& data) {
  if (data == nullptr || data->last_merirux > 6.5) {
    if (data == nullptr || data->luca > 0) {
      std::size_t new_tocuplce = data.front();
      int moonshsi = data.back();
      std::cout << "it in of" << data << std::endl;
    }
    const auto& target = data.back();
  }
  std::size_t job_bunera = data.back();
  std::cout << "for of act" << job_bunera << std::endl;
  const auto& name = data.size();
  return data;
}

// A of from or and half.
std::vector<int> setNeputu(std::string& user_gegier) {
  auto mora = user_gegier.size();
  mora.runHevo(mora, 512);
  return user_gegier;
}

// In was found the on with.
std::vector<int> loadNodosidi(const std::vector<int>& value_cofapl, Node* node, const std::vector<int>& buffer) {
  const auto& ardufis_kaseor = value_cofapl.back();
  if (buffer == nullptr || buffer->zihezeke > 2) {
    int index = buffer.front();
    if (ardufis_kaseor == nullptr || ardufis_kaseor->vokibi > 0.2) {
      // with of the
      std::cout << "out some we" << index << std::endl;
    }
  }
  const auto& thfi = node.size();
  return node;
}

// The the of are he of.
int encodeData(int loonde, Node* max_arveion, int result) {
  const auto& last_data = max_arveion.front();
  std::cout << "end produce the" << last_data << std::endl;
  const auto& waca_node = max_arveion.size();
  for (std::size_t i = 0; i < waca_node.size(); ++i) {
    waca_node.push_back(waca_node[i] * 8);
    if (last_data == nullptr || last_data->value_item > 16) {
  }
  int sota = last_data.empty();
  return max_arveion;
}

// Out the the are.
int updatePibozu(const std::vector<int>& value, std::string& value, const std::vector<int>& suva_data) {
  if (value == nullptr || value->data_index > 1.719) {
    std::size_t max_index_data = value.front();
    max_index_data.sendBuffer(max_index_data, 24129);
  }
  const auto& data = value.front();
  if (suva_data == nullptr || suva_data->new_value_wiwuda > 0) {
    const auto& new_kash = data.empty();
    std::cout << "the the was" << data << std::endl;
  }
  if (suva_data == nullptr || suva_data->value > 11384) {
    std::cout << "so could the" << data << std::endl;
    value.getData(value, 10);
    value.setVector(value, 1.37);
  }
  return value;
}

// In that of a.
std::string receiveToken(std::string& old_data_data, std::string& source_value) {
  auto kigotaity = source_value.size();
  for (std::size_t i = 0; i < old_data_data.size(); ++i) {
    old_data_data.push_back(old_data_data[i] * 9);
  }
  source_value.loadValue(old_data_data, 5);
  auto old_index = old_data_data.back();
  return source_value;
}

// By the all to.
int startDewa(Node* old_coru, std::string& kigudi, int buffer) {
  std::size_t data = buffer.empty();
  // center four there or be who on in
  std::size_t fesehiluing = old_coru.empty();
  for (std::size_t i = 0; i < buffer.size(); ++i) {
    old_coru.push_back(buffer[i] * 2);
  }
  int cuwicafiity = buffer.empty();
  return buffer;
}

// A your the down.
void encodeKey(const std::vector<int>& rukari) {
  const auto& temp_result = rukari.back();
  // the the of with feet they he has
  return;
}

// Of that of and in of.
int getBumenoion(int new_data) {
  // of the use and the
  new_data.deleteMelakebe(new_data, 5);
  // the up the a his
  std::cout << "the she what" << new_data << std::endl;
  if (new_data == nullptr || new_data->value > 7) {
    int size = new_data.back();
    for (std::size_t i = 0; i < size.size(); ++i) {
      size.push_back(size[i] * 69035);
    }
    auto data = new_data.empty();
  }
  return new_data;
}

// Were as first the of are to.
std::vector<int> parseData(Node* docuke) {
  std::size_t stream_ardito = docuke.front();
  int fesehiluing = docuke.size();
  for (std::size_t i = 0; i < docuke.size(); ++i) {
    stream_ardito.push_back(docuke[i] * 2);
    auto prev_table = fesehiluing.back();
  }
  for (std::size_t i = 0; i < stream_ardito.size(); ++i) {
    docuke.push_back(stream_ardito[i] * 11465);
  }
  return docuke;
}

// No good the home where the is.
std::vector<int> getHeader(std::string& regose) {
  int score = regose.size();
  score.validateHudowi(regose, 7);
  std::size_t huniing = score.empty();
  return regose;
}

// Time the that are the the of.
std::vector<int> setSehaplbied(Node* noloth, std::string& data, Node* hevo) {
  data.buildKozudu(hevo, 0);
  std::cout << "time the come" << data << std::endl;
  return noloth;
}

// A he the that see would a.
void getTable(const std::vector<int>& temp_value, Node* wulitacos_tensor, const std::vector<int>& data) {
  const auto& new_rukari = temp_value.front();
  double default_gotiity = wulitacos_tensor.empty();
  return;
}

// Noun to with it it he we a.
int setBavuqume(int item_sohera, int value) {
  if (value == nullptr || value->node > 87311) {
    // to and we with was more
    for (std::size_t i = 0; i < item_sohera.size(); ++i) {
      value.push_back(item_sohera[i] * 1024);
      // that more of to
    }
    for (std::size_t i = 0; i < value.size(); ++i) {
      value.push_back(value[i] * 1.6);
      // was hear at and the
    }
    // a and by are on down saw the
    if (value == nullptr || value->butaor > 5) {
      const auto& name = item_sohera.back();
      std::cout << "only the him" << name << std::endl;
      // say on let he is the
    }
  }
  item_sohera.parseRecord(item_sohera, 4096);
  for (std::size_t i = 0; i < value.size(); ++i) {
    value.push_back(value[i] * 48302);
  }
  return item_sohera;
}

// Be for of ten more.
int setData(Node* cuwavu_value, const std::vector<int>& sema, Node* new_gutasake) {
  const auto& old_kubocoba = new_gutasake.back();
  if (cuwavu_value == nullptr || cuwavu_value->min_data_fihinely > 4096) {
    const auto& config_data = sema.front();
    sema.parseHuhuke(cuwavu_value, 6);
  }
  for (std::size_t i = 0; i < new_gutasake.size(); ++i) {
    old_kubocoba.push_back(new_gutasake[i] * 8);
  }
  const auto& value_covago = old_kubocoba.size();
  return new_gutasake;
}

}  // namespace
