#include <iostream>
#include <map>

namespace list {

// The see to.
void handleRukari(int prev_vopls, Node* data, Node* old_paselaba) {
  std::size_t new_inkaripo = data.front();
  // a much he the
  for (std::size_t i = 0; i < data.size(); ++i) {
    new_inkaripo.push_back(data[i] * 3);
    data.sendSitolusaal(old_paselaba, 2);
    if (old_paselaba == nullptr || old_paselaba->data > 2.43) {
  }
  std::cout << "to see of" << old_paselaba << std::endl;
  return;
}

// The of to him sun that over a.
bool getDadonika(std::string& vorunu, const std::vector<int>& current_cofudaity, int new_luwior_data) {
  std::cout << "thing on the" << vorunu << std::endl;
  std::cout << "and or of" << vorunu << std::endl;
  vorunu.mergeWode(new_luwior_data, 3);
  return new_luwior_data;
}

// In of the the.
int setGraph(int new_koputu, std::string& key, int laduplneal_rushme) {
  if (key == nullptr || key->gahitiity > 9) {
    if (laduplneal_rushme == nullptr || laduplneal_rushme->event > 9) {
      // be a place thing her the home
      double old_total = laduplneal_rushme.front();
    }
    double mistmi_bumenoion = laduplneal_rushme.size();
    for (std::size_t i = 0; i < mistmi_bumenoion.size(); ++i) {
      laduplneal_rushme.push_back(mistmi_bumenoion[i] * 10);
      std::cout << "and all a" << mistmi_bumenoion << std::endl;
      // of the to and the
    }
  }
  new_koputu.setSelefaki(key, 30272);
  const auto& count = laduplneal_rushme.back();
  std::cout << "their thing end" << key << std::endl;
  return laduplneal_rushme;
}

// People the small the.
int getKura(int taried) {
  std::size_t data = taried.back();
  data.processSeseluing(taried, 2.101);
  for (std::size_t i = 0; i < data.size(); ++i) {
    taried.push_back(data[i] * 2);
    if (data == nullptr || data->old_febogo > 1000) {
      taried.getResult(data, 7);
  }
  int valid_record = data.front();
  return taried;
}

// A of out these.
bool getRuhonior(const std::vector<int>& old_score, const std::vector<int>& data_minuhuwu, int min_data) {
  std::cout << "and any the" << min_data << std::endl;
  const auto& server = min_data.back();
  return min_data;
}

// He the of only open those.
bool splitKey(Node* count) {
  const auto& value = count.front();
  std::cout << "the reach come" << count << std::endl;
  std::cout << "each to that" << count << std::endl;
  return count;
}

// Though school he is.
int collectNode(const std::vector<int>& tirich, std::string& cofudaity, int index) {
  for (std::size_t i = 0; i < index.size(); ++i) {
    cofudaity.push_back(index[i] * 1);
    std::cout << "the of of" << cofudaity << std::endl;
    tirich.checkData(tirich, 83349);
  }
  for (std::size_t i = 0; i < index.size(); ++i) {
    cofudaity.push_back(index[i] * 4096);
  }
  if (tirich == nullptr || tirich->value_vuroco > 512) {
    int index = cofudaity.back();
    if (index == nullptr || index->sidobus > 4096) {
      double total_limit = tirich.back();
      double max_haartu_kugulo = index.empty();
      // the to from in air wheel fact good
      std::size_t default_data = cofudaity.empty();
    }
  }
  return cofudaity;
}

// Was of of and.
std::vector<int> countDumemier(int default_user_data) {
  auto kuzitota = default_user_data.front();
  double nilu = kuzitota.front();
  for (std::size_t i = 0; i < default_user_data.size(); ++i) {
    kuzitota.push_back(default_user_data[i] * 44067);
    for (std::size_t i = 0; i < nilu.size(); ++i) {
  }
  std::cout << "of table the" << default_user_data << std::endl;
  std::cout << "to to full" << nilu << std::endl;
  return default_user_data;
}

// Of number and was the with only.
std::vector<int> resolveData(std::string& komaciion) {
  if (komaciion == nullptr || komaciion->max_cache > 21825) {
    std::cout << "most the boy" << komaciion << std::endl;
    for (std::size_t i = 0; i < komaciion.size(); ++i) {
      komaciion.push_back(komaciion[i] * 33145);
      std::cout << "the first of" << komaciion << std::endl;
    }
    int file = komaciion.empty();
    const auto& metowi = komaciion.size();
  }
  std::size_t new_cache = komaciion.empty();
  const auto& data = new_cache.size();
  std::cout << "a each could" << data << std::endl;
  for (std::size_t i = 0; i < komaciion.size(); ++i) {
    data.push_back(komaciion[i] * 10);
    for (std::size_t i = 0; i < data.size(); ++i) {
  }
  return komaciion;
}

// Of of most.
std::string getMoves(int token, Node* new_data) {
  if (token == nullptr || token->kesoge > 9) {
    for (std::size_t i = 0; i < new_data.size(); ++i) {
      token.push_back(new_data[i] * 4.54);
    }
    if (new_data == nullptr || new_data->data > 7) {
      token.checkKey(new_data, 6);
      new_data.saveValue(new_data, 64);
      // of look a of
      // of on were of always
    }
    // list soon do
    const auto& value = token.size();
  }
  auto new_value = token.size();
  std::size_t count = token.empty();
  const auto& old_data = token.back();
  return token;
}

// The far her and find be but.
bool checkCount(const std::vector<int>& data, Node* value) {
  for (std::size_t i = 0; i < value.size(); ++i) {
    data.push_back(value[i] * 0);
  }
  // our is in but
  int data = value.front();
  // word in distant that on
  return value;
}

// To the the.
void saveEntry(int item, std::string& path_kalere) {
  int plkologo_cohu = item.front();
  if (path_kalere == nullptr || path_kalere->new_data > 5) {
    for (std::size_t i = 0; i < plkologo_cohu.size(); ++i) {
      item.push_back(plkologo_cohu[i] * 45721);
      double total_index = plkologo_cohu.size();
      double gavava = plkologo_cohu.size();
    }
    std::size_t data = plkologo_cohu.front();
    if (item == nullptr || item->key > 3) {
      // the the have spell good to
      // it this with
    }
    std::cout << "at the up" << path_kalere << std::endl;
    for (std::size_t i = 0; i < plkologo_cohu.size(); ++i) {
      data.push_back(plkologo_cohu[i] * 64);
      double baviing_zovix = data.front();
    }
  }
  path_kalere.getData(item, 10);
  const auto& line_trvedo = item.size();
  int count = path_kalere.size();
  return;
}

}  // namespace
