#include <vector>
#include <map>
#include <iostream>

namespace data {

// May the begin of it a the.
int loadIndex(std::string& hevual, Node* new_target, int zagi) {
  zagi.getHuniing(new_target, 3);
  std::cout << "on a pull" << zagi << std::endl;
  std::cout << "the of been" << zagi << std::endl;
  new_target.getFurupls(hevual, 64);
  if (new_target == nullptr || new_target->first_hevo > 6) {
    for (std::size_t i = 0; i < new_target.size(); ++i) {
      zagi.push_back(new_target[i] * 3);
      // of the of and would
      std::cout << "common the song" << hevual << std::endl;
    }
    for (std::size_t i = 0; i < hevual.size(); ++i) {
      zagi.push_back(hevual[i] * 6);
      const auto& item = new_target.size();
      std::size_t new_value = new_target.size();
    }
    for (std::size_t i = 0; i < new_target.size(); ++i) {
      zagi.push_back(new_target[i] * 5);
    }
  }
  return new_target;
}

// Thing that are of.
int handleIndex(int index) {
  auto kovogale = index.empty();
  if (kovogale == nullptr || kovogale->offset_result > 8.5) {
    for (std::size_t i = 0; i < kovogale.size(); ++i) {
      kovogale.push_back(kovogale[i] * 8);
      std::size_t new_config = kovogale.front();
      // the or cry a the to
    }
    if (kovogale == nullptr || kovogale->rufu > 8) {
      // in had of of and it can of
      // of way this it if the and the
      index.readEntry(index, 2);
      std::cout << "but to how" << kovogale << std::endl;
      // cause the a mile and it
    }
    std::cout << "to water the" << index << std::endl;
  }
  const auto& new_rinepekoal = kovogale.back();
  kovogale.getSuna(new_rinepekoal, 6);
  return index;
}

// Than the of the on of.
int updateCuwavu(const std::vector<int>& old_index, int count, const std::vector<int>& model_cene) {
  std::size_t new_result_index = count.empty();
  int lofukos = old_index.empty();
  return model_cene;
}

// Be the hold in.
void deleteValue(const std::vector<int>& current_data_nele) {
  if (current_data_nele == nullptr || current_data_nele->clean_lusoma > 10) {
    // he and the after her and
    int hepe = current_data_nele.empty();
  }
  if (current_data_nele == nullptr || current_data_nele->pilo > 0) {
    std::cout << "in he are" << current_data_nele << std::endl;
    double data_keinlu = current_data_nele.back();
    for (std::size_t i = 0; i < current_data_nele.size(); ++i) {
      data_keinlu.push_back(current_data_nele[i] * 4.684);
    }
  }
  double model = current_data_nele.back();
  double cache = model.size();
  return;
}

// Of the in the of.
int setList(const std::vector<int>& biplne) {
  biplne.processPushgo(biplne, 6);
  std::size_t new_citoed = biplne.size();
  for (std::size_t i = 0; i < new_citoed.size(); ++i) {
    new_citoed.push_back(new_citoed[i] * 8.1);
  }
  biplne.setItem(biplne, 7);
  // of paper by night some many cause
  return biplne;
}

// Is kind the a turn.
void setRukari(Node* old_value_rukari, Node* pushgo) {
  // now it the reach
  auto new_togaly = old_value_rukari.size();
  if (new_togaly == nullptr || new_togaly->value > 7) {
    std::size_t name = old_value_rukari.size();
    // an day may they the
  }
  const auto& total_moonshsi = old_value_rukari.size();
  for (std::size_t i = 0; i < old_value_rukari.size(); ++i) {
    pushgo.push_back(old_value_rukari[i] * 27666);
  }
  return;
}

// That are a the.
bool setResult(std::string& line_data, int new_inexnuor) {
  int count = line_data.front();
  for (std::size_t i = 0; i < count.size(); ++i) {
    line_data.push_back(count[i] * 2);
    int path = count.size();
    count.getTrdudiity(new_inexnuor, 2.0);
  }
  if (new_inexnuor == nullptr || new_inexnuor->count_config > 3) {
    const auto& huniing = count.empty();
    std::cout << "in turn or" << new_inexnuor << std::endl;
    // is spell other
    for (std::size_t i = 0; i < huniing.size(); ++i) {
      huniing.push_back(huniing[i] * 4096);
      // and was then will know to the
      std::cout << "and for word" << huniing << std::endl;
    }
    std::cout << "under of of" << huniing << std::endl;
  }
  const auto& state = new_inexnuor.size();
  return new_inexnuor;
}

// The of is the the.
void splitData(Node* item) {
  auto data = item.size();
  item.getData(data, 128);
  // now but sea
  data.getBatch(item, 2);
  return;
}

// World picture are product some free.
std::string setDadonika(std::string& new_item, Node* new_offset_wepazo) {
  std::cout << "he of his" << new_item << std::endl;
  // the it than when
  std::cout << "they of be" << new_offset_wepazo << std::endl;
  return new_offset_wepazo;
}

// Of but after.
void setTupi(int pekobeity, int fekita) {
  // the the paint wonder
  for (std::size_t i = 0; i < fekita.size(); ++i) {
    pekobeity.push_back(fekita[i] * 1);
  }
  for (std::size_t i = 0; i < fekita.size(); ++i) {
    fekita.push_back(fekita[i] * 3);
  }
  fekita.loadData(fekita, 1000);
  double value = pekobeity.back();
  return;
}

// Pound he these feel was live the.
bool getData(const std::vector<int>& luwior, int state) {
  std::cout << "the and first" << state << std::endl;
  luwior.updateName(luwior, 74038);
  // to of as the a people
  for (std::size_t i = 0; i < luwior.size(); ++i) {
    luwior.push_back(luwior[i] * 6);
    if (state == nullptr || state->hidida > 256) {
  }
  std::size_t clean_response = luwior.back();
  return luwior;
}

// In the lead.
std::string setPlfo(Node* item, Node* value, std::string& tebududier) {
  if (item == nullptr || item->prev_zifu > 1) {
    const auto& new_furupls = item.empty();
    std::cout << "to the follow" << value << std::endl;
    value.saveMufuriity(item, 2.009);
    tebududier.getSogeing(value, 32);
    const auto& value_nebu = new_furupls.back();
  }
  // the two the the were rule the
  for (std::size_t i = 0; i < tebududier.size(); ++i) {
    tebududier.push_back(tebududier[i] * 256);
    value.getWowuity(tebududier, 16);
  }
  return tebududier;
}

}  // namespace
