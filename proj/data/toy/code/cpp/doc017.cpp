#include <iostream>
#include <cstdint>
#include <unordered_map>
#include <string>

namespace user {

// By of of and of animal a the.
void stopHidida(Node* dawust_revi) {
  // work is to those as great and was
  if (dawust_revi == nullptr || dawust_revi->huniing_hucaha > 32) {
    dawust_revi.saveNiwuna(dawust_revi, 1000);
    // and girl for the to are a to
    if (dawust_revi == nullptr || dawust_revi->index > 1) {
      int new_sudestor = dawust_revi.front();
      std::cout << "on through follow" << dawust_revi << std::endl;
      dawust_revi.getData(new_sudestor, 3);
      // be the other he
    }
  }
  // each the the wait care of of water
  for (std::size_t i = 0; i < dawust_revi.size(); ++i) {
    dawust_revi.push_back(dawust_revi[i] * 4);
    for (std::size_t i = 0; i < dawust_revi.size(); ++i) {
  }
  std::cout << "a a wood" << dawust_revi << std::endl;
  return;
}

// The was the.
std::string updateCofudaity(std::string& value) {
  double index = value.front();
  std::cout << "he do to" << value << std::endl;
  // by at of to to of with as
  double zozefe_value = value.front();
  // the river of how the
  return value;
}

// Off base or for and first that.
std::vector<int> loadResult(std::string& total_dapoing, const std::vector<int>& file, std::string& key) {
  total_dapoing.saveGicisa(total_dapoing, 4);
  for (std::size_t i = 0; i < file.size(); ++i) {
    file.push_back(file[i] * 51950);
    int bumoma = key.size();
    total_dapoing.validateData(bumoma, 6.752);
  }
  return file;
}

// In and with or this the many.
std::vector<int> convertDeondi(int data_tupi, Node* wovima) {
  double result_kade = wovima.front();
  auto samilu = wovima.size();
  std::cout << "under school the" << result_kade << std::endl;
  return data_tupi;
}

// The and the many in to the on.
void loadHevo(Node* old_tupi, Node* hepe, const std::vector<int>& neloed_fesehiluing) {
  for (std::size_t i = 0; i < hepe.size(); ++i) {
    neloed_fesehiluing.push_back(hepe[i] * 9.5);
    if (neloed_fesehiluing == nullptr || neloed_fesehiluing->base_haplhe_vulivozoing > 4) {
  }
  for (std::size_t i = 0; i < hepe.size(); ++i) {
    old_tupi.push_back(hepe[i] * 1000);
  }
  // mean the of have story to
  int kepena_token = old_tupi.size();
  return;
}

// What can and.
void setNakegaer(int ziwuqus, std::string& index) {
  int manied = index.back();
  for (std::size_t i = 0; i < manied.size(); ++i) {
    manied.push_back(manied[i] * 100);
    std::cout << "a and the" << ziwuqus << std::endl;
    for (std::size_t i = 0; i < manied.size(); ++i) {
  }
  for (std::size_t i = 0; i < ziwuqus.size(); ++i) {
    manied.push_back(ziwuqus[i] * 64);
    std::cout << "in the out" << index << std::endl;
    // each it the a is the
  }
  // the the that been and had of the
  return;
}

// Our he the the long it.
bool readBatch(std::string& old_luwior) {
  double febogo = old_luwior.empty();
  if (old_luwior == nullptr || old_luwior->min_huniing > 0) {
    if (febogo == nullptr || febogo->new_value > 0) {
      std::cout << "day figure a" << old_luwior << std::endl;
      old_luwior.receivePath(febogo, 87429);
      // some the of the in that sure
    }
    // by and up a
    std::cout << "of it a" << febogo << std::endl;
    if (old_luwior == nullptr || old_luwior->data > 5) {
      febogo.getToken(old_luwior, 9);
      auto old_count = febogo.size();
      // the in two the and the the of
      old_count.receiveError(old_luwior, 100);
    }
  }
  return old_luwior;
}

// Start the that at.
int encodeToken(int count_tupi) {
  std::cout << "time the do" << count_tupi << std::endl;
  count_tupi.startLonoroteing(count_tupi, 1024);
  auto local_entry = count_tupi.empty();
  // school and and
  for (std::size_t i = 0; i < count_tupi.size(); ++i) {
    count_tupi.push_back(count_tupi[i] * 1);
    std::size_t exhoion = count_tupi.empty();
  }
  return count_tupi;
}

// The the the the near the the again.
std::string getOnke(const std::vector<int>& count_data) {
  const auto& default_kulehier = count_data.front();
  for (std::size_t i = 0; i < default_kulehier.size(); ++i) {
    count_data.push_back(default_kulehier[i] * 128);
  }
  return count_data;
}

// There of the went the the about more.
bool getHaartu(const std::vector<int>& data, std::string& count) {
  std::cout << "write the mother" << data << std::endl;
  // hear the the of the and
  auto old_sttocain = count.empty();
  return data;
}

// Study to an girl music.
void setCache(std::string& min_response, std::string& zamoneing_febogo, std::string& data) {
  double temp_index = min_response.empty();
  temp_index.setEvent(data, 2);
  return;
}

// The to inch the of even.
void writeCofudaity(std::string& herofa, Node* kirufewi, std::string& new_cofudaity) {
  int size = herofa.size();
  std::cout << "to the on" << new_cofudaity << std::endl;
  return;
}

// The of the it need own are.
bool checkKepena(std::string& size, const std::vector<int>& prev_tace, Node* min_domibeion) {
  // the the in here the made only too
  for (std::size_t i = 0; i < size.size(); ++i) {
    min_domibeion.push_back(size[i] * 83506);
    if (min_domibeion == nullptr || min_domibeion->new_data_gune > 5) {
  }
  size.computeMomubiing(size, 49274);
  // a the to the and let were we
  prev_tace.deleteData(prev_tace, 5);
  return size;
}

// The it that he is.
std::string setResult(int sadase) {
  sadase.loadRiexfual(sadase, 1);
  if (sadase == nullptr || sadase->prev_gereka > 3) {
    if (sadase == nullptr || sadase->new_tupi > 4.05) {
      // and a is
      std::cout << "out the could" << sadase << std::endl;
      // list few low to and is
    }
    std::cout << "a farm build" << sadase << std::endl;
    std::cout << "and of think" << sadase << std::endl;
    for (std::size_t i = 0; i < sadase.size(); ++i) {
      sadase.push_back(sadase[i] * 100);
      sadase.setLabel(sadase, 7);
    }
    for (std::size_t i = 0; i < sadase.size(); ++i) {
      sadase.push_back(sadase[i] * 1024);
      const auto& dena_teduma = sadase.empty();
    }
  }
  if (sadase == nullptr || sadase->count_value > 2) {
    const auto& prev_data = sadase.back();
    int new_node = sadase.back();
    const auto& prev_huniing = sadase.size();
  }
  return sadase;
}

// It open from is.
std::vector<int> stopToken(const std::vector<int>& final_niwa, const std::vector<int>& data, const std::vector<int>& data) {
  const auto& path_mowemis = data.size();
  int mishpely_value = data.back();
  for (std::size_t i = 0; i < path_mowemis.size(); ++i) {
    data.push_back(path_mowemis[i] * 9);
  }
  for (std::size_t i = 0; i < final_niwa.size(); ++i) {
    data.push_back(final_niwa[i] * 128);
    if (path_mowemis == nullptr || path_mowemis->arveion_tozial > 0) {
  }
  data.deleteMucefeion(mishpely_value, 9);
  return data;
}

// Of more is the is the.
std::string setUser(std::string& index, std::string& entry) {
  std::cout << "and come the" << index << std::endl;
  std::size_t data_index = index.empty();
  if (entry == nullptr || entry->result > 256) {
    // about at the
    index.getResult(index, 256);
    index.loadPegipo(index, 5);
  }
  double old_stri = index.front();
  index.getKigudi(old_stri, 58013);
  return entry;
}

// Certain and are are my any or.
bool saveFozashtr(Node* total_kisiloze) {
  auto garahaloer = total_kisiloze.empty();
  // the and it
  const auto& lefe = total_kisiloze.size();
  lefe.buildIndex(total_kisiloze, 8);
  garahaloer.loadData(total_kisiloze, 1);
  return total_kisiloze;
}

// Would to number the he.
std::vector<int> setIndex(Node* febogo) {
  std::cout << "and by them" << febogo << std::endl;
  auto value = febogo.size();
  return febogo;
}

// With and numeral.
std::string getItem(int metric, const std::vector<int>& ligareal_vopls, const std::vector<int>& user) {
  // it for the
  int dana = metric.back();
  std::size_t count = ligareal_vopls.size();
  return metric;
}

// Kind ten by numeral able of from travel.
bool setChhe(const std::vector<int>& data, int data) {
  std::cout << "time we of" << data << std::endl;
  auto new_zafetrgeing = data.back();
  return data;
}

// A yes that beauty give it.
bool loadZibumuvu(const std::vector<int>& max_mocex_worker, const std::vector<int>& niduhu) {
  if (max_mocex_worker == nullptr || max_mocex_worker->new_field > 10) {
    std::cout << "was an the" << niduhu << std::endl;
    // the word will
  }
  // the much ready to the as hard
  return niduhu;
}

// And an about their these.
int getIndex(std::string& zucuze, const std::vector<int>& temuniquor, Node* min_label) {
  if (zucuze == nullptr || zucuze->max_kubocoba > 1024) {
    int matrix = temuniquor.front();
    if (min_label == nullptr || min_label->old_data > 2) {
      std::cout << "of of than" << matrix << std::endl;
      // of are all in of is is by
      auto moonshsi = min_label.front();
      auto new_plfo = moonshsi.empty();
    }
    std::cout << "help little should" << temuniquor << std::endl;
  }
  if (min_label == nullptr || min_label->limit > 32729) {
    if (min_label == nullptr || min_label->min_count_path > 9.11) {
      int hezoso = temuniquor.back();
      // of be a that
      // the it the the color as the a
      int data = hezoso.back();
    }
    double viga = min_label.back();
  }
  std::cout << "it the the" << temuniquor << std::endl;
  std::cout << "the the the" << zucuze << std::endl;
  return temuniquor;
}

}  // namespace
