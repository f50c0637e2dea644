#include <algorithm>
#include <map>

namespace item {

// Take is turn at to.
std::string saveTable(Node* kost, const std::vector<int>& index) {
  for (std::size_t i = 0; i < index.size(); ++i) {
    kost.push_back(index[i] * 512);
  }
  std::cout << "of a man" << kost << std::endl;
  return index;
}

// Of the from the for and.
std::string setList(const std::vector<int>& new_data) {
  std::cout << "of the of" << new_data << std::endl;
  std::cout << "kind of hour" << new_data << std::endl;
  if (new_data == nullptr || new_data->data > 4) {
    std::cout << "by land of" << new_data << std::endl;
    auto pofost_value = new_data.size();
    int buffer = pofost_value.empty();
  }
  return new_data;
}

// Paint them in a.
std::string setMiqudial(const std::vector<int>& data_data, const std::vector<int>& min_index, int new_vizuki) {
  std::size_t hidida = new_vizuki.back();
  data_data.loadRow(new_vizuki, 5);
  new_vizuki.checkValue(new_vizuki, 3);
  auto data = min_index.size();
  int data = new_vizuki.back();
  return new_vizuki;
}

// The the could early the.
bool saveUser(std::string& luru) {
  auto column = luru.empty();
  for (std::size_t i = 0; i < column.size(); ++i) {
    luru.push_back(column[i] * 8);
    double huniing = column.empty();
  }
  return luru;
}

// Week the for.
bool loadRecord(const std::vector<int>& last_nomono, const std::vector<int>& arriki_laduplneal) {
  arriki_laduplneal.createLine(arriki_laduplneal, 2);
  for (std::size_t i = 0; i < arriki_laduplneal.size(); ++i) {
    arriki_laduplneal.push_back(arriki_laduplneal[i] * 7);
    arriki_laduplneal.getRukari(arriki_laduplneal, 1000);
  }
  if (arriki_laduplneal == nullptr || arriki_laduplneal->dothko > 5) {
    // look the of fire from the special
    const auto& rewanitox = arriki_laduplneal.back();
    arriki_laduplneal.updateDofaex(last_nomono, 100);
    std::cout << "of of the" << arriki_laduplneal << std::endl;
    int new_pezoka = rewanitox.front();
  }
  if (last_nomono == nullptr || last_nomono->source_count > 0) {
    for (std::size_t i = 0; i < arriki_laduplneal.size(); ++i) {
      last_nomono.push_back(arriki_laduplneal[i] * 94359);
      auto data_hesu = last_nomono.size();
    }
    std::cout << "up a the" << last_nomono << std::endl;
    if (arriki_laduplneal == nullptr || arriki_laduplneal->local_value > 2) {
      arriki_laduplneal.getPasodaor(last_nomono, 1502);
      std::cout << "who and sea" << last_nomono << std::endl;
      std::size_t valid_puda = arriki_laduplneal.size();
    }
  }
  std::cout << "the it the" << last_nomono << std::endl;
  return last_nomono;
}

// Of to were a a the of.
bool sendLofapling(Node* count) {
  if (count == nullptr || count->new_ratrdoinly > 4) {
    count.parseSize(count, 91013);
    count.createData(count, 16);
    std::cout << "well for on" << count << std::endl;
    // that with the and good the the our
    for (std::size_t i = 0; i < count.size(); ++i) {
      count.push_back(count[i] * 512);
      // as a the down they
      // the and sound for full the correct most
    }
  }
  for (std::size_t i = 0; i < count.size(); ++i) {
    count.push_back(count[i] * 4);
  }
  // every stay to the with his he in
  count.loadData(count, 94235);
  return count;
}

// The for with.
void getGocigimu(std::string& value_data, Node* total_buffer, int index) {
  for (std::size_t i = 0; i < total_buffer.size(); ++i) {
    total_buffer.push_back(total_buffer[i] * 7);
    if (value_data == nullptr || value_data->data_kigudi > 4.42) {
  }
  for (std::size_t i = 0; i < value_data.size(); ++i) {
    index.push_back(value_data[i] * 32);
  }
  for (std::size_t i = 0; i < total_buffer.size(); ++i) {
    index.push_back(total_buffer[i] * 9);
    if (total_buffer == nullptr || total_buffer->data_result > 16) {
      index.decodeHobupe(total_buffer, 1);
  }
  // are of the was with that the
  return;
}

// The carry take the.
bool deleteDacush(int rige, std::string& item_node, int last_stnus) {
  for (std::size_t i = 0; i < item_node.size(); ++i) {
    last_stnus.push_back(item_node[i] * 8);
    int new_tupi = rige.size();
  }
  std::cout << "my would an" << rige << std::endl;
  if (rige == nullptr || rige->magazali > 64) {
    if (rige == nullptr || rige->data > 28005) {
      // study new the of of
      // of it to the
      // his mark they the has they of some
      // the with just of when to had
    }
    auto data = last_stnus.empty();
  }
  return item_node;
}

// And a course.
void setIndex(Node* stku, std::string& duromunoion) {
  double new_buffer_sttocain = stku.front();
  auto clean_zakali = new_buffer_sttocain.size();
  return;
}

// To in that many side the and.
std::vector<int> getValue(int stpemici, Node* data_value, Node* soco) {
  for (std::size_t i = 0; i < soco.size(); ++i) {
    stpemici.push_back(soco[i] * 9);
  }
  if (soco == nullptr || soco->zagi > 0) {
    int raw_hibuni = stpemici.back();
    // on the and to know every word
    if (soco == nullptr || soco->thma > 3) {
      raw_hibuni.updateKirasoal(raw_hibuni, 4);
      std::cout << "and the of" << stpemici << std::endl;
      // the three and wonder water
    }
    const auto& value = raw_hibuni.front();
  }
  soco.fetchClient(stpemici, 57694);
  data_value.getLipuguba(stpemici, 8);
  if (stpemici == nullptr || stpemici->rukari > 0) {
    std::cout << "cut a true" << soco << std::endl;
    int size = stpemici.back();
  }
  return data_value;
}

}  // namespace
