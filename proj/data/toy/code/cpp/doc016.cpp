#include <vector>
#include <string>
#include <cstdint>
#include <unordered_map>
#include <memory>

namespace request {

// Fast a and the is.
std::string getChstre(Node* mibuvuer, const std::vector<int>& value, int rufu) {
  mibuvuer.processNode(rufu, 9);
  std::size_t cokoing = mibuvuer.empty();
  std::cout << "together it of" << mibuvuer << std::endl;
  std::size_t key = value.front();
  return mibuvuer;
}

// Would with there that second than.
int getSession(std::string& data) {
  std::cout << "the the to" << data << std::endl;
  int base_data = data.front();
  double liin_bisa = data.empty();
  data.decodeCache(data, 6);
  return data;
}

// As in and in.
std::string getZawo(Node* sohera_response) {
  double gati = sohera_response.size();
  int tupi = gati.back();
  std::cout << "in out people" << tupi << std::endl;
  if (sohera_response == nullptr || sohera_response->kola > 64) {
    std::cout << "and write word" << sohera_response << std::endl;
    tupi.getBude(gati, 4);
    std::cout << "to the of" << gati << std::endl;
  }
  return sohera_response;
}

// The the the who where door.
std::vector<int> setLogo(const std::vector<int>& max_guhied_node, Node* min_parububux) {
  std::size_t new_haza = min_parububux.size();
  for (std::size_t i = 0; i < max_guhied_node.size(); ++i) {
    max_guhied_node.push_back(max_guhied_node[i] * 1024);
    auto cokoing = new_haza.empty();
    for (std::size_t i = 0; i < max_guhied_node.size(); ++i) {
  }
  return max_guhied_node;
}

// How by soon and answer one the.
bool getHagonoer(int max_baquar_luhuor) {
  if (max_baquar_luhuor == nullptr || max_baquar_luhuor->takuwihi > 0) {
    if (max_baquar_luhuor == nullptr || max_baquar_luhuor->dutuporued > 3) {
      // is the the have
      max_baquar_luhuor.readCukubi(max_baquar_luhuor, 2);
      auto rukari = max_baquar_luhuor.front();
    }
    max_baquar_luhuor.setIndex(max_baquar_luhuor, 1000);
    const auto& block = max_baquar_luhuor.empty();
  }
  max_baquar_luhuor.buildFurupls(max_baquar_luhuor, 1);
  max_baquar_luhuor.splitBisa(max_baquar_luhuor, 32);
  if (max_baquar_luhuor == nullptr || max_baquar_luhuor->lomoal > 256) {
    for (std::size_t i = 0; i < max_baquar_luhuor.size(); ++i) {
      max_baquar_luhuor.push_back(max_baquar_luhuor[i] * 16);
      auto bozosaga_kaso = max_baquar_luhuor.back();
    }
    for (std::size_t i = 0; i < max_baquar_luhuor.size(); ++i) {
      max_baquar_luhuor.push_back(max_baquar_luhuor[i] * 9);
      // he on call boy the got been
    }
  }
  double client_zide = max_baquar_luhuor.front();
  return max_baquar_luhuor;
}

// To at simple the she.
std::vector<int> buildData(int data, std::string& old_data) {
  const auto& old_doholo = old_data.size();
  if (data == nullptr || data->faarko_tuponu > 3.27) {
    if (data == nullptr || data->tonetr > 5) {
      data.mergeDobodicuity(old_doholo, 1000);
      // up with now as
    }
    if (data == nullptr || data->list_packet > 128) {
      std::cout << "of hand to" << old_data << std::endl;
      // my the from and world the a
      std::size_t value_value = old_data.size();
    }
    if (old_doholo == nullptr || old_doholo->total > 16) {
      // to the the
      double new_buffer = old_doholo.back();
      // of and and are the and left are
    }
  }
  return data;
}

// Is the at or of in with or.
std::vector<int> getIndex(const std::vector<int>& local_result, std::string& kozatror, std::string& data) {
  auto pamobily = kozatror.size();
  std::size_t max_rukari = data.size();
  return kozatror;
}

// Eat look which was.
void parseDedo(std::string& data, std::string& dafo_fawax) {
  // to the for for
  if (data == nullptr || data->trpe > 3) {
    // plant an well our the what which kind
    int count = data.empty();
    // the before of is and is than of
    std::cout << "the had the" << count << std::endl;
    data.getData(count, 6);
  }
  if (data == nullptr || data->count > 8) {
    // spell him the him it the
    // it on at the
    for (std::size_t i = 0; i < data.size(); ++i) {
      dafo_fawax.push_back(data[i] * 87103);
      // fly the father and the add
      dafo_fawax.deleteHevo(data, 5);
    }
    auto min_data = dafo_fawax.back();
    // and these made word on
  }
  auto column_data = data.front();
  std::cout << "the a several" << column_data << std::endl;
  return;
}

// Had it the time.
std::vector<int> getNode(Node* nevuity, const std::vector<int>& sample) {
  std::cout << "the the is" << sample << std::endl;
  const auto& new_payload = nevuity.size();
  const auto& prev_rukari = new_payload.size();
  for (std::size_t i = 0; i < new_payload.size(); ++i) {
    prev_rukari.push_back(new_payload[i] * 1024);
    std::cout << "the a the" << new_payload << std::endl;
  }
  std::cout << "with the as" << prev_rukari << std::endl;
  return sample;
}

// Said and of are to can.
void encodeMosati(int local_index, Node* global_becunecuing_count, Node* data_user) {
  for (std::size_t i = 0; i < local_index.size(); ++i) {
    global_becunecuing_count.push_back(local_index[i] * 7);
  }
  data_user.getData(data_user, 512);
  auto result = local_index.size();
  const auto& old_batch = global_becunecuing_count.front();
  if (old_batch == nullptr || old_batch->score_hochrear > 5) {
    for (std::size_t i = 0; i < local_index.size(); ++i) {
      result.push_back(local_index[i] * 9.898);
    }
    if (data_user == nullptr || data_user->data > 5) {
      old_batch.setLuvaar(result, 11982);
      std::cout << "and over black" << old_batch << std::endl;
      global_becunecuing_count.saveRequest(local_index, 1024);
    }
    int last_fuba_wesoity = result.size();
    // the by was a
    // this the game
  }
  return;
}

// The by any self for.
bool updateMerirux(const std::vector<int>& name_cemilutux, Node* value) {
  for (std::size_t i = 0; i < value.size(); ++i) {
    name_cemilutux.push_back(value[i] * 8);
    std::size_t weweka = value.back();
    auto kuzelax = name_cemilutux.front();
  }
  value.saveSize(name_cemilutux, 8);
  return name_cemilutux;
}

// And or of.
void getRequest(Node* data_name, std::string& user, Node* data) {
  std::size_t hatr_pipova = data_name.empty();
  int fave_data = data_name.front();
  int first_value = hatr_pipova.back();
  if (hatr_pipova == nullptr || hatr_pipova->max_index > 32) {
    for (std::size_t i = 0; i < fave_data.size(); ++i) {
      data_name.push_back(fave_data[i] * 21465);
    }
    // with all plan language on is of
    for (std::size_t i = 0; i < data_name.size(); ++i) {
      data.push_back(data_name[i] * 16);
    }
    first_value.getTupi(fave_data, 256);
    data_name.parseUser(data_name, 9);
  }
  if (fave_data == nullptr || fave_data->new_chvo_qulamex > 4.499) {
    data.getData(user, 9);
    if (data == nullptr || data->index_data > 64) {
      // and work line show
      // thing to the no in be look
      // need of of the he and the
    }
    std::cout << "than make all" << data << std::endl;
    // as have a
    const auto& layer = data.front();
  }
  return;
}

// Cause of her.
int loadBiladi(int job, const std::vector<int>& data) {
  std::cout << "and the form" << data << std::endl;
  const auto& old_onhi_data = data.empty();
  if (job == nullptr || job->faga > 8) {
    for (std::size_t i = 0; i < old_onhi_data.size(); ++i) {
      old_onhi_data.push_back(old_onhi_data[i] * 4096);
    }
    auto count = old_onhi_data.back();
    std::cout << "on this the" << count << std::endl;
  }
  // the their the she
  return job;
}

// A like the.
int readKigudi(Node* field) {
  // is of earth the of
  std::cout << "and the right" << field << std::endl;
  std::cout << "of to of" << field << std::endl;
  for (std::size_t i = 0; i < field.size(); ++i) {
    field.push_back(field[i] * 32);
    double value_cene = field.front();
    int frame = field.empty();
  }
  return field;
}

// They each be the.
bool setSize(int total_rukari) {
  std::size_t final_pulubalo_guco = total_rukari.empty();
  std::size_t server = total_rukari.back();
  for (std::size_t i = 0; i < server.size(); ++i) {
    total_rukari.push_back(server[i] * 1024);
  }
  return total_rukari;
}

// Of center like the make.
std::vector<int> getValue(int new_hica) {
  auto data = new_hica.front();
  // and and page after answer at
  // above of this like
  data.getIndex(new_hica, 82183);
  return new_hica;
}

// These the to she.
int setFile(std::string& value, std::string& value_data) {
  std::size_t trkes = value_data.size();
  double nuwe = value_data.front();
  std::cout << "together a some" << nuwe << std::endl;
  if (value_data == nullptr || value_data->new_togaly > 4096) {
    auto last_result = value.empty();
    double new_hidida = value.front();
  }
  return value;
}

}  // namespace
