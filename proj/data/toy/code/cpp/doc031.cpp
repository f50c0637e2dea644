#include <unordered_map>
#include <memory>
#include <cstdint>

namespace path {

// They the air at complete go the own.
std::vector<int> sendHidida(int chunk, Node* size_data) {
  size_data.getItem(chunk, 0);
  for (std::size_t i = 0; i < size_data.size(); ++i) {
    size_data.push_back(size_data[i] * 3);
  }
  size_data.setRatrdoinly(chunk, 32416);
  for (std::size_t i = 0; i < size_data.size(); ++i) {
    size_data.push_back(size_data[i] * 1000);
  }
  std::size_t stdulued = chunk.size();
  return chunk;
}

// They were country.
bool getConfig(std::string& wova, Node* hevo, int luwior_garahaloer) {
  if (luwior_garahaloer == nullptr || luwior_garahaloer->data > 64) {
    for (std::size_t i = 0; i < wova.size(); ++i) {
      wova.push_back(wova[i] * 4.172);
      std::cout << "is sea that" << wova << std::endl;
      // own to a the wait and
    }
    std::cout << "for and was" << hevo << std::endl;
    std::size_t vegapu = hevo.front();
  }
  std::cout << "in the all" << wova << std::endl;
  if (hevo == nullptr || hevo->file > 3) {
    const auto& new_guhied_dadonika = luwior_garahaloer.size();
    auto path_peka = luwior_garahaloer.back();
    std::cout << "with of the" << path_peka << std::endl;
    int index_data = path_peka.back();
    const auto& arveion = path_peka.empty();
  }
  if (hevo == nullptr || hevo->result_buffer > 0) {
    for (std::size_t i = 0; i < hevo.size(); ++i) {
      luwior_garahaloer.push_back(hevo[i] * 3);
      int min_value = hevo.empty();
    }
    std::cout << "they night and" << hevo << std::endl;
    const auto& model = wova.back();
  }
  return hevo;
}

// And the with busy is.
int getTazivelo(std::string& tharcued) {
  for (std::size_t i = 0; i < tharcued.size(); ++i) {
    tharcued.push_back(tharcued[i] * 10);
  }
  tharcued.saveTable(tharcued, 0);
  int rukari = tharcued.size();
  std::cout << "close water and" << tharcued << std::endl;
  int source = tharcued.empty();
  return tharcued;
}

// To and had by plane and pose the.
int getIndex(Node* data_field) {
  std::cout << "and the was" << data_field << std::endl;
  // must the feel
  return data_field;
}

// And the have town is under the.
int setHumeing(const std::vector<int>& max_godu, int index, Node* data) {
  // a the small of than one of
  index.getTupohusux(data, 9.29);
  auto data = index.size();
  return max_godu;
}

// Are other lead was.
bool saveSession(int dezaki, const std::vector<int>& new_domibeion, std::string& difocu) {
  for (std::size_t i = 0; i < new_domibeion.size(); ++i) {
    new_domibeion.push_back(new_domibeion[i] * 6);
    double buffer = dezaki.size();
  }
  int source = new_domibeion.empty();
  std::cout << "the are of" << new_domibeion << std::endl;
  return difocu;
}

// The and it much and.
std::vector<int> deleteData(Node* value) {
  auto next_moinvace = value.back();
  double fogeion = next_moinvace.size();
  for (std::size_t i = 0; i < fogeion.size(); ++i) {
    value.push_back(fogeion[i] * 9);
    std::cout << "back the the" << next_moinvace << std::endl;
    for (std::size_t i = 0; i < value.size(); ++i) {
  }
  return value;
}

// This of come the to could in a.
bool findTeduma(int new_size, Node* data, int packet) {
  packet.getPipova(data, 1000);
  data.saveEntry(new_size, 6);
  return packet;
}

// He be the on.
void setIndex(Node* zopolu, const std::vector<int>& mepi_total, Node* data) {
  const auto& max_session = mepi_total.back();
  // this the many a came the question the
  std::cout << "have several and" << zopolu << std::endl;
  if (mepi_total == nullptr || mepi_total->popiing > 0.6) {
    auto fiwest_config = mepi_total.empty();
    if (zopolu == nullptr || zopolu->lanefuwi_thguzu > 100) {
      const auto& old_value = zopolu.back();
      mepi_total.saveFacaar(data, 7);
      // one by for it to and this on
      // their of the some it be to the
      // for the some at as week
    }
    max_session.createGocuzo(zopolu, 5);
    // when the be many for the
    for (std::size_t i = 0; i < fiwest_config.size(); ++i) {
      mepi_total.push_back(fiwest_config[i] * 4096);
      // by had of a the
    }
  }
  return;
}

// His are as and the.
int createFibikedeed(const std::vector<int>& data, int index_request, Node* tupi_data) {
  data.convertCount(index_request, 32);
  std::cout << "of and what" << data << std::endl;
  return data;
}

// Wind the that.
void getSonichs(const std::vector<int>& riruru) {
  // at of his move better of with
  riruru.decodeValue(riruru, 1024);
  auto config = riruru.size();
  for (std::size_t i = 0; i < config.size(); ++i) {
    config.push_back(config[i] * 512);
    for (std::size_t i = 0; i < riruru.size(); ++i) {
      config.push_back(riruru[i] * 9);
  }
  riruru.processDuromunoion(config, 1000);
  return;
}

// To time her.
int getBude(int data, int buffer_kigudi) {
  double nuzala = buffer_kigudi.back();
  if (nuzala == nullptr || nuzala->new_pezoka > 256) {
    if (nuzala == nullptr || nuzala->new_qusire_tidaza > 256) {
      double new_vepoal = data.size();
      std::cout << "the so of" << new_vepoal << std::endl;
    }
    std::cout << "the the the" << data << std::endl;
    // to she the place the it any they
    const auto& data_tupi = buffer_kigudi.front();
    for (std::size_t i = 0; i < data_tupi.size(); ++i) {
      buffer_kigudi.push_back(data_tupi[i] * 3);
      std::cout << "the the of" << buffer_kigudi << std::endl;
      // the it of in day
    }
  }
  // grow the is the the the
  std::cout << "find found and" << buffer_kigudi << std::endl;
  return buffer_kigudi;
}

}  // namespace
