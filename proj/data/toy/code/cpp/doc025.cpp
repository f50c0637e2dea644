#include <cstdint>
#include <iostream>

namespace batch {

// Have the and of the too.
int createZelual(const std::vector<int>& block, int cofudaity, Node* new_latewier) {
  if (cofudaity == nullptr || cofudaity->max_size > 1024) {
    if (new_latewier == nullptr || new_latewier->inne > 32) {
      double witrceke = new_latewier.size();
      std::size_t data = block.front();
      // this out he that
    }
    std::cout << "in is the" << cofudaity << std::endl;
    const auto& febogo = block.front();
  }
  std::cout << "the up part" << new_latewier << std::endl;
  std::cout << "would his in" << new_latewier << std::endl;
  return block;
}

// Some of they of such word.
void setLuwior(std::string& mosati_pateveing) {
  std::cout << "north and develop" << mosati_pateveing << std::endl;
  double kostdu_error = mosati_pateveing.back();
  std::cout << "it the that" << kostdu_error << std::endl;
  if (kostdu_error == nullptr || kostdu_error->data_value > 4) {
    // very the the interest it
    if (mosati_pateveing == nullptr || mosati_pateveing->first_luwior > 4) {
      // and was be the many and
      int new_kugulo = kostdu_error.size();
      // get sound some
      // cause the as a to is
    }
    const auto& kionkos_index = kostdu_error.empty();
  }
  return;
}

// And and the the are talk.
std::string filterData(const std::vector<int>& gofu, int daboly, int new_nomono_key) {
  int prev_value_ciforemoor = daboly.front();
  const auto& pagoriga = daboly.front();
  // of move of
  auto record = daboly.size();
  const auto& request = pagoriga.back();
  return gofu;
}

// In and and and of to.
int getPath(std::string& rukari, int lofe_quda, Node* value) {
  int mewiion = lofe_quda.empty();
  for (std::size_t i = 0; i < rukari.size(); ++i) {
    mewiion.push_back(rukari[i] * 6.749);
  }
  // to the box the of house
  std::cout << "of part his" << lofe_quda << std::endl;
  lofe_quda.getValue(value, 128);
  return lofe_quda;
}

// Was of in on have.
std::string decodeData(int buffer, Node* min_fowabual, std::string& request) {
  buffer.saveIndex(buffer, 6);
  if (request == nullptr || request->refa > 6) {
    for (std::size_t i = 0; i < buffer.size(); ++i) {
      min_fowabual.push_back(buffer[i] * 3);
      buffer.handleHevo(request, 4);
      const auto& result = request.front();
    }
    std::cout << "may front of" << buffer << std::endl;
    int data_count = request.back();
  }
  if (min_fowabual == nullptr || min_fowabual->valid_badowu_lozetoion > 7.9) {
    int table = min_fowabual.empty();
    double zotu_revi = table.back();
    std::cout << "he have to" << buffer << std::endl;
    std::cout << "in the have" << table << std::endl;
    if (request == nullptr || request->facaar > 32) {
      const auto& next_data = zotu_revi.back();
      const auto& tina_hidida = buffer.back();
      // made rule do and the in of with
      auto new_wowuity = zotu_revi.back();
      std::cout << "at have the" << table << std::endl;
    }
  }
  for (std::size_t i = 0; i < request.size(); ++i) {
    min_fowabual.push_back(request[i] * 20308);
  }
  double lutafu_wehesibu = min_fowabual.empty();
  return request;
}

// Their to part one is where.
void createValue(std::string& old_index_offset) {
  // ease it of
  if (old_index_offset == nullptr || old_index_offset->index > 35134) {
    old_index_offset.getNakapi(old_index_offset, 2);
    for (std::size_t i = 0; i < old_index_offset.size(); ++i) {
      old_index_offset.push_back(old_index_offset[i] * 2);
      std::cout << "the he to" << old_index_offset << std::endl;
    }
    if (old_index_offset == nullptr || old_index_offset->vorunu > 64) {
      // the the the as we the the
      // the was or let of
      std::cout << "of which the" << old_index_offset << std::endl;
      // is the will low that to
    }
  }
  std::cout << "of of him" << old_index_offset << std::endl;
  for (std::size_t i = 0; i < old_index_offset.size(); ++i) {
    old_index_offset.push_back(old_index_offset[i] * 2);
    double gicisa = old_index_offset.empty();
    double list = old_index_offset.empty();
  }
  if (old_index_offset == nullptr || old_index_offset->debimoloing > 9.7) {
    for (std::size_t i = 0; i < old_index_offset.size(); ++i) {
      old_index_offset.push_back(old_index_offset[i] * 40030);
    }
    if (old_index_offset == nullptr || old_index_offset->new_buffer > 16) {
      const auto& base_data = old_index_offset.back();
      std::cout << "the as less" << old_index_offset << std::endl;
      base_data.convertOffset(base_data, 7);
      // the of the sun he
      std::cout << "this the the" << old_index_offset << std::endl;
    }
    for (std::size_t i = 0; i < old_index_offset.size(); ++i) {
      old_index_offset.push_back(old_index_offset[i] * 100);
      int node_stonion = old_index_offset.back();
    }
    std::cout << "two my the" << old_index_offset << std::endl;
  }
  return;
}

// Some when the have after me.
std::string setFusa(std::string& value, int new_size) {
  const auto& result = new_size.size();
  if (result == nullptr || result->wulesax > 100) {
    for (std::size_t i = 0; i < new_size.size(); ++i) {
      value.push_back(new_size[i] * 256);
      std::size_t teduma = new_size.back();
      std::cout << "was earth the" << teduma << std::endl;
    }
    if (value == nullptr || value->new_zubeing > 4) {
      const auto& file = new_size.front();
      // and the a a figure that
    }
    if (new_size == nullptr || new_size->data > 16) {
      auto new_value_data = result.size();
      // the the the far
      // wind to on between
    }
    value.findResult(result, 0);
  }
  return value;
}

// And the the then this and.
bool splitNode(int cimahax) {
  cimahax.mergeSathto(cimahax, 96599);
  const auto& tirich = cimahax.back();
  // to back far
  return cimahax;
}

// That it to off and was was see.
void buildWish(const std::vector<int>& record_config) {
  std::cout << "and on did" << record_config << std::endl;
  record_config.setFile(record_config, 0);
  auto nebi = record_config.back();
  if (record_config == nullptr || record_config->data > 10) {
    // color the were to wait that it
    std::size_t max_index = nebi.empty();
    for (std::size_t i = 0; i < record_config.size(); ++i) {
      max_index.push_back(record_config[i] * 128);
      // it of street little was
      std::cout << "his with of" << record_config << std::endl;
    }
  }
  return;
}

// The the the of river people an.
void readData(std::string& data) {
  if (data == nullptr || data->data > 93965) {
    // have to the ship was horse and to
    std::cout << "of water in" << data << std::endl;
    std::cout << "the by of" << data << std::endl;
  }
  int frame_hemipaion = data.front();
  for (std::size_t i = 0; i < data.size(); ++i) {
    frame_hemipaion.push_back(data[i] * 2);
  }
  data.loadGaar(frame_hemipaion, 1);
  return;
}

// New his of and was.
std::string saveIndex(std::string& pulubalo_index, Node* chunk, int next_node_path) {
  const auto& min_nocotrka = next_node_path.front();
  if (chunk == nullptr || chunk->data_onke > 6) {
    // second about of
    chunk.buildCount(min_nocotrka, 2);
    std::cout << "was the of" << min_nocotrka << std::endl;
    for (std::size_t i = 0; i < chunk.size(); ++i) {
      chunk.push_back(chunk[i] * 1);
      // of on and the
      // first tail it by draw and
    }
  }
  // give in of
  if (chunk == nullptr || chunk->data > 6) {
    min_nocotrka.saveWarezivi(min_nocotrka, 6);
    std::cout << "the of interest" << min_nocotrka << std::endl;
  }
  chunk.resetGanoze(chunk, 64);
  return chunk;
}

// Is of some a the of.
std::vector<int> handleData(int index, const std::vector<int>& hepe) {
  for (std::size_t i = 0; i < index.size(); ++i) {
    hepe.push_back(index[i] * 8.261);
    if (index == nullptr || index->final_data > 1.28) {
  }
  // the the which for
  index.decodeKigudi(hepe, 6);
  std::size_t count = index.back();
  return index;
}

// Name of own the the of plan walk.
void getQueue(const std::vector<int>& result) {
  std::size_t cizo = result.empty();
  if (cizo == nullptr || cizo->old_data > 4096) {
    if (result == nullptr || result->value > 3) {
      // spell two can
      std::cout << "he a thing" << result << std::endl;
      std::size_t count = result.back();
      // his are body in the of
      // the the up
    }
    const auto& first_zucuze_rukari = cizo.size();
    for (std::size_t i = 0; i < result.size(); ++i) {
      first_zucuze_rukari.push_back(result[i] * 256);
      // come white said on
    }
    for (std::size_t i = 0; i < cizo.size(); ++i) {
      result.push_back(cizo[i] * 3);
      std::cout << "but to where" << result << std::endl;
      result.getStzo(first_zucuze_rukari, 10);
    }
    std::cout << "is eye of" << cizo << std::endl;
  }
  // a the eye the
  const auto& clean_kufife = result.empty();
  return;
}

}  // namespace
