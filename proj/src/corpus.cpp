#include "toksmith/corpus.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "toksmith/error.hpp"
#include "toksmith/persistence.hpp"
#include "toksmith/utf8.hpp"

namespace toksmith {
namespace fs = std::filesystem;
namespace {

using nlohmann::json;

bool has_wildcard(const std::string& s) {
  return s.find_first_of("*?[") != std::string::npos;
}

std::vector<fs::path> expand(const fs::path& base, const std::string& entry,
                             const std::string& where) {
  const fs::path rel(entry);
  const std::string leaf = rel.filename().string();
  if (has_wildcard(rel.parent_path().string())) {
    throw ParseError(where + ": wildcards are only allowed in the file name");
  }
  if (!has_wildcard(leaf)) {
    const fs::path p = base / rel;
    if (!fs::is_regular_file(p)) throw ValidationError(where + ": missing file " + p.string());
    return {p};
  }
  const fs::path dir = base / rel.parent_path();
  std::vector<fs::path> out;
  if (fs::is_directory(dir)) {
    for (const auto& e : fs::directory_iterator(dir)) {
      if (e.is_regular_file() &&
          fnmatch(leaf.c_str(), e.path().filename().c_str(), 0) == 0) {
        out.push_back(e.path());
      }
    }
  }
  if (out.empty()) throw ValidationError(where + ": pattern '" + entry + "' matches no files");
  return out;
}

// Fisher-Yates with a fixed engine so the order is portable.
void shuffle(std::vector<fs::path>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const std::size_t j = rng() % i;
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace

CorpusManifest::CorpusManifest(std::vector<Category> categories)
    : categories_(std::move(categories)) {
  std::set<std::string> seen;
  for (auto& c : categories_) {
    if (!seen.insert(c.name).second) {
      throw ValidationError("duplicate category '" + c.name + "'");
    }
    std::set<std::string> subset_names;
    for (auto& s : c.subsets) {
      const std::string where = c.name + "/" + s.name;
      if (!subset_names.insert(s.name).second) {
        throw ValidationError("duplicate subset '" + where + "'");
      }
      std::sort(s.files.begin(), s.files.end());
      s.files.erase(std::unique(s.files.begin(), s.files.end()), s.files.end());
      if (s.holdout_count > s.files.size()) {
        throw ValidationError(where + ": holdout " + std::to_string(s.holdout_count) +
                              " exceeds file count " + std::to_string(s.files.size()));
      }
      for (const auto& f : s.files) {
        if (!fs::is_regular_file(f)) {
          throw ValidationError(where + ": missing file " + f.string());
        }
      }
    }
  }
}

CorpusManifest CorpusManifest::load(const fs::path& path) {
  json doc;
  try {
    doc = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  const fs::path base = path.parent_path();
  if (!doc.is_object() || !doc.contains("categories") || !doc["categories"].is_object()) {
    throw ParseError("categories: expected an object");
  }
  for (const auto& [key, _] : doc.items()) {
    if (key != "categories" && key != "version") throw ParseError(key + ": unknown field");
  }
  std::vector<Category> categories;
  for (const auto& [cname, cjson] : doc["categories"].items()) {
    if (!cjson.is_object()) throw ParseError("categories." + cname + ": expected an object");
    Category category{cname, {}};
    for (const auto& [sname, sjson] : cjson.items()) {
      const std::string where = "categories." + cname + "." + sname;
      if (!sjson.is_object()) throw ParseError(where + ": expected an object");
      for (const auto& [key, _] : sjson.items()) {
        if (key != "files" && key != "holdout") throw ParseError(where + "." + key + ": unknown field");
      }
      Subset subset{sname, {}, 0};
      const auto files = sjson.find("files");
      if (files == sjson.end() || !files->is_array()) {
        throw ParseError(where + ".files: expected an array");
      }
      for (std::size_t i = 0; i < files->size(); ++i) {
        const std::string fwhere = where + ".files[" + std::to_string(i) + "]";
        if (!(*files)[i].is_string()) throw ParseError(fwhere + ": expected a string");
        for (auto& p : expand(base, (*files)[i].get<std::string>(), fwhere)) {
          subset.files.push_back(std::move(p));
        }
      }
      if (const auto h = sjson.find("holdout"); h != sjson.end()) {
        if (!h->is_number_unsigned()) {
          throw ParseError(where + ".holdout: expected a non-negative integer");
        }
        subset.holdout_count = h->get<std::size_t>();
      }
      category.subsets.push_back(std::move(subset));
    }
    categories.push_back(std::move(category));
  }
  return CorpusManifest(std::move(categories));
}

const Category* CorpusManifest::find(std::string_view name) const {
  for (const auto& c : categories_) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::vector<std::string> read_documents(std::span<const fs::path> files) {
  std::vector<std::string> docs;
  docs.reserve(files.size());
  for (const auto& f : files) docs.push_back(read_file(f));
  return docs;
}

void MixSpec::validate() const {
  if (weights.empty()) throw ConfigError("mix has no categories");
  double sum = 0.0;
  for (const auto& [name, w] : weights) {
    if (!(w >= 0.0 && w <= 1.0)) {
      throw ConfigError("mix weight for '" + name + "' must lie in [0, 1]");
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    std::ostringstream msg;
    msg << "mix weights sum to " << sum << ", expected 1";
    throw ConfigError(msg.str());
  }
}

std::map<std::string, double> parse_weights(std::string_view text) {
  std::map<std::string, double> weights;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    std::string_view item = text.substr(start, end - start);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw ConfigError("mix entry '" + std::string(item) + "' is not name=weight");
    }
    const std::string name(item.substr(0, eq));
    const std::string value(item.substr(eq + 1));
    std::size_t used = 0;
    double w = 0.0;
    try {
      w = std::stod(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != value.size()) {
      throw ConfigError("mix weight '" + value + "' is not a number");
    }
    if (!weights.emplace(name, w).second) {
      throw ConfigError("mix names category '" + name + "' twice");
    }
    start = end + 1;
  }
  return weights;
}

MixSampler::MixSampler(const CorpusManifest& manifest, const MixSpec& mix,
                       std::uint64_t seed) {
  mix.validate();
  std::mt19937_64 rng(seed);
  for (const auto& [name, weight] : mix.weights) {
    const Category* category = manifest.find(name);
    if (!category) throw ConfigError("mix category '" + name + "' is not in the manifest");
    emitted_[name] = 0;
    const auto target =
        static_cast<std::size_t>(std::llround(weight * static_cast<double>(mix.char_budget)));
    if (target == 0) continue;
    Stream stream{name, target, {}, 0, 0};
    for (const auto& s : category->subsets) {
      const auto train = s.train_files();
      stream.files.insert(stream.files.end(), train.begin(), train.end());
    }
    if (stream.files.empty()) {
      throw ValidationError("category '" + name + "' has no training documents");
    }
    std::sort(stream.files.begin(), stream.files.end());
    shuffle(stream.files, rng);
    streams_.push_back(std::move(stream));
  }
}

std::optional<std::string> MixSampler::next() {
  while (true) {
    // Category furthest behind its share goes next; ties by name order.
    Stream* pick = nullptr;
    double best = 2.0;
    for (auto& s : streams_) {
      const std::size_t done = emitted_[s.category];
      if (done >= s.target) continue;
      const double share = static_cast<double>(done) / static_cast<double>(s.target);
      if (share < best) best = share, pick = &s;
    }
    if (!pick) return std::nullopt;

    std::string doc = read_file(pick->files[pick->cursor]);
    pick->cursor = (pick->cursor + 1) % pick->files.size();
    std::size_t& done = emitted_[pick->category];
    const std::size_t left = pick->target - done;
    std::size_t n = utf8::count_scalars(doc);
    if (n > left) {
      doc.resize(utf8::prefix_bytes(doc, left));
      n = left;
    }
    if (n == 0) {
      if (++pick->empty_run >= pick->files.size()) {
        throw ValidationError("category '" + pick->category +
                              "' has only empty training documents");
      }
      continue;
    }
    pick->empty_run = 0;
    done += n;
    return doc;
  }
}

DocumentSource MixSampler::source() {
  return [this] { return next(); };
}

}  // namespace toksmith
