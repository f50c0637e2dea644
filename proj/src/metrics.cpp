#include "toksmith/metrics.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <cmath>
#include <cstdio>
#include <thread>

#include <nlohmann/json.hpp>

#include "toksmith/error.hpp"

namespace toksmith {
namespace {

void require_docs(std::span<const std::string> docs) {
  if (docs.empty()) throw ValidationError("document set is empty");
}

std::size_t total_tokens(const Tokenizer& t, std::span<const std::string> docs) {
  std::size_t n = 0;
  for (const auto& d : docs) n += t.count_tokens(d);
  return n;
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace

double nsl_from_lengths(std::span<const std::size_t> candidate,
                        std::span<const std::size_t> baseline) {
  if (candidate.empty()) throw ValidationError("document set is empty");
  if (candidate.size() != baseline.size()) {
    throw ValidationError("length lists differ in size");
  }
  std::size_t num = 0;
  std::size_t den = 0;
  for (const std::size_t n : candidate) num += n;
  for (const std::size_t n : baseline) den += n;
  if (den == 0) throw ValidationError("baseline produced no tokens");
  return static_cast<double>(num) / static_cast<double>(den);
}

double nsl(const Tokenizer& candidate, const Tokenizer& baseline,
           std::span<const std::string> docs) {
  require_docs(docs);
  std::vector<std::size_t> a;
  std::vector<std::size_t> b;
  for (const auto& d : docs) {
    a.push_back(candidate.count_tokens(d));
    b.push_back(baseline.count_tokens(d));
  }
  return nsl_from_lengths(a, b);
}

double bytes_per_token(const Tokenizer& tokenizer, std::span<const std::string> docs) {
  require_docs(docs);
  std::size_t bytes = 0;
  for (const auto& d : docs) bytes += d.size();
  const std::size_t tokens = total_tokens(tokenizer, docs);
  if (tokens == 0) throw ValidationError("documents produced no tokens");
  return static_cast<double>(bytes) / static_cast<double>(tokens);
}

double renyi_efficiency(std::span<const std::uint64_t> counts, std::size_t vocab_size,
                        double alpha) {
  if (!(alpha > 0.0) || alpha == 1.0) {
    throw ConfigError("Renyi order must be positive and different from 1");
  }
  if (counts.size() > vocab_size) throw ValidationError("counts exceed vocab size");
  double total = 0.0;
  for (const auto c : counts) total += static_cast<double>(c);
  if (total == 0.0) throw ValidationError("no tokens to measure");
  if (vocab_size < 2) return 0.0;
  double sum = 0.0;
  for (const auto c : counts) {
    if (c > 0) sum += std::pow(static_cast<double>(c) / total, alpha);
  }
  const double entropy = std::log(sum) / (1.0 - alpha);
  return std::clamp(entropy / std::log(static_cast<double>(vocab_size)), 0.0, 1.0);
}

double renyi_efficiency(const Tokenizer& tokenizer, std::span<const std::string> docs,
                        double alpha) {
  require_docs(docs);
  std::vector<std::uint64_t> counts(tokenizer.vocab_size(), 0);
  std::vector<TokenId> ids;
  for (const auto& d : docs) {
    ids.clear();
    tokenizer.encode_into(d, ids);
    for (const TokenId id : ids) ++counts[id];
  }
  return renyi_efficiency(counts, tokenizer.vocab_size(), alpha);
}

void summarize(CompressionReport& report) {
  report.per_category.clear();
  std::map<std::string, std::size_t> n_subsets;
  for (const auto& [key, m] : report.per_subset) {
    auto& c = report.per_category[key.first];
    c.nsl += m.nsl;
    c.bytes_per_token += m.bytes_per_token;
    c.renyi += m.renyi;
    ++n_subsets[key.first];
  }
  report.overall = {};
  for (auto& [name, c] : report.per_category) {
    const auto n = static_cast<double>(n_subsets[name]);
    c.nsl /= n;
    c.bytes_per_token /= n;
    c.renyi /= n;
    report.overall.nsl += c.nsl;
    report.overall.bytes_per_token += c.bytes_per_token;
    report.overall.renyi += c.renyi;
  }
  if (!report.per_category.empty()) {
    const auto n = static_cast<double>(report.per_category.size());
    report.overall.nsl /= n;
    report.overall.bytes_per_token /= n;
    report.overall.renyi /= n;
  }
}

std::vector<CompressionReport> evaluate(std::span<const NamedTokenizer> tokenizers,
                                        const Tokenizer& baseline,
                                        const CorpusManifest& manifest, unsigned threads,
                                        double alpha) {
  struct Job {
    const Category* category;
    const Subset* subset;
  };
  std::vector<Job> jobs;
  for (const auto& c : manifest.categories()) {
    for (const auto& s : c.subsets) {
      if (s.holdout_count == 0) {
        throw ValidationError(c.name + "/" + s.name + ": no holdout documents to evaluate");
      }
      jobs.push_back({&c, &s});
    }
  }
  if (jobs.empty()) throw ValidationError("manifest has no subsets");

  // results[job][tokenizer]
  std::vector<std::vector<SubsetMetrics>> results(
      jobs.size(), std::vector<SubsetMetrics>(tokenizers.size()));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t j = next++; j < jobs.size(); j = next++) {
      try {
        const auto docs = read_documents(jobs[j].subset->holdout_files());
        std::vector<std::size_t> base_lengths;
        std::size_t bytes = 0;
        for (const auto& d : docs) {
          base_lengths.push_back(baseline.count_tokens(d));
          bytes += d.size();
        }
        for (std::size_t t = 0; t < tokenizers.size(); ++t) {
          const Tokenizer& tok = tokenizers[t].tokenizer;
          std::vector<std::size_t> lengths;
          std::vector<std::uint64_t> counts(tok.vocab_size(), 0);
          std::vector<TokenId> ids;
          for (const auto& d : docs) {
            ids.clear();
            lengths.push_back(tok.encode_into(d, ids));
            for (const TokenId id : ids) ++counts[id];
          }
          SubsetMetrics& m = results[j][t];
          m.nsl = nsl_from_lengths(lengths, base_lengths);
          m.token_count = 0;
          for (const auto n : lengths) m.token_count += n;
          m.byte_count = bytes;
          if (m.token_count == 0) throw ValidationError("holdout documents are empty");
          m.bytes_per_token =
              static_cast<double>(bytes) / static_cast<double>(m.token_count);
          m.renyi = renyi_efficiency(counts, tok.vocab_size(), alpha);
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, jobs.size()));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);

  std::vector<CompressionReport> reports(tokenizers.size());
  for (std::size_t t = 0; t < tokenizers.size(); ++t) {
    reports[t].name = tokenizers[t].name;
    for (std::size_t j = 0; j < jobs.size(); ++j) {
      reports[t].per_subset[{jobs[j].category->name, jobs[j].subset->name}] = results[j][t];
    }
    summarize(reports[t]);
  }
  return reports;
}

std::string report_json(std::span<const CompressionReport> reports) {
  using nlohmann::json;
  auto triple = [](const MetricTriple& m) {
    return json{{"nsl", m.nsl}, {"bytes_per_token", m.bytes_per_token}, {"renyi", m.renyi}};
  };
  json out = json::array();
  for (const auto& r : reports) {
    json subsets = json::array();
    for (const auto& [key, m] : r.per_subset) {
      subsets.push_back({{"category", key.first},
                         {"subset", key.second},
                         {"nsl", m.nsl},
                         {"bytes_per_token", m.bytes_per_token},
                         {"renyi", m.renyi},
                         {"token_count", m.token_count},
                         {"byte_count", m.byte_count}});
    }
    json categories = json::object();
    for (const auto& [name, m] : r.per_category) categories[name] = triple(m);
    out.push_back({{"tokenizer", r.name},
                   {"overall", triple(r.overall)},
                   {"per_category", categories},
                   {"per_subset", subsets}});
  }
  return out.dump(2) + "\n";
}

std::string report_table(std::span<const CompressionReport> reports) {
  std::vector<std::string> categories;
  for (const auto& r : reports) {
    for (const auto& [name, _] : r.per_category) {
      if (std::find(categories.begin(), categories.end(), name) == categories.end()) {
        categories.push_back(name);
      }
    }
  }
  std::vector<std::string> header = {"tokenizer", "NSL avg"};
  for (const auto& c : categories) header.push_back("NSL " + c);
  header.push_back("B/tok avg");
  for (const auto& c : categories) header.push_back("B/tok " + c);
  header.push_back("Renyi avg");

  std::vector<std::vector<std::string>> rows = {header};
  for (const auto& r : reports) {
    std::vector<std::string> row = {r.name, fixed(r.overall.nsl, 2)};
    for (const auto& c : categories) {
      const auto it = r.per_category.find(c);
      row.push_back(it == r.per_category.end() ? "-" : fixed(it->second.nsl, 2));
    }
    row.push_back(fixed(r.overall.bytes_per_token, 2));
    for (const auto& c : categories) {
      const auto it = r.per_category.find(c);
      row.push_back(it == r.per_category.end() ? "-" : fixed(it->second.bytes_per_token, 2));
    }
    row.push_back(fixed(r.overall.renyi, 2));
    rows.push_back(std::move(row));
  }

  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out += "  ";
      const std::size_t pad = width[i] - row[i].size();
      if (i == 0) {
        out += row[i] + std::string(pad, ' ');
      } else {
        out += std::string(pad, ' ') + row[i];
      }
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    out += '\n';
  }
  return out;
}

}  // namespace toksmith
