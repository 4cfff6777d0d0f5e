#pragma once

// tau(n) / sigma(n) census over all free trees, with a JSON-lines cache so
// long runs can be resumed.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "nsum/errors.hpp"
#include "nsum/ns_checker.hpp"
#include "nsum/tree_enum.hpp"

namespace nsum {

struct CensusRecord {
  std::size_t n = 0;
  std::uint64_t tau = 0;
  std::uint64_t sigma = 0;
  double elapsed = 0.0;  // seconds

  friend bool operator==(const CensusRecord&, const CensusRecord&) = default;
};

inline void to_json(nlohmann::json& j, const CensusRecord& r) {
  j = nlohmann::json{{"n", r.n}, {"tau", r.tau}, {"sigma", r.sigma}, {"elapsed", r.elapsed}};
}

inline void from_json(const nlohmann::json& j, CensusRecord& r) {
  j.at("n").get_to(r.n);
  j.at("tau").get_to(r.tau);
  j.at("sigma").get_to(r.sigma);
  r.elapsed = j.value("elapsed", 0.0);
}

/// Records keyed by n, ascending.
class CensusReport {
 public:
  void put(const CensusRecord& r) { records_[r.n] = r; }

  const CensusRecord* find(std::size_t n) const {
    auto it = records_.find(n);
    return it == records_.end() ? nullptr : &it->second;
  }

  const CensusRecord& at(std::size_t n) const {
    if (const auto* r = find(n)) return *r;
    throw Error("no census record for n = " + std::to_string(n));
  }

  std::vector<CensusRecord> records() const {
    std::vector<CensusRecord> out;
    for (const auto& [n, r] : records_) out.push_back(r);
    return out;
  }

  bool empty() const noexcept { return records_.empty(); }

 private:
  std::map<std::size_t, CensusRecord> records_;
};

/// tau(n) and sigma(n), splitting the enumeration order across `shards`
/// workers. The counts do not depend on the shard count.
inline CensusRecord census_one(std::size_t n, std::size_t shards = 1) {
  if (shards == 0) throw PreconditionError("shards must be positive");
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::uint64_t> tau(shards, 0);
  std::vector<std::uint64_t> sigma(shards, 0);
  auto work = [&](std::size_t shard) {
    for_each_free_tree(n, shard, shards, [&](const LevelSequence& seq) {
      ++tau[shard];
      if (satisfies_ns(tree_from_levels(seq))) ++sigma[shard];
    });
  };
  if (shards == 1) {
    work(0);
  } else {
    std::vector<std::jthread> workers;
    workers.reserve(shards);
    for (std::size_t s = 0; s < shards; ++s) workers.emplace_back(work, s);
  }
  CensusRecord r;
  r.n = n;
  for (std::size_t s = 0; s < shards; ++s) {
    r.tau += tau[s];
    r.sigma += sigma[s];
  }
  r.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

// ---------------------------------------------------------------------------
// Cache: one JSON object per line, {"n", "tau", "sigma", "elapsed"}.

inline CensusReport load_census_cache(const std::filesystem::path& path) {
  CensusReport report;
  std::ifstream in(path);
  if (!in) return report;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      report.put(nlohmann::json::parse(line).get<CensusRecord>());
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(line_no, std::string("census cache: ") + e.what());
    }
  }
  return report;
}

/// Writes a sibling temporary file, then renames it over `path`.
inline void save_census_cache(const std::filesystem::path& path, const CensusReport& report) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    for (const auto& r : report.records()) out << nlohmann::json(r).dump() << '\n';
    out.flush();
    if (!out) throw IoError("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("cannot replace " + path.string() + ": " + ec.message());
}

struct CensusOptions {
  std::size_t shards = 1;
  std::optional<std::filesystem::path> cache;
  bool reuse_cached = true;  // skip n already present in the cache
};

/// Records for n = 1..n_max. With a cache, each finished n is persisted
/// immediately.
template <class Progress>
CensusReport census(std::size_t n_max, const CensusOptions& options, Progress&& progress) {
  if (n_max == 0) throw PreconditionError("n_max must be positive");
  CensusReport cached;
  if (options.cache) cached = load_census_cache(*options.cache);
  CensusReport report = cached;
  CensusReport out;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const CensusRecord* hit = options.reuse_cached ? cached.find(n) : nullptr;
    CensusRecord r = hit ? *hit : census_one(n, options.shards);
    out.put(r);
    if (!hit) {
      report.put(r);
      if (options.cache) save_census_cache(*options.cache, report);
    }
    progress(r);
  }
  return out;
}

inline CensusReport census(std::size_t n_max, const CensusOptions& options = {}) {
  return census(n_max, options, [](const CensusRecord&) {});
}

// ---------------------------------------------------------------------------

/// 1 / alpha^4 with alpha ~ 2.9557 (Otter's growth constant). Reported only.
inline constexpr double otter_density_reference = 0.0131;

struct DensityRow {
  std::size_t n = 0;
  std::uint64_t sigma = 0;
  std::uint64_t tau_minus_4 = 0;  // tau(n - 4)
  bool holds = false;             // sigma(n) >= tau(n - 4)
  double ratio = 0.0;             // sigma(n) / tau(n)
};

/// Checks sigma(n) >= tau(n-4) for 5 <= n <= n_max. Gluing any tree on n-4
/// vertices to the middle of a five-vertex path gives a distinct NS tree.
inline std::vector<DensityRow> density_check(const CensusReport& report, std::size_t n_max) {
  if (n_max < 5) throw PreconditionError("density check needs n_max >= 5");
  std::vector<DensityRow> rows;
  for (std::size_t n = 5; n <= n_max; ++n) {
    const auto& here = report.at(n);
    const auto& back = report.at(n - 4);
    DensityRow row;
    row.n = n;
    row.sigma = here.sigma;
    row.tau_minus_4 = back.tau;
    row.holds = here.sigma >= back.tau;
    row.ratio = static_cast<double>(here.sigma) / static_cast<double>(here.tau);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace nsum
