#pragma once

// Range scans over the members of M up to a bound. Work fans out across
// threads in fixed-size blocks; rows are always delivered in ascending
// element order, so results do not depend on the worker count.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "acm/factorization.hpp"
#include "acm/monoid.hpp"

namespace acm {

struct ScanOptions {
  std::size_t factorization_cap = kDefaultFactorizationCap;
  unsigned workers = 0;  // 0: hardware concurrency
  bool with_catenary = true;
};

struct SurveyRow {
  u64 element = 0;
  std::size_t factorization_count = 0;
  LengthProfile profile;
  std::size_t catenary = 0;
  bool capped = false;
  std::string diagnostic;
};

struct ScanResult {
  std::vector<SurveyRow> rows;  // capped elements are reported here too, flagged
  std::vector<u64> skipped;

  const SurveyRow* find(u64 x) const {
    auto it = std::lower_bound(rows.begin(), rows.end(), x,
                               [](const SurveyRow& r, u64 v) { return r.element < v; });
    return it != rows.end() && it->element == x ? &*it : nullptr;
  }
};

/// Nonunit members of M in [a, bound], ascending.
inline std::vector<u64> members_up_to(const AcmDescriptor& desc, u64 bound) {
  std::vector<u64> out;
  if (bound < desc.a) return out;
  for (u64 x = desc.a; x <= bound; x += desc.b) {
    if (x != 1) out.push_back(x);
    if (x > bound - desc.b) break;
  }
  return out;
}

inline SurveyRow survey_element(const Monoid& m, u64 x, const ScanOptions& opts) {
  SurveyRow row;
  row.element = x;
  try {
    const auto zs = enumerate_factorizations(m, x, opts.factorization_cap);
    row.factorization_count = zs.size();
    row.profile = profile_from_factorizations(zs);
    if (opts.with_catenary) row.catenary = catenary_of_factorizations(zs);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::CapExceeded) throw;
    row.capped = true;
    row.diagnostic = e.what();
  }
  return row;
}

/// Scans every nonunit member x <= bound. `on_row`, when given, sees each
/// row in ascending order as soon as its block completes.
inline ScanResult scan_range(Monoid m, u64 bound, const ScanOptions& opts = {},
                             const std::function<void(const SurveyRow&)>& on_row = {}) {
  m.reserve_atoms(bound);
  const auto elements = members_up_to(m.descriptor(), bound);
  unsigned workers = opts.workers ? opts.workers : std::max(1U, std::thread::hardware_concurrency());
  constexpr std::size_t kBlock = 256;

  ScanResult result;
  result.rows.resize(elements.size());
  for (std::size_t start = 0; start < elements.size(); start += kBlock) {
    const std::size_t stop = std::min(elements.size(), start + kBlock);
    const unsigned active = static_cast<unsigned>(std::min<std::size_t>(workers, stop - start));
    auto work = [&](unsigned w) {
      for (std::size_t i = start + w; i < stop; i += active) result.rows[i] = survey_element(m, elements[i], opts);
    };
    if (active <= 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < active; ++w) pool.emplace_back(work, w);
      for (auto& t : pool) t.join();
    }
    for (std::size_t i = start; i < stop; ++i) {
      if (result.rows[i].capped) result.skipped.push_back(result.rows[i].element);
      if (on_row) on_row(result.rows[i]);
    }
  }
  return result;
}

struct DeltaSetSurvey {
  std::map<unsigned, u64> witnesses;  // gap -> smallest element realizing it
  std::vector<u64> skipped;

  std::vector<unsigned> values() const {
    std::vector<unsigned> out;
    for (const auto& [gap, _] : witnesses) out.push_back(gap);
    return out;
  }
  std::optional<unsigned> max() const {
    if (witnesses.empty()) return std::nullopt;
    return witnesses.rbegin()->first;
  }
};

inline DeltaSetSurvey delta_set_survey(const ScanResult& scan) {
  DeltaSetSurvey out;
  for (const auto& row : scan.rows) {
    if (row.capped) continue;
    for (unsigned gap : row.profile.delta_set) out.witnesses.emplace(gap, row.element);
  }
  out.skipped = scan.skipped;
  return out;
}

/// Union of the delta sets of all members <= bound.
inline DeltaSetSurvey delta_set_survey(const Monoid& m, u64 bound, ScanOptions opts = {}) {
  opts.with_catenary = false;
  return delta_set_survey(scan_range(m, bound, opts));
}

}  // namespace acm
