#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "morphic/factor_corpus.hpp"
#include "morphic/lazy_word.hpp"

namespace morphic {

// Return words of u in a prefix of x, indexed by first appearance.
struct ReturnSystem {
  Word u;
  std::vector<Word> returns;
  std::size_t horizon = 0;
  std::vector<std::size_t> occurrences;
  // No return word first appears in the trailing half of the scan.
  bool stabilized = false;

  std::size_t size() const noexcept { return returns.size(); }
  Word complete_return(std::size_t i) const { return concat(returns.at(i), u); }
};

// Derived alphabet {1, ..., k}.
inline Alphabet derived_alphabet(std::size_t k) {
  std::vector<std::string> t;
  for (std::size_t i = 1; i <= k; ++i) t.push_back(std::to_string(i));
  return Alphabet(std::move(t));
}

inline ReturnSystem return_words(const LazyWord& x, WordView u, std::size_t horizon) {
  if (u.empty()) throw DomainError("return_words: empty factor");
  auto have = x.try_ensure(horizon);
  auto p = x.view(have);
  ReturnSystem rs;
  rs.u.assign(u.begin(), u.end());
  rs.horizon = have;
  for (auto it = p.begin();;) {
    it = std::search(it, p.end(), u.begin(), u.end());
    if (it == p.end()) break;
    rs.occurrences.push_back(static_cast<std::size_t>(it - p.begin()));
    ++it;
  }
  if (rs.occurrences.empty())
    throw DomainError("return_words: factor does not occur within " + std::to_string(have) + " symbols");
  if (rs.occurrences.size() < 2)
    throw DomainError("return_words: factor occurs only once within " + std::to_string(have) +
                      " symbols; the horizon is too short to observe a return");
  std::size_t last_new = 0;
  for (std::size_t j = 0; j + 1 < rs.occurrences.size(); ++j) {
    Word r(p.begin() + static_cast<std::ptrdiff_t>(rs.occurrences[j]),
           p.begin() + static_cast<std::ptrdiff_t>(rs.occurrences[j + 1]));
    if (std::find(rs.returns.begin(), rs.returns.end(), r) == rs.returns.end()) {
      rs.returns.push_back(std::move(r));
      last_new = rs.occurrences[j];
    }
  }
  rs.stabilized = last_new < have / 2;
  return rs;
}

// First n symbols of D_u(y): the factorization of y into complete returns.
inline Word derive(const LazyWord& y, const ReturnSystem& rs, std::size_t n) {
  Word out;
  if (n == 0) return out;
  std::size_t longest = 0;
  for (const auto& r : rs.returns) longest = std::max(longest, r.size());
  const auto& u = rs.u;
  auto head = y.try_ensure(u.size());
  if (head < u.size() || !std::equal(u.begin(), u.end(), y.view(u.size()).begin()))
    throw DomainError("derive: word does not start with the factor");
  std::size_t pos = 0;
  while (out.size() < n) {
    auto have = y.try_ensure(pos + longest + u.size());
    auto v = y.view(have);
    bool matched = false;
    for (std::size_t i = 0; i < rs.returns.size() && !matched; ++i) {
      const auto& r = rs.returns[i];
      if (pos + r.size() + u.size() > have) continue;
      if (!std::equal(r.begin(), r.end(), v.begin() + static_cast<std::ptrdiff_t>(pos))) continue;
      if (!std::equal(u.begin(), u.end(), v.begin() + static_cast<std::ptrdiff_t>(pos + r.size()))) continue;
      out.push_back(static_cast<Letter>(i));
      pos += r.size();
      matched = true;
    }
    if (!matched)
      throw DomainError("derive: no complete return matches at position " + std::to_string(pos) +
                        " (return word set incomplete or word too short)");
  }
  return out;
}

// m ≤_u n iff σ_u(m) u ≤ σ_u(n) u under `base`.
inline TotalOrder induced_order(const ReturnSystem& rs, const TotalOrder& base) {
  std::vector<Letter> idx(rs.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<Letter>(i);
  std::vector<Word> complete;
  for (std::size_t i = 0; i < rs.size(); ++i) complete.push_back(rs.complete_return(i));
  for (std::size_t i = 0; i < complete.size(); ++i)
    for (std::size_t j = i + 1; j < complete.size(); ++j) {
      auto c = base.compare(complete[i], complete[j]);
      if (c == Comparison::PrefixIncomparable || c == Comparison::Equal)
        throw DomainError("induced_order: complete returns " + std::to_string(i + 1) + " and " +
                          std::to_string(j + 1) + " are prefix-comparable");
    }
  std::sort(idx.begin(), idx.end(),
            [&](Letter a, Letter b) { return base.compare(complete[a], complete[b]) == Comparison::Less; });
  return TotalOrder(std::move(idx));
}

// Relabels letters in order of first appearance.
inline Word normalize_labels(WordView w) {
  std::map<Letter, Letter> relabel;
  Word out;
  out.reserve(w.size());
  for (Letter c : w) {
    auto it = relabel.emplace(c, static_cast<Letter>(relabel.size())).first;
    out.push_back(it->second);
  }
  return out;
}

struct CensusEntry {
  std::size_t prefix_length = 0;
  std::size_t return_count = 0;
  Word derived;              // normalized labels
  std::size_t distinct = 0;  // distinct derived words seen up to this entry
};

// D_u(y) for u = y[0, L) at each L, bucketed up to relabelling.
inline std::vector<CensusEntry> derived_word_census(const LazyWord& x, const LazyWord& y,
                                                    const std::vector<std::size_t>& prefix_lengths,
                                                    std::size_t horizon, std::size_t output_length = 64) {
  std::vector<CensusEntry> out;
  std::vector<Word> seen;
  for (auto len : prefix_lengths) {
    auto u = y.prefix(len);
    auto rs = return_words(x, u, horizon);
    CensusEntry e;
    e.prefix_length = len;
    e.return_count = rs.size();
    e.derived = normalize_labels(derive(y, rs, output_length));
    if (std::find(seen.begin(), seen.end(), e.derived) == seen.end()) seen.push_back(e.derived);
    e.distinct = seen.size();
    out.push_back(std::move(e));
  }
  return out;
}

// Greedy extremal prefix of the derived subshift X_u, sampled from the
// derived word of x's suffix at the first occurrence of u.
inline Word derived_extremal(const LazyWord& x, const ReturnSystem& rs, Letter start, const TotalOrder& order,
                             std::size_t n, std::size_t sample) {
  auto first = rs.occurrences.front();
  auto xs = drop(first, x);
  auto dx = derive(xs, rs, sample);
  return sampled_corpus(rs.size(), std::move(dx), n).greedy_extremal(start, order, n);
}

}  // namespace morphic
