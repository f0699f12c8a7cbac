#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "morphic/caps.hpp"
#include "morphic/factor_corpus.hpp"
#include "morphic/fixed_point.hpp"

namespace morphic {

// x = f^ω(seed), optionally viewed through a non-erasing morphism g as g(x).
struct WordSource {
  Morphism generator;
  Letter seed = 0;
  std::optional<Morphism> outer;

  const Alphabet& alphabet() const { return outer ? outer->target() : generator.source(); }

  LazyWord word(std::size_t cap = kDefaultSymbolCap) const {
    auto x = fixed_point(generator, seed, cap);
    return outer ? code(*outer, x) : x;
  }

  WordSource base() const { return {generator, seed, std::nullopt}; }
};

// Greedy extremal prefixes over a certified corpus, cached per (letter, order)
// and recomputed on a corpus at least twice as long when a longer prefix is
// asked for.
class ExtremalOracle {
 public:
  explicit ExtremalOracle(WordSource src, Caps caps = {}) : src_(std::move(src)), caps_(std::move(caps)) {}

  const WordSource& source() const noexcept { return src_; }
  const Caps& caps() const noexcept { return caps_; }

  const FactorCorpus& corpus(std::size_t n) {
    if (corpus_.texts().empty() || corpus_.length() < n) {
      auto len = std::max(n, corpus_.texts().empty() ? std::size_t{0} : corpus_.length() * 2);
      auto base = fixed_point_corpus(src_.generator, src_.seed, len, caps_);
      corpus_ = src_.outer ? base.coded(*src_.outer) : std::move(base);
    }
    return corpus_;
  }

  std::vector<Letter> letters() { return corpus(1).letters(); }

  bool occurs(Letter b) {
    auto ls = letters();
    return std::find(ls.begin(), ls.end(), b) != ls.end();
  }

  Word extremal(Letter b, const TotalOrder& order, std::size_t n) {
    auto key = std::make_pair(b, order.ascending());
    auto it = cache_.find(key);
    if (it != cache_.end() && it->second.size() >= n)
      return Word(it->second.begin(), it->second.begin() + static_cast<std::ptrdiff_t>(n));
    const auto& c = corpus(n);
    Word w;
    if (!c.certified() && !src_.outer) {
      // Long bounded runs can sit far beyond any sampled prefix; the exact
      // closure catches them when it fits in the work budget.
      try {
        w = build_factors(src_.generator, src_.seed, n, caps_.work).greedy_extremal(b, order, n);
      } catch (const ResourceError&) {
        w = c.greedy_extremal(b, order, n);
      }
    } else {
      w = c.greedy_extremal(b, order, n);
    }
    cache_[key] = w;
    return w;
  }

 private:
  WordSource src_;
  Caps caps_;
  FactorCorpus corpus_;
  std::map<std::pair<Letter, std::vector<Letter>>, Word> cache_;
};

inline Word greedy_extremal(const WordSource& src, Letter b, const TotalOrder& order, std::size_t n,
                            const Caps& caps = {}) {
  ExtremalOracle oracle(src, caps);
  return oracle.extremal(b, order, n);
}

// Heuristic: every factor of the length-horizon/4 prefix occurs at least twice
// in the length-`horizon` prefix.  Uses the suffix array of the prefix: the
// factor of length l at i repeats iff some neighbouring suffix shares l letters.
inline bool is_recurrent_sample(const LazyWord& x, std::size_t horizon) {
  auto limit = horizon / 4;
  if (limit == 0) return true;
  auto p = x.prefix(horizon);
  std::vector<std::size_t> sa(horizon);
  std::iota(sa.begin(), sa.end(), std::size_t{0});
  WordView v(p);
  std::sort(sa.begin(), sa.end(), [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(v.begin() + static_cast<std::ptrdiff_t>(a), v.end(),
                                        v.begin() + static_cast<std::ptrdiff_t>(b), v.end());
  });
  std::vector<std::size_t> best(horizon, 0);
  for (std::size_t r = 1; r < horizon; ++r) {
    auto l = common_prefix_length(v.subspan(sa[r - 1]), v.subspan(sa[r]));
    best[sa[r - 1]] = std::max(best[sa[r - 1]], l);
    best[sa[r]] = std::max(best[sa[r]], l);
  }
  for (std::size_t i = 0; i < limit; ++i)
    if (best[i] < limit - i) return false;
  return true;
}

// l_{1,ρ} = 1 l_{0,ρ} and l_{0,ρ̄} = 0 l_{1,ρ̄} on length-n prefixes of a
// recurrent binary fixed point.
inline bool mirror_identities_check(const Morphism& m, Letter seed, std::size_t n, const Caps& caps = {}) {
  if (m.source().size() != 2) throw DomainError("mirror identities: alphabet is not binary");
  ExtremalOracle oracle({m, seed, std::nullopt}, caps);
  if (!oracle.occurs(0) || !oracle.occurs(1))
    throw DomainError("mirror identities: both letters must occur in the fixed point");
  if (!is_recurrent_sample(fixed_point(m, seed, caps.symbols), 4096))
    throw DomainError("mirror identities: fixed point fails the recurrence sample check");
  auto rho = TotalOrder::natural(2);
  auto rho_bar = TotalOrder::reversed(2);
  auto l1 = oracle.extremal(1, rho, n);
  auto l0 = oracle.extremal(0, rho, n);
  auto r0 = oracle.extremal(0, rho_bar, n);
  auto r1 = oracle.extremal(1, rho_bar, n);
  if (n == 0) return true;
  return l1[0] == 1 && std::equal(l1.begin() + 1, l1.end(), l0.begin()) && r0[0] == 0 &&
         std::equal(r0.begin() + 1, r0.end(), r1.begin());
}

}  // namespace morphic
