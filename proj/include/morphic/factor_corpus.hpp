#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "morphic/caps.hpp"
#include "morphic/factor_set.hpp"
#include "morphic/fixed_point.hpp"

namespace morphic {

// Finite texts whose substrings are factors of a word x.  When `certified`,
// every factor of x of length ≤ n occurs inside some text; a corpus sampled
// from a prefix of x carries no such guarantee.
class FactorCorpus {
 public:
  FactorCorpus() = default;
  FactorCorpus(std::size_t alphabet_size, std::size_t n, std::vector<Word> texts, bool certified)
      : k_(alphabet_size), n_(n), texts_(std::move(texts)), certified_(certified) {}

  std::size_t length() const noexcept { return n_; }
  std::size_t alphabet_size() const noexcept { return k_; }
  bool certified() const noexcept { return certified_; }
  const std::vector<Word>& texts() const noexcept { return texts_; }

  std::size_t total_symbols() const {
    std::size_t s = 0;
    for (const auto& t : texts_) s += t.size();
    return s;
  }

  std::vector<Letter> letters() const {
    std::vector<bool> seen(k_, false);
    for (const auto& t : texts_)
      for (Letter c : t) seen[c] = true;
    std::vector<Letter> out;
    for (std::size_t c = 0; c < k_; ++c)
      if (seen[c]) out.push_back(static_cast<Letter>(c));
    return out;
  }

  bool contains(WordView w) const {
    for (const auto& t : texts_)
      if (std::search(t.begin(), t.end(), w.begin(), w.end()) != t.end()) return true;
    return false;
  }

  // Image under a non-erasing g: a certified corpus at length n for x gives a
  // certified corpus at length n for g(x).
  FactorCorpus coded(const Morphism& g) const {
    if (!g.is_non_erasing()) throw DomainError("coded corpus: morphism is erasing");
    std::vector<Word> out;
    out.reserve(texts_.size());
    for (const auto& t : texts_) out.push_back(apply(g, t));
    return FactorCorpus(g.target().size(), n_, std::move(out), certified_);
  }

  // Length-`len` prefix of the σ-least word starting with b, by filtering the
  // occurrence list of the current prefix.
  Word greedy_extremal(Letter b, const TotalOrder& order, std::size_t len) const {
    if (len > n_)
      throw DomainError("greedy_extremal: length " + std::to_string(len) + " exceeds corpus length " +
                        std::to_string(n_));
    if (len == 0) return {};
    std::vector<std::pair<std::uint32_t, std::uint32_t>> occ;
    for (std::size_t t = 0; t < texts_.size(); ++t)
      for (std::size_t i = 0; i < texts_[t].size(); ++i)
        if (texts_[t][i] == b) occ.emplace_back(static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(i));
    if (occ.empty()) throw DomainError("greedy_extremal: start letter does not occur");
    Word w{b};
    while (w.size() < len) {
      const auto off = w.size();
      Letter best = 0;
      bool found = false;
      for (auto [t, i] : occ) {
        if (i + off >= texts_[t].size()) continue;
        Letter c = texts_[t][i + off];
        if (!found || order.less(c, best)) best = c, found = true;
      }
      if (!found)
        throw ResourceError("greedy_extremal: corpus too short to extend a prefix of length " +
                            std::to_string(off));
      std::size_t keep = 0;
      for (auto [t, i] : occ)
        if (i + off < texts_[t].size() && texts_[t][i + off] == best) occ[keep++] = {t, i};
      occ.resize(keep);
      w.push_back(best);
    }
    return w;
  }

 private:
  std::size_t k_ = 1;
  std::size_t n_ = 0;
  std::vector<Word> texts_;
  bool certified_ = false;
};

namespace detail {

inline std::size_t sat_add(std::size_t a, std::size_t b, std::size_t cap) {
  return a >= cap || b >= cap || a + b >= cap ? cap : a + b;
}

// Prefix of f^k(w) of length at most `limit`; valid because f is non-erasing.
inline Word power_prefix(const Morphism& m, Word w, std::size_t k, std::size_t limit) {
  if (w.size() > limit) w.resize(limit);
  for (std::size_t i = 0; i < k; ++i) {
    Word next;
    for (Letter c : w) {
      const auto& img = m.image(c);
      next.insert(next.end(), img.begin(), img.end());
      if (next.size() >= limit) break;
    }
    if (next.size() > limit) next.resize(limit);
    w = std::move(next);
  }
  return w;
}

}  // namespace detail

// Certified corpus for f^ω(seed) at length n.  Since x = f^k(x), every
// length-n factor starts inside some f^k(w_0) with w ∈ F_r(x) and ends inside
// f^k(w), provided |f^k(v)| ≥ n - 1 for all v ∈ F_{r-1}(x).  The texts are
// f^k(w) cut to |f^k(w_0)| + n - 1 symbols.  If no r ≤ 8 admits such a k
// (long runs of bounded letters), a long prefix of x is sampled instead and
// the corpus is marked uncertified.
inline FactorCorpus fixed_point_corpus(const Morphism& m, Letter seed, std::size_t n, const Caps& caps = {}) {
  m.require_endomorphism("fixed_point_corpus");
  if (!m.is_non_erasing())
    throw DomainError("factor corpus: morphism is erasing; only non-erasing morphisms are supported");
  const std::size_t k_letters = m.source().size();
  const std::size_t need = n > 0 ? n - 1 : 0;
  constexpr std::size_t kMaxR = 8;
  constexpr std::size_t kMaxK = 4096;

  for (std::size_t r = 2; r <= kMaxR; ++r) {
    auto shorter = factor_closure(m, seed, r - 1, caps.work);
    auto windows = factor_closure(m, seed, r, caps.work);
    // len[c] = |f^k(c)| saturated at a bound well above need.
    const std::size_t sat = std::max<std::size_t>(need, 1) * 2 + 2;
    std::vector<std::size_t> len(k_letters, 1);
    std::size_t k = 0;
    bool ok = false;
    for (; k <= kMaxK; ++k) {
      std::size_t worst = std::numeric_limits<std::size_t>::max();
      for (const auto& v : shorter) {
        std::size_t s = 0;
        for (Letter c : v) s = detail::sat_add(s, len[c], sat);
        worst = std::min(worst, s);
      }
      if (worst >= need) {
        ok = true;
        break;
      }
      std::vector<std::size_t> next(k_letters, 0);
      for (std::size_t c = 0; c < k_letters; ++c)
        for (Letter d : m.image(static_cast<Letter>(c))) next[c] = detail::sat_add(next[c], len[d], sat);
      if (next == len) break;
      len = std::move(next);
    }
    if (!ok) continue;

    std::vector<Word> texts;
    std::size_t total = 0;
    std::vector<Word> sorted(windows.begin(), windows.end());
    std::sort(sorted.begin(), sorted.end());
    for (const auto& w : sorted) {
      auto head = detail::power_prefix(m, Word{w.front()}, k, caps.symbols);
      auto limit = detail::sat_add(head.size(), need, caps.symbols);
      auto text = detail::power_prefix(m, w, k, limit);
      total += text.size();
      if (total > caps.symbols)
        throw ResourceError("factor corpus: " + std::to_string(total) + " symbols exceed the cap of " +
                            std::to_string(caps.symbols));
      texts.push_back(std::move(text));
    }
    return FactorCorpus(k_letters, n, std::move(texts), true);
  }

  auto x = fixed_point(m, seed, caps.symbols);
  auto horizon = std::min(caps.symbols, std::max<std::size_t>(n * 64, 1 << 16));
  return FactorCorpus(k_letters, n, {x.prefix(horizon)}, false);
}

// Corpus sampled from a prefix of an arbitrary word; never certified.
inline FactorCorpus sampled_corpus(std::size_t alphabet_size, Word prefix, std::size_t n) {
  return FactorCorpus(alphabet_size, n, {std::move(prefix)}, false);
}

}  // namespace morphic
