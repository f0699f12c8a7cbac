#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <string>
#include <unordered_set>
#include <vector>

#include "morphic/alphabet.hpp"
#include "morphic/fixed_point.hpp"
#include "morphic/morphism.hpp"

namespace morphic {

// F_{≤n}(x) stored as a prefix tree of the length-n factors.  Every shorter
// factor of an infinite word is a prefix of a length-n factor, so a node at
// depth k < n is exactly a factor of length k.
class FactorSet {
 public:
  FactorSet() = default;

  FactorSet(std::size_t alphabet_size, std::size_t max_length)
      : k_(alphabet_size), n_(max_length), child_(alphabet_size, kNone) {}

  std::size_t max_length() const noexcept { return n_; }
  std::size_t alphabet_size() const noexcept { return k_; }
  std::size_t node_count() const noexcept { return child_.size() / k_; }

  void insert(WordView w) {
    std::int32_t node = 0;
    for (Letter c : w) {
      auto& slot = child_[static_cast<std::size_t>(node) * k_ + c];
      if (slot == kNone) {
        slot = static_cast<std::int32_t>(node_count());
        child_.insert(child_.end(), k_, kNone);
      }
      node = child_[static_cast<std::size_t>(node) * k_ + c];
    }
  }

  bool contains(WordView w) const { return find(w) != kNone; }

  // Letters c with w·c a factor, in index order.
  std::vector<Letter> extensions(WordView w) const {
    std::vector<Letter> out;
    auto node = find(w);
    if (node == kNone) return out;
    for (std::size_t c = 0; c < k_; ++c)
      if (child_[static_cast<std::size_t>(node) * k_ + c] != kNone) out.push_back(static_cast<Letter>(c));
    return out;
  }

  std::vector<Letter> letters() const { return extensions(WordView()); }

  // All factors of length `len`, in index-lexicographic order.
  std::vector<Word> factors(std::size_t len) const {
    if (len > n_) throw DomainError("factor length exceeds the set's max length");
    std::vector<Word> out;
    Word cur;
    collect(0, len, cur, out);
    return out;
  }

  // Length-`len` prefix of the σ-least word of the subshift starting with b.
  Word greedy_extremal(Letter b, const TotalOrder& order, std::size_t len) const {
    if (len > n_) throw DomainError("greedy_extremal: length exceeds the set's max length");
    if (len == 0) return {};
    Word w{b};
    auto node = find(w);
    if (node == kNone) throw DomainError("greedy_extremal: start letter does not occur");
    while (w.size() < len) {
      bool moved = false;
      for (Letter c : order.ascending()) {
        auto next = child_[static_cast<std::size_t>(node) * k_ + c];
        if (next == kNone) continue;
        w.push_back(c);
        node = next;
        moved = true;
        break;
      }
      if (!moved) throw InconsistencyError("greedy_extremal: factor without right extension");
    }
    return w;
  }

 private:
  static constexpr std::int32_t kNone = -1;

  std::int32_t find(WordView w) const {
    if (w.size() > n_) return kNone;
    std::int32_t node = 0;
    for (Letter c : w) {
      if (c >= k_) return kNone;
      node = child_[static_cast<std::size_t>(node) * k_ + c];
      if (node == kNone) return kNone;
    }
    return node;
  }

  void collect(std::int32_t node, std::size_t len, Word& cur, std::vector<Word>& out) const {
    if (cur.size() == len) {
      out.push_back(cur);
      return;
    }
    for (std::size_t c = 0; c < k_; ++c) {
      auto next = child_[static_cast<std::size_t>(node) * k_ + c];
      if (next == kNone) continue;
      cur.push_back(static_cast<Letter>(c));
      collect(next, len, cur, out);
      cur.pop_back();
    }
  }

  std::size_t k_ = 1;
  std::size_t n_ = 0;
  std::vector<std::int32_t> child_;
};

// The length-n factors of f^ω(seed): the least set holding the length-n
// prefix and every length-n window of f(v) for each member v.
inline std::unordered_set<Word, WordHash> factor_closure(const Morphism& m, Letter seed, std::size_t n,
                                                        std::size_t work_budget) {
  m.require_endomorphism("build_factors");
  if (!m.is_non_erasing())
    throw DomainError("build_factors: morphism is erasing; factor closure needs a non-erasing morphism");
  std::unordered_set<Word, WordHash> seen;
  if (n == 0) {
    seen.insert(Word{});
    return seen;
  }
  auto x = fixed_point(m, seed);
  std::deque<Word> frontier;
  auto start = x.prefix(n);
  seen.insert(start);
  frontier.push_back(std::move(start));
  std::size_t work = 0;
  Word img;
  while (!frontier.empty()) {
    if (++work > work_budget)
      throw ResourceError("build_factors: work budget of " + std::to_string(work_budget) +
                          " expansions exceeded at length " + std::to_string(n));
    auto v = std::move(frontier.front());
    frontier.pop_front();
    img.clear();
    apply_into(m, v, img);
    for (std::size_t i = 0; i + n <= img.size(); ++i) {
      Word w(img.begin() + static_cast<std::ptrdiff_t>(i), img.begin() + static_cast<std::ptrdiff_t>(i + n));
      if (seen.insert(w).second) frontier.push_back(std::move(w));
    }
  }
  return seen;
}

inline FactorSet build_factors(const Morphism& m, Letter seed, std::size_t n,
                               std::size_t work_budget = 1'000'000) {
  FactorSet fs(m.source().size(), n);
  for (const auto& w : factor_closure(m, seed, n, work_budget)) fs.insert(w);
  return fs;
}

// The σ-least length-n factor starting with b, by exhaustive scan.
inline Word brute_force_min(const FactorSet& fs, Letter b, const TotalOrder& order, std::size_t n) {
  Word best;
  for (auto& w : fs.factors(n)) {
    if (w.empty() || w.front() != b) continue;
    if (best.empty() || order.compare(w, best) == Comparison::Less) best = w;
  }
  if (best.empty() && n > 0) throw DomainError("brute_force_min: start letter does not occur");
  return best;
}

}  // namespace morphic
