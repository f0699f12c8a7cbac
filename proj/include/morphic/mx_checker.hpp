#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "morphic/caps.hpp"
#include "morphic/factor_corpus.hpp"

namespace morphic {

// Lower bound on the longest common prefix of f(y) over the y ∈ S_x that
// start with `letter`.  Once `finalized` it is the exact lcp.
struct ConePrefix {
  Letter letter = 0;
  Word q;
  bool finalized = false;
};

enum class MxVerdict { InMx, NotInMx, Unknown };

inline const char* to_string(MxVerdict v) {
  switch (v) {
    case MxVerdict::InMx: return "InMx";
    case MxVerdict::NotInMx: return "NotInMx";
    case MxVerdict::Unknown: return "Unknown";
  }
  return "?";
}

struct MxReport {
  MxVerdict verdict = MxVerdict::Unknown;
  std::map<Letter, Word> witnesses;                 // InMx
  std::optional<std::pair<Letter, Letter>> violation;  // NotInMx, ordered by index
  std::string note;
  std::size_t horizon_used = 0;
  std::vector<ConePrefix> cones;
};

namespace detail {

// Cone prefixes of f over the length-h factors in `corpus`.
inline std::vector<ConePrefix> cone_prefixes(const Morphism& f, const FactorCorpus& corpus, std::size_t h) {
  const auto letters = corpus.letters();
  std::vector<ConePrefix> cones(f.source().size());
  std::vector<bool> started(f.source().size(), false);
  for (const auto& t : corpus.texts()) {
    for (std::size_t i = 0; i + h <= t.size(); ++i) {
      auto& c = cones[t[i]];
      WordView w(t.data() + i, h);
      if (!started[t[i]]) {
        c.letter = t[i];
        c.q = apply(f, w);
        started[t[i]] = true;
        continue;
      }
      std::size_t k = 0;
      for (Letter a : w) {
        if (k >= c.q.size()) break;
        for (Letter x : f.image(a)) {
          if (k >= c.q.size()) break;
          if (x != c.q[k]) {
            c.q.resize(k);
            break;
          }
          ++k;
        }
      }
      if (k < c.q.size()) c.q.resize(k);
    }
  }
  // Finalized iff two images extend q with different letters.
  std::vector<std::optional<Letter>> seen(cones.size());
  for (const auto& t : corpus.texts()) {
    for (std::size_t i = 0; i + h <= t.size(); ++i) {
      auto& c = cones[t[i]];
      if (c.finalized) continue;
      std::size_t k = 0;
      std::optional<Letter> next;
      for (std::size_t j = i; j < i + h && !next; ++j) {
        const auto& img = f.image(t[j]);
        if (k + img.size() > c.q.size()) next = img[c.q.size() - k];
        k += img.size();
      }
      if (!next) continue;
      if (!seen[t[i]]) seen[t[i]] = next;
      else if (*seen[t[i]] != *next) c.finalized = true;
    }
  }
  std::vector<ConePrefix> out;
  for (Letter b : letters) out.push_back(cones[b]);
  return out;
}

inline std::optional<std::size_t> divergence(WordView a, WordView b) {
  auto l = common_prefix_length(a, b);
  if (l < a.size() && l < b.size()) return l;
  return std::nullopt;
}

}  // namespace detail

// Semi-decision of f ∈ M_x for x = gen^ω(seed).  The factor horizon doubles
// from 8 up to `horizon_cap`.
inline MxReport check_mx(const Morphism& f, const Morphism& gen, Letter seed,
                         std::size_t horizon_cap = 4096, const Caps& caps = {}) {
  MxReport report;
  if (!(f.source() == gen.source()))
    throw DomainError("check_mx: morphism source alphabet differs from the word's alphabet");
  if (!f.is_non_erasing()) {
    report.verdict = MxVerdict::NotInMx;
    report.note = "morphism is erasing; a morphism in M_x is necessarily non-erasing";
    return report;
  }
  for (std::size_t h = std::min<std::size_t>(8, horizon_cap); h <= horizon_cap; h *= 2) {
    auto corpus = fixed_point_corpus(gen, seed, h, caps);
    auto cones = detail::cone_prefixes(f, corpus, h);
    report.cones = cones;
    report.horizon_used = h;

    bool all_diverge = true;
    for (std::size_t i = 0; i < cones.size() && all_diverge; ++i)
      for (std::size_t j = i + 1; j < cones.size(); ++j)
        if (!detail::divergence(cones[i].q, cones[j].q)) {
          all_diverge = false;
          break;
        }
    if (all_diverge) {
      report.verdict = MxVerdict::InMx;
      for (std::size_t i = 0; i < cones.size(); ++i) {
        std::size_t reach = 0;
        for (std::size_t j = 0; j < cones.size(); ++j)
          if (i != j) reach = std::max(reach, *detail::divergence(cones[i].q, cones[j].q));
        const auto& q = cones[i].q;
        report.witnesses[cones[i].letter] = Word(q.begin(), q.begin() + static_cast<std::ptrdiff_t>(reach + 1));
      }
      return report;
    }

    // A finalized q_a that is a prefix of q_b forces every admissible p_a and
    // p_b to be prefixes of the true lcp for b.
    for (const auto& a : cones) {
      if (!a.finalized) continue;
      for (const auto& b : cones) {
        if (a.letter == b.letter || !starts_with(b.q, a.q)) continue;
        report.verdict = MxVerdict::NotInMx;
        report.violation = std::minmax(a.letter, b.letter);
        report.note = "cone prefix of '" + f.source().token(a.letter) +
                      "' is final and is a prefix of the cone prefix of '" + f.source().token(b.letter) + "'";
        return report;
      }
    }
  }
  report.verdict = MxVerdict::Unknown;
  report.note = "no verdict within a factor horizon of " + std::to_string(report.horizon_used);
  return report;
}

inline MxReport check_mx(const Morphism& f, Letter seed, std::size_t horizon_cap = 4096, const Caps& caps = {}) {
  return check_mx(f, f, seed, horizon_cap, caps);
}

// Witnesses p_0, p_1 for a binary morphism with f(01) ≠ f(10), valid for
// every x.  u = f(0), v = f(1).
inline std::map<Letter, Word> binary_mx_witnesses(const Morphism& m) {
  if (m.source().size() != 2) throw DomainError("binary_mx_witnesses: source alphabet is not binary");
  const auto& u = m.image(0);
  const auto& v = m.image(1);
  if (concat(u, v) == concat(v, u))
    throw DomainError("binary_mx_witnesses: f(01) = f(10), the fixed point is purely periodic");
  std::map<Letter, Word> out;
  std::size_t i = 0;
  while (i < u.size() && u[i] == v[i % v.size()]) ++i;
  if (i < u.size()) {
    // Case 1: u = v^n p a s, v = p b t.
    Word p1(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(i));
    Word p0 = p1;
    p0.push_back(u[i]);
    p1.push_back(v[i % v.size()]);
    out[0] = std::move(p0);
    out[1] = std::move(p1);
    return out;
  }
  // Case 2: u = v^n x, v = x y.
  const std::size_t n = u.size() / v.size();
  const std::size_t xl = u.size() % v.size();
  Word x(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(xl));
  Word y(v.begin() + static_cast<std::ptrdiff_t>(xl), v.end());
  auto xy = concat(x, y);
  auto yx = concat(y, x);
  auto j = common_prefix_length(xy, yx);
  Word base;
  for (std::size_t r = 0; r < n; ++r) base.insert(base.end(), xy.begin(), xy.end());
  base.insert(base.end(), x.begin(), x.end());
  base.insert(base.end(), xy.begin(), xy.begin() + static_cast<std::ptrdiff_t>(j));
  Word p0 = base, p1 = base;
  p0.push_back(xy[j]);
  p1.push_back(yx[j]);
  out[0] = std::move(p0);
  out[1] = std::move(p1);
  return out;
}

}  // namespace morphic
