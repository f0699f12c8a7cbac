#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "morphic/lazy_word.hpp"
#include "morphic/morphism.hpp"

namespace morphic {

// Mortal / bounded / growing letters of an endomorphism.
//
//   mortal   ⊆ bounded,  bounded ∪ growing = A,  bounded ∩ growing = ∅
//   f^t(b) = ε for every mortal b, with t minimal (t = 0 when none are mortal)
struct LetterClasses {
  std::vector<bool> mortal;
  std::vector<bool> growing;
  std::size_t mortality_exponent = 0;

  bool is_mortal(Letter a) const { return mortal[a]; }
  bool is_growing(Letter a) const { return growing[a]; }
  bool is_bounded(Letter a) const { return !growing[a]; }

  bool word_is_mortal(WordView w) const {
    return std::all_of(w.begin(), w.end(), [&](Letter c) { return mortal[c]; });
  }

  std::vector<Letter> letters_where(const std::vector<bool>& mask, bool value) const {
    std::vector<Letter> out;
    for (std::size_t a = 0; a < mask.size(); ++a)
      if (mask[a] == value) out.push_back(static_cast<Letter>(a));
    return out;
  }
  std::vector<Letter> mortal_letters() const { return letters_where(mortal, true); }
  std::vector<Letter> growing_letters() const { return letters_where(growing, true); }
  std::vector<Letter> bounded_letters() const { return letters_where(growing, false); }
};

// A letter is growing iff it reaches, in the occurrence graph restricted to
// immortal letters, a letter on a cycle whose image holds at least two
// immortal letters.
inline LetterClasses classify(const Morphism& m) {
  m.require_endomorphism("classify");
  const std::size_t n = m.source().size();
  LetterClasses lc;
  lc.mortal.assign(n, false);
  lc.growing.assign(n, false);

  // Least fixpoint of M = {a : m(a) ∈ M*}; level(a) = least i with m^i(a) = ε.
  std::vector<std::size_t> level(n, 0);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t a = 0; a < n; ++a) {
      if (lc.mortal[a]) continue;
      const auto& img = m.image(static_cast<Letter>(a));
      if (!lc.word_is_mortal(img)) continue;
      std::size_t lv = 1;
      for (Letter c : img) lv = std::max(lv, level[c] + 1);
      lc.mortal[a] = true;
      level[a] = lv;
      changed = true;
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    if (lc.mortal[a]) lc.mortality_exponent = std::max(lc.mortality_exponent, level[a]);

  std::vector<std::vector<Letter>> succ(n);
  std::vector<std::size_t> immortal_count(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    if (lc.mortal[a]) continue;
    for (Letter c : m.image(static_cast<Letter>(a))) {
      if (lc.mortal[c]) continue;
      ++immortal_count[a];
      succ[a].push_back(c);
    }
  }

  auto reachable_from = [&](std::size_t src, bool include_self) {
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack;
    if (include_self) {
      seen[src] = true;
      stack.push_back(src);
    } else {
      for (Letter c : succ[src])
        if (!seen[c]) seen[c] = true, stack.push_back(c);
    }
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (Letter c : succ[v])
        if (!seen[c]) seen[c] = true, stack.push_back(c);
    }
    return seen;
  };

  std::vector<bool> expanding(n, false);
  for (std::size_t d = 0; d < n; ++d) {
    if (lc.mortal[d] || immortal_count[d] < 2) continue;
    expanding[d] = reachable_from(d, false)[d];
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (lc.mortal[a]) continue;
    auto seen = reachable_from(a, true);
    for (std::size_t d = 0; d < n; ++d)
      if (seen[d] && expanding[d]) {
        lc.growing[a] = true;
        break;
      }
  }
  return lc;
}

// Finite fixed points f^t(a) for every anchor a with f(a) = x a y, x, y mortal.
struct FiniteFixedPoint {
  Letter anchor;
  Word word;
};

inline std::vector<FiniteFixedPoint> finite_fixed_points(const Morphism& m, const LetterClasses& lc) {
  std::vector<FiniteFixedPoint> out;
  for (std::size_t ai = 0; ai < m.source().size(); ++ai) {
    auto a = static_cast<Letter>(ai);
    if (lc.mortal[a]) continue;
    const auto& img = m.image(a);
    std::size_t immortal = 0;
    bool has_self = false;
    for (Letter c : img) {
      if (lc.mortal[c]) continue;
      ++immortal;
      has_self = has_self || c == a;
    }
    if (immortal != 1 || !has_self) continue;
    auto w = power_apply(m, Word{a}, lc.mortality_exponent);
    if (apply(m, w) != w)
      throw InconsistencyError("finite fixed point check failed for anchor '" +
                               m.source().token(a) + "'");
    out.push_back({a, std::move(w)});
  }
  return out;
}

// Head–Lando shape of a fixed point t = f(t):
//   FiniteFixedPoints: t ∈ G_f^ω (parse of the inspected prefix into G_f words)
//   Anchored:          t = w f^{t-1}(x)⋯f(x) x a y f(y) f²(y)⋯ with w ∈ G_f*,
//                      f(a) = x a y, x mortal, y not mortal
//   Undetermined:      neither shape certified within `depth` symbols
struct HeadLandoForm {
  enum class Kind { FiniteFixedPoints, Anchored, Undetermined };
  Kind kind = Kind::Undetermined;
  std::size_t depth = 0;
  std::vector<Word> blocks;  // FiniteFixedPoints; the last block may be cut at depth
  Word prefix;               // Anchored: the G_f* part w
  Letter anchor = 0;         // Anchored
  Word left;                 // x
  Word right;                // y
  std::size_t anchor_position = 0;
};

namespace detail {

struct AnchorCandidate {
  Letter anchor;
  Word left, right;
  Word lead;  // f^{t-1}(x) ⋯ f(x) x a
};

inline std::vector<AnchorCandidate> anchors(const Morphism& m, const LetterClasses& lc) {
  std::vector<AnchorCandidate> out;
  for (std::size_t ai = 0; ai < m.source().size(); ++ai) {
    auto a = static_cast<Letter>(ai);
    const auto& img = m.image(a);
    auto first = std::find_if(img.begin(), img.end(), [&](Letter c) { return !lc.mortal[c]; });
    if (first == img.end() || *first != a) continue;
    Word left(img.begin(), first);
    Word right(first + 1, img.end());
    if (lc.word_is_mortal(right)) continue;
    Word lead;
    for (std::size_t i = lc.mortality_exponent; i-- > 0;) {
      auto part = power_apply(m, left, i);
      lead.insert(lead.end(), part.begin(), part.end());
    }
    lead.push_back(a);
    out.push_back({a, std::move(left), std::move(right), std::move(lead)});
  }
  return out;
}

}  // namespace detail

inline HeadLandoForm classify_fixed_point_form(const Morphism& m, const LazyWord& t, std::size_t depth) {
  m.require_endomorphism("classify_fixed_point_form");
  HeadLandoForm form;
  form.depth = depth;
  if (depth == 0) return form;
  auto pre = t.prefix(depth);
  m.source().check(pre);

  auto image = apply(m, pre);
  auto check = std::min(image.size(), depth);
  if (!std::equal(image.begin(), image.begin() + static_cast<std::ptrdiff_t>(check), pre.begin()))
    throw DomainError("classify_fixed_point_form: word is not a fixed point (f(t) and t differ within " +
                      std::to_string(depth) + " symbols)");

  auto lc = classify(m);
  auto gwords = finite_fixed_points(m, lc);
  std::vector<Word> g;
  for (auto& e : gwords)
    if (std::find(g.begin(), g.end(), e.word) == g.end()) g.push_back(e.word);
  std::sort(g.begin(), g.end(), [](const Word& a, const Word& b) { return a.size() > b.size(); });
  auto cands = detail::anchors(m, lc);

  auto matches_anchor = [&](std::size_t pos, const detail::AnchorCandidate& c) {
    std::size_t i = pos;
    for (Letter x : c.lead) {
      if (i >= depth) return true;
      if (pre[i++] != x) return false;
    }
    if (i >= depth) return true;
    auto tail = limit_word(m, c.right);
    auto need = depth - i;
    auto have = tail.view(need);
    return std::equal(have.begin(), have.end(), pre.begin() + static_cast<std::ptrdiff_t>(i));
  };

  // Depth-first parse over G_f words, longest first, trying an anchored tail
  // at every reachable position.  Failed positions are memoized.
  std::vector<bool> dead(depth + 1, false);
  struct Frame {
    std::size_t pos;
    std::size_t next;
  };
  std::vector<Frame> stack{{0, 0}};
  std::vector<std::size_t> chosen;
  while (!stack.empty()) {
    auto& f = stack.back();
    if (f.pos >= depth) {
      form.kind = HeadLandoForm::Kind::FiniteFixedPoints;
      std::size_t p = 0;
      for (auto gi : chosen) {
        auto len = std::min(g[gi].size(), depth - p);
        form.blocks.emplace_back(g[gi].begin(), g[gi].begin() + static_cast<std::ptrdiff_t>(len));
        p += g[gi].size();
      }
      return form;
    }
    if (f.next == 0) {
      for (const auto& c : cands) {
        if (!matches_anchor(f.pos, c)) continue;
        form.kind = HeadLandoForm::Kind::Anchored;
        form.prefix.assign(pre.begin(), pre.begin() + static_cast<std::ptrdiff_t>(f.pos));
        form.anchor = c.anchor;
        form.left = c.left;
        form.right = c.right;
        form.anchor_position = f.pos + c.lead.size() - 1;
        return form;
      }
    }
    bool advanced = false;
    while (f.next < g.size()) {
      const auto& w = g[f.next++];
      auto len = std::min(w.size(), depth - f.pos);
      if (!std::equal(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(len),
                      pre.begin() + static_cast<std::ptrdiff_t>(f.pos)))
        continue;
      auto np = std::min(f.pos + w.size(), depth);
      if (dead[np]) continue;
      chosen.push_back(f.next - 1);
      stack.push_back({np, 0});
      advanced = true;
      break;
    }
    if (advanced) continue;
    dead[f.pos] = true;
    stack.pop_back();
    if (!chosen.empty() && chosen.size() >= stack.size()) chosen.pop_back();
  }
  return form;
}

}  // namespace morphic
