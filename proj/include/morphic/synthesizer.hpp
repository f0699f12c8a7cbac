#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "morphic/caps.hpp"
#include "morphic/extremal.hpp"
#include "morphic/letter_classes.hpp"
#include "morphic/mx_checker.hpp"

namespace morphic {

struct ExtremalState {
  Letter letter = 0;
  TotalOrder order;
  friend bool operator==(const ExtremalState& a, const ExtremalState& b) {
    return a.letter == b.letter && a.order == b.order;
  }
};

// l_{from} = u · φ(s_{to}) with u a non-empty suffix of φ(to.letter) that
// starts with from.letter; v = from.letter⁻¹ u.
struct TransportStep {
  ExtremalState from;
  ExtremalState to;
  Word u;
  Word v;
  std::size_t verified_length = 0;
};

// s_{start} = u f^k(s_{a,σ}) and s_{a,σ} = v f^m(s_{a,σ}), (a, σ) = steps[k].from.
struct CycleDecomposition {
  std::vector<TransportStep> steps;
  std::size_t k = 0;
  std::size_t m = 0;
  Word u;
  Word v;
};

enum class Construction { FixedPointCase, LimitCase, UltimatelyPeriodic };

inline const char* to_string(Construction c) {
  switch (c) {
    case Construction::FixedPointCase: return "FixedPointCase";
    case Construction::LimitCase: return "LimitCase";
    case Construction::UltimatelyPeriodic: return "UltimatelyPeriodic";
  }
  return "?";
}

// expand = prepend · coding(drop(generator^ω(seed)))
struct MorphicRep {
  Word prepend;
  std::size_t drop = 0;
  Letter seed = 0;
  Morphism generator;
  Morphism coding;
  Construction construction = Construction::FixedPointCase;
};

inline LazyWord expand(const MorphicRep& rep, std::size_t cap = kDefaultSymbolCap) {
  auto base = fixed_point(rep.generator, rep.seed, cap);
  return prepend(rep.prepend, code(rep.coding, drop(rep.drop, base)));
}

// x <_σ y iff p_x <_ρ p_y; letters without a witness follow in index order.
inline TotalOrder pullback_order(const std::map<Letter, Word>& witnesses, const TotalOrder& rho,
                                 std::size_t alphabet_size) {
  std::vector<Letter> with, without;
  for (std::size_t a = 0; a < alphabet_size; ++a)
    (witnesses.count(static_cast<Letter>(a)) ? with : without).push_back(static_cast<Letter>(a));
  std::sort(with.begin(), with.end(), [&](Letter a, Letter b) {
    auto c = rho.compare(witnesses.at(a), witnesses.at(b));
    if (c == Comparison::PrefixIncomparable || c == Comparison::Equal)
      throw DomainError("pullback order: witnesses are not pairwise prefix-incomparable");
    return c == Comparison::Less;
  });
  with.insert(with.end(), without.begin(), without.end());
  return TotalOrder(std::move(with));
}

namespace detail {

inline std::string state_name(const Alphabet& a, const ExtremalState& s) {
  return "(" + a.token(s.letter) + ", " + s.order.format(a) + ")";
}

inline MxReport require_in_mx(const Morphism& phi, const Morphism& f, Letter seed, const Caps& caps,
                              const char* what) {
  auto r = check_mx(phi, f, seed, caps.mx_horizon_cap, caps);
  if (r.verdict != MxVerdict::InMx)
    throw DomainError(std::string(what) + ": morphism is not in M_x (verdict " + to_string(r.verdict) +
                      (r.note.empty() ? "" : "; " + r.note) + ")");
  return r;
}

}  // namespace detail

// One desubstitution step l_{b,ρ,φ(x)} = u φ(s_{a,σ,x}).  `x` answers for x,
// `y` for φ(x) (the same oracle when φ = f).
inline TransportStep transport(const Morphism& phi, ExtremalOracle& x, ExtremalOracle& y,
                               const ExtremalState& st, const std::map<Letter, Word>& witnesses,
                               const Caps& caps = {}) {
  const auto sigma = pullback_order(witnesses, st.order, phi.source().size());
  struct Candidate {
    Letter a;
    Word u;
  };
  std::vector<Candidate> cands;
  for (Letter a : x.letters()) {
    const auto& img = phi.image(a);
    for (std::size_t i = 0; i < img.size(); ++i)
      if (img[i] == st.letter) cands.push_back({a, Word(img.begin() + static_cast<std::ptrdiff_t>(i), img.end())});
  }

  auto matches = [&](const Candidate& c, std::size_t len) {
    auto target = y.extremal(st.letter, st.order, len);
    Word got(c.u.begin(), c.u.begin() + static_cast<std::ptrdiff_t>(std::min(len, c.u.size())));
    if (got.size() < len) {
      auto la = x.extremal(c.a, sigma, len - got.size() + 1);
      for (std::size_t i = 1; i < la.size() && got.size() < len; ++i) {
        const auto& img = phi.image(la[i]);
        got.insert(got.end(), img.begin(), img.end());
      }
      got.resize(std::min(got.size(), len));
    }
    return got == target;
  };

  std::size_t len = std::min(caps.verify_start, caps.verify_cap);
  std::vector<Candidate> alive = cands;
  while (true) {
    std::vector<Candidate> next;
    for (auto& c : alive)
      if (matches(c, len)) next.push_back(c);
    alive = std::move(next);
    if (alive.size() <= 1 || len >= caps.verify_cap) break;
    len = std::min(len * 4, caps.verify_cap);
  }
  const auto& A = phi.target();
  if (alive.empty())
    throw InconsistencyError("transport from " + detail::state_name(A, st) +
                             ": no candidate (a, u) matches the extremal word at length " + std::to_string(len));
  if (alive.size() > 1) {
    std::string list;
    for (auto& c : alive)
      list += (list.empty() ? "" : ", ") + std::string("(") + phi.source().token(c.a) + ", " + A.format(c.u) + ")";
    throw AmbiguityError("transport from " + detail::state_name(A, st) + ": " + std::to_string(alive.size()) +
                         " candidates survive at length " + std::to_string(len) + ": " + list);
  }
  TransportStep step;
  step.from = st;
  step.to = {alive[0].a, sigma};
  step.u = alive[0].u;
  step.v.assign(step.u.begin() + 1, step.u.end());
  step.verified_length = len;
  return step;
}

// Iterates transport under f until a state repeats.
inline CycleDecomposition find_cycle(const Morphism& f, ExtremalOracle& x, const ExtremalState& start,
                                     const std::map<Letter, Word>& witnesses, const Caps& caps = {}) {
  CycleDecomposition cd;
  std::vector<ExtremalState> states{start};
  while (true) {
    cd.steps.push_back(transport(f, x, x, states.back(), witnesses, caps));
    const auto& next = cd.steps.back().to;
    auto it = std::find(states.begin(), states.end(), next);
    if (it != states.end()) {
      cd.k = static_cast<std::size_t>(it - states.begin());
      cd.m = states.size() - cd.k;
      break;
    }
    states.push_back(next);
  }
  for (std::size_t i = 0; i < cd.k; ++i) {
    auto part = power_apply(f, cd.steps[i].v, i);
    cd.u.insert(cd.u.end(), part.begin(), part.end());
  }
  for (std::size_t i = 0; i < cd.m; ++i) {
    auto part = power_apply(f, cd.steps[cd.k + i].v, i);
    cd.v.insert(cd.v.end(), part.begin(), part.end());
  }
  return cd;
}

namespace detail {

inline std::string fresh_token(const Alphabet& a, const std::string& prefix) {
  std::string name = prefix + "seed";
  for (std::size_t i = 2; a.contains(name); ++i) name = prefix + "seed" + std::to_string(i);
  return name;
}

// Original alphabet plus one fresh letter (the last index); `images` covers
// the original letters, `fresh_image` is the fresh letter's image.  The
// coding fixes original letters and sends the fresh one to `fresh_code`.
inline std::pair<Morphism, Morphism> extend_with_seed(const Alphabet& a, const std::vector<Word>& images,
                                                      Word fresh_image, Letter fresh_code,
                                                      const std::string& prefix) {
  auto tokens = a.tokens();
  tokens.push_back(fresh_token(a, prefix));
  Alphabet ext(std::move(tokens));
  auto ims = images;
  ims.push_back(std::move(fresh_image));
  std::vector<Word> code;
  for (std::size_t c = 0; c < a.size(); ++c) code.push_back(Word{static_cast<Letter>(c)});
  code.push_back(Word{fresh_code});
  return {Morphism(ext, std::move(ims)), Morphism(ext, a, std::move(code))};
}

// Smallest period q, then smallest preperiod p, with t[i] = t[i+q] for
// p ≤ i < |t| - q and p + 2q ≤ |t|.
inline std::optional<std::pair<std::size_t, std::size_t>> detect_period(WordView t) {
  const std::size_t n = t.size();
  for (std::size_t q = 1; 2 * q <= n; ++q) {
    std::size_t p = n - q;
    while (p > 0 && t[p - 1] == t[p - 1 + q]) --p;
    if (p + 2 * q <= n) return std::make_pair(p, q);
  }
  return std::nullopt;
}

inline void verify_rep(const MorphicRep& rep, ExtremalOracle& oracle, Letter b, const TotalOrder& rho,
                       std::size_t n, const Caps& caps) {
  auto want = oracle.extremal(b, rho, n);
  auto got = expand(rep, caps.symbols).prefix(n);
  if (got != want) {
    auto i = common_prefix_length(got, want);
    throw VerificationError("synthesized representation differs from the extremal word at index " +
                            std::to_string(i) + " of " + std::to_string(n));
  }
}

inline MorphicRep build_rep(const Morphism& f, ExtremalOracle& x, Letter b, const TotalOrder& rho,
                            const CycleDecomposition& cd, const Caps& caps) {
  const auto& A = f.source();
  Word w{b};
  w.insert(w.end(), cd.u.begin(), cd.u.end());
  auto xhat = power_apply(f, cd.v, cd.k);
  auto F = power(f, cd.m);
  MorphicRep rep;

  if (!xhat.empty()) {
    auto [gen, coding] = extend_with_seed(A, F.images(), Word{}, b, caps.seed_prefix);
    Letter s = static_cast<Letter>(A.size());
    auto ims = gen.images();
    ims[s] = Word{s};
    ims[s].insert(ims[s].end(), xhat.begin(), xhat.end());
    rep.generator = Morphism(gen.source(), std::move(ims));
    rep.coding = std::move(coding);
    rep.seed = s;
    if (cd.u.empty()) {
      rep.drop = 0;
    } else {
      rep.prepend = w;
      rep.drop = 1;
    }
    rep.construction = Construction::LimitCase;
    return rep;
  }

  // t = F(t) with l_{b,ρ} = w t.
  for (std::size_t depth = std::min(caps.form_depth_start, caps.verify_cap);; depth = std::min(depth * 4, caps.verify_cap)) {
    auto l = x.extremal(b, rho, w.size() + depth);
    Word t(l.begin() + static_cast<std::ptrdiff_t>(w.size()), l.end());
    auto form = classify_fixed_point_form(F, LazyWord::finite(t), depth);
    if (form.kind == HeadLandoForm::Kind::Anchored) {
      rep.prepend = concat(w, form.prefix);
      rep.seed = form.anchor;
      rep.generator = F;
      rep.coding = Morphism::identity(A);
      rep.construction = Construction::FixedPointCase;
      return rep;
    }
    if (form.kind == HeadLandoForm::Kind::FiniteFixedPoints) {
      const std::size_t window = std::max(caps.rep_verify, std::size_t{64});
      auto lw = x.extremal(b, rho, w.size() + 3 * window);
      WordView tv = WordView(lw).subspan(w.size());
      auto pq = detect_period(tv.first(window));
      if (!pq)
        throw ResourceError("ultimately periodic tail: no period found within " + std::to_string(window) + " symbols");
      auto [p, q] = *pq;
      for (std::size_t i = p; i + q < tv.size(); ++i)
        if (tv[i] != tv[i + q])
          throw ResourceError("ultimately periodic tail: period " + std::to_string(q) +
                              " fails verification at index " + std::to_string(i));
      Word period(tv.begin() + static_cast<std::ptrdiff_t>(p), tv.begin() + static_cast<std::ptrdiff_t>(p + q));
      std::vector<Word> ident;
      for (std::size_t c = 0; c < A.size(); ++c) ident.push_back(Word{static_cast<Letter>(c)});
      auto [gen, coding] = extend_with_seed(A, ident, Word{}, b, caps.seed_prefix);
      Letter s = static_cast<Letter>(A.size());
      auto ims = gen.images();
      ims[s] = Word{s};
      ims[s].insert(ims[s].end(), period.begin(), period.end());
      rep.generator = Morphism(gen.source(), std::move(ims));
      rep.coding = std::move(coding);
      rep.seed = s;
      rep.prepend = concat(w, tv.first(p));
      rep.drop = 1;
      rep.construction = Construction::UltimatelyPeriodic;
      return rep;
    }
    if (depth >= caps.verify_cap)
      throw ResourceError("fixed point form undetermined within " + std::to_string(depth) + " symbols");
  }
}

}  // namespace detail

// Verified representation of l_{b,ρ,x} for x = f^ω(seed) with f ∈ M_x.
inline MorphicRep synthesize(const Morphism& f, Letter seed, Letter b, const TotalOrder& rho, const Caps& caps = {},
                             CycleDecomposition* cycle_out = nullptr) {
  auto mx = detail::require_in_mx(f, f, seed, caps, "synthesize");
  ExtremalOracle x({f, seed, std::nullopt}, caps);
  if (!x.occurs(b)) throw DomainError("synthesize: letter '" + f.source().token(b) + "' does not occur");
  auto cd = find_cycle(f, x, {b, rho}, mx.witnesses, caps);
  auto rep = detail::build_rep(f, x, b, rho, cd, caps);
  detail::verify_rep(rep, x, b, rho, caps.rep_verify, caps);
  if (cycle_out) *cycle_out = std::move(cd);
  return rep;
}

// Verified representation of l_{b,ρ,g(x)}: one transport step through g,
// then synthesize under f.  The resulting output morphism is g composed with
// the coding and need not be letter-to-letter.
inline MorphicRep synthesize_coded(const Morphism& f, const Morphism& g, Letter seed, Letter b,
                                   const TotalOrder& rho, const Caps& caps = {}) {
  if (!(g.source() == f.source()))
    throw DomainError("synthesize_coded: coding source alphabet differs from the word's alphabet");
  detail::require_in_mx(f, f, seed, caps, "synthesize_coded");
  auto gmx = detail::require_in_mx(g, f, seed, caps, "synthesize_coded (outer morphism)");
  ExtremalOracle x({f, seed, std::nullopt}, caps);
  ExtremalOracle y({f, seed, g}, caps);
  if (!y.occurs(b)) throw DomainError("synthesize_coded: letter '" + g.target().token(b) + "' does not occur");
  auto step = transport(g, x, y, {b, rho}, gmx.witnesses, caps);
  auto inner = synthesize(f, seed, step.to.letter, step.to.order, caps);

  MorphicRep rep;
  rep.seed = inner.seed;
  rep.generator = inner.generator;
  rep.coding = compose(g, inner.coding);
  rep.construction = inner.construction;
  rep.prepend = step.u;
  if (inner.prepend.empty()) {
    rep.drop = inner.drop + 1;
  } else {
    auto tail = apply(g, WordView(inner.prepend).subspan(1));
    rep.prepend.insert(rep.prepend.end(), tail.begin(), tail.end());
    rep.drop = inner.drop;
  }
  detail::verify_rep(rep, y, b, rho, caps.rep_verify, caps);
  return rep;
}

}  // namespace morphic
