#pragma once

#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "morphic/synthesizer.hpp"

namespace morphic {

// Text format:
//   alphabet: <tok> ...
//   target: <tok> ...             (optional; defaults to the alphabet)
//   rule <tok> -> <tok> ...       (one per letter)
//   seed: <tok>                   (optional)
// Representation files add
//   output-alphabet: <tok> ...
//   coding <tok> -> <tok> ...
//   prepend: <tok> ...
//   drop: <count>
// '#' starts a comment line.
struct ParseOptions {
  bool allow_erasing = false;
  // Tokens with this prefix are reserved for synthesized letters.
  std::string reserved_prefix = "@";
};

struct MorphismFile {
  Morphism morphism;
  std::optional<Letter> seed;
};

namespace detail {

struct Line {
  std::size_t number;
  std::string key;
  std::string rest;
};

inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

inline std::vector<Line> lex(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t n = 0;
  while (std::getline(in, raw)) {
    ++n;
    auto s = trim(raw);
    if (s.empty() || s[0] == '#') continue;
    auto colon = s.find(':');
    auto space = s.find_first_of(" \t");
    if (colon != std::string::npos && (space == std::string::npos || colon < space)) {
      out.push_back({n, s.substr(0, colon), trim(s.substr(colon + 1))});
    } else {
      auto head = s.substr(0, space);
      out.push_back({n, head, space == std::string::npos ? std::string() : trim(s.substr(space))});
    }
  }
  return out;
}

struct RuleSet {
  std::map<Letter, Word> images;
};

inline void parse_rule(const Line& l, const Alphabet& src, const Alphabet& dst, RuleSet& rs, bool allow_empty,
                       const char* what) {
  auto arrow = l.rest.find("->");
  if (arrow == std::string::npos) throw ParseError(std::string(what) + ": expected '<tok> -> <tok> ...'", l.number);
  auto lhs = split_tokens(l.rest.substr(0, arrow));
  auto rhs = split_tokens(l.rest.substr(arrow + 2));
  if (lhs.size() != 1) throw ParseError(std::string(what) + ": expected exactly one letter before '->'", l.number);
  if (!src.contains(lhs[0])) throw ParseError(std::string(what) + ": unknown letter '" + lhs[0] + "'", l.number);
  auto a = src.letter(lhs[0]);
  if (rs.images.count(a)) throw ParseError(std::string(what) + ": duplicate rule for '" + lhs[0] + "'", l.number);
  if (rhs.empty() && !allow_empty)
    throw ParseError(std::string(what) + ": empty image for '" + lhs[0] + "' (erasing rules need --allow-erasing)",
                     l.number);
  Word w;
  for (auto& t : rhs) {
    if (!dst.contains(t)) throw ParseError(std::string(what) + ": unknown letter '" + t + "' in image", l.number);
    w.push_back(dst.letter(t));
  }
  rs.images[a] = std::move(w);
}

inline std::vector<Word> complete(const RuleSet& rs, const Alphabet& src, const char* what) {
  std::vector<Word> out;
  for (std::size_t a = 0; a < src.size(); ++a) {
    auto it = rs.images.find(static_cast<Letter>(a));
    if (it == rs.images.end())
      throw ParseError(std::string(what) + ": no rule for letter '" + src.token(static_cast<Letter>(a)) + "'");
    out.push_back(it->second);
  }
  return out;
}

inline Alphabet parse_alphabet(const Line& l, const std::string& reserved) {
  auto toks = split_tokens(l.rest);
  if (toks.empty()) throw ParseError(l.key + ": no letters", l.number);
  for (auto& t : toks)
    if (!reserved.empty() && t.rfind(reserved, 0) == 0)
      throw ParseError(l.key + ": token '" + t + "' uses the reserved prefix '" + reserved + "'", l.number);
  try {
    return Alphabet(toks);
  } catch (const DomainError& e) {
    throw ParseError(l.key + ": " + e.what(), l.number);
  }
}

inline std::string join(const Alphabet& a, WordView w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += a.token(w[i]);
  }
  return out;
}

inline std::string join_tokens(const std::vector<std::string>& t) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) out += (i ? " " : "") + t[i];
  return out;
}

inline void print_rules(std::ostream& os, const char* keyword, const Morphism& m) {
  for (std::size_t a = 0; a < m.source().size(); ++a) {
    const auto& img = m.image(static_cast<Letter>(a));
    os << keyword << ' ' << m.source().token(static_cast<Letter>(a)) << " ->";
    if (!img.empty()) os << ' ' << join(m.target(), img);
    os << '\n';
  }
}

}  // namespace detail

inline MorphismFile parse_morphism(const std::string& text, const ParseOptions& opt = {}) {
  auto lines = detail::lex(text);
  std::optional<Alphabet> src, dst;
  std::vector<const detail::Line*> rules;
  std::optional<detail::Line> seed_line;
  for (const auto& l : lines) {
    if (l.key == "alphabet") {
      if (src) throw ParseError("duplicate 'alphabet:' line", l.number);
      src = detail::parse_alphabet(l, opt.reserved_prefix);
    } else if (l.key == "target") {
      if (dst) throw ParseError("duplicate 'target:' line", l.number);
      dst = detail::parse_alphabet(l, opt.reserved_prefix);
    } else if (l.key == "rule") {
      rules.push_back(&l);
    } else if (l.key == "seed") {
      if (seed_line) throw ParseError("duplicate 'seed:' line", l.number);
      seed_line = l;
    } else {
      throw ParseError("unknown directive '" + l.key + "'", l.number);
    }
  }
  if (!src) throw ParseError("missing 'alphabet:' line");
  if (!dst) dst = src;
  detail::RuleSet rs;
  for (auto* l : rules) detail::parse_rule(*l, *src, *dst, rs, opt.allow_erasing, "rule");
  MorphismFile mf{Morphism(*src, *dst, detail::complete(rs, *src, "rule")), std::nullopt};
  if (seed_line) {
    auto t = detail::split_tokens(seed_line->rest);
    if (t.size() != 1 || !src->contains(t[0])) throw ParseError("seed: expected one letter of the alphabet", seed_line->number);
    mf.seed = src->letter(t[0]);
  }
  return mf;
}

inline std::string print_morphism(const Morphism& m, std::optional<Letter> seed = std::nullopt) {
  std::ostringstream os;
  os << "alphabet: " << detail::join_tokens(m.source().tokens()) << '\n';
  if (!(m.target() == m.source())) os << "target: " << detail::join_tokens(m.target().tokens()) << '\n';
  detail::print_rules(os, "rule", m);
  if (seed) os << "seed: " << m.source().token(*seed) << '\n';
  return os.str();
}

inline std::string print_morphism(const MorphismFile& mf) { return print_morphism(mf.morphism, mf.seed); }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline MorphismFile load_morphism(const std::string& path, const ParseOptions& opt = {}) {
  return parse_morphism(read_file(path), opt);
}

inline std::string print_rep(const MorphicRep& rep) {
  std::ostringstream os;
  os << print_morphism(rep.generator, rep.seed);
  os << "output-alphabet: " << detail::join_tokens(rep.coding.target().tokens()) << '\n';
  detail::print_rules(os, "coding", rep.coding);
  os << "prepend:";
  if (!rep.prepend.empty()) os << ' ' << detail::join(rep.coding.target(), rep.prepend);
  os << '\n';
  os << "drop: " << rep.drop << '\n';
  os << "construction: " << to_string(rep.construction) << '\n';
  return os.str();
}

inline MorphicRep parse_rep(const std::string& text) {
  auto lines = detail::lex(text);
  std::string core;
  std::optional<Alphabet> out;
  std::vector<const detail::Line*> codings;
  std::optional<detail::Line> prepend_line, drop_line, construction_line;
  for (const auto& l : lines) {
    if (l.key == "output-alphabet") out = detail::parse_alphabet(l, "");
    else if (l.key == "coding") codings.push_back(&l);
    else if (l.key == "prepend") prepend_line = l;
    else if (l.key == "drop") drop_line = l;
    else if (l.key == "construction") construction_line = l;
  }
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    auto s = detail::trim(raw);
    for (auto k : {"output-alphabet:", "coding ", "prepend:", "drop:", "construction:"})
      if (s.rfind(k, 0) == 0) s.clear();
    core += s + '\n';
  }
  ParseOptions opt;
  opt.reserved_prefix.clear();
  auto mf = parse_morphism(core, opt);
  if (!mf.seed) throw ParseError("representation: missing 'seed:' line");
  if (!out) throw ParseError("representation: missing 'output-alphabet:' line");
  MorphicRep rep;
  rep.generator = mf.morphism;
  rep.seed = *mf.seed;
  detail::RuleSet rs;
  for (auto* l : codings) detail::parse_rule(*l, rep.generator.source(), *out, rs, false, "coding");
  rep.coding = Morphism(rep.generator.source(), *out, detail::complete(rs, rep.generator.source(), "coding"));
  if (prepend_line)
    for (auto& t : detail::split_tokens(prepend_line->rest)) {
      if (!out->contains(t)) throw ParseError("prepend: unknown letter '" + t + "'", prepend_line->number);
      rep.prepend.push_back(out->letter(t));
    }
  if (drop_line) {
    try {
      std::size_t used = 0;
      rep.drop = std::stoul(drop_line->rest, &used);
      if (used != drop_line->rest.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ParseError("drop: expected a non-negative integer", drop_line->number);
    }
  }
  if (construction_line) {
    const auto& c = construction_line->rest;
    if (c == "FixedPointCase") rep.construction = Construction::FixedPointCase;
    else if (c == "LimitCase") rep.construction = Construction::LimitCase;
    else if (c == "UltimatelyPeriodic") rep.construction = Construction::UltimatelyPeriodic;
    else throw ParseError("construction: unknown value '" + c + "'", construction_line->number);
  }
  return rep;
}

}  // namespace morphic
