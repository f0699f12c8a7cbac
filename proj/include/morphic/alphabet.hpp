#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "morphic/errors.hpp"

namespace morphic {

// A letter is its index in an Alphabet.
using Letter = std::uint16_t;
// Finite word over some alphabet; the alphabet is carried by whoever owns it.
using Word = std::vector<Letter>;
using WordView = std::span<const Letter>;

struct WordHash {
  std::size_t operator()(WordView w) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (Letter c : w) {
      h ^= static_cast<std::uint64_t>(c) + 1;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
  std::size_t operator()(const Word& w) const noexcept {
    return (*this)(WordView(w));
  }
};

inline Word concat(WordView a, WordView b) {
  Word out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

inline bool starts_with(WordView w, WordView prefix) {
  return prefix.size() <= w.size() &&
         std::equal(prefix.begin(), prefix.end(), w.begin());
}

inline std::size_t common_prefix_length(WordView a, WordView b) {
  auto n = std::min(a.size(), b.size());
  std::size_t i = 0;
  while (i < n && a[i] == b[i]) ++i;
  return i;
}

// Ordered set of symbol tokens.  Tokens are non-empty, whitespace-free strings
// so that multi-character names ("@seed", "10") need no escaping.
class Alphabet {
 public:
  Alphabet() = default;

  explicit Alphabet(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
    if (tokens_.empty()) throw DomainError("alphabet must contain at least one letter");
    if (tokens_.size() > 0xFFFFu) throw DomainError("alphabet too large");
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
      const auto& t = tokens_[i];
      if (t.empty()) throw DomainError("empty letter token");
      if (std::any_of(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c); }))
        throw DomainError("letter token contains whitespace: '" + t + "'");
      if (!index_.emplace(t, static_cast<Letter>(i)).second)
        throw DomainError("duplicate letter token: '" + t + "'");
    }
  }

  Alphabet(std::initializer_list<const char*> tokens)
      : Alphabet(std::vector<std::string>(tokens.begin(), tokens.end())) {}

  // Alphabet {0, 1, ..., n-1} with decimal tokens.
  static Alphabet digits(std::size_t n) {
    std::vector<std::string> t;
    for (std::size_t i = 0; i < n; ++i) t.push_back(std::to_string(i));
    return Alphabet(std::move(t));
  }

  std::size_t size() const noexcept { return tokens_.size(); }
  const std::vector<std::string>& tokens() const noexcept { return tokens_; }
  const std::string& token(Letter a) const { return tokens_.at(a); }

  bool contains(std::string_view token) const {
    return index_.find(std::string(token)) != index_.end();
  }

  Letter letter(std::string_view token) const {
    auto it = index_.find(std::string(token));
    if (it == index_.end())
      throw DomainError("unknown letter '" + std::string(token) + "'");
    return it->second;
  }

  bool single_char_tokens() const {
    return std::all_of(tokens_.begin(), tokens_.end(),
                       [](const std::string& t) { return t.size() == 1; });
  }

  // Whitespace-separated tokens; if the text has no whitespace and every token
  // is a single character, each character is one letter.
  Word parse(std::string_view text) const {
    Word w;
    std::string s(text);
    bool spaced = s.find_first_of(" \t") != std::string::npos;
    if (!spaced && single_char_tokens()) {
      for (char c : s) w.push_back(letter(std::string_view(&c, 1)));
      return w;
    }
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) w.push_back(letter(tok));
    return w;
  }

  std::string format(WordView w) const {
    std::string out;
    bool compact = single_char_tokens();
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!compact && i) out += ' ';
      out += token(w[i]);
    }
    return out;
  }

  void check(WordView w) const {
    for (Letter c : w)
      if (c >= size())
        throw DomainError("letter index " + std::to_string(c) + " outside alphabet of size " +
                          std::to_string(size()));
  }

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.tokens_ == b.tokens_; }

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, Letter> index_;
};

enum class Comparison { Less, Equal, Greater, PrefixIncomparable };

// Total order on an alphabet, stored as a rank per letter.
class TotalOrder {
 public:
  TotalOrder() = default;

  // `ascending` lists every letter once, least first.
  explicit TotalOrder(std::vector<Letter> ascending) : ascending_(std::move(ascending)) {
    rank_.assign(ascending_.size(), kUnset);
    for (std::size_t r = 0; r < ascending_.size(); ++r) {
      Letter a = ascending_[r];
      if (a >= rank_.size() || rank_[a] != kUnset)
        throw DomainError("order is not a permutation of the alphabet");
      rank_[a] = static_cast<Letter>(r);
    }
  }

  static TotalOrder natural(std::size_t n) {
    std::vector<Letter> v(n);
    std::iota(v.begin(), v.end(), Letter{0});
    return TotalOrder(std::move(v));
  }

  static TotalOrder reversed(std::size_t n) {
    std::vector<Letter> v(n);
    std::iota(v.rbegin(), v.rend(), Letter{0});
    return TotalOrder(std::move(v));
  }

  // Every permutation of an n-letter alphabet, in lexicographic order of the
  // ascending sequence.
  static std::vector<TotalOrder> all(std::size_t n) {
    std::vector<Letter> v(n);
    std::iota(v.begin(), v.end(), Letter{0});
    std::vector<TotalOrder> out;
    do out.emplace_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    return out;
  }

  std::size_t size() const noexcept { return ascending_.size(); }
  Letter rank(Letter a) const { return rank_.at(a); }
  const std::vector<Letter>& ascending() const noexcept { return ascending_; }
  bool less(Letter a, Letter b) const { return rank_[a] < rank_[b]; }

  // Lexicographic comparison of finite words.
  Comparison compare(WordView x, WordView y) const {
    auto n = std::min(x.size(), y.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == y[i]) continue;
      return less(x[i], y[i]) ? Comparison::Less : Comparison::Greater;
    }
    if (x.size() == y.size()) return Comparison::Equal;
    return Comparison::PrefixIncomparable;
  }

  // "a<b<c" with tokens resolved against `alphabet`.
  std::string format(const Alphabet& alphabet) const {
    std::string out;
    for (std::size_t i = 0; i < ascending_.size(); ++i) {
      if (i) out += '<';
      out += alphabet.token(ascending_[i]);
    }
    return out;
  }

  friend bool operator==(const TotalOrder& a, const TotalOrder& b) {
    return a.ascending_ == b.ascending_;
  }

 private:
  static constexpr Letter kUnset = 0xFFFF;
  std::vector<Letter> ascending_;
  std::vector<Letter> rank_;
};

inline Comparison compare(const TotalOrder& order, WordView x, WordView y) {
  return order.compare(x, y);
}

// Parses "<tok> '<' <tok> ..." covering the whole alphabet, leftmost least.
inline TotalOrder parse_order(std::string_view text, const Alphabet& alphabet) {
  std::vector<Letter> ascending;
  std::vector<bool> seen(alphabet.size(), false);
  std::size_t pos = 0;
  std::size_t item = 0;
  while (true) {
    auto next = text.find('<', pos);
    auto raw = text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
    auto b = raw.find_first_not_of(" \t");
    auto e = raw.find_last_not_of(" \t");
    std::string tok = b == std::string_view::npos ? std::string() : std::string(raw.substr(b, e - b + 1));
    ++item;
    if (tok.empty())
      throw ParseError("order: empty token at position " + std::to_string(item));
    if (!alphabet.contains(tok))
      throw ParseError("order: unknown token '" + tok + "' at position " + std::to_string(item));
    Letter a = alphabet.letter(tok);
    if (seen[a])
      throw ParseError("order: duplicate token '" + tok + "' at position " + std::to_string(item));
    seen[a] = true;
    ascending.push_back(a);
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  for (std::size_t a = 0; a < seen.size(); ++a)
    if (!seen[a])
      throw ParseError("order: missing token '" + alphabet.token(static_cast<Letter>(a)) +
                       "' (order has " + std::to_string(ascending.size()) + " of " +
                       std::to_string(alphabet.size()) + " letters)");
  return TotalOrder(std::move(ascending));
}

}  // namespace morphic
