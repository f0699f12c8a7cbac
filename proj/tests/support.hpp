#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "morphic/morphic.hpp"

namespace testing_support {

using namespace morphic;

inline Word digits(const std::string& s) {
  Word w;
  for (char c : s) w.push_back(static_cast<Letter>(c - '0'));
  return w;
}

inline std::string str(WordView w) {
  std::string s;
  for (Letter c : w) s += static_cast<char>('0' + c);
  return s;
}

inline Word random_word(std::mt19937& rng, std::size_t k, std::size_t len) {
  std::uniform_int_distribution<int> d(0, static_cast<int>(k) - 1);
  Word w(len);
  for (auto& c : w) c = static_cast<Letter>(d(rng));
  return w;
}

// Random endomorphism of {0..k-1} with image lengths in [lo, hi].
inline Morphism random_morphism(std::mt19937& rng, std::size_t k, std::size_t lo, std::size_t hi) {
  std::uniform_int_distribution<std::size_t> len(lo, hi);
  std::vector<Word> images;
  for (std::size_t a = 0; a < k; ++a) images.push_back(random_word(rng, k, len(rng)));
  return Morphism(Alphabet::digits(k), std::move(images));
}

// Random binary morphism prolongable at 0 with f(01) != f(10).
inline Morphism random_binary_prolongable(std::mt19937& rng, std::size_t max_len) {
  while (true) {
    auto m = random_morphism(rng, 2, 1, max_len);
    if (m.image(0).size() < 2 || m.image(0)[0] != 0) continue;
    if (apply(m, {0, 1}) == apply(m, {1, 0})) continue;
    if (!is_prolongable(m, 0)) continue;
    return m;
  }
}

// Growth by length simulation on Parikh vectors.  Bounded iff the vector
// repeats within `steps` iterations before the length passes `escape`.  A
// bounded orbit over at most five letters settles well inside 40 steps, so a
// non-repeating run counts as growing even while still short (linear growth).
inline bool simulated_growing(const Morphism& m, Letter a, std::size_t steps = 40, std::uint64_t escape = 1000) {
  const auto k = m.source().size();
  std::vector<std::vector<std::uint64_t>> seen;
  std::vector<std::uint64_t> v(k, 0);
  v[a] = 1;
  for (std::size_t n = 0; n <= steps; ++n) {
    std::uint64_t len = 0;
    for (auto c : v) len += c;
    if (len > escape) return true;
    if (std::find(seen.begin(), seen.end(), v) != seen.end()) return false;
    seen.push_back(v);
    std::vector<std::uint64_t> next(k, 0);
    for (std::size_t b = 0; b < k; ++b)
      for (Letter c : m.image(static_cast<Letter>(b))) next[c] += v[b];
    v = std::move(next);
  }
  return true;
}

#ifdef MORPHIC_DATA_DIR
inline std::string data(const std::string& name) { return std::string(MORPHIC_DATA_DIR) + "/" + name; }
#endif

}  // namespace testing_support
