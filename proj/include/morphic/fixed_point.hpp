#pragma once

#include <cstddef>
#include <string>

#include "morphic/lazy_word.hpp"
#include "morphic/letter_classes.hpp"
#include "morphic/morphism.hpp"

namespace morphic {

// f(a) = a x with x non-empty and not mortal.
inline bool is_prolongable(const Morphism& m, Letter a, const LetterClasses& lc) {
  const auto& img = m.image(a);
  if (img.size() < 2 || img.front() != a) return false;
  return !lc.word_is_mortal(WordView(img).subspan(1));
}

inline bool is_prolongable(const Morphism& m, Letter a) {
  m.require_endomorphism("is_prolongable");
  return is_prolongable(m, a, classify(m));
}

// f^ω(a).  The memo starts as f(a); each step appends the image of the next
// unexpanded letter.
inline LazyWord fixed_point(const Morphism& m, Letter a, std::size_t cap = kDefaultSymbolCap) {
  m.require_endomorphism("fixed_point");
  auto lc = classify(m);
  const auto& img = m.image(a);
  if (img.empty() || img.front() != a)
    throw DomainError("fixed_point: f('" + m.source().token(a) + "') does not begin with '" +
                      m.source().token(a) + "'");
  if (!is_prolongable(m, a, lc)) {
    Word tail(img.begin() + 1, img.end());
    throw DomainError("fixed_point: not prolongable at '" + m.source().token(a) +
                      "': the tail '" + m.source().format(tail) +
                      "' is mortal, so the fixed point is finite");
  }
  std::size_t cursor = 1;
  bool started = false;
  return LazyWord(
      [m, a, cursor, started](Word& memo, std::size_t target) mutable {
        if (!started) {
          const auto& first = m.image(a);
          memo.insert(memo.end(), first.begin(), first.end());
          started = true;
        }
        while (memo.size() < target) {
          if (cursor >= memo.size()) return false;
          const auto& next = m.image(memo[cursor++]);
          memo.insert(memo.end(), next.begin(), next.end());
        }
        return true;
      },
      cap);
}

}  // namespace morphic
