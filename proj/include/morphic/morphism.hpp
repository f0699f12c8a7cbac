#pragma once

#include <algorithm>
#include <initializer_list>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "morphic/alphabet.hpp"

namespace morphic {

// Map from letters of `source` to finite words over `target`.
class Morphism {
 public:
  Morphism() = default;

  Morphism(Alphabet source, Alphabet target, std::vector<Word> images)
      : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (images_.size() != source_.size())
      throw DomainError("morphism needs exactly one image per source letter (got " +
                        std::to_string(images_.size()) + " for " +
                        std::to_string(source_.size()) + " letters)");
    for (const auto& w : images_) target_.check(w);
  }

  // Endomorphism.
  Morphism(Alphabet alphabet, std::vector<Word> images)
      : Morphism(alphabet, alphabet, std::move(images)) {}

  // Endomorphism of {0,...,k-1} from digit strings, e.g. {"01", "00"}.
  static Morphism over_digits(const std::vector<std::string>& images) {
    auto a = Alphabet::digits(images.size());
    std::vector<Word> w;
    for (const auto& s : images) w.push_back(a.parse(s));
    return Morphism(a, std::move(w));
  }

  // Morphism {0..k-1} -> {0..l-1} from digit strings.
  static Morphism over_digits(const std::vector<std::string>& images, std::size_t target_size) {
    auto src = Alphabet::digits(images.size());
    auto dst = Alphabet::digits(target_size);
    std::vector<Word> w;
    for (const auto& s : images) w.push_back(dst.parse(s));
    return Morphism(src, dst, std::move(w));
  }

  static Morphism identity(const Alphabet& a) {
    std::vector<Word> w;
    for (std::size_t i = 0; i < a.size(); ++i) w.push_back(Word{static_cast<Letter>(i)});
    return Morphism(a, std::move(w));
  }

  const Alphabet& source() const noexcept { return source_; }
  const Alphabet& target() const noexcept { return target_; }
  const std::vector<Word>& images() const noexcept { return images_; }
  const Word& image(Letter a) const {
    if (a >= images_.size())
      throw DomainError("letter index " + std::to_string(a) + " outside source alphabet");
    return images_[a];
  }

  bool is_endomorphism() const { return source_ == target_; }
  bool is_non_erasing() const {
    return std::none_of(images_.begin(), images_.end(), [](const Word& w) { return w.empty(); });
  }
  bool is_coding() const {
    return std::all_of(images_.begin(), images_.end(), [](const Word& w) { return w.size() == 1; });
  }
  std::size_t max_image_length() const {
    std::size_t m = 0;
    for (const auto& w : images_) m = std::max(m, w.size());
    return m;
  }

  void require_endomorphism(const char* what) const {
    if (!is_endomorphism())
      throw DomainError(std::string(what) + " requires an endomorphism (source = target)");
  }

  friend bool operator==(const Morphism& a, const Morphism& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.images_ == b.images_;
  }

 private:
  Alphabet source_;
  Alphabet target_;
  std::vector<Word> images_;
};

inline void apply_into(const Morphism& m, WordView w, Word& out) {
  for (Letter c : w) {
    const auto& img = m.image(c);
    out.insert(out.end(), img.begin(), img.end());
  }
}

namespace detail {

// A function object: unqualified calls find it by ordinary lookup, which
// keeps std::apply out of overload resolution.
struct ApplyFn {
  Word operator()(const Morphism& m, WordView w) const {
    Word out;
    apply_into(m, w, out);
    return out;
  }
  Word operator()(const Morphism& m, const Word& w) const { return (*this)(m, WordView(w)); }
  Word operator()(const Morphism& m, std::initializer_list<Letter> w) const {
    return (*this)(m, WordView(w.begin(), w.size()));
  }
};

}  // namespace detail

inline constexpr detail::ApplyFn apply{};

// m^n(w); n = 0 returns w.
inline Word power_apply(const Morphism& m, WordView w, std::size_t n) {
  m.require_endomorphism("power_apply");
  m.source().check(w);
  Word cur(w.begin(), w.end());
  for (std::size_t i = 0; i < n; ++i) cur = apply(m, cur);
  return cur;
}

// outer ∘ inner.
inline Morphism compose(const Morphism& outer, const Morphism& inner) {
  if (!(inner.target() == outer.source()))
    throw DomainError("compose: inner target alphabet differs from outer source alphabet");
  std::vector<Word> images;
  for (const auto& w : inner.images()) images.push_back(apply(outer, w));
  return Morphism(inner.source(), outer.target(), std::move(images));
}

// The morphism m^n as a morphism in its own right.
inline Morphism power(const Morphism& m, std::size_t n) {
  m.require_endomorphism("power");
  auto result = Morphism::identity(m.source());
  for (std::size_t i = 0; i < n; ++i) result = compose(m, result);
  return result;
}

}  // namespace morphic
