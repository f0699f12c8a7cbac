#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <utility>

#include "morphic/alphabet.hpp"
#include "morphic/morphism.hpp"

namespace morphic {

inline constexpr std::size_t kDefaultSymbolCap = 10'000'000;

// Infinite word presented as a prefix-on-demand generator with an append-only
// memo.  Copies share the memo.  The memo is not synchronized: share a
// LazyWord across threads only if it is confined to one of them.
class LazyWord {
 public:
  // Appends letters to `memo` until memo.size() >= target; returns false if
  // the word ended before reaching it (the degenerate finite case).
  using Extender = std::function<bool(Word& memo, std::size_t target)>;

  LazyWord() = default;
  explicit LazyWord(Extender extend, std::size_t cap = kDefaultSymbolCap)
      : impl_(std::make_shared<Impl>()) {
    impl_->extend = std::move(extend);
    impl_->cap = cap;
  }

  // The finite word `w`; materializing past its end reports exhaustion.
  static LazyWord finite(Word w) {
    auto shared = std::make_shared<Word>(std::move(w));
    return LazyWord([shared](Word& memo, std::size_t target) {
      while (memo.size() < target && memo.size() < shared->size())
        memo.push_back((*shared)[memo.size()]);
      return memo.size() >= target;
    });
  }

  // u v v v ...
  static LazyWord periodic(Word u, Word v) {
    if (v.empty()) throw DomainError("periodic word needs a non-empty period");
    return LazyWord([u = std::move(u), v = std::move(v)](Word& memo, std::size_t target) {
      while (memo.size() < target) {
        auto i = memo.size();
        memo.push_back(i < u.size() ? u[i] : v[(i - u.size()) % v.size()]);
      }
      return true;
    });
  }

  bool valid() const noexcept { return static_cast<bool>(impl_); }
  std::size_t cap() const { return impl_->cap; }
  std::size_t materialized() const { return impl_->memo.size(); }
  bool exhausted() const { return impl_->exhausted; }

  // Materializes at least n letters (or throws).
  void ensure(std::size_t n) const {
    auto& s = *impl_;
    if (s.memo.size() >= n) return;
    if (n > s.cap)
      throw ResourceError("lazy word: requested " + std::to_string(n) +
                          " symbols exceeds the cap of " + std::to_string(s.cap));
    if (s.exhausted || !s.extend(s.memo, n)) {
      s.exhausted = true;
      throw DomainError("lazy word is finite: only " + std::to_string(s.memo.size()) +
                        " symbols exist, " + std::to_string(n) + " requested");
    }
  }

  // Materializes up to n letters without throwing on exhaustion; returns the
  // number available.
  std::size_t try_ensure(std::size_t n) const {
    auto& s = *impl_;
    if (s.memo.size() >= n) return n;
    if (n > s.cap)
      throw ResourceError("lazy word: requested " + std::to_string(n) +
                          " symbols exceeds the cap of " + std::to_string(s.cap));
    if (!s.exhausted && !s.extend(s.memo, n)) s.exhausted = true;
    return std::min(n, s.memo.size());
  }

  Letter at(std::size_t i) const {
    ensure(i + 1);
    return impl_->memo[i];
  }

  Word prefix(std::size_t n) const {
    ensure(n);
    return Word(impl_->memo.begin(), impl_->memo.begin() + static_cast<std::ptrdiff_t>(n));
  }

  // Valid until the next call that grows the memo.
  WordView view(std::size_t n) const {
    ensure(n);
    return WordView(impl_->memo.data(), n);
  }

 private:
  struct Impl {
    Extender extend;
    Word memo;
    std::size_t cap = kDefaultSymbolCap;
    bool exhausted = false;
  };
  std::shared_ptr<Impl> impl_;
};

// Lazy image of `w` under a non-erasing morphism.
inline LazyWord code(const Morphism& m, LazyWord w) {
  if (!m.is_non_erasing())
    throw DomainError("code: morphism is erasing; only non-erasing images are supported");
  std::size_t cursor = 0;
  return LazyWord(
      [m, w, cursor](Word& memo, std::size_t target) mutable {
        while (memo.size() < target) {
          if (w.try_ensure(cursor + 1) <= cursor) return false;
          const auto& img = m.image(w.at(cursor++));
          memo.insert(memo.end(), img.begin(), img.end());
        }
        return true;
      },
      w.cap());
}

// u · w
inline LazyWord prepend(Word u, LazyWord w) {
  return LazyWord(
      [u = std::move(u), w](Word& memo, std::size_t target) {
        while (memo.size() < target) {
          auto i = memo.size();
          if (i < u.size()) {
            memo.push_back(u[i]);
            continue;
          }
          auto want = target - u.size();
          auto have = w.try_ensure(want);
          auto from = i - u.size();
          if (have <= from) return false;
          auto src = w.view(have);
          memo.insert(memo.end(), src.begin() + static_cast<std::ptrdiff_t>(from), src.end());
        }
        return true;
      },
      w.cap());
}

// w with its first `count` letters removed.
inline LazyWord drop(std::size_t count, LazyWord w) {
  return LazyWord(
      [count, w](Word& memo, std::size_t target) {
        auto have = w.try_ensure(count + target);
        if (have <= count + memo.size()) return memo.size() >= target;
        auto src = w.view(have);
        memo.insert(memo.end(), src.begin() + static_cast<std::ptrdiff_t>(count + memo.size()),
                    src.end());
        return memo.size() >= target;
      },
      w.cap());
}

// x m(x) m^2(x) m^3(x) ...; infinite iff x is not mortal under m.
inline LazyWord limit_word(const Morphism& m, Word x) {
  m.require_endomorphism("limit_word");
  m.source().check(x);
  if (x.empty()) throw DomainError("limit_word: empty seed word");
  Word block = std::move(x);
  return LazyWord([m, block](Word& memo, std::size_t target) mutable {
    while (memo.size() < target) {
      // m^k(x) = ε here, hence for every later k as well.
      if (block.empty()) return false;
      memo.insert(memo.end(), block.begin(), block.end());
      block = apply(m, block);
    }
    return true;
  });
}

}  // namespace morphic
