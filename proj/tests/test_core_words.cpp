#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace morphic;
using namespace testing_support;

namespace {
const Morphism f_pd = Morphism::over_digits({"01", "00"});
}

TEST_CASE("apply concatenates images") {
  auto f = Morphism::over_digits({"01", "00"});
  CHECK(str(apply(f, digits("01"))) == "0100");
  CHECK(apply(f, Word{}).empty());
  auto c = Morphism::over_digits({"0010", "1"});
  CHECK(str(apply(c, digits("0010"))) == "0010" "0010" "1" "0010");
}

TEST_CASE("apply rejects letters outside the source alphabet") {
  auto f = Morphism::over_digits({"01", "00"});
  CHECK_THROWS_AS(apply(f, Word{2}), DomainError);
}

TEST_CASE("power_apply iterates") {
  auto c = Morphism::over_digits({"0010", "1"});
  CHECK(str(power_apply(f_pd, digits("0"), 3)) == "01000101");
  CHECK(str(power_apply(f_pd, digits("0110"), 0)) == "0110");
  CHECK(str(power_apply(c, digits("0"), 2)) == "0010" "0010" "1" "0010");
  auto g = Morphism::over_digits({"0", "0"}, 1);
  CHECK_THROWS_AS(power_apply(g, digits("0"), 1), DomainError);
}

TEST_CASE("is_prolongable") {
  CHECK(is_prolongable(f_pd, 0));
  CHECK_FALSE(is_prolongable(f_pd, 1));
  CHECK_FALSE(is_prolongable(Morphism::identity(Alphabet::digits(2)), 0));
  CHECK(is_prolongable(Morphism::over_digits({"010", "21", "211"}), 0));
  // a -> ab with b mortal
  Morphism m(Alphabet{"a", "b"}, {{0, 1}, {}});
  CHECK_FALSE(is_prolongable(m, 0));
}

TEST_CASE("fixed_point prefixes") {
  CHECK(str(fixed_point(Morphism::over_digits({"01", "02", "31", "32"}), 0).prefix(16)) == "0102013101023202");
  CHECK(str(fixed_point(f_pd, 0).prefix(4)) == "0100");
  CHECK(str(fixed_point(Morphism::over_digits({"0010", "1"}), 0).prefix(4)) == "0010");
}

TEST_CASE("fixed_point errors") {
  CHECK_THROWS_AS(fixed_point(f_pd, 1), DomainError);
  Morphism m(Alphabet{"a", "b"}, {{0, 1}, {}});
  try {
    fixed_point(m, 0);
    FAIL("expected an error");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("mortal") != std::string::npos);
  }
}

TEST_CASE("code applies a non-erasing morphism lazily") {
  auto u = fixed_point(Morphism::over_digits({"01", "02", "31", "32"}), 0);
  auto g = Morphism::over_digits({"0", "0", "1", "1"}, 2);
  CHECK(str(code(g, u).prefix(16)) == "0001001000011101");
  CHECK(code(Morphism::identity(Alphabet::digits(4)), u).prefix(100) == u.prefix(100));

  Alphabet ext({"0", "1", "b"});
  Morphism tau(ext, Alphabet::digits(2), {{0}, {1}, {1}});
  CHECK(str(apply(tau, Word{2, 0, 1})) == "101");

  Morphism erasing(Alphabet::digits(2), {{0}, {}});
  CHECK_THROWS_AS(code(erasing, u), DomainError);
}

TEST_CASE("compare") {
  auto rho = TotalOrder::natural(2);
  auto rho_bar = TotalOrder::reversed(2);
  CHECK(rho.compare(digits("0001"), digits("0010")) == Comparison::Less);
  CHECK(rho_bar.compare(digits("10"), digits("01")) == Comparison::Less);
  CHECK(rho.compare(digits("01"), digits("010")) == Comparison::PrefixIncomparable);
  CHECK(rho.compare(digits("01"), digits("01")) == Comparison::Equal);
}

TEST_CASE("parse_order") {
  auto bin = Alphabet::digits(2);
  CHECK(parse_order("0<1", bin) == TotalOrder::natural(2));
  CHECK(parse_order("1 < 0", bin) == TotalOrder::reversed(2));
  CHECK(parse_order("0<1<2<3", Alphabet::digits(4)) == TotalOrder::natural(4));
  CHECK_THROWS_AS(parse_order("0<0", bin), ParseError);
  CHECK_THROWS_AS(parse_order("0", bin), ParseError);
  CHECK_THROWS_AS(parse_order("0<2", bin), ParseError);
  CHECK_THROWS_AS(parse_order("0<<1", bin), ParseError);
}

TEST_CASE("alphabet tokens") {
  CHECK_THROWS_AS(Alphabet({"a", "a"}), DomainError);
  CHECK_THROWS_AS(Alphabet(std::vector<std::string>{}), DomainError);
  Alphabet a({"x1", "y"});
  CHECK(a.parse("x1 y y") == Word{0, 1, 1});
  CHECK(a.format(Word{1, 0}) == "y x1");
}

TEST_CASE("LazyWord memoization and cap") {
  auto x = fixed_point(f_pd, 0, 1000);
  auto p = x.prefix(300);
  CHECK(x.prefix(100) == Word(p.begin(), p.begin() + 100));
  CHECK(x.prefix(300) == p);
  CHECK_THROWS_AS(x.prefix(1001), ResourceError);
  auto fin = LazyWord::finite(digits("012"));
  CHECK(fin.try_ensure(10) == 3);
  CHECK_THROWS_AS(fin.prefix(4), DomainError);
  CHECK(str(LazyWord::periodic(digits("1"), digits("01")).prefix(6)) == "10101" "0");
}

TEST_CASE("prepend, drop and limit_word") {
  auto x = fixed_point(f_pd, 0);
  CHECK(str(prepend(digits("11"), x).prefix(6)) == "110100");
  CHECK(str(drop(2, x).prefix(4)) == "0001");
  // 01 · f(01) · f²(01) under Chacon: 01 00101 001000101...
  auto c = Morphism::over_digits({"0010", "1"});
  CHECK(str(limit_word(c, digits("01")).prefix(12)) == "010010100100");
  Morphism m(Alphabet{"a", "b"}, {{0, 1}, {}});
  CHECK_THROWS_AS(limit_word(m, Word{1}).prefix(2), DomainError);
}

TEST_CASE("property: apply is a monoid homomorphism") {
  std::mt19937 rng(7);
  for (int i = 0; i < 300; ++i) {
    auto m = random_morphism(rng, 3, 0, 4);
    auto u = random_word(rng, 3, rng() % 12);
    auto v = random_word(rng, 3, rng() % 12);
    CHECK(apply(m, concat(u, v)) == concat(apply(m, u), apply(m, v)));
  }
}

TEST_CASE("property: fixed point satisfies f(prefix) starts with prefix") {
  std::mt19937 rng(11);
  int tested = 0;
  while (tested < 100) {
    auto m = random_morphism(rng, 3, 1, 4);
    if (!is_prolongable(m, 0)) continue;
    ++tested;
    auto x = fixed_point(m, 0);
    for (std::size_t n : {1u, 2u, 7u, 30u, 200u}) {
      if (x.try_ensure(n) < n) break;
      auto p = x.prefix(n);
      CHECK(starts_with(apply(m, p), p));
    }
  }
}

TEST_CASE("property: coded prefix depends only on the same-length input prefix") {
  std::mt19937 rng(13);
  auto x = fixed_point(Morphism::over_digits({"01", "02", "31", "32"}), 0);
  for (int i = 0; i < 50; ++i) {
    auto g = random_morphism(rng, 4, 1, 3);
    std::size_t n = 1 + rng() % 200;
    auto full = code(g, x).prefix(n);
    auto local = apply(g, x.prefix(n));
    CHECK(starts_with(local, full));
  }
}

TEST_CASE("property: compare is a strict total order on equal-length words") {
  std::mt19937 rng(17);
  for (auto& order : TotalOrder::all(3)) {
    for (int i = 0; i < 100; ++i) {
      auto x = random_word(rng, 3, 5), y = random_word(rng, 3, 5), z = random_word(rng, 3, 5);
      auto xy = order.compare(x, y);
      auto yx = order.compare(y, x);
      CHECK(xy != Comparison::PrefixIncomparable);
      CHECK((xy == Comparison::Equal) == (x == y));
      if (xy == Comparison::Less) CHECK(yx == Comparison::Greater);
      if (xy == Comparison::Less && order.compare(y, z) == Comparison::Less)
        CHECK(order.compare(x, z) == Comparison::Less);
    }
  }
}
