#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "support.hpp"

using namespace morphic;
using namespace testing_support;

namespace {

const auto f_pd = Morphism::over_digits({"01", "00"});
const auto f_fib = Morphism::over_digits({"01", "0"});
const auto rho = TotalOrder::natural(2);
const auto rho_bar = TotalOrder::reversed(2);

// Naive oracle: gaps between consecutive occurrences, first appearance order.
std::vector<Word> naive_returns(const Word& x, const Word& u) {
  std::vector<std::size_t> occ;
  for (std::size_t i = 0; i + u.size() <= x.size(); ++i)
    if (std::equal(u.begin(), u.end(), x.begin() + static_cast<std::ptrdiff_t>(i))) occ.push_back(i);
  std::vector<Word> out;
  for (std::size_t j = 0; j + 1 < occ.size(); ++j) {
    Word g(x.begin() + static_cast<std::ptrdiff_t>(occ[j]), x.begin() + static_cast<std::ptrdiff_t>(occ[j + 1]));
    if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
  }
  return out;
}

Word reconstruct(const ReturnSystem& rs, const Word& d) {
  Word out;
  for (Letter i : d) out = concat(out, rs.returns[i]);
  return out;
}

}  // namespace

TEST_CASE("return_words: Fibonacci, u = 0") {
  auto x = fixed_point(f_fib, 0);
  auto rs = return_words(x, digits("0"), 200);
  CHECK(rs.stabilized);
  std::set<Word> got(rs.returns.begin(), rs.returns.end());
  CHECK(got == std::set<Word>{digits("0"), digits("01")});
  CHECK(str(rs.returns[0]) == "01");
}

TEST_CASE("return_words: period-doubling, u = 00") {
  auto x = fixed_point(f_pd, 0);
  auto rs = return_words(x, digits("00"), 512);
  CHECK(rs.stabilized);
  CHECK(rs.returns == naive_returns(x.prefix(512), digits("00")));
  REQUIRE(rs.size() == 3);
  CHECK(str(rs.returns[0]) == "0");
  CHECK(str(rs.returns[1]) == "0010101");
  CHECK(str(rs.returns[2]) == "001");
}

TEST_CASE("return_words: errors") {
  auto x = fixed_point(f_fib, 0);
  CHECK_THROWS_AS(return_words(x, digits("11"), 500), DomainError);
  CHECK_THROWS_AS(return_words(x, x.prefix(60), 100), DomainError);
  CHECK_THROWS_AS(return_words(x, Word{}, 100), DomainError);
}

TEST_CASE("derive: Fibonacci, u = 0") {
  auto x = fixed_point(f_fib, 0);
  auto rs = return_words(x, digits("0"), 200);
  auto d = derive(x, rs, 20);
  // 01 0 01 01 0 01 0 01 01 0 ...
  CHECK(str(WordView(d).first(5)) == "01001");
  CHECK(starts_with(x.prefix(64), reconstruct(rs, d)));
  CHECK(derive(x, rs, 0).empty());
}

TEST_CASE("derive: period-doubling extremal word, u = 00") {
  auto x = fixed_point(f_pd, 0);
  ExtremalOracle oracle({f_pd, 0, std::nullopt});
  auto y = LazyWord::finite(oracle.extremal(0, rho, 4000));
  auto rs = return_words(x, digits("00"), 4096);
  auto d = derive(y, rs, 200);
  CHECK(starts_with(y.prefix(4000), reconstruct(rs, d)));
}

TEST_CASE("derive: errors") {
  auto x = fixed_point(f_fib, 0);
  auto rs = return_words(x, digits("0"), 200);
  CHECK_THROWS_AS(derive(LazyWord::periodic({}, {1}), rs, 5), DomainError);
  // 0 1 1 ... cannot be cut into complete returns of 0
  CHECK_THROWS_AS(derive(LazyWord::periodic({0}, {1}), rs, 5), DomainError);
}

TEST_CASE("induced_order") {
  auto x = fixed_point(f_fib, 0);
  auto rs = return_words(x, digits("0"), 200);
  auto o = induced_order(rs, rho);
  // "0"+"0" < "01"+"0": the return 0 (index 1) precedes 01 (index 0)
  CHECK(o.less(1, 0));

  auto pd = return_words(fixed_point(f_pd, 0), digits("00"), 512);
  auto ob = induced_order(pd, rho_bar);
  for (Letter i = 0; i < pd.size(); ++i)
    for (Letter j = 0; j < pd.size(); ++j)
      if (i != j) CHECK(ob.less(i, j) != ob.less(j, i));

  ReturnSystem single;
  single.u = digits("0");
  single.returns = {digits("0")};
  CHECK(induced_order(single, rho).size() == 1);
}

TEST_CASE("derived_word_census: plateaus") {
  auto x = fixed_point(f_fib, 0);
  std::vector<std::size_t> lengths{1, 2, 3, 4, 5, 6, 7, 8};
  auto fib = derived_word_census(x, x, lengths, 4096);
  REQUIRE(fib.size() == 8);
  for (const auto& e : fib) CHECK(e.distinct == 1);

  auto d = fixed_point(f_pd, 0);
  ExtremalOracle oracle({f_pd, 0, std::nullopt});
  auto y = LazyWord::finite(oracle.extremal(0, rho, 8000));
  auto pd = derived_word_census(d, y, lengths, 4096);
  std::vector<std::size_t> trajectory;
  for (const auto& e : pd) trajectory.push_back(e.distinct);
  CHECK(trajectory == std::vector<std::size_t>{1, 2, 2, 2, 2, 2, 2, 2});

  CHECK(derived_word_census(x, x, {}, 4096).empty());
}

TEST_CASE("property: reconstruction and incomparability of complete returns") {
  for (const auto& f : {f_pd, f_fib, Morphism::over_digits({"0010", "1"})}) {
    auto x = fixed_point(f, 0);
    auto p = x.prefix(8192);
    for (std::size_t len = 1; len <= 6; ++len) {
      auto u = x.prefix(len);
      auto rs = return_words(x, u, 8192);
      CHECK(rs.returns == naive_returns(p, u));
      if (!rs.stabilized) continue;
      for (std::size_t i = 0; i < rs.size(); ++i)
        for (std::size_t j = i + 1; j < rs.size(); ++j) {
          auto a = rs.complete_return(i), b = rs.complete_return(j);
          CHECK_FALSE(starts_with(a, b));
          CHECK_FALSE(starts_with(b, a));
        }
      auto d = derive(x, rs, 100);
      CHECK(starts_with(p, reconstruct(rs, d)));
    }
  }
}

TEST_CASE("property: derived words of extremal words are extremal") {
  for (const auto& f : {f_pd, f_fib}) {
    auto x = fixed_point(f, 0);
    ExtremalOracle oracle({f, 0, std::nullopt});
    for (Letter b : {0, 1})
      for (const auto& o : {rho, rho_bar}) {
        auto y = LazyWord::finite(oracle.extremal(b, o, 8000));
        for (std::size_t len = 1; len <= 4; ++len) {
          auto rs = return_words(x, y.prefix(len), 8192);
          auto dy = derive(y, rs, 50);
          auto order = induced_order(rs, o);
          CHECK(derived_extremal(x, rs, dy.front(), order, 50, 2000) == dy);
        }
      }
  }
}
