#pragma once

#include <chrono>
#include <cstdio>
#include <memory>
#include <cstddef>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "morphic/extremal.hpp"
#include "morphic/synthesizer.hpp"

namespace morphic {

struct CheckResult {
  std::string description;
  bool passed = false;
  std::size_t compared = 0;
  std::size_t mismatch = 0;  // first differing index when !passed
  std::string expected_context;
  std::string actual_context;
  std::string error;
  double seconds = 0;
};

struct RunReport {
  std::string name;
  std::size_t length = 0;
  std::vector<CheckResult> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  int exit_code() const { return passed() ? 0 : 3; }
};

inline const std::vector<std::string>& casestudy_names() {
  static const std::vector<std::string> names{"period-doubling", "chacon", "rudin-shapiro", "fibonacci"};
  return names;
}

namespace detail {

struct Check {
  std::string description;
  std::function<Word(std::size_t)> expected;  // construction
  std::function<Word(std::size_t)> actual;    // greedy oracle
  std::size_t fixed = 0;                      // compare this many symbols instead of n
};

inline std::string context(const Alphabet& a, const Word& w, std::size_t at) {
  auto from = at > 16 ? at - 16 : 0;
  auto to = std::min(w.size(), at + 17);
  std::string s = a.format(WordView(w).subspan(from, to - from));
  return "[" + std::to_string(from) + "] " + s;
}

inline CheckResult run_check(const Check& c, const Alphabet& a, std::size_t n) {
  CheckResult r;
  r.description = c.description;
  if (c.fixed) n = c.fixed;
  r.compared = n;
  auto t0 = std::chrono::steady_clock::now();
  try {
    auto want = c.expected(n);
    auto got = c.actual(n);
    auto i = common_prefix_length(want, got);
    r.passed = i == n && want.size() == n && got.size() == n;
    if (!r.passed) {
      r.mismatch = i;
      r.expected_context = context(a, want, i);
      r.actual_context = context(a, got, i);
    }
  } catch (const Error& e) {
    r.error = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline Word cat(Word head, const Word& tail, std::size_t n) {
  head.insert(head.end(), tail.begin(), tail.end());
  head.resize(std::min(head.size(), n));
  return head;
}

inline Word fixed_prefix(const Morphism& m, Letter a, std::size_t n) { return fixed_point(m, a).prefix(n); }

}  // namespace detail

inline Morphism period_doubling() { return Morphism::over_digits({"01", "00"}); }
inline Morphism chacon() { return Morphism::over_digits({"0010", "1"}); }
inline Morphism fibonacci() { return Morphism::over_digits({"01", "0"}); }
inline Morphism rudin_shapiro() { return Morphism::over_digits({"01", "02", "31", "32"}); }
inline Morphism rudin_shapiro_coding() { return Morphism::over_digits({"0", "0", "1", "1"}, 2); }
inline Morphism rudin_shapiro_h() { return Morphism::over_digits({"00", "01", "10", "11"}, 2); }

// g: b ↦ b01, 0 ↦ 0010, 1 ↦ 1 and τ: b ↦ 1, with b a fresh letter.
inline std::pair<Morphism, Morphism> chacon_limit(const std::string& fresh = "@b") {
  Alphabet ext({"0", "1", fresh});
  Morphism g(ext, {{0, 0, 1, 0}, {1}, {2, 0, 1}});
  Morphism tau(ext, Alphabet::digits(2), {{0}, {1}, {1}});
  return {g, tau};
}

inline RunReport run_casestudy(const std::string& name, std::size_t n, const Caps& caps = {}) {
  if (n < 64) throw DomainError("casestudy: length must be at least 64");
  RunReport report{name, n, {}};
  const auto bin = Alphabet::digits(2);
  const auto rho = TotalOrder::natural(2);
  const auto rho_bar = TotalOrder::reversed(2);
  std::vector<detail::Check> checks;
  Alphabet shown = bin;

  if (name == "period-doubling") {
    auto f = period_doubling();
    auto g = Morphism::over_digits({"0001", "0101"});
    auto oracle = std::make_shared<ExtremalOracle>(WordSource{f, 0, std::nullopt}, caps);
    auto z = [g](std::size_t k) { return detail::fixed_prefix(g, 0, k); };
    auto fz = [f, g](std::size_t k) { return apply(f, detail::fixed_prefix(g, 0, k)); };
    auto l = [oracle](Letter b, TotalOrder o) { return [oracle, b, o](std::size_t k) { return oracle->extremal(b, o, k); }; };
    auto s = [oracle](Letter b, TotalOrder o) {
      return [oracle, b, o](std::size_t k) { auto w = oracle->extremal(b, o, k + 1); w.erase(w.begin()); return w; };
    };
    checks.push_back({"s[0,0<1] starts 00100", [bin](std::size_t) { return bin.parse("00100"); },
                      [s, rho](std::size_t) { return s(0, rho)(5); }, 5});
    checks.push_back({"s[1,1<0] starts 010100", [bin](std::size_t) { return bin.parse("010100"); },
                      [s, rho_bar](std::size_t) { return s(1, rho_bar)(6); }, 6});
    checks.push_back({"s[1,0<1] starts 0001", [bin](std::size_t) { return bin.parse("0001"); },
                      [s, rho](std::size_t) { return s(1, rho)(4); }, 4});
    checks.push_back({"s[0,1<0] starts 1010100", [bin](std::size_t) { return bin.parse("1010100"); },
                      [s, rho_bar](std::size_t) { return s(0, rho_bar)(7); }, 7});
    checks.push_back({"l[0,0<1] = z", z, l(0, rho)});
    checks.push_back({"l[1,0<1] = 1 z", [z](std::size_t k) { return detail::cat({1}, z(k), k); }, l(1, rho)});
    checks.push_back({"l[1,1<0] = 0^-1 f(z)",
                      [fz](std::size_t k) { auto w = fz(k + 1); w.erase(w.begin()); w.resize(k); return w; },
                      l(1, rho_bar)});
    checks.push_back({"l[0,1<0] = f(z)", [fz](std::size_t k) { auto w = fz(k); w.resize(k); return w; }, l(0, rho_bar)});
  } else if (name == "chacon") {
    auto f = chacon();
    auto [g, tau] = chacon_limit(caps.seed_prefix + "b");
    auto oracle = std::make_shared<ExtremalOracle>(WordSource{f, 0, std::nullopt}, caps);
    auto c = [f](std::size_t k) { return detail::fixed_prefix(f, 0, k); };
    auto tg = [g = g, tau = tau](std::size_t k) { return code(tau, fixed_point(g, 2)).prefix(k); };
    auto l = [oracle](Letter b, TotalOrder o) { return [oracle, b, o](std::size_t k) { return oracle->extremal(b, o, k); }; };
    auto s = [oracle](Letter b, TotalOrder o) {
      return [oracle, b, o](std::size_t k) { auto w = oracle->extremal(b, o, k + 1); w.erase(w.begin()); return w; };
    };
    checks.push_back({"s[0,0<1] starts 001000101", [bin](std::size_t) { return bin.parse("001000101"); },
                      [s, rho](std::size_t) { return s(0, rho)(9); }, 9});
    checks.push_back({"s[1,1<0] starts 010010", [bin](std::size_t) { return bin.parse("010010"); },
                      [s, rho_bar](std::size_t) { return s(1, rho_bar)(6); }, 6});
    checks.push_back({"s[1,0<1] starts 0001000101", [bin](std::size_t) { return bin.parse("0001000101"); },
                      [s, rho](std::size_t) { return s(1, rho)(10); }, 10});
    checks.push_back({"s[0,1<0] starts 1010010", [bin](std::size_t) { return bin.parse("1010010"); },
                      [s, rho_bar](std::size_t) { return s(0, rho_bar)(7); }, 7});
    checks.push_back({"l[0,0<1] = 0 c", [c](std::size_t k) { return detail::cat({0}, c(k), k); }, l(0, rho)});
    checks.push_back({"l[1,0<1] = 1 0 c", [c](std::size_t k) { return detail::cat({1, 0}, c(k), k); }, l(1, rho)});
    checks.push_back({"l[1,1<0] = tau g^w(b)", tg, l(1, rho_bar)});
    checks.push_back({"l[0,1<0] = 0 tau g^w(b)", [tg](std::size_t k) { return detail::cat({0}, tg(k), k); },
                      l(0, rho_bar)});
  } else if (name == "rudin-shapiro") {
    auto f = rudin_shapiro();
    auto g = rudin_shapiro_coding();
    shown = Alphabet::digits(4);
    auto ou = std::make_shared<ExtremalOracle>(WordSource{f, 0, std::nullopt}, caps);
    auto ow = std::make_shared<ExtremalOracle>(WordSource{f, 0, g}, caps);
    auto u = [f](std::size_t k) { return detail::fixed_prefix(f, 0, k); };
    auto w = [f, g](std::size_t k) { return code(g, fixed_point(f, 0)).prefix(k); };
    auto rho4 = TotalOrder::natural(4);
    checks.push_back({"u starts 0102013101023202010201313231013101020131",
                      [](std::size_t) { return Alphabet::digits(4).parse("0102013101023202010201313231013101020131"); },
                      [u](std::size_t) { return u(40); }, 40});
    checks.push_back({"w starts 0001001000011101000100101110001000010010",
                      [](std::size_t) { return Alphabet::digits(4).parse("0001001000011101000100101110001000010010"); },
                      [w](std::size_t) { return w(40); }, 40});
    checks.push_back({"l[0,0<1<2<3,u] = u", u, [ou, rho4](std::size_t k) { return ou->extremal(0, rho4, k); }});
    checks.push_back({"l[0,0<1,w] = 0 w", [w](std::size_t k) { return detail::cat({0}, w(k), k); },
                      [ow, rho](std::size_t k) { return ow->extremal(0, rho, k); }});
  } else if (name == "fibonacci") {
    auto f = fibonacci();
    auto oracle = std::make_shared<ExtremalOracle>(WordSource{f, 0, std::nullopt}, caps);
    auto c = [f](std::size_t k) { return detail::fixed_prefix(f, 0, k); };
    auto l = [oracle](Letter b, TotalOrder o) { return [oracle, b, o](std::size_t k) { return oracle->extremal(b, o, k); }; };
    checks.push_back({"l[0,0<1] = 0 c", [c](std::size_t k) { return detail::cat({0}, c(k), k); }, l(0, rho)});
    checks.push_back({"l[1,0<1] = 1 0 c", [c](std::size_t k) { return detail::cat({1, 0}, c(k), k); }, l(1, rho)});
    checks.push_back({"l[1,1<0] = 1 c", [c](std::size_t k) { return detail::cat({1}, c(k), k); }, l(1, rho_bar)});
    checks.push_back({"l[0,1<0] = 0 1 c", [c](std::size_t k) { return detail::cat({0, 1}, c(k), k); }, l(0, rho_bar)});
  } else {
    throw DomainError("unknown case study '" + name + "'");
  }

  for (const auto& c : checks) {
    auto r = detail::run_check(c, shown, n);
    report.checks.push_back(std::move(r));
  }
  return report;
}

inline std::string format_report(const RunReport& r, bool porcelain) {
  std::ostringstream os;
  for (const auto& c : r.checks) {
    if (porcelain) {
      os << (c.passed ? "pass" : "fail") << '\t' << r.name << '\t' << c.description << '\t' << c.compared;
      if (!c.passed) os << '\t' << (c.error.empty() ? "mismatch@" + std::to_string(c.mismatch) : c.error);
      os << '\n';
      continue;
    }
    os << (c.passed ? "PASS " : "FAIL ") << r.name << ": " << c.description;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", c.seconds);
    os << "  (" << c.compared << " symbols, " << buf << " s)\n";
    if (!c.passed) {
      if (!c.error.empty()) {
        os << "     error: " << c.error << '\n';
      } else {
        os << "     first mismatch at index " << c.mismatch << '\n';
        os << "     expected " << c.expected_context << '\n';
        os << "     actual   " << c.actual_context << '\n';
      }
    }
  }
  return os.str();
}

}  // namespace morphic
