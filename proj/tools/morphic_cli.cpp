#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "morphic/morphic.hpp"

using namespace morphic;

namespace {

// Exit codes.
constexpr int kOk = 0;
constexpr int kNotInMx = 1;
constexpr int kUsage = 1;
constexpr int kUnknown = 2;
constexpr int kCheckFailed = 3;
constexpr int kRuntime = 4;

struct Globals {
  std::size_t cap_symbols = kDefaultSymbolCap;
  std::size_t cap_work = 1'000'000;
  std::string seed_prefix = "@";
  bool allow_erasing = false;

  Caps caps() const {
    Caps c;
    c.symbols = cap_symbols;
    c.work = cap_work;
    c.seed_prefix = seed_prefix;
    return c;
  }

  ParseOptions parse_options() const {
    ParseOptions o;
    o.allow_erasing = allow_erasing;
    o.reserved_prefix = seed_prefix;
    return o;
  }
};

struct Input {
  std::string path;
  std::string seed;

  MorphismFile load(const Globals& g) const { return load_morphism(path, g.parse_options()); }

  Letter seed_of(const MorphismFile& mf) const {
    const auto& a = mf.morphism.source();
    if (!seed.empty()) return a.letter(seed);
    if (mf.seed) return *mf.seed;
    return 0;
  }
};

void add_input(CLI::App* sub, Input& in) {
  sub->add_option("file", in.path, "morphism file")->required()->check(CLI::ExistingFile);
  sub->add_option("--seed", in.seed, "seed letter (overrides the file's seed: line)");
}

std::string letters(const Alphabet& a, const std::vector<Letter>& ls) {
  std::string out = "{";
  for (std::size_t i = 0; i < ls.size(); ++i) out += (i ? ", " : "") + a.token(ls[i]);
  return out + "}";
}

Morphism load_coding(const std::string& path, const Globals& g) {
  auto opt = g.parse_options();
  return load_morphism(path, opt).morphism;
}

int cmd_expand(const Globals& g, const Input& in, std::size_t n, const std::string& coding) {
  auto mf = in.load(g);
  auto x = fixed_point(mf.morphism, in.seed_of(mf), g.cap_symbols);
  if (coding.empty()) {
    std::cout << mf.morphism.source().format(x.prefix(n)) << '\n';
  } else {
    auto c = load_coding(coding, g);
    std::cout << c.target().format(code(c, x).prefix(n)) << '\n';
  }
  return kOk;
}

int cmd_classify(const Globals& g, const Input& in) {
  auto mf = in.load(g);
  const auto& a = mf.morphism.source();
  auto lc = classify(mf.morphism);
  std::cout << "mortal: " << letters(a, lc.mortal_letters()) << '\n'
            << "bounded: " << letters(a, lc.bounded_letters()) << '\n'
            << "growing: " << letters(a, lc.growing_letters()) << '\n'
            << "mortality-exponent: " << lc.mortality_exponent << '\n';
  return kOk;
}

int cmd_fixedpoints(const Globals& g, const Input& in) {
  auto mf = in.load(g);
  const auto& a = mf.morphism.source();
  auto fps = finite_fixed_points(mf.morphism, classify(mf.morphism));
  if (fps.empty()) std::cout << "none\n";
  for (const auto& fp : fps) std::cout << a.token(fp.anchor) << ": " << a.format(fp.word) << '\n';
  return kOk;
}

int cmd_factors(const Globals& g, const Input& in, std::size_t n, bool absent) {
  auto mf = in.load(g);
  const auto& a = mf.morphism.source();
  auto fs = build_factors(mf.morphism, in.seed_of(mf), n, g.cap_work);
  if (!absent) {
    for (const auto& w : fs.factors(n)) std::cout << a.format(w) << '\n';
    return kOk;
  }
  double total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= static_cast<double>(a.size());
  if (total > static_cast<double>(g.cap_work))
    throw ResourceError("factors --absent: " + std::to_string(a.size()) + "^" + std::to_string(n) +
                        " words exceed the work cap");
  Word w(n, 0);
  while (true) {
    if (!fs.contains(w)) std::cout << a.format(w) << '\n';
    std::size_t i = n;
    while (i > 0 && w[i - 1] + 1u == a.size()) w[--i] = 0;
    if (i == 0) break;
    ++w[i - 1];
  }
  return kOk;
}

int cmd_extremal(const Globals& g, const Input& in, const std::string& letter, const std::string& order,
                 std::size_t n, const std::string& coding) {
  auto mf = in.load(g);
  WordSource src{mf.morphism, in.seed_of(mf), std::nullopt};
  if (!coding.empty()) src.outer = load_coding(coding, g);
  const auto& a = src.alphabet();
  auto w = greedy_extremal(src, a.letter(letter), parse_order(order, a), n, g.caps());
  std::cout << a.format(w) << '\n';
  return kOk;
}

int cmd_check_mx(const Globals& g, const Input& in, const std::string& inner, std::size_t horizon) {
  auto mf = in.load(g);
  const auto& f = mf.morphism;
  Morphism gen = f;
  Letter seed = in.seed_of(mf);
  if (!inner.empty()) {
    auto imf = load_morphism(inner, g.parse_options());
    gen = imf.morphism;
    seed = in.seed.empty() ? imf.seed.value_or(0) : gen.source().letter(in.seed);
  }
  auto r = check_mx(f, gen, seed, horizon, g.caps());
  const auto& a = f.source();
  std::cout << "verdict: " << to_string(r.verdict) << '\n';
  std::cout << "horizon: " << r.horizon_used << '\n';
  for (const auto& [b, p] : r.witnesses) std::cout << "p[" << a.token(b) << "] = " << f.target().format(p) << '\n';
  if (r.violation)
    std::cout << "violation: " << a.token(r.violation->first) << ' ' << a.token(r.violation->second) << '\n';
  if (!r.note.empty()) std::cout << "note: " << r.note << '\n';
  if (r.verdict != MxVerdict::InMx)
    for (const auto& c : r.cones)
      std::cout << "q[" << a.token(c.letter) << "] = " << f.target().format(c.q) << (c.finalized ? " (final)" : "")
                << '\n';
  switch (r.verdict) {
    case MxVerdict::InMx: return kOk;
    case MxVerdict::NotInMx: return kNotInMx;
    case MxVerdict::Unknown: return kUnknown;
  }
  return kUnknown;
}

int cmd_synthesize(const Globals& g, const Input& in, const std::string& letter, const std::string& order,
                   const std::string& coding, std::size_t verify, const std::string& emit) {
  auto mf = in.load(g);
  auto caps = g.caps();
  if (verify) caps.rep_verify = verify;
  Letter seed = in.seed_of(mf);
  MorphicRep rep;
  if (coding.empty()) {
    const auto& a = mf.morphism.source();
    rep = synthesize(mf.morphism, seed, a.letter(letter), parse_order(order, a), caps);
  } else {
    auto c = load_coding(coding, g);
    const auto& a = c.target();
    rep = synthesize_coded(mf.morphism, c, seed, a.letter(letter), parse_order(order, a), caps);
  }
  auto text = print_rep(rep);
  std::cout << text;
  std::cout << "expansion: " << rep.coding.target().format(expand(rep, g.cap_symbols).prefix(72)) << '\n';
  if (!emit.empty()) {
    std::ofstream out(emit, std::ios::binary);
    if (!out) throw DomainError("cannot write '" + emit + "'");
    out << text;
  }
  return kOk;
}

int cmd_returns(const Globals& g, const Input& in, const std::string& factor, std::size_t horizon, bool derive_flag,
                std::size_t derive_length, const std::vector<std::size_t>& census) {
  auto mf = in.load(g);
  const auto& a = mf.morphism.source();
  auto x = fixed_point(mf.morphism, in.seed_of(mf), g.cap_symbols);
  if (!factor.empty()) {
    auto rs = return_words(x, a.parse(factor), horizon);
    std::cout << "factor: " << a.format(rs.u) << '\n'
              << "horizon: " << rs.horizon << '\n'
              << "occurrences: " << rs.occurrences.size() << '\n'
              << "stabilized: " << (rs.stabilized ? "yes" : "no") << '\n';
    for (std::size_t i = 0; i < rs.size(); ++i) std::cout << (i + 1) << " -> " << a.format(rs.returns[i]) << '\n';
    if (derive_flag) {
      auto y = drop(rs.occurrences.front(), x);
      auto d = derive(y, rs, derive_length);
      std::cout << "derived: " << derived_alphabet(rs.size()).format(d) << '\n';
    }
  }
  if (!census.empty()) {
    for (const auto& e : derived_word_census(x, x, census, horizon, derive_length)) {
      std::cout << "census " << e.prefix_length << ": returns=" << e.return_count << " distinct=" << e.distinct
                << " derived=" << Alphabet::digits(std::max<std::size_t>(e.return_count, 1)).format(e.derived)
                << '\n';
    }
  }
  return kOk;
}

int cmd_casestudy(const Globals& g, const std::string& name, std::size_t n, bool porcelain) {
  auto r = run_casestudy(name, n, g.caps());
  std::cout << format_report(r, porcelain);
  return r.exit_code() == 0 ? kOk : kCheckFailed;
}

std::vector<std::size_t> parse_list(const std::string& s) {
  std::vector<std::size_t> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    auto v = std::stoul(item, &used);
    if (used != item.size()) throw std::invalid_argument(item);
    out.push_back(v);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Morphic words, subshift factors, extremal words and their morphic representations."};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--cap-symbols", g.cap_symbols, "maximum materialized symbols per word")->capture_default_str();
  app.add_option("--cap-work", g.cap_work, "factor-closure work budget")->capture_default_str();
  app.add_option("--seed-token-prefix", g.seed_prefix, "reserved prefix for synthesized letters")
      ->capture_default_str();
  app.add_flag("--allow-erasing", g.allow_erasing, "accept rules with an empty image");

  Input in;
  std::size_t length = 64;
  std::string coding, letter, order, inner, emit, factor, census;
  bool absent = false, derive_flag = false, porcelain = false;
  std::size_t verify = 0, horizon = 4096, mx_horizon = 4096;
  std::string study;

  auto* expand_cmd = app.add_subcommand("expand", "print a prefix of the fixed point");
  add_input(expand_cmd, in);
  expand_cmd->add_option("--length", length, "prefix length")->capture_default_str();
  expand_cmd->add_option("--coding", coding, "morphism applied to the fixed point")->check(CLI::ExistingFile);

  auto* classify_cmd = app.add_subcommand("classify", "mortal, bounded and growing letters");
  add_input(classify_cmd, in);

  auto* fp_cmd = app.add_subcommand("fixedpoints", "finite fixed points");
  add_input(fp_cmd, in);

  auto* factors_cmd = app.add_subcommand("factors", "factors of the fixed point of a given length");
  add_input(factors_cmd, in);
  factors_cmd->add_option("--length", length, "factor length")->required();
  factors_cmd->add_flag("--absent", absent, "list the words of that length that do not occur");

  auto* extremal_cmd = app.add_subcommand("extremal", "prefix of an extremal word");
  add_input(extremal_cmd, in);
  extremal_cmd->add_option("--letter", letter, "start letter")->required();
  extremal_cmd->add_option("--order", order, "total order, e.g. \"0<1<2\"")->required();
  extremal_cmd->add_option("--length", length, "prefix length")->required();
  extremal_cmd->add_option("--coding", coding, "morphism applied to the fixed point")->check(CLI::ExistingFile);

  auto* mx_cmd = app.add_subcommand("check-mx", "test the prefix-witness condition");
  add_input(mx_cmd, in);
  mx_cmd->add_option("--inner", inner, "morphism generating the word (defaults to the tested one)")
      ->check(CLI::ExistingFile);
  mx_cmd->add_option("--horizon-cap", mx_horizon, "largest factor horizon")->capture_default_str();

  auto* synth_cmd = app.add_subcommand("synthesize", "verified morphic representation of an extremal word");
  add_input(synth_cmd, in);
  synth_cmd->add_option("--letter", letter, "start letter")->required();
  synth_cmd->add_option("--order", order, "total order")->required();
  synth_cmd->add_option("--coding", coding, "morphism applied to the fixed point")->check(CLI::ExistingFile);
  synth_cmd->add_option("--verify", verify, "verification length");
  synth_cmd->add_option("--emit", emit, "write the representation to this path");

  auto* returns_cmd = app.add_subcommand("returns", "return words and derived words");
  add_input(returns_cmd, in);
  returns_cmd->add_option("--factor", factor, "factor u");
  returns_cmd->add_option("--horizon", horizon, "prefix length scanned")->capture_default_str();
  returns_cmd->add_flag("--derive", derive_flag, "print the derived word at the first occurrence");
  returns_cmd->add_option("--derive-length", length, "derived symbols printed")->capture_default_str();
  returns_cmd->add_option("--census", census, "comma-separated prefix lengths");

  auto* cs_cmd = app.add_subcommand("casestudy", "run a named case study");
  cs_cmd->add_option("name", study, "case study")->required()->check(CLI::IsMember(casestudy_names()));
  std::size_t cs_length = 5000;
  cs_cmd->add_option("--length", cs_length, "symbols compared per identity")->capture_default_str();
  cs_cmd->add_flag("--porcelain", porcelain, "tab-separated output without timings");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*expand_cmd) return cmd_expand(g, in, length, coding);
    if (*classify_cmd) return cmd_classify(g, in);
    if (*fp_cmd) return cmd_fixedpoints(g, in);
    if (*factors_cmd) return cmd_factors(g, in, length, absent);
    if (*extremal_cmd) return cmd_extremal(g, in, letter, order, length, coding);
    if (*mx_cmd) return cmd_check_mx(g, in, inner, mx_horizon);
    if (*synth_cmd) return cmd_synthesize(g, in, letter, order, coding, verify, emit);
    if (*returns_cmd) {
      if (factor.empty() && census.empty()) {
        std::cerr << "returns: give --factor or --census\n";
        return kUsage;
      }
      std::vector<std::size_t> lengths;
      try {
        lengths = census.empty() ? std::vector<std::size_t>{} : parse_list(census);
      } catch (const std::exception&) {
        std::cerr << "returns: --census expects comma-separated integers\n";
        return kUsage;
      }
      return cmd_returns(g, in, factor, horizon, derive_flag, length, lengths);
    }
    if (*cs_cmd) {
      if (cs_length < 64) {
        std::cerr << "casestudy: --length must be at least 64\n";
        return kUsage;
      }
      return cmd_casestudy(g, study, cs_length, porcelain);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRuntime;
  }
  return kUsage;
}
