// Copyright 2026 The primesym Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "primesym/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <thread>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "primesym/acceptance.hpp"
#include "primesym/error.hpp"
#include "primesym/kneading.hpp"
#include "primesym/numtheory.hpp"
#include "primesym/sieve.hpp"
#include "primesym/svg.hpp"
#include "primesym/symseq.hpp"

namespace primesym {

namespace {

constexpr const char* kVersion = "primesym 0.1.0";

// Flag combination the grammar does not allow; exit 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string real(double v) { return fmt::format("{:.17g}", v); }

std::string format_json(const nlohmann::ordered_json& j) { return j.dump(); }

void add_format(CLI::App* sub, std::string& format, std::vector<std::string> allowed) {
  sub->add_option("--format", format, "Output format")
      ->check(CLI::IsMember(std::move(allowed)))
      ->capture_default_str();
}

struct SieveArgs {
  std::size_t steps = 1;
  std::size_t cap = kDefaultPrefixCap;
  std::string emit = "word";
  std::optional<std::uint64_t> limit;
  std::optional<std::uint64_t> gap, lo, hi, at, p;
  std::string format = "text";
};

struct WordPairArgs {
  std::string a, b;
  std::string emit = "word";
  std::size_t horizon = kDefaultHorizon;
};

struct StarArgs {
  std::string p, q;
  std::optional<unsigned> power;
};

struct KneadArgs {
  std::string word;
  std::optional<std::size_t> horizon;
  double tol = kDefaultParameterTol;
  std::string format = "text";
};

struct ItineraryArgs {
  double u = 2.0;
  std::size_t n = 64;
  double ctol = kDefaultCriticalTol;
  bool orbit = false;
  double x0 = 0.0;
};

struct EntropyArgs {
  std::string word;
  std::size_t truncation = kDefaultTruncation;
  bool laps = false;
  std::optional<double> u;
  unsigned n = 20;
  std::string format = "text";
};

struct LyapunovArgs {
  double u = 2.0;
  std::size_t n = 10'000'000;
  std::size_t burn_in = 10'000;
  double x0 = 0.3;
};

struct BifurcationArgs {
  double u_min = 1.3;
  double u_max = 2.0;
  std::size_t steps = 700;
  std::size_t transient = 1000;
  std::size_t keep = 200;
  std::string svg;
  bool parallel = false;
};

struct BandsArgs {
  double u = 1.52;
  std::size_t samples = 100'000;
  std::size_t min_gap_bins = kBandMinGapBins;
};

struct GoldbachArgs {
  std::optional<std::uint64_t> n, from, to;
};

struct TwinArgs {
  std::uint64_t lo = 1, hi = 100;
};

struct EstimateArgs {
  std::uint64_t p = 11;
  bool compare = false;
};

void run_sieve(const SieveArgs& a, std::ostream& out) {
  auto require = [](const std::optional<std::uint64_t>& v, const char* flag) {
    if (!v) throw UsageError(std::string("--emit needs ") + flag);
    return *v;
  };
  if (a.emit == "mword") {
    out << format_word(m_of_prime(require(a.p, "--p"))) << '\n';
    return;
  }
  if (a.emit == "classic") {
    out << format_prime_table(classic_sieve(require(a.limit, "--limit")));
    return;
  }
  const SieveState s = sieve_to(a.steps, a.cap);
  if (a.emit == "word") {
    out << format_word(period_word(s)) << '\n';
  } else if (a.emit == "next") {
    out << format_word(f_extract(s)) << '\n';
  } else if (a.emit == "state") {
    out << serialize_state(s) << '\n';
  } else if (a.emit == "symbol") {
    out << to_char(symbol_at(s, require(a.at, "--at"))) << '\n';
  } else if (a.emit == "gaps") {
    out << gap_pattern_count(s, require(a.gap, "--gap"), require(a.lo, "--lo"),
                             require(a.hi, "--hi"))
        << '\n';
  } else if (a.emit == "primes") {
    const auto primes = primes_from_state(s, require(a.limit, "--limit"));
    if (a.format == "json") {
      out << nlohmann::json(primes).dump() << '\n';
    } else {
      for (auto p : primes) out << p << '\n';
    }
  }
}

void run_compose(const WordPairArgs& a, std::ostream& out) {
  const Word left = parse_word(a.a);
  const Word w = a.b.empty() ? left : dot_compose(left, parse_word(a.b));
  if (a.emit == "period") {
    out << minimal_period(w) << '\n';
  } else {
    out << format_word(w) << '\n';
  }
}

void run_star(const StarArgs& a, std::ostream& out) {
  const Word p = parse_word(a.p);
  if (!a.q.empty() && a.power) throw UsageError("give either --q or --power, not both");
  if (!a.q.empty()) {
    out << format_word(star_compose(p, parse_word(a.q))) << '\n';
  } else if (a.power) {
    out << format_word(star_power(p, *a.power)) << '\n';
  } else {
    throw UsageError("star needs --q or --power");
  }
}

void run_knead(const KneadArgs& a, std::ostream& out) {
  const KneadResult r = u_of_word(parse_word(a.word), a.horizon, a.tol);
  if (a.format == "json") {
    nlohmann::ordered_json j;
    j["word"] = format_word(r.target);
    j["u"] = r.u;
    j["horizon"] = r.horizon;
    j["tolerance"] = r.tolerance;
    j["matched_prefix_len"] = r.matched_prefix_len;
    out << format_json(j) << '\n';
  } else {
    out << real(r.u) << '\n';
  }
}

void run_itinerary(const ItineraryArgs& a, std::ostream& out) {
  if (a.orbit) {
    for (double x : iterate_map(a.u, a.x0, a.n)) out << real(x) << '\n';
  } else {
    out << format_word(itinerary(a.u, a.n, a.ctol)) << '\n';
  }
}

void run_entropy(const EntropyArgs& a, std::ostream& out) {
  if (a.laps) {
    if (!a.u) throw UsageError("--laps needs --u");
    out << lap_count_oracle(*a.u, a.n) << '\n';
    return;
  }
  if (a.word.empty()) throw UsageError("entropy needs --word (or --laps --u)");
  const Word w = parse_word(a.word);
  const EntropyResult r = topological_entropy(w, a.truncation);
  if (a.format == "json") {
    nlohmann::ordered_json j;
    j["word"] = format_word(w);
    j["entropy"] = r.entropy;
    j["root"] = r.root;
    j["root_found"] = r.root_found;
    out << format_json(j) << '\n';
  } else {
    out << real(r.entropy) << '\n';
  }
}

void run_bifurcation(const BifurcationArgs& a, std::ostream& out) {
  const unsigned workers =
      a.parallel ? std::max(2u, std::thread::hardware_concurrency()) : 1u;
  const auto points =
      bifurcation_data(a.u_min, a.u_max, a.steps, a.transient, a.keep, workers);
  out << "u,x\n";
  for (const auto& p : points) out << real(p.u) << ',' << real(p.x) << '\n';
  if (!a.svg.empty()) {
    std::ofstream file(a.svg);
    if (!file) throw Error("cannot open " + a.svg + " for writing");
    file << bifurcation_svg(points, a.u_min, a.u_max, kBifurcationMarkers);
  }
}

void run_goldbach(const GoldbachArgs& a, std::ostream& out) {
  if (a.n) {
    if (a.from || a.to) throw UsageError("give either --n or --from/--to");
    out << *a.n << ',' << goldbach_r(*a.n) << '\n';
    return;
  }
  if (!a.from || !a.to) throw UsageError("goldbach needs --n or both --from and --to");
  for (const auto& [n, r] : goldbach_range(*a.from, *a.to)) out << n << ',' << r << '\n';
}

void run_estimate(const EstimateArgs& a, std::ostream& out) {
  const double est = prime_count_estimate(a.p);
  if (!a.compare) {
    out << real(est) << '\n';
    return;
  }
  const PrimeTable table = classic_sieve(a.p * a.p);
  const auto actual = table.count_between(a.p, a.p * a.p);
  out << "p,estimate,actual,ratio\n"
      << a.p << ',' << real(est) << ',' << actual << ','
      << real(est / static_cast<double>(actual)) << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symbolic sieve words, kneading theory of x -> 1 - u x^2, and prime oracles",
               "primesym"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  SieveArgs sieve;
  auto* s = app.add_subcommand("sieve", "Composed sieve word D_i and what it encodes");
  s->add_option("--steps", sieve.steps, "Index i of D_i (D_1 = RL)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  s->add_option("--cap", sieve.cap, "Explicit prefix length")->capture_default_str();
  s->add_option("--emit", sieve.emit, "What to print")
      ->check(CLI::IsMember({"word", "next", "state", "symbol", "gaps", "primes", "mword",
                             "classic"}))
      ->capture_default_str();
  s->add_option("--limit", sieve.limit, "Upper bound for primes / classic");
  s->add_option("--gap", sieve.gap, "Even gap for --emit gaps");
  s->add_option("--lo", sieve.lo, "Inclusive window start for gaps");
  s->add_option("--hi", sieve.hi, "Inclusive window end for gaps");
  s->add_option("--at", sieve.at, "Position for --emit symbol");
  s->add_option("--p", sieve.p, "Prime for --emit mword");
  add_format(s, sieve.format, {"text", "json"});

  WordPairArgs compose;
  auto* c = app.add_subcommand("compose", "Sieve product A . B, or minimal period");
  c->add_option("--a", compose.a, "Left word")->required();
  c->add_option("--b", compose.b, "Right word");
  c->add_option("--emit", compose.emit, "word or period")
      ->check(CLI::IsMember({"word", "period"}))
      ->capture_default_str();

  StarArgs star;
  auto* st = app.add_subcommand("star", "DGP composition P * Q or power P^{*k}");
  st->add_option("--p", star.p, "Left word, ending in C")->required();
  st->add_option("--q", star.q, "Right word");
  st->add_option("--power", star.power, "Number of factors")->check(CLI::PositiveNumber);

  WordPairArgs compare;
  auto* cmp = app.add_subcommand("compare", "Parity-lexicographic comparison");
  cmp->add_option("--a", compare.a, "Left word")->required();
  cmp->add_option("--b", compare.b, "Right word")->required();
  cmp->add_option("--horizon", compare.horizon)->check(CLI::PositiveNumber)->capture_default_str();

  WordPairArgs admissible;
  auto* adm = app.add_subcommand("admissible", "Is the word a kneading sequence");
  adm->add_option("--word", admissible.a, "Word starting with R")->required();
  adm->add_option("--horizon", admissible.horizon)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  KneadArgs knead;
  auto* k = app.add_subcommand("knead-u", "Parameter u realizing a kneading word");
  k->add_option("--word", knead.word, "Kneading word")->required();
  k->add_option("--horizon", knead.horizon, "Comparison horizon")->check(CLI::PositiveNumber);
  k->add_option("--tol", knead.tol, "Bisection tolerance")->capture_default_str();
  add_format(k, knead.format, {"text", "json"});

  ItineraryArgs itin;
  auto* it = app.add_subcommand("itinerary", "Critical itinerary, or an orbit with --orbit");
  it->add_option("--u", itin.u)->capture_default_str();
  it->add_option("--n", itin.n)->capture_default_str();
  it->add_option("--ctol", itin.ctol, "|x| below which C is emitted")->capture_default_str();
  it->add_flag("--orbit", itin.orbit, "Print x_1..x_n from --x0 instead");
  it->add_option("--x0", itin.x0)->capture_default_str();

  EntropyArgs entropy;
  auto* e = app.add_subcommand("entropy", "Topological entropy, or lap count with --laps");
  e->add_option("--word", entropy.word, "Kneading word");
  e->add_option("--truncation", entropy.truncation)->capture_default_str();
  e->add_flag("--laps", entropy.laps, "Lap number of f^n at --u");
  e->add_option("--u", entropy.u);
  e->add_option("--n", entropy.n, "Iterate for --laps")->capture_default_str();
  add_format(e, entropy.format, {"text", "json"});

  LyapunovArgs lyap;
  auto* l = app.add_subcommand("lyapunov", "Lyapunov exponent of the orbit of --x0");
  l->add_option("--u", lyap.u)->capture_default_str();
  l->add_option("--n", lyap.n)->capture_default_str();
  l->add_option("--burn-in", lyap.burn_in)->capture_default_str();
  l->add_option("--x0", lyap.x0)->capture_default_str();

  BifurcationArgs bif;
  auto* b = app.add_subcommand("bifurcation", "Bifurcation samples as CSV u,x");
  b->add_option("--u-min", bif.u_min)->capture_default_str();
  b->add_option("--u-max", bif.u_max)->capture_default_str();
  b->add_option("--steps", bif.steps)->check(CLI::PositiveNumber)->capture_default_str();
  b->add_option("--transient", bif.transient)->capture_default_str();
  b->add_option("--keep", bif.keep)->capture_default_str();
  b->add_option("--svg", bif.svg, "Also write an SVG scatter to this path");
  b->add_flag("--parallel", bif.parallel, "Partition the u grid across threads");

  BandsArgs bands;
  auto* bd = app.add_subcommand("bands", "Number of chaotic bands (1 or 2)");
  bd->add_option("--u", bands.u)->capture_default_str();
  bd->add_option("--samples", bands.samples)->capture_default_str();
  bd->add_option("--min-gap-bins", bands.min_gap_bins)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  GoldbachArgs gold;
  auto* g = app.add_subcommand("goldbach", "Goldbach partition counts as CSV n,r");
  g->add_option("--n", gold.n);
  g->add_option("--from", gold.from);
  g->add_option("--to", gold.to);

  TwinArgs twin;
  auto* tw = app.add_subcommand("twins", "Twin prime pairs inside [lo, hi]");
  tw->add_option("--lo", twin.lo)->capture_default_str();
  tw->add_option("--hi", twin.hi)->capture_default_str();

  EstimateArgs est;
  auto* es = app.add_subcommand("estimate", "p(p-2)/(2 ln p) primes in (p, p^2)");
  es->add_option("--p", est.p)->required();
  es->add_flag("--compare", est.compare, "Also count the actual primes");

  std::string suite = "all";
  auto* v = app.add_subcommand("verify", "Run acceptance criteria");
  v->add_option("--suite", suite)->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& pe) {
    err << "usage error: " << pe.what() << '\n';
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return kExitUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  try {
    if (chosen == s) {
      run_sieve(sieve, out);
    } else if (chosen == c) {
      run_compose(compose, out);
    } else if (chosen == st) {
      run_star(star, out);
    } else if (chosen == cmp) {
      out << to_string(parity_compare(parse_word(compare.a), parse_word(compare.b),
                                      compare.horizon))
          << '\n';
    } else if (chosen == adm) {
      out << (is_admissible(parse_word(admissible.a), admissible.horizon) ? "true" : "false")
          << '\n';
    } else if (chosen == k) {
      run_knead(knead, out);
    } else if (chosen == it) {
      run_itinerary(itin, out);
    } else if (chosen == e) {
      run_entropy(entropy, out);
    } else if (chosen == l) {
      out << real(lyapunov(lyap.u, lyap.n, lyap.burn_in, lyap.x0)) << '\n';
    } else if (chosen == b) {
      run_bifurcation(bif, out);
    } else if (chosen == bd) {
      out << band_structure(bands.u, bands.samples, bands.min_gap_bins) << '\n';
    } else if (chosen == g) {
      run_goldbach(gold, out);
    } else if (chosen == tw) {
      out << twin_count(twin.lo, twin.hi) << '\n';
    } else if (chosen == es) {
      run_estimate(est, out);
    } else if (chosen == v) {
      bool all = true;
      for (const auto& r : run_acceptance(suite)) {
        out << format_criterion(r) << '\n';
        all = all && r.passed;
      }
      return all ? kExitOk : kExitComputation;
    }
  } catch (const UsageError& ue) {
    err << "usage error: " << ue.what() << '\n' << chosen->help();
    return kExitUsage;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitComputation;
  }
  return kExitOk;
}

}  // namespace primesym
