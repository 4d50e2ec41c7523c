#include "r2sheaf/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "r2sheaf/bounds.hpp"
#include "r2sheaf/chow.hpp"
#include "r2sheaf/errors.hpp"
#include "r2sheaf/moduli.hpp"
#include "r2sheaf/serre.hpp"
#include "r2sheaf/vanish.hpp"

namespace r2sheaf::verify {

bool CriterionResult::passed() const {
  return !suites.empty() &&
         std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed(); });
}

std::size_t CriterionResult::cases() const {
  std::size_t n = 0;
  for (const auto& s : suites) n += s.cases;
  return n;
}

std::string CriterionResult::summary() const {
  std::ostringstream os;
  os << (passed() ? "PASS" : "FAIL") << " criterion " << number << ": " << title << " (";
  for (std::size_t i = 0; i < suites.size(); ++i) {
    const auto& s = suites[i];
    os << (i ? "; " : "") << s.name << " " << (s.cases - s.failures) << "/" << s.cases;
    os.precision(3);
    os << " in " << std::fixed << s.seconds << "s";
    if (s.budget_seconds > 0) os << " < " << s.budget_seconds << "s";
    if (s.budget_seconds > 0 && s.seconds >= s.budget_seconds) os << " OVER BUDGET";
  }
  os << ")";
  for (const auto& s : suites) {
    if (!s.first_failure.empty()) os << "\n    first failure in " << s.name << ": " << s.first_failure;
  }
  return os.str();
}

namespace {

using Clock = std::chrono::steady_clock;

// Collects case outcomes and timing for one suite.
class Suite {
 public:
  Suite(std::string name, double budget) : start_(Clock::now()) {
    r_.name = std::move(name);
    r_.budget_seconds = budget;
  }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++r_.cases;
    if (!ok) {
      ++r_.failures;
      if (r_.first_failure.empty()) r_.first_failure = describe();
    }
  }

  // Runs `body`; any exception counts as a failed case.
  template <typename Body>
  void guarded(Body body, const std::function<std::string()>& describe) {
    try {
      body();
    } catch (const std::exception& e) {
      check(false, [&] { return describe() + ": " + e.what(); });
    }
  }

  SuiteResult finish() {
    r_.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    return r_;
  }

 private:
  Clock::time_point start_;
  SuiteResult r_;
};

TwistFn twist_of(const Hooks& h) {
  if (h.twist) return h.twist;
  return [](const Rank2Sheaf& f, std::int64_t t) { return twist(f, t); };
}

std::string point(std::int64_t r, std::int64_t k, std::int64_t d, std::int64_t pa) {
  return "(r=" + std::to_string(r) + ", k=" + std::to_string(k) + ", d=" + std::to_string(d) +
         ", pa=" + std::to_string(pa) + ")";
}

// The grid r 1..10, k -5..5, d 1..40, pa 0..60; `visit` sees only points with
// c3 >= 0, together with the curve's sheaf.
template <typename Visit>
void sweep(Visit visit) {
  for (std::int64_t r = 1; r <= 10; ++r) {
    const auto x = hypersurface(r);
    for (std::int64_t k = -5; k <= 5; ++k) {
      for (std::int64_t d = 1; d <= 40; ++d) {
        for (std::int64_t pa = 0; pa <= 60; ++pa) {
          const CurveData c{Rational(d), pa};
          if (c3_from_curve(x, k, c) < 0) continue;
          visit(r, k, d, pa, x, sheaf_from_curve(x, k, c));
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------

SuiteResult rank_one_suite() {
  Suite s("rank-1 RR vs line bundle", 1.0);
  for (std::int64_t r = 1; r <= 10; ++r) {
    const auto x = hypersurface(r);
    for (std::int64_t m = -10; m <= 10; ++m) {
      const Rational rr = chi_rr(line_bundle_input(x, m));
      const Rational lb(chi_line_bundle(r, m));
      s.check(rr == lb, [&] {
        return "r=" + std::to_string(r) + " m=" + std::to_string(m) + ": " + to_string(rr) + " vs " + to_string(lb);
      });
    }
  }
  return s.finish();
}

SuiteResult closed_form_suite() {
  Suite s("closed form vs RR", 10.0);
  sweep([&](auto r, auto k, auto d, auto pa, const auto&, const Rank2Sheaf& f) {
    const Rational rr = chi_rr(f);
    const Rational cf = chi_closed_form(r, k, Rational(d), Rational(pa));
    s.check(rr == cf, [&] { return point(r, k, d, pa) + ": " + to_string(rr) + " vs " + to_string(cf); });
  });
  return s.finish();
}

SuiteResult dual_suite(const Hooks& h, bool positive_det) {
  const BinomialFn binom = h.binom ? h.binom : BinomialFn([](const Integer& n) { return binom_poly(n); });
  Suite s(positive_det ? "dual formula vs RR, k >= 1" : "dual formula vs RR, k <= 0", 10.0);
  sweep([&](auto r, auto k, auto d, auto pa, const auto&, const Rank2Sheaf& f) {
    if ((k >= 1) != positive_det) return;
    const Rational rr = chi_rr(dual(f));
    const Rational formula = chi_dual_formula(r, k, Rational(pa), binom);
    s.check(rr == formula,
            [&] { return point(r, k, d, pa) + ": " + to_string(rr) + " vs " + to_string(formula); });
  });
  return s.finish();
}

SuiteResult dual_spot_suite(const Hooks& h) {
  const BinomialFn binom = h.binom ? h.binom : BinomialFn([](const Integer& n) { return binom_poly(n); });
  Suite s("dual formula spot values", 0);
  const Rational v = chi_dual_formula(4, 1, Rational(1), binom);
  s.check(v == 0, [&] { return "(4,1,1) gave " + to_string(v); });
  for (std::int64_t pa = 0; pa <= 60; ++pa) {
    const Rational w = chi_dual_formula(5, 1, Rational(pa), binom);
    s.check(w == Rational(pa - 6), [&] { return "(5,1," + std::to_string(pa) + ") gave " + to_string(w); });
  }
  return s.finish();
}

SuiteResult serre_zero_suite() {
  Suite s("chi = 0 for locally free F with canonical det", 10.0);
  sweep([&](auto r, auto k, auto d, auto pa, const NumericalThreefold& x, const Rank2Sheaf& f) {
    if (k != -x.a || f.c3() != 0) return;
    const Rational chi = chi_rr(f);
    s.check(chi == 0, [&] { return point(r, k, d, pa) + ": chi = " + to_string(chi); });
  });
  return s.finish();
}

// Least n >= base with 4 (n - base)^2 >= 60 S - 525, by search.
Integer oldbound_by_search(std::int64_t S) {
  if (S <= 19) return Integer(31);
  const std::int64_t base = 4 * S - 27;
  const std::int64_t disc = 60 * S - 525;
  std::int64_t n = base;
  while (4 * (n - base) * (n - base) < disc) ++n;
  return Integer(static_cast<long>(n));
}

SuiteResult oldbound_suite() {
  Suite s("oldbound thresholds", 0);
  const std::pair<std::int64_t, long> fixed[] = {{19, 31}, {20, 66}, {25, 89}};
  for (const auto& [S, want] : fixed) {
    const Integer got = oldbound_threshold(S);
    s.check(got == want, [&] { return "S=" + std::to_string(S) + " gave " + to_string(got); });
  }
  for (std::int64_t S = 1; S <= 2000; ++S) {
    const Integer got = oldbound_threshold(S);
    const Integer want = oldbound_by_search(S);
    s.check(got == want, [&] {
      return "S=" + std::to_string(S) + ": " + to_string(got) + " vs search " + to_string(want);
    });
  }
  return s.finish();
}

SuiteResult castelnuovo_suite() {
  Suite s("section bound iff Castelnuovo", 10.0);
  sweep([&](auto r, auto k, auto d, auto pa, const auto&, const Rank2Sheaf& f) {
    const bool holds = section_c3_bound(f).holds;
    const bool castelnuovo = 2 * pa <= (d - 1) * (d - 2);
    s.check(holds == castelnuovo, [&] { return point(r, k, d, pa); });
  });
  return s.finish();
}

SuiteResult firstbound_suite() {
  Suite s("firstbound at n = 0", 0);
  for (std::int64_t r = 1; r <= 10; ++r) {
    const auto x = hypersurface(r);
    for (std::int64_t S = 1; S <= 40; ++S) {
      const Rational fb = firstbound_c3(x, 0, Rational(S), 1);
      const Rational rhs = section_c3_bound(Rank2Sheaf::make(x, 0, Rational(S), Rational(0))).rhs;
      s.check(fb == rhs, [&] {
        return "r=" + std::to_string(r) + " S=" + std::to_string(S) + ": " + to_string(fb) + " vs " + to_string(rhs);
      });
    }
  }
  return s.finish();
}

// Truncated power series in h, degree <= 2.
using Series = std::array<Integer, 3>;

Series multiply(const Series& p, const Series& q) {
  Series out{Integer(0), Integer(0), Integer(0)};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; i + j < 3; ++j) out[i + j] += p[i] * q[j];
  return out;
}

// 1/q for q with constant term 1.
Series invert(const Series& q) {
  Series inv{Integer(1), Integer(0), Integer(0)};
  for (int n = 1; n < 3; ++n) {
    Integer acc = 0;
    for (int j = 1; j <= n; ++j) acc -= q[j] * inv[n - j];
    inv[n] = acc;
  }
  return inv;
}

SuiteResult hypersurface_suite() {
  Suite s("hypersurface constants", 0);
  const auto quintic = hypersurface(5);
  s.check(quintic.N == 5 && quintic.a == 0 && quintic.b == 50, [] { return "quintic numerics"; });
  s.check(chi_structure_sheaf(quintic) == 0, [] { return "chi(O) on the quintic"; });
  const auto cubic = hypersurface(3);
  s.check(cubic.N == 3 && cubic.a == 2 && cubic.b == 12, [] { return "cubic numerics"; });
  s.check(chi_structure_sheaf(cubic) == 1, [] { return "chi(O) on the cubic"; });

  const Series ambient{Integer(1), Integer(5), Integer(10)};  // (1+h)^5
  for (std::int64_t r = 1; r <= 20; ++r) {
    const Integer rr(static_cast<long>(r));
    const Series normal{Integer(1), rr, Integer(0)};
    const Series tangent = multiply(ambient, invert(normal));
    const auto x = hypersurface(r);
    s.check(x.N == r && Integer(static_cast<long>(x.a)) == tangent[1] && x.b == Rational(rr * tangent[2]),
            [&] { return "r=" + std::to_string(r) + " disagrees with series division"; });
    const Rational beta = x.b / Rational(rr);
    const Series back = multiply(Series{Integer(1), Integer(static_cast<long>(x.a)), beta.get_num()}, normal);
    s.check(is_integer(beta), [&] { return "r=" + std::to_string(r) + " has non-integral second Chern coefficient"; });
    s.check(back == ambient, [&] { return "r=" + std::to_string(r) + " fails (1+ah+bh^2)(1+rh) = (1+h)^5"; });
  }
  return s.finish();
}

// ---------------------------------------------------------------------------
// Inference

std::vector<vanish::Assumption> parse_all(const std::vector<std::string>& names) {
  std::vector<vanish::Assumption> out;
  for (const auto& n : names) out.push_back(vanish::parse_assumption(n));
  return out;
}

bool has_rules(const vanish::VanishingFact& f, const std::vector<std::string>& rules) {
  return std::any_of(f.derivations.begin(), f.derivations.end(),
                     [&](const vanish::Provenance& p) { return p.rules() == rules; });
}

SuiteResult regression_suite() {
  Suite s("rational non-line curve on a cubic", 0);
  using vanish::Group;
  using vanish::SheafKind;
  const Group h2{2, {SheafKind::FDual, 0}};
  const Group h3{3, {SheafKind::FDual, 0}};
  const std::vector<std::string> two_rules{"dual-vanishing", "rational-curve"};
  const auto x = hypersurface(3);
  const CurveData conic{Rational(2), 0};

  s.guarded(
      [&] {
        const auto ctx = vanish::curve_context(x, 1, conic, parse_all({"section", "rational", "not-line"}));
        const auto facts = vanish::infer(ctx);
        for (const auto& g : {h2, h3}) {
          const auto* f = facts.find(g);
          s.check(f && f->status == vanish::Status::zero(), [&] { return to_string(g) + " = 0 not derived"; });
          s.check(f && has_rules(*f, two_rules),
                  [&] { return to_string(g) + " lacks the dual-vanishing + rational-curve derivation"; });
        }
        const auto without = vanish::curve_context(x, 1, conic, parse_all({"section", "not-line"}));
        const auto reduced = vanish::infer(without);
        for (const auto& g : {h2, h3}) {
          s.check(reduced.find(g) == nullptr, [&] { return to_string(g) + " survives removing rational"; });
        }
      },
      [] { return "inference"; });
  return s.finish();
}

SuiteResult moduli_suite() {
  Suite s("moduli reports", 0);
  s.guarded(
      [&] {
        const auto ctx = vanish::curve_context(hypersurface(3), 1, CurveData{Rational(2), 0},
                                               parse_all({"stable", "section", "rational", "normal-h1-zero"}));
        for (const auto& report : {moduli::check_fano_theorem(ctx), moduli::check_fanocor(ctx)}) {
          s.check(report.smooth && report.dimension && *report.dimension == 2,
                  [&] { return moduli::to_string(report.theorem) + " on the conic: " + report.conclusion; });
        }
        const auto cy = vanish::curve_context(hypersurface(5), 0, CurveData{Rational(5), 1},
                                              parse_all({"stable", "section", "h1-IC-det-zero", "normal-h1-zero"}));
        const auto report = moduli::check_cy_theorem(cy);
        const bool tension = std::any_of(report.notes.begin(), report.notes.end(),
                                         [](const std::string& n) { return n.rfind("bigthm-tension", 0) == 0; });
        s.check(report.smooth && report.dimension && *report.dimension == 0,
                [&] { return "cy on the quintic: " + report.conclusion; });
        s.check(tension, [] { return "cy report lacks the tension note"; });
      },
      [] { return "moduli"; });
  return s.finish();
}

// ---------------------------------------------------------------------------
// Randomized properties

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }
  bool coin(double p) { return std::bernoulli_distribution(p)(rng_); }

  NumericalThreefold threefold() {
    if (coin(0.5)) return hypersurface(uniform(1, 10));
    return make_threefold(uniform(1, 20), uniform(-6, 6), make_rational(uniform(-200, 400), uniform(1, 12)));
  }

  Rank2Sheaf sheaf() {
    return Rank2Sheaf::make(threefold(), uniform(-12, 12), make_rational(uniform(-100, 300), uniform(1, 6)),
                            make_rational(uniform(0, 60), uniform(1, 4)));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

std::string describe(const Rank2Sheaf& f) {
  const auto& x = f.threefold();
  return "X=(" + std::to_string(x.N) + "," + std::to_string(x.a) + "," + to_string(x.b) +
         ") F=(k=" + std::to_string(f.k()) + ", S=" + to_string(f.S()) + ", c3=" + to_string(f.c3()) + ")";
}

SuiteResult twist_group_suite(const Hooks& h) {
  Suite s("twist group action", 0);
  Sampler rnd(h.seed);
  const auto tw = twist_of(h);
  for (std::size_t i = 0; i < h.random_cases; ++i) {
    const auto f = rnd.sheaf();
    const auto a = rnd.uniform(-15, 15), b = rnd.uniform(-15, 15);
    s.guarded([&] { s.check(tw(tw(f, a), b) == tw(f, a + b) && tw(f, 0) == f, [&] { return describe(f); }); },
              [&] { return describe(f); });
  }
  return s.finish();
}

SuiteResult dual_involution_suite(const Hooks& h) {
  Suite s("dual involution", 0);
  Sampler rnd(h.seed + 1);
  const auto tw = twist_of(h);
  for (std::size_t i = 0; i < h.random_cases; ++i) {
    const auto f = rnd.sheaf();
    const auto t = rnd.uniform(-15, 15);
    s.guarded([&] { s.check(dual(dual(f)) == f && dual(tw(f, t)) == tw(dual(f), -t), [&] { return describe(f); }); },
              [&] { return describe(f); });
  }
  return s.finish();
}

SuiteResult c3_invariance_suite(const Hooks& h) {
  Suite s("c3 twist invariance", 0);
  Sampler rnd(h.seed + 2);
  const auto tw = twist_of(h);
  for (std::size_t i = 0; i < h.random_cases; ++i) {
    const auto f = rnd.sheaf();
    const auto t = rnd.uniform(-15, 15);
    s.guarded([&] { s.check(tw(f, t).c3() == f.c3() && dual(f).c3() == f.c3(), [&] { return describe(f); }); },
              [&] { return describe(f); });
  }
  return s.finish();
}

SuiteResult parity_suite(const Hooks& h) {
  Suite s("parity twist uniqueness", 0);
  Sampler rnd(h.seed + 3);
  const auto tw = twist_of(h);
  for (std::size_t i = 0; i < h.random_cases; ++i) {
    const auto f = rnd.sheaf();
    s.guarded(
        [&] {
          const std::int64_t target = -f.threefold().a;
          const auto m = canonical_parity(f);
          const bool even = (target - f.k()) % 2 == 0;
          bool ok = m.has_value() == even;
          const std::int64_t centre = (target - f.k()) / 2;
          for (std::int64_t t = centre - 6; t <= centre + 6; ++t) {
            const bool hits = tw(f, t).k() == target;
            ok = ok && hits == (m && *m == t);
          }
          s.check(ok, [&] { return describe(f); });
        },
        [&] { return describe(f); });
  }
  return s.finish();
}

SuiteResult dimension_suite(const Hooks& h) {
  Suite s("dimension twist invariance", 0);
  Sampler rnd(h.seed + 4);
  const auto tw = twist_of(h);
  for (std::size_t i = 0; i < h.random_cases; ++i) {
    const auto f = rnd.sheaf();
    const auto t = rnd.uniform(-15, 15);
    s.guarded(
        [&] {
          s.check(moduli::moduli_dimension(tw(f, t)) == moduli::moduli_dimension(f),
                  [&] { return describe(f) + " t=" + std::to_string(t); });
        },
        [&] { return describe(f); });
  }
  return s.finish();
}

std::vector<std::string> random_assumptions(Sampler& rnd, std::int64_t k, std::int64_t d, std::int64_t pa,
                                            const Rational& c3) {
  std::vector<std::string> out;
  auto maybe = [&](double p, const std::string& name) {
    if (rnd.coin(p)) out.push_back(name);
  };
  maybe(0.8, "section");
  const bool connected = rnd.coin(0.4);
  if (connected) out.push_back("connected");
  else maybe(0.15, "components=" + std::to_string(rnd.uniform(2, 3)));
  if (pa == 0) maybe(0.6, "rational");
  if (d >= 2) maybe(0.4, "not-line");
  maybe(0.3, "h1-O-zero");
  maybe(0.3, "h2-O-zero");
  maybe(0.3, "h1-IC-detomega-zero");
  maybe(0.3, "h1-IC-det-zero");
  maybe(0.3, "nonspecial-det");
  maybe(0.3, "stable");
  maybe(0.2, "normal-h1-zero");
  maybe(0.2, "h0-IC-zero=" + std::to_string(rnd.uniform(0, 2)));
  if (k >= 0) maybe(0.2, "det-effective");
  if (k >= 1) maybe(0.2, "det-ample");
  if (c3 == 0) maybe(0.1, "acm");
  std::shuffle(out.begin(), out.end(), rnd.engine());
  return out;
}

bool at_least(const vanish::Status& have, const vanish::Status& want) {
  return have == want || vanish::stronger(have, want);
}

bool mentions(const vanish::VanishingFact& f, const std::string& label) {
  return std::any_of(f.derivations.begin(), f.derivations.end(), [&](const vanish::Provenance& p) {
    const auto leaves = p.assertions();
    return std::find(leaves.begin(), leaves.end(), label) != leaves.end();
  });
}

SuiteResult provenance_suite(const Hooks& h) {
  Suite s("provenance soundness", 0);
  Sampler rnd(h.seed + 5);
  const auto rule_order = vanish::rule_ids();
  std::size_t attempts = 0;
  std::size_t evaluated = 0;
  while (evaluated < h.random_cases && attempts < 50 * h.random_cases) {
    ++attempts;
    const auto r = rnd.uniform(1, 5), k = rnd.uniform(-1, 3), d = rnd.uniform(1, 8), pa = rnd.uniform(0, 6);
    const auto x = hypersurface(r);
    const CurveData curve{Rational(d), pa};
    if (c3_from_curve(x, k, curve) < 0) continue;
    const auto names = random_assumptions(rnd, k, d, pa, c3_from_curve(x, k, curve));
    const auto ctx = vanish::curve_context(x, k, curve, parse_all(names));
    vanish::FactSet full;
    try {
      full = vanish::infer(ctx);
    } catch (const InconsistentData&) {
      continue;  // contradictory random hypotheses; not a soundness case
    }
    ++evaluated;
    const auto where = [&] {
      std::string w = point(r, k, d, pa) + " assuming";
      for (const auto& n : names) w += " " + n;
      return w;
    };

    s.guarded(
        [&] {
          bool ok = true;
          std::string why;
          auto fail = [&](std::string msg) {
            if (ok) why = std::move(msg);
            ok = false;
          };

          // Evaluation order must not matter.
          auto order = rule_order;
          std::shuffle(order.begin(), order.end(), rnd.engine());
          if (!(vanish::infer(ctx, {order, 64}) == full)) fail("rule order changes the result");

          // Each derivation, replayed from its asserted leaves alone, re-derives its fact.
          std::map<std::vector<std::string>, vanish::FactSet> replays;
          for (const auto& fact : full.facts) {
            for (const auto& p : fact.derivations) {
              const auto leaves = p.assertions();
              auto it = replays.find(leaves);
              if (it == replays.end()) {
                auto sub = ctx;
                sub.assumptions = parse_all(leaves);
                it = replays.emplace(leaves, vanish::infer(sub)).first;
              }
              const auto* again = it->second.find(fact.group);
              if (!again || !at_least(again->status, fact.status)) fail("replay loses " + to_string(fact.group));
            }
          }

          // Deleting an asserted premise removes what depends on it and keeps the rest.
          for (std::size_t i = 0; i < ctx.assumptions.size(); ++i) {
            const std::string label = vanish::to_string(ctx.assumptions[i]);
            auto sub = ctx;
            sub.assumptions.erase(sub.assumptions.begin() + static_cast<std::ptrdiff_t>(i));
            const auto reduced = vanish::infer(sub);
            for (const auto& fact : reduced.facts) {
              const auto* before = full.find(fact.group);
              if (!before || !at_least(before->status, fact.status)) fail("deleting " + label + " adds facts");
              if (mentions(fact, label)) fail("deleted premise " + label + " still cited");
            }
            for (const auto& fact : full.facts) {
              const bool independent =
                  std::any_of(fact.derivations.begin(), fact.derivations.end(), [&](const vanish::Provenance& p) {
                    const auto leaves = p.assertions();
                    return std::find(leaves.begin(), leaves.end(), label) == leaves.end();
                  });
              const auto* after = reduced.find(fact.group);
              if (independent && (!after || !(after->status == fact.status))) {
                fail("deleting " + label + " drops independent " + to_string(fact.group));
              }
            }
          }
          s.check(ok, [&] { return where() + ": " + why; });
        },
        where);
  }
  if (evaluated < h.random_cases) {
    s.check(false, [&] { return "only " + std::to_string(evaluated) + " consistent contexts generated"; });
  }
  return s.finish();
}

}  // namespace

CriterionResult rank_one_consistency(const Hooks&) {
  return {1, "rank-1 RR consistency", {rank_one_suite()}};
}

CriterionResult closed_form_sweep(const Hooks&) {
  return {2, "closed form = RR", {closed_form_suite()}};
}

CriterionResult dual_formula_sweep(const Hooks& h) {
  return {3, "dual Euler characteristic identity", {dual_suite(h, true), dual_suite(h, false), dual_spot_suite(h)}};
}

CriterionResult serre_duality_zero(const Hooks&) {
  return {4, "Serre-duality zero", {serre_zero_suite()}};
}

CriterionResult oldbound_thresholds(const Hooks&) {
  return {5, "oldbound thresholds", {oldbound_suite()}};
}

CriterionResult castelnuovo_equivalence(const Hooks&) {
  return {6, "Castelnuovo equivalence", {castelnuovo_suite()}};
}

CriterionResult firstbound_degeneration(const Hooks&) {
  return {7, "firstbound degeneration", {firstbound_suite()}};
}

CriterionResult hypersurface_constants(const Hooks&) {
  return {8, "hypersurface constants", {hypersurface_suite()}};
}

CriterionResult inference_regression(const Hooks&) {
  return {9, "inference regression", {regression_suite()}};
}

CriterionResult moduli_reports(const Hooks&) {
  return {10, "moduli reports", {moduli_suite()}};
}

CriterionResult property_suites(const Hooks& h) {
  CriterionResult out{11, "property suites", {}};
  out.suites.push_back(twist_group_suite(h));
  out.suites.push_back(dual_involution_suite(h));
  out.suites.push_back(c3_invariance_suite(h));
  out.suites.push_back(parity_suite(h));
  out.suites.push_back(dimension_suite(h));
  out.suites.push_back(provenance_suite(h));
  return out;
}

std::vector<CriterionResult> run_all(const Hooks& h) {
  const auto start = Clock::now();
  std::vector<CriterionResult> out{
      rank_one_consistency(h),    closed_form_sweep(h),       dual_formula_sweep(h),
      serre_duality_zero(h),      oldbound_thresholds(h),     castelnuovo_equivalence(h),
      firstbound_degeneration(h), hypersurface_constants(h),  inference_regression(h),
      moduli_reports(h),          property_suites(h)};
  SuiteResult total;
  total.name = "full run";
  total.cases = 1;
  total.budget_seconds = 30.0;
  total.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  out.back().suites.push_back(total);
  return out;
}

}  // namespace r2sheaf::verify
