// Command-line driver: chi, scan, vanish, moduli, bound and selftest.
//
// Exit codes: 0 success, 1 invalid input, 2 inconsistent mathematical data,
// 3 internal identity failure.

#include <CLI11.hpp>

#include <charconv>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "r2sheaf/bounds.hpp"
#include "r2sheaf/chow.hpp"
#include "r2sheaf/errors.hpp"
#include "r2sheaf/euler.hpp"
#include "r2sheaf/json_io.hpp"
#include "r2sheaf/moduli.hpp"
#include "r2sheaf/serre.hpp"
#include "r2sheaf/sheaf.hpp"
#include "r2sheaf/vanish.hpp"
#include "r2sheaf/verify.hpp"

namespace {

using namespace r2sheaf;
using nlohmann::json;

constexpr int kExitInvalid = 1;
constexpr int kExitInconsistent = 2;
constexpr int kExitIdentity = 3;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::int64_t parse_int(const std::string& text, const std::string& what) {
  std::int64_t v = 0;
  const char* end = text.data() + text.size();
  auto [p, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || p != end || text.empty()) throw InvalidInput(what + ": expected an integer, got '" + text + "'");
  return v;
}

struct Range {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

// "A..B" or a single integer.
Range parse_range(const std::string& text, const std::string& what) {
  const auto dots = text.find("..");
  Range r;
  if (dots == std::string::npos) {
    r.lo = r.hi = parse_int(text, what);
  } else {
    r.lo = parse_int(text.substr(0, dots), what);
    r.hi = parse_int(text.substr(dots + 2), what);
  }
  if (r.lo > r.hi) throw InvalidInput(what + ": empty range " + text);
  return r;
}

// Flags shared by the subcommands that act on one sheaf.
struct Spec {
  std::optional<std::int64_t> hypersurface;
  std::string threefold;
  std::optional<std::int64_t> det;
  std::string c2;
  std::string c3;
  std::string curve;
  std::vector<std::string> assume;
  std::string twists;
  bool json = false;

  void attach(CLI::App* app) {
    auto* h = app->add_option("--hypersurface", hypersurface, "smooth hypersurface of degree R in P^4");
    auto* t = app->add_option("--threefold", threefold, "numerical threefold N,A,B (h^3, c1 = A h, c2.h = B)");
    h->excludes(t);
    app->add_option("--det", det, "c1(F) = K h");
    auto* s = app->add_option("--c2", c2, "c2(F).h");
    auto* c = app->add_option("--c3", c3, "c3(F)");
    auto* cv = app->add_option("--curve", curve, "zero scheme of a section: degree D, arithmetic genus PA");
    cv->excludes(s)->excludes(c);
    app->add_option("--assume", assume, "assumption id (repeatable)");
    app->add_option("--twists", twists, "comma-separated twists to instantiate");
    app->add_flag("--json", json, "JSON output");
  }

  NumericalThreefold x() const {
    if (hypersurface) return r2sheaf::hypersurface(*hypersurface);
    if (threefold.empty()) throw InvalidInput("one of --hypersurface or --threefold is required");
    const auto parts = split(threefold, ',');
    if (parts.size() != 3) throw InvalidInput("--threefold expects N,A,B");
    return make_threefold(parse_int(parts[0], "N"), parse_int(parts[1], "A"), parse_rational(parts[2]));
  }

  std::int64_t k() const {
    if (!det) throw InvalidInput("--det is required");
    return *det;
  }

  std::optional<CurveData> curve_data() const {
    if (curve.empty()) return std::nullopt;
    const auto parts = split(curve, ',');
    if (parts.size() != 2) throw InvalidInput("--curve expects D,PA");
    CurveData c{parse_rational(parts[0]), parse_int(parts[1], "PA")};
    c.validate();
    return c;
  }

  bool has_sheaf() const { return !curve.empty() || !c2.empty() || !c3.empty(); }

  Rank2Sheaf sheaf() const {
    const auto nx = x();
    if (auto c = curve_data()) return sheaf_from_curve(nx, k(), *c);
    if (c2.empty() || c3.empty()) throw InvalidInput("a sheaf needs --curve D,PA or both --c2 and --c3");
    return Rank2Sheaf::make(nx, k(), parse_rational(c2), parse_rational(c3));
  }

  std::vector<vanish::Assumption> assumptions() const {
    std::vector<vanish::Assumption> out;
    for (const auto& a : assume) out.push_back(vanish::parse_assumption(a));
    return out;
  }

  std::vector<std::int64_t> twist_list() const {
    std::vector<std::int64_t> out;
    if (twists.empty()) return out;
    for (const auto& t : split(twists, ',')) out.push_back(parse_int(t, "--twists"));
    return out;
  }

  vanish::Context context() const {
    if (auto c = curve_data()) return vanish::curve_context(x(), k(), *c, assumptions(), twist_list());
    return vanish::sheaf_context(sheaf(), assumptions(), twist_list());
  }
};

void describe_input(std::ostream& os, const NumericalThreefold& x, const Rank2Sheaf& f) {
  os << "X: " << (x.label.empty() ? "threefold" : x.label) << " (N=" << x.N << ", a=" << x.a
     << ", c2.h=" << to_string(x.b) << ")\n";
  os << "F: c1 = " << f.k() << "h, c2.h = " << to_string(f.S()) << ", c3 = " << to_string(f.c3())
     << (f.locally_free() ? " (locally free)" : " (not locally free)") << "\n";
}

// ---------------------------------------------------------------------------

int run_chi(const Spec& spec) {
  const auto x = spec.x();
  const auto f = spec.sheaf();
  const auto curve = spec.curve_data();
  const Rational chi = chi_rr(f);
  const Rational chi_dual_rr = chi_rr(dual(f));

  json out{{"threefold", io::to_json(x)}, {"sheaf", io::to_json(f)}, {"chi", to_string(chi)},
           {"chi_dual_rr", to_string(chi_dual_rr)}, {"c3", to_string(f.c3())}};
  std::optional<Rational> closed, dual_formula;
  if (x.hypersurface_degree && curve) {
    const auto r = *x.hypersurface_degree;
    closed = chi_closed_form(r, f.k(), curve->d, Rational(curve->pa));
    dual_formula = chi_dual_formula(r, f.k(), Rational(curve->pa));
    out["curve"] = json{{"d", to_string(curve->d)}, {"pa", curve->pa}};
    out["chi_closed_form"] = to_string(*closed);
    out["chi_dual"] = to_string(*dual_formula);
  }
  const bool agree = (!closed || *closed == chi) && (!dual_formula || *dual_formula == chi_dual_rr);
  out["agreement"] = agree;

  std::optional<GenusResult> genus;
  if (!curve) {
    genus = genus_from_c3(x, f.k(), f.S(), f.c3());
    out["implied_genus"] = to_string(genus->pa);
    const bool section = std::any_of(spec.assume.begin(), spec.assume.end(),
                                     [](const std::string& a) { return a == "section"; });
    if (!genus->consistent && section) {
      throw InconsistentData("section asserted but the zero curve would have genus " + to_string(genus->pa) +
                             ": " + genus->warning);
    }
  }

  if (spec.json) {
    std::cout << out.dump(2) << "\n";
  } else {
    describe_input(std::cout, x, f);
    std::cout << "chi(F)  = " << to_string(chi) << "\n";
    if (closed) std::cout << "chi(F)  closed form = " << to_string(*closed) << (*closed == chi ? "  ok" : "  MISMATCH") << "\n";
    std::cout << "chi(F*) = " << to_string(chi_dual_rr) << "\n";
    if (dual_formula) {
      std::cout << "chi(F*) formula = " << to_string(*dual_formula)
                << (*dual_formula == chi_dual_rr ? "  ok" : "  MISMATCH") << "\n";
    }
    if (genus) {
      std::cout << "genus of a section's zero curve = " << to_string(genus->pa);
      if (!genus->consistent) std::cout << "  (" << genus->warning << ")";
      std::cout << "\n";
    }
    if (closed || dual_formula) std::cout << "agreement: " << (agree ? "ok" : "FAILED") << "\n";
  }
  if (!agree) throw IdentityFailure("closed forms disagree with Riemann-Roch");
  return 0;
}

// ---------------------------------------------------------------------------

struct ScanOptions {
  std::string r = "1..10", k = "-5..5", d = "1..40", pa = "0..60";
  std::string filter = "valid";
};

int run_scan(const ScanOptions& o) {
  const auto rr = parse_range(o.r, "--r"), kr = parse_range(o.k, "--k"), dr = parse_range(o.d, "--d"),
             pr = parse_range(o.pa, "--pa");
  if (rr.lo < 1) throw InvalidInput("--r: hypersurface degree must be >= 1");
  if (dr.lo < 1) throw InvalidInput("--d: curve degree must be >= 1");
  if (o.filter != "valid" && o.filter != "boundary" && o.filter != "all") {
    throw InvalidInput("--filter must be valid, boundary or all");
  }
  std::cout << "r,k,d,pa,c3,chi,chi_dual,sectionbound_holds,oldbound_n,moduli_dim\n";
  for (auto r = rr.lo; r <= rr.hi; ++r) {
    const auto x = hypersurface(r);
    for (auto k = kr.lo; k <= kr.hi; ++k) {
      for (auto d = dr.lo; d <= dr.hi; ++d) {
        for (auto pa = pr.lo; pa <= pr.hi; ++pa) {
          const CurveData curve{Rational(d), pa};
          const Rational c3 = c3_from_curve(x, k, curve);
          const std::string key = std::to_string(r) + "," + std::to_string(k) + "," + std::to_string(d) + "," +
                                  std::to_string(pa) + ",";
          if (c3 < 0) {
            if (o.filter == "all") std::cout << key << "invalid(" << to_string(c3) << "),,,,,\n";
            continue;
          }
          const auto f = sheaf_from_curve(x, k, curve);
          const auto bound = section_c3_bound(f);
          if (o.filter == "boundary" && c3 != 0 && bound.slack() != 0) continue;
          const Rational chi = chi_rr(f);
          const Rational chi_dual = chi_dual_formula(r, k, Rational(pa));
          if (chi != chi_closed_form(r, k, Rational(d), Rational(pa)) || chi_dual != chi_rr(dual(f))) {
            throw IdentityFailure("closed forms disagree with Riemann-Roch at " + key);
          }
          std::cout << key << to_string(c3) << "," << to_string(chi) << "," << to_string(chi_dual) << ","
                    << (bound.holds ? "true" : "false") << ","
                    << (r == 5 ? to_string(oldbound_threshold(d)) : std::string()) << ","
                    << to_string(moduli::moduli_dimension(f)) << "\n";
        }
      }
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------

int run_vanish(const Spec& spec, bool all_derivations) {
  const auto ctx = spec.context();
  const auto facts = vanish::infer(ctx);
  if (spec.json) {
    std::cout << io::to_json(facts).dump(2) << "\n";
    return 0;
  }
  describe_input(std::cout, ctx.x, ctx.sheaf);
  std::cout << "twists:";
  for (auto t : ctx.twists) std::cout << " " << t;
  std::cout << "\n\n";
  if (facts.facts.empty()) std::cout << "no vanishing facts derived\n";
  for (const auto& f : facts.facts) {
    std::cout << vanish::to_string(f.group) << ": " << vanish::to_string(f.status) << "\n";
    const std::size_t shown = all_derivations ? f.derivations.size() : 1;
    for (std::size_t i = 0; i < shown; ++i) {
      if (all_derivations) std::cout << "  derivation " << i + 1 << ":\n";
      std::cout << f.derivations[i].render(all_derivations ? 2 : 1);
    }
    if (!all_derivations && f.derivations.size() > 1) {
      std::cout << "  (" << f.derivations.size() - 1 << " further derivation"
                << (f.derivations.size() > 2 ? "s" : "") << "; --all-derivations shows them)\n";
    }
  }
  if (!facts.premises.empty()) {
    std::cout << "\nderived hypotheses:\n";
    for (const auto& p : facts.premises) {
      std::cout << vanish::to_string(p.assumption) << "\n" << p.provenance.render(1);
    }
  }
  if (!facts.relations.empty()) {
    std::cout << "\nrelations:\n";
    for (const auto& r : facts.relations) std::cout << r.id << ": " << r.statement << "\n" << r.provenance.render(1);
  }
  return 0;
}

// ---------------------------------------------------------------------------

void print_entries(const std::vector<moduli::LedgerEntry>& list) {
  for (const auto& e : list) {
    std::cout << "  [" << moduli::to_string(e.status) << "] " << e.hypothesis << ": " << e.provenance << "\n";
  }
}

int run_moduli(const Spec& spec, const std::string& theorem) {
  const auto ctx = spec.context();
  std::vector<moduli::ModuliReport> reports;
  if (theorem == "all") {
    reports = moduli::check_all(ctx);
  } else {
    switch (moduli::parse_theorem(theorem)) {
      case moduli::Theorem::Fano: reports.push_back(moduli::check_fano_theorem(ctx)); break;
      case moduli::Theorem::CalabiYau: reports.push_back(moduli::check_cy_theorem(ctx)); break;
      case moduli::Theorem::Big: reports.push_back(moduli::check_bigthm(ctx)); break;
      case moduli::Theorem::FanoCor: reports.push_back(moduli::check_fanocor(ctx)); break;
      case moduli::Theorem::Ext2Only: reports.push_back(moduli::check_ext2_vanishing(ctx)); break;
    }
  }
  if (spec.json) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(io::to_json(r));
    std::cout << arr.dump(2) << "\n";
    return 0;
  }
  describe_input(std::cout, ctx.x, ctx.sheaf);
  for (const auto& r : reports) {
    std::cout << "\n== " << moduli::to_string(r.theorem) << " ==\n";
    std::cout << "conclusion: " << r.conclusion << "\n";
    std::cout << "smooth: " << (r.smooth ? "yes" : "not established") << "\n";
    std::cout << "dimension: " << (r.dimension ? to_string(*r.dimension) : std::string("-")) << "\n";
    std::cout << "hypotheses:\n";
    print_entries(r.ledger);
    if (!r.derivations.empty()) {
      std::cout << "intermediate statements:\n";
      print_entries(r.derivations);
    }
    for (const auto& n : r.notes) std::cout << "note: " << n << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------

BoundReport value_report(std::string name, const Rational& c3, const Rational& bound, std::vector<std::string> ctx,
                         std::vector<std::string> assumed) {
  BoundReport r;
  r.name = std::move(name);
  r.lhs = c3;
  r.comparison = Comparison::LessEqual;
  r.rhs = bound;
  r.holds = compare(r.lhs, r.comparison, r.rhs);
  r.context = std::move(ctx);
  r.assumed = std::move(assumed);
  return r;
}

int run_bound(const Spec& spec, std::int64_t n, std::int64_t t) {
  if (t < 1) throw InvalidInput("--t must be at least 1");
  const auto x = spec.x();
  const auto f = spec.sheaf();
  const auto curve = spec.curve_data();
  std::vector<BoundReport> reports;
  reports.push_back(section_c3_bound(f));

  const std::vector<std::string> nt{"n = " + std::to_string(n), "t = " + std::to_string(t)};
  const Rational printed = firstbound_c3(x, n, f.S(), t);
  const Rational via_twist = firstbound_c3_via_twist(x, n, f.S(), t);
  reports.push_back(value_report("firstbound", f.c3(), printed, nt, {"stable", "F(n t) has a section"}));
  reports.push_back(value_report("firstbound-via-twist", f.c3(), via_twist, nt, {"stable", "F(n t) has a section"}));
  if (f.k() == 0 && n >= 0 && t >= 1) reports.push_back(section_exists_rr(f, n, t));

  if (x.hypersurface_degree && curve) {
    const auto p = p_threshold(*x.hypersurface_degree, f.k(), curve->d, curve->pa);
    BoundReport r;
    r.name = "p-threshold";
    r.lhs = Rational(p.p) * curve->d;
    r.comparison = p.strict ? Comparison::Greater : Comparison::GreaterEqual;
    r.rhs = p.c3;
    r.holds = true;
    r.threshold = p.p;
    r.context = {p.strict ? "H^2(F⊗ω(p)) = 0 for p >= threshold" : "h^2(F⊗ω(threshold)) <= 1"};
    r.assumed = {"section"};
    reports.push_back(r);
  }
  if (x.hypersurface_degree == 5 && f.k() == 0 && is_integer(f.S()) && f.S() >= 1) {
    BoundReport r;
    r.name = "oldbound";
    r.threshold = oldbound_threshold(f.S().get_num());
    r.lhs = Rational(*r.threshold);
    r.comparison = Comparison::GreaterEqual;
    r.rhs = Rational(*r.threshold);
    r.holds = true;
    r.context = {"least n with H^2(F(n)) = 0 guaranteed"};
    r.assumed = {"semistable"};
    reports.push_back(r);
  }
  if (x.a == 0 && curve) reports.push_back(cy_genus_bound(curve->d, curve->pa));

  if (spec.json) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(io::to_json(r));
    std::cout << arr.dump(2) << "\n";
    return 0;
  }
  describe_input(std::cout, x, f);
  for (const auto& r : reports) {
    std::cout << r.name << ": " << to_string(r.lhs) << " " << to_string(r.comparison) << " " << to_string(r.rhs)
              << (r.holds ? "  holds" : "  fails");
    if (r.threshold) std::cout << "  threshold " << to_string(*r.threshold);
    std::cout << "\n";
    for (const auto& c : r.context) std::cout << "  " << c << "\n";
    for (const auto& a : r.assumed) std::cout << "  assumed: " << a << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------

int run_selftest(const std::string& mutate) {
  verify::Hooks hooks;
  if (mutate == "standard-binomial") {
    hooks.binom = [](const Integer& m) { return m < 4 ? Integer(0) : binom_poly(m); };
  } else if (mutate == "twist") {
    hooks.twist = [](const Rank2Sheaf& f, std::int64_t t) {
      const auto& x = f.threefold();
      return Rank2Sheaf::make(x, f.k() + 2 * t, f.S() + Rational(t * f.k() * x.N) + Rational(2 * t * t * x.N), f.c3());
    };
  } else if (!mutate.empty()) {
    throw InvalidInput("--mutate must be standard-binomial or twist");
  }
  bool ok = true;
  for (const auto& c : verify::run_all(hooks)) {
    std::cout << c.summary() << "\n";
    ok = ok && c.passed();
  }
  std::cout << (ok ? "selftest passed" : "selftest FAILED") << "\n";
  return ok ? 0 : kExitIdentity;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants and vanishing deductions for rank 2 reflexive sheaves on threefolds"};
  app.require_subcommand(1);

  Spec chi_spec, vanish_spec, moduli_spec, bound_spec;
  auto* chi = app.add_subcommand("chi", "Euler characteristics of F and F*");
  chi_spec.attach(chi);

  ScanOptions scan_opts;
  auto* scan = app.add_subcommand("scan", "CSV sweep over hypersurface degree, det, curve degree and genus");
  scan->add_option("--r", scan_opts.r, "hypersurface degrees A..B");
  scan->add_option("--k", scan_opts.k, "determinants A..B");
  scan->add_option("--d", scan_opts.d, "curve degrees A..B");
  scan->add_option("--pa", scan_opts.pa, "arithmetic genera A..B");
  scan->add_option("--filter", scan_opts.filter, "valid | boundary | all");

  auto* van = app.add_subcommand("vanish", "derive cohomology vanishing with provenance");
  vanish_spec.attach(van);
  bool all_derivations = false;
  van->add_flag("--all-derivations", all_derivations, "print every derivation, not only the preferred one");

  auto* mod = app.add_subcommand("moduli", "check the moduli theorems' hypotheses");
  moduli_spec.attach(mod);
  std::string theorem = "all";
  mod->add_option("--theorem", theorem, "fano | cy | big | fanocor | ext2-only | all");

  auto* bnd = app.add_subcommand("bound", "c3 bounds and twist thresholds");
  bound_spec.attach(bnd);
  std::int64_t n = 1, t = 1;
  bnd->add_option("--n", n, "twist exponent for the twisted-section bounds");
  bnd->add_option("--t", t, "polarization multiple for the twisted-section bounds");

  auto* self = app.add_subcommand("selftest", "run every acceptance sweep");
  std::string mutate;
  self->add_option("--mutate", mutate, "deliberately break standard-binomial or twist (negative control)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  try {
    if (*chi) return run_chi(chi_spec);
    if (*scan) return run_scan(scan_opts);
    if (*van) return run_vanish(vanish_spec, all_derivations);
    if (*mod) return run_moduli(moduli_spec, theorem);
    if (*bnd) return run_bound(bound_spec, n, t);
    if (*self) return run_selftest(mutate);
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const PreconditionViolation& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const InconsistentData& e) {
    std::cerr << "inconsistent data: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const IdentityFailure& e) {
    std::cerr << "identity failure: " << e.what() << "\n";
    return kExitIdentity;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitIdentity;
  }
  return 0;
}
