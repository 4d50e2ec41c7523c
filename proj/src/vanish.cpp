#include "r2sheaf/vanish.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <sstream>
#include <utility>

#include "r2sheaf/bounds.hpp"
#include "r2sheaf/errors.hpp"
#include "r2sheaf/euler.hpp"

namespace r2sheaf::vanish {

using r2sheaf::to_string;

// ---------------------------------------------------------------------------
// Vocabulary

namespace {

struct AssumptionName {
  AssumptionId id;
  std::string_view name;
};

constexpr std::array kAssumptionNames{
    AssumptionName{AssumptionId::Stable, "stable"},
    AssumptionName{AssumptionId::Semistable, "semistable"},
    AssumptionName{AssumptionId::Section, "section"},
    AssumptionName{AssumptionId::Connected, "connected"},
    AssumptionName{AssumptionId::Rational, "rational"},
    AssumptionName{AssumptionId::Line, "line"},
    AssumptionName{AssumptionId::NotLine, "not-line"},
    AssumptionName{AssumptionId::Components, "components"},
    AssumptionName{AssumptionId::H1OZero, "h1-O-zero"},
    AssumptionName{AssumptionId::H2OZero, "h2-O-zero"},
    AssumptionName{AssumptionId::H1ICDetOmegaZero, "h1-IC-detomega-zero"},
    AssumptionName{AssumptionId::H1ICDetZero, "h1-IC-det-zero"},
    AssumptionName{AssumptionId::NonspecialDet, "nonspecial-det"},
    AssumptionName{AssumptionId::NormalH1Zero, "normal-h1-zero"},
    AssumptionName{AssumptionId::DetAmple, "det-ample"},
    AssumptionName{AssumptionId::DetBigNef, "det-big-nef"},
    AssumptionName{AssumptionId::DetEffective, "det-effective"},
    AssumptionName{AssumptionId::H0ICZero, "h0-IC-zero"},
    AssumptionName{AssumptionId::Acm, "acm"},
    AssumptionName{AssumptionId::PicardRankOne, "picard-rank-one"},
    AssumptionName{AssumptionId::TwistJump, "twist-jump"},
    AssumptionName{AssumptionId::H2FZero, "h2-F-zero"},
    AssumptionName{AssumptionId::H2FDualZero, "h2-Fdual-zero"},
    AssumptionName{AssumptionId::DetOmegaCurveH0Zero, "h0-C-detomega-zero"},
    AssumptionName{AssumptionId::OmegaCurveH0Zero, "h0-C-omega-zero"},
};

std::string_view base_name(AssumptionId id) {
  for (const auto& n : kAssumptionNames) {
    if (n.id == id) return n.name;
  }
  return "?";
}

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  Rational q = parse_rational(text);
  if (!is_integer(q)) throw InvalidInput("expected an integer in '" + std::string(whole) + "'");
  return to_int64(q.get_num());
}

}  // namespace

bool has_param(AssumptionId id) { return id == AssumptionId::Components || id == AssumptionId::H0ICZero; }

std::string to_string(const Assumption& a) {
  std::string out(base_name(a.id));
  if (has_param(a.id)) out += "=" + std::to_string(a.param);
  return out;
}

Assumption parse_assumption(std::string_view text) {
  const auto eq = text.find('=');
  const std::string_view head = text.substr(0, eq);
  for (const auto& n : kAssumptionNames) {
    if (n.name != head) continue;
    if (has_param(n.id)) {
      if (eq == std::string_view::npos) {
        throw InvalidInput("assumption '" + std::string(head) + "' needs a value, e.g. " +
                           std::string(head) + "=1");
      }
      const std::int64_t v = parse_int(text.substr(eq + 1), text);
      if (n.id == AssumptionId::Components && v < 1) {
        throw InvalidInput("component count must be >= 1");
      }
      return {n.id, v};
    }
    if (eq != std::string_view::npos) {
      throw InvalidInput("assumption '" + std::string(head) + "' takes no value");
    }
    return {n.id, 0};
  }
  throw InvalidInput("unknown assumption '" + std::string(text) + "'");
}

std::vector<std::string> assumption_vocabulary() {
  std::vector<std::string> out;
  for (const auto& n : kAssumptionNames) {
    std::string s(n.name);
    if (has_param(n.id)) s += "=<int>";
    out.push_back(std::move(s));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Provenance

Provenance Provenance::asserted(std::string label) {
  return Provenance{Kind::Asserted, std::move(label), {}, {}};
}

Provenance Provenance::verified(std::string label, std::string detail) {
  return Provenance{Kind::Verified, std::move(label), std::move(detail), {}};
}

Provenance Provenance::rule(std::string id, std::string detail, std::vector<Provenance> premises) {
  return Provenance{Kind::Rule, std::move(id), std::move(detail), std::move(premises)};
}

namespace {

std::string_view kind_tag(Provenance::Kind k) {
  switch (k) {
    case Provenance::Kind::Asserted: return "asserted";
    case Provenance::Kind::Verified: return "verified";
    case Provenance::Kind::Rule: return "rule";
  }
  return "?";
}

void collect(const Provenance& p, Provenance::Kind kind, std::set<std::string>& out) {
  if (p.kind == kind) out.insert(p.label);
  for (const auto& q : p.premises) collect(q, kind, out);
}

}  // namespace

std::string Provenance::key() const {
  std::string out(kind_tag(kind));
  out += ':';
  out += label;
  if (!premises.empty()) {
    out += '[';
    for (std::size_t i = 0; i < premises.size(); ++i) {
      if (i) out += ',';
      out += premises[i].key();
    }
    out += ']';
  }
  return out;
}

std::size_t Provenance::size() const {
  std::size_t n = 1;
  for (const auto& p : premises) n += p.size();
  return n;
}

std::vector<std::string> Provenance::assertions() const {
  std::set<std::string> s;
  collect(*this, Kind::Asserted, s);
  return {s.begin(), s.end()};
}

std::vector<std::string> Provenance::rules() const {
  std::set<std::string> s;
  collect(*this, Kind::Rule, s);
  return {s.begin(), s.end()};
}

std::string Provenance::render(int indent) const {
  std::string out(static_cast<std::size_t>(indent) * 2, ' ');
  out += '[';
  out += kind_tag(kind);
  out += "] ";
  out += label;
  if (!detail.empty()) out += ": " + detail;
  out += '\n';
  for (const auto& p : premises) out += p.render(indent + 1);
  return out;
}

namespace {

// Deterministic preference between two derivations of the same statement.
bool preferred(const Provenance& a, const Provenance& b) {
  const auto sa = a.size();
  const auto sb = b.size();
  if (sa != sb) return sa < sb;
  return a.key() < b.key();
}

}  // namespace

// ---------------------------------------------------------------------------
// Groups and statuses

std::string to_string(const SheafExpr& e) {
  std::string head;
  switch (e.kind) {
    case SheafKind::F: head = "F"; break;
    case SheafKind::FDual: head = "F*"; break;
    case SheafKind::FOmega: head = "F⊗ω"; break;
  }
  return head + "(" + std::to_string(e.twist) + ")";
}

SheafExpr parse_sheaf_expr(std::string_view text) {
  const auto open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')') {
    throw InvalidInput("malformed sheaf expression '" + std::string(text) + "'");
  }
  const std::string_view head = text.substr(0, open);
  SheafExpr e;
  if (head == "F") {
    e.kind = SheafKind::F;
  } else if (head == "F*") {
    e.kind = SheafKind::FDual;
  } else if (head == "F⊗ω") {
    e.kind = SheafKind::FOmega;
  } else {
    throw InvalidInput("unknown sheaf '" + std::string(head) + "'");
  }
  e.twist = parse_int(text.substr(open + 1, text.size() - open - 2), text);
  return e;
}

std::string to_string(const Group& g) { return "H^" + std::to_string(g.degree) + "(" + to_string(g.expr) + ")"; }

std::string to_string(const Status& s) {
  switch (s.kind) {
    case Status::Kind::Zero: return "zero";
    case Status::Kind::Equals: return "dim_equals(" + std::to_string(s.value) + ")";
    case Status::Kind::AtMost: return "dim_at_most(" + std::to_string(s.value) + ")";
  }
  return "?";
}

bool conflicts(const Status& a, const Status& b) {
  const bool a_exact = a.kind != Status::Kind::AtMost;
  const bool b_exact = b.kind != Status::Kind::AtMost;
  if (a_exact && b_exact) return a.value != b.value;
  if (a_exact) return a.value > b.value;
  if (b_exact) return b.value > a.value;
  return false;
}

bool stronger(const Status& a, const Status& b) {
  if (a == b) return false;
  if (b.kind == Status::Kind::Zero) return false;
  if (a.kind == Status::Kind::Zero) return true;
  if (a.kind == Status::Kind::Equals) return b.kind == Status::Kind::AtMost;
  return b.kind == Status::Kind::AtMost && a.value < b.value;
}

const VanishingFact* FactSet::find(const Group& g) const {
  for (const auto& f : facts) {
    if (f.group == g) return &f;
  }
  return nullptr;
}

bool FactSet::vanishes(const Group& g) const {
  const auto* f = find(g);
  return f != nullptr && f->status.kind == Status::Kind::Zero;
}

const DerivedPremise* FactSet::find_premise(const Assumption& a) const {
  for (const auto& p : premises) {
    if (p.assumption == a) return &p;
  }
  return nullptr;
}

// ---------------------------------------------------------------------------
// Contexts

Context curve_context(const NumericalThreefold& x, std::int64_t k, const CurveData& curve,
                      std::vector<Assumption> assumptions, std::vector<std::int64_t> twists) {
  Rank2Sheaf f = sheaf_from_curve(x, k, curve);
  if (twists.empty()) {
    twists = {0, 1, 2, 3};
    const Integer p = ceil_div(f.c3() / curve.d);
    if (p.fits_slong_p()) {
      twists.push_back(p.get_si());
      twists.push_back(p.get_si() + 1);
    }
  }
  std::sort(twists.begin(), twists.end());
  twists.erase(std::unique(twists.begin(), twists.end()), twists.end());
  return Context{x, std::move(f), curve, std::move(assumptions), std::move(twists)};
}

Context sheaf_context(const Rank2Sheaf& f, std::vector<Assumption> assumptions,
                      std::vector<std::int64_t> twists) {
  if (twists.empty()) twists = {0, 1, 2, 3};
  std::sort(twists.begin(), twists.end());
  twists.erase(std::unique(twists.begin(), twists.end()), twists.end());
  return Context{f.threefold(), f, std::nullopt, std::move(assumptions), std::move(twists)};
}

// ---------------------------------------------------------------------------
// Engine state

namespace {

using P = Provenance;

std::string fmt(const Rational& q) { return to_string(q); }
std::string fmt(std::int64_t v) { return std::to_string(v); }

class State {
 public:
  explicit State(const Context& ctx) : ctx_(ctx) {}

  const Context& ctx() const { return ctx_; }
  const NumericalThreefold& x() const { return ctx_.x; }
  const Rank2Sheaf& f() const { return ctx_.sheaf; }
  std::int64_t k() const { return ctx_.sheaf.k(); }
  std::int64_t a() const { return ctx_.x.a; }
  const std::optional<CurveData>& curve() const { return ctx_.curve; }

  std::map<Assumption, P>& premises() { return premises_; }
  const std::map<Assumption, P>& premises() const { return premises_; }
  std::map<Group, VanishingFact>& facts() { return facts_; }
  const std::map<Group, VanishingFact>& facts() const { return facts_; }

  std::optional<P> premise(AssumptionId id, std::int64_t param = 0) const {
    auto it = premises_.find(Assumption{id, param});
    if (it == premises_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<P> fact_zero(int degree, SheafKind kind, std::int64_t twist) const {
    auto it = facts_.find(Group{degree, {kind, twist}});
    if (it == facts_.end() || it->second.status.kind != Status::Kind::Zero) return std::nullopt;
    return it->second.provenance();
  }

  std::optional<P> hypersurface() const {
    if (!x().is_hypersurface()) return std::nullopt;
    return P::verified("hypersurface", "X is a smooth hypersurface of degree " +
                                           fmt(*x().hypersurface_degree) + " in P^4");
  }

  std::optional<P> locally_free() const {
    if (!f().locally_free()) return std::nullopt;
    return P::verified("locally-free", "c3 = 0");
  }

  // H^i(X, O_X(m)) = 0 from the structure of X alone, or from an assertion.
  std::optional<P> line_bundle_zero(int i, std::int64_t m) const {
    const std::string what = "H^" + fmt(i) + "(O_X(" + fmt(m) + ")) = 0";
    if (i == 0) {
      if (m < 0) return P::verified(what, "negative multiple of the ample generator");
      return std::nullopt;
    }
    if (i == 3) {
      // Serre duality: H^3(O(m)) = H^0(O(-a-m))^*.
      if (-a() - m < 0) return P::verified(what, "dual to H^0(O_X(" + fmt(-a() - m) + "))");
      return std::nullopt;
    }
    if (x().is_hypersurface()) return P::verified(what, "hypersurface in P^4");
    if (m < 0) return P::verified(what, "Kodaira vanishing for a negative line bundle");
    if (-a() - m < 0) return P::verified(what, "dual to H^" + fmt(3 - i) + "(O_X(" + fmt(-a() - m) + "))");
    if (m == 0) {
      const auto id = i == 1 ? AssumptionId::H1OZero : AssumptionId::H2OZero;
      if (auto p = premise(id)) return p;
    }
    if (m == -a()) {
      const auto id = i == 1 ? AssumptionId::H2OZero : AssumptionId::H1OZero;
      if (auto p = premise(id)) return P::rule("serre-duality-line-bundle", what, {*p});
    }
    return std::nullopt;
  }

  std::optional<P> h2_structure_zero() const {
    if (auto p = premise(AssumptionId::H2OZero)) return p;
    return line_bundle_zero(2, 0);
  }

  std::optional<P> det_ample() const {
    if (k() >= 1) return P::verified("det-ample", "det F = O(" + fmt(k()) + "), k >= 1");
    return std::nullopt;
  }

  std::optional<P> det_effective() const {
    if (k() == 0) return P::verified("det-effective", "det F = O_X");
    if (k() > 0 && x().is_hypersurface()) {
      return P::verified("det-effective", "O(" + fmt(k()) + ") on a hypersurface, k > 0");
    }
    if (auto p = premise(AssumptionId::DetEffective)) return p;
    return std::nullopt;
  }

  std::optional<P> det_nef() const {
    if (k() >= 0) return P::verified("det-nef", "det F = O(" + fmt(k()) + "), k >= 0");
    if (auto p = premise(AssumptionId::DetBigNef)) return p;
    return std::nullopt;
  }

  std::optional<P> h0_ideal_zero(std::int64_t m) const {
    if (auto p = premise(AssumptionId::H0ICZero, m)) return p;
    if (m <= 0) {
      return P::verified("h0-IC-zero=" + fmt(m),
                         m < 0 ? "I_C(m) is a subsheaf of O_X(m) with m < 0" : "C is non-empty");
    }
    return std::nullopt;
  }

 private:
  const Context& ctx_;
  std::map<Assumption, P> premises_;
  std::map<Group, VanishingFact> facts_;
};

struct Output {
  std::vector<std::pair<Assumption, P>> premises;
  std::vector<VanishingFact> facts;
  std::vector<Relation> relations;

  void fact(int degree, SheafKind kind, std::int64_t twist, Status status, P why) {
    facts.push_back(VanishingFact{Group{degree, {kind, twist}}, status, {std::move(why)}});
  }
};

// Collects premises; returns false (and the rule does not fire) if any is absent.
class Premises {
 public:
  Premises& need(const std::optional<P>& p) {
    if (!p) ok_ = false;
    else list_.push_back(*p);
    return *this;
  }
  Premises& check(bool cond, std::string label, std::string detail) {
    if (!cond) ok_ = false;
    else list_.push_back(P::verified(std::move(label), std::move(detail)));
    return *this;
  }
  bool ok() const { return ok_; }
  std::vector<P> take() { return std::move(list_); }

 private:
  bool ok_ = true;
  std::vector<P> list_;
};

// ---------------------------------------------------------------------------
// Rules

using RuleFn = void (*)(const State&, Output&);

struct Rule {
  std::string_view id;
  RuleFn apply;
};

void rule_asserted_facts(const State& s, Output& out) {
  if (auto p = s.premise(AssumptionId::H2FZero)) out.fact(2, SheafKind::F, 0, Status::zero(), *p);
  if (auto p = s.premise(AssumptionId::H2FDualZero)) out.fact(2, SheafKind::FDual, 0, Status::zero(), *p);
}

// A smooth rational curve is integral, hence connected.
void rule_rational_curve(const State& s, Output& out) {
  auto rational = s.premise(AssumptionId::Rational);
  if (!rational) return;
  out.premises.emplace_back(Assumption{AssumptionId::Connected},
                            P::rule("rational-curve", "C rational, hence integral and connected", {*rational}));
}

// deg(det F|_C) = k d > 2 pa - 2 makes det F|_C non-special.
void rule_nonspecial_by_degree(const State& s, Output& out) {
  if (!s.curve()) return;
  const auto& c = *s.curve();
  const Rational deg = Rational(s.k()) * c.d;
  Premises pr;
  pr.need(s.premise(AssumptionId::Section))
      .check(deg > 2 * c.pa - 2, "degree",
             "deg(det F|_C) = " + fmt(deg) + " > 2pa - 2 = " + fmt(2 * c.pa - 2));
  if (!pr.ok()) return;
  out.premises.emplace_back(Assumption{AssumptionId::NonspecialDet},
                            P::rule("nonspecial-by-degree", "det F|_C non-special", pr.take()));
}

// For a rational curve, nef det gives H^1(C, det F|_C) = 0, i.e.
// 2 + deg N_{C/X} > c3 with deg N_{C/X} = 2pa - 2 + a d.
void rule_nonspecial_rational(const State& s, Output& out) {
  if (!s.curve()) return;
  const auto& c = *s.curve();
  const Rational deg_normal = Rational(2 * c.pa - 2) + Rational(s.a()) * c.d;
  Premises pr;
  pr.need(s.premise(AssumptionId::Rational))
      .need(s.premise(AssumptionId::Section))
      .need(s.det_nef())
      .check(2 + deg_normal > s.f().c3(), "normal-degree",
             "2 + deg N_{C/X} = " + fmt(2 + deg_normal) + " > c3 = " + fmt(s.f().c3()));
  if (!pr.ok()) return;
  auto list = pr.take();
  if (s.f().locally_free()) {
    list.push_back(P::verified("lci", "C is the zero scheme of a section of a vector bundle"));
  } else {
    list.push_back(P::asserted("lci (normal bundle degree formula)"));
  }
  out.premises.emplace_back(Assumption{AssumptionId::NonspecialDet},
                            P::rule("nonspecial-rational", "det F|_C non-special", std::move(list)));
}

// H^1(I_C(m)) = 0 for an integral curve when m <= 0 and H^1(O_X(m)) = 0.
void rule_ideal_h1(const State& s, Output& out) {
  auto rational = s.premise(AssumptionId::Rational);
  if (!rational) return;
  const std::array<std::pair<AssumptionId, std::int64_t>, 2> targets{
      std::pair{AssumptionId::H1ICDetOmegaZero, s.k() - s.a()},
      std::pair{AssumptionId::H1ICDetZero, s.k()}};
  for (const auto& [id, m] : targets) {
    Premises pr;
    pr.need(rational).need(s.line_bundle_zero(1, m)).check(m <= 0, "twist", "m = " + fmt(m) + " <= 0");
    if (!pr.ok()) continue;
    out.premises.emplace_back(Assumption{id},
                              P::rule("ideal-h1", "H^1(I_C(" + fmt(m) + ")) = 0", pr.take()));
  }
}

// c1(N)c2(F) vs c3 for N = O(n), with the two H^2 line bundle premises.
void rule_section_twist(const State& s, Output& out) {
  auto section = s.premise(AssumptionId::Section);
  if (!section) return;
  const Rational& c3 = s.f().c3();
  for (std::int64_t n : s.ctx().twists) {
    const Rational lhs = Rational(n) * s.f().S();
    Premises h2;
    h2.need(section).need(s.line_bundle_zero(2, n - s.a())).need(s.line_bundle_zero(2, n - s.a() + s.k()));
    if (h2.ok() && lhs >= c3) {
      const bool strict = lhs > c3;
      auto list = h2.take();
      list.push_back(P::verified("c1(N)c2(F) " + std::string(strict ? ">" : ">=") + " c3",
                                 fmt(lhs) + (strict ? " > " : " = ") + fmt(c3)));
      out.fact(2, SheafKind::FOmega, n, strict ? Status::zero() : Status::at_most(1),
               P::rule("section-twist-h2", "N = O(" + fmt(n) + ")", std::move(list)));
    }
    Premises h3;
    h3.need(section).need(s.line_bundle_zero(3, n - s.a())).need(s.line_bundle_zero(3, n - s.a() + s.k()));
    if (h3.ok()) {
      out.fact(3, SheafKind::FOmega, n, Status::zero(),
               P::rule("section-twist-h3", "N = O(" + fmt(n) + ")", h3.take()));
    }
  }
}

// The hypersurface specialization: no line bundle premises are needed.
void rule_hypersurface_h2(const State& s, Output& out) {
  auto hyp = s.hypersurface();
  auto section = s.premise(AssumptionId::Section);
  if (!hyp || !section || !s.curve()) return;
  const Rational& c3 = s.f().c3();
  const Rational& d = s.curve()->d;
  for (std::int64_t p : s.ctx().twists) {
    const Rational lhs = Rational(p) * d;
    if (lhs < c3) continue;
    const bool strict = lhs > c3;
    out.fact(2, SheafKind::FOmega, p, strict ? Status::zero() : Status::at_most(1),
             P::rule("hypersurface-h2", "p = " + fmt(p),
                     {*hyp, *section,
                      P::verified(std::string("p d ") + (strict ? ">" : ">=") + " c3",
                                  fmt(lhs) + (strict ? " > " : " = ") + fmt(c3))}));
  }
  auto lf = s.locally_free();
  if (!lf) return;
  out.fact(2, SheafKind::FOmega, 1, Status::zero(),
           P::rule("hypersurface-h2", "locally free, p = 1", {*hyp, *section, *lf}));
  // Both sources are used, so a clash between them surfaces as a conflict.
  auto emit = [&](std::int64_t components, const P& why) {
    out.fact(2, SheafKind::FOmega, 0, Status::equals(components - 1),
             P::rule("hypersurface-h2", "h^2(F⊗ω) = h^0(O_C) - 1", {*hyp, *section, *lf, why}));
  };
  for (const auto& [a, p] : s.premises()) {
    if (a.id == AssumptionId::Components) emit(a.param, p);
  }
  if (auto c = s.premise(AssumptionId::Connected)) emit(1, *c);
}

// k d > 2 pa - 2 kills H^2(F).
void rule_kill_h2_by_det_degree(const State& s, Output& out) {
  if (!s.curve()) return;
  const auto& c = *s.curve();
  const Rational lhs = Rational(s.k()) * c.d;
  Premises pr;
  pr.need(s.hypersurface())
      .need(s.premise(AssumptionId::Section))
      .check(lhs > 2 * c.pa - 2, "k d > 2pa - 2", fmt(lhs) + " > " + fmt(2 * c.pa - 2));
  if (!pr.ok()) return;
  out.fact(2, SheafKind::F, 0, Status::zero(), P::rule("kill-h2-by-det-degree", "H^2(F) = 0", pr.take()));
}

// p > max(0, -k) kills H^3(F(p) ⊗ ω) and H^0(F(-k-p)).
void rule_kill_h3_h0(const State& s, Output& out) {
  auto hyp = s.hypersurface();
  auto section = s.premise(AssumptionId::Section);
  if (!hyp || !section) return;
  const std::int64_t floor = std::max<std::int64_t>(0, -s.k());
  for (std::int64_t p : s.ctx().twists) {
    if (p <= floor) continue;
    auto why = P::rule("kill-h3-h0", "p = " + fmt(p),
                       {*hyp, *section, P::verified("p > max(0,-k)", fmt(p) + " > " + fmt(floor))});
    out.fact(3, SheafKind::FOmega, p, Status::zero(), why);
    out.fact(0, SheafKind::F, -s.k() - p, Status::zero(), why);
  }
}

// Ample det and a connected curve kill H^0 and H^1 of F*; on hypersurfaces of
// degree <= 4 the remaining cohomology of F* is pinned down.
void rule_dual_vanishing(const State& s, Output& out) {
  auto hyp = s.hypersurface();
  if (!hyp || !s.curve()) return;
  Premises pr;
  pr.need(hyp).need(s.det_ample()).need(s.premise(AssumptionId::Section)).need(s.premise(AssumptionId::Connected));
  if (!pr.ok()) return;
  const auto base = pr.take();
  const std::int64_t r = *s.x().hypersurface_degree;
  const auto& c = *s.curve();

  auto why = P::rule("dual-vanishing", "H^0(F*) = H^1(F*) = 0", base);
  out.fact(0, SheafKind::FDual, 0, Status::zero(), why);
  out.fact(1, SheafKind::FDual, 0, Status::zero(), why);
  const Rational chi = chi_dual_formula(r, s.k(), Rational(c.pa));
  out.relations.push_back(Relation{"dual-euler-characteristic",
                                   "chi(F*) = h^2(F*) - h^3(F*) = " + fmt(chi),
                                   P::rule("dual-vanishing", "exact sequence for F*", base)});

  const std::int64_t m = r - 5 + s.k();
  Premises cor;
  cor.check(r <= 4, "degree <= 4", "r = " + fmt(r)).need(s.det_effective()).need(s.h0_ideal_zero(m));
  if (!cor.ok()) return;
  auto list = base;
  for (auto& p : cor.take()) list.push_back(std::move(p));
  const Integer h0 = chi_line_bundle(r, m);
  if (Integer(static_cast<long>(c.pa)) < h0) {
    throw InconsistentData("pa(C) = " + fmt(c.pa) + " < h^0(O_X(" + fmt(m) + ")) = " + to_string(h0) +
                           ", contradicting\n" + P::rule("dual-vanishing", "genus bound", list).render(1));
  }
  const std::int64_t h2 = c.pa - to_int64(h0);
  auto why2 = P::rule("dual-vanishing", "h^2(F*) = pa - h^0(O_X(" + fmt(m) + "))", list);
  out.fact(2, SheafKind::FDual, 0, Status::equals(h2), why2);
  out.fact(3, SheafKind::FDual, 0, Status::zero(),
           P::rule("dual-vanishing", "H^3(F*) = H^0(F⊗ω)^* = 0", std::move(list)));
}

void rule_h2_of_sheaf(const State& s, Output& out) {
  Premises pr;
  pr.need(s.h2_structure_zero()).need(s.premise(AssumptionId::Section)).need(s.premise(AssumptionId::NonspecialDet));
  if (!pr.ok()) return;
  out.fact(2, SheafKind::F, 0, Status::zero(), P::rule("h2-of-sheaf", "H^2(F) = 0", pr.take()));
}

void rule_h2_of_dual(const State& s, Output& out) {
  std::vector<P> ideal;
  if (auto p = s.premise(AssumptionId::H1ICDetOmegaZero)) ideal.push_back(*p);
  if (s.a() == 0) {
    if (auto p = s.premise(AssumptionId::H1ICDetZero)) {
      ideal.push_back(P::rule("trivial-canonical", "omega_X = O_X, so I_C⊗det⊗ω = I_C⊗det", {*p}));
    }
  }
  for (const auto& why : ideal) {
    Premises pr;
    pr.need(s.h2_structure_zero()).need(s.locally_free()).need(s.premise(AssumptionId::Section)).need(why);
    if (!pr.ok()) continue;
    out.fact(2, SheafKind::FDual, 0, Status::zero(), P::rule("h2-of-dual", "H^2(F*) = 0", pr.take()));
  }
}

// 0 -> det^* -> F* -> I_C -> 0: H^1(det^*) = H^1(I_C) = 0 kills H^1(F*).
void rule_dual_h1(const State& s, Output& out) {
  std::vector<P> ideal;
  if (s.k() == 0) {
    if (auto p = s.premise(AssumptionId::H1ICDetZero)) ideal.push_back(*p);
  }
  if (s.k() == s.a()) {
    if (auto p = s.premise(AssumptionId::H1ICDetOmegaZero)) ideal.push_back(*p);
  }
  for (const auto& why : ideal) {
    Premises pr;
    pr.need(s.premise(AssumptionId::Section)).need(s.line_bundle_zero(1, -s.k())).need(why);
    if (!pr.ok()) continue;
    out.fact(1, SheafKind::FDual, 0, Status::zero(), P::rule("dual-h1", "H^1(det^*) = H^1(I_C) = 0", pr.take()));
  }
}

// With omega_X = O_X and F locally free, H^2(F) = H^1(F*)^*.
void rule_cy_duality(const State& s, Output& out) {
  Premises pr;
  pr.check(s.a() == 0, "trivial-canonical", "c1(X) = 0 and Pic X = Z h")
      .need(s.locally_free())
      .need(s.fact_zero(1, SheafKind::FDual, 0));
  if (!pr.ok()) return;
  out.fact(2, SheafKind::F, 0, Status::zero(), P::rule("cy-duality", "H^2(F) = H^1(F*)^*", pr.take()));
}

// 0 -> det^* -> F* -> I_C -> 0 with H^2(I_C) = 0 for a rational curve.
void rule_rational_dual_h2(const State& s, Output& out) {
  Premises pr;
  pr.need(s.premise(AssumptionId::Rational))
      .need(s.premise(AssumptionId::Section))
      .need(s.h2_structure_zero())
      .need(s.line_bundle_zero(2, -s.k()));
  if (!pr.ok()) return;
  out.fact(2, SheafKind::FDual, 0, Status::zero(),
           P::rule("rational-dual-h2", "H^2(det^*) = H^2(I_C) = 0", pr.take()));
}

void rule_canonical_det_duality(const State& s, Output& out) {
  if (s.k() != -s.a()) return;
  const Rational& c3 = s.f().c3();
  const Rational chi = chi_rr(s.f());
  auto why = P::rule("canonical-det-duality", "c1(F) = c1(omega_X)",
                     {P::verified("canonical-det", "k = -a = " + fmt(s.k()))});
  std::ostringstream st;
  st << "h^2(F) - h^1(F) = c3/2 = " << fmt(c3 / 2) << "; chi(F) = " << fmt(chi) << "; ";
  if (c3 == 0) {
    st << "h^2 <= h^1, h^2 = h^1, chi = 0 and locally free all hold";
  } else {
    st << "h^2 > h^1, chi != 0 and F is not locally free";
  }
  out.relations.push_back(Relation{"canonical-det-duality", st.str(), std::move(why)});
}

void rule_acm_obstruction(const State& s, Output& out) {
  const Rational& c3 = s.f().c3();
  if (c3 <= 0) return;
  out.relations.push_back(Relation{
      "acm-obstruction", "F is not ACM; h^2(F(n)) = c3 = " + fmt(c3) + " for all n << 0 (asymptotic)",
      P::rule("acm-obstruction", "c3 > 0", {P::verified("c3 > 0", "c3 = " + fmt(c3))})});
}

constexpr std::array kRules{
    Rule{"asserted-facts", rule_asserted_facts},
    Rule{"rational-curve", rule_rational_curve},
    Rule{"nonspecial-by-degree", rule_nonspecial_by_degree},
    Rule{"nonspecial-rational", rule_nonspecial_rational},
    Rule{"ideal-h1", rule_ideal_h1},
    Rule{"section-twist-h2", rule_section_twist},
    Rule{"hypersurface-h2", rule_hypersurface_h2},
    Rule{"kill-h2-by-det-degree", rule_kill_h2_by_det_degree},
    Rule{"kill-h3-h0", rule_kill_h3_h0},
    Rule{"dual-vanishing", rule_dual_vanishing},
    Rule{"h2-of-sheaf", rule_h2_of_sheaf},
    Rule{"h2-of-dual", rule_h2_of_dual},
    Rule{"dual-h1", rule_dual_h1},
    Rule{"cy-duality", rule_cy_duality},
    Rule{"rational-dual-h2", rule_rational_dual_h2},
    Rule{"canonical-det-duality", rule_canonical_det_duality},
    Rule{"acm-obstruction", rule_acm_obstruction},
};

// ---------------------------------------------------------------------------
// Consistency of the assertions against the numbers

void check_assertions(const Context& ctx) {
  std::set<AssumptionId> seen;
  for (const auto& a : ctx.assumptions) {
    if (!seen.insert(a.id).second && !(a.id == AssumptionId::H0ICZero)) {
      throw InvalidInput("assumption '" + std::string(base_name(a.id)) + "' given more than once");
    }
  }
  std::set<Assumption> exact(ctx.assumptions.begin(), ctx.assumptions.end());
  if (exact.size() != ctx.assumptions.size()) throw InvalidInput("duplicate assumption");

  auto has = [&](AssumptionId id) { return seen.count(id) > 0; };
  const auto& f = ctx.sheaf;
  if (has(AssumptionId::DetAmple) && f.k() < 1) {
    throw InconsistentData("det-ample asserted but det F = O(" + std::to_string(f.k()) + ") with k < 1");
  }
  if (has(AssumptionId::DetEffective) && f.k() < 0) {
    throw InconsistentData("det-effective asserted but k = " + std::to_string(f.k()) + " < 0");
  }
  if (has(AssumptionId::DetBigNef) && f.k() < 1) {
    throw InconsistentData("det-big-nef asserted but k = " + std::to_string(f.k()) + " < 1");
  }
  if (has(AssumptionId::Line) && has(AssumptionId::NotLine)) {
    throw InconsistentData("both line and not-line asserted");
  }
  if (has(AssumptionId::Acm) && f.c3() > 0) {
    throw InconsistentData("acm asserted but c3 = " + to_string(f.c3()) +
                           " > 0: a reflexive ACM sheaf is locally free");
  }
  for (const auto& a : ctx.assumptions) {
    if (a.id != AssumptionId::Components || a.param == 1) continue;
    for (auto single : {AssumptionId::Connected, AssumptionId::Rational, AssumptionId::Line}) {
      if (has(single)) {
        throw InconsistentData(std::string(base_name(single)) + " asserted with " + std::to_string(a.param) +
                               " components");
      }
    }
  }
  if (const auto& c = ctx.curve) {
    if (has(AssumptionId::Line) && c->d != 1) {
      throw InconsistentData("line asserted but d = " + to_string(c->d));
    }
    if (has(AssumptionId::Line) && c->pa != 0) throw InconsistentData("line asserted but pa != 0");
    if (has(AssumptionId::NotLine) && c->d == 1 && ctx.x.is_hypersurface()) {
      throw InconsistentData("not-line asserted but C has degree 1 in P^4");
    }
    if (has(AssumptionId::Rational) && c->pa != 0) {
      throw InconsistentData("rational asserted but pa = " + std::to_string(c->pa) + " != 0");
    }
  }
}

[[noreturn]] void throw_conflict(const VanishingFact& cur, const VanishingFact& cand) {
  throw InconsistentData("contradictory facts for " + to_string(cand.group) + ": " + to_string(cur.status) +
                         " via\n" + cur.provenance().render(1) + "versus " + to_string(cand.status) + " via\n" +
                         cand.provenance().render(1));
}

// Adds the derivations of `from` to `into` (same status); true if any was new.
bool absorb(VanishingFact& into, const VanishingFact& from) {
  bool added = false;
  for (const auto& d : from.derivations) {
    const auto key = d.key();
    const bool known = std::any_of(into.derivations.begin(), into.derivations.end(),
                                   [&](const Provenance& e) { return e.key() == key; });
    if (!known) {
      into.derivations.push_back(d);
      added = true;
    }
  }
  if (added) std::sort(into.derivations.begin(), into.derivations.end(), preferred);
  return added;
}

// Folds a candidate into a fact table: conflicts throw, a stronger status
// replaces the entry, an equal status contributes its derivations.
bool merge_fact(std::map<Group, VanishingFact>& facts, VanishingFact cand) {
  auto it = facts.find(cand.group);
  if (it == facts.end()) {
    std::sort(cand.derivations.begin(), cand.derivations.end(), preferred);
    facts.emplace(cand.group, std::move(cand));
    return true;
  }
  auto& cur = it->second;
  if (conflicts(cur.status, cand.status)) throw_conflict(cur, cand);
  if (stronger(cand.status, cur.status)) {
    std::sort(cand.derivations.begin(), cand.derivations.end(), preferred);
    cur = std::move(cand);
    return true;
  }
  if (cand.status == cur.status) return absorb(cur, cand);
  return false;
}

template <typename Key, typename Value, typename Better>
void reduce_into(std::map<Key, Value>& best, const Key& key, Value v, Better better) {
  auto it = best.find(key);
  if (it == best.end()) {
    best.emplace(key, std::move(v));
  } else if (better(v, it->second)) {
    it->second = std::move(v);
  }
}

}  // namespace

std::vector<std::string> rule_ids() {
  std::vector<std::string> out;
  for (const auto& r : kRules) out.emplace_back(r.id);
  return out;
}

FactSet infer(const Context& ctx, const InferOptions& options) {
  check_assertions(ctx);

  std::vector<const Rule*> order;
  if (options.rule_order.empty()) {
    for (const auto& r : kRules) order.push_back(&r);
  } else {
    for (const auto& id : options.rule_order) {
      auto it = std::find_if(kRules.begin(), kRules.end(), [&](const Rule& r) { return r.id == id; });
      if (it == kRules.end()) throw InvalidInput("unknown rule '" + id + "'");
      order.push_back(&*it);
    }
  }

  State state(ctx);
  for (const auto& a : ctx.assumptions) state.premises().emplace(a, P::asserted(to_string(a)));

  std::map<std::string, Relation> relations;
  std::vector<DerivedPremise> derived;
  bool changed = true;
  std::size_t pass = 0;
  while (changed) {
    if (++pass > options.max_passes) throw IdentityFailure("inference did not saturate");
    changed = false;
    Output out;
    for (const Rule* r : order) r->apply(state, out);

    std::map<Assumption, P> new_premises;
    for (auto& [a, p] : out.premises) {
      if (state.premises().count(a)) continue;
      reduce_into(new_premises, a, std::move(p), preferred);
    }
    for (auto& [a, p] : new_premises) {
      derived.push_back(DerivedPremise{a, p});
      state.premises().emplace(a, std::move(p));
      changed = true;
    }

    std::map<Group, VanishingFact> candidates;
    for (auto& fact : out.facts) merge_fact(candidates, std::move(fact));
    for (auto& [g, fact] : candidates) changed |= merge_fact(state.facts(), std::move(fact));

    for (auto& rel : out.relations) {
      if (relations.count(rel.id)) continue;
      relations.emplace(rel.id, std::move(rel));
    }
  }

  // h^2(F) - h^1(F) = c3/2 > 0 rules out H^2(F) = 0 under canonical determinant.
  if (ctx.sheaf.k() == -ctx.x.a && ctx.sheaf.c3() > 0) {
    auto it = state.facts().find(Group{2, {SheafKind::F, 0}});
    if (it != state.facts().end() && it->second.status.kind == Status::Kind::Zero) {
      throw InconsistentData("H^2(F) = 0 contradicts h^2(F) - h^1(F) = c3/2 = " +
                             to_string(Rational(ctx.sheaf.c3() / 2)) + " > 0; H^2(F) = 0 via\n" +
                             it->second.provenance().render(1));
    }
  }

  FactSet result;
  for (auto& [g, fact] : state.facts()) result.facts.push_back(std::move(fact));
  std::sort(derived.begin(), derived.end(),
            [](const DerivedPremise& x, const DerivedPremise& y) { return x.assumption < y.assumption; });
  result.premises = std::move(derived);
  for (auto& [id, rel] : relations) result.relations.push_back(std::move(rel));
  return result;
}

}  // namespace r2sheaf::vanish
