#include "r2sheaf/bounds.hpp"

#include "r2sheaf/errors.hpp"
#include "r2sheaf/serre.hpp"

namespace r2sheaf {

std::string to_string(Comparison c) {
  switch (c) {
    case Comparison::Less: return "<";
    case Comparison::LessEqual: return "<=";
    case Comparison::Greater: return ">";
    case Comparison::GreaterEqual: return ">=";
  }
  return "?";
}

bool compare(const Rational& lhs, Comparison c, const Rational& rhs) {
  switch (c) {
    case Comparison::Less: return lhs < rhs;
    case Comparison::LessEqual: return lhs <= rhs;
    case Comparison::Greater: return lhs > rhs;
    case Comparison::GreaterEqual: return lhs >= rhs;
  }
  return false;
}

namespace {

BoundReport finish(BoundReport r) {
  r.holds = compare(r.lhs, r.comparison, r.rhs);
  return r;
}

std::string sheaf_context(const Rank2Sheaf& f) {
  return f.threefold().label + ", k=" + std::to_string(f.k()) + ", S=" + to_string(f.S()) +
         ", c3=" + to_string(f.c3());
}

}  // namespace

BoundReport section_c3_bound(const Rank2Sheaf& f) {
  const Rational& S = f.S();
  BoundReport r;
  r.name = "section_c3_bound";
  r.lhs = f.c3();
  r.comparison = Comparison::LessEqual;
  r.rhs = S * S - 3 * S + Rational(f.threefold().a - f.k()) * S;
  r.context.push_back(sheaf_context(f));
  r.assumed.push_back("F has a section whose zero scheme is a curve");
  r.assumed.push_back("h^1(det F^*) = h^2(det F^*) = 0");
  return finish(std::move(r));
}

BoundReport section_exists_rr(const Rank2Sheaf& f, std::int64_t n, std::int64_t t) {
  if (f.k() != 0) throw PreconditionViolation("section_exists_rr requires c1(F) = 0");
  if (t < 1) throw PreconditionViolation("polarization multiple t must be positive");
  const auto& x = f.threefold();
  const Rational nn(n);
  const Rational tt(t);
  const Rational N(x.N);
  const Rational a(x.a);
  const Rational d = tt * tt * tt * N;

  BoundReport r;
  r.name = "section_exists_rr";
  r.lhs = 4 * nn * nn * nn * d + 6 * nn * nn * (a * tt * tt * N) + 2 * nn * (a * a * tt * N) +
          2 * nn * (tt * x.b);
  r.comparison = Comparison::Greater;
  r.rhs = 12 * nn * (tt * f.S()) + 6 * (a * f.S()) - x.c1c2() - 6 * f.c3();
  r.context.push_back(sheaf_context(f));
  r.context.push_back("L = O(" + std::to_string(t) + "h), n=" + std::to_string(n));
  r.assumed.push_back("H^2(F (x) L^n) = 0");
  return finish(std::move(r));
}

Rational firstbound_c3(const NumericalThreefold& x, std::int64_t n, const Rational& S, std::int64_t t) {
  const Rational nn(n);
  const Rational d(t * t * t * x.N);
  const Rational a(x.a);
  return (S - 3 - 2 * nn + 2 * nn * nn * d) * (S + 2 * nn * nn * d) + a * S +
         2 * nn * nn * (a * Rational(t * t * x.N));
}

Rational firstbound_c3_via_twist(const NumericalThreefold& x, std::int64_t n, const Rational& S,
                                 std::int64_t t) {
  auto f = Rank2Sheaf::make(x, 0, S, Rational(0));
  auto g = twist(f, n * t);
  return section_c3_bound(g).rhs;
}

Integer oldbound_threshold(const Integer& S) {
  if (S < 1) throw InvalidInput("oldbound_threshold needs S >= 1, got " + S.get_str());
  if (S <= 19) return Integer(31);
  // Least n >= 4S - 27 with (2(n - 4S + 27))^2 >= 60S - 525.
  const Integer base = 4 * S - 27;
  const Integer disc = 60 * S - 525;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());  // floor sqrt
  if (root * root < disc) root += 1;             // ceil sqrt
  // 2m >= ceil(sqrt(disc)) where m = n - base.
  Integer m = (root + 1) / 2;
  return base + m;
}

PThreshold p_threshold(std::int64_t r, std::int64_t k, const Rational& d, std::int64_t pa) {
  if (d <= 0) throw InvalidInput("curve degree must be positive");
  PThreshold out;
  out.c3 = Rational(2 * pa - 2) - Rational(r - 5 + k) * d;
  out.p = ceil_div(out.c3 / d);
  out.strict = Rational(out.p) * d > out.c3;
  return out;
}

BoundReport cy_genus_bound(const Rational& S, std::int64_t pa) {
  BoundReport r;
  r.name = "cy_genus_bound";
  r.lhs = Rational(pa);
  r.comparison = Comparison::LessEqual;
  r.rhs = (S * S - 3 * S + 2) / 2;
  r.context.push_back("S=" + to_string(S) + ", pa=" + std::to_string(pa));
  r.assumed.push_back("omega_X = O_X, h^1(O_X) = h^2(O_X) = 0, det F = O_X");
  return finish(std::move(r));
}

}  // namespace r2sheaf
