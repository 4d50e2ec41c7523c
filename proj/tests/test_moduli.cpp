#include <doctest.h>

#include "r2sheaf/chow.hpp"
#include "r2sheaf/errors.hpp"
#include "r2sheaf/moduli.hpp"
#include "r2sheaf/serre.hpp"

using namespace r2sheaf;
using namespace r2sheaf::moduli;

namespace {

vanish::Context ctx(long r, long k, long d, long pa, std::initializer_list<const char*> names) {
  std::vector<vanish::Assumption> as;
  for (const char* n : names) as.push_back(vanish::parse_assumption(n));
  return vanish::curve_context(hypersurface(r), k, CurveData{Rational(d), pa}, as);
}

HypothesisStatus status_of(const ModuliReport& r, std::string_view h) {
  const auto* e = r.entry(h);
  REQUIRE(e != nullptr);
  return e->status;
}

}  // namespace

TEST_SUITE("moduli") {
  TEST_CASE("dimension formula") {
    CHECK(moduli_dimension(sheaf_from_curve(hypersurface(3), 1, CurveData{Rational(2), 0})) == Rational(2));
    CHECK(moduli_dimension(sheaf_from_curve(hypersurface(3), 1, CurveData{Rational(3), 1})) == Rational(6));
    CHECK(moduli_dimension(sheaf_from_curve(hypersurface(5), 0, CurveData{Rational(5), 1})) == Rational(1));
    CHECK(moduli_dimension(sheaf_from_curve(hypersurface(4), 1, CurveData{Rational(3), 1})) == Rational(1));
    CHECK(moduli_dimension(sheaf_from_curve(hypersurface(2), 2, CurveData{Rational(3), 0})) == Rational(3));
  }

  TEST_CASE("dimension is an integer on low degree hypersurfaces") {
    for (long r = 1; r <= 4; ++r) {
      for (long k = -3; k <= 4; ++k) {
        for (long s = -4; s <= 20; ++s) {
          const auto x = hypersurface(r);
          const auto f = Rank2Sheaf::make(x, k, Rational(s), Rational(0));
          CHECK(moduli_dimension(f).get_den() == 1);
        }
      }
    }
  }

  TEST_CASE("conic on a cubic") {
    const auto c = ctx(3, 1, 2, 0, {"stable", "section", "rational", "h1-IC-detomega-zero", "normal-h1-zero"});
    const auto fano = check_fano_theorem(c);
    CHECK(fano.smooth);
    CHECK(fano.dimension == Rational(2));
    CHECK(fano.all_hypotheses_hold());
    CHECK(status_of(fano, "fano") == HypothesisStatus::Verified);
    CHECK(status_of(fano, "stable") == HypothesisStatus::Asserted);

    const auto cor = check_fanocor(c);
    CHECK(cor.smooth);
    CHECK(cor.dimension == Rational(2));

    const auto ext2 = check_ext2_vanishing(c);
    CHECK(ext2.conclusion == "Ext^2(F,F) = 0");
    CHECK(!ext2.smooth);
  }

  TEST_CASE("fano theorem fails off Fano threefolds") {
    const auto r = check_fano_theorem(ctx(5, 0, 5, 1, {"stable", "section", "h1-IC-detomega-zero", "normal-h1-zero"}));
    CHECK(!r.smooth);
    CHECK(status_of(r, "fano") == HypothesisStatus::Failed);
    CHECK(r.conclusion == "not established");
  }

  TEST_CASE("reflexive sheaves are not covered") {
    const auto r = check_fano_theorem(ctx(3, 1, 3, 1, {"stable", "section", "h1-IC-detomega-zero", "normal-h1-zero"}));
    CHECK(!r.smooth);
    CHECK(status_of(r, "locally-free") == HypothesisStatus::Failed);
  }

  TEST_CASE("Calabi-Yau quintic") {
    const auto r = check_cy_theorem(ctx(5, 0, 5, 1, {"stable", "section", "h1-O-zero", "h1-IC-det-zero", "normal-h1-zero"}));
    CHECK(r.smooth);
    CHECK(r.dimension == Rational(0));
    REQUIRE(!r.notes.empty());
    bool tension = false;
    for (const auto& n : r.notes) tension = tension || n.rfind("bigthm-tension", 0) == 0;
    CHECK(tension);
    const auto cubic = check_cy_theorem(ctx(3, 1, 2, 0, {"stable", "section", "h1-O-zero", "h1-IC-det-zero", "normal-h1-zero"}));
    CHECK(!cubic.smooth);
    CHECK(status_of(cubic, "calabi-yau") == HypothesisStatus::Failed);
  }

  TEST_CASE("big determinant theorem") {
    const auto r = check_bigthm(ctx(3, 1, 3, 1, {"stable", "section", "h2-F-zero", "h2-Fdual-zero", "normal-h1-zero"}));
    CHECK(r.smooth);
    REQUIRE(r.dimension.has_value());
    CHECK(*r.dimension == Rational(6));
    CHECK(status_of(r, "cond3: H^0(C, det F ⊗ ω|C) = 0") == HypothesisStatus::Verified);
    CHECK(!check_bigthm(ctx(3, 1, 3, 1, {"stable", "section"})).smooth);
  }

  TEST_CASE("rational curve corollary") {
    const auto r = check_fanocor(ctx(3, 1, 3, 1, {"stable", "section", "normal-h1-zero"}));
    CHECK(!r.smooth);
    CHECK(status_of(r, "rational") == HypothesisStatus::Failed);
  }

  TEST_CASE("check_all covers every theorem once") {
    const auto all = check_all(ctx(3, 1, 2, 0, {"stable", "section"}));
    REQUIRE(all.size() == 5);
    CHECK(all[0].theorem == Theorem::Fano);
    CHECK(all[1].theorem == Theorem::CalabiYau);
    for (const auto& r : all) {
      CHECK(!r.ledger.empty());
      for (const auto& e : r.ledger) {
        if (e.status != HypothesisStatus::Verified) continue;
        CHECK(!e.provenance.empty());
      }
    }
  }

  TEST_CASE("names") {
    for (auto t : {Theorem::Fano, Theorem::CalabiYau, Theorem::Big, Theorem::FanoCor, Theorem::Ext2Only}) {
      CHECK(parse_theorem(to_string(t)) == t);
    }
    for (auto s : {HypothesisStatus::Verified, HypothesisStatus::Asserted, HypothesisStatus::Failed}) {
      CHECK(parse_hypothesis_status(to_string(s)) == s);
    }
    CHECK_THROWS_AS(parse_theorem("k3"), InvalidInput);
  }
}
