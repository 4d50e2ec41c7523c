#include <doctest.h>

#include <algorithm>
#include <random>

#include "r2sheaf/chow.hpp"
#include "r2sheaf/errors.hpp"
#include "r2sheaf/serre.hpp"
#include "r2sheaf/vanish.hpp"

using namespace r2sheaf;
using namespace r2sheaf::vanish;

namespace {

std::vector<Assumption> parse_all(std::initializer_list<const char*> names) {
  std::vector<Assumption> out;
  for (const char* n : names) out.push_back(parse_assumption(n));
  return out;
}

Context curve_ctx(long r, long k, long d, long pa, std::initializer_list<const char*> names,
                  std::vector<std::int64_t> twists = {}) {
  return curve_context(hypersurface(r), k, CurveData{Rational(d), pa}, parse_all(names), std::move(twists));
}

Group g(int i, SheafKind kind, std::int64_t t = 0) { return Group{i, {kind, t}}; }

bool derived_by(const FactSet& fs, const Group& grp, const std::string& rule) {
  const auto* f = fs.find(grp);
  if (!f) return false;
  return std::any_of(f->derivations.begin(), f->derivations.end(), [&](const Provenance& p) {
    const auto rules = p.rules();
    return std::find(rules.begin(), rules.end(), rule) != rules.end();
  });
}

const Relation* relation(const FactSet& fs, const std::string& id) {
  for (const auto& r : fs.relations) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

}  // namespace

TEST_SUITE("vanish") {
  TEST_CASE("assumption names") {
    for (const auto& name : {"section", "components=2", "h0-IC-zero=-1", "not-line", "h1-IC-det-zero"}) {
      CHECK(to_string(parse_assumption(name)) == name);
    }
    CHECK_THROWS_AS(parse_assumption("smooth"), InvalidInput);
    CHECK_THROWS_AS(parse_assumption("components"), InvalidInput);
    CHECK_THROWS_AS(parse_assumption("components=0"), InvalidInput);
    CHECK_THROWS_AS(parse_assumption("section=1"), InvalidInput);
    CHECK_THROWS_AS(parse_assumption("h0-IC-zero=x"), InvalidInput);
    const auto vocab = assumption_vocabulary();
    CHECK(std::find(vocab.begin(), vocab.end(), "components=<int>") != vocab.end());
  }

  TEST_CASE("sheaf expressions") {
    for (const auto& e : {SheafExpr{SheafKind::F, 0}, SheafExpr{SheafKind::FDual, -3}, SheafExpr{SheafKind::FOmega, 2}}) {
      CHECK(parse_sheaf_expr(to_string(e)) == e);
    }
    CHECK(to_string(Group{2, {SheafKind::FDual, 0}}) == "H^2(F*(0))");
    CHECK_THROWS_AS(parse_sheaf_expr("G(1)"), InvalidInput);
  }

  TEST_CASE("status order") {
    CHECK(Status::equals(0) == Status::zero());
    CHECK(Status::at_most(0) == Status::zero());
    CHECK(conflicts(Status::zero(), Status::equals(1)));
    CHECK(conflicts(Status::equals(3), Status::at_most(2)));
    CHECK(!conflicts(Status::equals(1), Status::at_most(1)));
    CHECK(!conflicts(Status::at_most(1), Status::at_most(4)));
    CHECK(stronger(Status::zero(), Status::at_most(1)));
    CHECK(stronger(Status::equals(1), Status::at_most(1)));
    CHECK(stronger(Status::at_most(1), Status::at_most(2)));
    CHECK(!stronger(Status::at_most(1), Status::at_most(1)));
    CHECK(!stronger(Status::at_most(1), Status::zero()));
  }

  TEST_CASE("twisted H^2 on a hypersurface") {
    const auto fs = infer(curve_ctx(5, 0, 6, 4, {"section"}, {1, 2}));
    CHECK(fs.find(g(2, SheafKind::FOmega, 2))->status == Status::zero());
    CHECK(fs.find(g(2, SheafKind::FOmega, 1))->status == Status::at_most(1));
    CHECK(derived_by(fs, g(2, SheafKind::FOmega, 2), "hypersurface-h2"));
  }

  TEST_CASE("connected curve of a locally free sheaf") {
    const auto fs = infer(curve_ctx(5, 0, 5, 1, {"section", "connected"}, {0}));
    CHECK(fs.vanishes(g(2, SheafKind::FOmega, 0)));
  }

  TEST_CASE("twist by N") {
    const auto fs = infer(curve_ctx(5, 0, 6, 4, {"section"}, {5}));
    CHECK(fs.vanishes(g(2, SheafKind::FOmega, 5)));
    CHECK(derived_by(fs, g(2, SheafKind::FOmega, 5), "section-twist-h2"));
    const auto eq = infer(curve_ctx(5, 0, 5, 1, {"section"}, {0}));
    CHECK(eq.find(g(2, SheafKind::FOmega, 0))->status == Status::at_most(1));
  }

  TEST_CASE("H^2(F) from the determinant's degree") {
    CHECK(derived_by(infer(curve_ctx(3, 1, 3, 0, {"section"})), g(2, SheafKind::F), "kill-h2-by-det-degree"));
    CHECK(derived_by(infer(curve_ctx(3, 0, 1, 0, {"section"})), g(2, SheafKind::F), "kill-h2-by-det-degree"));
    CHECK(infer(curve_ctx(5, 0, 5, 1, {"section"})).find(g(2, SheafKind::F)) == nullptr);
  }

  TEST_CASE("H^3 and H^0 above the determinant") {
    const auto fs = infer(curve_ctx(5, 0, 6, 4, {"section"}, {0, 1}));
    CHECK(derived_by(fs, g(3, SheafKind::FOmega, 1), "kill-h3-h0"));
    CHECK(fs.vanishes(g(0, SheafKind::F, -1)));
    CHECK(!derived_by(fs, g(3, SheafKind::FOmega, 0), "kill-h3-h0"));
    const auto neg = infer(curve_ctx(5, -2, 1, 0, {"section"}, {2, 3}));
    CHECK(derived_by(neg, g(3, SheafKind::FOmega, 3), "kill-h3-h0"));
    CHECK(neg.vanishes(g(0, SheafKind::F, -1)));
    CHECK(!derived_by(neg, g(3, SheafKind::FOmega, 2), "kill-h3-h0"));
  }

  TEST_CASE("dual vanishing and its corollary") {
    const auto fs = infer(curve_ctx(4, 1, 3, 3, {"section", "connected"}));
    CHECK(fs.vanishes(g(0, SheafKind::FDual)));
    CHECK(fs.vanishes(g(1, SheafKind::FDual)));
    CHECK(fs.find(g(2, SheafKind::FDual))->status == Status::equals(2));
    CHECK(fs.vanishes(g(3, SheafKind::FDual)));
    REQUIRE(relation(fs, "dual-euler-characteristic") != nullptr);
    CHECK(relation(fs, "dual-euler-characteristic")->statement.find("= 2") != std::string::npos);

    CHECK_THROWS_AS(curve_ctx(4, 1, 3, 0, {"section", "connected"}), InconsistentData);
    CHECK_THROWS_AS(infer(curve_ctx(4, 2, 2, 2, {"section", "connected", "h0-IC-zero=1"})), InconsistentData);
    CHECK_NOTHROW(infer(curve_ctx(4, 2, 2, 2, {"section", "connected"})));
  }

  TEST_CASE("rational non-line curve on a cubic") {
    const auto fs = infer(curve_ctx(3, 1, 2, 0, {"section", "rational", "not-line"}));
    for (int i = 0; i <= 3; ++i) CHECK(fs.vanishes(g(i, SheafKind::FDual)));
    const std::vector<std::string> two{"dual-vanishing", "rational-curve"};
    for (int i : {2, 3}) {
      const auto& ds = fs.find(g(i, SheafKind::FDual))->derivations;
      CHECK(std::any_of(ds.begin(), ds.end(), [&](const Provenance& p) { return p.rules() == two; }));
    }
    const auto without = infer(curve_ctx(3, 1, 2, 0, {"section", "not-line"}));
    CHECK(without.find(g(2, SheafKind::FDual)) == nullptr);
    CHECK(without.find(g(3, SheafKind::FDual)) == nullptr);
  }

  TEST_CASE("H^2(F) from a non-special determinant") {
    const auto fs = infer(curve_ctx(3, 0, 1, 0, {"section", "rational"}));
    CHECK(fs.find_premise(Assumption{AssumptionId::NonspecialDet}) != nullptr);
    CHECK(derived_by(fs, g(2, SheafKind::F), "h2-of-sheaf"));

    const auto x = make_threefold(2, -1, Rational(5));
    const auto f = Rank2Sheaf::make(x, 1, Rational(3), Rational(0));
    const auto asserted = infer(sheaf_context(f, parse_all({"section", "nonspecial-det", "h2-O-zero"})));
    CHECK(derived_by(asserted, g(2, SheafKind::F), "h2-of-sheaf"));
    const auto missing = infer(sheaf_context(f, parse_all({"section", "nonspecial-det"})));
    CHECK(missing.find(g(2, SheafKind::F)) == nullptr);
  }

  TEST_CASE("H^2(F*) for locally free F") {
    const auto fs = infer(curve_ctx(3, 1, 2, 0, {"section", "h1-IC-detomega-zero"}));
    CHECK(derived_by(fs, g(2, SheafKind::FDual), "h2-of-dual"));
    const auto reflexive = infer(curve_ctx(3, 1, 3, 1, {"section", "h1-IC-detomega-zero"}));
    CHECK(!derived_by(reflexive, g(2, SheafKind::FDual), "h2-of-dual"));

    const auto cy = infer(curve_ctx(5, 0, 5, 1, {"section", "h1-IC-det-zero"}));
    CHECK(derived_by(cy, g(2, SheafKind::FDual), "trivial-canonical"));
    CHECK(derived_by(cy, g(1, SheafKind::FDual), "dual-h1"));
    CHECK(derived_by(cy, g(2, SheafKind::F), "cy-duality"));
  }

  TEST_CASE("canonical determinant") {
    const auto lf = infer(curve_ctx(5, 0, 5, 1, {}));
    REQUIRE(relation(lf, "canonical-det-duality") != nullptr);
    CHECK(relation(lf, "canonical-det-duality")->statement.find("chi(F) = 0") != std::string::npos);
    const auto refl = infer(curve_ctx(5, 0, 5, 3, {}));
    REQUIRE(relation(refl, "canonical-det-duality") != nullptr);
    CHECK(relation(refl, "canonical-det-duality")->statement.find("c3/2 = 2; chi(F) = 2") != std::string::npos);
    CHECK(relation(infer(curve_ctx(4, 0, 3, 1, {})), "canonical-det-duality") == nullptr);
    CHECK_THROWS_AS(infer(curve_ctx(5, 0, 6, 4, {"h2-F-zero"})), InconsistentData);
  }

  TEST_CASE("ACM obstruction") {
    const auto fs = infer(curve_ctx(5, 0, 6, 4, {}));
    REQUIRE(relation(fs, "acm-obstruction") != nullptr);
    CHECK(relation(fs, "acm-obstruction")->statement.find("= 6") != std::string::npos);
    CHECK(relation(infer(curve_ctx(5, 0, 5, 1, {})), "acm-obstruction") == nullptr);
    CHECK_THROWS_AS(infer(curve_ctx(5, 0, 6, 4, {"acm"})), InconsistentData);
  }

  TEST_CASE("no assumptions, no facts") {
    const auto fs = infer(curve_ctx(5, 0, 6, 4, {}));
    CHECK(fs.facts.empty());
    CHECK(fs.premises.empty());
  }

  TEST_CASE("quintic with a section") {
    const auto fs = infer(curve_ctx(5, 0, 6, 4, {"section"}));
    CHECK(fs.vanishes(g(2, SheafKind::FOmega, 2)));
    CHECK(fs.vanishes(g(2, SheafKind::FOmega, 3)));
    CHECK(fs.vanishes(g(3, SheafKind::FOmega, 1)));
    CHECK(fs.vanishes(g(0, SheafKind::F, -1)));
  }

  TEST_CASE("inconsistent or malformed assertions") {
    CHECK_THROWS_AS(infer(curve_ctx(5, 0, 6, 4, {"section", "section"})), InvalidInput);
    CHECK_NOTHROW(infer(curve_ctx(5, 0, 6, 4, {"h0-IC-zero=1", "h0-IC-zero=2"})));
    CHECK_THROWS_AS(infer(curve_ctx(5, 0, 6, 4, {"det-ample"})), InconsistentData);
    CHECK_THROWS_AS(infer(curve_ctx(5, -1, 6, 4, {"det-effective"})), InconsistentData);
    CHECK_THROWS_AS(infer(curve_ctx(5, 0, 6, 4, {"det-big-nef"})), InconsistentData);
    CHECK_THROWS_AS(infer(curve_ctx(3, 1, 2, 0, {"line", "not-line"})), InconsistentData);
    CHECK_THROWS_AS(infer(curve_ctx(3, 1, 2, 0, {"line"})), InconsistentData);
    CHECK_THROWS_AS(infer(curve_ctx(3, 1, 1, 0, {"not-line"})), InconsistentData);
    CHECK_THROWS_AS(infer(curve_ctx(5, 0, 6, 4, {"rational"})), InconsistentData);
    CHECK_THROWS_AS(infer(curve_ctx(5, 0, 6, 4, {"connected", "components=2"})), InconsistentData);
    CHECK_THROWS_AS(infer(curve_ctx(3, 1, 2, 0, {"rational", "components=2"})), InconsistentData);
  }

  TEST_CASE("contradictory derivations name both sides") {
    try {
      infer(curve_ctx(5, 0, 5, 1, {"section", "components=3"}, {0}));
      FAIL("expected a contradiction");
    } catch (const InconsistentData& e) {
      const std::string what = e.what();
      CHECK(what.find("components=3") != std::string::npos);
      CHECK(what.find("dim_at_most") != std::string::npos);
      CHECK(what.find("dim_equals") != std::string::npos);
    }
  }

  TEST_CASE("rule order does not matter") {
    std::mt19937_64 rng(7);
    const std::vector<Context> contexts{
        curve_ctx(3, 1, 2, 0, {"section", "rational", "not-line", "stable"}),
        curve_ctx(5, 0, 5, 1, {"section", "h1-IC-det-zero", "connected"}),
        curve_ctx(4, 1, 3, 3, {"section", "connected", "nonspecial-det"}),
        curve_ctx(2, 2, 4, 1, {"section", "h1-IC-detomega-zero", "components=1"})};
    for (const auto& ctx : contexts) {
      const auto reference = infer(ctx);
      auto order = rule_ids();
      for (int i = 0; i < 200; ++i) {
        std::shuffle(order.begin(), order.end(), rng);
        CHECK(infer(ctx, {order, 64}) == reference);
      }
    }
    CHECK_THROWS_AS(infer(contexts[0], {{"no-such-rule"}, 64}), InvalidInput);
  }

  TEST_CASE("replaying a derivation from its asserted leaves") {
    const auto ctx = curve_ctx(3, 1, 2, 0, {"section", "rational", "not-line", "stable", "normal-h1-zero"});
    const auto full = infer(ctx);
    REQUIRE(!full.facts.empty());
    for (const auto& fact : full.facts) {
      for (const auto& p : fact.derivations) {
        auto sub = ctx;
        sub.assumptions.clear();
        for (const auto& leaf : p.assertions()) sub.assumptions.push_back(parse_assumption(leaf));
        const auto again = infer(sub);
        REQUIRE(again.find(fact.group) != nullptr);
        CHECK(again.find(fact.group)->status == fact.status);
      }
    }
  }

  TEST_CASE("derivations are sorted by preference and distinct") {
    const auto fs = infer(curve_ctx(3, 1, 2, 0, {"section", "rational", "not-line"}));
    for (const auto& f : fs.facts) {
      for (std::size_t i = 1; i < f.derivations.size(); ++i) {
        CHECK(f.derivations[i - 1].size() <= f.derivations[i].size());
        CHECK(f.derivations[i - 1].key() != f.derivations[i].key());
      }
    }
  }
}
