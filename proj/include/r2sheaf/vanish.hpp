#pragma once

// Forward-chaining inference of cohomology vanishing for a rank 2 reflexive
// sheaf F with a section vanishing on a curve C. Every rule is one of the
// vanishing statements for such sheaves; each derived fact carries the tree of
// rules, asserted hypotheses and numeric checks it depends on.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "r2sheaf/chow.hpp"
#include "r2sheaf/rational.hpp"
#include "r2sheaf/serre.hpp"
#include "r2sheaf/sheaf.hpp"

namespace r2sheaf::vanish {

// Closed vocabulary of hypotheses that numbers alone cannot establish.
enum class AssumptionId {
  Stable,
  Semistable,
  Section,             // F has a section whose zero scheme is the curve C
  Connected,           // C connected
  Rational,            // C a smooth rational curve
  Line,                // C a line
  NotLine,             // C not a line
  Components,          // C has `param` connected components
  H1OZero,             // H^1(O_X) = 0
  H2OZero,             // H^2(O_X) = 0
  H1ICDetOmegaZero,    // H^1(I_C (x) det F (x) omega_X) = 0
  H1ICDetZero,         // H^1(I_C (x) det F) = 0
  NonspecialDet,       // det F restricted to C is non-special
  NormalH1Zero,        // H^1(C, N_{C/X}) = 0
  DetAmple,
  DetBigNef,
  DetEffective,
  H0ICZero,            // H^0(I_C(param)) = 0
  Acm,                 // F is ACM for the polarization
  PicardRankOne,       // Pic X = Z
  TwistJump,           // exists n: H^0(F (x) omega^n) != 0, H^0(F (x) omega^(n+1)) = 0
  H2FZero,             // H^2(F) = 0
  H2FDualZero,         // H^2(F*) = 0
  DetOmegaCurveH0Zero, // H^0(C, det F (x) omega_X |_C) = 0
  OmegaCurveH0Zero,    // H^0(C, omega_X |_C) = 0
};

struct Assumption {
  AssumptionId id;
  std::int64_t param = 0;  // only meaningful for Components and H0ICZero

  auto operator<=>(const Assumption&) const = default;
};

bool has_param(AssumptionId id);
std::string to_string(const Assumption& a);
// Accepts the names printed by to_string, e.g. "section", "components=2",
// "h0-IC-zero=-1". Throws InvalidInput for anything else.
Assumption parse_assumption(std::string_view text);
std::vector<std::string> assumption_vocabulary();

struct Provenance {
  enum class Kind { Asserted, Verified, Rule };

  Kind kind = Kind::Asserted;
  std::string label;   // assumption name, numeric check, or rule id
  std::string detail;  // what a rule concluded or why a check passed
  std::vector<Provenance> premises;

  static Provenance asserted(std::string label);
  static Provenance verified(std::string label, std::string detail = {});
  static Provenance rule(std::string id, std::string detail, std::vector<Provenance> premises);

  // Canonical serialization; used to pick a deterministic derivation.
  std::string key() const;
  std::size_t size() const;
  std::vector<std::string> assertions() const;  // sorted, unique
  std::vector<std::string> rules() const;       // sorted, unique
  std::string render(int indent = 0) const;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

enum class SheafKind { F, FDual, FOmega };

struct SheafExpr {
  SheafKind kind = SheafKind::F;
  std::int64_t twist = 0;

  auto operator<=>(const SheafExpr&) const = default;
};

std::string to_string(const SheafExpr& e);
SheafExpr parse_sheaf_expr(std::string_view text);

struct Group {
  int degree = 0;
  SheafExpr expr;

  auto operator<=>(const Group&) const = default;
};

std::string to_string(const Group& g);

struct Status {
  enum class Kind { Zero, Equals, AtMost };

  Kind kind = Kind::Zero;
  std::int64_t value = 0;

  static Status zero() { return {Kind::Zero, 0}; }
  // dim_equals(0) is normalized to zero.
  static Status equals(std::int64_t n) { return n == 0 ? zero() : Status{Kind::Equals, n}; }
  static Status at_most(std::int64_t n) { return n == 0 ? zero() : Status{Kind::AtMost, n}; }

  auto operator<=>(const Status&) const = default;
};

std::string to_string(const Status& s);
// True when both statuses cannot hold for the same group.
bool conflicts(const Status& a, const Status& b);
// True when `a` carries strictly more information than `b`.
bool stronger(const Status& a, const Status& b);

struct VanishingFact {
  Group group;
  Status status;
  // Every distinct derivation found for this status, preferred first.
  std::vector<Provenance> derivations;

  const Provenance& provenance() const { return derivations.front(); }

  friend bool operator==(const VanishingFact&, const VanishingFact&) = default;
};

// Identities and qualitative statements that are not vanishing facts, e.g.
// h^2(F) - h^1(F) = c3/2 under canonical determinant.
struct Relation {
  std::string id;
  std::string statement;
  Provenance provenance;

  friend bool operator==(const Relation&, const Relation&) = default;
};

struct DerivedPremise {
  Assumption assumption;
  Provenance provenance;

  friend bool operator==(const DerivedPremise&, const DerivedPremise&) = default;
};

struct FactSet {
  std::vector<VanishingFact> facts;       // ordered by group, then status
  std::vector<DerivedPremise> premises;   // hypotheses derived by rules
  std::vector<Relation> relations;        // ordered by id

  const VanishingFact* find(const Group& g) const;
  bool vanishes(const Group& g) const;
  const DerivedPremise* find_premise(const Assumption& a) const;

  friend bool operator==(const FactSet&, const FactSet&) = default;
};

struct Context {
  NumericalThreefold x;
  Rank2Sheaf sheaf;
  std::optional<CurveData> curve;
  std::vector<Assumption> assumptions;
  std::vector<std::int64_t> twists;  // twists p / N-coefficients to instantiate
};

// Builds a context for the sheaf attached to a curve (throws InconsistentData
// when c3 < 0). With no explicit twists, 0..3 plus the p threshold are used.
Context curve_context(const NumericalThreefold& x, std::int64_t k, const CurveData& curve,
                      std::vector<Assumption> assumptions, std::vector<std::int64_t> twists = {});

// Context for a sheaf given by Chern data only (no curve).
Context sheaf_context(const Rank2Sheaf& f, std::vector<Assumption> assumptions,
                      std::vector<std::int64_t> twists = {});

std::vector<std::string> rule_ids();

struct InferOptions {
  // Permutation of rule_ids() used for evaluation; empty keeps the default.
  std::vector<std::string> rule_order;
  std::size_t max_passes = 64;
};

// Saturates the context under all rules. Throws InvalidInput for malformed
// contexts (duplicate assumptions) and InconsistentData when assertions
// contradict the numbers or each other, naming the derivations involved.
FactSet infer(const Context& ctx, const InferOptions& options = {});

}  // namespace r2sheaf::vanish
