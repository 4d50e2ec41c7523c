#include "r2sheaf/moduli.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "r2sheaf/errors.hpp"

namespace r2sheaf::moduli {

using r2sheaf::to_string;

namespace {

constexpr std::array<std::pair<Theorem, std::string_view>, 5> kTheoremNames{{
    {Theorem::Fano, "fano"},
    {Theorem::CalabiYau, "cy"},
    {Theorem::Big, "big"},
    {Theorem::FanoCor, "fanocor"},
    {Theorem::Ext2Only, "ext2-only"},
}};

}  // namespace

std::string to_string(Theorem t) {
  for (const auto& [id, name] : kTheoremNames) {
    if (id == t) return std::string(name);
  }
  return "?";
}

Theorem parse_theorem(std::string_view text) {
  for (const auto& [id, name] : kTheoremNames) {
    if (name == text) return id;
  }
  throw InvalidInput("unknown theorem '" + std::string(text) + "'");
}

std::string to_string(HypothesisStatus s) {
  switch (s) {
    case HypothesisStatus::Verified: return "verified";
    case HypothesisStatus::Asserted: return "asserted";
    case HypothesisStatus::Failed: return "failed";
  }
  return "?";
}

HypothesisStatus parse_hypothesis_status(std::string_view text) {
  if (text == "verified") return HypothesisStatus::Verified;
  if (text == "asserted") return HypothesisStatus::Asserted;
  if (text == "failed") return HypothesisStatus::Failed;
  throw InvalidInput("unknown hypothesis status '" + std::string(text) + "'");
}

bool ModuliReport::all_hypotheses_hold() const {
  return std::none_of(ledger.begin(), ledger.end(),
                      [](const LedgerEntry& e) { return e.status == HypothesisStatus::Failed; });
}

const LedgerEntry* ModuliReport::entry(std::string_view hypothesis) const {
  for (const auto& e : ledger) {
    if (e.hypothesis == hypothesis) return &e;
  }
  return nullptr;
}

Rational moduli_dimension(const Rank2Sheaf& f) {
  return 1 - f.threefold().c1c2() / 6 + delta_pair(f) / 2;
}

namespace {

using vanish::AssumptionId;
using vanish::Group;
using vanish::SheafKind;

std::string summarize(const vanish::Provenance& p) {
  std::string out = "via ";
  const auto rules = p.rules();
  if (rules.empty()) {
    out += p.label;
  } else {
    for (std::size_t i = 0; i < rules.size(); ++i) out += (i ? ", " : "") + rules[i];
  }
  const auto leaves = p.assertions();
  if (!leaves.empty()) {
    out += " from asserted ";
    for (std::size_t i = 0; i < leaves.size(); ++i) out += (i ? ", " : "") + leaves[i];
  }
  return out;
}

// Shared bookkeeping: the sanitized context, the saturated fact set and the
// report under construction.
class Checker {
 public:
  Checker(const vanish::Context& ctx, Theorem theorem) : ctx_(ctx) {
    report_.theorem = theorem;
    // A rational curve has pa = 0; an assertion contradicting that is reported
    // as a failed hypothesis instead of aborting the whole report.
    auto& as = ctx_.assumptions;
    if (ctx_.curve && ctx_.curve->pa != 0) {
      auto it = std::find_if(as.begin(), as.end(),
                             [](const vanish::Assumption& a) { return a.id == AssumptionId::Rational; });
      if (it != as.end()) {
        as.erase(it);
        rational_dropped_ = true;
        report_.notes.push_back("rational assertion ignored: pa = " + std::to_string(ctx_.curve->pa) + " != 0");
      }
    }
    facts_ = vanish::infer(ctx_);
  }

  const Rank2Sheaf& f() const { return ctx_.sheaf; }
  std::int64_t a() const { return ctx_.x.a; }
  std::int64_t k() const { return ctx_.sheaf.k(); }
  bool rational_dropped() const { return rational_dropped_; }

  bool asserted(AssumptionId id) const {
    return std::any_of(ctx_.assumptions.begin(), ctx_.assumptions.end(),
                       [&](const vanish::Assumption& a) { return a.id == id; });
  }

  void add(std::string name, HypothesisStatus st, std::string why) {
    report_.ledger.push_back(LedgerEntry{std::move(name), st, std::move(why)});
  }

  void numeric(std::string name, bool ok, std::string why) {
    add(std::move(name), ok ? HypothesisStatus::Verified : HypothesisStatus::Failed, std::move(why));
  }

  void assumed(std::string name, AssumptionId id) {
    if (asserted(id)) add(std::move(name), HypothesisStatus::Asserted, "asserted");
    else add(std::move(name), HypothesisStatus::Failed, "not asserted");
  }

  // Asserted, or derived by the inference engine.
  void derivable(std::string name, AssumptionId id) {
    if (asserted(id)) {
      add(std::move(name), HypothesisStatus::Asserted, "asserted");
    } else if (const auto* p = facts_.find_premise(vanish::Assumption{id})) {
      add(std::move(name), HypothesisStatus::Verified, summarize(p->provenance));
    } else {
      add(std::move(name), HypothesisStatus::Failed, "not asserted and not derivable");
    }
  }

  // A vanishing statement taken from the fact set.
  HypothesisStatus vanishing(std::string name, const Group& g, std::vector<LedgerEntry>& into) {
    const auto* fact = facts_.find(g);
    HypothesisStatus st = HypothesisStatus::Failed;
    std::string why = "not derived";
    if (fact && fact->status.kind == vanish::Status::Kind::Zero) {
      const auto& prov = fact->provenance();
      const bool only_asserted = prov.kind == vanish::Provenance::Kind::Asserted;
      st = only_asserted ? HypothesisStatus::Asserted : HypothesisStatus::Verified;
      why = only_asserted ? "asserted" : summarize(prov);
    } else if (fact) {
      why = "only " + vanish::to_string(fact->status) + " derived";
    }
    into.push_back(LedgerEntry{std::move(name), st, why});
    return st;
  }

  void derivation(std::string name, const Group& g) {
    if (vanishing(std::move(name), g, report_.derivations) == HypothesisStatus::Failed) {
      report_.notes.push_back("intermediate statement " + report_.derivations.back().hypothesis +
                              " was not reproduced by the inference engine");
    }
  }

  // Conditions 1-5 shared by the Ext^2 criterion and the reflexive theorem.
  void five_conditions(bool dual_first) {
    const Group h2f{2, {SheafKind::F, 0}};
    const Group h2fd{2, {SheafKind::FDual, 0}};
    if (dual_first) {
      vanishing("cond1: H^2(F*) = 0", h2fd, report_.ledger);
      vanishing("cond2: H^2(F) = 0", h2f, report_.ledger);
    } else {
      vanishing("cond1: H^2(F) = 0", h2f, report_.ledger);
      vanishing("cond2: H^2(F*) = 0", h2fd, report_.ledger);
    }

    const std::string integral = asserted(AssumptionId::Rational) ? "C integral (rational)"
                                                                   : "integrality of C assumed";
    const Rational deg3 = ctx_.curve ? Rational(k() - a()) * ctx_.curve->d : Rational(k() - a()) * f().S();
    bool cond3 = true;
    if (asserted(AssumptionId::DetOmegaCurveH0Zero)) {
      add("cond3: H^0(C, det F ⊗ ω|C) = 0", HypothesisStatus::Asserted, "asserted");
    } else if (deg3 < 0) {
      add("cond3: H^0(C, det F ⊗ ω|C) = 0", HypothesisStatus::Verified,
          "degree (k-a)d = " + to_string(deg3) + " < 0; " + integral);
    } else {
      add("cond3: H^0(C, det F ⊗ ω|C) = 0", HypothesisStatus::Failed,
          "degree (k-a)d = " + to_string(deg3) + " >= 0 and not asserted");
      cond3 = false;
    }

    const Rational deg4 = ctx_.curve ? Rational(-a()) * ctx_.curve->d : Rational(-a()) * f().S();
    const bool det_effective =
        k() == 0 || (k() > 0 && ctx_.x.is_hypersurface()) || asserted(AssumptionId::DetEffective);
    if (asserted(AssumptionId::OmegaCurveH0Zero)) {
      add("cond4: H^0(C, ω|C) = 0", HypothesisStatus::Asserted, "asserted");
    } else if (deg4 < 0) {
      add("cond4: H^0(C, ω|C) = 0", HypothesisStatus::Verified,
          "degree -a d = " + to_string(deg4) + " < 0; " + integral);
    } else if (cond3 && det_effective) {
      add("cond4: H^0(C, ω|C) = 0", HypothesisStatus::Verified, "implied by cond3 since det F is effective");
    } else {
      add("cond4: H^0(C, ω|C) = 0", HypothesisStatus::Failed,
          "degree -a d = " + to_string(deg4) + " >= 0 and not asserted");
    }
    assumed("cond5: H^1(C, N_C/X) = 0", AssumptionId::NormalH1Zero);
  }

  void conclude_with_dimension(std::optional<Rational> dim) {
    report_.smooth = report_.all_hypotheses_hold();
    if (!report_.smooth) {
      report_.conclusion = "not established";
      return;
    }
    report_.dimension = std::move(dim);
    if (report_.dimension) {
      const Rational& v = *report_.dimension;
      report_.integrality_ok = is_integer(v);
      if (!report_.integrality_ok) {
        report_.notes.push_back("inconsistency: dimension " + to_string(v) + " is not an integer");
      }
      if (v < 0) {
        report_.notes.push_back("warning: negative dimension " + to_string(v) +
                                "; the hypotheses cannot all hold");
      }
      report_.conclusion = "smooth of dimension " + to_string(v) + " at [F]";
    } else {
      report_.conclusion = "smooth at [F]";
    }
  }

  ModuliReport& report() { return report_; }

 private:
  vanish::Context ctx_;
  vanish::FactSet facts_;
  ModuliReport report_;
  bool rational_dropped_ = false;
};

std::string a_text(std::int64_t a) { return "c1(X) = " + std::to_string(a) + "h"; }

}  // namespace

ModuliReport check_fano_theorem(const vanish::Context& ctx) {
  Checker c(ctx, Theorem::Fano);
  c.numeric("fano", c.a() > 0, a_text(c.a()));
  c.assumed("stable", AssumptionId::Stable);
  c.numeric("locally-free", c.f().locally_free(), "c3 = " + to_string(c.f().c3()));
  c.assumed("section", AssumptionId::Section);
  c.derivable("h1-IC-detomega-zero", AssumptionId::H1ICDetOmegaZero);
  c.assumed("normal-h1-zero", AssumptionId::NormalH1Zero);
  c.derivation("H^2(F) = 0", Group{2, {SheafKind::F, 0}});
  c.derivation("H^2(F*) = 0", Group{2, {SheafKind::FDual, 0}});
  c.conclude_with_dimension(moduli_dimension(c.f()));
  return std::move(c.report());
}

ModuliReport check_cy_theorem(const vanish::Context& ctx) {
  Checker c(ctx, Theorem::CalabiYau);
  c.numeric("calabi-yau", c.a() == 0, a_text(c.a()));
  if (ctx.x.is_hypersurface()) {
    c.add("h1-O-zero", HypothesisStatus::Verified, "hypersurface in P^4");
  } else {
    c.assumed("h1-O-zero", AssumptionId::H1OZero);
  }
  c.assumed("stable", AssumptionId::Stable);
  c.numeric("locally-free", c.f().locally_free(), "c3 = " + to_string(c.f().c3()));
  c.assumed("section", AssumptionId::Section);
  c.derivable("h1-IC-det-zero", AssumptionId::H1ICDetZero);
  c.assumed("normal-h1-zero", AssumptionId::NormalH1Zero);
  c.derivation("H^2(F*) = 0", Group{2, {SheafKind::FDual, 0}});
  c.conclude_with_dimension(Rational(0));
  if (c.a() == 0) {
    c.report().notes.push_back("bigthm-tension: the general dimension formula gives " +
                               to_string(moduli_dimension(c.f())) +
                               " on this data, while the Calabi-Yau statement gives 0");
  }
  return std::move(c.report());
}

ModuliReport check_ext2_vanishing(const vanish::Context& ctx) {
  Checker c(ctx, Theorem::Ext2Only);
  c.assumed("section", AssumptionId::Section);
  c.five_conditions(false);
  c.report().smooth = false;
  c.report().conclusion = c.report().all_hypotheses_hold() ? "Ext^2(F,F) = 0" : "not established";
  return std::move(c.report());
}

ModuliReport check_bigthm(const vanish::Context& ctx) {
  Checker c(ctx, Theorem::Big);
  c.assumed("stable", AssumptionId::Stable);
  const std::string name = "omega-dual-effective-or-twist-jump";
  if (c.a() > 0) {
    c.add(name, HypothesisStatus::Verified, "ω_X* = O(" + std::to_string(c.a()) + ") effective");
  } else if (c.a() == 0) {
    c.add(name, HypothesisStatus::Asserted, "c1(X) = 0: ω_X* = O_X taken as effective");
  } else if (c.asserted(AssumptionId::TwistJump)) {
    c.add(name, HypothesisStatus::Asserted, "twist-jump asserted");
  } else {
    c.add(name, HypothesisStatus::Failed, "ω_X* = O(" + std::to_string(c.a()) + ") not effective; twist-jump not asserted");
  }
  c.assumed("section", AssumptionId::Section);
  c.five_conditions(true);
  c.conclude_with_dimension(moduli_dimension(c.f()));
  return std::move(c.report());
}

ModuliReport check_fanocor(const vanish::Context& ctx) {
  Checker c(ctx, Theorem::FanoCor);
  c.numeric("fano", c.a() > 0, a_text(c.a()));
  c.assumed("stable", AssumptionId::Stable);
  const std::string nef = "det-big-nef";
  if (c.k() > 0) {
    c.add(nef, HypothesisStatus::Verified, "det F = O(" + std::to_string(c.k()) + "), k > 0");
  } else if (c.asserted(AssumptionId::Stable) && c.asserted(AssumptionId::PicardRankOne)) {
    c.add(nef, HypothesisStatus::Asserted, "derived from stability with Pic X = Z");
    c.report().notes.push_back("warning: det-big-nef derived from stability, but the direct test k > 0 fails (k = " +
                               std::to_string(c.k()) + ")");
  } else if (c.asserted(AssumptionId::DetBigNef)) {
    c.add(nef, HypothesisStatus::Asserted, "asserted");
  } else {
    c.add(nef, HypothesisStatus::Failed, "k = " + std::to_string(c.k()) + " <= 0");
  }
  c.assumed("section", AssumptionId::Section);
  if (c.rational_dropped()) {
    c.add("rational", HypothesisStatus::Failed, "pa >= 1");
  } else if (ctx.curve && ctx.curve->pa != 0) {
    c.add("rational", HypothesisStatus::Failed, "pa = " + std::to_string(ctx.curve->pa) + " >= 1");
  } else {
    c.assumed("rational", AssumptionId::Rational);
  }
  c.assumed("normal-h1-zero", AssumptionId::NormalH1Zero);
  c.derivation("H^2(F) = 0", Group{2, {SheafKind::F, 0}});
  c.derivation("H^2(F*) = 0", Group{2, {SheafKind::FDual, 0}});
  c.conclude_with_dimension(moduli_dimension(c.f()));
  return std::move(c.report());
}

std::vector<ModuliReport> check_all(const vanish::Context& ctx) {
  return {check_fano_theorem(ctx), check_cy_theorem(ctx), check_bigthm(ctx), check_fanocor(ctx),
          check_ext2_vanishing(ctx)};
}

}  // namespace r2sheaf::moduli
