#pragma once

// Smoothness and dimension reports for the moduli space of semistable rank 2
// torsion-free sheaves at a point [F], with every hypothesis of the source
// theorem listed as verified, asserted or failed.

#include <optional>
#include <string>
#include <vector>

#include "r2sheaf/rational.hpp"
#include "r2sheaf/sheaf.hpp"
#include "r2sheaf/vanish.hpp"

namespace r2sheaf::moduli {

enum class Theorem { Fano, CalabiYau, Big, FanoCor, Ext2Only };

std::string to_string(Theorem t);
Theorem parse_theorem(std::string_view text);

enum class HypothesisStatus { Verified, Asserted, Failed };

std::string to_string(HypothesisStatus s);
HypothesisStatus parse_hypothesis_status(std::string_view text);

struct LedgerEntry {
  std::string hypothesis;
  HypothesisStatus status = HypothesisStatus::Failed;
  std::string provenance;

  friend bool operator==(const LedgerEntry&, const LedgerEntry&) = default;
};

struct ModuliReport {
  Theorem theorem = Theorem::Fano;
  bool smooth = false;  // false means "not established", never "singular"
  std::optional<Rational> dimension;
  std::vector<LedgerEntry> ledger;
  // Intermediate vanishing statements used by the theorem's argument.
  std::vector<LedgerEntry> derivations;
  bool integrality_ok = true;
  std::string conclusion;
  std::vector<std::string> notes;

  bool all_hypotheses_hold() const;
  const LedgerEntry* entry(std::string_view hypothesis) const;

  friend bool operator==(const ModuliReport&, const ModuliReport&) = default;
};

// 1 - c1(X)c2(X)/6 + c1(X).Delta(F)/2.
Rational moduli_dimension(const Rank2Sheaf& f);

ModuliReport check_fano_theorem(const vanish::Context& ctx);
ModuliReport check_cy_theorem(const vanish::Context& ctx);
ModuliReport check_ext2_vanishing(const vanish::Context& ctx);
ModuliReport check_bigthm(const vanish::Context& ctx);
ModuliReport check_fanocor(const vanish::Context& ctx);

std::vector<ModuliReport> check_all(const vanish::Context& ctx);

}  // namespace r2sheaf::moduli
