#include "r2sheaf/json_io.hpp"

#include "r2sheaf/errors.hpp"

namespace r2sheaf::io {

namespace {

std::string_view kind_name(vanish::Provenance::Kind k) {
  switch (k) {
    case vanish::Provenance::Kind::Asserted: return "asserted";
    case vanish::Provenance::Kind::Verified: return "verified";
    case vanish::Provenance::Kind::Rule: return "rule";
  }
  return "?";
}

vanish::Provenance::Kind parse_kind(const std::string& s) {
  if (s == "asserted") return vanish::Provenance::Kind::Asserted;
  if (s == "verified") return vanish::Provenance::Kind::Verified;
  if (s == "rule") return vanish::Provenance::Kind::Rule;
  throw InvalidInput("unknown provenance kind '" + s + "'");
}

json entries(const std::vector<moduli::LedgerEntry>& list) {
  json out = json::array();
  for (const auto& e : list) {
    out.push_back({{"hypothesis", e.hypothesis}, {"status", moduli::to_string(e.status)}, {"provenance", e.provenance}});
  }
  return out;
}

std::vector<moduli::LedgerEntry> entries_from(const json& j) {
  std::vector<moduli::LedgerEntry> out;
  for (const auto& e : j) {
    out.push_back(moduli::LedgerEntry{e.at("hypothesis").get<std::string>(),
                                      moduli::parse_hypothesis_status(e.at("status").get<std::string>()),
                                      e.at("provenance").get<std::string>()});
  }
  return out;
}

}  // namespace

json to_json(const vanish::Provenance& p) {
  json premises = json::array();
  for (const auto& q : p.premises) premises.push_back(to_json(q));
  return {{"kind", kind_name(p.kind)}, {"label", p.label}, {"detail", p.detail}, {"premises", premises}};
}

vanish::Provenance provenance_from_json(const json& j) {
  vanish::Provenance p;
  p.kind = parse_kind(j.at("kind").get<std::string>());
  p.label = j.at("label").get<std::string>();
  p.detail = j.at("detail").get<std::string>();
  for (const auto& q : j.at("premises")) p.premises.push_back(provenance_from_json(q));
  return p;
}

json to_json(const vanish::VanishingFact& f) {
  json derivations = json::array();
  for (const auto& d : f.derivations) derivations.push_back(to_json(d));
  json status;
  switch (f.status.kind) {
    case vanish::Status::Kind::Zero: status = "zero"; break;
    case vanish::Status::Kind::Equals: status = "dim_equals"; break;
    case vanish::Status::Kind::AtMost: status = "dim_at_most"; break;
  }
  json out = {{"group", {{"i", f.group.degree}, {"expr", vanish::to_string(f.group.expr)}}},
              {"status", status},
              {"provenance", derivations}};
  if (f.status.kind != vanish::Status::Kind::Zero) out["value"] = f.status.value;
  return out;
}

vanish::VanishingFact fact_from_json(const json& j) {
  vanish::VanishingFact f;
  f.group.degree = j.at("group").at("i").get<int>();
  f.group.expr = vanish::parse_sheaf_expr(j.at("group").at("expr").get<std::string>());
  const auto status = j.at("status").get<std::string>();
  if (status == "zero") {
    f.status = vanish::Status::zero();
  } else if (status == "dim_equals") {
    f.status = vanish::Status{vanish::Status::Kind::Equals, j.at("value").get<std::int64_t>()};
  } else if (status == "dim_at_most") {
    f.status = vanish::Status{vanish::Status::Kind::AtMost, j.at("value").get<std::int64_t>()};
  } else {
    throw InvalidInput("unknown status '" + status + "'");
  }
  const auto& prov = j.at("provenance");
  if (!prov.is_array() || prov.empty()) throw InvalidInput("provenance must list at least one derivation");
  for (const auto& d : prov) f.derivations.push_back(provenance_from_json(d));
  return f;
}

json to_json(const vanish::FactSet& s) {
  json facts = json::array();
  for (const auto& f : s.facts) facts.push_back(to_json(f));
  json premises = json::array();
  for (const auto& p : s.premises) {
    premises.push_back({{"assumption", vanish::to_string(p.assumption)}, {"provenance", json::array({to_json(p.provenance)})}});
  }
  json relations = json::array();
  for (const auto& r : s.relations) {
    relations.push_back({{"id", r.id}, {"statement", r.statement}, {"provenance", json::array({to_json(r.provenance)})}});
  }
  return {{"facts", facts}, {"premises", premises}, {"relations", relations}};
}

vanish::FactSet factset_from_json(const json& j) {
  vanish::FactSet s;
  for (const auto& f : j.at("facts")) s.facts.push_back(fact_from_json(f));
  for (const auto& p : j.at("premises")) {
    s.premises.push_back(vanish::DerivedPremise{vanish::parse_assumption(p.at("assumption").get<std::string>()),
                                                provenance_from_json(p.at("provenance").at(0))});
  }
  for (const auto& r : j.at("relations")) {
    s.relations.push_back(vanish::Relation{r.at("id").get<std::string>(), r.at("statement").get<std::string>(),
                                           provenance_from_json(r.at("provenance").at(0))});
  }
  return s;
}

json to_json(const moduli::ModuliReport& r) {
  json out;
  out["theorem"] = moduli::to_string(r.theorem);
  out["smooth"] = r.smooth ? json(true) : json("not-established");
  out["dimension"] = r.dimension ? json(to_string(*r.dimension)) : json(nullptr);
  out["integrality_ok"] = r.integrality_ok;
  out["conclusion"] = r.conclusion;
  out["ledger"] = entries(r.ledger);
  out["derivations"] = entries(r.derivations);
  out["notes"] = r.notes;
  return out;
}

moduli::ModuliReport report_from_json(const json& j) {
  moduli::ModuliReport r;
  r.theorem = moduli::parse_theorem(j.at("theorem").get<std::string>());
  const auto& smooth = j.at("smooth");
  if (smooth.is_boolean()) {
    r.smooth = smooth.get<bool>();
  } else if (smooth == "not-established") {
    r.smooth = false;
  } else {
    throw InvalidInput("smooth must be true or \"not-established\"");
  }
  if (!j.at("dimension").is_null()) r.dimension = parse_rational(j.at("dimension").get<std::string>());
  r.integrality_ok = j.at("integrality_ok").get<bool>();
  r.conclusion = j.at("conclusion").get<std::string>();
  r.ledger = entries_from(j.at("ledger"));
  r.derivations = entries_from(j.at("derivations"));
  r.notes = j.at("notes").get<std::vector<std::string>>();
  return r;
}

json to_json(const BoundReport& r) {
  json out;
  out["name"] = r.name;
  out["holds"] = r.holds;
  out["lhs"] = to_string(r.lhs);
  out["comparison"] = to_string(r.comparison);
  out["rhs"] = to_string(r.rhs);
  out["threshold"] = r.threshold ? json(to_string(*r.threshold)) : json(nullptr);
  out["context"] = r.context;
  out["assumed"] = r.assumed;
  return out;
}

BoundReport bound_from_json(const json& j) {
  BoundReport r;
  r.name = j.at("name").get<std::string>();
  r.holds = j.at("holds").get<bool>();
  r.lhs = parse_rational(j.at("lhs").get<std::string>());
  const auto cmp = j.at("comparison").get<std::string>();
  bool known = false;
  for (auto c : {Comparison::Less, Comparison::LessEqual, Comparison::Greater, Comparison::GreaterEqual}) {
    if (to_string(c) == cmp) {
      r.comparison = c;
      known = true;
    }
  }
  if (!known) throw InvalidInput("unknown comparison '" + cmp + "'");
  r.rhs = parse_rational(j.at("rhs").get<std::string>());
  if (!j.at("threshold").is_null()) {
    const Rational t = parse_rational(j.at("threshold").get<std::string>());
    if (!is_integer(t)) throw InvalidInput("threshold must be an integer");
    r.threshold = t.get_num();
  }
  r.context = j.at("context").get<std::vector<std::string>>();
  r.assumed = j.at("assumed").get<std::vector<std::string>>();
  return r;
}

json to_json(const NumericalThreefold& x) {
  json out{{"N", x.N}, {"a", x.a}, {"b", to_string(x.b)}, {"label", x.label}};
  out["hypersurface_degree"] = x.hypersurface_degree ? json(*x.hypersurface_degree) : json(nullptr);
  return out;
}

json to_json(const Rank2Sheaf& f) {
  return json{{"k", f.k()},
              {"S", to_string(f.S())},
              {"c3", to_string(f.c3())},
              {"locally_free", f.locally_free()}};
}

}  // namespace r2sheaf::io
