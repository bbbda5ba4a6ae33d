#pragma once

// JSON renderings of the report types. Field order is fixed (ordered_json) so
// output is byte-stable. Exact rationals are written as strings ("3/2").

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "galcover/analyses.hpp"
#include "galcover/covers.hpp"
#include "galcover/hodge.hpp"
#include "galcover/repr.hpp"

namespace galcover::json {

using value = nlohmann::ordered_json;

inline value labels(const FiniteGroup& g, const std::vector<elem>& xs) {
  value out = value::array();
  for (elem x : xs)
    out.push_back(g.label(x));
  return out;
}

inline value rational_value(const rational& q) { return to_string(q); }

inline value to_json(const Datum& d) {
  value j;
  j["group"] = d.group->spec();
  j["orders"] = d.orders;
  j["tuple"] = labels(*d.group, d.tuple);
  j["branch_count"] = d.branch_count();
  j["degenerate"] = d.degenerate;
  return j;
}

inline value to_json(const DatumRejection& r) {
  value j;
  j["valid"] = false;
  j["reason"] = to_string(r.reason);
  j["position"] = r.position >= 0 ? value(r.position) : value(nullptr);
  j["message"] = r.message;
  return j;
}

inline value to_json(const EquivalenceClassSet& s, const group_ptr& g, const std::vector<int>& orders) {
  value j;
  j["group"] = g->spec();
  j["orders"] = orders;
  j["equivalence"] = to_string(s.kind);
  j["genus"] = s.classes.empty() ? value(nullptr) : value(genus(s.classes.front().representative));
  j["total"] = s.total();
  j["class_count"] = s.classes.size();
  value cls = value::array();
  for (const auto& c : s.classes) {
    value e;
    e["rep"] = labels(*g, c.representative.tuple);
    if (c.representative.orders != orders)
      e["orders"] = c.representative.orders;
    e["size"] = c.size;
    cls.push_back(std::move(e));
  }
  j["classes"] = std::move(cls);
  return j;
}

inline value to_json(const EigenspaceReport& r) {
  value j;
  j["genus"] = r.genus;
  value chars = value::array();
  for (const auto& c : r.characters)
    chars.push_back({{"character", c.character},
                     {"degree", c.degree},
                     {"fs", c.fs},
                     {"conjugate", c.conjugate},
                     {"multiplicity_holo", c.holomorphic}});
  j["characters"] = std::move(chars);
  value pairs = value::array();
  for (const auto& p : r.pairs)
    pairs.push_back({{"pair", {p.character, p.conjugate}},
                     {"type", {p.a, p.b}},
                     {"fs", p.fs},
                     {"degree", p.degree}});
  j["pairs"] = std::move(pairs);
  return j;
}

inline value to_json(const ExclusionReport& r) {
  value j;
  j["family_dim"] = r.family_dim;
  j["policy"] = to_string(r.policy.rule);
  j["assume_gm"] = r.policy.assume_gm;
  value cs = value::array();
  for (const auto& c : r.contributions)
    cs.push_back({{"pair", {c.character, c.conjugate}},
                  {"type", {c.a, c.b}},
                  {"fs", c.fs},
                  {"delta", rational_value(c.delta)},
                  {"note", c.note}});
  j["contributions"] = std::move(cs);
  j["lower_bound"] = rational_value(r.lower_bound);
  j["verdict"] = r.verdict();
  j["conditional_on"] = r.conditional_on;
  return j;
}

inline value to_json(const DecompositionReport& r) {
  value j;
  j["scheme"] = r.scheme;
  j["genus"] = r.genus;
  value fs = value::array();
  for (const auto& f : r.factors)
    fs.push_back({{"name", f.name}, {"dimension", f.dimension}, {"multiplicity", f.multiplicity}, {"detail", f.detail}});
  j["factors"] = std::move(fs);
  j["residual_dimension"] = r.residual_dimension;
  return j;
}

inline value to_json(const std::optional<HyperellipticCertificate>& c, const FiniteGroup& g) {
  if (!c)
    return nullptr;
  return {{"involution", g.label(c->involution)}, {"fixed_points", c->fixed_points}};
}

inline value character_table_json(const CharacterTable& t) {
  const FiniteGroup& g = *t.group();
  value j;
  j["group"] = g.spec();
  j["order"] = g.order();
  j["conductor"] = t.conductor();
  value cls = value::array();
  for (const auto& c : t.classes())
    cls.push_back({{"representative", g.label(c.representative)}, {"size", c.size}, {"order", c.element_order}});
  j["classes"] = std::move(cls);
  value chars = value::array();
  for (int chi = 0; chi < t.character_count(); ++chi) {
    value vals = value::array();
    for (const auto& v : t.values()[chi])
      vals.push_back(v.to_string());
    chars.push_back({{"index", chi},
                     {"degree", t.degree(chi)},
                     {"fs", t.frobenius_schur(chi)},
                     {"conjugate", t.conjugate_of(chi)},
                     {"values", std::move(vals)}});
  }
  j["characters"] = std::move(chars);
  return j;
}

inline value rational_irreducibles_json(const std::vector<RationalIrrep>& ws) {
  value out = value::array();
  for (const auto& w : ws)
    out.push_back({{"orbit", w.orbit},
                   {"fs", w.fs},
                   {"degree", w.degree},
                   {"schur_index", w.schur_index},
                   {"q_dimension", w.q_dimension},
                   {"n", w.multiplicity_n},
                   {"kind", to_string(w.kind)},
                   {"center_degree", w.center_degree}});
  return out;
}

inline value to_json(const std::vector<Assertion>& checks) {
  value out = value::array();
  for (const auto& a : checks)
    out.push_back({{"name", a.name}, {"passed", a.passed}, {"detail", a.detail}});
  return out;
}

inline value to_json(const ScanRow& r) {
  return {{"l", r.l},
          {"k", r.k},
          {"inequality_holds", r.inequality_holds},
          {"quadratic_form_holds", r.quadratic_holds},
          {"literal_bound", rational_value(r.literal_bound)},
          {"conservative_bound", rational_value(r.conservative_bound)},
          {"literal_verdict", r.literal_excluded ? "excluded" : "inconclusive"},
          {"conservative_verdict", r.conservative_excluded ? "excluded" : "inconclusive"},
          {"bound_tight", r.bound_tight}};
}

inline value to_json(const DihedralBoundReport& r) {
  value j;
  j["target"] = "dihedral-bound";
  j["l_min"] = r.scan.l_min;
  j["l_max"] = r.scan.l_max;
  j["minimal_uniform_l"] = r.scan.minimal_uniform_l ? value(*r.scan.minimal_uniform_l) : value(nullptr);
  value fails = value::array();
  for (auto [l, k] : r.scan.failures)
    fails.push_back({l, k});
  j["failures"] = std::move(fails);
  value rows = value::array();
  for (const auto& row : r.scan.rows)
    rows.push_back(to_json(row));
  j["rows"] = std::move(rows);
  value qs = value::array();
  for (const auto& q : r.quotient_checks)
    qs.push_back({{"p", q.p},
                  {"k", q.k},
                  {"reflections", q.reflections},
                  {"kept_points", q.kept_points},
                  {"type", {q.a, q.b}},
                  {"literal_delta", rational_value(q.literal_delta)},
                  {"second_quotient_points", q.second_quotient_points},
                  {"ok", q.ok}});
  j["quotient_checks"] = std::move(qs);
  j["notes"] = r.notes;
  j["checks"] = to_json(r.checks);
  j["ok"] = r.ok();
  return j;
}

inline value to_json(const Q8SimpleReport& r) {
  value j;
  j["target"] = "q8-simple";
  j["signatures_scanned"] = r.signatures_scanned;
  j["empty_signatures"] = r.empty_signatures;
  j["total_tuples"] = r.total_tuples;
  value rows = value::array();
  for (const auto& row : r.rows) {
    const FiniteGroup& g = *row.representative.group;
    rows.push_back({{"orders", row.representative.orders},
                    {"rep", labels(g, row.representative.tuple)},
                    {"size", row.size},
                    {"genus", row.genus},
                    {"nonzero_factors", row.nonzero_factors},
                    {"proper_quotients_rational", row.proper_quotients_rational},
                    {"certificate", to_json(row.certificate, g)},
                    {"contains_minus_one", row.contains_minus_one},
                    {"passes", row.passes}});
  }
  j["rows"] = std::move(rows);
  j["checks"] = to_json(r.checks);
  j["ok"] = r.ok();
  return j;
}

inline value to_json(const Q8NonHypReport& r) {
  value j;
  j["target"] = "q8-nonhyp";
  j["policy"] = to_string(r.policy.rule);
  j["assume_gm"] = r.policy.assume_gm;
  j["with_minus_one"] = r.with_minus_one;
  j["without_minus_one"] = r.without_minus_one;
  value rows = value::array();
  for (const auto& row : r.rows) {
    const FiniteGroup& g = *row.representative.group;
    rows.push_back({{"orders", row.representative.orders},
                    {"rep", labels(g, row.representative.tuple)},
                    {"size", row.size},
                    {"genus", row.genus},
                    {"cyclic_quotient_genera", row.cyclic_quotient_genera},
                    {"decomposition", row.decomposition},
                    {"two_pairs", row.two_pairs},
                    {"hyperelliptic_certificate", row.hyperelliptic_certificate},
                    {"exclusion", to_json(row.exclusion)}});
  }
  j["rows"] = std::move(rows);
  j["checks"] = to_json(r.checks);
  j["ok"] = r.ok();
  return j;
}

} // namespace galcover::json
