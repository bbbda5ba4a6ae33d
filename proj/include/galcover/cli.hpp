#pragma once

// Command-line front end. `run` takes the arguments after the program name
// and returns the process exit code:
//   0 ok, 1 usage error, 2 invalid datum or parameters, 3 internal inconsistency
//   (a violated invariant, or a failed reproduction assertion).

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "galcover/analyses.hpp"
#include "galcover/covers.hpp"
#include "galcover/hodge.hpp"
#include "galcover/json_io.hpp"
#include "galcover/repr.hpp"

namespace galcover::cli {

enum exit_code : int { ok = 0, usage = 1, invalid = 2, internal = 3 };

namespace detail {

struct Options {
  std::string action = "info";
  std::string group;
  std::string orders;
  std::string tuple;
  std::string policy;
  std::string up_to = "conj";
  std::string method = "auto";
  std::string scheme = "auto";
  std::string target;
  int branch_count = 0;
  int l_max = 40;
  bool json = false;
  bool assume_gm = false;
};

class Table {
public:
  explicit Table(std::vector<std::string> head) : head_(std::move(head)) {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& os, const std::string& indent = "  ") const {
    std::vector<std::size_t> w(head_.size(), 0);
    for (std::size_t c = 0; c < head_.size(); ++c)
      w[c] = head_[c].size();
    for (const auto& r : rows_)
      for (std::size_t c = 0; c < r.size() && c < w.size(); ++c)
        w[c] = std::max(w[c], r[c].size());
    auto line = [&](const std::vector<std::string>& r) {
      std::string s = indent;
      for (std::size_t c = 0; c < w.size(); ++c) {
        const std::string& cell = c < r.size() ? r[c] : std::string();
        s += cell;
        if (c + 1 < w.size())
          s += std::string(w[c] - cell.size() + 2, ' ');
      }
      while (!s.empty() && s.back() == ' ')
        s.pop_back();
      os << s << "\n";
    };
    line(head_);
    std::vector<std::string> rule;
    for (std::size_t c = 0; c < w.size(); ++c)
      rule.emplace_back(w[c], '-');
    line(rule);
    for (const auto& r : rows_)
      line(r);
  }

private:
  std::vector<std::string> head_;
  std::vector<std::vector<std::string>> rows_;
};

template <class T>
std::string join(const std::vector<T>& xs, const std::string& sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i)
    os << (i ? sep : "") << xs[i];
  return os.str();
}

inline std::string labels(const FiniteGroup& g, const std::vector<elem>& xs, const std::string& sep = ",") {
  std::vector<std::string> ls;
  for (elem x : xs)
    ls.push_back(g.label(x));
  return join(ls, sep);
}

inline std::string subgroup_name(const FiniteGroup& g, const Subgroup& h) {
  return "{" + labels(g, h.members()) + "}";
}

inline std::string flavor_name(const FiniteGroup& g) {
  const auto f = g.group_flavor();
  switch (f.kind) {
  case flavor_kind::dihedral:
    return "dihedral(" + std::to_string(f.n) + ")";
  case flavor_kind::quaternion8:
    return "quaternion8";
  case flavor_kind::cyclic:
    return "cyclic(" + std::to_string(f.n) + ")";
  case flavor_kind::quotient:
    return "quotient";
  case flavor_kind::generic:
    return "generic";
  }
  return "?";
}

inline std::string fs_name(int fs) { return fs > 0 ? "+1" : fs < 0 ? "-1" : "0"; }

struct rejected {
  DatumRejection rejection;
};

inline DeltaPolicy policy_from(const Options& o, delta_rule fallback) {
  DeltaPolicy p;
  p.rule = fallback;
  if (o.policy == "literal")
    p.rule = delta_rule::literal;
  else if (o.policy == "conservative")
    p.rule = delta_rule::conservative;
  p.assume_gm = o.assume_gm;
  return p;
}

inline group_ptr load_group(const Options& o) { return make_group(o.group); }

inline Datum load_datum(const group_ptr& g, const Options& o) {
  auto tuple = parse_tuple(*g, o.tuple);
  std::vector<int> orders = o.orders.empty() ? std::vector<int>{} : parse_orders(o.orders);
  auto check = validate_datum(g, orders, tuple);
  if (auto* r = std::get_if<DatumRejection>(&check))
    throw rejected{*r};
  return std::get<Datum>(check);
}

inline bool is_dihedral_2p(const FiniteGroup& g) {
  const auto f = g.group_flavor();
  return f.kind == flavor_kind::dihedral && f.n % 2 == 0 && is_odd_prime(f.n / 2);
}

inline std::vector<DecompositionReport> decompositions(const Datum& d, const std::string& scheme) {
  const FiniteGroup& g = *d.group;
  std::vector<DecompositionReport> out;
  auto specific = [&]() -> std::optional<DecompositionReport> {
    if (g.group_flavor().kind == flavor_kind::quaternion8)
      return q8_jacobian_decomposition(d);
    if (is_dihedral_2p(g))
      return dihedral_jacobian_decomposition(d);
    return std::nullopt;
  };
  if (scheme == "group-algebra") {
    out.push_back(group_algebra_dimensions(d));
  } else if (scheme == "dihedral") {
    out.push_back(dihedral_jacobian_decomposition(d));
  } else if (scheme == "q8") {
    out.push_back(q8_jacobian_decomposition(d));
  } else if (scheme == "all") {
    out.push_back(group_algebra_dimensions(d));
    if (auto s = specific())
      out.push_back(*s);
  } else {
    auto s = specific();
    out.push_back(s ? *s : group_algebra_dimensions(d));
  }
  return out;
}

// ---- human renderings ------------------------------------------------------

inline void print_decomposition(std::ostream& os, const DecompositionReport& r) {
  os << "decomposition (" << r.scheme << "), genus " << r.genus << "\n";
  Table t({"factor", "dim", "mult", "detail"});
  for (const auto& f : r.factors)
    t.add({f.name, std::to_string(f.dimension), std::to_string(f.multiplicity), f.detail});
  t.print(os);
  if (r.scheme == "dihedral" || r.residual_dimension != 0)
    os << "  residual dimension " << r.residual_dimension << "\n";
}

inline void print_exclusion(std::ostream& os, const ExclusionReport& r) {
  os << "exclusion (" << to_string(r.policy.rule) << (r.policy.assume_gm ? ", assume GM" : "") << ")\n";
  Table t({"pair", "type", "fs", "delta", "note"});
  for (const auto& c : r.contributions)
    t.add({"(" + std::to_string(c.character) + "," + std::to_string(c.conjugate) + ")",
           "(" + std::to_string(c.a) + "," + std::to_string(c.b) + ")", fs_name(c.fs), to_string(c.delta), c.note});
  t.print(os);
  os << "  lower bound " << to_string(r.lower_bound) << " vs family dimension " << r.family_dim << ": "
     << r.verdict();
  if (!r.conditional_on.empty())
    os << " (conditional on " << join(r.conditional_on) << ")";
  os << "\n";
}

inline void print_checks(std::ostream& os, const std::vector<Assertion>& checks) {
  for (const auto& a : checks) {
    os << (a.passed ? "PASS  " : "FAIL  ") << a.name;
    if (!a.detail.empty())
      os << " [" << a.detail << "]";
    os << "\n";
  }
}

// ---- analyze -----------------------------------------------------------

struct Analysis {
  Datum datum;
  int genus = 0;
  int family_dim = 0;
  std::optional<int> reflections;
  EigenspaceReport eigen;
  std::vector<std::pair<Subgroup, int>> quotient_genera;
  std::vector<DecompositionReport> decomps;
  std::optional<HyperellipticCertificate> certificate;
  ExclusionReport exclusion;
};

inline Analysis analyze(const Datum& d, DeltaPolicy policy) {
  const FiniteGroup& g = *d.group;
  Analysis a;
  a.datum = d;
  a.genus = genus(d);
  a.family_dim = family_dimension(d);
  if (g.group_flavor().kind == flavor_kind::dihedral && g.group_flavor().n >= 3)
    a.reflections = reflection_count(d);
  a.eigen = chevalley_weil(d);
  for (const auto& h : all_subgroups(g))
    a.quotient_genera.emplace_back(h, intermediate_genus(d, h));
  a.decomps = decompositions(d, "all");
  a.certificate = hyperelliptic_certificate(d);
  a.exclusion = shimura_lower_bound(d, policy);
  return a;
}

inline json::value analysis_json(const Analysis& a) {
  const FiniteGroup& g = *a.datum.group;
  json::value j;
  j["group"] = g.spec();
  j["orders"] = a.datum.orders;
  j["tuple"] = json::labels(g, a.datum.tuple);
  j["genus"] = a.genus;
  j["family_dim"] = a.family_dim;
  j["reflection_count"] = a.reflections ? json::value(*a.reflections) : json::value(nullptr);
  j["eigenspaces"] = json::to_json(a.eigen);
  json::value qs = json::value::array();
  for (const auto& [h, gen] : a.quotient_genera)
    qs.push_back({{"subgroup", json::labels(g, h.members())},
                  {"order", h.size()},
                  {"normal", is_normal(g, h)},
                  {"genus", gen}});
  j["quotient_genera"] = std::move(qs);
  json::value ds = json::value::array();
  for (const auto& d : a.decomps)
    ds.push_back(json::to_json(d));
  j["decompositions"] = std::move(ds);
  j["hyperelliptic_certificate"] = json::to_json(a.certificate, g);
  j["exclusion"] = json::to_json(a.exclusion);
  return j;
}

inline void print_analysis(std::ostream& os, const Analysis& a) {
  const FiniteGroup& g = *a.datum.group;
  os << "datum " << g.spec() << " orders (" << join(a.datum.orders) << ") tuple (" << labels(g, a.datum.tuple)
     << ")\n";
  os << "genus " << a.genus << ", family dimension " << a.family_dim;
  if (a.reflections)
    os << ", reflections " << *a.reflections;
  os << "\n";
  os << "holomorphic multiplicities\n";
  Table ct({"chi", "degree", "fs", "conj", "N"});
  for (const auto& c : a.eigen.characters)
    ct.add({std::to_string(c.character), std::to_string(c.degree), fs_name(c.fs), std::to_string(c.conjugate),
            std::to_string(c.holomorphic)});
  ct.print(os);
  os << "eigenspace types\n";
  Table pt({"pair", "degree", "fs", "type"});
  for (const auto& p : a.eigen.pairs)
    pt.add({"(" + std::to_string(p.character) + "," + std::to_string(p.conjugate) + ")", std::to_string(p.degree),
            fs_name(p.fs), "(" + std::to_string(p.a) + "," + std::to_string(p.b) + ")"});
  pt.print(os);
  os << "intermediate quotients\n";
  Table qt({"subgroup", "order", "normal", "genus"});
  for (const auto& [h, gen] : a.quotient_genera)
    qt.add({subgroup_name(g, h), std::to_string(h.size()), is_normal(g, h) ? "yes" : "no", std::to_string(gen)});
  qt.print(os);
  for (const auto& d : a.decomps)
    print_decomposition(os, d);
  if (a.certificate)
    os << "hyperelliptic certificate: involution " << g.label(a.certificate->involution) << " with "
       << a.certificate->fixed_points << " fixed points\n";
  else
    os << "hyperelliptic certificate: none\n";
  print_exclusion(os, a.exclusion);
}

// ---- subcommands -----------------------------------------------------------

inline int cmd_group(const Options& o, std::ostream& out) {
  auto g = load_group(o);
  if (o.action == "chartable") {
    const table_method m = o.method == "closed" ? table_method::closed_form
                           : o.method == "dixon" ? table_method::burnside_dixon
                                                 : table_method::automatic;
    const CharacterTable t = character_table(g, m);
    if (o.json) {
      out << json::character_table_json(t).dump(2) << "\n";
      return ok;
    }
    out << g->spec() << ": order " << g->order() << ", " << t.class_count() << " classes, values in Q(z"
        << t.conductor() << ")\n";
    std::vector<std::string> head{"chi", "deg", "fs"};
    for (const auto& c : t.classes())
      head.push_back(g->label(c.representative) + " (" + std::to_string(c.size) + ")");
    Table tab(head);
    for (int chi = 0; chi < t.character_count(); ++chi) {
      std::vector<std::string> row{std::to_string(chi), std::to_string(t.degree(chi)), fs_name(t.frobenius_schur(chi))};
      for (const auto& v : t.values()[chi])
        row.push_back(v.to_string());
      tab.add(row);
    }
    tab.print(out);
    return ok;
  }
  const auto classes = conjugacy_classes(*g);
  const auto normals = normal_subgroups(*g);
  const auto subs = all_subgroups(*g);
  const auto irreps = rational_irreducibles(g);
  if (o.json) {
    json::value j;
    j["group"] = g->spec();
    j["order"] = g->order();
    j["flavor"] = flavor_name(*g);
    j["abelian"] = g->is_abelian();
    j["exponent"] = g->exponent();
    json::value els = json::value::array();
    for (elem x = 0; x < g->order(); ++x)
      els.push_back({{"index", x}, {"label", g->label(x)}, {"order", g->element_order(x)}});
    j["elements"] = std::move(els);
    json::value cl = json::value::array();
    for (const auto& c : classes)
      cl.push_back(json::labels(*g, c));
    j["classes"] = std::move(cl);
    j["center"] = json::labels(*g, center(*g).members());
    json::value ns = json::value::array();
    for (const auto& n : normals)
      ns.push_back(json::labels(*g, n.members()));
    j["normal_subgroups"] = std::move(ns);
    j["subgroup_count"] = subs.size();
    j["rational_irreducibles"] = json::rational_irreducibles_json(irreps);
    out << j.dump(2) << "\n";
    return ok;
  }
  out << g->spec() << ": order " << g->order() << ", " << flavor_name(*g) << ", exponent " << g->exponent()
      << (g->is_abelian() ? ", abelian" : "") << "\n";
  out << "elements\n";
  Table et({"index", "label", "order"});
  for (elem x = 0; x < g->order(); ++x)
    et.add({std::to_string(x), g->label(x), std::to_string(g->element_order(x))});
  et.print(out);
  out << "conjugacy classes\n";
  for (const auto& c : classes)
    out << "  {" << labels(*g, c) << "}\n";
  out << "center " << subgroup_name(*g, center(*g)) << "\n";
  out << "normal subgroups\n";
  for (const auto& n : normals)
    out << "  " << subgroup_name(*g, n) << "\n";
  out << "subgroups: " << subs.size() << "\n";
  out << "rational irreducibles\n";
  Table rt({"orbit", "fs", "degree", "schur", "dim_Q", "n", "kind"});
  for (const auto& w : irreps)
    rt.add({"{" + join(w.orbit) + "}", fs_name(w.fs), std::to_string(w.degree), std::to_string(w.schur_index),
            std::to_string(w.q_dimension), std::to_string(w.multiplicity_n), to_string(w.kind)});
  rt.print(out);
  return ok;
}

inline EquivalenceClassSet enumerate_for(const group_ptr& g, const Options& o, std::vector<int>& orders) {
  EquivalenceClassSet s;
  if (!o.orders.empty()) {
    orders = parse_orders(o.orders);
    if (o.branch_count && o.branch_count != static_cast<int>(orders.size()))
      fail(error_kind::invalid_parameter, "branch count does not match the orders list");
    s = enumerate_data(g, orders);
  } else if (o.branch_count > 0) {
    s = enumerate_all_data(g, o.branch_count);
  } else {
    fail(error_kind::invalid_parameter, "need --orders or a branch count (-r / -l)");
  }
  if (o.up_to == "braid" || o.up_to == "conjugation+braid")
    s = braid_orbits(s);
  return s;
}

inline int cmd_enumerate(const Options& o, std::ostream& out) {
  auto g = load_group(o);
  std::vector<int> orders;
  const auto s = enumerate_for(g, o, orders);
  if (o.json) {
    out << json::to_json(s, g, orders).dump(2) << "\n";
    return ok;
  }
  out << g->spec();
  if (!orders.empty())
    out << " orders (" << join(orders) << ")";
  else
    out << " r = " << o.branch_count;
  out << ": " << s.total() << " tuples in " << s.classes.size() << " classes up to " << to_string(s.kind) << "\n";
  Table t({"rep", "orders", "size", "genus"});
  for (const auto& c : s.classes)
    t.add({labels(*g, c.representative.tuple), join(c.representative.orders), std::to_string(c.size),
           std::to_string(genus(c.representative))});
  t.print(out);
  return ok;
}

inline int cmd_analyze(const Options& o, std::ostream& out) {
  auto g = load_group(o);
  const DeltaPolicy policy = policy_from(o, delta_rule::conservative);
  if (!o.tuple.empty()) {
    const auto a = analyze(load_datum(g, o), policy);
    if (o.json)
      out << analysis_json(a).dump(2) << "\n";
    else
      print_analysis(out, a);
    return ok;
  }
  std::vector<int> orders;
  const auto s = enumerate_for(g, o, orders);
  if (o.json) {
    json::value j = json::to_json(s, g, orders);
    for (std::size_t i = 0; i < s.classes.size(); ++i)
      j["classes"][i]["analysis"] = analysis_json(analyze(s.classes[i].representative, policy));
    out << j.dump(2) << "\n";
    return ok;
  }
  out << s.classes.size() << " classes (" << s.total() << " tuples) up to " << to_string(s.kind) << "\n";
  for (const auto& c : s.classes) {
    out << "\n== class of size " << c.size << "\n";
    print_analysis(out, analyze(c.representative, policy));
  }
  return ok;
}

inline int cmd_decompose(const Options& o, std::ostream& out) {
  auto g = load_group(o);
  const Datum d = load_datum(g, o);
  const auto ds = decompositions(d, o.scheme);
  if (o.json) {
    json::value j = json::value::array();
    for (const auto& r : ds)
      j.push_back(json::to_json(r));
    out << (ds.size() == 1 ? j[0] : j).dump(2) << "\n";
    return ok;
  }
  for (const auto& r : ds)
    print_decomposition(out, r);
  return ok;
}

inline int cmd_exclude(const Options& o, std::ostream& out) {
  auto g = load_group(o);
  const Datum d = load_datum(g, o);
  const auto r = shimura_lower_bound(d, policy_from(o, delta_rule::conservative));
  if (o.json)
    out << json::to_json(r).dump(2) << "\n";
  else
    print_exclusion(out, r);
  return ok;
}

inline int cmd_reproduce(const Options& o, std::ostream& out) {
  if (o.target == "dihedral-bound") {
    const auto r = reproduce_dihedral_bound(o.l_max);
    if (o.json) {
      out << json::to_json(r).dump(2) << "\n";
      return r.ok() ? ok : internal;
    }
    const DeltaPolicy p = policy_from(o, delta_rule::literal);
    out << "dihedral scan, l = 3.." << o.l_max << ", even k in [2, l]\n";
    Table t({"l", "k", "k^2+(l-k)^2", "8(l-2)", "holds", "literal", "conservative", "verdict", "note"});
    for (const auto& row : r.scan.rows) {
      const long long lhs = 1LL * row.k * row.k + 1LL * (row.l - row.k) * (row.l - row.k);
      const bool ex = p.rule == delta_rule::literal ? row.literal_excluded : row.conservative_excluded;
      t.add({std::to_string(row.l), std::to_string(row.k), std::to_string(lhs), std::to_string(8 * (row.l - 2)),
             row.inequality_holds ? "yes" : "no", to_string(row.literal_bound), to_string(row.conservative_bound),
             ex ? "excluded" : "inconclusive", row.bound_tight ? "" : "bound not tight"});
    }
    t.print(out);
    out << "minimal uniform l: "
        << (r.scan.minimal_uniform_l ? std::to_string(*r.scan.minimal_uniform_l) : std::string("none")) << "\n";
    out << "quotient calculus\n";
    Table q({"p", "k", "kept", "type", "literal delta", "second quotient points", "ok"});
    for (const auto& c : r.quotient_checks)
      q.add({std::to_string(c.p), std::to_string(c.k), join(c.kept_points),
             "(" + std::to_string(c.a) + "," + std::to_string(c.b) + ")", to_string(c.literal_delta),
             std::to_string(c.second_quotient_points), c.ok ? "yes" : "no"});
    q.print(out);
    for (const auto& n : r.notes)
      out << "note: " << n << "\n";
    print_checks(out, r.checks);
    return r.ok() ? ok : internal;
  }
  if (o.target == "q8-simple") {
    const auto r = q8_simple_classification();
    if (o.json) {
      out << json::to_json(r).dump(2) << "\n";
      return r.ok() ? ok : internal;
    }
    out << "Q8, r = 4: " << r.signatures_scanned << " signatures, " << r.empty_signatures << " empty, "
        << r.total_tuples << " tuples\n";
    Table t({"orders", "rep", "size", "genus", "factors", "quotients rational", "certificate", "has -1", "passes"});
    for (const auto& row : r.rows) {
      const FiniteGroup& g = *row.representative.group;
      t.add({join(row.representative.orders), labels(g, row.representative.tuple), std::to_string(row.size),
             std::to_string(row.genus), std::to_string(row.nonzero_factors),
             row.proper_quotients_rational ? "yes" : "no",
             row.certificate ? g.label(row.certificate->involution) + " (" +
                                   std::to_string(row.certificate->fixed_points) + ")"
                             : "-",
             row.contains_minus_one ? "yes" : "no", row.passes ? "yes" : "no"});
    }
    t.print(out);
    print_checks(out, r.checks);
    return r.ok() ? ok : internal;
  }
  if (o.target == "q8-nonhyp") {
    const auto r = q8_nonhyperelliptic_exclusion(policy_from(o, delta_rule::conservative));
    if (o.json) {
      out << json::to_json(r).dump(2) << "\n";
      return r.ok() ? ok : internal;
    }
    out << "Q8, r = 4, no local monodromy -1 (" << to_string(r.policy.rule)
        << (r.policy.assume_gm ? ", assume GM" : "") << "): " << r.without_minus_one << " tuples avoid -1, "
        << r.with_minus_one << " contain it\n";
    Table t({"orders", "rep", "size", "genus", "cyclic quotients", "decomposition", "bound", "verdict", "conditional"});
    for (const auto& row : r.rows) {
      const FiniteGroup& g = *row.representative.group;
      t.add({join(row.representative.orders), labels(g, row.representative.tuple), std::to_string(row.size),
             std::to_string(row.genus), join(row.cyclic_quotient_genera), join(row.decomposition),
             to_string(row.exclusion.lower_bound) + " vs " + std::to_string(row.exclusion.family_dim),
             row.exclusion.verdict(), row.exclusion.conditional_on.empty() ? "-" : join(row.exclusion.conditional_on)});
    }
    t.print(out);
    print_checks(out, r.checks);
    return r.ok() ? ok : internal;
  }
  fail(error_kind::invalid_parameter, "unknown reproduce target " + o.target);
}

} // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using detail::Options;
  Options o;
  CLI::App app{"Galois covers of the line: monodromy data, Jacobians, special-family exclusion", "galcover"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  auto group_opt = [&](CLI::App* sub, bool required = true) {
    auto* opt = sub->add_option("-g,--group", o.group, "Group spec: D:n, Q8, C:n");
    if (required)
      opt->required();
  };
  auto json_opt = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "Emit JSON"); };
  auto policy_opts = [&](CLI::App* sub) {
    sub->add_option("--delta-policy", o.policy, "literal | conservative")
        ->check(CLI::IsMember({"literal", "conservative"}));
    sub->add_flag("--assume-gm", o.assume_gm, "Assume the external classification of special Prym families");
  };
  auto datum_opts = [&](CLI::App* sub, bool tuple_required) {
    group_opt(sub);
    sub->add_option("-o,--orders", o.orders, "Branch orders, e.g. 2,4,4,4");
    auto* t = sub->add_option("-t,--tuple", o.tuple, "Local monodromies, e.g. \"-1,i,j,k\"");
    if (tuple_required)
      t->required();
  };
  auto count_opt = [&](CLI::App* sub) {
    sub->add_option("-r,-l,--branch-count", o.branch_count, "Number of branch points (all signatures)")
        ->check(CLI::Range(1, 64));
  };
  auto up_to_opt = [&](CLI::App* sub) {
    sub->add_option("--up-to", o.up_to, "conj | braid")
        ->check(CLI::IsMember({"conj", "braid", "conjugation", "conjugation+braid"}));
  };

  auto* group = app.add_subcommand("group", "Group structure and character tables");
  group->add_option("action", o.action, "info | chartable")->check(CLI::IsMember({"info", "chartable"}));
  group_opt(group);
  group->add_option("--method", o.method, "auto | closed | dixon")->check(CLI::IsMember({"auto", "closed", "dixon"}));
  json_opt(group);

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate monodromy data up to equivalence");
  group_opt(enumerate);
  enumerate->add_option("-o,--orders", o.orders, "Branch orders, e.g. 2,4,4,4");
  count_opt(enumerate);
  up_to_opt(enumerate);
  json_opt(enumerate);

  auto* analyze = app.add_subcommand("analyze", "Full analysis of a datum, or of every class for a signature");
  datum_opts(analyze, false);
  count_opt(analyze);
  up_to_opt(analyze);
  policy_opts(analyze);
  json_opt(analyze);

  auto* decompose = app.add_subcommand("decompose", "Jacobian decomposition by dimension");
  datum_opts(decompose, true);
  decompose->add_option("--scheme", o.scheme, "auto | group-algebra | dihedral | q8 | all")
      ->check(CLI::IsMember({"auto", "group-algebra", "dihedral", "q8", "all"}));
  json_opt(decompose);

  auto* exclude = app.add_subcommand("exclude", "Lower bound on the smallest special subvariety");
  datum_opts(exclude, true);
  policy_opts(exclude);
  json_opt(exclude);

  auto* reproduce = app.add_subcommand("reproduce", "Reproduction battery");
  reproduce->add_option("target", o.target, "dihedral-bound | q8-simple | q8-nonhyp")
      ->required()
      ->check(CLI::IsMember({"dihedral-bound", "q8-simple", "q8-nonhyp"}));
  reproduce->add_option("--l-max,--r-max", o.l_max, "Largest branch count in the dihedral scan")
      ->check(CLI::Range(3, 100000));
  policy_opts(reproduce);
  json_opt(reproduce);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    for (auto* sub : app.get_subcommands())
      err << sub->help();
    if (app.get_subcommands().empty())
      err << app.help();
    return usage;
  }

  try {
    if (group->parsed())
      return detail::cmd_group(o, out);
    if (enumerate->parsed())
      return detail::cmd_enumerate(o, out);
    if (analyze->parsed())
      return detail::cmd_analyze(o, out);
    if (decompose->parsed())
      return detail::cmd_decompose(o, out);
    if (exclude->parsed())
      return detail::cmd_exclude(o, out);
    if (reproduce->parsed())
      return detail::cmd_reproduce(o, out);
  } catch (const detail::rejected& r) {
    if (o.json)
      out << json::to_json(r.rejection).dump(2) << "\n";
    err << "invalid datum: " << r.rejection.message << "\n";
    return invalid;
  } catch (const error& e) {
    err << (e.is_internal() ? "internal error: " : "error: ") << e.what() << "\n";
    return e.is_internal() ? internal : invalid;
  }
  return usage;
}

} // namespace galcover::cli
