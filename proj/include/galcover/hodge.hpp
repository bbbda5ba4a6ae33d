#pragma once

// Holomorphic differentials of a Galois cover as a G-representation
// (Chevalley-Weil), eigenspace types, delta bounds on the smallest special
// subvariety containing a family, and Jacobian decompositions by dimension.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "galcover/covers.hpp"
#include "galcover/cyclotomic.hpp"
#include "galcover/error.hpp"
#include "galcover/groups.hpp"
#include "galcover/repr.hpp"

namespace galcover {

struct CharacterMultiplicity {
  int character = 0;
  int degree = 1;
  int fs = 1;
  int conjugate = 0;
  int holomorphic = 0; // N_chi, multiplicity of chi in H^{1,0}
};

/// Conjugate pair {chi, conj chi}; type (a, b) = (N_chi, N_conj).
struct EigenspacePair {
  int character = 0;
  int conjugate = 0;
  int degree = 1;
  int fs = 1;
  int a = 0;
  int b = 0;
};

struct EigenspaceReport {
  int genus = 0;
  std::vector<CharacterMultiplicity> characters;
  std::vector<EigenspacePair> pairs; // nontrivial characters only, character <= conjugate
};

/// N_chi = -d + sum_i sum_{a=1}^{m_i-1} N_{i,a} a/m_i, with N_{i,a} the
/// multiplicity of exp(2 pi i a/m_i) as an eigenvalue of chi(g_i).
/// The sign convention is pinned by the hyperelliptic case: a double cover
/// branched at k points has N = k/2 - 1 for the sign character.
inline EigenspaceReport chevalley_weil(const Datum& d) {
  const CharacterTable& t = table_of(d.group);
  EigenspaceReport rep;
  rep.genus = genus(d);
  long long total = 0;
  for (int chi = 0; chi < t.character_count(); ++chi) {
    CharacterMultiplicity c;
    c.character = chi;
    c.degree = t.degree(chi);
    c.fs = t.frobenius_schur(chi);
    c.conjugate = t.conjugate_of(chi);
    if (!t.is_trivial(chi)) {
      rational n(-c.degree);
      for (int i = 0; i < d.branch_count(); ++i) {
        const auto& mult = t.eigenvalue_multiplicities(chi, d.tuple[i]);
        const int m = d.orders[i];
        for (int alpha = 1; alpha < m; ++alpha)
          n += rational(static_cast<long long>(mult[alpha]) * alpha, m);
      }
      if (n.denominator() != 1 || n.numerator() < 0)
        fail(error_kind::inconsistency, "Chevalley-Weil multiplicity " + to_string(n) +
                                            " is not a nonnegative integer (sign convention)");
      c.holomorphic = static_cast<int>(n.numerator());
    }
    total += static_cast<long long>(c.degree) * c.holomorphic;
    rep.characters.push_back(c);
  }
  ensure(total == rep.genus, "Chevalley-Weil dimensions do not add up to the genus");
  for (const auto& c : rep.characters) {
    if (t.is_trivial(c.character) || c.conjugate < c.character)
      continue;
    rep.pairs.push_back({c.character, c.conjugate, c.degree, c.fs, c.holomorphic,
                         rep.characters[c.conjugate].holomorphic});
  }
  return rep;
}

/// 2 g(C/H) = sum_chi (N_chi + N_conj) <chi|_H, 1>; the character-side route
/// to intermediate genera.
inline int quotient_genus_from_characters(const EigenspaceReport& rep, const std::vector<int>& restriction) {
  ensure(restriction.size() == rep.characters.size(), "restriction multiplicities do not match the character count");
  long long twice = 0;
  for (const auto& c : rep.characters)
    twice += static_cast<long long>(c.holomorphic + rep.characters[c.conjugate].holomorphic) *
             restriction[c.character];
  ensure(twice % 2 == 0, "character-theoretic quotient genus is not integral");
  return static_cast<int>(twice / 2);
}

inline int quotient_genus_from_characters(const Datum& d, const Subgroup& h) {
  return quotient_genus_from_characters(chevalley_weil(d), restriction_multiplicities(table_of(d.group), h));
}

// ---- delta calculus ------------------------------------------------------

enum class delta_rule { literal, conservative };

inline std::string to_string(delta_rule r) {
  return r == delta_rule::literal ? "literal" : "conservative";
}

struct DeltaPolicy {
  delta_rule rule = delta_rule::conservative;
  bool assume_gm = false; // no 1-dim special family of Pryms of double covers of elliptic curves
};

/// Dimension of the symmetric space attached to an eigenspace of type (a, b).
///   complex pair (fs 0): PSU(a, b), delta = ab
///   real (fs +1), type (a, a): literal a(a+2)/2, conservative a(a+1)/2 (PSp_2a)
///   quaternionic (fs -1): 0
inline rational delta(int a, int b, int fs, delta_rule rule) {
  if (a < 0 || b < 0)
    fail(error_kind::invalid_parameter, "eigenspace type must be nonnegative");
  if (fs == 0)
    return rational(static_cast<long long>(a) * b);
  if (fs == 1) {
    if (a != b)
      fail(error_kind::invalid_parameter, "real eigenspace must have type (a, a)");
    return rule == delta_rule::literal ? rational(static_cast<long long>(a) * (a + 2), 2)
                                             : rational(static_cast<long long>(a) * (a + 1), 2);
  }
  if (fs == -1)
    return rational(0);
  fail(error_kind::invalid_parameter, "Frobenius-Schur indicator must be -1, 0 or 1");
}

struct Contribution {
  int character = 0;
  int conjugate = 0;
  int a = 0;
  int b = 0;
  int fs = 1;
  rational delta;
  std::string note;
};

struct ExclusionReport {
  int family_dim = 0;
  DeltaPolicy policy;
  std::vector<Contribution> contributions;
  rational lower_bound;
  bool excluded = false; // lower_bound > family_dim
  std::vector<std::string> conditional_on;

  std::string verdict() const { return excluded ? "excluded" : "inconclusive"; }
};

namespace detail {

// The quaternionic piece chi qualifies for the external rule when it is the
// whole Prym of C -> C/<z> for a central involution z with g(C/<z>) = 1.
inline bool is_prym_over_elliptic(const Datum& d, const CharacterTable& t,
                                  const EigenspaceReport& rep, int chi,
                                  const std::vector<int>& orbit) {
  const FiniteGroup& g = *d.group;
  const Subgroup z_center = center(g);
  for (elem z : z_center.members()) {
    if (g.element_order(z) != 2)
      continue;
    if (!(t.value_at(chi, z) == Cyclotomic::integer(t.conductor(), -t.degree(chi))))
      continue;
    const Subgroup zs = subgroup_generated(g, {z});
    if (intermediate_genus(d, zs) != 1)
      continue;
    bool only_orbit = true;
    long long orbit_dim = 0;
    for (const auto& c : rep.characters) {
      const bool odd = t.value_at(c.character, z) ==
                       Cyclotomic::integer(t.conductor(), -c.degree);
      const bool in_orbit = std::find(orbit.begin(), orbit.end(), c.character) != orbit.end();
      if (odd && c.holomorphic > 0 && !in_orbit)
        only_orbit = false;
      if (in_orbit)
        orbit_dim += static_cast<long long>(c.degree) * c.holomorphic;
    }
    if (only_orbit && orbit_dim == prym_dimension(d, trivial_subgroup(g), zs))
      return true;
  }
  return false;
}

} // namespace detail

/// Sum of delta over the eigenspace pairs of nontrivial type. The family is
/// excluded from being special when the sum exceeds its dimension r - 3.
inline ExclusionReport shimura_lower_bound(const Datum& d, DeltaPolicy policy) {
  const CharacterTable& t = table_of(d.group);
  ExclusionReport out;
  out.family_dim = family_dimension(d);
  out.policy = policy;
  const auto rep = chevalley_weil(d);
  std::vector<std::vector<int>> orbits;
  std::vector<bool> gm_used_orbit;
  if (policy.assume_gm) {
    orbits = galois_orbits(t);
    gm_used_orbit.assign(orbits.size(), false);
  }
  for (const auto& p : rep.pairs) {
    if (p.a == 0 && p.b == 0)
      continue;
    Contribution c{p.character, p.conjugate, p.a, p.b, p.fs, delta(p.a, p.b, p.fs, policy.rule), {}};
    if (p.fs == 0)
      c.note = "PSU(a,b)";
    else if (p.fs == 1)
      c.note = policy.rule == delta_rule::literal ? "real, a(a+2)/2" : "real, PSp a(a+1)/2";
    else
      c.note = "quaternionic, no forced factor";
    if (p.fs == -1 && policy.assume_gm) {
      for (std::size_t o = 0; o < orbits.size(); ++o) {
        const auto& orbit = orbits[o];
        if (std::find(orbit.begin(), orbit.end(), p.character) == orbit.end() || gm_used_orbit[o])
          continue;
        if (detail::is_prym_over_elliptic(d, t, rep, p.character, orbit)) {
          gm_used_orbit[o] = true;
          c.delta += 1;
          c.note = "quaternionic Prym over an elliptic curve, +1 assuming GM";
          out.conditional_on.push_back("GM");
        }
      }
    }
    out.lower_bound += c.delta;
    out.contributions.push_back(std::move(c));
  }
  out.excluded = out.lower_bound > rational(out.family_dim);
  return out;
}

// ---- decompositions ------------------------------------------------------

struct DecompositionFactor {
  std::string name;
  int dimension = 0;
  int multiplicity = 1;
  std::string detail;
};

struct DecompositionReport {
  std::string scheme; // group-algebra | dihedral | q8
  int genus = 0;
  std::vector<DecompositionFactor> factors;
  int residual_dimension = 0;

  int total() const {
    int s = residual_dimension;
    for (const auto& f : factors)
      s += f.dimension * f.multiplicity;
    return s;
  }
};

/// J(C) ~ Y_1^{n_1} x ... x Y_r^{n_r}, one factor per rational irreducible.
inline DecompositionReport group_algebra_dimensions(const Datum& d) {
  const CharacterTable& t = table_of(d.group);
  const auto rep = chevalley_weil(d);
  DecompositionReport out;
  out.scheme = "group-algebra";
  out.genus = rep.genus;
  int idx = 0;
  for (const auto& w : rational_irreducibles(t)) {
    long long isotypic = 0;
    for (int chi : w.orbit)
      isotypic += static_cast<long long>(t.degree(chi)) * rep.characters[chi].holomorphic;
    ensure(isotypic % w.multiplicity_n == 0, "isotypic dimension not divisible by n_i");
    DecompositionFactor f;
    f.name = "Y" + std::to_string(++idx);
    f.dimension = static_cast<int>(isotypic / w.multiplicity_n);
    f.multiplicity = w.multiplicity_n;
    f.detail = to_string(w.kind) + ", chars {";
    for (std::size_t i = 0; i < w.orbit.size(); ++i)
      f.detail += (i ? "," : "") + std::to_string(w.orbit[i]);
    f.detail += "}";
    out.factors.push_back(std::move(f));
  }
  ensure(out.total() == out.genus, "group-algebra factor dimensions do not add up to the genus");
  return out;
}

inline bool is_odd_prime(int p) { return p > 2 && detail::is_prime(p); }

/// J(C) ~ J(Y) x P(C_<r>/Y) x P(C_<r^2,s>/Y) x P(C_<r^2,rs>/Y) x B for D_2p, p an odd prime.
inline DecompositionReport dihedral_jacobian_decomposition(const Datum& d) {
  const FiniteGroup& g = *d.group;
  if (g.group_flavor().kind != flavor_kind::dihedral)
    fail(error_kind::wrong_flavor, g.spec() + " is not a dihedral group");
  const int n = g.group_flavor().n;
  if (n % 2 != 0 || !is_odd_prime(n / 2))
    fail(error_kind::invalid_parameter, "dihedral decomposition needs D_2p with p an odd prime");
  const Subgroup all = whole_group(g);
  const Subgroup rot = subgroup_generated(g, {1});
  const Subgroup dp = subgroup_generated(g, {2, n});
  const Subgroup dpt = subgroup_generated(g, {2, n + 1});
  DecompositionReport out;
  out.scheme = "dihedral";
  out.genus = genus(d);
  out.factors.push_back({"J(Y)", intermediate_genus(d, all), 1, "Y = C/G"});
  out.factors.push_back({"P(C_<r>/Y)", prym_dimension(d, rot, all), 1, "index 2"});
  out.factors.push_back({"P(C_<r^2,s>/Y)", prym_dimension(d, dp, all), 1, "index 2"});
  out.factors.push_back({"P(C_<r^2,r*s>/Y)", prym_dimension(d, dpt, all), 1, "index 2"});
  int named = 0;
  for (const auto& f : out.factors)
    named += f.dimension;
  out.residual_dimension = out.genus - named;
  ensure(out.residual_dimension >= 0, "dihedral decomposition has a negative residual");
  return out;
}

/// J(C) ~ J(Y) x P(C_<i>/Y) x P(C_<j>/Y) x P(C_<ij>/Y) x P(C/C_<-1>).
inline DecompositionReport q8_jacobian_decomposition(const Datum& d) {
  const FiniteGroup& g = *d.group;
  if (g.group_flavor().kind != flavor_kind::quaternion8)
    fail(error_kind::wrong_flavor, g.spec() + " is not Q8");
  const Subgroup all = whole_group(g);
  DecompositionReport out;
  out.scheme = "q8";
  out.genus = genus(d);
  out.factors.push_back({"J(Y)", intermediate_genus(d, all), 1, "Y = C/G"});
  out.factors.push_back({"P(C_<i>/Y)", prym_dimension(d, subgroup_generated(g, {2}), all), 1, ""});
  out.factors.push_back({"P(C_<j>/Y)", prym_dimension(d, subgroup_generated(g, {4}), all), 1, ""});
  out.factors.push_back({"P(C_<ij>/Y)", prym_dimension(d, subgroup_generated(g, {6}), all), 1, ""});
  out.factors.push_back(
      {"P(C/C_<-1>)", prym_dimension(d, trivial_subgroup(g), subgroup_generated(g, {1})), 1, ""});
  ensure(out.total() == out.genus, "Q8 decomposition does not add up to the genus");
  return out;
}

struct HyperellipticCertificate {
  elem involution = 0;
  int fixed_points = 0;
};

/// A central involution with rational quotient. An empty result does not
/// prove the curve non-hyperelliptic.
inline std::optional<HyperellipticCertificate> hyperelliptic_certificate(const Datum& d) {
  const FiniteGroup& g = *d.group;
  const int gen = genus(d);
  const Subgroup z_g = center(g);
  for (elem z : z_g.members()) {
    if (g.element_order(z) != 2)
      continue;
    const Subgroup zs = subgroup_generated(g, {z});
    if (intermediate_genus(d, zs) != 0)
      continue;
    // z fixes a point over branch point i iff z lies in <g_i>
    int fixed = 0;
    for (int i = 0; i < d.branch_count(); ++i)
      if (subgroup_generated(g, {d.tuple[i]}).contains(z))
        fixed += g.order() / d.orders[i];
    ensure(fixed == 2 * gen + 2, "hyperelliptic involution has the wrong number of fixed points");
    return HyperellipticCertificate{z, fixed};
  }
  return std::nullopt;
}

} // namespace galcover
