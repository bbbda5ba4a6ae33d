#pragma once

// Complex character theory over exact cyclotomic values, and the rational
// (Wedderburn) shape of Q[G] derived from it.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "galcover/cyclotomic.hpp"
#include "galcover/error.hpp"
#include "galcover/groups.hpp"

namespace galcover {

struct ClassInfo {
  elem representative = 0;
  int size = 0;
  int element_order = 1;
  std::vector<elem> members;
};

enum class table_method { automatic, closed_form, burnside_dixon };

class CharacterTable {
public:
  const group_ptr& group() const noexcept { return group_; }
  int conductor() const noexcept { return conductor_; }
  int class_count() const noexcept { return static_cast<int>(classes_.size()); }
  int character_count() const noexcept { return static_cast<int>(values_.size()); }
  const std::vector<ClassInfo>& classes() const noexcept { return classes_; }
  int class_of(elem g) const { return class_of_[g]; }
  const std::vector<std::vector<Cyclotomic>>& values() const noexcept { return values_; }
  const Cyclotomic& value(int chi, int cls) const { return values_[chi][cls]; }
  const Cyclotomic& value_at(int chi, elem g) const { return values_[chi][class_of_[g]]; }
  int degree(int chi) const { return degrees_[chi]; }
  const std::vector<int>& degrees() const noexcept { return degrees_; }
  int frobenius_schur(int chi) const { return fs_[chi]; }
  int conjugate_of(int chi) const { return conj_[chi]; }
  bool is_trivial(int chi) const { return chi == 0; }
  table_method method() const noexcept { return method_; }

  /// Multiplicities of exp(2 pi i a/m), a = 0..m-1, as eigenvalues of the
  /// representation matrix at g, m = order of g.
  const std::vector<int>& eigenvalue_multiplicities(int chi, elem g) const {
    return eigen_[chi][class_of_[g]];
  }

  // Assembled by the builders below.
  CharacterTable(group_ptr g, std::vector<ClassInfo> classes, std::vector<int> class_of,
                 std::vector<std::vector<Cyclotomic>> rows, table_method method);

private:
  group_ptr group_;
  int conductor_ = 1;
  std::vector<ClassInfo> classes_;
  std::vector<int> class_of_;
  std::vector<std::vector<Cyclotomic>> values_;
  std::vector<int> degrees_;
  std::vector<int> fs_;
  std::vector<int> conj_;
  std::vector<std::vector<std::vector<int>>> eigen_;
  table_method method_;
};

namespace detail {

inline std::pair<std::vector<ClassInfo>, std::vector<int>> class_structure(const FiniteGroup& g) {
  std::vector<ClassInfo> out;
  std::vector<int> class_of(g.order(), -1);
  for (auto& members : conjugacy_classes(g)) {
    ClassInfo c;
    c.representative = members.front();
    c.size = static_cast<int>(members.size());
    c.element_order = g.element_order(c.representative);
    for (elem x : members)
      class_of[x] = static_cast<int>(out.size());
    c.members = std::move(members);
    out.push_back(std::move(c));
  }
  return {std::move(out), std::move(class_of)};
}

// ---- closed forms -------------------------------------------------------

inline std::vector<std::vector<Cyclotomic>> closed_form_rows(const FiniteGroup& g,
                                                             const std::vector<ClassInfo>& cls) {
  const int e = g.exponent();
  auto zeta_n = [e](int n, long long t) { return Cyclotomic::zeta(e, t * (e / n)); };
  auto one = Cyclotomic::integer(e, 1);
  std::vector<std::vector<Cyclotomic>> rows;
  auto add_row = [&](auto&& f) {
    std::vector<Cyclotomic> row;
    for (const auto& c : cls)
      row.push_back(f(c.representative));
    rows.push_back(std::move(row));
  };
  const auto fl = g.group_flavor();
  switch (fl.kind) {
  case flavor_kind::cyclic:
    for (int h = 0; h < fl.n; ++h)
      add_row([&](elem x) { return zeta_n(fl.n, static_cast<long long>(h) * x); });
    break;
  case flavor_kind::dihedral: {
    const int n = fl.n;
    auto sgn = [&](bool neg) { return neg ? -one : one; };
    if (n % 2 == 1) {
      add_row([&](elem) { return one; });
      add_row([&](elem x) { return sgn(x >= n); });
    } else {
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          add_row([&](elem x) { return sgn(((a * (x % n)) + b * (x >= n)) % 2 == 1); });
    }
    for (int h = 1; 2 * h < n; ++h)
      add_row([&](elem x) {
        if (x >= n)
          return Cyclotomic::integer(e, 0);
        return zeta_n(n, static_cast<long long>(h) * x) + zeta_n(n, -static_cast<long long>(h) * x);
      });
    break;
  }
  case flavor_kind::quaternion8:
    // linear characters factor through Q8/<-1>; unit index x/2 is 1,i,j,k
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        add_row([&](elem x) {
          const int u = x / 2;
          const int parity = u == 1 ? a : u == 2 ? b : u == 3 ? a + b : 0;
          return parity % 2 ? -one : one;
        });
    add_row([&](elem x) { return Cyclotomic::integer(e, x == 0 ? 2 : x == 1 ? -2 : 0); });
    break;
  default:
    fail(error_kind::wrong_flavor, "no closed-form character table for " + g.spec());
  }
  return rows;
}

// ---- Burnside-Dixon over F_p --------------------------------------------

using mod_vec = std::vector<long long>;

inline long long mod_pow(long long b, long long e, long long p) {
  long long r = 1;
  b %= p;
  if (b < 0)
    b += p;
  for (; e > 0; e >>= 1) {
    if (e & 1)
      r = r * b % p;
    b = b * b % p;
  }
  return r;
}
inline long long mod_inv(long long a, long long p) { return mod_pow(a, p - 2, p); }

inline bool is_prime(long long n) {
  if (n < 2)
    return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

// Nullspace of a rows x cols matrix over F_p, as a list of column-space vectors.
inline std::vector<mod_vec> nullspace_mod(std::vector<mod_vec> m, int cols, long long p) {
  const int rows = static_cast<int>(m.size());
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] % p != 0) {
        sel = i;
        break;
      }
    if (sel < 0)
      continue;
    std::swap(m[r], m[sel]);
    const long long inv = mod_inv(m[r][c], p);
    for (auto& v : m[r])
      v = v * inv % p;
    for (int i = 0; i < rows; ++i)
      if (i != r && m[i][c] != 0) {
        const long long f = m[i][c];
        for (int t = 0; t < cols; ++t)
          m[i][t] = ((m[i][t] - f * m[r][t]) % p + p) % p;
      }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col)
    is_pivot[c] = true;
  std::vector<mod_vec> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free])
      continue;
    mod_vec v(cols, 0);
    v[free] = 1;
    for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i)
      v[pivot_col[i]] = (p - m[i][free]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

inline std::vector<std::vector<Cyclotomic>> burnside_dixon_rows(const FiniteGroup& g,
                                                                const std::vector<ClassInfo>& cls,
                                                                const std::vector<int>& class_of) {
  const int k = static_cast<int>(cls.size());
  const int order = g.order();
  const int e = g.exponent();
  long long p = e + 1;
  while (!(is_prime(p) && static_cast<double>(p) > 2.0 * std::sqrt(static_cast<double>(order))))
    p += e;

  // coeff[j][l][m] = #{x in C_j : x^-1 g_m in C_l}
  std::vector<long long> coeff(static_cast<std::size_t>(k) * k * k, 0);
  auto at = [&](int j, int l, int m) -> long long& {
    return coeff[(static_cast<std::size_t>(j) * k + l) * k + m];
  };
  for (int m = 0; m < k; ++m)
    for (elem x = 0; x < order; ++x)
      ++at(class_of[x], class_of[g.mul(g.inv(x), cls[m].representative)], m);

  // Common eigenvectors of the class matrices A_j[l][m] = coeff[j][l][m].
  std::vector<std::vector<mod_vec>> spaces(1);
  for (int i = 0; i < k; ++i) {
    mod_vec v(k, 0);
    v[i] = 1;
    spaces[0].push_back(std::move(v));
  }
  for (int j = 1; j < k; ++j) {
    std::vector<std::vector<mod_vec>> next;
    for (auto& basis : spaces) {
      const int d = static_cast<int>(basis.size());
      if (d == 1) {
        next.push_back(std::move(basis));
        continue;
      }
      std::vector<mod_vec> image(d, mod_vec(k, 0));
      for (int b = 0; b < d; ++b)
        for (int l = 0; l < k; ++l) {
          long long s = 0;
          for (int m = 0; m < k; ++m)
            s += at(j, l, m) % p * basis[b][m] % p;
          image[b][l] = s % p;
        }
      int found = 0;
      for (long long lambda = 0; lambda < p && found < d; ++lambda) {
        std::vector<mod_vec> mat(k, mod_vec(d, 0));
        for (int l = 0; l < k; ++l)
          for (int b = 0; b < d; ++b)
            mat[l][b] = ((image[b][l] - lambda * basis[b][l]) % p + p) % p;
        auto null = nullspace_mod(std::move(mat), d, p);
        if (null.empty())
          continue;
        std::vector<mod_vec> sub;
        for (const auto& c : null) {
          mod_vec v(k, 0);
          for (int b = 0; b < d; ++b)
            for (int l = 0; l < k; ++l)
              v[l] = (v[l] + c[b] * basis[b][l]) % p;
          sub.push_back(std::move(v));
        }
        found += static_cast<int>(sub.size());
        next.push_back(std::move(sub));
      }
      ensure(found == d, "class matrices did not diagonalise mod p");
    }
    spaces = std::move(next);
  }
  ensure(static_cast<int>(spaces.size()) == k, "Dixon splitting did not reach one-dimensional spaces");

  // primitive e-th root of unity mod p
  long long gen = 2;
  for (;; ++gen) {
    bool primitive = true;
    for (long long q = 2, rest = p - 1; q <= rest && primitive; ++q)
      if (rest % q == 0) {
        primitive = mod_pow(gen, (p - 1) / q, p) != 1;
        while (rest % q == 0)
          rest /= q;
      }
    if (primitive)
      break;
  }
  const long long root_e = mod_pow(gen, (p - 1) / e, p);

  std::vector<std::vector<Cyclotomic>> rows;
  for (auto& space : spaces) {
    mod_vec w = space.front();
    ensure(w[0] != 0, "eigenvector vanishes on the identity class");
    const long long norm = mod_inv(w[0], p);
    for (auto& x : w)
      x = x * norm % p;
    long long s = 0;
    for (int l = 0; l < k; ++l)
      s = (s + w[l] * w[class_of[g.inv(cls[l].representative)]] % p * mod_inv(cls[l].size, p)) % p;
    const long long d2 = order % p * mod_inv(s, p) % p;
    int degree = 0;
    for (int d = 1; d * d <= order; ++d)
      if (static_cast<long long>(d) * d % p == d2)
        degree = d;
    ensure(degree > 0, "no character degree matches mod p");
    mod_vec chi(k);
    for (int l = 0; l < k; ++l)
      chi[l] = degree * w[l] % p * mod_inv(cls[l].size, p) % p;

    std::vector<Cyclotomic> row;
    for (int l = 0; l < k; ++l) {
      const elem x = cls[l].representative;
      const int m = cls[l].element_order;
      const long long root_m = mod_pow(root_e, e / m, p);
      Cyclotomic value = Cyclotomic::integer(e, 0);
      int total = 0;
      for (int alpha = 0; alpha < m; ++alpha) {
        long long n = 0;
        elem xt = 0;
        for (int t = 0; t < m; ++t, xt = g.mul(xt, x))
          n = (n + chi[class_of[xt]] * mod_pow(root_m, (m - (static_cast<long long>(alpha) * t) % m) % m, p)) % p;
        n = n * mod_inv(m, p) % p;
        ensure(n <= degree, "eigenvalue multiplicity lift out of range");
        total += static_cast<int>(n);
        if (n)
          value += Cyclotomic::zeta(e, static_cast<long long>(alpha) * (e / m)) * rational(n);
      }
      ensure(total == degree, "eigenvalue multiplicities do not sum to the degree");
      row.push_back(std::move(value));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace detail

inline CharacterTable::CharacterTable(group_ptr g, std::vector<ClassInfo> classes,
                                      std::vector<int> class_of,
                                      std::vector<std::vector<Cyclotomic>> rows, table_method method)
    : group_(std::move(g)), conductor_(group_->exponent()), classes_(std::move(classes)),
      class_of_(std::move(class_of)), method_(method) {
  const FiniteGroup& grp = *group_;
  const int k = static_cast<int>(classes_.size());
  ensure(static_cast<int>(rows.size()) == k, "character count differs from class count");
  for (auto& row : rows)
    for (auto& v : row)
      v = v.lifted(conductor_);

  // trivial first, then by degree, then by values
  auto degree_of = [](const std::vector<Cyclotomic>& row) { return *row[0].to_integer(); };
  std::sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) {
    const bool ta = std::all_of(a.begin(), a.end(), [&](const Cyclotomic& v) { return v == a[0]; });
    const bool tb = std::all_of(b.begin(), b.end(), [&](const Cyclotomic& v) { return v == b[0]; });
    if (ta != tb)
      return ta;
    if (degree_of(a) != degree_of(b))
      return degree_of(a) < degree_of(b);
    for (int l = 0; l < k; ++l)
      if (!(a[l] == b[l]))
        return canonical_less(a[l], b[l]);
    return false;
  });
  values_ = std::move(rows);

  long long degree_squares = 0;
  for (const auto& row : values_) {
    auto d = row[0].to_integer();
    ensure(d && *d > 0, "character value at identity is not a positive integer");
    degrees_.push_back(static_cast<int>(*d));
    degree_squares += *d * *d;
  }
  ensure(degree_squares == grp.order(), "sum of squared degrees differs from the group order");

  const int n = static_cast<int>(values_.size());
  for (int chi = 0; chi < n; ++chi) {
    // (1/|G|) sum_g chi(g^2)
    Cyclotomic s = Cyclotomic::integer(conductor_, 0);
    for (const auto& c : classes_)
      s += values_[chi][class_of_[grp.mul(c.representative, c.representative)]] * rational(c.size);
    s /= rational(grp.order());
    auto ind = s.to_integer();
    ensure(ind && (*ind == 0 || *ind == 1 || *ind == -1), "Frobenius-Schur indicator is not in {-1,0,1}");
    fs_.push_back(static_cast<int>(*ind));

    std::vector<Cyclotomic> bar;
    for (const auto& v : values_[chi])
      bar.push_back(v.conj());
    int found = -1;
    for (int other = 0; other < n && found < 0; ++other)
      if (values_[other] == bar)
        found = other;
    ensure(found >= 0, "complex conjugate of a character is missing from the table");
    conj_.push_back(found);

    std::vector<std::vector<int>> per_class;
    for (const auto& c : classes_) {
      const int m = c.element_order;
      std::vector<int> mult(m, 0);
      int total = 0;
      for (int alpha = 0; alpha < m; ++alpha) {
        Cyclotomic acc = Cyclotomic::integer(conductor_, 0);
        elem xt = 0;
        for (int t = 0; t < m; ++t, xt = grp.mul(xt, c.representative))
          acc += values_[chi][class_of_[xt]] *
                 Cyclotomic::zeta(conductor_, -static_cast<long long>(alpha) * t * (conductor_ / m));
        acc /= rational(m);
        auto v = acc.to_integer();
        ensure(v && *v >= 0, "eigenvalue multiplicity is not a nonnegative integer");
        mult[alpha] = static_cast<int>(*v);
        total += mult[alpha];
      }
      ensure(total == degrees_[chi], "eigenvalue multiplicities do not sum to the degree");
      per_class.push_back(std::move(mult));
    }
    eigen_.push_back(std::move(per_class));
  }
}

/// Builds the table; `automatic` uses the closed form where one exists.
inline CharacterTable character_table(const group_ptr& g,
                                      table_method method = table_method::automatic,
                                      int order_cap = default_order_cap) {
  if (g->order() > order_cap)
    fail(error_kind::size_limit, "group too large for a character table");
  auto [classes, class_of] = detail::class_structure(*g);
  const auto kind = g->group_flavor().kind;
  const bool has_closed = kind == flavor_kind::dihedral || kind == flavor_kind::quaternion8 ||
                          kind == flavor_kind::cyclic;
  if (method == table_method::automatic)
    method = has_closed ? table_method::closed_form : table_method::burnside_dixon;
  auto rows = method == table_method::closed_form ? detail::closed_form_rows(*g, classes)
                                                  : detail::burnside_dixon_rows(*g, classes, class_of);
  return CharacterTable(g, std::move(classes), std::move(class_of), std::move(rows), method);
}

/// Per-group cached table (thread-safe first use). The reference lives as
/// long as the group does; use shared_table to keep both alive.
inline const CharacterTable& table_of(const group_ptr& g) {
  auto& slot = g->cache_slot();
  std::call_once(slot.once, [&] {
    // The cached copy lives inside the group, so it must not own it.
    slot.value = std::make_shared<const CharacterTable>(character_table(group_ptr(group_ptr(), g.get())));
  });
  return *std::static_pointer_cast<const CharacterTable>(slot.value);
}

inline std::shared_ptr<const CharacterTable> shared_table(const group_ptr& g) {
  return std::shared_ptr<const CharacterTable>(g, &table_of(g));
}

inline int frobenius_schur(const CharacterTable& t, int chi) { return t.frobenius_schur(chi); }

inline std::vector<int> eigenvalue_multiplicities(const CharacterTable& t, int chi, elem g) {
  return t.eigenvalue_multiplicities(chi, g);
}

/// <chi|_H, 1_H>, the dimension of H-invariants in chi.
inline int trivial_multiplicity_on(const CharacterTable& t, int chi, const Subgroup& h) {
  Cyclotomic s = Cyclotomic::integer(t.conductor(), 0);
  for (elem x : h.members())
    s += t.value_at(chi, x);
  s /= rational(h.size());
  auto v = s.to_integer();
  ensure(v && *v >= 0, "restriction multiplicity is not a nonnegative integer");
  return static_cast<int>(*v);
}

/// <chi|_H, 1> for every chi; depends only on the group, so callers looping
/// over many data can compute it once per subgroup.
inline std::vector<int> restriction_multiplicities(const CharacterTable& t, const Subgroup& h) {
  std::vector<int> out(t.character_count());
  for (int chi = 0; chi < t.character_count(); ++chi)
    out[chi] = trivial_multiplicity_on(t, chi, h);
  return out;
}

/// <a, b> = (1/|G|) sum_g a(g) conj(b(g)), exactly.
inline Cyclotomic inner_product(const CharacterTable& t, int a, int b) {
  Cyclotomic s = Cyclotomic::integer(t.conductor(), 0);
  for (int l = 0; l < t.class_count(); ++l)
    s += t.value(a, l) * t.value(b, l).conj() * rational(t.classes()[l].size);
  return s / rational(t.group()->order());
}

// ---- rational irreducibles ----------------------------------------------

enum class division_kind { rational_field, number_field, quaternionic };

inline std::string to_string(division_kind k) {
  switch (k) {
  case division_kind::rational_field:
    return "rational-field";
  case division_kind::number_field:
    return "totally-real/CM field";
  case division_kind::quaternionic:
    return "quaternionic";
  }
  return "?";
}

struct RationalIrrep {
  std::vector<int> orbit; // complex character indices, sorted
  int fs = 1;
  int degree = 1;
  int schur_index = 1;
  int q_dimension = 1;    // dim_Q W
  int multiplicity_n = 1; // dim_{D} W, also the multiplicity of W in Q[G]
  division_kind kind = division_kind::rational_field;
  int center_degree = 1; // [Q(chi) : Q] = orbit size
};

/// Galois orbits under zeta -> zeta^k for the units k listed (all units by default).
inline std::vector<std::vector<int>> galois_orbits(const CharacterTable& t,
                                                   const std::vector<long long>& units = {}) {
  const int e = t.conductor();
  std::vector<long long> ks = units;
  if (ks.empty())
    for (long long k = 1; k <= e; ++k)
      if (std::gcd(k, static_cast<long long>(e)) == 1)
        ks.push_back(k);
  const int n = t.character_count();
  auto image = [&](int chi, long long k) {
    std::vector<Cyclotomic> row;
    for (const auto& v : t.values()[chi])
      row.push_back(v.galois(k));
    for (int other = 0; other < n; ++other)
      if (t.values()[other] == row)
        return other;
    fail(error_kind::inconsistency, "Galois image of a character is missing from the table");
  };
  std::vector<int> orbit_of(n, -1);
  std::vector<std::vector<int>> orbits;
  for (int chi = 0; chi < n; ++chi) {
    if (orbit_of[chi] >= 0)
      continue;
    std::vector<int> orbit{chi}, queue{chi};
    orbit_of[chi] = static_cast<int>(orbits.size());
    while (!queue.empty()) {
      int c = queue.back();
      queue.pop_back();
      for (long long k : ks) {
        int img = image(c, k);
        if (orbit_of[img] < 0) {
          orbit_of[img] = static_cast<int>(orbits.size());
          orbit.push_back(img);
          queue.push_back(img);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

inline std::vector<RationalIrrep> rational_irreducibles(const CharacterTable& t) {
  const auto kind = t.group()->group_flavor().kind;
  const bool supported = kind == flavor_kind::dihedral || kind == flavor_kind::quaternion8 ||
                         kind == flavor_kind::cyclic;
  std::vector<RationalIrrep> out;
  for (auto& orbit : galois_orbits(t)) {
    RationalIrrep w;
    const int chi = orbit.front();
    w.fs = t.frobenius_schur(chi);
    w.degree = t.degree(chi);
    w.center_degree = static_cast<int>(orbit.size());
    if (w.fs == 0 && w.degree > 1 && !supported)
      fail(error_kind::unsupported,
           "Schur index of a non-real character of degree " + std::to_string(w.degree) +
               " is not determined for " + t.group()->spec());
    w.schur_index = w.fs == -1 ? 2 : 1;
    ensure(w.degree % w.schur_index == 0, "Schur index does not divide the degree");
    w.q_dimension = w.center_degree * w.degree * w.schur_index;
    w.multiplicity_n = w.degree / w.schur_index;
    w.kind = w.fs == -1              ? division_kind::quaternionic
             : w.center_degree == 1 ? division_kind::rational_field
                                     : division_kind::number_field;
    w.orbit = std::move(orbit);
    out.push_back(std::move(w));
  }
  return out;
}

inline std::vector<RationalIrrep> rational_irreducibles(const group_ptr& g) {
  return rational_irreducibles(table_of(g));
}

/// One simple factor M_n(D) of Q[G].
struct SimpleFactor {
  int matrix_size = 1;
  division_kind kind = division_kind::rational_field;
  int center_degree = 1;
  int schur_index = 1;
  int q_dimension = 1; // n^2 * center_degree * schur_index^2
};

inline std::vector<SimpleFactor> group_algebra_shape(const group_ptr& g) {
  std::vector<SimpleFactor> out;
  for (const auto& w : rational_irreducibles(g)) {
    SimpleFactor f;
    f.matrix_size = w.multiplicity_n;
    f.kind = w.kind;
    f.center_degree = w.center_degree;
    f.schur_index = w.schur_index;
    f.q_dimension = w.multiplicity_n * w.multiplicity_n * w.center_degree * w.schur_index * w.schur_index;
    out.push_back(f);
  }
  return out;
}

} // namespace galcover
