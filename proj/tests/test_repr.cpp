#include <gtest/gtest.h>

#include <array>
#include <future>

#include "support.hpp"

using namespace galcover;
using support::small_groups;

namespace {

using cd = std::complex<double>;
using mat2 = std::array<cd, 4>;

mat2 mul(const mat2& a, const mat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
          a[2] * b[1] + a[3] * b[3]};
}

// Eigenvalue exponents alpha (mod m) of a 2x2 matrix of finite order m.
std::vector<int> eigen_exponents(const mat2& a, int m) {
  const cd tr = a[0] + a[3], det = a[0] * a[3] - a[1] * a[2];
  const cd disc = std::sqrt(tr * tr - 4.0 * det);
  std::vector<int> counts(m, 0);
  for (cd lambda : {(tr + disc) / 2.0, (tr - disc) / 2.0}) {
    double angle = std::arg(lambda) / (2 * std::numbers::pi) * m;
    int alpha = static_cast<int>(std::lround(angle));
    EXPECT_NEAR(angle, alpha, 1e-7);
    counts[((alpha % m) + m) % m]++;
  }
  return counts;
}

int row_matching(const CharacterTable& t, const std::vector<cd>& chi) {
  for (int r = 0; r < t.character_count(); ++r) {
    bool same = true;
    for (int c = 0; c < t.class_count(); ++c)
      same = same && std::abs(t.value(r, c).approx() - chi[c]) < 1e-9;
    if (same)
      return r;
  }
  return -1;
}

// r^a s^e -> rho(r)^a rho(s)^e with rho(r) = diag(z^h, z^-h), rho(s) = antidiag(1, 1).
mat2 dihedral_matrix(int n, int h, elem x) {
  const int a = x % n;
  const cd z = std::polar(1.0, 2 * std::numbers::pi * h * a / n);
  const mat2 rot{z, 0, 0, std::conj(z)};
  return x >= n ? mul(rot, mat2{0, 1, 1, 0}) : rot;
}

// nonabelian group of order 21: (a, b) with b a b^-1 = a^2
galcover::group_ptr order21() {
  std::vector<elem> table(21 * 21);
  std::vector<std::string> labels;
  auto id = [](int a, int b) { return b * 7 + a; };
  for (int b = 0; b < 3; ++b)
    for (int a = 0; a < 7; ++a)
      labels.push_back("x" + std::to_string(a) + "y" + std::to_string(b));
  const int pow2[3] = {1, 2, 4};
  for (int b1 = 0; b1 < 3; ++b1)
    for (int a1 = 0; a1 < 7; ++a1)
      for (int b2 = 0; b2 < 3; ++b2)
        for (int a2 = 0; a2 < 7; ++a2)
          table[id(a1, b1) * 21 + id(a2, b2)] = id((a1 + pow2[b1] * a2) % 7, (b1 + b2) % 3);
  return make_group_from_table(std::move(table), std::move(labels), "C7:C3");
}

} // namespace

TEST(Repr, DegreeExamples) {
  EXPECT_EQ(table_of(make_quaternion8()).degrees(), (std::vector<int>{1, 1, 1, 1, 2}));
  EXPECT_EQ(table_of(make_dihedral(6)).degrees(), (std::vector<int>{1, 1, 1, 1, 2, 2}));
  const auto c2 = shared_table(make_cyclic(2));
  ASSERT_EQ(c2->character_count(), 2);
  EXPECT_EQ(c2->value(0, 1).to_integer(), 1);
  EXPECT_EQ(c2->value(1, 1).to_integer(), -1);
}

TEST(Repr, OrthogonalityIsExact) {
  auto extra = small_groups();
  extra.push_back(order21());
  for (const auto& g : extra) {
    SCOPED_TRACE(g->spec());
    const auto& t = table_of(g);
    ASSERT_EQ(t.character_count(), t.class_count());
    long long sq = 0;
    for (int a = 0; a < t.character_count(); ++a) {
      sq += 1LL * t.degree(a) * t.degree(a);
      EXPECT_EQ(t.value_at(a, 0).to_integer(), t.degree(a));
      for (int b = 0; b < t.character_count(); ++b) {
        Cyclotomic s = Cyclotomic::integer(t.conductor(), 0);
        for (int c = 0; c < t.class_count(); ++c)
          s += t.value(a, c) * t.value(b, c).conj() * rational(t.classes()[c].size);
        EXPECT_EQ(s.to_integer(), a == b ? g->order() : 0);
      }
    }
    EXPECT_EQ(sq, g->order());
    for (int c1 = 0; c1 < t.class_count(); ++c1)
      for (int c2 = 0; c2 < t.class_count(); ++c2) {
        Cyclotomic s = Cyclotomic::integer(t.conductor(), 0);
        for (int a = 0; a < t.character_count(); ++a)
          s += t.value(a, c1) * t.value(a, c2).conj();
        EXPECT_EQ(s.to_integer(), c1 == c2 ? g->order() / t.classes()[c1].size : 0);
      }
  }
}

TEST(Repr, ClosedFormAgreesWithBurnsideDixon) {
  for (const auto& g : small_groups()) {
    SCOPED_TRACE(g->spec());
    const auto closed = character_table(g, table_method::closed_form);
    const auto dixon = character_table(g, table_method::burnside_dixon);
    auto a = closed.values(), b = dixon.values();
    auto less = [](const std::vector<Cyclotomic>& x, const std::vector<Cyclotomic>& y) {
      return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                          [](const Cyclotomic& u, const Cyclotomic& v) { return canonical_less(u, v); });
    };
    std::sort(a.begin(), a.end(), less);
    std::sort(b.begin(), b.end(), less);
    EXPECT_EQ(a, b);
  }
}

TEST(Repr, FrobeniusSchurAgainstNumericSum) {
  auto extra = small_groups();
  extra.push_back(order21());
  for (const auto& g : extra) {
    const auto& t = table_of(g);
    for (int chi = 0; chi < t.character_count(); ++chi) {
      cd s = 0;
      for (elem x = 0; x < g->order(); ++x)
        s += t.value_at(chi, g->mul(x, x)).approx();
      s /= static_cast<double>(g->order());
      const int fs = t.frobenius_schur(chi);
      EXPECT_TRUE(fs == -1 || fs == 0 || fs == 1);
      EXPECT_NEAR(s.real(), fs, 1e-9) << g->spec() << " chi " << chi;
      EXPECT_NEAR(s.imag(), 0, 1e-9);
      // fs = 0 exactly for characters that are not self-conjugate
      EXPECT_EQ(fs == 0, t.conjugate_of(chi) != chi);
      EXPECT_EQ(t.conjugate_of(t.conjugate_of(chi)), chi);
    }
    EXPECT_EQ(t.frobenius_schur(0), 1);
  }
  const auto q = shared_table(make_quaternion8());
  EXPECT_EQ(q->frobenius_schur(4), -1);
  const auto c4 = shared_table(make_cyclic(4));
  int faithful_zero = 0;
  for (int chi = 0; chi < 4; ++chi)
    if (c4->value_at(chi, 1).to_integer() == std::nullopt) // values +-i
      faithful_zero += c4->frobenius_schur(chi) == 0;
  EXPECT_EQ(faithful_zero, 2);
}

TEST(Repr, EigenvalueMultiplicitiesReconstructCharacter) {
  for (const auto& g : small_groups()) {
    const auto& t = table_of(g);
    for (int chi = 0; chi < t.character_count(); ++chi)
      for (elem x = 0; x < g->order(); ++x) {
        const int m = g->element_order(x);
        const auto& n = eigenvalue_multiplicities(t, chi, x);
        ASSERT_EQ(static_cast<int>(n.size()), m);
        int total = 0;
        Cyclotomic s = Cyclotomic::integer(m, 0);
        for (int a = 0; a < m; ++a) {
          EXPECT_GE(n[a], 0);
          total += n[a];
          s += Cyclotomic::zeta(m, a) * rational(n[a]);
        }
        EXPECT_EQ(total, t.degree(chi));
        EXPECT_EQ(s, t.value_at(chi, x)) << g->spec();
      }
    for (int chi = 0; chi < t.character_count(); ++chi)
      EXPECT_EQ(eigenvalue_multiplicities(t, chi, 0), std::vector<int>{t.degree(chi)});
  }
}

TEST(Repr, EigenvaluesMatchExplicitMatrices) {
  // Q8: i -> diag(i, -i), j -> antidiag(1, -1)
  auto q = make_quaternion8();
  const auto& qt = table_of(q);
  const mat2 mi{cd(0, 1), 0, 0, cd(0, -1)}, mj{0, 1, -1, 0};
  std::vector<mat2> rho(8);
  rho[0] = {1, 0, 0, 1};
  rho[q->parse("i")] = mi;
  rho[q->parse("j")] = mj;
  rho[q->parse("k")] = mul(mi, mj);
  rho[q->parse("-1")] = mul(mi, mi);
  for (const char* w : {"-i", "-j", "-k"})
    rho[q->parse(w)] = mul(rho[q->parse("-1")], rho[q->parse(w + 1)]);
  std::vector<cd> chi(qt.class_count());
  for (int c = 0; c < qt.class_count(); ++c) {
    const auto& m = rho[qt.classes()[c].representative];
    chi[c] = m[0] + m[3];
  }
  const int row = row_matching(qt, chi);
  ASSERT_EQ(row, 4);
  for (elem x = 0; x < 8; ++x)
    EXPECT_EQ(eigenvalue_multiplicities(qt, row, x), eigen_exponents(rho[x], q->element_order(x))) << q->label(x);
  EXPECT_EQ(eigenvalue_multiplicities(qt, row, q->parse("-1")), (std::vector<int>{0, 2}));
  EXPECT_EQ(eigenvalue_multiplicities(qt, row, q->parse("i")), (std::vector<int>{0, 1, 0, 1}));

  for (int n = 3; n <= 12; ++n) {
    auto g = make_dihedral(n);
    const auto& t = table_of(g);
    for (int h = 1; 2 * h < n; ++h) {
      std::vector<cd> vals(t.class_count());
      for (int c = 0; c < t.class_count(); ++c) {
        const auto m = dihedral_matrix(n, h, t.classes()[c].representative);
        vals[c] = m[0] + m[3];
      }
      const int r = row_matching(t, vals);
      ASSERT_GE(r, 0) << "D:" << n << " h=" << h;
      for (elem x = 0; x < g->order(); ++x)
        EXPECT_EQ(eigenvalue_multiplicities(t, r, x), eigen_exponents(dihedral_matrix(n, h, x), g->element_order(x)));
    }
  }
}

TEST(Repr, RationalIrreducibleExamples) {
  const auto q = rational_irreducibles(make_quaternion8());
  ASSERT_EQ(q.size(), 5u);
  const auto& w = q.back();
  EXPECT_EQ(w.degree, 2);
  EXPECT_EQ(w.fs, -1);
  EXPECT_EQ(w.schur_index, 2);
  EXPECT_EQ(w.q_dimension, 4);
  EXPECT_EQ(w.multiplicity_n, 1);
  EXPECT_EQ(w.kind, division_kind::quaternionic);

  const auto c3 = rational_irreducibles(make_cyclic(3));
  ASSERT_EQ(c3.size(), 2u);
  EXPECT_EQ(c3[0].q_dimension, 1);
  EXPECT_EQ(c3[1].q_dimension, 2);
  EXPECT_EQ(c3[1].kind, division_kind::number_field);

  const auto c1 = rational_irreducibles(make_cyclic(1));
  ASSERT_EQ(c1.size(), 1u);
  EXPECT_EQ(c1[0].q_dimension, 1);
}

TEST(Repr, RationalIrreducibleBookkeeping) {
  for (const auto& g : small_groups()) {
    int sum = 0;
    for (const auto& w : rational_irreducibles(g)) {
      EXPECT_EQ(w.q_dimension, static_cast<int>(w.orbit.size()) * w.degree * w.schur_index);
      EXPECT_GE(w.multiplicity_n, 1);
      sum += w.multiplicity_n * w.q_dimension;
    }
    EXPECT_EQ(sum, g->order()) << g->spec();
    int algebra = 0;
    for (const auto& f : group_algebra_shape(g))
      algebra += f.q_dimension;
    EXPECT_EQ(algebra, g->order());
  }
}

TEST(Repr, GaloisOrbitsDoNotDependOnPrimitiveRoot) {
  // (Z/e)^* cyclic for these conductors; each listed unit generates it
  const std::vector<std::pair<int, std::vector<long long>>> cases{
      {5, {2, 3}}, {7, {3, 5}}, {9, {2, 5}}, {10, {3, 7}}, {11, {2, 6, 7, 8}}};
  for (const auto& [e, roots] : cases) {
    const auto t = shared_table(make_cyclic(e));
    const auto all = galois_orbits(*t);
    for (long long k : roots)
      EXPECT_EQ(galois_orbits(*t, {k}), all) << e << " root " << k;
  }
}

TEST(Repr, GroupAlgebraShapes) {
  const auto q = group_algebra_shape(make_quaternion8());
  ASSERT_EQ(q.size(), 5u);
  EXPECT_EQ(std::count_if(q.begin(), q.end(), [](const SimpleFactor& f) {
              return f.kind == division_kind::rational_field && f.matrix_size == 1;
            }),
            4);
  EXPECT_EQ(q.back().kind, division_kind::quaternionic);
  EXPECT_EQ(q.back().matrix_size, 1);

  const auto c2 = group_algebra_shape(make_cyclic(2));
  ASSERT_EQ(c2.size(), 2u);
  for (const auto& f : c2)
    EXPECT_EQ(f.q_dimension, 1);

  const auto d6 = group_algebra_shape(make_dihedral(6));
  ASSERT_EQ(d6.size(), 6u);
  int fields = 0, matrices = 0;
  for (const auto& f : d6) {
    EXPECT_NE(f.kind, division_kind::quaternionic);
    fields += f.matrix_size == 1;
    matrices += f.matrix_size == 2;
  }
  EXPECT_EQ(fields, 4);
  EXPECT_EQ(matrices, 2);
}

TEST(Repr, GenericGroupUsesBurnsideDixonAndGuardsSchurIndex) {
  auto g = order21();
  const auto& t = table_of(g);
  EXPECT_EQ(t.method(), table_method::burnside_dixon);
  EXPECT_EQ(t.degrees(), (std::vector<int>{1, 1, 1, 3, 3}));
  try {
    rational_irreducibles(g);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.kind(), error_kind::unsupported);
  }
}

TEST(Repr, TableCacheIsSharedAcrossThreads) {
  auto g = make_dihedral(12);
  std::vector<std::future<const CharacterTable*>> futs;
  for (int i = 0; i < 8; ++i)
    futs.push_back(std::async(std::launch::async, [&] { return &table_of(g); }));
  const CharacterTable* first = futs[0].get();
  for (std::size_t i = 1; i < futs.size(); ++i)
    EXPECT_EQ(futs[i].get(), first);
}

TEST(Repr, InnerProductAndRestriction) {
  auto q = make_quaternion8();
  const auto& t = table_of(q);
  for (int a = 0; a < t.character_count(); ++a)
    for (int b = 0; b < t.character_count(); ++b)
      EXPECT_EQ(inner_product(t, a, b).to_integer(), a == b ? 1 : 0);
  // the 2-dim character has no invariants on any nontrivial subgroup
  for (const auto& h : all_subgroups(*q))
    EXPECT_EQ(trivial_multiplicity_on(t, 4, h), h.is_trivial() ? 2 : 0);
}
