#pragma once

// Shared fixtures and brute-force oracles. The oracles deliberately avoid the
// library's own search and closure routines.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "galcover/galcover.hpp"

namespace support {

using namespace galcover;

inline std::mt19937_64 rng(std::uint64_t salt = 0) { return std::mt19937_64(0x5eed'2024ULL ^ salt); }

inline std::vector<group_ptr> small_groups() {
  std::vector<group_ptr> gs;
  for (int n = 2; n <= 12; ++n)
    gs.push_back(make_dihedral(n));
  gs.push_back(make_quaternion8());
  for (int n = 1; n <= 12; ++n)
    gs.push_back(make_cyclic(n));
  return gs;
}

// Fixed-point closure: keep multiplying until nothing new appears.
inline std::vector<elem> closure_oracle(const FiniteGroup& g, const std::vector<elem>& gens) {
  std::set<elem> s{0};
  s.insert(gens.begin(), gens.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<elem> cur(s.begin(), s.end());
    for (elem a : cur)
      for (elem b : cur)
        grew |= s.insert(g.mul(a, b)).second;
  }
  return {s.begin(), s.end()};
}

inline std::vector<std::vector<elem>> conjugacy_oracle(const FiniteGroup& g) {
  std::vector<int> seen(g.order(), 0);
  std::vector<std::vector<elem>> out;
  for (elem a = 0; a < g.order(); ++a) {
    if (seen[a])
      continue;
    std::set<elem> cls;
    for (elem x = 0; x < g.order(); ++x)
      cls.insert(g.mul(g.mul(x, a), g.inv(x)));
    for (elem c : cls)
      seen[c] = 1;
    out.emplace_back(cls.begin(), cls.end());
  }
  return out;
}

inline int order_oracle(const FiniteGroup& g, elem x) {
  int k = 1;
  for (elem p = x; p != 0; p = g.mul(p, x))
    ++k;
  return k;
}

// All |G|^r tuples, filtered by the three datum conditions.
inline std::vector<std::vector<elem>> tuple_oracle(const FiniteGroup& g, const std::vector<int>& orders) {
  const int n = g.order();
  const std::size_t r = orders.size();
  std::vector<std::vector<elem>> out;
  std::vector<elem> t(r, 0);
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < r && ok; ++i)
      ok = order_oracle(g, t[i]) == orders[i];
    if (ok) {
      elem p = 0;
      for (elem x : t)
        p = g.mul(p, x);
      if (p == 0 && static_cast<int>(closure_oracle(g, t).size()) == n)
        out.push_back(t);
    }
    std::size_t i = 0;
    while (i < r && ++t[i] == n)
      t[i++] = 0;
    if (i == r)
      break;
  }
  return out;
}

// Every subset closed under multiplication (small groups only).
inline std::set<std::vector<elem>> subgroup_oracle(const FiniteGroup& g) {
  std::set<std::vector<elem>> out;
  const int n = g.order();
  for (std::uint32_t mask = 1; mask < (1u << n); mask += 2) { // identity always in
    std::vector<elem> s;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1)
        s.push_back(i);
    bool closed = true;
    for (elem a : s) {
      for (elem b : s)
        if (!(mask >> g.mul(a, b) & 1)) {
          closed = false;
          break;
        }
      if (!closed)
        break;
    }
    if (closed)
      out.insert(s);
  }
  return out;
}

// Chevalley-Weil / duality corpus: every class representative over Q8, D_n
// (n <= 10) and C_n (n <= 12) for a range of branch counts up to 6.
inline const std::vector<Datum>& duality_corpus() {
  static const std::vector<Datum> corpus = [] {
    std::vector<Datum> out;
    auto add = [&](const group_ptr& g, int r_max) {
      for (int r = 3; r <= r_max; ++r)
        for (const auto& c : enumerate_all_data(g, r).classes)
          out.push_back(c.representative);
    };
    add(make_quaternion8(), 6);
    for (int n = 2; n <= 10; ++n)
      add(make_dihedral(n), n <= 4 ? 5 : 4);
    for (int n = 2; n <= 12; ++n)
      add(make_cyclic(n), n <= 4 ? 6 : 4);
    return out;
  }();
  return corpus;
}

} // namespace support
