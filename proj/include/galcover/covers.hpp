#pragma once

// Monodromy data of Galois covers of the line: validation, Riemann-Hurwitz,
// quotient and intermediate covers, and enumeration up to conjugation and
// Hurwitz (braid) moves.

#include <algorithm>
#include <future>
#include <map>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "galcover/error.hpp"
#include "galcover/groups.hpp"

namespace galcover {

/// Local monodromies g_1..g_r with g_1...g_r = 1 generating the group;
/// orders[i] is the order of tuple[i].
struct Datum {
  group_ptr group;
  std::vector<int> orders;
  std::vector<elem> tuple;
  bool degenerate = false; // fewer than 3 branch points; only produced by quotients

  int branch_count() const noexcept { return static_cast<int>(tuple.size()); }
};

enum class datum_failure {
  too_few_points,
  length_mismatch,
  bad_element,
  product_not_identity,
  order_mismatch,
  not_generating,
};

inline std::string to_string(datum_failure f) {
  switch (f) {
  case datum_failure::too_few_points:
    return "fewer than 3 branch points";
  case datum_failure::length_mismatch:
    return "orders and tuple differ in length";
  case datum_failure::bad_element:
    return "element not in group";
  case datum_failure::product_not_identity:
    return "product of the local monodromies is not the identity";
  case datum_failure::order_mismatch:
    return "element order differs from the prescribed order";
  case datum_failure::not_generating:
    return "local monodromies do not generate the group";
  }
  return "?";
}

struct DatumRejection {
  datum_failure reason;
  int position = -1; // offending branch point, when there is one
  std::string message;
};

using DatumCheck = std::variant<Datum, DatumRejection>;

inline elem tuple_product(const FiniteGroup& g, std::span<const elem> tuple) {
  elem p = g.identity();
  for (elem x : tuple)
    p = g.mul(p, x);
  return p;
}

inline bool generates(const FiniteGroup& g, std::span<const elem> tuple) {
  return subgroup_generated(g, tuple).size() == g.order();
}

inline DatumCheck validate_datum(const group_ptr& gp, std::vector<int> orders, std::vector<elem> tuple) {
  const FiniteGroup& g = *gp;
  auto reject = [](datum_failure f, int pos, std::string extra = {}) -> DatumCheck {
    std::string msg = to_string(f);
    if (pos >= 0)
      msg += " at branch point " + std::to_string(pos + 1);
    if (!extra.empty())
      msg += " (" + extra + ")";
    return DatumRejection{f, pos, msg};
  };
  if (orders.empty())
    for (elem x : tuple)
      orders.push_back(g.contains(x) ? g.element_order(x) : 0);
  if (orders.size() != tuple.size())
    return reject(datum_failure::length_mismatch, -1);
  if (tuple.size() < 3)
    return reject(datum_failure::too_few_points, -1);
  for (std::size_t i = 0; i < tuple.size(); ++i)
    if (!g.contains(tuple[i]))
      return reject(datum_failure::bad_element, static_cast<int>(i));
  if (tuple_product(g, tuple) != g.identity())
    return reject(datum_failure::product_not_identity, -1,
                  "product is " + g.label(tuple_product(g, tuple)));
  for (std::size_t i = 0; i < tuple.size(); ++i)
    if (orders[i] < 2 || g.element_order(tuple[i]) != orders[i])
      return reject(datum_failure::order_mismatch, static_cast<int>(i),
                    g.label(tuple[i]) + " has order " + std::to_string(g.element_order(tuple[i])) +
                        ", expected " + std::to_string(orders[i]));
  if (!generates(g, tuple))
    return reject(datum_failure::not_generating, -1,
                  "they generate a subgroup of order " +
                      std::to_string(subgroup_generated(g, tuple).size()));
  return Datum{gp, std::move(orders), std::move(tuple), false};
}

/// Throwing form of validate_datum.
inline Datum make_datum(const group_ptr& g, std::vector<int> orders, std::vector<elem> tuple) {
  auto r = validate_datum(g, std::move(orders), std::move(tuple));
  if (auto* bad = std::get_if<DatumRejection>(&r))
    fail(error_kind::invalid_datum, bad->message);
  return std::get<Datum>(std::move(r));
}

/// Parses `-1,i,j,ij` against the group's word grammar.
inline std::vector<elem> parse_tuple(const FiniteGroup& g, std::string_view text) {
  std::vector<elem> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos)
      comma = text.size();
    out.push_back(g.parse(text.substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

inline std::vector<int> parse_orders(std::string_view text) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos)
      comma = text.size();
    std::string item(text.substr(start, comma - start));
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || v < 1)
      fail(error_kind::invalid_parameter, "bad order list '" + std::string(text) + "'");
    out.push_back(v);
    start = comma + 1;
  }
  return out;
}

/// Riemann-Hurwitz: 2g - 2 = -2|G| + sum_i (|G|/m_i)(m_i - 1).
inline int genus(const Datum& d) {
  const int n = d.group->order();
  long long twice = -2LL * n + 2;
  for (int m : d.orders) {
    ensure(n % m == 0, "branch order does not divide the group order");
    twice += static_cast<long long>(n / m) * (m - 1);
  }
  ensure(twice >= 0 && twice % 2 == 0, "Riemann-Hurwitz gives a non-integral genus");
  return static_cast<int>(twice / 2);
}

inline int family_dimension(const Datum& d) {
  if (d.branch_count() < 3)
    fail(error_kind::invalid_parameter, "family dimension needs at least 3 branch points");
  return d.branch_count() - 3;
}

struct QuotientDatumResult {
  Datum datum;
  std::vector<int> kept_points;
  std::vector<int> dropped_points;
  std::vector<elem> projection;

  bool degenerate() const noexcept { return datum.degenerate; }
};

/// The G/N-cover C/N -> line; points whose monodromy dies in G/N stop being branch points.
inline QuotientDatumResult quotient_datum(const Datum& d, const Subgroup& n) {
  auto q = quotient_group(d.group, n); // throws not_normal
  QuotientDatumResult out;
  out.datum.group = q.group;
  for (int i = 0; i < d.branch_count(); ++i) {
    const elem img = q.projection[d.tuple[i]];
    if (img == q.group->identity()) {
      out.dropped_points.push_back(i);
      continue;
    }
    out.kept_points.push_back(i);
    out.datum.tuple.push_back(img);
    out.datum.orders.push_back(q.group->element_order(img));
  }
  out.datum.degenerate = out.datum.branch_count() < 3;
  ensure(tuple_product(*q.group, out.datum.tuple) == q.group->identity(),
         "quotient tuple product is not the identity");
  ensure(generates(*q.group, out.datum.tuple), "quotient tuple does not generate G/N");
  out.projection = std::move(q.projection);
  return out;
}

namespace detail {
// left cosets xH numbered by smallest member
inline std::vector<int> coset_ids(const FiniteGroup& g, const Subgroup& h, int& count) {
  std::vector<int> id(g.order(), -1);
  count = 0;
  for (elem a = 0; a < g.order(); ++a) {
    if (id[a] >= 0)
      continue;
    for (elem x : h.members())
      id[g.mul(a, x)] = count;
    ++count;
  }
  return id;
}
} // namespace detail

/// Genus of C/H, by counting the orbits of <g_i> acting on G/H.
inline int intermediate_genus(const Datum& d, const Subgroup& h) {
  const FiniteGroup& g = *d.group;
  if (!is_subgroup(g, h))
    fail(error_kind::not_subgroup, "H is not a subgroup of " + g.spec());
  int index = 0;
  const auto id = detail::coset_ids(g, h, index);
  std::vector<elem> rep(index, -1);
  for (elem a = g.order(); a-- > 0;)
    rep[id[a]] = a;
  long long twice = -2LL * index + 2;
  std::vector<bool> seen(index);
  for (elem gi : d.tuple) {
    std::fill(seen.begin(), seen.end(), false);
    int orbits = 0;
    for (int c = 0; c < index; ++c) {
      if (seen[c])
        continue;
      ++orbits;
      for (int x = c; !seen[x]; x = id[g.mul(gi, rep[x])])
        seen[x] = true;
    }
    twice += index - orbits;
  }
  ensure(twice >= 0 && twice % 2 == 0, "intermediate Riemann-Hurwitz gives a non-integral genus");
  return static_cast<int>(twice / 2);
}

/// dim P(C/H -> C/K) = g(C/H) - g(C/K) for H <= K.
inline int prym_dimension(const Datum& d, const Subgroup& h, const Subgroup& k) {
  if (!h.is_subset_of(k))
    fail(error_kind::not_subgroup, "Prym dimension needs H contained in K");
  const int p = intermediate_genus(d, h) - intermediate_genus(d, k);
  ensure(p >= 0, "negative Prym dimension");
  return p;
}

inline int reflection_count(const Datum& d) {
  int k = 0;
  for (elem x : d.tuple)
    k += dihedral_element_kind(*d.group, x).reflection ? 1 : 0;
  return k;
}

// ---- enumeration ----------------------------------------------------------

struct EnumerationLimits {
  int order_cap = 64;
  int branch_cap = 14;
  long long search_cap = 200'000'000; // product of candidate counts over free positions
  long long orbit_cap = 5'000'000;    // states visited by the braid closure
};

enum class equivalence { conjugation, conjugation_braid };

inline std::string to_string(equivalence e) {
  return e == equivalence::conjugation ? "conjugation" : "conjugation+braid";
}

struct EquivalenceClass {
  Datum representative;
  long long size = 0;
};

struct EquivalenceClassSet {
  std::vector<EquivalenceClass> classes;
  equivalence kind = equivalence::conjugation;

  long long total() const {
    long long t = 0;
    for (const auto& c : classes)
      t += c.size;
    return t;
  }
};

/// Lexicographically least tuple under simultaneous conjugation.
inline std::vector<elem> canonical_tuple(const FiniteGroup& g, const std::vector<elem>& t) {
  std::vector<elem> best = t, cur(t.size());
  for (elem x = 1; x < g.order(); ++x) {
    for (std::size_t i = 0; i < t.size(); ++i)
      cur[i] = g.conj(t[i], x);
    if (cur < best)
      best = cur;
  }
  return best;
}

namespace detail {

inline void check_limits(const FiniteGroup& g, std::size_t r, const EnumerationLimits& lim) {
  if (g.order() > lim.order_cap)
    fail(error_kind::size_limit, "group order exceeds the enumeration cap");
  if (static_cast<int>(r) > lim.branch_cap)
    fail(error_kind::size_limit, "branch count exceeds the enumeration cap");
  if (r < 3)
    fail(error_kind::invalid_parameter, "enumeration needs at least 3 branch points");
}

// All tuples with tuple[i] drawn from candidates[i], product 1, generating G.
// The last coordinate is forced by the product relation.
inline std::vector<std::vector<elem>> search_tuples(const FiniteGroup& g,
                                                    const std::vector<std::vector<elem>>& candidates,
                                                    const EnumerationLimits& lim) {
  const std::size_t r = candidates.size();
  long double space = 1;
  for (std::size_t i = 0; i + 1 < r; ++i)
    space *= static_cast<long double>(candidates[i].size());
  if (space > static_cast<long double>(lim.search_cap))
    fail(error_kind::size_limit, "tuple search space exceeds the enumeration cap");
  std::vector<bool> last_ok(g.order(), false);
  for (elem x : candidates.back())
    last_ok[x] = true;

  auto run = [&](elem first) {
    std::vector<std::vector<elem>> found;
    std::vector<elem> cur(r);
    std::vector<elem> prefix(r);
    cur[0] = first;
    prefix[0] = first;
    // iterative odometer over positions 1..r-2
    std::vector<std::size_t> idx(r, 0);
    std::size_t pos = 1;
    auto finish = [&] {
      const elem last = g.inv(prefix[r - 2]);
      if (!last_ok[last])
        return;
      cur[r - 1] = last;
      if (generates(g, cur))
        found.push_back(cur);
    };
    if (r == 2) {
      // unreachable: r >= 3 enforced
      return found;
    }
    while (true) {
      if (pos == r - 1) {
        finish();
        --pos;
        if (pos == 0)
          break;
        ++idx[pos];
        continue;
      }
      if (idx[pos] == candidates[pos].size()) {
        idx[pos] = 0;
        --pos;
        if (pos == 0)
          break;
        ++idx[pos];
        continue;
      }
      cur[pos] = candidates[pos][idx[pos]];
      prefix[pos] = g.mul(prefix[pos - 1], cur[pos]);
      ++pos;
      if (pos < r - 1)
        idx[pos] = 0;
    }
    return found;
  };

  // Fan out the first coordinate; concatenation in candidate order keeps the
  // result identical to a sequential run.
  const auto& firsts = candidates.front();
  std::vector<std::vector<std::vector<elem>>> parts(firsts.size());
  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  if (workers > 1 && space > 100000) {
    std::vector<std::future<std::vector<std::vector<elem>>>> futs;
    for (elem f : firsts)
      futs.push_back(std::async(std::launch::async, run, f));
    for (std::size_t i = 0; i < futs.size(); ++i)
      parts[i] = futs[i].get();
  } else {
    for (std::size_t i = 0; i < firsts.size(); ++i)
      parts[i] = run(firsts[i]);
  }
  std::vector<std::vector<elem>> out;
  for (auto& p : parts)
    for (auto& t : p)
      out.push_back(std::move(t));
  return out;
}

inline EquivalenceClassSet classes_from_tuples(const group_ptr& gp,
                                               const std::vector<std::vector<elem>>& tuples) {
  std::map<std::vector<elem>, long long> counts;
  for (const auto& t : tuples)
    ++counts[canonical_tuple(*gp, t)];
  EquivalenceClassSet out;
  out.kind = equivalence::conjugation;
  for (auto& [rep, n] : counts) {
    std::vector<int> orders;
    for (elem x : rep)
      orders.push_back(gp->element_order(x));
    out.classes.push_back({Datum{gp, std::move(orders), rep, false}, n});
  }
  return out;
}

inline std::vector<std::vector<elem>> candidates_for(const FiniteGroup& g, std::span<const int> orders) {
  std::vector<std::vector<elem>> cand;
  for (int m : orders) {
    if (m < 2)
      fail(error_kind::invalid_parameter, "branch orders must be at least 2");
    std::vector<elem> c;
    for (elem x = 0; x < g.order(); ++x)
      if (g.element_order(x) == m)
        c.push_back(x);
    cand.push_back(std::move(c));
  }
  return cand;
}

} // namespace detail

/// Every valid tuple with the prescribed ordered signature.
inline std::vector<std::vector<elem>> valid_tuples(const group_ptr& g, std::span<const int> orders,
                                                   const EnumerationLimits& lim = {}) {
  detail::check_limits(*g, orders.size(), lim);
  return detail::search_tuples(*g, detail::candidates_for(*g, orders), lim);
}

/// Valid tuples with the given signature, up to simultaneous conjugation.
inline EquivalenceClassSet enumerate_data(const group_ptr& g, std::span<const int> orders,
                                          const EnumerationLimits& lim = {}) {
  return detail::classes_from_tuples(g, valid_tuples(g, orders, lim));
}

inline EquivalenceClassSet enumerate_data(const group_ptr& g, std::initializer_list<int> orders,
                                          const EnumerationLimits& lim = {}) {
  return enumerate_data(g, std::span<const int>(orders.begin(), orders.size()), lim);
}

/// Every valid datum with r branch points, whatever its signature.
inline EquivalenceClassSet enumerate_all_data(const group_ptr& g, int r,
                                              const EnumerationLimits& lim = {}) {
  detail::check_limits(*g, static_cast<std::size_t>(r), lim);
  std::vector<elem> nontrivial;
  for (elem x = 1; x < g->order(); ++x)
    nontrivial.push_back(x);
  std::vector<std::vector<elem>> cand(r, nontrivial);
  return detail::classes_from_tuples(g, detail::search_tuples(*g, cand, lim));
}

/// sigma_t: (.., g_t, g_t+1, ..) -> (.., g_t g_t+1 g_t^-1, g_t, ..), t zero-based.
inline std::vector<elem> braid_move(const FiniteGroup& g, std::vector<elem> t, std::size_t pos) {
  const elem a = t[pos], b = t[pos + 1];
  t[pos] = g.mul(g.mul(a, b), g.inv(a));
  t[pos + 1] = a;
  return t;
}

inline std::vector<elem> braid_move_inverse(const FiniteGroup& g, std::vector<elem> t, std::size_t pos) {
  const elem a = t[pos], b = t[pos + 1];
  t[pos] = b;
  t[pos + 1] = g.mul(g.mul(g.inv(b), a), b);
  return t;
}

/// Merges conjugation classes that lie in one Hurwitz orbit. The closure runs
/// over all tuples reachable by braid moves, including reordered signatures;
/// each merged class is represented by its smallest input representative and
/// its size is the sum of the merged input sizes.
inline EquivalenceClassSet braid_orbits(const EquivalenceClassSet& in, const EnumerationLimits& lim = {}) {
  EquivalenceClassSet out;
  out.kind = equivalence::conjugation_braid;
  if (in.classes.empty())
    return out;
  const group_ptr& gp = in.classes.front().representative.group;
  const FiniteGroup& g = *gp;
  std::map<std::vector<elem>, std::size_t> input_index;
  for (std::size_t i = 0; i < in.classes.size(); ++i)
    input_index.emplace(canonical_tuple(g, in.classes[i].representative.tuple), i);

  std::set<std::vector<elem>> visited;
  std::vector<bool> merged(in.classes.size(), false);
  for (auto& [start, first_index] : input_index) {
    if (merged[first_index])
      continue;
    EquivalenceClass cls{in.classes[first_index].representative, 0};
    std::vector<std::vector<elem>> queue{start};
    visited.insert(start);
    while (!queue.empty()) {
      auto t = std::move(queue.back());
      queue.pop_back();
      if (auto it = input_index.find(t); it != input_index.end() && !merged[it->second]) {
        merged[it->second] = true;
        cls.size += in.classes[it->second].size;
      }
      for (std::size_t pos = 0; pos + 1 < t.size(); ++pos)
        for (auto next : {braid_move(g, t, pos), braid_move_inverse(g, t, pos)}) {
          auto c = canonical_tuple(g, next);
          if (visited.insert(c).second) {
            if (static_cast<long long>(visited.size()) > lim.orbit_cap)
              fail(error_kind::size_limit, "braid orbit exceeds the cap");
            queue.push_back(std::move(c));
          }
        }
    }
    out.classes.push_back(std::move(cls));
  }
  std::sort(out.classes.begin(), out.classes.end(), [](const auto& a, const auto& b) {
    return a.representative.tuple < b.representative.tuple;
  });
  return out;
}

} // namespace galcover
