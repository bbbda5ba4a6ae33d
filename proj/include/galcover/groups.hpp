#pragma once

// Finite groups as explicit multiplication tables.
//
// Every group keeps the identity at index 0. Elements are plain indices into
// the table; the group owns the labels and the word grammar used to read and
// print them (`r^3*s`, `-j`, `ij`).

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "galcover/error.hpp"

namespace galcover {

using elem = int;

inline constexpr int default_order_cap = 128;
inline constexpr int default_subgroup_cap = 4096;

enum class flavor_kind { dihedral, quaternion8, cyclic, quotient, generic };

struct flavor {
  flavor_kind kind = flavor_kind::generic;
  int n = 0; // dihedral(n) / cyclic(n); unused otherwise
};

namespace detail {
// One lazily-filled slot per group, used by other modules to cache derived data
// (the character table) without the group knowing about them.
struct lazy_slot {
  std::once_flag once;
  std::shared_ptr<const void> value;
};
} // namespace detail

class FiniteGroup {
public:
  struct parts {
    int order = 0;
    std::vector<elem> table; // row-major, table[a*order+b] = a*b
    std::vector<std::string> labels;
    flavor fl;
    std::string spec;
    std::map<char, elem> generators; // letters accepted by the word grammar
    std::optional<elem> minus;       // element denoted by a leading '-'
  };

  explicit FiniteGroup(parts p, int order_cap = default_order_cap)
      : order_(p.order), table_(std::move(p.table)), labels_(std::move(p.labels)),
        flavor_(p.fl), spec_(std::move(p.spec)), generators_(std::move(p.generators)),
        minus_(p.minus), cache_(std::make_shared<detail::lazy_slot>()) {
    if (order_ < 1)
      fail(error_kind::invalid_parameter, "group order must be positive");
    if (order_ > order_cap)
      fail(error_kind::size_limit, "group order " + std::to_string(order_) +
                                       " exceeds cap " + std::to_string(order_cap));
    if (table_.size() != static_cast<std::size_t>(order_) * order_)
      fail(error_kind::invalid_parameter, "multiplication table has wrong size");
    if (labels_.size() != static_cast<std::size_t>(order_))
      fail(error_kind::invalid_parameter, "need one label per element");
    for (elem x : table_)
      if (x < 0 || x >= order_)
        fail(error_kind::invalid_parameter, "table entry out of range");
    for (elem a = 0; a < order_; ++a)
      if (mul(0, a) != a || mul(a, 0) != a)
        fail(error_kind::invalid_parameter, "element 0 is not a two-sided identity");

    inverse_.assign(order_, -1);
    for (elem a = 0; a < order_; ++a)
      for (elem b = 0; b < order_; ++b)
        if (mul(a, b) == 0 && mul(b, a) == 0) {
          inverse_[a] = b;
          break;
        }
    for (elem a = 0; a < order_; ++a)
      if (inverse_[a] < 0)
        fail(error_kind::invalid_parameter, "element '" + labels_[a] + "' has no inverse");

    order_of_.assign(order_, 0);
    exponent_ = 1;
    for (elem a = 0; a < order_; ++a) {
      int k = 1;
      for (elem x = a; x != 0; x = mul(x, a))
        ++k;
      order_of_[a] = k;
      exponent_ = std::lcm(exponent_, k);
    }

    for (elem a = 0; a < order_; ++a)
      if (!label_index_.emplace(labels_[a], a).second)
        fail(error_kind::invalid_parameter, "duplicate label '" + labels_[a] + "'");
  }

  int order() const noexcept { return order_; }
  elem identity() const noexcept { return 0; }
  elem mul(elem a, elem b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  elem inv(elem a) const { return inverse_[a]; }
  elem conj(elem g, elem x) const { return mul(mul(x, g), inv(x)); } // x g x^-1
  int element_order(elem a) const { return order_of_[a]; }
  int exponent() const noexcept { return exponent_; }
  bool contains(elem a) const noexcept { return a >= 0 && a < order_; }

  elem pow(elem a, long long k) const {
    const long long m = order_of_[a];
    k %= m;
    if (k < 0)
      k += m;
    elem r = 0;
    for (long long t = 0; t < k; ++t)
      r = mul(r, a);
    return r;
  }

  const std::string& label(elem a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const flavor& group_flavor() const noexcept { return flavor_; }
  const std::string& spec() const noexcept { return spec_; }
  const std::map<char, elem>& generators() const noexcept { return generators_; }
  const std::optional<elem>& minus() const noexcept { return minus_; }

  bool is_abelian() const {
    for (elem a = 0; a < order_; ++a)
      for (elem b = a + 1; b < order_; ++b)
        if (mul(a, b) != mul(b, a))
          return false;
    return true;
  }

  // Parses a word like `r^3*s`, `r^-1`, `-j`, `ij`, `1`. Exact labels win.
  elem parse(std::string_view word) const {
    auto trimmed = trim(word);
    if (auto it = label_index_.find(std::string(trimmed)); it != label_index_.end())
      return it->second;
    auto bad = [&](const std::string& why) -> elem {
      fail(error_kind::invalid_parameter,
           "cannot parse element '" + std::string(trimmed) + "' in " + spec_ + ": " + why);
    };
    if (trimmed.empty())
      return bad("empty word");
    std::size_t pos = 0;
    bool negate = false;
    if (trimmed[0] == '-') {
      if (!minus_)
        return bad("leading '-' is not meaningful here");
      negate = true;
      ++pos;
    }
    elem result = 0;
    bool any = false;
    while (pos < trimmed.size()) {
      if (trimmed[pos] == '*') {
        if (!any)
          return bad("dangling '*'");
        ++pos;
        if (pos == trimmed.size())
          return bad("dangling '*'");
      }
      char c = trimmed[pos];
      elem factor;
      if (c == '1') {
        factor = 0;
        ++pos;
      } else if (auto it = generators_.find(c); it != generators_.end()) {
        factor = it->second;
        ++pos;
      } else {
        return bad(std::string("unknown symbol '") + c + "'");
      }
      if (pos < trimmed.size() && trimmed[pos] == '^') {
        ++pos;
        bool neg = false;
        if (pos < trimmed.size() && trimmed[pos] == '-') {
          neg = true;
          ++pos;
        }
        if (pos == trimmed.size() || !std::isdigit(static_cast<unsigned char>(trimmed[pos])))
          return bad("exponent expected after '^'");
        long long e = 0;
        while (pos < trimmed.size() && std::isdigit(static_cast<unsigned char>(trimmed[pos]))) {
          e = e * 10 + (trimmed[pos] - '0');
          if (e > 1'000'000)
            return bad("exponent too large");
          ++pos;
        }
        factor = pow(factor, neg ? -e : e);
      }
      result = mul(result, factor);
      any = true;
    }
    if (!any)
      return bad("empty word");
    return negate ? mul(*minus_, result) : result;
  }

  detail::lazy_slot& cache_slot() const { return *cache_; }

private:
  static std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
      s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
      s.remove_suffix(1);
    return s;
  }

  int order_;
  std::vector<elem> table_;
  std::vector<std::string> labels_;
  flavor flavor_;
  std::string spec_;
  std::map<char, elem> generators_;
  std::optional<elem> minus_;
  std::vector<elem> inverse_;
  std::vector<int> order_of_;
  int exponent_ = 1;
  std::map<std::string, elem, std::less<>> label_index_;
  std::shared_ptr<detail::lazy_slot> cache_;
};

using group_ptr = std::shared_ptr<const FiniteGroup>;

// Exhaustive axiom check; returns a description of the first violation.
inline std::optional<std::string> check_group_axioms(const FiniteGroup& g) {
  const int n = g.order();
  for (elem a = 0; a < n; ++a) {
    if (g.mul(a, g.inv(a)) != 0 || g.mul(g.inv(a), a) != 0)
      return "inverse fails at " + g.label(a);
    if (g.mul(a, 0) != a || g.mul(0, a) != a)
      return "identity fails at " + g.label(a);
    if (g.parse(g.label(a)) != a)
      return "label does not parse back: " + g.label(a);
    for (elem b = 0; b < n; ++b)
      for (elem c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          return "associativity fails at (" + g.label(a) + "," + g.label(b) + "," +
                 g.label(c) + ")";
  }
  return std::nullopt;
}

inline group_ptr make_group_from_table(std::vector<elem> table, std::vector<std::string> labels,
                                       std::string spec = "generic") {
  FiniteGroup::parts p;
  p.order = static_cast<int>(labels.size());
  p.table = std::move(table);
  p.labels = std::move(labels);
  p.fl = {flavor_kind::generic, 0};
  p.spec = std::move(spec);
  auto g = std::make_shared<const FiniteGroup>(std::move(p));
  if (g->order() <= 64)
    if (auto why = check_group_axioms(*g))
      fail(error_kind::invalid_parameter, "not a group: " + *why);
  return g;
}

/// Dihedral group of order 2n, <r, s | r^n = s^2 = (rs)^2 = 1>.
/// Index u is r^u and index n+u is r^u*s.
inline group_ptr make_dihedral(int n) {
  if (n < 2)
    fail(error_kind::invalid_parameter, "dihedral group needs n >= 2");
  const int order = 2 * n;
  FiniteGroup::parts p;
  p.order = order;
  p.table.resize(static_cast<std::size_t>(order) * order);
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y) {
      const int a = x % n, e = x / n, b = y % n, f = y / n;
      // (r^a s^e)(r^b s^f) = r^(a +- b) s^(e+f)
      const int u = ((e ? a - b : a + b) % n + n) % n;
      p.table[static_cast<std::size_t>(x) * order + y] = u + n * (e ^ f);
    }
  auto rot = [](int u) {
    if (u == 0)
      return std::string("1");
    return u == 1 ? std::string("r") : "r^" + std::to_string(u);
  };
  for (int u = 0; u < n; ++u)
    p.labels.push_back(rot(u));
  for (int u = 0; u < n; ++u)
    p.labels.push_back(u == 0 ? std::string("s") : rot(u) + "*s");
  p.fl = {flavor_kind::dihedral, n};
  p.spec = "D:" + std::to_string(n);
  p.generators = {{'r', n == 1 ? 0 : 1}, {'s', n}};
  return std::make_shared<const FiniteGroup>(std::move(p));
}

/// Quaternion group <i, j | i^2 = j^2 = (ij)^2 = -1>.
/// Indices: 1, -1, i, -i, j, -j, k, -k.
inline group_ptr make_quaternion8() {
  // unit product u*v = sign * w over units {1,i,j,k} = {0,1,2,3}
  static constexpr int unit_w[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int unit_s[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  FiniteGroup::parts p;
  p.order = 8;
  p.table.resize(64);
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      const int ux = x / 2, uy = y / 2;
      const int sx = x % 2 ? -1 : 1, sy = y % 2 ? -1 : 1;
      const int sign = sx * sy * unit_s[ux][uy];
      p.table[x * 8 + y] = 2 * unit_w[ux][uy] + (sign < 0 ? 1 : 0);
    }
  p.labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  p.fl = {flavor_kind::quaternion8, 0};
  p.spec = "Q8";
  p.generators = {{'i', 2}, {'j', 4}, {'k', 6}};
  p.minus = 1;
  return std::make_shared<const FiniteGroup>(std::move(p));
}

inline group_ptr make_cyclic(int n) {
  if (n < 1)
    fail(error_kind::invalid_parameter, "cyclic group needs n >= 1");
  FiniteGroup::parts p;
  p.order = n;
  p.table.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      p.table[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  for (int u = 0; u < n; ++u)
    p.labels.push_back(u == 0 ? "1" : u == 1 ? "r" : "r^" + std::to_string(u));
  p.fl = {flavor_kind::cyclic, n};
  p.spec = "C:" + std::to_string(n);
  p.generators = {{'r', n == 1 ? 0 : 1}};
  return std::make_shared<const FiniteGroup>(std::move(p));
}

/// Group spec grammar: `D:n`, `Q8`, `C:n`.
inline group_ptr make_group(std::string_view spec) {
  auto number = [&](std::string_view digits) {
    if (digits.empty() || digits.size() > 6 ||
        !std::all_of(digits.begin(), digits.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      fail(error_kind::invalid_parameter, "bad group spec '" + std::string(spec) + "'");
    return std::stoi(std::string(digits));
  };
  if (spec == "Q8")
    return make_quaternion8();
  if (spec.size() > 2 && spec[1] == ':') {
    if (spec[0] == 'D')
      return make_dihedral(number(spec.substr(2)));
    if (spec[0] == 'C')
      return make_cyclic(number(spec.substr(2)));
  }
  fail(error_kind::invalid_parameter,
       "bad group spec '" + std::string(spec) + "' (expected D:n, Q8 or C:n)");
}

class Subgroup {
public:
  Subgroup() = default;
  Subgroup(std::vector<elem> members, int parent_order) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    mask_.assign(parent_order, false);
    for (elem x : members_)
      mask_.at(x) = true;
  }

  const std::vector<elem>& members() const noexcept { return members_; }
  int size() const noexcept { return static_cast<int>(members_.size()); }
  int parent_order() const noexcept { return static_cast<int>(mask_.size()); }
  bool contains(elem x) const { return x >= 0 && x < parent_order() && mask_[x]; }
  bool is_trivial() const noexcept { return members_.size() == 1; }
  bool is_subset_of(const Subgroup& k) const {
    return std::all_of(members_.begin(), members_.end(), [&](elem x) { return k.contains(x); });
  }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }
  friend bool operator<(const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size())
      return a.size() < b.size();
    return a.members_ < b.members_;
  }

private:
  std::vector<elem> members_;
  std::vector<bool> mask_;
};

inline int element_order(const FiniteGroup& g, elem x) { return g.element_order(x); }

/// Conjugacy classes, each sorted, ordered by smallest member (identity first).
inline std::vector<std::vector<elem>> conjugacy_classes(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<int> seen(n, 0);
  std::vector<std::vector<elem>> classes;
  for (elem a = 0; a < n; ++a) {
    if (seen[a])
      continue;
    std::vector<elem> cls;
    for (elem x = 0; x < n; ++x) {
      elem c = g.conj(a, x);
      if (!seen[c]) {
        seen[c] = 1;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

inline Subgroup trivial_subgroup(const FiniteGroup& g) { return Subgroup({0}, g.order()); }

inline Subgroup whole_group(const FiniteGroup& g) {
  std::vector<elem> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(std::move(all), g.order());
}

inline Subgroup center(const FiniteGroup& g) {
  std::vector<elem> z;
  for (elem a = 0; a < g.order(); ++a) {
    bool central = true;
    for (elem b = 0; b < g.order() && central; ++b)
      central = g.mul(a, b) == g.mul(b, a);
    if (central)
      z.push_back(a);
  }
  return Subgroup(std::move(z), g.order());
}

inline Subgroup subgroup_generated(const FiniteGroup& g, std::span<const elem> gens) {
  for (elem s : gens)
    if (!g.contains(s))
      fail(error_kind::invalid_parameter, "generator index out of range");
  std::vector<bool> in(g.order(), false);
  std::vector<elem> members{0}, queue{0};
  in[0] = true;
  while (!queue.empty()) {
    elem x = queue.back();
    queue.pop_back();
    for (elem s : gens) {
      elem y = g.mul(x, s);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
        queue.push_back(y);
      }
    }
  }
  return Subgroup(std::move(members), g.order());
}

inline Subgroup subgroup_generated(const FiniteGroup& g, std::initializer_list<elem> gens) {
  return subgroup_generated(g, std::span<const elem>(gens.begin(), gens.size()));
}

inline bool is_subgroup(const FiniteGroup& g, const Subgroup& h) {
  if (h.parent_order() != g.order() || !h.contains(0))
    return false;
  for (elem a : h.members())
    for (elem b : h.members())
      if (!h.contains(g.mul(a, g.inv(b))))
        return false;
  return true;
}

inline bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  if (!is_subgroup(g, h))
    fail(error_kind::not_subgroup, "set is not a subgroup of " + g.spec());
  for (elem a : h.members())
    for (elem x = 0; x < g.order(); ++x)
      if (!h.contains(g.conj(a, x)))
        return false;
  return true;
}

namespace detail {
inline Subgroup join(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  std::vector<elem> gens = a.members();
  gens.insert(gens.end(), b.members().begin(), b.members().end());
  return subgroup_generated(g, gens);
}

// Closes a set of subgroups under pairwise joins.
inline std::vector<Subgroup> join_closure(const FiniteGroup& g, std::set<Subgroup> found,
                                          int cap) {
  std::vector<Subgroup> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    std::vector<Subgroup> snapshot(found.begin(), found.end());
    for (const auto& a : frontier)
      for (const auto& b : snapshot) {
        if (a.is_subset_of(b) || b.is_subset_of(a))
          continue;
        Subgroup j = join(g, a, b);
        if (found.insert(j).second) {
          next.push_back(j);
          if (static_cast<int>(found.size()) > cap)
            fail(error_kind::size_limit, "subgroup lattice exceeds cap");
        }
      }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}
} // namespace detail

/// All normal subgroups, ordered by size then members. Each normal subgroup
/// is the join of the normal closures of the classes it contains.
inline std::vector<Subgroup> normal_subgroups(const FiniteGroup& g,
                                              int cap = default_subgroup_cap) {
  std::set<Subgroup> found{trivial_subgroup(g)};
  for (const auto& cls : conjugacy_classes(g))
    found.insert(subgroup_generated(g, cls));
  return detail::join_closure(g, std::move(found), cap);
}

/// All subgroups, as joins of cyclic subgroups.
inline std::vector<Subgroup> all_subgroups(const FiniteGroup& g, int cap = default_subgroup_cap) {
  std::set<Subgroup> found{trivial_subgroup(g)};
  for (elem a = 0; a < g.order(); ++a)
    found.insert(subgroup_generated(g, {a}));
  return detail::join_closure(g, std::move(found), cap);
}

struct QuotientResult {
  group_ptr group;
  std::vector<elem> projection; // parent element -> coset index
};

/// G/N on cosets numbered by smallest member; cosets are labelled by the label
/// of that member, and the word grammar is inherited through the projection.
inline QuotientResult quotient_group(const group_ptr& gp, const Subgroup& n) {
  const FiniteGroup& g = *gp;
  if (!is_normal(g, n))
    fail(error_kind::not_normal, "subgroup is not normal in " + g.spec());
  std::vector<elem> proj(g.order(), -1);
  std::vector<elem> reps;
  for (elem a = 0; a < g.order(); ++a) {
    if (proj[a] >= 0)
      continue;
    const elem id = static_cast<elem>(reps.size());
    reps.push_back(a);
    for (elem x : n.members())
      proj[g.mul(a, x)] = id;
  }
  const int q = static_cast<int>(reps.size());
  FiniteGroup::parts p;
  p.order = q;
  p.table.resize(static_cast<std::size_t>(q) * q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      p.table[static_cast<std::size_t>(a) * q + b] = proj[g.mul(reps[a], reps[b])];
  for (elem r : reps)
    p.labels.push_back(g.label(r));
  p.fl = {flavor_kind::quotient, 0};
  p.spec = g.spec() + "/N" + std::to_string(n.size());
  for (auto [c, x] : g.generators())
    p.generators[c] = proj[x];
  if (g.minus())
    p.minus = proj[*g.minus()];
  return {std::make_shared<const FiniteGroup>(std::move(p)), std::move(proj)};
}

struct DihedralKind {
  bool reflection = false;
  int exponent = 0; // u for r^u, a for r^a*s

  friend bool operator==(const DihedralKind&, const DihedralKind&) = default;
};

inline DihedralKind dihedral_element_kind(const FiniteGroup& g, elem x) {
  if (g.group_flavor().kind != flavor_kind::dihedral)
    fail(error_kind::wrong_flavor, g.spec() + " is not a dihedral group");
  const int n = g.group_flavor().n;
  return {x >= n, x % n};
}

} // namespace galcover
