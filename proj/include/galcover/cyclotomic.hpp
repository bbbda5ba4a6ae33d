#pragma once

// Exact arithmetic in Q(zeta_e).
//
// Values are kept reduced modulo the e-th cyclotomic polynomial, so the
// coefficient vector (length phi(e), basis 1, z, ..., z^(phi-1)) is canonical
// and equality is plain coefficient comparison.

#include <boost/rational.hpp>

#include <algorithm>

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "galcover/error.hpp"

namespace galcover {

using rational = boost::rational<long long>;

inline std::string to_string(const rational& q) {
  if (q.denominator() == 1)
    return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

namespace detail {

using int_poly = std::vector<long long>; // low degree first

inline int_poly poly_divide_exact(int_poly num, const int_poly& den) {
  const std::size_t dn = den.size() - 1;
  int_poly q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const long long c = num[i]; // den is monic
    q[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j)
      num[i - dn + j] -= c * den[j];
  }
  for (std::size_t i = 0; i < dn; ++i)
    ensure(num[i] == 0, "cyclotomic polynomial division left a remainder");
  return q;
}

inline const int_poly& cyclotomic_polynomial(int n) {
  static std::mutex mu;
  static std::map<int, int_poly> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(n); it != cache.end())
    return it->second;
  // Fill every divisor in increasing order; each one only needs smaller ones.
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0 || cache.contains(d))
      continue;
    int_poly p(d + 1, 0);
    p[0] = -1;
    p[d] = 1;
    for (int e = 1; e < d; ++e)
      if (d % e == 0)
        p = poly_divide_exact(std::move(p), cache.at(e));
    cache.emplace(d, std::move(p));
  }
  return cache.at(n);
}

inline int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0)
        n /= p;
      result -= result / p;
    }
  if (n > 1)
    result -= result / n;
  return result;
}

} // namespace detail

class Cyclotomic {
public:
  Cyclotomic() : e_(1), c_{rational(0)} {}

  static Cyclotomic from_rational(int conductor, rational v) {
    check_conductor(conductor);
    Cyclotomic z(conductor);
    z.c_[0] = v;
    return z;
  }
  static Cyclotomic integer(int conductor, long long v) { return from_rational(conductor, v); }

  /// zeta_e^power with zeta_e = exp(2 pi i / e).
  static Cyclotomic zeta(int conductor, long long power) {
    check_conductor(conductor);
    std::vector<rational> dense(conductor, rational(0));
    dense[mod(power, conductor)] = 1;
    return Cyclotomic(conductor, std::move(dense));
  }

  int conductor() const noexcept { return e_; }
  const std::vector<rational>& coefficients() const noexcept { return c_; }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const rational& q) { return q.numerator() == 0; });
  }
  bool is_rational() const {
    return std::all_of(c_.begin() + 1, c_.end(), [](const rational& q) { return q.numerator() == 0; });
  }
  std::optional<rational> to_rational() const {
    if (!is_rational())
      return std::nullopt;
    return c_[0];
  }
  std::optional<long long> to_integer() const {
    auto q = to_rational();
    if (!q || q->denominator() != 1)
      return std::nullopt;
    return q->numerator();
  }

  Cyclotomic lifted(int conductor) const {
    if (conductor == e_)
      return *this;
    if (conductor % e_ != 0)
      fail(error_kind::inconsistency, "cannot lift Q(zeta_" + std::to_string(e_) +
                                          ") into Q(zeta_" + std::to_string(conductor) + ")");
    const int step = conductor / e_;
    std::vector<rational> dense(conductor, rational(0));
    for (std::size_t t = 0; t < c_.size(); ++t)
      dense[t * step] = c_[t];
    return Cyclotomic(conductor, std::move(dense));
  }

  /// The automorphism zeta -> zeta^k, k a unit mod e.
  Cyclotomic galois(long long k) const {
    const long long km = mod(k, e_);
    if (std::gcd(km, static_cast<long long>(e_)) != 1)
      fail(error_kind::invalid_parameter, "galois exponent must be a unit mod the conductor");
    std::vector<rational> dense(e_, rational(0));
    for (std::size_t t = 0; t < c_.size(); ++t)
      dense[mod(km * static_cast<long long>(t), e_)] += c_[t];
    return Cyclotomic(e_, std::move(dense));
  }
  Cyclotomic conj() const { return galois(-1); }

  Cyclotomic& operator+=(const Cyclotomic& o) {
    align(o);
    Cyclotomic b = o.lifted(e_);
    for (std::size_t t = 0; t < c_.size(); ++t)
      c_[t] += b.c_[t];
    return *this;
  }
  Cyclotomic& operator-=(const Cyclotomic& o) {
    align(o);
    Cyclotomic b = o.lifted(e_);
    for (std::size_t t = 0; t < c_.size(); ++t)
      c_[t] -= b.c_[t];
    return *this;
  }
  Cyclotomic& operator*=(const Cyclotomic& o) {
    align(o);
    Cyclotomic b = o.lifted(e_);
    std::vector<rational> dense(2 * c_.size() - 1, rational(0));
    for (std::size_t s = 0; s < c_.size(); ++s) {
      if (c_[s].numerator() == 0)
        continue;
      for (std::size_t t = 0; t < b.c_.size(); ++t)
        if (b.c_[t].numerator() != 0)
          dense[s + t] += c_[s] * b.c_[t];
    }
    c_ = reduce(e_, std::move(dense));
    return *this;
  }
  Cyclotomic& operator*=(const rational& q) {
    for (auto& c : c_)
      c *= q;
    return *this;
  }
  Cyclotomic& operator/=(const rational& q) {
    if (q.numerator() == 0)
      fail(error_kind::inconsistency, "division by zero");
    for (auto& c : c_)
      c /= q;
    return *this;
  }

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const rational& q) { return a *= q; }
  friend Cyclotomic operator/(Cyclotomic a, const rational& q) { return a /= q; }
  Cyclotomic operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.c_)
      c = -c;
    return r;
  }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.e_ == b.e_)
      return a.c_ == b.c_;
    const int l = std::lcm(a.e_, b.e_);
    return a.lifted(l).c_ == b.lifted(l).c_;
  }

  // Total order on same-conductor values, used only for canonical sorting.
  friend bool canonical_less(const Cyclotomic& a, const Cyclotomic& b) {
    for (std::size_t t = 0; t < std::min(a.c_.size(), b.c_.size()); ++t)
      if (a.c_[t] != b.c_[t])
        return a.c_[t] < b.c_[t];
    return a.c_.size() < b.c_.size();
  }

  std::complex<double> approx() const {
    std::complex<double> z = 0;
    for (std::size_t t = 0; t < c_.size(); ++t)
      if (c_[t].numerator() != 0)
        z += boost::rational_cast<double>(c_[t]) *
             std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(t) / e_);
    return z;
  }

  /// Word form in the reduced basis, e.g. `-1 + z8^3`, `1/2*z5^2`.
  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t t = 0; t < c_.size(); ++t) {
      rational q = c_[t];
      if (q.numerator() == 0)
        continue;
      const bool neg = q.numerator() < 0;
      if (neg)
        q = -q;
      if (first)
        os << (neg ? "-" : "");
      else
        os << (neg ? " - " : " + ");
      first = false;
      std::string power = t == 0   ? ""
                          : t == 1 ? "z" + std::to_string(e_)
                                   : "z" + std::to_string(e_) + "^" + std::to_string(t);
      if (t == 0)
        os << galcover::to_string(q);
      else if (q == rational(1))
        os << power;
      else
        os << galcover::to_string(q) << "*" << power;
    }
    return first ? "0" : os.str();
  }

private:
  explicit Cyclotomic(int e) : e_(e), c_(detail::euler_phi(e), rational(0)) {}
  Cyclotomic(int e, std::vector<rational> dense) : e_(e), c_(reduce(e, std::move(dense))) {}

  static void check_conductor(int e) {
    if (e < 1 || e > 10000)
      fail(error_kind::invalid_parameter, "conductor out of range");
  }

  static long long mod(long long a, long long m) { return ((a % m) + m) % m; }

  static std::vector<rational> reduce(int e, std::vector<rational> dense) {
    const auto& phi = detail::cyclotomic_polynomial(e);
    const std::size_t deg = phi.size() - 1;
    if (dense.size() < deg)
      dense.resize(deg, rational(0));
    for (std::size_t i = dense.size(); i-- > deg;) {
      const rational c = dense[i];
      if (c.numerator() == 0)
        continue;
      for (std::size_t j = 0; j <= deg; ++j)
        dense[i - deg + j] -= c * phi[j];
    }
    dense.resize(deg);
    return dense;
  }

  void align(const Cyclotomic& o) {
    if (o.e_ != e_)
      *this = lifted(std::lcm(e_, o.e_));
  }

  int e_;
  std::vector<rational> c_;
};

} // namespace galcover
