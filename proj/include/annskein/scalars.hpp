#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace annskein {

using BigInt = boost::multiprecision::cpp_int;

/// Exact Laurent polynomial with integer coefficients in the formal variable
/// w = omega^{1/2}.  All other quantities of interest are powers of w:
/// omega = w^2, q^{1/n} = w^{2n}, q = w^{2n^2}.  Terms are kept sorted by
/// exponent with no zero coefficients, so equality is representational.
class LaurentScalar {
 public:
  using Term = std::pair<std::int64_t, BigInt>;

  LaurentScalar() = default;  // zero

  static LaurentScalar from_int(long long v);
  static LaurentScalar monomial(std::int64_t exp, BigInt coeff = BigInt(1));

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_single_term() const { return terms_.size() == 1; }
  /// Single term with coefficient +1 or -1 (invertible in the ring).
  bool is_unit_monomial() const;

  std::int64_t min_exp() const;  // throws on zero
  std::int64_t max_exp() const;
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  BigInt coeff_at(std::int64_t exp) const;

  LaurentScalar operator-() const;
  LaurentScalar& operator+=(const LaurentScalar& o);
  LaurentScalar& operator-=(const LaurentScalar& o);
  LaurentScalar& operator*=(const LaurentScalar& o);
  friend LaurentScalar operator+(LaurentScalar a, const LaurentScalar& b) { return a += b; }
  friend LaurentScalar operator-(LaurentScalar a, const LaurentScalar& b) { return a -= b; }
  friend LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b);
  bool operator==(const LaurentScalar& o) const = default;

  /// Multiply by the inverse of a unit monomial.  Throws if `u` is not one.
  LaurentScalar div_unit(const LaurentScalar& u) const;
  /// Exact division; nullopt if `d` does not divide evenly (or d == 0).
  std::optional<LaurentScalar> divided_by(const LaurentScalar& d) const;

  LaurentScalar pow(long long e) const;  // e >= 0, or unit monomial for e < 0

  std::complex<double> eval(std::complex<double> w_half) const;

  nlohmann::json to_json() const;
  static LaurentScalar from_json(const nlohmann::json& j);
  std::string to_string() const;  // human-readable, for diagnostics

 private:
  std::vector<Term> terms_;
  void normalize();
};

/// Fixed rank n >= 2.  Converts between the meaningful quantities and
/// w-exponents; every exponent conversion in the code base goes through here.
struct RingContext {
  int n;

  explicit RingContext(int n_) : n(n_) {}

  std::int64_t q_exp() const { return 2LL * n * n; }    // q = w^{2n^2}
  std::int64_t qn_exp() const { return 2LL * n; }       // q^{1/n} = w^{2n}
  std::int64_t omega_exp() const { return 2; }          // omega = w^2

  LaurentScalar q(std::int64_t power = 1) const { return LaurentScalar::monomial(q_exp() * power); }
  LaurentScalar q_root_n(std::int64_t power = 1) const { return LaurentScalar::monomial(qn_exp() * power); }
  LaurentScalar omega(std::int64_t power = 1) const { return LaurentScalar::monomial(omega_exp() * power); }
  LaurentScalar omega_half(std::int64_t power = 1) const { return LaurentScalar::monomial(power); }
};

/// Quantum integer [m] = sum_{i=1..m} q^{-m-1+2i}; [0] = 0.
LaurentScalar qint(const RingContext& ctx, long long m);

/// Quantum factorial [m]! = [1][2]...[m]; [0]! = 1.
LaurentScalar qfact(const RingContext& ctx, long long m);

/// Substitute a complex value for w = omega^{1/2}.  Throws on w_half == 0.
std::complex<double> eval_numeric(const LaurentScalar& s, std::complex<double> w_half);

/// True iff q is within tol of the unit circle, q^{2m} is within tol of 1 for
/// some m in 2..n-1, and q is not within tol of +-1.
bool in_bad_set(std::complex<double> q, int n, double tol = 1e-9);

/// Integer power of a complex number by repeated squaring.
std::complex<double> cpow_int(std::complex<double> z, std::int64_t e);

}  // namespace annskein
