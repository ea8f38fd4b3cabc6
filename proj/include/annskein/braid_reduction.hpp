#pragma once

#include <complex>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "annskein/scalars.hpp"

namespace annskein {

/// Braid word on `strands` strands; a letter (i, s) is sigma_i^s, s = +-1,
/// 1 <= i <= strands-1, read bottom to top.
struct BraidWord {
  int strands = 0;
  std::vector<std::pair<int, int>> letters;

  bool operator==(const BraidWord&) const = default;
  bool operator<(const BraidWord& o) const {
    return std::tie(strands, letters) < std::tie(o.strands, o.letters);
  }
};

/// Constants of the local relations; overridable from a config file.
/// Defaults: alpha_plus X_+ + alpha_minus X_- = alpha_zero X_0 with
/// alpha_plus = q^{1/n}, alpha_minus = -q^{-1/n}, alpha_zero = q - q^{-1};
/// positive kink q^{(n^2-1)/n}; unknot [n].
struct SkeinConstants {
  LaurentScalar alpha_plus, alpha_minus, alpha_zero, kink, unknot;

  static SkeinConstants defaults(const RingContext& ctx);
  static SkeinConstants from_json(const nlohmann::json& j, const RingContext& ctx);
  nlohmann::json to_json() const;
};

/// Exact linear combination of commutative monomials in the power knots:
/// keys are weakly decreasing multisets {m_1,...,m_p}, m_j >= 1.
class GammaPolynomial {
 public:
  GammaPolynomial() = default;
  static GammaPolynomial monomial(std::vector<int> gammas, LaurentScalar c);

  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, LaurentScalar>& terms() const { return terms_; }
  LaurentScalar coeff(const std::vector<int>& gammas) const;
  GammaPolynomial& add(const std::vector<int>& gammas, const LaurentScalar& c);
  GammaPolynomial& operator+=(const GammaPolynomial& o);
  GammaPolynomial scaled(const LaurentScalar& c) const;
  bool operator==(const GammaPolynomial&) const = default;

  nlohmann::json to_json() const;

 private:
  std::map<std::vector<int>, LaurentScalar> terms_;
};

/// Cycle decomposition and per-component self-writhe of a braid closure.
struct ClosureState {
  BraidWord word;
  std::vector<std::vector<int>> components;  // strand ids (starting slots, 1-based)
  std::vector<long long> self_writhe;        // per component
};

ClosureState analyze_closure(const BraidWord& w);

enum class ResolutionStrategy { leftmost_bad, rightmost_bad };

/// Reduce the annular closure of a braid word to gamma-monomials by crossing
/// switches toward the fixed ascending pattern (spawning smoothed terms) and
/// framing-corrected identification of terminal words.
GammaPolynomial close_and_reduce(const RingContext& ctx, const BraidWord& w,
                                 const SkeinConstants& c,
                                 ResolutionStrategy strategy = ResolutionStrategy::leftmost_bad);

/// Coefficient of the single-cycle monomial {strands} in the reduction.
LaurentScalar p_beta(const RingContext& ctx, const BraidWord& w, const SkeinConstants& c);

/// Positive permutation braid of a one-line permutation (entries 1..m).
BraidWord positive_permutation_braid(const std::vector<int>& one_line);

/// P_i = sum over Sym_i of (-q^{(1-n)/n})^{l(sigma)} P_{positive lift of sigma}.
LaurentScalar p_i(const RingContext& ctx, int i, const SkeinConstants& c);

/// Closed form (-1)^{i-1} q^{-(i-1)^2 + (i-1)/n} prod_{j=2..i-1} (1 + q^2 + ... + q^{2(j-1)}),
/// the expanded product over the (2j)-roots of unity other than +-1.  i <= 4.
LaurentScalar p_closed_form(const RingContext& ctx, int i);

struct ClosedFormReport {
  int i = 0;
  LaurentScalar p;                          // computed P_i
  std::optional<LaurentScalar> closed_form; // present for i <= 4
  bool match = false;
  bool root_finding_ok = false;
  std::vector<std::complex<double>> roots;  // roots of P_i in q^{1/n}
  bool roots_in_bad_set = false;            // each corresponding q is in Q
};

ClosedFormReport verify_p_closed_form(const RingContext& ctx, int i, const SkeinConstants& c);

/// Roots of a Laurent polynomial whose w-exponents are multiples of 2n, read
/// as a polynomial in x = q^{1/n}.  Durand-Kerner; ok=false on non-convergence.
std::vector<std::complex<double>> laurent_roots_in_qn(const RingContext& ctx,
                                                      const LaurentScalar& s, bool& ok);

}  // namespace annskein
