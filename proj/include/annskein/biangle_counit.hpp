#pragma once

#include <map>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "annskein/scalars.hpp"

namespace annskein {

/// Boundary states of a source or sink web in the biangle: k states i_j on
/// one edge and n-k states l_{j'} on the other.
struct StatePattern {
  int n = 0;
  int k = 0;
  std::vector<int> i_states;  // size k, values in 1..n
  std::vector<int> l_states;  // size n-k
};

/// Scalars of the co-unit evaluation that live in a figure rather than in
/// prose.  The permutation factor and the folded-leg state factor are pinned
/// relationally by the test suite (symmetric-group sum, peeling, loop
/// coefficients); the absolute bases cancel out of every such check, so they
/// default to 1 but can be overridden from a config file.
struct CounitConstants {
  LaurentScalar perm_factor;                            // default -q
  int state_exponent = -1;                              // folded leg x contributes perm_factor^{state_exponent * x}
  std::map<std::pair<int, int>, LaurentScalar> base_source;  // keyed by (n,k); absent -> 1
  std::map<std::pair<int, int>, LaurentScalar> base_sink;

  static CounitConstants defaults(const RingContext& ctx);
  static CounitConstants from_json(const nlohmann::json& j, const RingContext& ctx);
  nlohmann::json to_json() const;

  LaurentScalar base(bool source, int n, int k) const;
};

/// Inversion count = minimal number of adjacent transpositions.
long long perm_length(const std::vector<int>& one_line);

/// Co-unit of the source web: zero unless the merged states
/// (i_1..i_k, bar l_{n-k}.. bar l_1) form a permutation of 1..n, in which
/// case base * F^{l(row)} * prod_j F^{state_exponent * l_j} with F the
/// permutation factor.
LaurentScalar counit_source(const RingContext& ctx, const StatePattern& p,
                            const CounitConstants& c);
LaurentScalar counit_sink(const RingContext& ctx, const StatePattern& p,
                          const CounitConstants& c);

/// Co-unit of a single strand crossing the biangle.
LaurentScalar counit_through_strand(int i, int j);

/// Brute-force sum over Sym_k of (-q)^{2 l(sigma)}; equals q^{k(k-1)/2} [k]!.
LaurentScalar qsum_over_symmetric_group(const RingContext& ctx, int k);

}  // namespace annskein
