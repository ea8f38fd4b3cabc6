#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "annskein/biangle_counit.hpp"
#include "annskein/fg_matrices.hpp"
#include "annskein/quantum_torus.hpp"
#include "annskein/tropical_fan.hpp"

namespace annskein {

/// Everything needed to run state sums over the two-triangle annulus
/// triangulation.  Both legs of the tensor algebra use a copy of the same
/// triangle torus; the left leg's arcs of reversed orientation are traced
/// with the once-rotated right matrix (frozen by the peeling cross-check).
struct AnnulusContext {
  RingContext ring;
  DiscreteTriangle tri;
  QuiverForm quiver;
  QMatrix left;           // standard quantum left matrix, both arc families
  QMatrix reversed_left;  // matrix of the reversed left-leg arc: rotate(R^w, 1)
  CounitConstants counit;

  static AnnulusContext make(int n);
  static AnnulusContext make(int n, CounitConstants counit);
};

struct TraceReport {
  TensorElement element;
  std::optional<TensorElement::Key> highest;
  LaurentScalar coefficient;  // Weyl coefficient of the highest term, if any
};

/// State sum for the k-th irreducible basis web over the split triangulation:
/// sink co-unit x source co-unit x ordered products of left-matrix entries in
/// the two triangles, summed over compatible states.
TensorElement trace_basis_web(const AnnulusContext& ctx, int k);

TraceReport report_of(const AnnulusContext& ctx, const TensorElement& e);

/// Product of basis-web traces with the given multiplicities.
TraceReport trace_monomial(const AnnulusContext& ctx, const std::vector<long long>& powers);

/// Trace of the simple counterclockwise loop: contraction of the reversed
/// left-leg matrix against the right-leg left matrix through the two
/// biangles, sum_{s,t} M_rev(t,s) (x) L(s,t).
TraceReport trace_simple_loop(const AnnulusContext& ctx);

struct IndependenceReport {
  int n = 0;
  long long max_total = 0;
  std::size_t vector_count = 0;
  bool degrees_distinct = false;
  bool t_matrix_ok = false;
  bool ok() const { return degrees_distinct && t_matrix_ok; }
};

/// Injectivity of m -> sum m_k t^R_k on a-level values, plus the T-matrix
/// inverse identity.
IndependenceReport independence_check(int n, long long max_total);

}  // namespace annskein
