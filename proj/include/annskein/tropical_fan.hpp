#pragma once

#include <boost/rational.hpp>
#include <map>
#include <optional>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "annskein/quantum_torus.hpp"

namespace annskein {

using Rat = boost::rational<long long>;

/// Exact-valued function on the non-corner triangle vertices; corners read 0.
struct TriangleFunction {
  int n = 0;
  std::vector<Rat> values;  // indexed like DiscreteTriangle::build(n)

  static TriangleFunction zero(const DiscreteTriangle& tri);
  Rat value(const DiscreteTriangle& tri, const Vertex& v) const;  // corners -> 0

  TriangleFunction operator+(const TriangleFunction& o) const;
  TriangleFunction operator-(const TriangleFunction& o) const;
  TriangleFunction scaled(long long c) const;
  bool operator==(const TriangleFunction&) const = default;

  nlohmann::json to_json(const DiscreteTriangle& tri) const;
  static TriangleFunction from_json(const nlohmann::json& j);
};

enum class Side { left, right };

/// t^L_k(a,b,c) = min{f_k(a), g_k(a)}, t^R_k(a,b,c) = min{f_k(n-a), g_k(n-a)}
/// with f_k(x) = kx and g_k(x) = n(n-k) - (n-k)x.
TriangleFunction tropical_t(int n, int k, Side side);

/// The three rhombus-number arrays, 1 <= i <= n-1, 1 <= j <= n-i.
struct RhombusNumbers {
  int n = 0;
  std::vector<std::vector<Rat>> top, bottom_left, bottom_right;  // [i-1][j-1]
};

RhombusNumbers rhombus(const TriangleFunction& f);

enum class FanClass { none, lattice, fan, cone_c };

/// Strongest class: lattice (integer rhombi), fan (natural rhombi),
/// cone_c (fan and zero on a = 0).
FanClass fan_membership(const TriangleFunction& f);

struct HilbertReport {
  int n = 0;
  long long bound = 0;
  std::vector<TriangleFunction> members;  // cone members with values <= bound
  std::vector<TriangleFunction> basis;    // irreducible members
  bool certified = false;                 // true when bound guarantees completeness
};

/// Brute-force enumeration of cone members among level functions (values
/// constant on a-levels, denominator dividing n) with all values <= bound,
/// and extraction of the irreducible elements.
HilbertReport hilbert_basis(int n, long long bound);

struct AnnulusFanPoint {
  TriangleFunction left, right;
};

struct AnnulusFanReport {
  std::vector<AnnulusFanPoint> points;
  bool gluing_ok = false;    // every point satisfies the edge identifications
  bool converse_ok = false;  // every glued cone pair within the bound is a point
  bool distinct = false;
};

/// All (sum m_k t^L_k, sum m_k t^R_k) with sum m_k <= max_total.
AnnulusFanReport annulus_fan_points(int n, long long max_total);

bool gluing_holds(const DiscreteTriangle& tri, const TriangleFunction& fl,
                  const TriangleFunction& fr);

/// T_{ij} = t^R_j(n-i) as integers (t^R_k is constant on a-levels).
std::vector<std::vector<long long>> t_matrix(int n);
/// The displayed inverse: (1/n) * band with 2 on the anti-diagonal and -1
/// beside it.  Returns n * T^{-1} as integers.
std::vector<std::vector<long long>> t_matrix_inverse_times_n(int n);
bool t_matrix_identity_holds(int n);

}  // namespace annskein
