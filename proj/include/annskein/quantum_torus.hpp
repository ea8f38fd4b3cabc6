#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "annskein/scalars.hpp"

namespace annskein {

/// Lattice point (a,b,c) with a+b+c = n.
struct Vertex {
  int a = 0, b = 0, c = 0;
  auto operator<=>(const Vertex&) const = default;
  Vertex rotated(int steps = 1) const {  // (a,b,c) -> (c,a,b)
    Vertex v = *this;
    for (int s = 0; s < ((steps % 3) + 3) % 3; ++s) v = Vertex{v.c, v.a, v.b};
    return v;
  }
};

/// The non-corner lattice points of the triangle {a+b+c = n}, in lexicographic
/// order by (a,b,c).  This order is the fixed generator order of the torus.
class DiscreteTriangle {
 public:
  static DiscreteTriangle build(int n);

  int n() const { return n_; }
  int size() const { return static_cast<int>(verts_.size()); }
  const Vertex& vertex(int idx) const { return verts_[idx]; }
  const std::vector<Vertex>& vertices() const { return verts_; }
  int index_of(const Vertex& v) const;  // throws if absent (corner or outside)
  bool contains(const Vertex& v) const;
  static bool is_corner(const Vertex& v, int n) { return v.a == n || v.b == n || v.c == n; }
  bool is_interior(int idx) const {
    const Vertex& v = verts_[idx];
    return v.a > 0 && v.b > 0 && v.c > 0;
  }
  bool is_boundary(int idx) const { return !is_interior(idx); }

  bool operator==(const DiscreteTriangle&) const = default;

 private:
  int n_ = 0;
  std::vector<Vertex> verts_;
};

/// Antisymmetric weight matrix of the triangle quiver, entries in {-2..2}.
class QuiverForm {
 public:
  const DiscreteTriangle& triangle() const { return tri_; }
  int p(int u, int v) const { return p_[static_cast<std::size_t>(u) * tri_.size() + v]; }
  int p(const Vertex& u, const Vertex& v) const { return p(tri_.index_of(u), tri_.index_of(v)); }

  /// sum_{u,v} d_u P(u,v) e_v
  std::int64_t pairing(const std::vector<int>& d, const std::vector<int>& e) const;
  /// sum_{u<v} d_u d_v P(u,v), the Weyl exponent input
  std::int64_t ordered_self_pairing(const std::vector<int>& d) const;

  friend QuiverForm build_quiver(const DiscreteTriangle& tri);

 private:
  DiscreteTriangle tri_;
  std::vector<int> p_;
};

QuiverForm build_quiver(const DiscreteTriangle& tri);

/// Exponent vector over the triangle's vertices; entry d_v means X_v^{d_v/n}.
using ExpVec = std::vector<int>;

/// scalar * (ordered product of X_v^{exp_v/n} in the fixed vertex order).
struct TorusMonomial {
  LaurentScalar scalar;
  ExpVec exp;
};

/// Element of the quantum torus, stored as coefficients with respect to the
/// Weyl-ordered monomial basis [X^d].  The representation is unique.
class TorusElement {
 public:
  TorusElement() = default;
  static TorusElement unit(int dim);
  /// coeff * [X^d]
  static TorusElement weyl_term(ExpVec d, LaurentScalar coeff);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<ExpVec, LaurentScalar>& terms() const { return terms_; }
  LaurentScalar weyl_coeff(const ExpVec& d) const;

  TorusElement& add_weyl_term(const ExpVec& d, const LaurentScalar& c);
  TorusElement operator+(const TorusElement& o) const;
  TorusElement scaled(const LaurentScalar& c) const;
  bool operator==(const TorusElement&) const = default;

 private:
  std::map<ExpVec, LaurentScalar> terms_;
};

/// Product in the quantum torus: [X^d][X^e] = w^{d^T P e} [X^{d+e}].
TorusElement mul(const TorusElement& a, const TorusElement& b, const QuiverForm& P);

/// The Weyl-ordered monomial [X^d] written in terms of the ordered product:
/// scalar = w^{-sum_{i<j} d_i d_j P_ij}, which is an integer power of w.
TorusMonomial weyl_order(const ExpVec& d, const QuiverForm& P);

/// Insert an ordered-product monomial (scalar * X^{exp}) into Weyl form.
TorusElement from_ordered_monomial(const TorusMonomial& m, const QuiverForm& P);

inline const ExpVec& degree(const TorusMonomial& m) { return m.exp; }

/// v-wise comparison: a strictly dominates b when a >= b everywhere, a != b.
bool dominates(const ExpVec& a, const ExpVec& b);

/// The unique term whose degree strictly dominates all others, if it exists.
/// The returned scalar is the Weyl-basis coefficient.
std::optional<TorusMonomial> highest_degree(const TorusElement& e);

/// Element of the tensor product of two triangle tori (left, right legs).
class TensorElement {
 public:
  using Key = std::pair<ExpVec, ExpVec>;

  TensorElement() = default;
  static TensorElement unit(int dim_left, int dim_right);
  static TensorElement pure(const TorusElement& l, const TorusElement& r, const QuiverForm& PL,
                            const QuiverForm& PR);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Key, LaurentScalar>& terms() const { return terms_; }
  LaurentScalar weyl_coeff(const Key& k) const;
  TensorElement& add_term(const Key& k, const LaurentScalar& c);
  TensorElement operator+(const TensorElement& o) const;
  TensorElement scaled(const LaurentScalar& c) const;
  bool operator==(const TensorElement&) const = default;

 private:
  std::map<Key, LaurentScalar> terms_;
};

/// Factorwise product with the per-factor omega twists.
TensorElement tensor_mul(const TensorElement& a, const TensorElement& b, const QuiverForm& PL,
                         const QuiverForm& PR);

/// The unique pair of degrees dominating all others in both legs at once.
std::optional<TensorElement::Key> highest_degree_pair(const TensorElement& e);

nlohmann::json torus_element_to_json(const TorusElement& e, const DiscreteTriangle& tri);
nlohmann::json tensor_element_to_json(const TensorElement& e, const DiscreteTriangle& tri);

}  // namespace annskein
