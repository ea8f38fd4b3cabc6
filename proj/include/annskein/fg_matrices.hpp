#pragma once

#include <optional>
#include <vector>

#include "annskein/quantum_torus.hpp"

namespace annskein {

/// n x n matrix with entries in one triangle's quantum torus.
struct QMatrix {
  int n = 0;
  std::vector<TorusElement> entries;  // row-major, n*n

  const TorusElement& at(int i, int j) const { return entries[(i - 1) * n + (j - 1)]; }
  TorusElement& at(int i, int j) { return entries[(i - 1) * n + (j - 1)]; }
  static QMatrix zero(int n) { return QMatrix{n, std::vector<TorusElement>(n * n)}; }
};

/// Commutative Laurent matrix used while assembling the standard matrices;
/// the Weyl ordering is applied entrywise only at the very end.
struct CMatrix {
  int n = 0;
  int dim = 0;  // number of torus generators
  std::vector<std::map<ExpVec, BigInt>> entries;  // row-major

  static CMatrix zero(int n, int dim);
  static CMatrix identity(int n, int dim);
  std::map<ExpVec, BigInt>& at(int i, int j) { return entries[(i - 1) * n + (j - 1)]; }
  const std::map<ExpVec, BigInt>& at(int i, int j) const { return entries[(i - 1) * n + (j - 1)]; }
};

CMatrix cmul(const CMatrix& a, const CMatrix& b);

/// E_j(Z) = Z^{-j/n} diag(Z ... Z, 1 ... 1) with Z repeated j times.
CMatrix elem_edge_c(const DiscreteTriangle& tri, int j, const Vertex& Z);
/// L_j(X) = X^{-(j-1)/n} diag(X ... X, [[1,1],[0,1]], 1 ... 1), block at (j, j+1).
CMatrix elem_left_c(const DiscreteTriangle& tri, int j, std::optional<Vertex> X);
/// R_j(X) = X^{+(j-1)/n} diag(1 ... 1, [[1,0],[1,1]], X^{-1} ... X^{-1}), block at (j, j+1).
CMatrix elem_right_c(const DiscreteTriangle& tri, int j, std::optional<Vertex> X);

QMatrix to_qmatrix(const CMatrix& m);

QMatrix elem_edge(const DiscreteTriangle& tri, int j, const Vertex& Z);
QMatrix elem_left(const DiscreteTriangle& tri, int j, std::optional<Vertex> X = std::nullopt);
QMatrix elem_right(const DiscreteTriangle& tri, int j, std::optional<Vertex> X = std::nullopt);

/// Standard quantum left matrix L^w: entries are Weyl orderings of the
/// commutative product E(Z) M^left E(Z') with indices reversed (i -> n+1-i),
/// where Z_j = X_{j,0,n-j} and Z'_j = X_{j,n-j,0}.  Lower triangular.
QMatrix left_matrix(const DiscreteTriangle& tri);

/// Standard quantum right matrix R^w, from E(Z) M^right E(Z'') with
/// Z''_j = X_{0,j,n-j}.  Upper triangular.
QMatrix right_matrix(const DiscreteTriangle& tri);

/// Inverse of a lower triangular quantum matrix with unit-monomial diagonal
/// entries, by forward substitution over the torus.
QMatrix invert_lower_triangular(const QMatrix& m, const QuiverForm& P);

/// Matrix of the orientation-reversed standard left arc: the inverse left
/// matrix with both indices reversed, rev(t,s) = (L^w)^{-1}(n+1-t, n+1-s).
/// Upper triangular.
QMatrix reversed_left_matrix(const DiscreteTriangle& tri, const QuiverForm& P);

/// Relabel every exponent entry by (a,b,c) -> (c,a,b), `steps` times.
/// The quiver form is invariant under this relabeling (checked at build time),
/// so Weyl-basis coefficients carry over unchanged.
TorusElement rotate_vertices(const TorusElement& e, const DiscreteTriangle& tri, int steps);
QMatrix rotate_matrix(const QMatrix& m, const DiscreteTriangle& tri, int steps);

}  // namespace annskein
