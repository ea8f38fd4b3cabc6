#include "annskein/fg_matrices.hpp"

#include <stdexcept>

namespace annskein {

CMatrix CMatrix::zero(int n, int dim) {
  CMatrix m;
  m.n = n;
  m.dim = dim;
  m.entries.resize(static_cast<std::size_t>(n) * n);
  return m;
}

CMatrix CMatrix::identity(int n, int dim) {
  CMatrix m = zero(n, dim);
  for (int i = 1; i <= n; ++i) m.at(i, i)[ExpVec(dim, 0)] = 1;
  return m;
}

CMatrix cmul(const CMatrix& a, const CMatrix& b) {
  if (a.n != b.n || a.dim != b.dim) throw std::invalid_argument("cmul: shape mismatch");
  CMatrix out = CMatrix::zero(a.n, a.dim);
  ExpVec sum(a.dim);
  for (int i = 1; i <= a.n; ++i)
    for (int k = 1; k <= a.n; ++k) {
      const auto& aik = a.at(i, k);
      if (aik.empty()) continue;
      for (int j = 1; j <= a.n; ++j) {
        const auto& bkj = b.at(k, j);
        if (bkj.empty()) continue;
        auto& out_ij = out.at(i, j);
        for (const auto& [da, ca] : aik)
          for (const auto& [db, cb] : bkj) {
            for (int t = 0; t < a.dim; ++t) sum[t] = da[t] + db[t];
            BigInt prod = ca * cb;
            auto [it, inserted] = out_ij.try_emplace(sum, prod);
            if (!inserted) {
              it->second += prod;
              if (it->second == 0) out_ij.erase(it);
            }
          }
      }
    }
  return out;
}

namespace {
// n/n-units: X^{p/n} stores exponent p at the vertex index.
ExpVec unit_exp(const DiscreteTriangle& tri, const Vertex& v, int p) {
  ExpVec d(tri.size(), 0);
  d[tri.index_of(v)] = p;
  return d;
}

void scale_matrix(CMatrix& m, const DiscreteTriangle& tri, const Vertex& v, int p) {
  if (p == 0) return;
  const int idx = tri.index_of(v);
  for (auto& entry : m.entries) {
    std::map<ExpVec, BigInt> shifted;
    for (auto& [d, c] : entry) {
      ExpVec nd = d;
      nd[idx] += p;
      shifted.emplace(std::move(nd), std::move(c));
    }
    entry = std::move(shifted);
  }
}
}  // namespace

CMatrix elem_edge_c(const DiscreteTriangle& tri, int j, const Vertex& Z) {
  const int n = tri.n();
  if (j < 1 || j > n - 1) throw std::out_of_range("elem_edge: j out of range");
  CMatrix m = CMatrix::zero(n, tri.size());
  for (int i = 1; i <= n; ++i) m.at(i, i)[unit_exp(tri, Z, i <= j ? n : 0)] = 1;
  scale_matrix(m, tri, Z, -j);
  return m;
}

CMatrix elem_left_c(const DiscreteTriangle& tri, int j, std::optional<Vertex> X) {
  const int n = tri.n();
  if (j < 1 || j > n - 1) throw std::out_of_range("elem_left: j out of range");
  if (j > 1 && !X) throw std::invalid_argument("elem_left: X required for j > 1");
  CMatrix m = CMatrix::zero(n, tri.size());
  const ExpVec zero(tri.size(), 0);
  for (int i = 1; i <= n; ++i) {
    int p = (X && i <= j - 1) ? n : 0;
    m.at(i, i)[X ? unit_exp(tri, *X, p) : zero] = 1;
  }
  m.at(j, j + 1)[zero] = 1;
  if (X && j > 1) scale_matrix(m, tri, *X, -(j - 1));
  return m;
}

CMatrix elem_right_c(const DiscreteTriangle& tri, int j, std::optional<Vertex> X) {
  const int n = tri.n();
  if (j < 1 || j > n - 1) throw std::out_of_range("elem_right: j out of range");
  if (j > 1 && !X) throw std::invalid_argument("elem_right: X required for j > 1");
  CMatrix m = CMatrix::zero(n, tri.size());
  const ExpVec zero(tri.size(), 0);
  for (int i = 1; i <= n; ++i) {
    int p = (X && i >= j + 2) ? -n : 0;
    m.at(i, i)[X ? unit_exp(tri, *X, p) : zero] = 1;
  }
  m.at(j + 1, j)[zero] = 1;
  if (X && j > 1) scale_matrix(m, tri, *X, j - 1);
  return m;
}

QMatrix to_qmatrix(const CMatrix& m) {
  QMatrix q = QMatrix::zero(m.n);
  for (int i = 1; i <= m.n; ++i)
    for (int j = 1; j <= m.n; ++j) {
      TorusElement e;
      // Weyl ordering entrywise: each commutative monomial becomes [X^d].
      for (const auto& [d, c] : m.at(i, j))
        e.add_weyl_term(d, LaurentScalar::monomial(0, c));
      q.at(i, j) = e;
    }
  return q;
}

QMatrix elem_edge(const DiscreteTriangle& tri, int j, const Vertex& Z) {
  return to_qmatrix(elem_edge_c(tri, j, Z));
}
QMatrix elem_left(const DiscreteTriangle& tri, int j, std::optional<Vertex> X) {
  return to_qmatrix(elem_left_c(tri, j, X));
}
QMatrix elem_right(const DiscreteTriangle& tri, int j, std::optional<Vertex> X) {
  return to_qmatrix(elem_right_c(tri, j, X));
}

namespace {
CMatrix edge_product(const DiscreteTriangle& tri, const std::vector<Vertex>& Zs) {
  CMatrix m = CMatrix::identity(tri.n(), tri.size());
  for (int j = 1; j <= tri.n() - 1; ++j) m = cmul(m, elem_edge_c(tri, j, Zs[j - 1]));
  return m;
}

CMatrix left_body(const DiscreteTriangle& tri) {
  const int n = tri.n();
  CMatrix m = CMatrix::identity(n, tri.size());
  for (int i = n - 1; i >= 1; --i) {
    m = cmul(m, elem_left_c(tri, 1, std::nullopt));
    for (int j = 2; j <= i; ++j)
      m = cmul(m, elem_left_c(tri, j, Vertex{j - 1, n - i, i - j + 1}));
  }
  return m;
}

CMatrix right_body(const DiscreteTriangle& tri) {
  const int n = tri.n();
  CMatrix m = CMatrix::identity(n, tri.size());
  for (int i = n - 1; i >= 1; --i) {
    m = cmul(m, elem_right_c(tri, 1, std::nullopt));
    for (int j = 2; j <= i; ++j)
      m = cmul(m, elem_right_c(tri, j, Vertex{i - j + 1, n - i, j - 1}));
  }
  return m;
}

QMatrix reverse_and_weyl(const CMatrix& m) {
  const int n = m.n;
  QMatrix q = QMatrix::zero(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      TorusElement e;
      for (const auto& [d, c] : m.at(n + 1 - i, n + 1 - j))
        e.add_weyl_term(d, LaurentScalar::monomial(0, c));
      q.at(i, j) = e;
    }
  return q;
}
}  // namespace

QMatrix left_matrix(const DiscreteTriangle& tri) {
  const int n = tri.n();
  std::vector<Vertex> Z, Zp;
  for (int j = 1; j <= n - 1; ++j) {
    Z.push_back(Vertex{j, 0, n - j});
    Zp.push_back(Vertex{j, n - j, 0});
  }
  CMatrix m = cmul(cmul(edge_product(tri, Z), left_body(tri)), edge_product(tri, Zp));
  return reverse_and_weyl(m);
}

QMatrix right_matrix(const DiscreteTriangle& tri) {
  const int n = tri.n();
  std::vector<Vertex> Z, Zpp;
  for (int j = 1; j <= n - 1; ++j) {
    Z.push_back(Vertex{j, 0, n - j});
    Zpp.push_back(Vertex{0, j, n - j});
  }
  CMatrix m = cmul(cmul(edge_product(tri, Z), right_body(tri)), edge_product(tri, Zpp));
  return reverse_and_weyl(m);
}

namespace {
TorusElement invert_monomial(const TorusElement& e, const QuiverForm& P) {
  if (e.term_count() != 1) throw std::domain_error("invert: not a monomial");
  const auto& [d, c] = *e.terms().begin();
  if (!c.is_unit_monomial()) throw std::domain_error("invert: coefficient not a unit");
  ExpVec nd(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) nd[i] = -d[i];
  // [X^d]^{-1} = w^{d^T P d = 0} [X^{-d}] up to the pairing twist
  LaurentScalar inv_c = LaurentScalar::monomial(-P.pairing(d, nd)) .div_unit(c);
  return TorusElement::weyl_term(nd, inv_c);
}
}  // namespace

QMatrix invert_lower_triangular(const QMatrix& m, const QuiverForm& P) {
  const int n = m.n;
  QMatrix inv = QMatrix::zero(n);
  for (int i = 1; i <= n; ++i) inv.at(i, i) = invert_monomial(m.at(i, i), P);
  for (int i = 2; i <= n; ++i)
    for (int j = i - 1; j >= 1; --j) {
      TorusElement acc;
      for (int k = j; k < i; ++k) acc = acc + mul(m.at(i, k), inv.at(k, j), P);
      inv.at(i, j) = mul(invert_monomial(m.at(i, i), P), acc, P).scaled(-LaurentScalar::from_int(1));
    }
  return inv;
}

QMatrix reversed_left_matrix(const DiscreteTriangle& tri, const QuiverForm& P) {
  QMatrix inv = invert_lower_triangular(left_matrix(tri), P);
  const int n = tri.n();
  QMatrix rev = QMatrix::zero(n);
  for (int t = 1; t <= n; ++t)
    for (int s = 1; s <= n; ++s) rev.at(t, s) = inv.at(n + 1 - t, n + 1 - s);
  return rev;
}

TorusElement rotate_vertices(const TorusElement& e, const DiscreteTriangle& tri, int steps) {
  TorusElement out;
  for (const auto& [d, c] : e.terms()) {
    ExpVec nd(d.size(), 0);
    for (int i = 0; i < tri.size(); ++i) {
      if (d[i] == 0) continue;
      nd[tri.index_of(tri.vertex(i).rotated(steps))] = d[i];
    }
    out.add_weyl_term(nd, c);
  }
  return out;
}

QMatrix rotate_matrix(const QMatrix& m, const DiscreteTriangle& tri, int steps) {
  QMatrix out = QMatrix::zero(m.n);
  for (int i = 1; i <= m.n; ++i)
    for (int j = 1; j <= m.n; ++j) out.at(i, j) = rotate_vertices(m.at(i, j), tri, steps);
  return out;
}

}  // namespace annskein
