#include "annskein/quantum_torus.hpp"

#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace annskein {

DiscreteTriangle DiscreteTriangle::build(int n) {
  if (n < 2) throw std::invalid_argument("discrete triangle needs n >= 2");
  DiscreteTriangle t;
  t.n_ = n;
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= n - a; ++b) {
      int c = n - a - b;
      Vertex v{a, b, c};
      if (!is_corner(v, n)) t.verts_.push_back(v);
    }
  // loop order is already lexicographic in (a,b,c)
  return t;
}

int DiscreteTriangle::index_of(const Vertex& v) const {
  auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
  if (it == verts_.end() || !(*it == v)) throw std::invalid_argument("vertex not in triangle");
  return static_cast<int>(it - verts_.begin());
}

bool DiscreteTriangle::contains(const Vertex& v) const {
  auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
  return it != verts_.end() && *it == v;
}

// The quiver is assembled from the unit subdivision triangles that avoid the
// three corners.  Each such small triangle contributes a 3-cycle; an edge in
// the direction (1,-1,0), (0,1,-1) or (-1,0,1) counts +1, the reverse -1.
// Interior edges lie in two small triangles (weight 2), edges along the
// boundary of the big triangle in one (weight 1).  This reproduces the six
// interior rules and the three boundary rules, plus the three near-corner
// arrows connecting consecutive sides.
QuiverForm build_quiver(const DiscreteTriangle& tri) {
  const int n = tri.n();
  QuiverForm q;
  q.tri_ = tri;
  const int V = tri.size();
  q.p_.assign(static_cast<std::size_t>(V) * V, 0);

  auto add_cycle = [&](Vertex x, Vertex y, Vertex z) {
    // contributes the cycle on {x,y,z} with +1 in the positive directions
    if (DiscreteTriangle::is_corner(x, n) || DiscreteTriangle::is_corner(y, n) ||
        DiscreteTriangle::is_corner(z, n))
      return;
    const Vertex vs[3] = {x, y, z};
    static const std::array<std::array<int, 3>, 3> pos = {{{1, -1, 0}, {0, 1, -1}, {-1, 0, 1}}};
    for (int s = 0; s < 3; ++s)
      for (int t = 0; t < 3; ++t) {
        if (s == t) continue;
        std::array<int, 3> d = {vs[t].a - vs[s].a, vs[t].b - vs[s].b, vs[t].c - vs[s].c};
        for (const auto& pd : pos) {
          if (d == pd) {
            int iu = tri.index_of(vs[s]);
            int iv = tri.index_of(vs[t]);
            q.p_[static_cast<std::size_t>(iu) * V + iv] += 1;
            q.p_[static_cast<std::size_t>(iv) * V + iu] -= 1;
          }
        }
      }
  };

  for (int a = 0; a + 1 <= n; ++a)
    for (int b = 0; a + b + 1 <= n; ++b) {
      int c = n - 1 - a - b;
      if (c < 0) continue;
      add_cycle({a + 1, b, c}, {a, b + 1, c}, {a, b, c + 1});  // upward triangle
    }
  for (int a = 0; a + 2 <= n; ++a)
    for (int b = 0; a + b + 2 <= n; ++b) {
      int c = n - 2 - a - b;
      if (c < 0) continue;
      add_cycle({a + 1, b + 1, c}, {a + 1, b, c + 1}, {a, b + 1, c + 1});  // downward
    }

  // the weight form is invariant under the rotation (a,b,c) -> (c,a,b)
  for (int u = 0; u < V; ++u)
    for (int v = 0; v < V; ++v) {
      int ru = tri.index_of(tri.vertex(u).rotated());
      int rv = tri.index_of(tri.vertex(v).rotated());
      if (q.p(u, v) != q.p(ru, rv)) throw std::logic_error("quiver not rotation invariant");
    }
  return q;
}

std::int64_t QuiverForm::pairing(const std::vector<int>& d, const std::vector<int>& e) const {
  const int V = tri_.size();
  if (static_cast<int>(d.size()) != V || static_cast<int>(e.size()) != V)
    throw std::invalid_argument("pairing: dimension mismatch");
  std::int64_t acc = 0;
  for (int u = 0; u < V; ++u) {
    if (d[u] == 0) continue;
    std::int64_t row = 0;
    for (int v = 0; v < V; ++v) {
      if (e[v] != 0) row += static_cast<std::int64_t>(p(u, v)) * e[v];
    }
    acc += d[u] * row;
  }
  return acc;
}

std::int64_t QuiverForm::ordered_self_pairing(const std::vector<int>& d) const {
  const int V = tri_.size();
  std::int64_t acc = 0;
  for (int u = 0; u < V; ++u) {
    if (d[u] == 0) continue;
    for (int v = u + 1; v < V; ++v)
      if (d[v] != 0) acc += static_cast<std::int64_t>(d[u]) * d[v] * p(u, v);
  }
  return acc;
}

TorusElement TorusElement::unit(int dim) {
  TorusElement e;
  e.terms_[ExpVec(dim, 0)] = LaurentScalar::from_int(1);
  return e;
}

TorusElement TorusElement::weyl_term(ExpVec d, LaurentScalar coeff) {
  TorusElement e;
  if (!coeff.is_zero()) e.terms_[std::move(d)] = std::move(coeff);
  return e;
}

LaurentScalar TorusElement::weyl_coeff(const ExpVec& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? LaurentScalar() : it->second;
}

TorusElement& TorusElement::add_weyl_term(const ExpVec& d, const LaurentScalar& c) {
  if (c.is_zero()) return *this;
  auto [it, inserted] = terms_.try_emplace(d, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

TorusElement TorusElement::operator+(const TorusElement& o) const {
  TorusElement out(*this);
  for (const auto& [d, c] : o.terms_) out.add_weyl_term(d, c);
  return out;
}

TorusElement TorusElement::scaled(const LaurentScalar& c) const {
  TorusElement out;
  if (c.is_zero()) return out;
  for (const auto& [d, v] : terms_) out.terms_[d] = v * c;
  return out;
}

TorusElement mul(const TorusElement& a, const TorusElement& b, const QuiverForm& P) {
  TorusElement out;
  const int V = P.triangle().size();
  ExpVec sum(V);
  for (const auto& [d, cd] : a.terms()) {
    if (static_cast<int>(d.size()) != V) throw std::invalid_argument("mul: context mismatch");
    for (const auto& [e, ce] : b.terms()) {
      if (static_cast<int>(e.size()) != V) throw std::invalid_argument("mul: context mismatch");
      for (int i = 0; i < V; ++i) sum[i] = d[i] + e[i];
      LaurentScalar c = cd * ce * LaurentScalar::monomial(P.pairing(d, e));
      out.add_weyl_term(sum, c);
    }
  }
  return out;
}

TorusMonomial weyl_order(const ExpVec& d, const QuiverForm& P) {
  return TorusMonomial{LaurentScalar::monomial(-P.ordered_self_pairing(d)), d};
}

TorusElement from_ordered_monomial(const TorusMonomial& m, const QuiverForm& P) {
  // scalar * X^d = (scalar / weyl_scalar(d)) * [X^d]
  LaurentScalar ws = LaurentScalar::monomial(P.ordered_self_pairing(m.exp));
  return TorusElement::weyl_term(m.exp, m.scalar * ws);
}

bool dominates(const ExpVec& a, const ExpVec& b) {
  bool strict = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
    if (a[i] > b[i]) strict = true;
  }
  return strict;
}

std::optional<TorusMonomial> highest_degree(const TorusElement& e) {
  if (e.is_zero()) return std::nullopt;
  if (e.term_count() == 1) {
    const auto& [d, c] = *e.terms().begin();
    return TorusMonomial{c, d};
  }
  for (const auto& [d, c] : e.terms()) {
    bool top = true;
    for (const auto& [d2, c2] : e.terms()) {
      if (&d2 == &d) continue;
      if (!dominates(d, d2)) {
        top = false;
        break;
      }
    }
    if (top) return TorusMonomial{c, d};
  }
  return std::nullopt;
}

TensorElement TensorElement::unit(int dim_left, int dim_right) {
  TensorElement e;
  e.terms_[{ExpVec(dim_left, 0), ExpVec(dim_right, 0)}] = LaurentScalar::from_int(1);
  return e;
}

TensorElement TensorElement::pure(const TorusElement& l, const TorusElement& r,
                                  const QuiverForm& PL, const QuiverForm& PR) {
  (void)PL;
  (void)PR;
  TensorElement out;
  for (const auto& [dl, cl] : l.terms())
    for (const auto& [dr, cr] : r.terms()) out.add_term({dl, dr}, cl * cr);
  return out;
}

LaurentScalar TensorElement::weyl_coeff(const Key& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? LaurentScalar() : it->second;
}

TensorElement& TensorElement::add_term(const Key& k, const LaurentScalar& c) {
  if (c.is_zero()) return *this;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
  TensorElement out(*this);
  for (const auto& [k, c] : o.terms_) out.add_term(k, c);
  return out;
}

TensorElement TensorElement::scaled(const LaurentScalar& c) const {
  TensorElement out;
  if (c.is_zero()) return out;
  for (const auto& [k, v] : terms_) out.terms_[k] = v * c;
  return out;
}

TensorElement tensor_mul(const TensorElement& a, const TensorElement& b, const QuiverForm& PL,
                         const QuiverForm& PR) {
  TensorElement out;
  const int VL = PL.triangle().size(), VR = PR.triangle().size();
  ExpVec suml(VL), sumr(VR);
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      for (int i = 0; i < VL; ++i) suml[i] = ka.first[i] + kb.first[i];
      for (int i = 0; i < VR; ++i) sumr[i] = ka.second[i] + kb.second[i];
      LaurentScalar c = ca * cb *
                        LaurentScalar::monomial(PL.pairing(ka.first, kb.first) +
                                                PR.pairing(ka.second, kb.second));
      out.add_term({suml, sumr}, c);
    }
  return out;
}

std::optional<TensorElement::Key> highest_degree_pair(const TensorElement& e) {
  if (e.is_zero()) return std::nullopt;
  auto dominates_pair = [](const TensorElement::Key& a, const TensorElement::Key& b) {
    auto ge = [](const ExpVec& x, const ExpVec& y) {
      for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] < y[i]) return false;
      return true;
    };
    return ge(a.first, b.first) && ge(a.second, b.second) && !(a == b);
  };
  for (const auto& [k, c] : e.terms()) {
    bool top = true;
    for (const auto& [k2, c2] : e.terms()) {
      if (k2 == k) continue;
      if (!dominates_pair(k, k2)) {
        top = false;
        break;
      }
    }
    if (top) return k;
  }
  return std::nullopt;
}

namespace {
std::string vertex_key(const Vertex& v) {
  std::ostringstream os;
  os << v.a << "," << v.b << "," << v.c;
  return os.str();
}

nlohmann::json exp_to_json(const ExpVec& d, const DiscreteTriangle& tri) {
  nlohmann::json j = nlohmann::json::object();
  for (int i = 0; i < tri.size(); ++i)
    if (d[i] != 0) j[vertex_key(tri.vertex(i))] = d[i];
  return j;
}
}  // namespace

nlohmann::json torus_element_to_json(const TorusElement& e, const DiscreteTriangle& tri) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [d, c] : e.terms())
    terms.push_back({{"scalar", c.to_json()}, {"exp", exp_to_json(d, tri)}});
  return nlohmann::json{{"triangle_n", tri.n()}, {"terms", terms}};
}

nlohmann::json tensor_element_to_json(const TensorElement& e, const DiscreteTriangle& tri) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [k, c] : e.terms())
    terms.push_back({{"scalar", c.to_json()},
                     {"exp_left", exp_to_json(k.first, tri)},
                     {"exp_right", exp_to_json(k.second, tri)}});
  return nlohmann::json{{"triangle_n", tri.n()}, {"terms", terms}};
}

}  // namespace annskein
