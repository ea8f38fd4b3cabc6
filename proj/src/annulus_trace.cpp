#include "annskein/annulus_trace.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace annskein {

AnnulusContext AnnulusContext::make(int n) {
  return make(n, CounitConstants::defaults(RingContext(n)));
}

AnnulusContext AnnulusContext::make(int n, CounitConstants counit) {
  DiscreteTriangle tri = DiscreteTriangle::build(n);
  QuiverForm quiver = build_quiver(tri);
  QMatrix lw = left_matrix(tri);
  QMatrix rev = reversed_left_matrix(tri, quiver);
  return AnnulusContext{RingContext(n), std::move(tri), std::move(quiver), std::move(lw),
                        std::move(rev), std::move(counit)};
}

namespace {

// All tuples of distinct values from 1..n of length len.
void injective_tuples(int n, int len, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  std::vector<bool> used(n + 1, false);
  std::function<void()> rec = [&]() {
    if (static_cast<int>(cur.size()) == len) {
      out.push_back(cur);
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      cur.push_back(v);
      rec();
      cur.pop_back();
      used[v] = false;
    }
  };
  rec();
}

// Second edge of an admissible source/sink pattern: the tuple values must be
// the bars of the complement of the first tuple's value set (in any order);
// returns all orderings.
std::vector<std::vector<int>> complement_bar_tuples(int n, const std::vector<int>& first) {
  std::vector<bool> in_first(n + 1, false);
  for (int v : first) in_first[v] = true;
  std::vector<int> pool;
  for (int v = 1; v <= n; ++v)
    if (!in_first[v]) pool.push_back(n + 1 - v);
  std::sort(pool.begin(), pool.end());
  std::vector<std::vector<int>> out;
  do {
    out.push_back(pool);
  } while (std::next_permutation(pool.begin(), pool.end()));
  return out;
}

TorusElement entry_product(const QMatrix& m, const QuiverForm& P, const std::vector<int>& rows,
                           const std::vector<int>& cols) {
  TorusElement acc = TorusElement::unit(P.triangle().size());
  for (std::size_t j = 0; j < rows.size(); ++j) {
    const TorusElement& e = m.at(rows[j], cols[j]);
    if (e.is_zero()) return TorusElement();
    acc = mul(acc, e, P);
  }
  return acc;
}

}  // namespace

TensorElement trace_basis_web(const AnnulusContext& ctx, int k) {
  const int n = ctx.ring.n;
  if (k < 1 || k > n - 1) throw std::out_of_range("trace_basis_web: k out of range");

  // Source states: (i_j) on the right-triangle side, (l_{j'}) on the left.
  std::vector<std::vector<int>> i_tuples;
  injective_tuples(n, k, i_tuples);
  std::vector<std::vector<int>> lp_tuples;  // sink first list (l'_{j'})
  injective_tuples(n, n - k, lp_tuples);

  TensorElement acc;
  // cache of entry products keyed by (rows, cols)
  std::map<std::pair<std::vector<int>, std::vector<int>>, TorusElement> left_cache, right_cache;

  for (const auto& i : i_tuples) {
    for (const auto& l : complement_bar_tuples(n, i)) {
      LaurentScalar eps_src =
          counit_source(ctx.ring, StatePattern{n, k, i, l}, ctx.counit);
      if (eps_src.is_zero()) continue;
      for (const auto& lp : lp_tuples) {
        // matrix entries vanish unless l_{j'} >= l'_{j'} (lower triangular)
        bool feasible = true;
        for (int j = 0; j < n - k; ++j)
          if (l[j] < lp[j]) {
            feasible = false;
            break;
          }
        if (!feasible) continue;
        for (const auto& ip : complement_bar_tuples(n, lp)) {
          bool feas2 = true;
          for (int j = 0; j < k; ++j)
            if (i[j] < ip[j]) {
              feas2 = false;
              break;
            }
          if (!feas2) continue;
          LaurentScalar eps_snk =
              counit_sink(ctx.ring, StatePattern{n, n - k, lp, ip}, ctx.counit);
          if (eps_snk.is_zero()) continue;

          auto lkey = std::make_pair(l, lp);
          auto lit = left_cache.find(lkey);
          if (lit == left_cache.end())
            lit = left_cache.emplace(lkey, entry_product(ctx.left, ctx.quiver, l, lp)).first;
          if (lit->second.is_zero()) continue;
          auto rkey = std::make_pair(i, ip);
          auto rit = right_cache.find(rkey);
          if (rit == right_cache.end())
            rit = right_cache.emplace(rkey, entry_product(ctx.left, ctx.quiver, i, ip)).first;
          if (rit->second.is_zero()) continue;

          TensorElement term =
              TensorElement::pure(lit->second, rit->second, ctx.quiver, ctx.quiver);
          acc = acc + term.scaled(eps_snk * eps_src);
        }
      }
    }
  }
  return acc;
}

TraceReport report_of(const AnnulusContext& ctx, const TensorElement& e) {
  (void)ctx;
  TraceReport rep;
  rep.element = e;
  rep.highest = highest_degree_pair(e);
  if (rep.highest) rep.coefficient = e.weyl_coeff(*rep.highest);
  return rep;
}

TraceReport trace_monomial(const AnnulusContext& ctx, const std::vector<long long>& powers) {
  const int n = ctx.ring.n;
  if (static_cast<int>(powers.size()) != n - 1)
    throw std::invalid_argument("trace_monomial: need n-1 powers");
  const int dim = ctx.tri.size();
  TensorElement acc = TensorElement::unit(dim, dim);
  for (int k = 1; k <= n - 1; ++k) {
    if (powers[k - 1] == 0) continue;
    TensorElement base = trace_basis_web(ctx, k);
    for (long long p = 0; p < powers[k - 1]; ++p)
      acc = tensor_mul(acc, base, ctx.quiver, ctx.quiver);
  }
  return report_of(ctx, acc);
}

TraceReport trace_simple_loop(const AnnulusContext& ctx) {
  const int n = ctx.ring.n;
  TensorElement acc;
  for (int s = 1; s <= n; ++s)
    for (int t = 1; t <= n; ++t) {
      const TorusElement& lrev = ctx.reversed_left.at(t, s);
      const TorusElement& r = ctx.left.at(s, t);
      if (lrev.is_zero() || r.is_zero()) continue;
      acc = acc + TensorElement::pure(lrev, r, ctx.quiver, ctx.quiver);
    }
  return report_of(ctx, acc);
}

IndependenceReport independence_check(int n, long long max_total) {
  IndependenceReport rep;
  rep.n = n;
  rep.max_total = max_total;

  auto t = t_matrix(n);  // t[i-1][k-1] = t^R_k at a-level n-i
  std::set<std::vector<long long>> seen;
  std::vector<long long> m(n - 1, 0);
  std::size_t count = 0;
  std::function<void(int, long long)> rec = [&](int idx, long long left) {
    if (idx == n - 1) {
      std::vector<long long> deg(n - 1, 0);
      for (int i = 0; i < n - 1; ++i)
        for (int k = 0; k < n - 1; ++k) deg[i] += m[k] * t[i][k];
      seen.insert(deg);
      ++count;
      return;
    }
    for (long long v = 0; v <= left; ++v) {
      m[idx] = v;
      rec(idx + 1, left - v);
    }
    m[idx] = 0;
  };
  rec(0, max_total);
  rep.vector_count = count;
  rep.degrees_distinct = seen.size() == count;
  rep.t_matrix_ok = t_matrix_identity_holds(n);
  return rep;
}

}  // namespace annskein
