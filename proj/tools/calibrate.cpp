// Development harness: finds the per-state-pair inversion factors of the
// biangle co-unit demanded by the pinned identities, then reports the law.
// Not part of the shipped tests.
#include <algorithm>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>
#include <cstdlib>

#include "annskein/annulus_trace.hpp"

using namespace annskein;

namespace {


// Dev-only: orientation experiments on the quiver (same memory layout).
void patch_quiver(AnnulusContext& ctx, bool flip_corner, bool flip_all) {
  struct Mirror {
    DiscreteTriangle tri;
    std::vector<int> p;
  };
  const DiscreteTriangle& tri = ctx.tri;
  const int V = tri.size();
  auto side = [&](const Vertex& v) {
    if (v.a > 0 && v.b > 0 && v.c > 0) return -1;
    if (v.a == 0) return 0;
    if (v.b == 0) return 1;
    return 2;
  };
  Mirror* m = reinterpret_cast<Mirror*>(&ctx.quiver);
  std::vector<int> p = m->p;
  for (int u = 0; u < V; ++u)
    for (int v = 0; v < V; ++v) {
      int& e = p[u * V + v];
      int su = side(tri.vertex(u)), sv = side(tri.vertex(v));
      if (flip_corner && e != 0 && su >= 0 && sv >= 0 && su != sv) e = -e;
      if (flip_all) e = -e;
    }
  m->p = p;
}

LaurentScalar peel_product(const RingContext& ctx, int n) {
  LaurentScalar acc = LaurentScalar::from_int(1);
  for (int k = 1; k <= n - 1; ++k) acc *= ctx.q(-k) * qint(ctx, n - k);
  return acc;
}

// Relative ordering factor: product over inversion pairs (a later-listed
// larger-state before smaller) of (-q) * w^{he[pair]}; sink uses -w^{-he}.
struct HModel {
  int n;
  bool rev_left = false;   // multiply left-arc entries lowest-first
  std::map<std::pair<int, int>, long long> he;  // keyed by (min,max)

  LaurentScalar rel(const RingContext& R, const std::vector<int>& ord, bool source) const {
    LaurentScalar acc = LaurentScalar::from_int(1);
    for (std::size_t a = 0; a < ord.size(); ++a)
      for (std::size_t b = a + 1; b < ord.size(); ++b)
        if (ord[a] > ord[b]) {
          long long e = he.at({ord[b], ord[a]});
          acc *= (-R.q()) * LaurentScalar::monomial(source ? e : -e);
        }
    return acc;
  }
};

// tau(B1) with unknown-free trial co-unit: eps = V * rel, V constant = 1.
// Returns the multiset of distinct key coefficients after dividing... we
// instead check: all nonzero coefficients equal u*c for a single unit u.
bool try_model(const AnnulusContext& ctx, const HModel& hm, LaurentScalar* u_out,
               TensorElement* loop_out) {
  const int n = ctx.ring.n;
  const RingContext& R = ctx.ring;
  LaurentScalar c = peel_product(R, n);

  TensorElement acc;
  for (int x = 1; x <= n; ++x) {
    std::vector<int> S;
    for (int v = 1; v <= n; ++v)
      if (v != n + 1 - x) S.push_back(v);
    for (int y = 1; y <= x; ++y) {
      std::vector<int> Sp;
      for (int v = 1; v <= n; ++v)
        if (v != n + 1 - y) Sp.push_back(v);
      if (ctx.left.at(x, y).is_zero()) continue;
      std::vector<int> l = S;
      do {
        LaurentScalar es = hm.rel(R, l, true);
        std::vector<int> lp = Sp;
        do {
          bool feasible = true;
          for (int j = 0; j < n - 1; ++j)
            if (l[j] < lp[j]) feasible = false;
          if (!feasible) continue;
          TorusElement left = TorusElement::unit(ctx.tri.size());
          bool dead = false;
          for (int jj = 0; jj < n - 1 && !dead; ++jj) {
            int j = hm.rev_left ? n - 2 - jj : jj;
            const TorusElement& e = ctx.left.at(l[j], lp[j]);
            if (e.is_zero()) dead = true;
            else left = mul(left, e, ctx.quiver);
          }
          if (dead) continue;
          LaurentScalar ek = hm.rel(R, lp, false);
          acc = acc + TensorElement::pure(left, ctx.left.at(x, y), ctx.quiver, ctx.quiver)
                          .scaled(es * ek);
        } while (std::next_permutation(lp.begin(), lp.end()));
      } while (std::next_permutation(l.begin(), l.end()));
    }
  }
  if (acc.is_zero()) return false;
  auto q0 = acc.terms().begin()->second.divided_by(c);
  if (!q0 || !q0->is_unit_monomial()) return false;
  for (const auto& [k, v] : acc.terms())
    if (!(v == c * *q0)) return false;
  if (u_out) *u_out = *q0;
  if (loop_out) {
    TensorElement e;
    for (const auto& [k, v] : acc.terms()) e.add_term(k, LaurentScalar::from_int(1));
    *loop_out = e;
  }
  return true;
}


// Model v2: per-key coefficient must be unit * c; units constant per (x,y)
// group and factorizable as alpha_x * beta_y.
bool try_model_v2(const AnnulusContext& ctx, const HModel& hm, bool verbose) {
  const int n = ctx.ring.n;
  const RingContext& R = ctx.ring;
  LaurentScalar c = peel_product(R, n);

  std::map<std::pair<int, int>, TensorElement> groups;
  for (int x = 1; x <= n; ++x) {
    std::vector<int> S;
    for (int v = 1; v <= n; ++v)
      if (v != n + 1 - x) S.push_back(v);
    for (int y = 1; y <= x; ++y) {
      std::vector<int> Sp;
      for (int v = 1; v <= n; ++v)
        if (v != n + 1 - y) Sp.push_back(v);
      if (ctx.left.at(x, y).is_zero()) continue;
      TensorElement acc;
      std::vector<int> l = S;
      std::sort(l.begin(), l.end());
      do {
        LaurentScalar es = hm.rel(R, l, true);
        std::vector<int> lp = Sp;
        std::sort(lp.begin(), lp.end());
        do {
          bool feasible = true;
          for (int j = 0; j < n - 1; ++j)
            if (l[j] < lp[j]) feasible = false;
          if (!feasible) continue;
          TorusElement left = TorusElement::unit(ctx.tri.size());
          bool dead = false;
          for (int jj = 0; jj < n - 1 && !dead; ++jj) {
            int j = hm.rev_left ? n - 2 - jj : jj;
            const TorusElement& e = ctx.left.at(l[j], lp[j]);
            if (e.is_zero()) dead = true;
            else left = mul(left, e, ctx.quiver);
          }
          if (dead) continue;
          LaurentScalar ek = hm.rel(R, lp, false);
          acc = acc + TensorElement::pure(left, ctx.left.at(x, y), ctx.quiver, ctx.quiver)
                          .scaled(es * ek);
        } while (std::next_permutation(lp.begin(), lp.end()));
      } while (std::next_permutation(l.begin(), l.end()));
      groups[{x, y}] = acc;
    }
  }

  std::map<std::pair<int, int>, LaurentScalar> unit;
  for (const auto& [xy, acc] : groups) {
    for (const auto& [k, v] : acc.terms()) {
      auto q = v.divided_by(c);
      if (!q || !q->is_unit_monomial()) {
        if (verbose)
          std::printf("group (%d,%d): key coeff %s not unit*c\n", xy.first, xy.second,
                      v.to_string().c_str());
        return false;
      }
      auto it = unit.find(xy);
      if (it == unit.end()) unit[xy] = *q;
      else if (!(it->second == *q)) {
        if (verbose)
          std::printf("group (%d,%d): inconsistent units %s vs %s\n", xy.first, xy.second,
                      it->second.to_string().c_str(), q->to_string().c_str());
        return false;
      }
    }
  }
  // rank-1: u_{xy} = alpha_x beta_y; gauge beta_n = 1 -> alpha_x = u_{x,n}?
  // use u_{x,x-diagonal... fix alpha via column y = 1 when present
  std::map<int, LaurentScalar> alpha, beta;
  if (!unit.count({n, n})) return false;
  beta[n] = LaurentScalar::from_int(1);
  for (int x = 1; x <= n; ++x)
    if (unit.count({x, n})) alpha[x] = unit[{x, n}];
  // (n,n) gives alpha_n; columns via alpha_n
  for (int y = 1; y <= n; ++y)
    if (unit.count({n, y})) beta[y] = unit[{n, y}].div_unit(alpha[n]);
  bool ok = true;
  for (const auto& [xy, u] : unit) {
    if (!alpha.count(xy.first) || !beta.count(xy.second)) continue;
    if (!(alpha[xy.first] * beta[xy.second] == u)) ok = false;
  }
  if (verbose) {
    for (auto& [x, a] : alpha) std::printf("alpha[%d] = %s\n", x, a.to_string().c_str());
    for (auto& [y, b] : beta) std::printf("beta[%d] = %s\n", y, b.to_string().c_str());
    std::printf("rank-1: %s\n", ok ? "yes" : "NO");
  }
  return ok;
}

void guess(int n) {
  AnnulusContext ctx = AnnulusContext::make(n);
  HModel hm;
  hm.n = n;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) hm.he[{a, b}] = (a == 1) ? 2 * n : 0;
  bool ok = try_model_v2(ctx, hm, true);
  std::printf("n=%d guess: %s\n", n, ok ? "PASS" : "FAIL");
}

void sweep(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) pairs.push_back({a, b});
  const int P = static_cast<int>(pairs.size());
  const long long opts[5] = {0, -static_cast<long long>(n), static_cast<long long>(n),
                             -2LL * n, 2LL * n};
  long long total = 1;
  for (int i = 0; i < P; ++i) total *= 5;
  int found = 0;
  for (int qv = 0; qv < 4; ++qv) {
  AnnulusContext ctx = AnnulusContext::make(n);
  patch_quiver(ctx, qv & 1, qv & 2);
  for (int rev = 0; rev < 2; ++rev)
  for (long long code = 0; code < total; ++code) {
    long long c2 = code;
    HModel hm;
    hm.n = n;
    hm.rev_left = rev;
    for (int i = 0; i < P; ++i) {
      hm.he[pairs[i]] = opts[c2 % 5];
      c2 /= 5;
    }
    LaurentScalar u;
    if (try_model(ctx, hm, &u, nullptr)) {
      ++found;
      std::printf("n=%d OK (rev_left=%d qv=%d): ", n, rev, qv);
      for (int i = 0; i < P; ++i)
        std::printf("h(%d,%d)=%lld ", pairs[i].first, pairs[i].second, hm.he[pairs[i]]);
      std::printf(" unit=%s\n", u.to_string().c_str());
    }
  }
  }
  std::printf("n=%d: %d models pass\n", n, found);
}

}  // namespace

void debug_model(int n, const std::vector<long long>& hvals) {
  AnnulusContext ctx = AnnulusContext::make(n);
  const RingContext& R = ctx.ring;
  LaurentScalar c = peel_product(R, n);
  HModel hm;
  hm.n = n;
  hm.rev_left = getenv("REV_LEFT") != nullptr;
  int idx = 0;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) hm.he[{a, b}] = hvals[idx++];

  TensorElement acc;
  for (int x = 1; x <= n; ++x) {
    std::vector<int> S;
    for (int v = 1; v <= n; ++v)
      if (v != n + 1 - x) S.push_back(v);
    for (int y = 1; y <= x; ++y) {
      std::vector<int> Sp;
      for (int v = 1; v <= n; ++v)
        if (v != n + 1 - y) Sp.push_back(v);
      if (ctx.left.at(x, y).is_zero()) continue;
      std::vector<int> l = S;
      do {
        LaurentScalar es = hm.rel(R, l, true);
        std::vector<int> lp = Sp;
        do {
          bool feasible = true;
          for (int j = 0; j < n - 1; ++j)
            if (l[j] < lp[j]) feasible = false;
          if (!feasible) continue;
          TorusElement left = TorusElement::unit(ctx.tri.size());
          bool dead = false;
          for (int jj = 0; jj < n - 1 && !dead; ++jj) {
            int j = hm.rev_left ? n - 2 - jj : jj;
            const TorusElement& e = ctx.left.at(l[j], lp[j]);
            if (e.is_zero()) dead = true;
            else left = mul(left, e, ctx.quiver);
          }
          if (dead) continue;
          LaurentScalar ek = hm.rel(R, lp, false);
          acc = acc + TensorElement::pure(left, ctx.left.at(x, y), ctx.quiver, ctx.quiver)
                          .scaled(es * ek);
        } while (std::next_permutation(lp.begin(), lp.end()));
      } while (std::next_permutation(l.begin(), l.end()));
    }
  }
  std::printf("c = %s\n", c.to_string().c_str());
  for (const auto& [k, v] : acc.terms()) {
    auto q = v.divided_by(c);
    std::printf("key |");
    for (int t : k.second) std::printf(" %d", t);
    std::printf(" : %s %s\n", v.to_string().c_str(),
                (q && q->is_unit_monomial()) ? "(unit*c)" : "  <-- BAD");
  }
}


// print per-feeder contributions for the (x,y) groups with x != y
void feeders(int n) {
  AnnulusContext ctx = AnnulusContext::make(n);
  const RingContext& R = ctx.ring;
  for (int x = 1; x <= n; ++x) {
    std::vector<int> S;
    for (int v = 1; v <= n; ++v)
      if (v != n + 1 - x) S.push_back(v);
    for (int y = 1; y <= x; ++y) {
      if (x == y) continue;
      std::vector<int> Sp;
      for (int v = 1; v <= n; ++v)
        if (v != n + 1 - y) Sp.push_back(v);
      if (ctx.left.at(x, y).is_zero()) continue;
      std::printf("group x=%d y=%d:\n", x, y);
      std::vector<int> l = S;
      std::sort(l.begin(), l.end());
      do {
        std::vector<int> lp = Sp;
        std::sort(lp.begin(), lp.end());
        do {
          bool feasible = true;
          for (int j = 0; j < n - 1; ++j)
            if (l[j] < lp[j]) feasible = false;
          if (!feasible) continue;
          TorusElement left = TorusElement::unit(ctx.tri.size());
          bool dead = false;
          for (int j = 0; j < n - 1 && !dead; ++j) {
            const TorusElement& e = ctx.left.at(l[j], lp[j]);
            if (e.is_zero()) dead = true;
            else left = mul(left, e, ctx.quiver);
          }
          if (dead) continue;
          std::printf("  l=(");
          for (int v : l) std::printf("%d", v);
          std::printf(") lp=(");
          for (int v : lp) std::printf("%d", v);
          std::printf("): ");
          for (const auto& [d, cc] : left.terms()) {
            std::printf(" [");
            for (int t : d) std::printf("%d ", t);
            std::printf("]x(%s)", cc.to_string().c_str());
          }
          std::printf("\n");
        } while (std::next_permutation(lp.begin(), lp.end()));
      } while (std::next_permutation(l.begin(), l.end()));
    }
  }
}

int main(int argc, char** argv) {
  int n = argc > 1 ? std::atoi(argv[1]) : 3;
  if (argc > 2 && std::string(argv[2]) == "feeders") {
    feeders(n);
    return 0;
  }
  if (argc > 2 && std::string(argv[2]) == "guess") {
    guess(n);
    return 0;
  }
  if (argc > 2) {
    std::vector<long long> h;
    for (int i = 2; i < argc; ++i) h.push_back(std::atoll(argv[i]));
    debug_model(n, h);
    return 0;
  }
  sweep(n);
  return 0;
}
