#include "annskein/braid_reduction.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace annskein {

SkeinConstants SkeinConstants::defaults(const RingContext& ctx) {
  SkeinConstants c;
  c.alpha_plus = ctx.q_root_n(1);
  c.alpha_minus = -ctx.q_root_n(-1);
  c.alpha_zero = ctx.q(1) - ctx.q(-1);
  c.kink = LaurentScalar::monomial(2LL * ctx.n * (static_cast<std::int64_t>(ctx.n) * ctx.n - 1));
  c.unknot = qint(ctx, ctx.n);
  return c;
}

SkeinConstants SkeinConstants::from_json(const nlohmann::json& j, const RingContext& ctx) {
  SkeinConstants c = defaults(ctx);
  if (j.contains("alpha_plus")) c.alpha_plus = LaurentScalar::from_json(j.at("alpha_plus"));
  if (j.contains("alpha_minus")) c.alpha_minus = LaurentScalar::from_json(j.at("alpha_minus"));
  if (j.contains("alpha_zero")) c.alpha_zero = LaurentScalar::from_json(j.at("alpha_zero"));
  if (j.contains("kink")) c.kink = LaurentScalar::from_json(j.at("kink"));
  if (j.contains("unknot")) c.unknot = LaurentScalar::from_json(j.at("unknot"));
  return c;
}

nlohmann::json SkeinConstants::to_json() const {
  return nlohmann::json{{"alpha_plus", alpha_plus.to_json()},
                        {"alpha_minus", alpha_minus.to_json()},
                        {"alpha_zero", alpha_zero.to_json()},
                        {"kink", kink.to_json()},
                        {"unknot", unknot.to_json()}};
}

GammaPolynomial GammaPolynomial::monomial(std::vector<int> gammas, LaurentScalar c) {
  GammaPolynomial p;
  std::sort(gammas.begin(), gammas.end(), std::greater<int>());
  if (!c.is_zero()) p.terms_[std::move(gammas)] = std::move(c);
  return p;
}

LaurentScalar GammaPolynomial::coeff(const std::vector<int>& gammas) const {
  std::vector<int> key = gammas;
  std::sort(key.begin(), key.end(), std::greater<int>());
  auto it = terms_.find(key);
  return it == terms_.end() ? LaurentScalar() : it->second;
}

GammaPolynomial& GammaPolynomial::add(const std::vector<int>& gammas, const LaurentScalar& c) {
  if (c.is_zero()) return *this;
  std::vector<int> key = gammas;
  std::sort(key.begin(), key.end(), std::greater<int>());
  auto [it, inserted] = terms_.try_emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

GammaPolynomial& GammaPolynomial::operator+=(const GammaPolynomial& o) {
  for (const auto& [g, c] : o.terms_) add(g, c);
  return *this;
}

GammaPolynomial GammaPolynomial::scaled(const LaurentScalar& c) const {
  GammaPolynomial out;
  if (c.is_zero()) return out;
  for (const auto& [g, v] : terms_) out.terms_[g] = v * c;
  return out;
}

nlohmann::json GammaPolynomial::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [g, c] : terms_) arr.push_back({{"gammas", g}, {"coeff", c.to_json()}});
  return nlohmann::json{{"monomials", arr}};
}

namespace {

// Occupants of the slots before each letter and the end position of each
// strand (strand id = starting slot, 1-based).
struct Layout {
  std::vector<std::pair<int, int>> crossing_strands;  // (strand at slot i, strand at slot i+1)
  std::vector<int> end_slot;                          // by strand id
};

Layout layout_of(const BraidWord& w) {
  Layout lay;
  std::vector<int> slot(w.strands + 1);
  std::iota(slot.begin(), slot.end(), 0);
  lay.crossing_strands.reserve(w.letters.size());
  for (const auto& [i, s] : w.letters) {
    if (i < 1 || i >= w.strands) throw std::invalid_argument("braid letter index out of range");
    lay.crossing_strands.push_back({slot[i], slot[i + 1]});
    std::swap(slot[i], slot[i + 1]);
  }
  lay.end_slot.assign(w.strands + 1, 0);
  for (int pos = 1; pos <= w.strands; ++pos) lay.end_slot[slot[pos]] = pos;
  return lay;
}

}  // namespace

ClosureState analyze_closure(const BraidWord& w) {
  ClosureState st;
  st.word = w;
  Layout lay = layout_of(w);
  std::vector<int> comp_of(w.strands + 1, -1);
  for (int s = 1; s <= w.strands; ++s) {
    if (comp_of[s] != -1) continue;
    std::vector<int> cyc;
    int cur = s;
    while (comp_of[cur] == -1) {
      comp_of[cur] = static_cast<int>(st.components.size());
      cyc.push_back(cur);
      cur = lay.end_slot[cur];
    }
    st.components.push_back(cyc);
    st.self_writhe.push_back(0);
  }
  for (std::size_t p = 0; p < w.letters.size(); ++p) {
    auto [sa, sb] = lay.crossing_strands[p];
    if (comp_of[sa] == comp_of[sb]) st.self_writhe[comp_of[sa]] += w.letters[p].second;
  }
  return st;
}

namespace {

// Cancel adjacent sigma_i^{+1} sigma_i^{-1} pairs (the only free reduction
// that is safe without moving strands).
BraidWord free_reduce(BraidWord w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t p = 0; p + 1 < w.letters.size(); ++p) {
      if (w.letters[p].first == w.letters[p + 1].first &&
          w.letters[p].second == -w.letters[p + 1].second) {
        w.letters.erase(w.letters.begin() + p, w.letters.begin() + p + 2);
        changed = true;
        break;
      }
    }
  }
  return w;
}

struct Reducer {
  const RingContext& ctx;
  const SkeinConstants& consts;
  ResolutionStrategy strategy;
  std::map<BraidWord, GammaPolynomial> memo;

  // Desired over-strand at each crossing: within a component the pass met
  // earlier along the traversal from the component basepoint (lowest starting
  // slot) goes over; between components every strand of the component with
  // the larger basepoint goes over.  sigma_i^{+} has the strand entering at
  // slot i passing over the one entering at slot i+1; under these choices the
  // positive permutation braids of the standard cycles are terminal words.
  // Each component of a terminal word closes to an annular power knot and
  // components sit at separated heights, so the closure is the product of
  // framing-corrected gamma factors.
  GammaPolynomial reduce(const BraidWord& input) {
    BraidWord w = free_reduce(input);
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;

    Layout lay = layout_of(w);
    std::vector<int> comp_of(w.strands + 1, -1);
    std::vector<std::vector<int>> comps;
    std::vector<long long> order(w.strands + 1, 0);
    for (int s = 1; s <= w.strands; ++s) {
      if (comp_of[s] != -1) continue;
      std::vector<int> cyc;
      int cur = s;
      long long t = 0;
      while (comp_of[cur] == -1) {
        comp_of[cur] = static_cast<int>(comps.size());
        order[cur] = t++;
        cyc.push_back(cur);
        cur = lay.end_slot[cur];
      }
      comps.push_back(cyc);
    }

    auto desired_sign = [&](std::size_t p) {
      auto [sa, sb] = lay.crossing_strands[p];  // sa enters at slot i, sb at slot i+1
      bool sa_over;
      if (comp_of[sa] == comp_of[sb]) {
        sa_over = order[sa] < order[sb];
      } else {
        sa_over = comps[comp_of[sa]][0] > comps[comp_of[sb]][0];
      }
      return sa_over ? 1 : -1;
    };

    std::optional<std::size_t> bad;
    for (std::size_t p = 0; p < w.letters.size(); ++p) {
      if (w.letters[p].second != desired_sign(p)) {
        bad = p;
        if (strategy == ResolutionStrategy::leftmost_bad) break;
      }
    }

    GammaPolynomial result;
    if (!bad) {
      // terminal: every component is gamma_{m} with a framing correction
      LaurentScalar coeff = LaurentScalar::from_int(1);
      std::vector<int> gammas;
      std::vector<long long> wr(comps.size(), 0);
      for (std::size_t p = 0; p < w.letters.size(); ++p) {
        auto [sa, sb] = lay.crossing_strands[p];
        if (comp_of[sa] == comp_of[sb]) wr[comp_of[sa]] += w.letters[p].second;
      }
      for (std::size_t cidx = 0; cidx < comps.size(); ++cidx) {
        int m = static_cast<int>(comps[cidx].size());
        gammas.push_back(m);
        coeff *= consts.kink.pow(wr[cidx] - (m - 1));
      }
      result = GammaPolynomial::monomial(gammas, coeff);
    } else {
      std::size_t p = *bad;
      BraidWord switched = w;
      switched.letters[p].second = -switched.letters[p].second;
      BraidWord smoothed = w;
      smoothed.letters.erase(smoothed.letters.begin() + p);
      // alpha_+ X_+ + alpha_- X_- = alpha_0 X_0, solved for the bad side
      const bool actual_positive = w.letters[p].second > 0;
      const LaurentScalar& a_bad = actual_positive ? consts.alpha_plus : consts.alpha_minus;
      const LaurentScalar& a_good = actual_positive ? consts.alpha_minus : consts.alpha_plus;
      LaurentScalar c_switch = (-a_good).div_unit(a_bad);
      LaurentScalar c_smooth = consts.alpha_zero.div_unit(a_bad);
      result = reduce(switched).scaled(c_switch);
      result += reduce(smoothed).scaled(c_smooth);
    }

    // winding conservation: every monomial uses all strands
    for (const auto& [g, c] : result.terms()) {
      long long total = std::accumulate(g.begin(), g.end(), 0LL);
      if (total != w.strands) throw std::logic_error("winding conservation violated");
    }
    memo.emplace(std::move(w), result);
    return result;
  }
};

}  // namespace

GammaPolynomial close_and_reduce(const RingContext& ctx, const BraidWord& w,
                                 const SkeinConstants& c, ResolutionStrategy strategy) {
  Reducer r{ctx, c, strategy, {}};
  return r.reduce(w);
}

LaurentScalar p_beta(const RingContext& ctx, const BraidWord& w, const SkeinConstants& c) {
  return close_and_reduce(ctx, w, c).coeff({w.strands});
}

BraidWord positive_permutation_braid(const std::vector<int>& one_line) {
  const int m = static_cast<int>(one_line.size());
  BraidWord w;
  w.strands = m;
  // bubble-sort the inverse picture: repeatedly cross adjacent slots whose
  // strands still need to swap; each pair crosses at most once
  std::vector<int> target = one_line;  // strand at slot s must end at target[s-1]
  std::vector<int> slot(m + 1);
  std::iota(slot.begin(), slot.end(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 1; i < m; ++i) {
      int sa = slot[i], sb = slot[i + 1];
      if (target[sa - 1] > target[sb - 1]) {
        w.letters.push_back({i, +1});
        std::swap(slot[i], slot[i + 1]);
        changed = true;
      }
    }
  }
  return w;
}

LaurentScalar p_i(const RingContext& ctx, int i, const SkeinConstants& c) {
  std::vector<int> perm(i);
  std::iota(perm.begin(), perm.end(), 1);
  LaurentScalar acc;
  LaurentScalar weight_base = -LaurentScalar::monomial(ctx.qn_exp() - ctx.q_exp());  // -q^{(1-n)/n}
  Reducer red{ctx, c, ResolutionStrategy::leftmost_bad, {}};
  do {
    long long inv = 0;
    for (int a = 0; a < i; ++a)
      for (int b = a + 1; b < i; ++b)
        if (perm[a] > perm[b]) ++inv;
    BraidWord beta = positive_permutation_braid(perm);
    LaurentScalar pb = red.reduce(beta).coeff({i});
    acc += weight_base.pow(inv) * pb;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

LaurentScalar p_closed_form(const RingContext& ctx, int i) {
  if (i < 1 || i > 4) throw std::out_of_range("closed form computed for i <= 4 only");
  // (-1)^{i-1} q^{-(i-1)^2} q^{(i-1)/n} prod_{j=2}^{i-1} (q^{2j}-1)/(q^2-1)
  LaurentScalar acc = LaurentScalar::monomial(
      -(static_cast<std::int64_t>(i) - 1) * (i - 1) * ctx.q_exp() + (i - 1) * ctx.qn_exp(),
      (i - 1) % 2 == 0 ? 1 : -1);
  for (int j = 2; j <= i - 1; ++j) {
    LaurentScalar cyc;
    for (int t = 0; t < j; ++t) cyc += ctx.q(2 * t);
    acc *= cyc;
  }
  return acc;
}

std::vector<std::complex<double>> laurent_roots_in_qn(const RingContext& ctx,
                                                      const LaurentScalar& s, bool& ok) {
  ok = false;
  std::vector<std::complex<double>> roots;
  if (s.is_zero()) return roots;
  const std::int64_t step = ctx.qn_exp();
  for (const auto& [e, c] : s.terms())
    if (e % step != 0) throw std::domain_error("scalar is not a polynomial in q^{1/n}");
  const std::int64_t lo = s.min_exp() / step;
  const std::int64_t hi = s.max_exp() / step;
  const int deg = static_cast<int>(hi - lo);
  if (deg == 0) {
    ok = true;  // unit monomial: no roots in C^*
    return roots;
  }
  std::vector<std::complex<double>> coeff(deg + 1, 0.0);
  for (const auto& [e, c] : s.terms()) coeff[e / step - lo] = c.convert_to<double>();

  // Durand-Kerner
  std::vector<std::complex<double>> z(deg);
  for (int i = 0; i < deg; ++i)
    z[i] = std::polar(1.0 + 0.1 * i / deg, 0.37 + 2.0 * 3.14159265358979 * i / deg);
  auto eval = [&](std::complex<double> x) {
    std::complex<double> acc = 0.0;
    for (int i = deg; i >= 0; --i) acc = acc * x + coeff[i];
    return acc;
  };
  for (int iter = 0; iter < 2000; ++iter) {
    double moved = 0.0;
    for (int i = 0; i < deg; ++i) {
      std::complex<double> num = eval(z[i]) / coeff[deg];
      std::complex<double> den = 1.0;
      for (int j = 0; j < deg; ++j)
        if (j != i) den *= z[i] - z[j];
      std::complex<double> delta = num / den;
      z[i] -= delta;
      moved = std::max(moved, std::abs(delta));
    }
    if (moved < 1e-13) break;
  }
  double resid = 0.0;
  for (int i = 0; i < deg; ++i) resid = std::max(resid, std::abs(eval(z[i])));
  ok = resid < 1e-8;
  return z;
}

ClosedFormReport verify_p_closed_form(const RingContext& ctx, int i, const SkeinConstants& c) {
  ClosedFormReport rep;
  rep.i = i;
  rep.p = p_i(ctx, i, c);
  if (i <= 4) {
    rep.closed_form = p_closed_form(ctx, i);
    rep.match = rep.p == *rep.closed_form;
  }
  bool ok = false;
  rep.roots = laurent_roots_in_qn(ctx, rep.p, ok);
  rep.root_finding_ok = ok;
  rep.roots_in_bad_set = ok;
  for (const auto& x : rep.roots) {
    std::complex<double> q = cpow_int(x, ctx.n);
    if (!in_bad_set(q, ctx.n, 1e-9)) rep.roots_in_bad_set = false;
  }
  return rep;
}

}  // namespace annskein
