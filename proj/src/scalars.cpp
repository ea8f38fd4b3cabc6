#include "annskein/scalars.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace annskein {

LaurentScalar LaurentScalar::from_int(long long v) {
  LaurentScalar s;
  if (v != 0) s.terms_.push_back({0, BigInt(v)});
  return s;
}

LaurentScalar LaurentScalar::monomial(std::int64_t exp, BigInt coeff) {
  LaurentScalar s;
  if (coeff != 0) s.terms_.push_back({exp, std::move(coeff)});
  return s;
}

bool LaurentScalar::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

bool LaurentScalar::is_unit_monomial() const {
  return terms_.size() == 1 && (terms_[0].second == 1 || terms_[0].second == -1);
}

std::int64_t LaurentScalar::min_exp() const {
  if (terms_.empty()) throw std::domain_error("min_exp of zero");
  return terms_.front().first;
}

std::int64_t LaurentScalar::max_exp() const {
  if (terms_.empty()) throw std::domain_error("max_exp of zero");
  return terms_.back().first;
}

BigInt LaurentScalar::coeff_at(std::int64_t exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                             [](const Term& t, std::int64_t e) { return t.first < e; });
  if (it != terms_.end() && it->first == exp) return it->second;
  return BigInt(0);
}

void LaurentScalar::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
      if (out.back().second == 0) out.pop_back();
    } else if (t.second != 0) {
      out.push_back(std::move(t));
    }
  }
  terms_ = std::move(out);
}

LaurentScalar LaurentScalar::operator-() const {
  LaurentScalar s(*this);
  for (auto& t : s.terms_) t.second = -t.second;
  return s;
}

LaurentScalar& LaurentScalar::operator+=(const LaurentScalar& o) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
      merged.push_back(terms_[i++]);
    } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
      merged.push_back(o.terms_[j++]);
    } else {
      BigInt c = terms_[i].second + o.terms_[j].second;
      if (c != 0) merged.push_back({terms_[i].first, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

LaurentScalar& LaurentScalar::operator-=(const LaurentScalar& o) { return *this += -o; }

LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b) {
  LaurentScalar out;
  if (a.terms_.empty() || b.terms_.empty()) return out;
  out.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_)
      out.terms_.push_back({ta.first + tb.first, ta.second * tb.second});
  out.normalize();
  return out;
}

LaurentScalar& LaurentScalar::operator*=(const LaurentScalar& o) {
  *this = *this * o;
  return *this;
}

LaurentScalar LaurentScalar::div_unit(const LaurentScalar& u) const {
  if (!u.is_unit_monomial()) throw std::domain_error("division only by unit monomials");
  LaurentScalar out(*this);
  const std::int64_t e = u.terms_[0].first;
  const bool neg = u.terms_[0].second < 0;
  for (auto& t : out.terms_) {
    t.first -= e;
    if (neg) t.second = -t.second;
  }
  return out;
}

std::optional<LaurentScalar> LaurentScalar::divided_by(const LaurentScalar& d) const {
  if (d.is_zero()) return std::nullopt;
  if (is_zero()) return LaurentScalar();
  // Long division from the top; exact or bust.  An exact quotient has
  // exponents in [min_exp - d.min_exp, max_exp - d.max_exp].
  const std::int64_t low = min_exp() - d.min_exp();
  LaurentScalar rem(*this), quot;
  const Term& lead = d.terms_.back();
  while (!rem.is_zero()) {
    const Term& rl = rem.terms_.back();
    if (rl.second % lead.second != 0) return std::nullopt;
    const std::int64_t pe = rl.first - lead.first;
    if (pe < low) return std::nullopt;
    LaurentScalar piece = LaurentScalar::monomial(pe, rl.second / lead.second);
    quot += piece;
    rem -= piece * d;
  }
  return quot;
}

LaurentScalar LaurentScalar::pow(long long e) const {
  if (e < 0) {
    if (!is_unit_monomial()) throw std::domain_error("negative power of non-unit");
    LaurentScalar inv = LaurentScalar::monomial(-terms_[0].first, terms_[0].second);
    return inv.pow(-e);
  }
  LaurentScalar acc = LaurentScalar::from_int(1), base(*this);
  while (e > 0) {
    if (e & 1) acc *= base;
    if (e >>= 1) base *= base;
  }
  return acc;
}

std::complex<double> cpow_int(std::complex<double> z, std::int64_t e) {
  if (e < 0) return 1.0 / cpow_int(z, -e);
  std::complex<double> acc(1.0, 0.0);
  while (e > 0) {
    if (e & 1) acc *= z;
    z *= z;
    e >>= 1;
  }
  return acc;
}

std::complex<double> LaurentScalar::eval(std::complex<double> w_half) const {
  if (w_half == std::complex<double>(0.0, 0.0))
    throw std::domain_error("cannot evaluate at w_half = 0");
  std::complex<double> acc(0.0, 0.0);
  for (const auto& t : terms_) acc += t.second.convert_to<double>() * cpow_int(w_half, t.first);
  return acc;
}

nlohmann::json LaurentScalar::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : terms_) terms.push_back({t.first, t.second.str()});
  return nlohmann::json{{"unit", "w_half"}, {"terms", terms}};
}

LaurentScalar LaurentScalar::from_json(const nlohmann::json& j) {
  if (j.contains("unit") && j.at("unit") != "w_half")
    throw std::invalid_argument("LaurentScalar: unexpected unit");
  LaurentScalar s;
  for (const auto& t : j.at("terms")) {
    std::int64_t e = t.at(0).get<std::int64_t>();
    BigInt c = t.at(1).is_string() ? BigInt(t.at(1).get<std::string>())
                                   : BigInt(t.at(1).get<long long>());
    s.terms_.push_back({e, std::move(c)});
  }
  s.normalize();
  return s;
}

std::string LaurentScalar::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << (t.second >= 0 ? " + " : " - ");
    else if (t.second < 0) os << "-";
    BigInt a = t.second < 0 ? BigInt(-t.second) : t.second;
    if (a != 1 || t.first == 0) os << a.str();
    if (t.first != 0) {
      if (a != 1) os << "*";
      os << "w^" << t.first;
    }
    first = false;
  }
  return os.str();
}

LaurentScalar qint(const RingContext& ctx, long long m) {
  LaurentScalar s;
  for (long long i = 1; i <= m; ++i) s += ctx.q(-m - 1 + 2 * i);
  return s;
}

LaurentScalar qfact(const RingContext& ctx, long long m) {
  LaurentScalar s = LaurentScalar::from_int(1);
  for (long long i = 1; i <= m; ++i) s *= qint(ctx, i);
  return s;
}

std::complex<double> eval_numeric(const LaurentScalar& s, std::complex<double> w_half) {
  return s.eval(w_half);
}

bool in_bad_set(std::complex<double> q, int n, double tol) {
  if (std::abs(std::abs(q) - 1.0) >= tol) return false;
  if (std::abs(q - std::complex<double>(1, 0)) < tol) return false;
  if (std::abs(q + std::complex<double>(1, 0)) < tol) return false;
  for (int m = 2; m <= n - 1; ++m) {
    if (std::abs(cpow_int(q, 2 * m) - std::complex<double>(1, 0)) < tol) return true;
  }
  return false;
}

}  // namespace annskein
