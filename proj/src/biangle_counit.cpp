#include "annskein/biangle_counit.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace annskein {

CounitConstants CounitConstants::defaults(const RingContext& ctx) {
  CounitConstants c;
  c.perm_factor = -ctx.q();
  c.state_exponent = -1;
  return c;
}

LaurentScalar CounitConstants::base(bool source, int n, int k) const {
  const auto& table = source ? base_source : base_sink;
  auto it = table.find({n, k});
  return it == table.end() ? LaurentScalar::from_int(1) : it->second;
}

CounitConstants CounitConstants::from_json(const nlohmann::json& j, const RingContext& ctx) {
  CounitConstants c = defaults(ctx);
  if (j.contains("perm_factor")) c.perm_factor = LaurentScalar::from_json(j.at("perm_factor"));
  if (j.contains("state_exponent")) c.state_exponent = j.at("state_exponent").get<int>();
  auto load = [](const nlohmann::json& obj, std::map<std::pair<int, int>, LaurentScalar>& out) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
      const std::string& key = it.key();
      auto comma = key.find(',');
      if (comma == std::string::npos) throw std::invalid_argument("base key must be \"n,k\"");
      int n = std::stoi(key.substr(0, comma));
      int k = std::stoi(key.substr(comma + 1));
      out[{n, k}] = LaurentScalar::from_json(it.value());
    }
  };
  if (j.contains("base_source")) load(j.at("base_source"), c.base_source);
  if (j.contains("base_sink")) load(j.at("base_sink"), c.base_sink);
  return c;
}

nlohmann::json CounitConstants::to_json() const {
  nlohmann::json j;
  j["perm_factor"] = perm_factor.to_json();
  j["state_exponent"] = state_exponent;
  auto dump = [](const std::map<std::pair<int, int>, LaurentScalar>& table) {
    nlohmann::json obj = nlohmann::json::object();
    for (const auto& [nk, v] : table)
      obj[std::to_string(nk.first) + "," + std::to_string(nk.second)] = v.to_json();
    return obj;
  };
  j["base_source"] = dump(base_source);
  j["base_sink"] = dump(base_sink);
  return j;
}

long long perm_length(const std::vector<int>& one_line) {
  long long inv = 0;
  for (std::size_t a = 0; a < one_line.size(); ++a)
    for (std::size_t b = a + 1; b < one_line.size(); ++b)
      if (one_line[a] > one_line[b]) ++inv;
  return inv;
}

namespace {
LaurentScalar counit_impl(const RingContext& ctx, const StatePattern& p, const CounitConstants& c,
                          bool source) {
  (void)ctx;
  const int n = p.n, k = p.k;
  if (static_cast<int>(p.i_states.size()) != k ||
      static_cast<int>(p.l_states.size()) != n - k)
    throw std::invalid_argument("counit: state list lengths do not match (n,k)");
  // row = (i_1 .. i_k, bar l_{n-k} .. bar l_1)
  std::vector<int> row;
  row.reserve(n);
  for (int x : p.i_states) row.push_back(x);
  for (int j = n - k - 1; j >= 0; --j) row.push_back(n + 1 - p.l_states[j]);
  std::vector<int> sorted = row;
  std::sort(sorted.begin(), sorted.end());
  for (int j = 0; j < n; ++j)
    if (sorted[j] != j + 1) return LaurentScalar();  // repeated state

  long long fexp = perm_length(row);
  for (int x : p.l_states) fexp += static_cast<long long>(c.state_exponent) * x;
  return c.base(source, n, k) * c.perm_factor.pow(fexp);
}
}  // namespace

LaurentScalar counit_source(const RingContext& ctx, const StatePattern& p,
                            const CounitConstants& c) {
  return counit_impl(ctx, p, c, true);
}

LaurentScalar counit_sink(const RingContext& ctx, const StatePattern& p,
                          const CounitConstants& c) {
  return counit_impl(ctx, p, c, false);
}

LaurentScalar counit_through_strand(int i, int j) {
  return i == j ? LaurentScalar::from_int(1) : LaurentScalar();
}

LaurentScalar qsum_over_symmetric_group(const RingContext& ctx, int k) {
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 1);
  LaurentScalar acc;
  do {
    acc += (-ctx.q()).pow(2 * perm_length(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

}  // namespace annskein
