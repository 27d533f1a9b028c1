#include "drt/group_structure.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace drt {

GroupStructure GroupStructure::from_elementary(std::map<BigInt, std::vector<int>> divisors) {
  GroupStructure g;
  for (auto& [p, exps] : divisors) {
    if (p < 2) throw std::invalid_argument("group structure: divisor base must be a prime");
    std::sort(exps.begin(), exps.end());
    if (!exps.empty() && exps.front() < 1)
      throw std::invalid_argument("group structure: exponents must be positive");
    if (exps.empty()) continue;
    for (int e : exps) g.order_ *= ipow(p, static_cast<std::uint64_t>(e));
    g.divisors_[p] = std::move(exps);
  }
  return g;
}

GroupStructure GroupStructure::from_invariant_factors(const std::vector<BigInt>& factors) {
  std::map<BigInt, std::vector<int>> divisors;
  for (const auto& f : factors) {
    if (f <= 0) throw std::invalid_argument("group structure: invariant factors must be positive");
    if (f == 1) continue;
    for (const auto& [p, e] : factorize(f)) divisors[p].push_back(e);
  }
  return from_elementary(std::move(divisors));
}

GroupStructure GroupStructure::cyclic_power(const BigInt& m, int copies) {
  if (copies < 0) throw std::invalid_argument("group structure: negative multiplicity");
  std::vector<BigInt> factors(static_cast<std::size_t>(copies), m);
  return from_invariant_factors(factors);
}

GroupStructure GroupStructure::direct_sum(const GroupStructure& other) const {
  std::map<BigInt, std::vector<int>> merged = divisors_;
  for (const auto& [p, exps] : other.divisors_) {
    auto& dst = merged[p];
    dst.insert(dst.end(), exps.begin(), exps.end());
  }
  return from_elementary(std::move(merged));
}

std::vector<BigInt> GroupStructure::invariant_factors() const {
  std::size_t count = 0;
  for (const auto& [p, exps] : divisors_) count = std::max(count, exps.size());
  std::vector<BigInt> factors(count, 1);
  // Largest factor collects the largest exponent of every prime, and so on
  // down; shorter exponent lists simply stop contributing.
  for (const auto& [p, exps] : divisors_)
    for (std::size_t j = 0; j < exps.size(); ++j)
      factors[count - exps.size() + j] *= ipow(p, static_cast<std::uint64_t>(exps[j]));
  return factors;
}

int GroupStructure::rank_at(const BigInt& p) const {
  auto it = divisors_.find(p);
  return it == divisors_.end() ? 0 : static_cast<int>(it->second.size());
}

std::string GroupStructure::describe() const {
  if (divisors_.empty()) return "trivial";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, exps] : divisors_) {
    for (std::size_t j = 0; j < exps.size();) {
      std::size_t j2 = j;
      while (j2 < exps.size() && exps[j2] == exps[j]) ++j2;
      const std::size_t mult = j2 - j;
      if (!first) os << " x ";
      first = false;
      if (mult == 1)
        os << "Z/" << ipow(p, static_cast<std::uint64_t>(exps[j]));
      else
        os << "(Z/" << ipow(p, static_cast<std::uint64_t>(exps[j])) << ")^" << mult;
      j = j2;
    }
  }
  return os.str();
}

std::string GroupStructure::to_json() const {
  nlohmann::ordered_json j;
  j["order"] = order_.str();
  auto divisors = nlohmann::ordered_json::object();
  for (const auto& [p, exps] : divisors_) divisors[p.str()] = exps;
  j["elementary_divisors"] = std::move(divisors);
  auto factors = nlohmann::ordered_json::array();
  for (const auto& f : invariant_factors()) factors.push_back(f.str());
  j["invariant_factors"] = std::move(factors);
  return j.dump(2);
}

GroupStructure GroupStructure::from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  std::map<BigInt, std::vector<int>> divisors;
  for (const auto& [key, exps] : j.at("elementary_divisors").items())
    divisors[BigInt(key)] = exps.get<std::vector<int>>();
  auto g = from_elementary(std::move(divisors));
  if (j.contains("order") && BigInt(j["order"].get<std::string>()) != g.order())
    throw std::invalid_argument("group structure json: stored order disagrees");
  return g;
}

std::string structure_diff(const GroupStructure& a, const GroupStructure& b) {
  if (a == b) return "";
  std::ostringstream os;
  auto exps_str = [](const std::vector<int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(v[i]);
    }
    return s + "]";
  };
  std::set<BigInt> primes;
  for (const auto& [p, _] : a.elementary_divisors()) primes.insert(p);
  for (const auto& [p, _] : b.elementary_divisors()) primes.insert(p);
  for (const auto& p : primes) {
    static const std::vector<int> none;
    auto ia = a.elementary_divisors().find(p);
    auto ib = b.elementary_divisors().find(p);
    const auto& ea = ia == a.elementary_divisors().end() ? none : ia->second;
    const auto& eb = ib == b.elementary_divisors().end() ? none : ib->second;
    if (ea != eb) os << "p=" << p << ": exponents " << exps_str(ea) << " vs " << exps_str(eb) << "\n";
  }
  if (a.order() != b.order()) os << "order: " << a.order() << " vs " << b.order() << "\n";
  return os.str();
}

} // namespace drt
