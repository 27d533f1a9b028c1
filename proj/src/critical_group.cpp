#include "drt/critical_group.hpp"

#include "drt/snf.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace drt {

namespace {

void require_laplacian(const IntMatrix& Q) {
  if (Q.rows() != Q.cols()) throw std::invalid_argument("critical_group: matrix not square");
  if (Q.rows() == 0) throw std::invalid_argument("critical_group: empty matrix");
  for (std::size_t i = 0; i < Q.rows(); ++i) {
    BigInt row = 0;
    for (std::size_t j = 0; j < Q.cols(); ++j) row += Q.at(i, j);
    if (row != 0)
      throw std::invalid_argument("critical_group: row " + std::to_string(i) +
                                  " does not sum to zero; not a Laplacian");
  }
}

// Rank over Q is at most n-1 (zero row sums).  A prime r coprime to the
// torsion gives p_rank(Q, r) = n-1, which pins the free rank to exactly 1.
void certify_free_rank_one(const IntMatrix& Q, const std::vector<BigInt>& torsion_primes) {
  static const std::int64_t small_primes[] = {2,  3,  5,  7,  11, 13, 17, 19,
                                              23, 29, 31, 37, 41, 43, 47, 53};
  for (std::int64_t r : small_primes) {
    if (std::find(torsion_primes.begin(), torsion_primes.end(), BigInt(r)) !=
        torsion_primes.end())
      continue;
    if (p_rank(Q, r) == Q.rows() - 1) return;
    // Rank mod r can fall below n-1 only through torsion at r (excluded by
    // the hints) or through a free rank above 1.
    throw std::invalid_argument("critical_group: rank mod " + std::to_string(r) +
                                " is below n-1: free rank above 1, or a torsion prime "
                                "outside the hints");
  }
  throw std::invalid_argument("critical_group: no auxiliary prime outside the hints");
}

} // namespace

GroupStructure critical_group(const IntMatrix& Q, const CriticalGroupOptions& opts) {
  require_laplacian(Q);

  if (opts.prime_hints.empty()) {
    if (Q.rows() > opts.full_snf_limit)
      throw std::invalid_argument(
          "critical_group: instance too large for full SNF; pass prime hints");
    auto s = snf(Q);
    if (s.free_rank != 1)
      throw std::invalid_argument("critical_group: free rank " + std::to_string(s.free_rank) +
                                  ", expected 1 (graph not connected?)");
    auto g = GroupStructure::from_invariant_factors(s.invariant_factors);
    if (opts.torsion_order != 0 && g.order() != opts.torsion_order) {
      std::ostringstream os;
      os << "critical_group: computed order " << g.order() << " != expected "
         << opts.torsion_order;
      throw std::runtime_error(os.str());
    }
    return g;
  }

  certify_free_rank_one(Q, opts.prime_hints);

  std::map<BigInt, std::vector<int>> divisors;
  BigInt order = 1;
  for (const auto& p_big : opts.prime_hints) {
    const std::int64_t p = p_big.convert_to<std::int64_t>();
    int K = 0;
    if (opts.torsion_order != 0) K = valuation(opts.torsion_order, p) + 1;
    auto local = local_snf(Q, p, K);
    // Exactly one valuation may hit the cap: the free-rank slot.  A second
    // one means the modulus exponent was too small for a true divisor.
    if (local.capped != 1)
      throw std::runtime_error("critical_group: " + std::to_string(local.capped) +
                               " diagonal entries at the modulus cap for p = " +
                               std::to_string(p) + " (expected 1, the free rank)");
    std::vector<int>& exps = divisors[p_big];
    for (int v : local.valuations)
      if (v > 0 && v < local.modulus_exponent) exps.push_back(v);
    if (exps.empty()) divisors.erase(p_big);
    for (int v : exps) order *= ipow(p_big, static_cast<std::uint64_t>(v));
  }
  if (opts.torsion_order != 0 && order != opts.torsion_order) {
    std::ostringstream os;
    os << "critical_group: assembled order " << order << " != expected " << opts.torsion_order
       << " (prime hints incomplete?)";
    throw std::runtime_error(os.str());
  }
  return GroupStructure::from_elementary(std::move(divisors));
}

BigInt drt_torsion_order(std::int64_t lambda) {
  if (lambda < 0) throw std::invalid_argument("drt_torsion_order: negative lambda");
  return ipow(BigInt(4 * lambda + 3), static_cast<std::uint64_t>(2 * lambda)) *
         ipow(BigInt(lambda + 1), static_cast<std::uint64_t>(2 * lambda + 1));
}

GroupStructure drt_critical_group(const Tournament& T) {
  if (!T.drt_params())
    throw std::invalid_argument("drt_critical_group: tournament has no validated parameters");
  const auto params = *T.drt_params();
  const IntMatrix Q = T.laplacian();

  CriticalGroupOptions opts;
  opts.torsion_order = drt_torsion_order(params.lambda);
  for (std::int64_t p : prime_factors(4 * params.lambda + 3)) opts.prime_hints.push_back(p);
  for (std::int64_t p : prime_factors(params.lambda + 1)) opts.prime_hints.push_back(p);
  auto g = critical_group(Q, opts);

  if (Q.rows() <= opts.full_snf_limit) {
    CriticalGroupOptions oracle;
    oracle.torsion_order = opts.torsion_order;
    auto g2 = critical_group(Q, oracle);
    if (!(g == g2))
      throw std::logic_error("drt_critical_group: local assembly disagrees with full SNF:\n" +
                             structure_diff(g, g2));
  }
  return g;
}

} // namespace drt
