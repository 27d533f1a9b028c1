#pragma once

#include "drt/group_structure.hpp"
#include "drt/int_matrix.hpp"
#include "drt/tournament.hpp"

#include <vector>

namespace drt {

struct CriticalGroupOptions {
  // Primes that can divide the torsion order.  When given, the group is
  // assembled per prime from local eliminations; full integer SNF is never
  // run (the path for large instances).
  std::vector<BigInt> prime_hints;
  // Expected torsion order (0 = unknown).  Sets the local modulus exponent
  // to v_p(order) + 1 and enables an exact order cross-check.
  BigInt torsion_order = 0;
  // Without hints, instances up to this size use full integer SNF.
  std::size_t full_snf_limit = 64;
};

// Torsion part of coker(Q) for a Laplacian Q (zero row sums, free rank 1).
// Throws when the input violates either assumption, when a local modulus
// proves insufficient, or when the computed order contradicts
// opts.torsion_order.
GroupStructure critical_group(const IntMatrix& Q, const CriticalGroupOptions& opts = {});

// Critical group of a validated DRT.  Torsion order comes from the
// parameter formula (4λ+3)^{2λ} (λ+1)^{2λ+1}, primes from its factors;
// small instances are additionally cross-checked against full SNF.
GroupStructure drt_critical_group(const Tournament& T);

BigInt drt_torsion_order(std::int64_t lambda);

} // namespace drt
