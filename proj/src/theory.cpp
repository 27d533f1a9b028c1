#include "drt/theory.hpp"

#include <algorithm>
#include <complex>
#include <sstream>
#include <stdexcept>

#include "drt/snf.hpp"

namespace drt {

namespace {

void require_lambda(std::int64_t lambda) {
  if (lambda < 1) throw std::invalid_argument("prediction: lambda must be at least 1");
}

std::map<BigInt, std::size_t> ranks_at(std::int64_t n1, std::size_t r1, std::int64_t n2,
                                       std::size_t r2) {
  std::map<BigInt, std::size_t> ranks;
  for (std::int64_t p : prime_factors(n1)) ranks[p] = r1;
  for (std::int64_t p : prime_factors(n2)) ranks[p] = r2;
  return ranks;
}

} // namespace

GroupStructure predict_k1(std::int64_t lambda) {
  require_lambda(lambda);
  return GroupStructure::cyclic_power(lambda + 1, 2 * lambda + 1);
}

BigInt predict_k1_complement_order(std::int64_t lambda) {
  require_lambda(lambda);
  return ipow(BigInt(4 * lambda + 3), static_cast<std::uint64_t>(2 * lambda));
}

Prediction predict_sz(std::int64_t lambda) {
  require_lambda(lambda);
  Prediction out;
  out.family = "sz";
  out.lambda = lambda;
  out.structure = GroupStructure::cyclic_power(lambda + 1, 2 * lambda + 1)
                      .direct_sum(GroupStructure::cyclic_power(4 * lambda + 3, 2 * lambda));
  out.p_ranks = ranks_at(lambda + 1, 2 * lambda + 1, 4 * lambda + 3, 2 * lambda + 2);
  return out;
}

Prediction predict_w(std::int64_t lambda) {
  require_lambda(lambda);
  Prediction out;
  out.family = "w";
  out.lambda = lambda;
  out.structure = GroupStructure::cyclic_power(2 * lambda + 2, 4 * lambda + 3)
                      .direct_sum(GroupStructure::cyclic_power(8 * lambda + 7, 4 * lambda + 2));
  out.p_ranks = ranks_at(2 * lambda + 2, 4 * lambda + 3, 8 * lambda + 7, 4 * lambda + 4);
  return out;
}

Prediction predict_paley(std::int64_t p, int t) {
  const auto profile = counting_profile(p, t); // validates p, t, q = 3 mod 4
  std::int64_t q = 1;
  for (int i = 0; i < t; ++i) q *= p;
  const std::int64_t lambda = (q - 3) / 4;

  Prediction out;
  out.family = "paley";
  out.lambda = lambda;
  out.p = p;
  out.t = t;

  std::vector<int> p_exponents;
  for (const auto& [a, count] : profile.counts)
    if (a > 0)
      for (std::int64_t c = 0; c < count; ++c) p_exponents.push_back(a);
  out.structure = GroupStructure::cyclic_power(lambda + 1, 2 * lambda + 1)
                      .direct_sum(GroupStructure::from_elementary({{p, p_exponents}}));

  out.p_ranks = ranks_at(lambda + 1, static_cast<std::size_t>(2 * lambda + 1), 1, 0);
  out.p_ranks[p] =
      ipow(BigInt((p + 1) / 2), static_cast<std::uint64_t>(t)).convert_to<std::size_t>();
  return out;
}

namespace {

std::int64_t digit_sum(std::int64_t x, std::int64_t p) {
  std::int64_t s = 0;
  for (; x > 0; x /= p) s += x % p;
  return s;
}

} // namespace

int carry_count(std::int64_t i, std::int64_t p, int t) {
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("carry_count: p must be an odd prime");
  if (t < 1) throw std::invalid_argument("carry_count: t must be positive");
  std::int64_t q = 1;
  for (int j = 0; j < t; ++j) q *= p;
  const std::int64_t k = (q - 1) / 2;
  if (i < 1 || i > q - 2) throw std::invalid_argument("carry_count: index out of range");
  if (i == k) throw std::invalid_argument("carry_count: index k = (q-1)/2 is excluded");
  const std::int64_t num = digit_sum(i, p) + t * (p - 1) / 2 - digit_sum((i + k) % (q - 1), p);
  if (num % (p - 1) != 0) throw std::logic_error("carry_count: digit sums not divisible by p-1");
  return static_cast<int>(num / (p - 1));
}

CarryProfile counting_profile(std::int64_t p, int t) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("counting_profile: p must be an odd prime");
  if (t < 1) throw std::invalid_argument("counting_profile: t must be positive");
  std::int64_t q = 1;
  for (int j = 0; j < t; ++j) {
    q *= p;
    if (q > (std::int64_t{1} << 40))
      throw std::invalid_argument("counting_profile: q too large to enumerate");
  }
  if (q % 4 != 3) throw std::invalid_argument("counting_profile: need p^t = 3 (mod 4)");

  CarryProfile out;
  out.p = p;
  out.t = t;
  for (int a = 0; a <= t; ++a) out.counts[a] = 0;
  const std::int64_t k = (q - 1) / 2;
  for (std::int64_t i = 1; i <= q - 2; ++i) {
    if (i == k) continue;
    ++out.counts[carry_count(i, p, t)];
  }

  std::int64_t total = 0, weighted = 0;
  for (const auto& [a, e] : out.counts) {
    total += e;
    weighted += a * e;
    if (out.counts.at(t - a) != e) throw std::logic_error("counting_profile: symmetry violated");
  }
  if (total != q - 3 || 2 * weighted != static_cast<std::int64_t>(t) * (q - 3))
    throw std::logic_error("counting_profile: count invariants violated");
  return out;
}

namespace {

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (std::int64_t j = 1; j <= k; ++j) {
    r *= n - k + j;
    r /= j;
  }
  return r;
}

} // namespace

std::int64_t e_formula(std::int64_t p, int t, int i) {
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("e_formula: p must be an odd prime");
  if (i < 1 || i >= t) throw std::invalid_argument("e_formula: index must satisfy 1 <= i <= t-1");
  BigInt sum = 0;
  const int cap = std::min(i, t - i);
  for (int j = 0; j <= cap; ++j) {
    BigInt term = BigInt(t) * binomial(t - j, j);
    if (term % (t - j) != 0) throw std::logic_error("e_formula: non-integral coefficient");
    term /= t - j;
    term *= binomial(t - 2 * j, i - j);
    term *= ipow(BigInt(-p), static_cast<std::uint64_t>(j));
    term *= ipow(BigInt((p + 1) / 2), static_cast<std::uint64_t>(t - 2 * j));
    sum += term;
  }
  return sum.convert_to<std::int64_t>();
}

CyclotomicInt jacobi_sum(std::int64_t a, std::int64_t b, std::shared_ptr<const FiniteField> F) {
  const std::int64_t q = F->q();
  const std::int64_t m = q - 1;
  auto normalize = [m](std::int64_t e) { return ((e % m) + m) % m; };
  std::vector<BigInt> coeffs(static_cast<std::size_t>(m), 0);
  // x = 0 and x = 1 meet the zero conventions: T^a(0) is 1 for literal
  // exponent 0 and vanishes otherwise, and T^b(1) = 1.
  if (a == 0) coeffs[0] += 1;
  if (b == 0) coeffs[0] += 1;
  for (std::int64_t x = 2; x < q; ++x) {
    const std::int64_t e =
        normalize(normalize(a) * F->log(x) + normalize(b) * F->log(F->sub(1, x)));
    coeffs[static_cast<std::size_t>(e)] += 1;
  }
  return CyclotomicInt::from_coefficients(m, std::move(coeffs));
}

StickelbergerCheck verify_stickelberger(std::shared_ptr<const FiniteField> F) {
  const std::int64_t q = F->q();
  if (q % 4 != 3) throw std::invalid_argument("verify_stickelberger: need q = 3 (mod 4)");
  const std::int64_t p = F->p();
  const int t = F->t();
  const std::int64_t k = (q - 1) / 2;

  StickelbergerCheck out;
  out.carry_multiset = {0, 0}; // the two unit diagonal slots
  for (std::int64_t i = 1; i <= q - 2; ++i)
    if (i != k) out.carry_multiset.push_back(carry_count(i, p, t));
  std::sort(out.carry_multiset.begin(), out.carry_multiset.end());

  auto tournament = build_cayley_drt(F->additive_group(), squares(*F));
  // All torsion valuations are carries, so they are at most t; t+1 caps only
  // the free slot.
  auto loc = local_snf(tournament.laplacian(), p, t + 1);
  out.valuation_multiset.assign(loc.valuations.begin(),
                                loc.valuations.end() - static_cast<std::ptrdiff_t>(loc.capped));

  out.ok = loc.capped == 1 && out.carry_multiset == out.valuation_multiset;
  if (!out.ok) {
    std::ostringstream r;
    r << "carry multiset {";
    for (int v : out.carry_multiset) r << ' ' << v;
    r << " } vs Laplacian valuations {";
    for (int v : out.valuation_multiset) r << ' ' << v;
    r << " } (capped slots: " << loc.capped << ", expected 1)";
    out.report = r.str();
  }
  return out;
}

namespace {

using Cx = std::complex<double>;
using CxMatrix = std::vector<std::vector<Cx>>;

Cx det_c(CxMatrix m) {
  const std::size_t n = m.size();
  Cx det = 1.0;
  for (std::size_t r = 0; r < n; ++r) {
    std::size_t piv = r;
    for (std::size_t i = r + 1; i < n; ++i)
      if (std::abs(m[i][r]) > std::abs(m[piv][r])) piv = i;
    if (std::abs(m[piv][r]) == 0.0) return 0.0;
    if (piv != r) {
      std::swap(m[piv], m[r]);
      det = -det;
    }
    det *= m[r][r];
    for (std::size_t i = r + 1; i < n; ++i) {
      const Cx f = m[i][r] / m[r][r];
      for (std::size_t j = r; j < n; ++j) m[i][j] -= f * m[r][j];
    }
  }
  return det;
}

CxMatrix subblock(const CxMatrix& m, const std::vector<std::size_t>& rows,
                  const std::vector<std::size_t>& cols) {
  CxMatrix out(rows.size(), std::vector<Cx>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out[i][j] = m[rows[i]][cols[j]];
  return out;
}

double rel(double deviation, double target) { return deviation / std::max(1.0, target); }

} // namespace

CharacterBlockCheck character_block_check(const Tournament& t, std::int64_t chi_index,
                                          double tolerance) {
  const TournamentLayout& layout = t.layout();
  if ((layout.kind != "sz" && layout.kind != "w") || !layout.group.has_value())
    throw std::invalid_argument("character_block_check: needs an sz- or w-layout tournament");
  const AbelianGroup& G = *layout.group;
  const std::int64_t m = G.order();
  if (chi_index < 1 || chi_index >= m)
    throw std::invalid_argument("character_block_check: character must be nontrivial");

  CharacterBlockCheck out;
  out.kind = layout.kind;
  out.tolerance = tolerance;
  const std::size_t n = t.size();
  // sz sits on 4 lambda + 3 = |G| vertices plus classes; w on 8 lambda + 7.
  out.lambda = layout.kind == "sz" ? (static_cast<std::int64_t>(n) - 3) / 4
                                   : (static_cast<std::int64_t>(n) - 7) / 8;
  const double L = static_cast<double>(out.lambda);

  // Basis vectors supported on the letter classes, value chi(-g) at slot g.
  std::vector<std::vector<Cx>> basis;
  {
    std::vector<std::size_t> offsets;
    std::vector<Character> chis;
    if (layout.kind == "sz") {
      offsets = {1, 1 + static_cast<std::size_t>(m)};
      chis = {Character::of_group(G, chi_index)};
    } else {
      for (int letter = 0; letter < 4; ++letter)
        offsets.push_back(3 + static_cast<std::size_t>(letter) * static_cast<std::size_t>(m));
      chis = {Character::of_group(G, chi_index), Character::of_group(G, G.neg(chi_index))};
    }
    for (std::size_t off : offsets)
      for (const Character& chi : chis) {
        std::vector<Cx> e(n, 0.0);
        for (std::int64_t g = 0; g < m; ++g)
          e[off + static_cast<std::size_t>(g)] = chi.value_c(G.neg(g));
        basis.push_back(std::move(e));
      }
  }
  const std::size_t dim = basis.size();

  const IntMatrix Q = t.laplacian();
  auto apply_q = [&](const std::vector<Cx>& v) {
    std::vector<Cx> w(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!(Q.at(i, j) == 0)) w[i] += static_cast<double>(Q.at(i, j).convert_to<long long>()) * v[j];
    return w;
  };

  // Block coefficients via the (orthogonal) basis, plus the residual of the
  // claim that Q maps the span into itself.
  CxMatrix block(dim, std::vector<Cx>(dim, 0.0));
  double invariance = 0.0;
  for (std::size_t j = 0; j < dim; ++j) {
    const auto w = apply_q(basis[j]);
    for (std::size_t i = 0; i < dim; ++i) {
      Cx dot = 0.0;
      for (std::size_t k = 0; k < n; ++k) dot += w[k] * std::conj(basis[i][k]);
      block[i][j] = dot / static_cast<double>(m);
    }
    double norm = 0.0, err = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      Cx rec = 0.0;
      for (std::size_t i = 0; i < dim; ++i) rec += block[i][j] * basis[i][k];
      err = std::max(err, std::abs(w[k] - rec));
      norm = std::max(norm, std::abs(w[k]));
    }
    invariance = std::max(invariance, rel(err, norm));
  }
  out.items.push_back({"block invariance", invariance});

  Cx trace = 0.0;
  for (std::size_t i = 0; i < dim; ++i) trace += block[i][i];

  if (layout.kind == "sz") {
    const double n_target = 4 * L + 3;
    out.items.push_back({"trace", rel(std::abs(trace - Cx(n_target)), n_target)});
    const double det_target = (4 * L + 3) * (L + 1);
    const Cx det = block[0][0] * block[1][1] - block[0][1] * block[1][0];
    out.items.push_back({"determinant", rel(std::abs(det - Cx(det_target)), det_target)});
    out.items.push_back(
        {"off-diagonal difference", rel(std::abs(std::abs(block[0][1] - block[1][0]) - 1.0), 1.0)});
  } else {
    const double s = (8 * L + 7) * (2 * L + 2);
    double unit_dev = 0.0;
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        Cx dot = 0.0;
        for (std::size_t k = 0; k < dim; ++k) dot += block[i][k] * std::conj(block[j][k]);
        unit_dev = std::max(unit_dev, std::abs(dot - (i == j ? Cx(s) : Cx(0.0))));
      }
    out.items.push_back({"unitarity", rel(unit_dev, s)});
    out.items.push_back({"trace", rel(std::abs(trace - Cx(4 * (8 * L + 7))), 4 * (8 * L + 7))});
    const double det_target = std::pow(s, 4.0);
    out.items.push_back({"determinant magnitude", rel(std::abs(std::abs(det_c(block)) - det_target), det_target)});
    // Complementary 4x4 minors: the first has magnitude
    // ((4L+3)^2+(4L+3)+|chi(A)|^2+|chi(C)|^2)^2, the second
    // (|chi(B)|^2+|chi(D)|^2)^2.  The chi terms add up to 2L+2, so the square
    // roots always sum to (8L+7)(2L+2).
    const std::vector<std::size_t> even = {0, 2, 4, 6}, odd = {1, 3, 5, 7};
    const double minor_sum = std::sqrt(std::abs(det_c(subblock(block, even, even)))) +
                             std::sqrt(std::abs(det_c(subblock(block, even, odd))));
    out.items.push_back({"complementary minors", rel(std::abs(minor_sum - s), s)});
  }

  out.ok = true;
  for (const auto& item : out.items)
    if (!(item.residual < tolerance)) {
      out.ok = false;
      std::ostringstream r;
      r << item.name << ": residual " << item.residual << " exceeds " << tolerance;
      if (!out.report.empty()) out.report += "\n";
      out.report += r.str();
    }
  return out;
}

} // namespace drt
