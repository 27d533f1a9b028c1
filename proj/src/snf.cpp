#include "drt/snf.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace drt {

namespace {

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

// Pivot with the smallest |entry| in the trailing submatrix, row-major on
// ties; false when the submatrix is zero.
bool find_min_abs_pivot(const IntMatrix& m, std::size_t r, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  BigInt best;
  for (std::size_t i = r; i < m.rows(); ++i)
    for (std::size_t j = r; j < m.cols(); ++j) {
      if (m.at(i, j) == 0) continue;
      BigInt a = abs_big(m.at(i, j));
      if (!found || a < best) {
        found = true;
        best = a;
        pi = i;
        pj = j;
      }
    }
  return found;
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

// Rank, plus |det| of the nonsingular submatrix that full-pivot fraction-free
// elimination selects.  Intermediate entries are minors of the input, so they
// stay within the Hadamard bound instead of exploding.
void bareiss_rank(IntMatrix m, std::size_t& rank, BigInt& subdet) {
  const std::size_t n = std::min(m.rows(), m.cols());
  BigInt prev = 1;
  rank = 0;
  subdet = 1;
  for (std::size_t r = 0; r < n; ++r) {
    std::size_t pi = m.rows(), pj = 0;
    for (std::size_t i = r; i < m.rows() && pi == m.rows(); ++i)
      for (std::size_t j = r; j < m.cols(); ++j)
        if (m.at(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == m.rows()) break;
    swap_rows(m, r, pi);
    swap_cols(m, r, pj);
    for (std::size_t i = r + 1; i < m.rows(); ++i)
      for (std::size_t j = r + 1; j < m.cols(); ++j)
        m.at(i, j) = (m.at(i, j) * m.at(r, r) - m.at(i, r) * m.at(r, j)) / prev;
    prev = m.at(r, r);
    subdet = abs_big(prev);
    ++rank;
  }
}

} // namespace

// Elimination runs with every entry kept as its minimum-absolute-value
// representative mod D, where D is the determinant of a full-rank submatrix.
// Every invariant factor divides D, so reducing mod D loses nothing: a slot
// below the rank that vanishes mod D is a factor equal to D itself, and slots
// at or above the rank are free.  Entries never exceed D/2, which keeps the
// classical algorithm's coefficient growth completely flat.
SnfResult snf(IntMatrix m) {
  const std::size_t dim = std::min(m.rows(), m.cols());
  SnfResult result;
  std::size_t rank = 0;
  BigInt D = 1;
  bareiss_rank(m, rank, D);
  result.free_rank = dim - rank;
  if (rank == 0) return result;

  auto balance = [&D](BigInt& x) {
    x %= D;
    if (2 * x > D) x -= D;
    if (2 * x < -D) x += D;
  };
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) balance(m.at(i, j));

  std::size_t r = 0;
  while (r < rank) {
    std::size_t pi = 0, pj = 0;
    if (!find_min_abs_pivot(m, r, pi, pj)) break;
    swap_rows(m, r, pi);
    swap_cols(m, r, pj);

    // Reduce until the pivot divides its whole row and column, then clear
    // them.  Each reduction strictly shrinks |pivot|, so this terminates.
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = r + 1; i < m.rows(); ++i) {
        if (m.at(i, r) == 0) continue;
        BigInt q = m.at(i, r) / m.at(r, r);
        if (q != 0)
          for (std::size_t j = r; j < m.cols(); ++j) {
            m.at(i, j) -= q * m.at(r, j);
            balance(m.at(i, j));
          }
        if (m.at(i, r) != 0) { // remainder smaller than pivot: promote it
          swap_rows(m, r, i);
          clean = false;
        }
      }
      for (std::size_t j = r + 1; j < m.cols(); ++j) {
        if (m.at(r, j) == 0) continue;
        BigInt q = m.at(r, j) / m.at(r, r);
        if (q != 0)
          for (std::size_t i = r; i < m.rows(); ++i) {
            m.at(i, j) -= q * m.at(i, r);
            balance(m.at(i, j));
          }
        if (m.at(r, j) != 0) {
          swap_cols(m, r, j);
          clean = false;
        }
      }
    }

    // Divisibility fix-up: the pivot must divide every remaining entry.
    bool redo = false;
    for (std::size_t i = r + 1; i < m.rows() && !redo; ++i)
      for (std::size_t j = r + 1; j < m.cols() && !redo; ++j)
        if (m.at(i, j) % m.at(r, r) != 0) {
          for (std::size_t jj = r; jj < m.cols(); ++jj) {
            m.at(r, jj) += m.at(i, jj);
            balance(m.at(r, jj));
          }
          redo = true;
        }
    if (redo) continue; // re-run the reduction at the same r
    // The class of the pivot mod D is what matters; fold D in.
    m.at(r, r) = gcd(abs_big(m.at(r, r)), D);
    ++r;
  }
  for (std::size_t i = 0; i < r; ++i) result.invariant_factors.push_back(m.at(i, i));
  // Slots below the rank that vanished mod D carry the factor D exactly.
  for (std::size_t i = r; i < rank; ++i) result.invariant_factors.push_back(D);
  for (const auto& f : result.invariant_factors)
    if (f == 1) ++result.unit_count;
  return result;
}

BigInt determinant(const IntMatrix& M) {
  if (M.rows() != M.cols()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = M.rows();
  if (n == 0) return 1;
  IntMatrix m = M;
  // Bareiss fraction-free elimination; every division is exact.
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t r = 0; r + 1 < n; ++r) {
    if (m.at(r, r) == 0) {
      std::size_t s = r + 1;
      while (s < n && m.at(s, r) == 0) ++s;
      if (s == n) return 0;
      swap_rows(m, r, s);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < n; ++i)
      for (std::size_t j = r + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(r, r) - m.at(i, r) * m.at(r, j)) / prev;
    prev = m.at(r, r);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : BigInt(-m.at(n - 1, n - 1));
}

namespace {

// gcd of all dim x dim minors; 0 when every minor vanishes.
BigInt minor_gcd(const IntMatrix& M, std::size_t dim) {
  std::vector<std::size_t> rows(dim), cols(dim);
  std::iota(rows.begin(), rows.end(), 0);
  BigInt g = 0;
  auto next_combination = [](std::vector<std::size_t>& c, std::size_t limit) {
    std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
      if (c[i] + (k - i) <= limit) {
        ++c[i];
        for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
        return true;
      }
    }
    return false;
  };
  do {
    std::iota(cols.begin(), cols.end(), 0);
    do {
      g = gcd(g, determinant(M.select(rows, cols)));
      if (g == 1) return g;
    } while (next_combination(cols, M.cols() - 1));
  } while (next_combination(rows, M.rows() - 1));
  return g;
}

} // namespace

SnfResult snf_minor_gcd(const IntMatrix& M, std::size_t max_dim) {
  const std::size_t dim = std::min(M.rows(), M.cols());
  if (std::max(M.rows(), M.cols()) > max_dim)
    throw std::invalid_argument("snf_minor_gcd: dimension too large for the minor oracle");
  SnfResult result;
  BigInt prev = 1;
  for (std::size_t i = 1; i <= dim; ++i) {
    BigInt d = minor_gcd(M, i);
    if (d == 0) break;
    result.invariant_factors.push_back(d / prev);
    if (result.invariant_factors.back() == 1) ++result.unit_count;
    prev = d;
  }
  result.free_rank = dim - result.invariant_factors.size();
  return result;
}

LocalSnf local_snf(const IntMatrix& M, std::int64_t p, int K) {
  if (p < 2) throw std::invalid_argument("local_snf: p must be a prime");
  if (K < 0) throw std::invalid_argument("local_snf: negative modulus exponent");
  if (K == 0) {
    // Hadamard bound: |any minor| <= prod_i sqrt(sum_j M_ij^2) over rows,
    // so v_p of any invariant factor is < log_p(that product) + 1.
    BigInt bound = 1;
    for (std::size_t i = 0; i < M.rows(); ++i) {
      BigInt s = 0;
      for (std::size_t j = 0; j < M.cols(); ++j) s += M.at(i, j) * M.at(i, j);
      BigInt root = sqrt(s);
      if (root * root < s) ++root;
      if (root > 1) bound *= root;
    }
    K = 1;
    BigInt power = p;
    while (power <= bound) {
      power *= p;
      ++K;
    }
  }

  LocalSnf result;
  result.p = p;
  result.modulus_exponent = K;

  const BigInt R = ipow(p, static_cast<std::uint64_t>(K));
  IntMatrix m = M;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      m.at(i, j) %= R;
      if (m.at(i, j) < 0) m.at(i, j) += R;
    }

  const std::size_t dim = std::min(m.rows(), m.cols());
  std::size_t r = 0;
  while (r < dim) {
    // Minimum-valuation pivot, row-major tie break.
    bool found = false;
    int best_v = K;
    std::size_t pi = 0, pj = 0;
    for (std::size_t i = r; i < m.rows() && best_v > 0; ++i)
      for (std::size_t j = r; j < m.cols(); ++j) {
        if (m.at(i, j) == 0) continue;
        int v = valuation(m.at(i, j), p);
        if (!found || v < best_v) {
          found = true;
          best_v = v;
          pi = i;
          pj = j;
          if (v == 0) break;
        }
      }
    if (!found) break; // trailing block vanishes mod p^K
    swap_rows(m, r, pi);
    swap_cols(m, r, pj);

    const int v = best_v;
    const BigInt pv = ipow(p, static_cast<std::uint64_t>(v));
    const BigInt unit = m.at(r, r) / pv;
    const BigInt unit_inv = mod_inverse(unit % R, R);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m.at(i, r) == 0) continue;
      BigInt mult = ((m.at(i, r) / pv) * unit_inv) % R;
      for (std::size_t j = r; j < m.cols(); ++j) {
        m.at(i, j) = (m.at(i, j) - mult * m.at(r, j)) % R;
        if (m.at(i, j) < 0) m.at(i, j) += R;
      }
    }
    for (std::size_t j = r + 1; j < m.cols(); ++j) {
      if (m.at(r, j) == 0) continue;
      BigInt mult = ((m.at(r, j) / pv) * unit_inv) % R;
      for (std::size_t i = r; i < m.rows(); ++i) {
        m.at(i, j) = (m.at(i, j) - mult * m.at(i, r)) % R;
        if (m.at(i, j) < 0) m.at(i, j) += R;
      }
    }
    result.valuations.push_back(v);
    ++r;
  }
  result.capped = dim - r;
  for (std::size_t i = r; i < dim; ++i) result.valuations.push_back(K);
  if (!std::is_sorted(result.valuations.begin(), result.valuations.end()))
    throw std::logic_error("local_snf: valuations not ascending");
  return result;
}

std::size_t p_rank(const IntMatrix& M, std::int64_t p) {
  if (p < 2) throw std::invalid_argument("p_rank: p must be a prime");
  std::vector<std::vector<std::int64_t>> m(M.rows(), std::vector<std::int64_t>(M.cols()));
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) {
      BigInt e = M.at(i, j) % p;
      if (e < 0) e += p;
      m[i][j] = e.convert_to<std::int64_t>();
    }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < M.cols() && rank < M.rows(); ++col) {
    std::size_t piv = rank;
    while (piv < M.rows() && m[piv][col] == 0) ++piv;
    if (piv == M.rows()) continue;
    std::swap(m[rank], m[piv]);
    const std::int64_t inv =
        mod_inverse(BigInt(m[rank][col]), BigInt(p)).convert_to<std::int64_t>();
    for (std::size_t i = rank + 1; i < M.rows(); ++i) {
      if (m[i][col] == 0) continue;
      const std::int64_t f = (m[i][col] * inv) % p;
      for (std::size_t j = col; j < M.cols(); ++j)
        m[i][j] = ((m[i][j] - f * m[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

bool divisibility_product_check(const IntMatrix& A, const IntMatrix& B) {
  if (A.rows() != A.cols() || B.rows() != B.cols() || A.rows() != B.rows())
    throw std::invalid_argument("divisibility_product_check: need square matrices of one size");
  const std::size_t n = A.rows();
  auto full_diagonal = [n](const SnfResult& s) {
    std::vector<BigInt> d = s.invariant_factors;
    d.resize(n, 0);
    return d;
  };
  const auto da = full_diagonal(snf(A));
  const auto db = full_diagonal(snf(B));
  const auto dab = full_diagonal(snf(A * B));
  auto divides = [](const BigInt& x, const BigInt& y) {
    if (x == 0) return y == 0; // only zero is a multiple of zero
    return y % x == 0;
  };
  for (std::size_t k = 0; k < n; ++k)
    if (!divides(da[k], dab[k]) || !divides(db[k], dab[k])) return false;
  return true;
}

} // namespace drt
