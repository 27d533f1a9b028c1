#include "drt/hadamard.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>

#include "drt/snf.hpp"

namespace drt {

SignMatrix::SignMatrix(std::size_t order) : order_(order), e_(order * order, 1) {
  if (order == 0) throw std::invalid_argument("SignMatrix: order must be positive");
}

IntMatrix SignMatrix::to_int_matrix() const {
  IntMatrix m(order_, order_);
  for (std::size_t i = 0; i < order_; ++i)
    for (std::size_t j = 0; j < order_; ++j) m.at(i, j) = at(i, j);
  return m;
}

std::string SignMatrix::to_text() const {
  std::string out;
  out.reserve(order_ * (order_ + 1));
  for (std::size_t i = 0; i < order_; ++i) {
    for (std::size_t j = 0; j < order_; ++j) out += at(i, j) > 0 ? '+' : '-';
    out += '\n';
  }
  return out;
}

SignMatrix SignMatrix::from_text(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) lines.push_back(line);
  if (lines.empty()) throw std::invalid_argument("SignMatrix: empty input");
  SignMatrix h(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].size() != lines.size())
      throw std::invalid_argument("SignMatrix: input is not square");
    for (std::size_t j = 0; j < lines.size(); ++j) {
      const char c = lines[i][j];
      if (c != '+' && c != '-') throw std::invalid_argument("SignMatrix: entries must be + or -");
      h.at(i, j) = c == '+' ? 1 : -1;
    }
  }
  return h;
}

bool is_hadamard(const SignMatrix& h) {
  const std::size_t n = h.order();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      std::int64_t dot = 0;
      for (std::size_t k = 0; k < n; ++k) dot += h.at(i, k) * h.at(j, k);
      if (dot != (i == j ? static_cast<std::int64_t>(n) : 0)) return false;
    }
  return true;
}

bool is_skew(const SignMatrix& h) {
  const std::size_t n = h.order();
  for (std::size_t i = 0; i < n; ++i) {
    if (h.at(i, i) != 1) return false;
    for (std::size_t j = i + 1; j < n; ++j)
      if (h.at(i, j) + h.at(j, i) != 0) return false;
  }
  return true;
}

SignMatrix drt_to_hadamard(const Tournament& t) {
  const std::size_t n = t.size();
  SignMatrix h(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    h.at(i + 1, 0) = -1;
    for (std::size_t j = 0; j < n; ++j) h.at(i + 1, j + 1) = t.arc(i, j) ? -1 : 1;
  }
  if (!is_hadamard(h) || !is_skew(h))
    throw std::runtime_error(
        "drt_to_hadamard: bordered matrix fails the Hadamard identities; "
        "the input is not a doubly-regular tournament");
  return h;
}

Tournament hadamard_to_drt(const SignMatrix& h) {
  const std::size_t order = h.order();
  if (order < 4) throw std::invalid_argument("hadamard_to_drt: order too small");
  if (h.at(0, 0) != 1) throw std::invalid_argument("hadamard_to_drt: corner entry must be +1");
  for (std::size_t j = 1; j < order; ++j)
    if (h.at(0, j) != 1)
      throw std::invalid_argument("hadamard_to_drt: not bordered, first row must be all +1");
  for (std::size_t i = 1; i < order; ++i)
    if (h.at(i, 0) != -1)
      throw std::invalid_argument(
          "hadamard_to_drt: not bordered, first column must be all -1 below the corner");

  const std::size_t n = order - 1;
  std::vector<std::vector<std::uint8_t>> adj(n, std::vector<std::uint8_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      adj[i][j] = static_cast<std::uint8_t>((1 - h.at(i + 1, j + 1)) / 2);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  Tournament t(std::move(labels), std::move(adj), TournamentLayout{});
  auto check = validate_drt(t);
  if (!check.ok) throw std::runtime_error("hadamard_to_drt: " + check.violation);
  return t;
}

SignMatrix normalize_skew_hadamard(const SignMatrix& h) {
  if (!is_hadamard(h) || !is_skew(h))
    throw std::invalid_argument("normalize_skew_hadamard: input is not skew Hadamard");
  const std::size_t n = h.order();
  std::vector<int> d(n, 1);
  for (std::size_t j = 1; j < n; ++j) d[j] = h.at(0, j);
  SignMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = d[i] * h.at(i, j) * d[j];
  return out;
}

HadamardSnfCheck check_hadamard_snf(const SignMatrix& h) {
  HadamardSnfCheck result;
  std::vector<std::string> lines;
  const std::size_t n = h.order();
  if (n % 4 != 0) lines.push_back("order " + std::to_string(n) + " is not divisible by 4");
  if (!is_hadamard(h)) lines.push_back("H Hᵀ = nI fails");
  if (!is_skew(h)) lines.push_back("H + Hᵀ = 2I fails");

  if (lines.empty()) {
    // H Hᵀ = nI pins |det H| = n^(n/2), which is exactly the product of the
    // target diagonal [1, 2 x(2m-1), 2m x(2m-1), 4m].  So matching the
    // valuation profile at every prime of n settles the whole Smith form.
    const std::size_t m = n / 4;
    const IntMatrix M = h.to_int_matrix();
    for (std::int64_t p : prime_factors(static_cast<std::int64_t>(n))) {
      const int vn = valuation(BigInt(static_cast<std::int64_t>(n)), p);
      std::vector<int> expected = {0, vn};
      for (std::size_t i = 0; i < 2 * m - 1; ++i) {
        expected.push_back(valuation(BigInt(2), p));
        expected.push_back(valuation(BigInt(static_cast<std::int64_t>(2 * m)), p));
      }
      std::sort(expected.begin(), expected.end());
      auto loc = local_snf(M, p, vn + 1);
      if (loc.valuations != expected || loc.capped != 0) {
        std::string line = "p=" + std::to_string(p) + ": valuations [";
        for (std::size_t i = 0; i < loc.valuations.size(); ++i)
          line += (i ? "," : "") + std::to_string(loc.valuations[i]);
        line += "] do not match the universal form";
        lines.push_back(line);
      }
    }
  }

  result.ok = lines.empty();
  for (std::size_t i = 0; i < lines.size(); ++i) result.report += (i ? "\n" : "") + lines[i];
  return result;
}

} // namespace drt
