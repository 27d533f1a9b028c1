#include "drt/finite_field.hpp"

#include "drt/bigint.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace drt {
namespace {

// Dense polynomials over GF(p), coefficients in [0, p), constant first,
// no trailing zeros.
using Poly = std::vector<std::int64_t>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& m, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  // Reduce mod the monic m.
  const std::size_t deg_m = m.size() - 1;
  for (std::size_t i = c.size(); i-- > deg_m;) {
    std::int64_t lead = c[i];
    if (lead == 0) continue;
    c[i] = 0;
    for (std::size_t j = 0; j < deg_m; ++j) {
      c[i - deg_m + j] = (c[i - deg_m + j] - lead * m[j]) % p;
      if (c[i - deg_m + j] < 0) c[i - deg_m + j] += p;
    }
  }
  c.resize(deg_m);
  trim(c);
  return c;
}

Poly poly_pow_mod(Poly base, BigInt e, const Poly& m, std::int64_t p) {
  Poly r = {1};
  while (e > 0) {
    if ((e & 1) != 0) r = poly_mul_mod(r, base, m, p);
    base = poly_mul_mod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

Poly poly_mod(Poly a, const Poly& m, std::int64_t p) {
  const std::size_t deg_m = m.size() - 1;
  for (std::size_t i = a.size(); i-- > deg_m;) {
    std::int64_t lead = a[i] % p;
    if (lead < 0) lead += p;
    if (lead == 0) continue;
    a[i] = 0;
    for (std::size_t j = 0; j < deg_m; ++j) {
      a[i - deg_m + j] = (a[i - deg_m + j] - lead * m[j]) % p;
      if (a[i - deg_m + j] < 0) a[i - deg_m + j] += p;
    }
  }
  if (a.size() > deg_m) a.resize(deg_m);
  trim(a);
  return a;
}

Poly poly_gcd(Poly a, Poly b, std::int64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b with b made monic first.
    std::int64_t lead_inv = 1;
    {
      std::int64_t lead = b.back(), x = 1;
      // Fermat inverse mod p.
      std::int64_t e = p - 2, base = lead;
      while (e) {
        if (e & 1) x = x * base % p;
        base = base * base % p;
        e >>= 1;
      }
      lead_inv = x;
    }
    Poly bm = b;
    for (auto& c : bm) c = c * lead_inv % p;
    Poly r = poly_mod(a, bm, p);
    a = b;
    b = r;
  }
  return a;
}

// f monic of degree t: irreducible over GF(p) iff x^(p^t) == x (mod f) and
// gcd(x^(p^(t/r)) - x, f) = 1 for every prime r | t.
bool poly_irreducible(const Poly& f, std::int64_t p) {
  const int t = static_cast<int>(f.size()) - 1;
  if (t < 1) return false;
  const Poly x = {0, 1};
  Poly xqt = poly_pow_mod(x, ipow(BigInt(p), t), f, p);
  if (xqt != poly_mod(x, f, p)) return false;
  for (std::int64_t r : prime_factors(t)) {
    Poly xs = poly_pow_mod(x, ipow(BigInt(p), t / r), f, p);
    // xs - x
    Poly d = xs;
    if (d.size() < 2) d.resize(2, 0);
    d[1] = (d[1] - 1) % p;
    if (d[1] < 0) d[1] += p;
    trim(d);
    Poly g = poly_gcd(d, f, p);
    if (g.size() > 1) return false;
  }
  return true;
}

std::int64_t encode(const Poly& f, std::int64_t p) {
  std::int64_t code = 0, stride = 1;
  for (std::int64_t c : f) {
    code += c * stride;
    stride *= p;
  }
  return code;
}

Poly decode(std::int64_t code, std::int64_t p, int t) {
  Poly f(t);
  for (int j = 0; j < t; ++j) {
    f[j] = code % p;
    code /= p;
  }
  trim(f);
  return f;
}

} // namespace

std::shared_ptr<const FiniteField> FiniteField::make(std::int64_t p, int t) {
  return ModulusTable::builtin().make_field(p, t);
}

std::shared_ptr<const FiniteField> FiniteField::make(std::int64_t p, int t,
                                                     std::vector<std::int64_t> modulus) {
  if (!is_prime(p)) throw std::invalid_argument("FiniteField: p must be prime");
  if (t < 1) throw std::invalid_argument("FiniteField: t must be >= 1");
  BigInt qb = ipow(BigInt(p), t);
  if (qb > (1 << 20)) throw std::invalid_argument("FiniteField: q too large");
  if (modulus.size() != static_cast<std::size_t>(t) + 1)
    throw std::invalid_argument("FiniteField: modulus must have degree t");
  for (auto& c : modulus) {
    c %= p;
    if (c < 0) c += p;
  }
  if (modulus.back() != 1) throw std::invalid_argument("FiniteField: modulus must be monic");
  if (!poly_irreducible(modulus, p))
    throw std::invalid_argument("FiniteField: modulus is not irreducible over GF(p)");

  auto F = std::shared_ptr<FiniteField>(new FiniteField());
  F->p_ = p;
  F->t_ = t;
  F->q_ = static_cast<std::int64_t>(qb);
  F->modulus_ = modulus;

  // Fixed generator: for t = 1 try the root of the modulus first, else the
  // class of x; fall back to scanning codes in order.  A candidate must
  // have multiplicative order exactly q - 1.
  auto order_ok = [&](std::int64_t g) {
    if (g == 0) return false;
    Poly gp = decode(g, p, t);
    for (std::int64_t r : prime_factors(F->q_ - 1)) {
      Poly e = poly_pow_mod(gp, BigInt((F->q_ - 1) / r), modulus, p);
      if (e == Poly{1}) return false;
    }
    return true;
  };
  std::vector<std::int64_t> candidates;
  if (t == 1)
    candidates.push_back(((p - modulus[0]) % p + p) % p);
  else
    candidates.push_back(p); // the class of x
  for (std::int64_t g = 2; g < F->q_; ++g) candidates.push_back(g);
  std::int64_t gen = 0;
  for (std::int64_t g : candidates)
    if (order_ok(g)) {
      gen = g;
      break;
    }
  if (gen == 0) throw std::logic_error("FiniteField: no generator found");
  F->generator_ = gen;

  F->exp_.resize(F->q_ - 1);
  F->log_.assign(F->q_, -1);
  Poly gp = decode(gen, p, t), acc = {1};
  for (std::int64_t k = 0; k < F->q_ - 1; ++k) {
    std::int64_t code = encode(acc, p);
    if (F->log_[code] != -1) throw std::logic_error("FiniteField: generator order check failed");
    F->exp_[k] = code;
    F->log_[code] = k;
    acc = poly_mul_mod(acc, gp, modulus, p);
  }
  if (acc != Poly{1}) throw std::logic_error("FiniteField: generator order is not q-1");
  return F;
}

std::int64_t FiniteField::add(std::int64_t a, std::int64_t b) const {
  if (a < 0 || a >= q_ || b < 0 || b >= q_) throw std::out_of_range("FiniteField: element out of range");
  std::int64_t r = 0, stride = 1;
  for (int j = 0; j < t_; ++j) {
    r += ((a + b) % p_) * stride;
    a /= p_;
    b /= p_;
    stride *= p_;
  }
  return r;
}

std::int64_t FiniteField::neg(std::int64_t a) const {
  if (a < 0 || a >= q_) throw std::out_of_range("FiniteField: element out of range");
  std::int64_t r = 0, stride = 1;
  for (int j = 0; j < t_; ++j) {
    r += ((p_ - a % p_) % p_) * stride;
    a /= p_;
    stride *= p_;
  }
  return r;
}

std::int64_t FiniteField::mul(std::int64_t a, std::int64_t b) const {
  if (a < 0 || a >= q_ || b < 0 || b >= q_) throw std::out_of_range("FiniteField: element out of range");
  if (a == 0 || b == 0) return 0;
  return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

std::int64_t FiniteField::inv(std::int64_t a) const {
  if (a <= 0 || a >= q_) throw std::invalid_argument("FiniteField: inverse of zero or out of range");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

std::int64_t FiniteField::pow(std::int64_t a, std::int64_t e) const {
  if (a < 0 || a >= q_) throw std::out_of_range("FiniteField: element out of range");
  if (a == 0) {
    if (e < 0) throw std::invalid_argument("FiniteField: negative power of zero");
    return e == 0 ? 1 : 0;
  }
  std::int64_t k = log_[a] % (q_ - 1);
  std::int64_t ke = (k * (e % (q_ - 1))) % (q_ - 1);
  if (ke < 0) ke += q_ - 1;
  return exp_[ke];
}

std::int64_t FiniteField::exp(std::int64_t k) const {
  k %= (q_ - 1);
  if (k < 0) k += q_ - 1;
  return exp_[k];
}

std::int64_t FiniteField::log(std::int64_t a) const {
  if (a <= 0 || a >= q_) throw std::invalid_argument("FiniteField: log of zero or out of range");
  return log_[a];
}

AbelianGroup FiniteField::additive_group() const {
  return AbelianGroup(std::vector<std::int64_t>(t_, p_));
}

std::vector<std::int64_t> squares(const FiniteField& F) {
  std::vector<std::int64_t> out;
  if (F.p() == 2) { // squaring is a bijection in characteristic 2
    for (std::int64_t a = 1; a < F.q(); ++a) out.push_back(a);
    return out;
  }
  out.reserve((F.q() - 1) / 2);
  for (std::int64_t k = 0; k < F.q() - 1; k += 2) out.push_back(F.exp(k));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::map<std::pair<std::int64_t, int>, std::vector<std::int64_t>> builtin_entries() {
  // Standard published polynomials: for t = 1 these are x - g with g the
  // least primitive root mod p; for t > 1 the class of x is primitive.
  return {
      {{2, 1}, {1, 1}},
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{3, 1}, {1, 1}},
      {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{3, 4}, {2, 0, 0, 2, 1}},
      {{3, 5}, {1, 2, 0, 0, 0, 1}},
      {{5, 1}, {3, 1}},
      {{5, 2}, {2, 4, 1}},
      {{7, 1}, {4, 1}},
      {{7, 2}, {3, 6, 1}},
      {{11, 1}, {9, 1}},
      {{13, 1}, {11, 1}},
      {{17, 1}, {14, 1}},
      {{19, 1}, {17, 1}},
      {{23, 1}, {18, 1}},
      {{29, 1}, {27, 1}},
      {{31, 1}, {28, 1}},
      {{37, 1}, {35, 1}},
      {{41, 1}, {35, 1}},
      {{43, 1}, {40, 1}},
      {{47, 1}, {42, 1}},
      {{59, 1}, {57, 1}},
      {{61, 1}, {59, 1}},
      {{67, 1}, {65, 1}},
      {{71, 1}, {64, 1}},
  };
}

} // namespace

const ModulusTable& ModulusTable::builtin() {
  static ModulusTable t = [] {
    ModulusTable t;
    t.table_ = builtin_entries();
    return t;
  }();
  return t;
}

ModulusTable ModulusTable::with_overrides(std::istream& in) {
  ModulusTable t = builtin();
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    std::istringstream ls(line);
    std::int64_t p;
    int deg;
    if (!(ls >> p >> deg))
      throw std::invalid_argument("modulus table: bad line " + std::to_string(lineno));
    std::vector<std::int64_t> coeffs;
    std::int64_t c;
    while (ls >> c) coeffs.push_back(c);
    if (coeffs.size() != static_cast<std::size_t>(deg) + 1)
      throw std::invalid_argument("modulus table: line " + std::to_string(lineno) +
                                  " expects t+1 coefficients");
    t.table_[{p, deg}] = coeffs;
  }
  return t;
}

ModulusTable ModulusTable::with_overrides_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("modulus table: cannot open " + path);
  return with_overrides(in);
}

std::optional<std::vector<std::int64_t>> ModulusTable::find(std::int64_t p, int t) const {
  auto it = table_.find({p, t});
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

std::shared_ptr<const FiniteField> ModulusTable::make_field(std::int64_t p, int t) const {
  auto m = find(p, t);
  if (!m)
    throw std::invalid_argument("FiniteField: no modulus known for p=" + std::to_string(p) +
                                ", t=" + std::to_string(t) +
                                "; supply one explicitly or via a config file");
  return FiniteField::make(p, t, *m);
}

} // namespace drt
