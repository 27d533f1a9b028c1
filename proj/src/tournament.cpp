#include "drt/tournament.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace drt {

Tournament::Tournament(std::vector<std::string> vertex_labels,
                       std::vector<std::vector<std::uint8_t>> adjacency, TournamentLayout layout)
    : labels_(std::move(vertex_labels)), adj_(std::move(adjacency)), layout_(std::move(layout)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw std::invalid_argument("tournament: empty vertex set");
  if (adj_.size() != n) throw std::invalid_argument("tournament: adjacency row count mismatch");
  for (std::size_t i = 0; i < n; ++i)
    if (adj_[i].size() != n)
      throw std::invalid_argument("tournament: adjacency row " + std::to_string(i) +
                                  " has wrong length");
  for (std::size_t i = 0; i < n; ++i) {
    if (adj_[i][i])
      throw std::invalid_argument("tournament: self-arc at vertex " + labels_[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (adj_[i][j] > 1 || adj_[j][i] > 1)
        throw std::invalid_argument("tournament: adjacency entries must be 0 or 1");
      if (adj_[i][j] + adj_[j][i] != 1)
        throw std::invalid_argument("tournament: pair (" + labels_[i] + ", " + labels_[j] +
                                    ") has " + std::to_string(adj_[i][j] + adj_[j][i]) +
                                    " arcs, expected exactly one");
    }
  }
}

std::int64_t Tournament::out_degree(std::size_t v) const {
  std::int64_t d = 0;
  for (std::size_t j = 0; j < size(); ++j) d += adj_[v][j];
  return d;
}

std::int64_t Tournament::common_out_neighbours(std::size_t v, std::size_t w) const {
  std::int64_t d = 0;
  for (std::size_t j = 0; j < size(); ++j) d += (adj_[v][j] & adj_[w][j]);
  return d;
}

IntMatrix Tournament::adjacency_matrix() const {
  IntMatrix m(size(), size());
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if (adj_[i][j]) m.at(i, j) = 1;
  return m;
}

IntMatrix Tournament::laplacian() const {
  IntMatrix q(size(), size());
  for (std::size_t i = 0; i < size(); ++i) {
    q.at(i, i) = out_degree(i);
    for (std::size_t j = 0; j < size(); ++j)
      if (adj_[i][j]) q.at(i, j) -= 1;
  }
  return q;
}

DrtCheck validate_drt(Tournament& T) {
  DrtCheck result;
  const std::int64_t n = static_cast<std::int64_t>(T.size());
  std::ostringstream why;
  if (n % 4 != 3) {
    why << "vertex count " << n << " is not of the form 4*lambda+3";
    result.violation = why.str();
    return result;
  }
  const std::int64_t lambda = (n - 3) / 4;
  const std::int64_t k = 2 * lambda + 1;
  for (std::size_t v = 0; v < T.size(); ++v) {
    const std::int64_t d = T.out_degree(v);
    if (d != k) {
      why << "vertex " << T.vertex_labels()[v] << " has out-degree " << d << ", expected " << k;
      result.violation = why.str();
      return result;
    }
  }
  for (std::size_t v = 0; v < T.size(); ++v)
    for (std::size_t w = v + 1; w < T.size(); ++w) {
      const std::int64_t c = T.common_out_neighbours(v, w);
      if (c != lambda) {
        why << "pair (" << T.vertex_labels()[v] << ", " << T.vertex_labels()[w]
            << ") dominates " << c << " common vertices, expected " << lambda;
        result.violation = why.str();
        return result;
      }
    }
  result.ok = true;
  result.params = DrtParams{n, k, lambda};
  T.params_ = result.params;
  return result;
}

namespace {

Tournament finish_build(std::vector<std::string> labels,
                        std::vector<std::vector<std::uint8_t>> adj, TournamentLayout layout,
                        const char* what) {
  Tournament t(std::move(labels), std::move(adj), std::move(layout));
  auto check = validate_drt(t);
  if (!check.ok)
    throw std::runtime_error(std::string(what) + ": built graph is not a DRT: " +
                             check.violation);
  return t;
}

// Membership mask over group indices for a block, optionally negated
// elementwise and/or with 0 adjoined.
std::vector<std::uint8_t> mask_of(const AbelianGroup& G, const std::vector<std::int64_t>& block,
                                  bool negate, bool with_zero) {
  std::vector<std::uint8_t> m(static_cast<std::size_t>(G.order()), 0);
  for (std::int64_t x : block) m[static_cast<std::size_t>(negate ? G.neg(x) : x)] = 1;
  if (with_zero) m[0] = 1;
  return m;
}

} // namespace

Tournament build_cayley_drt(const AbelianGroup& G, const std::vector<std::int64_t>& S) {
  auto fam = validate_sdf_or_throw(G, {S});
  const std::int64_t n = G.order();
  const auto in_S = mask_of(G, fam.blocks[0], false, false);
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (std::int64_t g = 0; g < n; ++g) labels.push_back(element_label(G, g));
  std::vector<std::vector<std::uint8_t>> adj(static_cast<std::size_t>(n),
                                             std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0));
  for (std::int64_t g = 0; g < n; ++g)
    for (std::int64_t h = 0; h < n; ++h)
      if (in_S[static_cast<std::size_t>(G.sub(h, g))])
        adj[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)] = 1;
  return finish_build(std::move(labels), std::move(adj), TournamentLayout{"cayley", G},
                      "build_cayley_drt");
}

Tournament build_sz(const AbelianGroup& G, const std::vector<std::int64_t>& A,
                    const std::vector<std::int64_t>& B) {
  auto fam = validate_sdf_or_throw(G, {A, B});
  const std::int64_t n = G.order();
  const std::size_t N = static_cast<std::size_t>(2 * n + 1);
  const auto in_A = mask_of(G, fam.blocks[0], false, false);
  const auto in_B0 = mask_of(G, fam.blocks[1], false, true);
  const auto in_negA = mask_of(G, fam.blocks[0], true, false);
  const auto in_B = mask_of(G, fam.blocks[1], false, false);

  std::vector<std::string> labels;
  labels.reserve(N);
  labels.push_back("v0");
  for (std::int64_t g = 0; g < n; ++g) labels.push_back("a" + element_label(G, g));
  for (std::int64_t g = 0; g < n; ++g) labels.push_back("b" + element_label(G, g));

  const auto a = [n](std::int64_t g) { return static_cast<std::size_t>(1 + g); };
  const auto b = [n](std::int64_t g) { return static_cast<std::size_t>(1 + n + g); };

  std::vector<std::vector<std::uint8_t>> adj(N, std::vector<std::uint8_t>(N, 0));
  for (std::int64_t g = 0; g < n; ++g) {
    adj[0][a(g)] = 1;       // v0 beats every a-vertex
    adj[b(g)][0] = 1;       // every b-vertex beats v0
    for (std::int64_t z = 0; z < n; ++z) {
      const std::int64_t gz = G.add(g, z);
      if (in_A[static_cast<std::size_t>(z)]) adj[a(g)][a(gz)] = 1;
      if (in_B0[static_cast<std::size_t>(z)]) adj[a(g)][b(gz)] = 1;
      if (in_negA[static_cast<std::size_t>(z)]) adj[b(g)][b(gz)] = 1;
      if (in_B[static_cast<std::size_t>(z)]) adj[b(g)][a(gz)] = 1;
    }
  }
  return finish_build(std::move(labels), std::move(adj), TournamentLayout{"sz", G}, "build_sz");
}

Tournament build_w(const AbelianGroup& G, const std::vector<std::int64_t>& A,
                   const std::vector<std::int64_t>& B, const std::vector<std::int64_t>& C,
                   const std::vector<std::int64_t>& D) {
  auto fam = validate_sdf_or_throw(G, {A, B, C, D});
  const std::int64_t n = G.order();
  const std::size_t N = static_cast<std::size_t>(4 * n + 3);

  const auto in_A = mask_of(G, fam.blocks[0], false, false);
  const auto in_negA = mask_of(G, fam.blocks[0], true, false);
  const auto in_B = mask_of(G, fam.blocks[1], false, false);
  const auto in_B0 = mask_of(G, fam.blocks[1], false, true);
  const auto in_C = mask_of(G, fam.blocks[2], false, false);
  const auto in_negC0 = mask_of(G, fam.blocks[2], true, true);
  const auto in_D = mask_of(G, fam.blocks[3], false, false);
  const auto in_D0 = mask_of(G, fam.blocks[3], false, true);
  const auto in_negD = mask_of(G, fam.blocks[3], true, false);
  const auto in_negD0 = mask_of(G, fam.blocks[3], true, true);

  std::vector<std::string> labels;
  labels.reserve(N);
  labels.push_back("v1");
  labels.push_back("v2");
  labels.push_back("v3");
  for (const char* mu : {"a", "b", "c", "d"})
    for (std::int64_t g = 0; g < n; ++g) labels.push_back(mu + element_label(G, g));

  const auto a = [n](std::int64_t g) { return static_cast<std::size_t>(3 + g); };
  const auto b = [n](std::int64_t g) { return static_cast<std::size_t>(3 + n + g); };
  const auto c = [n](std::int64_t g) { return static_cast<std::size_t>(3 + 2 * n + g); };
  const auto d = [n](std::int64_t g) { return static_cast<std::size_t>(3 + 3 * n + g); };

  std::vector<std::vector<std::uint8_t>> adj(N, std::vector<std::uint8_t>(N, 0));
  // The three apex vertices form a directed triangle; each beats all of a
  // plus one other letter class, and is beaten by the remaining two.
  adj[0][1] = adj[1][2] = adj[2][0] = 1; // v1 -> v2 -> v3 -> v1
  for (std::int64_t x = 0; x < n; ++x) {
    adj[0][a(x)] = adj[0][c(x)] = 1; // v1 beats a, c
    adj[1][a(x)] = adj[1][d(x)] = 1; // v2 beats a, d
    adj[2][a(x)] = adj[2][b(x)] = 1; // v3 beats a, b
    adj[b(x)][0] = adj[b(x)][1] = 1; // b beats v1, v2
    adj[c(x)][1] = adj[c(x)][2] = 1; // c beats v2, v3
    adj[d(x)][0] = adj[d(x)][2] = 1; // d beats v1, v3
  }
  for (std::int64_t g = 0; g < n; ++g)
    for (std::int64_t z = 0; z < n; ++z) {
      const std::size_t zi = static_cast<std::size_t>(z);
      const std::int64_t gz = G.add(g, z);  // g + z
      const std::int64_t zg = G.sub(z, g);  // z - g (reflected index)
      if (in_A[zi]) adj[a(g)][a(gz)] = 1;
      if (in_B0[zi]) adj[a(g)][b(gz)] = 1;
      if (in_negC0[zi]) adj[a(g)][c(zg)] = 1;
      if (in_D0[zi]) adj[a(g)][d(gz)] = 1;

      if (in_B[zi]) adj[b(g)][a(gz)] = 1;
      if (in_negA[zi]) adj[b(g)][b(gz)] = 1;
      if (in_negD[zi]) adj[b(g)][c(gz)] = 1;
      if (in_negC0[zi]) adj[b(g)][d(zg)] = 1;

      if (in_C[zi]) adj[c(g)][a(zg)] = 1;
      if (in_negD0[zi]) adj[c(g)][b(gz)] = 1;
      if (in_A[zi]) adj[c(g)][c(gz)] = 1;
      if (in_B[zi]) adj[c(g)][d(gz)] = 1;

      if (in_D[zi]) adj[d(g)][a(gz)] = 1;
      if (in_C[zi]) adj[d(g)][b(zg)] = 1;
      if (in_B0[zi]) adj[d(g)][c(gz)] = 1;
      if (in_negA[zi]) adj[d(g)][d(gz)] = 1;
    }
  return finish_build(std::move(labels), std::move(adj), TournamentLayout{"w", G}, "build_w");
}

namespace {

// First entry where got != want, as "(i,j): got g, expected w".
std::string first_diff(const IntMatrix& got, const IntMatrix& want) {
  for (std::size_t i = 0; i < got.rows(); ++i)
    for (std::size_t j = 0; j < got.cols(); ++j)
      if (got.at(i, j) != want.at(i, j)) {
        std::ostringstream os;
        os << "entry (" << i << "," << j << "): got " << got.at(i, j) << ", expected "
           << want.at(i, j);
        return os.str();
      }
  return "";
}

} // namespace

IdentityReport check_drt_identities(const Tournament& T) {
  IdentityReport report;
  if (!T.drt_params()) {
    report.failure = "tournament has no validated DRT parameters";
    return report;
  }
  return check_drt_identities(T, *T.drt_params());
}

IdentityReport check_drt_identities(const Tournament& T, const DrtParams& params) {
  IdentityReport report;
  const auto [n64, k64, lambda] = params;
  const std::size_t n = static_cast<std::size_t>(n64);
  const IntMatrix M = T.adjacency_matrix();
  const IntMatrix Q = T.laplacian();
  const IntMatrix I = IntMatrix::identity(n);
  const IntMatrix J = IntMatrix::all_ones(n, n);
  const IntMatrix Mt = M.transpose();
  const IntMatrix Qt = Q.transpose();
  const BigInt k = k64, lam = lambda, nn = n64;

  struct Item {
    const char* name;
    IntMatrix got, want;
  };
  const Item items[] = {
      {"M + M^T = J - I", M + Mt, J - I},
      {"M M^T = (lambda+1)I + lambda J", M * Mt, (lam + 1) * I + lam * J},
      {"Q + Q^T = (4lambda+3)I - J", Q + Qt, nn * I - J},
      {"Q Q^T = (4lambda+3)(lambda+1)I - (lambda+1)J", Q * Qt,
       nn * (lam + 1) * I - (lam + 1) * J},
      {"M^2 + M + (lambda+1)I = (lambda+1)J", M * M + M + (lam + 1) * I, (lam + 1) * J},
  };
  for (const auto& it : items) {
    if (it.got != it.want) {
      report.failure = std::string(it.name) + " fails at " + first_diff(it.got, it.want);
      return report;
    }
    report.checked.push_back(it.name);
  }
  for (std::size_t i = 0; i < n; ++i) {
    BigInt row = 0, col = 0;
    for (std::size_t j = 0; j < n; ++j) {
      row += Q.at(i, j);
      col += Q.at(j, i);
    }
    if (row != 0 || col != 0) {
      report.failure = "Laplacian line sums nonzero at index " + std::to_string(i);
      return report;
    }
  }
  report.checked.push_back("Q row and column sums are zero");
  report.ok = true;
  return report;
}

std::string to_json_string(const Tournament& T) {
  nlohmann::ordered_json j;
  j["labels"] = T.vertex_labels();
  auto arcs = nlohmann::json::array();
  for (std::size_t v = 0; v < T.size(); ++v)
    for (std::size_t w = 0; w < T.size(); ++w)
      if (T.arc(v, w)) arcs.push_back({v, w});
  j["arcs"] = std::move(arcs);
  j["layout"]["kind"] = T.layout().kind;
  if (T.layout().group)
    j["layout"]["group"] = T.layout().group->invariant_factors();
  else
    j["layout"]["group"] = nullptr;
  if (T.drt_params()) {
    j["drt_params"]["n"] = T.drt_params()->n;
    j["drt_params"]["k"] = T.drt_params()->k;
    j["drt_params"]["lambda"] = T.drt_params()->lambda;
  } else {
    j["drt_params"] = nullptr;
  }
  return j.dump(2);
}

Tournament tournament_from_json_string(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  auto labels = j.at("labels").get<std::vector<std::string>>();
  const std::size_t n = labels.size();
  std::vector<std::vector<std::uint8_t>> adj(n, std::vector<std::uint8_t>(n, 0));
  for (const auto& arc : j.at("arcs")) {
    const std::size_t v = arc.at(0).get<std::size_t>();
    const std::size_t w = arc.at(1).get<std::size_t>();
    if (v >= n || w >= n) throw std::invalid_argument("tournament json: arc index out of range");
    adj[v][w] = 1;
  }
  TournamentLayout layout;
  if (j.contains("layout")) {
    layout.kind = j["layout"].value("kind", "generic");
    if (j["layout"].contains("group") && !j["layout"]["group"].is_null())
      layout.group = AbelianGroup(j["layout"]["group"].get<std::vector<std::int64_t>>());
  }
  Tournament t(std::move(labels), std::move(adj), std::move(layout));
  validate_drt(t); // stamps params when they hold; harmless otherwise
  return t;
}

} // namespace drt
