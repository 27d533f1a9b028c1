#pragma once

#include "drt/abelian_group.hpp"
#include "drt/int_matrix.hpp"
#include "drt/sdf.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace drt {

// (n, k, lambda) of a doubly regular tournament: n = 4*lambda + 3 vertices,
// every out-degree k = 2*lambda + 1, every vertex pair jointly dominating
// exactly lambda vertices.
struct DrtParams {
  std::int64_t n = 0, k = 0, lambda = 0;
  bool operator==(const DrtParams&) const = default;
};

// How the vertex set was produced; "group" is set for the structured kinds.
struct TournamentLayout {
  std::string kind = "generic"; // generic | cayley | sz | w
  std::optional<AbelianGroup> group;
  bool operator==(const TournamentLayout&) const = default;
};

class Tournament;
struct DrtCheck;
DrtCheck validate_drt(Tournament& T);

class Tournament {
public:
  Tournament(std::vector<std::string> vertex_labels,
             std::vector<std::vector<std::uint8_t>> adjacency,
             TournamentLayout layout = {});

  std::size_t size() const { return labels_.size(); }
  bool arc(std::size_t from, std::size_t to) const { return adj_[from][to] != 0; }
  const std::vector<std::string>& vertex_labels() const { return labels_; }
  const TournamentLayout& layout() const { return layout_; }
  const std::optional<DrtParams>& drt_params() const { return params_; }

  std::int64_t out_degree(std::size_t v) const;
  // |N+(v) n N+(w)|, the number of vertices both v and w beat.
  std::int64_t common_out_neighbours(std::size_t v, std::size_t w) const;

  IntMatrix adjacency_matrix() const;
  // Q = (out-degree diagonal) - M; equals kI - M once drt_params holds.
  IntMatrix laplacian() const;

  bool operator==(const Tournament&) const = default;

private:
  friend DrtCheck validate_drt(Tournament& T);

  std::vector<std::string> labels_;
  std::vector<std::vector<std::uint8_t>> adj_;
  TournamentLayout layout_;
  std::optional<DrtParams> params_;
};

// Result of validate_drt: checks n = 4*lambda+3, all out-degrees, and all
// pair co-domination counts; on success stamps params onto T.
struct DrtCheck {
  bool ok = false;
  std::optional<DrtParams> params;
  std::string violation; // names the offending vertex or pair
};

// Cayley tournament on G: arc g -> h iff h - g lies in S.  S must be a
// one-block skew difference family (checked).
Tournament build_cayley_drt(const AbelianGroup& G, const std::vector<std::int64_t>& S);

// Center vertex plus two group-indexed classes; (A,B) a two-block family.
// Vertex order: v0, a_g (group order), b_g.
Tournament build_sz(const AbelianGroup& G, const std::vector<std::int64_t>& A,
                    const std::vector<std::int64_t>& B);

// Three apex vertices plus four group-indexed classes; (A,B,C,D) a
// four-block family.  Vertex order: v1, v2, v3, a_g, b_g, c_g, d_g.
Tournament build_w(const AbelianGroup& G, const std::vector<std::int64_t>& A,
                   const std::vector<std::int64_t>& B, const std::vector<std::int64_t>& C,
                   const std::vector<std::int64_t>& D);

struct IdentityReport {
  bool ok = false;
  std::string failure; // first failed identity with a witness entry
  std::vector<std::string> checked;
};

// Exact matrix identities every DRT satisfies:
//   M + M^T = J - I            MM^T = (lambda+1)I + lambda J
//   Q + Q^T = (4lambda+3)I - J QQ^T = (4lambda+3)(lambda+1)I - (lambda+1)J
//   M^2 + M + (lambda+1)I = (lambda+1)J
// plus zero row and column sums of Q.
IdentityReport check_drt_identities(const Tournament& T);
// Same checks against claimed parameters (lets callers show where a
// non-DRT tournament breaks the identities).
IdentityReport check_drt_identities(const Tournament& T, const DrtParams& params);

std::string to_json_string(const Tournament& T);
Tournament tournament_from_json_string(const std::string& text);

} // namespace drt
