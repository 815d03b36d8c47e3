#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "swapalg/bracket.hpp"
#include "swapalg/grassmannian.hpp"
#include "swapalg/polynomial.hpp"

namespace swapalg {

enum class VertexKind { Boundary, White, Black };

struct NetworkVertex {
  std::string id;
  VertexKind kind = VertexKind::White;
  /// k for the boundary vertex v_k; 0 for inner vertices.
  int boundary_index = 0;
};

struct NetworkEdge {
  std::string id;
  std::string from;
  std::string to;
};

/// The variable x_p of an incident pair p = (vertex, edge).
struct NetworkVar {
  std::string vertex;
  std::string edge;

  auto operator<=>(const NetworkVar&) const = default;
  std::string name() const { return "x(" + vertex + "," + edge + ")"; }
};

}  // namespace swapalg

template <>
struct std::hash<swapalg::NetworkVar> {
  std::size_t operator()(const swapalg::NetworkVar& v) const noexcept {
    std::size_t h = std::hash<std::string>{}(v.vertex);
    return h ^ (std::hash<std::string>{}(v.edge) + 0x9e3779b97f4a7c15ULL + (h << 6U) + (h >> 2U));
  }
};

namespace swapalg {

using NetworkPoly = Polynomial<NetworkVar>;
using NetworkMatrix = std::vector<std::vector<NetworkPoly>>;

/// How a trivalent vertex's variables are bracketed.
/// Literal: label (p, q, r) clockwise starting at the incoming edge of a white vertex (the
/// outgoing edge of a black one); {x_q, x_r} = alpha x_q x_r at white, beta x_q x_r at black.
/// Mirrored: label anticlockwise from the same edge, with beta at white and alpha at black.
enum class VertexRule { Literal, Mirrored };

/// {x_q, x_r}_N = coeff * x_q * x_r.
struct LogCanonicalPair {
  NetworkVar q;
  NetworkVar r;
  Rational coeff;
};

/// A directed planar graph on a disk with boundary vertices v_1..v_r anticlockwise and
/// trivalent white/black inner vertices. Planarity of the declared edge orders is trusted.
///
/// Text format, one declaration per line ('#' starts a comment):
///   vertex <id> boundary <k> | vertex <id> white | vertex <id> black
///   edge <id> <from> <to>
///   order <vertex> <edge> <edge> <edge>     (clockwise around an inner vertex)
///   sources <k> ...                          (the index set I)
class PlanarNetwork {
 public:
  /// Throws ParseError (position = 1-based line) on malformed text.
  static PlanarNetwork parse(std::string_view text);
  static PlanarNetwork load(const std::string& path);
  /// Canonical text; parse(serialize()) reproduces the network and serialize is a fixed point.
  std::string serialize() const;

  void add_vertex(NetworkVertex v);
  void add_edge(NetworkEdge e);
  void set_order(const std::string& vertex, std::vector<std::string> clockwise_edges);
  void set_sources(std::vector<int> sources);

  const std::vector<NetworkVertex>& vertices() const { return vertices_; }
  const std::vector<NetworkEdge>& edges() const { return edges_; }
  const std::vector<int>& sources() const { return sources_; }
  /// Boundary vertex count r.
  int boundary_count() const;

  /// Every violated invariant, each naming the offending vertex or edge; empty when valid.
  std::vector<std::string> validate() const;
  /// Throws InvalidInput listing all validation errors.
  void require_valid() const;

  /// Variables of all incident pairs, sorted.
  std::vector<NetworkVar> variables() const;
  /// w_e = x_(tail, e) * x_(head, e).
  NetworkPoly edge_weight(const NetworkEdge& e) const;

  /// n x r matrix: identity on the source columns, path-weight sums elsewhere. Rows follow
  /// the sources in increasing order.
  NetworkMatrix boundary_measurement() const;
  /// The same matrix by explicit enumeration of every directed path (exponential; for checking).
  NetworkMatrix boundary_measurement_by_enumeration() const;

  std::vector<LogCanonicalPair> bracket_pairs(const BracketParams& p, VertexRule rule = VertexRule::Literal) const;

  SchubertIndex schubert_index() const { return SchubertIndex(boundary_count(), sources_); }

 private:
  const NetworkVertex& vertex(const std::string& id) const;
  std::vector<std::string> topological_order() const;

  std::vector<NetworkVertex> vertices_;
  std::vector<NetworkEdge> edges_;
  std::vector<std::pair<std::string, std::vector<std::string>>> orders_;
  std::vector<int> sources_;
};

NetworkPoly network_bracket(const NetworkPoly& f, const NetworkPoly& g, const PlanarNetwork& net, const BracketParams& p,
                            VertexRule rule = VertexRule::Literal);

/// Leibniz determinant of a square matrix of network polynomials.
NetworkPoly network_det(const NetworkMatrix& m);

struct NetworkPairCheck {
  CoordSymbol c;
  CoordSymbol cp;
  NetworkPoly network_side;
  NetworkPoly formula_side;
  bool match = false;
};

/// For every unordered coordinate pair (c <= c'), compares {m_c, m_c'}_N with the formula
/// bracket evaluated at m_kl = Delta_{I(k->l)}(M) / Delta_I(M), M = boundary_measurement().
std::vector<NetworkPairCheck> verify_network_vs_formula(const PlanarNetwork& net, const BracketParams& p,
                                                        VertexRule rule = VertexRule::Literal);

}  // namespace swapalg
