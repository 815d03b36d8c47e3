#include "swapalg/networks.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "swapalg/errors.hpp"

namespace swapalg {

namespace {

std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> words;
  std::string word;
  std::istringstream in{std::string(line)};
  while (in >> word) words.push_back(word);
  return words;
}

int parse_positive(const std::string& text, std::size_t line) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw ParseError("expected a positive integer, got '" + text + "'", line);
  }
  if (used != text.size() || value < 1) throw ParseError("expected a positive integer, got '" + text + "'", line);
  return value;
}

const char* kind_name(VertexKind k) {
  switch (k) {
    case VertexKind::Boundary:
      return "boundary";
    case VertexKind::White:
      return "white";
    case VertexKind::Black:
      return "black";
  }
  return "white";
}

}  // namespace

PlanarNetwork PlanarNetwork::parse(std::string_view text) {
  PlanarNetwork net;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<std::string> w = split_words(line);
    if (w.empty()) continue;
    const std::string& key = w[0];
    if (key == "vertex") {
      if (w.size() == 4 && w[2] == "boundary") {
        net.add_vertex({w[1], VertexKind::Boundary, parse_positive(w[3], line_no)});
      } else if (w.size() == 3 && (w[2] == "white" || w[2] == "black")) {
        net.add_vertex({w[1], w[2] == "white" ? VertexKind::White : VertexKind::Black, 0});
      } else {
        throw ParseError("expected 'vertex <id> boundary <k>' or 'vertex <id> white|black'", line_no);
      }
    } else if (key == "edge") {
      if (w.size() != 4) throw ParseError("expected 'edge <id> <from> <to>'", line_no);
      net.add_edge({w[1], w[2], w[3]});
    } else if (key == "order") {
      if (w.size() < 3) throw ParseError("expected 'order <vertex> <edge>...'", line_no);
      net.set_order(w[1], std::vector<std::string>(w.begin() + 2, w.end()));
    } else if (key == "sources") {
      std::vector<int> s;
      for (std::size_t k = 1; k < w.size(); ++k) s.push_back(parse_positive(w[k], line_no));
      net.set_sources(std::move(s));
    } else {
      throw ParseError("unknown declaration '" + key + "'", line_no);
    }
    if (end == text.size()) break;
  }
  return net;
}

PlanarNetwork PlanarNetwork::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open network file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

std::string PlanarNetwork::serialize() const {
  std::string out;
  for (const auto& v : vertices_) {
    out += "vertex " + v.id + " " + kind_name(v.kind);
    if (v.kind == VertexKind::Boundary) out += " " + std::to_string(v.boundary_index);
    out += "\n";
  }
  for (const auto& e : edges_) out += "edge " + e.id + " " + e.from + " " + e.to + "\n";
  for (const auto& [v, order] : orders_) {
    out += "order " + v;
    for (const auto& e : order) out += " " + e;
    out += "\n";
  }
  out += "sources";
  for (int s : sources_) out += " " + std::to_string(s);
  out += "\n";
  return out;
}

void PlanarNetwork::add_vertex(NetworkVertex v) { vertices_.push_back(std::move(v)); }
void PlanarNetwork::add_edge(NetworkEdge e) { edges_.push_back(std::move(e)); }

void PlanarNetwork::set_order(const std::string& vertex, std::vector<std::string> clockwise_edges) {
  for (auto& [v, order] : orders_) {
    if (v == vertex) {
      order = std::move(clockwise_edges);
      return;
    }
  }
  orders_.emplace_back(vertex, std::move(clockwise_edges));
}

void PlanarNetwork::set_sources(std::vector<int> sources) { sources_ = std::move(sources); }

int PlanarNetwork::boundary_count() const {
  return static_cast<int>(std::count_if(vertices_.begin(), vertices_.end(),
                                        [](const NetworkVertex& v) { return v.kind == VertexKind::Boundary; }));
}

const NetworkVertex& PlanarNetwork::vertex(const std::string& id) const {
  for (const auto& v : vertices_) {
    if (v.id == id) return v;
  }
  throw InvalidInput("unknown vertex '" + id + "'");
}

std::vector<std::string> PlanarNetwork::validate() const {
  std::vector<std::string> errors;
  std::map<std::string, const NetworkVertex*> by_id;
  std::set<int> boundary_indices;
  for (const auto& v : vertices_) {
    if (!by_id.emplace(v.id, &v).second) errors.push_back("vertex " + v.id + ": duplicate id");
    if (v.kind == VertexKind::Boundary && !boundary_indices.insert(v.boundary_index).second) {
      errors.push_back("vertex " + v.id + ": duplicate boundary index " + std::to_string(v.boundary_index));
    }
  }
  const int r = boundary_count();
  for (const auto& v : vertices_) {
    if (v.kind == VertexKind::Boundary && (v.boundary_index < 1 || v.boundary_index > r)) {
      errors.push_back("vertex " + v.id + ": boundary index must lie in 1.." + std::to_string(r));
    }
  }

  std::map<std::string, int> in_degree;
  std::map<std::string, int> out_degree;
  std::map<std::string, std::set<std::string>> incident;
  std::set<std::string> edge_ids;
  for (const auto& e : edges_) {
    if (!edge_ids.insert(e.id).second) errors.push_back("edge " + e.id + ": duplicate id");
    bool ok = true;
    for (const std::string* end : {&e.from, &e.to}) {
      if (by_id.count(*end) == 0) {
        errors.push_back("edge " + e.id + ": unknown vertex " + *end);
        ok = false;
      }
    }
    if (e.from == e.to) {
      errors.push_back("edge " + e.id + ": loop at " + e.from);
      ok = false;
    }
    if (!ok) continue;
    ++out_degree[e.from];
    ++in_degree[e.to];
    incident[e.from].insert(e.id);
    incident[e.to].insert(e.id);
  }

  std::set<int> sources(sources_.begin(), sources_.end());
  if (sources.size() != sources_.size()) errors.push_back("sources: repeated index");
  for (int s : sources_) {
    if (s < 1 || s > r) errors.push_back("sources: index " + std::to_string(s) + " outside 1.." + std::to_string(r));
  }
  if (sources_.empty()) errors.push_back("sources: the index set I is empty");

  for (const auto& v : vertices_) {
    int in = in_degree[v.id];
    int out = out_degree[v.id];
    auto degrees = " (in " + std::to_string(in) + ", out " + std::to_string(out) + ")";
    switch (v.kind) {
      case VertexKind::Boundary:
        if (sources.count(v.boundary_index) != 0) {
          if (in != 0 || out != 1) errors.push_back("vertex " + v.id + ": a source needs one outgoing and no incoming edge" + degrees);
        } else if (in != 1 || out != 0) {
          errors.push_back("vertex " + v.id + ": a sink needs one incoming and no outgoing edge" + degrees);
        }
        break;
      case VertexKind::White:
        if (in != 1 || out != 2) errors.push_back("vertex " + v.id + ": a white vertex needs 1 incoming and 2 outgoing edges" + degrees);
        break;
      case VertexKind::Black:
        if (in != 2 || out != 1) errors.push_back("vertex " + v.id + ": a black vertex needs 2 incoming and 1 outgoing edge" + degrees);
        break;
    }
    if (v.kind != VertexKind::Boundary) {
      auto it = std::find_if(orders_.begin(), orders_.end(), [&](const auto& o) { return o.first == v.id; });
      if (it == orders_.end()) {
        errors.push_back("vertex " + v.id + ": missing clockwise edge order");
      } else {
        std::set<std::string> listed(it->second.begin(), it->second.end());
        if (listed != incident[v.id] || it->second.size() != listed.size()) {
          errors.push_back("vertex " + v.id + ": edge order must list each incident edge once");
        }
      }
    }
  }
  for (const auto& [v, order] : orders_) {
    auto it = by_id.find(v);
    if (it == by_id.end()) {
      errors.push_back("order: unknown vertex " + v);
    } else if (it->second->kind == VertexKind::Boundary) {
      errors.push_back("order: vertex " + v + " is a boundary vertex");
    }
  }

  if (errors.empty() && topological_order().size() != vertices_.size()) {
    errors.push_back("network: directed cycle (only acyclic networks are supported)");
  }
  return errors;
}

void PlanarNetwork::require_valid() const {
  auto errors = validate();
  if (errors.empty()) return;
  std::string message = "invalid network:";
  for (const auto& e : errors) message += "\n  " + e;
  throw InvalidInput(message);
}

std::vector<std::string> PlanarNetwork::topological_order() const {
  std::map<std::string, int> in_degree;
  for (const auto& v : vertices_) in_degree[v.id] = 0;
  for (const auto& e : edges_) ++in_degree[e.to];
  std::vector<std::string> ready;
  for (const auto& v : vertices_) {
    if (in_degree[v.id] == 0) ready.push_back(v.id);
  }
  std::vector<std::string> order;
  while (!ready.empty()) {
    std::string v = ready.front();
    ready.erase(ready.begin());
    order.push_back(v);
    for (const auto& e : edges_) {
      if (e.from == v && --in_degree[e.to] == 0) ready.push_back(e.to);
    }
  }
  return order;
}

std::vector<NetworkVar> PlanarNetwork::variables() const {
  std::vector<NetworkVar> out;
  for (const auto& e : edges_) {
    out.push_back({e.from, e.id});
    out.push_back({e.to, e.id});
  }
  std::sort(out.begin(), out.end());
  return out;
}

NetworkPoly PlanarNetwork::edge_weight(const NetworkEdge& e) const {
  return NetworkPoly::variable({e.from, e.id}) * NetworkPoly::variable({e.to, e.id});
}

NetworkMatrix PlanarNetwork::boundary_measurement() const {
  require_valid();
  std::vector<int> rows = sources_;
  std::sort(rows.begin(), rows.end());
  const int r = boundary_count();
  std::map<int, std::string> boundary_id;
  for (const auto& v : vertices_) {
    if (v.kind == VertexKind::Boundary) boundary_id[v.boundary_index] = v.id;
  }
  const std::vector<std::string> order = topological_order();
  NetworkMatrix m(rows.size(), std::vector<NetworkPoly>(static_cast<std::size_t>(r)));
  for (std::size_t row = 0; row < rows.size(); ++row) {
    std::map<std::string, NetworkPoly> reach;
    reach[boundary_id[rows[row]]] = NetworkPoly::constant(1);
    for (const auto& v : order) {
      auto it = reach.find(v);
      if (it == reach.end()) continue;
      for (const auto& e : edges_) {
        if (e.from == v) reach[e.to] += it->second * edge_weight(e);
      }
    }
    for (int col = 1; col <= r; ++col) {
      auto& cell = m[row][static_cast<std::size_t>(col - 1)];
      if (std::binary_search(rows.begin(), rows.end(), col)) {
        cell = NetworkPoly::constant(col == rows[row] ? 1 : 0);
      } else if (auto it = reach.find(boundary_id[col]); it != reach.end()) {
        cell = it->second;
      }
    }
  }
  return m;
}

NetworkMatrix PlanarNetwork::boundary_measurement_by_enumeration() const {
  require_valid();
  std::vector<int> rows = sources_;
  std::sort(rows.begin(), rows.end());
  const int r = boundary_count();
  std::map<std::string, int> boundary_of;
  std::map<int, std::string> boundary_id;
  for (const auto& v : vertices_) {
    if (v.kind == VertexKind::Boundary) {
      boundary_of[v.id] = v.boundary_index;
      boundary_id[v.boundary_index] = v.id;
    }
  }
  NetworkMatrix m(rows.size(), std::vector<NetworkPoly>(static_cast<std::size_t>(r)));
  for (std::size_t row = 0; row < rows.size(); ++row) {
    std::vector<NetworkPoly> sums(static_cast<std::size_t>(r));
    std::function<void(const std::string&, const NetworkPoly&)> walk = [&](const std::string& v, const NetworkPoly& weight) {
      bool moved = false;
      for (const auto& e : edges_) {
        if (e.from != v) continue;
        moved = true;
        walk(e.to, weight * edge_weight(e));
      }
      if (!moved) {
        auto it = boundary_of.find(v);
        if (it != boundary_of.end()) sums[static_cast<std::size_t>(it->second - 1)] += weight;
      }
    };
    walk(boundary_id[rows[row]], NetworkPoly::constant(1));
    for (int col = 1; col <= r; ++col) {
      auto c = static_cast<std::size_t>(col - 1);
      if (std::binary_search(rows.begin(), rows.end(), col)) {
        m[row][c] = NetworkPoly::constant(col == rows[row] ? 1 : 0);
      } else {
        m[row][c] = sums[c];
      }
    }
  }
  return m;
}

std::vector<LogCanonicalPair> PlanarNetwork::bracket_pairs(const BracketParams& p, VertexRule rule) const {
  require_valid();
  std::vector<LogCanonicalPair> out;
  for (const auto& [vid, clockwise] : orders_) {
    const NetworkVertex& v = vertex(vid);
    const bool white = v.kind == VertexKind::White;
    // The distinguished edge: incoming at white, outgoing at black.
    auto first = std::find_if(clockwise.begin(), clockwise.end(), [&](const std::string& eid) {
      auto e = std::find_if(edges_.begin(), edges_.end(), [&](const NetworkEdge& x) { return x.id == eid; });
      return white ? e->to == vid : e->from == vid;
    });
    std::vector<std::string> labels(clockwise.begin(), clockwise.end());
    std::rotate(labels.begin(), labels.begin() + (first - clockwise.begin()), labels.end());
    if (rule == VertexRule::Mirrored) std::reverse(labels.begin() + 1, labels.end());
    Rational coeff = (white == (rule == VertexRule::Literal)) ? p.alpha : p.beta;
    if (coeff != 0) out.push_back({{vid, labels[1]}, {vid, labels[2]}, coeff});
  }
  return out;
}

NetworkPoly network_bracket(const NetworkPoly& f, const NetworkPoly& g, const PlanarNetwork& net, const BracketParams& p,
                            VertexRule rule) {
  NetworkPoly total;
  for (const auto& pair : net.bracket_pairs(p, rule)) {
    NetworkPoly cross = f.partial(pair.q) * g.partial(pair.r) - f.partial(pair.r) * g.partial(pair.q);
    if (cross.is_zero()) continue;
    Monomial<NetworkVar> qr = Monomial<NetworkVar>::from_factors({{pair.q, 1}, {pair.r, 1}});
    total += cross.times_monomial(qr, pair.coeff);
  }
  return total;
}

namespace {

void expand_network_det(const NetworkMatrix& m, std::size_t row, std::vector<bool>& used, const NetworkPoly& prefix,
                        int sign, NetworkPoly& total) {
  if (row == m.size()) {
    total += sign > 0 ? prefix : -prefix;
    return;
  }
  int free_before = 0;
  for (std::size_t col = 0; col < m.size(); ++col) {
    if (used[col]) continue;
    if (!m[row][col].is_zero()) {
      used[col] = true;
      expand_network_det(m, row + 1, used, prefix * m[row][col], free_before % 2 == 0 ? sign : -sign, total);
      used[col] = false;
    }
    ++free_before;
  }
}

}  // namespace

NetworkPoly network_det(const NetworkMatrix& m) {
  for (const auto& row : m) {
    if (row.size() != m.size()) throw InvalidInput("determinant of a non-square matrix");
  }
  if (m.empty()) return NetworkPoly::constant(1);
  std::vector<bool> used(m.size(), false);
  NetworkPoly total;
  expand_network_det(m, 0, used, NetworkPoly::constant(1), 1, total);
  return total;
}

namespace {

NetworkPoly column_minor(const NetworkMatrix& m, const std::vector<int>& cols) {
  NetworkMatrix sub(m.size(), std::vector<NetworkPoly>(cols.size()));
  for (std::size_t row = 0; row < m.size(); ++row) {
    for (std::size_t c = 0; c < cols.size(); ++c) sub[row][c] = m[row][static_cast<std::size_t>(cols[c] - 1)];
  }
  return network_det(sub);
}

}  // namespace

std::vector<NetworkPairCheck> verify_network_vs_formula(const PlanarNetwork& net, const BracketParams& p, VertexRule rule) {
  NetworkMatrix m = net.boundary_measurement();
  SchubertIndex index = net.schubert_index();
  NetworkPoly base = column_minor(m, index.subset());
  if (!(base == NetworkPoly::constant(1))) throw InvalidInput("source columns of the boundary measurement are not the identity");

  std::map<CoordSymbol, NetworkPoly> value;
  for (const CoordSymbol& c : coordinates(index)) {
    std::vector<int> moved = index.subset();
    std::replace(moved.begin(), moved.end(), c.i, c.j);
    std::sort(moved.begin(), moved.end());
    value[c] = column_minor(m, moved);
  }

  std::vector<NetworkPairCheck> out;
  const auto symbols = coordinates(index);
  for (std::size_t a = 0; a < symbols.size(); ++a) {
    for (std::size_t b = a; b < symbols.size(); ++b) {
      NetworkPairCheck check{symbols[a], symbols[b], {}, {}, false};
      check.network_side = network_bracket(value[symbols[a]], value[symbols[b]], net, p, rule);
      FormalCoordExpr rhs = formula_bracket(symbols[a], symbols[b], p);
      for (const auto& t : rhs.terms()) {
        NetworkPoly term = NetworkPoly::constant(t.coeff);
        for (const auto& [sym, e] : t.monomial.factors()) term = term * value[sym].pow(e);
        check.formula_side += term;
      }
      check.match = check.network_side == check.formula_side;
      out.push_back(std::move(check));
    }
  }
  return out;
}

}  // namespace swapalg
