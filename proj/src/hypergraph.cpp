#include "hyperspec/hypergraph.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <istream>
#include <set>
#include <sstream>

#include "hyperspec/gf2.hpp"

namespace hyperspec {

Hypergraph::Hypergraph(int n, int k, std::vector<Edge> edges)
    : n_(n), k_(k), edges_(std::move(edges)) {
  if (n_ < 1) throw ParseError("vertex count must be positive");
  if (k_ < 2) throw ParseError("uniformity must be at least 2");
  for (auto& e : edges_) {
    if (static_cast<int>(e.size()) != k_)
      throw ParseError("edge has " + std::to_string(e.size()) + " vertices, expected " +
                       std::to_string(k_));
    std::sort(e.begin(), e.end());
    for (int t = 0; t < k_; ++t) {
      if (e[t] < 1 || e[t] > n_)
        throw ParseError("vertex " + std::to_string(e[t]) + " out of range 1.." +
                         std::to_string(n_));
      if (t > 0 && e[t] == e[t - 1])
        throw ParseError("repeated vertex " + std::to_string(e[t]) + " within an edge");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i] == edges_[i - 1]) throw ParseError("duplicate edge");
  }
}

Eigen::VectorXi degrees(const Hypergraph& g) {
  Eigen::VectorXi d = Eigen::VectorXi::Zero(g.vertex_count());
  for (const auto& e : g.edges())
    for (const int v : e) d[v - 1] += 1;
  return d;
}

Connectivity connected_components(const Hypergraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> incident(n);  // vertex -> edge indices
  for (int ei = 0; ei < g.edge_count(); ++ei)
    for (const int v : g.edges()[ei]) incident[v - 1].push_back(ei);

  Connectivity res;
  res.component = Eigen::VectorXi::Constant(n, -1);
  std::vector<bool> edge_seen(g.edges().size(), false);
  int comp = 0;
  for (int start = 0; start < n; ++start) {
    if (res.component[start] >= 0) continue;
    res.component[start] = comp;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (const int ei : incident[v]) {
        if (edge_seen[ei]) continue;
        edge_seen[ei] = true;
        for (const int w : g.edges()[ei]) {
          if (res.component[w - 1] < 0) {
            res.component[w - 1] = comp;
            queue.push_back(w - 1);
          }
        }
      }
    }
    ++comp;
  }
  res.component_count = comp;
  res.connected = (comp == 1);
  return res;
}

bool is_valid_certificate(const Hypergraph& g, const std::vector<int>& v1) {
  if (g.uniformity() % 2 != 0) return false;
  if (v1.empty() || static_cast<int>(v1.size()) >= g.vertex_count()) return false;
  std::vector<bool> in(g.vertex_count() + 1, false);
  for (const int v : v1) {
    if (v < 1 || v > g.vertex_count()) return false;
    in[v] = true;
  }
  for (const auto& e : g.edges()) {
    int cnt = 0;
    for (const int v : e) cnt += in[v] ? 1 : 0;
    if (cnt % 2 == 0) return false;
  }
  return true;
}

bool is_valid_witness(const Hypergraph& g, const std::vector<int>& witness) {
  if (witness.size() % 2 == 0) return false;
  std::vector<int> cover(g.vertex_count() + 1, 0);
  for (const int ei : witness) {
    if (ei < 0 || ei >= g.edge_count()) return false;
    for (const int v : g.edges()[ei]) cover[v] += 1;
  }
  for (int v = 1; v <= g.vertex_count(); ++v)
    if (cover[v] % 2 != 0) return false;
  return true;
}

Eigen::VectorXd sign_vector(int n, const std::vector<int>& v1) {
  Eigen::VectorXd p = Eigen::VectorXd::Ones(n);
  for (const int v : v1) p[v - 1] = -1.0;
  return p;
}

Bipartition odd_bipartition(const Hypergraph& g) {
  Bipartition out;
  if (g.uniformity() % 2 != 0) {
    out.kind = BipartitionKind::InfeasibleWitness;
    out.reason = "k-odd";
    return out;
  }
  if (g.edge_count() == 0) {
    // Vacuous case: any nonempty proper subset works, none is forced by the
    // system. Pick {1} when a proper subset exists at all.
    if (g.vertex_count() >= 2) {
      out.kind = BipartitionKind::Certificate;
      out.v1 = {1};
    } else {
      out.kind = BipartitionKind::InfeasibleWitness;
      out.reason = "no-proper-subset";
    }
    return out;
  }

  const int n = g.vertex_count();
  std::vector<gf2::BitRow> rows;
  rows.reserve(g.edges().size());
  for (const auto& e : g.edges()) {
    gf2::BitRow row(n);
    for (const int v : e) row.set(v - 1, true);
    rows.push_back(std::move(row));
  }
  std::vector<bool> rhs(g.edges().size(), true);
  const gf2::SolveResult sol = gf2::solve(std::move(rows), std::move(rhs), n);

  if (!sol.consistent) {
    out.kind = BipartitionKind::InfeasibleWitness;
    out.witness = sol.witness_rows;
    out.reason = "gf2-inconsistent";
    return out;
  }
  out.kind = BipartitionKind::Certificate;
  out.v1.reserve(sol.support.size());
  for (const int c : sol.support) out.v1.push_back(c + 1);
  return out;
}

Hypergraph cartesian_product(const Hypergraph& g, const Hypergraph& h) {
  if (g.uniformity() != h.uniformity())
    throw DimensionError("cartesian product requires equal uniformity");
  const int m = h.vertex_count();
  const auto flat = [m](int i, int j) { return (i - 1) * m + j; };

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(g.vertex_count()) * h.edges().size() +
                static_cast<std::size_t>(h.vertex_count()) * g.edges().size());
  for (int i = 1; i <= g.vertex_count(); ++i) {
    for (const auto& e : h.edges()) {
      Edge pe;
      pe.reserve(e.size());
      for (const int j : e) pe.push_back(flat(i, j));
      edges.push_back(std::move(pe));
    }
  }
  for (int j = 1; j <= h.vertex_count(); ++j) {
    for (const auto& e : g.edges()) {
      Edge pe;
      pe.reserve(e.size());
      for (const int i : e) pe.push_back(flat(i, j));
      edges.push_back(std::move(pe));
    }
  }
  return Hypergraph(g.vertex_count() * m, g.uniformity(), std::move(edges));
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream iss(line);
  std::string t;
  while (iss >> t) toks.push_back(t);
  return toks;
}

int parse_int(const std::string& tok, const char* what) {
  std::size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(std::string("expected integer for ") + what + ", got '" + tok + "'");
  }
  if (pos != tok.size())
    throw ParseError(std::string("trailing characters in ") + what + ": '" + tok + "'");
  return value;
}

}  // namespace

Hypergraph parse_hypergraph(std::istream& in) {
  bool have_header = false;
  int n = 0, k = 0;
  std::vector<Edge> edges;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks[0] == "c") continue;
    if (toks[0] == "p") {
      if (have_header) throw ParseError("duplicate header at line " + std::to_string(lineno));
      if (toks.size() != 4 || toks[1] != "hg")
        throw ParseError("malformed header at line " + std::to_string(lineno) +
                         " (expected 'p hg <n> <k>')");
      n = parse_int(toks[2], "n");
      k = parse_int(toks[3], "k");
      have_header = true;
      continue;
    }
    if (toks[0] == "e") {
      if (!have_header) throw ParseError("edge before header at line " + std::to_string(lineno));
      Edge e;
      e.reserve(toks.size() - 1);
      for (std::size_t t = 1; t < toks.size(); ++t) e.push_back(parse_int(toks[t], "vertex"));
      if (static_cast<int>(e.size()) != k)
        throw ParseError("edge of arity " + std::to_string(e.size()) + " at line " +
                         std::to_string(lineno) + ", expected " + std::to_string(k));
      edges.push_back(std::move(e));
      continue;
    }
    throw ParseError("unknown line type '" + toks[0] + "' at line " + std::to_string(lineno));
  }
  if (!have_header) throw ParseError("missing 'p hg <n> <k>' header");
  return Hypergraph(n, k, std::move(edges));
}

Hypergraph parse_hypergraph(const std::string& text) {
  std::istringstream iss(text);
  return parse_hypergraph(iss);
}

std::string to_hg(const Hypergraph& g) {
  std::ostringstream out;
  out << "p hg " << g.vertex_count() << ' ' << g.uniformity() << '\n';
  for (const auto& e : g.edges()) {
    out << 'e';
    for (const int v : e) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

std::string content_hash(const Hypergraph& g) {
  const std::string text = to_hg(g);
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace hyperspec
