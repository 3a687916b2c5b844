#include "edgerigid/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <queue>
#include <random>
#include <sstream>

#include "edgerigid/errors.hpp"

namespace edgerigid {

namespace {

bool is_connected(int n, const std::vector<std::vector<int>>& neighbors) {
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int u : neighbors[v]) {
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == n;
}

// Splits on ASCII whitespace.
std::vector<std::string_view> tokenize(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

long long parse_int(std::string_view token) {
  long long value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end)
    throw ParseError("expected an integer, got '" + std::string(token) + "'");
  return value;
}

Graph parse_edge_list(std::string_view text) {
  const auto tokens = tokenize(text);
  if (tokens.size() < 2) throw ParseError("edge list: missing 'n m' header");
  const long long n = parse_int(tokens[0]);
  const long long m = parse_int(tokens[1]);
  if (n < 0 || m < 0) throw ParseError("edge list: negative vertex or edge count");
  if (tokens.size() != static_cast<std::size_t>(2 + 2 * m))
    throw ParseError("edge list: header declares " + std::to_string(m) +
                     " edges but the body has " +
                     std::to_string((tokens.size() - 2) / 2) + " pairs" +
                     ((tokens.size() % 2) ? " and a dangling token" : ""));
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    const long long a = parse_int(tokens[2 + 2 * i]);
    const long long b = parse_int(tokens[3 + 2 * i]);
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw ParseError("edge list: vertex id out of range on edge " + std::to_string(i));
    edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

constexpr int kG6Offset = 63;

Graph parse_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("graph6: empty input");
  for (char c : text) {
    const int v = static_cast<unsigned char>(c);
    if (v < kG6Offset || v > 126) throw ParseError("graph6: byte outside 63..126");
  }
  std::size_t pos = 0;
  auto take = [&](std::size_t count) {
    long long value = 0;
    for (std::size_t i = 0; i < count; ++i) {
      if (pos >= text.size()) throw ParseError("graph6: truncated vertex count");
      value = (value << 6) | (static_cast<unsigned char>(text[pos++]) - kG6Offset);
    }
    return value;
  };
  long long n = 0;
  if (static_cast<unsigned char>(text[0]) != 126) {
    n = take(1);
  } else if (text.size() > 1 && static_cast<unsigned char>(text[1]) != 126) {
    pos = 1;
    n = take(3);
  } else {
    pos = 2;
    n = take(6);
  }
  if (n > 100000) throw ParseError("graph6: vertex count too large");
  const long long bits = n * (n - 1) / 2;
  const long long need = (bits + 5) / 6;
  if (static_cast<long long>(text.size() - pos) != need)
    throw ParseError("graph6: expected " + std::to_string(need) + " data bytes, got " +
                     std::to_string(text.size() - pos));
  std::vector<std::pair<int, int>> edges;
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = static_cast<unsigned char>(text[pos + k / 6]) - kG6Offset;
      if (byte & (0x20 >> (k % 6))) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

}  // namespace

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> raw) {
  if (n < 2) throw TooSmall("graph needs at least 2 vertices");
  if (raw.empty()) throw TooSmall("graph needs at least 1 edge");
  Graph g;
  g.n_ = n;
  g.edges_.reserve(raw.size());
  for (auto [a, b] : raw) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw ParseError("vertex id out of range");
    if (a == b) throw NotSimple("self-loop at vertex " + std::to_string(a));
    g.edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  if (auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end()); dup != g.edges_.end())
    throw NotSimple("duplicate edge " + std::to_string(dup->a) + "-" + std::to_string(dup->b));
  g.adjacency_.assign(static_cast<std::size_t>(n) * n, 0);
  g.neighbors_.assign(static_cast<std::size_t>(n), {});
  for (const Edge& e : g.edges_) {
    g.adjacency_[static_cast<std::size_t>(e.a) * n + e.b] = 1;
    g.adjacency_[static_cast<std::size_t>(e.b) * n + e.a] = 1;
    g.neighbors_[e.a].push_back(e.b);
    g.neighbors_[e.b].push_back(e.a);
  }
  for (auto& nb : g.neighbors_) std::sort(nb.begin(), nb.end());
  if (!is_connected(n, g.neighbors_)) throw Disconnected("graph is not connected");
  return g;
}

std::optional<int> Graph::edge_index(int a, int b) const {
  const Edge key{std::min(a, b), std::max(a, b)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

Orientation Orientation::canonical(int edge_count) {
  Orientation o;
  o.signs_.assign(static_cast<std::size_t>(edge_count), 1);
  return o;
}

Orientation Orientation::random(int edge_count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Orientation o;
  o.signs_.resize(static_cast<std::size_t>(edge_count));
  for (int& s : o.signs_) s = (rng() & 1U) ? 1 : -1;
  return o;
}

Orientation Orientation::from_signs(std::vector<int> signs) {
  for (int s : signs)
    if (s != 1 && s != -1) throw Error("orientation signs must be +1 or -1");
  Orientation o;
  o.signs_ = std::move(signs);
  return o;
}

Orientation Orientation::flipped(int e) const {
  Orientation o = *this;
  o.signs_.at(static_cast<std::size_t>(e)) *= -1;
  return o;
}

WeightVector WeightVector::unit(int edge_count) {
  WeightVector w;
  w.w_.assign(static_cast<std::size_t>(edge_count), 1.0);
  w.normalized_ = true;
  return w;
}

WeightVector WeightVector::from_values(std::vector<double> values, bool normalize) {
  for (double v : values) {
    if (!std::isfinite(v)) throw Error("weights must be finite");
    if (v < 0.0) throw Error("weights must be nonnegative");
  }
  WeightVector w;
  w.w_ = std::move(values);
  if (normalize) {
    const double total = std::accumulate(w.w_.begin(), w.w_.end(), 0.0);
    if (!(total > 0.0)) throw Error("weights have zero total");
    const double scale = static_cast<double>(w.w_.size()) / total;
    for (double& v : w.w_) v *= scale;
    w.normalized_ = true;
  }
  return w;
}

Eigen::VectorXd WeightVector::to_eigen() const {
  return Eigen::Map<const Eigen::VectorXd>(w_.data(), static_cast<Eigen::Index>(w_.size()));
}

Graph parse_graph(std::string_view bytes, GraphFormat format) {
  switch (format) {
    case GraphFormat::EdgeList:
      return parse_edge_list(bytes);
    case GraphFormat::Graph6:
      return parse_graph6(bytes);
  }
  throw ParseError("unknown graph format");
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.a << ' ' << e.b << '\n';
  return out.str();
}

std::string serialize_graph6(const Graph& g) {
  const long long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kG6Offset));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 0x3F) + kG6Offset));
  } else {
    out.append(2, static_cast<char>(126));
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 0x3F) + kG6Offset));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kG6Offset));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kG6Offset));
  out.push_back('\n');
  return out;
}

WeightVector parse_weights(std::string_view text, const Graph& g) {
  const auto tokens = tokenize(text);
  if (static_cast<int>(tokens.size()) != g.size())
    throw DimensionMismatch("weights file has " + std::to_string(tokens.size()) +
                            " entries, graph has " + std::to_string(g.size()) + " edges");
  std::vector<double> values;
  values.reserve(tokens.size());
  for (auto tok : tokens) {
    std::string s(tok);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      throw ParseError("weights: not a number: '" + s + "'");
    }
    if (used != s.size()) throw ParseError("weights: not a number: '" + s + "'");
    values.push_back(v);
  }
  return WeightVector::from_values(std::move(values), true);
}

Eigen::MatrixXd laplacian(const Graph& g, const WeightVector& w) {
  if (w.size() != g.size())
    throw DimensionMismatch("weight vector length " + std::to_string(w.size()) +
                            " does not match edge count " + std::to_string(g.size()));
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(g.order(), g.order());
  for (int e = 0; e < g.size(); ++e) {
    const auto [a, b] = g.edge(e);
    const double we = w[e];
    l(a, a) += we;
    l(b, b) += we;
    l(a, b) -= we;
    l(b, a) -= we;
  }
  return l;
}

Eigen::MatrixXd laplacian(const Graph& g) { return laplacian(g, WeightVector::unit(g.size())); }

ExactMatrix laplacian_exact(const Graph& g) {
  ExactMatrix l(static_cast<std::size_t>(g.order()));
  for (const auto& [a, b] : g.edges()) {
    l(a, a) += 1;
    l(b, b) += 1;
    l(a, b) -= 1;
    l(b, a) -= 1;
  }
  return l;
}

ExactMatrix adjacency_exact(const Graph& g) {
  ExactMatrix adj(static_cast<std::size_t>(g.order()));
  for (const auto& [a, b] : g.edges()) {
    adj(a, b) = 1;
    adj(b, a) = 1;
  }
  return adj;
}

Eigen::VectorXd adjoint_apply(const Graph& g, const Eigen::MatrixXd& x) {
  if (x.rows() != g.order() || x.cols() != g.order())
    throw DimensionMismatch("adjoint_apply: matrix must be n x n");
  Eigen::VectorXd out(g.size());
  for (int e = 0; e < g.size(); ++e) {
    const auto [a, b] = g.edge(e);
    out(e) = x(a, a) + x(b, b) - 2.0 * x(a, b);
  }
  return out;
}

std::vector<BigInt> adjoint_apply(const Graph& g, const ExactMatrix& x) {
  if (x.order() != static_cast<std::size_t>(g.order()))
    throw DimensionMismatch("adjoint_apply: matrix must be n x n");
  std::vector<BigInt> out(static_cast<std::size_t>(g.size()));
  for (int e = 0; e < g.size(); ++e) {
    const auto [a, b] = g.edge(e);
    out[e] = x(a, a) + x(b, b) - 2 * x(a, b);
  }
  return out;
}

Eigen::MatrixXi incidence(const Graph& g, const Orientation& o) {
  if (o.size() != g.size()) throw DimensionMismatch("orientation length must equal edge count");
  Eigen::MatrixXi b = Eigen::MatrixXi::Zero(g.order(), g.size());
  for (int e = 0; e < g.size(); ++e) {
    const auto [lo, hi] = g.edge(e);
    b(lo, e) = o.sign(e);
    b(hi, e) = -o.sign(e);
  }
  return b;
}

ExactMatrix signed_line_graph(const Graph& g, const Orientation& o) {
  const Eigen::MatrixXi b = incidence(g, o);
  const Eigen::MatrixXi gram = b.transpose() * b;
  const auto m = static_cast<std::size_t>(g.size());
  ExactMatrix a(m);
  for (std::size_t e = 0; e < m; ++e)
    for (std::size_t f = 0; f < m; ++f)
      a(e, f) = gram(static_cast<Eigen::Index>(e), static_cast<Eigen::Index>(f)) - (e == f ? 2 : 0);
  return a;
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
  std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
  std::queue<int> queue;
  color[0] = 0;
  queue.push(0);
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop();
    for (int u : g.neighbors(v)) {
      if (color[u] < 0) {
        color[u] = 1 - color[v];
        queue.push(u);
      } else if (color[u] == color[v]) {
        return std::nullopt;
      }
    }
  }
  return color;
}

DegreeClass degree_classification(const Graph& g) {
  DegreeClass out;
  out.edge_degree_sums.reserve(static_cast<std::size_t>(g.size()));
  for (const auto& [a, b] : g.edges()) out.edge_degree_sums.push_back(g.degree(a) + g.degree(b));
  out.edge_degree_sum_constant =
      std::all_of(out.edge_degree_sums.begin(), out.edge_degree_sums.end(),
                  [&](int s) { return s == out.edge_degree_sums.front(); });

  bool regular = true;
  for (int v = 1; v < g.order(); ++v) regular = regular && g.degree(v) == g.degree(0);
  if (regular) {
    out.kind = DegreeClass::Kind::Regular;
    out.degree = g.degree(0);
    return out;
  }
  if (auto colors = bipartition(g)) {
    int d[2] = {-1, -1};
    bool ok = true;
    for (int v = 0; v < g.order() && ok; ++v) {
      int& slot = d[(*colors)[v]];
      if (slot < 0) slot = g.degree(v);
      ok = slot == g.degree(v);
    }
    if (ok) {
      out.kind = DegreeClass::Kind::BiregularBipartite;
      out.degree_side0 = d[0];
      out.degree_side1 = d[1];
      out.side = std::move(*colors);
      return out;
    }
  }
  out.kind = DegreeClass::Kind::Irregular;
  return out;
}

std::string to_string(DegreeClass::Kind kind) {
  switch (kind) {
    case DegreeClass::Kind::Regular:
      return "regular";
    case DegreeClass::Kind::BiregularBipartite:
      return "biregular-bipartite";
    case DegreeClass::Kind::Irregular:
      return "irregular";
  }
  return "irregular";
}

}  // namespace edgerigid
