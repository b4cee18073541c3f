#include "kforest/graph.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <limits>
#include <random>
#include <sstream>

namespace kforest {

Graph::Graph(int n) {
  if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
  adj_.resize(n);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= vertex_count())
    throw std::out_of_range("Graph: vertex " + std::to_string(v) + " out of range");
}

bool Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("Graph: self loop at " + std::to_string(u));
  auto& au = adj_[u];
  auto it = std::lower_bound(au.begin(), au.end(), v);
  if (it != au.end() && *it == v) return false;
  au.insert(it, v);
  auto& av = adj_[v];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  ++m_;
  return true;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& au = adj_[u];
  return std::binary_search(au.begin(), au.end(), v);
}

int Graph::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(adj_[v].size());
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < vertex_count(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

int Graph::max_degree() const {
  if (vertex_count() == 0) throw std::invalid_argument("max_degree: empty graph");
  int best = 0;
  for (const auto& a : adj_) best = std::max(best, static_cast<int>(a.size()));
  return best;
}

int Graph::min_degree() const {
  if (vertex_count() == 0) throw std::invalid_argument("min_degree: empty graph");
  int best = std::numeric_limits<int>::max();
  for (const auto& a : adj_) best = std::min(best, static_cast<int>(a.size()));
  return best;
}

std::optional<int> girth(const Graph& g) {
  int n = g.vertex_count();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(n), parent(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::deque<int> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      if (2 * dist[u] >= best) continue;
      for (int w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
  std::vector<int> verts = keep;
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  for (int v : verts)
    if (v < 0 || v >= g.vertex_count())
      throw std::out_of_range("induced_subgraph: vertex out of range");
  std::vector<int> to_new(g.vertex_count(), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) to_new[verts[i]] = static_cast<int>(i);
  Graph h(static_cast<int>(verts.size()));
  for (int v : verts)
    for (int w : g.neighbors(v))
      if (v < w && to_new[w] >= 0) h.add_edge(to_new[v], to_new[w]);
  return {std::move(h), std::move(verts)};
}

namespace {

constexpr int kG6Base = 63;

bool printable_g6(unsigned char c) { return c >= 63 && c <= 126; }

// Decodes the length header; advances pos.
long long g6_read_length(const std::string& s, std::size_t& pos) {
  auto byte_at = [&](std::size_t i) -> int {
    if (i >= s.size()) throw ParseError("graph6: truncated length header", s.size());
    unsigned char c = s[i];
    if (!printable_g6(c)) throw ParseError("graph6: byte outside printable range", i);
    return c - kG6Base;
  };
  int c0 = byte_at(pos);
  if (c0 < 63) {
    ++pos;
    return c0;
  }
  // c0 == 63 is '~'
  int c1 = byte_at(pos + 1);
  if (c1 < 63) {
    long long n = 0;
    for (int i = 1; i <= 3; ++i) n = (n << 6) | byte_at(pos + i);
    if (n < 63) throw ParseError("graph6: non-canonical length header", pos);
    pos += 4;
    return n;
  }
  long long n = 0;
  for (int i = 2; i <= 7; ++i) n = (n << 6) | byte_at(pos + i);
  if (n < 258048) throw ParseError("graph6: non-canonical length header", pos);
  pos += 8;
  return n;
}

}  // namespace

Graph parse_graph6(const std::string& text) {
  std::size_t pos = 0;
  std::size_t end = text.size();
  while (end > pos && (text[end - 1] == '\n' || text[end - 1] == '\r' ||
                       text[end - 1] == ' ' || text[end - 1] == '\t'))
    --end;
  std::string s = text.substr(0, end);
  static const std::string header = ">>graph6<<";
  if (s.compare(0, header.size(), header) == 0) pos = header.size();
  if (pos >= s.size()) throw ParseError("graph6: empty input", pos);

  long long n = g6_read_length(s, pos);
  if (n > 1'000'000) throw ParseError("graph6: vertex count too large", 0);
  long long bits = n * (n - 1) / 2;
  std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  if (s.size() - pos < need) throw ParseError("graph6: truncated edge data", s.size());
  if (s.size() - pos > need) throw ParseError("graph6: trailing data", pos + need);

  Graph g(static_cast<int>(n));
  // Bit order is x(0,1), x(0,2), x(1,2), x(0,3), ...: column col, row row.
  long long bit = 0, row = 0, col = 1;
  for (std::size_t i = 0; i < need; ++i) {
    unsigned char c = s[pos + i];
    if (!printable_g6(c)) throw ParseError("graph6: byte outside printable range", pos + i);
    int val = c - kG6Base;
    for (int b = 5; b >= 0; --b, ++bit) {
      int on = (val >> b) & 1;
      if (bit >= bits) {
        if (on) throw ParseError("graph6: nonzero padding bits", pos + i);
        continue;
      }
      if (on) g.add_edge(static_cast<int>(row), static_cast<int>(col));
      if (++row == col) {
        row = 0;
        ++col;
      }
    }
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  long long n = g.vertex_count();
  std::string out;
  auto push6 = [&](long long v, int groups) {
    for (int i = groups - 1; i >= 0; --i)
      out.push_back(static_cast<char>(kG6Base + ((v >> (6 * i)) & 63)));
  };
  if (n <= 62) {
    out.push_back(static_cast<char>(kG6Base + n));
  } else if (n <= 258047) {
    out.push_back('~');
    push6(n, 3);
  } else {
    out.push_back('~');
    out.push_back('~');
    push6(n, 6);
  }
  long long bits = n * (n - 1) / 2;
  int acc = 0, filled = 0;
  for (long long col = 1; col < n; ++col) {
    for (long long row = 0; row < col; ++row) {
      acc = (acc << 1) | (g.has_edge(static_cast<int>(row), static_cast<int>(col)) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(kG6Base + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (bits % 6 != 0) {
    acc <<= (6 - bits % 6);
    out.push_back(static_cast<char>(kG6Base + acc));
  }
  return out;
}

namespace {

bool parse_uint(const std::string& tok, long long& out) {
  if (tok.empty() || tok.size() > 18) return false;
  for (char c : tok)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  out = std::stoll(tok);
  return true;
}

}  // namespace

EdgeListGraph parse_edge_list(const std::string& text) {
  struct Token {
    std::string value;
    std::size_t offset;
  };
  std::vector<std::vector<Token>> lines;
  std::vector<Token> cur;
  std::string word;
  std::size_t word_start = 0;
  auto flush_word = [&](std::size_t) {
    if (!word.empty()) {
      cur.push_back({word, word_start});
      word.clear();
    }
  };
  bool in_comment = false;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    char c = i < text.size() ? text[i] : '\n';
    if (c == '\n') {
      flush_word(i);
      if (!cur.empty()) lines.push_back(std::move(cur));
      cur.clear();
      in_comment = false;
    } else if (in_comment) {
      continue;
    } else if (c == '#') {
      flush_word(i);
      in_comment = true;
    } else if (c == ' ' || c == '\t' || c == '\r') {
      flush_word(i);
    } else {
      if (word.empty()) word_start = i;
      word.push_back(c);
    }
  }

  long long declared_n = -1;
  std::size_t first_edge_line = 0;
  if (!lines.empty() && lines[0][0].value == "n") {
    if (lines[0].size() != 2)
      throw ParseError("edge list: header line must be 'n <count>'", lines[0][0].offset);
    long long n;
    if (!parse_uint(lines[0][1].value, n))
      throw ParseError("edge list: bad vertex count '" + lines[0][1].value + "'",
                       lines[0][1].offset);
    declared_n = n;
    first_edge_line = 1;
  }

  std::vector<std::pair<long long, long long>> raw_edges;
  long long max_id = -1;
  for (std::size_t li = first_edge_line; li < lines.size(); ++li) {
    const auto& toks = lines[li];
    if (toks.size() != 2)
      throw ParseError("edge list: expected 'u v'", toks[0].offset);
    long long u, v;
    if (!parse_uint(toks[0].value, u))
      throw ParseError("edge list: bad vertex id '" + toks[0].value + "'", toks[0].offset);
    if (!parse_uint(toks[1].value, v))
      throw ParseError("edge list: bad vertex id '" + toks[1].value + "'", toks[1].offset);
    if (u == v)
      throw ParseError("edge list: self loop at vertex " + std::to_string(u), toks[0].offset);
    if (declared_n >= 0 && (u >= declared_n || v >= declared_n))
      throw ParseError("edge list: vertex id exceeds declared count", toks[0].offset);
    raw_edges.emplace_back(u, v);
    max_id = std::max({max_id, u, v});
  }

  long long n = declared_n >= 0 ? declared_n : max_id + 1;
  if (n > 1'000'000) throw ParseError("edge list: vertex count too large", 0);
  EdgeListGraph out;
  out.graph = Graph(static_cast<int>(n));
  for (auto [u, v] : raw_edges)
    if (!out.graph.add_edge(static_cast<int>(u), static_cast<int>(v)))
      out.duplicates_collapsed = true;
  return out;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.vertex_count() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

Graph subdivide(const Graph& g, int t) {
  if (t < 0) throw std::invalid_argument("subdivide: negative segment count");
  if (t == 0) return g;
  Graph h(g.vertex_count() + t * g.edge_count());
  int next = g.vertex_count();
  for (auto [u, v] : g.edges()) {
    int prev = u;
    for (int i = 0; i < t; ++i) {
      h.add_edge(prev, next);
      prev = next++;
    }
    h.add_edge(prev, v);
  }
  return h;
}

Graph generate(const FamilySpec& spec) {
  auto need_n = [&](int lo) {
    if (spec.n < lo)
      throw std::invalid_argument("generate: family '" + spec.family + "' needs n >= " +
                                  std::to_string(lo));
  };
  Graph g;
  if (spec.family == "cycle") {
    need_n(3);
    g = Graph(spec.n);
    for (int i = 0; i < spec.n; ++i) g.add_edge(i, (i + 1) % spec.n);
  } else if (spec.family == "path") {
    need_n(1);
    g = Graph(spec.n);
    for (int i = 0; i + 1 < spec.n; ++i) g.add_edge(i, i + 1);
  } else if (spec.family == "star") {
    // n counts the leaves; vertex 0 is the center.
    need_n(1);
    g = Graph(spec.n + 1);
    for (int i = 1; i <= spec.n; ++i) g.add_edge(0, i);
  } else if (spec.family == "complete") {
    need_n(1);
    g = Graph(spec.n);
    for (int i = 0; i < spec.n; ++i)
      for (int j = i + 1; j < spec.n; ++j) g.add_edge(i, j);
  } else if (spec.family == "complete_bipartite") {
    need_n(1);
    if (spec.n2 < 1)
      throw std::invalid_argument("generate: complete_bipartite needs n2 >= 1");
    g = Graph(spec.n + spec.n2);
    for (int i = 0; i < spec.n; ++i)
      for (int j = 0; j < spec.n2; ++j) g.add_edge(i, spec.n + j);
  } else if (spec.family == "petersen") {
    if (spec.n != 0 && spec.n != 10)
      throw std::invalid_argument("generate: petersen has a fixed size");
    g = Graph(10);
    for (int i = 0; i < 5; ++i) {
      g.add_edge(i, (i + 1) % 5);
      g.add_edge(i, i + 5);
      g.add_edge(i + 5, (i + 2) % 5 + 5);
    }
  } else if (spec.family == "random_tree") {
    need_n(1);
    g = Graph(spec.n);
    std::mt19937_64 rng(spec.seed);
    for (int i = 1; i < spec.n; ++i)
      g.add_edge(i, static_cast<int>(rng() % static_cast<std::uint64_t>(i)));
  } else {
    throw std::invalid_argument("generate: unknown family '" + spec.family + "'");
  }
  return subdivide(g, spec.subdivide);
}

}  // namespace kforest
