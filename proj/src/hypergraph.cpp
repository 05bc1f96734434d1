#include "loosehc/hypergraph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "loosehc/paths.hpp"

namespace loosehc {

Edge Hypergraph3::make_edge(int a, int b, int c) {
  Edge e{a, b, c};
  std::sort(e.begin(), e.end());
  if (e[0] == e[1] || e[1] == e[2])
    throw std::invalid_argument("edge vertices must be distinct");
  return e;
}

Hypergraph3::Hypergraph3(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  for (auto& e : edges) e = make_edge(e[0], e[1], e[2]);
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("duplicate edge");
  for (const auto& e : edges)
    if (e[0] < 0 || e[2] >= n) throw std::invalid_argument("edge vertex out of range");
  edges_ = std::move(edges);

  incident_.assign(static_cast<std::size_t>(n_), {});
  pair_third_.assign(static_cast<std::size_t>(n_) * n_, {});
  if (n_ <= 64) pair_masks_.assign(static_cast<std::size_t>(n_) * n_, 0);
  for (int id = 0; id < static_cast<int>(edges_.size()); ++id) {
    const Edge& e = edges_[static_cast<std::size_t>(id)];
    for (int v : e) incident_[static_cast<std::size_t>(v)].push_back(id);
    const int third[3] = {e[2], e[1], e[0]};
    const std::pair<int, int> pairs[3] = {{e[0], e[1]}, {e[0], e[2]}, {e[1], e[2]}};
    for (int i = 0; i < 3; ++i) {
      int key = pair_key(pairs[i].first, pairs[i].second);
      pair_third_[static_cast<std::size_t>(key)].push_back(third[i]);
      if (!pair_masks_.empty())
        pair_masks_[static_cast<std::size_t>(key)] |= 1ULL << third[i];
    }
  }
  // Edge list is sorted, so the per-pair third lists come out ascending.
}

Hypergraph3 Hypergraph3::complete(int n) {
  std::vector<Edge> es;
  if (n >= 3) es.reserve(static_cast<std::size_t>(n) * (n - 1) * (n - 2) / 6);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) es.push_back({a, b, c});
  return Hypergraph3(n, std::move(es));
}

void Hypergraph3::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
}

bool Hypergraph3::has_edge(int a, int b, int c) const {
  if (a == b || b == c || a == c) return false;
  Edge e{a, b, c};
  std::sort(e.begin(), e.end());
  if (e[0] < 0 || e[2] >= n_) return false;
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

const std::vector<int>& Hypergraph3::incident(int v) const {
  check_vertex(v);
  return incident_[static_cast<std::size_t>(v)];
}

const std::vector<int>& Hypergraph3::copair(int a, int b) const {
  check_vertex(a);
  check_vertex(b);
  if (a == b) throw std::invalid_argument("pair vertices must be distinct");
  return pair_third_[static_cast<std::size_t>(pair_key(a, b))];
}

std::uint64_t Hypergraph3::copair_mask(int a, int b) const {
  if (pair_masks_.empty())
    throw std::logic_error("pair masks only maintained for n <= 64");
  check_vertex(a);
  check_vertex(b);
  return pair_masks_[static_cast<std::size_t>(pair_key(a, b))];
}

Hypergraph3 Hypergraph3::restriction(const std::vector<int>& keep) const {
  std::vector<char> in(static_cast<std::size_t>(n_), 0);
  for (int v : keep) {
    check_vertex(v);
    in[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<Edge> es;
  for (const Edge& e : edges_)
    if (in[e[0]] && in[e[1]] && in[e[2]]) es.push_back(e);
  return Hypergraph3(n_, std::move(es));
}

std::string Hypergraph3::to_text() const {
  std::ostringstream out;
  out << "n " << n_ << "\n";
  for (const Edge& e : edges_) out << e[0] << " " << e[1] << " " << e[2] << "\n";
  return out.str();
}

Hypergraph3 Hypergraph3::from_text(const std::string& text) {
  std::istringstream in(text);
  std::string tag;
  int n = 0;
  if (!(in >> tag >> n) || tag != "n")
    throw std::invalid_argument("hypergraph text must start with 'n <count>'");
  std::vector<Edge> es;
  int a, b, c;
  while (in >> a >> b >> c) es.push_back({a, b, c});
  if (!in.eof() && in.fail()) {
    in.clear();
    std::string rest;
    if (in >> rest) throw std::invalid_argument("trailing tokens in hypergraph text");
  }
  return Hypergraph3(n, std::move(es));
}

std::string Hypergraph3::to_json() const {
  nlohmann::json j;
  j["n"] = n_;
  auto& arr = j["edges"] = nlohmann::json::array();
  for (const Edge& e : edges_) arr.push_back({e[0], e[1], e[2]});
  return j.dump();
}

Hypergraph3 Hypergraph3::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::vector<Edge> es;
  for (const auto& item : j.at("edges")) {
    if (!item.is_array() || item.size() != 3)
      throw std::invalid_argument("edge entries must be 3-arrays");
    es.push_back({item[0].get<int>(), item[1].get<int>(), item[2].get<int>()});
  }
  return Hypergraph3(j.at("n").get<int>(), std::move(es));
}

void Hypergraph3::save(const std::string& path, const std::string& format) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  if (format == "text")
    out << to_text();
  else if (format == "json")
    out << to_json();
  else
    throw std::invalid_argument("unknown format: " + format);
}

Hypergraph3 Hypergraph3::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '['))
    return from_json(text);
  return from_text(text);
}

// ---- operators ---------------------------------------------------------

namespace {

std::vector<char> member_mask(const Hypergraph3& g, const std::vector<int>& s) {
  std::vector<char> m(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int v : s) {
    g.check_vertex(v);
    m[static_cast<std::size_t>(v)] = 1;
  }
  return m;
}

}  // namespace

long long deg_set(const Hypergraph3& g, const std::vector<int>& s,
                  const std::vector<int>* w) {
  if (s.size() != 1 && s.size() != 2)
    throw std::invalid_argument("deg_set: |S| must be 1 or 2");
  for (int v : s) g.check_vertex(v);
  if (s.size() == 2 && s[0] == s[1])
    throw std::invalid_argument("deg_set: S vertices must be distinct");
  std::vector<char> in_w;
  if (w) {
    in_w = member_mask(g, *w);
    for (int v : s)
      if (in_w[static_cast<std::size_t>(v)])
        throw std::invalid_argument("deg_set: S and W must be disjoint");
  }
  long long count = 0;
  if (s.size() == 1) {
    for (int id : g.incident(s[0])) {
      const Edge& e = g.edge(id);
      bool ok = true;
      for (int v : e)
        if (v != s[0] && w && !in_w[static_cast<std::size_t>(v)]) ok = false;
      if (ok) ++count;
    }
  } else {
    for (int z : g.copair(s[0], s[1]))
      if (!w || in_w[static_cast<std::size_t>(z)]) ++count;
  }
  return count;
}

long long min_d_degree(const Hypergraph3& g, int d) {
  int n = g.vertex_count();
  if (n < 3) throw std::invalid_argument("min_d_degree: need n >= 3");
  if (d != 1 && d != 2) throw std::invalid_argument("min_d_degree: d must be 1 or 2");
  long long best = -1;
  if (d == 1) {
    for (int v = 0; v < n; ++v) {
      long long deg = g.degree(v);
      if (best < 0 || deg < best) best = deg;
    }
  } else {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        long long deg = g.codegree(a, b);
        if (best < 0 || deg < best) best = deg;
      }
  }
  return best;
}

long long e_triple(const Hypergraph3& g, const std::vector<int>& xs,
                   const std::vector<int>& ys, const std::vector<int>& zs) {
  auto mx = member_mask(g, xs), my = member_mask(g, ys), mz = member_mask(g, zs);
  long long count = 0;
  for (const Edge& e : g.edges()) {
    const int perm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto& p : perm)
      if (mx[static_cast<std::size_t>(e[p[0]])] && my[static_cast<std::size_t>(e[p[1]])] &&
          mz[static_cast<std::size_t>(e[p[2]])])
        ++count;
  }
  return count;
}

long long e_pairs(const Hypergraph3& g, const std::vector<std::pair<int, int>>& pairs,
                  const std::vector<int>& zs) {
  auto mz = member_mask(g, zs);
  long long count = 0;
  for (const auto& [a, b] : pairs)
    for (int z : g.copair(a, b))
      if (mz[static_cast<std::size_t>(z)]) ++count;
  return count;
}

std::vector<int> neighborhood(const Hypergraph3& g, int v, const std::vector<int>& w) {
  g.check_vertex(v);
  auto mw = member_mask(g, w);
  std::vector<char> hit(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int id : g.incident(v)) {
    const Edge& e = g.edge(id);
    int other[2];
    int k = 0;
    for (int u : e)
      if (u != v) other[k++] = u;
    if (mw[static_cast<std::size_t>(other[0])] && mw[static_cast<std::size_t>(other[1])]) {
      hit[static_cast<std::size_t>(other[0])] = 1;
      hit[static_cast<std::size_t>(other[1])] = 1;
    }
  }
  std::vector<int> out;
  for (int u = 0; u < g.vertex_count(); ++u)
    if (hit[static_cast<std::size_t>(u)]) out.push_back(u);
  return out;
}

std::vector<int> neighborhood(const Hypergraph3& g, std::pair<int, int> uv,
                              const std::vector<int>& w) {
  auto mw = member_mask(g, w);
  std::vector<int> out;
  for (int z : g.copair(uv.first, uv.second))
    if (mw[static_cast<std::size_t>(z)]) out.push_back(z);
  return out;
}

// ---- path / cycle validation -------------------------------------------

std::string defect_name(PathDefect d) {
  switch (d) {
    case PathDefect::none: return "none";
    case PathDefect::empty_sequence: return "empty_sequence";
    case PathDefect::even_vertex_count: return "even_vertex_count";
    case PathDefect::odd_vertex_count: return "odd_vertex_count";
    case PathDefect::too_short: return "too_short";
    case PathDefect::vertex_out_of_range: return "vertex_out_of_range";
    case PathDefect::duplicate_vertex: return "duplicate_vertex";
    case PathDefect::missing_edge: return "missing_edge";
  }
  return "unknown";
}

namespace {

PathCheck check_sequence(const Hypergraph3& g, const std::vector<int>& vs) {
  if (vs.empty()) return {false, PathDefect::empty_sequence, -1};
  for (int i = 0; i < static_cast<int>(vs.size()); ++i)
    if (vs[static_cast<std::size_t>(i)] < 0 || vs[static_cast<std::size_t>(i)] >= g.vertex_count())
      return {false, PathDefect::vertex_out_of_range, i};
  std::vector<int> sorted = vs;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) {
    for (int i = 0; i < static_cast<int>(vs.size()); ++i)
      if (vs[static_cast<std::size_t>(i)] == *dup) return {false, PathDefect::duplicate_vertex, i};
  }
  return {true, PathDefect::none, -1};
}

}  // namespace

PathCheck validate_loose_path(const Hypergraph3& g, const LoosePath& p) {
  const auto& vs = p.vertices;
  PathCheck basic = check_sequence(g, vs);
  if (!basic.ok) return basic;
  if (vs.size() % 2 == 0) return {false, PathDefect::even_vertex_count, -1};
  for (int i = 0; 2 * i + 2 < static_cast<int>(vs.size()); ++i) {
    std::size_t j = static_cast<std::size_t>(2 * i);
    if (!g.has_edge(vs[j], vs[j + 1], vs[j + 2]))
      return {false, PathDefect::missing_edge, i};
  }
  return {true, PathDefect::none, -1};
}

PathCheck validate_loose_cycle(const Hypergraph3& g, const LooseCycle& c) {
  const auto& vs = c.vertices;
  PathCheck basic = check_sequence(g, vs);
  if (!basic.ok) return basic;
  if (vs.size() % 2 != 0) return {false, PathDefect::odd_vertex_count, -1};
  if (vs.size() < 6) return {false, PathDefect::too_short, -1};
  int m = static_cast<int>(vs.size());
  for (int i = 0; 2 * i < m; ++i) {
    int a = vs[static_cast<std::size_t>(2 * i)];
    int b = vs[static_cast<std::size_t>((2 * i + 1) % m)];
    int cc = vs[static_cast<std::size_t>((2 * i + 2) % m)];
    if (!g.has_edge(a, b, cc)) return {false, PathDefect::missing_edge, i};
  }
  return {true, PathDefect::none, -1};
}

}  // namespace loosehc
