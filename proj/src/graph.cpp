#include "kegraph/graph.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <fstream>
#include <istream>
#include <random>
#include <sstream>

namespace kegraph {

namespace {

std::atomic<std::uint64_t> next_graph_id{1};

std::string trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges, std::vector<std::string> labels)
    : n_(n), id_(next_graph_id.fetch_add(1)) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    if (!labels.empty() && static_cast<int>(labels.size()) != n) {
        throw std::invalid_argument("label list must have one entry per vertex");
    }
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        if (u == v) throw std::invalid_argument("self-loops are not allowed");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    labels_ = std::move(labels);

    adj_.resize(n_);
    adj_edge_.resize(n_);
    for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
        auto [u, v] = edges_[i];
        adj_[u].push_back(v);
        adj_edge_[u].push_back(i);
        adj_[v].push_back(u);
        adj_edge_[v].push_back(i);
    }
    for (int v = 0; v < n_; ++v) {
        // Sort neighbors and keep edge indices aligned.
        std::vector<int> order(adj_[v].size());
        for (size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return adj_[v][a] < adj_[v][b]; });
        std::vector<int> nb(order.size()), ei(order.size());
        for (size_t k = 0; k < order.size(); ++k) {
            nb[k] = adj_[v][order[k]];
            ei[k] = adj_edge_[v][order[k]];
        }
        adj_[v] = std::move(nb);
        adj_edge_[v] = std::move(ei);
    }
}

std::span<const int> Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

std::span<const int> Graph::incident_edge_indices(int v) const {
    check_vertex(v);
    return adj_edge_[v];
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    int t = (adj_[u].size() <= adj_[v].size()) ? v : u;
    return std::binary_search(a.begin(), a.end(), t);
}

std::optional<int> Graph::edge_index(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    Edge e = make_edge(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e) {
        return static_cast<int>(it - edges_.begin());
    }
    return std::nullopt;
}

std::string Graph::label(int v) const {
    check_vertex(v);
    if (!labels_.empty() && !labels_[v].empty()) return labels_[v];
    return std::to_string(v);
}

std::optional<int> Graph::vertex_by_label(std::string_view name) const {
    for (int v = 0; v < n_; ++v) {
        if (!labels_.empty() && !labels_[v].empty()) {
            if (labels_[v] == name) return v;
        } else if (std::to_string(v) == name) {
            return v;
        }
    }
    return std::nullopt;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex index out of range");
}

VertexSet::VertexSet(const Graph& g, std::vector<int> members)
    : members_(std::move(members)), graph_id_(g.id()), universe_(g.vertex_count()) {
    for (int v : members_) g.check_vertex(v);
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::all(const Graph& g) {
    std::vector<int> m(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) m[v] = v;
    return VertexSet(g, std::move(m));
}

bool VertexSet::contains(int v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

void VertexSet::check_same_graph(const VertexSet& other) const {
    if (graph_id_ != other.graph_id_) {
        throw std::invalid_argument("vertex sets belong to different graphs");
    }
}

VertexSet VertexSet::unite(const VertexSet& other) const {
    check_same_graph(other);
    VertexSet out;
    out.graph_id_ = graph_id_;
    out.universe_ = universe_;
    std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                   other.members_.end(), std::back_inserter(out.members_));
    return out;
}

VertexSet VertexSet::minus(const VertexSet& other) const {
    check_same_graph(other);
    VertexSet out;
    out.graph_id_ = graph_id_;
    out.universe_ = universe_;
    std::set_difference(members_.begin(), members_.end(), other.members_.begin(),
                        other.members_.end(), std::back_inserter(out.members_));
    return out;
}

VertexSet VertexSet::intersect(const VertexSet& other) const {
    check_same_graph(other);
    VertexSet out;
    out.graph_id_ = graph_id_;
    out.universe_ = universe_;
    std::set_intersection(members_.begin(), members_.end(), other.members_.begin(),
                          other.members_.end(), std::back_inserter(out.members_));
    return out;
}

VertexSet VertexSet::complement() const {
    VertexSet out;
    out.graph_id_ = graph_id_;
    out.universe_ = universe_;
    size_t k = 0;
    for (int v = 0; v < universe_; ++v) {
        if (k < members_.size() && members_[k] == v) {
            ++k;
        } else {
            out.members_.push_back(v);
        }
    }
    return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    check_same_graph(other);
    return std::includes(other.members_.begin(), other.members_.end(),
                         members_.begin(), members_.end());
}

EdgeSet::EdgeSet(const Graph& g, std::vector<Edge> members) : graph_id_(g.id()) {
    for (auto& e : members) {
        e = make_edge(e.first, e.second);
        if (!g.has_edge(e.first, e.second)) {
            throw std::invalid_argument("edge set member is not an edge of the graph");
        }
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    members_ = std::move(members);
}

bool EdgeSet::contains(Edge e) const {
    e = make_edge(e.first, e.second);
    return std::binary_search(members_.begin(), members_.end(), e);
}

void EdgeSet::check_same_graph(const EdgeSet& other) const {
    if (graph_id_ != other.graph_id_) {
        throw std::invalid_argument("edge sets belong to different graphs");
    }
}

EdgeSet EdgeSet::unite(const EdgeSet& other) const {
    check_same_graph(other);
    EdgeSet out;
    out.graph_id_ = graph_id_;
    std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                   other.members_.end(), std::back_inserter(out.members_));
    return out;
}

EdgeSet EdgeSet::minus(const EdgeSet& other) const {
    check_same_graph(other);
    EdgeSet out;
    out.graph_id_ = graph_id_;
    std::set_difference(members_.begin(), members_.end(), other.members_.begin(),
                        other.members_.end(), std::back_inserter(out.members_));
    return out;
}

EdgeSet EdgeSet::intersect(const EdgeSet& other) const {
    check_same_graph(other);
    EdgeSet out;
    out.graph_id_ = graph_id_;
    std::set_intersection(members_.begin(), members_.end(), other.members_.begin(),
                          other.members_.end(), std::back_inserter(out.members_));
    return out;
}

void check_owner(const Graph& g, const VertexSet& s, const char* what) {
    if (s.graph_id() != g.id()) {
        throw std::invalid_argument(std::string(what) + " references a foreign graph");
    }
}

void check_owner(const Graph& g, const EdgeSet& s, const char* what) {
    if (s.graph_id() != g.id()) {
        throw std::invalid_argument(std::string(what) + " references a foreign graph");
    }
}

VertexSet neighborhood(const Graph& g, const VertexSet& a) {
    check_owner(g, a, "vertex set");
    std::vector<char> mark(g.vertex_count(), 0);
    for (int u : a) {
        for (int w : g.neighbors(u)) mark[w] = 1;
    }
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (mark[v]) out.push_back(v);
    }
    return VertexSet(g, std::move(out));
}

VertexSet neighborhood(const Graph& g, int v) {
    auto nb = g.neighbors(v);
    return VertexSet(g, std::vector<int>(nb.begin(), nb.end()));
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& a) {
    return neighborhood(g, a).unite(a);
}

EdgeSet cut_edges(const Graph& g, const VertexSet& a, const VertexSet& b) {
    check_owner(g, a, "first vertex set");
    check_owner(g, b, "second vertex set");
    if (!a.intersect(b).is_empty()) {
        throw std::invalid_argument("cut sides must be disjoint");
    }
    std::vector<Edge> out;
    for (const auto& [u, v] : g.edges()) {
        if ((a.contains(u) && b.contains(v)) || (a.contains(v) && b.contains(u))) {
            out.emplace_back(u, v);
        }
    }
    return EdgeSet(g, std::move(out));
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
    check_owner(g, keep, "vertex set");
    InducedSubgraph out;
    out.to_parent.assign(keep.members().begin(), keep.members().end());
    out.to_sub.assign(g.vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(out.to_parent.size()); ++i) {
        out.to_sub[out.to_parent[i]] = i;
    }
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges()) {
        if (out.to_sub[u] >= 0 && out.to_sub[v] >= 0) {
            edges.emplace_back(out.to_sub[u], out.to_sub[v]);
        }
    }
    std::vector<std::string> labels;
    if (g.has_labels()) {
        labels.reserve(out.to_parent.size());
        for (int p : out.to_parent) labels.push_back(g.labels()[p]);
    }
    out.graph = Graph(static_cast<int>(out.to_parent.size()), std::move(edges),
                      std::move(labels));
    return out;
}

InducedSubgraph delete_vertices(const Graph& g, const VertexSet& drop) {
    check_owner(g, drop, "vertex set");
    return induced_subgraph(g, drop.complement());
}

Graph delete_edges(const Graph& g, const EdgeSet& drop) {
    check_owner(g, drop, "edge set");
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) {
        if (!drop.contains(e)) edges.push_back(e);
    }
    return Graph(g.vertex_count(), std::move(edges), g.labels());
}

bool is_independent_set(const Graph& g, const VertexSet& a) {
    check_owner(g, a, "vertex set");
    for (int u : a) {
        for (int w : g.neighbors(u)) {
            if (w > u && a.contains(w)) return false;
        }
    }
    return true;
}

bool is_bipartite(const Graph& g) {
    std::vector<int> color(g.vertex_count(), -1);
    std::vector<int> queue;
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        queue.assign(1, s);
        for (size_t h = 0; h < queue.size(); ++h) {
            int u = queue[h];
            for (int w : g.neighbors(u)) {
                if (color[w] == -1) {
                    color[w] = color[u] ^ 1;
                    queue.push_back(w);
                } else if (color[w] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

namespace {

struct PendingLabel {
    int vertex;
    std::string name;
    int line;
};

Graph parse_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool have_header = false;
    int n = 0, m = 0, got = 0;
    std::vector<Edge> edges;
    std::vector<PendingLabel> pending;

    while (std::getline(in, line)) {
        ++lineno;
        std::string body = line;
        if (auto pos = body.find('#'); pos != std::string::npos) {
            std::string comment = trim(body.substr(pos + 1));
            body = body.substr(0, pos);
            std::istringstream cs(comment);
            std::string tag;
            if (cs >> tag && tag == "label") {
                int v;
                if (!(cs >> v)) {
                    throw ParseError("malformed label comment at line " +
                                         std::to_string(lineno),
                                     lineno);
                }
                std::string rest;
                std::getline(cs, rest);
                pending.push_back({v, trim(rest), lineno});
            }
        }
        body = trim(body);
        if (body.empty()) continue;

        std::istringstream ls(body);
        if (!have_header) {
            if (!(ls >> n >> m) || n < 0 || m < 0) {
                throw ParseError("expected header 'n m' at line " + std::to_string(lineno),
                                 lineno);
            }
            std::string extra;
            if (ls >> extra) {
                throw ParseError("trailing tokens after header at line " +
                                     std::to_string(lineno),
                                 lineno);
            }
            have_header = true;
            continue;
        }
        int u, v;
        if (!(ls >> u >> v)) {
            throw ParseError("expected edge 'u v' at line " + std::to_string(lineno),
                             lineno);
        }
        std::string extra;
        if (ls >> extra) {
            throw ParseError("trailing tokens after edge at line " + std::to_string(lineno),
                             lineno);
        }
        if (got >= m) {
            throw ParseError("more than the declared " + std::to_string(m) +
                                 " edges at line " + std::to_string(lineno),
                             lineno);
        }
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw ParseError("vertex index out of range at line " + std::to_string(lineno),
                             lineno);
        }
        if (u == v) {
            throw ParseError("self-loop at line " + std::to_string(lineno), lineno);
        }
        edges.push_back(make_edge(u, v));
        ++got;
    }
    if (!have_header) {
        throw ParseError("missing header 'n m'", lineno);
    }
    if (got < m) {
        throw ParseError("declared " + std::to_string(m) + " edges but found only " +
                             std::to_string(got),
                         lineno);
    }
    std::vector<std::string> labels;
    if (!pending.empty()) {
        labels.assign(n, "");
        for (const auto& p : pending) {
            if (p.vertex < 0 || p.vertex >= n) {
                throw ParseError("label vertex out of range at line " +
                                     std::to_string(p.line),
                                 p.line);
            }
            labels[p.vertex] = p.name;
        }
    }
    return Graph(n, std::move(edges), std::move(labels));
}

Graph parse_dimacs(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool have_header = false;
    int n = 0, m = 0, got = 0;
    std::vector<Edge> edges;

    while (std::getline(in, line)) {
        ++lineno;
        std::string body = trim(line);
        if (body.empty() || body[0] == 'c') continue;
        std::istringstream ls(body);
        std::string kind;
        ls >> kind;
        if (kind == "p") {
            if (have_header) {
                throw ParseError("duplicate problem line at line " + std::to_string(lineno),
                                 lineno);
            }
            std::string fmt;
            if (!(ls >> fmt >> n >> m) || fmt != "edge" || n < 0 || m < 0) {
                throw ParseError("expected 'p edge n m' at line " + std::to_string(lineno),
                                 lineno);
            }
            have_header = true;
        } else if (kind == "e") {
            if (!have_header) {
                throw ParseError("edge before problem line at line " +
                                     std::to_string(lineno),
                                 lineno);
            }
            int u, v;
            if (!(ls >> u >> v)) {
                throw ParseError("expected 'e u v' at line " + std::to_string(lineno),
                                 lineno);
            }
            if (got >= m) {
                throw ParseError("more than the declared " + std::to_string(m) +
                                     " edges at line " + std::to_string(lineno),
                                 lineno);
            }
            if (u < 1 || u > n || v < 1 || v > n) {
                throw ParseError("vertex index out of range at line " +
                                     std::to_string(lineno),
                                 lineno);
            }
            if (u == v) {
                throw ParseError("self-loop at line " + std::to_string(lineno), lineno);
            }
            edges.push_back(make_edge(u - 1, v - 1));
            ++got;
        } else {
            throw ParseError("unrecognized line kind '" + kind + "' at line " +
                                 std::to_string(lineno),
                             lineno);
        }
    }
    if (!have_header) throw ParseError("missing 'p edge n m' line", lineno);
    if (got < m) {
        throw ParseError("declared " + std::to_string(m) + " edges but found only " +
                             std::to_string(got),
                         lineno);
    }
    return Graph(n, std::move(edges));
}

}  // namespace

Graph parse_graph(std::istream& in, GraphFormat format) {
    return format == GraphFormat::edge_list ? parse_edge_list(in) : parse_dimacs(in);
}

Graph parse_graph(std::string_view text, GraphFormat format) {
    std::istringstream in{std::string(text)};
    return parse_graph(in, format);
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
    std::ostringstream out;
    if (format == GraphFormat::edge_list) {
        out << g.vertex_count() << ' ' << g.edge_count() << '\n';
        if (g.has_labels()) {
            for (int v = 0; v < g.vertex_count(); ++v) {
                if (!g.labels()[v].empty()) {
                    out << "# label " << v << ' ' << g.labels()[v] << '\n';
                }
            }
        }
        for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    } else {
        out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
        for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    }
    return out.str();
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::string first;
    std::string line;
    auto pos = in.tellg();
    while (std::getline(in, line)) {
        std::string body = trim(line);
        if (body.empty() || body[0] == '#') continue;
        first = body;
        break;
    }
    in.clear();
    in.seekg(pos);
    GraphFormat fmt = GraphFormat::edge_list;
    if (!first.empty() && (first[0] == 'p' || first[0] == 'c' || first[0] == 'e')) {
        fmt = GraphFormat::dimacs;
    }
    return parse_graph(in, fmt);
}

void write_graph_file(const Graph& g, const std::string& path, GraphFormat format) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << serialize_graph(g, format);
}

Graph make_path(int n) {
    if (n < 3) throw std::invalid_argument("path graphs require n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges));
}

Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle graphs require n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.push_back(make_edge(0, n - 1));
    return Graph(n, std::move(edges));
}

Graph make_complete(int n) {
    if (n < 1) throw std::invalid_argument("complete graphs require n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    }
    return Graph(n, std::move(edges));
}

Graph make_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) {
        throw std::invalid_argument("complete bipartite graphs require both sides >= 1");
    }
    std::vector<Edge> edges;
    for (int i = 0; i < a; ++i) {
        for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    }
    return Graph(a + b, std::move(edges));
}

Graph make_gnp(int n, double p, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("gnp requires n >= 0");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("gnp requires p in [0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            // Top 53 bits -> uniform double in [0, 1); independent of stdlib
            // distribution implementations, so the same seed always gives the
            // same graph.
            double r = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (r < p) edges.emplace_back(i, j);
        }
    }
    return Graph(n, std::move(edges));
}

namespace {

struct FixtureSpec {
    const char* name;
    int n;
    std::vector<Edge> edges;
    std::vector<std::string> labels;
};

const std::vector<FixtureSpec>& fixture_table() {
    static const std::vector<FixtureSpec> table = {
        {"fig1",
         7,
         {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}, {3, 6}, {4, 6}},
         {"a", "u", "c", "v", "y", "b", "x"}},
        {"fig22_G1",
         5,
         {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 4}},
         {"a", "c", "y", "b", "x"}},
        {"fig22_G2", 6, {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {2, 4}, {1, 4}}, {}},
        {"fig22_G3",
         5,
         {{2, 3}, {3, 4}, {0, 2}, {1, 3}, {1, 4}},
         {"u", "v", "x", "z", "y"}},
        {"fig33_W", 6, {{0, 1}, {1, 2}, {2, 3}, {1, 5}, {2, 4}, {3, 4}, {0, 5}}, {}},
        {"fig33_H",
         7,
         {{4, 6},
          {4, 5},
          {0, 4},
          {1, 4},
          {2, 4},
          {3, 4},
          {1, 5},
          {1, 2},
          {2, 3},
          {2, 5},
          {3, 5},
          {1, 3}},
         {}},
        {"fig222_G1",
         7,
         {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 5}, {2, 6}, {3, 5}, {5, 6}, {3, 6}},
         {}},
        {"fig222_G2",
         5,
         {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}, {2, 4}},
         {"", "", "b", "a", ""}},
        {"fig222_G3", 5, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {2, 4}}, {}},
        {"two_triangles_bridge",
         6,
         {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}},
         {"a", "b", "c", "d", "e", "f"}},
    };
    return table;
}

}  // namespace

Graph make_fixture(std::string_view name) {
    for (const auto& f : fixture_table()) {
        if (name == f.name) return Graph(f.n, f.edges, f.labels);
    }
    throw std::invalid_argument("unknown fixture '" + std::string(name) + "'");
}

std::vector<std::string> fixture_names() {
    std::vector<std::string> out;
    for (const auto& f : fixture_table()) out.emplace_back(f.name);
    return out;
}

}  // namespace kegraph
