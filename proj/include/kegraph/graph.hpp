#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kegraph {

// Endpoints are stored normalized (first < second).
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line) : std::runtime_error(what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Immutable simple undirected graph on vertices 0..n-1.
// Vertex labels are optional display metadata; structure ignores them.
// Every graph value carries an identity tag so that vertex/edge sets built
// against one graph are rejected by operations on another.
class Graph {
public:
    Graph() : Graph(0) {}
    explicit Graph(int n) : Graph(n, {}) {}
    Graph(int n, std::vector<Edge> edges, std::vector<std::string> labels = {});

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    std::span<const int> neighbors(int v) const;
    std::span<const int> incident_edge_indices(int v) const;
    int degree(int v) const;
    bool has_edge(int u, int v) const;
    std::optional<int> edge_index(int u, int v) const;

    std::uint64_t id() const { return id_; }

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    // Label if present, else the decimal vertex id.
    std::string label(int v) const;
    std::optional<int> vertex_by_label(std::string_view name) const;

    // Structural equality: same order and same edge set; labels ignored.
    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

    void check_vertex(int v) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<int>> adj_edge_;
    std::vector<std::string> labels_;
    std::uint64_t id_ = 0;
};

// Sorted, duplicate-free vertex subset bound to one graph.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(const Graph& g, std::vector<int> members);

    static VertexSet empty(const Graph& g) { return VertexSet(g, {}); }
    static VertexSet all(const Graph& g);

    const std::vector<int>& members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool is_empty() const { return members_.empty(); }
    bool contains(int v) const;
    std::uint64_t graph_id() const { return graph_id_; }
    int universe_size() const { return universe_; }

    VertexSet unite(const VertexSet& other) const;
    VertexSet minus(const VertexSet& other) const;
    VertexSet intersect(const VertexSet& other) const;
    VertexSet complement() const;
    bool is_subset_of(const VertexSet& other) const;

    bool operator==(const VertexSet& other) const {
        return graph_id_ == other.graph_id_ && members_ == other.members_;
    }

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

private:
    friend class Graph;
    void check_same_graph(const VertexSet& other) const;

    std::vector<int> members_;
    std::uint64_t graph_id_ = 0;
    int universe_ = 0;
};

// Sorted, duplicate-free subset of a graph's edges.
class EdgeSet {
public:
    EdgeSet() = default;
    EdgeSet(const Graph& g, std::vector<Edge> members);

    static EdgeSet empty(const Graph& g) { return EdgeSet(g, {}); }

    const std::vector<Edge>& members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool is_empty() const { return members_.empty(); }
    bool contains(Edge e) const;
    std::uint64_t graph_id() const { return graph_id_; }

    EdgeSet unite(const EdgeSet& other) const;
    EdgeSet minus(const EdgeSet& other) const;
    EdgeSet intersect(const EdgeSet& other) const;

    bool operator==(const EdgeSet& other) const {
        return graph_id_ == other.graph_id_ && members_ == other.members_;
    }

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

private:
    void check_same_graph(const EdgeSet& other) const;

    std::vector<Edge> members_;
    std::uint64_t graph_id_ = 0;
};

void check_owner(const Graph& g, const VertexSet& s, const char* what);
void check_owner(const Graph& g, const EdgeSet& s, const char* what);

// Result of a vertex-deleting operation: the new graph plus the index map
// back to the parent (to_parent[new] == old). Labels carry over.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_parent;
    std::vector<int> to_sub;  // parent index -> new index, -1 if dropped

    int parent_index(int sub_vertex) const { return to_parent.at(sub_vertex); }
    int sub_index(int parent_vertex) const { return to_sub.at(parent_vertex); }
};

VertexSet neighborhood(const Graph& g, const VertexSet& a);
VertexSet neighborhood(const Graph& g, int v);
VertexSet closed_neighborhood(const Graph& g, const VertexSet& a);
EdgeSet cut_edges(const Graph& g, const VertexSet& a, const VertexSet& b);

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);
InducedSubgraph delete_vertices(const Graph& g, const VertexSet& drop);
Graph delete_edges(const Graph& g, const EdgeSet& drop);

bool is_independent_set(const Graph& g, const VertexSet& a);
bool is_bipartite(const Graph& g);

enum class GraphFormat { edge_list, dimacs };

// Edge list: first significant line "n m", then m lines "u v" (0-based).
// '#' starts a comment; "# label <index> <name>" comments carry vertex labels.
// DIMACS: "c" comments, one "p edge n m" header, m lines "e u v" (1-based).
Graph parse_graph(std::istream& in, GraphFormat format = GraphFormat::edge_list);
Graph parse_graph(std::string_view text, GraphFormat format = GraphFormat::edge_list);
std::string serialize_graph(const Graph& g, GraphFormat format = GraphFormat::edge_list);

// Reads a graph file, auto-detecting DIMACS by its "p edge" header.
Graph load_graph_file(const std::string& path);
void write_graph_file(const Graph& g, const std::string& path,
                      GraphFormat format = GraphFormat::edge_list);

Graph make_path(int n);   // n >= 3
Graph make_cycle(int n);  // n >= 3
Graph make_complete(int n);
Graph make_complete_bipartite(int a, int b);
Graph make_gnp(int n, double p, std::uint64_t seed);

// Named graphs used throughout the tests and docs; labeled where the
// drawings they come from carry labels.
Graph make_fixture(std::string_view name);
std::vector<std::string> fixture_names();

}  // namespace kegraph
