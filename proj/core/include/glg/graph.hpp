#ifndef GLG_GRAPH_HPP
#define GLG_GRAPH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <glg/error.hpp>
#include <glg/numeric.hpp>

namespace glg {

bool is_valid_name(const std::string& name);  // [A-Za-z0-9_]+

struct EdgeRec {
    std::string name;
    int tail = -1;  // vertex index
    int head = -1;
};

/// Plain finite directed graph with named vertices and edges but no ranks.
/// Vertices and edges keep their order of first insertion; that order is
/// the tie-breaker for every deterministic choice made downstream.
class Digraph {
public:
    int add_vertex(const std::string& name);
    int add_edge(const std::string& name, const std::string& tail, const std::string& head);

    int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::string& vertex_name(int v) const { return vertex_names_[v]; }
    const EdgeRec& edge(int e) const { return edges_[e]; }

    std::optional<int> find_vertex(const std::string& name) const;
    std::optional<int> find_edge(const std::string& name) const;

    /// Edge indices with the given tail, in stored order.
    const std::vector<int>& out_edges(int v) const { return out_edges_[v]; }
    const std::vector<int>& in_edges(int v) const { return in_edges_[v]; }

    bool operator==(const Digraph& other) const;

private:
    std::vector<std::string> vertex_names_;
    std::vector<EdgeRec> edges_;
    std::vector<std::vector<int>> out_edges_;
    std::vector<std::vector<int>> in_edges_;
    std::map<std::string, int> vertex_index_;
    std::map<std::string, int> edge_index_;
};

/// A generalized layered graph: a digraph plus a rank per vertex such that
/// every edge strictly decreases rank. The edge length is the rank drop.
class RankedDigraph {
public:
    int add_vertex(const std::string& name, int rank);
    int add_edge(const std::string& name, const std::string& tail, const std::string& head);

    int vertex_count() const { return graph_.vertex_count(); }
    int edge_count() const { return graph_.edge_count(); }
    const std::string& vertex_name(int v) const { return graph_.vertex_name(v); }
    const EdgeRec& edge(int e) const { return graph_.edge(e); }
    std::optional<int> find_vertex(const std::string& name) const { return graph_.find_vertex(name); }
    std::optional<int> find_edge(const std::string& name) const { return graph_.find_edge(name); }
    const std::vector<int>& out_edges(int v) const { return graph_.out_edges(v); }
    const std::vector<int>& in_edges(int v) const { return graph_.in_edges(v); }

    int rank(int v) const { return ranks_[v]; }
    int rank_of(const std::string& vertex) const;
    const std::vector<int>& ranks() const { return ranks_; }
    int max_rank() const;

    int edge_length(int e) const {
        return ranks_[graph_.edge(e).tail] - ranks_[graph_.edge(e).head];
    }

    const Digraph& underlying() const { return graph_; }

    bool operator==(const RankedDigraph& other) const {
        return graph_ == other.graph_ && ranks_ == other.ranks_;
    }

private:
    Digraph graph_;
    std::vector<int> ranks_;
};

/// Parses the .glg text format: one record per line, records are
/// `# comment`, `vertex NAME RANK`, `edge NAME TAIL HEAD`.
/// Throws ParseError with a 1-based line/column position on any defect.
RankedDigraph parse_graph(const std::string& text);

/// Emits vertices then edges in stored order; parse_graph(serialize(g)) == g.
std::string serialize(const RankedDigraph& g);

/// Minimal rank assignment: 0 on sinks, otherwise the maximum number of
/// edges on a directed path starting at the vertex. Throws on a cycle.
std::vector<int> canonical_rank(const Digraph& g);

/// Same, ignoring the ranks the graph already carries (always acyclic).
std::vector<int> canonical_rank(const RankedDigraph& g);

/// Builds a RankedDigraph from a digraph and a rank vector, validating the
/// strict decrease along every edge.
RankedDigraph with_ranks(const Digraph& g, const std::vector<int>& ranks);

/// All rank functions with every value <= bound, in lexicographic order of
/// the rank vector over stored vertex order. Empty when bound is below the
/// canonical maximum.
std::vector<std::vector<int>> enumerate_rank_functions(const Digraph& g, int bound);

enum class RankOrder { Equal, Ge, Le, Incomparable };

/// Comparison of two rank functions on the same digraph via the vectors
/// (rank of tail(e)) over all edges.
RankOrder compare_rankings(const Digraph& g, const std::vector<int>& r1,
                           const std::vector<int>& r2);
RankOrder compare_rankings(const RankedDigraph& a, const RankedDigraph& b);

/// Transitive closure of the edge relation, with exact path counts.
/// count(v,v) = 1 (the empty path); reaches(v,w) is irreflexive.
class Reachability {
public:
    explicit Reachability(const RankedDigraph& g);

    bool reaches(int v, int w) const { return v != w && counts_[v][w] != 0; }
    bool geq(int v, int w) const { return v == w || reaches(v, w); }
    const Int& path_count(int v, int w) const { return counts_[v][w]; }
    int vertex_count() const { return static_cast<int>(counts_.size()); }

private:
    std::vector<std::vector<Int>> counts_;
};

struct SinkReport {
    std::vector<int> sinks;    // vertices with no outgoing edge, stored order
    bool unique = false;
    bool unique_rank0 = false; // unique and the sink has rank 0
};

SinkReport sink_report(const RankedDigraph& g);

/// Index of the unique minimal vertex (unique sink); throws an Error that
/// names every sink when there is not exactly one.
int unique_minimal_vertex(const RankedDigraph& g);

struct SourceReport {
    std::vector<int> sources;  // vertices with no incoming edge
    bool unique = false;
};

SourceReport source_report(const RankedDigraph& g);

// --- generators -----------------------------------------------------------

/// Two vertices max (rank d) and min (rank 0) joined by one edge of length d.
RankedDigraph gen_delta(int d);

/// Directed chain c0 -> c1 -> ... -> ck with the given edge lengths,
/// sink ck at rank 0.
RankedDigraph gen_chain(const std::vector<int>& lengths);

/// Rooted in-tree: node i >= 1 attaches to an earlier node by one edge of
/// the given length; the root t0 is the unique sink at rank 0.
struct TreeNodeSpec {
    int parent = 0;  // index of an earlier node
    int length = 1;
};
RankedDigraph gen_tree(const std::vector<TreeNodeSpec>& nodes);

/// Hasse graph of the power set of the orbit set of a permutation of
/// {1..n}; rank of a subset is the cardinality of the union of its orbits.
/// The permutation is given in cycle notation, e.g. "(1 2)(3 4 5)"; ""
/// or "id" is the identity.
RankedDigraph gen_sym_orbit(int n, const std::string& permutation);

/// Random DAG sampled on a random topological order, then ranked with the
/// canonical ranks; when rank_bound exceeds a vertex's forced minimum the
/// rank is lifted by a seeded random amount capped at rank_bound.
/// Deterministic for a fixed seed.
RankedDigraph gen_random_dag(int vertices, double edge_prob, int rank_bound,
                             std::uint64_t seed);

}  // namespace glg

#endif
