#include <glg/graph.hpp>

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>

namespace glg {

bool is_valid_name(const std::string& name) {
    if (name.empty()) return false;
    for (char c : name) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    }
    return true;
}

// --- Digraph ---------------------------------------------------------------

int Digraph::add_vertex(const std::string& name) {
    if (!is_valid_name(name)) throw Error("invalid vertex name '" + name + "'");
    if (vertex_index_.count(name)) throw Error("duplicate vertex name '" + name + "'");
    int id = vertex_count();
    vertex_index_[name] = id;
    vertex_names_.push_back(name);
    out_edges_.emplace_back();
    in_edges_.emplace_back();
    return id;
}

int Digraph::add_edge(const std::string& name, const std::string& tail,
                      const std::string& head) {
    if (!is_valid_name(name)) throw Error("invalid edge name '" + name + "'");
    if (edge_index_.count(name)) throw Error("duplicate edge name '" + name + "'");
    auto t = find_vertex(tail);
    if (!t) throw Error("edge '" + name + "': unknown tail vertex '" + tail + "'");
    auto h = find_vertex(head);
    if (!h) throw Error("edge '" + name + "': unknown head vertex '" + head + "'");
    int id = edge_count();
    edge_index_[name] = id;
    edges_.push_back(EdgeRec{name, *t, *h});
    out_edges_[*t].push_back(id);
    in_edges_[*h].push_back(id);
    return id;
}

std::optional<int> Digraph::find_vertex(const std::string& name) const {
    auto it = vertex_index_.find(name);
    if (it == vertex_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> Digraph::find_edge(const std::string& name) const {
    auto it = edge_index_.find(name);
    if (it == edge_index_.end()) return std::nullopt;
    return it->second;
}

bool Digraph::operator==(const Digraph& other) const {
    if (vertex_names_ != other.vertex_names_) return false;
    if (edges_.size() != other.edges_.size()) return false;
    for (size_t i = 0; i < edges_.size(); ++i) {
        const EdgeRec& a = edges_[i];
        const EdgeRec& b = other.edges_[i];
        if (a.name != b.name || a.tail != b.tail || a.head != b.head) return false;
    }
    return true;
}

// --- RankedDigraph ----------------------------------------------------------

int RankedDigraph::add_vertex(const std::string& name, int rank) {
    if (rank < 0) throw Error("vertex '" + name + "': negative rank");
    int id = graph_.add_vertex(name);
    ranks_.push_back(rank);
    return id;
}

int RankedDigraph::add_edge(const std::string& name, const std::string& tail,
                            const std::string& head) {
    int id = graph_.add_edge(name, tail, head);
    const EdgeRec& e = graph_.edge(id);
    if (ranks_[e.tail] <= ranks_[e.head]) {
        throw Error("edge '" + name + "' is not rank-decreasing: rank(" + tail + ") = " +
                    std::to_string(ranks_[e.tail]) + " <= rank(" + head + ") = " +
                    std::to_string(ranks_[e.head]));
    }
    return id;
}

int RankedDigraph::rank_of(const std::string& vertex) const {
    auto v = find_vertex(vertex);
    if (!v) throw Error("unknown vertex '" + vertex + "'");
    return ranks_[*v];
}

int RankedDigraph::max_rank() const {
    int m = 0;
    for (int r : ranks_) m = std::max(m, r);
    return m;
}

// --- parsing / serialization ------------------------------------------------

namespace {

struct Token {
    std::string text;
    int column = 0;  // 1-based
};

std::vector<Token> split_tokens(const std::string& line) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
        }
        size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        out.push_back(Token{line.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
    }
    return out;
}

constexpr int kMaxRank = 1000000;

int parse_rank(const Token& tok, int line_no) {
    if (tok.text.empty()) throw ParseError(line_no, tok.column, "expected a rank");
    long long value = 0;
    for (char c : tok.text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw ParseError(line_no, tok.column,
                             "rank '" + tok.text + "' is not a nonnegative integer");
        }
        value = value * 10 + (c - '0');
        if (value > kMaxRank) {
            throw ParseError(line_no, tok.column,
                             "rank '" + tok.text + "' exceeds the supported maximum " +
                                 std::to_string(kMaxRank));
        }
    }
    return static_cast<int>(value);
}

void check_name(const Token& tok, int line_no, const char* what) {
    if (!is_valid_name(tok.text)) {
        throw ParseError(line_no, tok.column, std::string(what) + " '" + tok.text +
                                                  "' must match [A-Za-z0-9_]+");
    }
}

}  // namespace

RankedDigraph parse_graph(const std::string& text) {
    RankedDigraph g;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::vector<Token> toks = split_tokens(line);
        if (toks.empty() || toks[0].text[0] == '#') continue;
        const Token& kw = toks[0];
        try {
            if (kw.text == "vertex") {
                if (toks.size() != 3) {
                    throw ParseError(line_no, kw.column, "expected: vertex NAME RANK");
                }
                check_name(toks[1], line_no, "vertex name");
                g.add_vertex(toks[1].text, parse_rank(toks[2], line_no));
            } else if (kw.text == "edge") {
                if (toks.size() != 4) {
                    throw ParseError(line_no, kw.column, "expected: edge NAME TAIL HEAD");
                }
                check_name(toks[1], line_no, "edge name");
                check_name(toks[2], line_no, "vertex name");
                check_name(toks[3], line_no, "vertex name");
                g.add_edge(toks[1].text, toks[2].text, toks[3].text);
            } else {
                throw ParseError(line_no, kw.column,
                                 "unknown record '" + kw.text + "' (expected vertex or edge)");
            }
        } catch (const ParseError&) {
            throw;
        } catch (const Error& err) {
            throw ParseError(line_no, toks.size() > 1 ? toks[1].column : kw.column, err.what());
        }
    }
    return g;
}

std::string serialize(const RankedDigraph& g) {
    std::ostringstream out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "vertex " << g.vertex_name(v) << ' ' << g.rank(v) << '\n';
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        const EdgeRec& rec = g.edge(e);
        out << "edge " << rec.name << ' ' << g.vertex_name(rec.tail) << ' '
            << g.vertex_name(rec.head) << '\n';
    }
    return out.str();
}

// --- ranking ----------------------------------------------------------------

std::vector<int> canonical_rank(const Digraph& g) {
    const int n = g.vertex_count();
    std::vector<int> rank(n, -1);
    std::vector<int> state(n, 0);  // 0 new, 1 active, 2 done
    // iterative longest-outgoing-path DFS with cycle detection
    for (int start = 0; start < n; ++start) {
        if (state[start] == 2) continue;
        std::vector<std::pair<int, size_t>> stack{{start, 0}};
        state[start] = 1;
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            const auto& outs = g.out_edges(v);
            if (next < outs.size()) {
                int w = g.edge(outs[next]).head;
                ++next;
                if (state[w] == 1) throw Error("cycle detected through vertex '" + g.vertex_name(w) + "'");
                if (state[w] == 0) {
                    state[w] = 1;
                    stack.emplace_back(w, 0);
                }
            } else {
                int best = 0;
                for (int e : outs) best = std::max(best, 1 + rank[g.edge(e).head]);
                rank[v] = best;
                state[v] = 2;
                stack.pop_back();
            }
        }
    }
    return rank;
}

std::vector<int> canonical_rank(const RankedDigraph& g) {
    return canonical_rank(g.underlying());
}

RankedDigraph with_ranks(const Digraph& g, const std::vector<int>& ranks) {
    if (static_cast<int>(ranks.size()) != g.vertex_count()) {
        throw Error("rank vector size does not match vertex count");
    }
    RankedDigraph out;
    for (int v = 0; v < g.vertex_count(); ++v) out.add_vertex(g.vertex_name(v), ranks[v]);
    for (int e = 0; e < g.edge_count(); ++e) {
        const EdgeRec& rec = g.edge(e);
        out.add_edge(rec.name, g.vertex_name(rec.tail), g.vertex_name(rec.head));
    }
    return out;
}

std::vector<std::vector<int>> enumerate_rank_functions(const Digraph& g, int bound) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> out;
    if (bound < 0) return out;
    std::vector<int> rank(n, -1);
    // backtracking in stored vertex order; ascending values give the
    // lexicographic output order
    std::vector<std::vector<std::pair<int, bool>>> constraints(n);
    // constraints[v]: (other endpoint, v_is_tail) among earlier vertices
    for (int e = 0; e < g.edge_count(); ++e) {
        const EdgeRec& rec = g.edge(e);
        if (rec.tail > rec.head) constraints[rec.tail].emplace_back(rec.head, true);
        if (rec.head > rec.tail) constraints[rec.head].emplace_back(rec.tail, false);
        if (rec.tail == rec.head) return out;  // self-loop: no valid ranking
    }
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            out.push_back(rank);
            return;
        }
        for (int r = 0; r <= bound; ++r) {
            bool ok = true;
            for (auto [u, v_is_tail] : constraints[v]) {
                if (v_is_tail ? r <= rank[u] : rank[u] <= r) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                rank[v] = r;
                self(self, v + 1);
            }
        }
        rank[v] = -1;
    };
    rec(rec, 0);
    return out;
}

RankOrder compare_rankings(const Digraph& g, const std::vector<int>& r1,
                           const std::vector<int>& r2) {
    if (static_cast<int>(r1.size()) != g.vertex_count() ||
        static_cast<int>(r2.size()) != g.vertex_count()) {
        throw Error("rank vectors do not match the graph's vertex count");
    }
    bool all_ge = true;
    bool all_le = true;
    for (int e = 0; e < g.edge_count(); ++e) {
        int t = g.edge(e).tail;
        if (r1[t] < r2[t]) all_ge = false;
        if (r1[t] > r2[t]) all_le = false;
    }
    if (all_ge && all_le) return RankOrder::Equal;
    if (all_ge) return RankOrder::Ge;
    if (all_le) return RankOrder::Le;
    return RankOrder::Incomparable;
}

RankOrder compare_rankings(const RankedDigraph& a, const RankedDigraph& b) {
    if (!(a.underlying() == b.underlying())) {
        throw Error("rankings live on different graphs");
    }
    return compare_rankings(a.underlying(), a.ranks(), b.ranks());
}

// --- reachability ------------------------------------------------------------

Reachability::Reachability(const RankedDigraph& g) {
    const int n = g.vertex_count();
    counts_.assign(n, std::vector<Int>(n, 0));
    // visit tails in increasing rank so heads are already final
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.rank(a) < g.rank(b); });
    for (int w = 0; w < n; ++w) {
        counts_[w][w] = 1;
        for (int v : order) {
            if (v == w) continue;
            Int total = 0;
            for (int e : g.out_edges(v)) total += counts_[g.edge(e).head][w];
            counts_[v][w] = total;
        }
    }
}

SinkReport sink_report(const RankedDigraph& g) {
    SinkReport rep;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.out_edges(v).empty()) rep.sinks.push_back(v);
    }
    rep.unique = rep.sinks.size() == 1;
    rep.unique_rank0 = rep.unique && g.rank(rep.sinks[0]) == 0;
    return rep;
}

int unique_minimal_vertex(const RankedDigraph& g) {
    SinkReport rep = sink_report(g);
    if (rep.unique) return rep.sinks[0];
    std::string names;
    for (int v : rep.sinks) {
        if (!names.empty()) names += ", ";
        names += g.vertex_name(v);
    }
    if (rep.sinks.empty()) throw Error("graph has no vertices, hence no minimal vertex");
    throw Error("no unique minimal vertex; sinks: " + names);
}

SourceReport source_report(const RankedDigraph& g) {
    SourceReport rep;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.in_edges(v).empty()) rep.sources.push_back(v);
    }
    rep.unique = rep.sources.size() == 1;
    return rep;
}

// --- generators ---------------------------------------------------------------

RankedDigraph gen_delta(int d) {
    if (d < 1) throw Error("gen_delta: d must be >= 1");
    RankedDigraph g;
    g.add_vertex("max", d);
    g.add_vertex("min", 0);
    g.add_edge("e", "max", "min");
    return g;
}

RankedDigraph gen_chain(const std::vector<int>& lengths) {
    int total = 0;
    for (int l : lengths) {
        if (l < 1) throw Error("gen_chain: edge lengths must be >= 1");
        total += l;
    }
    RankedDigraph g;
    g.add_vertex("c0", total);
    int remaining = total;
    for (size_t i = 0; i < lengths.size(); ++i) {
        remaining -= lengths[i];
        g.add_vertex("c" + std::to_string(i + 1), remaining);
        g.add_edge("g" + std::to_string(i + 1), "c" + std::to_string(i),
                   "c" + std::to_string(i + 1));
    }
    return g;
}

RankedDigraph gen_tree(const std::vector<TreeNodeSpec>& nodes) {
    // ranks are determined bottom-up from the root t0 at rank 0
    std::vector<int> rank(nodes.size() + 1, 0);
    for (size_t i = 0; i < nodes.size(); ++i) {
        int node = static_cast<int>(i) + 1;
        if (nodes[i].parent < 0 || nodes[i].parent >= node) {
            throw Error("gen_tree: node " + std::to_string(node) +
                        " must attach to an earlier node");
        }
        if (nodes[i].length < 1) throw Error("gen_tree: edge lengths must be >= 1");
        rank[node] = rank[nodes[i].parent] + nodes[i].length;
    }
    RankedDigraph g;
    for (size_t v = 0; v < rank.size(); ++v) {
        g.add_vertex("t" + std::to_string(v), rank[v]);
    }
    for (size_t i = 0; i < nodes.size(); ++i) {
        int node = static_cast<int>(i) + 1;
        g.add_edge("f" + std::to_string(node), "t" + std::to_string(node),
                   "t" + std::to_string(nodes[i].parent));
    }
    return g;
}

namespace {

std::vector<std::vector<int>> parse_cycles(int n, const std::string& text) {
    std::vector<std::vector<int>> cycles;
    std::string trimmed;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    }
    if (trimmed.empty() || trimmed == "id" || trimmed == "e" || trimmed == "()") return cycles;
    size_t i = 0;
    std::vector<bool> seen(n + 1, false);
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i >= text.size()) break;
        if (text[i] != '(') throw Error("permutation: expected '(' in cycle notation");
        ++i;
        std::vector<int> cycle;
        while (i < text.size() && text[i] != ')') {
            while (i < text.size() &&
                   (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
                ++i;
            if (i < text.size() && text[i] == ')') break;
            if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
                throw Error("permutation: expected a number inside a cycle");
            }
            int value = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                value = value * 10 + (text[i] - '0');
                ++i;
            }
            if (value < 1 || value > n) {
                throw Error("permutation: entry " + std::to_string(value) +
                            " is outside 1.." + std::to_string(n));
            }
            if (seen[value]) {
                throw Error("permutation: entry " + std::to_string(value) + " repeats");
            }
            seen[value] = true;
            cycle.push_back(value);
        }
        if (i >= text.size()) throw Error("permutation: unterminated cycle");
        ++i;  // ')'
        if (!cycle.empty()) cycles.push_back(cycle);
    }
    return cycles;
}

}  // namespace

RankedDigraph gen_sym_orbit(int n, const std::string& permutation) {
    if (n < 1) throw Error("gen_sym_orbit: n must be >= 1");
    std::vector<std::vector<int>> cycles = parse_cycles(n, permutation);
    // orbits of the permutation: its cycles plus fixed points
    std::vector<int> orbit_of(n + 1, -1);
    std::vector<std::vector<int>> orbits;
    for (const auto& c : cycles) {
        for (int x : c) orbit_of[x] = static_cast<int>(orbits.size());
        orbits.push_back(c);
    }
    for (int x = 1; x <= n; ++x) {
        if (orbit_of[x] < 0) {
            orbit_of[x] = static_cast<int>(orbits.size());
            orbits.push_back({x});
        }
    }
    // sort orbits by minimum element so vertex names are stable
    std::sort(orbits.begin(), orbits.end(), [](const auto& a, const auto& b) {
        return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
    });
    const int k = static_cast<int>(orbits.size());
    if (k > 20) throw Error("gen_sym_orbit: too many orbits (" + std::to_string(k) + ")");
    const int subsets = 1 << k;

    auto subset_rank = [&](int mask) {
        int r = 0;
        for (int i = 0; i < k; ++i) {
            if (mask & (1 << i)) r += static_cast<int>(orbits[i].size());
        }
        return r;
    };
    auto subset_name = [&](int mask) {
        std::string name = "v";
        for (int i = 0; i < k; ++i) {
            if (mask & (1 << i)) name += "_" + std::to_string(i + 1);
        }
        return name;
    };

    // vertices in decreasing rank, ties by name; matches the usual listing
    // of such graphs from the top element down
    std::vector<int> masks(subsets);
    for (int m = 0; m < subsets; ++m) masks[m] = m;
    std::stable_sort(masks.begin(), masks.end(), [&](int a, int b) {
        int ra = subset_rank(a), rb = subset_rank(b);
        if (ra != rb) return ra > rb;
        return subset_name(a) < subset_name(b);
    });

    RankedDigraph g;
    for (int m : masks) g.add_vertex(subset_name(m), subset_rank(m));
    int edge_no = 0;
    for (int m : masks) {
        for (int n2 : masks) {
            // Hasse cover: n2 = m minus exactly one orbit
            int diff = m & ~n2;
            if ((n2 & ~m) == 0 && diff != 0 && (diff & (diff - 1)) == 0) {
                ++edge_no;
                g.add_edge("e" + std::to_string(edge_no), subset_name(m), subset_name(n2));
            }
        }
    }
    return g;
}

RankedDigraph gen_random_dag(int vertices, double edge_prob, int rank_bound,
                             std::uint64_t seed) {
    if (vertices < 1) throw Error("gen_random_dag: vertex count must be >= 1");
    if (edge_prob < 0.0 || edge_prob > 1.0) {
        throw Error("gen_random_dag: edge probability must be in [0,1]");
    }
    if (rank_bound < 0) throw Error("gen_random_dag: rank bound must be >= 0");
    std::mt19937_64 rng(seed);
    auto next_below = [&](int k) { return static_cast<int>(rng() % static_cast<std::uint64_t>(k)); };
    auto coin = [&](double p) {
        return (static_cast<double>(rng() >> 11) * 0x1.0p-53) < p;
    };

    // random topological order via Fisher-Yates
    std::vector<int> order(vertices);
    for (int i = 0; i < vertices; ++i) order[i] = i;
    for (int i = vertices - 1; i > 0; --i) std::swap(order[i], order[next_below(i + 1)]);

    Digraph dg;
    for (int v = 0; v < vertices; ++v) dg.add_vertex("v" + std::to_string(v + 1));
    int edge_no = 0;
    for (int i = 0; i < vertices; ++i) {
        for (int j = i + 1; j < vertices; ++j) {
            if (coin(edge_prob)) {
                ++edge_no;
                dg.add_edge("e" + std::to_string(edge_no), dg.vertex_name(order[i]),
                            dg.vertex_name(order[j]));
            }
        }
    }

    std::vector<int> rank = canonical_rank(dg);
    if (rank_bound > 0) {
        // lift ranks, sinks first, keeping every edge strictly decreasing
        std::vector<int> by_rank(vertices);
        for (int i = 0; i < vertices; ++i) by_rank[i] = i;
        std::stable_sort(by_rank.begin(), by_rank.end(),
                         [&](int a, int b) { return rank[a] < rank[b]; });
        for (int v : by_rank) {
            int forced = 0;
            for (int e : dg.out_edges(v)) forced = std::max(forced, rank[dg.edge(e).head] + 1);
            int room = rank_bound - forced;
            rank[v] = forced + (room > 0 ? next_below(room + 1) : 0);
        }
    }
    return with_ranks(dg, rank);
}

}  // namespace glg
