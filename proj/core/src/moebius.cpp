#include <glg/moebius.hpp>

#include <algorithm>

namespace glg {

MoebiusTable::MoebiusTable(const RankedDigraph& g, const Reachability& reach) {
    const int n = g.vertex_count();
    // process w by decreasing rank from v so every u in (w, v] is done first
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.rank(a) > g.rank(b); });
    for (int v = 0; v < n; ++v) {
        entries_[{v, v}] = 1;
        for (int w : order) {
            if (!reach.reaches(v, w)) continue;
            Int acc = 0;
            // mu(v,w) = - sum over u with v >= u > w of mu(v,u); u = v included
            for (int u = 0; u < n; ++u) {
                if (reach.geq(v, u) && reach.reaches(u, w)) acc += entries_.at({v, u});
            }
            entries_[{v, w}] = -acc;
        }
    }
}

Int MoebiusTable::mu(int v, int w) const {
    auto it = entries_.find({v, w});
    return it == entries_.end() ? Int(0) : it->second;
}

MoebiusTable moebius_table(const RankedDigraph& g) {
    Reachability reach(g);
    return MoebiusTable(g, reach);
}

IntPolynomial m_series(const RankedDigraph& g, const Reachability& reach,
                       const MoebiusTable& table) {
    unique_minimal_vertex(g);
    (void)reach;
    std::vector<Int> c(g.max_rank() + 1, Int(0));
    for (const auto& [pair, mu] : table.entries()) {
        c[g.rank(pair.first) - g.rank(pair.second)] += mu;
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial m_series(const RankedDigraph& g) {
    Reachability reach(g);
    MoebiusTable table(g, reach);
    return m_series(g, reach, table);
}

IntPolynomial m_lower(const RankedDigraph& g) {
    int vmin = unique_minimal_vertex(g);
    Reachability reach(g);
    MoebiusTable table(g, reach);
    std::vector<Int> c(g.max_rank() - g.rank(vmin) + 1, Int(0));
    for (int v = 0; v < g.vertex_count(); ++v) {
        c[g.rank(v) - g.rank(vmin)] += table.mu(v, vmin);
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial m_upper(const RankedDigraph& g) {
    SourceReport rep = source_report(g);
    if (!rep.unique) {
        std::string names;
        for (int v : rep.sources) {
            if (!names.empty()) names += ", ";
            names += g.vertex_name(v);
        }
        throw Error(rep.sources.empty() ? "graph has no vertices, hence no maximal vertex"
                                        : "no unique maximal vertex; sources: " + names);
    }
    int vmax = rep.sources[0];
    Reachability reach(g);
    MoebiusTable table(g, reach);
    std::vector<Int> c(g.rank(vmax) + 1, Int(0));
    for (int v = 0; v < g.vertex_count(); ++v) {
        int d = g.rank(vmax) - g.rank(v);
        if (d >= 0) c[d] += table.mu(vmax, v);
    }
    return IntPolynomial(std::move(c));
}

}  // namespace glg
