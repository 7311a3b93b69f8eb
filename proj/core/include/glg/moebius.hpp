#ifndef GLG_MOEBIUS_HPP
#define GLG_MOEBIUS_HPP

#include <map>
#include <utility>

#include <glg/graph.hpp>
#include <glg/numeric.hpp>
#include <glg/series.hpp>

namespace glg {

/// Moebius function of the path order of a graph: mu(v,v) = 1 and, for
/// v > w, sum of mu(v,u) over v >= u >= w vanishes. Entries exist exactly
/// for comparable pairs (diagonal included); mu() returns 0 elsewhere.
class MoebiusTable {
public:
    MoebiusTable(const RankedDigraph& g, const Reachability& reach);

    Int mu(int v, int w) const;
    const std::map<std::pair<int, int>, Int>& entries() const { return entries_; }

private:
    std::map<std::pair<int, int>, Int> entries_;
};

MoebiusTable moebius_table(const RankedDigraph& g);

/// M(graph)(z) = sum of mu(v,w) z^{rank v - rank w} over all comparable
/// pairs v >= w, diagonal included (each vertex contributes +1).
/// Requires a unique minimal vertex.
IntPolynomial m_series(const RankedDigraph& g);
IntPolynomial m_series(const RankedDigraph& g, const Reachability& reach,
                       const MoebiusTable& table);

/// M_lower = sum over v of mu(v, v_min) z^{rank v - rank v_min};
/// requires a unique minimal vertex.
IntPolynomial m_lower(const RankedDigraph& g);

/// M_upper = sum over v of mu(v_max, v) z^{rank v_max - rank v};
/// requires a unique maximal vertex (unique source).
IntPolynomial m_upper(const RankedDigraph& g);

}  // namespace glg

#endif
