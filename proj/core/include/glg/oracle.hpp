#ifndef GLG_ORACLE_HPP
#define GLG_ORACLE_HPP

#include <map>
#include <optional>
#include <vector>

#include <glg/free_algebra.hpp>
#include <glg/graph.hpp>
#include <glg/numeric.hpp>
#include <glg/series.hpp>

namespace glg {

struct OracleConfig {
    long long max_monomials_per_degree = 200000;
    long long max_rows = 500000;
    long long path_budget = 10000;
    std::optional<int> truncate_relations;  // the A(k, graph) variant
};

/// Dense matrix of exact rationals with pivoted exact elimination.
class RationalMatrix {
public:
    RationalMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const Rat& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    int exact_rank() const;

private:
    int rows_;
    int cols_;
    std::vector<Rat> data_;
};

/// Streaming row-echelon eliminator over sparse integer rows; rows are
/// appended one at a time and reduced fraction-free against the pivots
/// collected so far. Exact over the rationals: scaling never changes rank.
class RowEliminator {
public:
    explicit RowEliminator(long long cols) : cols_(cols) {}

    using SparseRow = std::vector<std::pair<int, Int>>;  // (column, coeff), sorted

    /// Reduces and, if nonzero, keeps the row. Returns true when the rank grew.
    bool add_row(SparseRow row);
    /// True when the row reduces to zero against the current pivots.
    bool in_span(SparseRow row) const;

    long long rank() const { return static_cast<long long>(pivots_.size()); }
    long long cols() const { return cols_; }
    bool full() const { return rank() == cols_; }

private:
    SparseRow reduce(SparseRow row) const;
    long long cols_;
    std::map<int, SparseRow> pivots_;  // leading column -> normalized row
};

/// Per-degree monomial bases of the free algebra on a graph's generators,
/// the relation generators, and the machinery to span ideal components.
/// Shared by every oracle operation so enumeration happens once.
class OracleContext {
public:
    OracleContext(const RankedDigraph& g, int max_degree, const OracleConfig& cfg = {});

    const RankedDigraph& graph() const { return graph_; }
    const GeneratorSet& generators() const { return gens_; }
    const std::vector<RelationGen>& relations() const { return relations_; }
    int max_degree() const { return max_degree_; }

    /// Monomials of the given degree in enumeration order; throws
    /// BudgetError when the count exceeds the configured budget.
    const std::vector<Monomial>& monomials(int degree) const;
    Int monomial_count(int degree) const;
    int monomial_index(int degree, const Monomial& m) const;

    /// Sparse row of a homogeneous polynomial in the degree-d monomial
    /// basis, scaled to integer entries.
    RowEliminator::SparseRow row_of(int degree, const FreePolynomial& p) const;

    /// Eliminator loaded with the degree-d component of the two-sided
    /// ideal: rows m1 * r * m2 over all relation generators and monomial
    /// pairs of matching degree.
    RowEliminator ideal_span(int degree) const;
    /// Rows of ideal elements with deg m1 + deg m2 >= 1 only (the
    /// decomposable part T+ R + R T+).
    RowEliminator proper_ideal_span(int degree) const;

private:
    void feed_ideal_rows(RowEliminator& elim, int degree, bool proper_only) const;

    RankedDigraph graph_;
    GeneratorSet gens_;
    OracleConfig cfg_;
    int max_degree_;
    std::vector<RelationGen> relations_;
    mutable std::vector<std::optional<std::vector<Monomial>>> monomials_;
    mutable std::vector<std::map<Monomial, int>> index_;
    std::vector<Int> counts_;
};

/// dim A_[n] for n = 0..N: monomial count at degree n minus the rank of
/// the ideal span at degree n.
std::vector<Int> graded_dimensions(const RankedDigraph& g, int N, const OracleConfig& cfg = {});

/// Minimal number of degree-n relations: dim R_[n] - dim(T+ R + R T+)_[n].
std::vector<Int> minimal_relation_series(const RankedDigraph& g, int N,
                                         const OracleConfig& cfg = {});

struct NciReport {
    bool is_nci = false;
    int order = 0;
    IntPolynomial generator_series;        // sum over edges of z + ... + z^{l(e)}
    std::vector<Int> relation_series;      // minimal relation counts to order
    IntPolynomial one_minus_g_plus_r;      // 1 - g(z) + r(z), trailing zeros trimmed
    std::optional<int> witness;            // first degree where h * (1-g+r) != 1
};

/// Golod noncommutative-complete-intersection test at the given order:
/// true iff the Hilbert expansion times (1 - g + r) is 1 to order N.
NciReport nci_check(const RankedDigraph& g, int N, const OracleConfig& cfg = {});

struct IndependenceDegree {
    int degree = 0;
    long long words = 0;       // basis words of this degree
    Int dim = 0;               // graded dimension from the oracle
    bool independent = false;  // images linearly independent mod the ideal
    bool counts_match = false; // words == dim
};

struct IndependenceReport {
    bool all = false;
    std::vector<IndependenceDegree> degrees;
};

/// Checks that the images of the degree-n basis words are linearly
/// independent modulo the ideal and match the graded dimension, for every
/// n <= N. Independence plus matching counts certifies basis-ness.
IndependenceReport independence_check(const RankedDigraph& g, int N,
                                      const OracleConfig& cfg = {});

}  // namespace glg

#endif
