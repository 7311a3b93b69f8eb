#ifndef GLG_FREE_ALGEBRA_HPP
#define GLG_FREE_ALGEBRA_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <glg/graph.hpp>
#include <glg/numeric.hpp>
#include <glg/series.hpp>

namespace glg {

/// The generators a_i(e) of the free algebra on an edge set: one for each
/// edge e and index 1 <= i <= l(e). a_0(e) is the scalar 1 and is not
/// materialized. Ids are assigned in (edge stored order, index) order.
class GeneratorSet {
public:
    explicit GeneratorSet(const RankedDigraph& g);

    struct Info {
        int edge;                  // edge index in the graph
        int index;                 // i with 1 <= i <= l(e)
        int degree;                // graded degree = i
        long long filtered_degree; // f(rank(tail(e)), i)
        std::string label;         // "a{i}(edge-name)"
    };

    int count() const { return static_cast<int>(info_.size()); }
    const Info& info(int id) const { return info_[id]; }
    int id(int edge, int index) const;
    int degree(int id) const { return info_[id].degree; }
    int max_degree() const { return max_degree_; }
    /// Number of generators of each degree, index = degree.
    const std::vector<int>& degree_counts() const { return degree_counts_; }

private:
    std::vector<Info> info_;
    std::vector<int> edge_offset_;
    std::vector<int> degree_counts_;
    int max_degree_ = 0;
};

/// A word in the generators, by id; the empty word is the unit.
using Monomial = std::vector<int>;

int monomial_degree(const GeneratorSet& gs, const Monomial& m);
long long monomial_filtered_degree(const GeneratorSet& gs, const Monomial& m);
std::string monomial_label(const GeneratorSet& gs, const Monomial& m);

/// Noncommutative polynomial with exact rational coefficients; terms are
/// kept in lexicographic monomial order and zero coefficients are absent.
class FreePolynomial {
public:
    FreePolynomial() = default;

    static FreePolynomial unit();                 // the scalar 1
    static FreePolynomial generator(int id);
    static FreePolynomial term(Monomial m, Rat c);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rat>& terms() const { return terms_; }

    FreePolynomial operator+(const FreePolynomial& o) const;
    FreePolynomial operator-(const FreePolynomial& o) const;
    FreePolynomial operator*(const FreePolynomial& o) const;  // concatenation product
    FreePolynomial operator*(const Rat& c) const;
    FreePolynomial operator-() const;
    bool operator==(const FreePolynomial& o) const { return terms_ == o.terms_; }

    void add_term(const Monomial& m, const Rat& c);

    /// Degree when homogeneous, nullopt otherwise; the zero polynomial is
    /// homogeneous of every degree and reports 0.
    std::optional<int> homogeneous_degree(const GeneratorSet& gs) const;

    std::string str(const GeneratorSet& gs) const;

private:
    std::map<Monomial, Rat> terms_;
};

/// A directed path with the coefficient list of its path polynomial:
/// coeff[j] = e(path, j), the degree-j coefficient, with coeff[0] = 1.
/// The alternating sign (-1)^j of the printed polynomial is left implicit.
struct PathPoly {
    std::vector<int> edges;             // edge indices, tail to head
    std::vector<FreePolynomial> coeff;  // size length()+1

    int length() const { return static_cast<int>(coeff.size()) - 1; }
};

PathPoly edge_poly(const RankedDigraph& g, const GeneratorSet& gs, int edge);

/// Product of the edge polynomials along a path; validates that
/// consecutive edges share head/tail. An empty path yields [1].
PathPoly path_poly(const RankedDigraph& g, const GeneratorSet& gs,
                   const std::vector<int>& edges);

/// The canonical path from v to the unique sink: repeatedly take the
/// outgoing edge with the lexicographically least name. Requires a unique
/// minimal vertex of rank 0 and non-minimal v.
std::vector<int> canonical_path(const RankedDigraph& g, int v);

/// e(v,j): coefficient j of the canonical path polynomial of v;
/// requires 1 <= j <= rank(v).
FreePolynomial vertex_coeff(const RankedDigraph& g, const GeneratorSet& gs, int v, int j);

struct RelationGen {
    FreePolynomial poly;     // e(path, j) - e(ref_path, j)
    int degree = 0;          // = j
    int tail = -1;           // shared tail vertex
    int head = -1;           // shared head vertex
    std::vector<int> path;      // the non-reference path
    std::vector<int> ref_path;  // lexicographically least path for the pair
};

/// Generators of the relation ideal: for every ordered vertex pair with at
/// least two directed paths, differences of path-polynomial coefficients
/// against the lexicographically least path. With `truncation` k only
/// degrees j < k are emitted (the A(k, graph) variant). Throws BudgetError
/// when some pair has more than path_budget paths.
std::vector<RelationGen> relation_generators(const RankedDigraph& g, const GeneratorSet& gs,
                                             std::optional<int> truncation = std::nullopt,
                                             long long path_budget = 10000);

/// All directed paths from v to w as edge-index sequences, sorted
/// lexicographically by edge-name sequence.
std::vector<std::vector<int>> all_paths(const RankedDigraph& g, int v, int w,
                                        long long path_budget = 10000);

// --- basis words ------------------------------------------------------------

struct BasisLetter {
    int vertex = -1;  // non-minimal vertex index
    int k = 0;        // 1 <= k <= rank(vertex)
    bool operator==(const BasisLetter& o) const { return vertex == o.vertex && k == o.k; }
};

using BasisWord = std::vector<BasisLetter>;

/// Cover relation on letters: (v,k) covers (w,l) iff v > w in the path
/// order and k = rank(v) - rank(w). Words avoiding adjacent covers form
/// the basis B.
bool letter_covers(const RankedDigraph& g, const Reachability& reach, const BasisLetter& a,
                   const BasisLetter& b);

bool is_basis_word(const RankedDigraph& g, const Reachability& reach, const BasisWord& word);

/// Words of the basis grouped by graded degree 0..N, in dictionary order
/// on (vertex stored order, k) letters within each degree.
/// Requires a unique minimal vertex of rank 0.
std::vector<std::vector<BasisWord>> enumerate_basis(const RankedDigraph& g, int N);

/// Same counts via dynamic programming over (last letter, degree), without
/// materializing words.
std::vector<Int> count_basis(const RankedDigraph& g, int N);

/// epsilon: the product e(v_1,k_1)...e(v_r,k_r) of canonical vertex
/// coefficients; the empty word maps to 1.
FreePolynomial basis_word_to_free_poly(const RankedDigraph& g, const GeneratorSet& gs,
                                       const BasisWord& word);

// --- morphisms and induced generator maps ------------------------------------

/// A morphism of generalized layered graphs: vertex and edge maps with
/// t(phi(e)) = phi(t(e)), h(phi(e)) = phi(h(e)) and l(phi(e)) <= l(e).
struct GraphMorphism {
    RankedDigraph source;
    RankedDigraph target;
    std::map<std::string, std::string> vertex_map;
    std::map<std::string, std::string> edge_map;
};

void validate_morphism(const GraphMorphism& phi);  // throws on a law violation

GraphMorphism identity_morphism(const RankedDigraph& g);
GraphMorphism compose(const GraphMorphism& outer, const GraphMorphism& inner);

/// A substitution of source generators by polynomials over the target
/// generators, extended multiplicatively.
class GeneratorMap {
public:
    GeneratorMap(GeneratorSet source, GeneratorSet target, std::vector<FreePolynomial> images);

    const GeneratorSet& source() const { return source_; }
    const GeneratorSet& target() const { return target_; }
    const FreePolynomial& image(int source_gen) const { return images_[source_gen]; }
    FreePolynomial apply(const FreePolynomial& p) const;

private:
    GeneratorSet source_;
    GeneratorSet target_;
    std::vector<FreePolynomial> images_;
};

/// a_i(e) -> a_i(phi(e)), or 0 when i exceeds the image edge's length.
GeneratorMap induced_generator_map(const GraphMorphism& phi);

/// The add-vertex substitution: a_j(e) -> sum over valid k of
/// a_{j-k}(e1) a_k(e2) where e splits into e1 (tail side, length l(e)-i)
/// and e2 (head side, length i); other generators map to themselves.
/// `target` must be the graph produced by the add-vertex operation and
/// e1_name/e2_name its two fresh edges.
GeneratorMap add_vertex_generator_map(const RankedDigraph& g, const std::string& edge_name,
                                      int i, const RankedDigraph& target,
                                      const std::string& e1_name, const std::string& e2_name);

}  // namespace glg

#endif
