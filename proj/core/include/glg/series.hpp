#ifndef GLG_SERIES_HPP
#define GLG_SERIES_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include <glg/graph.hpp>
#include <glg/numeric.hpp>

namespace glg {

/// Dense exact-integer polynomial; index = degree, no trailing zeros.
class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<long> coeffs);
    explicit IntPolynomial(std::vector<Int> coeffs);

    static IntPolynomial zero() { return IntPolynomial(); }
    static IntPolynomial constant(Int c);
    /// c * z^k
    static IntPolynomial monomial(Int c, int k);

    const std::vector<Int>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    Int coeff(int k) const;

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator-() const;
    bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }

    /// Quotient if `this` is exactly divisible by d; nullopt otherwise.
    std::optional<IntPolynomial> divide_exact(const IntPolynomial& d) const;

    std::string str(const std::string& var = "z") const;

private:
    void trim();
    std::vector<Int> coeffs_;
};

/// f(a,j) = j*a - j*(j-1)/2: the filtered degree of the j-th generator on
/// an edge whose tail has rank a.
long long filtration_degree(long long a, long long j);

/// Power series known exactly up to and including degree `order`.
class TruncatedSeries {
public:
    TruncatedSeries(int order, std::vector<Int> coeffs);
    static TruncatedSeries from_poly(const IntPolynomial& p, int order);

    int order() const { return order_; }
    const std::vector<Int>& coeffs() const { return coeffs_; }  // size order+1
    const Int& coeff(int k) const { return coeffs_[k]; }

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    /// Cauchy product truncated at the common order.
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    bool operator==(const TruncatedSeries& o) const {
        return order_ == o.order_ && coeffs_ == o.coeffs_;
    }

    /// Multiplicative inverse; requires the constant term to be +1 or -1.
    TruncatedSeries inverse() const;

private:
    int order_;
    std::vector<Int> coeffs_;
};

/// num/den with den(0) = 1; the closed-form counterpart of a series.
struct RationalSeries {
    IntPolynomial num;
    IntPolynomial den;
};

/// Long division of num by den to the given order.
TruncatedSeries expand(const RationalSeries& r, int order);

/// Cancels common factors of (1 - z) only; other common factors are kept
/// so the unreduced theorem-shaped forms stay recognizable.
RationalSeries reduce_rational(const RationalSeries& r);

struct HilbertResult {
    RationalSeries form;        // (1 - z) / (1 - z*M(graph))
    TruncatedSeries expansion;  // its expansion to the requested order
};

/// Hilbert series of the graph algebra. Requires a unique minimal vertex
/// of rank 0.
HilbertResult hilbert_series(const RankedDigraph& g, int order);

/// Closed form 1 / (1 - sum_j m_j z^j) for rooted trees, where m_j counts
/// the edges of length >= j. Errors when the graph is not a rooted tree
/// (undirected cycle or no unique sink).
RationalSeries hilbert_tree(const RankedDigraph& g);

/// True when the underlying undirected graph is acyclic and there is a
/// unique sink.
bool is_rooted_tree(const RankedDigraph& g);

}  // namespace glg

#endif
