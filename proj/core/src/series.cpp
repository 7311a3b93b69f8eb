#include <glg/series.hpp>

#include <algorithm>
#include <sstream>

#include <glg/moebius.hpp>

namespace glg {

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::constant(Int c) {
    IntPolynomial p;
    p.coeffs_.push_back(std::move(c));
    p.trim();
    return p;
}

IntPolynomial IntPolynomial::monomial(Int c, int k) {
    IntPolynomial p;
    p.coeffs_.assign(k + 1, Int(0));
    p.coeffs_[k] = std::move(c);
    p.trim();
    return p;
}

Int IntPolynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[k];
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<Int> c(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<Int> c(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return IntPolynomial();
    std::vector<Int> c(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<Int> c = coeffs_;
    for (auto& x : c) x = -x;
    return IntPolynomial(std::move(c));
}

std::optional<IntPolynomial> IntPolynomial::divide_exact(const IntPolynomial& d) const {
    if (d.is_zero()) return std::nullopt;
    if (is_zero()) return IntPolynomial();
    if (degree() < d.degree()) return std::nullopt;
    std::vector<Int> rem = coeffs_;
    std::vector<Int> quot(degree() - d.degree() + 1, Int(0));
    const Int& lead = d.coeffs_.back();
    for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
        Int top = rem[k + d.degree()];
        if (top % lead != 0) return std::nullopt;
        Int q = top / lead;
        quot[k] = q;
        for (int j = 0; j <= d.degree(); ++j) rem[k + j] -= q * d.coeffs_[j];
    }
    for (const Int& r : rem) {
        if (r != 0) return std::nullopt;
    }
    return IntPolynomial(std::move(quot));
}

std::string IntPolynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        Int a = coeffs_[k];
        if (first) {
            if (a < 0) out << "-";
        } else {
            out << (a < 0 ? " - " : " + ");
        }
        Int mag = abs(a);
        if (k == 0) {
            out << mag.get_str();
        } else {
            if (mag != 1) out << mag.get_str() << "*";
            out << var;
            if (k > 1) out << "^" << k;
        }
        first = false;
    }
    return out.str();
}

long long filtration_degree(long long a, long long j) {
    if (j < 0) throw Error("filtration_degree: j must be >= 0");
    return j * a - j * (j - 1) / 2;
}

TruncatedSeries::TruncatedSeries(int order, std::vector<Int> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
    if (order_ < 0) throw Error("series order must be >= 0");
    coeffs_.resize(order_ + 1, Int(0));
}

TruncatedSeries TruncatedSeries::from_poly(const IntPolynomial& p, int order) {
    std::vector<Int> c = p.coeffs();
    c.resize(std::max<size_t>(c.size(), order + 1), Int(0));
    c.resize(order + 1);
    return TruncatedSeries(order, std::move(c));
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    int n = std::min(order_, o.order_);
    std::vector<Int> c(n + 1);
    for (int k = 0; k <= n; ++k) c[k] = coeffs_[k] + o.coeffs_[k];
    return TruncatedSeries(n, std::move(c));
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    int n = std::min(order_, o.order_);
    std::vector<Int> c(n + 1);
    for (int k = 0; k <= n; ++k) c[k] = coeffs_[k] - o.coeffs_[k];
    return TruncatedSeries(n, std::move(c));
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    int n = std::min(order_, o.order_);
    std::vector<Int> c(n + 1, Int(0));
    for (int i = 0; i <= n; ++i) {
        if (coeffs_[i] == 0) continue;
        for (int j = 0; i + j <= n; ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return TruncatedSeries(n, std::move(c));
}

TruncatedSeries TruncatedSeries::inverse() const {
    if (coeffs_[0] != 1 && coeffs_[0] != -1) {
        throw Error("series inverse requires constant term +1 or -1, got " +
                    coeffs_[0].get_str());
    }
    // b0 = 1/a0; b_n = -(sum_{k=1..n} a_k b_{n-k}) / a0, and a0 = +-1
    std::vector<Int> b(order_ + 1, Int(0));
    b[0] = coeffs_[0];  // 1/(+-1) = +-1
    for (int n = 1; n <= order_; ++n) {
        Int acc = 0;
        for (int k = 1; k <= n; ++k) acc += coeffs_[k] * b[n - k];
        b[n] = -acc * coeffs_[0];
    }
    return TruncatedSeries(order_, std::move(b));
}

TruncatedSeries expand(const RationalSeries& r, int order) {
    if (r.den.coeff(0) != 1) {
        throw Error("rational series denominator must have constant term 1");
    }
    return TruncatedSeries::from_poly(r.num, order) *
           TruncatedSeries::from_poly(r.den, order).inverse();
}

RationalSeries reduce_rational(const RationalSeries& r) {
    IntPolynomial one_minus_z{1, -1};
    RationalSeries out = r;
    while (true) {
        auto qn = out.num.divide_exact(one_minus_z);
        auto qd = out.den.divide_exact(one_minus_z);
        if (qn && qd) {
            out.num = *qn;
            out.den = *qd;
        } else {
            break;
        }
    }
    return out;
}

HilbertResult hilbert_series(const RankedDigraph& g, int order) {
    SinkReport rep = sink_report(g);
    if (!rep.unique) {
        unique_minimal_vertex(g);  // throws with the sink list
    }
    if (!rep.unique_rank0) {
        throw Error("hilbert_series: minimal vertex '" + g.vertex_name(rep.sinks[0]) +
                    "' has rank " + std::to_string(g.rank(rep.sinks[0])) + ", expected 0");
    }
    IntPolynomial m = m_series(g);
    RationalSeries form;
    form.num = IntPolynomial{1, -1};
    form.den = IntPolynomial{1} - IntPolynomial::monomial(1, 1) * m;
    return HilbertResult{form, expand(form, order)};
}

bool is_rooted_tree(const RankedDigraph& g) {
    SinkReport rep = sink_report(g);
    if (!rep.unique) return false;
    // undirected acyclicity: connected components satisfy |E| = |V| - #components;
    // with a unique sink the graph must be one component with |E| = |V| - 1
    // and no undirected cycle. Union-find over undirected edges.
    std::vector<int> parent(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int e = 0; e < g.edge_count(); ++e) {
        int a = find(g.edge(e).tail);
        int b = find(g.edge(e).head);
        if (a == b) return false;  // undirected cycle (includes multi-edges)
        parent[a] = b;
    }
    return g.edge_count() == g.vertex_count() - 1;
}

RationalSeries hilbert_tree(const RankedDigraph& g) {
    if (!is_rooted_tree(g)) throw Error("hilbert_tree: graph is not a rooted tree");
    int max_len = 0;
    for (int e = 0; e < g.edge_count(); ++e) max_len = std::max(max_len, g.edge_length(e));
    std::vector<Int> den(max_len + 1, Int(0));
    den[0] = 1;
    for (int j = 1; j <= max_len; ++j) {
        Int mj = 0;  // edges of length >= j
        for (int e = 0; e < g.edge_count(); ++e) {
            if (g.edge_length(e) >= j) ++mj;
        }
        den[j] = -mj;
    }
    return RationalSeries{IntPolynomial{1}, IntPolynomial(std::move(den))};
}

}  // namespace glg
