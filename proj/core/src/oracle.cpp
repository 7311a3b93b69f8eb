#include <glg/oracle.hpp>

#include <algorithm>

namespace glg {

// --- RationalMatrix -----------------------------------------------------------

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, Rat(0)) {}

int RationalMatrix::exact_rank() const {
    RationalMatrix m = *this;
    int rank = 0;
    for (int col = 0; col < cols_ && rank < rows_; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows_; ++r) {
            if (m.at(r, col) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != rank) {
            for (int c = col; c < cols_; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
        }
        for (int r = rank + 1; r < rows_; ++r) {
            if (m.at(r, col) == 0) continue;
            Rat factor = m.at(r, col) / m.at(rank, col);
            for (int c = col; c < cols_; ++c) m.at(r, c) -= factor * m.at(rank, c);
        }
        ++rank;
    }
    return rank;
}

// --- RowEliminator -----------------------------------------------------------

namespace {

void normalize_content(RowEliminator::SparseRow& row) {
    if (row.empty()) return;
    Int g = 0;
    for (const auto& [c, v] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    if (row[0].second < 0) g = -g;
    if (g != 1 && g != 0) {
        for (auto& [c, v] : row) v /= g;
    }
}

/// row*a - pivot*b, both sorted by column.
RowEliminator::SparseRow combine(const RowEliminator::SparseRow& row, const Int& a,
                                 const RowEliminator::SparseRow& pivot, const Int& b) {
    RowEliminator::SparseRow out;
    out.reserve(row.size() + pivot.size());
    size_t i = 0, j = 0;
    while (i < row.size() || j < pivot.size()) {
        if (j >= pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
            out.emplace_back(row[i].first, row[i].second * a);
            ++i;
        } else if (i >= row.size() || pivot[j].first < row[i].first) {
            out.emplace_back(pivot[j].first, -pivot[j].second * b);
            ++j;
        } else {
            Int v = row[i].second * a - pivot[j].second * b;
            if (v != 0) out.emplace_back(row[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

RowEliminator::SparseRow RowEliminator::reduce(SparseRow row) const {
    while (!row.empty()) {
        auto it = pivots_.find(row[0].first);
        if (it == pivots_.end()) break;
        row = combine(row, it->second[0].second, it->second, row[0].second);
        normalize_content(row);
    }
    return row;
}

bool RowEliminator::add_row(SparseRow row) {
    normalize_content(row);
    row = reduce(std::move(row));
    if (row.empty()) return false;
    int lead = row[0].first;
    pivots_.emplace(lead, std::move(row));
    return true;
}

bool RowEliminator::in_span(SparseRow row) const {
    normalize_content(row);
    return reduce(std::move(row)).empty();
}

// --- OracleContext -----------------------------------------------------------

OracleContext::OracleContext(const RankedDigraph& g, int max_degree, const OracleConfig& cfg)
    : graph_(g), gens_(g), cfg_(cfg), max_degree_(max_degree) {
    relations_ = relation_generators(graph_, gens_, cfg.truncate_relations, cfg.path_budget);
    // monomial counts per degree: t_n = sum_d g_d t_{n-d}
    counts_.assign(max_degree_ + 1, 0);
    counts_[0] = 1;
    const std::vector<int>& by_degree = gens_.degree_counts();
    for (int n = 1; n <= max_degree_; ++n) {
        for (int d = 1; d < static_cast<int>(by_degree.size()) && d <= n; ++d) {
            counts_[n] += by_degree[d] * counts_[n - d];
        }
    }
    monomials_.resize(max_degree_ + 1);
    index_.resize(max_degree_ + 1);
}

Int OracleContext::monomial_count(int degree) const { return counts_[degree]; }

const std::vector<Monomial>& OracleContext::monomials(int degree) const {
    if (monomials_[degree]) return *monomials_[degree];
    if (counts_[degree] > cfg_.max_monomials_per_degree) {
        throw BudgetError("monomial budget exceeded at degree " + std::to_string(degree) +
                              ": " + counts_[degree].get_str() + " monomials (budget " +
                              std::to_string(cfg_.max_monomials_per_degree) + ")",
                          degree);
    }
    std::vector<Monomial> list;
    Monomial word;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            list.push_back(word);
            return;
        }
        for (int id = 0; id < gens_.count(); ++id) {
            if (gens_.degree(id) > remaining) continue;
            word.push_back(id);
            self(self, remaining - gens_.degree(id));
            word.pop_back();
        }
    };
    rec(rec, degree);
    auto& index = index_[degree];
    for (size_t i = 0; i < list.size(); ++i) index.emplace(list[i], static_cast<int>(i));
    monomials_[degree] = std::move(list);
    return *monomials_[degree];
}

int OracleContext::monomial_index(int degree, const Monomial& m) const {
    monomials(degree);
    return index_[degree].at(m);
}

RowEliminator::SparseRow OracleContext::row_of(int degree, const FreePolynomial& p) const {
    monomials(degree);
    // common denominator so entries are integers
    Int denom = 1;
    for (const auto& [m, c] : p.terms()) {
        mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), c.get_den().get_mpz_t());
    }
    RowEliminator::SparseRow row;
    row.reserve(p.terms().size());
    for (const auto& [m, c] : p.terms()) {
        if (monomial_degree(gens_, m) != degree) {
            throw Error("row_of: polynomial is not homogeneous of degree " +
                        std::to_string(degree));
        }
        Rat scaled = c * denom;
        row.emplace_back(index_[degree].at(m), Int(scaled.get_num()));
    }
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return row;
}

void OracleContext::feed_ideal_rows(RowEliminator& elim, int degree, bool proper_only) const {
    long long fed = 0;
    for (const RelationGen& rel : relations_) {
        if (rel.degree > degree) continue;
        RowEliminator::SparseRow base = row_of(rel.degree, rel.poly);
        // base is in the degree-rel.degree monomial basis; rebuild per (m1, m2)
        for (int p = 0; p + rel.degree <= degree; ++p) {
            int q = degree - rel.degree - p;
            if (proper_only && p == 0 && q == 0) continue;
            const std::vector<Monomial>& left = monomials(p);
            const std::vector<Monomial>& right = monomials(q);
            for (const Monomial& m1 : left) {
                for (const Monomial& m2 : right) {
                    if (elim.full()) return;
                    if (++fed > cfg_.max_rows) {
                        throw BudgetError("row budget exceeded at degree " +
                                              std::to_string(degree) + " (budget " +
                                              std::to_string(cfg_.max_rows) + ")",
                                          degree);
                    }
                    RowEliminator::SparseRow row;
                    row.reserve(rel.poly.terms().size());
                    for (const auto& [mono, c] : rel.poly.terms()) {
                        Monomial prod = m1;
                        prod.insert(prod.end(), mono.begin(), mono.end());
                        prod.insert(prod.end(), m2.begin(), m2.end());
                        row.emplace_back(monomial_index(degree, prod), Int(c.get_num()));
                    }
                    std::sort(row.begin(), row.end(),
                              [](const auto& a, const auto& b) { return a.first < b.first; });
                    elim.add_row(std::move(row));
                }
            }
        }
    }
}

RowEliminator OracleContext::ideal_span(int degree) const {
    RowEliminator elim(static_cast<long long>(monomials(degree).size()));
    feed_ideal_rows(elim, degree, false);
    return elim;
}

RowEliminator OracleContext::proper_ideal_span(int degree) const {
    RowEliminator elim(static_cast<long long>(monomials(degree).size()));
    feed_ideal_rows(elim, degree, true);
    return elim;
}

// --- oracle operations -----------------------------------------------------------

std::vector<Int> graded_dimensions(const RankedDigraph& g, int N, const OracleConfig& cfg) {
    OracleContext ctx(g, N, cfg);
    std::vector<Int> dims;
    dims.reserve(N + 1);
    for (int n = 0; n <= N; ++n) {
        RowEliminator elim = ctx.ideal_span(n);
        dims.push_back(Int(static_cast<long>(ctx.monomials(n).size())) - elim.rank());
    }
    return dims;
}

std::vector<Int> minimal_relation_series(const RankedDigraph& g, int N,
                                         const OracleConfig& cfg) {
    OracleContext ctx(g, N, cfg);
    std::vector<Int> out;
    out.reserve(N + 1);
    for (int n = 0; n <= N; ++n) {
        // rank of the decomposable part first, then the full component
        RowEliminator elim = ctx.proper_ideal_span(n);
        long long proper = elim.rank();
        for (const RelationGen& rel : ctx.relations()) {
            if (rel.degree != n) continue;
            elim.add_row(ctx.row_of(n, rel.poly));
        }
        out.push_back(Int(static_cast<long>(elim.rank() - proper)));
    }
    return out;
}

NciReport nci_check(const RankedDigraph& g, int N, const OracleConfig& cfg) {
    NciReport rep;
    rep.order = N;
    HilbertResult h = hilbert_series(g, N);
    // generator series g(z) = sum over edges of z + z^2 + ... + z^{l(e)}
    std::vector<Int> gc(static_cast<size_t>(std::max(0, N)) + 1, Int(0));
    for (int e = 0; e < g.edge_count(); ++e) {
        for (int i = 1; i <= g.edge_length(e); ++i) {
            if (i < static_cast<int>(gc.size())) {
                gc[i] += 1;
            } else {
                gc.resize(i + 1, Int(0));
                gc[i] += 1;
            }
        }
    }
    rep.generator_series = IntPolynomial(gc);
    rep.relation_series = minimal_relation_series(g, N, cfg);

    std::vector<Int> gr(N + 1, Int(0));
    gr[0] = 1;
    for (int i = 1; i <= N; ++i) {
        gr[i] = rep.relation_series[i] - (i < static_cast<int>(gc.size()) ? gc[i] : Int(0));
    }
    rep.one_minus_g_plus_r = IntPolynomial(gr);

    TruncatedSeries product = h.expansion * TruncatedSeries(N, gr);
    rep.is_nci = true;
    for (int n = 0; n <= N; ++n) {
        if (product.coeff(n) != (n == 0 ? 1 : 0)) {
            rep.is_nci = false;
            rep.witness = n;
            break;
        }
    }
    return rep;
}

IndependenceReport independence_check(const RankedDigraph& g, int N, const OracleConfig& cfg) {
    OracleContext ctx(g, N, cfg);
    std::vector<std::vector<BasisWord>> words = enumerate_basis(g, N);
    IndependenceReport rep;
    rep.all = true;
    for (int n = 0; n <= N; ++n) {
        RowEliminator elim = ctx.ideal_span(n);
        Int dim = Int(static_cast<long>(ctx.monomials(n).size())) - elim.rank();
        IndependenceDegree d;
        d.degree = n;
        d.words = static_cast<long long>(words[n].size());
        d.dim = dim;
        d.independent = true;
        for (const BasisWord& w : words[n]) {
            FreePolynomial image = basis_word_to_free_poly(g, ctx.generators(), w);
            if (!elim.add_row(ctx.row_of(n, image))) {
                d.independent = false;
                break;
            }
        }
        d.counts_match = dim == d.words;
        rep.all = rep.all && d.independent && d.counts_match;
        rep.degrees.push_back(std::move(d));
    }
    return rep;
}

}  // namespace glg
