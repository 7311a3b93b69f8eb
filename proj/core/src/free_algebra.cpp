#include <glg/free_algebra.hpp>

#include <algorithm>
#include <sstream>

namespace glg {

// --- GeneratorSet ------------------------------------------------------------

GeneratorSet::GeneratorSet(const RankedDigraph& g) {
    edge_offset_.resize(g.edge_count(), -1);
    for (int e = 0; e < g.edge_count(); ++e) {
        edge_offset_[e] = count();
        int len = g.edge_length(e);
        int tail_rank = g.rank(g.edge(e).tail);
        for (int i = 1; i <= len; ++i) {
            info_.push_back(Info{e, i, i, filtration_degree(tail_rank, i),
                                 "a" + std::to_string(i) + "(" + g.edge(e).name + ")"});
            max_degree_ = std::max(max_degree_, i);
        }
    }
    degree_counts_.assign(max_degree_ + 1, 0);
    for (const Info& inf : info_) ++degree_counts_[inf.degree];
}

int GeneratorSet::id(int edge, int index) const {
    return edge_offset_[edge] + index - 1;
}

int monomial_degree(const GeneratorSet& gs, const Monomial& m) {
    int d = 0;
    for (int id : m) d += gs.degree(id);
    return d;
}

long long monomial_filtered_degree(const GeneratorSet& gs, const Monomial& m) {
    long long d = 0;
    for (int id : m) d += gs.info(id).filtered_degree;
    return d;
}

std::string monomial_label(const GeneratorSet& gs, const Monomial& m) {
    if (m.empty()) return "1";
    std::string out;
    for (size_t i = 0; i < m.size(); ++i) {
        if (i) out += " ";
        out += gs.info(m[i]).label;
    }
    return out;
}

// --- FreePolynomial -----------------------------------------------------------

FreePolynomial FreePolynomial::unit() { return term(Monomial{}, Rat(1)); }

FreePolynomial FreePolynomial::generator(int id) { return term(Monomial{id}, Rat(1)); }

FreePolynomial FreePolynomial::term(Monomial m, Rat c) {
    FreePolynomial p;
    if (c != 0) p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

void FreePolynomial::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

FreePolynomial FreePolynomial::operator+(const FreePolynomial& o) const {
    FreePolynomial out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

FreePolynomial FreePolynomial::operator-(const FreePolynomial& o) const {
    FreePolynomial out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

FreePolynomial FreePolynomial::operator*(const FreePolynomial& o) const {
    FreePolynomial out;
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : o.terms_) {
            Monomial m = m1;
            m.insert(m.end(), m2.begin(), m2.end());
            out.add_term(m, c1 * c2);
        }
    }
    return out;
}

FreePolynomial FreePolynomial::operator*(const Rat& c) const {
    FreePolynomial out;
    if (c == 0) return out;
    for (const auto& [m, x] : terms_) out.terms_.emplace(m, x * c);
    return out;
}

FreePolynomial FreePolynomial::operator-() const { return *this * Rat(-1); }

std::optional<int> FreePolynomial::homogeneous_degree(const GeneratorSet& gs) const {
    int deg = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        int d = monomial_degree(gs, m);
        if (first) {
            deg = d;
            first = false;
        } else if (d != deg) {
            return std::nullopt;
        }
    }
    return deg;
}

std::string FreePolynomial::str(const GeneratorSet& gs) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat mag = abs(c);
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (m.empty()) {
            out << mag.get_str();
        } else {
            if (mag != 1) out << mag.get_str() << " ";
            out << monomial_label(gs, m);
        }
        first = false;
    }
    return out.str();
}

// --- path polynomials -----------------------------------------------------------

PathPoly edge_poly(const RankedDigraph& g, const GeneratorSet& gs, int edge) {
    PathPoly p;
    p.edges = {edge};
    p.coeff.push_back(FreePolynomial::unit());
    for (int i = 1; i <= g.edge_length(edge); ++i) {
        p.coeff.push_back(FreePolynomial::generator(gs.id(edge, i)));
    }
    return p;
}

PathPoly path_poly(const RankedDigraph& g, const GeneratorSet& gs,
                   const std::vector<int>& edges) {
    PathPoly p;
    p.edges = edges;
    p.coeff = {FreePolynomial::unit()};
    for (size_t i = 0; i < edges.size(); ++i) {
        if (i > 0 && g.edge(edges[i - 1]).head != g.edge(edges[i]).tail) {
            throw Error("broken path: edge '" + g.edge(edges[i - 1]).name +
                        "' does not meet edge '" + g.edge(edges[i]).name + "'");
        }
        PathPoly q = edge_poly(g, gs, edges[i]);
        std::vector<FreePolynomial> conv(p.coeff.size() + q.coeff.size() - 1);
        for (size_t a = 0; a < p.coeff.size(); ++a) {
            for (size_t b = 0; b < q.coeff.size(); ++b) {
                conv[a + b] = conv[a + b] + p.coeff[a] * q.coeff[b];
            }
        }
        p.coeff = std::move(conv);
    }
    return p;
}

std::vector<int> canonical_path(const RankedDigraph& g, int v) {
    SinkReport rep = sink_report(g);
    if (!rep.unique_rank0) {
        throw Error("canonical_path requires a unique minimal vertex of rank 0");
    }
    if (v == rep.sinks[0]) {
        throw Error("canonical_path: vertex '" + g.vertex_name(v) + "' is minimal");
    }
    std::vector<int> path;
    int cur = v;
    while (!g.out_edges(cur).empty()) {
        int best = -1;
        for (int e : g.out_edges(cur)) {
            if (best < 0 || g.edge(e).name < g.edge(best).name) best = e;
        }
        path.push_back(best);
        cur = g.edge(best).head;
    }
    return path;
}

FreePolynomial vertex_coeff(const RankedDigraph& g, const GeneratorSet& gs, int v, int j) {
    if (j < 1 || j > g.rank(v)) {
        throw Error("vertex_coeff: index " + std::to_string(j) + " outside 1..rank(" +
                    g.vertex_name(v) + ") = " + std::to_string(g.rank(v)));
    }
    return path_poly(g, gs, canonical_path(g, v)).coeff[j];
}

// --- relation generators -----------------------------------------------------------

std::vector<std::vector<int>> all_paths(const RankedDigraph& g, int v, int w,
                                        long long path_budget) {
    Reachability reach(g);
    if (reach.path_count(v, w) > path_budget) {
        throw BudgetError("path budget exceeded: " + reach.path_count(v, w).get_str() +
                              " paths from '" + g.vertex_name(v) + "' to '" +
                              g.vertex_name(w) + "' (budget " + std::to_string(path_budget) +
                              ")",
                          0);
    }
    std::vector<std::vector<int>> out;
    std::vector<int> stack;
    auto dfs = [&](auto&& self, int cur) -> void {
        if (cur == w) {
            out.push_back(stack);
            return;
        }
        for (int e : g.out_edges(cur)) {
            if (!reach.geq(g.edge(e).head, w)) continue;
            stack.push_back(e);
            self(self, g.edge(e).head);
            stack.pop_back();
        }
    };
    if (v != w) dfs(dfs, v);
    auto name_seq = [&](const std::vector<int>& path) {
        std::vector<std::string> names;
        names.reserve(path.size());
        for (int e : path) names.push_back(g.edge(e).name);
        return names;
    };
    std::sort(out.begin(), out.end(), [&](const std::vector<int>& a, const std::vector<int>& b) {
        return name_seq(a) < name_seq(b);
    });
    return out;
}

std::vector<RelationGen> relation_generators(const RankedDigraph& g, const GeneratorSet& gs,
                                             std::optional<int> truncation,
                                             long long path_budget) {
    std::vector<RelationGen> out;
    Reachability reach(g);
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (int w = 0; w < g.vertex_count(); ++w) {
            if (v == w || reach.path_count(v, w) < 2) continue;
            std::vector<std::vector<int>> paths = all_paths(g, v, w, path_budget);
            PathPoly ref = path_poly(g, gs, paths[0]);
            for (size_t p = 1; p < paths.size(); ++p) {
                PathPoly other = path_poly(g, gs, paths[p]);
                int l = other.length();
                int top = truncation ? std::min(l, *truncation - 1) : l;
                for (int j = 1; j <= top; ++j) {
                    FreePolynomial rel = other.coeff[j] - ref.coeff[j];
                    if (rel.is_zero()) continue;
                    out.push_back(RelationGen{std::move(rel), j, v, w, paths[p], paths[0]});
                }
            }
        }
    }
    return out;
}

// --- basis words -----------------------------------------------------------

bool letter_covers(const RankedDigraph& g, const Reachability& reach, const BasisLetter& a,
                   const BasisLetter& b) {
    return reach.reaches(a.vertex, b.vertex) && a.k == g.rank(a.vertex) - g.rank(b.vertex);
}

bool is_basis_word(const RankedDigraph& g, const Reachability& reach, const BasisWord& word) {
    for (const BasisLetter& l : word) {
        if (l.vertex < 0 || l.vertex >= g.vertex_count()) return false;
        if (g.out_edges(l.vertex).empty()) return false;  // minimal vertices carry no letters
        if (l.k < 1 || l.k > g.rank(l.vertex)) return false;
    }
    for (size_t i = 0; i + 1 < word.size(); ++i) {
        if (letter_covers(g, reach, word[i], word[i + 1])) return false;
    }
    return true;
}

namespace {

std::vector<BasisLetter> basis_letters(const RankedDigraph& g) {
    SinkReport rep = sink_report(g);
    if (!rep.unique_rank0) {
        throw Error("basis enumeration requires a unique minimal vertex of rank 0");
    }
    std::vector<BasisLetter> letters;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.out_edges(v).empty()) continue;
        for (int k = 1; k <= g.rank(v); ++k) letters.push_back(BasisLetter{v, k});
    }
    return letters;
}

}  // namespace

std::vector<std::vector<BasisWord>> enumerate_basis(const RankedDigraph& g, int N) {
    std::vector<BasisLetter> letters = basis_letters(g);
    Reachability reach(g);
    std::vector<std::vector<BasisWord>> out(N + 1);
    out[0].push_back(BasisWord{});
    BasisWord word;
    auto rec = [&](auto&& self, int degree) -> void {
        for (const BasisLetter& l : letters) {
            if (degree + l.k > N) continue;
            if (!word.empty() && letter_covers(g, reach, word.back(), l)) continue;
            word.push_back(l);
            out[degree + l.k].push_back(word);
            self(self, degree + l.k);
            word.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<Int> count_basis(const RankedDigraph& g, int N) {
    std::vector<BasisLetter> letters = basis_letters(g);
    Reachability reach(g);
    const int L = static_cast<int>(letters.size());
    // allowed[a][b]: letter b may follow letter a
    std::vector<std::vector<bool>> allowed(L, std::vector<bool>(L));
    for (int a = 0; a < L; ++a) {
        for (int b = 0; b < L; ++b) {
            allowed[a][b] = !letter_covers(g, reach, letters[a], letters[b]);
        }
    }
    std::vector<std::vector<Int>> ending(N + 1, std::vector<Int>(L, 0));
    std::vector<Int> total(N + 1, 0);
    total[0] = 1;
    for (int d = 1; d <= N; ++d) {
        for (int b = 0; b < L; ++b) {
            int prev = d - letters[b].k;
            if (prev < 0) continue;
            Int acc = prev == 0 ? Int(1) : Int(0);
            if (prev > 0) {
                for (int a = 0; a < L; ++a) {
                    if (allowed[a][b]) acc += ending[prev][a];
                }
            }
            ending[d][b] = acc;
            total[d] += acc;
        }
    }
    return total;
}

FreePolynomial basis_word_to_free_poly(const RankedDigraph& g, const GeneratorSet& gs,
                                       const BasisWord& word) {
    FreePolynomial out = FreePolynomial::unit();
    for (const BasisLetter& l : word) {
        out = out * vertex_coeff(g, gs, l.vertex, l.k);
    }
    return out;
}

// --- morphisms -----------------------------------------------------------

void validate_morphism(const GraphMorphism& phi) {
    const RankedDigraph& s = phi.source;
    const RankedDigraph& t = phi.target;
    for (int v = 0; v < s.vertex_count(); ++v) {
        auto it = phi.vertex_map.find(s.vertex_name(v));
        if (it == phi.vertex_map.end()) {
            throw Error("morphism: vertex '" + s.vertex_name(v) + "' has no image");
        }
        if (!t.find_vertex(it->second)) {
            throw Error("morphism: image vertex '" + it->second + "' is not in the target");
        }
    }
    for (int e = 0; e < s.edge_count(); ++e) {
        const EdgeRec& rec = s.edge(e);
        auto it = phi.edge_map.find(rec.name);
        if (it == phi.edge_map.end()) {
            throw Error("morphism: edge '" + rec.name + "' has no image");
        }
        auto te = t.find_edge(it->second);
        if (!te) {
            throw Error("morphism: image edge '" + it->second + "' is not in the target");
        }
        const EdgeRec& trec = t.edge(*te);
        if (t.vertex_name(trec.tail) != phi.vertex_map.at(s.vertex_name(rec.tail))) {
            throw Error("morphism: tail of edge '" + rec.name + "' is not preserved");
        }
        if (t.vertex_name(trec.head) != phi.vertex_map.at(s.vertex_name(rec.head))) {
            throw Error("morphism: head of edge '" + rec.name + "' is not preserved");
        }
        if (t.edge_length(*te) > s.edge_length(e)) {
            throw Error("morphism: edge '" + rec.name + "' maps to the longer edge '" +
                        it->second + "'");
        }
    }
}

GraphMorphism identity_morphism(const RankedDigraph& g) {
    GraphMorphism phi{g, g, {}, {}};
    for (int v = 0; v < g.vertex_count(); ++v) {
        phi.vertex_map[g.vertex_name(v)] = g.vertex_name(v);
    }
    for (int e = 0; e < g.edge_count(); ++e) phi.edge_map[g.edge(e).name] = g.edge(e).name;
    return phi;
}

GraphMorphism compose(const GraphMorphism& outer, const GraphMorphism& inner) {
    GraphMorphism out{inner.source, outer.target, {}, {}};
    for (const auto& [v, mid] : inner.vertex_map) out.vertex_map[v] = outer.vertex_map.at(mid);
    for (const auto& [e, mid] : inner.edge_map) out.edge_map[e] = outer.edge_map.at(mid);
    return out;
}

GeneratorMap::GeneratorMap(GeneratorSet source, GeneratorSet target,
                           std::vector<FreePolynomial> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {}

FreePolynomial GeneratorMap::apply(const FreePolynomial& p) const {
    FreePolynomial out;
    for (const auto& [m, c] : p.terms()) {
        FreePolynomial prod = FreePolynomial::term(Monomial{}, c);
        for (int id : m) prod = prod * images_[id];
        out = out + prod;
    }
    return out;
}

GeneratorMap induced_generator_map(const GraphMorphism& phi) {
    validate_morphism(phi);
    GeneratorSet src(phi.source);
    GeneratorSet dst(phi.target);
    std::vector<FreePolynomial> images(src.count());
    for (int id = 0; id < src.count(); ++id) {
        const GeneratorSet::Info& inf = src.info(id);
        const std::string& image_edge = phi.edge_map.at(phi.source.edge(inf.edge).name);
        int te = *phi.target.find_edge(image_edge);
        if (inf.index <= phi.target.edge_length(te)) {
            images[id] = FreePolynomial::generator(dst.id(te, inf.index));
        }
        // else: zero (index exceeds the image edge's length)
    }
    return GeneratorMap(std::move(src), std::move(dst), std::move(images));
}

GeneratorMap add_vertex_generator_map(const RankedDigraph& g, const std::string& edge_name,
                                      int i, const RankedDigraph& target,
                                      const std::string& e1_name, const std::string& e2_name) {
    auto eid = g.find_edge(edge_name);
    if (!eid) throw Error("unknown edge '" + edge_name + "'");
    int l = g.edge_length(*eid);
    if (l <= 1) throw Error("add_vertex_generator_map: edge '" + edge_name + "' has length 1");
    if (i <= 0 || i >= l) {
        throw Error("add_vertex_generator_map: split index " + std::to_string(i) +
                    " outside 1.." + std::to_string(l - 1));
    }
    auto e1 = target.find_edge(e1_name);
    auto e2 = target.find_edge(e2_name);
    if (!e1 || !e2) throw Error("add_vertex_generator_map: split edges not in the target");
    const int l1 = target.edge_length(*e1);  // l(e) - i
    const int l2 = target.edge_length(*e2);  // i
    if (l1 != l - i || l2 != i) {
        throw Error("add_vertex_generator_map: split edge lengths do not match the index");
    }
    GeneratorSet src(g);
    GeneratorSet dst(target);
    std::vector<FreePolynomial> images(src.count());
    for (int id = 0; id < src.count(); ++id) {
        const GeneratorSet::Info& inf = src.info(id);
        if (inf.edge != *eid) {
            int te = *target.find_edge(g.edge(inf.edge).name);
            images[id] = FreePolynomial::generator(dst.id(te, inf.index));
            continue;
        }
        // a_j(e) -> sum_{k} a_{j-k}(e1) a_k(e2), 0 <= j-k <= l1, 0 <= k <= l2
        int j = inf.index;
        FreePolynomial acc;
        for (int k = std::max(0, j - l1); k <= std::min(l2, j); ++k) {
            FreePolynomial left = (j - k == 0) ? FreePolynomial::unit()
                                               : FreePolynomial::generator(dst.id(*e1, j - k));
            FreePolynomial right =
                (k == 0) ? FreePolynomial::unit() : FreePolynomial::generator(dst.id(*e2, k));
            acc = acc + left * right;
        }
        images[id] = std::move(acc);
    }
    return GeneratorMap(std::move(src), std::move(dst), std::move(images));
}

}  // namespace glg
