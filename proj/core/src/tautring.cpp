#include "tautgm/tautring.hpp"

#include <algorithm>
#include <numeric>

#include "tautgm/parallel.hpp"

namespace tautgm::tautring {

int TautMonomial::codim(int complex_dim) const {
    int d = complex_dim * static_cast<int>(edges.size());
    for (const auto& p : factors) d += p.weight();
    return d;
}

void TautMonomial::validate() const {
    if (m < 0) throw DomainError("TautMonomial: negative m");
    if (static_cast<int>(factors.size()) != m)
        throw DomainError("TautMonomial: factor count does not match m");
    std::vector<int> edge_degree(static_cast<std::size_t>(m), 0);
    for (const auto& p : factors) {
        schubert::validate(p);
        if (p.box != factors.front().box) throw DomainError("TautMonomial: mixed boxes");
    }
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const auto [i, j] = edges[e];
        if (i < 0 || j < 0 || i >= m || j >= m || i >= j)
            throw DomainError("TautMonomial: bad edge");
        if (e > 0 && edges[e] <= edges[e - 1]) throw DomainError("TautMonomial: edges not sorted");
        ++edge_degree[static_cast<std::size_t>(i)];
        ++edge_degree[static_cast<std::size_t>(j)];
    }
    for (int v = 0; v < m; ++v) {
        if (edge_degree[static_cast<std::size_t>(v)] > 1)
            throw DomainError("TautMonomial: matching edges are not disjoint");
        if (edge_degree[static_cast<std::size_t>(v)] == 1 &&
            factors[static_cast<std::size_t>(v)].weight() != 0)
            throw DomainError("TautMonomial: matched factor carries a positive-degree label");
    }
}

TautMonomial unit_monomial(int m, int box) {
    TautMonomial mono;
    mono.m = m;
    mono.factors.assign(static_cast<std::size_t>(m), schubert::Partition2{0, 0, box});
    return mono;
}

TautElem::TautElem(int m) : m_(m) {
    if (m < 0) throw DomainError("TautElem: negative m");
}

Rat TautElem::coeff(const TautMonomial& mono) const {
    const auto it = terms_.find(mono);
    return it == terms_.end() ? Rat(0) : it->second;
}

void TautElem::add_term(const TautMonomial& mono, const Rat& coeff) {
    if (mono.m != m_) throw DomainError("TautElem: monomial m mismatch");
    mono.validate();
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(mono, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

TautElem& TautElem::operator+=(const TautElem& rhs) {
    if (m_ != rhs.m_) throw DomainError("TautElem: m mismatch in +");
    for (const auto& [mono, c] : rhs.terms_) add_term(mono, c);
    return *this;
}

TautElem& TautElem::operator-=(const TautElem& rhs) {
    if (m_ != rhs.m_) throw DomainError("TautElem: m mismatch in -");
    for (const auto& [mono, c] : rhs.terms_) add_term(mono, -c);
    return *this;
}

TautElem& TautElem::operator*=(const Rat& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [mono, c] : terms_) c *= scalar;
    return *this;
}

namespace {

// Working state of the rewriting engine: a scalar, one Schubert element per
// factor, and a multiset of tau edges (keys i < j).
struct RawTerm {
    Rat coeff;
    std::vector<schubert::SchubElem> factors;
    std::map<std::pair<int, int>, int> edges;
};

schubert::SchubElem point_class(const gmmodel::ModelParams& params) {
    return schubert::SchubElem::single(
        schubert::Partition2{params.box, params.box, params.box},
        Rat(1) / Rat(params.cover_degree));
}

// Reduces the tau multiset to a partial matching. Rules, always applied at
// the smallest factor with tau-degree >= 2, using its two smallest partners:
//   tau_{vj} tau_{vj} -> b_prim * o_v o_j
//   tau_{vj} tau_{vk} -> tau_{jk} * o_v          (j < k)
void reduce_edges(const gmmodel::ModelParams& params, RawTerm& term) {
    const schubert::SchubElem o = point_class(params);
    const int m = static_cast<int>(term.factors.size());
    for (;;) {
        int v = -1;
        std::vector<int> partners;
        for (int cand = 0; cand < m && v < 0; ++cand) {
            partners.clear();
            for (const auto& [edge, count] : term.edges) {
                if (edge.first != cand && edge.second != cand) continue;
                const int other = edge.first == cand ? edge.second : edge.first;
                partners.insert(partners.end(), static_cast<std::size_t>(count), other);
            }
            if (partners.size() >= 2) v = cand;
        }
        if (v < 0) return;

        std::sort(partners.begin(), partners.end());
        const int j = partners[0];
        const int k = partners[1];
        const auto drop = [&](int a, int b) {
            const auto key = std::minmax(a, b);
            const auto it = term.edges.find(key);
            if (--it->second == 0) term.edges.erase(it);
        };
        if (j == k) {
            drop(v, j);
            drop(v, j);
            term.coeff *= params.b_prim;
            term.factors[static_cast<std::size_t>(v)] =
                schubert::mult(term.factors[static_cast<std::size_t>(v)], o);
            term.factors[static_cast<std::size_t>(j)] =
                schubert::mult(term.factors[static_cast<std::size_t>(j)], o);
        } else {
            drop(v, j);
            drop(v, k);
            ++term.edges[std::minmax(j, k)];
            term.factors[static_cast<std::size_t>(v)] =
                schubert::mult(term.factors[static_cast<std::size_t>(v)], o);
        }
        if (term.coeff == 0) return;
    }
}

// Expands a reduced RawTerm into normal-form monomials. Combinations that
// place a positive-degree label on a matched factor vanish (tau kills h, c
// and o on its own factors).
void expand_term(RawTerm term, TautElem& out) {
    if (term.coeff == 0) return;
    const int m = static_cast<int>(term.factors.size());
    for (const auto& f : term.factors)
        if (f.is_zero()) return;

    std::vector<bool> matched(static_cast<std::size_t>(m), false);
    TautMonomial mono;
    mono.m = m;
    mono.edges.reserve(term.edges.size());
    for (const auto& [edge, count] : term.edges) {
        if (count != 1) throw InternalError("tautring: edge multiset not reduced to a matching");
        mono.edges.push_back(edge);
        matched[static_cast<std::size_t>(edge.first)] = true;
        matched[static_cast<std::size_t>(edge.second)] = true;
    }
    mono.factors.assign(static_cast<std::size_t>(m),
                        schubert::Partition2{0, 0, m > 0 ? term.factors.front().box() : 3});

    const auto expand = [&](auto&& self, std::size_t f, const Rat& acc) -> void {
        if (f == static_cast<std::size_t>(m)) {
            out.add_term(mono, acc);
            return;
        }
        for (const auto& [p, c] : term.factors[f].coeffs()) {
            if (matched[f] && p.weight() != 0) continue;
            mono.factors[f] = p;
            self(self, f + 1, acc * c);
        }
        mono.factors[f] = schubert::Partition2{0, 0, mono.factors[f].box};
    };
    expand(expand, 0, term.coeff);
}

void check_factor_index(int i, int m) {
    if (i < 0 || i >= m)
        throw DomainError("tautring: factor index " + std::to_string(i) + " outside [0, " +
                          std::to_string(m) + ")");
}

}  // namespace

TautElem normalize(const gmmodel::ModelParams& params, int m, const Word& word) {
    params.validate();
    if (m < 0) throw DomainError("normalize: negative m");

    RawTerm term;
    term.coeff = 1;
    term.factors.assign(static_cast<std::size_t>(m), schubert::SchubElem::unit(params.box));
    const schubert::SchubElem o = point_class(params);
    const schubert::SchubElem h =
        schubert::SchubElem::single(schubert::Partition2{1, 0, params.box});
    const schubert::SchubElem c =
        schubert::SchubElem::single(schubert::Partition2{2, 0, params.box});

    for (const Gen& g : word) {
        check_factor_index(g.i, m);
        switch (g.kind) {
            case Gen::Kind::o:
            case Gen::Kind::h:
            case Gen::Kind::c: {
                const schubert::SchubElem& gen = g.kind == Gen::Kind::o ? o : (g.kind == Gen::Kind::h ? h : c);
                auto& f = term.factors[static_cast<std::size_t>(g.i)];
                f = schubert::mult(f, gen);
                break;
            }
            case Gen::Kind::tau: {
                check_factor_index(g.j, m);
                if (g.i == g.j) throw DomainError("normalize: tau requires two distinct factors");
                ++term.edges[std::minmax(g.i, g.j)];
                break;
            }
        }
    }

    TautElem out(m);
    reduce_edges(params, term);
    expand_term(std::move(term), out);
    return out;
}

TautElem normalize(const gmmodel::ModelParams& params, int m, const GenExpr& expr) {
    TautElem out(m);
    for (const auto& [coeff, word] : expr) {
        TautElem part = normalize(params, m, word);
        part *= coeff;
        out += part;
    }
    return out;
}

TautElem taut_mult(const gmmodel::ModelParams& params, const TautElem& a, const TautElem& b) {
    params.validate();
    if (a.m() != b.m()) throw DomainError("taut_mult: m mismatch");
    TautElem out(a.m());
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            RawTerm term;
            term.coeff = ca * cb;
            term.factors.reserve(ma.factors.size());
            for (std::size_t f = 0; f < ma.factors.size(); ++f)
                term.factors.push_back(schubert::mult(schubert::SchubElem::single(ma.factors[f]),
                                                      schubert::SchubElem::single(mb.factors[f])));
            for (const auto& e : ma.edges) ++term.edges[e];
            for (const auto& e : mb.edges) ++term.edges[e];
            reduce_edges(params, term);
            expand_term(std::move(term), out);
        }
    }
    return out;
}

namespace {

std::vector<std::vector<std::pair<int, int>>> all_matchings(int m) {
    std::vector<std::vector<std::pair<int, int>>> out;
    std::vector<std::pair<int, int>> current;
    std::vector<bool> used(static_cast<std::size_t>(m), false);
    const auto rec = [&](auto&& self, int from) -> void {
        int v = from;
        while (v < m && used[static_cast<std::size_t>(v)]) ++v;
        if (v >= m) {
            out.push_back(current);
            return;
        }
        used[static_cast<std::size_t>(v)] = true;
        // v unmatched
        self(self, v + 1);
        // v matched to each later free vertex
        for (int u = v + 1; u < m; ++u) {
            if (used[static_cast<std::size_t>(u)]) continue;
            used[static_cast<std::size_t>(u)] = true;
            current.emplace_back(v, u);
            self(self, v + 1);
            current.pop_back();
            used[static_cast<std::size_t>(u)] = false;
        }
        used[static_cast<std::size_t>(v)] = false;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

}  // namespace

std::vector<TautMonomial> enumerate_basis(const gmmodel::ModelParams& params, int m, int codim) {
    params.validate();
    if (m < 0) throw DomainError("enumerate_basis: negative m");
    if (m > 8) throw CapacityError("enumerate_basis: m > 8 is not materializable");
    if (codim < 0 || codim > params.complex_dim * m)
        throw DomainError("enumerate_basis: codim outside [0, complex_dim * m]");

    std::vector<TautMonomial> out;
    for (const auto& matching : all_matchings(m)) {
        const int rem = codim - params.complex_dim * static_cast<int>(matching.size());
        if (rem < 0) continue;

        std::vector<bool> matched(static_cast<std::size_t>(m), false);
        for (const auto& [i, j] : matching) {
            matched[static_cast<std::size_t>(i)] = true;
            matched[static_cast<std::size_t>(j)] = true;
        }
        std::vector<std::size_t> free_factors;
        for (int v = 0; v < m; ++v)
            if (!matched[static_cast<std::size_t>(v)]) free_factors.push_back(static_cast<std::size_t>(v));
        if (rem > 2 * params.box * static_cast<int>(free_factors.size())) continue;

        TautMonomial mono = unit_monomial(m, params.box);
        mono.edges = matching;
        const auto assign = [&](auto&& self, std::size_t idx, int left) -> void {
            if (idx == free_factors.size()) {
                if (left == 0) out.push_back(mono);
                return;
            }
            const int max_here = std::min(left, 2 * params.box);
            for (int w = 0; w <= max_here; ++w) {
                for (const auto& p : schubert::partitions_of_weight(params.box, w)) {
                    mono.factors[free_factors[idx]] = p;
                    self(self, idx + 1, left - w);
                }
            }
            mono.factors[free_factors[idx]] = schubert::Partition2{0, 0, params.box};
        };
        assign(assign, 0, rem);
    }
    return out;
}

gmmodel::TensorClass evaluate(const TautElem& a, std::shared_ptr<const gmmodel::XBasis> basis) {
    const gmmodel::XBasis& xb = *basis;
    gmmodel::TensorClass out(basis, a.m());
    gmmodel::TensorClass::Key key(static_cast<std::size_t>(a.m()), 0);
    for (const auto& [mono, c] : a.terms()) {
        for (std::size_t f = 0; f < mono.factors.size(); ++f) key[f] = xb.alg_id(mono.factors[f]);
        const auto assign = [&](auto&& self, std::size_t e) -> void {
            if (e == mono.edges.size()) {
                out.add_term(key, c);
                return;
            }
            const auto [i, j] = mono.edges[e];
            for (int idx = 1; idx <= xb.params().b_prim; ++idx) {
                const std::uint16_t pid = xb.prim_id(idx);
                key[static_cast<std::size_t>(i)] = pid;
                key[static_cast<std::size_t>(j)] = pid;
                self(self, e + 1);
            }
        };
        assign(assign, 0);
        for (const auto& [i, j] : mono.edges) {
            key[static_cast<std::size_t>(i)] = xb.unit_id();
            key[static_cast<std::size_t>(j)] = xb.unit_id();
        }
    }
    return out;
}

gmmodel::TensorClass evaluate_unreduced(std::shared_ptr<const gmmodel::XBasis> basis, int m,
                                        const Word& word) {
    const gmmodel::XBasis& xb = *basis;
    const auto& params = xb.params();
    if (m < 0) throw DomainError("evaluate_unreduced: negative m");

    const auto factor_class = [&](std::uint16_t id, int i) {
        gmmodel::TensorClass::Key key(static_cast<std::size_t>(m), xb.unit_id());
        key[static_cast<std::size_t>(i)] = id;
        return gmmodel::basis_class(basis, std::move(key));
    };

    gmmodel::TensorClass acc = gmmodel::unit_class(basis, m);
    for (const Gen& g : word) {
        check_factor_index(g.i, m);
        switch (g.kind) {
            case Gen::Kind::o: {
                auto cls = factor_class(xb.top_alg_id(), g.i);
                cls *= Rat(1) / Rat(params.cover_degree);
                acc = gmmodel::mult_model(acc, cls);
                break;
            }
            case Gen::Kind::h:
                acc = gmmodel::mult_model(
                    acc, factor_class(xb.alg_id(schubert::Partition2{1, 0, params.box}), g.i));
                break;
            case Gen::Kind::c:
                acc = gmmodel::mult_model(
                    acc, factor_class(xb.alg_id(schubert::Partition2{2, 0, params.box}), g.i));
                break;
            case Gen::Kind::tau: {
                check_factor_index(g.j, m);
                if (g.i == g.j) throw DomainError("evaluate_unreduced: tau requires two factors");
                gmmodel::TensorClass tau_cls(basis, m);
                gmmodel::TensorClass::Key key(static_cast<std::size_t>(m), xb.unit_id());
                for (int a = 1; a <= params.b_prim; ++a) {
                    key[static_cast<std::size_t>(g.i)] = xb.prim_id(a);
                    key[static_cast<std::size_t>(g.j)] = xb.prim_id(a);
                    tau_cls.add_term(key, Rat(1));
                }
                acc = gmmodel::mult_model(acc, tau_cls);
                break;
            }
        }
        if (acc.is_zero()) break;
    }
    return acc;
}

gmmodel::TensorClass evaluate_unreduced(std::shared_ptr<const gmmodel::XBasis> basis, int m,
                                        const GenExpr& expr) {
    gmmodel::TensorClass out(basis, m);
    for (const auto& [coeff, word] : expr) {
        gmmodel::TensorClass part = evaluate_unreduced(basis, m, word);
        part *= coeff;
        out += part;
    }
    return out;
}

Rat taut_integrate(const gmmodel::ModelParams& params, const TautElem& a) {
    params.validate();
    // Only the edge-free all-top monomial reaches codimension complex_dim*m
    // in normal form; each top label integrates to cover_degree.
    const schubert::Partition2 top{params.box, params.box, params.box};
    Rat out = 0;
    for (const auto& [mono, c] : a.terms()) {
        if (!mono.edges.empty()) continue;
        if (std::all_of(mono.factors.begin(), mono.factors.end(),
                        [&](const auto& p) { return p == top; })) {
            Rat scale = 1;
            for (int f = 0; f < mono.m; ++f) scale *= params.cover_degree;
            out += c * scale;
        }
    }
    return out;
}

qlinalg::SparseMat gram(const gmmodel::ModelParams& params, int m, int codim, int threads) {
    const std::vector<TautMonomial> rows = enumerate_basis(params, m, codim);
    const std::vector<TautMonomial> cols = enumerate_basis(params, m, params.complex_dim * m - codim);

    std::vector<std::vector<std::pair<std::size_t, Rat>>> row_entries(rows.size());
    parallel_for(rows.size(), threads, [&](std::size_t r) {
        TautElem x(m);
        x.add_term(rows[r], Rat(1));
        for (std::size_t cix = 0; cix < cols.size(); ++cix) {
            TautElem y(m);
            y.add_term(cols[cix], Rat(1));
            const Rat v = taut_integrate(params, taut_mult(params, x, y));
            if (v != 0) row_entries[r].emplace_back(cix, v);
        }
    });

    qlinalg::SparseMat out(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [cix, v] : row_entries[r]) out.set(r, cix, v);
    return out;
}

InjectivityResult check_injectivity(const gmmodel::ModelParams& params, int m, int codim,
                                    InjectivityMethod method, int threads) {
    InjectivityResult res;
    res.m = m;
    res.codim = codim;
    res.method = method;

    if (method == InjectivityMethod::gram) {
        const qlinalg::SparseMat g = gram(params, m, codim, threads);
        res.monomials = g.n_rows();
        res.rank = qlinalg::rank(g);
    } else {
        if (m > 4)
            throw CapacityError("check_injectivity: model method materializes H*(X^m), m <= 4 only");
        const std::vector<TautMonomial> basis_monos = enumerate_basis(params, m, codim);
        const auto xb = std::make_shared<const gmmodel::XBasis>(params);

        std::vector<gmmodel::TensorClass> images;
        images.reserve(basis_monos.size());
        std::map<gmmodel::TensorClass::Key, std::size_t> columns;
        for (const auto& mono : basis_monos) {
            TautElem e(m);
            e.add_term(mono, Rat(1));
            images.push_back(evaluate(e, xb));
            for (const auto& [k, c] : images.back().terms()) columns.emplace(k, 0);
        }
        std::size_t next = 0;
        for (auto& [k, idx] : columns) idx = next++;

        qlinalg::SparseMat mat(images.size(), columns.size());
        for (std::size_t r = 0; r < images.size(); ++r)
            for (const auto& [k, c] : images[r].terms()) mat.set(r, columns.at(k), c);
        res.monomials = images.size();
        res.rank = qlinalg::rank(mat);
    }
    res.injective = res.rank == res.monomials;
    return res;
}

TautElem kimura_relation(int b) {
    if (b < 0) throw DomainError("kimura_relation: negative b");
    if (b > 6) throw CapacityError("kimura_relation: b > 6 means more than 7! terms");

    const int n = b + 1;
    const int m = 2 * n;
    const int box = gmmodel::ModelParams{}.box;

    TautElem out(m);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j)
                if (perm[i] > perm[j]) ++inversions;
        TautMonomial mono = unit_monomial(m, box);
        for (int i = 0; i < n; ++i)
            mono.edges.emplace_back(i, n + perm[static_cast<std::size_t>(i)]);
        out.add_term(mono, inversions % 2 == 0 ? Rat(1) : Rat(-1));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace tautgm::tautring
