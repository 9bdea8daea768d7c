#include "tautgm/gmmodel.hpp"

#include <algorithm>
#include <cctype>

namespace tautgm::gmmodel {

void ModelParams::validate() const {
    if (box < 1) throw DomainError("ModelParams: box must be >= 1");
    if (complex_dim != 2 * box)
        throw DomainError("ModelParams: complex_dim must equal 2*box (primitive classes sit in the middle degree)");
    if (cover_degree < 1) throw DomainError("ModelParams: cover_degree must be >= 1");
    if (b_prim < 0) throw DomainError("ModelParams: b_prim must be >= 0");
    const long n_alg = static_cast<long>(box + 1) * (box + 2) / 2;
    if (n_alg + b_prim > 60000)
        throw CapacityError("ModelParams: label space exceeds dense 16-bit ids");
}

XBasis::XBasis(const ModelParams& params) : params_(params) {
    params_.validate();
    alg_parts_ = schubert::all_partitions(params_.box);
    const std::size_t n = size();
    const int top_degree = 2 * params_.complex_dim;

    degrees_.resize(n);
    integrals_.assign(n, Rat(0));
    for (std::size_t i = 0; i < alg_parts_.size(); ++i) degrees_[i] = 2 * alg_parts_[i].weight();
    for (std::size_t i = alg_parts_.size(); i < n; ++i) degrees_[i] = params_.complex_dim;
    integrals_[top_alg_id()] = Rat(params_.cover_degree);

    // Algebraic structure constants straight from the Schubert ring.
    alg_products_.resize(alg_parts_.size() * alg_parts_.size());
    for (std::size_t i = 0; i < alg_parts_.size(); ++i) {
        for (std::size_t j = i; j < alg_parts_.size(); ++j) {
            const schubert::SchubElem prod = schubert::mult(
                schubert::SchubElem::single(alg_parts_[i]), schubert::SchubElem::single(alg_parts_[j]));
            Combo combo;
            for (const auto& [p, c] : prod.coeffs())
                combo.emplace_back(alg_id(p), c);
            alg_products_[i * alg_parts_.size() + j] = combo;
            alg_products_[j * alg_parts_.size() + i] = std::move(combo);
        }
    }

    // Dual bases per degree. The pairing block between degrees d and
    // top_degree - d is nonsingular by construction; solve it exactly.
    duals_.resize(n);
    std::vector<std::vector<std::uint16_t>> by_degree(static_cast<std::size_t>(top_degree) + 1);
    for (std::size_t id = 0; id < n; ++id)
        by_degree[static_cast<std::size_t>(degrees_[id])].push_back(static_cast<std::uint16_t>(id));
    for (int d = 0; d <= top_degree; ++d) {
        const auto& rows = by_degree[static_cast<std::size_t>(d)];
        const auto& cols = by_degree[static_cast<std::size_t>(top_degree - d)];
        if (rows.empty()) continue;
        if (rows.size() != cols.size())
            throw InternalError("XBasis: pairing block is not square in degree " + std::to_string(d));
        const std::size_t k = rows.size();
        std::vector<std::vector<Rat>> pairing(k, std::vector<Rat>(k, Rat(0)));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                Rat v = 0;
                for (const auto& [pid, pc] : product(rows[i], cols[j])) v += pc * integrals_[pid];
                pairing[i][j] = v;
            }
        bool diagonal_block = true;
        for (std::size_t i = 0; i < k && diagonal_block; ++i)
            for (std::size_t j = 0; j < k; ++j)
                if (i != j && pairing[i][j] != 0) {
                    diagonal_block = false;
                    break;
                }
        if (diagonal_block) {
            for (std::size_t i = 0; i < k; ++i) {
                if (pairing[i][i] == 0) throw InternalError("XBasis: degenerate pairing block");
                duals_[rows[i]] = Combo{{cols[i], Rat(1) / pairing[i][i]}};
            }
        } else {
            // dual(rows[i]) = sum_j inv[j][i] * cols[j]
            const auto inv = qlinalg::invert_dense(pairing);
            for (std::size_t i = 0; i < k; ++i) {
                Combo combo;
                for (std::size_t j = 0; j < k; ++j)
                    if (inv[j][i] != 0) combo.emplace_back(cols[j], inv[j][i]);
                duals_[rows[i]] = std::move(combo);
            }
        }
    }
}

std::size_t XBasis::size() const noexcept {
    return alg_parts_.size() + static_cast<std::size_t>(params_.b_prim);
}

void XBasis::check_id(std::uint16_t id) const {
    if (id >= size()) throw DomainError("XBasis: label id " + std::to_string(id) + " out of range");
}

int XBasis::degree(std::uint16_t id) const {
    check_id(id);
    return degrees_[id];
}

bool XBasis::is_primitive(std::uint16_t id) const {
    check_id(id);
    return id >= alg_parts_.size();
}

std::uint16_t XBasis::alg_id(const schubert::Partition2& p) const {
    schubert::validate(p);
    if (p.box != params_.box) throw DomainError("XBasis: partition box mismatch");
    const auto it = std::find(alg_parts_.begin(), alg_parts_.end(), p);
    if (it == alg_parts_.end()) throw InternalError("XBasis: partition missing from label table");
    return static_cast<std::uint16_t>(it - alg_parts_.begin());
}

std::uint16_t XBasis::prim_id(int a) const {
    if (a < 1 || a > params_.b_prim)
        throw DomainError("XBasis: primitive index " + std::to_string(a) + " outside [1, b_prim]");
    return static_cast<std::uint16_t>(alg_parts_.size() + static_cast<std::size_t>(a) - 1);
}

const schubert::Partition2& XBasis::alg_part(std::uint16_t id) const {
    check_id(id);
    if (is_primitive(id)) throw DomainError("XBasis: primitive label has no partition");
    return alg_parts_[id];
}

int XBasis::prim_index(std::uint16_t id) const {
    check_id(id);
    if (!is_primitive(id)) throw DomainError("XBasis: algebraic label has no primitive index");
    return static_cast<int>(id - alg_parts_.size()) + 1;
}

std::uint16_t XBasis::top_alg_id() const {
    return static_cast<std::uint16_t>(alg_parts_.size() - 1);
}

std::string XBasis::label_name(std::uint16_t id) const {
    check_id(id);
    if (is_primitive(id)) return "e" + std::to_string(prim_index(id));
    return "s" + schubert::to_string(alg_parts_[id]);
}

std::uint16_t XBasis::id_from_name(std::string_view name) const {
    if (name.size() >= 2 && name[0] == 'e') {
        long a = 0;
        for (const char ch : name.substr(1)) {
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                throw DomainError("XBasis: bad label name '" + std::string(name) + "'");
            a = a * 10 + (ch - '0');
            if (a > 100000)
                throw DomainError("XBasis: primitive index out of range in '" + std::string(name) + "'");
        }
        return prim_id(static_cast<int>(a));
    }
    if (name.size() >= 2 && name[0] == 's')
        return alg_id(schubert::partition_from_string(name.substr(1), params_.box));
    throw DomainError("XBasis: bad label name '" + std::string(name) + "'");
}

const Rat& XBasis::integral(std::uint16_t id) const {
    check_id(id);
    return integrals_[id];
}

XBasis::Combo XBasis::product(std::uint16_t a, std::uint16_t b) const {
    check_id(a);
    check_id(b);
    const bool pa = is_primitive(a), pb = is_primitive(b);
    if (!pa && !pb) return alg_products_[a * alg_parts_.size() + b];
    if (pa && pb) {
        // e_a * e_b = delta_ab * o, with o = (1/cover_degree) * r(sigma_top).
        if (a != b) return {};
        return {{top_alg_id(), Rat(1) / Rat(params_.cover_degree)}};
    }
    const std::uint16_t alg = pa ? b : a;
    const std::uint16_t prim = pa ? a : b;
    if (alg == unit_id()) return {{prim, Rat(1)}};
    return {};  // positive-degree algebraic classes annihilate primitives
}

const XBasis::Combo& XBasis::dual_basis(std::uint16_t id) const {
    check_id(id);
    return duals_[id];
}

std::vector<std::size_t> XBasis::betti() const {
    std::vector<std::size_t> out(static_cast<std::size_t>(2 * params_.complex_dim) + 1, 0);
    for (std::size_t id = 0; id < size(); ++id) ++out[static_cast<std::size_t>(degrees_[id])];
    return out;
}

TensorClass::TensorClass(std::shared_ptr<const XBasis> basis, int m)
    : basis_(std::move(basis)), m_(m) {
    if (!basis_) throw DomainError("TensorClass: null basis");
    if (m < 0) throw DomainError("TensorClass: negative m");
}

Rat TensorClass::coeff(const Key& k) const {
    const auto it = terms_.find(k);
    return it == terms_.end() ? Rat(0) : it->second;
}

int TensorClass::term_degree(const Key& k) const {
    check_key(k);
    int d = 0;
    for (const std::uint16_t id : k) d += basis_->degree(id);
    return d;
}

bool TensorClass::is_homogeneous(int* degree_out) const {
    if (terms_.empty()) return true;
    const int d = term_degree(terms_.begin()->first);
    for (const auto& [k, c] : terms_)
        if (term_degree(k) != d) return false;
    if (degree_out) *degree_out = d;
    return true;
}

void TensorClass::check_key(const Key& k) const {
    if (static_cast<int>(k.size()) != m_)
        throw DomainError("TensorClass: key length " + std::to_string(k.size()) +
                          " does not match m = " + std::to_string(m_));
    for (const std::uint16_t id : k)
        if (id >= basis_->size()) throw DomainError("TensorClass: label id out of range");
}

void TensorClass::add_term(const Key& k, const Rat& coeff) {
    check_key(k);
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(k, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

namespace {

void require_compatible(const TensorClass& a, const TensorClass& b) {
    if (a.m() != b.m()) throw DomainError("TensorClass: m mismatch");
    if (!(a.basis().params() == b.basis().params()))
        throw DomainError("TensorClass: model params mismatch");
}

}  // namespace

TensorClass& TensorClass::operator+=(const TensorClass& rhs) {
    require_compatible(*this, rhs);
    for (const auto& [k, c] : rhs.terms_) add_term(k, c);
    return *this;
}

TensorClass& TensorClass::operator-=(const TensorClass& rhs) {
    require_compatible(*this, rhs);
    for (const auto& [k, c] : rhs.terms_) add_term(k, -c);
    return *this;
}

TensorClass& TensorClass::operator*=(const Rat& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, c] : terms_) c *= scalar;
    return *this;
}

bool operator==(const TensorClass& a, const TensorClass& b) {
    return a.m_ == b.m_ && a.basis().params() == b.basis().params() && a.terms_ == b.terms_;
}

TensorClass unit_class(std::shared_ptr<const XBasis> basis, int m) {
    TensorClass out(std::move(basis), m);
    out.add_term(TensorClass::Key(static_cast<std::size_t>(m), out.basis().unit_id()), Rat(1));
    return out;
}

TensorClass basis_class(std::shared_ptr<const XBasis> basis, TensorClass::Key key) {
    TensorClass out(std::move(basis), static_cast<int>(key.size()));
    out.add_term(key, Rat(1));
    return out;
}

TensorClass mult_model(const TensorClass& a, const TensorClass& b) {
    require_compatible(a, b);
    const XBasis& basis = a.basis();
    TensorClass out(a.basis_ptr(), a.m());
    const std::size_t m = static_cast<std::size_t>(a.m());

    std::vector<XBasis::Combo> factor_combos(m);
    TensorClass::Key key(m, 0);
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            bool dead = false;
            for (std::size_t f = 0; f < m && !dead; ++f) {
                factor_combos[f] = basis.product(ka[f], kb[f]);
                dead = factor_combos[f].empty();
            }
            if (dead) continue;
            const Rat c0 = ca * cb;
            // Cartesian expansion over the per-factor combinations.
            const auto expand = [&](auto&& self, std::size_t f, const Rat& acc) -> void {
                if (f == m) {
                    out.add_term(key, acc);
                    return;
                }
                for (const auto& [id, q] : factor_combos[f]) {
                    key[f] = id;
                    self(self, f + 1, acc * q);
                }
            };
            expand(expand, 0, c0);
        }
    }
    return out;
}

Rat integrate(const TensorClass& a) {
    const XBasis& basis = a.basis();
    Rat out = 0;
    for (const auto& [k, c] : a.terms()) {
        Rat v = c;
        for (const std::uint16_t id : k) {
            const Rat& w = basis.integral(id);
            if (w == 0) {
                v = 0;
                break;
            }
            v *= w;
        }
        out += v;
    }
    return out;
}

TensorClass pullback(const TensorClass& a, int m_target, const std::vector<int>& into) {
    if (static_cast<int>(into.size()) != a.m())
        throw DomainError("pullback: factor map size does not match m");
    std::vector<bool> used(static_cast<std::size_t>(std::max(m_target, 0)), false);
    for (const int slot : into) {
        if (slot < 0 || slot >= m_target) throw DomainError("pullback: target slot out of range");
        if (used[static_cast<std::size_t>(slot)]) throw DomainError("pullback: factor map not injective");
        used[static_cast<std::size_t>(slot)] = true;
    }
    TensorClass out(a.basis_ptr(), m_target);
    TensorClass::Key key(static_cast<std::size_t>(m_target), a.basis().unit_id());
    for (const auto& [k, c] : a.terms()) {
        for (std::size_t f = 0; f < k.size(); ++f) key[static_cast<std::size_t>(into[f])] = k[f];
        out.add_term(key, c);
        for (const int slot : into) key[static_cast<std::size_t>(slot)] = a.basis().unit_id();
    }
    return out;
}

TensorClass pushforward(const TensorClass& a, const std::vector<int>& kept) {
    for (std::size_t i = 0; i < kept.size(); ++i) {
        if (kept[i] < 0 || kept[i] >= a.m()) throw DomainError("pushforward: kept factor out of range");
        if (i > 0 && kept[i] <= kept[i - 1])
            throw DomainError("pushforward: kept factors must be strictly increasing");
    }
    std::vector<bool> keep(static_cast<std::size_t>(a.m()), false);
    for (const int f : kept) keep[static_cast<std::size_t>(f)] = true;

    const XBasis& basis = a.basis();
    TensorClass out(a.basis_ptr(), static_cast<int>(kept.size()));
    TensorClass::Key key(kept.size(), 0);
    for (const auto& [k, c] : a.terms()) {
        Rat v = c;
        std::size_t slot = 0;
        for (std::size_t f = 0; f < k.size(); ++f) {
            if (keep[f]) {
                key[slot++] = k[f];
            } else {
                const Rat& w = basis.integral(k[f]);
                if (w == 0) {
                    v = 0;
                    break;
                }
                v *= w;
            }
        }
        if (v != 0) out.add_term(key, v);
    }
    return out;
}

TensorClass diagonal(std::shared_ptr<const XBasis> basis) {
    TensorClass out(basis, 2);
    for (std::size_t i = 0; i < basis->size(); ++i) {
        const auto id = static_cast<std::uint16_t>(i);
        for (const auto& [did, q] : basis->dual_basis(id)) out.add_term({id, did}, q);
    }
    return out;
}

TensorClass small_diagonal(std::shared_ptr<const XBasis> basis) {
    TensorClass out(basis, 3);
    const std::size_t n = basis->size();
    for (std::size_t ik = 0; ik < n; ++ik) {
        for (std::size_t il = 0; il < n; ++il) {
            const auto k = static_cast<std::uint16_t>(ik);
            const auto l = static_cast<std::uint16_t>(il);
            const XBasis::Combo prod = basis->product(k, l);
            if (prod.empty()) continue;
            for (const auto& [pid, pc] : prod)
                for (const auto& [dk, qk] : basis->dual_basis(k))
                    for (const auto& [dl, ql] : basis->dual_basis(l))
                        out.add_term({pid, dk, dl}, pc * qk * ql);
        }
    }
    return out;
}

TensorClass involution_action(const TensorClass& a) {
    const XBasis& basis = a.basis();
    TensorClass out(a.basis_ptr(), a.m());
    for (const auto& [k, c] : a.terms()) {
        int flips = 0;
        for (const std::uint16_t id : k)
            if (basis.is_primitive(id)) ++flips;
        out.add_term(k, (flips % 2 == 0) ? c : -c);
    }
    return out;
}

}  // namespace tautgm::gmmodel
