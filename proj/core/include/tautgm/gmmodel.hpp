#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "tautgm/schubert.hpp"

namespace tautgm::gmmodel {

/// Shape parameters of the cohomology model of X, a degree-cover_degree
/// cover of Gr(2, box+2) of complex dimension 2*box. Defaults give the
/// degree-6 double cover of Gr(2,5) with primitive rank 22.
struct ModelParams {
    int complex_dim = 6;
    int cover_degree = 2;
    int b_prim = 22;
    int box = 3;

    /// Throws DomainError on inconsistent values (complex_dim must equal
    /// 2*box so the primitive classes sit in the middle degree) and
    /// CapacityError when b_prim exceeds the dense-id label space.
    void validate() const;

    friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

/// The graded basis of H*(X, Q) with dense ids:
///   [0, n_alg)           images r(sigma_lam), ordered by (weight, lam1);
///   [n_alg, n_alg+b_prim) primitive middle-degree classes e_1..e_{b_prim}.
///
/// Pairing: integral(r(a) * r(b)) = cover_degree * degree(a*b),
/// integral(e_a * e_b) = delta_ab, mixed products of positive-degree
/// algebraic classes with primitives vanish. o := (1/cover_degree) *
/// r(sigma_top) is the degree-1 point class, so integral(o) = 1.
class XBasis {
public:
    using Combo = std::vector<std::pair<std::uint16_t, Rat>>;

    explicit XBasis(const ModelParams& params = ModelParams{});

    [[nodiscard]] const ModelParams& params() const noexcept { return params_; }
    [[nodiscard]] std::size_t size() const noexcept;
    [[nodiscard]] std::size_t n_alg() const noexcept { return alg_parts_.size(); }

    [[nodiscard]] int degree(std::uint16_t id) const;
    [[nodiscard]] bool is_primitive(std::uint16_t id) const;

    [[nodiscard]] std::uint16_t alg_id(const schubert::Partition2& p) const;
    [[nodiscard]] std::uint16_t prim_id(int a) const;  // a in [1, b_prim]
    [[nodiscard]] const schubert::Partition2& alg_part(std::uint16_t id) const;
    [[nodiscard]] int prim_index(std::uint16_t id) const;  // 1-based

    [[nodiscard]] std::uint16_t unit_id() const noexcept { return 0; }
    [[nodiscard]] std::uint16_t top_alg_id() const;

    /// "s[2,1]" for algebraic labels, "e5" for primitive ones.
    [[nodiscard]] std::string label_name(std::uint16_t id) const;
    [[nodiscard]] std::uint16_t id_from_name(std::string_view name) const;

    /// Integral over X of the single basis class (0 unless top degree).
    [[nodiscard]] const Rat& integral(std::uint16_t id) const;

    /// Product of two basis classes expanded over the basis.
    [[nodiscard]] Combo product(std::uint16_t a, std::uint16_t b) const;

    /// Dual basis element w.r.t. the integral pairing: the unique
    /// degree-(2*complex_dim - deg) combination with
    /// integral(b_id * dual(b_k)) = delta_{id,k}.
    [[nodiscard]] const Combo& dual_basis(std::uint16_t id) const;

    /// Ranks by cohomological degree 0..2*complex_dim.
    [[nodiscard]] std::vector<std::size_t> betti() const;

private:
    ModelParams params_;
    std::vector<schubert::Partition2> alg_parts_;
    std::vector<int> degrees_;
    std::vector<Rat> integrals_;
    std::vector<Combo> alg_products_;  // n_alg x n_alg, row-major
    std::vector<Combo> duals_;
    void check_id(std::uint16_t id) const;
};

/// Element of H*(X^m, Q): sparse map from m-tuples of basis ids to Rat.
/// Immutable value semantics apart from add_term; no zero terms stored.
class TensorClass {
public:
    using Key = std::vector<std::uint16_t>;

    TensorClass(std::shared_ptr<const XBasis> basis, int m);

    [[nodiscard]] int m() const noexcept { return m_; }
    [[nodiscard]] const XBasis& basis() const noexcept { return *basis_; }
    [[nodiscard]] const std::shared_ptr<const XBasis>& basis_ptr() const noexcept { return basis_; }
    [[nodiscard]] const std::map<Key, Rat>& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] Rat coeff(const Key& k) const;

    /// Total cohomological degree of a term tuple.
    [[nodiscard]] int term_degree(const Key& k) const;
    /// True iff all terms share one total degree (vacuous for 0); if so and
    /// degree_out != nullptr, that degree is written through it.
    [[nodiscard]] bool is_homogeneous(int* degree_out = nullptr) const;

    void add_term(const Key& k, const Rat& coeff);

    TensorClass& operator+=(const TensorClass& rhs);
    TensorClass& operator-=(const TensorClass& rhs);
    TensorClass& operator*=(const Rat& scalar);
    friend TensorClass operator+(TensorClass lhs, const TensorClass& rhs) { return lhs += rhs; }
    friend TensorClass operator-(TensorClass lhs, const TensorClass& rhs) { return lhs -= rhs; }
    friend TensorClass operator*(TensorClass lhs, const Rat& scalar) { return lhs *= scalar; }
    friend TensorClass operator*(const Rat& scalar, TensorClass rhs) { return rhs *= scalar; }

    /// Equality of content (same m, same params, same terms).
    friend bool operator==(const TensorClass& a, const TensorClass& b);

private:
    void check_key(const Key& k) const;
    std::shared_ptr<const XBasis> basis_;
    int m_;
    std::map<Key, Rat> terms_;
};

/// The unit class 1 on X^m.
[[nodiscard]] TensorClass unit_class(std::shared_ptr<const XBasis> basis, int m);

/// Single basis tuple with coefficient 1.
[[nodiscard]] TensorClass basis_class(std::shared_ptr<const XBasis> basis, TensorClass::Key key);

/// Factor-wise graded product. Throws DomainError on m or params mismatch.
[[nodiscard]] TensorClass mult_model(const TensorClass& a, const TensorClass& b);

/// Integral over X^m: sum over top-degree tuples of coeff times the product
/// of per-factor integrals; equivalently the coefficient of o^{tensor m}.
[[nodiscard]] Rat integrate(const TensorClass& a);

/// Pullback along the projection X^{m_target} -> X^{a.m()} selecting the
/// factors listed in `into` (0-based, distinct): factor f of a lands in slot
/// into[f], all other slots get the unit label.
[[nodiscard]] TensorClass pullback(const TensorClass& a, int m_target, const std::vector<int>& into);

/// Pushforward along the projection keeping the listed factors (0-based,
/// strictly increasing): every dropped factor is integrated over X. The
/// operative contract is the projection formula
/// integrate(a * pullback(b)) = integrate(pushforward(a) * b).
[[nodiscard]] TensorClass pushforward(const TensorClass& a, const std::vector<int>& kept);

/// The diagonal class on X^2: sum over the basis of b_k tensor dual(b_k);
/// contract: integrate(diagonal * (alpha tensor beta)) = integral(alpha*beta).
[[nodiscard]] TensorClass diagonal(std::shared_ptr<const XBasis> basis);

/// The small diagonal on X^3, sum of (b_k*b_l) tensor dual(b_k) tensor
/// dual(b_l); contract: integrates triple products.
[[nodiscard]] TensorClass small_diagonal(std::shared_ptr<const XBasis> basis);

/// Covering involution, factor-wise: fixes algebraic labels, negates each
/// primitive label occurrence. A ring involution.
[[nodiscard]] TensorClass involution_action(const TensorClass& a);

}  // namespace tautgm::gmmodel
