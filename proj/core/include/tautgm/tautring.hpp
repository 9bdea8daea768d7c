#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "tautgm/gmmodel.hpp"

namespace tautgm::tautring {

/// Normal-form monomial on X^m: one Schubert-image label per factor plus a
/// partial matching of tau edges. Invariants (see validate): edges are
/// 0-based pairs i < j, sorted, pairwise disjoint, and every matched factor
/// carries the unit label (tau annihilates positive-degree classes on its
/// own factors).
struct TautMonomial {
    int m = 0;
    std::vector<schubert::Partition2> factors;  // size m
    std::vector<std::pair<int, int>> edges;

    /// Sum of label weights plus complex_dim per edge.
    [[nodiscard]] int codim(int complex_dim) const;

    void validate() const;

    friend auto operator<=>(const TautMonomial&, const TautMonomial&) = default;
};

[[nodiscard]] TautMonomial unit_monomial(int m, int box);

/// Q-linear combination of normal-form monomials with a fixed m.
class TautElem {
public:
    explicit TautElem(int m);

    [[nodiscard]] int m() const noexcept { return m_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] const std::map<TautMonomial, Rat>& terms() const noexcept { return terms_; }
    [[nodiscard]] Rat coeff(const TautMonomial& mono) const;

    void add_term(const TautMonomial& mono, const Rat& coeff);

    TautElem& operator+=(const TautElem& rhs);
    TautElem& operator-=(const TautElem& rhs);
    TautElem& operator*=(const Rat& scalar);
    friend TautElem operator+(TautElem lhs, const TautElem& rhs) { return lhs += rhs; }
    friend TautElem operator-(TautElem lhs, const TautElem& rhs) { return lhs -= rhs; }
    friend TautElem operator*(TautElem lhs, const Rat& scalar) { return lhs *= scalar; }
    friend TautElem operator*(const Rat& scalar, TautElem rhs) { return rhs *= scalar; }
    friend bool operator==(const TautElem&, const TautElem&) = default;

private:
    int m_;
    std::map<TautMonomial, Rat> terms_;
};

/// One generator symbol of R*(X^m): o_i, h_i, c_i (0-based factor i) or
/// tau_{ij} (0-based factors i != j).
struct Gen {
    enum class Kind { o, h, c, tau };
    Kind kind = Kind::o;
    int i = 0;
    int j = 0;  // tau only

    [[nodiscard]] static Gen o(int i) { return {Kind::o, i, 0}; }
    [[nodiscard]] static Gen h(int i) { return {Kind::h, i, 0}; }
    [[nodiscard]] static Gen c(int i) { return {Kind::c, i, 0}; }
    [[nodiscard]] static Gen tau(int i, int j) { return {Kind::tau, i, j}; }
};

/// A formal product of generators, and a linear combination of such.
using Word = std::vector<Gen>;
using GenExpr = std::vector<std::pair<Rat, Word>>;

/// Rewrites a formal generator product into normal form:
///   - per-factor parts are reduced inside the Schubert ring (this covers
///     h*o = c*o = 0, c^4 = 0, the codim-4 relation on c^2 and h^6 = 10 o);
///   - tau_{ij}^2 -> b_prim * o_i o_j, and tau chains
///     tau_{ij} tau_{ik} -> tau_{jk} o_i, applied at the smallest repeated
///     factor first;
///   - a matched factor with a positive-degree label kills the term.
/// Factor indices are 0-based; out-of-range indices throw DomainError.
[[nodiscard]] TautElem normalize(const gmmodel::ModelParams& params, int m, const Word& word);
[[nodiscard]] TautElem normalize(const gmmodel::ModelParams& params, int m, const GenExpr& expr);

/// Product with the result in normal form. Commutative and associative.
[[nodiscard]] TautElem taut_mult(const gmmodel::ModelParams& params, const TautElem& a,
                                 const TautElem& b);

/// All normal-form monomials of the given codimension, ordered by matchings
/// (edge count, then edge list lex) and then labels (weight-lex per factor).
/// Throws DomainError unless 0 <= codim <= complex_dim * m;
/// CapacityError for m > 8.
[[nodiscard]] std::vector<TautMonomial> enumerate_basis(const gmmodel::ModelParams& params, int m,
                                                        int codim);

/// Realization in the cohomology model: per-factor labels map to
/// themselves, each tau edge {i,j} to sum_a e_a x e_a in factors (i, j).
[[nodiscard]] gmmodel::TensorClass evaluate(const TautElem& a,
                                            std::shared_ptr<const gmmodel::XBasis> basis);

/// Evaluates a generator word directly in the cohomology model with no
/// rewriting: each generator maps to its class and the product is taken in
/// the model. Independent side of the oracle-equivalence property
///   evaluate_unreduced(word) == evaluate(normalize(word)).
[[nodiscard]] gmmodel::TensorClass evaluate_unreduced(
    std::shared_ptr<const gmmodel::XBasis> basis, int m, const Word& word);
[[nodiscard]] gmmodel::TensorClass evaluate_unreduced(
    std::shared_ptr<const gmmodel::XBasis> basis, int m, const GenExpr& expr);

/// Integral computed purely by rewriting (never via the model): the
/// top-codimension coefficient against o_1 ... o_m. Cross-oracle contract:
/// taut_integrate(a) == integrate(evaluate(a)).
[[nodiscard]] Rat taut_integrate(const gmmodel::ModelParams& params, const TautElem& a);

/// Gram matrix of taut_integrate(x*y) for x in enumerate_basis(m, codim)
/// and y in enumerate_basis(m, complex_dim*m - codim). Entry computation
/// parallelizes over rows (threads <= 0 means hardware concurrency); the
/// result is identical for every thread count.
[[nodiscard]] qlinalg::SparseMat gram(const gmmodel::ModelParams& params, int m, int codim,
                                      int threads = 1);

enum class InjectivityMethod { gram, model };

struct InjectivityResult {
    int m = 0;
    int codim = 0;
    InjectivityMethod method = InjectivityMethod::gram;
    std::size_t monomials = 0;
    std::size_t rank = 0;
    bool injective = false;
};

/// Rank certificate for the monomial basis in one codimension.
/// method gram: rank of the Gram pairing (full rank certifies injectivity
/// through the nondegenerate model pairing). method model: rank of the
/// evaluated monomial vectors in H*(X^m); requires m <= 4 (CapacityError
/// beyond, never a wrong answer). Both methods agree whenever both run.
[[nodiscard]] InjectivityResult check_injectivity(const gmmodel::ModelParams& params, int m,
                                                  int codim, InjectivityMethod method,
                                                  int threads = 1);

/// The alternating sum  sum_{s in S_{b+1}} sgn(s) prod_i tau_{i, (b+1)+s(i)}
/// on X^{2(b+1)}, kept as a formal element (the normal form does not reduce
/// it). Evaluates to 0 in a model with b_prim = b and to a nonzero class
/// with b_prim = b + 1. Throws CapacityError for b > 6.
[[nodiscard]] TautElem kimura_relation(int b);

}  // namespace tautgm::tautring
