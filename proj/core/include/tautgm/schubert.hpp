#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tautgm/qlinalg.hpp"

namespace tautgm::schubert {

/// Two-row partition inside a 2 x box rectangle, indexing a Schubert class
/// on Gr(2, box + 2). The box is carried so classes living on different
/// Grassmannians cannot be combined silently.
struct Partition2 {
    int lam1 = 0;
    int lam2 = 0;
    int box = 3;

    [[nodiscard]] int weight() const noexcept { return lam1 + lam2; }
    friend auto operator<=>(const Partition2&, const Partition2&) = default;
};

/// Throws DomainError unless box >= lam1 >= lam2 >= 0.
void validate(const Partition2& p);

/// Poincare dual inside the box: (box - lam2, box - lam1).
[[nodiscard]] Partition2 dual(const Partition2& p);

/// Containment of Young diagrams (same box required).
[[nodiscard]] bool contains(const Partition2& outer, const Partition2& inner);

/// True iff outer/inner is a horizontal strip: inner fits in outer and no
/// two added boxes share a column. For two-row shapes this is the
/// interlacing condition outer1 >= inner1 >= outer2 >= inner2.
[[nodiscard]] bool is_horizontal_strip(const Partition2& outer, const Partition2& inner);

/// All partitions in the box, ordered by (weight, lam1, lam2) ascending.
/// (box+1)(box+2)/2 of them; 10 for box = 3.
[[nodiscard]] std::vector<Partition2> all_partitions(int box);

/// The partitions of given weight, in the same order. Empty when
/// weight < 0 or weight > 2*box.
[[nodiscard]] std::vector<Partition2> partitions_of_weight(int box, int weight);

/// "[l1,l2]"
[[nodiscard]] std::string to_string(const Partition2& p);

/// Parses "[l1,l2]" against the given box. Throws DomainError on malformed
/// text or a partition outside the box.
[[nodiscard]] Partition2 partition_from_string(std::string_view s, int box);

/// Q-linear combination of Schubert classes with a fixed box.
/// No zero coefficients are stored.
class SchubElem {
public:
    explicit SchubElem(int box);
    [[nodiscard]] static SchubElem unit(int box);
    [[nodiscard]] static SchubElem single(const Partition2& p, Rat coeff = Rat(1));

    [[nodiscard]] int box() const noexcept { return box_; }
    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
    [[nodiscard]] const std::map<Partition2, Rat>& coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] Rat coeff(const Partition2& p) const;

    /// True iff every term has the given weight (vacuously true for 0).
    [[nodiscard]] bool is_homogeneous_of_weight(int weight) const;

    void add_term(const Partition2& p, const Rat& coeff);

    SchubElem& operator+=(const SchubElem& rhs);
    SchubElem& operator-=(const SchubElem& rhs);
    SchubElem& operator*=(const Rat& scalar);

    friend SchubElem operator+(SchubElem lhs, const SchubElem& rhs) { return lhs += rhs; }
    friend SchubElem operator-(SchubElem lhs, const SchubElem& rhs) { return lhs -= rhs; }
    friend SchubElem operator*(SchubElem lhs, const Rat& scalar) { return lhs *= scalar; }
    friend SchubElem operator*(const Rat& scalar, SchubElem rhs) { return rhs *= scalar; }
    friend bool operator==(const SchubElem&, const SchubElem&) = default;

private:
    int box_;
    std::map<Partition2, Rat> coeffs_;
};

/// Pieri rule: sigma_p * sigma_lam = sum of sigma_mu over mu in the box
/// containing lam with |mu| = |lam| + p and mu/lam a horizontal strip.
/// All coefficients are 1 (two-row multiplicity-freeness).
/// Throws DomainError unless 0 <= p <= box.
[[nodiscard]] SchubElem pieri(int p, const Partition2& lam);

/// Product in CH*(Gr(2, box+2)): bilinear extension of the basis product
/// sigma_lam * sigma_mu, computed by the two-row Giambelli expansion
/// sigma_mu = sigma_{mu1} sigma_{mu2} - sigma_{mu1+1} sigma_{mu2-1}
/// followed by iterated Pieri (special classes beyond the box are zero).
[[nodiscard]] SchubElem mult(const SchubElem& a, const SchubElem& b);

/// Coefficient of the top class sigma_[box,box]; other terms contribute 0.
[[nodiscard]] Rat degree(const SchubElem& a);

/// Presentation constants of the degree-6 double cover X -> Gr(2,5):
///   c^2 = lambda * c h^2 + mu * h^4   (solved in CH^4, basis rank 2)
///   h^6 = nu * c h^4
/// and the doubled top degrees h6 = 2 deg(s1^6), ch4 = 2 deg(s2 s1^4),
/// c3 = 2 deg(s2^3), where the factor 2 is the cover degree.
struct ChowConstants {
    Rat lambda;
    Rat mu;
    Rat nu;
    Rat h6;
    Rat ch4;
    Rat c3;
};

/// Box 3 specialization; throws InternalError if the CH^4 solve degenerates
/// (it cannot for box 3).
[[nodiscard]] ChowConstants derive_constants();

}  // namespace tautgm::schubert
