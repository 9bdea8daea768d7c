#include "tautgm/schubert.hpp"

#include <cctype>
#include <utility>

namespace tautgm::schubert {

void validate(const Partition2& p) {
    if (!(p.box >= p.lam1 && p.lam1 >= p.lam2 && p.lam2 >= 0))
        throw DomainError("Partition2: " + to_string(p) + " violates box >= l1 >= l2 >= 0 (box " +
                          std::to_string(p.box) + ")");
}

Partition2 dual(const Partition2& p) {
    validate(p);
    return Partition2{p.box - p.lam2, p.box - p.lam1, p.box};
}

bool contains(const Partition2& outer, const Partition2& inner) {
    if (outer.box != inner.box)
        throw DomainError("Partition2: box mismatch in containment test");
    return outer.lam1 >= inner.lam1 && outer.lam2 >= inner.lam2;
}

bool is_horizontal_strip(const Partition2& outer, const Partition2& inner) {
    if (!contains(outer, inner)) return false;
    // No two added boxes in one column <=> the second row of outer does not
    // reach past the first row of inner.
    return outer.lam2 <= inner.lam1;
}

std::vector<Partition2> all_partitions(int box) {
    if (box < 0) throw DomainError("all_partitions: negative box");
    std::vector<Partition2> out;
    out.reserve(static_cast<std::size_t>((box + 1) * (box + 2) / 2));
    for (int w = 0; w <= 2 * box; ++w)
        for (const Partition2& p : partitions_of_weight(box, w)) out.push_back(p);
    return out;
}

std::vector<Partition2> partitions_of_weight(int box, int weight) {
    if (box < 0) throw DomainError("partitions_of_weight: negative box");
    std::vector<Partition2> out;
    for (int lam1 = 0; lam1 <= box; ++lam1) {
        const int lam2 = weight - lam1;
        if (lam2 >= 0 && lam2 <= lam1) out.push_back(Partition2{lam1, lam2, box});
    }
    return out;
}

std::string to_string(const Partition2& p) {
    return "[" + std::to_string(p.lam1) + "," + std::to_string(p.lam2) + "]";
}

Partition2 partition_from_string(std::string_view s, int box) {
    const auto fail = [&] {
        throw DomainError("partition_from_string: expected \"[l1,l2]\", got '" + std::string(s) + "'");
    };
    if (s.size() < 5 || s.front() != '[' || s.back() != ']') fail();
    const std::string_view body = s.substr(1, s.size() - 2);
    const auto comma = body.find(',');
    if (comma == std::string_view::npos || body.find(',', comma + 1) != std::string_view::npos) fail();
    const auto parse_int = [&](std::string_view t) {
        if (t.empty()) fail();
        int value = 0;
        for (const char ch : t) {
            if (!std::isdigit(static_cast<unsigned char>(ch))) fail();
            value = value * 10 + (ch - '0');
            if (value > 1000) fail();
        }
        return value;
    };
    const Partition2 p{parse_int(body.substr(0, comma)), parse_int(body.substr(comma + 1)), box};
    validate(p);
    return p;
}

SchubElem::SchubElem(int box) : box_(box) {
    if (box < 0) throw DomainError("SchubElem: negative box");
}

SchubElem SchubElem::unit(int box) { return single(Partition2{0, 0, box}); }

SchubElem SchubElem::single(const Partition2& p, Rat coeff) {
    validate(p);
    SchubElem e(p.box);
    e.add_term(p, coeff);
    return e;
}

Rat SchubElem::coeff(const Partition2& p) const {
    const auto it = coeffs_.find(p);
    return it == coeffs_.end() ? Rat(0) : it->second;
}

bool SchubElem::is_homogeneous_of_weight(int weight) const {
    for (const auto& [p, c] : coeffs_)
        if (p.weight() != weight) return false;
    return true;
}

void SchubElem::add_term(const Partition2& p, const Rat& coeff) {
    validate(p);
    if (p.box != box_) throw DomainError("SchubElem: box mismatch in add_term");
    if (coeff == 0) return;
    auto [it, inserted] = coeffs_.emplace(p, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) coeffs_.erase(it);
    }
}

SchubElem& SchubElem::operator+=(const SchubElem& rhs) {
    if (box_ != rhs.box_) throw DomainError("SchubElem: box mismatch in +");
    for (const auto& [p, c] : rhs.coeffs_) add_term(p, c);
    return *this;
}

SchubElem& SchubElem::operator-=(const SchubElem& rhs) {
    if (box_ != rhs.box_) throw DomainError("SchubElem: box mismatch in -");
    for (const auto& [p, c] : rhs.coeffs_) add_term(p, -c);
    return *this;
}

SchubElem& SchubElem::operator*=(const Rat& scalar) {
    if (scalar == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [p, c] : coeffs_) c *= scalar;
    return *this;
}

SchubElem pieri(int p, const Partition2& lam) {
    validate(lam);
    if (p < 0 || p > lam.box)
        throw DomainError("pieri: p = " + std::to_string(p) + " outside [0, box]");
    SchubElem out(lam.box);
    for (int a = 0; a <= p; ++a) {
        const Partition2 mu{lam.lam1 + p - a, lam.lam2 + a, lam.box};
        if (mu.lam1 <= mu.box && mu.lam2 <= mu.lam1 && is_horizontal_strip(mu, lam))
            out.add_term(mu, Rat(1));
    }
    return out;
}

namespace {

// a * sigma_p, extended bilinearly; sigma_p with p > box is zero.
SchubElem mult_special(const SchubElem& a, int p) {
    SchubElem out(a.box());
    if (p > a.box()) return out;
    for (const auto& [lam, c] : a.coeffs()) {
        const SchubElem piece = pieri(p, lam);
        for (const auto& [mu, one] : piece.coeffs()) out.add_term(mu, c * one);
    }
    return out;
}

SchubElem mult_basis(const SchubElem& a, const Partition2& mu) {
    // Giambelli for two rows: sigma_mu = s_{mu1} s_{mu2} - s_{mu1+1} s_{mu2-1},
    // with s_q = 0 for q < 0 or q > box.
    SchubElem out = mult_special(mult_special(a, mu.lam2), mu.lam1);
    if (mu.lam2 >= 1 && mu.lam1 + 1 <= mu.box)
        out -= mult_special(mult_special(a, mu.lam2 - 1), mu.lam1 + 1);
    return out;
}

}  // namespace

SchubElem mult(const SchubElem& a, const SchubElem& b) {
    if (a.box() != b.box()) throw DomainError("mult: box mismatch");
    SchubElem out(a.box());
    for (const auto& [mu, c] : b.coeffs()) {
        SchubElem piece = mult_basis(a, mu);
        piece *= c;
        out += piece;
    }
    return out;
}

Rat degree(const SchubElem& a) {
    return a.coeff(Partition2{a.box(), a.box(), a.box()});
}

ChowConstants derive_constants() {
    constexpr int box = 3;
    constexpr int cover_degree = 2;
    const SchubElem h = SchubElem::single(Partition2{1, 0, box});
    const SchubElem c = SchubElem::single(Partition2{2, 0, box});

    const SchubElem h2 = mult(h, h);
    const SchubElem h4 = mult(h2, h2);
    const SchubElem ch2 = mult(c, h2);
    const SchubElem c2 = mult(c, c);

    // Solve c2 = lambda * ch2 + mu * h4 in CH^4, coordinates over the
    // weight-4 partitions (exactly two of them for box 3).
    const std::vector<Partition2> basis4 = partitions_of_weight(box, 4);
    if (basis4.size() != 2) throw InternalError("derive_constants: CH^4 rank is not 2");
    const Rat a11 = ch2.coeff(basis4[0]), a12 = h4.coeff(basis4[0]), b1 = c2.coeff(basis4[0]);
    const Rat a21 = ch2.coeff(basis4[1]), a22 = h4.coeff(basis4[1]), b2 = c2.coeff(basis4[1]);
    const Rat det = a11 * a22 - a12 * a21;
    if (det == 0) throw InternalError("derive_constants: singular CH^4 solve");

    ChowConstants out;
    out.lambda = (b1 * a22 - b2 * a12) / det;
    out.mu = (a11 * b2 - a21 * b1) / det;
    out.h6 = Rat(cover_degree) * degree(mult(h2, h4));
    out.ch4 = Rat(cover_degree) * degree(mult(c, h4));
    out.c3 = Rat(cover_degree) * degree(mult(c2, c));
    if (out.ch4 == 0) throw InternalError("derive_constants: ch4 degree vanished");
    out.nu = out.h6 / out.ch4;
    return out;
}

}  // namespace tautgm::schubert
