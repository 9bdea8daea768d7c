#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tautgm/errors.hpp"

namespace tautgm {

// The only scalar types in the engine. cpp_rational maintains
// gcd(|num|, den) = 1 and den >= 1 as class invariants, so every stored
// coefficient is automatically in lowest terms and comparisons are exact.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// "p/q" with the sign on the numerator, or just "p" when q = 1.
[[nodiscard]] std::string rat_to_string(const Rat& r);

/// Inverse of rat_to_string. Also accepts non-canonical input ("6/4" parses
/// to 3/2). Throws DomainError on malformed text or a zero denominator.
[[nodiscard]] Rat rat_from_string(std::string_view s);

namespace qlinalg {

/// Sparse matrix over Q. Row-major; no zero entries are ever stored.
class SparseMat {
public:
    SparseMat(std::size_t n_rows, std::size_t n_cols);

    [[nodiscard]] std::size_t n_rows() const noexcept { return n_rows_; }
    [[nodiscard]] std::size_t n_cols() const noexcept { return n_cols_; }
    [[nodiscard]] std::size_t n_entries() const noexcept;

    /// Stores v at (r, c); storing an exact zero erases the entry.
    void set(std::size_t r, std::size_t c, Rat v);
    void add(std::size_t r, std::size_t c, const Rat& v);
    [[nodiscard]] Rat get(std::size_t r, std::size_t c) const;

    /// Entries of row r keyed by column index, ascending.
    [[nodiscard]] const std::map<std::size_t, Rat>& row(std::size_t r) const;

    [[nodiscard]] SparseMat transposed() const;

    friend bool operator==(const SparseMat&, const SparseMat&) = default;

private:
    void check_index(std::size_t r, std::size_t c) const;

    std::size_t n_rows_;
    std::size_t n_cols_;
    std::vector<std::map<std::size_t, Rat>> rows_;
};

/// Exact rank over Q via fraction-free (Bareiss) elimination on
/// denominator-cleared rows. The pivot at each column is the first
/// structurally nonzero candidate in row order, so the result is
/// deterministic and independent of entry insertion order.
[[nodiscard]] std::size_t rank(const SparseMat& m);

/// Basis of the right kernel {v : M v = 0}: one vector per free column,
/// ordered by free-column index, with the free coordinate equal to 1.
/// The basis size always equals n_cols - rank(m).
[[nodiscard]] std::vector<std::vector<Rat>> kernel_basis(const SparseMat& m);

/// Inverse of a small dense matrix (Gram-type blocks, dimension << 100).
/// Throws DomainError if non-square or empty, InternalError if singular:
/// every block inverted by this engine is nonsingular by construction.
[[nodiscard]] std::vector<std::vector<Rat>> invert_dense(
    const std::vector<std::vector<Rat>>& a);

}  // namespace qlinalg
}  // namespace tautgm
