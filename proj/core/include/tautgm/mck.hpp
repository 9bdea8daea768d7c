#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tautgm/gmmodel.hpp"

namespace tautgm::mck {

/// A correspondence X -> X is a class on X^2; first factor is the source.
/// Projector-valued instances are homogeneous of total degree 2*complex_dim.
using Correspondence = gmmodel::TensorClass;

/// beta o alpha: pushforward over the middle factor of the pullback product
/// on X^3. Bilinear, associative; the diagonal is a two-sided unit.
[[nodiscard]] Correspondence compose(const Correspondence& beta, const Correspondence& alpha);

/// Swaps the two tensor factors (no signs: all model classes are even).
[[nodiscard]] Correspondence transpose(const Correspondence& alpha);

/// alpha_*(x): pushforward to the second factor of (x tensor 1) * alpha.
[[nodiscard]] gmmodel::TensorClass action(const Correspondence& alpha,
                                          const gmmodel::TensorClass& x);

/// Chow-Kuenneth data: pi[d] for d = 0..2*complex_dim (odd entries zero),
/// with the middle projector split into a decomposable part and the
/// primitive part sum_a e_a tensor e_a.
struct CKDecomposition {
    std::shared_ptr<const gmmodel::XBasis> basis;
    std::vector<Correspondence> pi;
    Correspondence pi6_taut;
    Correspondence pi6_prim;
};

/// Builds the decomposition: pi^d for d < 6 from dual bases (dual(b) tensor
/// b over the degree-d basis), pi^d = transpose(pi^{12-d}) for d > 6, and
/// pi^6 as the remainder diagonal - sum. pi6_prim = sum_a e_a tensor e_a.
[[nodiscard]] CKDecomposition build_ck(std::shared_ptr<const gmmodel::XBasis> basis);

struct CheckResult {
    std::string name;
    bool pass = false;
};

struct CKReport {
    std::vector<CheckResult> checks;
    bool all_pass = false;
};

/// Checks idempotence, pairwise orthogonality (taut/prim pieces included),
/// completeness, transpose duality, graded action on every basis element,
/// and the action ranks (24 for pi^6, 22 for the primitive part, total 32).
[[nodiscard]] CKReport verify_ck(const CKDecomposition& d);

struct MCKReport {
    std::size_t triples_checked = 0;        // triples with deg i + deg j != deg k
    std::vector<std::string> failures;      // names of nonvanishing ones
    bool control_nonzero = false;           // Gamma(2,2,4) != 0 guards against vacuity
    bool all_pass = false;
};

/// For every ordered triple of projector pieces (pi^6 split taut/prim),
/// computes Gamma_ijk = pi^k o smalldiagonal o (pi^i x pi^j) and asserts it
/// vanishes whenever deg i + deg j != deg k. The triple loop parallelizes
/// with deterministic aggregation (threads <= 0 means hardware concurrency).
[[nodiscard]] MCKReport verify_mck(const CKDecomposition& d, int threads = 1);

struct InvolutionReport {
    std::vector<CheckResult> checks;
    bool all_pass = false;
    std::string note;
};

/// Builds the graph of the covering involution and checks: it squares to
/// the diagonal, acts as the involution, (diagonal - graph)/2 equals
/// pi6_prim exactly, (diagonal + graph)/2 acts with the algebraic rank,
/// products of primitive classes are invariant, and diagonal * c is
/// decomposable (the last at the cohomological level only).
[[nodiscard]] InvolutionReport verify_involution_splitting(const CKDecomposition& d);

/// (pi^{2i-j})_*(x). Throws DomainError unless 0 <= 2i - j <= 2*complex_dim.
[[nodiscard]] gmmodel::TensorClass bigraded_piece(const CKDecomposition& d, int i, int j,
                                                  const gmmodel::TensorClass& x);

}  // namespace tautgm::mck
