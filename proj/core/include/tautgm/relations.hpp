#pragma once

#include <string>
#include <vector>

#include "tautgm/gmmodel.hpp"
#include "tautgm/tautring.hpp"

namespace tautgm::relations {

/// One defining identity of the tautological ring, checked two ways:
/// directly in the cohomology model (no rewriting involved) and by the
/// rewriting engine (normal form of lhs - rhs is zero).
struct RelationCheck {
    std::string name;
    bool in_model = false;
    bool in_rewrite = false;

    [[nodiscard]] bool passed() const noexcept { return in_model && in_rewrite; }
};

/// A per-factor relation satisfied by the Schubert image but not generated
/// by the listed defining identities. Terms are monomials o^e c^b h^a with
/// coprime integer coefficients, first coefficient positive.
struct ExtraRelation {
    struct Term {
        Int coeff;
        int o_pow = 0;
        int c_pow = 0;
        int h_pow = 0;
    };
    int codegree = 0;
    std::vector<Term> terms;
    std::string pretty;
    std::string note;
};

struct RelationsReport {
    std::vector<RelationCheck> checks;
    std::vector<ExtraRelation> extras;
    bool all_pass = false;  // every listed check passed; extras are findings, not failures
};

/// Checks every defining identity of the ring presentation in the given
/// model (both routes, see RelationCheck) and searches each per-factor
/// codegree 1..complex_dim for relations that hold in the Schubert image
/// but are not in the ideal generated by the listed per-factor identities.
/// Requires the Gr(2,5) model (box 3).
[[nodiscard]] RelationsReport verify_relations(const gmmodel::ModelParams& params);

}  // namespace tautgm::relations
