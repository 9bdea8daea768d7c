/// Tests for correspondences and the Chow-Kuenneth machinery: composition
/// axioms, the projector construction, the graded-multiplication check, the
/// involution splitting and the bigraded projections. The factor-wise
/// assembly used by verify_mck is cross-checked here against the literal
/// composite pi^k o smalldiag o (pi^i x pi^j) built from pullbacks on X^6.
/// Fault-injected decompositions must fail with the exact expected shape.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tautgm/errors.hpp"
#include "tautgm/mck.hpp"
#include "tautgm/tautring.hpp"

using tautgm::Rat;
using namespace tautgm::mck;
using tautgm::gmmodel::ModelParams;
using tautgm::gmmodel::TensorClass;
using tautgm::gmmodel::XBasis;
using tautgm::schubert::Partition2;

namespace {

std::shared_ptr<const XBasis> default_basis() {
    static const auto b = std::make_shared<const XBasis>(ModelParams{});
    return b;
}

const CKDecomposition& default_ck() {
    static const CKDecomposition d = build_ck(default_basis());
    return d;
}

TensorClass random_class(std::mt19937& rng, const std::shared_ptr<const XBasis>& basis, int m,
                         int n_terms) {
    std::uniform_int_distribution<int> id(0, static_cast<int>(basis->size()) - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    TensorClass out(basis, m);
    for (int t = 0; t < n_terms; ++t) {
        TensorClass::Key key;
        for (int f = 0; f < m; ++f) key.push_back(static_cast<std::uint16_t>(id(rng)));
        out.add_term(key, Rat(coeff(rng)));
    }
    return out;
}

bool has_failure(const CKReport& report, const std::string& name, bool expect_pass) {
    for (const auto& check : report.checks)
        if (check.name == name) return check.pass == expect_pass;
    return false;  // absent names count as a test failure either way
}

// The class h^2 tensor h^3 on X^2, used as the injected fault.
TensorClass fault_class(const std::shared_ptr<const XBasis>& basis) {
    using tautgm::tautring::Gen;
    using tautgm::tautring::Word;
    return tautgm::tautring::evaluate_unreduced(
        basis, 2, Word{Gen::h(0), Gen::h(0), Gen::h(1), Gen::h(1), Gen::h(1)});
}

}  // namespace

TEST_CASE("composition axioms") {
    const auto basis = default_basis();
    const Correspondence delta = tautgm::gmmodel::diagonal(basis);
    std::mt19937 rng(48109);
    for (int iter = 0; iter < 15; ++iter) {
        const Correspondence a = random_class(rng, basis, 2, 4);
        const Correspondence b = random_class(rng, basis, 2, 4);
        const Correspondence c = random_class(rng, basis, 2, 4);
        CHECK(compose(compose(c, b), a) == compose(c, compose(b, a)));
        CHECK(compose(a, delta) == a);
        CHECK(compose(delta, a) == a);
        // Anti-homomorphism.
        CHECK(transpose(compose(b, a)) == compose(transpose(a), transpose(b)));
        CHECK(transpose(transpose(a)) == a);
        // Action is functorial in composition.
        const TensorClass x = random_class(rng, basis, 1, 3);
        CHECK(action(compose(b, a), x) == action(b, action(a, x)));
        CHECK(action(delta, x) == x);
    }
}

TEST_CASE("projector construction") {
    const auto basis = default_basis();
    const CKDecomposition& d = default_ck();
    REQUIRE(d.pi.size() == 13);

    for (int deg = 1; deg < 13; deg += 2) CHECK(d.pi[static_cast<std::size_t>(deg)].is_zero());

    // pi^0 is dual(1) tensor 1 = o tensor 1.
    REQUIRE(d.pi[0].terms().size() == 1);
    CHECK(d.pi[0].coeff({basis->top_alg_id(), basis->unit_id()}) == Rat(1, 2));
    CHECK(d.pi[12].coeff({basis->unit_id(), basis->top_alg_id()}) == Rat(1, 2));

    // The middle projector, built as a remainder, equals the dual-basis sum.
    Correspondence direct(basis, 2);
    for (std::uint16_t id = 0; id < basis->size(); ++id) {
        if (basis->degree(id) != 6) continue;
        for (const auto& [k, c] : basis->dual_basis(id)) direct.add_term({k, id}, c);
    }
    CHECK(d.pi[6] == direct);

    Correspondence prim(basis, 2);
    for (int a = 1; a <= 22; ++a) prim.add_term({basis->prim_id(a), basis->prim_id(a)}, Rat(1));
    CHECK(d.pi6_prim == prim);
    Correspondence mid = d.pi6_taut;
    mid += d.pi6_prim;
    CHECK(d.pi[6] == mid);
}

TEST_CASE("decomposition passes its own verifier") {
    const CKReport report = verify_ck(default_ck());
    CHECK(report.all_pass);
    CHECK(report.checks.size() == 88);
    for (const auto& check : report.checks) CHECK(check.pass);
}

TEST_CASE("graded multiplication holds with zero failures") {
    const MCKReport report = verify_mck(default_ck());
    CHECK(report.all_pass);
    CHECK(report.triples_checked == 469);
    CHECK(report.failures.empty());
    CHECK(report.control_nonzero);
}

TEST_CASE("graded multiplication is parametric in the primitive rank") {
    for (const int b : {1, 2, 3}) {
        ModelParams params;
        params.b_prim = b;
        const auto basis = std::make_shared<const XBasis>(params);
        const CKDecomposition d = build_ck(basis);
        CHECK(verify_ck(d).all_pass);
        CHECK(verify_mck(d).all_pass);
        CHECK(verify_involution_splitting(d).all_pass);
    }
}

TEST_CASE("thread count does not change the verdict") {
    const MCKReport one = verify_mck(default_ck(), 1);
    const MCKReport four = verify_mck(default_ck(), 4);
    CHECK(one.triples_checked == four.triples_checked);
    CHECK(one.failures == four.failures);
    CHECK(one.all_pass == four.all_pass);
}

TEST_CASE("factor-wise gamma equals the literal composite") {
    // Rebuild Gamma_ijk two ways. Factor-wise: push each small-diagonal
    // term through per-factor actions (the verify_mck strategy). Literal:
    // pi^k o smalldiag o (pi^i x pi^j) as one pull-multiply-push on X^6
    // with slots (src0, src1, mid0, mid1, product, target).
    const auto basis = default_basis();
    const CKDecomposition& d = default_ck();
    const TensorClass sd = tautgm::gmmodel::small_diagonal(basis);

    const auto factorwise = [&](const Correspondence& pi_i, const Correspondence& pi_j,
                                const Correspondence& pi_k) {
        TensorClass out(basis, 3);
        const Correspondence ti = transpose(pi_i);
        const Correspondence tj = transpose(pi_j);
        for (const auto& [key, t] : sd.terms()) {
            const TensorClass u = action(ti, tautgm::gmmodel::basis_class(basis, {key[0]}));
            const TensorClass v = action(tj, tautgm::gmmodel::basis_class(basis, {key[1]}));
            const TensorClass w = action(pi_k, tautgm::gmmodel::basis_class(basis, {key[2]}));
            for (const auto& [ku, cu] : u.terms())
                for (const auto& [kv, cv] : v.terms())
                    for (const auto& [kw, cw] : w.terms())
                        out.add_term({ku[0], kv[0], kw[0]}, t * cu * cv * cw);
        }
        return out;
    };
    const auto literal = [&](const Correspondence& pi_i, const Correspondence& pi_j,
                             const Correspondence& pi_k) {
        using tautgm::gmmodel::mult_model;
        using tautgm::gmmodel::pullback;
        const TensorClass prod = mult_model(
            mult_model(mult_model(pullback(pi_i, 6, {0, 2}), pullback(pi_j, 6, {1, 3})),
                       pullback(sd, 6, {2, 3, 4})),
            pullback(pi_k, 6, {4, 5}));
        return tautgm::gmmodel::pushforward(prod, {0, 1, 5});
    };

    struct Triple {
        const Correspondence* i;
        const Correspondence* j;
        const Correspondence* k;
        bool vanishes;
    };
    const std::vector<Triple> samples = {
        {&d.pi[2], &d.pi[2], &d.pi[4], false},       // multiplication survives
        {&d.pi[2], &d.pi[2], &d.pi6_taut, true},     // off-grade
        {&d.pi6_prim, &d.pi6_prim, &d.pi[12], false},// primitive pairing
        {&d.pi6_prim, &d.pi6_prim, &d.pi6_prim, true},
        {&d.pi[0], &d.pi6_prim, &d.pi6_prim, false},
    };
    for (const auto& s : samples) {
        const TensorClass fw = factorwise(*s.i, *s.j, *s.k);
        const TensorClass lit = literal(*s.i, *s.j, *s.k);
        CHECK(fw == lit);
        CHECK(fw.is_zero() == s.vanishes);
    }
}

TEST_CASE("injected fault fails exactly as designed") {
    const auto basis = default_basis();
    CKDecomposition d = build_ck(basis);
    d.pi[2] += fault_class(basis);

    const CKReport report = verify_ck(d);
    CHECK_FALSE(report.all_pass);
    // The perturbation composes to zero against itself and dies on the
    // right of pi^2, so idempotence fails by reproducing the clean pi^2.
    CHECK(has_failure(report, "pi^2 idempotent", false));
    // One-sided orthogonality: the fault feeds degree-6 output into the
    // tautological middle projector and accepts degree-8 input from pi^8.
    CHECK(has_failure(report, "pi^6t o pi^2 = 0", false));
    CHECK(has_failure(report, "pi^2 o pi^8 = 0", false));
    CHECK(has_failure(report, "pi^2 o pi^6t = 0", true));
    CHECK(has_failure(report, "pi^6p o pi^2 = 0", true));
    CHECK(has_failure(report, "sum of projectors = diagonal", false));
    CHECK(has_failure(report, "transpose(pi^2) = pi^10", false));
    CHECK(has_failure(report, "transpose(pi^10) = pi^2", false));
    CHECK(has_failure(report, "pi^2 graded action", false));
    // Untouched projectors keep passing.
    CHECK(has_failure(report, "pi^0 idempotent", true));
    CHECK(has_failure(report, "pi^6p idempotent", true));

    const MCKReport mck_report = verify_mck(d);
    CHECK_FALSE(mck_report.all_pass);
    CHECK_FALSE(mck_report.failures.empty());
    CHECK(mck_report.control_nonzero);
}

TEST_CASE("scaled primitive projector is caught") {
    const auto basis = default_basis();
    CKDecomposition d = build_ck(basis);
    d.pi6_prim *= Rat(2);

    const CKReport report = verify_ck(d);
    CHECK_FALSE(report.all_pass);
    CHECK(has_failure(report, "pi^6p idempotent", false));
    CHECK(has_failure(report, "pi^6 = taut + prim", false));
    CHECK(has_failure(report, "pi^6p graded action", false));
    CHECK(has_failure(report, "pi^6 idempotent", true));
}

TEST_CASE("involution splitting") {
    const InvolutionReport report = verify_involution_splitting(default_ck());
    CHECK(report.all_pass);
    CHECK(report.checks.size() == 6);
    CHECK(has_failure(CKReport{report.checks, report.all_pass},
                      "(diagonal - graph)/2 = pi^6_prim", true));
    CHECK(report.note.find("cohomological") != std::string::npos);
}

TEST_CASE("bigraded projections") {
    const auto basis = default_basis();
    const CKDecomposition& d = default_ck();

    const TensorClass h = tautgm::gmmodel::basis_class(basis, {basis->alg_id(Partition2{1, 0, 3})});
    CHECK(bigraded_piece(d, 1, 0, h) == h);   // h sits in CH^1 with j = 0
    CHECK(bigraded_piece(d, 1, 2, h).is_zero());
    const TensorClass e = tautgm::gmmodel::basis_class(basis, {basis->prim_id(7)});
    CHECK(bigraded_piece(d, 3, 0, e) == e);   // middle degree
    CHECK(bigraded_piece(d, 2, 0, e).is_zero());
    const TensorClass one = tautgm::gmmodel::unit_class(basis, 1);
    CHECK(bigraded_piece(d, 1, 2, one) == one);  // pi^0

    CHECK_THROWS_AS((void)bigraded_piece(d, 7, 0, h), tautgm::DomainError);
    CHECK_THROWS_AS((void)bigraded_piece(d, 0, 1, h), tautgm::DomainError);
}
