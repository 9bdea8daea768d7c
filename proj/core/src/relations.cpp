#include "tautgm/relations.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "tautgm/schubert.hpp"

namespace tautgm::relations {

namespace {

using schubert::Partition2;
using schubert::SchubElem;
using tautring::Gen;
using tautring::GenExpr;
using tautring::Word;

// Monomial o^e c^b h^a of the free algebra on the per-factor generators,
// degree 6e + 2b + a. Polynomials are sparse maps keyed by {e, b, a}.
using MonoKey = std::array<int, 3>;
using FreePoly = std::map<MonoKey, Rat>;

constexpr int kODeg = 6;
constexpr int kCDeg = 2;

std::vector<MonoKey> monomials_of_degree(int d) {
    std::vector<MonoKey> out;
    for (int e = 0; kODeg * e <= d; ++e)
        for (int b = 0; kODeg * e + kCDeg * b <= d; ++b)
            out.push_back({e, b, d - kODeg * e - kCDeg * b});
    return out;
}

SchubElem eval_monomial(const MonoKey& mono, int box, int cover_degree) {
    const auto [e, b, a] = mono;
    SchubElem out = SchubElem::unit(box);
    const SchubElem h = SchubElem::single(Partition2{1, 0, box});
    const SchubElem c = SchubElem::single(Partition2{2, 0, box});
    const SchubElem o =
        SchubElem::single(Partition2{box, box, box}, Rat(1) / Rat(cover_degree));
    for (int i = 0; i < a; ++i) out = schubert::mult(out, h);
    for (int i = 0; i < b; ++i) out = schubert::mult(out, c);
    for (int i = 0; i < e; ++i) out = schubert::mult(out, o);
    return out;
}

std::vector<FreePoly> listed_generators(const schubert::ChowConstants& k) {
    std::vector<FreePoly> gens;
    gens.push_back({{{1, 0, 1}, Rat(1)}});                                        // h*o
    gens.push_back({{{1, 1, 0}, Rat(1)}});                                        // c*o
    gens.push_back({{{0, 4, 0}, Rat(1)}});                                        // c^4
    gens.push_back({{{0, 2, 0}, Rat(1)}, {{0, 1, 2}, -k.lambda}, {{0, 0, 4}, -k.mu}});
    gens.push_back({{{0, 0, 6}, Rat(1)}, {{0, 1, 4}, -k.nu}});                    // h^6 - nu*c*h^4
    gens.push_back({{{0, 0, 6}, Rat(1)}, {{1, 0, 0}, -k.h6}});                    // h^6 - h6*o
    return gens;
}

int poly_degree(const FreePoly& p) {
    const auto& [e, b, a] = p.begin()->first;
    return kODeg * e + kCDeg * b + a;
}

std::string mono_to_string(const MonoKey& mono) {
    const auto [e, b, a] = mono;
    std::string out;
    const auto append = [&](const char* gen, int pow) {
        if (pow == 0) return;
        if (!out.empty()) out += "*";
        out += gen;
        if (pow > 1) out += "^" + std::to_string(pow);
    };
    append("o", e);
    append("c", b);
    append("h", a);
    return out.empty() ? "1" : out;
}

std::string combo_to_string(const std::vector<ExtraRelation::Term>& terms) {
    std::string out;
    for (const auto& t : terms) {
        const bool negative = t.coeff < 0;
        const Int mag = negative ? Int(-t.coeff) : t.coeff;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        const std::string mono = mono_to_string({t.o_pow, t.c_pow, t.h_pow});
        if (mag != 1 || mono == "1") {
            out += mag.str();
            if (mono != "1") out += "*";
        }
        if (mono != "1") out += mono;
    }
    return out;
}

RelationCheck run_check(const gmmodel::ModelParams& params,
                        std::shared_ptr<const gmmodel::XBasis> basis, std::string name, int m,
                        const GenExpr& difference) {
    RelationCheck check;
    check.name = std::move(name);
    check.in_model = tautring::evaluate_unreduced(basis, m, difference).is_zero();
    check.in_rewrite = tautring::normalize(params, m, difference).is_zero();
    return check;
}

}  // namespace

RelationsReport verify_relations(const gmmodel::ModelParams& params) {
    params.validate();
    if (params.box != 3)
        throw DomainError("verify_relations: presentation constants require the Gr(2,5) model");
    const schubert::ChowConstants k = schubert::derive_constants();
    const auto basis = std::make_shared<const gmmodel::XBasis>(params);

    RelationsReport report;
    const Gen o1 = Gen::o(0), h1 = Gen::h(0), c1 = Gen::c(0);
    const Gen o2 = Gen::o(1);
    const Gen t12 = Gen::tau(0, 1), t13 = Gen::tau(0, 2), t23 = Gen::tau(1, 2);

    report.checks.push_back(run_check(params, basis, "h_1*o_1 = 0", 1, {{Rat(1), {h1, o1}}}));
    report.checks.push_back(run_check(params, basis, "c_1*o_1 = 0", 1, {{Rat(1), {c1, o1}}}));
    report.checks.push_back(run_check(params, basis, "c_1^4 = 0", 1, {{Rat(1), {c1, c1, c1, c1}}}));
    report.checks.push_back(run_check(
        params, basis, "c_1^2 = lambda*c_1*h_1^2 + mu*h_1^4", 1,
        {{Rat(1), {c1, c1}}, {-k.lambda, {c1, h1, h1}}, {-k.mu, {h1, h1, h1, h1}}}));
    report.checks.push_back(
        run_check(params, basis, "h_1^6 = nu*c_1*h_1^4", 1,
                  {{Rat(1), {h1, h1, h1, h1, h1, h1}}, {-k.nu, {c1, h1, h1, h1, h1}}}));
    report.checks.push_back(run_check(params, basis, "h_1^6 = 10*o_1", 1,
                                      {{Rat(1), {h1, h1, h1, h1, h1, h1}}, {-k.h6, {o1}}}));
    report.checks.push_back(
        run_check(params, basis, "tau_12*o_1 = 0", 2, {{Rat(1), {t12, o1}}}));
    report.checks.push_back(
        run_check(params, basis, "tau_12*h_1 = 0", 2, {{Rat(1), {t12, h1}}}));
    report.checks.push_back(
        run_check(params, basis, "tau_12*c_1 = 0", 2, {{Rat(1), {t12, c1}}}));
    report.checks.push_back(
        run_check(params, basis, "tau_12^2 = b_prim*o_1*o_2", 2,
                  {{Rat(1), {t12, t12}}, {-Rat(params.b_prim), {o1, o2}}}));
    report.checks.push_back(
        run_check(params, basis, "tau_12*tau_13 = tau_23*o_1", 3,
                  {{Rat(1), {t12, t13}}, {Rat(-1), {t23, o1}}}));

    // Per-factor discovery: in each codegree, compare the kernel of the
    // evaluation map on free monomials with the span of listed-relation
    // multiples. Kernel vectors outside that span are extra relations.
    const std::vector<FreePoly> gens = listed_generators(k);
    for (int d = 1; d <= params.complex_dim; ++d) {
        const std::vector<MonoKey> mons = monomials_of_degree(d);
        std::map<MonoKey, std::size_t> col_of;
        for (std::size_t j = 0; j < mons.size(); ++j) col_of.emplace(mons[j], j);

        const std::vector<Partition2> parts = schubert::partitions_of_weight(params.box, d);
        qlinalg::SparseMat eval_mat(parts.size(), mons.size());
        for (std::size_t j = 0; j < mons.size(); ++j) {
            const SchubElem v = eval_monomial(mons[j], params.box, params.cover_degree);
            for (std::size_t p = 0; p < parts.size(); ++p) {
                const Rat coeff = v.coeff(parts[p]);
                if (coeff != 0) eval_mat.set(p, j, coeff);
            }
        }
        const std::vector<std::vector<Rat>> kernel = qlinalg::kernel_basis(eval_mat);
        if (kernel.empty()) continue;

        std::vector<FreePoly> span_rows;
        for (const FreePoly& g : gens) {
            const int dg = poly_degree(g);
            if (dg > d) continue;
            for (const MonoKey& shift : monomials_of_degree(d - dg)) {
                FreePoly row;
                for (const auto& [key, coeff] : g) {
                    const MonoKey shifted{key[0] + shift[0], key[1] + shift[1],
                                          key[2] + shift[2]};
                    row[shifted] += coeff;
                }
                // Listed relations hold in the image, so every multiple
                // must land in the kernel.
                SchubElem img = SchubElem(params.box);
                for (const auto& [key, coeff] : row)
                    img += eval_monomial(key, params.box, params.cover_degree) * coeff;
                if (!img.is_zero())
                    throw InternalError("verify_relations: listed relation multiple is nonzero");
                span_rows.push_back(std::move(row));
            }
        }

        const auto build_span = [&](const std::vector<std::vector<Rat>>& extra_vecs) {
            qlinalg::SparseMat mat(span_rows.size() + extra_vecs.size(), mons.size());
            for (std::size_t r = 0; r < span_rows.size(); ++r)
                for (const auto& [key, coeff] : span_rows[r]) mat.set(r, col_of.at(key), coeff);
            for (std::size_t v = 0; v < extra_vecs.size(); ++v)
                for (std::size_t j = 0; j < mons.size(); ++j)
                    if (extra_vecs[v][j] != 0) mat.set(span_rows.size() + v, j, extra_vecs[v][j]);
            return mat;
        };

        std::vector<std::vector<Rat>> accepted;
        std::size_t span_rank = qlinalg::rank(build_span(accepted));
        for (const std::vector<Rat>& vec : kernel) {
            accepted.push_back(vec);
            const std::size_t grown = qlinalg::rank(build_span(accepted));
            if (grown == span_rank) {
                accepted.pop_back();
                continue;
            }
            span_rank = grown;

            Int scale = 1;
            for (const Rat& x : vec)
                scale = boost::multiprecision::lcm(scale, Int(boost::multiprecision::denominator(x)));
            std::vector<Int> ints(vec.size());
            Int content = 0;
            for (std::size_t j = 0; j < vec.size(); ++j) {
                ints[j] = Int(boost::multiprecision::numerator(vec[j]) * scale /
                              boost::multiprecision::denominator(vec[j]));
                content = boost::multiprecision::gcd(content, ints[j]);
            }
            int sign = 0;
            ExtraRelation extra;
            extra.codegree = d;
            for (std::size_t j = 0; j < vec.size(); ++j) {
                if (ints[j] == 0) continue;
                if (sign == 0) sign = ints[j] > 0 ? 1 : -1;
                extra.terms.push_back(
                    {ints[j] * sign / content, mons[j][0], mons[j][1], mons[j][2]});
            }
            extra.pretty = combo_to_string(extra.terms) + " = 0";
            extra.note = "not implied by the listed per-factor relations";
            report.extras.push_back(std::move(extra));
        }
    }

    report.all_pass = std::all_of(report.checks.begin(), report.checks.end(),
                                  [](const RelationCheck& c) { return c.passed(); });
    return report;
}

}  // namespace tautgm::relations
