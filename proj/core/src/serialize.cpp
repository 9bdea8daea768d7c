#include "tautgm/serialize.hpp"

namespace tautgm::serialize {

Json rat_json(const Rat& r) { return rat_to_string(r); }

Json schub_json(const schubert::SchubElem& a) {
    Json out = Json::object();
    for (const auto& [p, c] : a.coeffs()) out[schubert::to_string(p)] = rat_json(c);
    return out;
}

Json constants_json(const schubert::ChowConstants& k) {
    Json out = Json::object();
    out["lambda"] = rat_json(k.lambda);
    out["mu"] = rat_json(k.mu);
    out["nu"] = rat_json(k.nu);
    out["h6"] = rat_json(k.h6);
    out["ch4"] = rat_json(k.ch4);
    out["c3"] = rat_json(k.c3);
    return out;
}

Json params_json(const gmmodel::ModelParams& p) {
    Json out = Json::object();
    out["complex_dim"] = p.complex_dim;
    out["cover_degree"] = p.cover_degree;
    out["b_prim"] = p.b_prim;
    out["box"] = p.box;
    return out;
}

Json monomial_json(const tautring::TautMonomial& mono) {
    Json factors = Json::array();
    for (const auto& p : mono.factors) factors.push_back("s" + schubert::to_string(p));
    Json tau = Json::array();
    for (const auto& [i, j] : mono.edges) tau.push_back(Json::array({i + 1, j + 1}));
    Json out = Json::object();
    out["factors"] = std::move(factors);
    out["tau"] = std::move(tau);
    return out;
}

Json taut_json(const tautring::TautElem& a) {
    Json terms = Json::array();
    for (const auto& [mono, c] : a.terms()) {
        Json term = monomial_json(mono);
        term["coeff"] = rat_json(c);
        terms.push_back(std::move(term));
    }
    Json out = Json::object();
    out["m"] = a.m();
    out["terms"] = std::move(terms);
    return out;
}

Json tensor_json(const gmmodel::TensorClass& a) {
    Json labels = Json::array();
    Json coeffs = Json::array();
    for (const auto& [key, c] : a.terms()) {
        Json tuple = Json::array();
        for (const std::uint16_t id : key) tuple.push_back(a.basis().label_name(id));
        labels.push_back(std::move(tuple));
        coeffs.push_back(rat_json(c));
    }
    Json out = Json::object();
    out["m"] = a.m();
    out["labels"] = std::move(labels);
    out["coeffs"] = std::move(coeffs);
    return out;
}

Json matrix_json(const qlinalg::SparseMat& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.n_rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.n_cols(); ++c) row.push_back(rat_json(m.get(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string matrix_csv(const qlinalg::SparseMat& m) {
    std::string out;
    for (std::size_t r = 0; r < m.n_rows(); ++r) {
        for (std::size_t c = 0; c < m.n_cols(); ++c) {
            if (c > 0) out += ",";
            out += rat_to_string(m.get(r, c));
        }
        out += "\n";
    }
    return out;
}

Json injectivity_json(const tautring::InjectivityResult& r) {
    Json out = Json::object();
    out["m"] = r.m;
    out["codim"] = r.codim;
    out["method"] = r.method == tautring::InjectivityMethod::gram ? "gram" : "model";
    out["monomials"] = r.monomials;
    out["rank"] = r.rank;
    out["injective"] = r.injective;
    return out;
}

Json relations_json(const relations::RelationsReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json check = Json::object();
        check["name"] = c.name;
        check["in_model"] = c.in_model;
        check["in_rewrite"] = c.in_rewrite;
        checks.push_back(std::move(check));
    }
    Json extras = Json::array();
    for (const auto& e : r.extras) {
        Json extra = Json::object();
        extra["codegree"] = e.codegree;
        extra["relation"] = e.pretty;
        extra["note"] = e.note;
        extras.push_back(std::move(extra));
    }
    Json out = Json::object();
    out["checks"] = std::move(checks);
    out["extra_relations"] = std::move(extras);
    out["all_pass"] = r.all_pass;
    return out;
}

namespace {

Json check_list_json(const std::vector<mck::CheckResult>& checks) {
    Json out = Json::array();
    for (const auto& c : checks) {
        Json item = Json::object();
        item["name"] = c.name;
        item["pass"] = c.pass;
        out.push_back(std::move(item));
    }
    return out;
}

}  // namespace

Json ck_json(const mck::CKReport& r) {
    Json out = Json::object();
    out["check"] = "ck";
    out["checks"] = check_list_json(r.checks);
    out["all_pass"] = r.all_pass;
    return out;
}

Json mck_json(const mck::MCKReport& r) {
    Json out = Json::object();
    out["check"] = "mck";
    out["triples_checked"] = r.triples_checked;
    out["failures"] = r.failures;
    out["control_nonzero"] = r.control_nonzero;
    out["all_pass"] = r.all_pass;
    return out;
}

Json involution_json(const mck::InvolutionReport& r) {
    Json out = Json::object();
    out["check"] = "involution_splitting";
    out["checks"] = check_list_json(r.checks);
    out["note"] = r.note;
    out["all_pass"] = r.all_pass;
    return out;
}

}  // namespace tautgm::serialize
