// taut-gm: batch verification reports for the tautological ring and
// Chow-Kuenneth projector structure of a GM sixfold model. Every command
// emits one machine-readable report (JSON, or CSV for matrices and rank
// tables) and the exit code states the verdict: 0 all asserted checks pass,
// 1 a check failed, 2 usage error, 3 capacity exceeded.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "tautgm/errors.hpp"
#include "tautgm/gmmodel.hpp"
#include "tautgm/mck.hpp"
#include "tautgm/parallel.hpp"
#include "tautgm/relations.hpp"
#include "tautgm/schubert.hpp"
#include "tautgm/serialize.hpp"
#include "tautgm/tautring.hpp"
#include "tautgm/version.hpp"

namespace {

using tautgm::CapacityError;
using tautgm::DomainError;
using Json = tautgm::serialize::Json;

constexpr int kExitPass = 0;
constexpr int kExitCheckFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

// The largest Kimura index whose model evaluation ((b+1)! monomials, each
// expanding to b^{b+1} basis tuples) fits in memory.
constexpr int kKimuraEvalCap = 4;

struct RunConfig {
    std::string command;
    std::optional<int> m;
    std::optional<int> codim;
    int b_prim = 22;
    std::string method = "gram";
    std::string out_path;
    std::string format = "json";
    int threads = 0;
};

struct Report {
    Json body;
    std::string csv;
    bool all_pass = true;
};

int env_threads() {
    const char* raw = std::getenv("TAUT_GM_THREADS");
    if (raw == nullptr || *raw == '\0') return 0;
    char* end = nullptr;
    const long v = std::strtol(raw, &end, 10);
    if (end == nullptr || *end != '\0' || v < 0 || v > 4096)
        throw DomainError("TAUT_GM_THREADS must be an integer in [0, 4096]");
    return static_cast<int>(v);
}

tautgm::gmmodel::ModelParams model_params(const RunConfig& cfg) {
    tautgm::gmmodel::ModelParams params;
    params.b_prim = cfg.b_prim;
    params.validate();
    return params;
}

void require_json(const RunConfig& cfg) {
    if (cfg.format != "json")
        throw DomainError("command '" + cfg.command +
                          "' supports only --format json (CSV is for matrices and rank tables)");
}

Report run_constants(const RunConfig& cfg) {
    require_json(cfg);
    Report report;
    report.body = tautgm::serialize::constants_json(tautgm::schubert::derive_constants());
    return report;
}

Report run_betti(const RunConfig& cfg) {
    const auto params = model_params(cfg);
    const auto basis = std::make_shared<const tautgm::gmmodel::XBasis>(params);
    const std::vector<std::size_t> betti = basis->betti();

    const auto delta = tautgm::gmmodel::diagonal(basis);
    const tautgm::Rat euler_from_diagonal =
        tautgm::gmmodel::integrate(tautgm::gmmodel::mult_model(delta, delta));
    std::size_t total = 0;
    for (const std::size_t b : betti) total += b;

    Report report;
    report.all_pass = euler_from_diagonal == tautgm::Rat(static_cast<unsigned long>(total));
    report.body["betti"] = betti;
    report.body["euler"] = total;
    report.body["euler_from_diagonal"] = tautgm::serialize::rat_json(euler_from_diagonal);
    report.body["consistent"] = report.all_pass;
    if (cfg.format == "csv") {
        report.csv = "degree,rank\n";
        for (std::size_t d = 0; d < betti.size(); ++d)
            report.csv += std::to_string(d) + "," + std::to_string(betti[d]) + "\n";
    }
    return report;
}

Report run_verify_relations(const RunConfig& cfg) {
    require_json(cfg);
    const auto report_data = tautgm::relations::verify_relations(model_params(cfg));
    Report report;
    report.body = tautgm::serialize::relations_json(report_data);
    report.all_pass = report_data.all_pass;
    return report;
}

tautgm::tautring::InjectivityMethod parse_method(const std::string& name) {
    if (name == "gram") return tautgm::tautring::InjectivityMethod::gram;
    if (name == "model") return tautgm::tautring::InjectivityMethod::model;
    throw DomainError("--method must be 'gram' or 'model'");
}

Report run_injectivity(const RunConfig& cfg) {
    if (!cfg.m) throw DomainError("injectivity requires --m");
    const auto params = model_params(cfg);
    const auto method = parse_method(cfg.method);

    std::vector<int> codims;
    if (cfg.codim) {
        codims.push_back(*cfg.codim);
    } else {
        for (int d = 0; d <= params.complex_dim * *cfg.m; ++d) codims.push_back(d);
    }

    Report report;
    Json rows = Json::array();
    bool all = true;
    std::string csv = "m,codim,monomials,rank,injective\n";
    for (const int d : codims) {
        const auto res =
            tautgm::tautring::check_injectivity(params, *cfg.m, d, method, cfg.threads);
        all = all && res.injective;
        rows.push_back(tautgm::serialize::injectivity_json(res));
        csv += std::to_string(res.m) + "," + std::to_string(res.codim) + "," +
               std::to_string(res.monomials) + "," + std::to_string(res.rank) + "," +
               (res.injective ? "true" : "false") + "\n";
    }
    report.all_pass = all;
    if (cfg.codim) {
        report.body = rows[0];
    } else {
        report.body["results"] = std::move(rows);
        report.body["all_injective"] = all;
    }
    if (cfg.format == "csv") report.csv = std::move(csv);
    return report;
}

Report run_gram(const RunConfig& cfg) {
    if (!cfg.m || !cfg.codim) throw DomainError("gram requires --m and --codim");
    const auto params = model_params(cfg);
    const auto mat = tautgm::tautring::gram(params, *cfg.m, *cfg.codim, cfg.threads);
    const std::size_t r = tautgm::qlinalg::rank(mat);

    Report report;
    report.body["m"] = *cfg.m;
    report.body["codim"] = *cfg.codim;
    report.body["rows"] = mat.n_rows();
    report.body["cols"] = mat.n_cols();
    report.body["rank"] = r;
    report.body["matrix"] = tautgm::serialize::matrix_json(mat);
    if (cfg.format == "csv") report.csv = tautgm::serialize::matrix_csv(mat);
    return report;
}

Report run_mck_check(const RunConfig& cfg) {
    require_json(cfg);
    const auto params = model_params(cfg);
    const auto basis = std::make_shared<const tautgm::gmmodel::XBasis>(params);
    const auto decomposition = tautgm::mck::build_ck(basis);

    const auto ck = tautgm::mck::verify_ck(decomposition);
    const auto mck = tautgm::mck::verify_mck(decomposition, cfg.threads);
    const auto invo = tautgm::mck::verify_involution_splitting(decomposition);

    Report report;
    report.all_pass = ck.all_pass && mck.all_pass && invo.all_pass;
    report.body["ck"] = tautgm::serialize::ck_json(ck);
    report.body["mck"] = tautgm::serialize::mck_json(mck);
    report.body["involution"] = tautgm::serialize::involution_json(invo);
    report.body["all_pass"] = report.all_pass;
    return report;
}

Report run_kimura(const RunConfig& cfg) {
    require_json(cfg);
    const int b = cfg.b_prim;
    if (b > kKimuraEvalCap)
        throw CapacityError("kimura evaluation with b_prim = " + std::to_string(b) +
                            " exceeds the materializable range (b_prim <= " +
                            std::to_string(kKimuraEvalCap) + ")");
    const auto relation = tautgm::tautring::kimura_relation(b);

    tautgm::gmmodel::ModelParams params;
    params.b_prim = b;
    const auto basis = std::make_shared<const tautgm::gmmodel::XBasis>(params);
    const bool zero = tautgm::tautring::evaluate(relation, basis).is_zero();

    tautgm::gmmodel::ModelParams next = params;
    next.b_prim = b + 1;
    const auto next_basis = std::make_shared<const tautgm::gmmodel::XBasis>(next);
    const bool next_nonzero = !tautgm::tautring::evaluate(relation, next_basis).is_zero();

    Report report;
    report.all_pass = zero && next_nonzero;
    report.body["terms"] = relation.terms().size();
    report.body["evaluates_to_zero"] = zero;
    report.body["nonzero_with_bprim_plus_one"] = next_nonzero;
    return report;
}

Report run(const RunConfig& cfg) {
    if (cfg.command == "constants") return run_constants(cfg);
    if (cfg.command == "betti") return run_betti(cfg);
    if (cfg.command == "verify-relations") return run_verify_relations(cfg);
    if (cfg.command == "injectivity") return run_injectivity(cfg);
    if (cfg.command == "gram") return run_gram(cfg);
    if (cfg.command == "mck-check") return run_mck_check(cfg);
    if (cfg.command == "kimura") return run_kimura(cfg);
    throw DomainError("unknown command '" + cfg.command + "'");
}

void write_atomically(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw DomainError("cannot open '" + tmp + "' for writing");
        out << content;
        if (!out.flush()) throw DomainError("write to '" + tmp + "' failed");
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw DomainError("cannot move report into place at '" + path + "'");
    }
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;

    CLI::App app{"Exact verification reports for the GM sixfold tautological ring"};
    app.require_subcommand(1);
    app.fallthrough(false);

    const auto add_common = [&](CLI::App* sub, bool with_m, bool with_codim, bool with_method) {
        if (with_m) sub->add_option("--m", cfg.m, "number of factors of X^m");
        if (with_codim) sub->add_option("--codim", cfg.codim, "codimension (default: all)");
        sub->add_option("--bprim", cfg.b_prim, "primitive rank of the model")
            ->capture_default_str();
        if (with_method)
            sub->add_option("--method", cfg.method, "injectivity method: gram or model")
                ->capture_default_str();
        sub->add_option("--out", cfg.out_path, "write the report to this path (atomic)");
        sub->add_option("--format", cfg.format, "json or csv")->capture_default_str();
    };

    add_common(app.add_subcommand("constants", "derive the ring presentation constants"), false,
               false, false);
    add_common(app.add_subcommand("betti", "model ranks per degree and Euler number"), false,
               false, false);
    add_common(app.add_subcommand("verify-relations",
                                  "check the defining identities and list extra relations"),
               false, false, false);
    add_common(app.add_subcommand("injectivity", "rank of the monomial basis in the model"), true,
               true, true);
    add_common(app.add_subcommand("gram", "intersection Gram matrix of a monomial basis"), true,
               true, false);
    add_common(app.add_subcommand("mck-check",
                                  "verify the Chow-Kuenneth and multiplicativity identities"),
               false, false, false);
    CLI::App* kimura = app.add_subcommand("kimura", "evaluate the alternating wedge relation");
    add_common(kimura, false, false, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    cfg.command = app.get_subcommands().front()->get_name();

    try {
        if (cfg.format != "json" && cfg.format != "csv")
            throw DomainError("--format must be json or csv");
        if (cfg.b_prim < 0) throw DomainError("--bprim must be nonnegative");
        if (cfg.command == "kimura" && cfg.b_prim > 6)
            throw DomainError("kimura requires --bprim <= 6");
        cfg.threads = env_threads();

        const auto start = std::chrono::steady_clock::now();
        Report report = run(cfg);
        const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();

        std::string payload;
        if (cfg.format == "csv") {
            payload = report.csv;
        } else {
            Json envelope = Json::object();
            envelope["schema"] = "taut-gm/1";
            envelope["engine_version"] = tautgm::kEngineVersion;
            envelope["command"] = cfg.command;
            Json params = Json::object();
            if (cfg.m) params["m"] = *cfg.m;
            if (cfg.codim) params["codim"] = *cfg.codim;
            params["b_prim"] = cfg.b_prim;
            if (cfg.command == "injectivity") params["method"] = cfg.method;
            envelope["params"] = std::move(params);
            envelope["convention"] = tautgm::kConventionNote;
            envelope["results"] = std::move(report.body);
            envelope["all_pass"] = report.all_pass;
            envelope["timing_ms"] = elapsed;
            payload = envelope.dump(2) + "\n";
        }

        if (cfg.out_path.empty()) {
            std::cout << payload;
        } else {
            write_atomically(cfg.out_path, payload);
        }
        return report.all_pass ? kExitPass : kExitCheckFail;
    } catch (const CapacityError& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const DomainError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFail;
    }
}
