// zalpha: exact arithmetic, determinants and LLL reduction over Z[alpha].
//
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "zalpha/io.hpp"
#include "zalpha/lll.hpp"
#include "zalpha/oracles.hpp"

using namespace zalpha;

namespace {

Delta parse_delta(const std::string& s) {
    Rat r = parse_rat(s);
    Delta d{r.get_num(), r.get_den()};
    validate_delta(d);
    return d;
}

int cmd_field_info(const std::string& field_path) {
    auto f = load_field(field_path);
    std::cout << "degree: " << f->degree() << "\n";
    std::cout << "f_inf_norm: " << f->f_inf_norm() << "\n";
    auto [lo, hi] = f->isolating_interval();
    std::cout << "interval: [" << rat_to_string(lo) << ", " << rat_to_string(hi) << "]\n";
    std::cout << "reduction_table:\n";
    for (const auto& row : f->reduction_tbl()) {
        std::cout << " ";
        for (const auto& v : row) std::cout << " " << v;
        std::cout << "\n";
    }
    std::cout << "const_M: " << f->const_M() << "\n";
    std::cout << "const_P: " << f->const_P() << "\n";
    std::cout << "const_Q: " << f->const_Q() << "\n";
    std::cout << "const_S: " << f->const_S() << "\n";
    return 0;
}

int cmd_det(const std::string& field_path, const std::string& input_path, bool oracle) {
    std::shared_ptr<Field> f;
    if (!field_path.empty()) f = load_field(field_path);
    LoadedMatrix lm = load_matrix(input_path, std::move(f));
    if (lm.mat.rows != lm.mat.cols) throw NotSquare();

    auto [tri, trace] = triangularize(lm.mat);
    Elem det = trace.singular ? lm.mat.field->zero()
                              : lm.mat.field->scalar_mul(trace.sign,
                                                         tri.at(tri.rows - 1, tri.cols - 1));
    Json out;
    out["det"] = elem_to_json(*lm.field, det);
    out["pivot_rows"] = trace.pivot_rows;
    out["max_opc_bits"] = trace.max_opc_bits;
    out["sign"] = trace.sign;
    out["singular"] = trace.singular;
    std::cout << out.dump(2) << "\n";

    if (oracle) {
        if (lm.mat.rows > 6) throw ParseError("--oracle requires n <= 6");
        if (brute_det(lm.mat) != det) {
            std::cerr << "oracle mismatch: cofactor expansion disagrees\n";
            return 1;
        }
        std::cerr << "oracle ok\n";
    }
    return 0;
}

int cmd_lll(const std::string& field_path, const std::string& input_path,
            const std::string& delta_str, const std::string& stats_path, bool verify) {
    std::shared_ptr<Field> f;
    if (!field_path.empty()) f = load_field(field_path);
    LoadedMatrix lm = load_matrix(input_path, std::move(f));

    LLLOptions opts;
    opts.delta = parse_delta(delta_str);
    opts.record_stats = !stats_path.empty();
    LLLResult res = lll_reduce(lm.mat, opts);

    Json out = matrix_to_json(res.basis);
    Json u = Json::array();
    for (const auto& row : res.transform) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(v.get_str());
        u.push_back(std::move(r));
    }
    out["transform"] = std::move(u);
    out["stats"] = Json{{"iterations", res.stats.iterations},
                        {"swaps", res.stats.swaps},
                        {"reductions", res.stats.reductions},
                        {"max_opc_bits", res.stats.max_opc_bits},
                        {"wall_seconds", res.stats.wall_seconds}};
    std::cout << out.dump(2) << "\n";

    if (!stats_path.empty()) {
        std::ofstream csv(stats_path);
        if (!csv) throw ParseError("cannot write '" + stats_path + "'");
        csv << stats_csv(res.stats);
    }
    if (verify && !verify_reduced(res.basis, opts.delta)) {
        std::cerr << "verification failed: output basis is not reduced\n";
        return 1;
    }
    return 0;
}

int cmd_verify(const std::string& field_path, const std::string& input_path,
               const std::string& delta_str) {
    std::shared_ptr<Field> f;
    if (!field_path.empty()) f = load_field(field_path);
    LoadedMatrix lm = load_matrix(input_path, std::move(f));
    bool ok = verify_reduced(lm.mat, parse_delta(delta_str));
    std::cout << (ok ? "reduced" : "not reduced") << "\n";
    return ok ? 0 : 1;
}

int cmd_check(const std::string& field_path, const std::string& suite, uint64_t samples,
              unsigned long seed) {
    auto f = load_field(field_path);
    auto reports = run_suite(*f, suite, samples, seed);
    std::cout << report_csv(reports);
    for (const auto& r : reports)
        if (r.failures > 0) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computer algebra over real algebraic number fields Q(alpha)"};
    app.require_subcommand(1);

    std::string field_path, input_path, delta_str = "3/4", stats_path, suite;
    uint64_t samples = 1000;
    unsigned long seed = 1;
    bool oracle = false, verify = false;

    auto* info = app.add_subcommand("field-info", "print a field descriptor");
    info->add_option("--field", field_path, "field JSON file")->required();

    auto* det = app.add_subcommand("det", "exact determinant over Z[alpha]");
    det->add_option("--field", field_path, "field JSON file (overrides the matrix file)");
    det->add_option("--input", input_path, "matrix JSON file")->required();
    det->add_flag("--oracle", oracle, "cross-check against cofactor expansion (n <= 6)");

    auto* lll = app.add_subcommand("lll", "exact LLL reduction");
    lll->add_option("--field", field_path, "field JSON file (overrides the basis file)");
    lll->add_option("--input", input_path, "basis JSON file")->required();
    lll->add_option("--delta", delta_str, "reduction parameter p/q, 1/4 < p/q < 1");
    lll->add_option("--stats", stats_path, "write the per-iteration CSV here");
    lll->add_flag("--verify", verify, "re-verify reducedness of the output");

    auto* ver = app.add_subcommand("verify", "check that a basis is LLL-reduced");
    ver->add_option("--field", field_path, "field JSON file (overrides the basis file)");
    ver->add_option("--input", input_path, "basis JSON file")->required();
    ver->add_option("--delta", delta_str, "reduction parameter p/q");

    auto* chk = app.add_subcommand("check", "run a randomized oracle suite");
    chk->add_option("suite", suite, "growth | order | inverse | bareiss | lll")->required();
    chk->add_option("--field", field_path, "field JSON file")->required();
    chk->add_option("--samples", samples, "number of random samples");
    chk->add_option("--seed", seed, "RNG seed (deterministic suites)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (info->parsed()) return cmd_field_info(field_path);
        if (det->parsed()) return cmd_det(field_path, input_path, oracle);
        if (lll->parsed()) return cmd_lll(field_path, input_path, delta_str, stats_path, verify);
        if (ver->parsed()) return cmd_verify(field_path, input_path, delta_str);
        if (chk->parsed()) return cmd_check(field_path, suite, samples, seed);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
