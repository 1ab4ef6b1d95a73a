// Command-line driver: load or generate an instance, run the selected
// pipelines, write report.json and CSV plot data. Exit codes: 0 all
// applicable certificates sound, 1 input/resource error, 2 soundness
// violation.

#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lyl/report.hpp"

int main(int argc, char** argv) {
    CLI::App app{"graph-counting polynomials, their zeros, and finite-N normality certificates"};

    lyl::RunConfig cfg;
    std::string z0_str = "1";
    std::vector<std::string> params;
    std::string pipeline_list = "all";
    std::string suite;
    bool no_csv = false;

    app.add_option("--instance", cfg.instance_path, "instance JSON file (graph or spin)")
        ->envname("LYL_INSTANCE");
    app.add_option("--gen", cfg.generator,
                   "generator: path|cycle|grid|complete|hex_patch|gnm|chain|torus")
        ->envname("LYL_GEN");
    app.add_option("--params", params, "generator parameters K=V (repeatable)");
    app.add_option("--seed", cfg.seed, "seed for randomized generators")->envname("LYL_SEED");
    app.add_option("--z0", z0_str, "fugacity, exact rational or decimal (e.g. 1, 3/4, 0.5)")
        ->envname("LYL_Z0");
    app.add_option("--pipeline", pipeline_list,
                   "comma list of count,roots,certificates,limits,ginibre,ising,all")
        ->envname("LYL_PIPELINE");
    app.add_option("--cap-enum", cfg.cap_enum, "enumeration cap on |E|")->envname("LYL_CAP_ENUM");
    app.add_option("--cap-dp-state", cfg.cap_dp_state, "frontier DP state cap")
        ->envname("LYL_CAP_DP_STATE");
    app.add_option("--precision", cfg.precision_digits, "working precision in digits (<= 32)")
        ->envname("LYL_PRECISION");
    app.add_option("--out", cfg.out_dir, "output directory")->envname("LYL_OUT");
    app.add_option("--suite", suite, "scenario suite: table1|examples_5|ising_small")
        ->envname("LYL_SUITE");
    app.add_flag("--ising-ordered-sum", cfg.ising_ordered_sum,
                 "read pair couplings as the ordered double sum (doubles every J)");
    app.add_flag("--no-csv", no_csv, "skip CSV plot files");

    CLI11_PARSE(app, argc, argv);

    try {
        cfg.emit_csv = !no_csv;
        cfg.z0 = lyl::BigRational::parse(z0_str);
        cfg.pipelines.clear();
        std::size_t pos = 0;
        while (pos <= pipeline_list.size()) {
            std::size_t comma = pipeline_list.find(',', pos);
            if (comma == std::string::npos) comma = pipeline_list.size();
            std::string p = pipeline_list.substr(pos, comma - pos);
            if (!p.empty()) cfg.pipelines.insert(p);
            pos = comma + 1;
        }
        for (const auto& kv : params) {
            auto eq = kv.find('=');
            if (eq == std::string::npos)
                throw lyl::InputError("parameter '" + kv + "' is not of the form K=V");
            cfg.params[kv.substr(0, eq)] = kv.substr(eq + 1);
        }

        lyl::RunResult result;
        if (!suite.empty()) {
            result = lyl::scenario_suite(suite, cfg.out_dir);
            for (const auto& row : result.report["rows"])
                std::printf("%s %s\n", row["pass"].get<bool>() ? "PASS" : "FAIL",
                            row["id"].get<std::string>().c_str());
        } else {
            result = lyl::run(cfg);
            for (const auto& c : result.report["certificates"]) {
                bool applicable = c["applicable"].get<bool>();
                bool sound = c["sound"].get<bool>();
                std::printf("%s %s\n",
                            !applicable ? "SKIP" : (sound ? "PASS" : "FAIL"),
                            c["id"].get<std::string>().c_str());
            }
        }
        return result.exit_code;
    } catch (const lyl::InputError& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return 1;
    } catch (const lyl::ResourceError& e) {
        std::fprintf(stderr, "resource error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
