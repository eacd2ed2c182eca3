#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "wrp/runner.hpp"

namespace {

struct GlobalFlags {
    std::string config_path;
    std::string out;
    std::string format;
    std::string cache_dir;
    int jobs = -1;
    long long seed = -1;
};

void apply_overrides(wrp::RunConfig& rc, const GlobalFlags& gf) {
    if (!gf.out.empty()) rc.out = gf.out;
    if (!gf.format.empty()) rc.format = gf.format;
    if (!gf.cache_dir.empty()) rc.cache_dir = gf.cache_dir;
    if (gf.jobs >= 0) rc.jobs = gf.jobs;
    if (gf.seed >= 0) rc.seed = static_cast<std::uint64_t>(gf.seed);
}

int finish(const wrp::RunOutcome& outcome, const wrp::RunConfig& rc) {
    if (rc.out.empty()) {
        for (auto it = outcome.reports.begin(); it != outcome.reports.end(); ++it) {
            std::cout << "== " << it.key() << " ==\n";
            if (rc.format == "json")
                std::cout << it.value().dump(2) << "\n";
            else if (rc.format == "csv")
                std::cout << wrp::render_csv(it.value());
            else
                std::cout << wrp::render_text(it.value());
        }
    }
    return outcome.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"linear codes from pairs of weakly regular plateaued functions"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    GlobalFlags gf;
    app.add_option("--config", gf.config_path, "run configuration file")->envname("WRPCODE_CONFIG");
    app.add_option("--out", gf.out, "report output stem");
    app.add_option("--format", gf.format, "report format: text | json | csv");
    app.add_option("--cache", gf.cache_dir, "cache directory");
    app.add_option("--jobs", gf.jobs, "worker threads (0 = hardware)");
    app.add_option("--seed", gf.seed, "seed for spot-check sampling");

    auto* cmd_classify = app.add_subcommand("classify", "classify the configured f and g");
    auto* cmd_build = app.add_subcommand("build", "run the configured task list");
    auto* cmd_search = app.add_subcommand("search", "scan a descriptor template for WRP/WRPB functions");
    auto* cmd_verify = app.add_subcommand("verify-lemmas", "run the exact identity battery");
    auto* cmd_report = app.add_subcommand("report", "re-render a JSON report");
    std::string report_in;
    cmd_report->add_option("--in", report_in, "existing JSON report file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_verify->parsed() && gf.config_path.empty()) {
            wrp::RunConfig rc;
            rc.format = gf.format.empty() ? "text" : gf.format;
            rc.out = gf.out;
            return finish(wrp::run_verify_lemmas(&rc, std::cerr), rc);
        }
        if (cmd_report->parsed()) {
            std::ifstream in(report_in);
            wrp::require(in.good(), wrp::Errc::ConfigError, "cannot open " + report_in);
            wrp::Json j = wrp::Json::parse(in);
            std::string format = gf.format.empty() ? "text" : gf.format;
            if (gf.out.empty()) {
                std::cout << (format == "json" ? j.dump(2) + "\n"
                                               : format == "csv" ? wrp::render_csv(j) : wrp::render_text(j));
            } else {
                wrp::write_report_file(gf.out, j, format);
            }
            return 0;
        }

        wrp::require(!gf.config_path.empty(), wrp::Errc::ConfigError, "--config is required");
        wrp::RunConfig rc = wrp::load_run_config(gf.config_path);
        apply_overrides(rc, gf);

        if (cmd_classify->parsed()) {
            rc.tasks = {"classify"};
            return finish(wrp::run_config(rc, std::cerr), rc);
        }
        if (cmd_build->parsed()) {
            return finish(wrp::run_config(rc, std::cerr), rc);
        }
        if (cmd_search->parsed()) {
            return finish(wrp::run_search_command(rc, std::cerr), rc);
        }
        if (cmd_verify->parsed()) {
            return finish(wrp::run_verify_lemmas(&rc, std::cerr), rc);
        }
    } catch (const wrp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.code()) {
            // a pair outside the covered index combinations is a problem
            // with the requested configuration
            case wrp::Errc::ConfigError:
            case wrp::Errc::UnsupportedIndexPair: return 3;
            case wrp::Errc::Mismatch:
            case wrp::Errc::CacheCorrupt: return 2;
            default: return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
