#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "shiftspec/errors.hpp"
#include "shiftspec/experiment.hpp"

namespace {

// 0 ok, 2 config, 3 hypothesis/domain, 4 I/O, 5 check failure
int run_task(const std::string& subcommand, const std::string& config_path, const std::string& out_dir,
             const std::string& format, int workers, std::uint64_t seed, bool has_seed) {
    using namespace shiftspec;
    try {
        ExperimentConfig cfg;
        if (!config_path.empty()) {
            cfg = parse_config_file(config_path);
            if (!subcommand.empty() && cfg.task != subcommand)
                throw ConfigError("config task '" + cfg.task + "' does not match subcommand '" +
                                  subcommand + "'");
        } else if (subcommand == "selftest") {
            Json j;
            j["task"] = "selftest";
            cfg = parse_config(j);
        } else {
            throw ConfigError("subcommand '" + subcommand + "' needs --config <path>");
        }

        const Report rep = run(cfg, workers, seed, has_seed);
        if (!out_dir.empty()) {
            emit(rep, out_dir, format);
        } else {
            std::cout << rep.doc.dump(2) << "\n";
        }
        return rep.exit_code;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectra of shift-invariant operators on weighted sequence spaces"};
    app.require_subcommand(1);

    std::string config_path, out_dir, format = "json";
    int workers = 1;
    std::uint64_t seed = 0;
    bool has_seed = false;

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "experiment config (JSON)");
        sub->add_option("--out", out_dir, "output directory (prints to stdout when omitted)");
        sub->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--workers", workers, "worker threads for lambda grids and N lists");
        sub->add_option("--seed", seed, "seed override for randomized test families")
            ->each([&](const std::string&) { has_seed = true; });
    };

    for (const char* name : {"radius", "predict", "verify", "joint", "conjecture-gap", "selftest"})
        add_common(app.add_subcommand(name));

    CLI11_PARSE(app, argc, argv);
    const std::string sub = app.get_subcommands().front()->get_name();
    return run_task(sub, config_path, out_dir, format, workers, seed, has_seed);
}
