#include "cli_app.hpp"

#include "uavlink/config.hpp"
#include "uavlink/csv.hpp"
#include "uavlink/errors.hpp"
#include "uavlink/scenario.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <vector>

namespace uavlink::cli {

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Weather-aware UAV air-to-ground link simulator; writes sweep results as CSV."};
    app.name("uavlink");
    app.failure_message(CLI::FailureMessage::help);

    std::string config_path;
    std::string experiment = "grid";
    std::string out_path = "-";
    std::optional<std::uint64_t> seed;
    std::string mode = "parametric";
    unsigned threads = 1;

    app.add_option("--config", config_path, "Configuration file")->required();
    app.add_option("--experiment", experiment, "Sweep to run")
        ->check(CLI::IsMember({"f4", "f5", "f6", "grid"}))
        ->capture_default_str();
    app.add_option("--out", out_path, "Output CSV path, or - for standard output")->capture_default_str();
    app.add_option("--seed", seed, "Override the configured master seed");
    app.add_option("--mode", mode, "Weather attenuation model")
        ->check(CLI::IsMember({"parametric", "preset", "both"}))
        ->capture_default_str();
    app.add_option("--threads", threads, "Worker threads for the sweep; output does not depend on it")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kConfigError;
    }

    std::vector<scenario::SweepRow> rows;
    try {
        const auto settings = config::load_config(config_path);
        const auto cfg = settings.to_scenario(scenario::parse_experiment(experiment), config::parse_mode(mode), seed);
        rows = scenario::run_sweep(cfg, threads);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const ModelError& e) {
        err << "model error: " << e.what() << '\n';
        return kModelError;
    }

    try {
        if (out_path == "-") {
            csv::write_csv(rows, out);
        } else {
            std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
            if (!file)
                throw std::runtime_error("cannot open " + out_path + " for writing");
            csv::write_csv(rows, file);
        }
    } catch (const std::runtime_error& e) {
        err << "output error: " << e.what() << '\n';
        return kConfigError;
    }
    return kOk;
}

} // namespace uavlink::cli
