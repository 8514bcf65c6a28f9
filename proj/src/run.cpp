#include "qdimer/run.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "qdimer/errors.hpp"
#include "qdimer/presets.hpp"
#include "qdimer/verify.hpp"

namespace qdimer::cli {

namespace {

bool any_evaluable(const SweepTable& t)
{
    return std::any_of(t.sweep.points.begin(), t.sweep.points.end(), [](const auto& p) { return p.evaluable; });
}

bool write_file(const std::filesystem::path& path, const SweepTable& table, std::ostream& log)
{
    std::ofstream os(path, std::ios::binary);
    if (!os) {
        log << "error: cannot open " << path.string() << " for writing\n";
        return false;
    }
    write_csv(os, table);
    return static_cast<bool>(os);
}

} // namespace

void RunConfig::validate() const
{
    if (!std::isfinite(q) || !std::isfinite(J) || !std::isfinite(B)) {
        throw ConfigError("q, J and B must be finite");
    }
    if (!(fd_step >= 0.0) || !std::isfinite(fd_step)) {
        throw ConfigError("fd-step must be a non-negative finite number");
    }
    switch (command) {
    case Command::sweep:
        grid.validate();
        if (out.empty()) {
            throw ConfigError("sweep needs --out");
        }
        break;
    case Command::figure:
        (void)find_preset(preset);
        if (out_dir.empty()) {
            throw ConfigError("figure needs --out-dir");
        }
        break;
    case Command::verify:
        break;
    }
}

SweepTable compute_table(const DimerParams& p, double q, const thermo::Grid& grid, double fd_step)
{
    return build_table(thermo::physicality_filter(thermo::sweep(p, q, grid, fd_step)));
}

int run_sweep(const RunConfig& cfg, std::ostream& log)
{
    SweepTable table;
    try {
        cfg.validate();
        table = compute_table({cfg.J, cfg.B}, cfg.q, cfg.grid, cfg.fd_step);
    } catch (const ConfigError& e) {
        log << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const InsufficientGrid& e) {
        log << "config error: " << e.what() << '\n';
        return kExitConfig;
    }
    if (!any_evaluable(table)) {
        log << "domain error: no grid node is admissible for q=" << cfg.q << ", J=" << cfg.J << ", B=" << cfg.B
            << '\n';
        return kExitDomain;
    }
    if (cfg.out == "-") {
        write_csv(std::cout, table);
        return kExitOk;
    }
    return write_file(cfg.out, table, log) ? kExitOk : kExitConfig;
}

int run_figure(const RunConfig& cfg, std::ostream& log)
{
    const Preset* preset = nullptr;
    try {
        cfg.validate();
        preset = &find_preset(cfg.preset);
        std::filesystem::create_directories(cfg.out_dir);
    } catch (const ConfigError& e) {
        log << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::filesystem::filesystem_error& e) {
        log << "config error: " << e.what() << '\n';
        return kExitConfig;
    }

    int code = kExitOk;
    for (double q : preset->qs) {
        for (double bj : preset->b_over_j) {
            const auto table = compute_table({1.0, bj}, q, preset->grid, cfg.fd_step);
            const auto path = std::filesystem::path(cfg.out_dir) / preset_file_name(*preset, q, bj);
            if (!any_evaluable(table)) {
                log << "domain error: " << path.filename().string() << " has no admissible node\n";
                code = kExitDomain;
            }
            if (!write_file(path, table, log)) {
                return kExitConfig;
            }
            log << "wrote " << path.string() << '\n';
        }
    }
    return code;
}

int run_verify(const RunConfig& cfg, std::ostream& report)
{
    const auto results = verify::run_all_checks(cfg.seed);
    std::size_t failed = 0;
    for (const auto& r : results) {
        report << verify::status_label(r.status) << "  " << r.name;
        if (!r.detail.empty()) {
            report << "  (" << r.detail << ")";
        }
        report << '\n';
        failed += r.status == verify::Status::fail ? 1 : 0;
    }
    report << results.size() << " checks, " << failed << " failed\n";
    return failed == 0 ? kExitOk : kExitVerifyFailed;
}

} // namespace qdimer::cli
