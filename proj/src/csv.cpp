#include "qdimer/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <limits>

#include "qdimer/entanglement.hpp"
#include "qdimer/errors.hpp"

namespace qdimer::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

} // namespace

std::string format_number(double v)
{
    if (!std::isfinite(v)) {
        return "NaN";
    }
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
    return {buf.data(), res.ptr};
}

SweepTable build_table(thermo::SweepResult filtered)
{
    SweepTable t;
    const auto& p = filtered.params;
    const double q = filtered.q;
    const std::size_t n = filtered.points.size();
    t.c_varrho.assign(n, kNaN);
    t.c_rho_closed.assign(n, kNaN);
    t.c_rho_oracle.assign(n, kNaN);
    t.c_gb.assign(n, kNaN);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& pt = filtered.points[i];
        t.c_gb[i] = entanglement::concurrence_gb(p, pt.beta_star);
        if (!pt.evaluable) {
            continue;
        }
        try {
            t.c_varrho[i] = entanglement::concurrence_varrho(p, q, pt.beta_star);
            if (pt.physical) {
                t.c_rho_closed[i] = t.c_varrho[i];
                t.c_rho_oracle[i] = entanglement::concurrence_oracle(dimer::thermal_state(p, q, pt.beta_star));
            }
        } catch (const Error&) {
            // cell stays NaN
        }
    }
    t.sweep = std::move(filtered);
    return t;
}

void write_csv(std::ostream& os, const SweepTable& table)
{
    for (std::size_t c = 0; c < kCsvColumns.size(); ++c) {
        os << (c ? "," : "") << kCsvColumns[c];
    }
    os << '\n';
    const auto& pts = table.sweep.points;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto& pt = pts[i];
        const double t_phys = pt.evaluable && pt.beta != 0.0 ? 1.0 / pt.beta : kNaN;
        os << format_number(pt.t_star) << ',' << format_number(pt.beta_star) << ',' << format_number(pt.beta) << ','
           << format_number(t_phys) << ',' << format_number(pt.Z) << ',' << format_number(pt.trace_q) << ','
           << format_number(pt.u2) << ',' << format_number(pt.U) << ',' << format_number(pt.S) << ','
           << format_number(pt.F) << ',' << (pt.physical ? 1 : 0) << ',' << pt.branch_id << ','
           << format_number(table.c_varrho[i]) << ',' << format_number(table.c_rho_closed[i]) << ','
           << format_number(table.c_rho_oracle[i]) << ',' << format_number(table.c_gb[i]) << ','
           << format_number(pt.U_fd) << ',' << format_number(pt.S_fd) << '\n';
    }
}

} // namespace qdimer::cli
