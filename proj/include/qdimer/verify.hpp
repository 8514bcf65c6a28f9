#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qdimer/dimer.hpp"

namespace qdimer::verify {

enum class Status { pass, fail, skip };

struct CheckResult {
    std::string name;
    Status status = Status::fail;
    std::string detail;
};

[[nodiscard]] std::string_view status_label(Status s) noexcept;

using TraceFn = std::function<double(const DimerParams&, double q, double beta_star)>;

/// Compares `trace_fn` with the dense fractional matrix power on sampled states.
[[nodiscard]] CheckResult check_trace_q_oracle(const TraceFn& trace_fn, std::uint64_t seed);

/// Quadrature and Monte Carlo against e_q(-beta E); skipped for q <= 1.
[[nodiscard]] CheckResult check_superstat(double q, std::uint64_t seed);

[[nodiscard]] std::vector<CheckResult> run_all_checks(std::uint64_t seed);

} // namespace qdimer::verify
