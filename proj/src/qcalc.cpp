#include "qdimer/qcalc.hpp"

#include <cmath>
#include <sstream>

#include "qdimer/errors.hpp"

namespace qdimer::qcalc {

bool QParams::classical() const noexcept { return is_classical(q); }

double QParams::gamma_shape() const
{
    if (!(q > 1.0)) {
        throw DomainError("Gamma shape 1/(q-1) requires q > 1");
    }
    return 1.0 / (q - 1.0);
}

bool is_classical(double q) noexcept { return std::abs(q - 1.0) < kSwitchEpsilon; }

bool q_exp_defined(double q, double x) noexcept
{
    if (!std::isfinite(q) || !std::isfinite(x)) {
        return false;
    }
    if (is_classical(q) || q < 1.0) {
        return true;
    }
    return 1.0 + (1.0 - q) * x > 0.0;
}

double q_exp(double q, double x)
{
    if (is_classical(q)) {
        return std::exp(x);
    }
    const double shift = (1.0 - q) * x;
    if (1.0 + shift <= 0.0) {
        if (q < 1.0) {
            return 0.0;
        }
        std::ostringstream msg;
        msg << "e_q(x) undefined for q=" << q << ", x=" << x << " (1+(1-q)x <= 0)";
        throw DomainError(msg.str());
    }
    return std::exp(std::log1p(shift) / (1.0 - q));
}

double q_log(double q, double x)
{
    if (!(x > 0.0)) {
        std::ostringstream msg;
        msg << "ln_q(x) requires x > 0, got " << x;
        throw DomainError(msg.str());
    }
    if (is_classical(q)) {
        return std::log(x);
    }
    return std::expm1((1.0 - q) * std::log(x)) / (1.0 - q);
}

double q_cosh(double q, double x) { return 0.5 * (q_exp(q, x) + q_exp(q, -x)); }

double q_sinh(double q, double x) { return 0.5 * (q_exp(q, x) - q_exp(q, -x)); }

double q_exp_product(double q, double x) { return q_exp(q, x) * q_exp(q, -x); }

double q_exp_mixed_product(double q, double x) { return q_exp(q, x) * std::exp(-x); }

} // namespace qdimer::qcalc
