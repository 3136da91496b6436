#include "snm/trigfit.hpp"

#include <cmath>
#include <numbers>
#include <cstddef>
#include <stdexcept>

namespace snm {

double TrigPoly::eval(double t) const {
    const double w = 2.0 * std::numbers::pi / period;
    double acc = cos_c[0];
    for (int n = 1; n <= 3; ++n) {
        acc += cos_c[static_cast<std::size_t>(n)] * std::cos(n * w * t) +
               sin_c[static_cast<std::size_t>(n)] * std::sin(n * w * t);
    }
    return acc;
}

double TrigPoly::max_abs_coeff_diff(const TrigPoly& other) const {
    double m = 0.0;
    for (std::size_t n = 0; n < 4; ++n) {
        m = std::max(m, std::abs(cos_c[n] - other.cos_c[n]));
        m = std::max(m, std::abs(sin_c[n] - other.sin_c[n]));
    }
    return m;
}

TrigPoly fit_trig_poly(const std::vector<double>& samples, int order, double period) {
    if (order < 0 || order > 3) throw std::invalid_argument("fit_trig_poly: order must be 0..3");
    const std::size_t m = samples.size();
    if (m < 2 * static_cast<std::size_t>(order) + 1)
        throw std::invalid_argument("fit_trig_poly: too few samples for requested order");

    TrigPoly p;
    p.period = period;
    const double step = 2.0 * std::numbers::pi / static_cast<double>(m);
    for (int n = 0; n <= order; ++n) {
        double ac = 0.0, as = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            const double ang = n * step * static_cast<double>(j);
            ac += samples[j] * std::cos(ang);
            as += samples[j] * std::sin(ang);
        }
        const double scale = (n == 0 ? 1.0 : 2.0) / static_cast<double>(m);
        p.cos_c[static_cast<std::size_t>(n)] = scale * ac;
        if (n > 0) p.sin_c[static_cast<std::size_t>(n)] = scale * as;
    }
    return p;
}

}  // namespace snm
