#include "eitmech/grid.hpp"

#include <cmath>

#include "eitmech/errors.hpp"

namespace eitmech {

std::vector<double> make_grid(double lo, double hi, std::size_t count, GridScale scale) {
    if (count < 2) fail(ErrorKind::InvalidParameter, "grid needs at least 2 points");
    if (!(lo < hi)) fail(ErrorKind::InvalidParameter, "grid needs min < max");

    std::vector<double> out(count);
    const double last = static_cast<double>(count - 1);
    if (scale == GridScale::Linear) {
        for (std::size_t i = 0; i < count; ++i) {
            out[i] = lo + (hi - lo) * static_cast<double>(i) / last;
        }
    } else {
        if (!(lo * hi > 0.0)) {
            fail(ErrorKind::InvalidParameter, "log grid needs nonzero bounds of equal sign");
        }
        const double sign = lo > 0.0 ? 1.0 : -1.0;
        const double a = std::log(std::abs(lo));
        const double b = std::log(std::abs(hi));
        for (std::size_t i = 0; i < count; ++i) {
            out[i] = sign * std::exp(a + (b - a) * static_cast<double>(i) / last);
        }
    }
    out.front() = lo;
    out.back() = hi;
    return out;
}

}  // namespace eitmech
