#pragma once

#include <cstddef>
#include <vector>

namespace eitmech {

enum class GridScale { Linear, Log };

// count >= 2 points from lo to hi inclusive. A log grid needs lo and hi of the
// same sign and nonzero; negative ranges are spaced by magnitude.
std::vector<double> make_grid(double lo, double hi, std::size_t count, GridScale scale);

inline std::vector<double> linspace(double lo, double hi, std::size_t count) {
    return make_grid(lo, hi, count, GridScale::Linear);
}

inline std::vector<double> logspace(double lo, double hi, std::size_t count) {
    return make_grid(lo, hi, count, GridScale::Log);
}

}  // namespace eitmech
