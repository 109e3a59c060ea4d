#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "nlcl/errors.hpp"

namespace nlcl {

/** Minmod limiter: smaller-magnitude argument when signs agree, else zero. */
inline double minmod(double a, double b) {
    if (a * b <= 0.0)
        return 0.0;
    return std::abs(a) <= std::abs(b) ? a : b;
}

/** Limited slopes and cell-interface trace values of a piecewise linear
 *  reconstruction: plus[j] = u_j + slope/2, minus[j] = u_j - slope/2. */
struct ReconstructedFaces {
    std::vector<double> plus;
    std::vector<double> minus;
    std::vector<double> slopes;
};

/**
 * Reconstruct interior faces from a padded cell-average array with ghost
 * width w >= 1 on each side. Output vectors have length padded.size() - 2w.
 */
ReconstructedFaces reconstruct(std::span<const double> padded, int ghost_width);

/**
 * Minmod slopes for every padded cell that has both neighbors; the two end
 * entries are zero. Internal building block for the operators.
 */
std::vector<double> limited_slopes(std::span<const double> padded);

} // namespace nlcl
