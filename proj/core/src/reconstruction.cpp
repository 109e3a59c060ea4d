#include "nlcl/reconstruction.hpp"

namespace nlcl {

std::vector<double> limited_slopes(std::span<const double> padded) {
    std::vector<double> s(padded.size(), 0.0);
    for (std::size_t i = 1; i + 1 < padded.size(); ++i)
        s[i] = minmod(padded[i + 1] - padded[i], padded[i] - padded[i - 1]);
    return s;
}

ReconstructedFaces reconstruct(std::span<const double> padded, int ghost_width) {
    if (ghost_width < 1)
        throw ContractViolation("reconstruct requires ghost width >= 1");
    if (padded.size() < static_cast<std::size_t>(2 * ghost_width + 1))
        throw ContractViolation("padded field shorter than its ghost frame");
    std::size_t n = padded.size() - 2 * ghost_width;
    ReconstructedFaces f;
    f.plus.resize(n);
    f.minus.resize(n);
    f.slopes.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t i = j + ghost_width;
        double s = minmod(padded[i + 1] - padded[i], padded[i] - padded[i - 1]);
        f.slopes[j] = s;
        f.plus[j] = padded[i] + 0.5 * s;
        f.minus[j] = padded[i] - 0.5 * s;
    }
    return f;
}

} // namespace nlcl
