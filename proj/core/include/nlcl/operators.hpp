#pragma once

#include "nlcl/flux.hpp"
#include "nlcl/grid.hpp"
#include "nlcl/reconstruction.hpp"
#include "nlcl/weights.hpp"

namespace nlcl {

enum class Scheme { nonlocal_first, nonlocal_second, local_second };

Scheme scheme_from_name(const std::string& name);
std::string to_string(Scheme s);

/** Ghost width needed by a scheme with horizon index r. */
int ghost_width(Scheme scheme, int r);

/**
 * Second-order nonlocal spatial operator
 *   L(u)_j = (g_{j+1/2} - g_{j-1/2})/dx W_0
 *          + sum_{k=1}^{r+1} (g_{j,j+k} - g_{j-k,j})/(k dx) W_k
 * where only the W_0 term uses reconstructed interface values.
 */
std::vector<double> apply_nonlocal_second_order(const StateField& u,
                                                const WeightTable& wt,
                                                const FluxSpec& flux);

/** First-order nonlocal spatial operator (endpoint-rule weights). */
std::vector<double> apply_nonlocal_first_order(const StateField& u,
                                               const WeightTable& wt,
                                               const FluxSpec& flux);

/** Local reconstruction-based operator (g(u_j^+, u_{j+1}^-) differences). */
std::vector<double> apply_local_second_order(const StateField& u, const FluxSpec& flux);

/** Scheme bundle: weights are ignored by the local scheme. */
struct SchemeDef {
    Scheme scheme = Scheme::nonlocal_second;
    WeightTable weights;
    FluxSpec flux = FluxSpec::burgers(NumericalFlux::godunov);

    std::vector<double> apply(const StateField& u) const;
};

} // namespace nlcl
