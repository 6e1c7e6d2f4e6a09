#pragma once

#include "adsfn/fn_coords.hpp"
#include "test_helpers.hpp"

namespace adsfn::testing {

inline PantsDecomposition genus2() {
    PantsDecomposition d;
    d.num_pants = 2;
    d.curves = {{{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}, {{0, 2}, {1, 2}}};
    return d;
}

inline PantsDecomposition genus2_self() {
    PantsDecomposition d;
    d.num_pants = 2;
    d.curves = {{{0, 0}, {0, 1}}, {{1, 0}, {1, 1}}, {{0, 2}, {1, 2}}};
    return d;
}

inline PantsDecomposition genus3() {
    PantsDecomposition d;
    d.num_pants = 4;
    d.curves = {{{0, 1}, {1, 0}}, {{1, 1}, {2, 0}}, {{2, 1}, {3, 0}},
                {{3, 1}, {0, 0}}, {{0, 2}, {2, 2}}, {{1, 2}, {3, 2}}};
    return d;
}

inline PantsDecomposition genus3_self() {
    PantsDecomposition d;
    d.num_pants = 4;
    d.curves = {{{0, 0}, {0, 1}}, {{1, 0}, {1, 1}}, {{0, 2}, {2, 0}},
                {{1, 2}, {2, 1}}, {{2, 2}, {3, 0}}, {{3, 1}, {3, 2}}};
    return d;
}

inline PantsDecomposition one_holed_torus() {
    PantsDecomposition d;
    d.num_pants = 1;
    d.curves = {{{0, 0}, {0, 1}}};
    d.peripherals = {{0, 2}};
    return d;
}

inline PantsDecomposition four_holed_sphere() {
    PantsDecomposition d;
    d.num_pants = 2;
    d.curves = {{{0, 0}, {1, 0}}};
    d.peripherals = {{0, 1}, {0, 2}, {1, 1}, {1, 2}};
    return d;
}

inline FNPoint random_fn_point(const PantsDecomposition& dec, Rng& rng,
                               bool lightlike_peripherals = false) {
    FNPoint x;
    // Moderate lengths and twists keep the assembled holonomy entries small
    // enough that the FN invariants of the stored matrices are determined
    // well below the round-trip tolerances. Very short cuffs make the pants
    // thin and the frame normalizers large, which degrades conditioning.
    std::uniform_real_distribution<double> tw(-1.2, 1.2);
    std::uniform_real_distribution<double> fl(1.2, 2.5); // per-factor length
    std::uniform_int_distribution<int> sgn(0, 1);
    for (size_t c = 0; c < dec.curves.size(); ++c)
        x.curves.push_back(
            {idempotent_join(fl(rng), fl(rng)), {tw(rng), tw(rng)}});
    for (size_t k = 0; k < dec.peripherals.size(); ++k) {
        PeripheralCoord pc;
        if (lightlike_peripherals && k == 0) {
            std::uniform_real_distribution<double> d(0.3, 2.0);
            double v = d(rng);
            pc.length = {v, sgn(rng) ? v : -v};
            pc.delta = 0.0;
        } else {
            pc.length = idempotent_join(fl(rng), fl(rng));
            pc.delta = (sgn(rng) ? 1.0 : -1.0) * std::sqrt(square_norm(pc.length));
        }
        x.peripherals.push_back(pc);
    }
    return x;
}

} // namespace adsfn::testing
