#pragma once

#include <catch2/catch_amalgamated.hpp>

#include "perimap/mpoly.hpp"
#include "perimap/parser.hpp"
#include "perimap/rng.hpp"

namespace pmtest {

using namespace perimap;

inline MPoly random_poly(Rng& rng, const VarTablePtr& vars, unsigned max_deg = 3,
                         unsigned nterms = 5, long coeff_range = 9) {
    std::vector<Term> ts;
    for (unsigned t = 0; t < nterms; ++t) {
        Mono m(vars->size(), 0);
        unsigned budget = rng.uniform_int(0, max_deg);
        for (unsigned k = 0; k < budget; ++k)
            m[static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(vars->size()) - 1))]++;
        long num = rng.uniform_int(-coeff_range, coeff_range);
        long den = rng.uniform_int(1, 4);
        if (num != 0) ts.push_back({std::move(m), rat(num, den)});
    }
    return MPoly::from_terms(vars, std::move(ts));
}

inline MPoly random_nonzero_poly(Rng& rng, const VarTablePtr& vars, unsigned max_deg = 3,
                                 unsigned nterms = 5) {
    for (int tries = 0; tries < 100; ++tries) {
        MPoly p = random_poly(rng, vars, max_deg, nterms);
        if (!p.is_zero()) return p;
    }
    return MPoly::constant(vars, Rat(1));
}

// equal up to a nonzero rational scale
inline bool proportional(const MPoly& a, const MPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.primitive_part() == b.primitive_part();
}

}  // namespace pmtest
