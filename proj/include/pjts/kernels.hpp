#pragma once

#include "pjts/model.hpp"

namespace pjts {

double canonical_kernel(const TripleSystem& V, const Element& x,
                        const Element& y);

// complex-structure models: det over C of the dual Bergman operator
cplx canonical_kernel_complex(const TripleSystem& V, const Element& x,
                              const Element& y);

double verify_power_identity(const TripleSystem& V, int samples,
                             uint64_t seed = 42);

double covariance_check(const TripleSystem& V, const Element& u,
                        const Element& v, const Element& x, const Element& y);

double peirce_restriction_check(const TripleSystem& V, const Element& c_max,
                                const Element& x1, const Element& x2,
                                const Element& y2);

double compact_kernel(const TripleSystem& V, const std::vector<double>& theta);

double compact_kernel_pair(const TripleSystem& V, const Element& x,
                           const Element& y);

double invariant_density(const TripleSystem& V, const Element& x);

// torus integration density in flat angle coordinates
double torus_density(const TripleSystem& V, const std::vector<double>& theta);

}  // namespace pjts
