#pragma once

#include <vector>

#include "pjts/bernstein.hpp"
#include "pjts/model.hpp"

namespace pjts {

// convergence threshold of the zeta-type integral, in both parameters
struct Threshold {
  Rational lambda_min;  // 1/2 - c/p
  Rational s_min;       // -c/2
};

Threshold threshold(const TripleSystem& V);

// parameter change s = -p/4 + p lambda / 2
Rational lambda_of_s(const TripleSystem& V, const Rational& s);
double s_of_lambda(const TripleSystem& V, double lambda);

// Gauss quadrature for the weight (1-t)^a (1+t)^b on [-1,1] (Golub-Welsch)
void gauss_jacobi(int n, double a, double b, std::vector<double>& nodes,
                  std::vector<double>& weights);

enum class QuadMethod { GaussJacobi, MonteCarlo };

// torus integral of the compact kernel raised to (lambda - 1/2) against the
// invariant density; rank one uses Gauss-Jacobi, any rank can use Monte Carlo
double c_lambda_numeric(const TripleSystem& V, double lambda, int nodes = 64,
                        QuadMethod method = QuadMethod::GaussJacobi,
                        uint64_t seed = 42);

// closed form via Beta/Selberg integrals (rank one, or a_plus == a_minus)
double c_lambda_gamma(const TripleSystem& V, double lambda);

bool selberg_convergent(const TripleSystem& V, double lambda);

// arithmetic progressions of candidate poles in the s parameter
struct PoleFamily {
  Rational first;
  Rational step;  // positive; poles are first, first-step, first-2 step, ...
};

struct PoleLedger {
  std::vector<PoleFamily> families;
  std::vector<Rational> b_zeros;  // zero set of the case b factor
  Rational s_min{0, 1};
  Rational lambda_min{0, 1};
  // all listed poles with s >= low, sorted decreasing, deduplicated
  std::vector<Rational> poles_down_to(const Rational& low) const;
};

PoleLedger pole_ledger(const TripleSystem& V);

// candidate poles from the descent mechanism: b-zeros shifted by negative
// integers, intersected with s <= s_min; superset of the ledger families
std::vector<Rational> poles_from_b(const TripleSystem& V, const Rational& low);

// rank-one descent identity: integrating k^{s-1} f equals integrating
// k^s (B_s^t f) / (b(2s) b(2s-1)) for a compactly supported smooth f
double verify_descent(const TripleSystem& V, double s, double x = 0.7,
                      int nodes = 80);

}  // namespace pjts
