#pragma once

#include <functional>
#include <stdexcept>

#include "naqcsim/coherence.hpp"

namespace naqcsim::oracle {

// Closed-form averaged advantage values on the singlet, one per measure and
// observer count. Arguments are the sharpness of each Alice in order; the last
// one is the Alice whose advantage is scored, earlier ones have measured
// non-selectively. All formulas live on (0,1] per argument.
double n1_l1(double l1);
double n2_l1(double l1, double l2);
double n3_l1(double l1, double l2, double l3);
double n1_e(double l1);   // l1 = 1 returns the removable-divergence limit 3
double n2_e(double l1, double l2);  // divergent atanh pair at l2 = 1 replaced by its limit 1/2
double n1_s(double l1);
double n2_s(double l1, double l2);

struct NoSignChangeError : std::domain_error {
    using std::domain_error::domain_error;
};

// Bisection for f(x) = bound with f monotone on [lo, hi]. Stops once the
// bracket is at most 1e-10 wide (at most 200 iterations) and returns its
// midpoint. Throws NoSignChangeError when f - bound has the same sign at both
// ends.
double solve_threshold(const std::function<double(double)>& f, double bound, double lo, double hi);

// Largest lambda_1 that still lets a sharp second Alice reach the l1 bound:
// the root of n2_l1(l, 1) = sqrt(6), in closed form (1/2)sqrt(2*sqrt(6) - 3).
double alice2_upper_l1();

// Best averaged advantage available to Alice 2 or Alice 3 (sharp target,
// every earlier Alice violating her own bound). Each closed form decreases in
// the predecessor sharpness, so the supremum sits on the marginal-violation
// boundary and is evaluated there. Throws std::domain_error when the feasible
// region is empty (relative entropy and skew information beyond Alice 2).
double constrained_max(CoherenceMeasure measure, int which_alice);

}  // namespace naqcsim::oracle
