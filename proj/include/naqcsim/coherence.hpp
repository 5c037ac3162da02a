#pragma once

#include "naqcsim/quantum.hpp"

namespace naqcsim {

enum class CoherenceMeasure { L1, RelativeEntropy, SkewInformation };

constexpr std::array<CoherenceMeasure, 3> kAllMeasures{
    CoherenceMeasure::L1, CoherenceMeasure::RelativeEntropy, CoherenceMeasure::SkewInformation};

// Ceiling of the three-basis complementarity relation: sqrt(6) for the l1 norm,
// 2.23 for relative entropy, 2 for skew information. Also the violation
// threshold of the advantage criterion.
double complementarity_bound(CoherenceMeasure measure);

// Unitary whose columns are the +1 and -1 eigenvectors of the given Pauli,
// i.e. the conjugation that maps the axis eigenbasis onto the computational one.
ComplexMatrix basis_rotation(PauliAxis axis);

// Coherence of a single-qubit state in the eigenbasis of the given Pauli axis:
//   L1: sum of off-diagonal magnitudes of U^dag rho U
//   RelativeEntropy: S(diag(rho')) - S(rho')
//   SkewInformation: 1 - tr[sqrt(rho) sigma sqrt(rho) sigma] (basis free form)
// Result is clamped to be non-negative.
double coherence(const DensityMatrix& rho, CoherenceMeasure measure, PauliAxis basis);

// Sum of the coherence over the x, y, z bases. Bounded by
// complementarity_bound(measure) for every single-qubit state.
double complementarity_sum(const DensityMatrix& rho, CoherenceMeasure measure);

// Numerically maximizes the relative-entropy complementarity sum over pure
// states (coarse sphere grid plus pattern-search refinement). Documents how
// sharp the 2.23 working constant is; the true maximum is about 2.23202.
double refine_entropy_bound(int grid = 180);

}  // namespace naqcsim
