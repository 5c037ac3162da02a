#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "naqcsim/matrix.hpp"

namespace naqcsim {

enum class PauliAxis { X, Y, Z };
enum class Outcome { Plus, Minus };
enum class Subsystem { A, B };

constexpr std::array<PauliAxis, 3> kAllAxes{PauliAxis::X, PauliAxis::Y, PauliAxis::Z};

// Measurement sharpness lambda in (0, 1]. lambda = 1 is a sharp projective
// measurement; smaller values trade disturbance for information.
class Sharpness {
public:
    explicit Sharpness(double lambda);
    double lambda() const { return lambda_; }

    // Quality factor F = sqrt(1 - lambda^2): how much coherence the
    // non-selective measurement leaves behind.
    double quality() const;
    // Precision G = lambda: how much outcome information is gained.
    double precision() const { return lambda_; }

private:
    double lambda_;
};

struct WeakEquivalents {
    double quality;
    double precision;
};

// (F, G) pair of the weak-measurement formalism equivalent to sharpness lambda.
// Satisfies F^2 + G^2 = 1.
WeakEquivalents weak_equivalents(Sharpness s);

// Validated density matrix: Hermitian within 1e-9, unit trace within 1e-9,
// eigenvalues above -1e-12. Construction throws std::invalid_argument otherwise.
class DensityMatrix {
public:
    explicit DensityMatrix(ComplexMatrix m);
    const ComplexMatrix& matrix() const { return m_; }
    int dim() const { return m_.dim(); }

private:
    ComplexMatrix m_;
};

ComplexMatrix pauli(PauliAxis axis);

// Rank-1 projector onto the +1 or -1 eigenvector of the given Pauli axis.
ComplexMatrix projector(PauliAxis axis, Outcome outcome);

// Unsharp measurement effect E = lambda * P(axis, outcome) + (1-lambda)/2 * I.
// The pair over both outcomes sums to the identity exactly, bit for bit.
class Effect {
public:
    Effect(PauliAxis axis, Outcome outcome, Sharpness sharpness);
    PauliAxis axis() const { return axis_; }
    Outcome outcome() const { return outcome_; }
    Sharpness sharpness() const { return sharpness_; }
    const ComplexMatrix& matrix() const { return m_; }

private:
    PauliAxis axis_;
    Outcome outcome_;
    Sharpness sharpness_;
    ComplexMatrix m_;
};

inline Effect effect(PauliAxis axis, Outcome outcome, Sharpness s) { return {axis, outcome, s}; }

// Two-qubit singlet (|01> - |10>)/sqrt(2) as a density matrix.
DensityMatrix singlet();

DensityMatrix partial_trace(const DensityMatrix& state, Subsystem traced_out);

// Single-qubit state from a Bloch vector with |r| <= 1.
DensityMatrix state_from_bloch(double rx, double ry, double rz);
std::array<double, 3> bloch_vector(const DensityMatrix& state);

// Non-selective unsharp measurement of the given axis on qubit A of a pair:
//   sigma' = F*sigma + (1-F) * sum_{+-} (P⊗I) sigma (P⊗I),  F = sqrt(1-lambda^2).
// Trace preserving; this is what later observers see after an earlier Alice
// measured and discarded her outcome.
DensityMatrix luders_nonselective(const DensityMatrix& state, PauliAxis axis, Sharpness s);

// Outcome-conditioned leftovers of measuring effect E on qubit A.
// probability is the Born weight tr[(E⊗I) sigma]. A branch with probability
// below 1e-12 is flagged degenerate and carries no state.
struct Conditional {
    double probability;
    std::optional<DensityMatrix> state;
};

// Steered ensemble member: Tr_A[(E⊗I) sigma] / probability. This is Bob's
// marginal given the outcome, with no back-action applied on his side.
Conditional conditional_state(const DensityMatrix& state, const Effect& e);

// Post-measurement update of the same branch,
//   Tr_A[(E⊗I) sigma (E⊗I)] / tr[...],
// still reported with the Born weight as probability. The generalized
// square-root instrument reduces to this sandwich because E commutes with
// sqrt(E). This is the state whose coherence the advantage functional scores.
Conditional luders_conditional(const DensityMatrix& state, const Effect& e);

// Deterministic pseudo-random single-qubit state: Bloch vector uniform in the
// unit ball via rejection sampling from the cube, mt19937_64 keyed by seed.
DensityMatrix random_qubit_state(std::uint64_t seed);

// Uniform double in [0, 1) from the top 53 bits of the engine. Used instead of
// std::uniform_real_distribution, which is not bit-stable across platforms.
template <typename Engine>
double uniform_unit(Engine& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

}  // namespace naqcsim
