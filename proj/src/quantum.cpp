#include "naqcsim/quantum.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace naqcsim {

namespace {

constexpr double kBranchFloor = 1e-12;

ComplexMatrix embed_on_a(const ComplexMatrix& op) { return kron(op, ComplexMatrix::identity(2)); }

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
    ComplexMatrix out(m.dim());
    for (int r = 0; r < m.dim(); ++r)
        for (int c = 0; c < m.dim(); ++c) out(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
    return out;
}

ComplexMatrix trace_out(const ComplexMatrix& joint, Subsystem traced_out) {
    ComplexMatrix out(2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Complex s = 0.0;
            for (int k = 0; k < 2; ++k)
                s += traced_out == Subsystem::A ? joint(2 * k + i, 2 * k + j)
                                                : joint(2 * i + k, 2 * j + k);
            out(i, j) = s;
        }
    return out;
}

}  // namespace

Sharpness::Sharpness(double lambda) : lambda_(lambda) {
    if (!(lambda > 0.0) || !(lambda <= 1.0))
        throw std::invalid_argument("sharpness must lie in (0, 1]");
}

double Sharpness::quality() const { return std::sqrt(1.0 - lambda_ * lambda_); }

WeakEquivalents weak_equivalents(Sharpness s) { return {s.quality(), s.precision()}; }

DensityMatrix::DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
    if (!m_.is_hermitian(1e-9)) throw std::invalid_argument("density matrix is not Hermitian");
    if (std::abs(trace(m_) - Complex(1.0)) > 1e-9)
        throw std::invalid_argument("density matrix trace differs from 1");
    if (!psd_within(m_, 1e-12))
        throw std::invalid_argument("density matrix has an eigenvalue below -1e-12");
}

ComplexMatrix pauli(PauliAxis axis) {
    switch (axis) {
        case PauliAxis::X: return ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
        case PauliAxis::Y: return ComplexMatrix::from_rows({{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}});
        case PauliAxis::Z: return ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});
    }
    throw std::invalid_argument("unknown axis");
}

ComplexMatrix projector(PauliAxis axis, Outcome outcome) {
    const double sign = outcome == Outcome::Plus ? 0.5 : -0.5;
    ComplexMatrix p = sign * pauli(axis);
    p(0, 0) += 0.5;
    p(1, 1) += 0.5;
    return p;
}

Effect::Effect(PauliAxis axis, Outcome outcome, Sharpness sharpness)
    : axis_(axis), outcome_(outcome), sharpness_(sharpness), m_(2) {
    // E = 0.5*I +- 0.5*lambda*sigma, algebraically lambda*P + (1-lambda)/2 * I.
    // Built this way the +/- pair sums to the exact identity.
    const double sign = outcome == Outcome::Plus ? 0.5 : -0.5;
    m_ = (sign * sharpness.lambda()) * pauli(axis);
    m_(0, 0) += 0.5;
    m_(1, 1) += 0.5;
}

DensityMatrix singlet() {
    ComplexMatrix m(4);
    m(1, 1) = 0.5;
    m(2, 2) = 0.5;
    m(1, 2) = -0.5;
    m(2, 1) = -0.5;
    return DensityMatrix(m);
}

DensityMatrix partial_trace(const DensityMatrix& state, Subsystem traced_out) {
    if (state.dim() != 4) throw std::invalid_argument("partial_trace expects a two-qubit state");
    return DensityMatrix(trace_out(state.matrix(), traced_out));
}

DensityMatrix state_from_bloch(double rx, double ry, double rz) {
    const double len = std::sqrt(rx * rx + ry * ry + rz * rz);
    if (len > 1.0 + 1e-12) throw std::invalid_argument("Bloch vector longer than 1");
    ComplexMatrix m = ComplexMatrix::from_rows(
        {{0.5 * (1.0 + rz), 0.5 * Complex(rx, -ry)}, {0.5 * Complex(rx, ry), 0.5 * (1.0 - rz)}});
    return DensityMatrix(m);
}

std::array<double, 3> bloch_vector(const DensityMatrix& state) {
    if (state.dim() != 2) throw std::invalid_argument("bloch_vector expects a single-qubit state");
    const ComplexMatrix& m = state.matrix();
    return {2.0 * m(1, 0).real(), 2.0 * m(1, 0).imag(), (m(0, 0) - m(1, 1)).real()};
}

DensityMatrix luders_nonselective(const DensityMatrix& state, PauliAxis axis, Sharpness s) {
    if (state.dim() != 4) throw std::invalid_argument("luders_nonselective expects a two-qubit state");
    const double f = s.quality();
    ComplexMatrix out = f * state.matrix();
    for (Outcome o : {Outcome::Plus, Outcome::Minus}) {
        const ComplexMatrix p = embed_on_a(projector(axis, o));
        out += (1.0 - f) * (p * state.matrix() * p);
    }
    return DensityMatrix(out);
}

Conditional conditional_state(const DensityMatrix& state, const Effect& e) {
    if (state.dim() != 4) throw std::invalid_argument("conditional_state expects a two-qubit state");
    const ComplexMatrix weighted = embed_on_a(e.matrix()) * state.matrix();
    const double prob = trace(weighted).real();
    if (prob < kBranchFloor) return {prob, std::nullopt};
    ComplexMatrix bob = hermitian_part(trace_out(weighted, Subsystem::A));
    bob *= Complex(1.0 / prob);
    return {prob, DensityMatrix(bob)};
}

Conditional luders_conditional(const DensityMatrix& state, const Effect& e) {
    if (state.dim() != 4) throw std::invalid_argument("luders_conditional expects a two-qubit state");
    const ComplexMatrix lifted = embed_on_a(e.matrix());
    const double prob = trace(lifted * state.matrix()).real();
    if (prob < kBranchFloor) return {prob, std::nullopt};
    ComplexMatrix sandwich = lifted * state.matrix() * lifted;
    const double norm = trace(sandwich).real();
    if (norm < kBranchFloor) return {prob, std::nullopt};
    ComplexMatrix bob = hermitian_part(trace_out(sandwich, Subsystem::A));
    bob *= Complex(1.0 / norm);
    return {prob, DensityMatrix(bob)};
}

DensityMatrix random_qubit_state(std::uint64_t seed) {
    std::mt19937_64 eng(seed);
    double x, y, z;
    do {
        x = 2.0 * uniform_unit(eng) - 1.0;
        y = 2.0 * uniform_unit(eng) - 1.0;
        z = 2.0 * uniform_unit(eng) - 1.0;
    } while (x * x + y * y + z * z > 1.0);
    return state_from_bloch(x, y, z);
}

}  // namespace naqcsim
