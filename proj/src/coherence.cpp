#include "naqcsim/coherence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace naqcsim {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

double binary_entropy(double p) {
    if (p <= 0.0 || p >= 1.0) return 0.0;
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double diagonal_entropy(const ComplexMatrix& rho) {
    const double p = std::clamp(rho(0, 0).real(), 0.0, 1.0);
    return binary_entropy(p);
}

double entropy_sum_on_sphere(double theta, double phi) {
    const double rx = std::sin(theta) * std::cos(phi);
    const double ry = std::sin(theta) * std::sin(phi);
    const double rz = std::cos(theta);
    double s = 0.0;
    for (double r : {rx, ry, rz}) s += binary_entropy(0.5 * (1.0 + r));
    return s;  // pure state, so S(rho) = 0 and nothing is subtracted
}

}  // namespace

double complementarity_bound(CoherenceMeasure measure) {
    switch (measure) {
        case CoherenceMeasure::L1: return std::sqrt(6.0);
        case CoherenceMeasure::RelativeEntropy: return 2.23;
        case CoherenceMeasure::SkewInformation: return 2.0;
    }
    throw std::invalid_argument("unknown measure");
}

ComplexMatrix basis_rotation(PauliAxis axis) {
    switch (axis) {
        case PauliAxis::X:
            return ComplexMatrix::from_rows({{kInvSqrt2, kInvSqrt2}, {kInvSqrt2, -kInvSqrt2}});
        case PauliAxis::Y:
            return ComplexMatrix::from_rows({{kInvSqrt2, kInvSqrt2},
                                             {Complex(0.0, kInvSqrt2), Complex(0.0, -kInvSqrt2)}});
        case PauliAxis::Z:
            return ComplexMatrix::identity(2);
    }
    throw std::invalid_argument("unknown axis");
}

double coherence(const DensityMatrix& rho, CoherenceMeasure measure, PauliAxis basis) {
    if (rho.dim() != 2) throw std::invalid_argument("coherence expects a single-qubit state");

    if (measure == CoherenceMeasure::SkewInformation) {
        const ComplexMatrix root = sqrt_psd_2(rho.matrix());
        const ComplexMatrix sigma = pauli(basis);
        const double overlap = trace(root * sigma * root * sigma).real();
        return std::max(0.0, 1.0 - overlap);
    }

    const ComplexMatrix u = basis_rotation(basis);
    const ComplexMatrix rotated = adjoint(u) * rho.matrix() * u;

    if (measure == CoherenceMeasure::L1)
        return std::abs(rotated(0, 1)) + std::abs(rotated(1, 0));

    const double value = diagonal_entropy(rotated) - von_neumann_entropy(rotated);
    return std::max(0.0, value);
}

double complementarity_sum(const DensityMatrix& rho, CoherenceMeasure measure) {
    double s = 0.0;
    for (PauliAxis axis : kAllAxes) s += coherence(rho, measure, axis);
    return s;
}

double refine_entropy_bound(int grid) {
    if (grid < 8) throw std::invalid_argument("grid too coarse");
    const double pi = std::acos(-1.0);

    double best = 0.0, best_theta = 0.0, best_phi = 0.0;
    for (int i = 0; i <= grid; ++i) {
        const double theta = pi * i / grid;
        for (int j = 0; j < 2 * grid; ++j) {
            const double phi = pi * j / grid;
            const double v = entropy_sum_on_sphere(theta, phi);
            if (v > best) {
                best = v;
                best_theta = theta;
                best_phi = phi;
            }
        }
    }

    double step = pi / grid;
    while (step > 1e-10) {
        bool improved = false;
        const double candidates[4][2] = {{best_theta + step, best_phi},
                                         {best_theta - step, best_phi},
                                         {best_theta, best_phi + step},
                                         {best_theta, best_phi - step}};
        for (const auto& c : candidates) {
            const double v = entropy_sum_on_sphere(c[0], c[1]);
            if (v > best) {
                best = v;
                best_theta = c[0];
                best_phi = c[1];
                improved = true;
            }
        }
        if (!improved) step *= 0.5;
    }
    return best;
}

}  // namespace naqcsim
