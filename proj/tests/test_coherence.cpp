#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "naqcsim/coherence.hpp"
#include "naqcsim/quantum.hpp"

using namespace naqcsim;

namespace {

double h2(double p) {
    double out = 0.0;
    if (p > 0.0) out -= p * std::log2(p);
    if (p < 1.0) out -= (1.0 - p) * std::log2(1.0 - p);
    return out;
}

int axis_index(PauliAxis axis) {
    return axis == PauliAxis::X ? 0 : axis == PauliAxis::Y ? 1 : 2;
}

}  // namespace

TEST_CASE("basis rotations are unitary and diagonalize their own axis") {
    for (PauliAxis axis : kAllAxes) {
        const ComplexMatrix u = basis_rotation(axis);
        CHECK((adjoint(u) * u).max_abs_diff(ComplexMatrix::identity(2)) < 1e-15);
        const ComplexMatrix rotated = adjoint(u) * pauli(axis) * u;
        CHECK(std::abs(rotated(0, 1)) < 1e-15);
        CHECK(std::abs(rotated(1, 0)) < 1e-15);
        CHECK(rotated(0, 0).real() == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(rotated(1, 1).real() == doctest::Approx(-1.0).epsilon(1e-14));
    }
}

TEST_CASE("reference values on simple states") {
    const DensityMatrix plus_x = state_from_bloch(1.0 - 1e-15, 0.0, 0.0);
    const DensityMatrix zero = state_from_bloch(0.0, 0.0, 1.0 - 1e-15);
    const DensityMatrix maximally_mixed = state_from_bloch(0.0, 0.0, 0.0);

    for (CoherenceMeasure m : kAllMeasures) {
        // an equatorial pure state is maximally coherent for the orthogonal axis
        CHECK(coherence(plus_x, m, PauliAxis::Z) == doctest::Approx(1.0).epsilon(1e-7));
        // basis states and the maximally mixed state carry none
        CHECK(coherence(zero, m, PauliAxis::Z) == doctest::Approx(0.0).scale(1).epsilon(1e-7));
        CHECK(coherence(maximally_mixed, m, PauliAxis::Z) ==
              doctest::Approx(0.0).scale(1).epsilon(1e-12));
        CHECK(coherence(plus_x, m, PauliAxis::X) == doctest::Approx(0.0).scale(1).epsilon(1e-7));
    }
}

TEST_CASE("closed forms in terms of the bloch vector") {
    const double radii[] = {0.999999, 0.9, 0.7, 0.4, 0.15};
    int idx = 0;
    for (double radius : radii) {
        for (int t = 1; t < 6; ++t) {
            for (int p = 0; p < 6; ++p) {
                const double theta = t * 0.5, phi = p * 1.0;
                const double r[3] = {radius * std::sin(theta) * std::cos(phi),
                                     radius * std::sin(theta) * std::sin(phi),
                                     radius * std::cos(theta)};
                const DensityMatrix rho = state_from_bloch(r[0], r[1], r[2]);
                ++idx;
                for (PauliAxis axis : kAllAxes) {
                    const int i = axis_index(axis);
                    const int j = (i + 1) % 3, k = (i + 2) % 3;

                    const double l1 = std::sqrt(r[j] * r[j] + r[k] * r[k]);
                    CHECK(coherence(rho, CoherenceMeasure::L1, axis) ==
                          doctest::Approx(l1).scale(1).epsilon(1e-10));

                    const double rel = h2(0.5 * (1.0 + r[i])) - h2(0.5 * (1.0 + radius));
                    CHECK(coherence(rho, CoherenceMeasure::RelativeEntropy, axis) ==
                          doctest::Approx(rel).scale(1).epsilon(1e-9));

                    const double g = std::sqrt(std::max(0.0, 1.0 - radius * radius));
                    const double skew =
                        (1.0 - g) * (1.0 - (r[i] * r[i]) / (radius * radius));
                    CHECK(coherence(rho, CoherenceMeasure::SkewInformation, axis) ==
                          doctest::Approx(skew).scale(1).epsilon(1e-9));
                }
            }
        }
    }
    CHECK(idx == 150);
}

TEST_CASE("coherence is covariant under the basis change unitary") {
    const ComplexMatrix h = basis_rotation(PauliAxis::X);
    for (std::uint64_t seed = 10; seed < 60; ++seed) {
        const DensityMatrix rho = random_qubit_state(seed);
        const DensityMatrix rotated(h * rho.matrix() * adjoint(h));
        for (CoherenceMeasure m : kAllMeasures) {
            CHECK(coherence(rho, m, PauliAxis::X) ==
                  doctest::Approx(coherence(rotated, m, PauliAxis::Z)).scale(1).epsilon(1e-11));
        }
    }
}

TEST_CASE("complementarity sums respect their ceilings on random states") {
    for (std::uint64_t seed = 1; seed <= 2000; ++seed) {
        const DensityMatrix rho = random_qubit_state(seed);
        for (CoherenceMeasure m : kAllMeasures) {
            CHECK(complementarity_sum(rho, m) <= complementarity_bound(m) + 1e-9);
        }
    }
}

TEST_CASE("states that meet the ceilings") {
    const double c = 1.0 / std::sqrt(3.0);
    const DensityMatrix diag_pure = state_from_bloch(c - 1e-16, c - 1e-16, c - 1e-16);
    CHECK(complementarity_sum(diag_pure, CoherenceMeasure::L1) ==
          doctest::Approx(complementarity_bound(CoherenceMeasure::L1)).epsilon(1e-9));

    const DensityMatrix pole = state_from_bloch(0.0, 0.0, 1.0 - 1e-15);
    CHECK(complementarity_sum(pole, CoherenceMeasure::SkewInformation) ==
          doctest::Approx(complementarity_bound(CoherenceMeasure::SkewInformation))
              .epsilon(1e-7));
}

TEST_CASE("entropy sum peak sits just above the working ceiling") {
    // the conventional ceiling 2.23 is a rounded-down version of the true
    // pure-state maximum; keep track of how far apart they are
    const double peak = refine_entropy_bound(60);
    CHECK(peak == doctest::Approx(2.2320227).epsilon(1e-6));
    const double ceiling = complementarity_bound(CoherenceMeasure::RelativeEntropy);
    CHECK(peak > ceiling);
    CHECK(peak - ceiling < 0.005);
}
