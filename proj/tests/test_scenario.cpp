#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "naqcsim/oracle.hpp"
#include "naqcsim/scenario.hpp"

using namespace naqcsim;

namespace {

double chain_value(const std::vector<double>& lambdas, CoherenceMeasure m) {
    return sequential_naqc(singlet(), scenario_from_lambdas(lambdas, m)).value;
}

}  // namespace

TEST_CASE("scenario config validation") {
    CHECK_THROWS_AS(ScenarioConfig({}, CoherenceMeasure::L1), std::invalid_argument);
    const std::vector<Sharpness> chain = {Sharpness(0.6), Sharpness(1.0)};
    CHECK_THROWS_AS(ScenarioConfig(chain, CoherenceMeasure::L1, 1), std::invalid_argument);
    CHECK_THROWS_AS(ScenarioConfig(chain, CoherenceMeasure::L1, 3), std::invalid_argument);
    const ScenarioConfig ok(chain, CoherenceMeasure::L1);
    CHECK(ok.target_index == 2);
    CHECK_THROWS_AS(scenario_from_lambdas({0.5, 1.5}, CoherenceMeasure::L1),
                    std::invalid_argument);
}

TEST_CASE("one sharp alice on the singlet reaches every ceiling") {
    const DensityMatrix psi = singlet();
    for (CoherenceMeasure m : kAllMeasures) {
        const NaqcResult res = sequential_naqc(psi, scenario_from_lambdas({1.0}, m));
        CHECK(res.value == doctest::Approx(3.0).epsilon(1e-12));
        CHECK(res.violated);
        CHECK(res.bound == complementarity_bound(m));
        // single-link chains reduce to the plain functional
        CHECK(res.value == naqc_value(psi, m, Sharpness(1.0)));
    }
}

TEST_CASE("product and maximally mixed pairs never qualify") {
    ComplexMatrix zz(4);
    zz(0, 0) = 1.0;
    const DensityMatrix product(zz);
    ComplexMatrix mm = ComplexMatrix::identity(4);
    mm *= Complex(0.25);
    const DensityMatrix mixed(mm);

    for (CoherenceMeasure m : kAllMeasures) {
        const double vp = naqc_value(product, m, Sharpness(1.0));
        CHECK(vp == doctest::Approx(2.0).epsilon(1e-12));
        CHECK_FALSE(sequential_naqc(product, scenario_from_lambdas({1.0}, m)).violated);

        const double vm = naqc_value(mixed, m, Sharpness(1.0));
        CHECK(vm == doctest::Approx(0.0).scale(1).epsilon(1e-12));
    }
}

TEST_CASE("simulation agrees with the closed forms") {
    for (double l : {0.2, 0.517638, 0.75, 1.0}) {
        CHECK(chain_value({l}, CoherenceMeasure::L1) ==
              doctest::Approx(oracle::n1_l1(l)).epsilon(1e-12));
        CHECK(chain_value({l}, CoherenceMeasure::RelativeEntropy) ==
              doctest::Approx(oracle::n1_e(l)).epsilon(1e-12));
        CHECK(chain_value({l}, CoherenceMeasure::SkewInformation) ==
              doctest::Approx(oracle::n1_s(l)).epsilon(1e-12));
    }
    for (double l1 : {0.3, 0.6, 0.9}) {
        for (double l2 : {0.5, 1.0}) {
            CHECK(chain_value({l1, l2}, CoherenceMeasure::L1) ==
                  doctest::Approx(oracle::n2_l1(l1, l2)).epsilon(1e-12));
            CHECK(chain_value({l1, l2}, CoherenceMeasure::RelativeEntropy) ==
                  doctest::Approx(oracle::n2_e(l1, l2)).epsilon(1e-12));
            CHECK(chain_value({l1, l2}, CoherenceMeasure::SkewInformation) ==
                  doctest::Approx(oracle::n2_s(l1, l2)).epsilon(1e-12));
        }
    }
    CHECK(chain_value({0.55, 0.7, 1.0}, CoherenceMeasure::L1) ==
          doctest::Approx(oracle::n3_l1(0.55, 0.7, 1.0)).epsilon(1e-12));
}

TEST_CASE("sharper targets score higher, sharper predecessors disturb more") {
    for (CoherenceMeasure m : kAllMeasures) {
        double prev = 0.0;
        for (int i = 1; i <= 10; ++i) {
            const double v = chain_value({i / 10.0}, m);
            CHECK(v > prev);
            prev = v;
        }
        for (int i = 1; i < 9; ++i) {
            CHECK(chain_value({i / 10.0, 1.0}, m) > chain_value({(i + 1) / 10.0, 1.0}, m));
        }
    }
}

TEST_CASE("every predecessor axis chain disturbs the singlet identically") {
    // the averaged two-Alice value must equal the value conditioned on any
    // single first-axis choice, by the isotropy of the singlet
    const DensityMatrix psi = singlet();
    const Sharpness first(0.62);
    for (CoherenceMeasure m : kAllMeasures) {
        double per_axis[3];
        int k = 0;
        for (PauliAxis axis : kAllAxes) {
            const DensityMatrix after = luders_nonselective(psi, axis, first);
            per_axis[k++] = naqc_value(after, m, Sharpness(1.0));
        }
        CHECK(per_axis[0] == doctest::Approx(per_axis[1]).epsilon(1e-12));
        CHECK(per_axis[1] == doctest::Approx(per_axis[2]).epsilon(1e-12));
        CHECK(chain_value({0.62, 1.0}, m) == doctest::Approx(per_axis[0]).epsilon(1e-12));
    }
}

TEST_CASE("how many alices in a row can qualify") {
    CHECK(max_alices(CoherenceMeasure::L1, 0.02) == 2);
    CHECK(max_alices(CoherenceMeasure::RelativeEntropy, 0.02) == 1);
    CHECK(max_alices(CoherenceMeasure::SkewInformation, 0.02) == 1);
    // freeing the target sharpness cannot help: the value is monotone in it
    CHECK(max_alices(CoherenceMeasure::L1, 0.05, false) == 2);
    CHECK(max_alices(CoherenceMeasure::SkewInformation, 0.05, false) == 1);
    CHECK_THROWS_AS(max_alices(CoherenceMeasure::L1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(max_alices(CoherenceMeasure::L1, 0.0), std::invalid_argument);
}

TEST_CASE("two-alice witness window matches the closed-form bracket") {
    const MaxAlicesReport report = max_alices_report(CoherenceMeasure::L1, 0.02);
    CHECK(report.max_alices == 2);
    CHECK(report.window_low == doctest::Approx((std::sqrt(3.0) - 1.0) / std::sqrt(2.0))
                                   .epsilon(1e-6));
    CHECK(report.window_high == doctest::Approx(oracle::alice2_upper_l1()).epsilon(1e-6));
    REQUIRE(report.witness_chain.size() == 2);
    CHECK(report.witness_chain[1] == 1.0);
    CHECK(report.witness_chain[0] > report.window_low);
    CHECK(report.witness_chain[0] < report.window_high);

    // both Alices in the witness chain actually violate
    const double first = chain_value({report.witness_chain[0]}, CoherenceMeasure::L1);
    const double second = chain_value(report.witness_chain, CoherenceMeasure::L1);
    CHECK(first > std::sqrt(6.0));
    CHECK(second > std::sqrt(6.0));
}
