#include "naqcsim/oracle.hpp"

#include <cmath>

namespace naqcsim::oracle {

namespace {

const double kLog2e = 1.0 / std::log(2.0);

void check_unit(double v, const char* name) {
    if (!(v > 0.0) || !(v <= 1.0))
        throw std::domain_error(std::string(name) + " must lie in (0, 1]");
}

double x_log2_x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

// log2(e) * [2l/(1+l^2) * atanh(l) - atanh(l^2)]; equals 1/2 at l = 1.
double entropic_pair(double l) {
    if (l == 1.0) return 0.5;
    return kLog2e * (2.0 * l / (1.0 + l * l) * std::atanh(l) - std::atanh(l * l));
}

}  // namespace

double n1_l1(double l1) {
    check_unit(l1, "lambda1");
    return 6.0 * l1 / (1.0 + l1 * l1);
}

double n2_l1(double l1, double l2) {
    check_unit(l1, "lambda1");
    check_unit(l2, "lambda2");
    return 2.0 * l2 * (1.0 + 2.0 * std::sqrt(1.0 - l1 * l1)) / (1.0 + l2 * l2);
}

double n3_l1(double l1, double l2, double l3) {
    check_unit(l1, "lambda1");
    check_unit(l2, "lambda2");
    check_unit(l3, "lambda3");
    const double f1 = std::sqrt(1.0 - l1 * l1);
    const double f2 = std::sqrt(1.0 - l2 * l2);
    return 2.0 * l3 * (1.0 + 2.0 * f1 + 2.0 * f2 + 4.0 * f1 * f2) / (3.0 * (1.0 + l3 * l3));
}

double n1_e(double l1) {
    check_unit(l1, "lambda1");
    if (l1 == 1.0) return 3.0;  // removable divergence of the atanh terms
    return kLog2e * (12.0 * l1 / (1.0 + l1 * l1) * std::atanh(l1) - 6.0 * std::atanh(l1 * l1));
}

double n2_e(double l1, double l2) {
    check_unit(l1, "lambda1");
    check_unit(l2, "lambda2");
    const double x = std::sqrt(1.0 - l1 * l1) * l2 / (1.0 + l2 * l2);
    return 2.0 * entropic_pair(l2) + x_log2_x(1.0 + 2.0 * x) + x_log2_x(1.0 - 2.0 * x);
}

double n1_s(double l1) {
    check_unit(l1, "lambda1");
    return 6.0 * l1 * l1 / (1.0 + l1 * l1);
}

double n2_s(double l1, double l2) {
    check_unit(l1, "lambda1");
    check_unit(l2, "lambda2");
    const double a = 1.0 - l2 * l2;
    return 2.0 * (1.0 + 2.0 * l2 * l2 - std::sqrt(a * a + 4.0 * l1 * l1 * l2 * l2)) /
           (1.0 + l2 * l2);
}

double solve_threshold(const std::function<double(double)>& f, double bound, double lo,
                       double hi) {
    if (!(lo < hi)) throw std::domain_error("solve_threshold needs lo < hi");
    double glo = f(lo) - bound;
    double ghi = f(hi) - bound;
    if (glo == 0.0) return lo;
    if (ghi == 0.0) return hi;
    if ((glo > 0.0) == (ghi > 0.0))
        throw NoSignChangeError("no crossing of the bound inside the interval");

    for (int iter = 0; iter < 200 && hi - lo > 1e-10; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double gmid = f(mid) - bound;
        if (gmid == 0.0) return mid;
        if ((gmid > 0.0) == (glo > 0.0)) {
            lo = mid;
            glo = gmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double alice2_upper_l1() { return 0.5 * std::sqrt(2.0 * std::sqrt(6.0) - 3.0); }

double constrained_max(CoherenceMeasure measure, int which_alice) {
    if (which_alice != 2 && which_alice != 3)
        throw std::domain_error("constrained_max supports Alice 2 and Alice 3 only");

    const double bound = complementarity_bound(measure);
    std::function<double(double)> first;
    switch (measure) {
        case CoherenceMeasure::L1: first = n1_l1; break;
        case CoherenceMeasure::RelativeEntropy: first = n1_e; break;
        case CoherenceMeasure::SkewInformation: first = n1_s; break;
    }
    const double l1_star = solve_threshold(first, bound, 0.1, measure == CoherenceMeasure::RelativeEntropy ? 0.99 : 1.0);

    if (which_alice == 2) {
        switch (measure) {
            case CoherenceMeasure::L1: return n2_l1(l1_star, 1.0);
            case CoherenceMeasure::RelativeEntropy: return n2_e(l1_star, 1.0);
            case CoherenceMeasure::SkewInformation: return n2_s(l1_star, 1.0);
        }
    }

    // Alice 3 needs a lambda_2 at which Alice 2 still violates; that crossing
    // exists for the l1 norm only.
    if (measure != CoherenceMeasure::L1)
        throw std::domain_error("no feasible predecessor region for Alice 3 with this measure");
    const double l2_star =
        solve_threshold([l1_star](double l2) { return n2_l1(l1_star, l2); }, bound, 0.1, 1.0);
    return n3_l1(l1_star, l2_star, 1.0);
}

}  // namespace naqcsim::oracle
