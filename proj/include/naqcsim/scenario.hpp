#pragma once

#include <vector>

#include "naqcsim/coherence.hpp"

namespace naqcsim {

// One sequential run: a chain of Alices with sharpness lambda_1..lambda_n, all
// measuring the same shared pair one after another. Only the last entry (the
// target, index n) has her advantage scored; everyone before her measures
// non-selectively and must stay strictly unsharp.
struct ScenarioConfig {
    std::vector<Sharpness> sharpness_chain;
    int target_index;  // 1-based; always equals the chain length
    CoherenceMeasure measure;

    ScenarioConfig(std::vector<Sharpness> chain, CoherenceMeasure m);
    ScenarioConfig(std::vector<Sharpness> chain, CoherenceMeasure m, int target);
};

ScenarioConfig scenario_from_lambdas(const std::vector<double>& lambdas, CoherenceMeasure m);

struct NaqcResult {
    double value;
    double bound;
    bool violated;  // value > bound, strictly
    ScenarioConfig config;
};

// Advantage functional for a single Alice measuring the given pair: half the
// sum, over her axis j, both outcomes, and Bob's bases i != j, of the
// outcome-probability-weighted coherence of Bob's post-measurement state.
// Exceeding complementarity_bound(measure) certifies the advantage.
double naqc_value(const DensityMatrix& state, CoherenceMeasure measure, Sharpness alice);

// Runs the chain: predecessors apply luders_nonselective along every axis
// combination in {x,y,z}^(n-1), the target is scored on each resulting state,
// and the outcomes are averaged with uniform weight 3^-(n-1) in a fixed
// enumeration order.
NaqcResult sequential_naqc(const DensityMatrix& initial, const ScenarioConfig& config);

// Largest n for which some sharpness assignment (lambda_1..lambda_n), last one
// sharp, lets every prefix k violate its own bound (prefix k scored as target
// with lambda_k). Nested grid search over predecessors with pattern-search
// refinement near the boundary. final_sharp=false instead searches the target
// sharpness over the grid too; the value is monotone in it, so the answer
// never changes.
int max_alices(CoherenceMeasure measure, double search_grid_step = 0.01, bool final_sharp = true);

// Same search, plus the witness data the reports print.
struct MaxAlicesReport {
    CoherenceMeasure measure;
    int max_alices;
    // Populated when max_alices >= 2: refined lambda_1 window of simultaneous
    // violation for the two-Alice scenario, and a mid-window witness chain.
    double window_low = 0.0;
    double window_high = 0.0;
    std::vector<double> witness_chain;
};

MaxAlicesReport max_alices_report(CoherenceMeasure measure, double search_grid_step = 0.01,
                                  bool final_sharp = true);

}  // namespace naqcsim
