#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "naqcsim/oracle.hpp"
#include "naqcsim/sweep.hpp"
#include "naqcsim/verify.hpp"

namespace {

using naqcsim::CoherenceMeasure;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string join_numbers(const std::vector<double>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += naqcsim::format_number(values[i]);
    }
    return out;
}

std::string nine_digits(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

naqcsim::Range parse_range(const std::string& token) {
    std::vector<double> parts;
    std::stringstream ss(token);
    std::string piece;
    while (std::getline(ss, piece, ':')) parts.push_back(std::stod(piece));
    if (parts.size() == 1) return {parts[0], parts[0], 1.0};
    if (parts.size() == 3) return {parts[0], parts[1], parts[2]};
    throw std::invalid_argument("range must be a single value or lo:hi:step");
}

// Writes through a file when a path is given, stdout otherwise.
void with_output(const std::string& path, const std::function<void(std::ostream&)>& body) {
    if (path.empty()) {
        body(std::cout);
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open " + path + " for writing");
    body(file);
    file.flush();
    if (!file) throw IoError("write to " + path + " failed");
}

int run_compute(const std::string& measure_tok, const std::vector<double>& chain) {
    const CoherenceMeasure measure = naqcsim::parse_measure(measure_tok);
    const naqcsim::NaqcResult res =
        naqcsim::sequential_naqc(naqcsim::singlet(), naqcsim::scenario_from_lambdas(chain, measure));
    std::cout << "measure: " << measure_tok << '\n'
              << "chain: " << join_numbers(chain) << '\n'
              << "value: " << naqcsim::format_number(res.value) << '\n'
              << "bound: " << naqcsim::format_number(res.bound) << '\n'
              << "violated: " << (res.violated ? "true" : "false") << '\n';
    return 0;
}

int run_sweep_cmd(const std::string& measure_tok, const std::vector<std::string>& range_tokens,
                  const std::string& format_tok, const std::string& out_path) {
    naqcsim::SweepSpec spec;
    spec.measure = naqcsim::parse_measure(measure_tok);
    for (const std::string& token : range_tokens) spec.ranges.push_back(parse_range(token));
    if (format_tok == "csv")
        spec.format = naqcsim::OutputFormat::Csv;
    else if (format_tok == "json")
        spec.format = naqcsim::OutputFormat::Json;
    else
        throw std::invalid_argument("format must be csv or json");

    const std::vector<naqcsim::RunRecord> records = naqcsim::run_sweep(spec);
    with_output(out_path, [&](std::ostream& out) {
        if (spec.format == naqcsim::OutputFormat::Csv)
            naqcsim::write_csv(out, records);
        else
            naqcsim::write_json(out, records);
    });
    return 0;
}

double threshold_for_target(const naqcsim::DensityMatrix& initial, CoherenceMeasure measure,
                            const std::vector<double>& predecessors) {
    return naqcsim::oracle::solve_threshold(
        [&](double l) {
            std::vector<double> chain = predecessors;
            chain.push_back(l);
            return naqcsim::sequential_naqc(initial, naqcsim::scenario_from_lambdas(chain, measure))
                .value;
        },
        naqcsim::complementarity_bound(measure), 1e-6, 1.0);
}

std::optional<std::string> closed_form_tag(CoherenceMeasure measure, int which_alice) {
    if (which_alice != 1) return std::nullopt;
    if (measure == CoherenceMeasure::L1) return "(sqrt(3)-1)/sqrt(2)";
    if (measure == CoherenceMeasure::SkewInformation) return "1/sqrt(2)";
    return std::nullopt;
}

int run_threshold(const std::string& measure_tok, int which_alice,
                  std::vector<double> predecessors, const std::string& curve_tok,
                  const std::string& out_path) {
    const CoherenceMeasure measure = naqcsim::parse_measure(measure_tok);
    if (which_alice < 1 || which_alice > 4)
        throw std::invalid_argument("--alice must lie in [1, 4]");
    const naqcsim::DensityMatrix initial = naqcsim::singlet();

    if (!curve_tok.empty()) {
        if (which_alice != 2)
            throw std::invalid_argument("--curve reports the second-Alice threshold curve only");
        const naqcsim::Range range = parse_range(curve_tok);
        with_output(out_path, [&](std::ostream& out) {
            out << "lambda1,lambda2_threshold\n";
            for (double l1 : naqcsim::grid_points(range)) {
                double thr = std::nan("");
                try {
                    thr = threshold_for_target(initial, measure, {l1});
                } catch (const naqcsim::oracle::NoSignChangeError&) {
                }
                out << naqcsim::format_number(l1) << ',' << nine_digits(thr) << '\n';
            }
        });
        return 0;
    }

    if (predecessors.empty() && which_alice > 1)
        for (int k = 1; k < which_alice; ++k)
            predecessors.push_back(threshold_for_target(initial, measure, predecessors));
    if (static_cast<int>(predecessors.size()) != which_alice - 1)
        throw std::invalid_argument("--predecessors must list exactly alice-1 values");

    const double threshold = threshold_for_target(initial, measure, predecessors);
    std::cout << "measure: " << measure_tok << '\n' << "alice: " << which_alice << '\n';
    if (!predecessors.empty()) {
        std::cout << "predecessors: ";
        for (std::size_t i = 0; i < predecessors.size(); ++i)
            std::cout << (i ? "," : "") << nine_digits(predecessors[i]);
        std::cout << '\n';
    }
    std::cout << "threshold: " << nine_digits(threshold) << '\n';
    const auto tag = closed_form_tag(measure, which_alice);
    std::cout << "closed_form: " << (tag ? *tag : std::string("none")) << '\n';
    return 0;
}

int run_verify(int samples, std::uint64_t seed, double grid_step) {
    const naqcsim::VerificationReport report = naqcsim::run_verification(samples, seed, grid_step);
    for (const naqcsim::CheckResult& c : report.checks) {
        std::cout << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << ": ";
        if (c.detail.empty()) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.3g", c.deviation);
            std::cout << "deviation " << buf;
        } else {
            std::cout << c.detail;
        }
        std::cout << '\n';
    }
    for (const std::string& note : report.notes) std::cout << "[INFO] " << note << '\n';
    std::cout << "overall: " << (report.all_passed ? "PASS" : "FAIL") << '\n';
    return report.all_passed ? 0 : 1;
}

int run_max_alices(const std::string& measure_tok, double grid_step) {
    const CoherenceMeasure measure = naqcsim::parse_measure(measure_tok);
    const naqcsim::MaxAlicesReport report = naqcsim::max_alices_report(measure, grid_step);
    std::cout << "measure: " << measure_tok << '\n'
              << "max_alices: " << report.max_alices << '\n';
    if (report.max_alices >= 2) {
        std::cout << "witness_lambda1_window: (" << naqcsim::format_number(report.window_low)
                  << ", " << naqcsim::format_number(report.window_high) << ")\n"
                  << "witness_chain: " << join_numbers(report.witness_chain) << '\n';
    }
    return 0;
}

int run_sample(const std::string& measure_tok, int count, std::uint64_t seed,
               const std::string& out_path) {
    std::vector<CoherenceMeasure> measures;
    if (measure_tok.empty())
        measures.assign(naqcsim::kAllMeasures.begin(), naqcsim::kAllMeasures.end());
    else
        measures.push_back(naqcsim::parse_measure(measure_tok));
    if (count < 1) throw std::invalid_argument("--count must be positive");

    std::vector<double> worst(measures.size(), 0.0);
    std::ostringstream csv;
    csv << "rx,ry,rz";
    for (CoherenceMeasure m : measures) csv << ",sum_" << naqcsim::measure_token(m);
    csv << '\n';

    for (int i = 0; i < count; ++i) {
        const naqcsim::DensityMatrix rho =
            naqcsim::random_qubit_state(seed + static_cast<std::uint64_t>(i));
        const auto bloch = naqcsim::bloch_vector(rho);
        csv << naqcsim::format_number(bloch[0]) << ',' << naqcsim::format_number(bloch[1]) << ','
            << naqcsim::format_number(bloch[2]);
        for (std::size_t m = 0; m < measures.size(); ++m) {
            const double sum = naqcsim::complementarity_sum(rho, measures[m]);
            worst[m] = std::max(worst[m], sum);
            csv << ',' << naqcsim::format_number(sum);
        }
        csv << '\n';
    }
    if (!out_path.empty())
        with_output(out_path, [&](std::ostream& out) { out << csv.str(); });

    std::cout << "samples: " << count << '\n' << "seed: " << seed << '\n';
    bool all_ok = true;
    for (std::size_t m = 0; m < measures.size(); ++m) {
        const double bound = naqcsim::complementarity_bound(measures[m]);
        const double slack =
            measures[m] == CoherenceMeasure::SkewInformation ? 1e-9 : 0.0;
        const bool ok = worst[m] <= bound + slack;
        all_ok = all_ok && ok;
        std::cout << "measure: " << naqcsim::measure_token(measures[m])
                  << " max_sum: " << naqcsim::format_number(worst[m])
                  << " bound: " << naqcsim::format_number(bound)
                  << " within_bound: " << (ok ? "true" : "false") << '\n';
    }
    std::cout << "overall: " << (all_ok ? "PASS" : "FAIL") << '\n';
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sequential unsharp-measurement coherence-advantage calculator"};
    app.require_subcommand(1);

    std::string measure_tok, format_tok = "csv", out_path, curve_tok;
    std::vector<double> chain, predecessors;
    std::vector<std::string> range_tokens;
    int which_alice = 1, samples = 100000, count = 100000;
    std::uint64_t seed = 12345;
    double grid_step = 0.01;

    CLI::App* compute = app.add_subcommand("compute", "Evaluate one sharpness chain");
    compute->add_option("--measure", measure_tok, "Coherence measure: l1, relent, skew")
        ->required();
    compute->add_option("--chain", chain, "Sharpness chain lambda1,...,lambdaN")
        ->required()
        ->delimiter(',');

    CLI::App* sweep = app.add_subcommand("sweep", "Grid sweep over sharpness chains");
    sweep->add_option("--measure", measure_tok, "Coherence measure: l1, relent, skew")->required();
    sweep->add_option("--range", range_tokens,
                      "Per-Alice range lo:hi:step or fixed value; repeat per chain slot")
        ->required()
        ->expected(1, 4)
        ->take_all();
    sweep->add_option("--format", format_tok, "Output format: csv or json");
    sweep->add_option("--out", out_path, "Output path (stdout when omitted)");

    CLI::App* threshold = app.add_subcommand("threshold", "Solve a sharpness threshold");
    threshold->add_option("--measure", measure_tok, "Coherence measure: l1, relent, skew")
        ->required();
    threshold->add_option("--alice", which_alice, "Which Alice the threshold is solved for");
    threshold->add_option("--predecessors", predecessors,
                          "Fixed predecessor sharpness values (defaults to their own thresholds)")
        ->delimiter(',');
    threshold->add_option("--curve", curve_tok,
                          "lambda1 range lo:hi:step; emits the lambda2 threshold curve (alice 2)");
    threshold->add_option("--out", out_path, "Output path for --curve (stdout when omitted)");

    CLI::App* verify = app.add_subcommand("verify", "Closed-form vs simulation verification");
    verify->add_option("--samples", samples, "Random states for the complementarity checks");
    verify->add_option("--seed", seed, "Sampling seed");
    verify->add_option("--grid-step", grid_step, "Observer-count search grid step");

    CLI::App* max_alices = app.add_subcommand("max-alices", "Sequential observer count");
    max_alices->add_option("--measure", measure_tok, "Coherence measure: l1, relent, skew")
        ->required();
    max_alices->add_option("--grid-step", grid_step, "Search grid step in (0, 0.1]");

    CLI::App* sample = app.add_subcommand("complementarity-sample",
                                          "Sample random states against the coherence bounds");
    sample->add_option("--measure", measure_tok, "Single measure (defaults to all three)");
    sample->add_option("--count", count, "Number of sampled states");
    sample->add_option("--seed", seed, "Sampling seed");
    sample->add_option("--out", out_path, "CSV path for per-state sums");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (compute->parsed()) return run_compute(measure_tok, chain);
        if (sweep->parsed()) return run_sweep_cmd(measure_tok, range_tokens, format_tok, out_path);
        if (threshold->parsed())
            return run_threshold(measure_tok, which_alice, predecessors, curve_tok, out_path);
        if (verify->parsed()) return run_verify(samples, seed, grid_step);
        if (max_alices->parsed()) return run_max_alices(measure_tok, grid_step);
        if (sample->parsed()) return run_sample(measure_tok, count, seed, out_path);
    } catch (const naqcsim::oracle::NoSignChangeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
