#include "naqcsim/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace naqcsim {

namespace {

void validate(const SweepSpec& spec) {
    const std::size_t n = spec.ranges.size();
    if (n < 1 || n > 4) throw std::invalid_argument("sweep chain length must lie in [1, 4]");
    for (std::size_t k = 0; k < n; ++k) {
        const Range& r = spec.ranges[k];
        if (!(r.lo > 0.0) || !(r.hi <= 1.0) || !(r.lo <= r.hi))
            throw std::invalid_argument("sweep range must satisfy 0 < lo <= hi <= 1");
        if (!(r.step > 0.0)) throw std::invalid_argument("sweep step must be positive");
        if (k + 1 < n && r.hi >= 1.0)
            throw std::invalid_argument("predecessor sweep range must stay below 1");
    }
}

}  // namespace

std::vector<double> grid_points(const Range& r) {
    const int count = r.hi > r.lo ? static_cast<int>(std::floor((r.hi - r.lo) / r.step + 1e-9)) + 1
                                  : 1;
    std::vector<double> points;
    points.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) points.push_back(std::min(r.lo + i * r.step, r.hi));
    return points;
}

std::vector<RunRecord> run_sweep(const SweepSpec& spec) {
    validate(spec);
    const std::size_t n = spec.ranges.size();
    std::vector<std::vector<double>> axes;
    axes.reserve(n);
    std::size_t rows = 1;
    for (const Range& r : spec.ranges) {
        axes.push_back(grid_points(r));
        rows *= axes.back().size();
    }

    const DensityMatrix initial = singlet();
    std::vector<RunRecord> records;
    records.reserve(rows);

    std::vector<std::size_t> idx(n, 0);
    for (std::size_t row = 0; row < rows; ++row) {
        std::vector<double> lambdas(n);
        for (std::size_t k = 0; k < n; ++k) lambdas[k] = axes[k][idx[k]];
        const NaqcResult r = sequential_naqc(initial, scenario_from_lambdas(lambdas, spec.measure));
        records.push_back({std::move(lambdas), r.value, r.bound, r.violated});

        for (std::size_t k = n; k-- > 0;) {  // last slot fastest, lexicographic rows
            if (++idx[k] < axes[k].size()) break;
            idx[k] = 0;
        }
    }
    return records;
}

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void write_csv(std::ostream& out, const std::vector<RunRecord>& records) {
    if (records.empty()) return;
    for (std::size_t k = 0; k < records.front().lambdas.size(); ++k)
        out << "lambda" << (k + 1) << ',';
    out << "value,bound,violated\n";
    for (const RunRecord& r : records) {
        for (double l : r.lambdas) out << format_number(l) << ',';
        out << format_number(r.value) << ',' << format_number(r.bound) << ','
            << (r.violated ? "true" : "false") << '\n';
    }
}

void write_json(std::ostream& out, const std::vector<RunRecord>& records) {
    out << "[\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
        const RunRecord& r = records[i];
        out << "  {\"lambdas\":[";
        for (std::size_t k = 0; k < r.lambdas.size(); ++k) {
            if (k) out << ',';
            out << format_number(r.lambdas[k]);
        }
        out << "],\"value\":" << format_number(r.value) << ",\"bound\":" << format_number(r.bound)
            << ",\"violated\":" << (r.violated ? "true" : "false") << '}'
            << (i + 1 < records.size() ? "," : "") << '\n';
    }
    out << "]\n";
}

const char* measure_token(CoherenceMeasure m) {
    switch (m) {
        case CoherenceMeasure::L1: return "l1";
        case CoherenceMeasure::RelativeEntropy: return "relent";
        case CoherenceMeasure::SkewInformation: return "skew";
    }
    throw std::invalid_argument("unknown measure");
}

CoherenceMeasure parse_measure(const std::string& token) {
    if (token == "l1") return CoherenceMeasure::L1;
    if (token == "relent") return CoherenceMeasure::RelativeEntropy;
    if (token == "skew") return CoherenceMeasure::SkewInformation;
    throw std::invalid_argument("measure must be one of l1, relent, skew");
}

}  // namespace naqcsim
