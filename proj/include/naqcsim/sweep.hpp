#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "naqcsim/scenario.hpp"

namespace naqcsim {

enum class OutputFormat { Csv, Json };

struct Range {
    double lo;
    double hi;
    double step;
};

// One grid sweep over the sharpness chain of a fixed-length scenario. Each
// chain slot gets its own range; a fixed value is a degenerate range lo = hi.
struct SweepSpec {
    CoherenceMeasure measure;
    std::vector<Range> ranges;  // slot k sweeps lambda_{k+1}; size is the chain length
    OutputFormat format = OutputFormat::Csv;
};

struct RunRecord {
    std::vector<double> lambdas;
    double value;
    double bound;
    bool violated;
};

// Grid lo, lo+step, ..., capped at hi. The count is computed once from the
// range width so accumulated rounding cannot add or drop a point.
std::vector<double> grid_points(const Range& r);

// All grid combinations in lexicographic order (first slot slowest), each
// evaluated through the full simulation.
std::vector<RunRecord> run_sweep(const SweepSpec& spec);

// Shortest-width rendering with 12 significant digits.
std::string format_number(double v);

void write_csv(std::ostream& out, const std::vector<RunRecord>& records);
void write_json(std::ostream& out, const std::vector<RunRecord>& records);

const char* measure_token(CoherenceMeasure m);          // l1 | relent | skew
CoherenceMeasure parse_measure(const std::string& token);

}  // namespace naqcsim
