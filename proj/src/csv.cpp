#include "tsallis/csv.hpp"

#include <fmt/format.h>

namespace tsallis::csv {

std::string format_q(double q) { return fmt::format("{:.6f}", q); }

std::string format_entropy(double s) { return fmt::format("{:.12g}", s); }

void write_histogram(std::ostream& out, const Histogram& h) {
    out << "level,count\n";
    for (int i = 0; i < kLevels; ++i) {
        out << i << ',' << h.count(i) << '\n';
    }
}

namespace {

void write_threshold_header(std::ostream& out, int classes) {
    for (int j = 1; j < classes; ++j) {
        out << (j > 1 ? ",t" : "t") << j;
    }
}

}  // namespace

void write_curve(std::ostream& out, const ThresholdCurve& curve, int classes) {
    out << "q,";
    write_threshold_header(out, classes);
    out << ",entropy\n";
    for (const CurveRow& row : curve.rows) {
        out << format_q(row.q) << ',' << row.thresholds.join(',') << ',' << format_entropy(row.entropy) << '\n';
    }
}

void write_report(std::ostream& out, const TransitionReport& report) {
    out << "q_low,q_high,critical_q,max_jump,thresholds_below,thresholds_above\n";
    for (const Transition& t : report.transitions) {
        out << format_q(t.q_low) << ',' << format_q(t.q_high) << ',' << format_q(t.critical_q) << ','
            << t.max_jump() << ',' << t.below.join(';') << ',' << t.above.join(';') << '\n';
    }
}

void write_landscape_header(std::ostream& out, int classes) {
    write_threshold_header(out, classes);
    out << ",entropy\n";
}

void write_landscape_row(std::ostream& out, const ThresholdSet& ts, double entropy) {
    out << ts.join(',') << ',' << format_entropy(entropy) << '\n';
}

}  // namespace tsallis::csv
