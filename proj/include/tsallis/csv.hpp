#pragma once

#include <ostream>
#include <span>
#include <string>

#include "tsallis/histogram.hpp"
#include "tsallis/optimizer.hpp"
#include "tsallis/transition.hpp"

namespace tsallis::csv {

/// q with 6 decimals.
std::string format_q(double q);
/// 12 significant digits.
std::string format_entropy(double s);

/// `level,count`
void write_histogram(std::ostream& out, const Histogram& h);

/// `q,t1[,t2,...],entropy`
void write_curve(std::ostream& out, const ThresholdCurve& curve, int classes);

/// `q_low,q_high,critical_q,max_jump,thresholds_below,thresholds_above`
void write_report(std::ostream& out, const TransitionReport& report);

/// `t1[,t2,...],entropy`
void write_landscape_header(std::ostream& out, int classes);
void write_landscape_row(std::ostream& out, const ThresholdSet& ts, double entropy);

}  // namespace tsallis::csv
