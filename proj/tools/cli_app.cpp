#include "cli_app.hpp"

#include <filesystem>
#include <fstream>
#include <optional>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "tsallis/csv.hpp"
#include "tsallis/errors.hpp"
#include "tsallis/histogram.hpp"
#include "tsallis/image_io.hpp"
#include "tsallis/optimizer.hpp"
#include "tsallis/segmenter.hpp"
#include "tsallis/transition.hpp"

namespace tsallis::cli {

namespace {

using nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CommonOptions {
    std::string input;
    std::string manifest;
    bool dry_run = false;
};

struct HistogramOptions {
    std::string out;
};

struct ThresholdOptions {
    double q = 0.5;
    int classes = 2;
    std::string out;
    std::string landscape;
};

struct SweepOptions {
    SweepConfig cfg;
    std::string curve;
    std::string report;
    unsigned threads = 0;
};

struct SegmentOptions {
    std::string thresholds;
    std::string out;
};

void add_common(CLI::App& sub, CommonOptions& common) {
    sub.add_option("input", common.input, "Input image (PGM P2/P5 or 8-bit grayscale PNG)")->required();
    sub.add_option("--manifest", common.manifest, "Run manifest path (default: <primary output>.manifest.json)");
    sub.add_flag("--dry-run", common.dry_run, "Print the run manifest and exit without processing");
}

ordered_json manifest_base(const std::string& subcommand, const CommonOptions& common) {
    ordered_json m;
    m["tool"] = kToolName;
    m["version"] = kToolVersion;
    m["subcommand"] = subcommand;
    m["input"] = common.input;
    return m;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open " + path + " for writing");
    }
    return out;
}

void finish_output(std::ofstream& out, const std::string& path) {
    out.close();
    if (!out) {
        throw IoError("write failed: " + path);
    }
}

// Prints the manifest on dry runs. Returns true when processing should continue.
bool emit_manifest(const ordered_json& manifest, const CommonOptions& common, std::ostream& out) {
    if (common.dry_run) {
        out << manifest.dump(2) << '\n';
        return false;
    }
    return true;
}

void write_manifest(const ordered_json& manifest, const CommonOptions& common, const std::string& primary) {
    const std::string path = common.manifest.empty() ? primary + ".manifest.json" : common.manifest;
    std::ofstream f = open_output(path);
    f << manifest.dump(2) << '\n';
    finish_output(f, path);
}

void check_q(double q) {
    if (q == 1.0) {
        throw UsageError("--q 1 is out of range: the Tsallis form divides by q - 1 (q = 1 is the Shannon limit); "
                         "choose q in (0, 1)");
    }
    if (!(q > 0.0 && q < 1.0)) {
        throw UsageError(fmt::format("--q must lie in (0, 1), got {}", q));
    }
}

void check_classes(int classes) {
    if (classes < 2 || classes > kMaxClasses) {
        throw UsageError(fmt::format("--classes must be between 2 and {}, got {}", kMaxClasses, classes));
    }
}

int cmd_histogram(const CommonOptions& common, const HistogramOptions& opt, std::ostream& out) {
    ordered_json m = manifest_base("histogram", common);
    m["parameters"] = ordered_json::object();
    m["outputs"] = {{"histogram_csv", opt.out}};
    if (!emit_manifest(m, common, out)) {
        return kExitOk;
    }
    const Histogram h = histogram_of(read_image(common.input));
    std::ofstream f = open_output(opt.out);
    csv::write_histogram(f, h);
    finish_output(f, opt.out);
    write_manifest(m, common, opt.out);
    return kExitOk;
}

int cmd_threshold(const CommonOptions& common, const ThresholdOptions& opt, std::ostream& out) {
    check_q(opt.q);
    check_classes(opt.classes);
    ordered_json m = manifest_base("threshold", common);
    m["parameters"] = {{"q", opt.q}, {"classes", opt.classes}};
    m["outputs"] = {{"image", opt.out}, {"landscape_csv", opt.landscape}};
    if (!emit_manifest(m, common, out)) {
        return kExitOk;
    }
    const GrayImage img = read_image(common.input);
    const GrayDistribution d = normalize(histogram_of(img));
    const EntropicIndex q(opt.q);
    const OptimizationResult r = optimize(d, opt.classes, q);

    write_image(apply_thresholds(img, r.thresholds, LevelMap::evenly_spaced(opt.classes)), opt.out);
    if (!opt.landscape.empty()) {
        std::ofstream f = open_output(opt.landscape);
        csv::write_landscape_header(f, opt.classes);
        for_each_candidate(d, opt.classes, q,
                           [&](const ThresholdSet& ts, double s) { csv::write_landscape_row(f, ts, s); });
        finish_output(f, opt.landscape);
    }
    write_manifest(m, common, opt.out);
    out << "thresholds=" << r.thresholds.join(',') << '\n';
    out << "entropy=" << csv::format_entropy(r.entropy) << '\n';
    return kExitOk;
}

int cmd_sweep(const CommonOptions& common, const SweepOptions& opt, std::ostream& out) {
    try {
        opt.cfg.validate();
    } catch (const InvalidArgument& e) {
        throw UsageError(e.what());
    }
    ordered_json m = manifest_base("sweep", common);
    m["parameters"] = {{"q_min", opt.cfg.q_min},     {"q_max", opt.cfg.q_max},
                       {"q_step", opt.cfg.q_step},   {"classes", opt.cfg.classes},
                       {"jump", opt.cfg.jump_threshold}, {"refine_tol", opt.cfg.refine_tol},
                       {"threads", opt.threads}};
    m["outputs"] = {{"curve_csv", opt.curve}, {"report_csv", opt.report}};
    if (!emit_manifest(m, common, out)) {
        return kExitOk;
    }
    const GrayDistribution d = normalize(histogram_of(read_image(common.input)));
    const ThresholdCurve curve = sweep(d, opt.cfg, opt.threads);
    const TransitionReport report = analyze_transitions(d, curve, opt.cfg);

    std::ofstream fc = open_output(opt.curve);
    csv::write_curve(fc, curve, opt.cfg.classes);
    finish_output(fc, opt.curve);
    std::ofstream fr = open_output(opt.report);
    csv::write_report(fr, report);
    finish_output(fr, opt.report);
    write_manifest(m, common, opt.curve);

    for (const Transition& t : report.transitions) {
        out << "transition critical_q=" << csv::format_q(t.critical_q) << " max_jump=" << t.max_jump()
            << " thresholds " << t.below.join(';') << " -> " << t.above.join(';') << '\n';
    }
    for (const GradualChange& g : report.gradual) {
        out << "gradual change in [" << csv::format_q(g.q_low) << ", " << csv::format_q(g.q_high)
            << "] thresholds " << g.below.join(';') << " -> " << g.above.join(';') << '\n';
    }
    if (report.transitions.empty() && report.gradual.empty()) {
        out << "no transitions detected\n";
    }
    return kExitOk;
}

int cmd_segment(const CommonOptions& common, const SegmentOptions& opt, std::ostream& out) {
    std::optional<ThresholdSet> ts;
    try {
        ts = ThresholdSet::parse(opt.thresholds);
    } catch (const InvalidArgument& e) {
        throw UsageError(std::string("--thresholds: ") + e.what());
    }
    ordered_json m = manifest_base("segment", common);
    m["parameters"] = {{"thresholds", ts->levels()}};
    m["outputs"] = {{"image", opt.out}};
    if (!emit_manifest(m, common, out)) {
        return kExitOk;
    }
    const GrayImage img = read_image(common.input);
    write_image(apply_thresholds(img, *ts, LevelMap::evenly_spaced(ts->class_count())), opt.out);
    write_manifest(m, common, opt.out);
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Maximum Tsallis-entropy gray-level thresholding and entropic-index sweeps", kToolName};
    app.option_defaults()->always_capture_default();
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    CommonOptions common;

    HistogramOptions hist;
    CLI::App* sub_hist = app.add_subcommand("histogram", "Export the 256-bin gray-level histogram as CSV");
    add_common(*sub_hist, common);
    sub_hist->add_option("--out", hist.out, "Histogram CSV path")->required();

    ThresholdOptions thr;
    CLI::App* sub_thr = app.add_subcommand("threshold", "Select optimal thresholds at one q and segment the image");
    add_common(*sub_thr, common);
    sub_thr->add_option("--q", thr.q, "Entropic index in (0, 1)");
    sub_thr->add_option("--classes", thr.classes, "Number of classes (2..5)");
    sub_thr->add_option("--out", thr.out, "Segmented image path (PGM)")->required();
    sub_thr->add_option("--landscape", thr.landscape, "Optional CSV of total entropy for every candidate");

    SweepOptions swp;
    CLI::App* sub_swp = app.add_subcommand("sweep", "Sweep q, record threshold curve and detect transitions");
    add_common(*sub_swp, common);
    sub_swp->add_option("--q-min", swp.cfg.q_min, "Lower end of the q grid");
    sub_swp->add_option("--q-max", swp.cfg.q_max, "Upper end of the q grid");
    sub_swp->add_option("--q-step", swp.cfg.q_step, "Grid spacing");
    sub_swp->add_option("--classes", swp.cfg.classes, "Number of classes (2..5)");
    sub_swp->add_option("--jump", swp.cfg.jump_threshold, "Minimum threshold jump (gray levels) flagged as a transition");
    sub_swp->add_option("--refine-tol", swp.cfg.refine_tol, "Bracket width at which bisection stops");
    sub_swp->add_option("--curve", swp.curve, "Threshold curve CSV path")->required();
    sub_swp->add_option("--report", swp.report, "Transition report CSV path")->required();
    sub_swp->add_option("--threads", swp.threads, "Worker threads for the grid (0 = hardware concurrency)");

    SegmentOptions seg;
    CLI::App* sub_seg = app.add_subcommand("segment", "Apply manual thresholds with evenly spaced output tones");
    add_common(*sub_seg, common);
    sub_seg->add_option("--thresholds", seg.thresholds, "Strictly increasing list t1[,t2,...] in [0, 254]")
        ->required();
    sub_seg->add_option("--out", seg.out, "Segmented image path (PGM)")->required();

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const std::string& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (sub_hist->parsed()) {
            return cmd_histogram(common, hist, out);
        }
        if (sub_thr->parsed()) {
            return cmd_threshold(common, thr, out);
        }
        if (sub_swp->parsed()) {
            return cmd_sweep(common, swp, out);
        }
        return cmd_segment(common, seg, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InfeasiblePartition& e) {
        err << "error: image cannot be split into the requested classes: " << e.what() << '\n';
        return kExitFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

}  // namespace tsallis::cli
