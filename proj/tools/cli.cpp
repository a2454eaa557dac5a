#include "cli.hpp"

#include "report.hpp"

#include "docclean/binarize.hpp"
#include "docclean/errors.hpp"
#include "docclean/filters.hpp"
#include "docclean/metrics.hpp"
#include "docclean/noise.hpp"
#include "docclean/pgm.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iterator>
#include <optional>

namespace docclean::cli {

namespace {

struct Options {
    std::string input;
    std::string output;
    int matrix_size = FilterParams::kDefaultMatrixSize;
    int k = FilterParams::kDefaultK;
    std::string mode = "buffered";
    bool ascii = false;

    double density = 0.0;
    double salt_fraction = 0.5;
    std::uint64_t seed = 0;

    std::string clean;
    std::vector<std::string> candidates;
    std::vector<std::string> methods;
    std::string truth;
    std::string format = "csv";
};

pgm::Format pgm_format(const Options& o) { return o.ascii ? pgm::Format::ascii : pgm::Format::binary; }

void add_io(CLI::App* cmd, Options& o) {
    cmd->add_option("input", o.input, "Input PGM (P2 or P5)")->required();
    cmd->add_option("output", o.output, "Output PGM")->required();
    cmd->add_flag("--ascii", o.ascii, "Write P2 instead of P5");
}

CLI::Option* add_matrix_size(CLI::App* cmd, Options& o) {
    return cmd->add_option("--matrix-size", o.matrix_size,
                           "Window parameter: even, >= 2; the window is (n+1)x(n+1)")
        ->capture_default_str();
}

CLI::Option* add_k(CLI::App* cmd, Options& o) {
    return cmd->add_option("--k", o.k, "Filter a pixel only if the window minimum occurs k times")
        ->capture_default_str();
}

CLI::Option* add_mode(CLI::App* cmd, Options& o) {
    return cmd->add_option("--mode", o.mode, "Scan strategy")
        ->check(CLI::IsMember({"buffered", "paper-literal"}))
        ->capture_default_str();
}

std::vector<CLI::Option*> add_noise(CLI::App* cmd, Options& o, bool require_density) {
    auto* density = cmd->add_option("--density", o.density, "Per-pixel corruption probability");
    if (require_density) density->required();
    return {density,
            cmd->add_option("--salt-fraction", o.salt_fraction,
                            "Probability that a corrupted pixel becomes white")
                ->capture_default_str(),
            cmd->add_option("--seed", o.seed, "Generator seed")->capture_default_str()};
}

int denoise(const Options& o) {
    const FilterParams params(o.matrix_size, o.k);
    const auto img = pgm::load_file(o.input);
    pgm::save_file(o.output, k_filter(img, params, report::parse_mode(o.mode)), pgm_format(o));
    return kSuccess;
}

int median(const Options& o) {
    const FilterParams params(o.matrix_size);
    const auto img = pgm::load_file(o.input);
    pgm::save_file(o.output, median_filter(img, params.matrix_size()), pgm_format(o));
    return kSuccess;
}

int binarize_cmd(const Options& o) {
    const auto img = pgm::load_file(o.input);
    pgm::save_file(o.output, render_binary(binarize(img)), pgm_format(o));
    return kSuccess;
}

int pipeline(const Options& o) {
    const FilterParams params(o.matrix_size, o.k);
    const auto img = pgm::load_file(o.input);
    pgm::save_file(o.output, render_binary(k_algorithm(img, params)), pgm_format(o));
    return kSuccess;
}

int noise(const Options& o) {
    const NoiseSpec spec{o.density, o.salt_fraction, o.seed};
    validate(spec);
    const auto img = pgm::load_file(o.input);
    pgm::save_file(o.output, add_salt_pepper(img, spec), pgm_format(o));
    return kSuccess;
}

[[noreturn]] void mismatch(const std::string& path, const GrayImage& got, const GrayImage& want) {
    throw UsageError(path + ": dimensions " + std::to_string(got.width()) + "x" +
                     std::to_string(got.height()) + " differ from the clean image's " +
                     std::to_string(want.width()) + "x" + std::to_string(want.height()));
}

struct EvaluateEcho {
    std::optional<FilterParams> filter;
    std::optional<FilterMode> mode;
    std::optional<NoiseSpec> noise;
};

int evaluate(const Options& o, const EvaluateEcho& echo) {
    if (!o.methods.empty() && o.methods.size() != o.candidates.size()) {
        throw ParameterError("--method given " + std::to_string(o.methods.size()) +
                             " times for " + std::to_string(o.candidates.size()) + " candidates");
    }
    std::vector<report::Method> methods;
    std::transform(o.methods.begin(), o.methods.end(), std::back_inserter(methods),
                   [](const std::string& m) { return report::parse_method(m); });
    const auto format = o.format == "json" ? report::Format::json : report::Format::csv;

    const auto clean = pgm::load_file(o.clean);
    std::optional<BinaryImage> truth;
    if (!o.truth.empty()) {
        const auto rendered = pgm::load_file(o.truth);
        if (rendered.width() != clean.width() || rendered.height() != clean.height()) {
            mismatch(o.truth, rendered, clean);
        }
        try {
            truth = binary_from_rendered(rendered);
        } catch (const UsageError& e) {
            throw UsageError(o.truth + ": " + e.what());
        }
    }

    std::vector<report::RunRecord> records;
    for (std::size_t i = 0; i < o.candidates.size(); ++i) {
        const auto& path = o.candidates[i];
        const auto candidate = pgm::load_file(path);
        if (candidate.width() != clean.width() || candidate.height() != clean.height()) {
            mismatch(path, candidate, clean);
        }
        report::RunRecord rec;
        rec.input_path = path;
        if (!methods.empty()) rec.method = methods[i];
        rec.filter = echo.filter;
        rec.mode = echo.mode;
        rec.noise = echo.noise;
        QualityReport q = compare(clean, candidate);
        if (truth) q.confusion = binary_confusion(binarize(candidate), *truth);
        rec.metrics = q;
        rec.output_path = o.output;
        records.push_back(std::move(rec));
    }

    const auto text = report::serialize(records, format);
    pgm::write_file(o.output, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
    return kSuccess;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Document image cleanup: conditional median filtering and mean-threshold "
                 "binarization",
                 "docclean"};
    app.require_subcommand(1);
    Options o;

    auto* denoise_cmd = app.add_subcommand("denoise", "Conditional median filter");
    add_io(denoise_cmd, o);
    add_matrix_size(denoise_cmd, o);
    add_k(denoise_cmd, o);
    add_mode(denoise_cmd, o);

    auto* median_cmd = app.add_subcommand("median", "Plain median filter");
    add_io(median_cmd, o);
    add_matrix_size(median_cmd, o);

    auto* binarize_sub = app.add_subcommand("binarize", "Global mean threshold, rendered 0/255");
    add_io(binarize_sub, o);

    auto* pipeline_cmd = app.add_subcommand("pipeline", "Conditional median filter, then binarize");
    add_io(pipeline_cmd, o);
    add_matrix_size(pipeline_cmd, o);
    add_k(pipeline_cmd, o);

    auto* noise_cmd = app.add_subcommand("noise", "Inject salt-and-pepper noise");
    add_io(noise_cmd, o);
    add_noise(noise_cmd, o, true);

    auto* evaluate_cmd = app.add_subcommand("evaluate", "Score candidates against a clean image");
    evaluate_cmd->add_option("clean", o.clean, "Clean reference PGM")->required();
    evaluate_cmd->add_option("candidates", o.candidates, "Candidate PGMs")->required();
    evaluate_cmd->add_option("-o,--output", o.output, "Report path")->required();
    evaluate_cmd->add_option("--truth", o.truth, "Ground-truth binary PGM (0 = ink, 255 = paper)");
    evaluate_cmd->add_option("--format", o.format, "Report format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    evaluate_cmd
        ->add_option("--method", o.methods,
                     "Method that produced each candidate, once per candidate, in order")
        ->check(CLI::IsMember({"median", "kfilter", "binarize", "pipeline"}));
    auto* ms_opt = add_matrix_size(evaluate_cmd, o);
    auto* k_opt = add_k(evaluate_cmd, o);
    auto* mode_opt = add_mode(evaluate_cmd, o);
    const auto noise_opts = add_noise(evaluate_cmd, o, false);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
            out << app.help();
            return kSuccess;
        }
        err << "docclean: error: " << e.what() << "\n";
        return kParamError;
    }

    try {
        if (denoise_cmd->parsed()) return denoise(o);
        if (median_cmd->parsed()) return median(o);
        if (binarize_sub->parsed()) return binarize_cmd(o);
        if (pipeline_cmd->parsed()) return pipeline(o);
        if (noise_cmd->parsed()) return noise(o);

        EvaluateEcho echo;
        if (ms_opt->count() || k_opt->count()) echo.filter = FilterParams(o.matrix_size, o.k);
        if (mode_opt->count()) echo.mode = report::parse_mode(o.mode);
        if (std::any_of(noise_opts.begin(), noise_opts.end(), [](auto* opt) { return opt->count() > 0; })) {
            echo.noise = NoiseSpec{o.density, o.salt_fraction, o.seed};
            validate(*echo.noise);
        }
        return evaluate(o, echo);
    } catch (const ParameterError& e) {
        err << "docclean: invalid parameter: " << e.what() << "\n";
        return kParamError;
    } catch (const std::exception& e) {
        err << "docclean: error: " << e.what() << "\n";
        return kIoError;
    }
}

} // namespace docclean::cli
