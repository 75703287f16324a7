#pragma once

// Command-line front end: entry, gram, verify, expand-log, bilinear.
// Data goes to `out`, diagnostics to `err`.

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

#include <CLI11.hpp>

#include "logleg/analysis.hpp"
#include "logleg/exact_moments.hpp"
#include "logleg/format.hpp"
#include "logleg/verification.hpp"

namespace logleg::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsageError = 1,
    kVerificationFailure = 2,
    kNumericalFailure = 3,
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Hooks {
    /// Replaces the closed-form value checked by `verify`.
    EntryFunction verify_candidate;
};

namespace detail {

using format::OutputFormat;

inline OutputFormat parse_format(const std::string& name)
{
    if (name == "plain")
        return OutputFormat::plain;
    if (name == "csv")
        return OutputFormat::csv;
    if (name == "json")
        return OutputFormat::json;
    throw UsageError("unknown format '" + name + "'");
}

inline Order parse_order(const std::string& text, std::size_t cap, const char* what)
{
    unsigned long long value = 0;
    const char* first = text.data();
    const char* last = first + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (text.empty() || ec != std::errc{} || ptr != last)
        throw UsageError(std::string(what) + " must be a non-negative integer, got '" + text + "'");
    if (value > cap) {
        throw UsageError(std::string(what) + " " + text + " exceeds the maximum of " +
                         std::to_string(cap));
    }
    return Order(static_cast<std::size_t>(value));
}

struct Settings {
    std::size_t max_order_cap = kDefaultMaxOrder;
    std::size_t panels = kDefaultPanels;
    std::size_t quad_degree = kDefaultRuleDegree;
    Limits limits() const { return Limits{max_order_cap}; }
};

inline int cmd_entry(const Settings& settings, const std::string& n_text,
                     const std::string& m_text, bool exact, OutputFormat fmt, std::ostream& out)
{
    const Order n = parse_order(n_text, settings.max_order_cap, "n");
    const Order m = parse_order(m_text, settings.max_order_cap, "m");
    const ExactRational value = entry(n, m, settings.limits());
    const std::string rendered =
        exact ? format::render(value) : format::render(to_double(value));
    switch (fmt) {
    case OutputFormat::plain:
        out << rendered << '\n';
        break;
    case OutputFormat::csv:
        out << n.value() << ',' << m.value() << ',' << rendered << '\n';
        break;
    case OutputFormat::json: {
        format::Json doc;
        doc["n"] = n.value();
        doc["m"] = m.value();
        doc["mode"] = exact ? "exact" : "float";
        doc["value"] = exact ? format::to_json_value(value) : format::to_json_value(to_double(value));
        out << doc.dump() << '\n';
        break;
    }
    }
    return kSuccess;
}

inline int cmd_gram(const Settings& settings, const std::string& size_text, bool exact,
                    OutputFormat fmt, const std::string& destination, std::ostream& out)
{
    const Order size = parse_order(size_text, settings.max_order_cap, "size");
    const auto gram = gram_exact(size, settings.limits());
    const std::string text =
        exact ? format::render_gram(gram, fmt) : format::render_gram(to_float(gram), fmt);
    if (destination.empty() || destination == "-") {
        out << text;
        return kSuccess;
    }
    std::ofstream file(destination, std::ios::binary);
    if (!file)
        throw UsageError("cannot open '" + destination + "' for writing");
    file << text;
    if (!file.flush())
        throw UsageError("failed writing '" + destination + "'");
    return kSuccess;
}

inline std::string pair_label(const PairResult& p)
{
    return "(" + std::to_string(p.n) + "," + std::to_string(p.m) + ")";
}

inline std::string reference_text(const PairResult& p)
{
    if (p.exact_reference)
        return format::render(*p.exact_reference);
    return format::render(*p.quad_reference);
}

inline void render_report(const VerificationReport& report, OutputFormat fmt, std::ostream& out)
{
    const std::size_t total = report.pairs.size();
    const std::size_t passed = report.pass_count();
    switch (fmt) {
    case OutputFormat::plain: {
        if (report.oracle == OracleKind::exact) {
            out << passed << '/' << total << " pairs exact\n";
        } else {
            out << passed << '/' << total << " pairs within tolerance (relative "
                << format::render(kQuadRelativeTolerance) << " or absolute "
                << format::render(kQuadAbsoluteTolerance) << ")\n";
            out << "worst relative deviation " << format::render(report.worst_rel_deviation)
                << " at " << pair_label(report.pairs[report.worst_rel_index]) << '\n';
            out << "worst absolute deviation " << format::render(report.worst_abs_deviation)
                << " at " << pair_label(report.pairs[report.worst_abs_index]) << '\n';
        }
        for (const auto& p : report.pairs) {
            if (!p.pass) {
                out << "FAIL " << pair_label(p) << " closed form " << format::render(p.closed_form)
                    << " oracle " << reference_text(p) << '\n';
            }
        }
        break;
    }
    case OutputFormat::csv:
        for (const auto& p : report.pairs) {
            out << p.n << ',' << p.m << ',' << format::render(p.closed_form) << ','
                << reference_text(p) << ',' << format::render(p.abs_deviation) << ','
                << format::render(p.rel_deviation) << ',' << (p.pass ? "pass" : "fail") << '\n';
        }
        break;
    case OutputFormat::json: {
        format::Json doc;
        doc["oracle"] = to_string(report.oracle);
        doc["max_order"] = report.max_order;
        doc["pairs_total"] = total;
        doc["pairs_passed"] = passed;
        doc["passed"] = report.passed();
        doc["worst_abs_deviation"] = format::to_json_value(report.worst_abs_deviation);
        doc["worst_rel_deviation"] = format::to_json_value(report.worst_rel_deviation);
        format::Json pairs = format::Json::array();
        for (const auto& p : report.pairs) {
            format::Json row;
            row["n"] = p.n;
            row["m"] = p.m;
            row["closed_form"] = format::render(p.closed_form);
            if (p.exact_reference)
                row["reference"] = format::render(*p.exact_reference);
            else
                row["reference"] = format::to_json_value(*p.quad_reference);
            row["abs_deviation"] = format::to_json_value(p.abs_deviation);
            row["rel_deviation"] = format::to_json_value(p.rel_deviation);
            row["pass"] = p.pass;
            pairs.push_back(std::move(row));
        }
        doc["pairs"] = std::move(pairs);
        out << doc.dump() << '\n';
        break;
    }
    }
}

inline int cmd_verify(const Settings& settings, const std::string& max_order_text,
                      const std::string& oracle_name, OutputFormat fmt, const Hooks& hooks,
                      std::ostream& out)
{
    OracleKind oracle;
    if (oracle_name == "exact")
        oracle = OracleKind::exact;
    else if (oracle_name == "quad")
        oracle = OracleKind::quad;
    else
        throw UsageError("unknown oracle '" + oracle_name + "'");

    const std::size_t cap = oracle == OracleKind::exact ? kExactVerifyCap : settings.max_order_cap;
    const Order max_order = parse_order(max_order_text, cap, "max-order");

    VerifyOptions options;
    options.limits = settings.limits();
    options.panels = settings.panels;
    options.rule_degree = settings.quad_degree;
    options.candidate = hooks.verify_candidate;
    const VerificationReport report = verify_range(max_order, oracle, options);
    render_report(report, fmt, out);
    return report.passed() ? kSuccess : kVerificationFailure;
}

inline int cmd_expand_log(const Settings& settings, const std::string& order_text,
                          bool degree_given, OutputFormat fmt, std::ostream& out)
{
    const Order order = parse_order(order_text, kMaxExpansionOrder, "order");
    ExpansionOptions options;
    options.panels = settings.panels;
    options.rule_degree = degree_given ? settings.quad_degree : 0;
    const ExpansionReport report = expansion_l2_error(order, options);

    switch (fmt) {
    case OutputFormat::plain: {
        out << "c = [";
        for (std::size_t n = 0; n < report.coefficients.size(); ++n)
            out << (n > 0 ? ", " : "") << format::render(report.coefficients[n]);
        out << "]\nl2_error = " << format::render(report.l2_error) << '\n';
        break;
    }
    case OutputFormat::csv:
        for (std::size_t n = 0; n < report.coefficients.size(); ++n) {
            out << n << ',' << format::render(report.exact_coefficients[n]) << ','
                << format::render(report.coefficients[n]) << '\n';
        }
        out << "l2_error," << format::render(report.l2_error) << '\n';
        break;
    case OutputFormat::json: {
        format::Json doc;
        doc["order"] = order.value();
        format::Json exact = format::Json::array();
        format::Json floating = format::Json::array();
        for (std::size_t n = 0; n < report.coefficients.size(); ++n) {
            exact.push_back(format::render(report.exact_coefficients[n]));
            floating.push_back(format::to_json_value(report.coefficients[n]));
        }
        doc["coefficients"] = std::move(floating);
        doc["exact_coefficients"] = std::move(exact);
        doc["l2_error"] = format::to_json_value(report.l2_error);
        out << doc.dump() << '\n';
        break;
    }
    }
    return kSuccess;
}

inline int cmd_bilinear(const Settings& settings, const std::string& a_path,
                        const std::string& b_path, const std::string& size_text, std::ostream& out)
{
    const format::CoeffFile a = format::read_coeff_file(a_path);
    const format::CoeffFile b = format::read_coeff_file(b_path);
    const std::size_t len_a = a.kind == format::CoeffKind::exact ? a.exact.size() : a.floating.size();
    const std::size_t len_b = b.kind == format::CoeffKind::exact ? b.exact.size() : b.floating.size();

    Order size(std::max(len_a, len_b) - 1);
    if (!size_text.empty())
        size = parse_order(size_text, settings.max_order_cap, "gram-size");
    const auto gram = gram_exact(size, settings.limits());

    if (a.kind == format::CoeffKind::exact && b.kind == format::CoeffKind::exact) {
        out << format::render(bilinear_log_form(a.exact, b.exact, gram)) << '\n';
    } else {
        out << format::render(bilinear_log_form(format::as_floating(a), format::as_floating(b),
                                                to_float(gram)))
            << '\n';
    }
    return kSuccess;
}

} // namespace detail

/// Runs the tool on `args` (without the program name) and returns the exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
               const Hooks& hooks = {})
{
    CLI::App app{"Log-weighted Gram matrix of shifted Legendre polynomials", "logleg"};
    app.require_subcommand(1);

    detail::Settings settings;
    app.add_option("--max-order-cap", settings.max_order_cap, "Ceiling on any polynomial order")
        ->capture_default_str();
    app.add_option("--panels", settings.panels, "Number of dyadic quadrature panels")
        ->capture_default_str();
    auto* degree_opt = app.add_option("--quad-degree", settings.quad_degree,
                                      "Gauss-Legendre nodes per panel")
                           ->capture_default_str();

    std::string format_name = "plain";
    bool exact = false;

    auto* entry_cmd = app.add_subcommand("entry", "Print one entry N[n,m]");
    std::string entry_n, entry_m;
    entry_cmd->add_option("n", entry_n)->required();
    entry_cmd->add_option("m", entry_m)->required();
    entry_cmd->add_flag("--exact", exact, "Print the reduced fraction");
    entry_cmd->add_option("--format", format_name, "plain, csv or json");

    auto* gram_cmd = app.add_subcommand("gram", "Print the (size+1)^2 Gram matrix");
    std::string gram_size, gram_out;
    gram_cmd->add_option("size", gram_size)->required();
    gram_cmd->add_flag("--exact", exact, "Print reduced fractions");
    gram_cmd->add_option("--format", format_name, "plain, csv or json");
    gram_cmd->add_option("--out", gram_out, "Destination file (default: standard output)");

    auto* verify_cmd = app.add_subcommand("verify", "Compare closed forms against an oracle");
    std::string verify_max, oracle_name = "exact";
    verify_cmd->add_option("--max-order", verify_max, "Largest order checked")->required();
    verify_cmd->add_option("--oracle", oracle_name, "exact or quad")->capture_default_str();
    verify_cmd->add_option("--format", format_name, "plain, csv or json");

    auto* expand_cmd = app.add_subcommand("expand-log", "Legendre expansion of log(x)");
    std::string expand_order;
    expand_cmd->add_option("order", expand_order)->required();
    expand_cmd->add_option("--format", format_name, "plain, csv or json");

    auto* bilinear_cmd = app.add_subcommand("bilinear", "Evaluate a^T N b from coefficient files");
    std::string a_path, b_path, bilinear_size;
    bilinear_cmd->add_option("a", a_path)->required();
    bilinear_cmd->add_option("b", b_path)->required();
    bilinear_cmd->add_option("--gram-size", bilinear_size, "Order of the Gram matrix used");

    for (auto* sub : {entry_cmd, gram_cmd, verify_cmd, expand_cmd, bilinear_cmd})
        sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        const auto fmt = detail::parse_format(format_name);
        if (*entry_cmd)
            return detail::cmd_entry(settings, entry_n, entry_m, exact, fmt, out);
        if (*gram_cmd)
            return detail::cmd_gram(settings, gram_size, exact, fmt, gram_out, out);
        if (*verify_cmd)
            return detail::cmd_verify(settings, verify_max, oracle_name, fmt, hooks, out);
        if (*expand_cmd)
            return detail::cmd_expand_log(settings, expand_order, degree_opt->count() > 0, fmt, out);
        if (*bilinear_cmd)
            return detail::cmd_bilinear(settings, a_path, b_path, bilinear_size, out);
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kNumericalFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

} // namespace logleg::cli
