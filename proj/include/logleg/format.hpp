#pragma once

// Text formats shared by the command-line tool: CSV/JSON/plain rendering of
// Gram matrices and the one-value-per-line coefficient file format.

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <json.hpp>

#include "logleg/exact_moments.hpp"
#include "logleg/rational.hpp"

namespace logleg::format {

using Json = nlohmann::ordered_json;

enum class OutputFormat { plain, csv, json };

inline std::string render(const ExactRational& value) { return to_fraction_string(value); }

inline std::string render(double value)
{
    if (!std::isfinite(value))
        throw NumericalError("non-finite value cannot be serialized");
    return to_shortest_string(value);
}

inline Json to_json_value(const ExactRational& value) { return render(value); }

inline Json to_json_value(double value)
{
    if (!std::isfinite(value))
        throw NumericalError("non-finite value cannot be serialized");
    return value;
}

template <typename T>
Json gram_to_json(const GramMatrix<T>& gram)
{
    Json rows = Json::array();
    for (std::size_t n = 0; n < gram.dimension(); ++n) {
        Json row = Json::array();
        for (std::size_t m = 0; m < gram.dimension(); ++m)
            row.push_back(to_json_value(gram(n, m)));
        rows.push_back(std::move(row));
    }
    Json doc;
    doc["size"] = gram.order().value();
    doc["mode"] = to_string(GramMatrix<T>::mode);
    doc["entries"] = std::move(rows);
    return doc;
}

/// Rows joined by `separator`, LF line endings, no header.
template <typename T>
std::string gram_to_text(const GramMatrix<T>& gram, std::string_view separator)
{
    std::string out;
    for (std::size_t n = 0; n < gram.dimension(); ++n) {
        for (std::size_t m = 0; m < gram.dimension(); ++m) {
            if (m > 0)
                out += separator;
            out += render(gram(n, m));
        }
        out += '\n';
    }
    return out;
}

template <typename T>
std::string render_gram(const GramMatrix<T>& gram, OutputFormat format)
{
    switch (format) {
    case OutputFormat::json:
        return gram_to_json(gram).dump() + "\n";
    case OutputFormat::csv:
        return gram_to_text(gram, ",");
    case OutputFormat::plain:
        return gram_to_text(gram, " ");
    }
    return {};
}

/// Rebuilds an exact matrix from the JSON written by gram_to_json.
inline GramMatrix<ExactRational> exact_gram_from_json(const Json& doc)
{
    if (doc.at("mode").get<std::string>() != "exact")
        throw DomainError("expected an exact Gram matrix document");
    const auto size = doc.at("size").get<std::size_t>();
    GramMatrix<ExactRational> gram{Order(size)};
    const Json& rows = doc.at("entries");
    if (rows.size() != gram.dimension())
        throw DomainError("row count does not match size");
    for (std::size_t n = 0; n < gram.dimension(); ++n) {
        if (rows[n].size() != gram.dimension())
            throw DomainError("column count does not match size");
        for (std::size_t m = 0; m < gram.dimension(); ++m)
            gram(n, m) = parse_fraction(rows[n][m].get<std::string>());
    }
    return gram;
}

// Coefficient files: one value per line, '#' comments and blank lines skipped.
// Integers are compatible with either kind; "p/q" lines make the file exact and
// decimal lines make it floating. A file may not contain both.

enum class CoeffKind { exact, floating };

struct CoeffFile {
    CoeffKind kind = CoeffKind::exact;
    std::vector<ExactRational> exact;
    std::vector<double> floating;
};

namespace detail {

inline std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

inline bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    return logleg::detail::all_digits(s);
}

inline double parse_decimal(std::string_view s)
{
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    double value = 0.0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || end != s.data() + s.size() || !std::isfinite(value))
        throw DomainError("not a finite decimal value: '" + std::string(s) + "'");
    return value;
}

} // namespace detail

inline CoeffFile parse_coeff_text(std::string_view text)
{
    std::vector<std::string_view> lines;
    bool has_fraction = false;
    bool has_decimal = false;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        const auto line = detail::trim(text.substr(start, end - start));
        start = end + 1;
        if (line.empty() || line.front() == '#')
            continue;
        if (line.find('/') != std::string_view::npos)
            has_fraction = true;
        else if (!detail::is_integer_literal(line))
            has_decimal = true;
        lines.push_back(line);
    }
    if (lines.empty())
        throw DomainError("coefficient file contains no values");
    if (has_fraction && has_decimal)
        throw DomainError("coefficient file mixes fractions and decimals");

    CoeffFile file;
    file.kind = has_decimal ? CoeffKind::floating : CoeffKind::exact;
    for (auto line : lines) {
        if (file.kind == CoeffKind::exact)
            file.exact.push_back(parse_fraction(line));
        else
            file.floating.push_back(detail::parse_decimal(line));
    }
    return file;
}

inline CoeffFile read_coeff_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open coefficient file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_coeff_text(buffer.str());
}

inline std::vector<double> as_floating(const CoeffFile& file)
{
    if (file.kind == CoeffKind::floating)
        return file.floating;
    std::vector<double> out;
    out.reserve(file.exact.size());
    for (const auto& v : file.exact)
        out.push_back(to_double(v));
    return out;
}

} // namespace logleg::format
