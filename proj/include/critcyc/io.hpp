#pragma once

// Serialization for the command-line frontend and its tests: the a+bi complex
// syntax, fixed-significant-digit number formatting, line-delimited JSON
// records, a reader that accepts function values in any of the formats the
// tools emit, and the optional JSON config file.
//
// Record streams are JSON objects, one per line, each with a "type" field.
// The reader understands:
//   * {"type":"value","k":<index>,"re":<x>,"im":<y>} records, optionally
//     preceded by a {"type":"family","d":<modulus>,...} header,
//   * a single JSON array of values ([re,im] pairs, {"re":..,"im":..}
//     objects, or bare reals),
//   * plain text: one a+bi literal per line.

#include <cctype>
#include <complex>
#include <cstdio>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "critcyc/cyclic.hpp"
#include "critcyc/theta.hpp"

namespace critcyc {

using json = nlohmann::json;

/// Formats v with the given number of significant digits (default 15).
inline std::string format_number(double v, int digits = 15) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
    return buf;
}

/// "a+bi" rendering: pure reals drop the imaginary part, pure imaginaries
/// drop the real part, and "i" carries no coefficient 1.
inline std::string format_complex(cplx v, int digits = 15) {
    const double re = v.real(), im = v.imag();
    if (im == 0.0) return format_number(re, digits);
    std::string imag;
    if (im == 1.0)
        imag = "i";
    else if (im == -1.0)
        imag = "-i";
    else
        imag = format_number(im, digits) + "i";
    if (re == 0.0) return imag;
    if (imag[0] != '-') imag = "+" + imag;
    return format_number(re, digits) + imag;
}

namespace detail {

inline double parse_real_part(const std::string& s, const std::string& whole) {
    if (s.empty() || s == "+") return 1.0;  // coefficient of a bare "i"
    if (s == "-") return -1.0;
    size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a complex number: '" + whole + "'");
    }
    if (used != s.size()) throw std::invalid_argument("not a complex number: '" + whole + "'");
    return v;
}

}  // namespace detail

/// Parses the a+bi syntax: "3", "-2.5", "i", "-i", "2i", "1.5-2.25i",
/// "1e-3+0.5i".  Throws std::invalid_argument on anything else.
inline cplx parse_complex(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("not a complex number: ''");
    const bool has_i = s.back() == 'i' || s.back() == 'I';
    if (!has_i) return {detail::parse_real_part(s, text), 0.0};
    s.pop_back();
    // Split at the last +/- that is not a leading sign and not an exponent sign.
    size_t split = std::string::npos;
    for (size_t j = s.size(); j-- > 1;) {
        if ((s[j] == '+' || s[j] == '-') && s[j - 1] != 'e' && s[j - 1] != 'E') {
            split = j;
            break;
        }
    }
    if (split == std::string::npos) return {0.0, detail::parse_real_part(s, text)};
    return {detail::parse_real_part(s.substr(0, split), text),
            detail::parse_real_part(s.substr(split), text)};
}

inline json complex_json(cplx v) { return json{{"re", v.real()}, {"im", v.imag()}}; }

inline cplx complex_from_json(const json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2) return {j[0].get<double>(), j[1].get<double>()};
    if (j.is_object() && j.contains("re") && j.contains("im"))
        return {j["re"].get<double>(), j["im"].get<double>()};
    throw std::invalid_argument("value is not a complex number encoding");
}

/// One record per line.
inline void emit_record(std::ostream& os, const json& j) { os << j.dump() << "\n"; }

/// Reads function values in any supported format; see header comment.
inline CyclicFunction read_values(std::istream& is) {
    std::string first_line;
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(is, line)) {
        size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        size_t b = line.find_last_not_of(" \t\r");
        lines.push_back(line.substr(a, b - a + 1));
    }
    if (lines.empty()) throw std::invalid_argument("read_values: no input values");

    if (lines.front()[0] == '[') {
        std::string whole;
        for (const auto& l : lines) whole += l + "\n";
        const json arr = json::parse(whole);
        if (!arr.is_array()) throw std::invalid_argument("read_values: expected a JSON array");
        std::vector<cplx> vals;
        for (const auto& item : arr) vals.push_back(complex_from_json(item));
        return {static_cast<int64>(vals.size()), std::move(vals)};
    }

    if (lines.front()[0] == '{') {
        std::optional<int64> d;
        std::vector<std::pair<int64, cplx>> indexed;
        for (const auto& l : lines) {
            const json j = json::parse(l);
            const std::string type = j.value("type", "");
            if (type == "family" && j.contains("d")) {
                d = j["d"].get<int64>();
            } else if (type == "value") {
                indexed.emplace_back(j["k"].get<int64>(),
                                     cplx{j["re"].get<double>(), j["im"].get<double>()});
            }
        }
        if (indexed.empty()) throw std::invalid_argument("read_values: no value records");
        const int64 n = d.value_or(static_cast<int64>(indexed.size()));
        CyclicFunction f(n);
        std::vector<char> seen(static_cast<size_t>(n), 0);
        for (const auto& [k, v] : indexed) {
            if (k < 0 || k >= n || seen[static_cast<size_t>(k)])
                throw std::invalid_argument("read_values: bad or duplicate value index");
            seen[static_cast<size_t>(k)] = 1;
            f[k] = v;
        }
        for (char c : seen)
            if (!c) throw std::invalid_argument("read_values: missing value indices");
        return f;
    }

    std::vector<cplx> vals;
    for (const auto& l : lines) vals.push_back(parse_complex(l));
    return {static_cast<int64>(vals.size()), std::move(vals)};
}

/// Runtime settings for the tools; every field can come from a JSON config
/// file of the shape
///   {"theta": {"tail_bound":.., "max_terms":.., "z_im_cap":..},
///    "search": {"k_max":.., "p_max":..},
///    "tolerance": ..}.
struct AppConfig {
    ThetaConfig theta{};
    int64 k_max = 10;
    int64 p_max = 100;
    double tolerance = 1e-9;
};

inline void apply_config_json(AppConfig& cfg, const json& j) {
    if (j.contains("theta")) {
        const json& t = j["theta"];
        if (t.contains("tail_bound")) cfg.theta.tail_bound = t["tail_bound"].get<double>();
        if (t.contains("max_terms")) cfg.theta.max_terms = t["max_terms"].get<std::size_t>();
        if (t.contains("z_im_cap")) cfg.theta.z_im_cap = t["z_im_cap"].get<double>();
    }
    if (j.contains("search")) {
        const json& s = j["search"];
        if (s.contains("k_max")) cfg.k_max = s["k_max"].get<int64>();
        if (s.contains("p_max")) cfg.p_max = s["p_max"].get<int64>();
    }
    if (j.contains("tolerance")) cfg.tolerance = j["tolerance"].get<double>();
}

inline AppConfig load_config(std::istream& is) {
    AppConfig cfg;
    apply_config_json(cfg, json::parse(is));
    return cfg;
}

}  // namespace critcyc
