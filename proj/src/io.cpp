#include "fuzzyreg/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "fuzzyreg/error.hpp"

namespace fuzzyreg {

using nlohmann::json;

namespace {

[[noreturn]] void invalid(const std::string& path, const std::string& message) {
    throw Error(ErrorKind::ValidationError, path + ": " + message, path);
}

const json& require(const json& obj, const std::string& key, const std::string& path) {
    const auto it = obj.find(key);
    if (it == obj.end()) invalid(path, "missing key '" + key + "'");
    return *it;
}

void reject_unknown_keys(const json& obj, const std::string& path, std::initializer_list<std::string_view> known) {
    for (const auto& [key, value] : obj.items()) {
        if (std::find(known.begin(), known.end(), key) == known.end())
            invalid(path + "/" + key, "unknown key '" + key + "'");
    }
}

const json& require_object(const json& obj, const std::string& key, const std::string& path) {
    const json& v = require(obj, key, path);
    if (!v.is_object()) invalid(path + "/" + key, "expected an object");
    return v;
}

std::string require_string(const json& obj, const std::string& key, const std::string& path) {
    const json& v = require(obj, key, path);
    if (!v.is_string()) invalid(path + "/" + key, "expected a string");
    return v.get<std::string>();
}

double as_number(const json& v, const std::string& path) {
    if (!v.is_number()) invalid(path, "expected a number");
    return v.get<double>();
}

std::size_t as_count(const json& v, const std::string& path) {
    if (!v.is_number_integer() || v.get<long long>() < 0) invalid(path, "expected a non-negative integer");
    return v.get<std::size_t>();
}

Shape make_shape(const std::string& type, const std::vector<double>& p, const std::string& path) {
    const auto arity = [&](std::size_t n) {
        if (p.size() != n)
            invalid(path + "/params", type + " takes " + std::to_string(n) + " parameters, got " +
                                          std::to_string(p.size()));
    };
    if (type == "triangular") {
        arity(3);
        return Triangular{p[0], p[1], p[2]};
    }
    if (type == "trapezoidal") {
        arity(4);
        return Trapezoidal{p[0], p[1], p[2], p[3]};
    }
    if (type == "gaussian") {
        arity(2);
        return Gaussian{p[0], p[1]};
    }
    if (type == "zshoulder") {
        arity(2);
        return ZShoulder{p[0], p[1]};
    }
    if (type == "sshoulder") {
        arity(2);
        return SShoulder{p[0], p[1]};
    }
    invalid(path + "/type", "unknown membership type '" + type + "'");
}

LinguisticVariable parse_variable(const json& v, const std::string& path) {
    reject_unknown_keys(v, path, {"name", "universe", "terms"});
    std::string name = require_string(v, "name", path);

    const std::string upath = path + "/universe";
    const json& u = require_object(v, "universe", path);
    reject_unknown_keys(u, upath, {"min", "max", "points"});
    const double lo = as_number(require(u, "min", upath), upath + "/min");
    const double hi = as_number(require(u, "max", upath), upath + "/max");
    const std::size_t n = as_count(require(u, "points", upath), upath + "/points");
    std::optional<Universe> universe;
    try {
        universe.emplace(lo, hi, n);
    } catch (const Error& e) {
        invalid(upath, e.what());
    }

    const std::string tpath = path + "/terms";
    const json& terms_json = require(v, "terms", path);
    if (!terms_json.is_array() || terms_json.empty()) invalid(tpath, "expected a non-empty array of terms");
    std::vector<LinguisticTerm> terms;
    for (std::size_t k = 0; k < terms_json.size(); ++k) {
        const std::string kpath = tpath + "/" + std::to_string(k);
        const json& t = terms_json[k];
        if (!t.is_object()) invalid(kpath, "expected an object");
        reject_unknown_keys(t, kpath, {"name", "type", "params"});
        std::string tname = require_string(t, "name", kpath);
        if (tname.empty()) invalid(kpath + "/name", "term name is empty");
        const std::string type = require_string(t, "type", kpath);
        const json& pj = require(t, "params", kpath);
        if (!pj.is_array()) invalid(kpath + "/params", "expected an array of numbers");
        std::vector<double> params;
        for (std::size_t i = 0; i < pj.size(); ++i)
            params.push_back(as_number(pj[i], kpath + "/params/" + std::to_string(i)));
        const Shape shape = make_shape(type, params, kpath);
        try {
            terms.push_back({std::move(tname), MembershipFunction(shape)});
        } catch (const Error& e) {
            invalid(kpath + "/params", e.what());
        }
        const auto [slo, shi] = terms.back().mf.support();
        if (slo > hi || shi < lo) invalid(kpath, "term '" + terms.back().name + "' lies outside the universe");
    }
    std::set<std::string_view> seen;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        if (!seen.insert(terms[k].name).second)
            invalid(tpath + "/" + std::to_string(k) + "/name", "duplicate term name '" + terms[k].name + "'");
    }
    try {
        return LinguisticVariable(std::move(name), std::move(*universe), std::move(terms));
    } catch (const Error& e) {
        invalid(path, e.what());
    }
}

std::string line_column(std::string_view doc, std::size_t byte) {
    byte = std::min(byte, doc.size());
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < byte; ++i) {
        if (doc[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

json variable_to_json(const LinguisticVariable& var) {
    json terms = json::array();
    for (const auto& t : var.terms()) {
        terms.push_back({{"name", t.name}, {"type", shape_name(t.mf.shape())}, {"params", shape_params(t.mf.shape())}});
    }
    return {{"name", var.name()},
            {"universe", {{"min", var.universe().min()}, {"max", var.universe().max()}, {"points", var.universe().size()}}},
            {"terms", terms}};
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + '"';
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r";
    const std::size_t b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

std::vector<std::vector<double>> parse_csv_numbers(std::string_view text) {
    std::vector<std::vector<double>> rows;
    std::size_t lineno = 0;
    for (std::string_view line : split(text, '\n')) {
        ++lineno;
        if (trim(line).empty()) continue;
        std::vector<double> row;
        std::size_t field = 0;
        for (std::string_view cell : split(line, ',')) {
            ++field;
            cell = trim(cell);
            if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
            double value = 0.0;
            const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
            if (cell.empty() || ec != std::errc{} || ptr != cell.data() + cell.size()) {
                const std::string where = "line " + std::to_string(lineno) + ", field " + std::to_string(field);
                throw Error(ErrorKind::ParseError, where + ": not a number: '" + std::string(cell) + "'", where);
            }
            row.push_back(value);
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw Error(ErrorKind::ParseError, "no numbers found");
    return rows;
}

} // namespace

Regulator parse_config(std::string_view document) {
    json doc;
    try {
        doc = json::parse(document.begin(), document.end());
    } catch (const json::parse_error& e) {
        const std::string where = line_column(document, e.byte);
        throw Error(ErrorKind::ParseError, where + ": malformed controller document", where);
    }
    if (!doc.is_object()) invalid("", "document root must be an object");
    reject_unknown_keys(doc, "", {"input", "output", "rules", "output_resolution", "defuzzification", "zero_mass"});

    LinguisticVariable input = parse_variable(require_object(doc, "input", ""), "/input");
    LinguisticVariable output = parse_variable(require_object(doc, "output", ""), "/output");

    const json& rules_json = require(doc, "rules", "");
    if (!rules_json.is_array() || rules_json.empty()) invalid("/rules", "expected a non-empty array of rules");
    std::vector<Rule> rules;
    std::vector<bool> used(input.term_count(), false);
    for (std::size_t k = 0; k < rules_json.size(); ++k) {
        const std::string rpath = "/rules/" + std::to_string(k);
        const json& r = rules_json[k];
        if (!r.is_object()) invalid(rpath, "expected an object");
        reject_unknown_keys(r, rpath, {"if", "then"});
        const std::string ante = require_string(r, "if", rpath);
        const std::string cons = require_string(r, "then", rpath);
        const std::size_t a = input.find_term(ante);
        if (a == input.term_count()) invalid(rpath + "/if", "unknown term '" + ante + "' in variable '" + input.name() + "'");
        const std::size_t c = output.find_term(cons);
        if (c == output.term_count())
            invalid(rpath + "/then", "unknown term '" + cons + "' in variable '" + output.name() + "'");
        if (used[a]) invalid(rpath + "/if", "antecedent '" + ante + "' already has a rule");
        used[a] = true;
        rules.push_back(Rule{a, c});
    }

    std::optional<std::size_t> resolution;
    if (const auto it = doc.find("output_resolution"); it != doc.end()) {
        resolution = as_count(*it, "/output_resolution");
        if (*resolution < 2) invalid("/output_resolution", "must be at least 2");
    }
    if (const auto it = doc.find("defuzzification"); it != doc.end()) {
        if (!it->is_string() || it->get<std::string>() != "centroid")
            invalid("/defuzzification", "only \"centroid\" is supported");
    }
    ZeroMassPolicy zero_mass = ZeroMassPolicy::Error;
    if (const auto it = doc.find("zero_mass"); it != doc.end()) {
        const std::string policy = it->is_string() ? it->get<std::string>() : std::string();
        if (policy == "midpoint")
            zero_mass = ZeroMassPolicy::Midpoint;
        else if (policy != "error")
            invalid("/zero_mass", "expected \"error\" or \"midpoint\"");
    }

    try {
        return Regulator(RuleBase(std::move(input), std::move(output), std::move(rules)), resolution,
                         DefuzzPolicy::CenterOfGravity, zero_mass);
    } catch (const Error& e) {
        invalid("", e.what());
    }
}

Regulator load_config(const std::filesystem::path& file) { return parse_config(read_text_file(file)); }

std::string serialize_config(const Regulator& reg) {
    const RuleBase& rb = reg.rulebase();
    json rules = json::array();
    for (const auto& r : rb.rules()) {
        rules.push_back({{"if", rb.input().terms()[r.antecedent].name}, {"then", rb.output().terms()[r.consequent].name}});
    }
    json doc = {{"input", variable_to_json(rb.input())},
                {"output", variable_to_json(rb.output())},
                {"rules", rules},
                {"output_resolution", reg.output_resolution()},
                {"defuzzification", "centroid"},
                {"zero_mass", reg.zero_mass_policy() == ZeroMassPolicy::Midpoint ? "midpoint" : "error"}};
    return doc.dump(2) + "\n";
}

std::string format_number(double value) {
    if (value == 0.0) value = 0.0; // drop the sign of -0
    std::array<char, 32> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 6);
    return std::string(buf.data(), ec == std::errc{} ? ptr : buf.data());
}

std::string format_vector(std::span<const double> values) {
    std::string s = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) s += ", ";
        s += format_number(values[i]);
    }
    return s + "]";
}

std::string emit_mf_plot_data(const LinguisticVariable& var, std::size_t samples) {
    if (samples < 2) throw Error(ErrorKind::InvalidArgument, "plot data needs at least 2 samples");
    const Universe grid(var.universe().min(), var.universe().max(), samples);
    std::string out = "x";
    for (const auto& t : var.terms()) out += "," + csv_field(t.name);
    out += '\n';
    for (double x : grid.points()) {
        out += format_number(x);
        for (const auto& t : var.terms()) out += "," + format_number(t.mf(x));
        out += '\n';
    }
    return out;
}

std::string emit_sweep_csv(std::span<const SweepPoint> points) {
    std::string out = "input,output\n";
    for (const auto& p : points) out += format_number(p.input) + "," + format_number(p.output) + "\n";
    return out;
}

FuzzyRelation parse_relation_csv(std::string_view text) {
    auto rows = parse_csv_numbers(text);
    const std::size_t cols = rows.front().size();
    std::vector<double> entries;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) {
            throw Error(ErrorKind::ParseError, "relation row " + std::to_string(i + 1) + " has " +
                                                   std::to_string(rows[i].size()) + " entries, expected " +
                                                   std::to_string(cols));
        }
        entries.insert(entries.end(), rows[i].begin(), rows[i].end());
    }
    return FuzzyRelation(rows.size(), cols, std::move(entries));
}

std::vector<double> parse_vector_csv(std::string_view text) {
    auto rows = parse_csv_numbers(text);
    if (rows.size() == 1) return rows.front();
    std::vector<double> out;
    for (const auto& r : rows) {
        if (r.size() != 1) throw Error(ErrorKind::ParseError, "vector must be one row or one column");
        out.push_back(r.front());
    }
    return out;
}

std::string read_text_file(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + file.string() + "'", file.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace fuzzyreg
