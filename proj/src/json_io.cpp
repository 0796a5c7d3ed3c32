#include "graphonlab/json_io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>

namespace graphonlab {

std::string double_repr(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_double(const std::string& text) {
    errno = 0;
    char* end = nullptr;
    double v = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || *end != '\0' || errno == ERANGE)
        throw ParseError("bad decimal value '" + text + "'", 0);
    return v;
}

namespace {

nlohmann::json values_to_json(const std::vector<std::vector<double>>& values) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : values) {
        nlohmann::json cells = nlohmann::json::array();
        for (double v : row) cells.push_back(double_repr(v));
        rows.push_back(std::move(cells));
    }
    return rows;
}

std::vector<std::vector<double>> values_from_json(const nlohmann::json& rows) {
    std::vector<std::vector<double>> values;
    for (const auto& row : rows) {
        std::vector<double> cells;
        for (const auto& v : row) cells.push_back(parse_double(v.get<std::string>()));
        values.push_back(std::move(cells));
    }
    return values;
}

std::vector<Rational> measures_from_json(const nlohmann::json& arr) {
    std::vector<Rational> measures;
    for (const auto& m : arr) measures.push_back(Rational::parse(m.get<std::string>()));
    return measures;
}

nlohmann::json measures_to_json(const std::vector<Rational>& measures) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Rational& m : measures) arr.push_back(m.str());
    return arr;
}

}  // namespace

nlohmann::json stepgraphon_to_json(const StepGraphon& w) {
    nlohmann::json doc;
    doc["schema"] = kStepGraphonSchema;
    doc["measures"] = measures_to_json(w.masses());
    doc["values"] = values_to_json(w.values());
    return doc;
}

StepGraphon stepgraphon_from_json(const nlohmann::json& doc) {
    if (doc.contains("schema") && doc["schema"].get<std::string>() != kStepGraphonSchema)
        throw ParseError("unknown graphon schema '" + doc["schema"].get<std::string>() + "'", 0);
    if (!doc.contains("measures") || !doc.contains("values"))
        throw ParseError("graphon document needs 'measures' and 'values'", 0);
    return StepGraphon(measures_from_json(doc["measures"]), values_from_json(doc["values"]));
}

nlohmann::json kernel_to_json(const Kernel& k) {
    nlohmann::json doc;
    doc["schema"] = kKernelSchema;
    doc["measures"] = measures_to_json(k.masses);
    doc["values"] = values_to_json(k.values);
    return doc;
}

Kernel kernel_from_json(const nlohmann::json& doc) {
    if (doc.contains("schema") && doc["schema"].get<std::string>() != kKernelSchema)
        throw ParseError("unknown kernel schema '" + doc["schema"].get<std::string>() + "'", 0);
    if (!doc.contains("measures") || !doc.contains("values"))
        throw ParseError("kernel document needs 'measures' and 'values'", 0);
    Kernel k;
    k.masses = measures_from_json(doc["measures"]);
    k.values = values_from_json(doc["values"]);
    k.validate();
    return k;
}

nlohmann::json cut_result_to_json(const CutResult& r) {
    nlohmann::json doc;
    doc["value"] = r.value;
    doc["exact"] = r.exact;
    doc["row_set"] = r.row_set;
    doc["col_set"] = r.col_set;
    return doc;
}

nlohmann::json ball_counts_to_json(const BallCounts& b) {
    nlohmann::json doc;
    doc["n"] = b.n;
    doc["delta"] = b.delta;
    doc["n_hat"] = b.n_hat;
    doc["n_full"] = b.n_full;
    doc["n_full_is_lower_bound"] = b.n_full_is_lower_bound;
    return doc;
}

namespace {

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON in ") + path + ": " + e.what(), 0);
    }
    return doc;
}

}  // namespace

StepGraphon load_stepgraphon(const std::string& path) {
    return stepgraphon_from_json(load_json_file(path));
}

Kernel load_kernel(const std::string& path) {
    return kernel_from_json(load_json_file(path));
}

void save_json(const nlohmann::json& doc, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << doc.dump(2) << "\n";
}

}  // namespace graphonlab
