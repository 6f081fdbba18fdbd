#include "cfwave/document.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "cfwave/errors.hpp"

namespace cfwave {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

void write_array(std::ostringstream& os, const char* key, const std::vector<double>& v) {
    os << '"' << key << "\":[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << format_double(v[i]);
    }
    os << ']';
}

std::vector<double> read_array(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array())
        throw ParseError(std::string("missing array field '") + key + "'");
    std::vector<double> out;
    for (const auto& x : j[key]) {
        if (!x.is_number()) throw ParseError(std::string("non-numeric entry in '") + key + "'");
        out.push_back(x.get<double>());
    }
    return out;
}

}  // namespace

FilterBankDocument make_document(const DesignResult& design) {
    FilterBankDocument doc;
    const FilterBank& b = design.bank;
    doc.L = b.L;
    doc.M = b.M;
    doc.phase = phase_label(b.phase);
    doc.method = to_string(design.bezout.method);
    doc.h0 = b.h0.coeffs();
    doc.g0 = b.g0.coeffs();
    doc.h1 = b.h1.coeffs();
    doc.g1 = b.g1.coeffs();
    doc.r_coeffs = design.bezout.r.coeffs();
    doc.q_coeffs = b.q_poly.coeffs();
    doc.diagnostics.pr_defect = verify_pr(b);
    doc.diagnostics.bezout_residual = design.bezout.residual;
    double h1sum = 0.0;
    for (double c : b.h0.coeffs()) h1sum += c;
    doc.diagnostics.h0_at_1 = h1sum;
    return doc;
}

std::string serialize(const FilterBankDocument& doc) {
    std::ostringstream os;
    os << "{\"schema_version\":\"" << doc.schema_version << "\",";
    os << "\"L\":" << doc.L << ",\"M\":" << doc.M << ",";
    os << "\"phase\":\"" << doc.phase << "\",\"method\":\"" << doc.method << "\",";
    write_array(os, "h0", doc.h0);
    os << ',';
    write_array(os, "g0", doc.g0);
    os << ',';
    write_array(os, "h1", doc.h1);
    os << ',';
    write_array(os, "g1", doc.g1);
    os << ',';
    write_array(os, "r_coeffs", doc.r_coeffs);
    os << ',';
    write_array(os, "q_coeffs", doc.q_coeffs);
    os << ",\"diagnostics\":{\"pr_defect\":" << format_double(doc.diagnostics.pr_defect)
       << ",\"bezout_residual\":" << format_double(doc.diagnostics.bezout_residual)
       << ",\"h0_at_1\":" << format_double(doc.diagnostics.h0_at_1) << "}}\n";
    return os.str();
}

FilterBankDocument parse_document(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text, nullptr, false);
    if (j.is_discarded()) throw ParseError("not valid JSON");
    if (!j.is_object()) throw ParseError("document root must be an object");
    FilterBankDocument doc;
    if (!j.contains("schema_version") || !j["schema_version"].is_string())
        throw ParseError("missing schema_version");
    doc.schema_version = j["schema_version"].get<std::string>();
    if (doc.schema_version != "1")
        throw ParseError("unsupported schema_version '" + doc.schema_version + "'");
    if (!j.contains("L") || !j["L"].is_number_integer()) throw ParseError("missing integer L");
    if (!j.contains("M") || !j["M"].is_number_integer()) throw ParseError("missing integer M");
    doc.L = j["L"].get<int>();
    doc.M = j["M"].get<int>();
    if (!j.contains("phase") || !j["phase"].is_string()) throw ParseError("missing phase");
    if (!j.contains("method") || !j["method"].is_string()) throw ParseError("missing method");
    doc.phase = j["phase"].get<std::string>();
    doc.method = j["method"].get<std::string>();
    doc.h0 = read_array(j, "h0");
    doc.g0 = read_array(j, "g0");
    doc.h1 = read_array(j, "h1");
    doc.g1 = read_array(j, "g1");
    doc.r_coeffs = read_array(j, "r_coeffs");
    doc.q_coeffs = read_array(j, "q_coeffs");
    if (!j.contains("diagnostics") || !j["diagnostics"].is_object())
        throw ParseError("missing diagnostics");
    const auto& d = j["diagnostics"];
    for (const char* k : {"pr_defect", "bezout_residual", "h0_at_1"})
        if (!d.contains(k) || !d[k].is_number())
            throw ParseError(std::string("missing diagnostics field '") + k + "'");
    doc.diagnostics.pr_defect = d["pr_defect"].get<double>();
    doc.diagnostics.bezout_residual = d["bezout_residual"].get<double>();
    doc.diagnostics.h0_at_1 = d["h0_at_1"].get<double>();
    if (doc.h0.empty() || doc.h0.size() != doc.g0.size())
        throw ParseError("h0/g0 must be nonempty and of equal length");
    return doc;
}

FilterBank to_bank(const FilterBankDocument& doc) {
    FilterBank b;
    b.L = doc.L;
    b.M = doc.M;
    b.phase = phase_from_label(doc.phase);
    b.h0 = LaurentFilter(0, doc.h0);
    b.g0 = LaurentFilter(0, doc.g0);
    // quadrature mates are determined by h0/g0; rebuilding keeps a tampered
    // document self-consistent for the checks that follow
    b.h1 = highpass_mate(b.h0);
    b.g1 = highpass_mate(b.g0);
    b.q_poly = RealPoly(doc.q_coeffs);
    return b;
}

}  // namespace cfwave
