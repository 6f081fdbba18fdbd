#pragma once

#include <string>
#include <vector>

#include "cfwave/factorize.hpp"

namespace cfwave {

/// On-disk JSON form of a designed bank. Serialization is deterministic:
/// fixed key order, %.17g numbers (lossless round trip).
struct FilterBankDocument {
    std::string schema_version = "1";
    int L = 0;
    int M = 0;
    std::string phase;   // "mid" | "min"
    std::string method;  // "recursive" | "linear" | "exact"
    std::vector<double> h0, g0, h1, g1;
    std::vector<double> r_coeffs, q_coeffs;
    struct Diagnostics {
        double pr_defect = 0.0;
        double bezout_residual = 0.0;
        double h0_at_1 = 0.0;
        bool operator==(const Diagnostics&) const = default;
    } diagnostics;

    bool operator==(const FilterBankDocument&) const = default;
};

FilterBankDocument make_document(const DesignResult& design);

std::string serialize(const FilterBankDocument& doc);

/// Throws ParseError on malformed input or schema mismatch.
FilterBankDocument parse_document(const std::string& json_text);

FilterBank to_bank(const FilterBankDocument& doc);

/// %.17g, the formatting used for every floating value we emit.
std::string format_double(double v);

}  // namespace cfwave
