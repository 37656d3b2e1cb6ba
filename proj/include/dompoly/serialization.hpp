#pragma once

// JSON forms of the library's value types. Coefficients travel as decimal strings so that
// nothing is truncated to 64 bits.

#include <string>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "polynomial.hpp"
#include "real_cert.hpp"

namespace dompoly {

/// {"coeffs": ["c0", "c1", ...]}, ascending degree.
inline nlohmann::json poly_to_json(const Poly& p)
{
    auto arr = nlohmann::json::array();
    for (const auto& c : p.coeffs()) arr.push_back(to_decimal(c));
    return {{"coeffs", arr}};
}

inline Poly poly_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
        throw ParseError(0, "expected an object with a \"coeffs\" array");
    std::vector<BigInt> c;
    for (const auto& e : j["coeffs"]) {
        if (!e.is_string()) throw ParseError(0, "coefficients must be decimal strings");
        const auto s = e.get<std::string>();
        const auto digits = s.find_first_not_of("+-");
        if (s.empty() || digits > 1 || digits == std::string::npos ||
            s.find_first_not_of("0123456789", digits) != std::string::npos)
            throw ParseError(0, "bad coefficient '" + s + "'");
        c.push_back(from_decimal(s[0] == '+' ? s.substr(1) : s));
    }
    return Poly(std::move(c));
}

inline nlohmann::json certificate_to_json(const CgCertificate& c)
{
    return {
        {"gamma", c.gamma},
        {"nonzero_real_root_count", c.nonzero_real_root_count},
        {"in_cg", c.in_cg},
        {"evidence",
         {{"neg_inf", c.evidence.at_neg_inf},
          {"minus_one", c.evidence.at_minus_one},
          {"zero", c.evidence.at_zero},
          {"pos_inf", c.evidence.at_pos_inf}}},
    };
}

inline CgCertificate certificate_from_json(const nlohmann::json& j)
{
    try {
        CgCertificate c;
        c.gamma = j.at("gamma").get<std::size_t>();
        c.nonzero_real_root_count = j.at("nonzero_real_root_count").get<std::size_t>();
        c.in_cg = j.at("in_cg").get<bool>();
        const auto& ev = j.at("evidence");
        c.evidence = {ev.at("neg_inf").get<std::size_t>(), ev.at("minus_one").get<std::size_t>(),
                      ev.at("zero").get<std::size_t>(), ev.at("pos_inf").get<std::size_t>()};
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, std::string("bad certificate: ") + e.what());
    }
}

} // namespace dompoly
