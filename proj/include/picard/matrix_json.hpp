#pragma once

#include <string>

#include <json.hpp>

#include "picard/matrix.hpp"

namespace picard {

// Matrix wire format:
//
//   {"entries": [[[re, im], [re, im], [re, im]], ... three rows ...]}
//
// with re/im as decimal integer strings, so entries of any size survive
// JSON round-trips bit-exactly. Small plain JSON integers are accepted on
// input as a convenience; output always uses strings.

inline std::string matrix_to_json(const Mat3& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < 3; ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < 3; ++c)
            row.push_back({m(r, c).re.str(), m(r, c).im.str()});
        rows.push_back(std::move(row));
    }
    return nlohmann::json{{"entries", std::move(rows)}}.dump();
}

namespace detail {

inline Int int_from_json(const nlohmann::json& v, const std::string& where) {
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        if (s.empty()) throw json_parse_error(where + ": empty integer string");
        std::size_t i = s.front() == '-' ? 1 : 0;
        if (i == s.size()) throw json_parse_error(where + ": malformed integer '" + s + "'");
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw json_parse_error(where + ": malformed integer '" + s + "'");
        return Int(s);
    }
    if (v.is_number_integer()) return Int(v.get<long long>());
    if (v.is_number_unsigned()) return Int(v.get<unsigned long long>());
    throw json_parse_error(where + ": expected a decimal integer string");
}

}  // namespace detail

inline Mat3 matrix_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw json_parse_error(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("entries"))
        throw json_parse_error("expected an object with an \"entries\" key");
    const nlohmann::json& rows = doc["entries"];
    if (!rows.is_array() || rows.size() != 3)
        throw json_parse_error("\"entries\" must be an array of 3 rows");
    Mat3 m;
    for (int r = 0; r < 3; ++r) {
        const nlohmann::json& row = rows[static_cast<std::size_t>(r)];
        if (!row.is_array() || row.size() != 3)
            throw json_parse_error("entries[" + std::to_string(r) + "] must have 3 columns");
        for (int c = 0; c < 3; ++c) {
            const nlohmann::json& cell = row[static_cast<std::size_t>(c)];
            const std::string where =
                "entries[" + std::to_string(r) + "][" + std::to_string(c) + "]";
            if (!cell.is_array() || cell.size() != 2)
                throw json_parse_error(where + " must be a [re, im] pair");
            m(r, c) = GaussianInt(detail::int_from_json(cell[0], where),
                                  detail::int_from_json(cell[1], where));
        }
    }
    return m;
}

}  // namespace picard
