#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hta/checker.hpp"
#include "hta/errors.hpp"
#include "hta/nary.hpp"
#include "hta/table.hpp"
#include "hta/tensor.hpp"

namespace hta {

/// Insertion-ordered JSON so canonical documents serialize byte-identically.
using Json = nlohmann::ordered_json;

namespace detail {

inline Json parse_json(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON document");
    return j;
}

inline void require_keys(const Json& j, std::initializer_list<const char*> keys, const char* what) {
    if (!j.is_object()) throw ParseError(std::string(what) + ": expected a JSON object");
    for (const char* k : keys)
        if (!j.contains(k)) throw ParseError(std::string(what) + ": missing key '" + k + "'");
    for (const auto& [key, _] : j.items()) {
        bool known = false;
        for (const char* k : keys) known |= key == k;
        if (!known) throw ParseError(std::string(what) + ": unknown key '" + key + "'");
    }
}

inline int int_field(const Json& j, const char* key, const char* what) {
    const auto& v = j.at(key);
    if (!v.is_number_integer()) throw ParseError(std::string(what) + ": '" + key + "' must be an integer");
    return v.get<int>();
}

inline Index index_field(const Json& v, const char* what) {
    if (!v.is_array()) throw ParseError(std::string(what) + ": 'idx' must be an array");
    Index idx;
    idx.reserve(v.size());
    for (const auto& e : v) {
        if (!e.is_number_integer()) throw ParseError(std::string(what) + ": indices must be integers");
        idx.push_back(e.get<int>());
    }
    return idx;
}

inline std::vector<std::pair<Index, Rational>> entries_field(const Json& j, const char* what) {
    const auto& arr = j.at("entries");
    if (!arr.is_array()) throw ParseError(std::string(what) + ": 'entries' must be an array");
    std::vector<std::pair<Index, Rational>> out;
    out.reserve(arr.size());
    for (const auto& e : arr) {
        require_keys(e, {"idx", "val"}, what);
        if (!e.at("val").is_string()) throw ParseError(std::string(what) + ": 'val' must be a string");
        out.emplace_back(index_field(e.at("idx"), what), parse_rational(e.at("val").get<std::string>()));
    }
    return out;
}

} // namespace detail

/// Canonical tensor document: idx lists contravariant (input) indices then
/// covariant (output) indices, 1-based; entries sorted lexicographically.
inline Json tensor_to_json(const Tensor& t) {
    Json j;
    j["p"] = t.p();
    j["q"] = t.q();
    j["dim"] = t.dim();
    Json entries = Json::array();
    for (const auto& [idx, val] : t.entries()) { // std::map iterates in lex order
        Json e;
        e["idx"] = idx;
        e["val"] = format_rational(val);
        entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    return j;
}

inline Tensor tensor_from_json(const Json& j) {
    detail::require_keys(j, {"p", "q", "dim", "entries"}, "tensor");
    const int p = detail::int_field(j, "p", "tensor");
    const int q = detail::int_field(j, "q", "tensor");
    const int dim = detail::int_field(j, "dim", "tensor");
    return Tensor::make(p, q, dim, detail::entries_field(j, "tensor"));
}

inline Json table_to_json(const NAryTable& t) {
    Json j;
    j["n"] = t.n();
    j["dim"] = t.dim();
    Json entries = Json::array();
    for (const auto& [idx, val] : t.entries()) {
        Json e;
        e["idx"] = idx;
        e["val"] = format_rational(val);
        entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    return j;
}

inline NAryTable table_from_json(const Json& j) {
    detail::require_keys(j, {"n", "dim", "entries"}, "table");
    const int n = detail::int_field(j, "n", "table");
    const int dim = detail::int_field(j, "dim", "table");
    NAryTable t(n, dim);
    for (const auto& [idx, val] : detail::entries_field(j, "table")) {
        if (!t.constant(idx).is_zero()) throw DuplicateEntry("table entry listed twice");
        t.set(idx, val);
    }
    return t;
}

/// `{"k":1,"orientation":"ltr","transpose":[[1,2],[1,2],[2,1]]}`; both
/// orientation and transpose may be omitted (defaults: ltr, all-identity).
inline ProductSpec product_spec_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("product spec: expected a JSON object");
    if (!j.contains("k")) throw ParseError("product spec: missing key 'k'");
    for (const auto& [key, _] : j.items())
        if (key != "k" && key != "orientation" && key != "transpose")
            throw ParseError("product spec: unknown key '" + key + "'");

    ProductSpec spec;
    spec.k = detail::int_field(j, "k", "product spec");
    if (spec.k < 1) throw ParseError("product spec: k must be >= 1");
    if (j.contains("orientation")) {
        const auto o = j.at("orientation").get<std::string>();
        if (o == "ltr")
            spec.orientation = Orientation::left_to_right;
        else if (o == "rtl")
            spec.orientation = Orientation::right_to_left;
        else
            throw ParseError("product spec: orientation must be 'ltr' or 'rtl'");
    }
    if (j.contains("transpose")) {
        const auto& arr = j.at("transpose");
        if (!arr.is_array()) throw ParseError("product spec: 'transpose' must be an array");
        for (const auto& entry : arr) {
            Index img = detail::index_field(entry, "product spec");
            try {
                spec.transpose_pattern.emplace_back(img);
            } catch (const Error&) {
                throw ParseError("product spec: transpose entries must be permutations");
            }
        }
    }
    return spec;
}

inline Json product_spec_to_json(const ProductSpec& spec) {
    Json j;
    j["k"] = spec.k;
    j["orientation"] = spec.orientation == Orientation::left_to_right ? "ltr" : "rtl";
    if (!spec.transpose_pattern.empty()) {
        Json arr = Json::array();
        for (const Permutation& rho : spec.transpose_pattern) arr.push_back(rho.images());
        j["transpose"] = std::move(arr);
    }
    return j;
}

inline Json law_report_to_json(const LawReport& r) {
    Json j;
    j["holds"] = r.holds;
    j["law"] = r.law;
    if (r.sigma) j["sigma"] = r.sigma->images();
    if (r.position) j["p"] = *r.position;
    if (r.violating_input) {
        j["input"] = *r.violating_input;
        Json lhs = Json::array(), rhs = Json::array();
        for (const Rational& v : r.lhs) lhs.push_back(format_rational(v));
        for (const Rational& v : r.rhs) rhs.push_back(format_rational(v));
        j["lhs"] = std::move(lhs);
        j["rhs"] = std::move(rhs);
    }
    return j;
}

/// Canonical byte representation used everywhere a document is emitted.
inline std::string canonical_dump(const Json& j) { return j.dump(); }

inline Json json_from_text(const std::string& text) { return detail::parse_json(text); }

} // namespace hta
