#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "snc/config.hpp"
#include "snc/constraints.hpp"

// On-disk representation of configurations and reports. Parsing is strict:
// unknown fields are rejected, integers are bounds-checked to 64-bit signed.
// Serialization is canonical (fixed key order, fixed layout) so that
// serialize-then-parse is the identity and output is byte-stable.

namespace snc {

using json = nlohmann::ordered_json;

struct ParseError {
    std::string code;  // SYNTAX_ERROR | UNKNOWN_FIELD | TYPE_MISMATCH | MISSING_FIELD
    std::string detail;
};

struct ParseResult {
    std::optional<Configuration> config;
    std::vector<ParseError> errors;

    bool ok() const { return config.has_value() && errors.empty(); }
};

namespace detail {

inline void check_fields(const json& obj, const std::vector<std::string>& allowed,
                         const std::string& path, std::vector<ParseError>& errors) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const auto& a : allowed)
            if (it.key() == a) { known = true; break; }
        if (!known) errors.push_back({"UNKNOWN_FIELD", path + "." + it.key()});
    }
}

inline Int get_int(const json& obj, const std::string& key, const std::string& path,
                   std::vector<ParseError>& errors) {
    if (!obj.contains(key)) {
        errors.push_back({"MISSING_FIELD", path + "." + key});
        return 0;
    }
    const json& v = obj.at(key);
    if (!v.is_number_integer()) {
        errors.push_back({"TYPE_MISMATCH", path + "." + key});
        return 0;
    }
    return v.get<Int>();
}

inline bool get_bool(const json& obj, const std::string& key, const std::string& path,
                     std::vector<ParseError>& errors) {
    if (!obj.contains(key)) {
        errors.push_back({"MISSING_FIELD", path + "." + key});
        return false;
    }
    if (!obj.at(key).is_boolean()) {
        errors.push_back({"TYPE_MISMATCH", path + "." + key});
        return false;
    }
    return obj.at(key).get<bool>();
}

}  // namespace detail

inline ParseResult parse_configuration(const std::string& bytes) {
    ParseResult out;
    json doc;
    try {
        doc = json::parse(bytes);
    } catch (const nlohmann::json::parse_error& e) {
        out.errors.push_back({"SYNTAX_ERROR", e.what()});
        return out;
    }
    if (!doc.is_object()) {
        out.errors.push_back({"TYPE_MISMATCH", "top-level value must be an object"});
        return out;
    }
    auto& errors = out.errors;
    detail::check_fields(doc, {"name", "components", "double_curves", "triple_points",
                               "generic_fiber"},
                         "$", errors);

    Configuration cfg;
    if (doc.contains("name") && doc.at("name").is_string())
        cfg.name = doc.at("name").get<std::string>();
    else
        errors.push_back({doc.contains("name") ? "TYPE_MISMATCH" : "MISSING_FIELD", "$.name"});

    auto parse_array = [&](const char* key, auto parse_item) {
        if (!doc.contains(key)) {
            errors.push_back({"MISSING_FIELD", std::string("$.") + key});
            return;
        }
        if (!doc.at(key).is_array()) {
            errors.push_back({"TYPE_MISMATCH", std::string("$.") + key});
            return;
        }
        size_t i = 0;
        for (const auto& item : doc.at(key)) {
            std::string path = std::string(key) + "[" + std::to_string(i++) + "]";
            if (!item.is_object()) {
                errors.push_back({"TYPE_MISMATCH", path});
                continue;
            }
            parse_item(item, path);
        }
    };

    parse_array("components", [&](const json& o, const std::string& path) {
        detail::check_fields(o, {"id", "strict_transform", "b1", "b2", "h20", "k2"}, path,
                             errors);
        ComponentSurface c;
        c.id = detail::get_int(o, "id", path, errors);
        c.strict_transform = detail::get_bool(o, "strict_transform", path, errors);
        c.b1 = detail::get_int(o, "b1", path, errors);
        c.b2 = detail::get_int(o, "b2", path, errors);
        c.h20 = detail::get_int(o, "h20", path, errors);
        c.k2 = detail::get_int(o, "k2", path, errors);
        cfg.components.push_back(c);
    });
    parse_array("double_curves", [&](const json& o, const std::string& path) {
        detail::check_fields(o, {"id", "comp_a", "comp_b", "b1", "self_int_in_a",
                                 "self_int_in_b"},
                             path, errors);
        DoubleCurve c;
        c.id = detail::get_int(o, "id", path, errors);
        c.comp_a = detail::get_int(o, "comp_a", path, errors);
        c.comp_b = detail::get_int(o, "comp_b", path, errors);
        c.b1 = detail::get_int(o, "b1", path, errors);
        c.self_int_in_a = detail::get_int(o, "self_int_in_a", path, errors);
        c.self_int_in_b = detail::get_int(o, "self_int_in_b", path, errors);
        cfg.double_curves.push_back(c);
    });
    parse_array("triple_points", [&](const json& o, const std::string& path) {
        detail::check_fields(o, {"id", "curve_ab", "curve_ac", "curve_bc"}, path, errors);
        TriplePoint t;
        t.id = detail::get_int(o, "id", path, errors);
        t.curve_ab = detail::get_int(o, "curve_ab", path, errors);
        t.curve_ac = detail::get_int(o, "curve_ac", path, errors);
        t.curve_bc = detail::get_int(o, "curve_bc", path, errors);
        cfg.triple_points.push_back(t);
    });

    if (doc.contains("generic_fiber") && !doc.at("generic_fiber").is_null()) {
        const json& g = doc.at("generic_fiber");
        if (!g.is_object()) {
            errors.push_back({"TYPE_MISMATCH", "$.generic_fiber"});
        } else {
            detail::check_fields(g, {"b1", "b2", "k2", "chi_O"}, "generic_fiber", errors);
            GenericFiberData d;
            d.b1 = detail::get_int(g, "b1", "generic_fiber", errors);
            d.b2 = detail::get_int(g, "b2", "generic_fiber", errors);
            d.k2 = detail::get_int(g, "k2", "generic_fiber", errors);
            d.chi_O = detail::get_int(g, "chi_O", "generic_fiber", errors);
            cfg.generic_fiber = d;
        }
    }

    if (errors.empty()) out.config = std::move(cfg);
    return out;
}

inline json to_json(const Configuration& cfg) {
    json doc;
    doc["name"] = cfg.name;
    doc["components"] = json::array();
    for (const auto& c : cfg.components)
        doc["components"].push_back({{"id", c.id},
                                     {"strict_transform", c.strict_transform},
                                     {"b1", c.b1},
                                     {"b2", c.b2},
                                     {"h20", c.h20},
                                     {"k2", c.k2}});
    doc["double_curves"] = json::array();
    for (const auto& c : cfg.double_curves)
        doc["double_curves"].push_back({{"id", c.id},
                                        {"comp_a", c.comp_a},
                                        {"comp_b", c.comp_b},
                                        {"b1", c.b1},
                                        {"self_int_in_a", c.self_int_in_a},
                                        {"self_int_in_b", c.self_int_in_b}});
    doc["triple_points"] = json::array();
    for (const auto& t : cfg.triple_points)
        doc["triple_points"].push_back({{"id", t.id},
                                        {"curve_ab", t.curve_ab},
                                        {"curve_ac", t.curve_ac},
                                        {"curve_bc", t.curve_bc}});
    if (cfg.generic_fiber)
        doc["generic_fiber"] = {{"b1", cfg.generic_fiber->b1},
                                {"b2", cfg.generic_fiber->b2},
                                {"k2", cfg.generic_fiber->k2},
                                {"chi_O", cfg.generic_fiber->chi_O}};
    return doc;
}

/// Canonical serialization: fixed key order, two-space indent, trailing newline.
inline std::string serialize(const Configuration& cfg) { return to_json(cfg).dump(2) + "\n"; }

/// Compact one-line canonical form, used by the enumerator stream.
inline std::string serialize_compact(const Configuration& cfg) { return to_json(cfg).dump(); }

inline json report_to_json(const ConstraintReport& rep) {
    json doc;
    doc["name"] = rep.configuration;
    doc["validation"] = json::array();
    for (const auto& v : rep.validation.errors)
        doc["validation"].push_back({{"code", v.code}, {"detail", v.detail}});
    for (const auto& v : rep.validation.warnings)
        doc["validation"].push_back({{"code", v.code}, {"detail", "warning: " + v.detail}});
    doc["constraints"] = json::array();
    for (const auto& c : rep.constraints)
        doc["constraints"].push_back({{"id", c.id},
                                      {"status", to_string(c.status)},
                                      {"lhs", c.lhs},
                                      {"rhs", c.rhs},
                                      {"residual", c.residual},
                                      {"citation", c.citation}});
    doc["prediction"] = {{"b1", rep.prediction.b1},
                         {"b2", rep.prediction.b2},
                         {"k2", rep.prediction.k2},
                         {"chi_O", rep.prediction.chi_O},
                         {"chi_top", rep.prediction.chi_top}};
    doc["triple_sums"] = {{"sum_Ei_cubed", rep.sum_Ei_cubed},
                          {"ordered_selfint_sum", rep.ordered_selfints},
                          {"triple_points", rep.triple_point_count}};
    return doc;
}

inline std::string render_report(const ConstraintReport& rep, ReportFormat fmt) {
    if (fmt == ReportFormat::Machine) return report_to_json(rep).dump(2) + "\n";
    if (fmt != ReportFormat::Text) throw std::invalid_argument("UNKNOWN_FORMAT");

    std::ostringstream os;
    os << "configuration: " << rep.configuration << "\n";
    if (!rep.validation.errors.empty()) {
        os << "validation errors:\n";
        for (const auto& v : rep.validation.errors)
            os << "  " << v.code << ": " << v.detail << "\n";
    }
    for (const auto& v : rep.validation.warnings)
        os << "warning " << v.code << ": " << v.detail << "\n";
    for (const auto& c : rep.constraints) {
        os << c.id << " " << (c.status == Status::Pass ? "PASS"
                              : c.status == Status::Fail ? "FAIL"
                                                         : "SKIPPED")
           << " " << c.citation << " [lhs=" << c.lhs << " rhs=" << c.rhs
           << " residual=" << c.residual << "]";
        if (!c.detail.empty()) os << " -- " << c.detail;
        os << "\n";
    }
    const auto& p = rep.prediction;
    os << "prediction: b1=" << p.b1 << " b2=" << p.b2 << " k2=" << p.k2
       << " chi_O=" << p.chi_O << " chi_top=" << p.chi_top
       << (p.noether_consistent ? " (Noether consistent)" : " (Noether inconsistent)") << "\n";
    os << "triple sums: sum_Ei_cubed=" << rep.sum_Ei_cubed
       << " ordered_selfint_sum=" << rep.ordered_selfints
       << " triple_points=" << rep.triple_point_count << "\n";
    return os.str();
}

}  // namespace snc
