#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "structgen/errors.hpp"

namespace structgen {

enum class Number : std::uint8_t { Sg, Pl };
enum class Tense : std::uint8_t { Past, Pres };

enum class FeatureKey : std::uint8_t { Number = 0, Tense = 1 };
inline constexpr int kFeatureCount = 2;

// One value slot per feature, absent means unconstrained.
struct FeatureBundle {
    std::optional<Number> number;
    std::optional<Tense> tense;

    bool operator==(const FeatureBundle&) const = default;

    std::optional<std::uint8_t> get(FeatureKey key) const {
        if (key == FeatureKey::Number) {
            if (!number) return std::nullopt;
            return static_cast<std::uint8_t>(*number);
        }
        if (!tense) return std::nullopt;
        return static_cast<std::uint8_t>(*tense);
    }

    void set(FeatureKey key, std::uint8_t value) {
        if (key == FeatureKey::Number) number = static_cast<Number>(value);
        else tense = static_cast<Tense>(value);
    }

    std::string to_string() const {
        std::string out;
        if (number) out += (*number == Number::Sg) ? "num=sg" : "num=pl";
        if (tense) {
            if (!out.empty()) out += ",";
            out += (*tense == Tense::Past) ? "tense=past" : "tense=pres";
        }
        return out.empty() ? "-" : out;
    }
};

inline FeatureKey feature_key_from_name(const std::string& name, const std::string& where) {
    if (name == "num" || name == "number") return FeatureKey::Number;
    if (name == "tense") return FeatureKey::Tense;
    throw ConfigError("unknown feature '" + name + "' " + where);
}

inline std::uint8_t feature_value_from_name(FeatureKey key, const std::string& name,
                                            const std::string& where) {
    if (key == FeatureKey::Number) {
        if (name == "sg") return static_cast<std::uint8_t>(Number::Sg);
        if (name == "pl") return static_cast<std::uint8_t>(Number::Pl);
    } else {
        if (name == "past") return static_cast<std::uint8_t>(Tense::Past);
        if (name == "pres") return static_cast<std::uint8_t>(Tense::Pres);
    }
    throw ConfigError("unknown feature value '" + name + "' " + where);
}

// Parses "num=sg,tense=past"; "-" or "" mean no constraints.
inline FeatureBundle parse_feature_bundle(const std::string& text, const std::string& where) {
    FeatureBundle out;
    if (text.empty() || text == "-") return out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string item = text.substr(start, comma == std::string::npos ? std::string::npos
                                                                         : comma - start);
        std::size_t eq = item.find('=');
        if (eq == std::string::npos)
            throw ConfigError("malformed feature assignment '" + item + "' " + where);
        FeatureKey key = feature_key_from_name(item.substr(0, eq), where);
        out.set(key, feature_value_from_name(key, item.substr(eq + 1), where));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace structgen
