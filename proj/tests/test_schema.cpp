#include <doctest.h>

#include <fstream>
#include <string>

#include <json.hpp>

#include "squarelab/avoidance.hpp"
#include "squarelab/counting.hpp"
#include "squarelab/families.hpp"
#include "squarelab/word.hpp"

using namespace squarelab;
using nlohmann::json;

namespace {

json load(const std::string& name) {
    std::ifstream in(std::string(SQUARELAB_SCHEMA_DIR) + "/" + name);
    REQUIRE(in.good());
    return json::parse(in);
}

bool type_matches(const json& value, const std::string& type) {
    if (type == "object") return value.is_object();
    if (type == "integer") return value.is_number_integer() || value.is_number_unsigned();
    if (type == "number") return value.is_number();
    if (type == "string") return value.is_string();
    if (type == "boolean") return value.is_boolean();
    if (type == "null") return value.is_null();
    return false;
}

// Minimal structural validation covering the subset of JSON Schema the
// shipped schemas use: type, required, properties, enum, additionalProperties,
// oneOf.
bool validate(const json& schema, const json& value) {
    if (schema.contains("oneOf")) {
        int hits = 0;
        for (const auto& sub : schema["oneOf"])
            if (validate(sub, value)) ++hits;
        return hits == 1;
    }
    if (schema.contains("type") && !type_matches(value, schema["type"].get<std::string>()))
        return false;
    if (schema.contains("enum")) {
        bool found = false;
        for (const auto& e : schema["enum"])
            if (e == value) found = true;
        if (!found) return false;
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema["required"])
                if (!value.contains(key.get<std::string>())) return false;
        const json props = schema.value("properties", json::object());
        for (auto it = value.begin(); it != value.end(); ++it) {
            if (props.contains(it.key())) {
                if (!validate(props[it.key()], it.value())) return false;
            } else if (schema.contains("additionalProperties")) {
                const json& ap = schema["additionalProperties"];
                if (ap.is_boolean() && !ap.get<bool>()) return false;
                if (ap.is_object() && !validate(ap, it.value())) return false;
            }
        }
    }
    return true;
}

} // namespace

TEST_CASE("count reports validate against the shipped schema") {
    json schema = load("count_report.schema.json");
    for (SquareKind k : {SquareKind::ordinary, SquareKind::abelian, SquareKind::param,
                         SquareKind::op}) {
        json out = json::parse(count_report(fibonacci_word(6), k).to_json());
        CHECK(validate(schema, out));
    }
    CHECK_FALSE(validate(schema, json{{"n", 3}}));
}

TEST_CASE("avoidance reports validate against the shipped schema") {
    json schema = load("avoidance_report.schema.json");
    json pass = json::parse(is_param_square_free(parse_word("0100", WordFormat::chars)).to_json());
    CHECK(validate(schema, pass));
    json fail = json::parse(is_param_square_free(parse_word("0102", WordFormat::chars)).to_json());
    CHECK(validate(schema, fail));
    CHECK_FALSE(validate(schema, json{{"verdict", "maybe"}}));
}

TEST_CASE("search results validate against the shipped schema") {
    json schema = load("search_result.schema.json");
    json out = json::parse(longest_avoiding_word(2, AvoidKind::param_square).to_json());
    CHECK(validate(schema, out));
    CHECK_FALSE(validate(schema, json::object()));
}
