// JSON map-spec grammar shared by the CLI and the test fixtures:
//   {"cremona": 3}
//   {"matrix": [[...", 4x4 integers, ..."]]}
//   {"compose": [spec, spec, ...]}     (right-to-left application)
//   {"euler": {"a": ["1","4","9"], "h": "1"}}   (rationals as strings)
//   {"theta": true}
// Every spec resolves to a map with a declared inverse.
#ifndef CREMONA_MAPSPEC_HPP
#define CREMONA_MAPSPEC_HPP

#include <string>

#include <json.hpp>

#include "cremona/errors.hpp"
#include "cremona/khk.hpp"
#include "cremona/proj_map.hpp"

namespace cremona {

inline ProjMap parse_map_spec(const nlohmann::json& spec)
{
    if (!spec.is_object() || spec.size() != 1) fail(errc::parse_error, "map spec must be a single-key object");
    const auto& [key, value] = *spec.items().begin();
    if (key == "cremona") {
        if (!value.is_number_integer() || value.get<int>() != 3)
            fail(errc::parse_error, "only the three-dimensional standard Cremona map is supported");
        return ProjMap::cremona();
    }
    if (key == "matrix") {
        if (!value.is_array() || value.size() != 4) fail(errc::parse_error, "matrix must be 4x4");
        IntMat4 m;
        for (int i = 0; i < 4; ++i) {
            const auto& row = value[static_cast<std::size_t>(i)];
            if (!row.is_array() || row.size() != 4) fail(errc::parse_error, "matrix must be 4x4");
            for (int j = 0; j < 4; ++j) {
                const auto& cell = row[static_cast<std::size_t>(j)];
                if (cell.is_number_integer())
                    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Int(cell.get<long>());
                else if (cell.is_string())
                    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Int(cell.get<std::string>(), 10);
                else
                    fail(errc::parse_error, "matrix entries must be integers");
            }
        }
        return ProjMap::linear(m, "matrix");
    }
    if (key == "compose") {
        if (!value.is_array() || value.empty()) fail(errc::parse_error, "compose needs a nonempty list");
        // right-to-left: the last entry applies first
        ProjMap acc = parse_map_spec(value.back());
        for (std::size_t k = value.size() - 1; k-- > 0;) acc = compose(parse_map_spec(value[k]), acc).map;
        return acc;
    }
    if (key == "euler") {
        if (!value.is_object() || !value.contains("a") || !value.contains("h"))
            fail(errc::parse_error, "euler spec needs \"a\" and \"h\"");
        const auto& a = value["a"];
        if (!a.is_array() || a.size() != 3) fail(errc::parse_error, "euler \"a\" must list three rationals");
        auto rat_of = [](const nlohmann::json& v) {
            if (v.is_string()) return parse_rational(v.get<std::string>());
            if (v.is_number_integer()) return Rat(v.get<long>());
            fail(errc::parse_error, "rationals must be strings or integers");
        };
        EulerParams p = EulerParams::make(rat_of(a[0]), rat_of(a[1]), rat_of(a[2]), rat_of(value["h"]));
        return build_euler(p);
    }
    if (key == "theta") {
        if (!(value.is_boolean() && value.get<bool>())) fail(errc::parse_error, "theta spec is {\"theta\": true}");
        return build_theta();
    }
    fail(errc::parse_error, "unknown map spec key: " + key);
}

inline ProjMap parse_map_spec(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(errc::parse_error, std::string("invalid JSON: ") + e.what());
    }
    return parse_map_spec(j);
}

} // namespace cremona

#endif
