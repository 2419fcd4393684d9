#pragma once

#include <string>

#include "json.hpp"

#include "kneserlab/tower.hpp"

namespace kneserlab {

// Tower-spec JSON:
//   {"base": {"kind": "prime", "p": 2}, "dim": m,
//    "tensor": [[["0", "1", ...], ...], ...], "labels": [...], "sigma": [...]}
// Base kinds: "prime" {p}, "poly_quotient" {p, modulus, generator?},
// "rational_function" {p, variables}. Scalars are strings in the base field.
nlohmann::ordered_json tower_to_json(const Tower& tower);

// Errors: Parse (naming the offending field) for malformed input, otherwise
// whatever Tower::create raises for a spec that breaks a tower invariant.
TowerSpec tower_spec_from_json(const nlohmann::json& j);
TowerPtr tower_from_json(const nlohmann::json& j, const TowerOptions& options = {});
TowerPtr load_tower_file(const std::string& path, const TowerOptions& options = {});

// A path ending in ".json" is loaded as a spec file, anything else goes to
// build_tower.
TowerPtr resolve_tower(const std::string& source, const TowerOptions& options = {});

}  // namespace kneserlab
