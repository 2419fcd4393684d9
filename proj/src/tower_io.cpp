#include "kneserlab/tower_io.hpp"

#include <fstream>
#include <sstream>

#include "kneserlab/error.hpp"

namespace kneserlab {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::Parse, "tower spec field '" + field + "': " + what);
}

const json& member(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(path.empty() ? key : path + "." + key, "missing");
  return *it;
}

std::uint64_t unsigned_field(const json& j, const std::string& path) {
  if (!j.is_number_unsigned()) bad(path, "expected a non-negative integer");
  return j.get<std::uint64_t>();
}

std::string string_field(const json& j, const std::string& path) {
  if (!j.is_string()) bad(path, "expected a string");
  return j.get<std::string>();
}

Scalar scalar_field(const FieldDescriptor& f, const json& j, const std::string& path) {
  std::string text;
  if (j.is_string())
    text = j.get<std::string>();
  else if (j.is_number_integer())
    text = std::to_string(j.get<std::int64_t>());
  else
    bad(path, "expected a scalar string");
  try {
    return parse_scalar(f, text);
  } catch (const Error& e) {
    bad(path, e.what());
  }
}

FieldDescriptor::Ptr base_from_json(const json& j) {
  const std::string kind = string_field(member(j, "kind", "base"), "base.kind");
  const auto p64 = unsigned_field(member(j, "p", "base"), "base.p");
  if (p64 > 0x7fffffffULL) bad("base.p", "too large");
  const auto p = static_cast<std::uint32_t>(p64);
  try {
    if (kind == "prime") return FieldDescriptor::prime(p);
    if (kind == "poly_quotient") {
      std::string generator = "x";
      if (j.contains("generator")) generator = string_field(j["generator"], "base.generator");
      return FieldDescriptor::poly_quotient(p, string_field(member(j, "modulus", "base"), "base.modulus"), generator);
    }
    if (kind == "rational_function") {
      const json& vars = member(j, "variables", "base");
      if (!vars.is_array()) bad("base.variables", "expected an array of names");
      std::vector<std::string> names;
      for (std::size_t i = 0; i < vars.size(); ++i)
        names.push_back(string_field(vars[i], "base.variables[" + std::to_string(i) + "]"));
      return FieldDescriptor::rational_function(p, names);
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Parse) bad("base", e.what());
    throw;
  }
  bad("base.kind", "unknown kind '" + kind + "'");
}

json base_to_json(const FieldDescriptor& f) {
  json j = json::object();
  switch (f.kind()) {
    case FieldKind::prime:
      j["kind"] = "prime";
      j["p"] = f.characteristic();
      break;
    case FieldKind::poly_quotient:
      j["kind"] = "poly_quotient";
      j["p"] = f.characteristic();
      j["modulus"] = upoly::format(f.modulus(), f.generator());
      j["generator"] = f.generator();
      break;
    case FieldKind::rational_function:
      j["kind"] = "rational_function";
      j["p"] = f.characteristic();
      j["variables"] = f.variables();
      break;
  }
  return j;
}

}  // namespace

nlohmann::ordered_json tower_to_json(const Tower& tower) {
  const auto& spec = tower.spec();
  const std::size_t m = spec.dim;
  nlohmann::ordered_json out;
  const json base = base_to_json(tower.base());
  out["base"]["kind"] = base["kind"];
  out["base"]["p"] = base["p"];
  for (const char* key : {"modulus", "generator", "variables"})
    if (base.contains(key)) out["base"][key] = base[key];
  out["dim"] = m;
  auto& tensor = out["tensor"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m; ++i) {
    auto plane = nlohmann::ordered_json::array();
    for (std::size_t j = 0; j < m; ++j) {
      auto row = nlohmann::ordered_json::array();
      for (std::size_t k = 0; k < m; ++k) row.push_back(spec.c(i, j, k).to_string());
      plane.push_back(std::move(row));
    }
    tensor.push_back(std::move(plane));
  }
  out["labels"] = spec.labels;
  if (spec.sigma) {
    auto& sigma = out["sigma"] = nlohmann::ordered_json::array();
    for (const auto& s : *spec.sigma) sigma.push_back(s.to_string());
  }
  return out;
}

TowerSpec tower_spec_from_json(const json& j) {
  if (!j.is_object()) bad("(root)", "expected an object");
  TowerSpec spec;
  spec.base = base_from_json(member(j, "base", ""));
  const FieldDescriptor& f = *spec.base;
  const auto m64 = unsigned_field(member(j, "dim", ""), "dim");
  if (m64 == 0 || m64 > 4096) bad("dim", "must be between 1 and 4096");
  const std::size_t m = static_cast<std::size_t>(m64);
  spec.dim = m;

  const json& tensor = member(j, "tensor", "");
  if (!tensor.is_array() || tensor.size() != m) bad("tensor", "expected " + std::to_string(m) + " planes");
  spec.tensor.reserve(m * m * m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::string pi = "tensor[" + std::to_string(i) + "]";
    if (!tensor[i].is_array() || tensor[i].size() != m) bad(pi, "expected " + std::to_string(m) + " rows");
    for (std::size_t jj = 0; jj < m; ++jj) {
      const std::string pj = pi + "[" + std::to_string(jj) + "]";
      const json& row = tensor[i][jj];
      if (!row.is_array() || row.size() != m) bad(pj, "expected " + std::to_string(m) + " scalars");
      for (std::size_t k = 0; k < m; ++k) spec.tensor.push_back(scalar_field(f, row[k], pj + "[" + std::to_string(k) + "]"));
    }
  }

  if (j.contains("labels")) {
    const json& labels = j["labels"];
    if (!labels.is_array() || labels.size() != m) bad("labels", "expected " + std::to_string(m) + " strings");
    for (std::size_t i = 0; i < m; ++i) spec.labels.push_back(string_field(labels[i], "labels[" + std::to_string(i) + "]"));
  }
  if (j.contains("sigma") && !j["sigma"].is_null()) {
    const json& sigma = j["sigma"];
    if (!sigma.is_array() || sigma.size() != m) bad("sigma", "expected " + std::to_string(m) + " scalars");
    std::vector<Scalar> v;
    for (std::size_t i = 0; i < m; ++i) v.push_back(scalar_field(f, sigma[i], "sigma[" + std::to_string(i) + "]"));
    if (is_zero_row(v)) bad("sigma", "the zero form is not allowed");
    spec.sigma = std::move(v);
  }
  if (j.contains("name")) spec.name = string_field(j["name"], "name");
  return spec;
}

TowerPtr tower_from_json(const json& j, const TowerOptions& options) {
  return Tower::create(tower_spec_from_json(j), options);
}

TowerPtr load_tower_file(const std::string& path, const TowerOptions& options) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open tower spec file " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, path + ": " + e.what());
  }
  TowerSpec spec = tower_spec_from_json(j);
  if (spec.name.empty()) spec.name = path;
  return Tower::create(std::move(spec), options);
}

TowerPtr resolve_tower(const std::string& source, const TowerOptions& options) {
  if (source.size() > 5 && source.compare(source.size() - 5, 5, ".json") == 0) return load_tower_file(source, options);
  return build_tower(source, options);
}

}  // namespace kneserlab
