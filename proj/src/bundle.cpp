#include "orthokit/bundle.hpp"

#include "orthokit/error.hpp"

namespace orthokit {

using ojson = nlohmann::ordered_json;

Certificate SpaceBundle::certificate(std::string name) const {
  return Certificate{std::move(name), spaces, property, k};
}

SpaceBundle make_bundle(std::vector<Space> spaces, Property property, int k, std::string construction,
                        ojson parameters) {
  if (spaces.empty()) throw Error(ErrorCode::EmptySet, "a bundle needs at least one space");
  SpaceBundle b;
  b.geometry = spaces.front().geometry();
  b.as_cycles.assign(spaces.size(), false);
  b.spaces = std::move(spaces);
  b.property = property;
  b.k = k;
  b.construction = std::move(construction);
  b.parameters = std::move(parameters);
  return b;
}

ojson field_json(const FieldDescriptor& f) {
  ojson j;
  j["p"] = f.characteristic();
  j["n"] = f.degree();
  j["modulus"] = f.modulus();
  j["primitive"] = f.coeffs(f.primitive());
  return j;
}

ojson geometry_json(const Geometry& g) {
  ojson j;
  j["kind"] = to_string(g.kind());
  j["dim"] = g.dim();
  j["q"] = g.q();
  j["field"] = field_json(*g.field());
  if (g.extension()) j["extension"] = field_json(*g.extension());
  j["basis"] = to_string(g.basis());
  return j;
}

namespace {

bool is_scalar_array(const ojson& j) {
  for (const auto& e : j)
    if (e.is_structured()) return false;
  return true;
}

void dump(const ojson& j, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent) + 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) out += ",\n";
      first = false;
      out += pad + ojson(it.key()).dump() + ": ";
      dump(it.value(), indent + 2, out);
    }
    out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + "}";
  } else if (j.is_array()) {
    if (j.empty() || is_scalar_array(j)) {
      out += "[";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ", ";
        out += j[i].dump();
      }
      out += "]";
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ",\n";
      out += pad;
      dump(j[i], indent + 2, out);
    }
    out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + "]";
  } else {
    out += j.dump();
  }
}

FieldPtr read_field(const ojson& j) {
  const auto p = j.at("p").get<std::uint32_t>();
  const auto n = j.at("n").get<std::uint32_t>();
  const auto modulus = j.at("modulus").get<std::vector<std::int64_t>>();
  const auto field = FieldDescriptor::create(p, n, modulus);
  const auto primitive = j.at("primitive").get<std::vector<std::uint32_t>>();
  if (primitive != field->coeffs(field->primitive()))
    throw Error(ErrorCode::MalformedBundle, "primitive element does not match the modulus");
  return field;
}

GeometryPtr read_geometry(const ojson& j) {
  const auto kind = j.at("kind").get<std::string>();
  const int dim = j.at("dim").get<int>();
  const auto field = read_field(j.at("field"));
  const auto basis = basis_from_string(j.at("basis").get<std::string>());
  GeometryPtr g;
  if (kind == "affine") {
    g = Geometry::affine(dim, field);
  } else if (kind == "projective") {
    g = Geometry::projective(dim, field, read_field(j.at("extension")), basis);
  } else {
    throw Error(ErrorCode::MalformedBundle, "unknown geometry kind '" + kind + "'");
  }
  if (g->q() != j.at("q").get<std::uint32_t>()) throw Error(ErrorCode::MalformedBundle, "q disagrees with the field");
  if (g->basis() != basis) throw Error(ErrorCode::MalformedBundle, "basis does not fit the geometry");
  return g;
}

}  // namespace

std::string canonical_json(const ojson& j) {
  std::string out;
  dump(j, 0, out);
  out += "\n";
  return out;
}

std::string write_bundle(const SpaceBundle& b) {
  ojson j;
  j["format_version"] = 1;
  j["geometry"] = geometry_json(*b.geometry);
  j["property"] = {{"name", to_string(b.property)}, {"k", b.k}};
  ojson spaces = ojson::array();
  for (std::size_t i = 0; i < b.spaces.size(); ++i) {
    const auto& s = b.spaces[i];
    ojson e;
    e["name"] = s.name();
    if (i < b.as_cycles.size() && b.as_cycles[i])
      e["cycles"] = s.map().cycles();
    else
      e["permutation"] = std::vector<PointIndex>(s.map().values().begin(), s.map().values().end());
    spaces.push_back(std::move(e));
  }
  j["spaces"] = std::move(spaces);
  j["provenance"] = {{"construction", b.construction}, {"parameters", b.parameters}};
  return canonical_json(j);
}

SpaceBundle read_bundle(std::string_view text) {
  try {
    const auto j = ojson::parse(text);
    if (j.at("format_version").get<int>() != 1) throw Error(ErrorCode::MalformedBundle, "unsupported format_version");
    SpaceBundle b;
    b.geometry = read_geometry(j.at("geometry"));
    const auto& prop = j.at("property");
    b.property = property_from_string(prop.at("name").get<std::string>());
    b.k = prop.at("k").get<int>();
    const auto n = b.geometry->point_count();
    for (const auto& e : j.at("spaces")) {
      const auto name = e.at("name").get<std::string>();
      if (e.contains("cycles")) {
        const auto cycles = e.at("cycles").get<std::vector<std::vector<PointIndex>>>();
        b.spaces.emplace_back(b.geometry, PointBijection::from_cycles(n, cycles), name);
        b.as_cycles.push_back(true);
      } else {
        auto perm = e.at("permutation").get<std::vector<PointIndex>>();
        if (perm.size() != n) throw Error(ErrorCode::MalformedBundle, "permutation length differs from point count");
        b.spaces.emplace_back(b.geometry, PointBijection(std::move(perm)), name);
        b.as_cycles.push_back(false);
      }
    }
    if (b.spaces.empty()) throw Error(ErrorCode::MalformedBundle, "bundle has no spaces");
    if (j.contains("provenance")) {
      const auto& pv = j.at("provenance");
      b.construction = pv.value("construction", "");
      if (pv.contains("parameters")) b.parameters = pv.at("parameters");
    }
    return b;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedBundle, e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::MalformedBundle) throw;
    throw Error(ErrorCode::MalformedBundle, e.what());
  }
}

}  // namespace orthokit
