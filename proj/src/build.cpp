#include "orthokit/build.hpp"

#include <algorithm>
#include <numeric>

#include "catalog_data.hpp"
#include "json.hpp"
#include "orthokit/error.hpp"

namespace orthokit {

std::pair<FieldElement, FieldElement> find_no_root_coeffs(const FieldPtr& field, std::span<const Code> poly) {
  const Code q = field->order();
  auto eval = [&](Code x) {
    Code acc = 0;
    for (std::size_t i = poly.size(); i-- > 0;) acc = field->add(field->mul(acc, x), poly[i]);
    return acc;
  };
  std::vector<Code> values(q);
  for (Code x = 0; x < q; ++x) values[x] = eval(x);
  for (Code a = 0; a < q; ++a)
    for (Code b = 0; b < q; ++b) {
      bool rootless = true;
      for (Code x = 0; x < q && rootless; ++x)
        rootless = field->add(field->add(values[x], field->mul(a, x)), b) != 0;
      if (rootless) return {field->element(a), field->element(b)};
    }
  // Unreachable for any polynomial over a finite field.
  throw Error(ErrorCode::InvalidArgument, "no rootless shift exists");
}

CharPPair build_char_p_pair(std::uint32_t p, std::uint32_t n, int k) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (n < 1 || k < 2) throw Error(ErrorCode::InvalidArgument, "need n >= 1 and k >= 2");
  const auto field = FieldDescriptor::create(p, n);
  const auto g = Geometry::affine(k, field);

  std::uint64_t degree = 0, pk = 1;
  for (int i = 0; i < k; ++i) {
    degree += pk;
    pk *= p;
  }
  std::vector<Code> poly(degree + 1, 0);
  poly[degree] = 1;
  auto [a, b] = find_no_root_coeffs(field, poly);

  const auto count = g->point_count();
  std::vector<PointIndex> perm(count);
  std::vector<Code> out(k);
  for (PointIndex pt = 0; pt < count; ++pt) {
    const auto x = g->coordinates(pt);
    for (int i = 0; i + 1 < k; ++i) out[i] = field->sub(field->frobenius(x[i]), x[i + 1]);
    out[k - 1] = field->add(field->add(field->frobenius(x[k - 1]), field->mul(a.code(), x[1])),
                            field->mul(b.code(), x[0]));
    perm[pt] = g->index_of(out);
  }
  PointBijection f(std::move(perm));
  const std::string tag = "char" + std::to_string(p) + "(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")";
  return CharPPair{Space::standard(g), Space(g, f, tag, true), f, a, b};
}

std::vector<Space> build_product_family(std::span<const Space> a, std::span<const Space> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::SizeMismatch, "families differ in size");
  if (a.empty()) return {};
  const auto& ga = *a.front().geometry();
  const auto& gb = *b.front().geometry();
  for (const auto& s : a)
    if (!s.geometry()->same_as(ga)) throw Error(ErrorCode::GeometryMismatch, "first family is not on one geometry");
  for (const auto& s : b)
    if (!s.geometry()->same_as(gb)) throw Error(ErrorCode::GeometryMismatch, "second family is not on one geometry");
  if (ga.kind() != GeometryKind::Affine || gb.kind() != GeometryKind::Affine)
    throw Error(ErrorCode::InvalidArgument, "products are defined for affine spaces");
  if (!ga.field()->same_as(*gb.field())) throw Error(ErrorCode::FieldMismatch, "families use different fields");

  const auto g = Geometry::affine(ga.dim() + gb.dim(), ga.field());
  const std::uint32_t nb = gb.point_count();
  std::vector<Space> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::vector<PointIndex> perm(g->point_count());
    for (PointIndex x = 0; x < ga.point_count(); ++x)
      for (PointIndex y = 0; y < nb; ++y) perm[x * nb + y] = a[i].map()(x) * nb + b[i].map()(y);
    std::string name = a[i].name() + "*" + b[i].name();
    out.emplace_back(g, PointBijection(std::move(perm)), std::move(name), a[i].linear() && b[i].linear());
  }
  return out;
}

PointBijection build_phi_map(const GeometryPtr& g, std::int64_t exponent) {
  if (g->kind() != GeometryKind::Projective) throw Error(ErrorCode::InvalidArgument, "Phi maps act on PG");
  const std::int64_t group = g->extension()->order() - 1;
  const std::int64_t e = ((exponent % group) + group) % group;
  if (std::gcd(e, group) != 1)
    throw Error(ErrorCode::NotCoprime,
                "exponent " + std::to_string(exponent) + " is not coprime to " + std::to_string(group));
  // Labels z^i of point i map to z^(ie), i.e. point ie mod theta.
  const std::uint64_t theta = g->point_count();
  const std::uint64_t em = static_cast<std::uint64_t>(e) % theta;
  std::vector<PointIndex> perm(theta);
  for (std::uint64_t i = 0; i < theta; ++i) perm[i] = static_cast<PointIndex>(i * em % theta);
  return PointBijection(std::move(perm));
}

PointBijection build_phi_map(const PhiParams& params) {
  const auto g = params.extension ? Geometry::projective(params.r - 1, field_of_order(params.q),
                                                         params.extension, params.basis)
                                  : Geometry::projective(params.r - 1, params.q, params.basis);
  return build_phi_map(g, params.exponent);
}

static std::int64_t pow_mod(std::int64_t base, std::int64_t e, std::int64_t m) {
  std::int64_t r = 1 % m;
  base = ((base % m) + m) % m;
  for (; e > 0; e >>= 1) {
    if (e & 1) r = static_cast<std::int64_t>(static_cast<__int128>(r) * base % m);
    base = static_cast<std::int64_t>(static_cast<__int128>(base) * base % m);
  }
  return r;
}

std::vector<Space> build_phi_family(std::uint32_t q, int r, std::int64_t w, int n, Basis basis) {
  if (r < 2 || n < 0) throw Error(ErrorCode::InvalidArgument, "need r >= 2 and n >= 0");
  const auto g = Geometry::projective(r - 1, q, basis);
  const std::int64_t group = g->extension()->order() - 1;
  if (n >= 1 && std::gcd(((w % group) + group) % group, group) != 1)
    throw Error(ErrorCode::NotCoprime, "w is not coprime to q^r - 1");
  std::vector<Space> out;
  out.push_back(Space::standard(g));
  for (int i = 1; i <= n; ++i) {
    const auto e = pow_mod(w, i, group);
    out.emplace_back(g, build_phi_map(g, e), "Phi_" + std::to_string(w) + "^" + std::to_string(i));
  }
  return out;
}

std::pair<Space, Space> build_askew_pair(int k, std::uint32_t q) {
  if (k < 1 || !is_prime(static_cast<std::uint64_t>(k) + 1))
    throw Error(ErrorCode::KPlus1NotPrime, "k + 1 = " + std::to_string(k + 1) + " is not prime");
  const auto g = Geometry::projective(k, q);
  return {Space::standard(g), Space(g, build_phi_map(g, -1), "Phi_-1")};
}

// --- catalog -----------------------------------------------------------------

namespace {

const std::string_view* find_catalog_source(std::string_view name) {
  for (const auto& [key, json] : kCatalogSources)
    if (key == name) return &json;
  return nullptr;
}

}  // namespace

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& [key, json] : kCatalogSources) out.emplace_back(key);
  std::sort(out.begin(), out.end());
  return out;
}

CatalogEntry catalog_entry(std::string_view name) {
  const auto* src = find_catalog_source(name);
  if (!src) throw Error(ErrorCode::UnknownName, "no catalog entry named '" + std::string(name) + "'");
  const auto j = nlohmann::json::parse(*src);
  CatalogEntry e;
  e.name = j.at("name").get<std::string>();
  const auto& geo = j.at("geometry");
  e.kind = geo.at("kind").get<std::string>() == "affine" ? GeometryKind::Affine : GeometryKind::Projective;
  e.dim = geo.at("dim").get<int>();
  e.q = geo.at("q").get<std::uint32_t>();
  const auto& fld = j.at("field");
  e.p = fld.at("p").get<std::uint32_t>();
  e.n = fld.at("n").get<std::uint32_t>();
  if (fld.contains("modulus")) e.modulus_candidates.push_back(fld.at("modulus").get<std::vector<std::int64_t>>());
  if (fld.contains("modulus_candidates"))
    e.modulus_candidates = fld.at("modulus_candidates").get<std::vector<std::vector<std::int64_t>>>();
  e.basis = basis_from_string(j.at("basis").get<std::string>());
  e.cycles = j.at("cycles").get<std::vector<std::vector<PointIndex>>>();
  e.powers = j.at("powers").get<int>();
  e.expected_size = j.at("expected_size").get<int>();
  e.claim = j.value("claim", "");
  e.note = j.value("note", "");
  e.source_json = std::string(*src);
  return e;
}

namespace {

GeometryPtr catalog_geometry(const CatalogEntry& e, const std::optional<std::vector<std::int64_t>>& modulus) {
  if (e.kind == GeometryKind::Affine) {
    return Geometry::affine(e.dim, FieldDescriptor::create(e.p, e.n, modulus));
  }
  std::uint32_t base_degree = 0;
  for (std::uint32_t x = e.q; x > 1; x /= e.p) ++base_degree;
  const auto base = FieldDescriptor::create(e.p, base_degree);
  const auto ext = FieldDescriptor::create(e.p, e.n, modulus);
  if (ext->primitive() != e.p)
    throw Error(ErrorCode::InvalidArgument, "catalog modulus must have z as a primitive root");
  return Geometry::projective(e.dim, base, ext, e.basis);
}

}  // namespace

CatalogFamily resolve_catalog(std::string_view name) {
  CatalogFamily fam;
  fam.entry = catalog_entry(name);
  const auto& e = fam.entry;
  std::vector<std::optional<std::vector<std::int64_t>>> candidates;
  for (const auto& m : e.modulus_candidates) candidates.emplace_back(m);
  if (candidates.empty()) candidates.emplace_back(std::nullopt);

  std::string log;
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    const auto g = catalog_geometry(e, candidates[c]);
    const auto sigma = PointBijection::from_cycles(g->point_count(), e.cycles);
    std::vector<Space> spaces;
    for (int i = 0; i < e.powers; ++i)
      spaces.emplace_back(g, sigma.pow(i), e.name + "[" + std::to_string(i) + "]");
    const bool ok = are_mutually_orthogoval(spaces).holds && static_cast<int>(spaces.size()) == e.expected_size;
    const auto& field = e.kind == GeometryKind::Affine ? g->field() : g->extension();
    if (!log.empty()) log += "; ";
    log += field->describe() + (ok ? " verifies" : " fails");
    if (ok || c + 1 == candidates.size()) {
      fam.spaces = std::move(spaces);
      fam.generator = sigma;
      fam.modulus = field->modulus();
      fam.verified = ok;
      if (ok) break;
    }
  }
  fam.resolution = fam.verified ? log : log + "; UNVERIFIED";
  return fam;
}

std::vector<Space> catalog_family(std::string_view name) { return resolve_catalog(name).spaces; }

}  // namespace orthokit
