#include "orthokit/commands.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "orthokit/bound.hpp"
#include "orthokit/build.hpp"
#include "orthokit/error.hpp"
#include "orthokit/explore.hpp"

namespace orthokit {

using ojson = nlohmann::ordered_json;

namespace {

std::int64_t get_int(const Params& p, const std::string& key, std::optional<std::int64_t> fallback = std::nullopt) {
  auto it = p.find(key);
  if (it == p.end()) {
    if (fallback) return *fallback;
    throw UsageError("missing parameter '" + key + "'");
  }
  try {
    std::size_t used = 0;
    const auto v = std::stoll(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument(key);
    return v;
  } catch (const std::logic_error&) {
    throw UsageError("parameter '" + key + "' must be an integer, got '" + it->second + "'");
  }
}

std::string get_str(const Params& p, const std::string& key, std::optional<std::string> fallback = std::nullopt) {
  auto it = p.find(key);
  if (it != p.end()) return it->second;
  if (fallback) return *fallback;
  throw UsageError("missing parameter '" + key + "'");
}

void require_known(const Params& p, std::initializer_list<const char*> known) {
  for (const auto& [key, value] : p) {
    bool ok = false;
    for (auto k : known) ok = ok || key == k;
    if (!ok) throw UsageError("unknown parameter '" + key + "'");
  }
}

std::uint32_t as_u32(std::int64_t v, const char* what) {
  if (v < 0 || v > 0xffffffffLL) throw UsageError(std::string(what) + " is out of range");
  return static_cast<std::uint32_t>(v);
}

int as_int(std::int64_t v, const char* what) {
  if (v < -1000000 || v > 1000000) throw UsageError(std::string(what) + " is out of range");
  return static_cast<int>(v);
}

ojson base_report(const std::string& command) {
  ojson r;
  r["tool"] = kToolVersion;
  r["command"] = command;
  return r;
}

ojson verdict_json(const Verdict& v, const std::vector<Space>& spaces) {
  ojson j;
  j["holds"] = v.holds;
  if (v.witness) j["witness"] = witness_json(*v.witness, spaces);
  return j;
}

std::string join_ints(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ojson witness_json(const Witness& w, const std::vector<Space>& spaces) {
  ojson j;
  j["space_a"] = w.space_a;
  j["space_b"] = w.space_b;
  if (w.space_a < spaces.size()) j["name_a"] = spaces[w.space_a].name();
  if (w.space_b < spaces.size()) j["name_b"] = spaces[w.space_b].name();
  j["block_a"] = w.block_a;
  j["block_b"] = w.block_b;
  j["common"] = w.common;
  return j;
}

// --- construct -----------------------------------------------------------------

SpaceBundle construct_bundle(const std::string& kind, const Params& p) {
  if (kind == "char-p") {
    require_known(p, {"p", "n", "k"});
    const auto prime = as_u32(get_int(p, "p"), "p");
    const auto n = as_u32(get_int(p, "n"), "n");
    const int k = as_int(get_int(p, "k"), "k");
    auto pair = build_char_p_pair(prime, n, k);
    ojson params{{"p", prime}, {"n", n}, {"k", k}, {"A", pair.a.code()}, {"B", pair.b.code()}};
    return make_bundle({pair.standard, pair.image}, Property::KOrthogoval, static_cast<int>(prime), kind, params);
  }
  if (kind == "phi-family") {
    require_known(p, {"q", "r", "w", "n", "basis"});
    const auto q = as_u32(get_int(p, "q"), "q");
    const int r = as_int(get_int(p, "r"), "r");
    const auto w = get_int(p, "w");
    const int n = as_int(get_int(p, "n"), "n");
    const auto basis = basis_from_string(get_str(p, "basis", "singer-ascending"));
    auto fam = build_phi_family(q, r, w, n, basis);
    ojson params{{"q", q}, {"r", r}, {"w", w}, {"n", n}};
    return make_bundle(std::move(fam), Property::KOrthogoval, 2, kind, params);
  }
  if (kind == "phi-pair") {
    require_known(p, {"q", "r", "e", "basis"});
    const auto q = as_u32(get_int(p, "q"), "q");
    const int r = as_int(get_int(p, "r"), "r");
    const auto e = get_int(p, "e", -1);
    const auto basis = basis_from_string(get_str(p, "basis", "singer-ascending"));
    if (r < 2) throw UsageError("need r >= 2");
    const auto g = Geometry::projective(r - 1, q, basis);
    std::vector<Space> fam{Space::standard(g), Space(g, build_phi_map(g, e), "Phi_" + std::to_string(e))};
    ojson params{{"q", q}, {"r", r}, {"e", e}};
    return make_bundle(std::move(fam), Property::KOrthogoval, 2, kind, params);
  }
  if (kind == "askew") {
    require_known(p, {"k", "q"});
    const int k = as_int(get_int(p, "k"), "k");
    const auto q = as_u32(get_int(p, "q"), "q");
    auto [s, t] = build_askew_pair(k, q);
    return make_bundle({s, t}, Property::Askew, 2, kind, ojson{{"k", k}, {"q", q}});
  }
  if (kind == "catalog") {
    require_known(p, {"name"});
    const auto name = get_str(p, "name");
    auto fam = resolve_catalog(name);
    if (!fam.verified) throw Error(ErrorCode::UnverifiedCertificate, name + ": " + fam.resolution);
    ojson params{{"name", name}, {"modulus", fam.modulus}, {"resolution", fam.resolution}};
    auto b = make_bundle(fam.spaces, Property::KOrthogoval, 2, kind, params);
    b.as_cycles.assign(b.spaces.size(), true);
    return b;
  }
  if (kind == "three-family") {
    require_known(p, {"n"});
    const auto n = as_u32(get_int(p, "n"), "n");
    if (std::gcd(n, 6u) != 1) throw UsageError("n must be coprime to 6");
    auto pair = build_char_p_pair(2, n, 2);
    const auto& g = pair.standard.geometry();
    std::vector<Space> fam{pair.standard, pair.image, Space(g, pair.map.pow(2), "f^2", true)};
    return make_bundle(std::move(fam), Property::KOrthogoval, 2, kind, ojson{{"n", n}});
  }
  if (kind == "affine-seven") {
    require_known(p, {});
    const auto g = Geometry::affine(2, 3);
    auto fam = extend_standard_family(g, enumerate_structures(g));
    return make_bundle(std::move(fam), Property::KOrthogoval, 2, kind);
  }
  if (kind == "product") {
    require_known(p, {"a", "b", "size"});
    const auto a = read_bundle(read_text_file(get_str(p, "a")));
    const auto b = read_bundle(read_text_file(get_str(p, "b")));
    const auto size = static_cast<std::size_t>(
        get_int(p, "size", static_cast<std::int64_t>(std::min(a.spaces.size(), b.spaces.size()))));
    if (size > a.spaces.size() || size > b.spaces.size()) throw UsageError("size exceeds a family");
    std::vector<Space> sa(a.spaces.begin(), a.spaces.begin() + static_cast<std::ptrdiff_t>(size));
    std::vector<Space> sb(b.spaces.begin(), b.spaces.begin() + static_cast<std::ptrdiff_t>(size));
    auto fam = build_product_family(sa, sb);
    return make_bundle(std::move(fam), Property::KOrthogoval, 2, kind,
                       ojson{{"a", a.construction}, {"b", b.construction}, {"size", size}});
  }
  throw UsageError("unknown construction '" + kind + "'");
}

Outcome cmd_construct(const std::string& kind, const Params& params, const std::filesystem::path& out) {
  const auto bundle = construct_bundle(kind, params);
  const auto text = write_bundle(bundle);
  if (!out.empty()) {
    std::ofstream f(out, std::ios::binary);
    if (!f) throw UsageError("cannot write " + out.string());
    f << text;
  }
  Outcome o;
  o.report = base_report("construct");
  o.report["inputs"] = {{"kind", kind}, {"parameters", bundle.parameters}};
  o.report["geometry"] = geometry_json(*bundle.geometry);
  o.report["spaces"] = bundle.spaces.size();
  o.report["property"] = {{"name", to_string(bundle.property)}, {"k", bundle.k}};
  o.report["exit_code"] = kExitOk;
  o.text = kind + ": " + std::to_string(bundle.spaces.size()) + " spaces on " + bundle.geometry->describe() +
           (out.empty() ? "" : " -> " + out.string()) + "\n";
  return o;
}

// --- verify --------------------------------------------------------------------

Outcome cmd_verify(const SpaceBundle& bundle, std::optional<Property> property, std::optional<int> k) {
  auto cert = bundle.certificate();
  if (property) cert.property = *property;
  if (k) cert.k = *k;
  const auto v = verify(cert);
  Outcome o;
  o.report = base_report("verify");
  o.report["inputs"] = {{"construction", bundle.construction}, {"parameters", bundle.parameters}};
  o.report["geometry"] = geometry_json(*bundle.geometry);
  o.report["property"] = {{"name", to_string(cert.property)}, {"k", cert.k}};
  o.report["spaces"] = cert.spaces.size();
  o.report["verdict"] = verdict_json(v, cert.spaces);
  o.exit_code = v.holds ? kExitOk : kExitPropertyFails;
  o.report["exit_code"] = o.exit_code;
  std::string prop(to_string(cert.property));
  if (cert.property != Property::Askew) prop += " (k=" + std::to_string(cert.k) + ")";
  o.text = bundle.geometry->describe() + ", " + std::to_string(cert.spaces.size()) + " spaces, " + prop + ": " +
           (v.holds ? "holds" : "FAILS") + "\n";
  if (v.witness) {
    const auto& w = *v.witness;
    auto list = [](const std::vector<PointIndex>& xs) {
      std::string s = "{";
      for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + std::to_string(xs[i]);
      return s + "}";
    };
    o.text += "  witness: space " + std::to_string(w.space_a) + " block " + list(w.block_a) + ", space " +
              std::to_string(w.space_b) + " block " + list(w.block_b) + ", common " + list(w.common) + "\n";
  }
  return o;
}

Outcome cmd_verify_file(const std::filesystem::path& path, std::optional<Property> property, std::optional<int> k) {
  return cmd_verify(read_bundle(read_text_file(path)), property, k);
}

// --- bound ---------------------------------------------------------------------

namespace {

std::string geometry_name(GeometryKind kind, int dim, std::uint32_t q) {
  return std::string(kind == GeometryKind::Affine ? "AG(" : "PG(") + std::to_string(dim) + ",F_" +
         std::to_string(q) + ")";
}

ojson bound_row(GeometryKind kind, int dim, std::uint32_t q) {
  ojson row;
  row["geometry"] = geometry_name(kind, dim, q);
  try {
    row["triple_bound"] = triple_bound(kind, dim, q);
    row["johnson_bound"] = johnson_bound(kind, dim, q);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::AffineQ2Undefined) throw;
    row["triple_bound"] = nullptr;
    row["johnson_bound"] = nullptr;
    row["note"] = std::string(to_string(e.code()));
  }
  return row;
}

}  // namespace

Outcome cmd_bound(const std::string& kind, int dim, std::uint32_t q, const std::vector<std::filesystem::path>& bundles) {
  GeometryKind gk;
  if (kind == "affine")
    gk = GeometryKind::Affine;
  else if (kind == "projective")
    gk = GeometryKind::Projective;
  else
    throw UsageError("geometry kind must be affine or projective");
  const auto name = geometry_name(gk, dim, q);
  // The bounds need no point set; a geometry is only built from the bundles.
  GeometryPtr g;
  std::vector<Certificate> certs;
  for (const auto& path : bundles) {
    const auto b = read_bundle(read_text_file(path));
    if (b.geometry->describe() != name)
      throw Error(ErrorCode::UnverifiedCertificate, path.filename().string() + " is not on " + name);
    if (!g) g = b.geometry;
    certs.push_back(b.certificate(path.filename().string()));
  }
  Outcome o;
  o.report = base_report("bound");
  o.report["inputs"] = {{"kind", kind}, {"dim", dim}, {"q", q}, {"certificates", certs.size()}};
  if (g)
    o.report["geometry"] = geometry_json(*g);
  else
    o.report["geometry"] = {{"kind", kind}, {"dim", dim}, {"q", q}};
  BoundReport r;
  if (g) {
    r = bound_report(*g, certs);
  } else {
    r.geometry = name;
    r.triple_bound = triple_bound(gk, dim, q);
    r.johnson_bound = johnson_bound(gk, dim, q);
    r.slack = std::min(r.triple_bound, r.johnson_bound) - r.achieved;
  }
  o.report["bound"] = {{"geometry", r.geometry},     {"triple_bound", r.triple_bound},
                       {"johnson_bound", r.johnson_bound}, {"achieved", r.achieved},
                       {"slack", r.slack}};
  o.report["exit_code"] = kExitOk;
  o.text = r.geometry + ": triple bound " + std::to_string(r.triple_bound) + ", Johnson bound " +
           std::to_string(r.johnson_bound) + ", achieved " + std::to_string(r.achieved) + ", slack " +
           std::to_string(r.slack) + "\n";
  return o;
}

// --- search --------------------------------------------------------------------

namespace {

std::filesystem::path checkpoint_file(const RunOptions& options, const std::string& name) {
  if (options.checkpoint_dir.empty()) return {};
  return options.checkpoint_dir / name;
}

ojson search_result_json(const SearchResult& r) {
  ojson j;
  j["task"] = r.task;
  j["exhaustive"] = r.exhaustive;
  j["budget_exceeded"] = r.budget_exceeded;
  j["nodes"] = r.nodes;
  j["leaves"] = r.leaves;
  j["found"] = r.found;
  j["subtrees"] = r.tasks;
  j["subtrees_done"] = r.tasks_done;
  j["resumed"] = r.resumed;
  ojson certs = ojson::array();
  for (const auto& c : r.certificates) {
    const auto& m = c.spaces.back().map().values();
    certs.push_back({{"name", c.name}, {"permutation", std::vector<PointIndex>(m.begin(), m.end())}});
  }
  j["certificates"] = std::move(certs);
  return j;
}

}  // namespace

Outcome cmd_search(const std::string& kind, const Params& p, const RunOptions& options) {
  Outcome o;
  o.report = base_report("search");
  if (kind == "exponent-scan") {
    require_known(p, {"q", "r", "w_max"});
    const auto q = as_u32(get_int(p, "q"), "q");
    const int r = as_int(get_int(p, "r"), "r");
    const auto w_max = get_int(p, "w_max");
    const auto s = exponent_scan(q, r, w_max);
    o.report["inputs"] = {{"kind", kind}, {"q", q}, {"r", r}, {"w_max", w_max}};
    o.report["geometry"] = geometry_json(*Geometry::projective(r - 1, q));
    o.report["result"] = {{"tested", s.tested},
                          {"orthomorphisms", s.orthomorphisms},
                          {"theorem_conditions", s.theorem_conditions}};
    o.text = "PG(" + std::to_string(r - 1) + "," + std::to_string(q) + ") orthomorphism exponents: " +
             join_ints(s.orthomorphisms) + "\n  meeting the sufficient conditions: " +
             join_ints(s.theorem_conditions) + "\n";
  } else if (kind == "power-chain") {
    require_known(p, {"q", "r", "w"});
    const auto q = as_u32(get_int(p, "q"), "q");
    const int r = as_int(get_int(p, "r"), "r");
    const auto w = get_int(p, "w");
    const int n = power_chain(q, r, w);
    o.report["inputs"] = {{"kind", kind}, {"q", q}, {"r", r}, {"w", w}};
    o.report["geometry"] = geometry_json(*Geometry::projective(r - 1, q));
    o.report["result"] = {{"n", n}, {"family_size", n + 1}};
    o.text = "power chain of w=" + std::to_string(w) + " on PG(" + std::to_string(r - 1) + "," +
             std::to_string(q) + "): n = " + std::to_string(n) + " (" + std::to_string(n + 1) + " spaces)\n";
  } else if (kind == "clique") {
    require_known(p, {"bundle", "budget"});
    const auto b = read_bundle(read_text_file(get_str(p, "bundle")));
    Budget budget{static_cast<std::uint64_t>(get_int(p, "budget", 0))};
    std::vector<PointBijection> cands;
    for (const auto& s : b.spaces) cands.push_back(s.map());
    const auto c = clique_search(cands, b.geometry, budget);
    std::vector<std::string> names;
    std::vector<Space> members;
    for (auto i : c.members) {
      names.push_back(b.spaces[i].name());
      members.push_back(b.spaces[i]);
    }
    const bool verified = members.empty() || are_mutually_orthogoval(members).holds;
    o.report["inputs"] = {{"kind", kind}, {"candidates", cands.size()}, {"budget", budget.max_nodes}};
    o.report["geometry"] = geometry_json(*b.geometry);
    o.report["result"] = {{"size", c.members.size()}, {"members", c.members},    {"names", names},
                          {"nodes", c.nodes},         {"exhaustive", c.exhaustive}, {"verified", verified}};
    if (!verified) throw std::logic_error("clique search returned a family that does not verify");
    if (!c.exhaustive) o.exit_code = kExitBudget;
    o.text = "largest mutually orthogoval subfamily: " + std::to_string(c.members.size()) + " of " +
             std::to_string(cands.size()) + (c.exhaustive ? " (exhaustive)" : " (budget exceeded)") + "\n";
  } else if (kind == "half-dim") {
    require_known(p, {"d", "q", "budget"});
    const int d = as_int(get_int(p, "d"), "d");
    const auto q = as_u32(get_int(p, "q"), "q");
    HalfDimOptions h;
    h.budget.max_nodes = static_cast<std::uint64_t>(get_int(p, "budget", 0));
    h.workers = options.workers;
    h.checkpoint = checkpoint_file(options, "half-dim-d" + std::to_string(d) + "-q" + std::to_string(q) + ".json");
    const auto r = half_dim_exhaustive(d, q, h);
    o.report["inputs"] = {{"kind", kind}, {"d", d}, {"q", q}, {"budget", h.budget.max_nodes}};
    o.report["geometry"] = geometry_json(*Geometry::affine(d, q));
    o.report["result"] = search_result_json(r);
    if (r.budget_exceeded) o.exit_code = kExitBudget;
    o.text = r.task + ": " + std::to_string(r.found) + " solutions, " + std::to_string(r.nodes) + " nodes, " +
             (r.exhaustive ? "exhaustive" : "incomplete") + (r.budget_exceeded ? " (budget exceeded)" : "") + "\n";
  } else if (kind == "phi-probe") {
    require_known(p, {"q", "r"});
    std::vector<std::pair<std::uint32_t, int>> grid{
        {as_u32(get_int(p, "q"), "q"), as_int(get_int(p, "r"), "r")}};
    const auto rows = phi_half_dim_probe(grid);
    o.report["inputs"] = {{"kind", kind}, {"q", grid[0].first}, {"r", grid[0].second}};
    o.report["geometry"] = geometry_json(*Geometry::projective(grid[0].second - 1, grid[0].first));
    o.report["result"] = {{"half_dimension_orthogoval", rows[0].holds}};
    o.text = "PG(" + std::to_string(grid[0].second - 1) + "," + std::to_string(grid[0].first) +
             ") vs Phi_-1 image, half-dimension orthogoval: " + (rows[0].holds ? "yes" : "no") + "\n";
  } else {
    throw UsageError("unknown search '" + kind + "'");
  }
  o.report["exit_code"] = o.exit_code;
  return o;
}

// --- reproduce -----------------------------------------------------------------

namespace {

struct BigSetsRow {
  std::uint32_t q;
  int r;
  std::vector<std::int64_t> ws;
  int n;
};

const std::vector<BigSetsRow>& big_sets_rows() {
  static const std::vector<BigSetsRow> rows{
      {2, 5, {3, 11, 13, 17}, 5}, {2, 7, {3, 7}, 17}, {3, 5, {17, 19}, 9}, {3, 7, {25}, 77},
      {4, 5, {7}, 2},             {4, 7, {23}, 10},   {5, 5, {3, 9}, 6},
  };
  return rows;
}

Outcome reproduce_big_sets() {
  Outcome o;
  ojson rows = ojson::array();
  o.text = "q  r  w   n   chain  spaces  mutually orthogoval\n";
  for (const auto& row : big_sets_rows()) {
    for (auto w : row.ws) {
      const int chain = power_chain(row.q, row.r, w);
      const auto fam = build_phi_family(row.q, row.r, w, row.n);
      const bool mutual = are_mutually_orthogoval(fam).holds;
      const bool pass = chain == row.n && mutual && static_cast<int>(fam.size()) == row.n + 1;
      rows.push_back({{"q", row.q},
                      {"r", row.r},
                      {"w", w},
                      {"n", row.n},
                      {"power_chain", chain},
                      {"spaces", fam.size()},
                      {"mutually_orthogoval", mutual},
                      {"modulus", fam.front().geometry()->extension()->modulus()},
                      {"pass", pass}});
      if (!pass) o.exit_code = kExitPropertyFails;
      o.text += pad(std::to_string(row.q), 3) + pad(std::to_string(row.r), 3) + pad(std::to_string(w), 4) +
                pad(std::to_string(row.n), 4) + pad(std::to_string(chain), 7) + pad(std::to_string(fam.size()), 8) +
                (mutual ? "yes" : "no") + (pass ? "   pass" : "   FAIL") + "\n";
    }
  }
  o.report["rows"] = std::move(rows);
  return o;
}

Outcome reproduce_catalog() {
  Outcome o;
  ojson rows = ojson::array();
  for (const auto& name : catalog_names()) {
    const auto fam = resolve_catalog(name);
    const bool size_ok = static_cast<int>(fam.spaces.size()) == fam.entry.expected_size;
    // Whether sigma^powers returns to the standard space.
    const bool closes = fam.generator.pow(fam.entry.powers).is_identity();
    const bool pass = fam.verified && size_ok;
    rows.push_back({{"name", name},
                    {"geometry", geometry_json(*fam.spaces.front().geometry())},
                    {"spaces", fam.spaces.size()},
                    {"expected", fam.entry.expected_size},
                    {"generator_order_divides_powers", closes},
                    {"resolution", fam.resolution},
                    {"pass", pass}});
    if (!pass) o.exit_code = kExitPropertyFails;
    o.text += pad(name, 11) + pad(std::to_string(fam.spaces.size()) + " spaces", 11) +
              (pass ? "pass" : "FAIL") + "  (" + fam.resolution + ")\n";
  }
  o.report["rows"] = std::move(rows);
  return o;
}

Outcome reproduce_bounds() {
  Outcome o;
  ojson rows = ojson::array();
  o.text = "geometry        triple  johnson\n";
  for (auto kind : {GeometryKind::Affine, GeometryKind::Projective})
    for (std::uint32_t q : {2u, 3u, 4u, 5u})
      for (int d = 2; d <= 6; ++d) {
        auto row = bound_row(kind, d, q);
        auto cell = [](const ojson& v) { return v.is_null() ? std::string("-") : std::to_string(v.get<std::int64_t>()); };
        o.text += pad(row["geometry"].get<std::string>(), 16) + pad(cell(row["triple_bound"]), 8) + cell(row["johnson_bound"]) + "\n";
        if (!row["triple_bound"].is_null() && row["johnson_bound"].get<std::int64_t>() > row["triple_bound"].get<std::int64_t>())
          o.exit_code = kExitPropertyFails;
        rows.push_back(std::move(row));
      }
  o.report["rows"] = std::move(rows);
  return o;
}

Outcome reproduce_askew() {
  Outcome o;
  ojson rows = ojson::array();
  for (auto [k, q] : std::vector<std::pair<int, std::uint32_t>>{{2, 2}, {2, 3}, {2, 5}, {4, 2}, {4, 3}, {6, 2}}) {
    auto [s, t] = build_askew_pair(k, q);
    const auto v = is_askew_pair(s, t);
    std::vector<Space> pair{s, t};
    rows.push_back({{"k", k}, {"q", q}, {"geometry", s.geometry()->describe()}, {"verdict", verdict_json(v, pair)}});
    if (!v.holds) o.exit_code = kExitPropertyFails;
    o.text += pad(s.geometry()->describe(), 12) + (v.holds ? "askew pair: pass" : "askew pair: FAIL") + "\n";
  }
  o.report["rows"] = std::move(rows);
  return o;
}

Outcome reproduce_half_dim(const RunOptions& options) {
  Outcome o;
  HalfDimOptions h;
  h.workers = options.workers;
  h.checkpoint = checkpoint_file(options, "half-dim-d4-q2.json");
  const auto r = half_dim_exhaustive(4, 2, h);
  const bool pass = r.exhaustive && r.found == 0;
  o.report["rows"] = ojson::array({search_result_json(r)});
  o.report["rows"][0]["pass"] = pass;
  if (!pass) o.exit_code = r.budget_exceeded ? kExitBudget : kExitPropertyFails;
  o.text = r.task + ": " + std::to_string(r.found) + " pairs, " + std::to_string(r.nodes) + " nodes, " +
           (r.exhaustive ? "exhaustive" : "incomplete") + (pass ? ", pass" : ", FAIL") + "\n";
  return o;
}

}  // namespace

Outcome cmd_reproduce(const std::string& table, const RunOptions& options) {
  Outcome o;
  if (table == "big-sets")
    o = reproduce_big_sets();
  else if (table == "catalog")
    o = reproduce_catalog();
  else if (table == "bounds")
    o = reproduce_bounds();
  else if (table == "askew")
    o = reproduce_askew();
  else if (table == "half-dim-nonexistence")
    o = reproduce_half_dim(options);
  else
    throw UsageError("unknown table '" + table + "'");
  ojson report = base_report("reproduce");
  report["inputs"] = {{"table", table}};
  report["rows"] = std::move(o.report["rows"]);
  report["exit_code"] = o.exit_code;
  o.report = std::move(report);
  return o;
}

}  // namespace orthokit
