// orthokit: construct, verify, bound and search for orthogoval families.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "orthokit/check.hpp"
#include "orthokit/commands.hpp"
#include "orthokit/error.hpp"

using namespace orthokit;

namespace {

struct Globals {
  int workers = 1;
  std::string format = "text";
  bool timings = false;
  std::string out;
};

Params parse_params(const std::vector<std::string>& args) {
  Params p;
  for (const auto& a : args) {
    const auto eq = a.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("expected key=value, got '" + a + "'");
    if (!p.emplace(a.substr(0, eq), a.substr(eq + 1)).second) throw UsageError("parameter given twice: " + a);
  }
  return p;
}

int emit(Outcome o, const Globals& g, double seconds, bool report_to_file) {
  if (g.timings) o.report["timings"] = {{"wall_seconds", seconds}};
  if (g.format == "json") {
    const auto text = canonical_json(o.report);
    if (report_to_file && !g.out.empty()) {
      std::ofstream f(g.out, std::ios::binary);
      if (!f) throw UsageError("cannot write " + g.out);
      f << text;
    } else {
      std::cout << text;
    }
  } else {
    std::cout << o.text;
    if (g.timings) std::cout << "wall time: " << seconds << " s\n";
  }
  return o.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite geometry toolkit for orthogoval, askew and half-dimension families"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--workers", g.workers, "Worker threads (results do not depend on it)")
      ->check(CLI::Range(1, 256));
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--timings", g.timings, "Add wall-clock time to the report");
  app.add_option("-o,--out", g.out, "Output file (bundle for construct, report otherwise)");

  std::string kind;
  std::vector<std::string> kv;
  auto* construct = app.add_subcommand("construct", "Build a family and write it as a space bundle");
  construct->add_option("kind", kind, "char-p | phi-family | phi-pair | askew | catalog | three-family | "
                                      "affine-seven | product")
      ->required();
  construct->add_option("params", kv, "key=value parameters");

  std::string bundle_path, property_name;
  int k = 0;
  auto* verify = app.add_subcommand("verify", "Check a bundle's property");
  verify->add_option("bundle", bundle_path, "Space bundle file")->required();
  verify->add_option("--property", property_name, "k-orthogoval | askew | half-dim");
  verify->add_option("-k", k, "Line intersection bound for k-orthogoval")->check(CLI::PositiveNumber);

  std::string geom_kind;
  int dim = 0;
  std::uint32_t q = 0;
  std::vector<std::string> certs;
  auto* bound = app.add_subcommand("bound", "Upper bounds on family size");
  bound->add_option("kind", geom_kind, "affine | projective")->required();
  bound->add_option("dim", dim, "Dimension")->required();
  bound->add_option("q", q, "Field order")->required();
  bound->add_option("--certificate", certs, "Verified bundles to compare against");

  std::string search_kind;
  std::vector<std::string> search_kv;
  auto* search = app.add_subcommand("search", "Run a search engine");
  search->add_option("kind", search_kind, "exponent-scan | power-chain | clique | half-dim | phi-probe")->required();
  search->add_option("params", search_kv, "key=value parameters");

  std::string table;
  auto* reproduce = app.add_subcommand("reproduce", "Recompute a table of results");
  reproduce->add_option("table", table, "big-sets | catalog | bounds | askew | half-dim-nonexistence")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  set_check_workers(g.workers);
  RunOptions run;
  run.workers = g.workers;
  if (const char* dir = std::getenv("ORTHOKIT_CHECKPOINT_DIR"); dir && *dir) run.checkpoint_dir = dir;

  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };

  try {
    if (*construct) {
      auto o = cmd_construct(kind, parse_params(kv), g.out);
      return emit(std::move(o), g, elapsed(), false);
    }
    if (*verify) {
      std::optional<Property> prop;
      if (!property_name.empty()) prop = property_from_string(property_name);
      std::optional<int> kk;
      if (k > 0) kk = k;
      return emit(cmd_verify_file(bundle_path, prop, kk), g, elapsed(), true);
    }
    if (*bound) {
      std::vector<std::filesystem::path> paths(certs.begin(), certs.end());
      return emit(cmd_bound(geom_kind, dim, q, paths), g, elapsed(), true);
    }
    if (*search) return emit(cmd_search(search_kind, parse_params(search_kv), run), g, elapsed(), true);
    if (*reproduce) return emit(cmd_reproduce(table, run), g, elapsed(), true);
  } catch (const UsageError& e) {
    std::cerr << "orthokit: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "orthokit: " << e.what() << "\n";
    if (e.code() == ErrorCode::MalformedBundle) return kExitMalformed;
    if (e.code() == ErrorCode::UnverifiedCertificate) return kExitPropertyFails;
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "orthokit: internal error: " << e.what() << "\n";
    return kExitPropertyFails;
  }
  return kExitUsage;
}
