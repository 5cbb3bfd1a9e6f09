#pragma once

// The command-line operations as library calls. Each returns a RunReport (JSON)
// plus a human-readable rendering and the process exit code. Reports never
// contain timings or thread counts, so equal inputs give identical bytes.

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "orthokit/bundle.hpp"

namespace orthokit {

inline constexpr const char* kToolVersion = "orthokit 0.1.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitPropertyFails = 1,
  kExitUsage = 2,
  kExitMalformed = 3,
  kExitBudget = 4,
};

/// Bad command-line input; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Params = std::map<std::string, std::string>;

struct Outcome {
  int exit_code = kExitOk;
  nlohmann::ordered_json report;
  std::string text;
};

struct RunOptions {
  int workers = 1;
  std::filesystem::path checkpoint_dir;  ///< empty: no checkpoints
};

/// Builds a family. Kinds: char-p, phi-family, phi-pair, askew, catalog,
/// three-family, affine-seven, product.
SpaceBundle construct_bundle(const std::string& kind, const Params& params);
Outcome cmd_construct(const std::string& kind, const Params& params, const std::filesystem::path& out);

/// Checks a bundle's claimed property, or the one given.
Outcome cmd_verify(const SpaceBundle& bundle, std::optional<Property> property = std::nullopt,
                   std::optional<int> k = std::nullopt);
Outcome cmd_verify_file(const std::filesystem::path& path, std::optional<Property> property = std::nullopt,
                        std::optional<int> k = std::nullopt);

/// Bounds for one geometry, compared with the families in the given bundles.
Outcome cmd_bound(const std::string& kind, int dim, std::uint32_t q, const std::vector<std::filesystem::path>& bundles);

/// Searches: exponent-scan, power-chain, clique, half-dim, phi-probe.
Outcome cmd_search(const std::string& kind, const Params& params, const RunOptions& options);

/// Tables: big-sets, catalog, bounds, askew, half-dim-nonexistence.
Outcome cmd_reproduce(const std::string& table, const RunOptions& options);

nlohmann::ordered_json witness_json(const Witness& w, const std::vector<Space>& spaces);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace orthokit
