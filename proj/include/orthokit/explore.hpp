#pragma once

// Search engines over orthomorphisms and families of spaces.
//
// Every search is deterministic: results, node counts and budget cut-offs do
// not depend on the number of worker threads.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orthokit/check.hpp"

namespace orthokit {

struct Budget {
  std::uint64_t max_nodes = 0;  ///< 0 means unlimited
};

// --- Phi exponents ------------------------------------------------------------

struct ExponentScan {
  std::uint32_t q = 0;
  int r = 0;
  std::vector<std::int64_t> tested;          ///< w in [2, w_max] coprime to q^r - 1
  std::vector<std::int64_t> orthomorphisms;  ///< those with Phi_w an orthomorphism
  /// Those meeting the sufficient conditions: w not a power of p and r coprime to w!.
  std::vector<std::int64_t> theorem_conditions;
};

ExponentScan exponent_scan(std::uint32_t q, int r, std::int64_t w_max);

/// Sufficient conditions for Phi_w to be an orthomorphism of PG(r-1, q): w >= 2
/// coprime to q^r - 1, r coprime to w!, and w not a power of the characteristic.
bool meets_orthomorphism_conditions(std::uint32_t q, int r, std::int64_t w);

/// Largest n with Phi_{w^i} an orthomorphism for every 1 <= i <= n.
int power_chain(std::uint32_t q, int r, std::int64_t w);

// --- cliques ------------------------------------------------------------------

struct CliqueResult {
  std::vector<std::size_t> members;  ///< candidate indices, ascending
  std::uint64_t nodes = 0;
  bool exhaustive = true;
};

/// Largest set of candidates whose spaces on g are mutually orthogoval, by
/// branch and bound with a colouring bound.
CliqueResult clique_search(std::span<const PointBijection> candidates, const GeometryPtr& g, Budget budget = {});

/// One bijection per distinct line structure on the points of g (the least
/// permutation in lexicographic order). Only for geometries with at most 9 points.
std::vector<PointBijection> enumerate_structures(const GeometryPtr& g);

/// The standard space plus a largest set of structures from `candidates`
/// orthogoval to it and to each other.
std::vector<Space> extend_standard_family(const GeometryPtr& g, std::span<const PointBijection> candidates,
                                          Budget budget = {});

// --- half-dimension exhaustive search --------------------------------------------

struct HalfDimOptions {
  Budget budget;
  int workers = 1;
  /// File for resumable progress; empty disables checkpointing.
  std::filesystem::path checkpoint;
  /// Certificates kept in the result (all are counted).
  std::size_t max_certificates = 16;
};

struct SearchResult {
  std::string task;
  std::vector<Certificate> certificates;
  std::uint64_t found = 0;   ///< solutions seen, including ones not kept
  std::uint64_t nodes = 0;   ///< partial assignments that survived pruning
  std::uint64_t leaves = 0;  ///< complete assignments reached
  std::uint64_t tasks = 0;   ///< independent subtrees
  std::uint64_t tasks_done = 0;
  bool exhaustive = false;
  bool budget_exceeded = false;
  bool resumed = false;
};

/// Searches all second spaces on AG(d, q), d even, modulo the affine group
/// acting on the images, for one half-dimension-orthogoval to the standard
/// space. Each solution is re-verified by is_half_dimension_orthogoval.
SearchResult half_dim_exhaustive(int d, std::uint32_t q, const HalfDimOptions& options = {});

/// Size of AGL(d, q).
std::uint64_t affine_group_order(int d, std::uint32_t q);

// --- Phi_{-1} half-dimension probe ------------------------------------------------

struct ProbeRow {
  std::uint32_t q;
  int r;
  bool holds;
};

/// For each (q, r) with r odd, whether PG(r-1, q) and its Phi_{-1} image are
/// half-dimension orthogoval.
std::vector<ProbeRow> phi_half_dim_probe(std::span<const std::pair<std::uint32_t, int>> grid);

}  // namespace orthokit
