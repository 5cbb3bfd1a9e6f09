#pragma once

// Constructions of orthogoval families.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orthokit/check.hpp"

namespace orthokit {

/// Lexicographically least (a, b) (by element code, a first) such that
/// poly(x) + a x + b has no root in the field. `poly` is low-to-high.
std::pair<FieldElement, FieldElement> find_no_root_coeffs(const FieldPtr& field, std::span<const Code> poly);

struct CharPPair {
  Space standard;
  Space image;
  PointBijection map;
  FieldElement a;  ///< coefficient of x_2 in the last component
  FieldElement b;  ///< coefficient of x_1 in the last component
};

/// The additive map (x_1^p - x_2, ..., x_{k-1}^p - x_k, x_k^p + A x_2 + B x_1)
/// on AG(k, GF(p^n)), with A, B making x^((p^k-1)/(p-1)) + Ax + B rootless.
CharPPair build_char_p_pair(std::uint32_t p, std::uint32_t n, int k);

/// Componentwise product g(x, y) = (f(x), f'(y)) of two equal-size families
/// on AG(m, q) and AG(n, q).
std::vector<Space> build_product_family(std::span<const Space> a, std::span<const Space> b);

struct PhiParams {
  std::uint32_t q = 2;
  int r = 3;
  std::int64_t exponent = -1;
  Basis basis = Basis::SingerAscending;
  FieldPtr extension;  ///< GF(q^r); nullptr for the default modulus
};

/// The map induced on PG(r-1, q) by raising Singer labels to a power.
PointBijection build_phi_map(const GeometryPtr& g, std::int64_t exponent);
PointBijection build_phi_map(const PhiParams& params);

/// Standard PG(r-1, q) followed by its images under Phi_{w^i}, 1 <= i <= n.
std::vector<Space> build_phi_family(std::uint32_t q, int r, std::int64_t w, int n,
                                    Basis basis = Basis::SingerAscending);

/// PG(k, q) and its image under Phi_{-1}; refuses unless k + 1 is prime.
std::pair<Space, Space> build_askew_pair(int k, std::uint32_t q);

// --- explicit permutation catalog -----------------------------------------

struct CatalogEntry {
  std::string name;
  GeometryKind kind;
  int dim;
  std::uint32_t q;
  std::uint32_t p;
  std::uint32_t n;
  std::vector<std::vector<std::int64_t>> modulus_candidates;  ///< empty: default modulus
  Basis basis;
  std::vector<std::vector<PointIndex>> cycles;
  int powers;
  int expected_size;
  std::string claim;
  std::string note;
  std::string source_json;  ///< the embedded data file, verbatim
};

struct CatalogFamily {
  CatalogEntry entry;
  std::vector<Space> spaces;
  PointBijection generator;
  std::vector<std::uint32_t> modulus;  ///< extension modulus in force (projective)
  bool verified = false;
  /// Human-readable record of the modulus resolution.
  std::string resolution;
};

std::vector<std::string> catalog_names();
CatalogEntry catalog_entry(std::string_view name);
/// Builds the named family; where several moduli are listed, tries each in
/// order and keeps the first under which the family is mutually orthogoval.
CatalogFamily resolve_catalog(std::string_view name);
std::vector<Space> catalog_family(std::string_view name);

}  // namespace orthokit
