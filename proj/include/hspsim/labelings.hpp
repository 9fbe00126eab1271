#pragma once

#include <optional>
#include <vector>

#include "hspsim/algorithms.hpp"

namespace hspsim {

/// x -> alpha*x + beta mod q with gcd(alpha, q) = 1; the composition of an
/// automorphism and a constant shift of Z_q.
struct AffineMap {
  int q = 0;
  int alpha = 1;
  int beta = 0;

  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

long long euler_totient(long long q);

/// The affine witness of a permutation of {0, ..., q-1}, if one exists.
/// Candidate alpha/beta are read off the first two values, then verified in
/// full.
std::optional<AffineMap> is_affine(const std::vector<int>& labeling);

struct LabelingClassification {
  int q = 0;
  std::vector<std::vector<int>> affine;
  std::vector<std::vector<int>> non_affine;
};

/// Splits all q! labelings into affine and non-affine; the affine count is
/// q * phi(q). Guarded at q <= 8.
LabelingClassification classify_all_labelings(int q);

struct LabelingScanRow {
  std::vector<int> labeling;
  std::optional<AffineMap> affine;
  double success_probability = 0.0;  // exact-mode P(recovered subgroup == H)
};

/// Runs the one-query identification in exact mode under every labeling of
/// the q cosets (canonical alphabet structure, character m = 1). Requires a
/// cyclic quotient and q <= 5. Affine labelings are checked to succeed with
/// probability 1; the rest are reported as observed.
std::vector<LabelingScanRow> behavioral_compatibility_scan(
    const Group& group, const Subgroup& subgroup);

}  // namespace hspsim
