#include "hspsim/labelings.hpp"

#include <algorithm>
#include <numeric>

#include "hspsim/errors.hpp"

namespace hspsim {

long long euler_totient(long long q) {
  if (q < 1) throw std::invalid_argument("totient argument must be >= 1");
  long long count = 0;
  for (long long m = 1; m <= q; ++m)
    if (std::gcd(m, q) == 1) ++count;
  return count;
}

std::optional<AffineMap> is_affine(const std::vector<int>& labeling) {
  const int q = static_cast<int>(labeling.size());
  if (q == 0) return std::nullopt;
  if (q == 1) return labeling[0] == 0 ? std::optional<AffineMap>({1, 1, 0})
                                      : std::nullopt;
  const int beta = labeling[0];
  const int alpha = ((labeling[1] - beta) % q + q) % q;
  if (std::gcd(alpha, q) != 1) return std::nullopt;
  for (int x = 0; x < q; ++x)
    if (labeling[static_cast<size_t>(x)] != (alpha * x + beta) % q)
      return std::nullopt;
  return AffineMap{q, alpha, beta};
}

LabelingClassification classify_all_labelings(int q) {
  if (q < 1) throw std::invalid_argument("alphabet size must be >= 1");
  if (q > 8)
    throw refused_operation("labeling classification enumerates q! permutations; q > 8 refused");
  LabelingClassification out;
  out.q = q;
  std::vector<int> perm(static_cast<size_t>(q));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (is_affine(perm))
      out.affine.push_back(perm);
    else
      out.non_affine.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<LabelingScanRow> behavioral_compatibility_scan(
    const Group& group, const Subgroup& subgroup) {
  const long long q = group.size() / subgroup.order();
  if (q > 5)
    throw refused_operation("labeling scan enumerates q! runs; q > 5 refused");
  if (!quotient_type(group, subgroup).is_cyclic)
    throw std::invalid_argument("labeling scan requires a cyclic quotient");

  // Kernels of all characters, computed once; a run succeeds when the
  // measured character's kernel is exactly H.
  std::vector<char> pins_h(static_cast<size_t>(group.size()), 0);
  for (long long c = 0; c < group.size(); ++c)
    pins_h[static_cast<size_t>(c)] = kernel(character_at(group, c)) == subgroup;

  std::vector<LabelingScanRow> out;
  std::vector<int> perm(static_cast<size_t>(q));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    const HidingFunction f(group, subgroup, perm);
    auto oracle = OracleHandle::phase_oracle(f, OutputAlphabet(static_cast<int>(q)), 1);
    const auto result = index_q_identify(oracle, 1);
    double success = 0.0;
    for (long long c = 0; c < group.size(); ++c)
      if (pins_h[static_cast<size_t>(c)])
        success += result.final_distribution[static_cast<size_t>(c)];
    LabelingScanRow row;
    row.labeling = perm;
    row.affine = is_affine(perm);
    row.success_probability = success;
    if (row.affine && success < 1.0 - kDecisionTolerance)
      throw std::logic_error("affine labeling failed to identify with certainty");
    out.push_back(std::move(row));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace hspsim
