#pragma once

#include <cstdint>
#include <vector>

#include "hspsim/oracles.hpp"
#include "hspsim/rational.hpp"

namespace hspsim {

inline constexpr double kDecisionTolerance = 1e-9;

/// Outcome of the constant-vs-balanced decision. The verdict is Constant
/// exactly when the final distribution puts unit mass on the initial basis
/// label; anything strictly between the two promised cases raises
/// promise_violation instead.
struct DecisionResult {
  enum class Verdict { Constant, Balanced };
  Verdict verdict;
  std::vector<double> final_distribution;
  int queries_used = 0;
};

struct IdentificationResult {
  Character measured_character;
  Subgroup recovered_subgroup;  // always the kernel of the measured character
  bool success_certain = false; // unit mass on a single character
  int queries_used = 0;
  std::vector<double> final_distribution;  // over the dual, enumeration order
};

struct SKSample {
  Character character;
  Subgroup kernel;
};

/// Constant-vs-balanced decision with a single phase query, for any unitary
/// V whose first column is uniform. V and its adjoint sandwich the query;
/// the verdict reads off the mass returned to the initial basis state.
DecisionResult djh_decide(OracleHandle& oracle, int chi_m,
                          const Eigen::MatrixXcd& v);
DecisionResult djh_decide_sampled(OracleHandle& oracle, int chi_m,
                                  const Eigen::MatrixXcd& v, std::uint64_t seed);

/// One-query identification for the index-q promise: inverse QFT, phase
/// query with a faithful alphabet character, QFT, measure a character and
/// output its kernel. Exact mode reports the full final distribution and
/// takes the most likely character.
IdentificationResult index_q_identify(OracleHandle& oracle, int chi_m);
IdentificationResult index_q_identify_sampled(OracleHandle& oracle, int chi_m,
                                              std::uint64_t seed);

/// One round of the standard abelian hidden-subgroup sampler: uniform
/// superposition, one shift query, measure out the alphabet register, QFT,
/// measure a character (uniform on the annihilator of H).
SKSample shor_kitaev_sample(OracleHandle& oracle, std::mt19937_64& rng);
SKSample shor_kitaev_sample(OracleHandle& oracle, std::uint64_t seed);

/// Exact character distribution of one sampler round (marginal over the
/// discarded alphabet outcome). Counts one query.
std::vector<double> shor_kitaev_distribution(OracleHandle& oracle);

/// Intersection of the kernels of t independent samples; a supergroup of the
/// hidden subgroup, equal to it once enough independent characters appear.
Subgroup shor_kitaev_intersect(OracleHandle& oracle, int t, std::uint64_t seed);

/// Recovers the secret vector s of f(x) = x . s over Z_2^n by running the
/// index-2 identification and reading s off the measured character.
std::vector<int> bernstein_vazirani(OracleHandle& oracle);

/// Probability that a single sampler round already pins down H: the fraction
/// of characters in the annihilator whose kernel is exactly H. Equals
/// phi(q)/q for a cyclic quotient of order q and 0 for a non-cyclic one.
Rational sk_success_probability(const Group& group, const Subgroup& subgroup);

}  // namespace hspsim
