#include "hspsim/algorithms.hpp"

#include <algorithm>

#include "hspsim/errors.hpp"

namespace hspsim {

namespace {

// Dispatches a phase query to the route the handle supports.
StateVector query_phase(OracleHandle& oracle, int chi_m, const StateVector& psi) {
  if (oracle.kind() == OracleHandle::Kind::Phase)
    return apply_phase_oracle_direct(oracle, psi);
  return compile_phase_from_shift(oracle, chi_m, psi);
}

void check_single_query(const OracleHandle& oracle, int before) {
  if (oracle.queries() - before != 1)
    throw std::logic_error("algorithm did not use exactly one query");
}

StateVector djh_final_state(OracleHandle& oracle, int chi_m,
                            const Eigen::MatrixXcd& v) {
  const Group& domain = oracle.domain();
  if (oracle.kind() == OracleHandle::Kind::Phase && chi_m != oracle.chi_m())
    throw std::invalid_argument("oracle handle is fixed to a different character");
  if (oracle.alphabet().character_is_trivial(chi_m))
    throw std::invalid_argument("decision requires a nontrivial character");
  if (domain.size() % oracle.alphabet().size() != 0)
    throw std::invalid_argument("alphabet size must divide the domain size");
  if (v.rows() != domain.size() || v.cols() != domain.size())
    throw std::invalid_argument("unitary does not match the domain");
  if (!is_unitary(v))
    throw std::invalid_argument("pre-oracle matrix is not unitary");
  if (!has_uniform_first_column(v))
    throw std::invalid_argument("pre-oracle unitary must have a uniform first column");

  const auto psi0 = StateVector::basis_state(domain, BasisMode::Element, 0);
  const auto psi1 = apply_unitary(v, psi0);
  const auto psi2 = query_phase(oracle, chi_m, psi1);
  return apply_unitary(v.adjoint(), psi2);
}

DecisionResult decide_from_state(const StateVector& psi3, int queries) {
  auto dist = measure_distribution(psi3);
  const double p0 = dist[0];
  DecisionResult out;
  out.final_distribution = std::move(dist);
  out.queries_used = queries;
  if (p0 >= 1.0 - kDecisionTolerance) {
    out.verdict = DecisionResult::Verdict::Constant;
  } else if (p0 <= kDecisionTolerance) {
    out.verdict = DecisionResult::Verdict::Balanced;
  } else {
    throw promise_violation(
        "function is neither constant nor balanced (mass on the initial state "
        "is strictly between 0 and 1)");
  }
  return out;
}

}  // namespace

DecisionResult djh_decide(OracleHandle& oracle, int chi_m,
                          const Eigen::MatrixXcd& v) {
  const int before = oracle.queries();
  const auto psi3 = djh_final_state(oracle, chi_m, v);
  check_single_query(oracle, before);
  return decide_from_state(psi3, 1);
}

DecisionResult djh_decide_sampled(OracleHandle& oracle, int chi_m,
                                  const Eigen::MatrixXcd& v, std::uint64_t seed) {
  const int before = oracle.queries();
  const auto psi3 = djh_final_state(oracle, chi_m, v);
  check_single_query(oracle, before);
  auto out = decide_from_state(psi3, 1);
  const long long label = sample_measurement(psi3, seed);
  out.verdict = label == 0 ? DecisionResult::Verdict::Constant
                           : DecisionResult::Verdict::Balanced;
  return out;
}

namespace {

StateVector identify_final_state(OracleHandle& oracle, int chi_m) {
  if (oracle.kind() == OracleHandle::Kind::Phase && chi_m != oracle.chi_m())
    throw std::invalid_argument("oracle handle is fixed to a different character");
  if (!oracle.alphabet().character_is_faithful(chi_m))
    throw std::invalid_argument(
        "identification requires a faithful alphabet character");
  const Group& domain = oracle.domain();
  const auto psi0 = StateVector::basis_state(domain, BasisMode::Character, 0);
  const auto psi1 = qft_inverse(psi0);  // uniform superposition over G
  const auto psi2 = query_phase(oracle, chi_m, psi1);
  return qft(psi2);
}

IdentificationResult identification_from(const StateVector& psi3,
                                         long long measured_index) {
  auto dist = measure_distribution(psi3);
  Character measured = character_at(psi3.group(), measured_index);
  Subgroup recovered = kernel(measured);
  const double top = *std::max_element(dist.begin(), dist.end());
  return IdentificationResult{std::move(measured), std::move(recovered),
                              top >= 1.0 - kDecisionTolerance, 1,
                              std::move(dist)};
}

}  // namespace

IdentificationResult index_q_identify(OracleHandle& oracle, int chi_m) {
  const int before = oracle.queries();
  const auto psi3 = identify_final_state(oracle, chi_m);
  check_single_query(oracle, before);
  const auto dist = measure_distribution(psi3);
  const long long best = static_cast<long long>(
      std::max_element(dist.begin(), dist.end()) - dist.begin());
  return identification_from(psi3, best);
}

IdentificationResult index_q_identify_sampled(OracleHandle& oracle, int chi_m,
                                              std::uint64_t seed) {
  const int before = oracle.queries();
  const auto psi3 = identify_final_state(oracle, chi_m);
  check_single_query(oracle, before);
  return identification_from(psi3, sample_measurement(psi3, seed));
}

namespace {

StateVector sk_post_query_state(OracleHandle& oracle) {
  if (oracle.kind() != OracleHandle::Kind::Shift)
    throw std::invalid_argument("the sampler runs on the shift oracle");
  const Group& domain = oracle.domain();
  const int q = oracle.alphabet().size();
  const auto psi0 = StateVector::joint_basis_state(
      domain, q, BasisMode::Character, 0, oracle.alphabet().identity_label());
  const auto psi1 = qft_inverse(psi0);
  return apply_shift_oracle(oracle, psi1);
}

}  // namespace

SKSample shor_kitaev_sample(OracleHandle& oracle, std::mt19937_64& rng) {
  const int before = oracle.queries();
  const auto psi2 = sk_post_query_state(oracle);
  check_single_query(oracle, before);
  auto [outcome, collapsed] = partial_measure_second_register(psi2, rng);
  (void)outcome;  // discarded
  const auto psi4 = qft(collapsed);
  const long long index = sample_measurement(psi4, rng);
  Character rho = character_at(oracle.domain(), index);
  Subgroup ker = kernel(rho);
  return SKSample{std::move(rho), std::move(ker)};
}

SKSample shor_kitaev_sample(OracleHandle& oracle, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return shor_kitaev_sample(oracle, rng);
}

std::vector<double> shor_kitaev_distribution(OracleHandle& oracle) {
  const int before = oracle.queries();
  const auto psi2 = sk_post_query_state(oracle);
  check_single_query(oracle, before);
  const int q = oracle.alphabet().size();
  const long long n = oracle.domain().size();
  std::vector<double> marginal(static_cast<size_t>(q), 0.0);
  for (long long g = 0; g < n; ++g)
    for (int x = 0; x < q; ++x)
      marginal[static_cast<size_t>(x)] += std::norm(psi2.amplitudes()[g * q + x]);
  std::vector<double> out(static_cast<size_t>(n), 0.0);
  for (int x = 0; x < q; ++x) {
    if (marginal[static_cast<size_t>(x)] < 1e-15) continue;
    const auto branch = qft(collapse_second_register(psi2, x));
    const auto dist = measure_distribution(branch);
    for (size_t i = 0; i < dist.size(); ++i)
      out[i] += marginal[static_cast<size_t>(x)] * dist[i];
  }
  return out;
}

Subgroup shor_kitaev_intersect(OracleHandle& oracle, int t, std::uint64_t seed) {
  if (t < 1) throw std::invalid_argument("need at least one sample");
  std::mt19937_64 rng(seed);
  auto first = shor_kitaev_sample(oracle, rng);
  Subgroup acc = std::move(first.kernel);
  for (int i = 1; i < t; ++i) {
    auto sample = shor_kitaev_sample(oracle, rng);
    acc = intersect(acc, sample.kernel);
  }
  return acc;
}

std::vector<int> bernstein_vazirani(OracleHandle& oracle) {
  const Group& domain = oracle.domain();
  for (int n : domain.orders())
    if (n != 2)
      throw std::invalid_argument("the secret-vector problem lives on Z_2^n");
  if (oracle.alphabet().size() != 2)
    throw std::invalid_argument("the secret-vector oracle outputs one bit");
  const auto result = index_q_identify(oracle, 1);
  if (!result.success_certain)
    throw promise_violation("oracle function is not of the form x . s");
  return result.measured_character.exponents;
}

Rational sk_success_probability(const Group& group, const Subgroup& subgroup) {
  const auto annihilator = h_perp(group, subgroup);
  long long hits = 0;
  for (const auto& rho : annihilator)
    if (kernel(rho) == subgroup) ++hits;
  return Rational(hits, static_cast<long long>(annihilator.size()));
}

}  // namespace hspsim
