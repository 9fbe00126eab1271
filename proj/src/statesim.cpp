#include "hspsim/statesim.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "hspsim/errors.hpp"

namespace hspsim {

namespace {

using Complex = std::complex<double>;

void check_unit_norm(const Eigen::VectorXcd& amplitudes) {
  const double sumsq = amplitudes.squaredNorm();
  if (std::abs(sumsq - 1.0) > kNormTolerance)
    throw std::invalid_argument("statevector is not normalized");
}

}  // namespace

StateVector::StateVector(Group group, int alphabet_size, BasisMode mode,
                         Eigen::VectorXcd amplitudes)
    : group_(std::move(group)),
      alphabet_size_(alphabet_size),
      mode_(mode),
      amplitudes_(std::move(amplitudes)) {
  const long long expected =
      group_.size() * (alphabet_size_ > 0 ? alphabet_size_ : 1);
  if (amplitudes_.size() != expected)
    throw std::invalid_argument("amplitude count does not match the basis");
  check_unit_norm(amplitudes_);
}

StateVector StateVector::basis_state(const Group& group, BasisMode mode,
                                     long long index) {
  if (index < 0 || index >= group.size())
    throw std::invalid_argument("basis index out of range");
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(group.size());
  amps[index] = 1.0;
  return StateVector(group, 0, mode, std::move(amps));
}

StateVector StateVector::joint_basis_state(const Group& group, int alphabet_size,
                                           BasisMode mode, long long group_index,
                                           int label) {
  if (alphabet_size < 1) throw std::invalid_argument("alphabet size must be >= 1");
  if (group_index < 0 || group_index >= group.size() || label < 0 ||
      label >= alphabet_size)
    throw std::invalid_argument("basis index out of range");
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(group.size() * alphabet_size);
  amps[group_index * alphabet_size + label] = 1.0;
  return StateVector(group, alphabet_size, mode, std::move(amps));
}

StateVector StateVector::from_amplitudes(const Group& group, BasisMode mode,
                                         Eigen::VectorXcd amplitudes) {
  return StateVector(group, 0, mode, std::move(amplitudes));
}

StateVector StateVector::joint_from_amplitudes(const Group& group,
                                               int alphabet_size, BasisMode mode,
                                               Eigen::VectorXcd amplitudes) {
  if (alphabet_size < 1) throw std::invalid_argument("alphabet size must be >= 1");
  return StateVector(group, alphabet_size, mode, std::move(amplitudes));
}

std::string StateVector::basis_label(Eigen::Index i) const {
  std::ostringstream out;
  if (alphabet_size_ > 0) {
    out << format_element(group_.element(i / alphabet_size_)) << '|'
        << (i % alphabet_size_);
  } else {
    out << format_element(group_.element(i));
  }
  return out.str();
}

Eigen::MatrixXcd qft_matrix(const Group& group) {
  group.require_desk_scale("qft_matrix");
  const long long n = group.size();
  const long long l = phase_denominator(group);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  Eigen::MatrixXcd f(n, n);
  for (long long c = 0; c < n; ++c) {
    const Character chi = character_at(group, c);
    for (long long g = 0; g < n; ++g) {
      const long long num = character_phase_numerator(chi, group.element(g));
      f(c, g) = std::polar(scale, 2.0 * std::numbers::pi *
                                      static_cast<double>(num) /
                                      static_cast<double>(l));
    }
  }
  return f;
}

StateVector delta_chi_state(const Group& group, const Character& chi) {
  if (!(chi.group == group))
    throw std::invalid_argument("character belongs to a different group");
  const long long n = group.size();
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  Eigen::VectorXcd amps(n);
  for (long long g = 0; g < n; ++g)
    amps[g] = scale * std::conj(eval_character(chi, group.element(g)));
  return StateVector::from_amplitudes(group, BasisMode::Element, std::move(amps));
}

StateVector uniform_superposition(const Group& group) {
  return delta_chi_state(group, trivial_character(group));
}

namespace {

StateVector apply_to_group_register(const Eigen::MatrixXcd& u,
                                    const StateVector& psi, BasisMode new_mode) {
  const long long n = psi.group().size();
  if (u.rows() != n || u.cols() != n)
    throw std::invalid_argument("matrix does not match the group register");
  if (!psi.has_alphabet()) {
    Eigen::VectorXcd amps = u * psi.amplitudes();
    return StateVector::from_amplitudes(psi.group(), new_mode, std::move(amps));
  }
  const int q = psi.alphabet_size();
  using RowMat =
      Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic,
                    Eigen::RowMajor>;
  Eigen::Map<const RowMat> view(psi.amplitudes().data(), n, q);
  RowMat transformed = u * view;
  Eigen::VectorXcd amps =
      Eigen::Map<Eigen::VectorXcd>(transformed.data(), n * q);
  return StateVector::joint_from_amplitudes(psi.group(), q, new_mode,
                                            std::move(amps));
}

}  // namespace

StateVector qft(const StateVector& psi) {
  if (psi.mode() != BasisMode::Element)
    throw invalid_state("qft expects an element-basis state");
  return apply_to_group_register(qft_matrix(psi.group()), psi,
                                 BasisMode::Character);
}

StateVector qft_inverse(const StateVector& psi) {
  if (psi.mode() != BasisMode::Character)
    throw invalid_state("inverse qft expects a character-basis state");
  return apply_to_group_register(qft_matrix(psi.group()).adjoint(), psi,
                                 BasisMode::Element);
}

StateVector shift_action(const GroupElement& a, const StateVector& psi) {
  if (psi.mode() != BasisMode::Element)
    throw invalid_state("shift action expects an element-basis state");
  if (psi.has_alphabet())
    throw invalid_state("shift action expects a single group register");
  const Group& group = psi.group();
  const long long ai = group.index_of(a);
  Eigen::VectorXcd amps(psi.dim());
  for (long long g = 0; g < group.size(); ++g)
    amps[group.add_indices(ai, g)] = psi.amplitudes()[g];
  return StateVector::from_amplitudes(group, BasisMode::Element, std::move(amps));
}

StateVector phase_action(const GroupElement& a, const StateVector& psi) {
  if (psi.mode() != BasisMode::Character)
    throw invalid_state("phase action expects a character-basis state");
  if (psi.has_alphabet())
    throw invalid_state("phase action expects a single group register");
  const Group& group = psi.group();
  if (!group.contains(a))
    throw std::invalid_argument("element does not belong to the group");
  Eigen::VectorXcd amps(psi.dim());
  for (long long c = 0; c < group.size(); ++c)
    amps[c] = eval_character(character_at(group, c), a) * psi.amplitudes()[c];
  return StateVector::from_amplitudes(group, BasisMode::Character,
                                      std::move(amps));
}

StateVector apply_unitary(const Eigen::MatrixXcd& u, const StateVector& psi) {
  if (u.rows() != psi.dim() || u.cols() != psi.dim())
    throw std::invalid_argument("matrix dimension does not match the state");
  Eigen::VectorXcd amps = u * psi.amplitudes();
  return psi.has_alphabet()
             ? StateVector::joint_from_amplitudes(psi.group(), psi.alphabet_size(),
                                                  psi.mode(), std::move(amps))
             : StateVector::from_amplitudes(psi.group(), psi.mode(),
                                            std::move(amps));
}

std::vector<double> measure_distribution(const StateVector& psi) {
  std::vector<double> probs(static_cast<size_t>(psi.dim()));
  double total = 0.0;
  for (Eigen::Index i = 0; i < psi.dim(); ++i) {
    probs[static_cast<size_t>(i)] = std::norm(psi.amplitudes()[i]);
    total += probs[static_cast<size_t>(i)];
  }
  if (std::abs(total - 1.0) > kNormTolerance)
    throw std::logic_error("measurement distribution does not sum to one");
  return probs;
}

double rng_uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

long long sample_measurement(const StateVector& psi, std::mt19937_64& rng) {
  const auto probs = measure_distribution(psi);
  const double u = rng_uniform01(rng);
  double acc = 0.0;
  for (size_t i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    if (u < acc) return static_cast<long long>(i);
  }
  return static_cast<long long>(probs.size()) - 1;
}

long long sample_measurement(const StateVector& psi, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return sample_measurement(psi, rng);
}

namespace {

StateVector collapse_on(const StateVector& psi, int outcome, double prob) {
  const int q = psi.alphabet_size();
  const long long n = psi.group().size();
  Eigen::VectorXcd amps(n);
  const double scale = 1.0 / std::sqrt(prob);
  for (long long g = 0; g < n; ++g)
    amps[g] = psi.amplitudes()[g * q + outcome] * scale;
  return StateVector::from_amplitudes(psi.group(), psi.mode(), std::move(amps));
}

std::vector<double> alphabet_marginal(const StateVector& psi) {
  const int q = psi.alphabet_size();
  const long long n = psi.group().size();
  std::vector<double> marginal(static_cast<size_t>(q), 0.0);
  for (long long g = 0; g < n; ++g)
    for (int x = 0; x < q; ++x)
      marginal[static_cast<size_t>(x)] += std::norm(psi.amplitudes()[g * q + x]);
  return marginal;
}

}  // namespace

std::pair<int, StateVector> partial_measure_second_register(
    const StateVector& psi, std::mt19937_64& rng) {
  if (!psi.has_alphabet())
    throw invalid_state("partial measurement needs an alphabet register");
  const auto marginal = alphabet_marginal(psi);
  const double u = rng_uniform01(rng);
  double acc = 0.0;
  int outcome = psi.alphabet_size() - 1;
  for (size_t x = 0; x < marginal.size(); ++x) {
    acc += marginal[x];
    if (u < acc) {
      outcome = static_cast<int>(x);
      break;
    }
  }
  return {outcome, collapse_on(psi, outcome, marginal[static_cast<size_t>(outcome)])};
}

std::pair<int, StateVector> partial_measure_second_register(
    const StateVector& psi, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return partial_measure_second_register(psi, rng);
}

StateVector collapse_second_register(const StateVector& psi, int outcome) {
  if (!psi.has_alphabet())
    throw invalid_state("collapse needs an alphabet register");
  if (outcome < 0 || outcome >= psi.alphabet_size())
    throw std::invalid_argument("alphabet outcome out of range");
  const auto marginal = alphabet_marginal(psi);
  const double prob = marginal[static_cast<size_t>(outcome)];
  if (prob < 1e-300)
    throw std::logic_error("collapse onto a zero-probability branch");
  return collapse_on(psi, outcome, prob);
}

StateVector tensor_with_ancilla(const StateVector& psi,
                                const Eigen::VectorXcd& ancilla) {
  if (psi.has_alphabet())
    throw invalid_state("state already carries an alphabet register");
  const int q = static_cast<int>(ancilla.size());
  const long long n = psi.group().size();
  Eigen::VectorXcd amps(n * q);
  for (long long g = 0; g < n; ++g)
    for (int x = 0; x < q; ++x)
      amps[g * q + x] = psi.amplitudes()[g] * ancilla[x];
  return StateVector::joint_from_amplitudes(psi.group(), q, psi.mode(),
                                            std::move(amps));
}

StateVector discard_ancilla(const StateVector& joint,
                            const Eigen::VectorXcd& ancilla) {
  if (!joint.has_alphabet())
    throw invalid_state("no alphabet register to discard");
  const int q = joint.alphabet_size();
  if (ancilla.size() != q)
    throw std::invalid_argument("ancilla length does not match the register");
  const long long n = joint.group().size();
  Eigen::VectorXcd projected(n);
  for (long long g = 0; g < n; ++g) {
    Complex acc = 0.0;
    for (int x = 0; x < q; ++x)
      acc += joint.amplitudes()[g * q + x] * std::conj(ancilla[x]);
    projected[g] = acc;
  }
  // The discard is only valid when the register really is unentangled and
  // exactly in the ancilla state.
  double residual = 0.0;
  for (long long g = 0; g < n; ++g)
    for (int x = 0; x < q; ++x)
      residual += std::norm(joint.amplitudes()[g * q + x] -
                            projected[g] * ancilla[x]);
  if (std::sqrt(residual) > kNormTolerance)
    throw invalid_state("alphabet register is entangled; cannot discard");
  projected /= projected.norm();
  return StateVector::from_amplitudes(joint.group(), joint.mode(),
                                      std::move(projected));
}

double state_fidelity(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("states live on different bases");
  return std::abs(a.amplitudes().dot(b.amplitudes()));
}

bool is_unitary(const Eigen::MatrixXcd& u, double tol) {
  if (u.rows() != u.cols()) return false;
  const Eigen::MatrixXcd defect =
      u * u.adjoint() - Eigen::MatrixXcd::Identity(u.rows(), u.cols());
  return defect.cwiseAbs().maxCoeff() <= tol;
}

bool has_uniform_first_column(const Eigen::MatrixXcd& u, double tol) {
  const double want = 1.0 / std::sqrt(static_cast<double>(u.rows()));
  for (Eigen::Index r = 0; r < u.rows(); ++r)
    if (std::abs(u(r, 0) - Complex(want, 0.0)) > tol) return false;
  return true;
}

namespace {

Complex sample_std_normal(std::mt19937_64& rng) {
  const double u1 = 1.0 - rng_uniform01(rng);  // (0, 1]
  const double u2 = rng_uniform01(rng);
  const double r = std::sqrt(-2.0 * std::log(u1));
  return {r * std::cos(2.0 * std::numbers::pi * u2),
          r * std::sin(2.0 * std::numbers::pi * u2)};
}

Eigen::MatrixXcd seeded_random_unitary(long long n, std::mt19937_64& rng) {
  Eigen::MatrixXcd a(n, n);
  for (long long r = 0; r < n; ++r)
    for (long long c = 0; c < n; ++c) a(r, c) = sample_std_normal(rng);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (long long c = 0; c < n; ++c) {
    const Complex d = r(c, c);
    q.col(c) *= std::abs(d) > 0 ? std::conj(d / std::abs(d)) : 1.0;
  }
  return q;
}

}  // namespace

Eigen::MatrixXcd uniform_first_column_unitary(const Group& domain,
                                              UniformColumnKind kind,
                                              std::uint64_t seed) {
  const long long n = domain.size();
  switch (kind) {
    case UniformColumnKind::GroupQft:
      return qft_matrix(domain).adjoint();
    case UniformColumnKind::CyclicQft:
      return qft_matrix(Group({static_cast<int>(n)}, domain.exhaustive_cap()))
          .adjoint();
    case UniformColumnKind::RandomCompletion: {
      // Householder reflection mapping e_0 to the uniform vector, then a
      // seeded random unitary on the orthogonal complement.
      const double s = 1.0 / std::sqrt(static_cast<double>(n));
      Eigen::VectorXcd target = Eigen::VectorXcd::Constant(n, Complex(s, 0.0));
      Eigen::VectorXcd w = Eigen::VectorXcd::Zero(n);
      w[0] = 1.0;
      w -= target;
      Eigen::MatrixXcd house = Eigen::MatrixXcd::Identity(n, n);
      const double wsq = w.squaredNorm();
      if (wsq > 1e-30)
        house -= (2.0 / wsq) * (w * w.adjoint());
      Eigen::MatrixXcd block = Eigen::MatrixXcd::Identity(n, n);
      if (n > 1) {
        std::mt19937_64 rng(seed);
        block.bottomRightCorner(n - 1, n - 1) = seeded_random_unitary(n - 1, rng);
      }
      return house * block;
    }
  }
  throw std::invalid_argument("unknown unitary construction");
}

StateVector random_state(const Group& group, std::mt19937_64& rng) {
  Eigen::VectorXcd amps(group.size());
  for (long long g = 0; g < group.size(); ++g) amps[g] = sample_std_normal(rng);
  amps /= amps.norm();
  return StateVector::from_amplitudes(group, BasisMode::Element, std::move(amps));
}

StateVector random_joint_state(const Group& group, int alphabet_size,
                               std::mt19937_64& rng) {
  Eigen::VectorXcd amps(group.size() * alphabet_size);
  for (Eigen::Index i = 0; i < amps.size(); ++i) amps[i] = sample_std_normal(rng);
  amps /= amps.norm();
  return StateVector::joint_from_amplitudes(group, alphabet_size,
                                            BasisMode::Element, std::move(amps));
}

}  // namespace hspsim
