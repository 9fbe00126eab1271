#include <doctest.h>

#include <Eigen/SVD>
#include <cmath>

#include "hspsim/statesim.hpp"
#include "test_util.hpp"

using namespace hspsim;
using std::complex;

namespace {

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Eigen::MatrixXcd hadamard2() {
  Eigen::MatrixXcd h(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  h << s, s, s, -s;
  return h;
}

}  // namespace

TEST_CASE("qft of Z2 is the Hadamard matrix") {
  const auto f = qft_matrix(make_group({2}));
  CHECK((f - hadamard2()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("qft of Z2^n is the n-fold Hadamard tensor power") {
  Eigen::MatrixXcd expected = hadamard2();
  for (int n = 1; n <= 4; ++n) {
    const auto f = qft_matrix(make_group(std::vector<int>(n, 2)));
    CHECK((f - expected).cwiseAbs().maxCoeff() < 1e-12);
    expected = kron(expected, hadamard2());
  }
}

TEST_CASE("qft of Z3 has entries w^(jk)/sqrt(3)") {
  const auto f = qft_matrix(make_group({3}));
  const double s = 1.0 / std::sqrt(3.0);
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) {
      const auto w = std::polar(s, 2.0 * std::numbers::pi * j * k / 3.0);
      CHECK(std::abs(f(j, k) - w) < 1e-12);
    }
}

TEST_CASE("qft matrices are unitary") {
  for (const auto& orders :
       std::vector<std::vector<int>>{{2}, {3}, {2, 2}, {6}, {2, 4}, {3, 3}, {12},
                                     {2, 2, 2}, {16}, {4, 4}, {24}}) {
    CHECK(is_unitary(qft_matrix(make_group(orders)), 1e-9));
  }
}

TEST_CASE("delta states") {
  const Group z4 = make_group({4});
  const auto uniform = delta_chi_state(z4, trivial_character(z4));
  for (int i = 0; i < 4; ++i)
    CHECK(std::abs(uniform.amplitudes()[i] - complex<double>(0.5, 0.0)) < 1e-12);

  const Group z2 = make_group({2});
  const auto minus = delta_chi_state(z2, make_character(z2, {1}));
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(minus.amplitudes()[0] - complex<double>(s, 0)) < 1e-12);
  CHECK(std::abs(minus.amplitudes()[1] - complex<double>(-s, 0)) < 1e-12);

  // delta_chi equals the inverse QFT of the character basis state
  for (const auto& orders : std::vector<std::vector<int>>{{3}, {2, 2}, {6}}) {
    const Group g = make_group(orders);
    for (long long c = 0; c < g.size(); ++c) {
      const auto via_qft =
          qft_inverse(StateVector::basis_state(g, BasisMode::Character, c));
      const auto direct = delta_chi_state(g, character_at(g, c));
      CHECK((via_qft.amplitudes() - direct.amplitudes()).norm() < 1e-9);
      CHECK(via_qft.mode() == BasisMode::Element);
    }
  }
}

TEST_CASE("delta states are shift eigenvectors with eigenvalue chi(a)") {
  for (const auto& orders :
       std::vector<std::vector<int>>{{2}, {4}, {2, 2}, {3, 3}, {6}, {2, 4}, {12}}) {
    const Group g = make_group(orders);
    for (long long c = 0; c < g.size(); ++c) {
      const Character chi = character_at(g, c);
      const auto delta = delta_chi_state(g, chi);
      for (long long a = 0; a < g.size(); ++a) {
        const auto shifted = shift_action(g.element(a), delta);
        const auto expected =
            eval_character(chi, g.element(a)) * delta.amplitudes();
        CHECK((shifted.amplitudes() - expected).norm() < 1e-9);
      }
    }
  }
}

TEST_CASE("delta states form an orthonormal basis") {
  const Group g = make_group({2, 6});
  std::vector<StateVector> deltas;
  for (long long c = 0; c < g.size(); ++c)
    deltas.push_back(delta_chi_state(g, character_at(g, c)));
  for (size_t a = 0; a < deltas.size(); ++a)
    for (size_t b = 0; b < deltas.size(); ++b) {
      const double overlap = state_fidelity(deltas[a], deltas[b]);
      CHECK(std::abs(overlap - (a == b ? 1.0 : 0.0)) < 1e-9);
    }
}

TEST_CASE("shift action") {
  const Group z2 = make_group({2});
  std::mt19937_64 rng(5);
  const auto psi = random_state(z2, rng);
  const auto swapped = shift_action(GroupElement{{1}}, psi);
  CHECK(std::abs(swapped.amplitudes()[0] - psi.amplitudes()[1]) < 1e-12);
  CHECK(std::abs(swapped.amplitudes()[1] - psi.amplitudes()[0]) < 1e-12);

  const auto same = shift_action(z2.identity(), psi);
  CHECK((same.amplitudes() - psi.amplitudes()).norm() == 0.0);

  const auto tagged = qft(psi);
  CHECK_THROWS_AS(shift_action(GroupElement{{1}}, tagged), invalid_state);
}

TEST_CASE("shift-to-phase identity under the qft") {
  for (const auto& orders : std::vector<std::vector<int>>{{4}, {2, 3}, {3, 3}, {8}}) {
    const Group g = make_group(orders);
    const auto f = qft_matrix(g);
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 25; ++trial) {
      const auto psi = random_state(g, rng);
      const auto fpsi = qft(psi);
      for (long long a = 0; a < g.size(); ++a) {
        const auto lhs = qft(shift_action(g.element(a), psi));
        const auto rhs = phase_action(g.element(a), fpsi);
        CHECK((lhs.amplitudes() - rhs.amplitudes()).norm() < 1e-9);
      }
    }
    (void)f;
  }
}

TEST_CASE("phase action") {
  const Group z2 = make_group({2});
  const auto plus = qft(uniform_superposition(z2));  // |chi_0> in character basis
  const auto phased = phase_action(GroupElement{{1}}, plus);
  CHECK(std::abs(phased.amplitudes().norm() - 1.0) < 1e-12);

  std::mt19937_64 rng(7);
  const auto psi = qft(random_state(z2, rng));
  const auto acted = phase_action(GroupElement{{1}}, psi);
  CHECK(std::abs(acted.amplitudes()[0] - psi.amplitudes()[0]) < 1e-12);
  CHECK(std::abs(acted.amplitudes()[1] + psi.amplitudes()[1]) < 1e-12);
  CHECK_THROWS_AS(phase_action(GroupElement{{1}}, random_state(z2, rng)),
                  invalid_state);
}

TEST_CASE("measure_distribution") {
  const Group z4 = make_group({4});
  const auto basis = StateVector::basis_state(z4, BasisMode::Element, 2);
  const auto point = measure_distribution(basis);
  CHECK(point[2] == 1.0);

  const auto uniform = measure_distribution(uniform_superposition(z4));
  for (double p : uniform) CHECK(std::abs(p - 0.25) < 1e-12);
}

TEST_CASE("sampling is seeded and matches the exact distribution") {
  const Group z4 = make_group({4});
  const auto basis = StateVector::basis_state(z4, BasisMode::Element, 3);
  for (std::uint64_t seed : {0ULL, 1ULL, 42ULL})
    CHECK(sample_measurement(basis, seed) == 3);

  Eigen::VectorXcd amps(4);
  amps << std::polar(std::sqrt(0.1), 0.3), std::polar(std::sqrt(0.2), 1.1),
      std::polar(std::sqrt(0.3), -2.0), std::polar(std::sqrt(0.4), 0.0);
  const auto psi = StateVector::from_amplitudes(z4, BasisMode::Element, amps);
  CHECK(sample_measurement(psi, 42) == sample_measurement(psi, 42));

  const auto dist = measure_distribution(psi);
  std::mt19937_64 rng(2024);
  std::vector<long long> counts(4, 0);
  const int trials = 100000;
  for (int t = 0; t < trials; ++t) ++counts[sample_measurement(psi, rng)];
  for (int i = 0; i < 4; ++i) {
    const double expected = trials * dist[i];
    const double sigma = std::sqrt(trials * dist[i] * (1.0 - dist[i]));
    CHECK(std::abs(counts[i] - expected) <= 3.0 * sigma);
  }
}

TEST_CASE("partial measurement of the alphabet register") {
  const Group z4 = make_group({4});
  // product state psi (x) |2>
  std::mt19937_64 rng(8);
  const auto psi = random_state(z4, rng);
  Eigen::VectorXcd anc = Eigen::VectorXcd::Zero(3);
  anc[2] = 1.0;
  const auto joint = tensor_with_ancilla(psi, anc);
  auto [outcome, collapsed] = partial_measure_second_register(joint, 17);
  CHECK(outcome == 2);
  CHECK((collapsed.amplitudes() - psi.amplitudes()).norm() < 1e-9);

  // uniform-superposition-and-apply-f state for Z4 with f = parity
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(8);
  for (int g = 0; g < 4; ++g) amps[2 * g + (g % 2)] = 0.5;
  const auto sk = StateVector::joint_from_amplitudes(z4, 2, BasisMode::Element,
                                                     std::move(amps));
  for (int branch = 0; branch < 2; ++branch) {
    const auto coset = collapse_second_register(sk, branch);
    CHECK(std::abs(coset.amplitudes().norm() - 1.0) < 1e-12);
    int support = 0;
    for (int g = 0; g < 4; ++g) {
      const double a = std::abs(coset.amplitudes()[g]);
      if (a > 1e-12) {
        ++support;
        CHECK(std::abs(a - 1.0 / std::sqrt(2.0)) < 1e-9);
        CHECK(g % 2 == branch);
      }
    }
    CHECK(support == 2);
  }

  CHECK_THROWS_AS(collapse_second_register(joint, 0), std::logic_error);
}

TEST_CASE("ancilla discard requires an unentangled register") {
  const Group z2 = make_group({2});
  Eigen::VectorXcd bell = Eigen::VectorXcd::Zero(4);
  bell[0] = bell[3] = 1.0 / std::sqrt(2.0);
  const auto entangled =
      StateVector::joint_from_amplitudes(z2, 2, BasisMode::Element, bell);
  Eigen::VectorXcd anc(2);
  anc << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  CHECK_THROWS_AS(discard_ancilla(entangled, anc), invalid_state);

  std::mt19937_64 rng(3);
  const auto psi = random_state(z2, rng);
  const auto joint = tensor_with_ancilla(psi, anc);
  const auto back = discard_ancilla(joint, anc);
  CHECK((back.amplitudes() - psi.amplitudes()).norm() < 1e-9);

  // Schmidt rank of a product state is 1
  Eigen::Map<const Eigen::Matrix<complex<double>, Eigen::Dynamic, Eigen::Dynamic,
                                 Eigen::RowMajor>>
      view(joint.amplitudes().data(), 2, 2);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(view);
  CHECK(svd.singularValues()[1] < 1e-9);
}

TEST_CASE("uniform-first-column unitaries") {
  const Group z2 = make_group({2});
  const auto a = uniform_first_column_unitary(z2, UniformColumnKind::GroupQft);
  const auto b = uniform_first_column_unitary(z2, UniformColumnKind::CyclicQft);
  CHECK((a - b).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((a - hadamard2()).cwiseAbs().maxCoeff() < 1e-12);

  const Group klein = make_group({2, 2});
  const auto group_v = uniform_first_column_unitary(klein, UniformColumnKind::GroupQft);
  const auto cyclic_v = uniform_first_column_unitary(klein, UniformColumnKind::CyclicQft);
  CHECK((group_v - cyclic_v).cwiseAbs().maxCoeff() > 0.1);  // genuinely different
  for (const auto& v : {group_v, cyclic_v}) {
    CHECK(is_unitary(v, 1e-9));
    CHECK(has_uniform_first_column(v, 1e-9));
  }

  const Group z8 = make_group({8});
  const auto random_v =
      uniform_first_column_unitary(z8, UniformColumnKind::RandomCompletion, 7);
  CHECK(is_unitary(random_v, 1e-9));
  CHECK(has_uniform_first_column(random_v, 1e-9));
  const auto random_v2 =
      uniform_first_column_unitary(z8, UniformColumnKind::RandomCompletion, 8);
  CHECK((random_v - random_v2).cwiseAbs().maxCoeff() > 0.01);
}

TEST_CASE("state from_amplitudes enforces normalization") {
  const Group z2 = make_group({2});
  Eigen::VectorXcd bad(2);
  bad << 1.0, 1.0;
  CHECK_THROWS_AS(StateVector::from_amplitudes(z2, BasisMode::Element, bad),
                  std::invalid_argument);
}

TEST_CASE("basis labels") {
  const Group klein = make_group({2, 2});
  const auto psi = StateVector::basis_state(klein, BasisMode::Element, 2);
  CHECK(psi.basis_label(2) == "(1,0)");
  const auto joint =
      StateVector::joint_basis_state(klein, 3, BasisMode::Element, 2, 1);
  CHECK(joint.basis_label(2 * 3 + 1) == "(1,0)|1");
}
