#include <doctest.h>

#include <Eigen/SVD>
#include <cmath>

#include "hspsim/oracles.hpp"
#include "test_util.hpp"

using namespace hspsim;
using std::complex;

TEST_CASE("alphabet structures") {
  const OutputAlphabet canonical(4);
  CHECK(canonical.identity_label() == 0);
  CHECK(canonical.add(3, 2) == 1);
  CHECK(canonical.negate(1) == 3);

  // structure tau = (2,0,1): residue 0 carries label 2
  const OutputAlphabet twisted(3, {2, 0, 1});
  CHECK(twisted.identity_label() == 2);
  CHECK(twisted.residue_of_label(0) == 1);
  CHECK(twisted.add(0, 0) == 1);           // 1 + 1 = 2 mod 3, label of 2 is 1
  CHECK(twisted.add(0, twisted.negate(0)) == 2);

  CHECK_THROWS_AS(OutputAlphabet(3, {0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(OutputAlphabet(0), std::invalid_argument);
}

TEST_CASE("alphabet characters") {
  const OutputAlphabet x4(4);
  CHECK(x4.character_is_trivial(0));
  CHECK(x4.character_is_trivial(4));
  CHECK(x4.character_is_faithful(1));
  CHECK(x4.character_is_faithful(3));
  CHECK_FALSE(x4.character_is_faithful(2));
  CHECK(std::abs(x4.character_value(1, 1) - complex<double>(0, 1)) < 1e-12);
  CHECK(std::abs(x4.character_value(2, 1) - complex<double>(-1, 0)) < 1e-12);

  // the alternating-character ancilla over two labels
  const OutputAlphabet bits(2);
  const auto minus = bits.delta_state(1);
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(minus[0] - complex<double>(s, 0)) < 1e-12);
  CHECK(std::abs(minus[1] - complex<double>(-s, 0)) < 1e-12);
}

TEST_CASE("hiding function tables") {
  const Group klein = make_group({2, 2});
  const Subgroup diag = subgroup_closure(klein, {GroupElement{{1, 1}}});
  const HidingFunction xorf(klein, diag, {0, 1});
  CHECK(xorf.table() == std::vector<int>{0, 1, 1, 0});

  const Subgroup whole =
      subgroup_closure(klein, {GroupElement{{0, 1}}, GroupElement{{1, 0}}});
  const HidingFunction constant(klein, whole, {1}, 2);
  CHECK(constant.table() == std::vector<int>{1, 1, 1, 1});

  const Group z9 = make_group({9});
  const Subgroup thirds = subgroup_closure(z9, {GroupElement{{3}}});
  const HidingFunction relabeled(z9, thirds, {2, 0, 1});
  CHECK(relabeled.table() == std::vector<int>{2, 0, 1, 2, 0, 1, 2, 0, 1});

  CHECK_THROWS_AS(HidingFunction(klein, diag, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(HidingFunction(klein, diag, {0, 5}), std::invalid_argument);
  CHECK_THROWS_AS(HidingFunction(klein, diag, {0}), std::invalid_argument);
}

TEST_CASE("hiding functions are constant exactly on cosets") {
  for (const auto& orders : std::vector<std::vector<int>>{{2, 2}, {8}, {2, 4},
                                                          {3, 3}, {12}, {2, 2, 2}}) {
    const Group g = make_group(orders);
    for (const auto& h : enumerate_all_subgroups(g)) {
      const int q = static_cast<int>(g.size() / h.order());
      std::vector<int> labeling(static_cast<size_t>(q));
      for (int i = 0; i < q; ++i)
        labeling[static_cast<size_t>(i)] = (i + 1) % q;  // a nonidentity injection
      const HidingFunction f(g, h, labeling);
      for (long long a = 0; a < g.size(); ++a)
        for (long long b = 0; b < g.size(); ++b) {
          const bool same_coset =
              h.contains_index(g.add_indices(a, g.neg_index(b)));
          CHECK((f.value_at(a) == f.value_at(b)) == same_coset);
        }
      // image size equals the coset count
      std::set<int> image(f.table().begin(), f.table().end());
      CHECK(static_cast<long long>(image.size()) == q);
    }
  }
}

TEST_CASE("cyclic quotients get a homomorphic coset indexing") {
  // identity labeling composed with the canonical index map must be a
  // homomorphism even when the group itself is not cyclic
  const Group g = make_group({4, 4});
  const Subgroup h = subgroup_closure(g, {GroupElement{{2, 1}}});
  REQUIRE(quotient_type(g, h).is_cyclic);
  const HidingFunction f(g, h, {0, 1, 2, 3});
  const OutputAlphabet x4(4);
  for (long long a = 0; a < g.size(); ++a)
    for (long long b = 0; b < g.size(); ++b)
      CHECK(f.value_at(g.add_indices(a, b)) ==
            x4.add(f.value_at(a), f.value_at(b)));
}

TEST_CASE("shift oracle") {
  const Group z2 = make_group({2});
  const HidingFunction ident(z2, subgroup_closure(z2, {}), {0, 1});
  auto oracle = OracleHandle::shift_oracle(ident, OutputAlphabet(2));

  const auto in = StateVector::joint_basis_state(z2, 2, BasisMode::Element, 1, 1);
  const auto out = apply_shift_oracle(oracle, in);
  CHECK(std::abs(out.amplitudes()[1 * 2 + 0] - complex<double>(1, 0)) < 1e-12);
  CHECK(oracle.queries() == 1);

  // a constant function writes its value into a fresh second register
  const Group klein = make_group({2, 2});
  const Subgroup whole =
      subgroup_closure(klein, {GroupElement{{0, 1}}, GroupElement{{1, 0}}});
  const HidingFunction constant(klein, whole, {1}, 2);
  auto oracle2 = OracleHandle::shift_oracle(constant, OutputAlphabet(2));
  const auto uniform0 = tensor_with_ancilla(uniform_superposition(klein),
                                            (Eigen::VectorXcd(2) << 1, 0).finished());
  const auto written = apply_shift_oracle(oracle2, uniform0);
  for (int g = 0; g < 4; ++g) {
    CHECK(std::abs(written.amplitudes()[2 * g + 1] - complex<double>(0.5, 0)) < 1e-12);
    CHECK(std::abs(written.amplitudes()[2 * g + 0]) < 1e-12);
  }

  // permutation unitary: norms preserved on random joint states
  std::mt19937_64 rng(13);
  for (int t = 0; t < 10; ++t) {
    const auto psi = random_joint_state(z2, 2, rng);
    const auto moved = apply_shift_oracle(oracle, psi);
    CHECK(std::abs(moved.amplitudes().norm() - 1.0) < 1e-12);
  }
  CHECK(oracle.queries() == 11);

  // basis/kind misuse
  CHECK_THROWS_AS(apply_shift_oracle(oracle, uniform_superposition(z2)),
                  invalid_state);
  auto phase = OracleHandle::phase_oracle(ident, OutputAlphabet(2), 1);
  CHECK_THROWS_AS(apply_shift_oracle(phase, in), std::invalid_argument);
}

TEST_CASE("direct phase oracle") {
  const Group g = make_group({2, 2, 2});
  // f(x) = x . s for s = (1,0,1), as a hiding function of ker(s)
  const Character s_char = make_character(g, {1, 0, 1});
  const Subgroup h = kernel(s_char);
  const HidingFunction f(g, h, {0, 1}, 2);
  auto oracle = OracleHandle::phase_oracle(f, OutputAlphabet(2), 1);
  const auto psi = uniform_superposition(g);
  const auto out = apply_phase_oracle_direct(oracle, psi);
  for (long long x = 0; x < g.size(); ++x) {
    const auto expected =
        psi.amplitudes()[x] * eval_character(s_char, g.element(x));
    CHECK(std::abs(out.amplitudes()[x] - expected) < 1e-12);
  }
  CHECK(oracle.queries() == 1);

  // trivial character: identity action
  auto trivial_oracle = OracleHandle::phase_oracle(f, OutputAlphabet(2), 0);
  const auto same = apply_phase_oracle_direct(trivial_oracle, psi);
  CHECK((same.amplitudes() - psi.amplitudes()).norm() < 1e-12);

  // constant function: a global phase chi(f(0))
  const Group klein = make_group({2, 2});
  const Subgroup whole =
      subgroup_closure(klein, {GroupElement{{0, 1}}, GroupElement{{1, 0}}});
  const HidingFunction constant(klein, whole, {1}, 2);
  auto oracle3 = OracleHandle::phase_oracle(constant, OutputAlphabet(2), 1);
  const auto phased =
      apply_phase_oracle_direct(oracle3, uniform_superposition(klein));
  for (int x = 0; x < 4; ++x)
    CHECK(std::abs(phased.amplitudes()[x] - complex<double>(-0.5, 0)) < 1e-12);
}

TEST_CASE("compiled phase oracle matches the direct one") {
  for (const auto& orders : std::vector<std::vector<int>>{{2, 2}, {8}, {2, 4},
                                                          {3, 3}, {12}, {2, 2, 2},
                                                          {9}, {2, 2, 2, 2}}) {
    const Group g = make_group(orders);
    for (const auto& h : enumerate_all_subgroups(g)) {
      const int q = static_cast<int>(g.size() / h.order());
      std::vector<int> labeling(static_cast<size_t>(q));
      for (int i = 0; i < q; ++i) labeling[static_cast<size_t>(i)] = i;
      const HidingFunction f(g, h, labeling);
      const OutputAlphabet alphabet(q);
      std::mt19937_64 rng(31);
      for (int m = 1; m < q; ++m) {
        auto direct = OracleHandle::phase_oracle(f, alphabet, m);
        auto shift = OracleHandle::shift_oracle(f, alphabet);
        const auto psi = random_state(g, rng);
        const auto via_direct = apply_phase_oracle_direct(direct, psi);
        const auto via_shift = compile_phase_from_shift(shift, m, psi);
        CHECK(state_fidelity(via_direct, via_shift) >= 1.0 - 1e-9);
        CHECK(direct.queries() == 1);
        CHECK(shift.queries() == 1);
      }
    }
  }
}

TEST_CASE("compiled route leaves the ancilla unentangled") {
  const Group g = make_group({2, 4});
  const Subgroup h = subgroup_closure(g, {GroupElement{{1, 2}}});
  const int q = static_cast<int>(g.size() / h.order());
  std::vector<int> labeling(static_cast<size_t>(q));
  for (int i = 0; i < q; ++i) labeling[static_cast<size_t>(i)] = i;
  const HidingFunction f(g, h, labeling);
  const OutputAlphabet alphabet(q);
  auto oracle = OracleHandle::shift_oracle(f, alphabet);

  std::mt19937_64 rng(77);
  const auto psi = random_state(g, rng);
  const auto ancilla = alphabet.delta_state(1);
  const auto joint = tensor_with_ancilla(psi, ancilla);
  const auto shifted = apply_shift_oracle(oracle, joint);
  Eigen::Map<const Eigen::Matrix<complex<double>, Eigen::Dynamic, Eigen::Dynamic,
                                 Eigen::RowMajor>>
      view(shifted.amplitudes().data(), g.size(), q);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(view);
  for (Eigen::Index i = 1; i < svd.singularValues().size(); ++i)
    CHECK(svd.singularValues()[i] < 1e-9);
}

TEST_CASE("oracle handles never accept foreign states") {
  const Group z4 = make_group({4});
  const Group z2 = make_group({2});
  const HidingFunction f(z4, subgroup_closure(z4, {GroupElement{{2}}}), {0, 1});
  auto oracle = OracleHandle::phase_oracle(f, OutputAlphabet(2), 1);
  CHECK_THROWS_AS(apply_phase_oracle_direct(oracle, uniform_superposition(z2)),
                  invalid_state);
  const auto wrong_basis = qft(uniform_superposition(z4));
  CHECK_THROWS_AS(apply_phase_oracle_direct(oracle, wrong_basis), invalid_state);
}
