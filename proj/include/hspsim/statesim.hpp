#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hspsim/characters.hpp"
#include "hspsim/groups.hpp"

namespace hspsim {

/// Whether the computational basis of the group register is currently read
/// as group elements or as characters of the dual group. QFT applications
/// toggle between the two; oracle and shift/phase actions check the tag so a
/// G-vs-dual index confusion fails loudly instead of silently.
enum class BasisMode { Element, Character };

inline constexpr double kNormTolerance = 1e-9;

/// Dense complex statevector over CG, or over CG (x) CX when a second
/// register of `alphabet_size` labels is attached (index layout: group index
/// major, alphabet label minor). Immutable; operations return new states.
class StateVector {
 public:
  static StateVector basis_state(const Group& group, BasisMode mode,
                                 long long index);
  static StateVector joint_basis_state(const Group& group, int alphabet_size,
                                       BasisMode mode, long long group_index,
                                       int label);
  static StateVector from_amplitudes(const Group& group, BasisMode mode,
                                     Eigen::VectorXcd amplitudes);
  static StateVector joint_from_amplitudes(const Group& group, int alphabet_size,
                                           BasisMode mode,
                                           Eigen::VectorXcd amplitudes);

  const Group& group() const { return group_; }
  BasisMode mode() const { return mode_; }
  bool has_alphabet() const { return alphabet_size_ > 0; }
  int alphabet_size() const { return alphabet_size_; }
  Eigen::Index dim() const { return amplitudes_.size(); }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }

  std::string basis_label(Eigen::Index i) const;

 private:
  StateVector(Group group, int alphabet_size, BasisMode mode,
              Eigen::VectorXcd amplitudes);

  Group group_;
  int alphabet_size_;
  BasisMode mode_;
  Eigen::VectorXcd amplitudes_;
};

/// QFT of the group: the character table divided by sqrt(|G|), with rows
/// indexed by characters and columns by elements (both in enumeration
/// order). F[chi][g] = chi(g)/sqrt(|G|).
Eigen::MatrixXcd qft_matrix(const Group& group);

/// |delta_chi> = (1/sqrt(|G|)) sum_g conj(chi(g)) |g>, the unit vector
/// spanning the chi-isotypic line of the regular representation. Equals the
/// inverse QFT applied to the character basis state |chi>.
StateVector delta_chi_state(const Group& group, const Character& chi);

StateVector uniform_superposition(const Group& group);

/// Applies the QFT to the group register (Element -> Character).
StateVector qft(const StateVector& psi);
/// Applies the inverse QFT to the group register (Character -> Element).
StateVector qft_inverse(const StateVector& psi);

/// a . |g> = |a + g|: amplitude permutation on an Element-basis state.
StateVector shift_action(const GroupElement& a, const StateVector& psi);

/// D_a |chi> = chi(a) |chi>: diagonal phase on a Character-basis state.
StateVector phase_action(const GroupElement& a, const StateVector& psi);

/// Applies an arbitrary unitary without reinterpreting the basis labels.
StateVector apply_unitary(const Eigen::MatrixXcd& u, const StateVector& psi);

/// Exact Born distribution over the basis labels.
std::vector<double> measure_distribution(const StateVector& psi);

long long sample_measurement(const StateVector& psi, std::mt19937_64& rng);
long long sample_measurement(const StateVector& psi, std::uint64_t seed);

/// Measures the alphabet register, discards nothing: returns the outcome and
/// the renormalized collapsed state over the group register.
std::pair<int, StateVector> partial_measure_second_register(
    const StateVector& psi, std::mt19937_64& rng);
std::pair<int, StateVector> partial_measure_second_register(
    const StateVector& psi, std::uint64_t seed);

/// Exact-mode collapse onto a chosen alphabet outcome; throws on a
/// zero-probability branch.
StateVector collapse_second_register(const StateVector& psi, int outcome);

/// psi (x) ancilla, attaching an alphabet register of the ancilla's length.
StateVector tensor_with_ancilla(const StateVector& psi,
                                const Eigen::VectorXcd& ancilla);

/// Strips an unentangled alphabet register that is exactly `ancilla`.
/// Throws invalid_state if the joint state does not factorize.
StateVector discard_ancilla(const StateVector& joint,
                            const Eigen::VectorXcd& ancilla);

/// |<a|b>|; 1 means equal up to a global phase.
double state_fidelity(const StateVector& a, const StateVector& b);

bool is_unitary(const Eigen::MatrixXcd& u, double tol = kNormTolerance);
bool has_uniform_first_column(const Eigen::MatrixXcd& u,
                              double tol = kNormTolerance);

/// Constructions of unitaries whose first column is the uniform vector.
enum class UniformColumnKind {
  GroupQft,          // inverse QFT of the given group
  CyclicQft,         // inverse QFT of the cyclic group of the same size
  RandomCompletion,  // Householder completion with a seeded random complement
};

Eigen::MatrixXcd uniform_first_column_unitary(const Group& domain,
                                              UniformColumnKind kind,
                                              std::uint64_t seed = 0);

/// Uniform double in [0, 1) from the top 53 bits; keeps sampling
/// reproducible across standard libraries.
double rng_uniform01(std::mt19937_64& rng);

/// Haar-ish random unit state, seeded by the caller.
StateVector random_state(const Group& group, std::mt19937_64& rng);
StateVector random_joint_state(const Group& group, int alphabet_size,
                               std::mt19937_64& rng);

}  // namespace hspsim
