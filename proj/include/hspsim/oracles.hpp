#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "hspsim/statesim.hpp"

namespace hspsim {

/// Output alphabet X = {0, ..., q-1} carrying a chosen Z_q structure: the
/// group law induced on the labels by a structure permutation tau mapping the
/// canonical residue k to the label tau(k). The default is the canonical
/// structure (tau = identity, labels add mod q).
class OutputAlphabet {
 public:
  explicit OutputAlphabet(int q);
  OutputAlphabet(int q, std::vector<int> structure_perm);

  int size() const { return q_; }
  const std::vector<int>& structure() const { return structure_; }
  int label_of_residue(int k) const { return structure_[static_cast<size_t>(k)]; }
  int residue_of_label(int label) const {
    return inverse_[static_cast<size_t>(label)];
  }

  int add(int x, int y) const;
  int negate(int x) const;
  int identity_label() const { return structure_[0]; }

  /// chi_m(label) = exp(2*pi*i * m * residue(label) / q).
  std::complex<double> character_value(int m, int label) const;
  bool character_is_trivial(int m) const;
  bool character_is_faithful(int m) const;  // gcd(m, q) == 1

  /// The unit vector with entries conj(chi_m(x)) / sqrt(q): the ancilla that
  /// turns a shift by a into multiplication by chi_m(a).
  Eigen::VectorXcd delta_state(int m) const;

 private:
  int q_;
  std::vector<int> structure_;  // residue -> label
  std::vector<int> inverse_;    // label -> residue
};

/// f = iota . pi: constant on each coset of the hidden subgroup, distinct
/// across cosets. Cosets are indexed canonically: when G/H is cyclic the
/// k-th coset is k times a fixed generator coset (so the index map is a group
/// isomorphism onto Z_q); otherwise cosets are ordered by least
/// representative. The labeling injects coset indices into the alphabet.
class HidingFunction {
 public:
  HidingFunction(Group group, Subgroup subgroup, std::vector<int> labeling,
                 int alphabet_size = 0);

  const Group& domain() const { return group_; }
  /// Fixture-side knowledge; oracles never read it.
  const Subgroup& hidden_subgroup() const { return subgroup_; }
  int alphabet_size() const { return alphabet_size_; }
  int coset_count() const { return static_cast<int>(labeling_.size()); }
  const std::vector<int>& labeling() const { return labeling_; }
  const std::vector<int>& table() const { return table_; }
  int value_at(long long group_index) const {
    return table_[static_cast<size_t>(group_index)];
  }

 private:
  Group group_;
  Subgroup subgroup_;
  std::vector<int> labeling_;
  int alphabet_size_;
  std::vector<int> table_;
};

/// Black-box handle over a function table: it exposes only the oracle
/// unitaries and a query counter, never the hidden subgroup. Algorithms that
/// claim a single query are checked against the counter after the run.
class OracleHandle {
 public:
  enum class Kind { Shift, Phase };

  static OracleHandle shift_oracle(const HidingFunction& f, OutputAlphabet alphabet);
  static OracleHandle shift_oracle(const Group& domain, std::vector<int> table,
                                   OutputAlphabet alphabet);
  static OracleHandle phase_oracle(const HidingFunction& f, OutputAlphabet alphabet,
                                   int chi_m);
  static OracleHandle phase_oracle(const Group& domain, std::vector<int> table,
                                   OutputAlphabet alphabet, int chi_m);

  Kind kind() const { return kind_; }
  int chi_m() const { return chi_m_; }
  int queries() const { return queries_; }
  const Group& domain() const { return domain_; }
  const OutputAlphabet& alphabet() const { return alphabet_; }

  friend StateVector apply_shift_oracle(OracleHandle& oracle,
                                        const StateVector& psi);
  friend StateVector apply_phase_oracle_direct(OracleHandle& oracle,
                                               const StateVector& psi);
  friend StateVector compile_phase_from_shift(OracleHandle& oracle, int chi_m,
                                              const StateVector& psi);

 private:
  OracleHandle(Kind kind, Group domain, std::vector<int> table,
               OutputAlphabet alphabet, int chi_m);

  Kind kind_;
  Group domain_;
  std::vector<int> table_;
  OutputAlphabet alphabet_;
  int chi_m_;
  int queries_ = 0;
};

/// U |g>|x> = |g>|f(g) + x> using the alphabet's group law. One query.
StateVector apply_shift_oracle(OracleHandle& oracle, const StateVector& psi);

/// U |g> = chi_m(f(g)) |g> for the handle's fixed character. One query.
StateVector apply_phase_oracle_direct(OracleHandle& oracle, const StateVector& psi);

/// Phase query realized through the shift unitary: tensors the ancilla
/// delta_state(chi_m) onto the alphabet register, shifts once, and strips the
/// (unchanged) ancilla. Counts as a single query.
StateVector compile_phase_from_shift(OracleHandle& oracle, int chi_m,
                                     const StateVector& psi);

}  // namespace hspsim
