#include "hspsim/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "hspsim/errors.hpp"

namespace hspsim {

namespace {

std::vector<int> identity_perm(int q) {
  std::vector<int> out(static_cast<size_t>(q));
  std::iota(out.begin(), out.end(), 0);
  return out;
}

}  // namespace

OutputAlphabet::OutputAlphabet(int q) : OutputAlphabet(q, identity_perm(q)) {}

OutputAlphabet::OutputAlphabet(int q, std::vector<int> structure_perm)
    : q_(q), structure_(std::move(structure_perm)) {
  if (q_ < 1) throw std::invalid_argument("alphabet size must be >= 1");
  if (structure_.size() != static_cast<size_t>(q_))
    throw std::invalid_argument("structure permutation has the wrong length");
  inverse_.assign(static_cast<size_t>(q_), -1);
  for (int k = 0; k < q_; ++k) {
    const int label = structure_[static_cast<size_t>(k)];
    if (label < 0 || label >= q_ || inverse_[static_cast<size_t>(label)] != -1)
      throw std::invalid_argument("structure permutation is not a bijection");
    inverse_[static_cast<size_t>(label)] = k;
  }
  // Cheap exhaustive sanity check of the induced group law at small q.
  if (q_ <= 8) {
    for (int x = 0; x < q_; ++x) {
      if (add(x, identity_label()) != x || add(x, negate(x)) != identity_label())
        throw std::logic_error("alphabet structure is not a group");
      for (int y = 0; y < q_; ++y)
        for (int z = 0; z < q_; ++z)
          if (add(add(x, y), z) != add(x, add(y, z)))
            throw std::logic_error("alphabet structure is not associative");
    }
  }
}

int OutputAlphabet::add(int x, int y) const {
  return structure_[static_cast<size_t>(
      (residue_of_label(x) + residue_of_label(y)) % q_)];
}

int OutputAlphabet::negate(int x) const {
  return structure_[static_cast<size_t>((q_ - residue_of_label(x)) % q_)];
}

std::complex<double> OutputAlphabet::character_value(int m, int label) const {
  const long long num =
      (static_cast<long long>(((m % q_) + q_) % q_) * residue_of_label(label)) % q_;
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(num) /
                             static_cast<double>(q_));
}

bool OutputAlphabet::character_is_trivial(int m) const {
  return ((m % q_) + q_) % q_ == 0;
}

bool OutputAlphabet::character_is_faithful(int m) const {
  const int residue = ((m % q_) + q_) % q_;
  return std::gcd(residue, q_) == 1;
}

Eigen::VectorXcd OutputAlphabet::delta_state(int m) const {
  const double scale = 1.0 / std::sqrt(static_cast<double>(q_));
  Eigen::VectorXcd out(q_);
  for (int x = 0; x < q_; ++x)
    out[x] = scale * std::conj(character_value(m, x));
  return out;
}

namespace {

// Canonical coset index of every element. For a cyclic quotient the index of
// the coset k*u + H is k, where u is the least representative of maximal
// coset order, making the index map a homomorphism onto Z_q. Otherwise
// cosets are indexed by least representative.
std::vector<int> canonical_coset_index(const Group& group, const Subgroup& sub) {
  const auto blocks = cosets(group, sub);
  const int q = static_cast<int>(blocks.size());
  std::vector<long long> order_of_block(blocks.size());
  long long generator_index = -1;
  for (size_t b = 0; b < blocks.size(); ++b) {
    const GroupElement& rep = blocks[b].front();
    long long t = 1;
    GroupElement acc = rep;
    while (!sub.contains(acc)) {
      acc = group.add(acc, rep);
      ++t;
    }
    order_of_block[b] = t;
    if (t == q && generator_index < 0) generator_index = group.index_of(rep);
  }
  std::vector<int> index_of_element(static_cast<size_t>(group.size()), -1);
  if (generator_index >= 0) {
    long long shift = 0;  // k * u
    for (int k = 0; k < q; ++k) {
      for (long long h : sub.element_indices())
        index_of_element[static_cast<size_t>(group.add_indices(shift, h))] = k;
      shift = group.add_indices(shift, generator_index);
    }
  } else {
    for (size_t b = 0; b < blocks.size(); ++b)
      for (const auto& g : blocks[b])
        index_of_element[static_cast<size_t>(group.index_of(g))] =
            static_cast<int>(b);
  }
  return index_of_element;
}

}  // namespace

HidingFunction::HidingFunction(Group group, Subgroup subgroup,
                               std::vector<int> labeling, int alphabet_size)
    : group_(std::move(group)),
      subgroup_(std::move(subgroup)),
      labeling_(std::move(labeling)) {
  if (!(subgroup_.parent() == group_))
    throw std::invalid_argument("subgroup belongs to a different group");
  const long long coset_count = group_.size() / subgroup_.order();
  if (static_cast<long long>(labeling_.size()) != coset_count)
    throw std::invalid_argument("labeling must assign one label per coset");
  alphabet_size_ = alphabet_size > 0 ? alphabet_size
                                     : static_cast<int>(coset_count);
  std::vector<char> used(static_cast<size_t>(alphabet_size_), 0);
  for (int label : labeling_) {
    if (label < 0 || label >= alphabet_size_)
      throw std::invalid_argument("labeling value outside the alphabet");
    if (used[static_cast<size_t>(label)])
      throw std::invalid_argument("labeling is not injective on cosets");
    used[static_cast<size_t>(label)] = 1;
  }
  const auto coset_index = canonical_coset_index(group_, subgroup_);
  table_.resize(static_cast<size_t>(group_.size()));
  for (long long g = 0; g < group_.size(); ++g)
    table_[static_cast<size_t>(g)] =
        labeling_[static_cast<size_t>(coset_index[static_cast<size_t>(g)])];
}

OracleHandle::OracleHandle(Kind kind, Group domain, std::vector<int> table,
                           OutputAlphabet alphabet, int chi_m)
    : kind_(kind),
      domain_(std::move(domain)),
      table_(std::move(table)),
      alphabet_(std::move(alphabet)),
      chi_m_(chi_m) {
  if (static_cast<long long>(table_.size()) != domain_.size())
    throw std::invalid_argument("function table does not cover the domain");
  for (int v : table_)
    if (v < 0 || v >= alphabet_.size())
      throw std::invalid_argument("function value outside the alphabet");
}

OracleHandle OracleHandle::shift_oracle(const HidingFunction& f,
                                        OutputAlphabet alphabet) {
  return shift_oracle(f.domain(), f.table(), std::move(alphabet));
}

OracleHandle OracleHandle::shift_oracle(const Group& domain, std::vector<int> table,
                                        OutputAlphabet alphabet) {
  return OracleHandle(Kind::Shift, domain, std::move(table), std::move(alphabet), 0);
}

OracleHandle OracleHandle::phase_oracle(const HidingFunction& f,
                                        OutputAlphabet alphabet, int chi_m) {
  return phase_oracle(f.domain(), f.table(), std::move(alphabet), chi_m);
}

OracleHandle OracleHandle::phase_oracle(const Group& domain, std::vector<int> table,
                                        OutputAlphabet alphabet, int chi_m) {
  return OracleHandle(Kind::Phase, domain, std::move(table), std::move(alphabet),
                      chi_m);
}

namespace {

// The shift permutation on a joint element-basis state; shared by the shift
// oracle and the compiled phase oracle so the query accounting stays in one
// place.
StateVector shifted_joint_state(const Group& domain, const std::vector<int>& table,
                                const OutputAlphabet& alphabet,
                                const StateVector& psi) {
  if (psi.mode() != BasisMode::Element)
    throw invalid_state("shift oracle expects element-basis registers");
  if (!psi.has_alphabet() || psi.alphabet_size() != alphabet.size())
    throw invalid_state("shift oracle expects a matching alphabet register");
  if (!(psi.group() == domain))
    throw invalid_state("state register does not match the oracle domain");
  const long long n = domain.size();
  const int q = alphabet.size();
  Eigen::VectorXcd amps(n * q);
  for (long long g = 0; g < n; ++g) {
    const int f = table[static_cast<size_t>(g)];
    for (int x = 0; x < q; ++x)
      amps[g * q + alphabet.add(f, x)] = psi.amplitudes()[g * q + x];
  }
  return StateVector::joint_from_amplitudes(domain, q, BasisMode::Element,
                                            std::move(amps));
}

}  // namespace

StateVector apply_shift_oracle(OracleHandle& oracle, const StateVector& psi) {
  if (oracle.kind_ != OracleHandle::Kind::Shift)
    throw std::invalid_argument("handle does not expose the shift oracle");
  auto out = shifted_joint_state(oracle.domain_, oracle.table_, oracle.alphabet_, psi);
  ++oracle.queries_;
  return out;
}

StateVector apply_phase_oracle_direct(OracleHandle& oracle, const StateVector& psi) {
  if (oracle.kind_ != OracleHandle::Kind::Phase)
    throw std::invalid_argument("handle does not expose the phase oracle");
  if (psi.mode() != BasisMode::Element)
    throw invalid_state("phase oracle expects an element-basis state");
  if (psi.has_alphabet())
    throw invalid_state("phase oracle acts on the domain register alone");
  if (!(psi.group() == oracle.domain_))
    throw invalid_state("state register does not match the oracle domain");
  Eigen::VectorXcd amps(psi.dim());
  for (long long g = 0; g < oracle.domain_.size(); ++g)
    amps[g] = oracle.alphabet_.character_value(
                  oracle.chi_m_, oracle.table_[static_cast<size_t>(g)]) *
              psi.amplitudes()[g];
  ++oracle.queries_;
  return StateVector::from_amplitudes(oracle.domain_, BasisMode::Element,
                                      std::move(amps));
}

StateVector compile_phase_from_shift(OracleHandle& oracle, int chi_m,
                                     const StateVector& psi) {
  if (oracle.kind_ == OracleHandle::Kind::Phase && chi_m != oracle.chi_m_)
    throw std::invalid_argument("phase handle is fixed to a different character");
  if (psi.mode() != BasisMode::Element)
    throw invalid_state("phase oracle expects an element-basis state");
  if (psi.has_alphabet())
    throw invalid_state("phase oracle acts on the domain register alone");
  const Eigen::VectorXcd ancilla = oracle.alphabet_.delta_state(chi_m);
  const StateVector joint = tensor_with_ancilla(psi, ancilla);
  auto shifted = shifted_joint_state(oracle.domain_, oracle.table_,
                                     oracle.alphabet_, joint);
  ++oracle.queries_;
  return discard_ancilla(shifted, ancilla);
}

}  // namespace hspsim
