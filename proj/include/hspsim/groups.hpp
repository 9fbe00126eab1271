#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hspsim/errors.hpp"

namespace hspsim {

/// Element of a finite abelian group presented as a product of cyclic
/// factors: an integer tuple with coords[i] in [0, n_i).
struct GroupElement {
  std::vector<int> coords;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

inline constexpr long long kDefaultExhaustiveCap = 4096;

/// Finite abelian group Z_{n_1} x ... x Z_{n_k}. Elements iterate in
/// lexicographic order of their coordinate tuples; the index <-> tuple
/// bijection fixes the statevector layout for the whole library.
///
/// Immutable after construction. The exhaustive cap guards routines that
/// enumerate the whole group (or its subgroup lattice); exceeding it raises
/// refused_operation rather than running for minutes.
class Group {
 public:
  explicit Group(std::vector<int> orders,
                 long long exhaustive_cap = kDefaultExhaustiveCap);

  const std::vector<int>& orders() const { return orders_; }
  int arity() const { return static_cast<int>(orders_.size()); }
  long long size() const { return size_; }
  long long exhaustive_cap() const { return cap_; }

  GroupElement identity() const;
  GroupElement element(long long index) const;
  long long index_of(const GroupElement& g) const;
  /// True when g has the right arity and every coordinate is in range.
  bool contains(const GroupElement& g) const;

  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement neg(const GroupElement& a) const;
  GroupElement sub(const GroupElement& a, const GroupElement& b) const;
  long long add_indices(long long a, long long b) const;
  long long neg_index(long long a) const;

  /// Canonical spec string, e.g. "Z4xZ2".
  std::string spec_string() const;

  void require_desk_scale(const char* operation) const;

  friend bool operator==(const Group& a, const Group& b) {
    return a.orders_ == b.orders_;
  }

 private:
  std::vector<int> orders_;
  std::vector<long long> strides_;
  long long size_;
  long long cap_;
};

/// Subgroup stored as a fully enumerated, sorted element set together with a
/// generator certificate (closure of the generators equals the element set).
class Subgroup {
 public:
  static Subgroup closure(const Group& parent,
                          std::vector<GroupElement> generators);
  /// Builds from a verified element set; throws if the certificate does not
  /// close onto exactly these elements.
  static Subgroup from_element_indices(const Group& parent,
                                       std::vector<long long> sorted_indices,
                                       std::vector<GroupElement> generators);

  const Group& parent() const { return parent_; }
  const std::vector<GroupElement>& generators() const { return generators_; }
  const std::vector<GroupElement>& elements() const { return elements_; }
  const std::vector<long long>& element_indices() const { return indices_; }
  long long order() const { return static_cast<long long>(indices_.size()); }
  long long index_in_parent() const { return parent_.size() / order(); }
  bool contains(const GroupElement& g) const;
  bool contains_index(long long index) const;
  bool is_whole_group() const { return order() == parent_.size(); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.indices_ == b.indices_;
  }

 private:
  Subgroup(Group parent, std::vector<GroupElement> generators,
           std::vector<long long> indices);

  Group parent_;
  std::vector<GroupElement> generators_;
  std::vector<GroupElement> elements_;
  std::vector<long long> indices_;
  std::vector<char> member_;
};

Group make_group(std::vector<int> orders,
                 long long exhaustive_cap = kDefaultExhaustiveCap);

Subgroup subgroup_closure(const Group& group,
                          const std::vector<GroupElement>& generators);

/// All subgroups H with [G:H] == q, deduplicated, in a deterministic order
/// (sorted by element set). Empty when q does not divide |G|.
std::vector<Subgroup> enumerate_subgroups_of_index(const Group& group,
                                                   long long q);

/// Every subgroup of the group, in the same deterministic order.
std::vector<Subgroup> enumerate_all_subgroups(const Group& group);

using Coset = std::vector<GroupElement>;

/// Partition of the group into cosets of H. The first coset is H itself and
/// cosets are ordered by their least element; each coset is sorted.
std::vector<Coset> cosets(const Group& group, const Subgroup& subgroup);

/// Isomorphism type of G/H in invariant-factor form (each factor divides the
/// next); [1] for the trivial quotient.
struct QuotientType {
  std::vector<long long> cyclic_factors;
  bool is_cyclic = false;
};

QuotientType quotient_type(const Group& group, const Subgroup& subgroup);

Subgroup intersect(const Subgroup& a, const Subgroup& b);

/// Parses "Z4xZ2x Z3" style spec strings: case-insensitive, whitespace
/// tolerant, factors joined by 'x'.
Group parse_group_spec(std::string_view spec,
                       long long exhaustive_cap = kDefaultExhaustiveCap);

/// Parses a generator list "1,1;0,2" (semicolon-separated coordinate tuples).
std::vector<GroupElement> parse_subgroup_spec(const Group& group,
                                              std::string_view spec);

std::string format_element(const GroupElement& g);  // "(1,0)"
std::string format_subgroup_spec(const Subgroup& subgroup);

}  // namespace hspsim
