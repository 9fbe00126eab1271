#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "hspsim/groups.hpp"

namespace hspsim {

/// Character of a finite abelian group, stored by its exponent tuple:
/// chi(g) = exp(2*pi*i * sum_j a_j g_j / n_j). Equality is exponent-tuple
/// equality. The all-zero tuple is the trivial character.
struct Character {
  Group group;
  std::vector<int> exponents;

  friend bool operator==(const Character& a, const Character& b) {
    return a.group == b.group && a.exponents == b.exponents;
  }
};

Character make_character(const Group& group, std::vector<int> exponents);
Character trivial_character(const Group& group);

/// chi(g) as a complex unit. The phase is reduced modulo 1 in exact integer
/// arithmetic before the single transcendental call.
std::complex<double> eval_character(const Character& chi, const GroupElement& g);

/// Common denominator for the exact phase arithmetic: lcm of the orders.
long long phase_denominator(const Group& group);

/// Exact phase of chi(g) as a numerator over phase_denominator(group),
/// reduced into [0, L). chi(g) == 1 exactly when this is zero.
long long character_phase_numerator(const Character& chi, const GroupElement& g);

bool is_trivial(const Character& chi);
/// Exact test (no floats) that chi is 1 on every element of the subgroup;
/// it suffices to check the generators.
bool is_trivial_on(const Character& chi, const Subgroup& subgroup);

/// Pointwise product and inverse of characters, realized on exponent tuples.
Character dual_product(const Character& a, const Character& b);
Character dual_inverse(const Character& a);

/// Characters enumerate lexicographically by exponent tuple, sharing the
/// element index bijection of the underlying group.
long long character_index(const Character& chi);
Character character_at(const Group& group, long long index);

struct DualGroup {
  Group group;
  std::vector<Character> characters;
};

DualGroup dual_group(const Group& group);

/// ker chi = { g : chi(g) = 1 }, decided in exact arithmetic.
Subgroup kernel(const Character& chi);

/// All characters trivial on H, in enumeration order. The result has exactly
/// [G:H] entries (the annihilator is the dual of G/H).
std::vector<Character> h_perp(const Group& group, const Subgroup& subgroup);

/// True iff chi, already trivial on H, has kernel exactly H (so it descends
/// to a faithful character of G/H). Throws if chi is not trivial on H.
bool is_faithful_on_quotient(const Character& chi, const Subgroup& subgroup);

std::string format_character(const Character& chi);  // "(1,1)"
std::vector<int> parse_exponent_tuple(std::string_view text);

}  // namespace hspsim
