#include "hspsim/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

namespace hspsim {

Character make_character(const Group& group, std::vector<int> exponents) {
  GroupElement probe{exponents};
  if (!group.contains(probe))
    throw std::invalid_argument("character exponents out of range for " +
                                group.spec_string());
  return Character{group, std::move(exponents)};
}

Character trivial_character(const Group& group) {
  return Character{group, std::vector<int>(group.orders().size(), 0)};
}

long long phase_denominator(const Group& group) {
  long long l = 1;
  for (int n : group.orders()) l = std::lcm(l, static_cast<long long>(n));
  return l;
}

long long character_phase_numerator(const Character& chi, const GroupElement& g) {
  const Group& group = chi.group;
  if (!group.contains(g))
    throw std::invalid_argument("element does not belong to the character's group");
  const long long l = phase_denominator(group);
  long long num = 0;
  for (size_t i = 0; i < chi.exponents.size(); ++i) {
    const long long term = static_cast<long long>(chi.exponents[i]) *
                           g.coords[i] * (l / group.orders()[i]);
    num = (num + term) % l;
  }
  return num;
}

std::complex<double> eval_character(const Character& chi, const GroupElement& g) {
  const long long l = phase_denominator(chi.group);
  const long long num = character_phase_numerator(chi, g);
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(num) /
                             static_cast<double>(l));
}

bool is_trivial(const Character& chi) {
  return std::all_of(chi.exponents.begin(), chi.exponents.end(),
                     [](int e) { return e == 0; });
}

bool is_trivial_on(const Character& chi, const Subgroup& subgroup) {
  if (!(subgroup.parent() == chi.group))
    throw std::invalid_argument("subgroup belongs to a different group");
  for (const auto& gen : subgroup.generators())
    if (character_phase_numerator(chi, gen) != 0) return false;
  return true;
}

Character dual_product(const Character& a, const Character& b) {
  if (!(a.group == b.group))
    throw std::invalid_argument("characters of different groups");
  return Character{a.group,
                   a.group.add(GroupElement{a.exponents}, GroupElement{b.exponents})
                       .coords};
}

Character dual_inverse(const Character& a) {
  return Character{a.group, a.group.neg(GroupElement{a.exponents}).coords};
}

long long character_index(const Character& chi) {
  return chi.group.index_of(GroupElement{chi.exponents});
}

Character character_at(const Group& group, long long index) {
  return Character{group, group.element(index).coords};
}

DualGroup dual_group(const Group& group) {
  group.require_desk_scale("dual_group");
  DualGroup dual{group, {}};
  dual.characters.reserve(static_cast<size_t>(group.size()));
  for (long long i = 0; i < group.size(); ++i)
    dual.characters.push_back(character_at(group, i));
  return dual;
}

Subgroup kernel(const Character& chi) {
  const Group& group = chi.group;
  group.require_desk_scale("kernel");
  std::vector<long long> indices;
  for (long long i = 0; i < group.size(); ++i)
    if (character_phase_numerator(chi, group.element(i)) == 0)
      indices.push_back(i);
  // Greedy generator certificate over the sorted member list.
  std::vector<GroupElement> gens;
  Subgroup current = Subgroup::closure(group, {});
  for (long long idx : indices) {
    if (current.contains_index(idx)) continue;
    gens.push_back(group.element(idx));
    current = Subgroup::closure(group, gens);
  }
  return Subgroup::from_element_indices(group, std::move(indices), std::move(gens));
}

std::vector<Character> h_perp(const Group& group, const Subgroup& subgroup) {
  group.require_desk_scale("h_perp");
  if (!(subgroup.parent() == group))
    throw std::invalid_argument("subgroup belongs to a different group");
  std::vector<Character> out;
  for (long long i = 0; i < group.size(); ++i) {
    Character chi = character_at(group, i);
    if (is_trivial_on(chi, subgroup)) out.push_back(std::move(chi));
  }
  const long long expected = group.size() / subgroup.order();
  if (static_cast<long long>(out.size()) != expected)
    throw std::logic_error("annihilator size disagrees with [G:H]");
  return out;
}

bool is_faithful_on_quotient(const Character& chi, const Subgroup& subgroup) {
  if (!is_trivial_on(chi, subgroup))
    throw std::invalid_argument("character is not trivial on the subgroup");
  return kernel(chi) == subgroup;
}

std::string format_character(const Character& chi) {
  return format_element(GroupElement{chi.exponents});
}

std::vector<int> parse_exponent_tuple(std::string_view text) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')')
      compact.push_back(c);
  std::vector<int> out;
  if (compact.empty()) return out;
  std::stringstream stream(compact);
  std::string coord;
  while (std::getline(stream, coord, ',')) {
    if (coord.empty()) throw std::invalid_argument("empty coordinate in tuple");
    out.push_back(std::stoi(coord));
  }
  return out;
}

}  // namespace hspsim
