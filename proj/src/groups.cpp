#include "hspsim/groups.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

namespace hspsim {

namespace {

long long checked_product(const std::vector<int>& orders) {
  long long size = 1;
  for (int n : orders) {
    if (n < 1) throw std::invalid_argument("group factor orders must be >= 1");
    if (size > (1LL << 50) / n)
      throw std::invalid_argument("group size overflows the element index");
    size *= n;
  }
  return size;
}

}  // namespace

Group::Group(std::vector<int> orders, long long exhaustive_cap)
    : orders_(std::move(orders)), cap_(exhaustive_cap) {
  if (orders_.empty())
    throw std::invalid_argument("a group needs at least one cyclic factor");
  size_ = checked_product(orders_);
  strides_.assign(orders_.size(), 1);
  for (int i = static_cast<int>(orders_.size()) - 2; i >= 0; --i)
    strides_[i] = strides_[i + 1] * orders_[i + 1];
}

GroupElement Group::identity() const {
  return GroupElement{std::vector<int>(orders_.size(), 0)};
}

GroupElement Group::element(long long index) const {
  if (index < 0 || index >= size_)
    throw std::invalid_argument("element index out of range");
  GroupElement g;
  g.coords.resize(orders_.size());
  for (size_t i = 0; i < orders_.size(); ++i)
    g.coords[i] = static_cast<int>((index / strides_[i]) % orders_[i]);
  return g;
}

long long Group::index_of(const GroupElement& g) const {
  if (!contains(g))
    throw std::invalid_argument("element does not belong to this group");
  long long index = 0;
  for (size_t i = 0; i < orders_.size(); ++i) index += g.coords[i] * strides_[i];
  return index;
}

bool Group::contains(const GroupElement& g) const {
  if (g.coords.size() != orders_.size()) return false;
  for (size_t i = 0; i < orders_.size(); ++i)
    if (g.coords[i] < 0 || g.coords[i] >= orders_[i]) return false;
  return true;
}

GroupElement Group::add(const GroupElement& a, const GroupElement& b) const {
  if (!contains(a) || !contains(b))
    throw std::invalid_argument("operands do not belong to this group");
  GroupElement out;
  out.coords.resize(orders_.size());
  for (size_t i = 0; i < orders_.size(); ++i)
    out.coords[i] = (a.coords[i] + b.coords[i]) % orders_[i];
  return out;
}

GroupElement Group::neg(const GroupElement& a) const {
  if (!contains(a))
    throw std::invalid_argument("operand does not belong to this group");
  GroupElement out;
  out.coords.resize(orders_.size());
  for (size_t i = 0; i < orders_.size(); ++i)
    out.coords[i] = (orders_[i] - a.coords[i]) % orders_[i];
  return out;
}

GroupElement Group::sub(const GroupElement& a, const GroupElement& b) const {
  return add(a, neg(b));
}

long long Group::add_indices(long long a, long long b) const {
  long long out = 0;
  for (size_t i = 0; i < orders_.size(); ++i) {
    const int ai = static_cast<int>((a / strides_[i]) % orders_[i]);
    const int bi = static_cast<int>((b / strides_[i]) % orders_[i]);
    out += ((ai + bi) % orders_[i]) * strides_[i];
  }
  return out;
}

long long Group::neg_index(long long a) const {
  long long out = 0;
  for (size_t i = 0; i < orders_.size(); ++i) {
    const int ai = static_cast<int>((a / strides_[i]) % orders_[i]);
    out += ((orders_[i] - ai) % orders_[i]) * strides_[i];
  }
  return out;
}

std::string Group::spec_string() const {
  std::ostringstream out;
  for (size_t i = 0; i < orders_.size(); ++i) {
    if (i) out << 'x';
    out << 'Z' << orders_[i];
  }
  return out.str();
}

void Group::require_desk_scale(const char* operation) const {
  if (size_ > cap_) {
    std::ostringstream msg;
    msg << operation << " refused: |G| = " << size_
        << " exceeds the exhaustive cap " << cap_;
    throw refused_operation(msg.str());
  }
}

Group make_group(std::vector<int> orders, long long exhaustive_cap) {
  return Group(std::move(orders), exhaustive_cap);
}

namespace {

// Closure of the generators under repeated addition, as sorted indices.
// Finite order makes the result closed under negation as well.
std::vector<long long> closure_indices(const Group& group,
                                       const std::vector<long long>& gen_indices) {
  std::vector<char> in(static_cast<size_t>(group.size()), 0);
  in[0] = 1;
  std::vector<long long> members{0};
  std::deque<long long> frontier{0};
  while (!frontier.empty()) {
    const long long x = frontier.front();
    frontier.pop_front();
    for (long long e : gen_indices) {
      const long long y = group.add_indices(x, e);
      if (!in[static_cast<size_t>(y)]) {
        in[static_cast<size_t>(y)] = 1;
        members.push_back(y);
        frontier.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<long long> to_indices(const Group& group,
                                  const std::vector<GroupElement>& elements) {
  std::vector<long long> out;
  out.reserve(elements.size());
  for (const auto& g : elements) out.push_back(group.index_of(g));
  return out;
}

}  // namespace

Subgroup::Subgroup(Group parent, std::vector<GroupElement> generators,
                   std::vector<long long> indices)
    : parent_(std::move(parent)),
      generators_(std::move(generators)),
      indices_(std::move(indices)) {
  member_.assign(static_cast<size_t>(parent_.size()), 0);
  elements_.reserve(indices_.size());
  for (long long i : indices_) {
    member_[static_cast<size_t>(i)] = 1;
    elements_.push_back(parent_.element(i));
  }
}

Subgroup Subgroup::closure(const Group& parent,
                           std::vector<GroupElement> generators) {
  parent.require_desk_scale("subgroup_closure");
  const auto gen_indices = to_indices(parent, generators);
  auto indices = closure_indices(parent, gen_indices);
  return Subgroup(parent, std::move(generators), std::move(indices));
}

Subgroup Subgroup::from_element_indices(const Group& parent,
                                        std::vector<long long> sorted_indices,
                                        std::vector<GroupElement> generators) {
  const auto gen_indices = to_indices(parent, generators);
  if (closure_indices(parent, gen_indices) != sorted_indices)
    throw std::invalid_argument(
        "generator certificate does not close onto the element set");
  return Subgroup(parent, std::move(generators), std::move(sorted_indices));
}

bool Subgroup::contains(const GroupElement& g) const {
  if (!parent_.contains(g)) return false;
  return member_[static_cast<size_t>(parent_.index_of(g))] != 0;
}

bool Subgroup::contains_index(long long index) const {
  return index >= 0 && index < parent_.size() &&
         member_[static_cast<size_t>(index)] != 0;
}

Subgroup subgroup_closure(const Group& group,
                          const std::vector<GroupElement>& generators) {
  for (const auto& g : generators)
    if (!group.contains(g))
      throw std::invalid_argument("generator does not belong to the group");
  return Subgroup::closure(group, generators);
}

namespace {

// Extends a subgroup (sorted indices) by one element: the union of the
// cosets S, S+e, S+2e, ... until the shift lands back inside.
std::vector<long long> extend_subgroup(const Group& group,
                                       const std::vector<long long>& sub,
                                       long long e) {
  std::vector<char> in(static_cast<size_t>(group.size()), 0);
  for (long long x : sub) in[static_cast<size_t>(x)] = 1;
  std::vector<long long> out = sub;
  long long shift = e;
  while (!in[static_cast<size_t>(shift)]) {
    for (long long x : sub) {
      const long long y = group.add_indices(x, shift);
      if (!in[static_cast<size_t>(y)]) {
        in[static_cast<size_t>(y)] = 1;
        out.push_back(y);
      }
    }
    shift = group.add_indices(shift, e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subgroup> enumerate_subgroups(const Group& group,
                                          long long target_order,
                                          bool only_target) {
  // Breadth-first growth over the subgroup lattice. Intermediate subgroups
  // of a subgroup of order m have order dividing m, so pruning on
  // divisibility never loses a result.
  std::map<std::vector<long long>, std::vector<GroupElement>> discovered;
  std::deque<std::vector<long long>> queue;
  discovered[{0}] = {};
  queue.push_back({0});
  while (!queue.empty()) {
    auto sub = queue.front();
    queue.pop_front();
    const long long order = static_cast<long long>(sub.size());
    if (order == target_order) continue;
    const auto gens = discovered[sub];
    std::vector<char> in(static_cast<size_t>(group.size()), 0);
    for (long long x : sub) in[static_cast<size_t>(x)] = 1;
    for (long long e = 1; e < group.size(); ++e) {
      if (in[static_cast<size_t>(e)]) continue;
      auto grown = extend_subgroup(group, sub, e);
      const long long n = static_cast<long long>(grown.size());
      if (n > target_order || target_order % n != 0) continue;
      if (discovered.find(grown) == discovered.end()) {
        auto cert = gens;
        cert.push_back(group.element(e));
        discovered.emplace(grown, std::move(cert));
        queue.push_back(std::move(grown));
      }
    }
  }
  std::vector<Subgroup> out;
  for (const auto& [indices, gens] : discovered) {
    if (only_target && static_cast<long long>(indices.size()) != target_order)
      continue;
    out.push_back(Subgroup::from_element_indices(group, indices, gens));
  }
  return out;
}

}  // namespace

std::vector<Subgroup> enumerate_subgroups_of_index(const Group& group,
                                                   long long q) {
  group.require_desk_scale("enumerate_subgroups_of_index");
  if (q < 1) throw std::invalid_argument("subgroup index must be positive");
  if (group.size() % q != 0) return {};
  return enumerate_subgroups(group, group.size() / q, true);
}

std::vector<Subgroup> enumerate_all_subgroups(const Group& group) {
  group.require_desk_scale("enumerate_all_subgroups");
  return enumerate_subgroups(group, group.size(), false);
}

std::vector<Coset> cosets(const Group& group, const Subgroup& subgroup) {
  group.require_desk_scale("cosets");
  if (!(subgroup.parent() == group))
    throw std::invalid_argument("subgroup belongs to a different group");
  std::vector<char> assigned(static_cast<size_t>(group.size()), 0);
  std::vector<Coset> out;
  for (long long g = 0; g < group.size(); ++g) {
    if (assigned[static_cast<size_t>(g)]) continue;
    std::vector<long long> block;
    block.reserve(subgroup.element_indices().size());
    for (long long h : subgroup.element_indices()) {
      const long long y = group.add_indices(g, h);
      assigned[static_cast<size_t>(y)] = 1;
      block.push_back(y);
    }
    std::sort(block.begin(), block.end());
    Coset coset;
    coset.reserve(block.size());
    for (long long y : block) coset.push_back(group.element(y));
    out.push_back(std::move(coset));
  }
  return out;
}

QuotientType quotient_type(const Group& group, const Subgroup& subgroup) {
  group.require_desk_scale("quotient_type");
  if (!(subgroup.parent() == group))
    throw std::invalid_argument("subgroup belongs to a different group");
  const long long q = group.size() / subgroup.order();
  if (q == 1) return QuotientType{{1}, true};

  // Order of each coset in G/H, by repeated addition of its representative.
  const auto blocks = cosets(group, subgroup);
  std::vector<long long> orders;
  orders.reserve(blocks.size());
  for (const auto& block : blocks) {
    const GroupElement& rep = block.front();
    long long t = 1;
    GroupElement acc = rep;
    while (!subgroup.contains(acc)) {
      acc = group.add(acc, rep);
      ++t;
    }
    orders.push_back(t);
  }
  bool cyclic = false;
  for (long long o : orders) cyclic = cyclic || (o == q);

  // Invariant factors from order statistics: for each prime p | q, the
  // number of cosets of order dividing p^j determines the conjugate of the
  // p-part partition.
  std::map<long long, std::vector<int>> partitions;
  long long rest = q;
  for (long long p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    partitions[p] = {};
    std::vector<int> conj;
    long long pj = 1;
    long long prev = 1;
    for (int j = 1; j <= e; ++j) {
      pj *= p;
      long long cnt = 0;
      for (long long o : orders)
        if (pj % o == 0) ++cnt;
      long long ratio = cnt / prev;
      int m = 0;
      while (ratio > 1) {
        ratio /= p;
        ++m;
      }
      conj.push_back(m);
      prev = cnt;
    }
    auto& lambda = partitions[p];
    for (int i = 1;; ++i) {
      int parts = 0;
      for (int m : conj)
        if (m >= i) ++parts;
      if (parts == 0) break;
      lambda.push_back(parts);
    }
  }
  if (rest > 1) {
    // Leftover prime appears to the first power: a single cyclic factor.
    const long long p = rest;
    long long cnt = 0;
    for (long long o : orders)
      if (p % o == 0) ++cnt;
    long long ratio = cnt;  // prev = 1
    std::vector<int> lambda;
    while (ratio > 1) {
      ratio /= p;
      lambda.push_back(1);
    }
    // cnt = p^(number of parts); each part has height exactly 1.
    partitions[p] = std::vector<int>(lambda.size(), 1);
  }

  size_t rank = 0;
  for (const auto& [p, lambda] : partitions) rank = std::max(rank, lambda.size());
  std::vector<long long> factors(rank, 1);
  for (const auto& [p, lambda] : partitions) {
    for (size_t i = 0; i < lambda.size(); ++i) {
      long long power = 1;
      for (int j = 0; j < lambda[i]; ++j) power *= p;
      factors[i] *= power;  // factors[0] is the largest invariant factor
    }
  }
  std::reverse(factors.begin(), factors.end());
  return QuotientType{std::move(factors), cyclic};
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  if (!(a.parent() == b.parent()))
    throw std::invalid_argument("subgroups of different groups");
  const Group& group = a.parent();
  std::vector<long long> indices;
  std::set_intersection(a.element_indices().begin(), a.element_indices().end(),
                        b.element_indices().begin(), b.element_indices().end(),
                        std::back_inserter(indices));
  // Greedy generator certificate over the sorted member list.
  std::vector<GroupElement> gens;
  std::vector<long long> current{0};
  for (long long idx : indices) {
    if (std::binary_search(current.begin(), current.end(), idx)) continue;
    gens.push_back(group.element(idx));
    current = closure_indices(group, to_indices(group, gens));
  }
  return Subgroup::from_element_indices(group, std::move(indices), std::move(gens));
}

namespace {

std::string strip_whitespace(std::string_view text) {
  std::string out;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

}  // namespace

Group parse_group_spec(std::string_view spec, long long exhaustive_cap) {
  const std::string compact = strip_whitespace(spec);
  if (compact.empty()) throw std::invalid_argument("empty group spec");
  std::vector<int> orders;
  size_t pos = 0;
  while (pos < compact.size()) {
    if (compact[pos] != 'Z' && compact[pos] != 'z')
      throw std::invalid_argument("group spec factors must look like Z<n>");
    ++pos;
    size_t end = pos;
    while (end < compact.size() && std::isdigit(static_cast<unsigned char>(compact[end])))
      ++end;
    if (end == pos) throw std::invalid_argument("group spec factor missing order");
    orders.push_back(std::stoi(compact.substr(pos, end - pos)));
    pos = end;
    if (pos < compact.size()) {
      if (compact[pos] != 'x' && compact[pos] != 'X')
        throw std::invalid_argument("group spec factors must be joined by 'x'");
      ++pos;
      if (pos == compact.size())
        throw std::invalid_argument("trailing 'x' in group spec");
    }
  }
  return Group(std::move(orders), exhaustive_cap);
}

std::vector<GroupElement> parse_subgroup_spec(const Group& group,
                                              std::string_view spec) {
  const std::string compact = strip_whitespace(spec);
  std::vector<GroupElement> out;
  if (compact.empty()) return out;
  std::stringstream tuples(compact);
  std::string tuple;
  while (std::getline(tuples, tuple, ';')) {
    GroupElement g;
    std::stringstream coords(tuple);
    std::string coord;
    while (std::getline(coords, coord, ',')) {
      if (coord.empty()) throw std::invalid_argument("empty coordinate in subgroup spec");
      g.coords.push_back(std::stoi(coord));
    }
    if (!group.contains(g))
      throw std::invalid_argument("subgroup generator " + format_element(g) +
                                  " does not belong to " + group.spec_string());
    out.push_back(std::move(g));
  }
  return out;
}

std::string format_element(const GroupElement& g) {
  std::ostringstream out;
  out << '(';
  for (size_t i = 0; i < g.coords.size(); ++i) {
    if (i) out << ',';
    out << g.coords[i];
  }
  out << ')';
  return out.str();
}

std::string format_subgroup_spec(const Subgroup& subgroup) {
  std::ostringstream out;
  const auto& gens = subgroup.generators();
  for (size_t i = 0; i < gens.size(); ++i) {
    if (i) out << ';';
    for (size_t j = 0; j < gens[i].coords.size(); ++j) {
      if (j) out << ',';
      out << gens[i].coords[j];
    }
  }
  return out.str();
}

}  // namespace hspsim
