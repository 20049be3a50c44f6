#ifndef PZETA_LATTICE_HPP
#define PZETA_LATTICE_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pzeta/arith.hpp"
#include "pzeta/permgroup.hpp"

namespace pzeta
{

// Fixed-size bit set over the element ids of one group.
class ElementSet
{
public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : words_((universe + 63) / 64, 0) {}

  bool test(ElementId i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(ElementId i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

  std::size_t count() const;
  std::size_t intersection_count(ElementSet const &other) const;
  std::uint64_t hash() const;

  friend bool operator==(ElementSet const &, ElementSet const &) = default;

private:
  std::vector<std::uint64_t> words_;
};

struct Subgroup
{
  std::vector<ElementId> elements; // sorted ascending
  ElementSet members;
  std::vector<ElementId> generators;

  std::size_t order() const { return elements.size(); }
  bool contains(ElementId e) const { return members.test(e); }
};

struct LatticeBudget
{
  std::size_t max_order = 10'000;
  std::size_t max_subgroups = 200'000;
  // Wall-clock limit in seconds; zero disables the check.
  double time_hint_seconds = 0;
};

struct LatticeStats
{
  std::size_t subgroups = 0;
  std::size_t classes = 0;
  std::size_t extensions = 0;
  double seconds = 0;
};

using NodeId = std::size_t;

// Every subgroup of a finite permutation group, with inclusion, conjugacy
// classes and the Moebius function mu(H) of the interval [H, G].
//
// Nodes are sorted by (order, element list): node 0 is the trivial subgroup,
// the last node is the whole group. The lattice owns a shared copy of its
// group and is immutable once built.
class SubgroupLattice
{
public:
  // Throws BudgetExceeded (with partial statistics) if the order, subgroup
  // count or time limit is exceeded.
  static SubgroupLattice build(PermGroup group, LatticeBudget const &budget = {});

  PermGroup const &group() const { return *group_; }
  std::shared_ptr<PermGroup const> group_ptr() const { return group_; }

  std::size_t size() const { return nodes_.size(); }
  NodeId bottom() const { return 0; }
  NodeId top() const { return nodes_.size() - 1; }

  Subgroup const &node(NodeId i) const { return nodes_[i]; }
  std::size_t order(NodeId i) const { return nodes_[i].order(); }
  std::size_t index(NodeId i) const { return group_->order() / nodes_[i].order(); }

  // H <= K
  bool leq(NodeId h, NodeId k) const;

  std::size_t class_of(NodeId i) const { return class_of_[i]; }
  std::vector<std::vector<NodeId>> const &classes() const { return classes_; }
  std::size_t class_size(NodeId i) const { return classes_[class_of_[i]].size(); }

  Integer const &moebius(NodeId i) const { return moebius_[i]; }
  std::vector<Integer> const &moebius_values() const { return moebius_; }

  bool is_normal(NodeId i) const { return class_size(i) == 1; }
  bool is_maximal(NodeId i) const { return maximal_[i]; }
  std::vector<NodeId> maximal_nodes() const;

  // Strict supergroups / subgroups.
  std::vector<NodeId> supergroups(NodeId i) const;
  std::vector<NodeId> subgroups_of(NodeId i) const;

  // Cover relation of the inclusion order, as (lower, upper) pairs.
  std::vector<std::pair<NodeId, NodeId>> hasse_edges() const;

  // Node holding exactly this element set (sorted or not).
  std::optional<NodeId> find(std::span<ElementId const> elements) const;
  std::optional<NodeId> find(ElementSet const &members) const;

  // Node of the subgroup generated by the given elements.
  NodeId generated_by(std::span<ElementId const> generators) const;

  NodeId intersection(NodeId a, NodeId b) const;

  LatticeStats const &stats() const { return stats_; }

private:
  SubgroupLattice() = default;

  std::shared_ptr<PermGroup const> group_;
  std::vector<Subgroup> nodes_;
  std::vector<std::size_t> class_of_;
  std::vector<std::vector<NodeId>> classes_;
  std::vector<Integer> moebius_;
  std::vector<bool> maximal_;
  std::unordered_multimap<std::uint64_t, NodeId> by_hash_;
  LatticeStats stats_;
};

inline SubgroupLattice subgroup_lattice(PermGroup group, LatticeBudget const &budget = {})
{
  return SubgroupLattice::build(std::move(group), budget);
}

inline std::vector<Integer> const &moebius(SubgroupLattice const &lattice)
{
  return lattice.moebius_values();
}

// Subgroup generated by a set of elements, closing by right cosets.
Subgroup generate_subgroup(PermGroup const &g, std::span<ElementId const> generators);

} // namespace pzeta

#endif // PZETA_LATTICE_HPP
