#include "pzeta/lattice.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>

#include "pzeta/errors.hpp"

namespace pzeta
{

std::size_t ElementSet::count() const
{
  std::size_t c = 0;
  for (auto w : words_)
    c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t ElementSet::intersection_count(ElementSet const &other) const
{
  std::size_t c = 0;
  for (std::size_t i = 0; i < words_.size(); ++i)
    c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  return c;
}

std::uint64_t ElementSet::hash() const
{
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0x100000001b3ull;
  }
  return h;
}

namespace
{

Subgroup trivial_subgroup(PermGroup const &g)
{
  Subgroup h;
  h.elements = {0};
  h.members = ElementSet(g.order());
  h.members.set(0);
  return h;
}

// <H, c> built as a union of right cosets H x. Gives up (nullopt) once the
// order would exceed cap.
std::optional<Subgroup> extend(PermGroup const &g, Subgroup const &h, ElementId c, std::size_t cap)
{
  Subgroup k;
  k.generators = h.generators;
  k.generators.push_back(c);
  k.members = h.members;
  k.elements = h.elements;

  std::vector<ElementId> reps{0};
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (ElementId s : k.generators) {
      ElementId const x = g.mul(reps[i], s);
      if (k.members.test(x))
        continue;
      if (k.elements.size() + h.order() > cap)
        return std::nullopt;
      for (ElementId e : h.elements) {
        ElementId const y = g.mul(e, x);
        k.members.set(y);
        k.elements.push_back(y);
      }
      reps.push_back(x);
    }
  }
  std::sort(k.elements.begin(), k.elements.end());
  return k;
}

Subgroup conjugate(PermGroup const &g, Subgroup const &h, ElementId x)
{
  Subgroup k;
  k.members = ElementSet(g.order());
  k.elements.reserve(h.order());
  for (ElementId e : h.elements) {
    ElementId const y = g.conj(e, x);
    k.members.set(y);
    k.elements.push_back(y);
  }
  std::sort(k.elements.begin(), k.elements.end());
  for (ElementId s : h.generators)
    k.generators.push_back(g.conj(s, x));
  return k;
}

class UnionFind
{
public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x)
  {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b)
  {
    a = find(a);
    b = find(b);
    if (a != b)
      parent_[std::max(a, b)] = std::min(a, b);
  }

private:
  std::vector<std::size_t> parent_;
};

// Mutable state of one enumeration run.
class Enumerator
{
public:
  Enumerator(PermGroup const &g, LatticeBudget const &budget)
  : g_(g), budget_(budget), start_(std::chrono::steady_clock::now())
  {}

  void run();

  std::vector<Subgroup> nodes;
  std::vector<std::size_t> class_of;
  std::vector<NodeId> reps;
  std::size_t extensions = 0;

private:
  std::optional<NodeId> lookup(Subgroup const &h) const
  {
    auto [lo, hi] = index_.equal_range(h.members.hash());
    for (auto it = lo; it != hi; ++it)
      if (nodes[it->second].members == h.members)
        return it->second;
    return std::nullopt;
  }

  NodeId insert(Subgroup h, std::size_t cls)
  {
    NodeId const id = nodes.size();
    index_.emplace(h.members.hash(), id);
    nodes.push_back(std::move(h));
    class_of.push_back(cls);
    if (nodes.size() > budget_.max_subgroups)
      throw BudgetExceeded("subgroup count exceeds bound " + std::to_string(budget_.max_subgroups),
                           g_.order(), nodes.size());
    return id;
  }

  // Adds the full conjugacy class of a subgroup not yet present.
  void add_class(Subgroup h)
  {
    std::size_t const cls = reps.size();
    NodeId const first = insert(std::move(h), cls);
    reps.push_back(first);
    std::vector<NodeId> orbit{first};
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (ElementId x : g_.generator_ids()) {
        Subgroup k = conjugate(g_, nodes[orbit[i]], x);
        if (!lookup(k))
          orbit.push_back(insert(std::move(k), cls));
      }
    }
  }

  void check_time() const
  {
    if (budget_.time_hint_seconds <= 0)
      return;
    std::chrono::duration<double> const elapsed = std::chrono::steady_clock::now() - start_;
    if (elapsed.count() > budget_.time_hint_seconds)
      throw BudgetExceeded("lattice construction exceeded time hint", g_.order(), nodes.size());
  }

  PermGroup const &g_;
  LatticeBudget const &budget_;
  std::chrono::steady_clock::time_point start_;
  std::unordered_multimap<std::uint64_t, NodeId> index_;
};

void Enumerator::run()
{
  std::size_t const n = g_.order();

  // Cyclic subgroups, one generator each.
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> cyc_of(n, none);
  std::vector<ElementId> cyc_gen;
  for (ElementId e = 0; e < n; ++e) {
    if (cyc_of[e] != none)
      continue;
    std::size_t const id = cyc_gen.size();
    cyc_gen.push_back(e);
    std::uint32_t const ord = g_.element_order(e);
    ElementId x = e;
    for (std::uint32_t k = 1; k <= ord; ++k, x = g_.mul(x, e))
      if (std::gcd(k, ord) == 1)
        cyc_of[x] = id;
  }

  add_class(trivial_subgroup(g_));
  Subgroup whole = generate_subgroup(g_, g_.generator_ids());
  if (whole.order() > 1)
    add_class(std::move(whole));

  for (std::size_t ci = 0; ci < reps.size(); ++ci) {
    Subgroup const h = nodes[reps[ci]];
    if (h.order() == n)
      continue;
    check_time();

    std::vector<ElementId> norm_gens;
    Subgroup normalizer = trivial_subgroup(g_);
    for (ElementId x = 0; x < n; ++x) {
      if (normalizer.contains(x))
        continue;
      bool const normalizes = std::all_of(h.generators.begin(), h.generators.end(),
                                          [&](ElementId s) { return h.contains(g_.conj(s, x)); });
      if (normalizes) {
        normalizer = *extend(g_, normalizer, x, n);
        norm_gens.push_back(x);
      }
    }

    // <H, c^x> = <H, c>^x for x in N(H): one extension per N(H)-orbit.
    UnionFind orbits(cyc_gen.size());
    for (ElementId x : norm_gens)
      for (std::size_t c = 0; c < cyc_gen.size(); ++c)
        orbits.unite(c, cyc_of[g_.conj(cyc_gen[c], x)]);

    for (std::size_t c = 0; c < cyc_gen.size(); ++c) {
      if (orbits.find(c) != c || h.contains(cyc_gen[c]))
        continue;
      ++extensions;
      // A subgroup of more than half the group is the group.
      auto k = extend(g_, h, cyc_gen[c], n / 2);
      if (!k || lookup(*k))
        continue;
      add_class(std::move(*k));
    }
  }
}

} // namespace

Subgroup generate_subgroup(PermGroup const &g, std::span<ElementId const> generators)
{
  Subgroup h = trivial_subgroup(g);
  for (ElementId s : generators) {
    if (s >= g.order())
      throw InvalidParameter("element id out of range");
    if (!h.contains(s))
      h = *extend(g, h, s, g.order());
  }
  return h;
}

SubgroupLattice SubgroupLattice::build(PermGroup group, LatticeBudget const &budget)
{
  if (group.order() > budget.max_order)
    throw BudgetExceeded("group order " + std::to_string(group.order()) + " exceeds lattice bound " +
                             std::to_string(budget.max_order),
                         group.order(), 0);

  auto const start = std::chrono::steady_clock::now();
  SubgroupLattice lat;
  lat.group_ = std::make_shared<PermGroup const>(std::move(group));
  PermGroup const &g = *lat.group_;

  Enumerator en(g, budget);
  en.run();

  // Canonical node order.
  std::vector<NodeId> perm(en.nodes.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](NodeId a, NodeId b) {
    auto const &x = en.nodes[a].elements;
    auto const &y = en.nodes[b].elements;
    if (x.size() != y.size())
      return x.size() < y.size();
    return x < y;
  });

  std::size_t const count = perm.size();
  std::vector<std::size_t> old_class(count);
  lat.nodes_.reserve(count);
  for (NodeId i = 0; i < count; ++i) {
    old_class[i] = en.class_of[perm[i]];
    lat.nodes_.push_back(std::move(en.nodes[perm[i]]));
  }

  // Classes numbered by their first node.
  std::vector<std::size_t> remap(en.reps.size(), static_cast<std::size_t>(-1));
  lat.class_of_.resize(count);
  for (NodeId i = 0; i < count; ++i) {
    auto &r = remap[old_class[i]];
    if (r == static_cast<std::size_t>(-1)) {
      r = lat.classes_.size();
      lat.classes_.emplace_back();
    }
    lat.class_of_[i] = r;
    lat.classes_[r].push_back(i);
  }

  for (NodeId i = 0; i < count; ++i)
    lat.by_hash_.emplace(lat.nodes_[i].members.hash(), i);

  // Moebius and maximality, top-down over one representative per class.
  lat.moebius_.assign(count, Integer(0));
  lat.maximal_.assign(count, false);
  for (auto cls = lat.classes_.rbegin(); cls != lat.classes_.rend(); ++cls) {
    NodeId const h = cls->front();
    Integer mu = 0;
    bool maximal = h != lat.top();
    if (h == lat.top()) {
      mu = 1;
    } else {
      for (NodeId k = h + 1; k < count; ++k) {
        if (lat.order(k) == lat.order(h) || !lat.leq(h, k))
          continue;
        mu -= lat.moebius_[k];
        if (k != lat.top())
          maximal = false;
      }
    }
    for (NodeId member : *cls) {
      lat.moebius_[member] = mu;
      lat.maximal_[member] = maximal;
    }
  }

  lat.stats_.subgroups = count;
  lat.stats_.classes = lat.classes_.size();
  lat.stats_.extensions = en.extensions;
  lat.stats_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return lat;
}

bool SubgroupLattice::leq(NodeId h, NodeId k) const
{
  Subgroup const &a = nodes_[h];
  Subgroup const &b = nodes_[k];
  if (b.order() % a.order() != 0)
    return false;
  return std::all_of(a.generators.begin(), a.generators.end(), [&](ElementId s) { return b.contains(s); });
}

std::vector<NodeId> SubgroupLattice::maximal_nodes() const
{
  std::vector<NodeId> out;
  for (NodeId i = 0; i < size(); ++i)
    if (maximal_[i])
      out.push_back(i);
  return out;
}

std::vector<NodeId> SubgroupLattice::supergroups(NodeId i) const
{
  std::vector<NodeId> out;
  for (NodeId k = i + 1; k < size(); ++k)
    if (order(k) > order(i) && leq(i, k))
      out.push_back(k);
  return out;
}

std::vector<NodeId> SubgroupLattice::subgroups_of(NodeId i) const
{
  std::vector<NodeId> out;
  for (NodeId k = 0; k < i; ++k)
    if (order(k) < order(i) && leq(k, i))
      out.push_back(k);
  return out;
}

std::vector<std::pair<NodeId, NodeId>> SubgroupLattice::hasse_edges() const
{
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId k = 0; k < size(); ++k) {
    auto subs = subgroups_of(k);
    std::vector<NodeId> covers;
    // Descending order: a subgroup is covered by k unless it lies in a larger
    // cover already found.
    for (auto it = subs.rbegin(); it != subs.rend(); ++it) {
      bool const below_cover = std::any_of(covers.begin(), covers.end(), [&](NodeId c) { return leq(*it, c); });
      if (!below_cover)
        covers.push_back(*it);
    }
    std::sort(covers.begin(), covers.end());
    for (NodeId c : covers)
      edges.emplace_back(c, k);
  }
  return edges;
}

std::optional<NodeId> SubgroupLattice::find(ElementSet const &members) const
{
  auto [lo, hi] = by_hash_.equal_range(members.hash());
  for (auto it = lo; it != hi; ++it)
    if (nodes_[it->second].members == members)
      return it->second;
  return std::nullopt;
}

std::optional<NodeId> SubgroupLattice::find(std::span<ElementId const> elements) const
{
  ElementSet members(group_->order());
  for (ElementId e : elements) {
    if (e >= group_->order())
      return std::nullopt;
    members.set(e);
  }
  return find(members);
}

NodeId SubgroupLattice::generated_by(std::span<ElementId const> generators) const
{
  Subgroup h = generate_subgroup(*group_, generators);
  return *find(h.members);
}

NodeId SubgroupLattice::intersection(NodeId a, NodeId b) const
{
  std::vector<ElementId> common;
  std::set_intersection(nodes_[a].elements.begin(), nodes_[a].elements.end(), nodes_[b].elements.begin(),
                        nodes_[b].elements.end(), std::back_inserter(common));
  return *find(common);
}

} // namespace pzeta
