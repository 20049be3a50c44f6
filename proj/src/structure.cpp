#include "pzeta/structure.hpp"

#include <algorithm>

#include "pzeta/arith.hpp"
#include "pzeta/errors.hpp"
#include "pzeta/groups.hpp"

namespace pzeta
{

std::vector<NodeId> normal_subgroups(SubgroupLattice const &lattice)
{
  auto const &g = lattice.group();
  std::vector<NodeId> out;
  for (NodeId i = 0; i < lattice.size(); ++i) {
    auto const &h = lattice.node(i);
    bool const normal = std::all_of(g.generator_ids().begin(), g.generator_ids().end(), [&](ElementId x) {
      return std::all_of(h.generators.begin(), h.generators.end(),
                         [&](ElementId s) { return h.contains(g.conj(s, x)); });
    });
    if (normal)
      out.push_back(i);
  }
  return out;
}

Quotient quotient(SubgroupLattice const &lattice, NodeId normal)
{
  auto const &g = lattice.group();
  auto const &n = lattice.node(normal);
  if (!lattice.is_normal(normal))
    throw NotNormal("quotient: subgroup is not normal");

  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> coset_of(g.order(), none);
  std::vector<ElementId> reps;
  for (ElementId x = 0; x < g.order(); ++x) {
    if (coset_of[x] != none)
      continue;
    for (ElementId e : n.elements)
      coset_of[g.mul(e, x)] = reps.size();
    reps.push_back(x);
  }

  std::size_t const degree = reps.size();
  auto action = [&](ElementId x) {
    std::vector<Point> img(degree);
    for (std::size_t c = 0; c < degree; ++c)
      img[c] = static_cast<Point>(coset_of[g.mul(reps[c], x)]);
    return Permutation(std::move(img));
  };

  std::vector<Permutation> gens;
  for (ElementId s : g.generator_ids())
    gens.push_back(action(s));

  Quotient q{PermGroup::close_generators(degree, gens), std::vector<ElementId>(g.order(), 0)};

  // image(x s) = image(x) image(s), breadth first from the identity.
  std::vector<ElementId> gen_images;
  for (auto const &p : gens)
    gen_images.push_back(q.group.id_of(p));
  std::vector<bool> seen(g.order(), false);
  std::vector<ElementId> queue{0};
  seen[0] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      ElementId const y = g.mul(queue[i], g.generator_ids()[k]);
      if (seen[y])
        continue;
      seen[y] = true;
      q.image[y] = q.group.mul(q.image[queue[i]], gen_images[k]);
      queue.push_back(y);
    }
  }
  return q;
}

NodeId frattini_over(SubgroupLattice const &lattice, NodeId normal)
{
  if (normal == lattice.top())
    return normal;
  ElementSet acc(lattice.group().order());
  bool first = true;
  std::vector<ElementId> common;
  for (NodeId m : lattice.maximal_nodes()) {
    if (!lattice.leq(normal, m))
      continue;
    auto const &els = lattice.node(m).elements;
    if (first) {
      common = els;
      first = false;
    } else {
      std::vector<ElementId> next;
      std::set_intersection(common.begin(), common.end(), els.begin(), els.end(), std::back_inserter(next));
      common = std::move(next);
    }
  }
  return *lattice.find(common);
}

NodeId frattini(SubgroupLattice const &lattice) { return frattini_over(lattice, lattice.bottom()); }

namespace
{

bool is_normal_node(SubgroupLattice const &lattice, NodeId i) { return lattice.is_normal(i); }

ElementId commutator(PermGroup const &g, ElementId a, ElementId b)
{
  return g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
}

} // namespace

bool is_minimal_normal_section(SubgroupLattice const &lattice, NodeId upper, NodeId lower)
{
  for (NodeId k = 0; k < lattice.size(); ++k) {
    if (k == upper || k == lower || !is_normal_node(lattice, k))
      continue;
    if (lattice.leq(lower, k) && lattice.leq(k, upper))
      return false;
  }
  return true;
}

ChiefFactor describe_factor(SubgroupLattice const &lattice, NodeId upper, NodeId lower)
{
  if (!is_normal_node(lattice, upper) || !is_normal_node(lattice, lower) || !lattice.leq(lower, upper) ||
      upper == lower)
    throw NotNormal("describe_factor: need normal subgroups lower < upper");

  auto const &g = lattice.group();
  ChiefFactor f;
  f.upper = upper;
  f.lower = lower;
  f.order = lattice.order(upper) / lattice.order(lower);

  auto const &low = lattice.node(lower);
  auto const &gens = lattice.node(upper).generators;
  f.abelian = std::all_of(gens.begin(), gens.end(), [&](ElementId a) {
    return std::all_of(gens.begin(), gens.end(), [&](ElementId b) { return low.contains(commutator(g, a, b)); });
  });

  if (f.abelian) {
    auto const primes = prime_divisors(f.order);
    f.simple_order = primes.front();
    f.r = valuation(f.order, f.simple_order);
    f.label = "C" + std::to_string(f.simple_order);
    if (f.r > 1)
      f.label += "^" + std::to_string(f.r);
    return f;
  }

  // Largest r with order = s^r and s a known simple order.
  f.simple_order = f.order;
  f.r = 1;
  for (unsigned r = 6; r >= 2; --r) {
    auto root = exact_root(Index(f.order), r);
    if (root && !simple_group_label(root->convert_to<std::uint64_t>()).empty()) {
      f.simple_order = root->convert_to<std::uint64_t>();
      f.r = r;
      break;
    }
  }
  std::string name = simple_group_label(f.simple_order);
  if (name.empty())
    name = "S" + std::to_string(f.simple_order);
  f.label = f.r > 1 ? name + "^" + std::to_string(f.r) : name;
  return f;
}

ChiefSeries chief_series(SubgroupLattice const &lattice, SeriesChoice choice)
{
  auto const normals = normal_subgroups(lattice);
  std::vector<NodeId> ascending{lattice.bottom()};
  while (ascending.back() != lattice.top()) {
    NodeId const cur = ascending.back();
    std::vector<NodeId> minimal;
    for (NodeId k : normals) {
      if (k == cur || !lattice.leq(cur, k))
        continue;
      bool const is_min = std::none_of(normals.begin(), normals.end(), [&](NodeId m) {
        return m != k && m != cur && lattice.leq(cur, m) && lattice.leq(m, k);
      });
      if (is_min)
        minimal.push_back(k);
    }
    ascending.push_back(choice == SeriesChoice::First ? minimal.front() : minimal.back());
  }

  ChiefSeries series;
  series.nodes.assign(ascending.rbegin(), ascending.rend());
  for (std::size_t i = 0; i + 1 < series.nodes.size(); ++i)
    series.factors.push_back(describe_factor(lattice, series.nodes[i], series.nodes[i + 1]));
  return series;
}

NodeId factor_centralizer(SubgroupLattice const &lattice, ChiefFactor const &factor)
{
  auto const &g = lattice.group();
  auto const &low = lattice.node(factor.lower);
  auto const &gens = lattice.node(factor.upper).generators;
  std::vector<ElementId> members;
  for (ElementId x = 0; x < g.order(); ++x) {
    bool const centralizes =
        std::all_of(gens.begin(), gens.end(), [&](ElementId y) { return low.contains(commutator(g, x, y)); });
    if (centralizes)
      members.push_back(x);
  }
  auto node = lattice.find(members);
  if (!node)
    throw NotNormal("factor_centralizer: centralizer is not a subgroup (factor sections not normal?)");
  return *node;
}

Quotient centralizer_quotient(SubgroupLattice const &lattice, ChiefFactor const &factor)
{
  if (!lattice.is_normal(factor.upper) || !lattice.is_normal(factor.lower))
    throw NotNormal("centralizer_quotient: factor sections must be normal");
  return quotient(lattice, factor_centralizer(lattice, factor));
}

} // namespace pzeta
