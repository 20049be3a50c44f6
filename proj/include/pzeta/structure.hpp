#ifndef PZETA_STRUCTURE_HPP
#define PZETA_STRUCTURE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pzeta/lattice.hpp"

namespace pzeta
{

// Normal subgroups of the lattice's group, ascending node order.
std::vector<NodeId> normal_subgroups(SubgroupLattice const &lattice);

// G/N acting on the right cosets of N. image[e] is the quotient element of
// G-element e.
struct Quotient
{
  PermGroup group;
  std::vector<ElementId> image;
};

// Throws NotNormal if the node is not a normal subgroup.
Quotient quotient(SubgroupLattice const &lattice, NodeId normal);

// Intersection of the maximal subgroups.
NodeId frattini(SubgroupLattice const &lattice);

// Intersection of the maximal subgroups that contain the given node: the
// preimage of the Frattini subgroup of G/N for normal N.
NodeId frattini_over(SubgroupLattice const &lattice, NodeId normal);

// upper/lower for one chief factor, which is isomorphic to S^r for a simple S.
struct ChiefFactor
{
  NodeId upper = 0;
  NodeId lower = 0;
  std::uint64_t order = 1;
  bool abelian = true;
  // Order of the simple group S (a prime when abelian).
  std::uint64_t simple_order = 1;
  unsigned r = 1;
  std::string label;
};

enum class SeriesChoice
{
  First, // first minimal normal subgroup in node order at each step
  Last
};

// G = nodes[0] > nodes[1] > ... > nodes[k] = 1, factors[i] = nodes[i]/nodes[i+1].
struct ChiefSeries
{
  std::vector<NodeId> nodes;
  std::vector<ChiefFactor> factors;
};

ChiefSeries chief_series(SubgroupLattice const &lattice, SeriesChoice choice = SeriesChoice::First);

// Describes upper/lower as a chief factor: abelian test, S and r. Throws
// NotNormal unless lower < upper are normal in G.
ChiefFactor describe_factor(SubgroupLattice const &lattice, NodeId upper, NodeId lower);

// True if no normal subgroup of G lies strictly between lower and upper.
bool is_minimal_normal_section(SubgroupLattice const &lattice, NodeId upper, NodeId lower);

// C_G(upper/lower): elements x with [x, y] in lower for every y in upper.
NodeId factor_centralizer(SubgroupLattice const &lattice, ChiefFactor const &factor);

// L = G / C_G(upper/lower).
Quotient centralizer_quotient(SubgroupLattice const &lattice, ChiefFactor const &factor);

} // namespace pzeta

#endif // PZETA_STRUCTURE_HPP
