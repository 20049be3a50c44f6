#ifndef PZETA_GROUPS_HPP
#define PZETA_GROUPS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "pzeta/permgroup.hpp"

namespace pzeta
{

PermGroup cyclic_group(std::size_t n);
PermGroup symmetric_group(std::size_t n);
PermGroup alternating_group(std::size_t n);
// Dihedral group of the given order (2m), acting on m points.
PermGroup dihedral_group(std::size_t order);
PermGroup quaternion_group();

enum class Psl2Variant
{
  PSL,
  PGL
};

std::string to_string(Psl2Variant v);

// An almost simple group X together with its socle S, both acting on the
// same points.
struct AlmostSimpleSpec
{
  std::string name;
  PermGroup group;
  PermGroup socle;
};

constexpr std::uint64_t default_max_psl2_q = 61;

// PSL(2,q) or PGL(2,q) acting on the q+1 points of the projective line over
// GF(q); point q is infinity. Throws InvalidParameter unless q is a prime
// with 5 <= q <= max_q.
AlmostSimpleSpec make_psl2(std::uint64_t q, Psl2Variant variant, std::uint64_t max_q = default_max_psl2_q);

// Nonabelian simplicity by normal closures of conjugacy class
// representatives.
bool is_nonabelian_simple(PermGroup const &g);

// Throws InvalidParameter unless socle is a normal, nonabelian simple
// subgroup of group with trivial centralizer.
void validate_almost_simple(AlmostSimpleSpec const &spec);

// Builtin groups by name: Cn, Sn, An, Dn (dihedral of order n), Q8, V4,
// PSL(2,q), PGL(2,q), and direct products written with 'x' (e.g. "A5xC2").
// Throws ParseError for unknown names.
PermGroup builtin_group(std::string_view name, std::size_t max_order = default_max_order);

// Text group file: "degree <d>" followed by one generator per line in cycle
// notation; '#' starts a comment line. Throws ParseError.
PermGroup parse_group_file(std::istream &in, std::size_t max_order = default_max_order);
PermGroup load_group_file(std::string const &path, std::size_t max_order = default_max_order);
std::string format_group_file(PermGroup const &g);

// Name of the nonabelian simple group of this order, if the order is in the
// built-in table (empty otherwise). Ambiguous orders list both names.
std::string simple_group_label(std::uint64_t order);

} // namespace pzeta

#endif // PZETA_GROUPS_HPP
