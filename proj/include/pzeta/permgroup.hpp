#ifndef PZETA_PERMGROUP_HPP
#define PZETA_PERMGROUP_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace pzeta
{

using Point = std::uint16_t;

// Bijection on {0, ..., degree-1} stored as its image array.
class Permutation
{
public:
  Permutation() = default;

  // Throws InvalidParameter unless images is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  // Disjoint-cycle notation over 0-based points, e.g. "(0 1 2)(3 4)". An
  // empty string or "()" is the identity.
  static Permutation from_cycles(std::size_t degree, std::string const &cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point p) const { return images_[p]; }
  std::vector<Point> const &images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  std::string to_cycles() const;

  friend bool operator==(Permutation const &, Permutation const &) = default;
  friend auto operator<=>(Permutation const &, Permutation const &) = default;

private:
  std::vector<Point> images_;
};

// Composition acting on the right: (a * b)(p) = b(a(p)).
Permutation operator*(Permutation const &a, Permutation const &b);

using ElementId = std::uint32_t;

constexpr std::size_t default_max_order = 1'000'000;

// Finite permutation group with its full element table. Element 0 is the
// identity; indices are stable and deterministic for a given generator list.
// Products are looked up through the images of a base, so no Cayley table is
// stored.
class PermGroup
{
public:
  // Orbit closure of the generators. Throws OrderBoundExceeded once more than
  // max_order elements have been produced, InvalidParameter on a degree
  // mismatch.
  static PermGroup close_generators(std::size_t degree, std::vector<Permutation> generators,
                                    std::size_t max_order = default_max_order);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return order_; }
  std::vector<Permutation> const &generators() const { return generators_; }

  // Generators as element ids.
  std::vector<ElementId> const &generator_ids() const { return generator_ids_; }

  Permutation element(ElementId i) const;
  std::span<Point const> images(ElementId i) const
  {
    return {points_.data() + static_cast<std::size_t>(i) * degree_, degree_};
  }

  ElementId mul(ElementId a, ElementId b) const;
  ElementId inv(ElementId a) const { return inverse_[a]; }
  // b^-1 a b
  ElementId conj(ElementId a, ElementId b) const { return mul(mul(inverse_[b], a), b); }

  // Throws InvalidParameter if the permutation is not in the group.
  ElementId id_of(Permutation const &p) const;
  bool contains(Permutation const &p) const;

  std::uint32_t element_order(ElementId a) const;

  bool is_abelian() const;

private:
  PermGroup() = default;

  void build_base();
  std::uint64_t key_of(std::span<Point const> images) const;
  ElementId lookup(std::uint64_t key) const;

  std::size_t degree_ = 0;
  std::size_t order_ = 0;
  std::vector<Permutation> generators_;
  std::vector<ElementId> generator_ids_;
  std::vector<Point> points_;
  std::vector<ElementId> inverse_;
  std::vector<Point> base_;
  // Dense lookup when degree^|base| is small, hashed otherwise.
  std::vector<ElementId> dense_;
  std::unordered_map<std::uint64_t, ElementId> sparse_;
};

// Direct product acting on the disjoint union of the point sets.
PermGroup direct_product(PermGroup const &a, PermGroup const &b,
                         std::size_t max_order = default_max_order);

} // namespace pzeta

#endif // PZETA_PERMGROUP_HPP
