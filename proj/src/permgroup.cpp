#include "pzeta/permgroup.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

#include "pzeta/errors.hpp"

namespace pzeta
{

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images))
{
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p])
      throw InvalidParameter("image array is not a permutation");
    seen[p] = true;
  }
}

Permutation Permutation::identity(std::size_t degree)
{
  if (degree > std::numeric_limits<Point>::max())
    throw InvalidParameter("degree too large");
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i)
    images[i] = static_cast<Point>(i);
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree, std::string const &cycles)
{
  std::vector<Point> images = identity(degree).images_;
  std::vector<bool> used(degree, false);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < cycles.size() && std::isspace(static_cast<unsigned char>(cycles[pos])))
      ++pos;
  };
  auto fail = [&](std::string const &msg) -> void {
    throw ParseError("cycle notation '" + cycles + "': " + msg);
  };

  skip_ws();
  while (pos < cycles.size()) {
    if (cycles[pos] != '(')
      fail("expected '('");
    ++pos;
    std::vector<std::size_t> cycle;
    for (;;) {
      skip_ws();
      if (pos < cycles.size() && cycles[pos] == ',')
        ++pos, skip_ws();
      if (pos >= cycles.size())
        fail("unterminated cycle");
      if (cycles[pos] == ')') {
        ++pos;
        break;
      }
      std::size_t start = pos;
      while (pos < cycles.size() && std::isdigit(static_cast<unsigned char>(cycles[pos])))
        ++pos;
      if (start == pos)
        fail("expected a point");
      std::size_t const point = std::stoul(cycles.substr(start, pos - start));
      if (point >= degree)
        fail("point " + std::to_string(point) + " outside degree " + std::to_string(degree));
      if (used[point])
        fail("point " + std::to_string(point) + " repeated");
      used[point] = true;
      cycle.push_back(point);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i]] = static_cast<Point>(cycle[(i + 1) % cycle.size()]);
    skip_ws();
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const
{
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Permutation Permutation::inverse() const
{
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[images_[i]] = static_cast<Point>(i);
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

std::string Permutation::to_cycles() const
{
  std::ostringstream os;
  std::vector<bool> done(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (done[i] || images_[i] == i)
      continue;
    os << '(';
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = true;
      os << (first ? "" : " ") << j;
      first = false;
      j = images_[j];
    }
    os << ')';
  }
  std::string s = os.str();
  return s.empty() ? "()" : s;
}

Permutation operator*(Permutation const &a, Permutation const &b)
{
  if (a.degree() != b.degree())
    throw InvalidParameter("degree mismatch in permutation product");
  std::vector<Point> images(a.degree());
  for (std::size_t i = 0; i < images.size(); ++i)
    images[i] = b(a(static_cast<Point>(i)));
  return Permutation(std::move(images));
}

namespace
{

std::string bytes_of(std::span<Point const> images)
{
  return {reinterpret_cast<char const *>(images.data()), images.size() * sizeof(Point)};
}

constexpr std::size_t dense_limit = std::size_t{1} << 22;

} // namespace

PermGroup PermGroup::close_generators(std::size_t degree, std::vector<Permutation> generators,
                                      std::size_t max_order)
{
  if (degree == 0)
    throw InvalidParameter("degree must be positive");
  if (degree > std::numeric_limits<Point>::max())
    throw InvalidParameter("degree too large");
  for (auto const &g : generators)
    if (g.degree() != degree)
      throw InvalidParameter("generator degree " + std::to_string(g.degree()) +
                             " does not match group degree " + std::to_string(degree));

  PermGroup group;
  group.degree_ = degree;
  group.generators_ = generators;

  std::unordered_map<std::string, ElementId> index;
  auto &points = group.points_;
  auto const id = Permutation::identity(degree);
  points.insert(points.end(), id.images().begin(), id.images().end());
  index.emplace(bytes_of(id.images()), 0);

  std::vector<Point> scratch(degree);
  for (std::size_t cur = 0; cur * degree < points.size(); ++cur) {
    for (auto const &g : generators) {
      for (std::size_t p = 0; p < degree; ++p)
        scratch[p] = g(points[cur * degree + p]);
      auto [it, inserted] = index.emplace(bytes_of(scratch), static_cast<ElementId>(points.size() / degree));
      if (!inserted)
        continue;
      if (points.size() / degree + 1 > max_order)
        throw OrderBoundExceeded("group order exceeds bound " + std::to_string(max_order), max_order, 0);
      points.insert(points.end(), scratch.begin(), scratch.end());
    }
  }
  group.order_ = points.size() / degree;

  for (auto const &g : generators)
    group.generator_ids_.push_back(index.at(bytes_of(g.images())));

  group.build_base();

  group.inverse_.resize(group.order_);
  for (ElementId i = 0; i < group.order_; ++i) {
    auto img = group.images(i);
    for (std::size_t p = 0; p < degree; ++p)
      scratch[img[p]] = static_cast<Point>(p);
    group.inverse_[i] = group.lookup(group.key_of(scratch));
  }
  return group;
}

void PermGroup::build_base()
{
  // Greedy base: keep adding a point moved by some element that fixes the
  // current base pointwise, until only the identity fixes it.
  std::vector<ElementId> pending;
  for (ElementId i = 1; i < order_; ++i)
    pending.push_back(i);
  while (!pending.empty()) {
    auto img = images(pending.front());
    Point moved = 0;
    while (img[moved] == moved)
      ++moved;
    base_.push_back(moved);
    std::erase_if(pending, [&](ElementId e) { return images(e)[moved] != moved; });
  }

  double space = 1;
  for (std::size_t i = 0; i < base_.size(); ++i)
    space *= static_cast<double>(degree_);
  bool const packable = space < 1.8e19;
  if (!packable)
    throw InvalidParameter("base images do not fit a 64-bit key");

  if (space <= static_cast<double>(dense_limit)) {
    dense_.assign(static_cast<std::size_t>(space), std::numeric_limits<ElementId>::max());
    for (ElementId i = 0; i < order_; ++i)
      dense_[key_of(images(i))] = i;
  } else {
    sparse_.reserve(order_);
    for (ElementId i = 0; i < order_; ++i)
      sparse_.emplace(key_of(images(i)), i);
  }
}

std::uint64_t PermGroup::key_of(std::span<Point const> img) const
{
  std::uint64_t key = 0;
  for (Point b : base_)
    key = key * degree_ + img[b];
  return key;
}

ElementId PermGroup::lookup(std::uint64_t key) const
{
  if (!dense_.empty()) {
    if (key < dense_.size() && dense_[key] != std::numeric_limits<ElementId>::max())
      return dense_[key];
  } else if (auto it = sparse_.find(key); it != sparse_.end()) {
    return it->second;
  }
  throw InvalidParameter("permutation is not an element of the group");
}

ElementId PermGroup::mul(ElementId a, ElementId b) const
{
  Point const *pa = points_.data() + static_cast<std::size_t>(a) * degree_;
  Point const *pb = points_.data() + static_cast<std::size_t>(b) * degree_;
  std::uint64_t key = 0;
  for (Point x : base_)
    key = key * degree_ + pb[pa[x]];
  return dense_.empty() ? sparse_.find(key)->second : dense_[key];
}

Permutation PermGroup::element(ElementId i) const
{
  auto img = images(i);
  return Permutation(std::vector<Point>(img.begin(), img.end()));
}

ElementId PermGroup::id_of(Permutation const &p) const
{
  if (p.degree() != degree_)
    throw InvalidParameter("permutation degree does not match group");
  ElementId const i = lookup(key_of(p.images()));
  auto img = images(i);
  if (!std::equal(img.begin(), img.end(), p.images().begin()))
    throw InvalidParameter("permutation is not an element of the group");
  return i;
}

bool PermGroup::contains(Permutation const &p) const
{
  try {
    id_of(p);
    return true;
  } catch (InvalidParameter const &) {
    return false;
  }
}

std::uint32_t PermGroup::element_order(ElementId a) const
{
  std::uint32_t k = 1;
  for (ElementId x = a; x != 0; x = mul(x, a))
    ++k;
  return k;
}

bool PermGroup::is_abelian() const
{
  for (auto a : generator_ids_)
    for (auto b : generator_ids_)
      if (mul(a, b) != mul(b, a))
        return false;
  return true;
}

PermGroup direct_product(PermGroup const &a, PermGroup const &b, std::size_t max_order)
{
  std::size_t const degree = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (auto const &g : a.generators()) {
    std::vector<Point> img(degree);
    for (std::size_t p = 0; p < a.degree(); ++p)
      img[p] = g(static_cast<Point>(p));
    for (std::size_t p = a.degree(); p < degree; ++p)
      img[p] = static_cast<Point>(p);
    gens.emplace_back(std::move(img));
  }
  for (auto const &g : b.generators()) {
    std::vector<Point> img(degree);
    for (std::size_t p = 0; p < a.degree(); ++p)
      img[p] = static_cast<Point>(p);
    for (std::size_t p = 0; p < b.degree(); ++p)
      img[a.degree() + p] = static_cast<Point>(a.degree() + g(static_cast<Point>(p)));
    gens.emplace_back(std::move(img));
  }
  return PermGroup::close_generators(degree, std::move(gens), max_order);
}

} // namespace pzeta
