#include "gspan/perm.hpp"

#include <sstream>

#include "gspan/error.hpp"

namespace gspan
{

bool is_permutation(std::vector<std::uint32_t> const &images)
{
  std::vector<bool> seen(images.size(), false);
  for (auto x : images) {
    if (x >= images.size() || seen[x])
      return false;
    seen[x] = true;
  }
  return true;
}

Perm::Perm(std::vector<std::uint32_t> images)
: _images(std::move(images))
{
  if (!is_permutation(_images))
    fail(ErrorKind::MalformedInput, "not a permutation: " + str());
}

Perm Perm::identity(std::uint32_t degree)
{
  std::vector<std::uint32_t> images(degree);
  for (std::uint32_t i = 0; i < degree; ++i)
    images[i] = i;
  return Perm(std::move(images));
}

Perm Perm::from_one_based(std::vector<std::int64_t> const &images)
{
  std::vector<std::uint32_t> zero_based;
  zero_based.reserve(images.size());
  for (auto x : images) {
    if (x < 1 || x > static_cast<std::int64_t>(images.size()))
      fail(ErrorKind::MalformedInput,
           "permutation image " + std::to_string(x) + " out of range 1.." +
             std::to_string(images.size()));
    zero_based.push_back(static_cast<std::uint32_t>(x - 1));
  }
  return Perm(std::move(zero_based));
}

std::vector<std::int64_t> Perm::one_based() const
{
  std::vector<std::int64_t> res;
  res.reserve(_images.size());
  for (auto x : _images)
    res.push_back(static_cast<std::int64_t>(x) + 1);
  return res;
}

bool Perm::is_identity() const
{
  for (std::uint32_t i = 0; i < degree(); ++i) {
    if (_images[i] != i)
      return false;
  }
  return true;
}

Perm Perm::inverse() const
{
  std::vector<std::uint32_t> inv(_images.size());
  for (std::uint32_t i = 0; i < degree(); ++i)
    inv[_images[i]] = i;
  Perm res;
  res._images = std::move(inv);
  return res;
}

Perm operator*(Perm const &lhs, Perm const &rhs)
{
  if (lhs.degree() != rhs.degree())
    fail(ErrorKind::MalformedInput,
         "degree mismatch in composition: " + std::to_string(lhs.degree()) +
           " vs " + std::to_string(rhs.degree()));

  Perm res;
  res._images.resize(lhs._images.size());
  for (std::uint32_t i = 0; i < lhs.degree(); ++i)
    res._images[i] = lhs._images[rhs._images[i]];
  return res;
}

std::string Perm::str() const
{
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < _images.size(); ++i)
    os << (i ? " " : "") << _images[i] + 1;
  os << ')';
  return os.str();
}

std::size_t PermHash::operator()(Perm const &p) const noexcept
{
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto x : p.images()) {
    h ^= x;
    h *= 0x100000001b3ULL;
  }
  return h;
}

} // namespace gspan
