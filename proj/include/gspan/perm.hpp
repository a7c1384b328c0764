#ifndef GSPAN_PERM_HPP
#define GSPAN_PERM_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace gspan
{

/// A permutation of {0, ..., degree-1}, stored by its images.
///
/// Composition follows the function convention: (g * h)(i) = g(h(i)).
/// Documents and the CLI use 1-based image notation; `from_one_based` and
/// `one_based` convert at that boundary.
class Perm
{
public:
  Perm() = default;

  explicit Perm(std::vector<std::uint32_t> images);

  static Perm identity(std::uint32_t degree);
  static Perm from_one_based(std::vector<std::int64_t> const &images);

  std::uint32_t degree() const
  { return static_cast<std::uint32_t>(_images.size()); }

  std::uint32_t operator[](std::uint32_t i) const
  { return _images[i]; }

  std::vector<std::uint32_t> const &images() const
  { return _images; }

  std::vector<std::int64_t> one_based() const;

  bool is_identity() const;
  Perm inverse() const;

  friend Perm operator*(Perm const &lhs, Perm const &rhs);

  friend bool operator==(Perm const &, Perm const &) = default;
  friend auto operator<=>(Perm const &, Perm const &) = default;

  std::string str() const;

private:
  std::vector<std::uint32_t> _images;
};

/// True iff `images` is a bijection of {0, ..., images.size()-1}.
bool is_permutation(std::vector<std::uint32_t> const &images);

struct PermHash
{
  std::size_t operator()(Perm const &p) const noexcept;
};

} // namespace gspan

#endif // GSPAN_PERM_HPP
