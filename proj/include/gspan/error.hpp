#ifndef GSPAN_ERROR_HPP
#define GSPAN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace gspan
{

enum class ErrorKind
{
  MalformedInput,
  SizeLimit,
  Shape,
  Domain,
  NotFixed,
  Usage,
};

/// Every failure raised by the core carries one of the kinds above; the C API
/// maps them one-to-one onto status codes.
class Error : public std::runtime_error
{
public:
  Error(ErrorKind kind, std::string const &what)
  : std::runtime_error(what), _kind(kind)
  {}

  ErrorKind kind() const noexcept
  { return _kind; }

private:
  ErrorKind _kind;
};

[[noreturn]] inline void fail(ErrorKind kind, std::string const &what)
{ throw Error(kind, what); }

} // namespace gspan

#endif // GSPAN_ERROR_HPP
