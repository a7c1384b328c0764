#ifndef GSPAN_VERIFY_HPP
#define GSPAN_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gspan/document.hpp"

namespace gspan
{

struct VerifyOptions
{
  std::uint64_t seed = 42;
  /// Largest G-set (and, in the operad suite, level) that the suites build.
  std::size_t size_bound = 4;
  /// Random instances per identity; 0 picks each suite's default.
  std::size_t trials = 0;
  /// Points per numeric check in the atiyah suite.
  std::size_t samples = 10000;
  double tolerance = 1e-9;
};

struct IdentityResult
{
  std::string name;
  std::size_t tried = 0;
  std::size_t failed = 0;
  /// Numeric identities only; negative when not applicable.
  double max_discrepancy = -1.0;
  /// The first failing instance, or null.
  Json counterexample;
};

struct SuiteResult
{
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t size_bound = 0;
  std::vector<IdentityResult> identities;

  bool passed() const;
};

std::vector<std::string> const &suite_names();

/// Runs one of bicategory, duality, operad, fixed, atiyah; throws Usage for
/// anything else.
SuiteResult run_suite(std::string const &suite, GroupPtr const &group,
                      VerifyOptions const &options = {});

/// The left composite unit_object(C) o x computed directly: x's tuple with
/// each operad value re-ranked by (alpha_C(h)(c_i), x.op(h)(i)).
FreeAlgObj left_unit_translate(GSet const &c, GSet const &a, FreeAlgObj const &x);

/// One line per identity, then the counterexamples of failing identities.
std::string format_suite(SuiteResult const &r);
Json to_json(SuiteResult const &r);

} // namespace gspan

#endif // GSPAN_VERIFY_HPP
