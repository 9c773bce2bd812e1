#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace starsep {

using Int = mpz_class;
using Rat = mpq_class;

/// Library-wide error type. Thrown for domain violations (division by zero,
/// pole evaluation, mixed spaces, mode mismatches); the CLI maps it to a
/// failed report and a nonzero exit code.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

inline std::string rat_str(const Rat& q) { return q.get_str(); }

}  // namespace starsep
