#pragma once

#include <stdexcept>
#include <string>

namespace qlfun {

// Argument outside an operation's domain (q outside (0,1), negative
// bracket argument, non-positive cpow base, ...).
class domain_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A route was applied to parameters it does not accept (e.g. a
// negative-integer route at non-integer s).
class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Certified truncation could not push the tail below the target within
// ctx.max_terms.  Carries the best bound that was achieved, as a decimal
// string, so callers can report how far off the request was.
class truncation_error : public std::runtime_error {
 public:
  truncation_error(const std::string& what, std::string best_bound)
      : std::runtime_error(what), best_bound_(std::move(best_bound)) {}
  const std::string& best_bound() const { return best_bound_; }

 private:
  std::string best_bound_;
};

// Expansion evaluation requested within pole_radius of a prefactor pole.
class pole_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qlfun
