#pragma once

#include <stdexcept>
#include <string>

namespace pword {

// A threshold query where one period divides the other has no finite answer:
// the gcd period is forced for every word, so there is nothing to compute.
class trivial_instance_error : public std::domain_error {
 public:
  explicit trivial_instance_error(const std::string& what) : std::domain_error(what) {}
};

// An exhaustive oracle would exceed its combinatorial budget.
class budget_exceeded_error : public std::runtime_error {
 public:
  explicit budget_exceeded_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pword
