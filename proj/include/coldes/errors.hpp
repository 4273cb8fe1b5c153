#ifndef COLDES_ERRORS_HPP
#define COLDES_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace coldes {

// Precondition failures on the mathematical domain (wrong r for a statistic,
// n too small for a reduction map, ...).
class domain_error : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Two operands that must live in the same G_{r,n} do not.
class parameter_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class range_error : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

// A value that must be an integer (n!-scaled coefficient, closed-form sum)
// turned out not to be one.
class integrality_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Reciprocal of a series whose constant term is not invertible.
class singular_series_error : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

class budget_exceeded : public std::runtime_error {
public:
  budget_exceeded(std::uint64_t required, std::uint64_t cap)
      : std::runtime_error("enumeration of " + std::to_string(required) +
                           " elements exceeds the cap of " +
                           std::to_string(cap) +
                           "; raise the cap to at least " +
                           std::to_string(required)),
        required_(required), cap_(cap) {}

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t cap() const noexcept { return cap_; }

private:
  std::uint64_t required_;
  std::uint64_t cap_;
};

} // namespace coldes

#endif
