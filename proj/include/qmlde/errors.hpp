#pragma once

#include <stdexcept>
#include <string>

namespace qmlde {

class zero_division : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Requested coefficient lies beyond the retained truncation window.
class truncation_exceeded : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class invalid_weight : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The requested leading exponent is not a root of the indicial polynomial.
class not_an_exponent : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The coefficient recursion hit a resonant offset with a nonzero right-hand
// side: no power-series solution exists at this exponent (a log term would be
// required to continue).
class logarithmic_obstruction : public std::runtime_error {
 public:
  explicit logarithmic_obstruction(int offset)
      : std::runtime_error("logarithmic obstruction at offset " + std::to_string(offset)),
        offset_(offset) {}
  int offset() const { return offset_; }

 private:
  int offset_;
};

}  // namespace qmlde
