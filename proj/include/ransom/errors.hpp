#pragma once

#include <stdexcept>
#include <string>

namespace ransom {

/// A threshold denominator vanished or went negative.
class DegenerateParameterError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// No sign change of the region function below the root-search cap.
class SearchCapError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// r * p2(r) is unbounded, so an equilibrium ransom need not exist.
class Con1Violation : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace ransom
