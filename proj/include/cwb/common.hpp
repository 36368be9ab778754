#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace cwb {

using real = long double;
using cplx = std::complex<real>;

/// Genus of a curve or rank parameter of the Heisenberg group.
struct Genus {
  int value;

  explicit constexpr Genus(int g) : value(g) {}
  constexpr int twice() const { return 2 * value; }
  friend constexpr bool operator==(Genus, Genus) = default;
};

/// Input that violates an operation's precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical procedure failed to meet its accuracy or geometric contract.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require_genus(Genus g, int min_value) {
  if (g.value < min_value)
    throw InvalidArgument("invalid genus " + std::to_string(g.value) +
                          " (need >= " + std::to_string(min_value) + ")");
}

}  // namespace cwb
