#pragma once

#include "maxalg/matrix.hpp"

// Shared 3x3 max-doubly stochastic specimens used across the suites.
namespace testsupport {

inline maxalg::MaxMatrix d1() {
  return maxalg::MaxMatrix{{1.0 / 2, 1.0 / 4, 1.0},
                           {4.0 / 5, 1.0, 2.0 / 3},
                           {1.0, 2.0 / 3, 6.0 / 7}};
}

inline maxalg::MaxMatrix d2() {
  return maxalg::MaxMatrix{{1, 1, 0}, {0, 1, 1}, {0, 0, 1}};
}

inline maxalg::MaxMatrix swap_p() {
  return maxalg::MaxMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
}

}  // namespace testsupport
