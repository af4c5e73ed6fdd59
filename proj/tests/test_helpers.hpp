#pragma once

#include <cmath>
#include <vector>

#include "slcomb/complex_matrix.hpp"
#include "slcomb/pure_state.hpp"

namespace slcomb::testing {

inline PureState ghz(int d, std::size_t parties) {
  std::size_t n = 1;
  for (std::size_t k = 0; k < parties; ++k) n *= static_cast<std::size_t>(d);
  std::vector<Complex> a(n);
  for (int i = 0; i < d; ++i) {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < parties; ++k) idx = idx * static_cast<std::size_t>(d) + static_cast<std::size_t>(i);
    a[idx] = 1.0 / std::sqrt(static_cast<double>(d));
  }
  return PureState(d, parties, std::move(a));
}

}  // namespace slcomb::testing
