#ifndef PERMSTAT_TESTS_HELPERS_HPP
#define PERMSTAT_TESTS_HELPERS_HPP

#include <initializer_list>
#include <vector>

#include "permstat/permutation.hpp"

namespace permstat::testing {

inline Permutation perm(std::initializer_list<int> window) {
  return Permutation(std::vector<int>(window));
}

inline PositionSet positions(std::initializer_list<int> values) {
  return PositionSet(values);
}

}  // namespace permstat::testing

#endif  // PERMSTAT_TESTS_HELPERS_HPP
