#ifndef DIAGCAT_COMBINATORICS_HPP_
#define DIAGCAT_COMBINATORICS_HPP_

#include <cstdint>  // for uint64_t

namespace diagcat::combinatorics {

  std::uint64_t binomial(std::uint64_t n, std::uint64_t k);
  std::uint64_t factorial(std::uint64_t n);
  // Bell numbers through the Bell triangle.
  std::uint64_t bell(std::uint64_t n);
  // (n - 1)!! for even n, the number of perfect matchings of n points; 0 for
  // odd n and 1 for n = 0.
  std::uint64_t perfect_matchings(std::uint64_t n);
  std::uint64_t catalan(std::uint64_t n);
  // Number of isotone partial maps [m] -> [n], by recursion on m.
  std::uint64_t isotone_partial_maps(std::uint64_t m, std::uint64_t n);

}  // namespace diagcat::combinatorics

#endif  // DIAGCAT_COMBINATORICS_HPP_
