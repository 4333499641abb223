#include "diagcat/combinatorics.hpp"

#include <vector>  // for vector

namespace diagcat::combinatorics {

  std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) {
      return 0;
    }
    std::uint64_t result = 1;
    for (std::uint64_t j = 1; j <= k; ++j) {
      result = result * (n - k + j) / j;
    }
    return result;
  }

  std::uint64_t factorial(std::uint64_t n) {
    std::uint64_t result = 1;
    for (std::uint64_t j = 2; j <= n; ++j) {
      result *= j;
    }
    return result;
  }

  std::uint64_t bell(std::uint64_t n) {
    std::vector<std::uint64_t> row{1};
    for (std::uint64_t r = 0; r < n; ++r) {
      std::vector<std::uint64_t> next{row.back()};
      for (auto x : row) {
        next.push_back(next.back() + x);
      }
      row = std::move(next);
    }
    return row.front();
  }

  std::uint64_t perfect_matchings(std::uint64_t n) {
    if (n % 2 == 1) {
      return 0;
    }
    std::uint64_t result = 1;
    for (std::uint64_t j = n; j > 1; j -= 2) {
      result *= j - 1;
    }
    return result;
  }

  std::uint64_t catalan(std::uint64_t n) {
    return binomial(2 * n, n) / (n + 1);
  }

  namespace {
    // Isotone partial maps on points 1..m whose defined values are >= low.
    std::uint64_t isotone_from(std::uint64_t m,
                               std::uint64_t n,
                               std::uint64_t low) {
      if (m == 0) {
        return 1;
      }
      // First point undefined.
      std::uint64_t total = isotone_from(m - 1, n, low);
      for (std::uint64_t v = low; v <= n; ++v) {
        total += isotone_from(m - 1, n, v);
      }
      return total;
    }
  }  // namespace

  std::uint64_t isotone_partial_maps(std::uint64_t m, std::uint64_t n) {
    return isotone_from(m, n, 1);
  }

}  // namespace diagcat::combinatorics
