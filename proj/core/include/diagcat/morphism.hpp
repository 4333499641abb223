#ifndef DIAGCAT_MORPHISM_HPP_
#define DIAGCAT_MORPHISM_HPP_

#include <cstddef>  // for size_t
#include <string>   // for string
#include <variant>  // for variant

#include "lin_comb.hpp"     // for LinComb
#include "partial_map.hpp"  // for PartialMap
#include "partition.hpp"    // for Partition

namespace diagcat {

  // A morphism of any of the concrete categories.
  using Morphism = std::variant<Partition, PartialMap, LinComb>;

  std::size_t dom(Morphism const& f);
  std::size_t cod(Morphism const& f);
  std::string to_string(Morphism const& f);

  struct MorphismHash {
    std::size_t operator()(Morphism const& f) const noexcept {
      return std::visit([](auto const& x) { return x.hash(); }, f)
             + f.index();
    }
  };

}  // namespace diagcat

#endif  // DIAGCAT_MORPHISM_HPP_
