#ifndef DIAGCAT_SIGNATURE_HPP_
#define DIAGCAT_SIGNATURE_HPP_

#include <cstddef>      // for size_t
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <utility>      // for pair
#include <vector>       // for vector

#include "gen_spec.hpp"  // for GenSpec, GenFamily

namespace diagcat {

  // How an edge schema is graded: monoid letters are loops n -> n, lambda
  // goes up by the step d, rho goes down by d, tensor generators have fixed
  // arity.
  enum class EdgeShape { letter, up, down, fixed };

  struct EdgeSchema {
    GenFamily   family;
    EdgeShape   shape;
    std::size_t dom = 0;
    std::size_t cod = 0;
  };

  // A graded digraph: objects are the naturals from min_object upward, and
  // edges are instances of the schemas.
  class Signature {
   public:
    Signature() = default;
    Signature(std::string             name,
              std::size_t             step,
              std::size_t             min_object,
              std::vector<EdgeSchema> edges);

    std::string const& name() const noexcept {
      return _name;
    }
    std::size_t step() const noexcept {
      return _step;
    }
    std::size_t min_object() const noexcept {
      return _min_object;
    }
    std::vector<EdgeSchema> const& schemas() const noexcept {
      return _edges;
    }

    bool has_family(GenFamily f) const noexcept;

    // The family a grammar name denotes in this signature ("r" resolves to
    // whichever rho the signature has).
    std::optional<GenFamily> family_for(std::string_view name) const noexcept;

    // (dom, cod) of an edge, or nullopt if it is not an edge here.
    std::optional<std::pair<std::size_t, std::size_t>>
    arity(GenSpec const& g) const noexcept;

    // X_n: the monoid letters at n, in schema order then by index.
    std::vector<GenSpec> letters(std::size_t n) const;
    // All edges with source n: letters, lambda_n and rho_{n-d}.
    std::vector<GenSpec> edges_from(std::size_t n) const;
    // The fixed-arity generators of a tensor signature.
    std::vector<GenSpec> tensor_generators() const;

    bool is_tensor() const noexcept;

   private:
    std::string             _name;
    std::size_t             _step       = 1;
    std::size_t             _min_object = 0;
    std::vector<EdgeSchema> _edges;
  };

}  // namespace diagcat

#endif  // DIAGCAT_SIGNATURE_HPP_
