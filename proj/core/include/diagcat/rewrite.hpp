#ifndef DIAGCAT_REWRITE_HPP_
#define DIAGCAT_REWRITE_HPP_

#include <cstddef>  // for size_t
#include <vector>   // for vector

#include "signature.hpp"  // for Signature
#include "term.hpp"       // for Term, Layered
#include "word.hpp"       // for Word

namespace diagcat {

  enum class Direction { forward, backward };

  // Replaces the occurrence of one side of the relation (lhs for forward,
  // rhs for backward) that starts at letter `position` by the other side.
  // An empty side is inserted at `position`. Throws NoMatch.
  Word apply_relation(Signature const& sig,
                      Word const&      w,
                      Word const&      lhs,
                      Word const&      rhs,
                      std::size_t      position,
                      Direction        dir);

  // The same on the layers of a term. The matched side is framed as
  // id[p] # side # id[q]; p is read off the first matched layer, or taken
  // from `offset` when the matched side is an identity. The result is
  // layered. Throws NoMatch.
  Term apply_relation(Term const& t,
                      Term const& lhs,
                      Term const& rhs,
                      std::size_t position,
                      Direction   dir,
                      std::size_t offset = 0);

  // Layerings obtained by exchanging layers k and k + 1 when they act on
  // disjoint wires (interchange law); zero, one or two results.
  std::vector<Layered> swap_layers(Layered const& l, std::size_t k);

  // Every layering reachable by repeated swaps.
  std::vector<Layered> interchange_orbit(Layered const& l);

}  // namespace diagcat

#endif  // DIAGCAT_REWRITE_HPP_
