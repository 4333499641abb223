#ifndef DIAGCAT_EVALUATE_HPP_
#define DIAGCAT_EVALUATE_HPP_

#include <cstddef>  // for size_t

#include "gen_spec.hpp"   // for GenSpec
#include "morphism.hpp"   // for Morphism
#include "semantics.hpp"  // for Semantics
#include "term.hpp"       // for Term, Layered
#include "word.hpp"       // for Word

namespace diagcat {

  // The image of one edge. Throws UnassignedEdge if the semantics has no
  // image for it and ShapeMismatch if the image has the wrong arity.
  Morphism evaluate_edge(GenSpec const&   g,
                         std::size_t      dom,
                         std::size_t      cod,
                         Semantics const& sem);

  Morphism evaluate(Term const& t, Semantics const& sem);
  Morphism evaluate(Layered const& l, Semantics const& sem);
  Morphism evaluate(Word const& w, Semantics const& sem);

  // Folds the images of a word's letters without a signature (the letters'
  // images fix the arities).
  Morphism evaluate_letters(std::size_t                 dom,
                            std::vector<GenSpec> const& letters,
                            Semantics const&            sem);

}  // namespace diagcat

#endif  // DIAGCAT_EVALUATE_HPP_
