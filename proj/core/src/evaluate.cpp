#include "diagcat/evaluate.hpp"

#include "diagcat/error.hpp"  // for Error

namespace diagcat {

  Morphism evaluate_edge(GenSpec const&   g,
                         std::size_t      dom,
                         std::size_t      cod,
                         Semantics const& sem) {
    auto image = sem.assign(g);
    if (!image) {
      throw Error(ErrorCode::unassigned_edge,
                  g.to_string() + " has no image in " + sem.name());
    }
    if (diagcat::dom(*image) != dom || diagcat::cod(*image) != cod) {
      throw Error(ErrorCode::shape_mismatch,
                  "image of " + g.to_string() + " in " + sem.name()
                      + " is in hom(" + std::to_string(diagcat::dom(*image))
                      + "," + std::to_string(diagcat::cod(*image))
                      + "), expected hom(" + std::to_string(dom) + ","
                      + std::to_string(cod) + ")");
    }
    return std::move(*image);
  }

  Morphism evaluate(Term const& t, Semantics const& sem) {
    switch (t.kind()) {
      case Term::Kind::identity:
        return sem.identity(t.dom());
      case Term::Kind::edge:
        return evaluate_edge(t.gen(), t.dom(), t.cod(), sem);
      case Term::Kind::compose: {
        auto const& parts = t.children();
        Morphism    acc   = evaluate(parts.front(), sem);
        for (std::size_t k = 1; k < parts.size(); ++k) {
          acc = sem.compose(acc, evaluate(parts[k], sem));
        }
        return acc;
      }
      case Term::Kind::tensor: {
        auto const& parts = t.children();
        Morphism    acc   = evaluate(parts.front(), sem);
        for (std::size_t k = 1; k < parts.size(); ++k) {
          acc = sem.tensor(acc, evaluate(parts[k], sem));
        }
        return acc;
      }
    }
    return sem.identity(0);
  }

  Morphism evaluate(Layered const& l, Semantics const& sem) {
    Morphism acc = sem.identity(l.dom);
    for (auto const& x : l.layers) {
      Morphism layer = sem.tensor(
          sem.tensor(sem.identity(x.left),
                     evaluate_edge(x.gen, x.dom, x.cod, sem)),
          sem.identity(x.right));
      acc = sem.compose(acc, layer);
    }
    return acc;
  }

  Morphism evaluate(Word const& w, Semantics const& sem) {
    return evaluate_letters(w.dom(), w.letters(), sem);
  }

  Morphism evaluate_letters(std::size_t                 dom,
                            std::vector<GenSpec> const& letters,
                            Semantics const&            sem) {
    Morphism acc = sem.identity(dom);
    for (auto const& g : letters) {
      auto image = sem.assign(g);
      if (!image) {
        throw Error(ErrorCode::unassigned_edge,
                    g.to_string() + " has no image in " + sem.name());
      }
      acc = sem.compose(acc, *image);
    }
    return acc;
  }

}  // namespace diagcat
