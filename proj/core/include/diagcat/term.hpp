#ifndef DIAGCAT_TERM_HPP_
#define DIAGCAT_TERM_HPP_

#include <cstddef>  // for size_t
#include <cstdint>  // for uint8_t
#include <string>   // for string
#include <vector>   // for vector

#include "gen_spec.hpp"  // for GenSpec

namespace diagcat {

  // A term of the free tensor category: identities, edges, and the two
  // compositions. The smart constructors keep terms in a normal form modulo
  // the strict axioms: both compositions are flattened, identities vanish
  // from sequential composition, id[0] vanishes from tensors and adjacent
  // identities in a tensor merge.
  class Term {
   public:
    enum class Kind : std::uint8_t { identity, edge, compose, tensor };

    Term() = default;  // id[0]

    static Term id(std::size_t n);
    static Term edge(GenSpec const& g, std::size_t dom, std::size_t cod);
    // Throws TypeError if cod(a) != dom(b).
    static Term compose(Term const& a, Term const& b);
    static Term tensor(Term const& a, Term const& b);

    Kind kind() const noexcept {
      return _kind;
    }
    std::size_t dom() const noexcept {
      return _dom;
    }
    std::size_t cod() const noexcept {
      return _cod;
    }
    GenSpec const& gen() const noexcept {
      return _gen;
    }
    std::vector<Term> const& children() const noexcept {
      return _children;
    }
    bool is_identity() const noexcept {
      return _kind == Kind::identity;
    }

    // Number of edge occurrences.
    std::size_t size() const noexcept;

    // Minimal-parenthesis print in the term grammar.
    std::string to_string() const;

    friend bool operator==(Term const&, Term const&) = default;

   private:
    Kind              _kind = Kind::identity;
    std::size_t       _dom  = 0;
    std::size_t       _cod  = 0;
    GenSpec           _gen;
    std::vector<Term> _children;
  };

  // One layer id[left] # gen # id[right].
  struct Layer {
    GenSpec     gen;
    std::size_t left;
    std::size_t dom;
    std::size_t cod;
    std::size_t right;

    std::size_t width_in() const noexcept {
      return left + dom + right;
    }
    std::size_t width_out() const noexcept {
      return left + cod + right;
    }
    friend bool operator==(Layer const&, Layer const&) = default;
  };

  struct Layered {
    std::size_t        dom = 0;
    std::vector<Layer> layers;

    std::size_t cod() const noexcept {
      return layers.empty() ? dom : layers.back().width_out();
    }
    friend bool operator==(Layered const&, Layered const&) = default;
  };

  // The layers of a term. A tensor of several parts is layered part by part
  // from the left, each part framed by the codomains of the parts before it
  // and the domains of the parts after it.
  Layered layers_of(Term const& t);
  Term    from_layers(Layered const& l);
  // A composite of layers id[p] # x # id[q], or an identity.
  Term layerize(Term const& t);

}  // namespace diagcat

#endif  // DIAGCAT_TERM_HPP_
