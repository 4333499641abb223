#ifndef DIAGCAT_WORD_HPP_
#define DIAGCAT_WORD_HPP_

#include <cstddef>  // for size_t
#include <string>   // for string
#include <vector>   // for vector

#include "gen_spec.hpp"   // for GenSpec
#include "signature.hpp"  // for Signature
#include "term.hpp"       // for Term

namespace diagcat {

  // A path in a graded digraph: the empty path at an object, or a sequence
  // of edges whose endpoints match.
  class Word {
   public:
    explicit Word(std::size_t n = 0) : _dom(n), _cod(n) {}
    // Throws TypeError if consecutive letters do not match, UnknownEdge if a
    // letter is not an edge of the signature.
    Word(Signature const& sig, std::size_t dom, std::vector<GenSpec> letters);

    std::size_t dom() const noexcept {
      return _dom;
    }
    std::size_t cod() const noexcept {
      return _cod;
    }
    std::size_t size() const noexcept {
      return _letters.size();
    }
    bool empty() const noexcept {
      return _letters.empty();
    }
    std::vector<GenSpec> const& letters() const noexcept {
      return _letters;
    }

    void push_back(Signature const& sig, GenSpec const& g);
    // Throws TypeError on mismatched endpoints.
    void append(Word const& other);

    Term to_term(Signature const& sig) const;
    // Letters joined by " ; ", or id[n] for the empty path.
    std::string to_string() const;

    friend bool operator==(Word const&, Word const&) = default;
    friend auto operator<=>(Word const&, Word const&) = default;

   private:
    std::size_t          _dom;
    std::size_t          _cod;
    std::vector<GenSpec> _letters;
  };

  Word concat(Word a, Word const& b);

}  // namespace diagcat

#endif  // DIAGCAT_WORD_HPP_
