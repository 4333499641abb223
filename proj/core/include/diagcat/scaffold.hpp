#ifndef DIAGCAT_SCAFFOLD_HPP_
#define DIAGCAT_SCAFFOLD_HPP_

#include <cstddef>      // for size_t
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "catalog.hpp"   // for Presentation
#include "gen_spec.hpp"  // for GenSpec
#include "morphism.hpp"  // for Morphism
#include "semantics.hpp" // for Semantics
#include "term.hpp"      // for Term
#include "word.hpp"      // for Word

namespace diagcat {

  // The one-sided unit data of a category presentation: the step d, the
  // words w_n with rho_n lambda_n = w_n, and the shift maps x -> x_+ and
  // x -> x^+ with x lambda_n = lambda_n x_+ and rho_n x = x^+ rho_n.
  class Scaffold {
   public:
    // Throws UnknownName unless id names a category presentation.
    explicit Scaffold(std::string_view category_id);

    Presentation const& presentation() const noexcept {
      return *_pres;
    }
    Signature const& signature() const noexcept {
      return _pres->signature();
    }
    std::size_t step() const noexcept {
      return signature().step();
    }
    std::size_t min_object() const noexcept {
      return signature().min_object();
    }

    GenSpec lambda(std::size_t n) const;
    GenSpec rho(std::size_t n) const;

    // w_n, a word over X_{n+d}.
    Word w(std::size_t n) const;
    // x_+ and x^+ for a letter x in X_n, words over X_{n+d}.
    Word lower_shift(GenSpec const& x) const;
    Word upper_shift(GenSpec const& x) const;

    // lambda_{m,n} and rho_{n,m}; throw BadGrading unless m <= n and
    // m = n (mod d).
    Word lambda_word(std::size_t m, std::size_t n) const;
    Word rho_word(std::size_t n, std::size_t m) const;

   private:
    Presentation const* _pres;
    bool                _fold;
  };

  // R_{m,n}(a) = rho_{n,m} a for a in C(m,n), and L_{n,m}(a) = a lambda_{m,n}
  // for a in C(n,m).
  Morphism to_endo_right(Scaffold const& sc, Morphism const& a);
  Morphism to_endo_left(Scaffold const& sc, Morphism const& a);

  // The image of a category edge under the hat map into the tensor
  // partner's terms. Throws UnknownEdge.
  Term hat_map(std::string_view category_id, GenSpec const& edge);
  Term hat_word(std::string_view category_id, Word const& w);

  // A word over X_n evaluating to the endomorphism a, found by breadth-first
  // search from the empty word. Tables are shared per (presentation, n).
  // Throws BudgetExceeded if more than budget elements would be needed.
  Word monoid_word_for(Presentation const& pres,
                       Morphism const&     a,
                       std::size_t         n,
                       std::size_t         budget = 200'000);

  enum class Side { left_lambda, right_rho };

  struct NormalForm {
    Side                     side;
    std::size_t              dom;
    std::size_t              cod;
    Word                     core;   // over X_cod (left) or X_dom (right)
    std::vector<std::string> trace;  // one line per rewrite step
  };

  // w ~ lambda_{m,n} core (m <= n) or w ~ core rho_{m,n} (m > n), following
  // the induction on the length of w. Throws DescendFailure if the
  // endomorphism lambda_n s rho_n has no word within budget.
  NormalForm normalize_one_sided(Scaffold const& sc,
                                 Word const&     w,
                                 std::size_t     budget = 200'000);

  // The word the normal form stands for.
  Word reconstruct(Scaffold const& sc, NormalForm const& nf);

}  // namespace diagcat

#endif  // DIAGCAT_SCAFFOLD_HPP_
