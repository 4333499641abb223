#ifndef DIAGCAT_VERIFY_HPP_
#define DIAGCAT_VERIFY_HPP_

#include <cstddef>      // for size_t
#include <cstdint>      // for uint64_t
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view

#include "catalog.hpp"      // for Presentation
#include "partial_map.hpp"  // for PartialMap
#include "semantics.hpp"    // for Semantics
#include "term.hpp"         // for Term

namespace diagcat {

  enum class Status { pass, fail, budget };

  std::string_view status_name(Status s) noexcept;  // PASS, FAIL, BUDGET

  struct Report {
    std::string                check_id;
    std::string                params;
    Status                     status = Status::pass;
    std::optional<std::string> counterexample;
    std::size_t                items   = 0;
    double                     seconds = 0;
    std::string                stats;  // extra counters, free form

    bool passed() const noexcept {
      return status == Status::pass;
    }
    // "PASS <check-id> <params> [counterexample: <serialized>]"
    std::string line() const;
    // line() followed by the statistics
    std::string detailed() const;
  };

  // Both sides of every relation instance with n <= n_max evaluate equal
  // (as LinComb with the d-powers applied, for linear presentations). A
  // counterexample is "<lhs> == <rhs>" in the term grammar.
  Report check_soundness(Presentation const& pres, std::size_t n_max);
  Report check_soundness(Presentation const& pres,
                         Semantics const&    sem,
                         std::size_t         n_max);

  // check_soundness of PV, IB or V under their transformation images.
  Report check_shadow(std::string_view catalog, std::size_t n_max);

  // Breadth-first generation of the values of words (category level) or
  // layered terms (tensor level) from id[m], with at most size_bound
  // generators and intermediate objects at most max(m, n) + width_slack.
  // Passes iff every element of the hom-set (m, n) is reached.
  Report check_surjectivity(Presentation const& pres,
                            std::size_t         m,
                            std::size_t         n,
                            std::size_t         size_bound,
                            std::size_t         width_slack = 2,
                            std::size_t         budget      = 2'000'000);

  // All words / layered terms (m, n) with at most word_size generators are
  // joined by single relation applications through terms with at most
  // word_size + slack generators. Terms related by interchange moves alone
  // are identified. Passes iff every such term is within depth relation
  // steps of a shortest term of its value. An unreached term is reported as
  // BUDGET, an unsound step as FAIL.
  Report check_joinability(Presentation const& pres,
                           std::size_t         m,
                           std::size_t         n,
                           std::size_t         word_size,
                           std::size_t         depth,
                           std::size_t         slack = 2);

  // |enumerate_homset(kind, m, n)| against the closed form. kind is one of
  // P, PlanarP, B, TL, PT, T, I, PO, O, OI.
  Report check_counts(std::string_view kind, std::size_t m, std::size_t n);

  struct AxiomScale {
    std::size_t pairs       = 3;  // laws in two morphisms, objects <= pairs
    std::size_t triples     = 3;  // composition associativity
    std::size_t tensor_assoc = 2;  // associativity of the tensor
    std::size_t interchange = 1;  // the interchange law
  };

  // Tensor category axioms, the zero-object lemmas, and for semantics with
  // an involution the regular-* laws, exhaustively over enumerated
  // hom-sets. For diagrams the floating counts are checked to be additive
  // along triple products.
  Report check_axioms(Semantics const& sem, AxiomScale const& scale = {});

  // The one-sided unit conditions (grading, lambda rho = id, rho lambda =
  // w_n, and the shift relations) for the scaffold of a category
  // presentation, and for the categories with rho_fold the conditions on
  // C(0, n) and on the tensor partner's unique edge out of 0.
  Report check_scaffold(std::string_view category_id, std::size_t n_max);

  // evaluate(hat(w)) = evaluate(w) for every word of length <= max_len
  // with objects <= max_object.
  Report check_hat_map(std::string_view category_id,
                       std::size_t      max_len,
                       std::size_t      max_object);

  // normalize_one_sided on a deterministic sample of the words of length
  // <= max_len with objects <= max_object; every normal form must
  // reconstruct the value of its word and have its core at the right level.
  // With a seed the sample is drawn at random instead.
  Report check_normalize(std::string_view             category_id,
                         std::size_t                  samples,
                         std::size_t                  max_len,
                         std::size_t                  max_object,
                         std::optional<std::uint64_t> seed = std::nullopt);

  // The term (U^p0 # Uu^q0) # id[1] # ... # id[1] # (U^pk # Uu^qk) over the
  // OI tensor signature built from the increasing pairs of f.
  Term oi_normal_form(PartialMap const& f);

  // Every f in OI(m, n), m, n <= max, is the value of oi_normal_form(f).
  Report check_oi_normal_form(std::size_t max);

}  // namespace diagcat

#endif  // DIAGCAT_VERIFY_HPP_
