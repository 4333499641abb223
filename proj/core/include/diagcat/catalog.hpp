#ifndef DIAGCAT_CATALOG_HPP_
#define DIAGCAT_CATALOG_HPP_

#include <cstddef>      // for size_t
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "semantics.hpp"  // for SemanticsTag
#include "signature.hpp"  // for Signature
#include "term.hpp"       // for Term

namespace diagcat {

  enum class Level { monoid, category, tensor };

  std::string_view level_name(Level level) noexcept;

  // Index side conditions of a relation schema.
  enum class Constraint {
    none,
    i_lt_j,         // i < j (commutation of the same family)
    far,            // |i - j| > 1
    adjacent,       // |i - j| = 1
    j_off,          // j not in {i, i + 1}
    j_on,           // j in {i, i + 1}
    i_le_n_minus_2  // i <= n - 2
  };

  // A relation between two terms written in the term grammar with index
  // expressions in the brackets, e.g. "s[i,n] ; e[i+1,n]". The variables
  // are i, j, n. In the linear variant the relation reads
  // d^lhs_delta * lhs = d^rhs_delta * rhs.
  struct RelationSchema {
    std::string id;
    std::string lhs;
    std::string rhs;
    Constraint  constraint = Constraint::none;
    unsigned    lhs_delta  = 0;
    unsigned    rhs_delta  = 0;
  };

  struct RelationInstance {
    std::string                id;
    std::optional<std::size_t> n;
    std::optional<std::size_t> i;
    std::optional<std::size_t> j;
    Term                       lhs;
    Term                       rhs;
    unsigned                   lhs_delta = 0;
    unsigned                   rhs_delta = 0;

    // "<id> <n> <i> <j> : <lhs> == <rhs>", absent indices printed as "-";
    // in the linear variant a side with a d-power k > 0 is printed as
    // "d^k * (<side>)".
    std::string to_line(bool linear = false) const;
  };

  class Presentation {
   public:
    Presentation(std::string                 id,
                 Level                       level,
                 Signature                   signature,
                 std::vector<RelationSchema> relations,
                 SemanticsTag                semantics,
                 bool                        linear = false);

    std::string const& id() const noexcept {
      return _id;
    }
    Level level() const noexcept {
      return _level;
    }
    Signature const& signature() const noexcept {
      return _signature;
    }
    std::vector<RelationSchema> const& relations() const noexcept {
      return _relations;
    }
    SemanticsTag semantics() const noexcept {
      return _semantics;
    }
    bool linear() const noexcept {
      return _linear;
    }

    // Every instance of every schema with all meaningful indices and
    // n <= n_max (tensor relations have a single instance each).
    std::vector<RelationInstance> instantiate(std::size_t n_max) const;
    std::vector<RelationInstance> instantiate(RelationSchema const& r,
                                              std::size_t n_max) const;

    std::vector<std::string> dump(std::size_t n_max) const;

   private:
    std::string                 _id;
    Level                       _level;
    Signature                   _signature;
    std::vector<RelationSchema> _relations;
    SemanticsTag                _semantics;
    bool                        _linear;
  };

  // Registered presentations, e.g. "P", "P-monoid", "P-tensor", "P-linear",
  // "P-tensor-linear", "PV", "V-tensor", "OI-tensor". Throws UnknownName.
  Presentation const&      presentation(std::string_view id);
  std::vector<std::string> presentation_ids();

  // The tensor presentation paired with a category presentation by the hat
  // map ("P" -> "P-tensor").
  std::string tensor_partner(std::string_view category_id);

  // Expands the bracketed index expressions of a template. Returns nullopt
  // if some expression is negative.
  std::optional<std::string> expand_template(std::string_view text,
                                             std::size_t      n,
                                             std::size_t      i,
                                             std::size_t      j);

}  // namespace diagcat

#endif  // DIAGCAT_CATALOG_HPP_
