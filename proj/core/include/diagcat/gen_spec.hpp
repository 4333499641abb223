#ifndef DIAGCAT_GEN_SPEC_HPP_
#define DIAGCAT_GEN_SPEC_HPP_

#include <cstddef>      // for size_t
#include <cstdint>      // for uint8_t
#include <functional>   // for hash
#include <string>       // for string
#include <string_view>  // for string_view

namespace diagcat {

  // Every generator symbol appearing in the catalogs. Monoid letters carry an
  // index i and a size n, lambda/rho carry n, the tensor generators carry
  // nothing.
  enum class GenFamily : std::uint8_t {
    sigma,
    sigma_inv,
    eps,
    tau,
    mu,
    eta,
    lambda,
    rho_chop,
    rho_fold,
    X,
    Xinv,
    D,
    U,
    Ubar,
    V
  };

  enum class GenArity : std::uint8_t { indexed, graded, nullary };

  GenArity arity_of(GenFamily f) noexcept;

  // Name used by the term grammar (rho_chop and rho_fold both print as "r").
  std::string_view grammar_name(GenFamily f) noexcept;

  struct GenSpec {
    GenFamily family = GenFamily::X;
    std::size_t i = 0;
    std::size_t n = 0;

    static GenSpec indexed(GenFamily f, std::size_t i, std::size_t n) {
      return GenSpec{f, i, n};
    }
    static GenSpec graded(GenFamily f, std::size_t n) {
      return GenSpec{f, 0, n};
    }
    static GenSpec nullary(GenFamily f) {
      return GenSpec{f, 0, 0};
    }

    // Index ranges: sigma-like letters need 1 <= i < n, eps needs 1 <= i <= n.
    bool indices_valid() const noexcept;

    std::string to_string() const;

    friend bool operator==(GenSpec const&, GenSpec const&) = default;
    friend auto operator<=>(GenSpec const&, GenSpec const&) = default;
  };

  struct GenSpecHash {
    std::size_t operator()(GenSpec const& g) const noexcept {
      return (static_cast<std::size_t>(g.family) * 1000003u + g.i) * 1000003u
             + g.n;
    }
  };

}  // namespace diagcat

#endif  // DIAGCAT_GEN_SPEC_HPP_
