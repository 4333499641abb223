#ifndef DIAGCAT_LIN_COMB_HPP_
#define DIAGCAT_LIN_COMB_HPP_

#include <cstddef>  // for size_t
#include <map>      // for map
#include <string>   // for string

#include "partition.hpp"   // for Partition
#include "polynomial.hpp"  // for DeltaPoly

namespace diagcat {

  // A finite formal sum of diagrams in hom(m, n) with coefficients in Q[d].
  // Zero coefficients are never stored.
  class LinComb {
   public:
    using map_type = std::map<Partition, DeltaPoly>;

    LinComb() = default;
    LinComb(std::size_t m, std::size_t n) : _m(m), _n(n) {}

    static LinComb basis(Partition const& p, DeltaPoly c = DeltaPoly(1));
    static LinComb identity(std::size_t n) {
      return basis(Partition::identity(n));
    }

    std::size_t dom() const noexcept {
      return _m;
    }
    std::size_t cod() const noexcept {
      return _n;
    }
    map_type const& terms() const noexcept {
      return _terms;
    }
    bool is_zero() const noexcept {
      return _terms.empty();
    }
    DeltaPoly coefficient(Partition const& p) const;

    void add_term(Partition const& p, DeltaPoly const& c);

    LinComb& operator+=(LinComb const& other);
    friend LinComb operator+(LinComb a, LinComb const& b) {
      return a += b;
    }
    LinComb scaled(DeltaPoly const& c) const;

    friend bool operator==(LinComb const&, LinComb const&) = default;

    // "(2+d)*P[1,1]{ {1} {-1} } + 1*P[1,1]{ {1,-1} }"; the zero sum is "0".
    std::string to_string() const;

    std::size_t hash() const noexcept;

   private:
    std::size_t _m = 0;
    std::size_t _n = 0;
    map_type    _terms;
  };

  // alpha * beta = d^m(alpha,beta) alpha beta, extended bilinearly.
  LinComb star_compose(LinComb const& f, LinComb const& g);
  LinComb star_tensor(LinComb const& f, LinComb const& g);
  LinComb star_involute(LinComb const& f);

  // Substitutes a value for d; every coefficient becomes a constant.
  LinComb specialize(LinComb const& f, Rational d);

}  // namespace diagcat

#endif  // DIAGCAT_LIN_COMB_HPP_
