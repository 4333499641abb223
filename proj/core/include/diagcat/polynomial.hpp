#ifndef DIAGCAT_POLYNOMIAL_HPP_
#define DIAGCAT_POLYNOMIAL_HPP_

#include <cstddef>  // for size_t
#include <string>   // for string
#include <vector>   // for vector

#include <boost/rational.hpp>  // for rational

namespace diagcat {

  using Rational = boost::rational<long long>;

  // A polynomial in the formal loop parameter d with exact rational
  // coefficients. The zero polynomial has no stored coefficients.
  class DeltaPoly {
   public:
    DeltaPoly() = default;
    DeltaPoly(Rational c);  // NOLINT(runtime/explicit)
    DeltaPoly(long long c) : DeltaPoly(Rational(c)) {}  // NOLINT

    // c * d^k
    static DeltaPoly monomial(std::size_t k, Rational c = 1);

    bool is_zero() const noexcept {
      return _coeffs.empty();
    }
    // Degree of the zero polynomial is reported as 0.
    std::size_t degree() const noexcept {
      return _coeffs.empty() ? 0 : _coeffs.size() - 1;
    }
    Rational coefficient(std::size_t k) const noexcept {
      return k < _coeffs.size() ? _coeffs[k] : Rational(0);
    }
    std::size_t num_terms() const noexcept;

    Rational evaluate(Rational d) const;

    DeltaPoly& operator+=(DeltaPoly const& other);
    DeltaPoly& operator-=(DeltaPoly const& other);
    DeltaPoly& operator*=(DeltaPoly const& other);

    friend DeltaPoly operator+(DeltaPoly a, DeltaPoly const& b) {
      return a += b;
    }
    friend DeltaPoly operator-(DeltaPoly a, DeltaPoly const& b) {
      return a -= b;
    }
    friend DeltaPoly operator*(DeltaPoly a, DeltaPoly const& b) {
      return a *= b;
    }
    friend bool operator==(DeltaPoly const&, DeltaPoly const&) = default;

    // Ascending powers, d for the loop parameter: "2+d", "1/2*d^2", "0".
    std::string to_string() const;

    std::size_t hash() const noexcept;

   private:
    void                  trim();
    std::vector<Rational> _coeffs;
  };

}  // namespace diagcat

#endif  // DIAGCAT_POLYNOMIAL_HPP_
