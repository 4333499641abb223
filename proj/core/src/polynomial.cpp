#include "diagcat/polynomial.hpp"

#include <algorithm>  // for max

namespace diagcat {

  DeltaPoly::DeltaPoly(Rational c) {
    if (c.numerator() != 0) {
      _coeffs.push_back(c);
    }
  }

  DeltaPoly DeltaPoly::monomial(std::size_t k, Rational c) {
    DeltaPoly p;
    if (c.numerator() != 0) {
      p._coeffs.assign(k + 1, Rational(0));
      p._coeffs[k] = c;
    }
    return p;
  }

  void DeltaPoly::trim() {
    while (!_coeffs.empty() && _coeffs.back().numerator() == 0) {
      _coeffs.pop_back();
    }
  }

  std::size_t DeltaPoly::num_terms() const noexcept {
    std::size_t count = 0;
    for (auto const& c : _coeffs) {
      count += (c.numerator() != 0);
    }
    return count;
  }

  Rational DeltaPoly::evaluate(Rational d) const {
    Rational result = 0;
    for (auto it = _coeffs.rbegin(); it != _coeffs.rend(); ++it) {
      result = result * d + *it;
    }
    return result;
  }

  DeltaPoly& DeltaPoly::operator+=(DeltaPoly const& other) {
    _coeffs.resize(std::max(_coeffs.size(), other._coeffs.size()), 0);
    for (std::size_t k = 0; k < other._coeffs.size(); ++k) {
      _coeffs[k] += other._coeffs[k];
    }
    trim();
    return *this;
  }

  DeltaPoly& DeltaPoly::operator-=(DeltaPoly const& other) {
    _coeffs.resize(std::max(_coeffs.size(), other._coeffs.size()), 0);
    for (std::size_t k = 0; k < other._coeffs.size(); ++k) {
      _coeffs[k] -= other._coeffs[k];
    }
    trim();
    return *this;
  }

  DeltaPoly& DeltaPoly::operator*=(DeltaPoly const& other) {
    if (is_zero() || other.is_zero()) {
      _coeffs.clear();
      return *this;
    }
    std::vector<Rational> out(_coeffs.size() + other._coeffs.size() - 1, 0);
    for (std::size_t a = 0; a < _coeffs.size(); ++a) {
      for (std::size_t b = 0; b < other._coeffs.size(); ++b) {
        out[a + b] += _coeffs[a] * other._coeffs[b];
      }
    }
    _coeffs = std::move(out);
    trim();
    return *this;
  }

  namespace {
    std::string rational_string(Rational r) {
      std::string out = std::to_string(r.numerator());
      if (r.denominator() != 1) {
        out += "/" + std::to_string(r.denominator());
      }
      return out;
    }
  }  // namespace

  std::string DeltaPoly::to_string() const {
    if (is_zero()) {
      return "0";
    }
    std::string out;
    bool        first = true;
    for (std::size_t k = 0; k < _coeffs.size(); ++k) {
      Rational c = _coeffs[k];
      if (c.numerator() == 0) {
        continue;
      }
      if (!first) {
        out += c.numerator() < 0 ? "-" : "+";
        c = c.numerator() < 0 ? -c : c;
      }
      first = false;
      if (k == 0) {
        out += rational_string(c);
        continue;
      }
      if (c == Rational(-1)) {
        out += "-";
      } else if (c != Rational(1)) {
        out += rational_string(c) + "*";
      }
      out += "d";
      if (k > 1) {
        out += "^" + std::to_string(k);
      }
    }
    return out;
  }

  std::size_t DeltaPoly::hash() const noexcept {
    std::size_t h = 17;
    for (auto const& c : _coeffs) {
      h = h * 31 + static_cast<std::size_t>(c.numerator());
      h = h * 31 + static_cast<std::size_t>(c.denominator());
    }
    return h;
  }

}  // namespace diagcat
