#include "diagcat/lin_comb.hpp"

#include "diagcat/error.hpp"  // for Error

namespace diagcat {

  LinComb LinComb::basis(Partition const& p, DeltaPoly c) {
    LinComb out(p.dom(), p.cod());
    out.add_term(p, c);
    return out;
  }

  DeltaPoly LinComb::coefficient(Partition const& p) const {
    auto it = _terms.find(p);
    return it == _terms.end() ? DeltaPoly() : it->second;
  }

  void LinComb::add_term(Partition const& p, DeltaPoly const& c) {
    if (p.dom() != _m || p.cod() != _n) {
      throw Error(ErrorCode::shape_mismatch,
                  "diagram " + p.to_string() + " is not in hom("
                      + std::to_string(_m) + "," + std::to_string(_n) + ")");
    }
    if (c.is_zero()) {
      return;
    }
    auto [it, inserted] = _terms.emplace(p, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) {
        _terms.erase(it);
      }
    }
  }

  LinComb& LinComb::operator+=(LinComb const& other) {
    if (other._m != _m || other._n != _n) {
      throw Error(ErrorCode::shape_mismatch,
                  "cannot add hom(" + std::to_string(_m) + ","
                      + std::to_string(_n) + ") and hom("
                      + std::to_string(other._m) + ","
                      + std::to_string(other._n) + ")");
    }
    for (auto const& [p, c] : other._terms) {
      add_term(p, c);
    }
    return *this;
  }

  LinComb LinComb::scaled(DeltaPoly const& c) const {
    LinComb out(_m, _n);
    for (auto const& [p, x] : _terms) {
      out.add_term(p, x * c);
    }
    return out;
  }

  std::string LinComb::to_string() const {
    if (_terms.empty()) {
      return "0";
    }
    std::string out;
    for (auto const& [p, c] : _terms) {
      if (!out.empty()) {
        out += " + ";
      }
      if (c.num_terms() > 1) {
        out += "(" + c.to_string() + ")";
      } else {
        out += c.to_string();
      }
      out += "*" + p.to_string();
    }
    return out;
  }

  std::size_t LinComb::hash() const noexcept {
    std::size_t h = _m * 131 + _n;
    for (auto const& [p, c] : _terms) {
      h = h * 1000003u + p.hash();
      h = h * 1000003u + c.hash();
    }
    return h;
  }

  LinComb star_compose(LinComb const& f, LinComb const& g) {
    if (f.cod() != g.dom()) {
      throw Error(ErrorCode::shape_mismatch,
                  "cannot compose hom(" + std::to_string(f.dom()) + ","
                      + std::to_string(f.cod()) + ") with hom("
                      + std::to_string(g.dom()) + ","
                      + std::to_string(g.cod()) + ")");
    }
    LinComb out(f.dom(), g.cod());
    for (auto const& [a, x] : f.terms()) {
      for (auto const& [b, y] : g.terms()) {
        auto [ab, floating] = compose(a, b);
        out.add_term(ab, x * y * DeltaPoly::monomial(floating));
      }
    }
    return out;
  }

  LinComb star_tensor(LinComb const& f, LinComb const& g) {
    LinComb out(f.dom() + g.dom(), f.cod() + g.cod());
    for (auto const& [a, x] : f.terms()) {
      for (auto const& [b, y] : g.terms()) {
        out.add_term(tensor(a, b), x * y);
      }
    }
    return out;
  }

  LinComb star_involute(LinComb const& f) {
    LinComb out(f.cod(), f.dom());
    for (auto const& [a, x] : f.terms()) {
      out.add_term(involute(a), x);
    }
    return out;
  }

  LinComb specialize(LinComb const& f, Rational d) {
    LinComb out(f.dom(), f.cod());
    for (auto const& [a, x] : f.terms()) {
      out.add_term(a, DeltaPoly(x.evaluate(d)));
    }
    return out;
  }

}  // namespace diagcat
