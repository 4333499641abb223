#include "diagcat/signature.hpp"

#include <algorithm>  // for any_of, all_of

namespace diagcat {

  Signature::Signature(std::string             name,
                       std::size_t             step,
                       std::size_t             min_object,
                       std::vector<EdgeSchema> edges)
      : _name(std::move(name)),
        _step(step),
        _min_object(min_object),
        _edges(std::move(edges)) {}

  bool Signature::has_family(GenFamily f) const noexcept {
    return std::any_of(_edges.begin(), _edges.end(), [f](auto const& e) {
      return e.family == f;
    });
  }

  std::optional<GenFamily>
  Signature::family_for(std::string_view name) const noexcept {
    for (auto const& e : _edges) {
      if (grammar_name(e.family) == name) {
        return e.family;
      }
    }
    return std::nullopt;
  }

  std::optional<std::pair<std::size_t, std::size_t>>
  Signature::arity(GenSpec const& g) const noexcept {
    if (!g.indices_valid()) {
      return std::nullopt;
    }
    for (auto const& e : _edges) {
      if (e.family != g.family) {
        continue;
      }
      switch (e.shape) {
        case EdgeShape::letter:
          if (g.n < _min_object) {
            return std::nullopt;
          }
          return std::pair{g.n, g.n};
        case EdgeShape::up:
          if (g.n < _min_object) {
            return std::nullopt;
          }
          return std::pair{g.n, g.n + _step};
        case EdgeShape::down:
          if (g.n < _min_object) {
            return std::nullopt;
          }
          return std::pair{g.n + _step, g.n};
        case EdgeShape::fixed:
          return std::pair{e.dom, e.cod};
      }
    }
    return std::nullopt;
  }

  std::vector<GenSpec> Signature::letters(std::size_t n) const {
    std::vector<GenSpec> out;
    if (n < _min_object) {
      return out;
    }
    for (auto const& e : _edges) {
      if (e.shape != EdgeShape::letter) {
        continue;
      }
      for (std::size_t i = 1; i <= n; ++i) {
        auto g = GenSpec::indexed(e.family, i, n);
        if (g.indices_valid()) {
          out.push_back(g);
        }
      }
    }
    return out;
  }

  std::vector<GenSpec> Signature::edges_from(std::size_t n) const {
    std::vector<GenSpec> out = letters(n);
    for (auto const& e : _edges) {
      if (e.shape == EdgeShape::up && n >= _min_object) {
        out.push_back(GenSpec::graded(e.family, n));
      } else if (e.shape == EdgeShape::down && n >= _step + _min_object) {
        out.push_back(GenSpec::graded(e.family, n - _step));
      } else if (e.shape == EdgeShape::fixed && e.dom == n) {
        out.push_back(GenSpec::nullary(e.family));
      }
    }
    return out;
  }

  std::vector<GenSpec> Signature::tensor_generators() const {
    std::vector<GenSpec> out;
    for (auto const& e : _edges) {
      if (e.shape == EdgeShape::fixed) {
        out.push_back(GenSpec::nullary(e.family));
      }
    }
    return out;
  }

  bool Signature::is_tensor() const noexcept {
    return std::all_of(_edges.begin(), _edges.end(), [](auto const& e) {
      return e.shape == EdgeShape::fixed;
    });
  }

}  // namespace diagcat
