#include "diagcat/word.hpp"

#include "diagcat/error.hpp"  // for Error

namespace diagcat {

  Word::Word(Signature const& sig, std::size_t dom, std::vector<GenSpec> letters)
      : _dom(dom), _cod(dom) {
    for (auto const& g : letters) {
      push_back(sig, g);
    }
  }

  void Word::push_back(Signature const& sig, GenSpec const& g) {
    auto a = sig.arity(g);
    if (!a) {
      throw Error(ErrorCode::unknown_edge,
                  g.to_string() + " is not an edge of " + sig.name());
    }
    if (a->first != _cod) {
      throw Error(ErrorCode::type_error,
                  "cannot follow a path ending at " + std::to_string(_cod)
                      + " with " + g.to_string() + ": ("
                      + std::to_string(a->first) + ","
                      + std::to_string(a->second) + ")");
    }
    _letters.push_back(g);
    _cod = a->second;
  }

  void Word::append(Word const& other) {
    if (other._dom != _cod) {
      throw Error(ErrorCode::type_error,
                  "cannot compose (" + std::to_string(_dom) + ","
                      + std::to_string(_cod) + ") with ("
                      + std::to_string(other._dom) + ","
                      + std::to_string(other._cod) + ")");
    }
    _letters.insert(_letters.end(), other._letters.begin(),
                    other._letters.end());
    _cod = other._cod;
  }

  Term Word::to_term(Signature const& sig) const {
    Term t = Term::id(_dom);
    for (auto const& g : _letters) {
      auto a = sig.arity(g);
      if (!a) {
        throw Error(ErrorCode::unknown_edge,
                    g.to_string() + " is not an edge of " + sig.name());
      }
      t = Term::compose(t, Term::edge(g, a->first, a->second));
    }
    return t;
  }

  std::string Word::to_string() const {
    if (_letters.empty()) {
      return "id[" + std::to_string(_dom) + "]";
    }
    std::string out;
    for (std::size_t k = 0; k < _letters.size(); ++k) {
      out += (k == 0 ? "" : " ; ") + _letters[k].to_string();
    }
    return out;
  }

  Word concat(Word a, Word const& b) {
    a.append(b);
    return a;
  }

}  // namespace diagcat
