#include "diagcat/term.hpp"

#include "diagcat/error.hpp"  // for Error

namespace diagcat {

  Term Term::id(std::size_t n) {
    Term t;
    t._dom = t._cod = n;
    return t;
  }

  Term Term::edge(GenSpec const& g, std::size_t dom, std::size_t cod) {
    Term t;
    t._kind = Kind::edge;
    t._dom  = dom;
    t._cod  = cod;
    t._gen  = g;
    return t;
  }

  Term Term::compose(Term const& a, Term const& b) {
    if (a._cod != b._dom) {
      throw Error(ErrorCode::type_error,
                  "cannot compose (" + std::to_string(a._dom) + ","
                      + std::to_string(a._cod) + ") with ("
                      + std::to_string(b._dom) + "," + std::to_string(b._cod)
                      + ")");
    }
    if (a.is_identity()) {
      return b;
    }
    if (b.is_identity()) {
      return a;
    }
    Term t;
    t._kind = Kind::compose;
    t._dom  = a._dom;
    t._cod  = b._cod;
    for (Term const* x : {&a, &b}) {
      if (x->_kind == Kind::compose) {
        t._children.insert(
            t._children.end(), x->_children.begin(), x->_children.end());
      } else {
        t._children.push_back(*x);
      }
    }
    return t;
  }

  Term Term::tensor(Term const& a, Term const& b) {
    std::vector<Term> parts;
    for (Term const* x : {&a, &b}) {
      auto const& src = x->_kind == Kind::tensor ? x->_children
                                                 : std::vector<Term>{*x};
      for (auto const& p : src) {
        if (p.is_identity()) {
          if (p._dom == 0) {
            continue;
          }
          if (!parts.empty() && parts.back().is_identity()) {
            parts.back()._dom += p._dom;
            parts.back()._cod += p._cod;
            continue;
          }
        }
        parts.push_back(p);
      }
    }
    if (parts.empty()) {
      return Term::id(0);
    }
    if (parts.size() == 1) {
      return parts.front();
    }
    Term t;
    t._kind = Kind::tensor;
    for (auto const& p : parts) {
      t._dom += p._dom;
      t._cod += p._cod;
    }
    t._children = std::move(parts);
    return t;
  }

  std::size_t Term::size() const noexcept {
    switch (_kind) {
      case Kind::identity:
        return 0;
      case Kind::edge:
        return 1;
      default: {
        std::size_t s = 0;
        for (auto const& c : _children) {
          s += c.size();
        }
        return s;
      }
    }
  }

  std::string Term::to_string() const {
    switch (_kind) {
      case Kind::identity:
        return "id[" + std::to_string(_dom) + "]";
      case Kind::edge:
        return _gen.to_string();
      case Kind::compose: {
        std::string out;
        for (std::size_t k = 0; k < _children.size(); ++k) {
          out += (k == 0 ? "" : " ; ") + _children[k].to_string();
        }
        return out;
      }
      case Kind::tensor: {
        std::string out;
        for (std::size_t k = 0; k < _children.size(); ++k) {
          auto const& c = _children[k];
          out += k == 0 ? "" : " # ";
          out += c._kind == Kind::compose ? "(" + c.to_string() + ")"
                                          : c.to_string();
        }
        return out;
      }
    }
    return "";
  }

  namespace {
    void collect(Term const&         t,
                 std::size_t         left,
                 std::size_t         right,
                 std::vector<Layer>& out) {
      switch (t.kind()) {
        case Term::Kind::identity:
          return;
        case Term::Kind::edge:
          out.push_back(Layer{t.gen(), left, t.dom(), t.cod(), right});
          return;
        case Term::Kind::compose:
          for (auto const& c : t.children()) {
            collect(c, left, right, out);
          }
          return;
        case Term::Kind::tensor: {
          auto const& parts = t.children();
          std::size_t after = 0;
          for (auto const& c : parts) {
            after += c.dom();
          }
          std::size_t before = 0;
          for (auto const& c : parts) {
            after -= c.dom();
            collect(c, left + before, right + after, out);
            before += c.cod();
          }
          return;
        }
      }
    }
  }  // namespace

  Layered layers_of(Term const& t) {
    Layered l;
    l.dom = t.dom();
    collect(t, 0, 0, l.layers);
    return l;
  }

  Term from_layers(Layered const& l) {
    Term t = Term::id(l.dom);
    for (auto const& x : l.layers) {
      Term layer = Term::tensor(
          Term::tensor(Term::id(x.left), Term::edge(x.gen, x.dom, x.cod)),
          Term::id(x.right));
      t = Term::compose(t, layer);
    }
    return t;
  }

  Term layerize(Term const& t) {
    return from_layers(layers_of(t));
  }

}  // namespace diagcat
