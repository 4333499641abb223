#include "diagcat/rewrite.hpp"

#include <algorithm>  // for equal
#include <set>        // for set
#include <tuple>      // for tie

#include "diagcat/error.hpp"  // for Error

namespace diagcat {

  namespace {
    // The object reached after the first `position` letters.
    std::size_t object_at(Signature const& sig,
                          Word const&      w,
                          std::size_t      position) {
      std::size_t obj = w.dom();
      for (std::size_t k = 0; k < position; ++k) {
        obj = sig.arity(w.letters()[k])->second;
      }
      return obj;
    }
  }  // namespace

  Word apply_relation(Signature const& sig,
                      Word const&      w,
                      Word const&      lhs,
                      Word const&      rhs,
                      std::size_t      position,
                      Direction        dir) {
    Word const& from = dir == Direction::forward ? lhs : rhs;
    Word const& to   = dir == Direction::forward ? rhs : lhs;
    auto const& wl   = w.letters();
    auto const& fl   = from.letters();
    if (position > wl.size() || fl.size() > wl.size() - position
        || !std::equal(fl.begin(), fl.end(), wl.begin() + position)
        || object_at(sig, w, position) != from.dom()) {
      throw Error(ErrorCode::no_match,
                  from.to_string() + " does not occur at position "
                      + std::to_string(position) + " of " + w.to_string());
    }
    std::vector<GenSpec> out(wl.begin(), wl.begin() + position);
    out.insert(out.end(), to.letters().begin(), to.letters().end());
    out.insert(out.end(), wl.begin() + position + fl.size(), wl.end());
    return Word(sig, w.dom(), out);
  }

  Term apply_relation(Term const& t,
                      Term const& lhs,
                      Term const& rhs,
                      std::size_t position,
                      Direction   dir,
                      std::size_t offset) {
    Term const& from = dir == Direction::forward ? lhs : rhs;
    Term const& to   = dir == Direction::forward ? rhs : lhs;
    Layered     lt   = layers_of(t);
    Layered     lf   = layers_of(from);
    Layered     lto  = layers_of(to);
    auto        no_match = [&]() -> Error {
      return Error(ErrorCode::no_match,
                   from.to_string() + " does not occur at layer "
                       + std::to_string(position) + " of " + t.to_string());
    };
    if (position > lt.layers.size()
        || lf.layers.size() > lt.layers.size() - position) {
      throw no_match();
    }
    std::size_t width = position == 0 ? lt.dom
                                      : lt.layers[position - 1].width_out();
    std::size_t p = offset;
    if (!lf.layers.empty()) {
      auto const& first = lt.layers[position];
      if (first.left < lf.layers[0].left) {
        throw no_match();
      }
      p = first.left - lf.layers[0].left;
    }
    if (p + from.dom() > width) {
      throw no_match();
    }
    std::size_t q = width - p - from.dom();
    for (std::size_t k = 0; k < lf.layers.size(); ++k) {
      Layer want = lf.layers[k];
      want.left += p;
      want.right += q;
      if (!(lt.layers[position + k] == want)) {
        throw no_match();
      }
    }
    Layered out;
    out.dom = lt.dom;
    out.layers.assign(lt.layers.begin(), lt.layers.begin() + position);
    for (auto x : lto.layers) {
      x.left += p;
      x.right += q;
      out.layers.push_back(x);
    }
    out.layers.insert(out.layers.end(),
                      lt.layers.begin() + position + lf.layers.size(),
                      lt.layers.end());
    return from_layers(out);
  }

  std::vector<Layered> swap_layers(Layered const& l, std::size_t k) {
    std::vector<Layered> out;
    if (k + 1 >= l.layers.size()) {
      return out;
    }
    Layer const&      A     = l.layers[k];
    Layer const&      B     = l.layers[k + 1];
    std::size_t const W_in  = A.width_in();
    std::size_t const W_out = B.width_out();
    // B acts entirely to the left of A's outputs.
    if (B.left + B.dom <= A.left) {
      Layer b2 = B;
      b2.right = W_in - b2.left - b2.dom;
      Layer a2 = A;
      a2.left  = A.left + B.cod - B.dom;
      a2.right = W_out - a2.left - a2.cod;
      Layered s = l;
      s.layers[k]     = b2;
      s.layers[k + 1] = a2;
      out.push_back(std::move(s));
    }
    // B acts entirely to the right of A's outputs.
    if (B.left >= A.left + A.cod) {
      Layer b2 = B;
      b2.left  = B.left - A.cod + A.dom;
      b2.right = W_in - b2.left - b2.dom;
      Layer a2 = A;
      a2.right = W_out - a2.left - a2.cod;
      Layered s = l;
      s.layers[k]     = b2;
      s.layers[k + 1] = a2;
      if (out.empty() || !(out.front() == s)) {
        out.push_back(std::move(s));
      }
    }
    return out;
  }

  namespace {
    struct LayeredLess {
      bool operator()(Layered const& a, Layered const& b) const {
        if (a.dom != b.dom) {
          return a.dom < b.dom;
        }
        return std::lexicographical_compare(
            a.layers.begin(), a.layers.end(), b.layers.begin(),
            b.layers.end(), [](Layer const& x, Layer const& y) {
              return std::tie(x.gen, x.left, x.dom, x.cod, x.right)
                     < std::tie(y.gen, y.left, y.dom, y.cod, y.right);
            });
      }
    };
  }  // namespace

  std::vector<Layered> interchange_orbit(Layered const& l) {
    std::set<Layered, LayeredLess> seen{l};
    std::vector<Layered>           todo{l};
    while (!todo.empty()) {
      Layered cur = std::move(todo.back());
      todo.pop_back();
      for (std::size_t k = 0; k + 1 < cur.layers.size(); ++k) {
        for (auto& s : swap_layers(cur, k)) {
          if (seen.insert(s).second) {
            todo.push_back(std::move(s));
          }
        }
      }
    }
    return {seen.begin(), seen.end()};
  }

}  // namespace diagcat
