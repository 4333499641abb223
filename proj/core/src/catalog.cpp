#include "diagcat/catalog.hpp"

#include <cctype>  // for isdigit, isspace
#include <map>     // for map
#include <mutex>   // for once_flag

#include "diagcat/error.hpp"   // for Error
#include "diagcat/parser.hpp"  // for parse_term

namespace diagcat {

  std::string_view level_name(Level level) noexcept {
    switch (level) {
      case Level::monoid:
        return "monoid";
      case Level::category:
        return "category";
      case Level::tensor:
        return "tensor";
    }
    return "?";
  }

  ////////////////////////////////////////////////////////////////////////
  // Templates
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Value of an index expression such as "n+1" or "i-1", or nullopt when
    // the value is negative.
    std::optional<std::size_t> eval_expr(std::string_view e,
                                         std::size_t      n,
                                         std::size_t      i,
                                         std::size_t      j) {
      long        value = 0;
      int         sign  = 1;
      std::size_t pos   = 0;
      while (pos < e.size()) {
        char c = e[pos];
        if (std::isspace(static_cast<unsigned char>(c))) {
          ++pos;
        } else if (c == '+') {
          sign = 1;
          ++pos;
        } else if (c == '-') {
          sign = -1;
          ++pos;
        } else if (c == 'n' || c == 'i' || c == 'j') {
          value += sign * long(c == 'n' ? n : c == 'i' ? i : j);
          ++pos;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
          long k = 0;
          while (pos < e.size()
                 && std::isdigit(static_cast<unsigned char>(e[pos]))) {
            k = 10 * k + (e[pos++] - '0');
          }
          value += sign * k;
        } else {
          throw Error(ErrorCode::syntax_error,
                      "bad index expression '" + std::string(e) + "'");
        }
      }
      if (value < 0) {
        return std::nullopt;
      }
      return std::size_t(value);
    }

    bool uses(std::string_view text, char var) {
      bool inside = false;
      for (char c : text) {
        if (c == '[') {
          inside = true;
        } else if (c == ']') {
          inside = false;
        } else if (inside && c == var) {
          return true;
        }
      }
      return false;
    }

    bool holds(Constraint c, std::size_t n, std::size_t i, std::size_t j) {
      auto dist = i > j ? i - j : j - i;
      switch (c) {
        case Constraint::none:
          return true;
        case Constraint::i_lt_j:
          return i < j;
        case Constraint::far:
          return dist > 1;
        case Constraint::adjacent:
          return dist == 1;
        case Constraint::j_off:
          return j != i && j != i + 1;
        case Constraint::j_on:
          return j == i || j == i + 1;
        case Constraint::i_le_n_minus_2:
          return i + 2 <= n;
      }
      return false;
    }

    std::string index_string(std::optional<std::size_t> const& x) {
      return x ? std::to_string(*x) : "-";
    }
  }  // namespace

  std::optional<std::string> expand_template(std::string_view text,
                                             std::size_t      n,
                                             std::size_t      i,
                                             std::size_t      j) {
    std::string out;
    std::size_t pos = 0;
    while (pos < text.size()) {
      char c = text[pos];
      if (c != '[') {
        out += c;
        ++pos;
        continue;
      }
      auto close = text.find(']', pos);
      if (close == std::string_view::npos) {
        throw Error(ErrorCode::syntax_error,
                    "unterminated '[' in template '" + std::string(text) + "'");
      }
      out += '[';
      std::string_view inner = text.substr(pos + 1, close - pos - 1);
      std::size_t      start = 0;
      while (true) {
        auto comma = inner.find(',', start);
        auto value = eval_expr(inner.substr(start, comma - start), n, i, j);
        if (!value) {
          return std::nullopt;
        }
        out += std::to_string(*value);
        if (comma == std::string_view::npos) {
          break;
        }
        out += ',';
        start = comma + 1;
      }
      out += ']';
      pos = close + 1;
    }
    return out;
  }

  std::string RelationInstance::to_line(bool linear) const {
    auto side = [linear](Term const& t, unsigned k) {
      if (linear && k > 0) {
        return "d^" + std::to_string(k) + " * (" + t.to_string() + ")";
      }
      return t.to_string();
    };
    return id + " " + index_string(n) + " " + index_string(i) + " "
           + index_string(j) + " : " + side(lhs, lhs_delta)
           + " == " + side(rhs, rhs_delta);
  }

  ////////////////////////////////////////////////////////////////////////
  // Presentation
  ////////////////////////////////////////////////////////////////////////

  Presentation::Presentation(std::string                 id,
                             Level                       level,
                             Signature                   signature,
                             std::vector<RelationSchema> relations,
                             SemanticsTag                semantics,
                             bool                        linear)
      : _id(std::move(id)),
        _level(level),
        _signature(std::move(signature)),
        _relations(std::move(relations)),
        _semantics(semantics),
        _linear(linear) {}

  std::vector<RelationInstance>
  Presentation::instantiate(RelationSchema const& r, std::size_t n_max) const {
    std::vector<RelationInstance> out;
    auto const text  = r.lhs + " " + r.rhs;
    bool const has_n = uses(text, 'n');
    bool const has_i = uses(text, 'i');
    bool const has_j = uses(text, 'j');
    std::size_t const n_lo = has_n ? _signature.min_object() : 0;
    std::size_t const n_hi = has_n ? n_max : 0;
    for (std::size_t n = n_lo; n <= n_hi; ++n) {
      std::size_t const i_lo = has_i ? 1 : 0, i_hi = has_i ? n + 1 : 0;
      std::size_t const j_lo = has_j ? 1 : 0, j_hi = has_j ? n + 1 : 0;
      for (std::size_t i = i_lo; i <= i_hi; ++i) {
        for (std::size_t j = j_lo; j <= j_hi; ++j) {
          if (!holds(r.constraint, n, i, j)) {
            continue;
          }
          auto lhs = expand_template(r.lhs, n, i, j);
          auto rhs = expand_template(r.rhs, n, i, j);
          if (!lhs || !rhs) {
            continue;
          }
          Term tl, tr;
          try {
            tl = parse_term(*lhs, _signature);
            tr = parse_term(*rhs, _signature);
          } catch (Error const& e) {
            // An index outside its range: this instance does not exist.
            if (e.code() == ErrorCode::syntax_error) {
              continue;
            }
            throw;
          }
          if (tl.dom() != tr.dom() || tl.cod() != tr.cod()) {
            throw Error(ErrorCode::type_error,
                        _id + " relation " + r.id + ": " + tl.to_string()
                            + " and " + tr.to_string()
                            + " have different arities");
          }
          RelationInstance inst;
          inst.id = r.id;
          if (has_n) {
            inst.n = n;
          }
          if (has_i) {
            inst.i = i;
          }
          if (has_j) {
            inst.j = j;
          }
          inst.lhs       = std::move(tl);
          inst.rhs       = std::move(tr);
          inst.lhs_delta = r.lhs_delta;
          inst.rhs_delta = r.rhs_delta;
          out.push_back(std::move(inst));
        }
      }
    }
    return out;
  }

  std::vector<RelationInstance>
  Presentation::instantiate(std::size_t n_max) const {
    std::vector<RelationInstance> out;
    for (auto const& r : _relations) {
      auto part = instantiate(r, n_max);
      out.insert(out.end(),
                 std::make_move_iterator(part.begin()),
                 std::make_move_iterator(part.end()));
    }
    return out;
  }

  std::vector<std::string> Presentation::dump(std::size_t n_max) const {
    std::vector<std::string> out;
    for (auto const& inst : instantiate(n_max)) {
      out.push_back(inst.to_line(_linear));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Catalog data
  ////////////////////////////////////////////////////////////////////////

  namespace {
    using C = Constraint;

    class Relations {
     public:
      Relations& group(std::string name) {
        _group   = std::move(name);
        _counter = 0;
        return *this;
      }
      Relations& rel(std::string lhs,
                     std::string rhs,
                     C           c         = C::none,
                     unsigned    lhs_delta = 0,
                     unsigned    rhs_delta = 0) {
        _out.push_back({_group + "." + std::to_string(++_counter),
                        std::move(lhs),
                        std::move(rhs),
                        c,
                        lhs_delta,
                        rhs_delta});
        return *this;
      }
      // u1 = u2 = ... = uk as the consecutive equalities.
      Relations& chain(std::vector<std::string> const& sides, C c = C::none) {
        for (std::size_t k = 0; k + 1 < sides.size(); ++k) {
          rel(sides[k], sides[k + 1], c);
        }
        return *this;
      }
      // theta x lambda and rho x theta shifts for each letter name.
      Relations& shifts(std::vector<std::string> const& names,
                        std::string const&              shift) {
        for (auto const& t : names) {
          rel(t + "[i,n] ; l[n]", "l[n] ; " + t + "[i," + shift + "]");
        }
        for (auto const& t : names) {
          rel("r[n] ; " + t + "[i,n]", t + "[i," + shift + "] ; r[n]");
        }
        return *this;
      }
      std::vector<RelationSchema> done() {
        return std::move(_out);
      }

     private:
      std::string                 _group;
      unsigned                    _counter = 0;
      std::vector<RelationSchema> _out;
    };

    Signature category_signature(std::string                   name,
                                 std::size_t                   step,
                                 std::size_t                   min_object,
                                 std::vector<GenFamily> const& letters,
                                 GenFamily                     rho) {
      std::vector<EdgeSchema> edges;
      for (auto f : letters) {
        edges.push_back({f, EdgeShape::letter});
      }
      edges.push_back({GenFamily::lambda, EdgeShape::up});
      edges.push_back({rho, EdgeShape::down});
      return Signature(std::move(name), step, min_object, std::move(edges));
    }

    Signature without_graded(Signature const& sig, std::string name) {
      std::vector<EdgeSchema> edges;
      for (auto const& e : sig.schemas()) {
        if (e.shape == EdgeShape::letter) {
          edges.push_back(e);
        }
      }
      return Signature(std::move(name), sig.step(), sig.min_object(),
                       std::move(edges));
    }

    EdgeSchema fixed(GenFamily f, std::size_t dom, std::size_t cod) {
      return {f, EdgeShape::fixed, dom, cod};
    }

    bool mentions(RelationSchema const& r, std::string_view token) {
      return r.lhs.find(token) != std::string::npos
             || r.rhs.find(token) != std::string::npos;
    }

    std::vector<RelationSchema> drop(std::vector<RelationSchema> const& rs,
                                     std::vector<std::string_view> tokens) {
      std::vector<RelationSchema> out;
      for (auto const& r : rs) {
        bool keep = true;
        for (auto t : tokens) {
          // "s[" must not match inside "si[", which starts with "si".
          keep = keep && !mentions(r, t);
        }
        if (keep) {
          out.push_back(r);
        }
      }
      return out;
    }

    using F = GenFamily;

    std::vector<RelationSchema> P_relations() {
      return Relations()
          .group("P1")
          .rel("s[i,n] ; s[i,n]", "id[n]")
          .rel("e[i,n] ; e[i,n]", "e[i,n]", C::none, 0, 1)
          .chain({"t[i,n] ; t[i,n]", "t[i,n]", "t[i,n] ; s[i,n]",
                  "s[i,n] ; t[i,n]"})
          .group("P2")
          .rel("s[i,n] ; e[i,n]", "e[i+1,n] ; s[i,n]")
          .rel("e[i,n] ; e[i+1,n] ; s[i,n]", "e[i,n] ; e[i+1,n]")
          .group("P3")
          .rel("e[i,n] ; e[j,n]", "e[j,n] ; e[i,n]", C::i_lt_j)
          .rel("t[i,n] ; t[j,n]", "t[j,n] ; t[i,n]", C::i_lt_j)
          .group("P4")
          .rel("s[i,n] ; s[j,n]", "s[j,n] ; s[i,n]", C::far)
          .rel("s[i,n] ; t[j,n]", "t[j,n] ; s[i,n]", C::far)
          .group("P5")
          .rel("s[i,n] ; s[j,n] ; s[i,n]", "s[j,n] ; s[i,n] ; s[j,n]",
               C::adjacent)
          .rel("s[i,n] ; t[j,n] ; s[i,n]", "s[j,n] ; t[i,n] ; s[j,n]",
               C::adjacent)
          .group("P6")
          .rel("s[i,n] ; e[j,n]", "e[j,n] ; s[i,n]", C::j_off)
          .rel("t[i,n] ; e[j,n]", "e[j,n] ; t[i,n]", C::j_off)
          .group("P7")
          .rel("t[i,n] ; e[j,n] ; t[i,n]", "t[i,n]", C::j_on)
          .rel("e[j,n] ; t[i,n] ; e[j,n]", "e[j,n]", C::j_on)
          .group("P8")
          .rel("l[n] ; r[n]", "id[n]", C::none, 0, 1)
          .rel("r[n] ; l[n]", "e[n+1,n+1]")
          .group("P9")
          .shifts({"s", "e", "t"}, "n+1")
          .done();
    }

    std::vector<RelationSchema> B_relations() {
      return Relations()
          .group("B1")
          .rel("s[i,n] ; s[i,n]", "id[n]")
          .rel("t[i,n] ; t[i,n]", "t[i,n]", C::none, 0, 1)
          .chain({"t[i,n]", "t[i,n] ; s[i,n]", "s[i,n] ; t[i,n]"})
          .group("B2")
          .rel("s[i,n] ; s[j,n]", "s[j,n] ; s[i,n]", C::far)
          .rel("t[i,n] ; t[j,n]", "t[j,n] ; t[i,n]", C::far)
          .rel("s[i,n] ; t[j,n]", "t[j,n] ; s[i,n]", C::far)
          .group("B3")
          .rel("s[i,n] ; s[j,n] ; s[i,n]", "s[j,n] ; s[i,n] ; s[j,n]",
               C::adjacent)
          .rel("s[i,n] ; t[j,n] ; s[i,n]", "s[j,n] ; t[i,n] ; s[j,n]",
               C::adjacent)
          .rel("t[i,n] ; s[j,n] ; t[i,n]", "t[i,n]", C::adjacent)
          .group("B4")
          .rel("l[n] ; r[n]", "id[n]", C::none, 0, 1)
          .rel("r[n] ; l[n]", "t[n+1,n+2]")
          .group("B5")
          .shifts({"s", "t"}, "n+2")
          .done();
    }

    std::vector<RelationSchema> TL_relations() {
      return Relations()
          .group("TL1")
          .rel("t[i,n] ; t[i,n]", "t[i,n]", C::none, 0, 1)
          .rel("t[i,n] ; t[j,n]", "t[j,n] ; t[i,n]", C::far)
          .rel("t[i,n] ; t[j,n] ; t[i,n]", "t[i,n]", C::adjacent)
          .group("TL2")
          .rel("l[n] ; r[n]", "id[n]", C::none, 0, 1)
          .rel("r[n] ; l[n]", "t[n+1,n+2]")
          .shifts({"t"}, "n+2")
          .done();
    }

    // The mu/eta relations shared by the vine catalogs.
    Relations& mu_eta_chains(Relations& r) {
      return r
          .chain({"m[i,n]", "m[i,n] ; m[i,n]", "h[i,n] ; m[i,n]",
                  "s[i,n] ; m[i,n]", "h[i,n] ; s[i,n]"})
          .chain({"h[i,n]", "h[i,n] ; h[i,n]", "m[i,n] ; h[i,n]",
                  "s[i,n] ; h[i,n]", "m[i,n] ; s[i,n]"});
    }

    Relations& mu_eta_adjacent(Relations& r) {
      return r.rel("m[i,n] ; m[i+1,n]", "m[i,n] ; s[i+1,n]")
          .rel("m[i,n] ; h[i+1,n]", "m[i,n]")
          .rel("h[i+1,n] ; h[i,n]", "h[i+1,n] ; s[i,n]")
          .rel("h[i+1,n] ; m[i,n]", "h[i+1,n]");
    }

    Relations& mu_eta_triples(Relations& r) {
      return r
          .chain({"m[i+1,n] ; m[i,n]", "m[i,n] ; m[i+1,n] ; m[i,n]",
                  "m[i+1,n] ; m[i,n] ; m[i+1,n]"})
          .chain({"h[i,n] ; h[i+1,n]", "h[i,n] ; h[i+1,n] ; h[i,n]",
                  "h[i+1,n] ; h[i,n] ; h[i+1,n]"});
    }

    Relations& mu_eta_sigma(Relations& r) {
      return r
          .rel("m[i+1,n] ; s[i,n]",
               "s[i,n] ; s[i+1,n] ; m[i,n] ; m[i+1,n]")
          .rel("h[i,n] ; s[i+1,n]",
               "s[i+1,n] ; s[i,n] ; h[i+1,n] ; h[i,n]");
    }

    Relations& far_commute(Relations& r, std::vector<std::string> const& xs) {
      for (auto const& x : xs) {
        r.rel(x + "[i,n] ; " + x + "[j,n]", x + "[j,n] ; " + x + "[i,n]",
              C::far);
      }
      return r;
    }

    std::vector<RelationSchema> PV_relations() {
      Relations r;
      r.group("PV1")
          .chain({"s[i,n] ; si[i,n]", "si[i,n] ; s[i,n]", "id[n]"})
          .rel("e[i,n] ; e[i,n]", "e[i,n]")
          .rel("e[i,n] ; e[j,n]", "e[j,n] ; e[i,n]", C::i_lt_j);
      mu_eta_chains(r.group("PV2"));
      mu_eta_adjacent(r.group("PV3"));
      mu_eta_triples(r.group("PV4"));
      r.group("PV5")
          .rel("m[i,n] ; e[i+1,n]", "m[i,n]")
          .rel("e[i+1,n] ; m[i,n]", "e[i+1,n]")
          .rel("h[i,n] ; e[i,n]", "h[i,n]")
          .rel("e[i,n] ; h[i,n]", "e[i,n]");
      mu_eta_sigma(r.group("PV6"));
      r.group("PV7")
          .rel("s[i,n] ; e[i,n]", "e[i+1,n] ; s[i,n]")
          .rel("s[i,n] ; e[i+1,n]", "e[i,n] ; s[i,n]")
          .rel("s[i,n] ; s[i,n] ; e[i,n]", "e[i,n]");
      r.group("PV8").chain({"s[i,n] ; e[i,n] ; e[i+1,n]",
                            "e[i,n] ; e[i+1,n]",
                            "m[i,n] ; e[i,n]",
                            "h[i,n] ; e[i+1,n]"});
      far_commute(r.group("PV9"), {"s", "m", "h"});
      r.group("PV10")
          .rel("s[i,n] ; m[j,n]", "m[j,n] ; s[i,n]", C::far)
          .rel("s[i,n] ; h[j,n]", "h[j,n] ; s[i,n]", C::far);
      r.group("PV11").rel("s[i,n] ; s[j,n] ; s[i,n]",
                          "s[j,n] ; s[i,n] ; s[j,n]",
                          C::adjacent);
      r.group("PV12")
          .rel("m[i,n] ; h[j,n]", "h[j,n] ; m[i,n]", C::j_off)
          .rel("s[i,n] ; e[j,n]", "e[j,n] ; s[i,n]", C::j_off);
      r.group("PV13")
          .rel("m[i,n] ; e[j,n]", "e[j,n] ; m[i,n]", C::j_off)
          .rel("h[i,n] ; e[j,n]", "e[j,n] ; h[i,n]", C::j_off);
      r.group("PV14")
          .rel("l[n] ; r[n]", "id[n]")
          .rel("r[n] ; l[n]", "e[n+1,n+1]");
      r.group("PV15").shifts({"s", "si", "e", "m", "h"}, "n+1");
      return r.done();
    }

    std::vector<RelationSchema> IB_relations() {
      Relations r;
      r.group("IB1")
          .chain({"s[i,n] ; si[i,n]", "si[i,n] ; s[i,n]", "id[n]"})
          .rel("e[i,n] ; e[i,n]", "e[i,n]")
          .rel("e[i,n] ; e[j,n]", "e[j,n] ; e[i,n]", C::i_lt_j)
          .rel("s[i,n] ; e[j,n]", "e[j,n] ; s[i,n]", C::j_off);
      r.group("IB2")
          .rel("s[i,n] ; e[i,n]", "e[i+1,n] ; s[i,n]")
          .rel("s[i,n] ; e[i+1,n]", "e[i,n] ; s[i,n]")
          .rel("s[i,n] ; s[i,n] ; e[i,n]", "e[i,n]")
          .rel("s[i,n] ; e[i,n] ; e[i+1,n]", "e[i,n] ; e[i+1,n]");
      far_commute(r.group("IB3"), {"s"});
      r.rel("s[i,n] ; s[j,n] ; s[i,n]", "s[j,n] ; s[i,n] ; s[j,n]",
            C::adjacent);
      r.group("IB4")
          .rel("l[n] ; r[n]", "id[n]")
          .rel("r[n] ; l[n]", "e[n+1,n+1]");
      r.group("IB5").shifts({"s", "si", "e"}, "n+1");
      return r.done();
    }

    std::vector<RelationSchema> V_relations() {
      Relations r;
      r.group("V1").chain({"s[i,n] ; si[i,n]", "si[i,n] ; s[i,n]", "id[n]"});
      mu_eta_chains(r.group("V2"));
      r.group("V3")
          .rel("m[i,n] ; m[i+1,n]", "m[i,n] ; s[i+1,n]")
          .rel("h[i+1,n] ; h[i,n]", "h[i+1,n] ; s[i,n]")
          .rel("m[i,n] ; h[i+1,n]", "m[i,n]")
          .rel("h[i+1,n] ; m[i,n]", "h[i+1,n]");
      mu_eta_triples(r.group("V4"));
      mu_eta_sigma(r.group("V5"));
      far_commute(r.group("V6"), {"s", "m", "h"});
      r.group("V7")
          .rel("s[i,n] ; m[j,n]", "m[j,n] ; s[i,n]", C::far)
          .rel("s[i,n] ; h[j,n]", "h[j,n] ; s[i,n]", C::far);
      r.group("V8").rel("s[i,n] ; s[j,n] ; s[i,n]",
                        "s[j,n] ; s[i,n] ; s[j,n]",
                        C::adjacent);
      r.group("V9").rel("m[i,n] ; h[j,n]", "h[j,n] ; m[i,n]", C::j_off);
      r.group("V10")
          .rel("l[n] ; r[n]", "id[n]")
          .rel("r[n] ; l[n]", "m[n,n+1]");
      r.group("V11");
      for (std::string t : {"s", "si", "m", "h"}) {
        r.rel(t + "[i,n] ; l[n]", "l[n] ; " + t + "[i,n+1]");
      }
      r.group("V12");
      for (std::string t : {"s", "si", "m", "h"}) {
        r.rel("r[n] ; " + t + "[i,n]", t + "[i,n+1] ; r[n]",
              C::i_le_n_minus_2);
      }
      r.group("V13");
      for (std::string t : {"s", "si", "m", "h"}) {
        r.rel("r[n] ; " + t + "[n-1,n]",
              "m[n,n+1] ; " + t + "[n-1,n+1] ; r[n]");
      }
      return r.done();
    }

    // Adjoining sigma^2 = id turns the vine catalogs into presentations of
    // the transformation categories.
    std::vector<RelationSchema> with_sigma_squared(
        std::vector<RelationSchema> rs, std::string const& prefix) {
      rs.push_back({prefix + ".1", "s[i,n] ; s[i,n]", "id[n]"});
      return rs;
    }

    std::string const braid_X = "(X # id[1]) ; (id[1] # X) ; (X # id[1])";
    std::string const braid_X_rhs
        = "(id[1] # X) ; (X # id[1]) ; (id[1] # X)";
    std::string const V_assoc_lhs = "(V # id[1]) ; V";
    std::string const V_assoc_rhs = "(id[1] # V) ; V";
    std::string const V_cross_lhs = "(id[1] # V) ; X";
    std::string const V_cross_rhs = "(X # id[1]) ; (id[1] # X) ; (V # id[1])";

    std::vector<RelationSchema> P_tensor_relations() {
      return Relations()
          .group("P1'")
          .rel("X ; X", "id[2]")
          .rel("Uu ; U", "id[0]", C::none, 0, 1)
          .group("P2'")
          .chain({"D ; D", "D", "D ; X", "X ; D"})
          .rel("(D # id[1]) ; (id[1] # D)", "(id[1] # D) ; (D # id[1])")
          .group("P3'")
          .rel(braid_X, braid_X_rhs)
          .group("P4'")
          .rel("(X # id[1]) ; (id[1] # D) ; (X # id[1])",
               "(id[1] # X) ; (D # id[1]) ; (id[1] # X)")
          .group("P5'")
          .rel("X ; (id[1] # U)", "U # id[1]")
          .rel("(id[1] # Uu) ; X", "Uu # id[1]")
          .group("P6'")
          .rel("(id[1] # Uu) ; D ; (id[1] # U)", "id[1]")
          .rel("D ; (id[1] # U # Uu) ; D", "D")
          .done();
    }

    std::vector<RelationSchema> B_tensor_relations() {
      return Relations()
          .group("B1'")
          .rel("X ; X", "id[2]")
          .rel("Uu ; U", "id[0]", C::none, 0, 1)
          .rel("X ; U", "U")
          .rel("Uu ; X", "Uu")
          .group("B2'")
          .rel(braid_X, braid_X_rhs)
          .group("B3'")
          .chain({"(id[1] # Uu) ; (U # id[1])", "id[1]",
                  "(Uu # id[1]) ; (id[1] # U)"})
          .group("B4'")
          .rel("(X # id[1]) ; (id[1] # U)", "(id[1] # X) ; (U # id[1])")
          .rel("(Uu # id[1]) ; (id[1] # X)", "(id[1] # Uu) ; (X # id[1])")
          .done();
    }

    std::vector<RelationSchema> TL_tensor_relations() {
      return Relations()
          .group("TL'")
          .rel("Uu ; U", "id[0]", C::none, 0, 1)
          .chain({"(id[1] # Uu) ; (U # id[1])", "id[1]",
                  "(Uu # id[1]) ; (id[1] # U)"})
          .done();
    }

    std::vector<RelationSchema> PV_tensor_relations() {
      return Relations()
          .group("PV1'")
          .chain({"X ; Xi", "Xi ; X", "id[2]"})
          .rel("Uu ; U", "id[0]")
          .group("PV2'")
          .rel("X ; V", "V")
          .rel("V ; U", "U # U")
          .rel(V_assoc_lhs, V_assoc_rhs)
          .rel("(id[1] # Uu) ; V", "id[1]")
          .group("PV3'")
          .rel(braid_X, braid_X_rhs)
          .group("PV4'")
          .rel("X ; (U # id[1])", "id[1] # U")
          .rel("X ; (id[1] # U)", "U # id[1]")
          .group("PV5'")
          .rel("(Uu # id[1]) ; X", "id[1] # Uu")
          .rel("(id[1] # Uu) ; X", "Uu # id[1]")
          .group("PV6'")
          .rel(V_cross_lhs, V_cross_rhs)
          .rel("(V # id[1]) ; X", "(id[1] # X) ; (X # id[1]) ; (id[1] # V)")
          .done();
    }

    std::vector<RelationSchema> IB_tensor_relations() {
      return Relations()
          .group("IB1'")
          .chain({"X ; Xi", "Xi ; X", "id[2]"})
          .rel("Uu ; U", "id[0]")
          .group("IB2'")
          .rel(braid_X, braid_X_rhs)
          .group("IB3'")
          .rel("X ; (U # id[1])", "id[1] # U")
          .rel("X ; (id[1] # U)", "U # id[1]")
          .rel("(Uu # id[1]) ; X", "id[1] # Uu")
          .rel("(id[1] # Uu) ; X", "Uu # id[1]")
          .done();
    }

    std::vector<RelationSchema> V_tensor_relations() {
      return Relations()
          .group("V1'")
          .chain({"X ; Xi", "Xi ; X", "id[2]"})
          .rel("X ; V", "V")
          .group("V2'")
          .rel(V_assoc_lhs, V_assoc_rhs)
          .rel("(id[1] # Uu) ; V", "id[1]")
          .group("V3'")
          .rel(braid_X, braid_X_rhs)
          .group("V4'")
          .rel("(Uu # id[1]) ; X", "id[1] # Uu")
          .rel("(id[1] # Uu) ; X", "Uu # id[1]")
          .group("V5'")
          .rel(V_cross_lhs, V_cross_rhs)
          .rel("(V # id[1]) ; X", "(id[1] # X) ; (X # id[1]) ; (id[1] # V)")
          .done();
    }

    std::vector<RelationSchema> PT_tensor_relations() {
      return Relations()
          .group("PT'")
          .rel("X ; X", "id[2]")
          .rel(braid_X, braid_X_rhs)
          .rel("Uu ; U", "id[0]")
          .rel("X ; V", "V")
          .rel("V ; U", "U # U")
          .rel(V_assoc_lhs, V_assoc_rhs)
          .rel("(id[1] # Uu) ; V", "id[1]")
          .rel("X ; (U # id[1])", "id[1] # U")
          .rel("(Uu # id[1]) ; X", "id[1] # Uu")
          .rel(V_cross_lhs, V_cross_rhs)
          .done();
    }

    std::vector<RelationSchema> I_tensor_relations() {
      return Relations()
          .group("I'")
          .rel("X ; X", "id[2]")
          .rel(braid_X, braid_X_rhs)
          .rel("Uu ; U", "id[0]")
          .rel("X ; (U # id[1])", "id[1] # U")
          .rel("(Uu # id[1]) ; X", "id[1] # Uu")
          .done();
    }

    std::vector<RelationSchema> T_tensor_relations() {
      return Relations()
          .group("T'")
          .rel("X ; X", "id[2]")
          .rel(braid_X, braid_X_rhs)
          .rel("X ; V", "V")
          .rel(V_assoc_lhs, V_assoc_rhs)
          .rel("(id[1] # Uu) ; V", "id[1]")
          .rel("(Uu # id[1]) ; X", "id[1] # Uu")
          .rel(V_cross_lhs, V_cross_rhs)
          .done();
    }

    std::vector<RelationSchema> PO_tensor_relations() {
      return Relations()
          .group("PO'")
          .rel("Uu ; U", "id[0]")
          .rel("V ; U", "U # U")
          .rel(V_assoc_lhs, V_assoc_rhs)
          .chain({"(id[1] # Uu) ; V", "id[1]", "(Uu # id[1]) ; V"})
          .done();
    }

    std::vector<RelationSchema> O_tensor_relations() {
      return Relations()
          .group("O'")
          .rel(V_assoc_lhs, V_assoc_rhs)
          .chain({"(id[1] # Uu) ; V", "id[1]", "(Uu # id[1]) ; V"})
          .done();
    }

    std::vector<RelationSchema> OI_tensor_relations() {
      return Relations().group("OI'").rel("Uu ; U", "id[0]").done();
    }

    using Registry = std::map<std::string, Presentation, std::less<>>;

    void add(Registry& reg, Presentation p) {
      auto id = p.id();
      reg.emplace(std::move(id), std::move(p));
    }

    // Registers the category presentation together with its monoid part.
    void add_category(Registry&                   reg,
                      std::string const&          id,
                      Signature const&            sig,
                      std::vector<RelationSchema> rels,
                      SemanticsTag                tag) {
      add(reg,
          Presentation(id + "-monoid",
                       Level::monoid,
                       without_graded(sig, id + "-monoid"),
                       drop(rels, {"l[", "r["}),
                       tag));
      add(reg, Presentation(id, Level::category, sig, std::move(rels), tag));
    }

    Registry build_registry() {
      Registry reg;

      auto P  = category_signature("P", 1, 0, {F::sigma, F::eps, F::tau},
                                   F::rho_chop);
      auto B  = category_signature("B", 2, 0, {F::sigma, F::tau}, F::rho_chop);
      auto TL = category_signature("TL", 2, 0, {F::tau}, F::rho_chop);
      auto PV = category_signature(
          "PV", 1, 0, {F::sigma, F::sigma_inv, F::eps, F::mu, F::eta},
          F::rho_chop);
      auto IB = category_signature("IB", 1, 0,
                                   {F::sigma, F::sigma_inv, F::eps},
                                   F::rho_chop);
      auto V  = category_signature("V", 1, 1,
                                   {F::sigma, F::sigma_inv, F::mu, F::eta},
                                   F::rho_fold);
      auto PO = category_signature("PO", 1, 0, {F::eps, F::mu, F::eta},
                                   F::rho_chop);
      auto O  = category_signature("O", 1, 1, {F::mu, F::eta}, F::rho_fold);

      add_category(reg, "P", P, P_relations(), SemanticsTag::P);
      add_category(reg, "B", B, B_relations(), SemanticsTag::B);
      add_category(reg, "TL", TL, TL_relations(), SemanticsTag::TL);
      add_category(reg, "PV", PV, PV_relations(), SemanticsTag::shadow_PV);
      add_category(reg, "IB", IB, IB_relations(), SemanticsTag::shadow_IB);
      add_category(reg, "V", V, V_relations(), SemanticsTag::shadow_V);
      add_category(reg,
                   "PT",
                   Signature("PT", 1, 0, PV.schemas()),
                   with_sigma_squared(PV_relations(), "PT"),
                   SemanticsTag::PT);
      add_category(reg,
                   "I",
                   Signature("I", 1, 0, IB.schemas()),
                   with_sigma_squared(IB_relations(), "I"),
                   SemanticsTag::I);
      add_category(reg,
                   "T",
                   Signature("T", 1, 1, V.schemas()),
                   with_sigma_squared(V_relations(), "T"),
                   SemanticsTag::T);
      add_category(reg, "PO", PO, drop(PV_relations(), {"s[", "si["}),
                   SemanticsTag::PO);
      add_category(reg, "O", O, drop(V_relations(), {"s[", "si["}),
                   SemanticsTag::O);

      add(reg, Presentation("P-linear", Level::category, P, P_relations(),
                            SemanticsTag::P_linear, true));
      add(reg, Presentation("B-linear", Level::category, B, B_relations(),
                            SemanticsTag::B_linear, true));
      add(reg, Presentation("TL-linear", Level::category, TL, TL_relations(),
                            SemanticsTag::TL_linear, true));

      auto tensor = [&](std::string const&          id,
                        std::vector<EdgeSchema>     edges,
                        std::vector<RelationSchema> rels,
                        SemanticsTag                tag,
                        std::optional<SemanticsTag> linear = std::nullopt) {
        Signature sig(id + "-tensor", 1, 0, edges);
        if (linear) {
          add(reg, Presentation(id + "-tensor-linear", Level::tensor, sig,
                                rels, *linear, true));
        }
        add(reg, Presentation(id + "-tensor", Level::tensor, std::move(sig),
                              std::move(rels), tag));
      };

      tensor("P",
             {fixed(F::X, 2, 2), fixed(F::D, 2, 2), fixed(F::U, 1, 0),
              fixed(F::Ubar, 0, 1)},
             P_tensor_relations(), SemanticsTag::P, SemanticsTag::P_linear);
      tensor("B",
             {fixed(F::X, 2, 2), fixed(F::U, 2, 0), fixed(F::Ubar, 0, 2)},
             B_tensor_relations(), SemanticsTag::B, SemanticsTag::B_linear);
      tensor("TL", {fixed(F::U, 2, 0), fixed(F::Ubar, 0, 2)},
             TL_tensor_relations(), SemanticsTag::TL, SemanticsTag::TL_linear);
      tensor("PV",
             {fixed(F::X, 2, 2), fixed(F::Xinv, 2, 2), fixed(F::V, 2, 1),
              fixed(F::U, 1, 0), fixed(F::Ubar, 0, 1)},
             PV_tensor_relations(), SemanticsTag::shadow_PV);
      tensor("IB",
             {fixed(F::X, 2, 2), fixed(F::Xinv, 2, 2), fixed(F::U, 1, 0),
              fixed(F::Ubar, 0, 1)},
             IB_tensor_relations(), SemanticsTag::shadow_IB);
      tensor("V",
             {fixed(F::X, 2, 2), fixed(F::Xinv, 2, 2), fixed(F::V, 2, 1),
              fixed(F::Ubar, 0, 1)},
             V_tensor_relations(), SemanticsTag::shadow_V);
      tensor("PT",
             {fixed(F::X, 2, 2), fixed(F::V, 2, 1), fixed(F::U, 1, 0),
              fixed(F::Ubar, 0, 1)},
             PT_tensor_relations(), SemanticsTag::PT);
      tensor("I",
             {fixed(F::X, 2, 2), fixed(F::U, 1, 0), fixed(F::Ubar, 0, 1)},
             I_tensor_relations(), SemanticsTag::I);
      tensor("T",
             {fixed(F::X, 2, 2), fixed(F::V, 2, 1), fixed(F::Ubar, 0, 1)},
             T_tensor_relations(), SemanticsTag::T);
      tensor("PO",
             {fixed(F::V, 2, 1), fixed(F::U, 1, 0), fixed(F::Ubar, 0, 1)},
             PO_tensor_relations(), SemanticsTag::PO);
      tensor("O", {fixed(F::V, 2, 1), fixed(F::Ubar, 0, 1)},
             O_tensor_relations(), SemanticsTag::O);
      tensor("OI", {fixed(F::U, 1, 0), fixed(F::Ubar, 0, 1)},
             OI_tensor_relations(), SemanticsTag::OI);
      return reg;
    }

    Registry const& registry() {
      static Registry const reg = build_registry();
      return reg;
    }
  }  // namespace

  Presentation const& presentation(std::string_view id) {
    auto const& reg = registry();
    auto        it  = reg.find(id);
    if (it == reg.end()) {
      throw Error(ErrorCode::unknown_name,
                  "no presentation named '" + std::string(id) + "'");
    }
    return it->second;
  }

  std::vector<std::string> presentation_ids() {
    std::vector<std::string> out;
    for (auto const& [id, p] : registry()) {
      out.push_back(id);
    }
    return out;
  }

  std::string tensor_partner(std::string_view category_id) {
    std::string id(category_id);
    if (id.ends_with("-linear")) {
      return id.substr(0, id.size() - 7) + "-tensor-linear";
    }
    return id + "-tensor";
  }

}  // namespace diagcat
