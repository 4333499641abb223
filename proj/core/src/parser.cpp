#include "diagcat/parser.hpp"

#include <cctype>  // for isalpha, isdigit, isspace

#include "diagcat/error.hpp"  // for Error

namespace diagcat {

  namespace {
    class Parser {
     public:
      Parser(std::string_view text, Signature const& sig)
          : _text(text), _sig(sig) {}

      Term parse() {
        Term t = term();
        skip();
        if (_pos != _text.size()) {
          fail("unexpected '" + std::string(1, _text[_pos]) + "'");
        }
        return t;
      }

     private:
      Term term() {
        Term t = ten();
        while (accept(';')) {
          auto [line, col] = where();
          Term rhs         = ten();
          try {
            t = Term::compose(t, rhs);
          } catch (Error const& e) {
            throw Error(ErrorCode::type_error,
                        "at line " + std::to_string(line) + ", column "
                            + std::to_string(col) + ": cannot compose ("
                            + std::to_string(t.dom()) + ","
                            + std::to_string(t.cod()) + ") with ("
                            + std::to_string(rhs.dom()) + ","
                            + std::to_string(rhs.cod()) + ")");
          }
        }
        return t;
      }

      Term ten() {
        Term t = atom();
        while (accept('#')) {
          t = Term::tensor(t, atom());
        }
        return t;
      }

      Term atom() {
        skip();
        if (accept('(')) {
          Term t = term();
          expect(')');
          return t;
        }
        auto [line, col] = where();
        std::string name = identifier();
        if (name.empty()) {
          fail(_pos < _text.size() ? "unexpected '"
                                         + std::string(1, _text[_pos]) + "'"
                                   : "unexpected end of input");
        }
        std::vector<std::size_t> args;
        if (accept('[')) {
          args.push_back(number());
          while (accept(',')) {
            args.push_back(number());
          }
          expect(']');
        }
        auto at = [&](std::string const& msg) -> Error {
          return Error(ErrorCode::syntax_error,
                       msg + " at line " + std::to_string(line) + ", column "
                           + std::to_string(col));
        };
        if (name == "id") {
          if (args.size() != 1) {
            throw at("id takes one argument");
          }
          return Term::id(args[0]);
        }
        auto family = _sig.family_for(name);
        if (!family) {
          throw at("'" + name + "' is not a generator of " + _sig.name());
        }
        GenSpec g;
        switch (arity_of(*family)) {
          case GenArity::indexed:
            if (args.size() != 2) {
              throw at(name + " takes two arguments");
            }
            g = GenSpec::indexed(*family, args[0], args[1]);
            break;
          case GenArity::graded:
            if (args.size() != 1) {
              throw at(name + " takes one argument");
            }
            g = GenSpec::graded(*family, args[0]);
            break;
          case GenArity::nullary:
            if (!args.empty()) {
              throw at(name + " takes no arguments");
            }
            g = GenSpec::nullary(*family);
            break;
        }
        auto a = _sig.arity(g);
        if (!a) {
          throw at(g.to_string() + " is not an edge of " + _sig.name());
        }
        return Term::edge(g, a->first, a->second);
      }

      std::string identifier() {
        skip();
        std::size_t start = _pos;
        while (_pos < _text.size()
               && std::isalpha(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
        return std::string(_text.substr(start, _pos - start));
      }

      std::size_t number() {
        skip();
        std::size_t start = _pos;
        while (_pos < _text.size()
               && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
        if (start == _pos) {
          fail("expected a number");
        }
        return std::stoul(std::string(_text.substr(start, _pos - start)));
      }

      void skip() {
        while (_pos < _text.size()
               && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
      }

      bool accept(char c) {
        skip();
        if (_pos < _text.size() && _text[_pos] == c) {
          ++_pos;
          return true;
        }
        return false;
      }

      void expect(char c) {
        if (!accept(c)) {
          fail(std::string("expected '") + c + "'");
        }
      }

      std::pair<std::size_t, std::size_t> where() {
        skip();
        std::size_t line = 1, col = 1;
        for (std::size_t k = 0; k < _pos; ++k) {
          if (_text[k] == '\n') {
            ++line;
            col = 1;
          } else {
            ++col;
          }
        }
        return {line, col};
      }

      [[noreturn]] void fail(std::string const& msg) {
        auto [line, col] = where();
        throw Error(ErrorCode::syntax_error,
                    msg + " at line " + std::to_string(line) + ", column "
                        + std::to_string(col));
      }

      std::string_view _text;
      Signature const& _sig;
      std::size_t      _pos = 0;
    };
  }  // namespace

  Term parse_term(std::string_view text, Signature const& sig) {
    return Parser(text, sig).parse();
  }

  Word parse_word(std::string_view text, Signature const& sig) {
    Term t = parse_term(text, sig);
    switch (t.kind()) {
      case Term::Kind::identity:
        return Word(t.dom());
      case Term::Kind::edge:
        return Word(sig, t.dom(), {t.gen()});
      case Term::Kind::compose: {
        std::vector<GenSpec> letters;
        for (auto const& c : t.children()) {
          if (c.kind() != Term::Kind::edge) {
            throw Error(ErrorCode::type_error,
                        "'" + c.to_string() + "' is not a single edge");
          }
          letters.push_back(c.gen());
        }
        return Word(sig, t.dom(), letters);
      }
      case Term::Kind::tensor:
        break;
    }
    throw Error(ErrorCode::type_error,
                "'" + t.to_string() + "' is not a path");
  }

}  // namespace diagcat
