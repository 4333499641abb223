#ifndef DIAGCAT_PARSER_HPP_
#define DIAGCAT_PARSER_HPP_

#include <string_view>  // for string_view

#include "signature.hpp"  // for Signature
#include "term.hpp"       // for Term
#include "word.hpp"       // for Word

namespace diagcat {

  // term := ten (";" ten)*
  // ten  := atom ("#" atom)*
  // atom := "id[" nat "]" | gen | "(" term ")"
  // gen  := name ("[" nat ("," nat)? "]")?
  //
  // Generator names resolve against the signature. Throws SyntaxError with
  // line and column, or TypeError naming the mismatched arities.
  Term parse_term(std::string_view text, Signature const& sig);

  // A term that is a path: an identity or a sequential composite of edges.
  Word parse_word(std::string_view text, Signature const& sig);

}  // namespace diagcat

#endif  // DIAGCAT_PARSER_HPP_
