#include "diagcat/gen_spec.hpp"

#include "diagcat/error.hpp"  // for error_code_name

namespace diagcat {

  std::string_view error_code_name(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::out_of_range:
        return "OutOfRange";
      case ErrorCode::duplicate_label:
        return "DuplicateLabel";
      case ErrorCode::incomplete_cover:
        return "IncompleteCover";
      case ErrorCode::shape_mismatch:
        return "ShapeMismatch";
      case ErrorCode::no_diagram_image:
        return "NoDiagramImage";
      case ErrorCode::unknown_spec:
        return "UnknownSpec";
      case ErrorCode::budget_exceeded:
        return "BudgetExceeded";
      case ErrorCode::unassigned_edge:
        return "UnassignedEdge";
      case ErrorCode::syntax_error:
        return "SyntaxError";
      case ErrorCode::type_error:
        return "TypeError";
      case ErrorCode::no_match:
        return "NoMatch";
      case ErrorCode::bad_grading:
        return "BadGrading";
      case ErrorCode::unknown_edge:
        return "UnknownEdge";
      case ErrorCode::descend_failure:
        return "DescendFailure";
      case ErrorCode::unknown_name:
        return "UnknownName";
    }
    return "Error";
  }

  GenArity arity_of(GenFamily f) noexcept {
    switch (f) {
      case GenFamily::sigma:
      case GenFamily::sigma_inv:
      case GenFamily::eps:
      case GenFamily::tau:
      case GenFamily::mu:
      case GenFamily::eta:
        return GenArity::indexed;
      case GenFamily::lambda:
      case GenFamily::rho_chop:
      case GenFamily::rho_fold:
        return GenArity::graded;
      default:
        return GenArity::nullary;
    }
  }

  std::string_view grammar_name(GenFamily f) noexcept {
    switch (f) {
      case GenFamily::sigma:
        return "s";
      case GenFamily::sigma_inv:
        return "si";
      case GenFamily::eps:
        return "e";
      case GenFamily::tau:
        return "t";
      case GenFamily::mu:
        return "m";
      case GenFamily::eta:
        return "h";
      case GenFamily::lambda:
        return "l";
      case GenFamily::rho_chop:
      case GenFamily::rho_fold:
        return "r";
      case GenFamily::X:
        return "X";
      case GenFamily::Xinv:
        return "Xi";
      case GenFamily::D:
        return "D";
      case GenFamily::U:
        return "U";
      case GenFamily::Ubar:
        return "Uu";
      case GenFamily::V:
        return "V";
    }
    return "?";
  }

  bool GenSpec::indices_valid() const noexcept {
    switch (arity_of(family)) {
      case GenArity::indexed:
        if (family == GenFamily::eps) {
          return i >= 1 && i <= n;
        }
        return i >= 1 && i < n;
      case GenArity::graded:
        return i == 0;
      case GenArity::nullary:
        return i == 0 && n == 0;
    }
    return false;
  }

  std::string GenSpec::to_string() const {
    std::string out(grammar_name(family));
    switch (arity_of(family)) {
      case GenArity::indexed:
        out += "[" + std::to_string(i) + "," + std::to_string(n) + "]";
        break;
      case GenArity::graded:
        out += "[" + std::to_string(n) + "]";
        break;
      case GenArity::nullary:
        break;
    }
    return out;
  }

}  // namespace diagcat
