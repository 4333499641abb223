#ifndef DIAGCAT_ERROR_HPP_
#define DIAGCAT_ERROR_HPP_

#include <stdexcept>  // for runtime_error
#include <string>     // for string
#include <string_view>  // for string_view

namespace diagcat {

  enum class ErrorCode {
    out_of_range,
    duplicate_label,
    incomplete_cover,
    shape_mismatch,
    no_diagram_image,
    unknown_spec,
    budget_exceeded,
    unassigned_edge,
    syntax_error,
    type_error,
    no_match,
    bad_grading,
    unknown_edge,
    descend_failure,
    unknown_name
  };

  std::string_view error_code_name(ErrorCode code) noexcept;

  // The single exception type thrown by the library. The code identifies the
  // failure, the message names the offending value.
  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
          _code(code) {}

    ErrorCode code() const noexcept {
      return _code;
    }

   private:
    ErrorCode _code;
  };

}  // namespace diagcat

#endif  // DIAGCAT_ERROR_HPP_
