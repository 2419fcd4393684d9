#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kneserlab {

enum class ErrorCode {
  DivisionByZero,
  DescriptorMismatch,
  NotPrime,
  ReducibleModulus,
  DimensionOverflow,
  TowerMismatch,
  TowerInvariant,
  SingularMultiplicationMap,
  UnitNotInSpan,
  DegenerateForm,
  EnumerationTooLarge,
  InfiniteBaseField,
  StabilizerNotTrivial,
  GeneratesProperSubfield,
  TheoremViolation,
  NoDeficientT,
  GroupMismatch,
  EmptyInput,
  Parse,
  Unsupported,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library; the code drives CLI exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace kneserlab
