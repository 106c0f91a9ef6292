#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pisys {

// Every domain failure carries one of these codes plus the offending indices,
// so callers (and the CLI) can report structured diagnostics.
enum class Errc {
  NonSquare,
  DiagonalNotTwo,
  PositiveOffDiagonal,
  AsymmetricZero,
  NotSymmetrizable,
  UnknownName,
  RankOutOfRange,
  IndexOutOfRange,
  WrongClass,
  IsotropicCoroot,
  NotARoot,
  BudgetExceeded,
  NotRealRoot,
  DuplicateRoot,
  DifferenceIsRoot,
  NotLinearlyIndependent,
  DecomposableType,
  NotAffineType,
  NotSupportedInY,
  WrongPairing,
  EmptyOrbitClass,
  PreconditionMismatch,
  TypeMismatch,
  NotSimplyLaced,
  Decomposable,
  AmbiguousExt,
  RankCapExceeded,
  NotExt,
  NotInFinitePart,
  NotExtType,
  TableConflict,
  Undetermined,
  ParseError,
  Internal,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message, std::vector<int> indices = {})
      : std::runtime_error(std::move(message)), code_(code), indices_(std::move(indices)) {}

  Errc code() const noexcept { return code_; }
  const std::vector<int>& indices() const noexcept { return indices_; }

  // "DifferenceIsRoot(0,2)"
  std::string diagnostic() const;

 private:
  Errc code_;
  std::vector<int> indices_;
};

}  // namespace pisys
