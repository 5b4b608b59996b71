#pragma once

#include <stdexcept>
#include <string>

#include "wbr/bigint.hpp"

namespace wbr {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact integer division of a polynomial coefficient failed.
struct NonIntegralError : Error {
  BigInt coefficient;
  std::string monomial;
  NonIntegralError(BigInt c, std::string mono)
      : Error("non-integral division: coefficient " + c.str() +
              " of monomial " + mono),
        coefficient(std::move(c)),
        monomial(std::move(mono)) {}
};

struct ModulusMismatchError : Error {
  ModulusMismatchError() : Error("operands have different coefficient rings") {}
};

struct UnboundVariableError : Error {
  std::uint32_t var;
  explicit UnboundVariableError(std::uint32_t v)
      : Error("substitution map does not bind variable " + std::to_string(v)),
        var(v) {}
};

struct InvalidGroupError : Error {
  using Error::Error;
};

struct OrderCapError : Error {
  using Error::Error;
};

struct NonAbelianError : Error {
  NonAbelianError() : Error("operation requires an abelian p-group") {}
};

struct LevelUndefinedError : Error {
  LevelUndefinedError()
      : Error("levels are defined only for homocyclic abelian groups") {}
};

struct NotDownClosedError : Error {
  NotDownClosedError() : Error("node subset is not closed downward") {}
};

struct TorsionRingError : Error {
  TorsionRingError()
      : Error("ghost inversion needs the map multiplicities invertible "
              "in the coefficient ring") {}
};

struct NotAUnitError : Error {
  NotAUnitError() : Error("bottom coordinate is not a unit") {}
};

struct SizeCapError : Error {
  SizeCapError() : Error("requested size exceeds the configured cap") {}
};

struct FrameQueryError : Error {
  using Error::Error;
};

struct EvenPrimeError : Error {
  EvenPrimeError() : Error("construction requires an odd prime") {}
};

struct TruncationTooSmallError : Error {
  TruncationTooSmallError()
      : Error("no admissible node exists at this truncation") {}
};

}  // namespace wbr
