#ifndef PZETA_ERRORS_HPP
#define PZETA_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pzeta
{

// Base of every library error. Each subclass maps to one failure kind named
// in the public contracts so callers (and the CLI) can dispatch on type.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class NotDivisible : public Error
{
public:
  using Error::Error;
};

class ZeroDivisor : public Error
{
public:
  using Error::Error;
};

class FactorNotUnital : public Error
{
public:
  using Error::Error;
};

class NonUnitDenominator : public Error
{
public:
  using Error::Error;
};

class InvalidParameter : public Error
{
public:
  using Error::Error;
};

class NotNormal : public Error
{
public:
  using Error::Error;
};

class ParseError : public Error
{
public:
  using Error::Error;
};

class HypothesisViolated : public Error
{
public:
  using Error::Error;
};

class EmptyInput : public Error
{
public:
  using Error::Error;
};

class NoWitness : public Error
{
public:
  using Error::Error;
};

// Raised when a computation would exceed a configured resource bound. The
// partial statistics gathered before giving up are carried along; no partial
// result is ever returned.
class BudgetExceeded : public Error
{
public:
  BudgetExceeded(std::string const &what, std::size_t elements_seen,
                 std::size_t subgroups_seen)
  : Error(what), elements_seen_(elements_seen), subgroups_seen_(subgroups_seen)
  {}

  std::size_t elements_seen() const { return elements_seen_; }
  std::size_t subgroups_seen() const { return subgroups_seen_; }

private:
  std::size_t elements_seen_;
  std::size_t subgroups_seen_;
};

class OrderBoundExceeded : public BudgetExceeded
{
public:
  using BudgetExceeded::BudgetExceeded;
};

} // namespace pzeta

#endif // PZETA_ERRORS_HPP
