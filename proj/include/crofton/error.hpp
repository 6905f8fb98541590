// Copyright The Crofton Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace crofton
{
//! Bad argument or violated precondition.
class InvalidInput : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

//! Malformed scene or raster file. Carries line/column when known (1-based).
class ParseError : public std::runtime_error
{
  public:
    ParseError(std::string const& msg, int line = 0, int column = 0);

    int line() const { return line_; }
    int column() const { return column_; }

  private:
    int line_;
    int column_;
};

//! Boundary extraction met coincident or tangent pieces it cannot resolve.
class GeneralPositionError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

//! A radius schedule finer than the raster resolution.
class ScheduleTooFine : public InvalidInput
{
  public:
    using InvalidInput::InvalidInput;
};

//! The integration window would be unbounded and no override was given.
class UnboundedWindow : public InvalidInput
{
  public:
    using InvalidInput::InvalidInput;
};

}  // namespace crofton
