// Copyright The Crofton Authors.
// SPDX-License-Identifier: Apache-2.0
#include "crofton/error.hpp"

namespace crofton
{
ParseError::ParseError(std::string const& msg, int line, int column)
    : std::runtime_error(line > 0 ? msg + " (line " + std::to_string(line) + ", column "
                                        + std::to_string(column) + ")"
                                  : msg),
      line_(line), column_(column)
{
}
}  // namespace crofton
