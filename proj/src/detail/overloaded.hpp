// Copyright The Crofton Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace crofton::detail
{
template<class... Ts>
struct Overloaded : Ts...
{
    using Ts::operator()...;
};
template<class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;
}  // namespace crofton::detail
