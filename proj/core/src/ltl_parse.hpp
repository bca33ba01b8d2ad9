// SPDX-License-Identifier: MIT
#pragma once

#include "lexer.hpp"
#include "lprl/ltl.hpp"

namespace lprl::detail {

Ltl parse_ltl_expr(Cursor& c, const Alphabet& alpha);

}  // namespace lprl::detail
