#pragma once

#include <string>

#include "starsep/ring.hpp"

namespace starsep {

/// Parses the expression grammar over a fixed space:
///
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := ('-'|'+') factor | power
///   power  := atom ('^' integer)?
///   atom   := integer | 'h' | 'z[k]' | 'zb[k]' | 'dPhi[k]' | 'dbPhi[k]'
///           | 'B(p,q)' | 'vac' | 'lnB' | '(' expr ')'
///
/// B(p,q) denotes B^(p + q/h); vac is B^(0,-1) on CP^N and B^(0,+1) on CH^N;
/// dPhi[k] lowers to zb^k B^(-1,0) and dbPhi[k] to z^k B^(-1,0). Division is
/// defined only by scalar (coefficient-level) subexpressions; the ring is not
/// a field. Exponents are integers; negative ones apply to scalars only.
/// Syntax and domain errors carry the offending position.
RingElem parse_expr(const std::string& text, Space space);

}  // namespace starsep
