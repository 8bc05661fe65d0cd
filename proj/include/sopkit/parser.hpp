#ifndef SOPKIT_PARSER_HPP
#define SOPKIT_PARSER_HPP

#include <string_view>

#include "sopkit/polynomial.hpp"

namespace sopkit {

// Parses the polynomial grammar
//   poly   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := INT | VAR ('^' INT)?
// Whitespace is insignificant. An optional leading sign and rational
// literals INT '/' INT are accepted on top of the grammar so that printed
// polynomials always parse back.
Polynomial parse_poly(std::string_view text, const RingPtr& ring);

}  // namespace sopkit

#endif
