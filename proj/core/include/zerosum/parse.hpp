#pragma once

#include <string>
#include <string_view>

#include "zerosum/group.hpp"

namespace zerosum {

/// "Z6", "z2xZ4". Throws ParseError naming the offending token.
AbelianGroup parse_group(std::string_view text);

/// "3" for single-factor groups, "(1,3)" in general. Residues are reduced
/// modulo the factor orders, so "-1" in Z6 is 5.
GroupElement parse_element(const AbelianGroup& group, std::string_view text);

/// Comma-separated elements: "2,2,3,1,1,1" or "(1,3),(0,2)". Empty text is
/// the empty sequence.
ZSequence parse_sequence(const AbelianGroup& group, std::string_view text);

std::string format_element(const GroupElement& g);
std::string format_sequence(const ZSequence& s);

/// Strict decimal integer parse; throws ParseError on anything else.
std::int64_t parse_integer(std::string_view text);

}  // namespace zerosum
