#pragma once

#include <string>
#include <string_view>

namespace segrank {

// Porter stemmer, original 1980 rule set (steps 1a-5b, longest-match within
// each step). Input is expected to be lower-cased; words of length <= 2 and
// tokens containing non-alphabetic characters are returned unchanged.
std::string porter_stem(std::string_view word);

}  // namespace segrank
