#pragma once

#include <stdexcept>

namespace bell {

// Error families map 1:1 onto CLI exit codes (see bell/commands.hpp):
// parse_error -> 2, validation_error -> 3, consistency_error -> 4.

// Malformed input text: unknown/duplicate/missing keys, unparseable numbers.
class parse_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Well-formed input whose value violates a domain invariant.
class validation_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal quantity left its mathematically guaranteed range; indicates a
// defect, not bad user input.
class consistency_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace bell
