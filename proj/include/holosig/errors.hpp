#ifndef HOLOSIG_ERRORS_HPP
#define HOLOSIG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace holosig {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// mismatched alphabet size, depth or dimension between operands
struct shape_error : error {
  using error::error;
};

// value-level precondition violated (letter out of range, bad constant term, ...)
struct domain_error : error {
  using error::error;
};

// path concatenation with mismatched endpoints
struct composition_error : error {
  using error::error;
};

// malformed input file or token stream
struct parse_error : error {
  using error::error;
};

// coefficient budget exceeded; the CLI maps this to its own exit code
struct cap_error : error {
  using error::error;
};

} // namespace holosig

#endif
