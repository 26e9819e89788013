#pragma once

#include <string>

#include "symfn/engine.hpp"
#include "symfn/hfun.hpp"
#include "symfn/symmetric_function.hpp"

namespace symfn {

// {"modulus": N, "parity": "odd"|"even", "values": [[re_num, re_den, im_num, im_den], ...]}
// with one values row per residue 1..N-1.  Throws if a component does not
// fit a 64-bit integer.
std::string to_json(const SymmetricFunction& f);

// Round-trip for the object above.
SymmetricFunction symmetric_function_from_json(const std::string& text);

// {"value_re": "...", "value_im": "...", "error_bound": "...",
//  "method": "...", "terms_used": n} with decimal strings, never binary
// floats; significant_digits controls the value rendering.
std::string to_json(const LValue& v, int significant_digits);

// {"order": r, "numerator": [[num, den], ...]} debugging dump.
std::string to_json(const HRational& h);

// Number of significant decimal digits carried by a binary precision.
int decimal_digits_for(mpfr_prec_t precision_bits);

}  // namespace symfn
