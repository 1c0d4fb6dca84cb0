#pragma once

// Shared scalar types, tuple helpers and the error hierarchy used by every
// module in this library.  All arithmetic is exact: arbitrary-precision
// integers and rationals, never floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace rbd {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Tuple entries (continued-fraction coefficients, plumbing weights, triangle
// counts) stay small; 64-bit is ample.  Values of continued fractions and
// path counts use Int/Rat.
using Entry = std::int64_t;
using Tuple = std::vector<Entry>;

// User-level errors exit the CLI with status 1, internal ones with status 2.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidInput : Error {
  using Error::Error;
};
struct InternalError : Error {
  using Error::Error;
};

struct InvalidSite : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct NotBlowdownSite : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct NotInZk : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct LimitExceeded : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct NotAFilling : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct MissingDiagonal : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct NotAnEar : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct InvalidSelector : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct InvalidQuad : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct NotNegativeDefinite : InvalidInput {
  using InvalidInput::InvalidInput;
};
// A required delta-curve missing during a lantern substitution means the
// caller fed an inconsistent word/path; the algorithm never produces this
// on valid inputs, so it is classified as internal.
struct SubstitutionCurveMissing : InternalError {
  using InternalError::InternalError;
};

inline std::string to_string(const Tuple& t) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) os << ',';
    os << t[i];
  }
  os << ')';
  return os.str();
}

// Accepts "2,1,4,1,2" and "(2,1,4,1,2)"; entries may be negative.
inline Tuple parse_tuple(const std::string& s) {
  std::string body = s;
  if (!body.empty() && body.front() == '(' && body.back() == ')')
    body = body.substr(1, body.size() - 2);
  if (body.empty()) throw InvalidInput("empty tuple");
  Tuple out;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t comma = body.find(',', pos);
    std::string tok = body.substr(pos, comma == std::string::npos
                                           ? std::string::npos
                                           : comma - pos);
    if (tok.empty()) throw InvalidInput("empty tuple entry in '" + s + "'");
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw InvalidInput("bad tuple entry '" + tok + "'");
    }
    if (used != tok.size()) throw InvalidInput("bad tuple entry '" + tok + "'");
    out.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

inline Entry sum(const Tuple& t) {
  return std::accumulate(t.begin(), t.end(), Entry{0});
}

inline Tuple reversed(Tuple t) {
  std::reverse(t.begin(), t.end());
  return t;
}

inline Int catalan(int n) {
  // C_n = binom(2n, n) / (n + 1)
  if (n < 0) throw InvalidInput("catalan: negative index");
  Int num = 1, den = 1;
  for (int i = 1; i <= n; ++i) {
    num *= n + i;
    den *= i;
  }
  return num / den / (n + 1);
}

}  // namespace rbd
