#include "diamondlab/rational.hpp"

#include "diamondlab/error.hpp"
#include "diamondlab/parallel.hpp"

#include <cstdlib>

namespace diamondlab {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::UniverseTooLarge: return "UniverseTooLarge";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::EmptySetMissing: return "EmptySetMissing";
    case ErrorCode::BadDimensions: return "BadDimensions";
    case ErrorCode::TooFewVertices: return "TooFewVertices";
    case ErrorCode::TooManyVertices: return "TooManyVertices";
    case ErrorCode::NotDiamondFree: return "NotDiamondFree";
    case ErrorCode::Parse: return "ParseError";
  }
  return "Error";
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw Error(ErrorCode::Parse, "not a rational: '" + text + "'");
  if (q.get_den() == 0) throw Error(ErrorCode::Parse, "zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

Rational ratio(const Integer& num, const Integer& den) {
  if (num == 0) return Rational(0);
  if (den == 0) throw Error(ErrorCode::BadDimensions, "nonzero term over a vanishing falling factorial");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

unsigned default_threads() {
  if (const char* env = std::getenv("DIAMONDLAB_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

unsigned resolve_threads(unsigned requested) { return requested == 0 ? default_threads() : requested; }

}  // namespace diamondlab
