#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>

namespace toric4 {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }
inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

/// num/den with any sign of den (the raw two-argument constructor insists
/// on a canonical positive denominator).
inline Rat make_rat(Int num, Int den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) { num = -num; den = -den; }
  return Rat(num, den);
}

/// "p/q" for proper fractions, plain decimal string for integers.
inline std::string rat_str(const Rat& r) {
  if (is_integer(r)) return rat_num(r).str();
  return rat_num(r).str() + "/" + rat_den(r).str();
}

/// Integers become JSON numbers when they fit exactly in a double,
/// everything else is emitted as an exact string.
inline Json int_json(const Int& v) {
  static const Int kSafe = Int(1) << 53;
  if (v < kSafe && v > -kSafe) return Json(static_cast<std::int64_t>(v));
  return Json(v.str());
}

inline Json rat_json(const Rat& r) {
  if (is_integer(r)) return int_json(rat_num(r));
  return Json(rat_str(r));
}

/// Parses "p", "-p" or "p/q" with q > 0 after normalisation.
inline Rat parse_rational(const std::string& s) {
  auto bad = [&] { throw std::invalid_argument("malformed rational: " + s); };
  if (s.empty()) bad();
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) bad();
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    bad();
  }
  return Rat(0);
}

}  // namespace toric4
