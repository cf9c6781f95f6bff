#include "witt/field.hpp"

#include <algorithm>
#include <cctype>

#include "witt/errors.hpp"

namespace witt {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

CoefficientSpec CoefficientSpec::prime_field(std::uint32_t p) {
  if (!is_prime(p)) throw ValidationError("coefficient field F_" + std::to_string(p) + ": " + std::to_string(p) + " is not prime");
  if (p > 65521) throw OutOfReachError("prime fields above 65521 are not supported");
  return CoefficientSpec(Kind::PrimeField, p);
}

CoefficientSpec CoefficientSpec::parse(const std::string& text) {
  std::string t;
  for (char c : text) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "z") return integers();
  if (t == "q") return rationals();
  if (t.size() >= 2 && t[0] == 'f') {
    const std::string digits = t.substr(1);
    if (digits.size() <= 9 && std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      return prime_field(static_cast<std::uint32_t>(std::stoul(digits)));
  }
  throw ValidationError("unknown coefficients '" + text + "' (expected z, q or f<p>)");
}

std::string CoefficientSpec::name() const {
  switch (kind_) {
    case Kind::Integers: return "z";
    case Kind::Rationals: return "q";
    case Kind::PrimeField: return "f" + std::to_string(p_);
  }
  return "?";
}

}  // namespace witt
