#ifndef HOMLEIB_RATIONAL_HPP
#define HOMLEIB_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace homleib {

/// Exact rational scalar. Canonical form: positive denominator,
/// gcd(|num|, den) = 1, zero stored as 0/1 (GMP's mpq canonical form).
using Rat = mpq_class;

/// Error kinds mapped to CLI exit codes (usage = 2, counterexample = 1).
enum class ErrorKind { precondition, cap_exceeded, integrity, parse };

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

inline Rat rat_of(long num, long den = 1) {
  if (den == 0) throw Error(ErrorKind::parse, "zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p/q" or "p" with the sign on the numerator; normalizes.
inline Rat rat_parse(const std::string& text) {
  if (text.empty()) throw Error(ErrorKind::parse, "empty rational literal");
  auto slash = text.find('/');
  try {
    mpz_class num(slash == std::string::npos ? text : text.substr(0, slash));
    mpz_class den(slash == std::string::npos ? std::string("1") : text.substr(slash + 1));
    if (den == 0) throw Error(ErrorKind::parse, "zero denominator in \"" + text + "\"");
    if (den < 0) throw Error(ErrorKind::parse, "negative denominator in \"" + text + "\"");
    Rat q(num, den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::parse, "malformed rational \"" + text + "\"");
  }
}

/// Serializes as "p/q", or "p" when the denominator is 1.
inline std::string rat_str(const Rat& q) { return q.get_str(); }

} // namespace homleib

#endif
