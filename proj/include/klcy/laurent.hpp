#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>

#include "klcy/errors.hpp"

namespace klcy {

using Int = boost::multiprecision::cpp_int;

// One-variable Laurent polynomial over Z with arbitrary-precision
// coefficients.  The variable is called v throughout.
class Laurent {
public:
  Laurent() = default;
  Laurent(long c) { if (c != 0) coeffs_[0] = c; }           // NOLINT implicit
  Laurent(const Int& c) { if (c != 0) coeffs_[0] = c; }     // NOLINT implicit
  static Laurent v(int exp = 1, Int coeff = 1);             // coeff * v^exp

  bool is_zero() const { return coeffs_.empty(); }
  const Int& coeff(int exp) const;       // 0 if absent
  void set_coeff(int exp, Int c);

  // degree/valuation of the zero polynomial are distinguished error states
  int degree() const;     // max exponent
  int valuation() const;  // min exponent

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent& operator*=(const Laurent& o) { *this = *this * o; return *this; }
  Laurent operator-() const;
  bool operator==(const Laurent& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  Laurent bar() const;       // v -> v^{-1}
  Int eval_at_one() const;   // sum of coefficients

  const std::map<int, Int>& terms() const { return coeffs_; }

  std::string str() const;   // e.g. "v^-1 + 2 + v^3"

private:
  std::map<int, Int> coeffs_; // exponent -> nonzero coefficient
};

} // namespace klcy
