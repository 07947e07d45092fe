#include "klcy/laurent.hpp"

#include <sstream>

namespace klcy {

Laurent Laurent::v(int exp, Int coeff) {
  Laurent p;
  if (coeff != 0) p.coeffs_[exp] = std::move(coeff);
  return p;
}

const Int& Laurent::coeff(int exp) const {
  static const Int zero = 0;
  auto it = coeffs_.find(exp);
  return it == coeffs_.end() ? zero : it->second;
}

void Laurent::set_coeff(int exp, Int c) {
  if (c == 0)
    coeffs_.erase(exp);
  else
    coeffs_[exp] = std::move(c);
}

int Laurent::degree() const {
  if (coeffs_.empty()) throw DomainError("degree of zero Laurent polynomial");
  return coeffs_.rbegin()->first;
}

int Laurent::valuation() const {
  if (coeffs_.empty()) throw DomainError("valuation of zero Laurent polynomial");
  return coeffs_.begin()->first;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [e, c] : o.coeffs_) {
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) {
      coeffs_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [e, c] : o.coeffs_) {
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) {
      coeffs_.emplace(e, -c);
    } else {
      it->second -= c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent r;
  for (const auto& [ea, ca] : a.coeffs_)
    for (const auto& [eb, cb] : b.coeffs_) {
      auto it = r.coeffs_.find(ea + eb);
      if (it == r.coeffs_.end()) {
        r.coeffs_.emplace(ea + eb, ca * cb);
      } else {
        it->second += ca * cb;
      }
    }
  for (auto it = r.coeffs_.begin(); it != r.coeffs_.end();)
    it = (it->second == 0) ? r.coeffs_.erase(it) : std::next(it);
  return r;
}

Laurent Laurent::operator-() const {
  Laurent r;
  for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
  return r;
}

Laurent Laurent::bar() const {
  Laurent r;
  for (const auto& [e, c] : coeffs_) r.coeffs_[-e] = c;
  return r;
}

Int Laurent::eval_at_one() const {
  Int s = 0;
  for (const auto& [e, c] : coeffs_) s += c;
  return s;
}

std::string Laurent::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    Int a = c;
    if (first) {
      if (a < 0) { os << "-"; a = -a; }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (e == 0) {
      os << a;
    } else {
      if (a != 1) os << a;
      os << "v";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

} // namespace klcy
