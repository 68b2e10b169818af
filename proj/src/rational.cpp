#include "specker/rational.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace specker {

std::string to_string(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += "/" + denominator(r).str();
  }
  return s;
}

std::optional<Rat> parse_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      BigInt n(text);
      return Rat(n);
    }
    BigInt n(text.substr(0, slash));
    BigInt d(text.substr(slash + 1));
    if (d == 0) return std::nullopt;
    return Rat(n, d);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

Rat nearest_rational(double x, long max_den) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite value");
  bool neg = x < 0;
  double v = std::fabs(x);

  // Stern-Brocot walk keeping the best mediant with denominator <= max_den.
  long pl = 0, ql = 1;  // lower bound pl/ql
  long ph = 1, qh = 0;  // upper bound ph/qh (infinity)
  long best_p = static_cast<long>(std::llround(v)), best_q = 1;
  double best_err = std::fabs(v - static_cast<double>(best_p));
  while (true) {
    long pm = pl + ph;
    long qm = ql + qh;
    if (qm > max_den) break;
    double m = static_cast<double>(pm) / static_cast<double>(qm);
    double err = std::fabs(v - m);
    if (err < best_err) {
      best_err = err;
      best_p = pm;
      best_q = qm;
    }
    if (m < v) {
      pl = pm;
      ql = qm;
    } else if (m > v) {
      ph = pm;
      qh = qm;
    } else {
      break;
    }
  }
  Rat r(best_p, best_q);
  return neg ? -r : r;
}

std::optional<Rat> snap_to_rational(double x, double tol, long max_den) {
  if (!std::isfinite(x)) return std::nullopt;
  Rat r = nearest_rational(x, max_den);
  if (std::fabs(to_double(r) - x) <= tol) return r;
  return std::nullopt;
}

double to_double(const Rat& r) { return static_cast<double>(r); }

}  // namespace specker
