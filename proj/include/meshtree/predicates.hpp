#pragma once

#include <cmath>
#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

namespace meshtree::predicates {

using Exact = boost::multiprecision::cpp_rational;

namespace detail {

inline constexpr double kEps = std::numeric_limits<double>::epsilon() / 2;  // 2^-53
inline constexpr double kOrientBound = (3.0 + 16.0 * kEps) * kEps;
inline constexpr double kIncircleBound = (10.0 + 96.0 * kEps) * kEps;

template <typename T>
int sign(const T& v) {
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

}  // namespace detail

// +1 if (a, b, c) turns counter-clockwise, -1 clockwise, 0 collinear. The
// floating-point result is accepted when it clears a forward error bound;
// otherwise the determinant is recomputed in exact rational arithmetic.
inline int orient2d(const double* a, const double* b, const double* c) {
  const double left = (a[0] - c[0]) * (b[1] - c[1]);
  const double right = (a[1] - c[1]) * (b[0] - c[0]);
  const double det = left - right;
  const double bound = detail::kOrientBound * (std::fabs(left) + std::fabs(right));
  if (det > bound || -det > bound) return det > 0 ? 1 : -1;

  const Exact ax(a[0]), ay(a[1]), bx(b[0]), by(b[1]), cx(c[0]), cy(c[1]);
  return detail::sign((ax - cx) * (by - cy) - (ay - cy) * (bx - cx));
}

// +1 if d lies strictly inside the circumcircle of the counter-clockwise
// triangle (a, b, c), -1 outside, 0 on it.
inline int incircle(const double* a, const double* b, const double* c, const double* d) {
  const double adx = a[0] - d[0], ady = a[1] - d[1];
  const double bdx = b[0] - d[0], bdy = b[1] - d[1];
  const double cdx = c[0] - d[0], cdy = c[1] - d[1];

  const double bdxcdy = bdx * cdy, cdxbdy = cdx * bdy;
  const double cdxady = cdx * ady, adxcdy = adx * cdy;
  const double adxbdy = adx * bdy, bdxady = bdx * ady;
  const double alift = adx * adx + ady * ady;
  const double blift = bdx * bdx + bdy * bdy;
  const double clift = cdx * cdx + cdy * cdy;

  const double det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) +
                     clift * (adxbdy - bdxady);
  const double permanent = (std::fabs(bdxcdy) + std::fabs(cdxbdy)) * alift +
                           (std::fabs(cdxady) + std::fabs(adxcdy)) * blift +
                           (std::fabs(adxbdy) + std::fabs(bdxady)) * clift;
  const double bound = detail::kIncircleBound * permanent;
  if (det > bound || -det > bound) return det > 0 ? 1 : -1;

  const Exact eadx = Exact(a[0]) - Exact(d[0]), eady = Exact(a[1]) - Exact(d[1]);
  const Exact ebdx = Exact(b[0]) - Exact(d[0]), ebdy = Exact(b[1]) - Exact(d[1]);
  const Exact ecdx = Exact(c[0]) - Exact(d[0]), ecdy = Exact(c[1]) - Exact(d[1]);
  const Exact ea = eadx * eadx + eady * eady;
  const Exact eb = ebdx * ebdx + ebdy * ebdy;
  const Exact ec = ecdx * ecdx + ecdy * ecdy;
  return detail::sign(ea * (ebdx * ecdy - ecdx * ebdy) + eb * (ecdx * eady - eadx * ecdy) +
                      ec * (eadx * ebdy - ebdx * eady));
}

}  // namespace meshtree::predicates
