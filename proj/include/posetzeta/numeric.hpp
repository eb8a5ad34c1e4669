#pragma once

#include "posetzeta/index.hpp"
#include "posetzeta/rational.hpp"
#include "posetzeta/symbolic.hpp"

#include <boost/multiprecision/float128.hpp>

#include <string>
#include <vector>

namespace pz {

/// 113-bit mantissa (about 34 significant digits).
using Real = boost::multiprecision::float128;

/// A value together with a rigorous bound on |value - true value|.
///
/// Evaluators bound the truncation error analytically and then double it
/// (together with a crude per-operation rounding estimate), so that rounding
/// can never dominate the stated bound.
struct ApproxValue {
  Real value = 0;
  Real error_bound = 0;

  ApproxValue& operator+=(const ApproxValue& other);
  ApproxValue& operator-=(const ApproxValue& other);
  friend ApproxValue operator+(ApproxValue a, const ApproxValue& b) { return a += b; }
  friend ApproxValue operator-(ApproxValue a, const ApproxValue& b) { return a -= b; }
  friend ApproxValue operator*(const Real& scale, ApproxValue a);
};

/// |a - b| <= a.error_bound + b.error_bound.
bool agree_within_bounds(const ApproxValue& a, const ApproxValue& b);

Real to_real(const Rational& q);
/// Decimal rendering with the given number of significant digits.
std::string to_decimal(const Real& x, int digits = 30);

/// Worker threads for combination_eval: POSETZETA_JOBS if set, else 1.
unsigned default_jobs();

/// zeta(k) truncated to m1 <= M. The empty index evaluates to exactly 1.
ApproxValue mzv_eval(const Index& k, long M);

/// Linear combination of mzv_eval results; terms are evaluated on `jobs`
/// threads (0 means default_jobs()) and summed in key order.
ApproxValue combination_eval(const ZetaCombination& c, long M, unsigned jobs = 0);

/// Mordell-Tornheim value: sum over m_i > 0 of
///   1 / (m1^k1 ... mr^kr (m1 + ... + mr)^k),
/// truncated to m1 + ... + mr <= M. Requires every exponent >= 1.
ApproxValue mt_series_eval(const std::vector<unsigned>& ks, unsigned k, long M);

/// Root-system value over l1 > ... > la > m1 + n1, m1 > ... > mb > 0,
/// n1 > ... > nc > 0, truncated to l1 <= M. Requires p nonempty with p1 >= 2.
/// An empty q (or r) drops that branch.
ApproxValue kmt_series_eval(const Index& p, const Index& q, const Index& r, long M);

} // namespace pz
