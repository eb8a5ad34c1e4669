#include "posetzeta/numeric.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace pz {

namespace {

// 2^-112, the unit roundoff of the 113-bit format.
const Real kEpsilon = std::numeric_limits<Real>::epsilon();
constexpr int kSlack = 2;

// Combined bound: kSlack * (truncation + ops * eps * magnitude).
Real finish_bound(const Rational& tail, const Real& magnitude, long ops) {
  const Real rounding = Real(ops) * kEpsilon * abs(magnitude);
  return kSlack * (to_real(tail) + rounding);
}

// Powers 1/m, 1/m^2, ..., 1/m^max for the current m.
class InversePowers {
public:
  explicit InversePowers(unsigned max_exponent) : powers_(max_exponent + 1) {}

  void set(long m) {
    powers_[0] = 1;
    const Real inv = Real(1) / Real(m);
    for (std::size_t e = 1; e < powers_.size(); ++e) {
      powers_[e] = powers_[e - 1] * inv;
    }
  }
  const Real& operator[](unsigned e) const { return powers_[e]; }

private:
  std::vector<Real> powers_;
};

unsigned max_part(const std::vector<unsigned>& parts, unsigned at_least = 1) {
  unsigned out = at_least;
  for (unsigned p : parts) {
    out = std::max(out, p);
  }
  return out;
}

// top[m] = sum over m = m1 > m2 > ... > mn of prod m_i^{-k_i}, the bottom
// variable further weighted by sum_{S < mn} floor[S]. Entries 0..M.
std::vector<Real> strict_chain_tops(const std::vector<unsigned>& parts,
                                    const std::vector<Real>& floor, long M) {
  const std::size_t n = parts.size();
  std::vector<Real> top(static_cast<std::size_t>(M) + 1, Real(0));
  std::vector<Real> below_prefix(n, Real(0)); // sum over m' < m of level j+1 sums
  Real floor_prefix = 0;
  std::vector<Real> level(n);
  InversePowers inv(max_part(parts));
  for (long m = 1; m <= M; ++m) {
    floor_prefix += floor[static_cast<std::size_t>(m - 1)];
    inv.set(m);
    for (std::size_t j = 0; j < n; ++j) {
      const Real& beneath = (j + 1 == n) ? floor_prefix : below_prefix[j + 1];
      level[j] = inv[parts[j]] * beneath;
    }
    for (std::size_t j = 0; j < n; ++j) {
      below_prefix[j] += level[j];
    }
    top[static_cast<std::size_t>(m)] = level[0];
  }
  return top;
}

std::vector<Real> unit_floor(long M) {
  std::vector<Real> floor(static_cast<std::size_t>(M) + 1, Real(0));
  floor[0] = 1;
  return floor;
}

void require_truncation(long M) {
  if (M <= 0) {
    throw std::invalid_argument("truncation M must be >= 1");
  }
}

} // namespace

ApproxValue& ApproxValue::operator+=(const ApproxValue& other) {
  value += other.value;
  error_bound += other.error_bound;
  return *this;
}

ApproxValue& ApproxValue::operator-=(const ApproxValue& other) {
  value -= other.value;
  error_bound += other.error_bound;
  return *this;
}

ApproxValue operator*(const Real& scale, ApproxValue a) {
  a.value *= scale;
  a.error_bound *= abs(scale);
  return a;
}

bool agree_within_bounds(const ApproxValue& a, const ApproxValue& b) {
  return abs(a.value - b.value) <= a.error_bound + b.error_bound;
}

Real to_real(const Rational& q) {
  // Decimal strings parse to within half an ulp; nudge outward by a few ulps
  // so the magnitude is never underestimated.
  const Real num(q.get_num().get_str());
  const Real den(q.get_den().get_str());
  return (num / den) * (1 + 8 * kEpsilon);
}

std::string to_decimal(const Real& x, int digits) {
  std::ostringstream out;
  out.precision(digits);
  out << x;
  return out.str();
}

unsigned default_jobs() {
  if (const char* env = std::getenv("POSETZETA_JOBS")) {
    const long jobs = std::strtol(env, nullptr, 10);
    if (jobs > 0) {
      return static_cast<unsigned>(jobs);
    }
  }
  return 1;
}

ApproxValue mzv_eval(const Index& k, long M) {
  if (!k.is_admissible()) {
    throw std::invalid_argument("mzv_eval: index " + k.to_string() + " is not admissible");
  }
  if (k.empty()) {
    return ApproxValue{1, 0};
  }
  require_truncation(M);
  const std::vector<Real> tops = strict_chain_tops(k.parts(), unit_floor(M), M);
  Real sum = 0;
  for (const Real& t : tops) {
    sum += t;
  }
  // The strict inner sum below m1 is at most e_{n-1}(1, 1/2, ..., 1/(m1-1)),
  // and by Maclaurin e_{n-1} <= H^{n-1}/(n-1)! <= (1 + ln m1)^{n-1}/(n-1)!.
  const unsigned d = static_cast<unsigned>(k.depth() - 1);
  const Rational tail = log_power_tail_bound(k[0], d, static_cast<unsigned long>(M)) / Rational(factorial(d));
  const long ops = M * static_cast<long>(2 * k.depth() + max_part(k.parts()) + 2);
  return ApproxValue{sum, finish_bound(tail, sum, ops)};
}

ApproxValue combination_eval(const ZetaCombination& c, long M, unsigned jobs) {
  if (jobs == 0) {
    jobs = default_jobs();
  }
  std::vector<std::pair<Index, Rational>> terms(c.terms().begin(), c.terms().end());
  for (const auto& [k, coeff] : terms) {
    if (!k.is_admissible()) {
      throw std::invalid_argument("combination_eval: key " + k.to_string() + " is not admissible");
    }
  }
  std::vector<ApproxValue> values(terms.size());
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < terms.size(); i += stride) {
      values[i] = mzv_eval(terms[i].first, M);
    }
  };
  const std::size_t workers = std::min<std::size_t>(jobs, std::max<std::size_t>(terms.size(), 1));
  if (workers <= 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back(work, w, workers);
    }
  }
  ApproxValue total;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    total += to_real(terms[i].second) * values[i];
  }
  total.error_bound += kSlack * Real(static_cast<long>(terms.size()) + 1) * kEpsilon * abs(total.value);
  return total;
}

ApproxValue mt_series_eval(const std::vector<unsigned>& ks, unsigned k, long M) {
  if (ks.empty()) {
    throw std::invalid_argument("mt_series_eval: need at least one branch exponent");
  }
  for (unsigned e : ks) {
    if (e == 0) {
      throw std::invalid_argument("mt_series_eval: branch exponents must be >= 1");
    }
  }
  if (k == 0) {
    throw std::invalid_argument("mt_series_eval: the joint exponent must be >= 1");
  }
  require_truncation(M);
  const auto size = static_cast<std::size_t>(M) + 1;
  // conv[S] = sum over m1 + ... + mj = S of prod m_i^{-k_i}.
  std::vector<Real> conv(size, Real(0));
  conv[0] = 1;
  for (unsigned e : ks) {
    std::vector<Real> term(size, Real(0));
    for (std::size_t m = 1; m < size; ++m) {
      term[m] = pow(Real(1) / Real(static_cast<long>(m)), static_cast<int>(e));
    }
    std::vector<Real> next(size, Real(0));
    for (std::size_t s = 0; s < size; ++s) {
      if (conv[s] == 0) {
        continue;
      }
      for (std::size_t m = 1; s + m < size; ++m) {
        next[s + m] += conv[s] * term[m];
      }
    }
    conv = std::move(next);
  }
  Real sum = 0;
  for (std::size_t s = 1; s < size; ++s) {
    sum += conv[s] * pow(Real(1) / Real(static_cast<long>(s)), static_cast<int>(k));
  }
  // With S = m1 + ... + mr:  1/(m1...mr) = (1/S) sum_j prod_{i != j} 1/m_i, so
  // the inner sum at fixed S is at most r (1 + ln S)^{r-1} / S.
  const auto r = static_cast<unsigned>(ks.size());
  const Rational tail = Rational(r) * log_power_tail_bound(k + 1, r - 1, static_cast<unsigned long>(M));
  const long ops = M * M * static_cast<long>(r + 1);
  return ApproxValue{sum, finish_bound(tail, sum, ops)};
}

ApproxValue kmt_series_eval(const Index& p, const Index& q, const Index& r, long M) {
  if (p.empty() || p[0] < 2) {
    throw std::invalid_argument("kmt_series_eval: the top exponents must start with a part >= 2");
  }
  require_truncation(M);
  const auto size = static_cast<std::size_t>(M) + 1;
  auto branch = [&](const Index& seq) {
    if (seq.empty()) {
      return unit_floor(M);
    }
    return strict_chain_tops(seq.parts(), unit_floor(M), M);
  };
  const std::vector<Real> qs = branch(q);
  const std::vector<Real> rs = branch(r);
  std::vector<Real> joint(size, Real(0));
  for (std::size_t m = 0; m < size; ++m) {
    if (qs[m] == 0) {
      continue;
    }
    for (std::size_t n = 0; m + n < size; ++n) {
      joint[m + n] += qs[m] * rs[n];
    }
  }
  const std::vector<Real> tops = strict_chain_tops(p.parts(), joint, M);
  Real sum = 0;
  for (const Real& t : tops) {
    sum += t;
  }
  // At fixed l1 = L every other variable lies in [1, L) with exponent >= 1.
  const auto others = static_cast<unsigned>(p.depth() - 1 + q.depth() + r.depth());
  const Rational tail = log_power_tail_bound(p[0], others, static_cast<unsigned long>(M));
  const long ops = M * M + M * static_cast<long>(4 * others + 8);
  return ApproxValue{sum, finish_bound(tail, sum, ops)};
}

} // namespace pz
