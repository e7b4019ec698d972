#include "expvote/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace expvote {

double binomial_tail_geq(int n, double p, int m) {
  if (n < 0) throw std::invalid_argument("binomial_tail_geq: n must be >= 0");
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("binomial_tail_geq: p must lie in [0,1]");
  if (m <= 0) return 1.0;
  if (m > n) return 0.0;
  if (p == 0.0) return 0.0;  // m >= 1 here
  if (p == 1.0) return 1.0;  // m <= n here

  const double log_p = std::log(p);
  const double log_q = std::log1p(-p);
  const double lg_n1 = std::lgamma(n + 1.0);
  long double sum = 0.0L;
  for (int j = m; j <= n; ++j) {
    const double log_term = lg_n1 - std::lgamma(j + 1.0) - std::lgamma(n - j + 1.0) +
                            j * log_p + (n - j) * log_q;
    sum += std::exp(static_cast<long double>(log_term));
  }
  const double out = static_cast<double>(sum);
  return out < 0.0 ? 0.0 : (out > 1.0 ? 1.0 : out);
}

Interval wilson95(long long successes, long long trials) {
  if (trials <= 0 || successes < 0 || successes > trials)
    throw std::invalid_argument("wilson95: need 0 <= successes <= trials, trials > 0");
  constexpr double z = 1.959963984540054;  // 97.5% normal quantile
  const double n = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (phat + z2 / (2.0 * n)) / denom;
  const double half =
      z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
  Interval ci{center - half, center + half};
  if (ci.lo < 0.0) ci.lo = 0.0;
  if (ci.hi > 1.0) ci.hi = 1.0;
  // the interval contains the point estimate exactly; rounding must not lose that
  if (ci.lo > phat) ci.lo = phat;
  if (ci.hi < phat) ci.hi = phat;
  return ci;
}

}  // namespace expvote
