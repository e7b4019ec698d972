#pragma once

namespace expvote {

// Pr(Binomial(n, p) >= m). Terms are summed in log space via lgamma, so the
// result stays accurate out to n in the tens of thousands.
double binomial_tail_geq(int n, double p, int m);

struct Interval {
  double lo;
  double hi;
};

// 95% Wilson score interval for a binomial proportion.
Interval wilson95(long long successes, long long trials);

}  // namespace expvote
