#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <iosfwd>
#include <string>
#include <vector>

namespace levymix {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Exact decomposition weights of the T(3)-process law at integer time n:
/// the law is the convex combination sum_k q(k) T(2k+1, n), with q(0) = 0,
/// q(k) > 0 for 1 <= k <= n, sum q = 1 and sum_{k>=1} q(k)/(2k-1) = 1/n.
/// Index k stored densely 0..n, including the structural zero at k = 0.
struct MixtureWeights {
    int n = 0;
    std::vector<BigRat> weights;

    double value(int k) const;
    std::string rational(int k) const;  // reduced "p/q"
};

/// q_n(k) = [(-1)^k/(2k+1)] sum_{j=0}^{2k+1} C(n,j) C(2k+1,j) C(j,k) (j+1)!
///          (-1/2n)^j, evaluated in exact integer arithmetic over a common
/// power-of-(2n) denominator (the alternating sum cancels catastrophically
/// in floating point beyond n ~ 20). 1 <= n <= 10^4.
MixtureWeights mixture_weights(int n);

/// sum_{k=1}^n q_n(k) student_pdf(2k+1, n, x).
double mixture_pdf(const MixtureWeights& w, double x);
double mixture_pdf(double x, int n);

/// CSV rows (n, k, decimal, reduced rational) for every 1 <= n <= n_max,
/// header `n,k,q_decimal,q_rational`.
void weights_csv(std::ostream& os, int n_max);

}  // namespace levymix
