#include "levymix/mixture.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "levymix/emit.hpp"
#include "levymix/laws.hpp"

namespace levymix {

double MixtureWeights::value(int k) const {
    return weights.at(k).convert_to<double>();
}

std::string MixtureWeights::rational(int k) const {
    const BigRat& q = weights.at(k);
    return numerator(q).str() + "/" + denominator(q).str();
}

MixtureWeights mixture_weights(int n) {
    if (n < 1 || n > 10000)
        throw std::domain_error("mixture_weights: n must be in [1, 10^4]");

    // Binomial row C(n, .) and the (2n)^i powers used as common denominators.
    std::vector<BigInt> binom_n(n + 1);
    binom_n[0] = 1;
    for (int j = 1; j <= n; ++j) binom_n[j] = binom_n[j - 1] * (n - j + 1) / j;

    std::vector<BigInt> pow2n(n + 1);
    pow2n[0] = 1;
    for (int i = 1; i <= n; ++i) pow2n[i] = pow2n[i - 1] * (2 * n);

    std::vector<BigInt> fact(n + 2);
    fact[0] = 1;
    for (int i = 1; i <= n + 1; ++i) fact[i] = fact[i - 1] * i;

    MixtureWeights out;
    out.n = n;
    out.weights.assign(n + 1, BigRat(0));

    for (int k = 0; k <= n; ++k) {
        const int jmax = std::min(n, 2 * k + 1);
        // C(2k+1, j) and C(j, k) tracked incrementally over j, starting at j = k.
        BigInt c2k1 = 1;
        for (int j = 1; j <= k; ++j) c2k1 = c2k1 * (2 * k + 2 - j) / j;
        BigInt cjk = 1;  // C(k, k)
        BigInt sum = 0;
        for (int j = k; j <= jmax; ++j) {
            const BigInt term = binom_n[j] * c2k1 * cjk * fact[j + 1] * pow2n[jmax - j];
            if (j % 2 == 0)
                sum += term;
            else
                sum -= term;
            c2k1 = c2k1 * (2 * k + 1 - j) / (j + 1);
            cjk = cjk * (j + 1) / (j + 1 - k);
        }
        if (k % 2 == 1) sum = -sum;
        out.weights[k] = BigRat(sum, BigInt(2 * k + 1) * pow2n[jmax]);
    }
    return out;
}

double mixture_pdf(const MixtureWeights& w, double x) {
    double total = 0.0;
    for (int k = 1; k <= w.n; ++k) {
        const double q = w.value(k);
        total += q * student_pdf(StudentParams(2.0 * k + 1.0,
                                               static_cast<double>(w.n)),
                                 x);
    }
    return total;
}

double mixture_pdf(double x, int n) { return mixture_pdf(mixture_weights(n), x); }

void weights_csv(std::ostream& os, int n_max) {
    if (n_max < 1) throw std::domain_error("weights_csv: n_max must be >= 1");
    os << "n,k,q_decimal,q_rational\n";
    for (int n = 1; n <= n_max; ++n) {
        const MixtureWeights w = mixture_weights(n);
        for (int k = 0; k <= n; ++k)
            os << n << ',' << k << ',' << emit::g17(w.value(k)) << ','
               << w.rational(k) << '\n';
    }
}

}  // namespace levymix
