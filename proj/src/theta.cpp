#include "cnb/theta.hpp"

#include <cmath>
#include <string>

#include "cnb/errors.hpp"
#include "cnb/subsets.hpp"

namespace cnb {

namespace {

void check_kn(unsigned n, unsigned k) {
    if (n == 0 || k == 0 || k > n) {
        throw DomainError("theta requires 1 <= k <= n, got k=" + std::to_string(k) +
                          " n=" + std::to_string(n));
    }
}

double nk_half(unsigned n, unsigned k) { // (n/k)^{k/2}
    return std::pow(static_cast<double>(n) / k, k / 2.0);
}

double root_n_pow(unsigned n, unsigned e) { // n^{e/2}
    return std::pow(static_cast<double>(n), e / 2.0);
}

double hadamard_style(unsigned n, unsigned k) { // C(n,k) * (k+1)^{(k-1)/2}
    return static_cast<double>(binomial(n, k)) * std::pow(k + 1.0, (k - 1) / 2.0);
}

} // namespace

const char* to_string(ThetaKind k) {
    return k == ThetaKind::Exact ? "exact" : "upper_bound";
}

ThetaValue theta(NormKind mu, NormKind nu, unsigned n, unsigned k) {
    check_kn(n, k);
    if (mu == NormKind::L1 && nu == NormKind::L1) return {ThetaKind::Exact, 1.0};
    if (mu == NormKind::L2 && nu == NormKind::L2) return {ThetaKind::Exact, nk_half(n, k)};
    if (mu == NormKind::LInf && nu == NormKind::LInf) {
        if (k == n) return {ThetaKind::Exact, root_n_pow(n, n)};
        if (k == 1) return {ThetaKind::Exact, static_cast<double>(n)};
        if (k == n - 1) return {ThetaKind::Exact, root_n_pow(n, n)};
        return {ThetaKind::UpperBound, hadamard_style(n, k)};
    }
    if (mu == NormKind::L1 && nu == NormKind::L2)
        return {ThetaKind::UpperBound, root_n_pow(n, k)};
    if (mu == NormKind::L1 && nu == NormKind::LInf)
        return {ThetaKind::UpperBound, std::pow(static_cast<double>(n), k)};
    if (mu == NormKind::L2 && nu == NormKind::L1)
        return {ThetaKind::UpperBound, nk_half(n, k)};
    if (mu == NormKind::L2 && nu == NormKind::LInf)
        return {ThetaKind::UpperBound, nk_half(n, k) * root_n_pow(n, k)};
    // mu = linf, nu in {l1, l2}
    if (k == n) return {ThetaKind::UpperBound, root_n_pow(n, n)};
    return {ThetaKind::UpperBound, hadamard_style(n, k)};
}

double h(unsigned k, unsigned n) {
    if (k == 0 || k >= n) {
        throw DomainError("h(k,n) requires 1 <= k < n, got k=" + std::to_string(k) +
                          " n=" + std::to_string(n));
    }
    const double num = std::pow(static_cast<double>(n), k);
    const double den = std::pow(static_cast<double>(k), k / 2.0) *
                       std::pow(k + 1.0, (k - 1) / 2.0) *
                       static_cast<double>(binomial(n, k));
    return num / den;
}

bool theta_dominance_check(unsigned n, unsigned k) {
    if (k == 0 || k >= n) {
        throw DomainError("theta_dominance_check requires 1 <= k < n");
    }
    const double rhs = hadamard_style(n, k);
    const double plain = nk_half(n, k);
    const double scaled = plain * root_n_pow(n, k);
    const double slack = 1.0 + 1e-12;
    return plain <= rhs * slack && scaled <= rhs * slack;
}

} // namespace cnb
