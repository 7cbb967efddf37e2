#include "subdiff/mittag_leffler.hpp"

#include <cmath>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include <mpfr.h>

#include "subdiff/gamma.hpp"

namespace subdiff {

namespace {

constexpr double kRelTarget = 1e-11;   // internal target, 10x under the contract
constexpr double kAbsFloor = 1e-12;
constexpr double kFastMaxM = 13.0;     // long double Taylor pre-gate, m = |z|^{1/alpha}
constexpr double kAsymMinM = 50.0;     // asymptotic branch entry
constexpr double kMpfrMaxM = 2500.0;
constexpr long double kTermEps = 4e-18L;  // per-term error credit in the ld path

// ---------------------------------------------------------------- ld Taylor

// cache of 1/Gamma(alpha k + beta) in long double, keyed by (alpha, beta)
const std::vector<long double>& ld_inv_gammas(double alpha, double beta, std::size_t upto) {
    thread_local std::map<std::pair<double, double>, std::vector<long double>> cache;
    auto& vec = cache[{alpha, beta}];
    if (vec.size() <= upto) {
        std::size_t target = std::max<std::size_t>(upto + 1, vec.size() * 2 + 16);
        for (std::size_t k = vec.size(); k < target; ++k)
            vec.push_back(rgamma_ld((long double)alpha * k + (long double)beta));
    }
    return vec;
}

struct TaylorLd {
    long double sum = 0.0L;
    long double abs_sum = 0.0L;
    long double tail = 0.0L;  // rigorous geometric remainder bound
    bool converged = false;
};

TaylorLd taylor_ld(double alpha, double beta, double z, long max_terms) {
    TaylorLd r;
    long double s = 0.0L, comp = 0.0L, zp = 1.0L;
    const long double zl = z, az = std::fabs((long double)z);
    for (long k = 0; k < max_terms; ++k) {
        const auto& ig = ld_inv_gammas(alpha, beta, (std::size_t)k + 2);
        long double t = zp * ig[(std::size_t)k];
        // Kahan
        long double y = t - comp;
        long double snew = s + y;
        comp = (snew - s) - y;
        s = snew;
        r.abs_sum += std::fabs(t);
        zp *= zl;
        if (k < 2) continue;
        // term ratios |t_{j+1}/t_j| = |z| ig[j+1]/ig[j] decrease in j, so once
        // q < 1 the remainder admits the geometric bound t_{k+1}/(1-q)
        long double tnext = std::fabs(zp * ig[(std::size_t)k + 1]);
        if (ig[(std::size_t)k + 1] == 0.0L) {  // gamma overflow: series exhausted
            r.tail = 0.0L;
            r.converged = true;
            break;
        }
        long double q = az * ig[(std::size_t)k + 2] / ig[(std::size_t)k + 1];
        if (q <= 0.9L && tnext / (1.0L - q) <= 1e-22L * (std::fabs(s) + 1e-300L)) {
            r.tail = tnext / (1.0L - q);
            r.converged = true;
            break;
        }
    }
    r.sum = s;
    return r;
}

bool certified_ld(const TaylorLd& t) {
    if (!t.converged) return false;
    long double err = t.abs_sum * kTermEps + t.tail;
    return err <= std::max((long double)kRelTarget * std::fabs(t.sum), (long double)kAbsFloor);
}

// log-space Taylor for large positive z (no cancellation, only overflow care)
double taylor_ld_logspace(double alpha, double beta, double z, long max_terms) {
    const long double lnz = std::log((long double)z);
    long double s = 0.0L, comp = 0.0L, tmax = 0.0L;
    for (long k = 0; k < max_terms; ++k) {
        long double lt = k * lnz - lgamma_ld((long double)alpha * k + (long double)beta);
        long double t = std::exp(lt);
        long double y = t - comp;
        long double snew = s + y;
        comp = (snew - s) - y;
        s = snew;
        tmax = std::max(tmax, t);
        if (k > 4 && t < 1e-25L * s && ((long double)alpha * k + beta) > std::pow((long double)z, 1.0L / alpha))
            return (double)s;  // past the peak and negligible
    }
    throw certification_error("ml: positive-axis series did not converge");
}

// ------------------------------------------------------------- mpfr Taylor

struct MpfrVal {
    mpfr_t v;
    explicit MpfrVal(mpfr_prec_t p) { mpfr_init2(v, p); }
    MpfrVal(const MpfrVal&) = delete;
    MpfrVal& operator=(const MpfrVal&) = delete;
    ~MpfrVal() { mpfr_clear(v); }
};

struct MpGammaCache {
    mpfr_prec_t prec = 0;
    double alpha = 0, beta = 0;
    std::deque<MpfrVal> inv;  // inv[k] = 1/Gamma(alpha k + beta)

    void ensure(std::size_t n) {
        if (inv.size() >= n) return;
        mpfr_t x, g;
        mpfr_init2(x, prec);
        mpfr_init2(g, prec);
        for (std::size_t k = inv.size(); k < n; ++k) {
            mpfr_set_d(x, alpha, MPFR_RNDN);
            mpfr_mul_ui(x, x, (unsigned long)k, MPFR_RNDN);
            mpfr_add_d(x, x, beta, MPFR_RNDN);
            mpfr_gamma(g, x, MPFR_RNDN);
            inv.emplace_back(prec);
            mpfr_ui_div(inv.back().v, 1u, g, MPFR_RNDN);
        }
        mpfr_clear(x);
        mpfr_clear(g);
    }
};

MpGammaCache& mp_cache(double alpha, double beta, mpfr_prec_t prec) {
    thread_local std::map<std::tuple<double, double, long>, MpGammaCache> cache;
    auto& c = cache[{alpha, beta, (long)prec}];
    if (c.prec == 0) {
        c.prec = prec;
        c.alpha = alpha;
        c.beta = beta;
    }
    return c;
}

double taylor_mpfr(double alpha, double beta, double z, double m) {
    mpfr_prec_t prec = (mpfr_prec_t)(96 + 1.4427 * (m + 30.0));
    const long kmax = (long)(std::pow(2.0, 1.0 / alpha) * m / alpha) + 512;
    for (int attempt = 0; attempt < 6; ++attempt) {
        MpGammaCache& cache = mp_cache(alpha, beta, prec);
        MpfrVal s(prec), zp(prec), t(prec), zv(prec), ratio(prec);
        mpfr_set_zero(s.v, 1);
        mpfr_set_ui(zp.v, 1u, MPFR_RNDN);
        mpfr_set_d(zv.v, z, MPFR_RNDN);
        long double abs_sum = 0.0L, tail = 0.0L;
        long used = 0;
        bool converged = false;
        for (long k = 0; k <= kmax; ++k) {
            cache.ensure((std::size_t)k + 3);
            mpfr_mul(t.v, zp.v, cache.inv[(std::size_t)k].v, MPFR_RNDN);
            mpfr_add(s.v, s.v, t.v, MPFR_RNDN);
            mpfr_mul(zp.v, zp.v, zv.v, MPFR_RNDN);
            abs_sum += std::fabs(mpfr_get_ld(t.v, MPFR_RNDN));
            used = k;
            if (k < 4) continue;
            long double sl = std::fabs(mpfr_get_ld(s.v, MPFR_RNDN));
            // geometric tail bound from the decreasing term ratios
            mpfr_div(ratio.v, cache.inv[(std::size_t)k + 2].v, cache.inv[(std::size_t)k + 1].v, MPFR_RNDN);
            double q = std::fabs(mpfr_get_d(ratio.v, MPFR_RNDN)) * std::fabs(z);
            mpfr_mul(ratio.v, zp.v, cache.inv[(std::size_t)k + 1].v, MPFR_RNDN);
            long double tnext = std::fabs(mpfr_get_ld(ratio.v, MPFR_RNDN));
            if (q <= 0.9 && tnext / (1.0L - (long double)q) <= 1e-25L * (sl + (long double)kAbsFloor)) {
                tail = tnext / (1.0L - (long double)q);
                converged = true;
                break;
            }
        }
        double sd = mpfr_get_d(s.v, MPFR_RNDN);
        long double err = abs_sum * (long double)(used + 2) * std::pow(2.0L, (long double)(1 - (long)prec))
                          + tail;
        if (converged && err <= std::max((long double)kRelTarget * std::fabs((long double)sd),
                                         (long double)kAbsFloor))
            return sd;
        prec *= 2;
        if (prec > 16384) break;
    }
    throw certification_error("ml: mpfr Taylor branch failed to certify tolerance");
}

// ------------------------------------------------------- asymptotic branch

struct AsymResult {
    long double sum = 0.0L;
    long double bound = 0.0L;
    bool certified = false;
};

// E_{a,b}(z) ~ -sum_{k>=1} z^{-k}/Gamma(b - a k) for z -> -inf, 0 < a <= 1
AsymResult asymptotic_neg(double alpha, double beta, double z) {
    AsymResult r;
    const int kmax = (int)std::ceil(1.0 / alpha) * 10;
    const long double zi = 1.0L / (long double)z;
    long double zp = zi, s = 0.0L;
    long double prev_mag = std::numeric_limits<long double>::infinity();
    int k = 1;
    long double next_mag = 0.0L;
    for (; k <= kmax; ++k) {
        long double a = -zp * rgamma_ld((long double)beta - (long double)alpha * k);
        long double mag = std::fabs(a);
        if (mag != 0.0L && mag > prev_mag) {  // divergence onset: stop before adding
            next_mag = mag;
            break;
        }
        s += a;
        zp *= zi;
        if (mag != 0.0L) prev_mag = mag;
        long double small_enough = 0.5L * std::max((long double)kRelTarget * std::fabs(s),
                                                   0.25L * (long double)kAbsFloor);
        if (mag != 0.0L && mag <= small_enough) {
            next_mag = std::fabs(zp * rgamma_ld((long double)beta - (long double)alpha * (k + 1)));
            ++k;
            break;
        }
    }
    if (next_mag == 0.0L)
        next_mag = std::fabs(zp * rgamma_ld((long double)beta - (long double)alpha * k));
    // remainder is O(|z|^{-k-1}); include that scale in case the coefficient vanishes
    r.sum = s;
    r.bound = 2.0L * next_mag + std::pow(std::fabs((long double)z), (long double)(-k - 1));
    r.certified = r.bound <= std::max((long double)kRelTarget * std::fabs(s), (long double)kAbsFloor);
    return r;
}

}  // namespace

void MLParams::validate() const {
    if (!(alpha > 0.0) || !(alpha <= 2.0) || !std::isfinite(alpha))
        throw std::invalid_argument("MLParams: alpha must lie in (0, 2]");
    if (!(beta > 0.0) || !std::isfinite(beta))
        throw std::invalid_argument("MLParams: beta must be positive");
}

double ml(const MLParams& params, double z) {
    params.validate();
    if (!std::isfinite(z)) throw std::invalid_argument("ml: z must be finite");
    const double alpha = params.alpha, beta = params.beta;
    if (z == 0.0) return (double)rgamma_ld((long double)beta);

    const double m = std::pow(std::fabs(z), 1.0 / alpha);

    if (z > 0.0) {
        if (m > 200.0) {
            // peak term ln ~ (m + 1/2 - beta) ln m - lnGamma(m + 1/2); overflow gate
            long double lnpeak = ((long double)m + 0.5L - beta) * std::log((long double)m)
                                 - lgamma_ld((long double)m + 0.5L);
            if (lnpeak > 715.0L) return std::numeric_limits<double>::infinity();
        }
        if (m <= 300.0) {
            TaylorLd t = taylor_ld(alpha, beta, z, 400000);
            if (!t.converged) throw certification_error("ml: series did not converge");
            double v = (double)t.sum;
            return v;  // positive terms, no cancellation: always certified
        }
        double v = taylor_ld_logspace(alpha, beta, z, 2000000);
        return v;
    }

    // z < 0
    if (m <= kFastMaxM) {
        TaylorLd t = taylor_ld(alpha, beta, z, 200000);
        if (certified_ld(t)) return (double)t.sum;
    }
    if (alpha <= 1.0 && m > kAsymMinM) {
        AsymResult a = asymptotic_neg(alpha, beta, z);
        if (a.certified) return (double)a.sum;
    }
    if (m <= kMpfrMaxM) return taylor_mpfr(alpha, beta, z, m);
    throw certification_error("ml: no branch certifies tolerance for alpha=" + std::to_string(alpha)
                              + ", z=" + std::to_string(z));
}

double ml_deriv(double alpha, double z) {
    if (!(alpha > 0.0) || !(alpha <= 1.0) || !std::isfinite(alpha))
        throw std::invalid_argument("ml_deriv: alpha must lie in (0, 1]");
    // term-by-term: d/dz E_{a,1}(z) = E_{a,a}(z)/a
    return ml(MLParams{alpha, alpha}, z) / alpha;
}

}  // namespace subdiff
