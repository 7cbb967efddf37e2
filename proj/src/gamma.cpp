#include "subdiff/gamma.hpp"

#include <cmath>
#include <limits>

namespace subdiff {

namespace {

constexpr long double kPi = 3.14159265358979323846264338327950288L;

// Lanczos rational approximation, g = 12.2252227365970611572265625, N = 17.
// Coefficients are the standard published set for 64-bit-mantissa floats
// (Boost.Math "lanczos17m64"); denominator is z(z+1)...(z+15).
constexpr long double kLanczosG = 12.2252227365970611572265625L;

constexpr long double kNum[17] = {
    553681095419291969.2230556393350368550504L,
    731918863887667017.2511276782146694632234L,
    453393234285807339.4627124634539085143364L,
    174701893724452790.3546219631779712198035L,
    46866125995234723.82897281620357050883077L,
    9281280675933215.169109622777099699054272L,
    1403600894156674.551057997617468721789536L,
    165345984157572.7305349809894046783973837L,
    15333629842677.31531822808737907246817024L,
    1123152927963.956626161137169462874517318L,
    64763127437.92329018717775593533620578237L,
    2908830362.657527782848828237106640944457L,
    99764700.56999856729959383751710026787811L,
    2525791.604886139959837791244686290089331L,
    44516.94034970167828580039370201346554872L,
    488.0063567520005730476791712814838113252L,
    2.50662827463100050241576877135758834683L,
};

constexpr long double kDen[17] = {
    0.0L,
    1307674368000.0L,
    4339163001600.0L,
    6165817614720.0L,
    5056995703824.0L,
    2706813345600.0L,
    1009672107080.0L,
    272803210680.0L,
    54631129553.0L,
    8207628000.0L,
    928095740.0L,
    78558480.0L,
    4899622.0L,
    218400.0L,
    6580.0L,
    120.0L,
    1.0L,
};

long double lanczos_sum(long double z) {
    long double num = 0.0L, den = 0.0L;
    if (z <= 170.0L) {
        for (int i = 16; i >= 0; --i) {
            num = num * z + kNum[i];
            den = den * z + kDen[i];
        }
    } else {
        // evaluate in 1/z to avoid overflow of the high powers
        long double zi = 1.0L / z;
        for (int i = 0; i <= 16; ++i) {
            num = num * zi + kNum[i];
            den = den * zi + kDen[i];
        }
    }
    return num / den;
}

long double gamma_positive(long double x) {
    // x >= 0.5
    long double zgh = x + kLanczosG - 0.5L;
    long double lz = lanczos_sum(x);
    // split the power so that intermediate results stay representable
    long double p = (x - 0.5L) * std::log(zgh);
    if (p > 11000.0L) return std::numeric_limits<long double>::infinity();
    return lz * std::exp(p - zgh);
}

}  // namespace

long double sinpi_ld(long double x) {
    if (!std::isfinite((double)x)) return std::numeric_limits<long double>::quiet_NaN();
    long double n = std::floor(x);
    long double f = x - n;  // in [0,1)
    long double s;
    if (f < 0.25L)
        s = std::sin(kPi * f);
    else if (f <= 0.75L)
        s = std::cos(kPi * (f - 0.5L));
    else
        s = std::sin(kPi * (1.0L - f));
    bool odd = std::fmod(n, 2.0L) != 0.0L;
    return odd ? -s : s;
}

long double gamma_ld(long double x) {
    if (x >= 0.5L) return gamma_positive(x);
    // reflection: Gamma(x) = pi / (sin(pi x) Gamma(1-x)); poles give inf
    long double s = sinpi_ld(x);
    return kPi / (s * gamma_positive(1.0L - x));
}

long double lgamma_ld(long double x) {
    // x > 0 only
    if (x < 0.5L) return std::log(kPi / sinpi_ld(x)) - lgamma_ld(1.0L - x);
    long double zgh = x + kLanczosG - 0.5L;
    return std::log(lanczos_sum(x)) + (x - 0.5L) * std::log(zgh) - zgh;
}

long double rgamma_ld(long double x) {
    if (x >= 0.5L) {
        long double g = gamma_positive(x);
        if (std::isinf((double)g)) return 0.0L;
        return 1.0L / g;
    }
    // 1/Gamma(x) = sin(pi x) Gamma(1-x) / pi, zero at the poles
    long double s = sinpi_ld(x);
    if (s == 0.0L) return 0.0L;
    long double g = gamma_positive(1.0L - x);
    if (std::isinf((double)g)) {
        // deep negative axis: combine in log space
        long double lg = lgamma_ld(1.0L - x);
        long double mag = std::exp(lg + std::log(std::fabs(s) / kPi));
        return s > 0 ? mag : -mag;
    }
    return s * g / kPi;
}

}  // namespace subdiff
