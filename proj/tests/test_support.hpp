// Shared fixtures for the test suites: high-precision reference values and
// small independent oracles (bisection, closed algebraic forms) that the
// implementation results are checked against.

#ifndef IRSNOMA_TESTS_SUPPORT_HPP
#define IRSNOMA_TESTS_SUPPORT_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace testsupport
{

// 11 degrees in radians and its sinc values, evaluated with 60-digit
// arithmetic and frozen here.
constexpr double k_delta_11 = 0.19198621771937625;
constexpr double k_sinc_11 = 0.993868193473387;
constexpr double k_sinc_sq_11 = 0.987773985998054;

// E |(1/N) sum exp(j theta)|^2 = sinc^2(delta)(1 - 1/N) + 1/N at N = 32,
// delta = 11 deg.
constexpr double k_mean_coherence_n32_d11 = 0.988156048935614;

// Worked 8/5 dB pair with the rounded linear SINRs 6.309573 / 3.162278
// (the literal inputs of the documented examples).
constexpr double k_gamma1_rounded = 6.309573;
constexpr double k_gamma2_rounded = 3.162278;
constexpr double k_r1_min_0 = 1.43489356568972;      // 0.5*log2(1+gamma1)
constexpr double k_r2_min_0 = 1.02868666319824;      // 0.5*log2(1+gamma2)
constexpr double k_oma_g1_11 = 1.42724043412933;     // 0.5*log2(1+gamma1*sinc^2(11deg))
constexpr double k_alpha_lb_0 = 0.270005941755242;   // (2^r1-1)/gamma1
constexpr double k_alpha_ub_0 = 0.328929388783292;   // Eq.-style upper bound at delta=0
constexpr double k_alpha_fpa_0 = 0.301733422998768;  // outage-balancing split
constexpr double k_sinc_sq_ub_0 = 0.879786376771094; // feasibility bound at delta=0 rates
constexpr double k_delta_ub_0 = 0.615884413220275;   // sinc^2 inverse of the above
constexpr double k_r_strong_at_ub_0 = 1.62077593780984;
constexpr double k_asr_at_ub_0 = 2.64946260100808;
constexpr double k_strong_threshold_fpa_0 = 5.6461169697644;

// Same pair with exact dB conversion (gamma = 10^0.8, 10^0.5), as produced
// by dB-driven interfaces.
constexpr double k_gamma1_exact = 6.3095734448019325;
constexpr double k_gamma2_exact = 3.1622776601683793;
constexpr double k_r1_min_0_exact = 1.43489360958514;
constexpr double k_r2_min_0_exact = 1.0286866043034;
constexpr double k_alpha_lb_0_exact = 0.270005935758197;
constexpr double k_alpha_ub_0_exact = 0.328929397794305;
constexpr double k_alpha_fpa_0_exact = 0.301733422644439;
constexpr double k_sinc_sq_ub_0_exact = 0.879786351059619;
constexpr double k_delta_ub_0_exact = 0.615884482577876;

// MPA at delta = 11 deg with the minimum rate recomputed at the operating
// delta (rounded-input pair).
constexpr double k_r2_min_11 = 1.02195498640658;
constexpr double k_alpha_ub_11 = 0.329960167940799;

// Four-user population [8, 5, 2, -1] dB at delta = 11 deg: feasibility
// bounds of the two near-far groups.
constexpr double k_ssub_pair_1_4 = 0.78053855453306;
constexpr double k_ssub_pair_2_3 = 0.901704753143741;

// Delta-sweep markers at delta = 11 deg with minimum rates fixed at the
// perfect-compensation OMA rates (exact dB pair).
constexpr double k_alpha_lb_11_flat = 0.27334789089974;
constexpr double k_alpha_ub_11_flat = 0.326933839263824;

// Path loss at 100 m, 3.5 GHz.
constexpr double k_path_loss_db_100m = 82.8813608870055;
constexpr double k_path_amp_100m = 7.17681837574166e-5;

// Independent inversion of sinc^2 by bisection on sin(x)^2/x^2, tighter than
// the implementation's tolerance.
inline double oracle_delta_from_sinc_sq(double target)
{
    double lo = 0.0;
    double hi = 3.14159265358979323846;
    for (int i = 0; i < 200 && (hi - lo) > 1e-13; ++i)
    {
        const double mid = 0.5 * (lo + hi);
        const double s = std::sin(mid) / mid;
        if (s * s >= target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

inline std::mt19937_64 make_generator(std::uint64_t seed)
{
    return std::mt19937_64(seed);
}

} // namespace testsupport

#endif
