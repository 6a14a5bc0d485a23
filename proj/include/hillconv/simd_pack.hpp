#pragma once

#include <cmath>

#if defined(HILLCONV_BUILD_AVX2) && defined(__AVX2__)
#include <immintrin.h>
#endif
#if defined(HILLCONV_BUILD_NEON) && defined(__ARM_NEON)
#include <arm_neon.h>
#endif

// Lane-width abstraction for the sweep kernels.  Only IEEE-exact operations
// are exposed (+ - * / sqrt max), so every backend produces bit-identical
// values for the same lattice point; the build disables FMA contraction.
namespace hillconv::packs {

struct scalar {
    using reg = double;
    static constexpr int lanes = 1;
    static reg set1(double v) { return v; }
    static reg add(reg a, reg b) { return a + b; }
    static reg sub(reg a, reg b) { return a - b; }
    static reg mul(reg a, reg b) { return a * b; }
    static reg div(reg a, reg b) { return a / b; }
    static reg sqrt(reg a) { return std::sqrt(a); }
    static reg max(reg a, reg b) { return a > b ? a : b; }
    static double lane(reg a, int) { return a; }
    // lane l holds base + (j0 + l) * step, each computed in scalar doubles
    static reg iota(double base, double step, long long j0) {
        return base + static_cast<double>(j0) * step;
    }
};

#if defined(HILLCONV_BUILD_AVX2) && defined(__AVX2__)
struct avx2 {
    using reg = __m256d;
    static constexpr int lanes = 4;
    static reg set1(double v) { return _mm256_set1_pd(v); }
    static reg add(reg a, reg b) { return _mm256_add_pd(a, b); }
    static reg sub(reg a, reg b) { return _mm256_sub_pd(a, b); }
    static reg mul(reg a, reg b) { return _mm256_mul_pd(a, b); }
    static reg div(reg a, reg b) { return _mm256_div_pd(a, b); }
    static reg sqrt(reg a) { return _mm256_sqrt_pd(a); }
    static reg max(reg a, reg b) { return _mm256_max_pd(a, b); }
    static double lane(reg a, int i) {
        alignas(32) double tmp[4];
        _mm256_store_pd(tmp, a);
        return tmp[i];
    }
    static reg iota(double base, double step, long long j0) {
        return _mm256_setr_pd(base + static_cast<double>(j0) * step,
                              base + static_cast<double>(j0 + 1) * step,
                              base + static_cast<double>(j0 + 2) * step,
                              base + static_cast<double>(j0 + 3) * step);
    }
};
#endif

#if defined(HILLCONV_BUILD_NEON) && defined(__ARM_NEON)
struct neon {
    using reg = float64x2_t;
    static constexpr int lanes = 2;
    static reg set1(double v) { return vdupq_n_f64(v); }
    static reg add(reg a, reg b) { return vaddq_f64(a, b); }
    static reg sub(reg a, reg b) { return vsubq_f64(a, b); }
    static reg mul(reg a, reg b) { return vmulq_f64(a, b); }
    static reg div(reg a, reg b) { return vdivq_f64(a, b); }
    static reg sqrt(reg a) { return vsqrtq_f64(a); }
    static reg max(reg a, reg b) { return vmaxq_f64(a, b); }
    static double lane(reg a, int i) {
        double tmp[2];
        vst1q_f64(tmp, a);
        return tmp[i];
    }
    static reg iota(double base, double step, long long j0) {
        double tmp[2] = {base + static_cast<double>(j0) * step,
                         base + static_cast<double>(j0 + 1) * step};
        return vld1q_f64(tmp);
    }
};
#endif

// thin value wrapper so kernels read like scalar formulas
template <class K>
struct vd {
    typename K::reg r;
};

template <class K> vd<K> vc(double v) { return {K::set1(v)}; }
template <class K> vd<K> operator+(vd<K> a, vd<K> b) { return {K::add(a.r, b.r)}; }
template <class K> vd<K> operator-(vd<K> a, vd<K> b) { return {K::sub(a.r, b.r)}; }
template <class K> vd<K> operator*(vd<K> a, vd<K> b) { return {K::mul(a.r, b.r)}; }
template <class K> vd<K> operator/(vd<K> a, vd<K> b) { return {K::div(a.r, b.r)}; }
template <class K> vd<K> operator+(double a, vd<K> b) { return vc<K>(a) + b; }
template <class K> vd<K> operator-(double a, vd<K> b) { return vc<K>(a) - b; }
template <class K> vd<K> operator*(double a, vd<K> b) { return vc<K>(a) * b; }
template <class K> vd<K> operator/(double a, vd<K> b) { return vc<K>(a) / b; }
template <class K> vd<K> operator+(vd<K> a, double b) { return a + vc<K>(b); }
template <class K> vd<K> operator-(vd<K> a, double b) { return a - vc<K>(b); }
template <class K> vd<K> operator*(vd<K> a, double b) { return a * vc<K>(b); }
template <class K> vd<K> operator/(vd<K> a, double b) { return a / vc<K>(b); }
template <class K> vd<K> vsqrt(vd<K> a) { return {K::sqrt(a.r)}; }
template <class K> vd<K> vmax(vd<K> a, vd<K> b) { return {K::max(a.r, b.r)}; }

}  // namespace hillconv::packs
