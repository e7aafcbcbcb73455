#include "pairvec/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace pairvec::kern {

namespace scalar {

template <class T>
T dot(const T* a, const T* b, std::size_t n) {
  T acc = 0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

template <class T>
void axpy(T alpha, const T* x, T* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

template <class T>
void mul(const T* a, const T* b, T* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

template <class T>
void mul_add(const T* a, const T* b, T* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a[i] * b[i];
}

template <class T>
void scale(T alpha, T* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= alpha;
}

}  // namespace scalar

#if PAIRVEC_HAVE_AVX2
namespace avx2 {
float dot_f32(const float*, const float*, std::size_t);
double dot_f64(const double*, const double*, std::size_t);
void axpy_f32(float, const float*, float*, std::size_t);
void axpy_f64(double, const double*, double*, std::size_t);
void mul_f32(const float*, const float*, float*, std::size_t);
void mul_f64(const double*, const double*, double*, std::size_t);
void mul_add_f32(const float*, const float*, float*, std::size_t);
void mul_add_f64(const double*, const double*, double*, std::size_t);
void scale_f32(float, float*, std::size_t);
void scale_f64(double, double*, std::size_t);
bool supported();
}  // namespace avx2
#endif

namespace {

constexpr Ops<float> kScalarF32{scalar::dot<float>, scalar::axpy<float>, scalar::mul<float>,
                                scalar::mul_add<float>, scalar::scale<float>};
constexpr Ops<double> kScalarF64{scalar::dot<double>, scalar::axpy<double>, scalar::mul<double>,
                                 scalar::mul_add<double>, scalar::scale<double>};

#if PAIRVEC_HAVE_AVX2
constexpr Ops<float> kAvx2F32{avx2::dot_f32, avx2::axpy_f32, avx2::mul_f32, avx2::mul_add_f32,
                              avx2::scale_f32};
constexpr Ops<double> kAvx2F64{avx2::dot_f64, avx2::axpy_f64, avx2::mul_f64, avx2::mul_add_f64,
                               avx2::scale_f64};
#endif

Isa detect() {
  if (const char* env = std::getenv("PAIRVEC_ISA")) {
    if (std::strcmp(env, "scalar") == 0) return Isa::scalar;
#if PAIRVEC_HAVE_AVX2
    if (std::strcmp(env, "avx2") == 0 && avx2::supported()) return Isa::avx2;
#endif
    return Isa::scalar;
  }
#if PAIRVEC_HAVE_AVX2
  if (avx2::supported()) return Isa::avx2;
#endif
  return Isa::scalar;
}

Isa g_isa = detect();

}  // namespace

const char* isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

Isa active_isa() { return g_isa; }

void force_isa(Isa isa) {
#if PAIRVEC_HAVE_AVX2
  if (isa == Isa::avx2 && !avx2::supported()) isa = Isa::scalar;
#else
  isa = Isa::scalar;
#endif
  g_isa = isa;
}

void reset_isa() { g_isa = detect(); }

template <>
const Ops<float>& ops<float>() {
#if PAIRVEC_HAVE_AVX2
  if (g_isa == Isa::avx2) return kAvx2F32;
#endif
  return kScalarF32;
}

template <>
const Ops<double>& ops<double>() {
#if PAIRVEC_HAVE_AVX2
  if (g_isa == Isa::avx2) return kAvx2F64;
#endif
  return kScalarF64;
}

}  // namespace pairvec::kern
