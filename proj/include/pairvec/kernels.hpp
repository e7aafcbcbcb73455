#pragma once

#include <cstddef>
#include <span>

#include "pairvec/error.hpp"

namespace pairvec::kern {

enum class Isa { scalar, avx2 };

const char* isa_name(Isa isa);
Isa active_isa();

// Pin the dispatch, e.g. to cross-check AVX2 against the scalar reference.
// Requesting an unsupported ISA falls back to scalar.
void force_isa(Isa isa);
void reset_isa();  // back to autodetect (honors PAIRVEC_ISA env)

template <class T>
struct Ops {
  T (*dot)(const T*, const T*, std::size_t);
  void (*axpy)(T, const T*, T*, std::size_t);            // y += a * x
  void (*mul)(const T*, const T*, T*, std::size_t);      // out = a .* b
  void (*mul_add)(const T*, const T*, T*, std::size_t);  // y += a .* b
  void (*scale)(T, T*, std::size_t);                     // x *= a
};

template <class T>
const Ops<T>& ops();

template <class T>
inline T dot(std::span<const T> a, std::span<const T> b) {
  if (a.size() != b.size()) throw Error("dim_mismatch", "dot of unequal lengths");
  return ops<T>().dot(a.data(), b.data(), a.size());
}

template <class T>
inline void axpy(T alpha, std::span<const T> x, std::span<T> y) {
  ops<T>().axpy(alpha, x.data(), y.data(), y.size());
}

template <class T>
inline void mul(std::span<const T> a, std::span<const T> b, std::span<T> out) {
  ops<T>().mul(a.data(), b.data(), out.data(), out.size());
}

template <class T>
inline void mul_add(std::span<const T> a, std::span<const T> b, std::span<T> y) {
  ops<T>().mul_add(a.data(), b.data(), y.data(), y.size());
}

template <class T>
inline void scale(T alpha, std::span<T> x) {
  ops<T>().scale(alpha, x.data(), x.size());
}

// y (+)= W x with W row-major (rows x cols)
template <class T>
void gemv(const T* w, std::size_t rows, std::size_t cols, const T* x, T* y, bool accumulate) {
  const auto& k = ops<T>();
  for (std::size_t i = 0; i < rows; ++i) {
    T v = k.dot(w + i * cols, x, cols);
    y[i] = accumulate ? y[i] + v : v;
  }
}

// y += W^T g
template <class T>
void gemv_t_add(const T* w, std::size_t rows, std::size_t cols, const T* g, T* y) {
  const auto& k = ops<T>();
  for (std::size_t i = 0; i < rows; ++i) k.axpy(g[i], w + i * cols, y, cols);
}

// W += g x^T
template <class T>
void outer_add(const T* g, std::size_t rows, const T* x, std::size_t cols, T* w) {
  const auto& k = ops<T>();
  for (std::size_t i = 0; i < rows; ++i) k.axpy(g[i], x, w + i * cols, cols);
}

}  // namespace pairvec::kern
