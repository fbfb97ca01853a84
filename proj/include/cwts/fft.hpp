#pragma once

#include <complex>
#include <cstddef>

#include <fftw3.h>

namespace cwts {

// RAII over fftw_malloc'd complex buffers. All execution buffers come from
// fftw_malloc so they share the alignment the plans were created with.
class FftBuffer {
 public:
  explicit FftBuffer(std::size_t n);
  ~FftBuffer();
  FftBuffer(const FftBuffer&) = delete;
  FftBuffer& operator=(const FftBuffer&) = delete;
  FftBuffer(FftBuffer&& other) noexcept;

  fftw_complex* get() { return ptr_; }
  std::complex<double>* std() { return reinterpret_cast<std::complex<double>*>(ptr_); }
  std::size_t size() const { return n_; }

 private:
  fftw_complex* ptr_ = nullptr;
  std::size_t n_ = 0;
};

// Complex-to-complex plans of a fixed length. Plans are created serially
// under the global planner lock with FFTW_ESTIMATE (deterministic planning),
// then executed concurrently on per-thread buffers via the new-array
// interface, which is thread-safe.
class FftPlan {
 public:
  explicit FftPlan(std::size_t n);
  ~FftPlan();
  FftPlan(const FftPlan&) = delete;
  FftPlan& operator=(const FftPlan&) = delete;

  std::size_t size() const { return n_; }
  void forward(fftw_complex* in, fftw_complex* out) const;
  // Unnormalized inverse; callers divide by n.
  void backward(fftw_complex* in, fftw_complex* out) const;

 private:
  std::size_t n_ = 0;
  fftw_plan fwd_ = nullptr;
  fftw_plan bwd_ = nullptr;
};

std::size_t next_pow2(std::size_t n);

}  // namespace cwts
