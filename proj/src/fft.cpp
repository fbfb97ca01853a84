#include "cwts/fft.hpp"

#include <mutex>
#include <new>
#include <utility>

namespace cwts {

namespace {
// FFTW's planner is not thread-safe; execution via the new-array API is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

FftBuffer::FftBuffer(std::size_t n) : n_(n) {
  ptr_ = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n));
  if (!ptr_) throw std::bad_alloc();
  for (std::size_t i = 0; i < n; ++i) ptr_[i][0] = ptr_[i][1] = 0.0;
}

FftBuffer::~FftBuffer() {
  if (ptr_) fftw_free(ptr_);
}

FftBuffer::FftBuffer(FftBuffer&& other) noexcept
    : ptr_(std::exchange(other.ptr_, nullptr)), n_(std::exchange(other.n_, 0)) {}

FftPlan::FftPlan(std::size_t n) : n_(n) {
  FftBuffer scratch_in(n), scratch_out(n);
  std::lock_guard<std::mutex> lock(planner_mutex());
  fwd_ = fftw_plan_dft_1d(static_cast<int>(n), scratch_in.get(), scratch_out.get(),
                          FFTW_FORWARD, FFTW_ESTIMATE);
  bwd_ = fftw_plan_dft_1d(static_cast<int>(n), scratch_in.get(), scratch_out.get(),
                          FFTW_BACKWARD, FFTW_ESTIMATE);
}

FftPlan::~FftPlan() {
  std::lock_guard<std::mutex> lock(planner_mutex());
  if (fwd_) fftw_destroy_plan(fwd_);
  if (bwd_) fftw_destroy_plan(bwd_);
}

void FftPlan::forward(fftw_complex* in, fftw_complex* out) const {
  fftw_execute_dft(fwd_, in, out);
}

void FftPlan::backward(fftw_complex* in, fftw_complex* out) const {
  fftw_execute_dft(bwd_, in, out);
}

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace cwts
