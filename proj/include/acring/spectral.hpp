#pragma once

// Thin RAII wrapper over FFTW for the periodic azimuthal grid.

#include <fftw3.h>

#include <algorithm>
#include <complex>
#include <cstddef>
#include <mutex>
#include <span>
#include <stdexcept>
#include <utility>

namespace acring::solver {

using cplx = std::complex<double>;

/// Signed angular mode number of FFT output slot `index` on a grid of
/// `grid_size` points: slots [0, G/2) carry k = index, slots [G/2, G) carry
/// k = index - G. The represented modes are k = -G/2, ..., G/2 - 1.
inline int mode_number(std::size_t index, std::size_t grid_size) {
  const auto i = static_cast<long>(index);
  const auto g = static_cast<long>(grid_size);
  return static_cast<int>(i < g / 2 ? i : i - g);
}

namespace detail {
// FFTW's planner is not reentrant; plan execution is.
inline std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace detail

/// Forward transform F_k = sum_j psi_j e^{-i k phi_j} and its inverse scaled by
/// 1/G, so backward(forward(x)) == x. FFTW_ESTIMATE plans keep results
/// bit-reproducible between runs.
class SpectralTransform {
 public:
  explicit SpectralTransform(std::size_t size) : size_(size) {
    if (size == 0) throw std::invalid_argument("transform size must be positive");
    buffer_ = fftw_alloc_complex(size);
    if (!buffer_) throw std::bad_alloc();
    std::lock_guard lock(detail::planner_mutex());
    forward_ = fftw_plan_dft_1d(static_cast<int>(size), buffer_, buffer_, FFTW_FORWARD, FFTW_ESTIMATE);
    backward_ = fftw_plan_dft_1d(static_cast<int>(size), buffer_, buffer_, FFTW_BACKWARD, FFTW_ESTIMATE);
  }

  SpectralTransform(const SpectralTransform&) = delete;
  SpectralTransform& operator=(const SpectralTransform&) = delete;

  SpectralTransform(SpectralTransform&& other) noexcept
      : size_(other.size_),
        buffer_(std::exchange(other.buffer_, nullptr)),
        forward_(std::exchange(other.forward_, nullptr)),
        backward_(std::exchange(other.backward_, nullptr)) {}

  SpectralTransform& operator=(SpectralTransform&& other) noexcept {
    if (this != &other) {
      release();
      size_ = other.size_;
      buffer_ = std::exchange(other.buffer_, nullptr);
      forward_ = std::exchange(other.forward_, nullptr);
      backward_ = std::exchange(other.backward_, nullptr);
    }
    return *this;
  }

  ~SpectralTransform() { release(); }

  std::size_t size() const { return size_; }

  void forward(std::span<const cplx> in, std::span<cplx> out) { run(forward_, in, out, 1.0); }

  void backward(std::span<const cplx> in, std::span<cplx> out) {
    run(backward_, in, out, 1.0 / static_cast<double>(size_));
  }

 private:
  void run(fftw_plan plan, std::span<const cplx> in, std::span<cplx> out, double scale) {
    if (in.size() != size_ || out.size() != size_) throw std::invalid_argument("transform size mismatch");
    auto* buf = reinterpret_cast<cplx*>(buffer_);
    std::copy(in.begin(), in.end(), buf);
    fftw_execute(plan);
    if (scale == 1.0) {
      std::copy(buf, buf + size_, out.begin());
    } else {
      std::transform(buf, buf + size_, out.begin(), [scale](cplx v) { return v * scale; });
    }
  }

  void release() {
    if (forward_ || backward_) {
      std::lock_guard lock(detail::planner_mutex());
      if (forward_) fftw_destroy_plan(forward_);
      if (backward_) fftw_destroy_plan(backward_);
    }
    if (buffer_) fftw_free(buffer_);
    forward_ = backward_ = nullptr;
    buffer_ = nullptr;
  }

  std::size_t size_;
  fftw_complex* buffer_ = nullptr;
  fftw_plan forward_ = nullptr;
  fftw_plan backward_ = nullptr;
};

}  // namespace acring::solver
