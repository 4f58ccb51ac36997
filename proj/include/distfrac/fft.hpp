#pragma once

#include <complex>
#include <cstddef>
#include <cstdlib>
#include <new>
#include <span>
#include <vector>

namespace distfrac::fft {

/// 64-byte-aligned allocator so transform buffers hit the SIMD code paths.
template <class T>
struct AlignedAllocator {
  using value_type = T;
  AlignedAllocator() = default;
  template <class U>
  AlignedAllocator(const AlignedAllocator<U>&) {}

  T* allocate(std::size_t n) {
    const std::size_t bytes = ((n * sizeof(T) + 63) / 64) * 64;
    void* p = std::aligned_alloc(64, bytes);
    if (p == nullptr) throw std::bad_alloc();
    return static_cast<T*>(p);
  }
  void deallocate(T* p, std::size_t) noexcept { std::free(p); }

  template <class U>
  bool operator==(const AlignedAllocator<U>&) const {
    return true;
  }
};

using ComplexBuffer =
    std::vector<std::complex<double>, AlignedAllocator<std::complex<double>>>;

/// Unnormalized forward DFT; the inverse applies the 1/n (or 1/(rows·cols))
/// factor, so inverse(forward(x)) == x. Out-of-place only: in and out must
/// not alias. Power-of-two lengths run on cached FFTW plans; other lengths
/// go through a chirp-z reduction to the next power of two, so cost grows
/// uniformly with n regardless of its factorization. Unaligned caller
/// buffers are staged through thread-local aligned workspace; execution is
/// safe concurrently.
void forward(std::span<const std::complex<double>> in,
             std::span<std::complex<double>> out);
void inverse(std::span<const std::complex<double>> in,
             std::span<std::complex<double>> out);

/// Row-major 2D transforms with the same conventions.
void forward_2d(std::size_t rows, std::size_t cols,
                std::span<const std::complex<double>> in,
                std::span<std::complex<double>> out);
void inverse_2d(std::size_t rows, std::size_t cols,
                std::span<const std::complex<double>> in,
                std::span<std::complex<double>> out);

using RealBuffer = std::vector<double, AlignedAllocator<double>>;

/// Real-input transforms for the convolution rings: forward maps n reals to
/// the n/2+1 half spectrum, inverse maps back applying the 1/n factor. The
/// inverse clobbers its input buffer.
void forward_real(std::span<const double> in,
                  std::span<std::complex<double>> out);
void inverse_real(std::span<std::complex<double>> in, std::span<double> out);

std::size_t next_pow2(std::size_t n);

}  // namespace distfrac::fft
