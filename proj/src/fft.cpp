#include "distfrac/fft.hpp"

#include <fftw3.h>

#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <tuple>

namespace distfrac::fft {

namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

struct PlanEntry {
  fftw_plan plan = nullptr;
  int align_in = 0;
  int align_out = 0;
};

constexpr int kRealForward = 2;
constexpr int kRealInverse = 3;

// FFTW plan creation is not thread-safe; execution through the new-array
// interface is. Plans are created once per (rows, cols, sign) on 64-byte
// aligned buffers with FFTW_ESTIMATE, so the chosen algorithm does not
// depend on runtime timings. Execution requires matching alignment; callers
// with other buffers are staged through aligned workspace.
class PlanCache {
 public:
  PlanEntry get(std::size_t rows, std::size_t cols, int sign) {
    const auto key = std::make_tuple(rows, cols, sign);
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;

    PlanEntry entry;
    if (sign == kRealForward) {
      RealBuffer in(cols);
      ComplexBuffer out(cols / 2 + 1);
      entry.plan = fftw_plan_dft_r2c_1d(
          static_cast<int>(cols), in.data(),
          reinterpret_cast<fftw_complex*>(out.data()), FFTW_ESTIMATE);
      entry.align_in = fftw_alignment_of(in.data());
      entry.align_out = fftw_alignment_of(reinterpret_cast<double*>(out.data()));
    } else if (sign == kRealInverse) {
      ComplexBuffer in(cols / 2 + 1);
      RealBuffer out(cols);
      entry.plan = fftw_plan_dft_c2r_1d(
          static_cast<int>(cols), reinterpret_cast<fftw_complex*>(in.data()),
          out.data(), FFTW_ESTIMATE);
      entry.align_in = fftw_alignment_of(reinterpret_cast<double*>(in.data()));
      entry.align_out = fftw_alignment_of(out.data());
    } else {
      ComplexBuffer in(rows * cols);
      ComplexBuffer out(rows * cols);
      auto* src = reinterpret_cast<fftw_complex*>(in.data());
      auto* dst = reinterpret_cast<fftw_complex*>(out.data());
      if (rows == 1) {
        entry.plan = fftw_plan_dft_1d(static_cast<int>(cols), src, dst, sign,
                                      FFTW_ESTIMATE);
      } else {
        entry.plan = fftw_plan_dft_2d(static_cast<int>(rows),
                                      static_cast<int>(cols), src, dst, sign,
                                      FFTW_ESTIMATE);
      }
      entry.align_in = fftw_alignment_of(reinterpret_cast<double*>(src));
      entry.align_out = fftw_alignment_of(reinterpret_cast<double*>(dst));
    }
    if (entry.plan == nullptr) {
      throw std::runtime_error("fft: plan creation failed");
    }
    plans_.emplace(key, entry);
    return entry;
  }

 private:
  std::mutex mutex_;
  std::map<std::tuple<std::size_t, std::size_t, int>, PlanEntry> plans_;
};

PlanCache& cache() {
  static PlanCache instance;
  return instance;
}

void execute_fftw(std::size_t rows, std::size_t cols, int sign,
                  std::span<const std::complex<double>> in,
                  std::span<std::complex<double>> out) {
  const std::size_t n = rows * cols;
  const PlanEntry entry = cache().get(rows, cols, sign);

  auto* src = reinterpret_cast<fftw_complex*>(
      const_cast<std::complex<double>*>(in.data()));
  auto* dst = reinterpret_cast<fftw_complex*>(out.data());
  const bool aligned =
      fftw_alignment_of(reinterpret_cast<double*>(src)) == entry.align_in &&
      fftw_alignment_of(reinterpret_cast<double*>(dst)) == entry.align_out;
  if (aligned) {
    fftw_execute_dft(entry.plan, src, dst);
  } else {
    thread_local ComplexBuffer staged_in;
    thread_local ComplexBuffer staged_out;
    staged_in.resize(n);
    staged_out.resize(n);
    std::copy(in.begin(), in.end(), staged_in.begin());
    fftw_execute_dft(entry.plan,
                     reinterpret_cast<fftw_complex*>(staged_in.data()),
                     reinterpret_cast<fftw_complex*>(staged_out.data()));
    std::copy(staged_out.begin(), staged_out.end(), out.begin());
  }
  if (sign == FFTW_BACKWARD) {
    const double scale = 1.0 / static_cast<double>(n);
    for (auto& v : out) v *= scale;
  }
}

// Chirp-z data for one non-power-of-two length: the transform becomes a
// circular convolution at the next power of two past 2n-1, so cost grows
// uniformly with n regardless of its factorization.
struct ChirpPlan {
  std::size_t padded = 0;
  ComplexBuffer chirp;       // e^{-i pi j^2 / n}
  ComplexBuffer kernel_dft;  // DFT of the wrapped conjugate chirp
};

const ChirpPlan& chirp_plan(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, std::unique_ptr<ChirpPlan>> plans;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = plans.find(n);
  if (it != plans.end()) return *it->second;

  auto plan = std::make_unique<ChirpPlan>();
  plan->padded = next_pow2(2 * n - 1);
  plan->chirp.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    // j^2 mod 2n keeps the phase argument small and exact
    const auto reduced = (j * j) % (2 * n);
    const double angle = -std::numbers::pi * static_cast<double>(reduced) /
                         static_cast<double>(n);
    plan->chirp[j] = std::complex<double>(std::cos(angle), std::sin(angle));
  }
  ComplexBuffer kernel(plan->padded, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    const auto value = std::conj(plan->chirp[j]);
    kernel[j] = value;
    if (j > 0) kernel[plan->padded - j] = value;
  }
  plan->kernel_dft.resize(plan->padded);
  execute_fftw(1, plan->padded, FFTW_FORWARD, kernel, plan->kernel_dft);

  const auto& ref = *plan;
  plans.emplace(n, std::move(plan));
  return ref;
}

void chirp_forward(std::span<const std::complex<double>> in,
                   std::span<std::complex<double>> out) {
  const std::size_t n = in.size();
  const ChirpPlan& plan = chirp_plan(n);
  thread_local ComplexBuffer work;
  thread_local ComplexBuffer hat;
  work.resize(plan.padded);
  hat.resize(plan.padded);
  for (std::size_t j = 0; j < n; ++j) work[j] = in[j] * plan.chirp[j];
  std::fill(work.begin() + static_cast<std::ptrdiff_t>(n), work.end(), 0.0);
  execute_fftw(1, plan.padded, FFTW_FORWARD, work, hat);
  for (std::size_t j = 0; j < plan.padded; ++j) hat[j] *= plan.kernel_dft[j];
  execute_fftw(1, plan.padded, FFTW_BACKWARD, hat, work);
  for (std::size_t k = 0; k < n; ++k) out[k] = work[k] * plan.chirp[k];
}

void transform_1d(int sign, std::span<const std::complex<double>> in,
                  std::span<std::complex<double>> out) {
  const std::size_t n = in.size();
  if (is_pow2(n)) {
    execute_fftw(1, n, sign, in, out);
    return;
  }
  if (sign == FFTW_FORWARD) {
    chirp_forward(in, out);
    return;
  }
  // inverse via conjugation of the forward transform, with the 1/n factor
  thread_local ComplexBuffer conjugated;
  conjugated.resize(n);
  for (std::size_t j = 0; j < n; ++j) conjugated[j] = std::conj(in[j]);
  chirp_forward(conjugated, out);
  const double scale = 1.0 / static_cast<double>(n);
  for (auto& v : out) v = std::conj(v) * scale;
}

void check_buffers(std::size_t n, std::span<const std::complex<double>> in,
                   std::span<std::complex<double>> out) {
  if (in.size() != n || out.size() != n) {
    throw std::invalid_argument("fft: buffer size mismatch");
  }
  if (in.data() == out.data()) {
    throw std::invalid_argument("fft: in-place transform not supported");
  }
}

}  // namespace

void forward(std::span<const std::complex<double>> in,
             std::span<std::complex<double>> out) {
  check_buffers(in.size(), in, out);
  transform_1d(FFTW_FORWARD, in, out);
}

void inverse(std::span<const std::complex<double>> in,
             std::span<std::complex<double>> out) {
  check_buffers(in.size(), in, out);
  transform_1d(FFTW_BACKWARD, in, out);
}

void forward_2d(std::size_t rows, std::size_t cols,
                std::span<const std::complex<double>> in,
                std::span<std::complex<double>> out) {
  check_buffers(rows * cols, in, out);
  execute_fftw(rows, cols, FFTW_FORWARD, in, out);
}

void forward_real(std::span<const double> in,
                  std::span<std::complex<double>> out) {
  const std::size_t n = in.size();
  if (out.size() != n / 2 + 1) {
    throw std::invalid_argument("forward_real: buffer size mismatch");
  }
  const PlanEntry entry = cache().get(1, n, kRealForward);
  auto* src = const_cast<double*>(in.data());
  auto* dst = reinterpret_cast<fftw_complex*>(out.data());
  if (fftw_alignment_of(src) == entry.align_in &&
      fftw_alignment_of(reinterpret_cast<double*>(dst)) == entry.align_out) {
    fftw_execute_dft_r2c(entry.plan, src, dst);
    return;
  }
  thread_local RealBuffer staged_in;
  thread_local ComplexBuffer staged_out;
  staged_in.resize(n);
  staged_out.resize(n / 2 + 1);
  std::copy(in.begin(), in.end(), staged_in.begin());
  fftw_execute_dft_r2c(entry.plan, staged_in.data(),
                       reinterpret_cast<fftw_complex*>(staged_out.data()));
  std::copy(staged_out.begin(), staged_out.end(), out.begin());
}

void inverse_real(std::span<std::complex<double>> in, std::span<double> out) {
  const std::size_t n = out.size();
  if (in.size() != n / 2 + 1) {
    throw std::invalid_argument("inverse_real: buffer size mismatch");
  }
  const PlanEntry entry = cache().get(1, n, kRealInverse);
  auto* src = reinterpret_cast<fftw_complex*>(in.data());
  const double scale = 1.0 / static_cast<double>(n);
  if (fftw_alignment_of(reinterpret_cast<double*>(src)) == entry.align_in &&
      fftw_alignment_of(out.data()) == entry.align_out) {
    fftw_execute_dft_c2r(entry.plan, src, out.data());
    for (auto& v : out) v *= scale;
    return;
  }
  thread_local ComplexBuffer staged_in;
  thread_local RealBuffer staged_out;
  staged_in.resize(n / 2 + 1);
  staged_out.resize(n);
  std::copy(in.begin(), in.end(), staged_in.begin());
  fftw_execute_dft_c2r(entry.plan,
                       reinterpret_cast<fftw_complex*>(staged_in.data()),
                       staged_out.data());
  for (std::size_t i = 0; i < n; ++i) out[i] = staged_out[i] * scale;
}

void inverse_2d(std::size_t rows, std::size_t cols,
                std::span<const std::complex<double>> in,
                std::span<std::complex<double>> out) {
  check_buffers(rows * cols, in, out);
  execute_fftw(rows, cols, FFTW_BACKWARD, in, out);
}

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace distfrac::fft
