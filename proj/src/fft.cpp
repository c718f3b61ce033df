#include "qg/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "qg/errors.hpp"

namespace qg::fft {

namespace {

struct PlanPair {
  fftw_plan forward = nullptr;
  fftw_plan inverse = nullptr;
};

// The FFTW planner is not reentrant; fftw_execute_dft on an existing plan is.
class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [n, plans] : plans_) {
      fftw_destroy_plan(plans.forward);
      fftw_destroy_plan(plans.inverse);
    }
  }

  const PlanPair& get(int n) {
    std::lock_guard lock(mutex_);
    auto it = plans_.find(n);
    if (it != plans_.end()) return it->second;
    auto* scratch_in = fftw_alloc_complex(static_cast<std::size_t>(n) * n);
    auto* scratch_out = fftw_alloc_complex(static_cast<std::size_t>(n) * n);
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    PlanPair plans;
    plans.forward = fftw_plan_dft_2d(n, n, scratch_in, scratch_out, FFTW_FORWARD, flags);
    plans.inverse = fftw_plan_dft_2d(n, n, scratch_in, scratch_out, FFTW_BACKWARD, flags);
    fftw_free(scratch_in);
    fftw_free(scratch_out);
    if (plans.forward == nullptr || plans.inverse == nullptr) {
      throw Error("FFTW failed to create a plan");
    }
    return plans_.emplace(n, plans).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<int, PlanPair> plans_;
};

PlanCache& cache() {
  static PlanCache instance;
  return instance;
}

void check_sizes(int n, std::size_t a, std::size_t b) {
  const auto expected = static_cast<std::size_t>(n) * n;
  if (a != expected || b != expected) throw StructuralError("fft: buffer size does not match n*n");
}

fftw_complex* as_fftw(Complex* p) { return reinterpret_cast<fftw_complex*>(p); }

}  // namespace

void forward(int n, std::span<const Complex> physical, std::span<Complex> spectral) {
  check_sizes(n, physical.size(), spectral.size());
  const auto& plans = cache().get(n);
  // FFTW may clobber nothing for out-of-place c2c, but the input pointer is non-const.
  fftw_execute_dft(plans.forward, as_fftw(const_cast<Complex*>(physical.data())),
                   as_fftw(spectral.data()));
  const double scale = 1.0 / (static_cast<double>(n) * n);
  for (auto& c : spectral) c *= scale;
}

void inverse(int n, std::span<const Complex> spectral, std::span<Complex> physical) {
  check_sizes(n, spectral.size(), physical.size());
  const auto& plans = cache().get(n);
  fftw_execute_dft(plans.inverse, as_fftw(const_cast<Complex*>(spectral.data())),
                   as_fftw(physical.data()));
}

}  // namespace qg::fft
