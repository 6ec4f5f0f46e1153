#include "nsfourier/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

#include "nsfourier/error.hpp"

namespace nsfourier::fft {

namespace {

struct PlanPair {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
};

// FFTW's planner is not thread safe; execution of an existing plan on new
// arrays is. FFTW_ESTIMATE keeps the chosen algorithm, and therefore the
// rounding, identical from run to run.
class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [n, p] : plans_) {
      fftw_destroy_plan(p.forward);
      fftw_destroy_plan(p.backward);
    }
  }

  const PlanPair& get(int n) {
    std::lock_guard lock(mutex_);
    auto it = plans_.find(n);
    if (it != plans_.end()) return it->second;
    ComplexBuffer in(static_cast<std::size_t>(n) * n);
    ComplexBuffer out(in.size());
    auto* pin = reinterpret_cast<fftw_complex*>(in.data());
    auto* pout = reinterpret_cast<fftw_complex*>(out.data());
    PlanPair p;
    p.forward = fftw_plan_dft_2d(n, n, pin, pout, FFTW_FORWARD, FFTW_ESTIMATE);
    p.backward = fftw_plan_dft_2d(n, n, pin, pout, FFTW_BACKWARD, FFTW_ESTIMATE);
    if (p.forward == nullptr || p.backward == nullptr) {
      throw NumericalError("FFTW could not create a plan");
    }
    return plans_.emplace(n, p).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<int, PlanPair> plans_;
};

PlanCache& cache() {
  static PlanCache instance;
  return instance;
}

void execute(fftw_plan plan, const Complex* in, Complex* out) {
  // fftw_execute_dft takes a non-const input; out-of-place c2c leaves it intact.
  fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(const_cast<Complex*>(in)),
                   reinterpret_cast<fftw_complex*>(out));
}

}  // namespace

void forward(int n, const Complex* in, Complex* out) { execute(cache().get(n).forward, in, out); }

void backward(int n, const Complex* in, Complex* out) { execute(cache().get(n).backward, in, out); }

}  // namespace nsfourier::fft
