#include "euler3d/spectral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "euler3d/filters.hpp"

namespace euler3d {

namespace {

class PlanPair {
 public:
  explicit PlanPair(const std::array<int, 3>& n) {
    const std::size_t nodes = static_cast<std::size_t>(n[0]) * n[1] * n[2];
    const std::size_t modes = static_cast<std::size_t>(n[0]) * n[1] * (n[2] / 2 + 1);
    double* r = fftw_alloc_real(nodes);
    fftw_complex* c = fftw_alloc_complex(modes);
    // FFTW_ESTIMATE keeps the algorithm choice deterministic between runs.
    forward_ = fftw_plan_dft_r2c_3d(n[0], n[1], n[2], r, c, FFTW_ESTIMATE);
    inverse_ = fftw_plan_dft_c2r_3d(n[0], n[1], n[2], c, r, FFTW_ESTIMATE);
    real_alignment_ = fftw_alignment_of(r);
    complex_alignment_ = fftw_alignment_of(reinterpret_cast<double*>(c));
    fftw_free(r);
    fftw_free(c);
    if (!forward_ || !inverse_) throw std::runtime_error("FFTW planning failed");
  }
  ~PlanPair() {
    fftw_destroy_plan(forward_);
    fftw_destroy_plan(inverse_);
  }
  PlanPair(const PlanPair&) = delete;
  PlanPair& operator=(const PlanPair&) = delete;

  fftw_plan forward() const noexcept { return forward_; }
  fftw_plan inverse() const noexcept { return inverse_; }
  bool real_ok(const double* p) const { return fftw_alignment_of(const_cast<double*>(p)) == real_alignment_; }
  bool complex_ok(const Complex* p) const {
    return fftw_alignment_of(reinterpret_cast<double*>(const_cast<Complex*>(p))) ==
           complex_alignment_;
  }

 private:
  fftw_plan forward_ = nullptr;
  fftw_plan inverse_ = nullptr;
  int real_alignment_ = 0;
  int complex_alignment_ = 0;
};

// FFTW's planner is not thread-safe; execution on distinct arrays is.
const PlanPair& plans_for(const GridSpec& g) {
  static std::mutex mutex;
  static std::map<std::array<int, 3>, std::unique_ptr<PlanPair>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[g.n];
  if (!slot) slot = std::make_unique<PlanPair>(g.n);
  return *slot;
}

fftw_complex* as_fftw(Complex* p) { return reinterpret_cast<fftw_complex*>(p); }

}  // namespace

namespace fft {

void forward(const GridSpec& g, std::span<const double> in, std::span<Complex> out) {
  const auto& plans = plans_for(g);
  const double scale = 1.0 / static_cast<double>(g.num_nodes());
  AlignedVector<double> in_copy;
  AlignedVector<Complex> out_copy;
  const double* src = in.data();
  Complex* dst = out.data();
  if (!plans.real_ok(src)) {
    in_copy.assign(in.begin(), in.end());
    src = in_copy.data();
  }
  if (!plans.complex_ok(dst)) {
    out_copy.resize(out.size());
    dst = out_copy.data();
  }
  // Out-of-place r2c preserves its input.
  fftw_execute_dft_r2c(plans.forward(), const_cast<double*>(src), as_fftw(dst));
  for (std::size_t i = 0; i < out.size(); ++i) dst[i] *= scale;
  if (dst != out.data()) std::copy(out_copy.begin(), out_copy.end(), out.begin());
}

void inverse(const GridSpec& g, std::span<const Complex> in, std::span<double> out,
             std::span<Complex> scratch) {
  const auto& plans = plans_for(g);
  AlignedVector<Complex> scratch_copy;
  AlignedVector<double> out_copy;
  Complex* work = scratch.data();
  double* dst = out.data();
  if (!plans.complex_ok(work)) {
    scratch_copy.resize(in.size());
    work = scratch_copy.data();
  }
  if (!plans.real_ok(dst)) {
    out_copy.resize(out.size());
    dst = out_copy.data();
  }
  std::copy(in.begin(), in.end(), work);
  fftw_execute_dft_c2r(plans.inverse(), as_fftw(work), dst);
  if (dst != out.data()) std::copy(out_copy.begin(), out_copy.end(), out.begin());
}

}  // namespace fft

SpectralField forward_transform(const RealField& f) {
  if (f.components() == 0) throw std::invalid_argument("forward_transform: empty field");
  if (!f.all_finite()) throw std::invalid_argument("forward_transform: non-finite input");
  SpectralField F(f.grid(), f.components());
  for (int c = 0; c < f.components(); ++c) fft::forward(f.grid(), f.component(c), F.component(c));
  return F;
}

RealField inverse_transform(const SpectralField& F) {
  if (F.components() == 0) throw std::invalid_argument("inverse_transform: empty field");
  if (hermitian_defect(F) > 1e-10)
    throw std::invalid_argument("inverse_transform: coefficients are not Hermitian");
  RealField f(F.grid(), F.components());
  AlignedVector<Complex> scratch(F.modes());
  for (int c = 0; c < F.components(); ++c)
    fft::inverse(F.grid(), F.component(c), f.component(c), scratch);
  return f;
}

double hermitian_defect(const SpectralField& F) {
  const GridSpec& g = F.grid();
  double peak = 0.0;
  for (const auto& v : F.values()) peak = std::max(peak, std::abs(v));
  if (peak == 0.0) return 0.0;
  double defect = 0.0;
  const int nx = g.n[0], ny = g.n[1];
  for (int kz : {0, g.n[2] / 2}) {
    for (int c = 0; c < F.components(); ++c) {
      for (int ix = 0; ix < nx; ++ix) {
        const int jx = (nx - ix) % nx;
        for (int iy = 0; iy < ny; ++iy) {
          const int jy = (ny - iy) % ny;
          defect = std::max(defect, std::abs(F.at(c, ix, iy, kz) - std::conj(F.at(c, jx, jy, kz))));
        }
      }
    }
  }
  return defect / peak;
}

double spectral_mean_square(const SpectralField& F) {
  const GridSpec& g = F.grid();
  const auto ext = g.spectral_extent();
  double sum = 0.0;
  for (int c = 0; c < F.components(); ++c) {
    auto data = F.component(c);
    std::size_t idx = 0;
    for (int ix = 0; ix < ext[0]; ++ix)
      for (int iy = 0; iy < ext[1]; ++iy)
        for (int kz = 0; kz < ext[2]; ++kz, ++idx) sum += mode_weight(g, kz) * std::norm(data[idx]);
  }
  return sum;
}

double physical_mean_square(const RealField& f) {
  double sum = 0.0;
  for (double v : f.values()) sum += v * v;
  return sum / static_cast<double>(f.nodes());
}

void zero_nyquist_modes(SpectralField& F) {
  const GridSpec& g = F.grid();
  const auto ext = g.spectral_extent();
  for (int c = 0; c < F.components(); ++c) {
    auto data = F.component(c);
    std::size_t idx = 0;
    for (int ix = 0; ix < ext[0]; ++ix)
      for (int iy = 0; iy < ext[1]; ++iy)
        for (int kz = 0; kz < ext[2]; ++kz, ++idx)
          if (g.is_nyquist(Axis::x, ix) || g.is_nyquist(Axis::y, iy) || g.is_nyquist(Axis::z, kz))
            data[idx] = 0.0;
  }
}

WavenumberTable::WavenumberTable(const GridSpec& g) {
  const auto ext = g.spectral_extent();
  for (Axis a : kAxes) {
    const int na = ext[index(a)];
    auto& k = kappa[index(a)];
    auto& k2 = kappa_sq[index(a)];
    k.resize(na);
    k2.resize(na);
    for (int i = 0; i < na; ++i) {
      const double w = g.wavenumber(a, g.mode_index(a, i));
      k2[i] = w * w;
      k[i] = g.is_nyquist(a, i) ? 0.0 : w;
    }
  }
}

SpectralField spectral_derivative(const SpectralField& F, Axis axis, const FilterMask* smoothing) {
  const GridSpec& g = F.grid();
  if (smoothing && !(smoothing->grid() == g))
    throw std::invalid_argument("spectral_derivative: smoothing mask grid mismatch");
  const WavenumberTable table(g);
  std::vector<double> factor = table.kappa[index(axis)];
  if (smoothing) {
    auto rho = smoothing->axis_factor(axis);
    for (std::size_t i = 0; i < factor.size(); ++i) factor[i] *= rho[i];
  }
  SpectralField out(g, F.components());
  const auto ext = g.spectral_extent();
  const int a = index(axis);
  for (int c = 0; c < F.components(); ++c) {
    auto src = F.component(c);
    auto dst = out.component(c);
    std::size_t idx = 0;
    for (int ix = 0; ix < ext[0]; ++ix)
      for (int iy = 0; iy < ext[1]; ++iy)
        for (int kz = 0; kz < ext[2]; ++kz, ++idx) {
          const int pos[3] = {ix, iy, kz};
          dst[idx] = Complex(0.0, factor[pos[a]]) * src[idx];
        }
  }
  return out;
}

}  // namespace euler3d
