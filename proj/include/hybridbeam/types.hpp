#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hybridbeam {

using cxd = std::complex<double>;
using MatX = Eigen::MatrixXcd;
using VecX = Eigen::VectorXcd;
using VecR = Eigen::VectorXd;

// Uniform linear array, half-wavelength spacing by default.
struct ArrayGeometry {
  int num_elements = 1;
  double spacing_wavelengths = 0.5;

  void validate() const {
    if (num_elements < 1) throw std::invalid_argument("ArrayGeometry: num_elements must be >= 1");
    if (spacing_wavelengths <= 0.0)
      throw std::invalid_argument("ArrayGeometry: spacing_wavelengths must be > 0");
  }
};

struct ChannelParams {
  int n_clusters = 4;
  int n_rays = 1;
  bool quantized = true;  // angles drawn on the dictionary grid vs continuous
  int grid_tx = 64;       // G_t
  int grid_rx = 16;       // G_r

  int n_paths() const { return n_clusters * n_rays; }

  void validate(int n_t, int n_r) const {
    if (n_clusters < 1 || n_rays < 1)
      throw std::invalid_argument("ChannelParams: cluster/ray counts must be positive");
    if (grid_tx < 1 || grid_rx < 1)
      throw std::invalid_argument("ChannelParams: grid sizes must be positive");
    const long k = static_cast<long>(n_clusters) * n_rays;
    const long grid = static_cast<long>(grid_tx) * grid_rx;
    const long phys = static_cast<long>(n_t) * n_r;
    if (k > grid || k > phys)
      throw std::invalid_argument("ChannelParams: n_clusters*n_rays exceeds grid or array size");
  }
};

struct PathComponent {
  cxd gain{0.0, 0.0};
  double aoa = 0.0;  // radians, arrival (receiver)
  double aod = 0.0;  // radians, departure (transmitter)
};

// One sampled channel. `h` is N_r x N_t. `x` holds beamspace coefficients
// (length G_t*G_r, column-major vec of the virtual channel matrix); it is
// exact with K nonzeros for quantized channels and left empty otherwise.
struct ChannelRealization {
  std::vector<PathComponent> paths;
  MatX h;
  VecX x;
  ChannelParams params;
  int n_t = 0;
  int n_r = 0;
  std::uint64_t seed = 0;
};

enum class ArchKind { A1, A2, A3, A4, A5, A6 };

const char* to_string(ArchKind kind);
ArchKind arch_kind_from_string(const std::string& name);

// Analog receiver front-end variant. n_active carries N_A3 (A3) or N_A4 (A4),
// the number of closed switches per RF chain; <=0 means "half active", the
// convention used throughout the power studies.
struct Architecture {
  ArchKind kind = ArchKind::A1;
  int n_active = 0;

  bool uses_subsets() const {
    return kind == ArchKind::A2 || kind == ArchKind::A4 || kind == ArchKind::A6;
  }
  bool binary_entries() const { return static_cast<int>(kind) >= static_cast<int>(ArchKind::A3); }
  bool selection_only() const { return kind == ArchKind::A5 || kind == ArchKind::A6; }

  static Architecture make(ArchKind k, int n_active = 0) { return Architecture{k, n_active}; }
};

inline int subset_size(int n_r, int l_r) {
  if (l_r < 1 || n_r < 1) throw std::invalid_argument("subset_size: dimensions must be positive");
  if (n_r % l_r != 0)
    throw std::invalid_argument("subset architecture requires N_r divisible by L_r (N_r=" +
                                std::to_string(n_r) + ", L_r=" + std::to_string(l_r) + ")");
  return n_r / l_r;
}

// Per-component receiver power draw in milliwatts.
struct PowerModel {
  double p_lna = 20.0;
  double p_adc = 200.0;
  double p_rfc = 40.0;
  double p_bb = 200.0;
  double p_ps = 30.0;
  double p_sw = 5.0;

  void validate() const {
    if (p_lna < 0 || p_adc < 0 || p_rfc < 0 || p_bb < 0 || p_ps < 0 || p_sw < 0)
      throw std::invalid_argument("PowerModel: component powers must be nonnegative");
  }
};

struct SystemConfig {
  int n_t = 64;
  int n_r = 16;
  int l_t = 8;
  int l_r = 4;
  int n_s = 4;
  int g_t = 64;
  int g_r = 16;
  double snr_db = 0.0;
  double sigma_n2 = 1.0;
  double bandwidth_hz = 5e8;
  int trials = 100;
  std::uint64_t base_seed = 1;

  double rho() const { return sigma_n2 * std::pow(10.0, snr_db / 10.0); }

  void validate() const {
    if (n_t < 1 || n_r < 1) throw std::invalid_argument("SystemConfig: antenna counts must be positive");
    if (!(n_s <= l_r && l_r <= n_r))
      throw std::invalid_argument("SystemConfig: need N_s <= L_r <= N_r");
    if (!(n_s <= l_t && l_t <= n_t))
      throw std::invalid_argument("SystemConfig: need N_s <= L_t <= N_t");
    if (g_t < 1 || g_r < 1) throw std::invalid_argument("SystemConfig: grid sizes must be positive");
    if (sigma_n2 < 0) throw std::invalid_argument("SystemConfig: sigma_n2 must be nonnegative");
    if (trials < 1) throw std::invalid_argument("SystemConfig: trials must be positive");
  }
};

}  // namespace hybridbeam
