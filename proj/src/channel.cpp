#include "hybridbeam/channel.hpp"

#include "hybridbeam/rng.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace hybridbeam {

const char* to_string(ArchKind kind) {
  switch (kind) {
    case ArchKind::A1: return "A1";
    case ArchKind::A2: return "A2";
    case ArchKind::A3: return "A3";
    case ArchKind::A4: return "A4";
    case ArchKind::A5: return "A5";
    case ArchKind::A6: return "A6";
  }
  return "?";
}

ArchKind arch_kind_from_string(const std::string& name) {
  if (name == "A1" || name == "a1") return ArchKind::A1;
  if (name == "A2" || name == "a2") return ArchKind::A2;
  if (name == "A3" || name == "a3") return ArchKind::A3;
  if (name == "A4" || name == "a4") return ArchKind::A4;
  if (name == "A5" || name == "a5") return ArchKind::A5;
  if (name == "A6" || name == "a6") return ArchKind::A6;
  throw std::invalid_argument("unknown architecture '" + name + "' (expected A1..A6)");
}

VecX array_response(const ArrayGeometry& geometry, double angle_rad) {
  geometry.validate();
  const int n = geometry.num_elements;
  VecX a(n);
  const double step = 2.0 * M_PI * geometry.spacing_wavelengths * std::sin(angle_rad);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (int k = 0; k < n; ++k) a(k) = std::polar(scale, step * k);
  return a;
}

VecR dictionary_spatial_frequencies(int grid_size) {
  if (grid_size < 1) throw std::invalid_argument("dictionary grid size must be >= 1");
  VecR s(grid_size);
  for (int g = 0; g < grid_size; ++g) s(g) = -1.0 + 2.0 * g / grid_size;
  return s;
}

MatX make_dictionary(const ArrayGeometry& geometry, int grid_size) {
  geometry.validate();
  const VecR freqs = dictionary_spatial_frequencies(grid_size);
  const int n = geometry.num_elements;
  MatX d(n, grid_size);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (int g = 0; g < grid_size; ++g) {
    const double step = 2.0 * M_PI * geometry.spacing_wavelengths * freqs(g);
    for (int k = 0; k < n; ++k) d(k, g) = std::polar(scale, step * k);
  }
  return d;
}

MatX channel_dictionary(const MatX& a_bsd, const MatX& a_msd) {
  const Eigen::Index nt = a_bsd.rows(), gt = a_bsd.cols();
  const Eigen::Index nr = a_msd.rows(), gr = a_msd.cols();
  MatX psi(nt * nr, gt * gr);
  for (Eigen::Index ct = 0; ct < gt; ++ct)
    for (Eigen::Index rt = 0; rt < nt; ++rt)
      psi.block(rt * nr, ct * gr, nr, gr) = std::conj(a_bsd(rt, ct)) * a_msd;
  return psi;
}

ChannelRealization channel_from_paths(std::vector<PathComponent> paths, int n_t, int n_r) {
  if (paths.empty()) throw std::invalid_argument("channel_from_paths: need at least one path");
  ChannelRealization out;
  out.n_t = n_t;
  out.n_r = n_r;
  const double prefactor =
      std::sqrt(static_cast<double>(n_t) * n_r / static_cast<double>(paths.size()));
  const ArrayGeometry rx{n_r, 0.5};
  const ArrayGeometry tx{n_t, 0.5};
  out.h = MatX::Zero(n_r, n_t);
  for (const PathComponent& p : paths) {
    out.h.noalias() +=
        (prefactor * p.gain) * (array_response(rx, p.aoa) * array_response(tx, p.aod).adjoint());
  }
  out.paths = std::move(paths);
  return out;
}

ChannelRealization sample_channel(const ChannelParams& params, const SystemConfig& config,
                                  std::uint64_t seed) {
  params.validate(config.n_t, config.n_r);
  Rng rng(seed);
  const int k = params.n_paths();
  std::vector<PathComponent> paths(k);

  if (params.quantized) {
    const VecR ft = dictionary_spatial_frequencies(params.grid_tx);
    const VecR fr = dictionary_spatial_frequencies(params.grid_rx);
    std::unordered_set<long> used;
    std::vector<std::pair<int, int>> cells(k);
    for (int p = 0; p < k; ++p) {
      int gt, gr;
      long key;
      do {
        gt = static_cast<int>(rng.uniform_int(params.grid_tx));
        gr = static_cast<int>(rng.uniform_int(params.grid_rx));
        key = static_cast<long>(gt) * params.grid_rx + gr;
      } while (used.count(key));  // distinct grid cells keep the K nonzeros separate
      used.insert(key);
      cells[p] = {gt, gr};
      paths[p].gain = rng.cnormal();
      paths[p].aod = std::asin(ft(gt));
      paths[p].aoa = std::asin(fr(gr));
    }
    ChannelRealization out = channel_from_paths(std::move(paths), config.n_t, config.n_r);
    const double prefactor = std::sqrt(static_cast<double>(config.n_t) * config.n_r / k);
    out.x = VecX::Zero(static_cast<Eigen::Index>(params.grid_tx) * params.grid_rx);
    for (int p = 0; p < k; ++p)
      out.x(static_cast<Eigen::Index>(cells[p].first) * params.grid_rx + cells[p].second) +=
          prefactor * out.paths[p].gain;
    out.params = params;
    out.seed = seed;
    return out;
  }

  for (int p = 0; p < k; ++p) {
    paths[p].gain = rng.cnormal();
    paths[p].aod = 2.0 * M_PI * rng.uniform();
    paths[p].aoa = 2.0 * M_PI * rng.uniform();
  }
  ChannelRealization out = channel_from_paths(std::move(paths), config.n_t, config.n_r);
  out.params = params;
  out.seed = seed;
  return out;
}

double nmse(const MatX& h_true, const MatX& h_est) {
  if (h_true.rows() != h_est.rows() || h_true.cols() != h_est.cols())
    throw std::invalid_argument("nmse: shape mismatch");
  const double ref = h_true.squaredNorm();
  if (ref == 0.0) throw std::invalid_argument("nmse: reference channel is all-zero");
  return (h_true - h_est).squaredNorm() / ref;
}

VecX beamspace_projection(const MatX& h, const MatX& a_bsd, const MatX& a_msd) {
  // vec(A_MSD^* H conj(A_BSD)) = Psi^* vec(H)
  MatX hv = a_msd.adjoint() * h * a_bsd.conjugate();
  return Eigen::Map<VecX>(hv.data(), hv.size());
}

MatX unvec(const VecX& x, int rows, int cols) {
  if (x.size() != static_cast<Eigen::Index>(rows) * cols)
    throw std::invalid_argument("unvec: size mismatch");
  return Eigen::Map<const MatX>(x.data(), rows, cols);
}

}  // namespace hybridbeam
