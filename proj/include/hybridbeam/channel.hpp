#pragma once

#include "hybridbeam/types.hpp"

#include <cstdint>

namespace hybridbeam {

// Steering vector of a ULA, unit l2 norm:
//   entry k = exp(j*2*pi*spacing*k*sin(angle)) / sqrt(N)
VecX array_response(const ArrayGeometry& geometry, double angle_rad);

// Grid of spatial frequencies sin(theta) uniform over [-1, 1), G points.
VecR dictionary_spatial_frequencies(int grid_size);

// N x G steering dictionary on the spatial-frequency grid. With G = N and
// half-wavelength spacing this is a unitary matrix.
MatX make_dictionary(const ArrayGeometry& geometry, int grid_size);

// Psi = conj(A_BSD) kron A_MSD, so that vec(H) = Psi * x  (column-major vec).
MatX channel_dictionary(const MatX& a_bsd, const MatX& a_msd);

// H = sqrt(N_t*N_r/K) * sum_p gain_p * a_MS(aoa_p) * a_BS(aod_p)^*
ChannelRealization channel_from_paths(std::vector<PathComponent> paths, int n_t, int n_r);

// Clustered channel draw. Quantized mode places paths on distinct grid points
// (beamspace vector has exactly K nonzeros); otherwise angles are continuous
// uniform over [0, 2*pi) and `x` is left empty.
ChannelRealization sample_channel(const ChannelParams& params, const SystemConfig& config,
                                  std::uint64_t seed);

// ||h_true - h_est||_F^2 / ||h_true||_F^2
double nmse(const MatX& h_true, const MatX& h_est);

// Beamspace projection Psi^* vec(H); exact inverse representation when the
// dictionaries are square (unitary) grids.
VecX beamspace_projection(const MatX& h, const MatX& a_bsd, const MatX& a_msd);

// unvec(x) as G_r x G_t, column-major.
MatX unvec(const VecX& x, int rows, int cols);

}  // namespace hybridbeam
