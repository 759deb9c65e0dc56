#pragma once

#include "hybridbeam/rng.hpp"
#include "hybridbeam/types.hpp"

namespace hybridbeam {

// Matrix-level feasibility of an analog combiner W_RF (N_r x L_r). Column j
// of a subset architecture (A2/A4/A6) is wired to the contiguous block j of
// N_r/L_r antennas. A5 additionally forbids two chains on one antenna.
bool is_feasible(const MatX& w_rf, const Architecture& arch, double tol = 1e-9);

// Single-vector membership in the architecture's feasible set (any block for
// the subset variants). With allow_scale, feasibility is checked up to a
// common positive scale factor, the convention for power-normalized training
// precoders.
bool column_feasible(const VecX& q, const Architecture& arch, int l_r, double tol = 1e-9,
                     bool allow_scale = false);

// Number of closed switches per chain used in the power model; defaults to
// half the candidates when arch.n_active is unset.
int effective_active_switches(const Architecture& arch, int n_r, int l_r);

double receiver_power(const Architecture& arch, int n_r, int l_r, const PowerModel& model);
double full_digital_power(int n_r, const PowerModel& model);

// eta = P_arch / P_D
double power_reduction(const Architecture& arch, int n_r, int l_r, const PowerModel& model);

double bit_rate(double spectral_efficiency_bps_hz, double bandwidth_hz);

// Uniformly random feasible combiner, mostly for property tests.
MatX random_combiner(const Architecture& arch, int n_r, int l_r, Rng& rng);

}  // namespace hybridbeam
