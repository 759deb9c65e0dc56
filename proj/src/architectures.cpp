#include "hybridbeam/architectures.hpp"

#include <cmath>

namespace hybridbeam {

namespace {

bool near(double v, double target, double tol) { return std::abs(v - target) <= tol; }

// Entries must all be 0 or `level` in modulus; returns false otherwise.
bool segment_binary(const VecX& v, int begin, int end, double level, double tol, int* ones) {
  int count = 0;
  for (int i = begin; i < end; ++i) {
    const double m = std::abs(v(i));
    if (near(m, level, tol)) {
      ++count;
    } else if (!near(m, 0.0, tol)) {
      return false;
    }
  }
  if (ones) *ones = count;
  return true;
}

bool segment_unit_modulus(const VecX& v, int begin, int end, double level, double tol) {
  for (int i = begin; i < end; ++i)
    if (!near(std::abs(v(i)), level, tol)) return false;
  return true;
}

bool segment_zero(const VecX& v, int begin, int end, double tol) {
  for (int i = begin; i < end; ++i)
    if (!near(std::abs(v(i)), 0.0, tol)) return false;
  return true;
}

}  // namespace

bool is_feasible(const MatX& w_rf, const Architecture& arch, double tol) {
  const int n_r = static_cast<int>(w_rf.rows());
  const int l_r = static_cast<int>(w_rf.cols());
  if (n_r < 1 || l_r < 1) throw std::invalid_argument("is_feasible: empty combiner");
  const int m_sub = arch.uses_subsets() ? subset_size(n_r, l_r) : 0;

  switch (arch.kind) {
    case ArchKind::A1: {
      for (int j = 0; j < l_r; ++j) {
        VecX c = w_rf.col(j);
        if (!segment_unit_modulus(c, 0, n_r, 1.0, tol)) return false;
      }
      return true;
    }
    case ArchKind::A2: {
      for (int j = 0; j < l_r; ++j) {
        VecX c = w_rf.col(j);
        if (!segment_unit_modulus(c, j * m_sub, (j + 1) * m_sub, 1.0, tol)) return false;
        if (!segment_zero(c, 0, j * m_sub, tol)) return false;
        if (!segment_zero(c, (j + 1) * m_sub, n_r, tol)) return false;
      }
      return true;
    }
    case ArchKind::A3: {
      for (int j = 0; j < l_r; ++j) {
        VecX c = w_rf.col(j);
        if (!segment_binary(c, 0, n_r, 1.0, tol, nullptr)) return false;
      }
      return true;
    }
    case ArchKind::A4: {
      for (int j = 0; j < l_r; ++j) {
        VecX c = w_rf.col(j);
        if (!segment_binary(c, j * m_sub, (j + 1) * m_sub, 1.0, tol, nullptr)) return false;
        if (!segment_zero(c, 0, j * m_sub, tol)) return false;
        if (!segment_zero(c, (j + 1) * m_sub, n_r, tol)) return false;
      }
      return true;
    }
    case ArchKind::A5: {
      for (int j = 0; j < l_r; ++j) {
        int ones = 0;
        VecX c = w_rf.col(j);
        if (!segment_binary(c, 0, n_r, 1.0, tol, &ones) || ones != 1) return false;
      }
      // one switch per antenna at a time: row weight <= 1
      for (int i = 0; i < n_r; ++i) {
        int ones = 0;
        for (int j = 0; j < l_r; ++j)
          if (near(std::abs(w_rf(i, j)), 1.0, tol)) ++ones;
        if (ones > 1) return false;
      }
      return true;
    }
    case ArchKind::A6: {
      for (int j = 0; j < l_r; ++j) {
        int ones = 0;
        VecX c = w_rf.col(j);
        if (!segment_binary(c, j * m_sub, (j + 1) * m_sub, 1.0, tol, &ones) || ones != 1)
          return false;
        if (!segment_zero(c, 0, j * m_sub, tol)) return false;
        if (!segment_zero(c, (j + 1) * m_sub, n_r, tol)) return false;
      }
      return true;
    }
  }
  return false;
}

bool column_feasible(const VecX& q, const Architecture& arch, int l_r, double tol,
                     bool allow_scale) {
  const int n_r = static_cast<int>(q.size());
  double level = 1.0;
  if (allow_scale) {
    level = q.cwiseAbs().maxCoeff();
    if (level <= 0.0) return arch.kind == ArchKind::A3 || arch.kind == ArchKind::A4;
    tol = tol * std::max(1.0, level);
  }
  const auto block_of = [&](int* begin, int* end) -> bool {
    // locate the single block containing the support
    const int m_sub = subset_size(n_r, l_r);
    int blk = -1;
    for (int i = 0; i < n_r; ++i) {
      if (std::abs(q(i)) > tol) {
        const int b = i / m_sub;
        if (blk < 0) blk = b;
        else if (b != blk) return false;
      }
    }
    if (blk < 0) blk = 0;
    *begin = blk * m_sub;
    *end = (blk + 1) * m_sub;
    return true;
  };

  switch (arch.kind) {
    case ArchKind::A1:
      return segment_unit_modulus(q, 0, n_r, level, tol);
    case ArchKind::A2: {
      int b0 = 0, b1 = 0;
      if (!block_of(&b0, &b1)) return false;
      return segment_unit_modulus(q, b0, b1, level, tol);
    }
    case ArchKind::A3:
      return segment_binary(q, 0, n_r, level, tol, nullptr);
    case ArchKind::A4: {
      int b0 = 0, b1 = 0;
      if (!block_of(&b0, &b1)) return false;
      return segment_binary(q, b0, b1, level, tol, nullptr);
    }
    case ArchKind::A5: {
      int ones = 0;
      return segment_binary(q, 0, n_r, level, tol, &ones) && ones == 1;
    }
    case ArchKind::A6: {
      int b0 = 0, b1 = 0;
      if (!block_of(&b0, &b1)) return false;
      int ones = 0;
      return segment_binary(q, b0, b1, level, tol, &ones) && ones == 1;
    }
  }
  return false;
}

int effective_active_switches(const Architecture& arch, int n_r, int l_r) {
  if (arch.n_active > 0) return arch.n_active;
  if (arch.kind == ArchKind::A3) return std::max(1, (n_r + 1) / 2);
  if (arch.kind == ArchKind::A4) return std::max(1, (subset_size(n_r, l_r) + 1) / 2);
  return 0;
}

double receiver_power(const Architecture& arch, int n_r, int l_r, const PowerModel& m) {
  m.validate();
  if (n_r < 1 || l_r < 0) throw std::invalid_argument("receiver_power: bad dimensions");
  const double chain = l_r * (m.p_rfc + m.p_adc);
  switch (arch.kind) {
    case ArchKind::A1:
      return n_r * (l_r + 1.0) * m.p_lna + n_r * static_cast<double>(l_r) * m.p_ps + chain + m.p_bb;
    case ArchKind::A2:
      return n_r * m.p_lna + n_r * m.p_ps + chain + m.p_bb;
    case ArchKind::A3: {
      const int na = effective_active_switches(arch, n_r, l_r);
      return (n_r + static_cast<double>(l_r) * na) * m.p_lna +
             static_cast<double>(l_r) * na * m.p_sw + chain + m.p_bb;
    }
    case ArchKind::A4: {
      const int na = effective_active_switches(arch, n_r, l_r);
      return static_cast<double>(l_r) * na * (m.p_lna + m.p_sw) + chain + m.p_bb;
    }
    case ArchKind::A5:
    case ArchKind::A6:
      return l_r * (m.p_lna + m.p_sw) + chain + m.p_bb;
  }
  throw std::invalid_argument("receiver_power: unknown architecture");
}

double full_digital_power(int n_r, const PowerModel& m) {
  m.validate();
  if (n_r < 0) throw std::invalid_argument("full_digital_power: n_r must be nonnegative");
  return n_r * (m.p_lna + m.p_rfc + m.p_adc) + m.p_bb;
}

double power_reduction(const Architecture& arch, int n_r, int l_r, const PowerModel& m) {
  return receiver_power(arch, n_r, l_r, m) / full_digital_power(n_r, m);
}

double bit_rate(double spectral_efficiency_bps_hz, double bandwidth_hz) {
  return spectral_efficiency_bps_hz * bandwidth_hz;
}

MatX random_combiner(const Architecture& arch, int n_r, int l_r, Rng& rng) {
  MatX w = MatX::Zero(n_r, l_r);
  const int m_sub = arch.uses_subsets() ? subset_size(n_r, l_r) : 0;
  switch (arch.kind) {
    case ArchKind::A1:
      for (int j = 0; j < l_r; ++j)
        for (int i = 0; i < n_r; ++i) w(i, j) = std::polar(1.0, 2.0 * M_PI * rng.uniform());
      break;
    case ArchKind::A2:
      for (int j = 0; j < l_r; ++j)
        for (int i = j * m_sub; i < (j + 1) * m_sub; ++i)
          w(i, j) = std::polar(1.0, 2.0 * M_PI * rng.uniform());
      break;
    case ArchKind::A3:
      for (int j = 0; j < l_r; ++j)
        for (int i = 0; i < n_r; ++i) w(i, j) = rng.uniform() < 0.5 ? 1.0 : 0.0;
      break;
    case ArchKind::A4:
      for (int j = 0; j < l_r; ++j)
        for (int i = j * m_sub; i < (j + 1) * m_sub; ++i) w(i, j) = rng.uniform() < 0.5 ? 1.0 : 0.0;
      break;
    case ArchKind::A5: {
      if (l_r > n_r) throw std::invalid_argument("random_combiner: A5 needs L_r <= N_r");
      std::vector<int> idx(n_r);
      for (int i = 0; i < n_r; ++i) idx[i] = i;
      for (int j = 0; j < l_r; ++j) {  // partial Fisher-Yates keeps rows distinct
        const int pick = j + static_cast<int>(rng.uniform_int(n_r - j));
        std::swap(idx[j], idx[pick]);
        w(idx[j], j) = 1.0;
      }
      break;
    }
    case ArchKind::A6:
      for (int j = 0; j < l_r; ++j)
        w(j * m_sub + static_cast<int>(rng.uniform_int(m_sub)), j) = 1.0;
      break;
  }
  return w;
}

}  // namespace hybridbeam
