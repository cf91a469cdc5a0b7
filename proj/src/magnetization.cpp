#include "xydqpt/magnetization.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "xydqpt/errors.hpp"

namespace xydqpt {

using cplx = std::complex<double>;

ContractionTable::ContractionTable(int sites, int r_max)
    : sites_(sites),
      r_max_(r_max),
      q_(static_cast<std::size_t>(r_max) + 1),
      s_(static_cast<std::size_t>(r_max) + 1),
      g_(2 * static_cast<std::size_t>(r_max) + 1) {
  if (r_max < 0 || 2 * r_max >= sites) {
    throw Error(ErrorCode::InvalidArgument, "contraction radius must satisfy 0 <= r_max < N/2");
  }
}

std::size_t ContractionTable::index(int r) const {
  if (r < -r_max_ || r > r_max_) {
    throw Error(ErrorCode::InvalidArgument,
                "contraction distance " + std::to_string(r) + " outside table");
  }
  return static_cast<std::size_t>(r + r_max_);
}

cplx ContractionTable::q(int r) const {
  index(r);
  return r >= 0 ? q_[static_cast<std::size_t>(r)] : -q_[static_cast<std::size_t>(-r)];
}

cplx ContractionTable::s(int r) const {
  index(r);
  return r >= 0 ? s_[static_cast<std::size_t>(r)] : -s_[static_cast<std::size_t>(-r)];
}

cplx ContractionTable::g(int r) const { return g_[index(r)]; }

ContractionTable contractions(const ModelParams& params, const InitialState& init, int sites,
                              int r_max) {
  params.validate();
  init.validate();
  const MomentumGrid grid(sites);
  ContractionTable table(sites, r_max);
  const cplx i{0.0, 1.0};
  const double inv_n = 1.0 / sites;

  for (double k : grid.momenta()) {
    const FermionTwoPoint tp = two_point(params, init, k);
    // Partner -k expectation values follow from the same pair state.
    const cplx m_cdag_c = 1.0 - tp.c_cdag;   // <c_{-k}^+ c_{-k}>
    const cplx m_c_c = -tp.c_c;              // <c_k c_{-k}>
    const cplx m_cdag_cdag = -tp.cdag_cdag;  // <c_{-k}^+ c_k^+>
    const cplx m_c_cdag = 1.0 - tp.cdag_c;   // <c_k c_k^+>

    const cplx q_plus = tp.cdag_c + tp.c_c + tp.cdag_cdag + tp.c_cdag;
    const cplx q_minus = m_cdag_c + m_c_c + m_cdag_cdag + m_c_cdag;
    const cplx s_plus = tp.cdag_c - tp.c_c - tp.cdag_cdag + tp.c_cdag;
    const cplx s_minus = m_cdag_c - m_c_c - m_cdag_cdag + m_c_cdag;
    const cplx g_diag_plus = tp.cdag_c - tp.c_cdag;
    const cplx g_diag_minus = m_cdag_c - m_c_cdag;
    const cplx g_off_plus = tp.c_c - tp.cdag_cdag;
    const cplx g_off_minus = m_c_c - m_cdag_cdag;

    for (int r = -r_max; r <= r_max; ++r) {
      const double kr = k * r;
      const double sn = std::sin(kr);
      const double cs = std::cos(kr);
      // summands at +k and at -k (sin odd, cos even)
      table.g_[table.index(r)] +=
          inv_n * (cs * g_diag_plus + i * sn * g_off_plus + cs * g_diag_minus - i * sn * g_off_minus);
      if (r >= 0) {
        const auto ur = static_cast<std::size_t>(r);
        table.q_[ur] += inv_n * (-i * sn * q_plus + i * sn * q_minus);
        table.s_[ur] += inv_n * (i * sn * s_plus - i * sn * s_minus);
      }
    }
  }
  return table;
}

namespace {

struct StringOperator {
  bool is_a;
  int site;
};

// Operator p of the string; x: B_0 A_1 B_1 A_2 ... A_r, y: A_0 B_1 A_1 B_2 ... B_r.
StringOperator string_operator(Direction direction, std::size_t p) {
  const bool even = p % 2 == 0;
  const int site = static_cast<int>(even ? p / 2 : (p + 1) / 2);
  const bool is_a = direction == Direction::X ? !even : even;
  return {is_a, site};
}

cplx contraction(const ContractionTable& t, StringOperator left, StringOperator right) {
  const int r = right.site - left.site;
  if (!left.is_a && !right.is_a) return t.s(r);
  if (left.is_a && right.is_a) return t.q(r);
  if (!left.is_a) return t.g(r);
  return t.d(r);
}

void check_template(const ContractionTable& t, const SkewMatrix& m, Direction direction, int r) {
  // First row: x -> G_1 S_1 G_2 S_2 ... G_r ; y -> D_1 Q_1 D_2 Q_2 ... D_r.
  // Second row (from column 2): x -> D_0 Q_1 D_1 ... Q_{r-1} ; y -> G_0 S_1 G_1 ... S_{r-1}.
  const bool x = direction == Direction::X;
  const auto n = static_cast<std::size_t>(2 * r);
  for (std::size_t q = 1; q < n; ++q) {
    const int j = static_cast<int>((q + 1) / 2);
    const cplx expected = q % 2 == 1 ? (x ? t.g(j) : t.d(j)) : (x ? t.s(j) : t.q(j));
    if (m(0, q) != expected) {
      throw Error(ErrorCode::PatternMismatch,
                  "string matrix row 0 column " + std::to_string(q) + " deviates from template");
    }
  }
  for (std::size_t q = 2; q < n; ++q) {
    const int j = static_cast<int>(q / 2) - 1;
    const cplx expected = q % 2 == 0 ? (x ? t.d(j) : t.g(j)) : (x ? t.q(j + 1) : t.s(j + 1));
    if (m(1, q) != expected) {
      throw Error(ErrorCode::PatternMismatch,
                  "string matrix row 1 column " + std::to_string(q) + " deviates from template");
    }
  }
}

}  // namespace

SkewMatrix string_matrix(const ContractionTable& table, Direction direction, int r) {
  if (r < 1 || r > table.r_max()) {
    throw Error(ErrorCode::InvalidArgument,
                "correlator distance must be in [1, r_max], got " + std::to_string(r));
  }
  const auto n = static_cast<std::size_t>(2 * r);
  SkewMatrix m(n);
  for (std::size_t p = 0; p < n; ++p) {
    const StringOperator left = string_operator(direction, p);
    for (std::size_t q = p + 1; q < n; ++q) {
      m.set_upper(p, q, contraction(table, left, string_operator(direction, q)));
    }
  }
  check_template(table, m, direction, r);
  return m;
}

std::complex<double> correlator(const ContractionTable& table, Direction direction, int r) {
  SkewMatrix m = string_matrix(table, direction, r);
  const cplx pf = m.dim() > 100 ? log_pfaffian(std::move(m)).value() : pfaffian(std::move(m));
  const double sign = direction == Direction::Y && r % 2 == 1 ? -1.0 : 1.0;
  return sign * pf;
}

double m_z(const ModelParams& params, const InitialState& init, int sites) {
  params.validate();
  init.validate();
  const MomentumGrid grid(sites);
  double occupied = 0.0;
  for (double k : grid.momenta()) {
    const FermionTwoPoint tp = two_point(params, init, k);
    occupied += tp.cdag_c.real() + (1.0 - tp.c_cdag.real());
  }
  return 2.0 * occupied / sites - 1.0;
}

OrderParameter order_parameter(const ModelParams& params, const InitialState& init,
                               Direction direction, const OrderParameterOptions& options) {
  if (options.r_start < 1 || options.r_cap < options.r_start) {
    throw Error(ErrorCode::InvalidArgument, "order parameter needs 1 <= r_start <= r_cap");
  }
  const auto corr_at = [&](int r) {
    const int sites = std::max(options.sites_per_distance * r, 2 * r + 2);
    const ContractionTable table = contractions(params, init, sites + sites % 2, r);
    return correlator(table, direction, r).real();
  };

  OrderParameter out;
  int r = options.r_start;
  double c_prev = corr_at(r);
  double c_last = c_prev;
  out.r_used = r;
  while (2 * r <= options.r_cap) {
    const double c_next = corr_at(2 * r);
    c_prev = c_last;
    c_last = c_next;
    r *= 2;
    out.r_used = r;
    if (std::abs(c_last - c_prev) < options.tol * std::max(std::abs(c_prev), 1e-12)) {
      out.converged = true;
      break;
    }
  }
  // Cesaro average of the last two estimates when the doubling never settled.
  out.limit = out.converged ? c_last : 0.5 * (c_prev + c_last);
  out.negative_limit = out.limit < -10.0 * options.tol;
  out.value = std::sqrt(std::max(out.limit, 0.0));
  return out;
}

MagnetizationPoint magnetization(const ModelParams& params, const InitialState& init,
                                 const OrderParameterOptions& options, int mz_sites) {
  const OrderParameter x = order_parameter(params, init, Direction::X, options);
  const OrderParameter y = order_parameter(params, init, Direction::Y, options);
  MagnetizationPoint p;
  p.mx = x.value;
  p.my = y.value;
  p.mz = m_z(params, init, mz_sites);
  p.r_used = std::max(x.r_used, y.r_used);
  p.converged = x.converged && y.converged;
  return p;
}

}  // namespace xydqpt
