#include "orthoframes/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "orthoframes/errors.hpp"
#include "orthoframes/parallel.hpp"
#include "orthoframes/simd/kernels.hpp"

namespace orthoframes {

namespace {

struct AngleTable {
  std::vector<double> cos1, sin1;
};

AngleTable make_angle_table(int n) {
  AngleTable t;
  t.cos1.resize(n);
  t.sin1.resize(n);
  for (int j = 0; j < n; ++j) {
    const double th = kTwoPi * j / n;
    t.cos1[j] = std::cos(th);
    t.sin1[j] = std::sin(th);
  }
  return t;
}

// Split F(theta) = sum_m V_m e^{i m theta} into the c0/p/r form consumed by
// the trig kernel: p_m = V_m + V_{-m}, r_m = i (V_m - V_{-m}).
struct SeriesSplit {
  Complex c0;
  std::vector<double> p_re, p_im, r_re, r_im;
};

SeriesSplit split_series(const std::vector<Complex>& v, int radius) {
  SeriesSplit s;
  s.c0 = v[radius];
  s.p_re.resize(radius);
  s.p_im.resize(radius);
  s.r_re.resize(radius);
  s.r_im.resize(radius);
  for (int m = 1; m <= radius; ++m) {
    const Complex plus = v[radius + m];
    const Complex minus = v[radius - m];
    const Complex p = plus + minus;
    const Complex r = Complex(0, 1) * (plus - minus);
    s.p_re[m - 1] = p.real();
    s.p_im[m - 1] = p.imag();
    s.r_re[m - 1] = r.real();
    s.r_im[m - 1] = r.imag();
  }
  return s;
}

std::vector<Complex> row_coefficients(const OverlapSequence& ov, double p1) {
  const int r = ov.radius();
  std::vector<Complex> v(2 * r + 1);
  if (ov.dims() == 1) {
    for (int m = -r; m <= r; ++m) v[m + r] = ov.at(m);
  } else {
    for (int m2 = -r; m2 <= r; ++m2) {
      Complex acc = 0.0;
      for (int m1 = -r; m1 <= r; ++m1) acc += ov.at(m1, m2) * cis(p1 * m1);
      v[m2 + r] = acc;
    }
  }
  return v;
}

void eval_row(const OverlapSequence& ov, double p1, const AngleTable& t, double* out_re,
              double* out_im) {
  const auto split = split_series(row_coefficients(ov, p1), ov.radius());
  simd::trig_series_eval(split.c0, split.p_re.data(), split.p_im.data(), split.r_re.data(),
                         split.r_im.data(), ov.radius(), t.cos1.data(), t.sin1.data(),
                         t.cos1.size(), out_re, out_im);
}

}  // namespace

Complex SymbolFunction::value(double p) const {
  Complex acc = 0.0;
  for (int m = -coeffs_.radius(); m <= coeffs_.radius(); ++m)
    acc += coeffs_.at(m) * cis(p * m);
  return acc;
}

Complex SymbolFunction::value(double p1, double p2) const {
  Complex acc = 0.0;
  for (int m1 = -coeffs_.radius(); m1 <= coeffs_.radius(); ++m1)
    for (int m2 = -coeffs_.radius(); m2 <= coeffs_.radius(); ++m2)
      acc += coeffs_.at(m1, m2) * cis(p1 * m1 + p2 * m2);
  return acc;
}

std::vector<double> SymbolFunction::grid_row(double p1, int resolution) const {
  static thread_local AngleTable cached;
  if (static_cast<int>(cached.cos1.size()) != resolution)
    cached = make_angle_table(resolution);
  std::vector<double> re(resolution), im(resolution);
  eval_row(coeffs_, p1, cached, re.data(), im.data());
  return re;
}

SymbolFunction build_symbol(const OverlapSequence& ov, int grid_resolution) {
  if (grid_resolution <= 0) grid_resolution = 4096;
  SymbolFunction sym;
  sym.coeffs_ = ov;
  sym.grid_resolution_ = grid_resolution;

  const int n = grid_resolution;
  const AngleTable table = make_angle_table(n);
  const int rows = ov.dims() == 1 ? 1 : n;

  struct RowStat {
    double mn, mx, im, mn_p2;
  };
  std::vector<RowStat> stats(rows);
  parallel_for(rows, [&](std::size_t i) {
    std::vector<double> re(n), im(n);
    const double p1 = ov.dims() == 1 ? 0.0 : kTwoPi * static_cast<double>(i) / n;
    eval_row(ov, p1, table, re.data(), im.data());
    RowStat st{re[0], re[0], 0.0, 0.0};
    for (int j = 0; j < n; ++j) {
      if (re[j] < st.mn) {
        st.mn = re[j];
        st.mn_p2 = kTwoPi * j / n;
      }
      st.mx = std::max(st.mx, re[j]);
      st.im = std::max(st.im, std::abs(im[j]));
    }
    stats[i] = st;
  });

  sym.min_value_ = stats[0].mn;
  sym.max_value_ = stats[0].mx;
  sym.realness_error_ = stats[0].im;
  sym.min_p1_ = 0.0;
  sym.min_p2_ = stats[0].mn_p2;
  for (int i = 1; i < rows; ++i) {
    if (stats[i].mn < sym.min_value_) {
      sym.min_value_ = stats[i].mn;
      sym.min_p1_ = kTwoPi * i / n;
      sym.min_p2_ = stats[i].mn_p2;
    }
    sym.max_value_ = std::max(sym.max_value_, stats[i].mx);
    sym.realness_error_ = std::max(sym.realness_error_, stats[i].im);
  }
  if (ov.dims() == 1) {
    // 1D symbols index their variable as p2 = p; keep p1 at zero.
    sym.min_p1_ = 0.0;
  }
  return sym;
}

PositivityReport check_positive(const SymbolFunction& sym, double floor_rel) {
  PositivityReport rep;
  rep.min_p1 = sym.min_p1();
  rep.min_p2 = sym.min_p2();
  rep.min_value = sym.min_value();
  rep.ok = sym.min_value() > floor_rel * sym.max_value();
  return rep;
}

void require_positive(const SymbolFunction& sym, double floor_rel) {
  const PositivityReport rep = check_positive(sym, floor_rel);
  if (!rep.ok) {
    std::ostringstream os;
    os << "symbol is not positive: min " << format_double(rep.min_value) << " at P=("
       << format_double(rep.min_p1) << ", " << format_double(rep.min_p2)
       << "); the orthonormalization coefficients do not exist";
    throw SymbolNotPositive(os.str(), rep.min_p1, rep.min_p2, rep.min_value);
  }
}

CoefficientTable::CoefficientTable(int dims, int radius)
    : dims_(dims), radius_(radius), side_(2 * radius + 1) {
  const std::size_t total = dims == 1 ? side_ : static_cast<std::size_t>(side_) * side_;
  c_.assign(total, 0.0);
  alpha_hat_.assign(total, 0.0);
}

std::size_t CoefficientTable::index(int k1, int k2) const {
  if (dims_ == 1) return static_cast<std::size_t>(k2 + radius_);
  return static_cast<std::size_t>(k1 + radius_) * side_ + static_cast<std::size_t>(k2 + radius_);
}

Complex CoefficientTable::c(int k) const {
  if (dims_ != 1) throw ShapeMismatch("1D coefficient access into a 2D table");
  if (std::abs(k) > radius_) return 0.0;
  return c_[index(0, k)];
}

Complex CoefficientTable::c(int k1, int k2) const {
  if (dims_ == 1) return k1 == 0 ? c(k2) : Complex(0.0);
  if (std::abs(k1) > radius_ || std::abs(k2) > radius_) return 0.0;
  return c_[index(k1, k2)];
}

Complex CoefficientTable::alpha_hat(int k) const {
  if (dims_ != 1) throw ShapeMismatch("1D coefficient access into a 2D table");
  if (std::abs(k) > radius_) return 0.0;
  return alpha_hat_[index(0, k)];
}

Complex CoefficientTable::alpha_hat(int k1, int k2) const {
  if (dims_ == 1) return k1 == 0 ? alpha_hat(k2) : Complex(0.0);
  if (std::abs(k1) > radius_ || std::abs(k2) > radius_) return 0.0;
  return alpha_hat_[index(k1, k2)];
}

void CoefficientTable::set(int k1, int k2, Complex cv, Complex av) {
  c_[index(k1, k2)] = cv;
  alpha_hat_[index(k1, k2)] = av;
}

double CoefficientTable::decay_certificate() const {
  double m = 0.0;
  if (dims_ == 1) {
    m = std::max(std::abs(c(-radius_)), std::abs(c(radius_)));
  } else {
    for (int k = -radius_; k <= radius_; ++k) {
      m = std::max({m, std::abs(c(k, -radius_)), std::abs(c(k, radius_)),
                    std::abs(c(-radius_, k)), std::abs(c(radius_, k))});
    }
  }
  return m;
}

bool CoefficientTable::axis_shaped(double eps) const {
  if (dims_ == 1) return true;
  for (int k1 = -radius_; k1 <= radius_; ++k1) {
    if (k1 == 0) continue;
    for (int k2 = -radius_; k2 <= radius_; ++k2)
      if (std::abs(c(k1, k2)) > eps) return false;
  }
  return true;
}

double CoefficientTable::sum_rule() const {
  Complex acc = 0.0;
  for (std::size_t i = 0; i < c_.size(); ++i) acc += std::conj(alpha_hat_[i]) * c_[i];
  return acc.real();
}

namespace {

// One extraction pass at a fixed grid resolution.
CoefficientTable extract_at(const SymbolFunction& sym, int radius, int n) {
  const AngleTable table = make_angle_table(n);
  CoefficientTable out(sym.dims(), radius);

  if (sym.dims() == 1) {
    std::vector<double> f_re(n), f_im(n), w(n), a(n);
    eval_row(sym.coeffs(), 0.0, table, f_re.data(), f_im.data());
    simd::rsqrt_array(f_re.data(), w.data(), n);
    simd::sqrt_array(f_re.data(), a.data(), n);
    std::vector<Complex> pc(radius + 1), pa(radius + 1);
    simd::fourier_project(w.data(), nullptr, n, table.cos1.data(), table.sin1.data(), radius,
                          pc.data());
    simd::fourier_project(a.data(), nullptr, n, table.cos1.data(), table.sin1.data(), radius,
                          pa.data());
    for (int k = 0; k <= radius; ++k) {
      const Complex cv = pc[k] / double(n);
      const Complex av = pa[k] / double(n);
      out.set(0, k, cv, av);
      if (k > 0) out.set(0, -k, std::conj(cv), std::conj(av));
    }
    return out;
  }

  // 2D: project rows over P2, then columns over P1.  W is real, so
  // coefficients at -k are conjugates of those at +k (per row and globally).
  const int kc = 2 * radius + 1;
  std::vector<std::vector<Complex>> row_c(n, std::vector<Complex>(kc));
  std::vector<std::vector<Complex>> row_a(n, std::vector<Complex>(kc));
  parallel_for(n, [&](std::size_t i) {
    std::vector<double> f_re(n), f_im(n), w(n), a(n);
    std::vector<Complex> pc(radius + 1), pa(radius + 1);
    eval_row(sym.coeffs(), kTwoPi * static_cast<double>(i) / n, table, f_re.data(), f_im.data());
    simd::rsqrt_array(f_re.data(), w.data(), n);
    simd::sqrt_array(f_re.data(), a.data(), n);
    simd::fourier_project(w.data(), nullptr, n, table.cos1.data(), table.sin1.data(), radius,
                          pc.data());
    simd::fourier_project(a.data(), nullptr, n, table.cos1.data(), table.sin1.data(), radius,
                          pa.data());
    for (int k = 0; k <= radius; ++k) {
      row_c[i][radius + k] = pc[k];
      row_a[i][radius + k] = pa[k];
      row_c[i][radius - k] = std::conj(pc[k]);
      row_a[i][radius - k] = std::conj(pa[k]);
    }
  });

  const double norm = 1.0 / (static_cast<double>(n) * n);
  std::vector<double> vre(n), vim(n);
  std::vector<Complex> proj(radius + 1), proj_conj(radius + 1);
  for (int k2 = -radius; k2 <= radius; ++k2) {
    for (auto [rows, dest] : {std::pair{&row_c, 0}, std::pair{&row_a, 1}}) {
      for (int i = 0; i < n; ++i) {
        vre[i] = (*rows)[i][radius + k2].real();
        vim[i] = (*rows)[i][radius + k2].imag();
      }
      simd::fourier_project(vre.data(), vim.data(), n, table.cos1.data(), table.sin1.data(),
                            radius, proj.data());
      // negative k1: sum v e^{+i k1 t} = conj( sum conj(v) e^{-i k1 t} )
      for (int i = 0; i < n; ++i) vim[i] = -vim[i];
      simd::fourier_project(vre.data(), vim.data(), n, table.cos1.data(), table.sin1.data(),
                            radius, proj_conj.data());
      for (int k1 = -radius; k1 <= radius; ++k1) {
        const Complex v = (k1 >= 0 ? proj[k1] : std::conj(proj_conj[-k1])) * norm;
        if (dest == 0) {
          const Complex av = out.alpha_hat(k1, k2);
          out.set(k1, k2, v, av);
        } else {
          const Complex cv = out.c(k1, k2);
          out.set(k1, k2, cv, v);
        }
      }
    }
  }
  return out;
}

double table_distance(const CoefficientTable& a, const CoefficientTable& b) {
  double d = 0.0;
  const int r = a.radius();
  for (int k1 = -r; k1 <= r; ++k1)
    for (int k2 = -r; k2 <= r; ++k2) {
      if (a.dims() == 1 && k1 != 0) continue;
      d = std::max(d, std::abs(a.c(k1, k2) - b.c(k1, k2)));
      d = std::max(d, std::abs(a.alpha_hat(k1, k2) - b.alpha_hat(k1, k2)));
    }
  return d;
}

}  // namespace

CoefficientTable coefficients(const SymbolFunction& sym, int radius,
                              double positivity_floor_rel) {
  require_positive(sym, positivity_floor_rel);
  int n = sym.grid_resolution();
  CoefficientTable cur = extract_at(sym, radius, n);
  for (int attempt = 0; attempt < 2; ++attempt) {
    const CoefficientTable fine = extract_at(sym, radius, 2 * n);
    if (table_distance(cur, fine) <= 1e-10) return fine;
    cur = fine;
    n *= 2;
  }
  throw NonConvergedQuadrature("coefficient quadrature did not stabilize under grid doubling");
}

std::pair<double, double> parseval_sum(const CoefficientTable& table,
                                       const SymbolFunction& sym) {
  double lhs = 0.0;
  const int r = table.radius();
  for (int k1 = -r; k1 <= r; ++k1)
    for (int k2 = -r; k2 <= r; ++k2) {
      if (table.dims() == 1 && k1 != 0) continue;
      lhs += std::norm(table.c(k1, k2));
    }

  const int n = sym.grid_resolution();
  double rhs = 0.0;
  const int rows = sym.dims() == 1 ? 1 : n;
  for (int i = 0; i < rows; ++i) {
    const auto row = sym.grid_row(sym.dims() == 1 ? 0.0 : kTwoPi * i / n, n);
    double acc = 0.0;
    for (double v : row) acc += 1.0 / v;
    rhs += acc / n;
  }
  rhs /= rows;
  return {lhs, rhs};
}

std::string coefficients_to_csv(const CoefficientTable& table) {
  std::ostringstream os;
  const int r = table.radius();
  if (table.dims() == 1) {
    os << "k1,c_re,c_im,alphahat_re,alphahat_im\n";
    for (int k = -r; k <= r; ++k)
      os << k << ',' << format_double(table.c(k).real()) << ','
         << format_double(table.c(k).imag()) << ',' << format_double(table.alpha_hat(k).real())
         << ',' << format_double(table.alpha_hat(k).imag()) << '\n';
  } else {
    os << "k1,k2,c_re,c_im,alphahat_re,alphahat_im\n";
    for (int k1 = -r; k1 <= r; ++k1)
      for (int k2 = -r; k2 <= r; ++k2)
        os << k1 << ',' << k2 << ',' << format_double(table.c(k1, k2).real()) << ','
           << format_double(table.c(k1, k2).imag()) << ','
           << format_double(table.alpha_hat(k1, k2).real()) << ','
           << format_double(table.alpha_hat(k1, k2).imag()) << '\n';
  }
  return os.str();
}

}  // namespace orthoframes
