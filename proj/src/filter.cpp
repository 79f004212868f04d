// Copyright 2026 The nhgap Authors.
// SPDX-License-Identifier: Apache-2.0

#include "nhgap/filter.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <functional>

#include "nhgap/errors.hpp"

namespace nhgap {

namespace {

constexpr long kDegreeCap = 100000;
constexpr double kSafety = 1.05;

// Chebyshev-Gauss quadrature coefficients of f on [-1, 1], orders 0..deg.
std::vector<double> chebyshev_expand(const std::function<double(double)>& f,
                                     long deg) {
  const long n = deg + 1;
  std::vector<double> fx(n);
  for (long k = 0; k < n; ++k) {
    const double th = M_PI * (static_cast<double>(k) + 0.5) / static_cast<double>(n);
    fx[k] = f(std::cos(th));
  }
  std::vector<double> c(n);
  for (long j = 0; j < n; ++j) {
    double acc = 0.0;
    for (long k = 0; k < n; ++k) {
      const double th = M_PI * (static_cast<double>(k) + 0.5) / static_cast<double>(n);
      acc += fx[k] * std::cos(static_cast<double>(j) * th);
    }
    c[j] = acc * 2.0 / static_cast<double>(n);
  }
  c[0] *= 0.5;
  return c;
}

double clenshaw(const std::vector<double>& c, double x) {
  double b1 = 0.0, b2 = 0.0;
  for (size_t j = c.size(); j-- > 1;) {
    const double b0 = 2.0 * x * b1 - b2 + c[j];
    b2 = b1;
    b1 = b0;
  }
  return x * b1 - b2 + c[0];
}

// Smallest w with erfc(w) <= y, found by bisection.
double erfc_inverse(double y) {
  double lo = 0.0, hi = 30.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (std::erfc(mid) > y) lo = mid; else hi = mid;
  }
  return hi;
}

bool check_branch(const PolyFilter& f, double x0, double x1, double lo,
                  double hi, long grid) {
  for (long k = 0; k < grid; ++k) {
    const double x = x0 + (x1 - x0) * static_cast<double>(k) / static_cast<double>(grid - 1);
    const double v = clenshaw(f.coefficients, x);
    if (v < lo || v > hi) return false;
  }
  return true;
}

}  // namespace

bool certify_filter(const PolyFilter& f, long grid_per_branch) {
  const double e = f.eps_th, d = f.delta;
  const double tiny = 1e-12;
  return check_branch(f, 0.0, e, 1.0 - d, 1.0, grid_per_branch) &&
         check_branch(f, e + tiny, 2.0 * e, 0.0, 1.0, grid_per_branch) &&
         check_branch(f, 2.0 * e + tiny, 1.0, 0.0, d, grid_per_branch);
}

PolyFilter build_heaviside_filter(double eps_th, double delta) {
  if (!(eps_th > 0.0) || !(eps_th < 0.5)) {
    throw InvalidArgument("eps_th must lie in (0, 0.5)");
  }
  if (!(delta > 0.0) || !(delta < 0.5)) {
    throw InvalidArgument("delta must lie in (0, 0.5)");
  }
  // Target: erfc step centered between the pass and stop bands, squeezed
  // into [dm, 1-dm] so truncation ringing up to dm cannot leave [0, 1].
  const double dm = delta / (3.0 * kSafety);
  const double center = 1.5 * eps_th;
  const double k = erfc_inverse(2.0 * dm) / (0.5 * eps_th);
  auto target = [&](double x) {
    return dm + (1.0 - 2.0 * dm) * 0.5 * std::erfc(k * (x - center));
  };
  PolyFilter f;
  f.eps_th = eps_th;
  f.delta = delta;
  for (long deg = 15; deg <= kDegreeCap; deg = 2 * deg + 1) {
    f.coefficients = chebyshev_expand(target, deg);
    f.degree = deg;
    if (certify_filter(f)) return f;
  }
  throw FilterSynthesisFailure("filter degree cap exceeded before certification");
}

double eval_filter(const PolyFilter& f, double x) {
  if (!(x >= -1.0 && x <= 1.0)) {
    throw InvalidArgument("filter argument outside [-1, 1]");
  }
  return clenshaw(f.coefficients, x);
}

CMatrix apply_filter_to_operand(const PolyFilter& f, const SpectralOperand& op,
                                Complex mu) {
  CMatrix shifted = op.matrix();
  shifted.diagonal().array() -= mu;
  shifted /= (1.0 + std::abs(mu));
  Eigen::JacobiSVD<CMatrix> svd(shifted, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (svd.info() != Eigen::Success) {
    throw DecompositionFailure("SVD failed in filter application");
  }
  Eigen::VectorXd sv = svd.singularValues();
  CVector mapped(sv.size());
  for (long j = 0; j < sv.size(); ++j) {
    mapped(j) = eval_filter(f, std::min(1.0, sv(j)));
  }
  return svd.matrixU() * mapped.asDiagonal() * svd.matrixV().adjoint();
}

double eval_sign_poly(const SignPoly& sp, double x) {
  double acc = 0.0;
  for (size_t j = sp.coefficients.size(); j-- > 0;) {
    acc = acc * x + sp.coefficients[j];
  }
  return acc;
}

namespace {

// Chebyshev coefficients -> monomial coefficients via the T_n recurrence.
// Overflows for large degree; callers must check for finiteness.
std::vector<double> chebyshev_to_monomial(const std::vector<double>& c) {
  const size_t n = c.size();
  std::vector<double> out(n, 0.0);
  std::vector<double> tprev{1.0};       // T_0
  std::vector<double> tcur{0.0, 1.0};   // T_1
  out[0] += c[0] * tprev[0];
  if (n > 1) {
    for (size_t i = 0; i < tcur.size(); ++i) out[i] += c[1] * tcur[i];
  }
  for (size_t j = 2; j < n; ++j) {
    std::vector<double> tnext(j + 1, 0.0);
    for (size_t i = 0; i < tcur.size(); ++i) tnext[i + 1] += 2.0 * tcur[i];
    for (size_t i = 0; i < tprev.size(); ++i) tnext[i] -= tprev[i];
    for (size_t i = 0; i < tnext.size(); ++i) out[i] += c[j] * tnext[i];
    tprev = std::move(tcur);
    tcur = std::move(tnext);
  }
  return out;
}

bool certify_sign(const SignPoly& sp, long grid = 2048) {
  auto bad = [&](double x0, double x1, double s) {
    for (long k = 0; k < grid; ++k) {
      const double x = x0 + (x1 - x0) * static_cast<double>(k) / static_cast<double>(grid - 1);
      if (std::abs(eval_sign_poly(sp, x) - s) > 2.0 / 3.0 - 1e-9) return true;
    }
    return false;
  };
  return !bad(0.0, sp.a_h, -1.0) && !bad(sp.b_h, 1.0, 1.0);
}

}  // namespace

SignPoly build_sign_poly(double a_h, double b_h) {
  if (!(a_h >= 0.0 && a_h < b_h && b_h <= 1.0)) {
    throw InvalidArgument("need 0 <= a_h < b_h <= 1");
  }
  if (b_h - a_h < 1e-3) {
    throw FilterSynthesisFailure("sign polynomial gap below 1e-3");
  }
  const double mid = 0.5 * (a_h + b_h);
  const double half = 0.5 * (b_h - a_h);
  // Smallest degree wins: it keeps the coefficient l1 norm, and hence the
  // normalization C of the spectral map, small.
  for (long deg = 1; deg <= 2001; deg += 2) {
    for (double kk : {0.5, 0.8, 1.2, 1.8, 2.7, 4.0, 6.0}) {
      const double k = kk * std::atanh(1.0 / 3.0) / half;
      auto target = [&](double x) { return std::tanh(k * (x - mid)); };
      auto cheb = chebyshev_expand(target, deg);
      SignPoly sp;
      sp.coefficients = chebyshev_to_monomial(cheb);
      sp.degree = deg;
      sp.a_h = a_h;
      sp.b_h = b_h;
      bool finite = true;
      sp.coeff_l1 = 0.0;
      for (double c : sp.coefficients) {
        if (!std::isfinite(c)) { finite = false; break; }
        sp.coeff_l1 += std::abs(c);
      }
      if (finite && certify_sign(sp)) return sp;
    }
  }
  throw FilterSynthesisFailure("no certified sign polynomial up to degree 2001");
}

SpectralOperand bqp_reduction_map(const CMatrix& h, const SignPoly& sp) {
  validate_matrix(h);
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
    throw InvalidMatrix("spectral map input must be Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
  if (es.info() != Eigen::Success) {
    throw DecompositionFailure("Hermitian eigensolve failed");
  }
  const Eigen::VectorXd ev = es.eigenvalues();
  if (ev.minCoeff() < -1e-9 || ev.maxCoeff() > 1.0 + 1e-9) {
    throw InvalidMatrix("spectral map input must have spectrum in [0, 1]");
  }
  const double c_norm = 1.0 + sp.coeff_l1;
  CVector mapped(ev.size());
  for (long j = 0; j < ev.size(); ++j) {
    const double x = std::min(1.0, std::max(0.0, ev(j)));
    mapped(j) = Complex(0.0, 1.0) * (1.0 - eval_sign_poly(sp, x)) / c_norm;
  }
  CMatrix a = es.eigenvectors() * mapped.asDiagonal() * es.eigenvectors().adjoint();
  return SpectralOperand(std::move(a), 1.0, 1, /*norm_certified=*/true);
}

}  // namespace nhgap
