#include "cviso/fock.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <string>

#include "cviso/errors.hpp"

namespace cviso {

namespace {

using Index = Eigen::Index;

double lambda_of(double r) {
  const double t = std::tanh(r);
  return t * t;
}

double coherent_norm_sq(const CoherentPoint& pt) {
  return std::norm(pt.mu) + std::norm(pt.nu) + std::norm(pt.kappa) + std::norm(pt.tau);
}

// Labels used to validate extracted coefficients; none coincide with the
// contour sample points.
const std::array<CoherentPoint, 6>& held_out_points() {
  static const std::array<CoherentPoint, 6> points = {{
      {{0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}},
      {{0.31, -0.12}, {-0.05, 0.22}, {0.18, 0.27}, {-0.33, 0.04}},
      {{-0.21, 0.36}, {0.14, -0.29}, {0.0, -0.41}, {0.25, 0.17}},
      {{0.42, 0.0}, {0.0, 0.42}, {-0.42, 0.0}, {0.0, -0.42}},
      {{0.07, 0.19}, {0.38, -0.16}, {-0.27, -0.23}, {0.11, 0.35}},
      {{-0.35, -0.26}, {-0.12, -0.08}, {0.29, -0.06}, {-0.19, 0.31}},
  }};
  return points;
}

void check_cutoff_size(std::size_t cutoff) {
  if (cutoff == 0) throw DimensionError("Fock cutoff must be at least 1");
}

// Disjoint-set over matrix indices, used to split operators into the
// invariant blocks of their sparsity pattern.
class DisjointSet {
 public:
  explicit DisjointSet(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

std::vector<std::vector<Index>> pattern_blocks(const Eigen::MatrixXcd& m) {
  const auto n = static_cast<std::size_t>(m.rows());
  DisjointSet sets(n);
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < j; ++i) {
      if (m(i, j) != complex(0.0, 0.0)) {
        sets.unite(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      }
    }
  }
  std::vector<std::vector<Index>> blocks;
  std::vector<std::ptrdiff_t> block_of(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t root = sets.find(i);
    if (block_of[root] < 0) {
      block_of[root] = static_cast<std::ptrdiff_t>(blocks.size());
      blocks.emplace_back();
    }
    blocks[static_cast<std::size_t>(block_of[root])].push_back(static_cast<Index>(i));
  }
  return blocks;
}

double log_factorial(std::size_t n) { return std::lgamma(static_cast<double>(n) + 1.0); }

}  // namespace

// ---------------------------------------------------------------------------
// FockOperator

FockOperator::FockOperator(std::size_t cutoff, Eigen::MatrixXcd entries)
    : cutoff_(cutoff), entries_(std::move(entries)) {
  check_cutoff_size(cutoff);
  const auto d = static_cast<Index>(cutoff * cutoff);
  if (entries_.rows() != d || entries_.cols() != d) {
    throw DimensionError("Fock operator with cutoff " + std::to_string(cutoff) + " must be " +
                         std::to_string(d) + "x" + std::to_string(d));
  }
}

FockOperator FockOperator::zero(std::size_t cutoff) {
  check_cutoff_size(cutoff);
  const auto d = static_cast<Index>(cutoff * cutoff);
  return FockOperator(cutoff, Eigen::MatrixXcd::Zero(d, d));
}

double FockOperator::hermiticity_error() const {
  return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
}

FockOperator FockOperator::partial_transpose_b() const {
  const std::size_t n = cutoff_;
  Eigen::MatrixXcd out(entries_.rows(), entries_.cols());
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          out(index(m, b), index(k, l)) = entries_(index(m, l), index(k, b));
        }
      }
    }
  }
  return FockOperator(n, std::move(out));
}

Eigen::MatrixXcd FockOperator::reduced_a() const {
  const std::size_t n = cutoff_;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(static_cast<Index>(n), static_cast<Index>(n));
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t k = 0; k < n; ++k) {
      complex sum = 0.0;
      for (std::size_t b = 0; b < n; ++b) sum += entries_(index(m, b), index(k, b));
      out(static_cast<Index>(m), static_cast<Index>(k)) = sum;
    }
  }
  return out;
}

std::vector<double> FockOperator::eigenvalues() const {
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(dim()));
  for (const auto& block : pattern_blocks(entries_)) {
    const auto size = static_cast<Index>(block.size());
    Eigen::MatrixXcd sub(size, size);
    for (Index i = 0; i < size; ++i) {
      for (Index j = 0; j < size; ++j) sub(i, j) = entries_(block[i], block[j]);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sub, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
      throw NumericalError("Hermitian eigensolver failed on Fock block");
    }
    for (Index i = 0; i < size; ++i) values.push_back(solver.eigenvalues()(i));
  }
  std::sort(values.begin(), values.end());
  return values;
}

double FockOperator::min_eigenvalue() const { return eigenvalues().front(); }

double FockOperator::von_neumann_entropy() const {
  double s = 0.0;
  for (double v : eigenvalues()) {
    if (v > 0.0) s -= v * std::log(v);
  }
  return s;
}

FockOperator& FockOperator::operator+=(const FockOperator& other) {
  if (other.cutoff_ != cutoff_) throw DimensionError("Fock operators have different cutoffs");
  entries_ += other.entries_;
  return *this;
}

FockOperator& FockOperator::operator*=(double scale) {
  entries_ *= scale;
  return *this;
}

FockOperator operator+(FockOperator lhs, const FockOperator& rhs) {
  lhs += rhs;
  return lhs;
}

FockOperator operator*(double scale, FockOperator op) {
  op *= scale;
  return op;
}

// ---------------------------------------------------------------------------
// Coherent representation

complex coherent_element_thermal(double r, const CoherentPoint& pt) {
  const double c2 = std::cosh(r) * std::cosh(r);
  const double lam = lambda_of(r);
  const complex exponent = -0.5 * coherent_norm_sq(pt) +
                           (pt.kappa * std::conj(pt.mu) + pt.tau * std::conj(pt.nu)) * lam;
  return std::exp(exponent) / (c2 * c2);
}

complex coherent_element_tms(double r, const CoherentPoint& pt) {
  const double c2 = std::cosh(r) * std::cosh(r);
  const complex exponent = -0.5 * coherent_norm_sq(pt) +
                           (std::conj(pt.mu) * std::conj(pt.nu) + pt.kappa * pt.tau) * std::tanh(r);
  return std::exp(exponent) / c2;
}

complex coherent_element(const GIParams& params, const CoherentPoint& pt) {
  const double r = params.r();
  const double p = params.p();
  const double ch2 = std::cosh(r) * std::cosh(r);
  const double sh2 = std::sinh(r) * std::sinh(r);
  const double t = std::tanh(r);
  const double d = ch2 - p * p * sh2;

  const complex mu_c = std::conj(pt.mu);
  const complex nu_c = std::conj(pt.nu);
  const complex exponent = -0.5 * coherent_norm_sq(pt) + mu_c * pt.kappa + nu_c * pt.tau -
                           pt.kappa * mu_c / ch2 -
                           (nu_c - p * pt.kappa * t) * (pt.tau - p * mu_c * t) / d;
  const complex value = std::exp(exponent) / (ch2 * d);

  if (p == 0.0 || p == 1.0) {
    const complex special = p == 0.0 ? coherent_element_thermal(r, pt) : coherent_element_tms(r, pt);
    if (std::abs(special - value) > 1e-10 * std::max(std::abs(value), 1e-300)) {
      throw NumericalError("coherent element disagrees with its endpoint specialization");
    }
  }
  return value;
}

// ---------------------------------------------------------------------------
// Truncation

double thermal_tail_mass(double r, std::size_t cutoff) {
  const double lam = lambda_of(r);
  if (lam == 0.0) return 0.0;
  return std::pow(lam, static_cast<double>(cutoff)) / (1.0 - lam);
}

std::size_t required_cutoff(double r, double tail_tolerance, std::size_t min_cutoff) {
  std::size_t n = std::max<std::size_t>(min_cutoff, 1);
  while (thermal_tail_mass(r, n) >= tail_tolerance) {
    ++n;
    if (n > 100000) throw TailError("no practical cutoff meets the tail bound");
  }
  return n;
}

void check_tail(double r, std::size_t cutoff, double tail_tolerance) {
  const double tail = thermal_tail_mass(r, cutoff);
  if (tail >= tail_tolerance) {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "cutoff %zu too small at r = %g: tail mass %.3g >= %.3g (need cutoff >= %zu)",
                  cutoff, r, tail, tail_tolerance, required_cutoff(r, tail_tolerance));
    throw TailError(buf);
  }
}

FockOperator fock_tmt(double r, std::size_t cutoff, double tail_tolerance) {
  GIParams(r, 0.0);  // validates r
  check_cutoff_size(cutoff);
  check_tail(r, cutoff, tail_tolerance);
  const double lam = lambda_of(r);
  FockOperator op = FockOperator::zero(cutoff);
  for (std::size_t m = 0; m < cutoff; ++m) {
    for (std::size_t n = 0; n < cutoff; ++n) {
      const Index i = op.index(m, n);
      op.entries()(i, i) = (1.0 - lam) * (1.0 - lam) * std::pow(lam, static_cast<double>(m + n));
    }
  }
  return op;
}

FockOperator fock_tms(double r, std::size_t cutoff, double tail_tolerance) {
  GIParams(r, 1.0);
  check_cutoff_size(cutoff);
  check_tail(r, cutoff, tail_tolerance);
  const double lam = lambda_of(r);
  const double t = std::tanh(r);
  FockOperator op = FockOperator::zero(cutoff);
  for (std::size_t m = 0; m < cutoff; ++m) {
    for (std::size_t n = 0; n < cutoff; ++n) {
      op.entries()(op.index(m, m), op.index(n, n)) =
          (1.0 - lam) * std::pow(t, static_cast<double>(m + n));
    }
  }
  return op;
}

FockOperator fock_gi(const GIParams& params, std::size_t cutoff, double tail_tolerance) {
  check_cutoff_size(cutoff);
  check_tail(params.r(), cutoff, tail_tolerance);

  const double r = params.r();
  const double p = params.p();
  const double ch2 = std::cosh(r) * std::cosh(r);
  const double sh2 = std::sinh(r) * std::sinh(r);
  const double d = ch2 - p * p * sh2;

  // Generating function K exp(z^T A z / 2) in z = (mu*, nu*, kappa, tau).
  // The only nonzero couplings are (mu*,kappa), (nu*,tau) with weight
  // sinh^2 r (1 - p^2) / D and (mu*,nu*), (kappa,tau) with weight p tanh r / D.
  const double local = sh2 * (1.0 - p * p) / d;
  const double cross = p * std::tanh(r) / d;
  std::array<std::array<double, 4>, 4> a{};
  a[0][2] = a[2][0] = local;
  a[1][3] = a[3][1] = local;
  a[0][1] = a[1][0] = cross;
  a[2][3] = a[3][2] = cross;

  const std::size_t n = cutoff;
  const std::array<std::size_t, 4> stride = {n * n * n, n * n, n, 1};
  std::vector<double> sqrt_int(n + 1);
  for (std::size_t i = 0; i <= n; ++i) sqrt_int[i] = std::sqrt(static_cast<double>(i));

  // coeff[j] = Taylor coefficient of z^j times sqrt(j!), laid out so the flat
  // index is the row-major matrix position of <m,n|rho|k,l>.
  std::vector<double> coeff(n * n * n * n, 0.0);
  coeff[0] = 1.0 / (ch2 * d);
  std::array<std::size_t, 4> j{};
  for (std::size_t flat = 1; flat < coeff.size(); ++flat) {
    std::size_t rest = flat;
    for (std::size_t q = 0; q < 4; ++q) {
      j[q] = rest / stride[q];
      rest %= stride[q];
    }
    const std::size_t i = static_cast<std::size_t>(
        std::find_if(j.begin(), j.end(), [](std::size_t v) { return v > 0; }) - j.begin());
    // sqrt(j_i) rho_j = sum_k A_ik sqrt(j'_k) rho_{j' - e_k}, with j' = j - e_i.
    const std::size_t prev = flat - stride[i];
    double sum = 0.0;
    for (std::size_t k = 0; k < 4; ++k) {
      const std::size_t jk = j[k] - (k == i ? 1 : 0);
      if (a[i][k] != 0.0 && jk > 0) sum += a[i][k] * sqrt_int[jk] * coeff[prev - stride[k]];
    }
    coeff[flat] = sum / sqrt_int[j[i]];
  }

  const auto dim = static_cast<Index>(n * n);
  Eigen::MatrixXcd entries(dim, dim);
  for (Index row = 0; row < dim; ++row) {
    for (Index col = 0; col < dim; ++col) {
      entries(row, col) = coeff[static_cast<std::size_t>(row * dim + col)];
    }
  }
  FockOperator op(n, std::move(entries));

  const double residual = extraction_residual(op, params);
  if (residual > kExtractionTolerance) {
    throw ExtractionError("Fock coefficients fail to reproduce coherent elements (residual " +
                          std::to_string(residual) + ")");
  }
  return op;
}

FockOperator fock_gi_contour(const GIParams& params, std::size_t cutoff, double radius,
                             std::size_t samples, double tail_tolerance) {
  check_cutoff_size(cutoff);
  check_tail(params.r(), cutoff, tail_tolerance);
  if (!(radius > 0.0)) throw DomainError("contour radius must be positive");
  const std::size_t n = cutoff;
  const std::size_t m = samples == 0 ? 2 * n : samples;
  if (m < n) throw DomainError("contour needs at least `cutoff` samples per circle");

  std::vector<complex> phase(m);
  for (std::size_t s = 0; s < m; ++s) {
    phase[s] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(s) /
                                   static_cast<double>(m));
  }

  // Samples of G on the torus |z_q| = radius, z = (mu*, nu*, kappa, tau).
  const double envelope = std::exp(2.0 * radius * radius);
  std::vector<complex> grid(m * m * m * m);
  for (std::size_t s0 = 0; s0 < m; ++s0) {
    for (std::size_t s1 = 0; s1 < m; ++s1) {
      for (std::size_t s2 = 0; s2 < m; ++s2) {
        for (std::size_t s3 = 0; s3 < m; ++s3) {
          const CoherentPoint pt{radius * std::conj(phase[s0]), radius * std::conj(phase[s1]),
                                 radius * phase[s2], radius * phase[s3]};
          grid[((s0 * m + s1) * m + s2) * m + s3] = envelope * coherent_element(params, pt);
        }
      }
    }
  }

  // Separable DFT, one axis at a time, keeping only the first n frequencies.
  // Axis q runs over `len` entries with `outer` leading and `inner` trailing
  // extents.
  std::array<std::size_t, 4> extent = {m, m, m, m};
  for (std::size_t q = 0; q < 4; ++q) {
    std::size_t outer = 1;
    std::size_t inner = 1;
    for (std::size_t u = 0; u < q; ++u) outer *= extent[u];
    for (std::size_t u = q + 1; u < 4; ++u) inner *= extent[u];
    std::vector<complex> next(outer * n * inner);
    for (std::size_t o = 0; o < outer; ++o) {
      for (std::size_t f = 0; f < n; ++f) {
        for (std::size_t in = 0; in < inner; ++in) {
          complex sum = 0.0;
          for (std::size_t s = 0; s < m; ++s) {
            sum += grid[(o * m + s) * inner + in] * std::conj(phase[(f * s) % m]);
          }
          next[(o * n + f) * inner + in] = sum / static_cast<double>(m);
        }
      }
    }
    grid = std::move(next);
    extent[q] = n;
  }
  // grid now holds c_j radius^|j|.
  const auto dim = static_cast<Index>(n * n);
  Eigen::MatrixXcd entries(dim, dim);
  for (std::size_t j0 = 0; j0 < n; ++j0) {
    for (std::size_t j1 = 0; j1 < n; ++j1) {
      for (std::size_t j2 = 0; j2 < n; ++j2) {
        for (std::size_t j3 = 0; j3 < n; ++j3) {
          const double total = static_cast<double>(j0 + j1 + j2 + j3);
          const double log_scale = 0.5 * (log_factorial(j0) + log_factorial(j1) +
                                          log_factorial(j2) + log_factorial(j3));
          const complex c = grid[((j0 * n + j1) * n + j2) * n + j3];
          entries(static_cast<Index>(j0 * n + j1), static_cast<Index>(j2 * n + j3)) =
              c * std::exp(log_scale) / std::pow(radius, total);
        }
      }
    }
  }
  FockOperator op(n, std::move(entries));
  const double residual = extraction_residual(op, params);
  if (residual > kExtractionTolerance) {
    throw ExtractionError("contour extraction residual " + std::to_string(residual) +
                          " exceeds tolerance");
  }
  return op;
}

complex synthesize_coherent_element(const FockOperator& op, const CoherentPoint& pt) {
  const std::size_t n = op.cutoff();
  // <alpha|m> = exp(-|alpha|^2/2) alpha*^m / sqrt(m!), <k|alpha> its conjugate.
  auto bra_weights = [n](complex label) {
    std::vector<complex> w(n);
    complex power = 1.0;
    for (std::size_t m = 0; m < n; ++m) {
      w[m] = power * std::exp(-0.5 * log_factorial(m));
      power *= std::conj(label);
    }
    return w;
  };
  auto ket_weights = [n](complex label) {
    std::vector<complex> w(n);
    complex power = 1.0;
    for (std::size_t m = 0; m < n; ++m) {
      w[m] = power * std::exp(-0.5 * log_factorial(m));
      power *= label;
    }
    return w;
  };
  const auto wa = bra_weights(pt.mu);
  const auto wb = bra_weights(pt.nu);
  const auto wk = ket_weights(pt.kappa);
  const auto wl = ket_weights(pt.tau);

  Eigen::VectorXcd bra(static_cast<Index>(n * n));
  Eigen::VectorXcd ket(static_cast<Index>(n * n));
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t b = 0; b < n; ++b) {
      bra(op.index(m, b)) = wa[m] * wb[b];
      ket(op.index(m, b)) = wk[m] * wl[b];
    }
  }
  const complex sum = bra.transpose() * op.entries() * ket;
  return std::exp(-0.5 * coherent_norm_sq(pt)) * sum;
}

double extraction_residual(const FockOperator& op, const GIParams& params) {
  double worst = 0.0;
  for (const auto& pt : held_out_points()) {
    worst = std::max(worst, std::abs(synthesize_coherent_element(op, pt) -
                                     coherent_element(params, pt)));
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Moments

CovarianceMatrix cm_from_fock(const FockOperator& op) {
  const complex tr = op.trace();
  if (std::abs(tr - 1.0) > kTraceTolerance) {
    throw StateError("operator trace " + std::to_string(tr.real()) +
                     " deviates from 1 by more than 1e-6");
  }
  const std::size_t n = op.cutoff();
  const auto& rho = op.entries();
  auto at = [&](std::size_t m, std::size_t b, std::size_t k, std::size_t l) {
    return rho(op.index(m, b), op.index(k, l));
  };
  auto sq = [](std::size_t v) { return std::sqrt(static_cast<double>(v)); };

  // Tr[rho O] = sum_ij rho_ij O_ji for the ladder monomials needed below.
  complex a1 = 0.0, b1 = 0.0, aa = 0.0, bb = 0.0, ab = 0.0, adag_b = 0.0;
  double na = 0.0, nb = 0.0;
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t b = 0; b < n; ++b) {
      const double diag = at(m, b, m, b).real();
      na += static_cast<double>(m) * diag;
      nb += static_cast<double>(b) * diag;
      if (m >= 1) a1 += at(m, b, m - 1, b) * sq(m);
      if (b >= 1) b1 += at(m, b, m, b - 1) * sq(b);
      if (m >= 2) aa += at(m, b, m - 2, b) * sq(m * (m - 1));
      if (b >= 2) bb += at(m, b, m, b - 2) * sq(b * (b - 1));
      if (m >= 1 && b >= 1) ab += at(m, b, m - 1, b - 1) * sq(m * b);
      if (b >= 1 && m + 1 < n) adag_b += at(m, b, m + 1, b - 1) * sq((m + 1) * b);
    }
  }
  const double norm = tr.real();
  a1 /= norm; b1 /= norm; aa /= norm; bb /= norm; ab /= norm; adag_b /= norm;
  na /= norm; nb /= norm;

  // R = u a + conj(u) a^dagger with u_x = 1/sqrt2, u_p = -i/sqrt2.
  const double h = 1.0 / std::numbers::sqrt2;
  const std::array<complex, 2> u = {complex(h, 0.0), complex(0.0, -h)};
  const std::array<complex, 2> first = {a1, b1};
  const std::array<complex, 2> second = {aa, bb};
  const std::array<double, 2> number = {na, nb};

  auto mean = [&](std::size_t mode, std::size_t quad) {
    return 2.0 * (u[quad] * first[mode]).real();
  };

  Eigen::MatrixXd g(4, 4);
  for (std::size_t mode = 0; mode < 2; ++mode) {
    for (std::size_t q1 = 0; q1 < 2; ++q1) {
      for (std::size_t q2 = 0; q2 < 2; ++q2) {
        const double sym = 4.0 * (u[q1] * u[q2] * second[mode]).real() +
                           2.0 * (u[q1] * std::conj(u[q2])).real() * (2.0 * number[mode] + 1.0);
        g(static_cast<Index>(2 * mode + q1), static_cast<Index>(2 * mode + q2)) =
            sym - 2.0 * mean(mode, q1) * mean(mode, q2);
      }
    }
  }
  for (std::size_t q1 = 0; q1 < 2; ++q1) {
    for (std::size_t q2 = 0; q2 < 2; ++q2) {
      const double sym =
          4.0 * (u[q1] * u[q2] * ab + std::conj(u[q1]) * u[q2] * adag_b).real();
      const double v = sym - 2.0 * mean(0, q1) * mean(1, q2);
      g(static_cast<Index>(q1), static_cast<Index>(2 + q2)) = v;
      g(static_cast<Index>(2 + q2), static_cast<Index>(q1)) = v;
    }
  }
  return CovarianceMatrix(std::move(g));
}

double negativity_oracle(const GIParams& params, std::size_t cutoff, double tail_tolerance) {
  return fock_gi(params, cutoff, tail_tolerance).partial_transpose_b().min_eigenvalue();
}

}  // namespace cviso
