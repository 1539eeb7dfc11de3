#include "witbound/selftest.hpp"

#include <unistd.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <unsupported/Eigen/KroneckerProduct>

#include "witbound/bloch.hpp"
#include "witbound/bounds.hpp"
#include "witbound/cli.hpp"
#include "witbound/format.hpp"
#include "witbound/gell_mann.hpp"
#include "witbound/linalg.hpp"
#include "witbound/rng.hpp"
#include "witbound/state_io.hpp"
#include "witbound/states.hpp"
#include "witbound/sweep.hpp"
#include "witbound/types.hpp"
#include "witbound/witness.hpp"

namespace witbound {

namespace {

struct SampleOutcome {
  bool ok = true;
  std::string note;
};

// per-sample accumulator; the first failed condition is kept
class Check {
 public:
  void fail(const std::string& what) {
    if (out_.ok) {
      out_.ok = false;
      out_.note = what;
    }
  }
  void require(bool cond, const std::string& what) {
    if (!cond) fail(what);
  }
  void require_close(double got, double want, double tolerance, const std::string& what) {
    if (!(std::abs(got - want) <= tolerance)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << what << ": got " << got << ", want " << want << " (tol " << tolerance << ")";
      fail(msg.str());
    }
  }
  void require_le(double value, double ceiling, const std::string& what) {
    if (!(value <= ceiling)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << what << ": " << value << " exceeds " << ceiling;
      fail(msg.str());
    }
  }
  const SampleOutcome& outcome() const { return out_; }

 private:
  SampleOutcome out_;
};

// accumulator for the non-sampled suites
class FixedSuite {
 public:
  explicit FixedSuite(std::string name) { r_.name = std::move(name); }
  void check(bool cond, const std::string& what) {
    ++r_.total;
    if (cond) {
      ++r_.passed;
    } else if (r_.notes.size() < 3) {
      r_.notes.push_back(what);
    }
  }
  SuiteResult result() const { return r_; }

 private:
  SuiteResult r_;
};

// well-mixed 64-bit seed for sample i (object j) of a suite
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t suite, std::uint64_t i,
                          std::uint64_t j = 0) {
  SplitMix64 g(seed + 0x9e3779b97f4a7c15ULL * ((suite << 40) + (i << 8) + j));
  return g();
}

template <typename Body>
SuiteResult sampled_suite(const std::string& name, ExecMode mode, int samples, Body&& body) {
  std::vector<SampleOutcome> slots(static_cast<std::size_t>(samples));
  parallel_for(mode, samples, [&](std::int64_t i) {
    Check check;
    try {
      body(static_cast<int>(i), check);
      slots[static_cast<std::size_t>(i)] = check.outcome();
    } catch (const std::exception& e) {
      slots[static_cast<std::size_t>(i)] = {false,
                                            std::string("unexpected exception: ") + e.what()};
    }
  });
  SuiteResult r;
  r.name = name;
  r.total = samples;
  for (int i = 0; i < samples; ++i) {
    if (slots[static_cast<std::size_t>(i)].ok) {
      ++r.passed;
    } else if (r.notes.size() < 3) {
      r.notes.push_back("sample " + std::to_string(i) + ": " +
                        slots[static_cast<std::size_t>(i)].note);
    }
  }
  return r;
}

std::pair<int, int> dims_cycle3(int i) {
  switch (i % 3) {
    case 0: return {2, 2};
    case 1: return {2, 3};
    default: return {3, 3};
  }
}

std::pair<int, int> dims_cycle2(int i) { return (i % 2 == 0) ? std::pair{2, 2} : std::pair{3, 3}; }

template <typename M>
bool same_bits(const M& a, const M& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index k = 0; k < a.size(); ++k) {
    if (a(k) != b(k)) return false;
  }
  return true;
}

bool rows_same_bits(const std::vector<SweepRow>& a, const std::vector<SweepRow>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].a != b[i].a || a[i].pure != b[i].pure || a[i].mixed != b[i].mixed ||
        a[i].qubit != b[i].qubit)
      return false;
  }
  return true;
}

ComplexMatrix single_density(int d, SplitMix64& rng) {
  ComplexMatrix g(d, d);
  for (Eigen::Index k = 0; k < g.size(); ++k) g(k) = rng.gaussian_complex();
  ComplexMatrix h = g * g.adjoint();
  return h / h.trace().real();
}

SuiteResult suite_basis_orthogonality() {
  FixedSuite s("basis_orthogonality");
  for (int d : {2, 3, 4}) {
    const GellMannBasis basis = gell_mann_basis(d);
    bool ok = static_cast<int>(basis.lambda.size()) == d * d - 1;
    double worst = 0.0;
    for (std::size_t i = 0; i < basis.lambda.size() && ok; ++i) {
      for (std::size_t j = i; j < basis.lambda.size(); ++j) {
        const Complex tr = (basis.lambda[i] * basis.lambda[j]).trace();
        const double want = (i == j) ? 2.0 : 0.0;
        worst = std::max(worst, std::abs(tr - Complex(want, 0.0)));
      }
    }
    std::ostringstream what;
    what << "d=" << d << " pairwise tr(l_i l_j) = 2 delta_ij (worst " << worst << ")";
    s.check(ok && worst < 1e-12, what.str());
  }
  return s.result();
}

SuiteResult suite_bloch_round_trip(std::uint64_t seed, int samples, ExecMode mode) {
  return sampled_suite("bloch_round_trip", mode, samples, [&](int i, Check& c) {
    const auto [d1, d2] = dims_cycle3(i);
    const Eigen::Index dim = static_cast<Eigen::Index>(d1) * d2;
    // random Hermitian unit-trace operator, not necessarily positive
    ComplexMatrix h = random_density(d1, d2, derive_seed(seed, 2, i)).rho;
    SplitMix64 rng(derive_seed(seed, 2, i, 1));
    ComplexMatrix g(dim, dim);
    for (Eigen::Index k = 0; k < g.size(); ++k) g(k) = rng.gaussian_complex();
    ComplexMatrix p = 0.5 * (g + g.adjoint());
    p -= (p.trace() / static_cast<double>(dim)) * ComplexMatrix::Identity(dim, dim);
    h += 0.3 * p;

    const ComplexMatrix back = bloch_compose(bloch_decompose(h, d1, d2));
    c.require_le((back - h).cwiseAbs().maxCoeff(), 1e-10, "round trip max entry deviation");
  });
}

SuiteResult suite_schmidt_normalization(std::uint64_t seed, int samples, ExecMode mode) {
  return sampled_suite("schmidt_normalization", mode, samples, [&](int i, Check& c) {
    const auto [d1, d2] = dims_cycle3(i);
    const RealVector mu = schmidt_coefficients(random_pure(d1, d2, derive_seed(seed, 3, i)));
    c.require(mu.size() == std::min(d1, d2), "coefficient count equals min(d1, d2)");
    c.require_close(mu.sum(), 1.0, 1e-10, "coefficients sum to 1");
    for (Eigen::Index k = 0; k + 1 < mu.size(); ++k) {
      c.require(mu(k) >= mu(k + 1) - 1e-14, "coefficients sorted nonincreasing");
    }
    c.require(mu(mu.size() - 1) >= -1e-14, "coefficients nonnegative");
  });
}

SuiteResult suite_pure_norm_identity(std::uint64_t seed, int samples, ExecMode mode) {
  return sampled_suite("pure_norm_identity", mode, samples, [&](int i, Check& c) {
    const auto [d1, d2] = dims_cycle3(i);
    const StateVector psi = random_pure(d1, d2, derive_seed(seed, 4, i));
    const ComplexMatrix rho = projector(psi).rho;
    const RealVector mu = schmidt_coefficients(psi);
    const double ssq = std::pow(mu.cwiseSqrt().sum(), 2);
    const double tn_pt = trace_norm(partial_transpose(rho, d1, d2));
    const double tn_re = trace_norm(realign(rho, d1, d2));
    c.require_close(tn_pt, ssq, 1e-8, "partial transpose trace norm vs Schmidt form");
    c.require_close(tn_re, ssq, 1e-8, "realignment trace norm vs Schmidt form");
    c.require_close(tn_pt, tn_re, 1e-8, "the two trace norms agree on pure states");
  });
}

SuiteResult suite_partial_transpose_involution(std::uint64_t seed, int samples, ExecMode mode) {
  return sampled_suite("partial_transpose_involution", mode, samples, [&](int i, Check& c) {
    const auto [d1, d2] = dims_cycle3(i);
    const ComplexMatrix rho = random_density(d1, d2, derive_seed(seed, 5, i)).rho;
    const ComplexMatrix pt = partial_transpose(rho, d1, d2);
    c.require_le((partial_transpose(pt, d1, d2) - rho).cwiseAbs().maxCoeff(), 1e-13,
                 "applying the map twice restores the input");
    c.require_le((pt - pt.adjoint()).cwiseAbs().maxCoeff(), 1e-12, "hermiticity preserved");
    c.require_close(pt.trace().real(), rho.trace().real(), 1e-12, "trace preserved");
  });
}

SuiteResult suite_constructor_determinism(std::uint64_t seed, int samples, ExecMode mode) {
  return sampled_suite("constructor_determinism", mode, samples, [&](int i, Check& c) {
    const auto [d1, d2] = dims_cycle3(i);
    const std::uint64_t s0 = derive_seed(seed, 6, i, 0);
    const std::uint64_t s1 = derive_seed(seed, 6, i, 1);
    const std::uint64_t s2 = derive_seed(seed, 6, i, 2);
    const std::uint64_t s3 = derive_seed(seed, 6, i, 3);
    const std::uint64_t s4 = derive_seed(seed, 6, i, 4);

    const StateVector prod = random_product_pure(d1, d2, s0);
    c.require(same_bits(prod.amp, random_product_pure(d1, d2, s0).amp),
              "product state reproducible bit for bit");
    c.require(schmidt_coefficients(prod)(0) >= 1.0 - 1e-12, "product state has Schmidt rank 1");

    const DensityMatrix sep = random_separable_mixed(d1, d2, 1 + (i % 4), s1);
    c.require(same_bits(sep.rho, random_separable_mixed(d1, d2, 1 + (i % 4), s1).rho),
              "separable mixture reproducible bit for bit");
    try {
      make_density(d1, d2, sep.rho);
    } catch (const std::exception& e) {
      c.fail(std::string("separable mixture violates density invariants: ") + e.what());
    }

    const DensityMatrix rho = random_density(d1, d2, s2);
    c.require(same_bits(rho.rho, random_density(d1, d2, s2).rho),
              "density sample reproducible bit for bit");

    const StateVector psi = random_pure(d1, d2, s3);
    c.require(same_bits(psi.amp, random_pure(d1, d2, s3).amp),
              "pure sample reproducible bit for bit");
    try {
      make_state(d1, d2, psi.amp);
    } catch (const std::exception& e) {
      c.fail(std::string("pure sample violates state invariants: ") + e.what());
    }

    const auto [ua, ub] = random_local_unitary_pair(d1, d2, s4);
    const auto [ua2, ub2] = random_local_unitary_pair(d1, d2, s4);
    c.require(same_bits(ua, ua2) && same_bits(ub, ub2), "unitary pair reproducible bit for bit");
    c.require_le((ua.adjoint() * ua - ComplexMatrix::Identity(d1, d1)).cwiseAbs().maxCoeff(),
                 1e-12, "left factor unitary");
    c.require_le((ub.adjoint() * ub - ComplexMatrix::Identity(d2, d2)).cwiseAbs().maxCoeff(),
                 1e-12, "right factor unitary");
  });
}

SuiteResult suite_isotropic_affinity(std::uint64_t seed, int samples, ExecMode mode) {
  return sampled_suite("isotropic_affinity", mode, samples, [&](int i, Check& c) {
    const auto [d1, d2] = dims_cycle2(i);
    SplitMix64 rng(derive_seed(seed, 7, i));
    const double a = 2.0 * rng.uniform();
    const double x = rng.uniform();
    const StateVector psi = (d1 == 2) ? pure_family_2x2(a) : pure_family_3x3(a);
    const BlochForm pure_form = bloch_decompose(projector(psi).rho, d1, d2);
    const BlochForm mix_form = bloch_decompose(isotropic_mix(x, psi).rho, d1, d2);
    c.require_le((mix_form.R - (1.0 - x) * pure_form.R).cwiseAbs().maxCoeff(), 1e-12,
                 "correlation matrix scales by 1 - x");
    c.require_le((mix_form.s - (1.0 - x) * pure_form.s).cwiseAbs().maxCoeff(), 1e-12,
                 "left Bloch vector scales by 1 - x");
    c.require_le((mix_form.t - (1.0 - x) * pure_form.t).cwiseAbs().maxCoeff(), 1e-12,
                 "right Bloch vector scales by 1 - x");
  });
}

SuiteResult suite_haar_moments(std::uint64_t seed, int samples) {
  FixedSuite s("haar_moments");
  double acc_pure = 0.0;
  double acc_prod = 0.0;
  for (int i = 0; i < samples; ++i) {
    acc_pure += std::norm(random_pure(2, 2, derive_seed(seed, 8, i, 0)).amp(0));
    acc_prod += std::norm(random_product_pure(2, 2, derive_seed(seed, 8, i, 1)).amp(0));
  }
  const double scale = std::sqrt(1000.0 / std::max(1, samples));
  {
    std::ostringstream what;
    what << "mean |<00|psi>|^2 over Haar states: " << acc_pure / samples << " vs 0.25";
    s.check(std::abs(acc_pure / samples - 0.25) <= 0.05 * scale, what.str());
  }
  {
    std::ostringstream what;
    what << "mean |<00|a,b>|^2 over Haar products: " << acc_prod / samples << " vs 0.25";
    s.check(std::abs(acc_prod / samples - 0.25) <= 0.08 * scale, what.str());
  }
  return s.result();
}

SuiteResult suite_soundness_separable(std::uint64_t seed, int samples, ExecMode mode) {
  return sampled_suite("soundness_separable", mode, samples, [&](int i, Check& c) {
    const auto [d1, d2] = dims_cycle2(i);
    const DensityMatrix rho = random_separable_mixed(d1, d2, 1 + (i % 4), derive_seed(seed, 9, i));
    const BoundReport rep = evaluate(rho);
    c.require_le(rep.bound_mixed, 1e-8, "correlation bound on a separable state");
    if (rep.bound_qubit) c.require_le(*rep.bound_qubit, 1e-8, "qubit bound on a separable state");
    if (rep.bound_pure) c.require_le(*rep.bound_pure, 1e-8, "pure bound on a separable state");
    c.require(!rep.entangled, "verdict must stay inconclusive");
  });
}

SuiteResult suite_witness_nonnegativity(std::uint64_t seed, int samples, ExecMode mode) {
  return sampled_suite("witness_nonnegativity", mode, samples, [&](int i, Check& c) {
    const auto [d1, d2] = dims_cycle2(i);
    const DensityMatrix sigma =
        random_separable_mixed(d1, d2, 1 + (i % 4), derive_seed(seed, 10, i, 0));

    const WitnessOperator wp = construct_L_pure(random_pure(d1, d2, derive_seed(seed, 10, i, 1)));
    c.require_le(witness_expectation(wp, sigma), 1e-9,
                 "pure-construction witness on a separable state");

    const WitnessOperator wm =
        construct_L_mixed(random_density(d1, d2, derive_seed(seed, 10, i, 2)));
    c.require_le(witness_expectation(wm, sigma), 1e-9,
                 "correlation-construction witness on a separable state");

    if (d1 == 2 && d2 == 2) {
      const WitnessOperator wq = construct_L_qubit(random_density(2, 2, derive_seed(seed, 10, i, 3)));
      c.require_le(witness_expectation(wq, sigma), 1e-9,
                   "qubit-construction witness on a separable state");
    }
  });
}

SuiteResult suite_constructive_consistency(std::uint64_t seed, int samples, ExecMode mode) {
  return sampled_suite("constructive_consistency", mode, samples, [&](int i, Check& c) {
    const auto [d1, d2] = dims_cycle2(i);

    const StateVector psi = random_pure(d1, d2, derive_seed(seed, 11, i, 0));
    const WitnessOperator wp = construct_L_pure(psi);
    c.require_close(witness_expectation(wp, projector(psi)), bound_pure(psi), 1e-10,
                    "pure witness realizes the pure bound");

    const DensityMatrix rho = random_density(d1, d2, derive_seed(seed, 11, i, 1));
    const WitnessOperator wm = construct_L_mixed(rho);
    c.require_close(witness_expectation(wm, rho), bound_mixed(rho), 1e-10,
                    "correlation witness realizes the correlation bound");
    c.require_close(wm.L.trace().real(), 1.0, 1e-10, "constructed L has unit trace");

    if (d1 == 2 && d2 == 2) {
      const DensityMatrix rho2 = random_density(2, 2, derive_seed(seed, 11, i, 2));
      const WitnessOperator wq = construct_L_qubit(rho2);
      c.require_close(witness_expectation(wq, rho2), bound_qubit(rho2), 1e-10,
                      "qubit witness realizes the qubit bound");
    }
  });
}

SuiteResult suite_oracle_agreement(std::uint64_t seed, int samples, ExecMode mode) {
  return sampled_suite("oracle_agreement", mode, samples, [&](int i, Check& c) {
    const std::uint64_t sd = derive_seed(seed, 12, i, 0);
    const std::uint64_t vseed = derive_seed(seed, 12, i, 1);
    switch (i % 3) {
      case 0: {
        const auto [d1, d2] = dims_cycle2(i / 3);
        const StateVector chi = random_pure(d1, d2, sd);
        const double closed = alpha_rank_one(chi);
        const double var = alpha_variational(projector(chi).rho, d1, d2, 20, 500, vseed,
                                             ExecMode::Serial);
        c.require_close(var, closed, 1e-8, "ascent matches the rank-1 maximum");
        c.require(var >= 1.0 / (d1 * d2) - 1e-9, "ascent at least the isotropic average");
        break;
      }
      case 1: {
        const ComplexMatrix L = random_correlation_L(2, 2, sd);
        const double closed = alpha_correlation(L, 2, 2);
        const double var = alpha_variational(L, 2, 2, 20, 500, vseed, ExecMode::Serial);
        c.require_close(var, closed, 1e-8, "ascent matches the qubit correlation maximum");
        break;
      }
      default: {
        const ComplexMatrix L = random_correlation_L(3, 3, sd);
        const double closed = alpha_correlation(L, 3, 3);
        const double var = alpha_variational(L, 3, 3, 20, 500, vseed, ExecMode::Serial);
        c.require_le(var, closed + 1e-8, "ascent never exceeds the correlation ceiling");
        c.require(var >= 1.0 / 9.0 - 1e-9, "ascent at least the isotropic average");
        break;
      }
    }
  });
}

SuiteResult suite_lu_invariance(std::uint64_t seed, int samples, ExecMode mode) {
  return sampled_suite("lu_invariance", mode, samples, [&](int i, Check& c) {
    const auto [d1, d2] = dims_cycle2(i);
    const DensityMatrix rho = random_density(d1, d2, derive_seed(seed, 13, i, 0));
    const auto [ua, ub] = random_local_unitary_pair(d1, d2, derive_seed(seed, 13, i, 1));
    const DensityMatrix rotated = conjugate_local(rho, ua, ub);

    const RealMatrix r1 = bloch_decompose(rho.rho, d1, d2).R;
    const RealMatrix r2 = bloch_decompose(rotated.rho, d1, d2).R;
    const RealVector sv1 = Eigen::JacobiSVD<RealMatrix>(r1).singularValues();
    const RealVector sv2 = Eigen::JacobiSVD<RealMatrix>(r2).singularValues();
    c.require_le((sv1 - sv2).cwiseAbs().maxCoeff(), 1e-9,
                 "correlation singular values unchanged");

    c.require_close(bound_mixed(rotated), bound_mixed(rho), 1e-9,
                    "correlation bound unchanged");
    if (d1 == 2 && d2 == 2) {
      c.require_close(bound_qubit(rotated), bound_qubit(rho), 1e-9, "qubit bound unchanged");
    }
  });
}

SuiteResult suite_continuity(std::uint64_t seed, int samples, ExecMode mode) {
  return sampled_suite("continuity", mode, samples, [&](int i, Check& c) {
    const auto [d1, d2] = dims_cycle2(i);
    const Eigen::Index dim = static_cast<Eigen::Index>(d1) * d2;
    const DensityMatrix rho = random_density(d1, d2, derive_seed(seed, 14, i));
    const double base_mixed = bound_mixed(rho);
    const double base_qubit = (d1 == 2 && d2 == 2) ? bound_qubit(rho) : 0.0;
    for (double eps : {1e-2, 1e-3, 1e-4}) {
      const DensityMatrix near = make_density(
          d1, d2,
          (1.0 - eps) * rho.rho +
              (eps / static_cast<double>(dim)) * ComplexMatrix::Identity(dim, dim));
      c.require_le(std::abs(bound_mixed(near) - base_mixed), 10.0 * eps,
                   "correlation bound moves at most 10 eps");
      if (d1 == 2 && d2 == 2) {
        c.require_le(std::abs(bound_qubit(near) - base_qubit), 10.0 * eps,
                     "qubit bound moves at most 10 eps");
      }
    }
  });
}

SuiteResult suite_fixed_witness_convexity(std::uint64_t seed, int samples, ExecMode mode) {
  return sampled_suite("fixed_witness_convexity", mode, samples, [&](int i, Check& c) {
    const auto [d1, d2] = dims_cycle2(i);
    const DensityMatrix rho1 = random_density(d1, d2, derive_seed(seed, 15, i, 0));
    const DensityMatrix rho2 = random_density(d1, d2, derive_seed(seed, 15, i, 1));

    std::vector<WitnessOperator> pool;
    pool.push_back(construct_L_pure(random_pure(d1, d2, derive_seed(seed, 15, i, 2))));
    pool.push_back(construct_L_mixed(rho1));
    if (d1 == 2 && d2 == 2) pool.push_back(construct_L_qubit(rho1));

    const auto best_violation = [&](const DensityMatrix& rho) {
      double best = -1e300;
      for (const WitnessOperator& w : pool) best = std::max(best, witness_expectation(w, rho));
      return best;
    };

    const double f0 = best_violation(rho1);
    const double f1 = best_violation(rho2);
    for (double lam : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      const DensityMatrix mix =
          make_density(d1, d2, (1.0 - lam) * rho1.rho + lam * rho2.rho);
      c.require_le(best_violation(mix), (1.0 - lam) * f0 + lam * f1 + 1e-12,
                   "max over a fixed witness family is convex");
    }
  });
}

SuiteResult suite_pure_state_agreement(std::uint64_t seed, int samples, ExecMode mode) {
  return sampled_suite("pure_state_agreement", mode, samples, [&](int i, Check& c) {
    SplitMix64 rng(derive_seed(seed, 16, i, 0));
    const StateVector family = pure_family_2x2(2.0 * rng.uniform());
    c.require_close(bound_pure(family), bound_qubit(projector(family)), 1e-9,
                    "family state: pure and qubit bounds agree");
    const StateVector psi = random_pure(2, 2, derive_seed(seed, 16, i, 1));
    c.require_close(bound_pure(psi), bound_qubit(projector(psi)), 1e-9,
                    "random pure state: pure and qubit bounds agree");
  });
}

SuiteResult suite_norm_ordering(std::uint64_t seed, int samples, ExecMode mode) {
  return sampled_suite("norm_ordering", mode, samples, [&](int i, Check& c) {
    const auto [d1, d2] = dims_cycle3(i);
    const Eigen::Index dim = static_cast<Eigen::Index>(d1) * d2;
    SplitMix64 rng(derive_seed(seed, 17, i));

    ComplexMatrix m(dim, dim);
    for (Eigen::Index k = 0; k < m.size(); ++k) m(k) = rng.gaussian_complex();
    const double sn = spectral_norm(m);
    const double fn = frobenius_norm(m);
    const double tn = trace_norm(m);
    c.require_le(sn, fn + 1e-12, "spectral norm at most Frobenius norm");
    c.require_le(fn, tn + 1e-12, "Frobenius norm at most trace norm");

    const ComplexMatrix ga = single_density(d1, rng);
    const ComplexMatrix gb = single_density(d2, rng);
    const ComplexMatrix prod = Eigen::kroneckerProduct(ga, gb);
    const double pa = (ga * ga).trace().real();
    const double pb = (gb * gb).trace().real();
    c.require_close(trace_norm(realign(prod, d1, d2)), std::sqrt(pa * pb), 1e-8,
                    "realignment trace norm factorizes on product states");

    const DensityMatrix iso = isotropic_mix(rng.uniform(), pure_family_2x2(2.0 * rng.uniform()));
    c.require(bound_qubit(iso) >= bound_mixed(iso) - 1e-12,
              "qubit bound dominates the correlation bound on family states");
  });
}

SuiteResult suite_cli_contracts(std::uint64_t seed, ExecMode mode) {
  namespace fs = std::filesystem;
  FixedSuite s("csv_and_cli_contracts");

  s.check(format_sig(0.5) == "0.5", "format 0.5");
  s.check(format_sig(1.0 / 3.0) == "0.333333333333", "format 1/3 at 12 digits");
  s.check(format_sig(1e-30) == "1e-30", "format 1e-30");
  s.check(format_sig(0.0) == "0", "format 0");

  SweepRequest req;
  req.family = SweepFamily::Pure2x2;
  req.a_min = 0.0;
  req.a_max = 2.0;
  req.steps = 9;
  const std::vector<SweepRow> rows = sweep_rows(req, ExecMode::Serial);
  s.check(rows_same_bits(rows, sweep_rows(req, mode)),
          "grid rows identical across execution modes");
  s.check(rows_same_bits(rows, sweep_rows(req, ExecMode::Serial)),
          "grid rows identical across repeated runs");

  const std::string csv = csv_text(rows);
  std::vector<std::string> lines;
  {
    std::istringstream stream(csv);
    std::string line;
    while (std::getline(stream, line)) lines.push_back(line);
  }
  s.check(lines.size() == 10, "csv has header plus one line per grid point");
  s.check(!lines.empty() && lines[0] == "a,bound_thm2,bound_thm4,bound_thm5", "csv header");
  s.check(lines.size() > 1 && lines[1] == "0,0,0,0", "product-state row is exactly zero");
  s.check(lines.size() > 5 && lines[5] == "1,0.471404520791,0.136082763488,0.471404520791",
          "frozen row at a = 1");

  const fs::path dir = fs::temp_directory_path() /
                       ("witbound_selftest_" + std::to_string(seed) + "_" +
                        std::to_string(static_cast<long long>(::getpid())));
  std::error_code ec;
  fs::create_directories(dir, ec);
  s.check(!ec, "create scratch directory");

  ComplexVector bell_amp(4);
  bell_amp << Complex(1.0 / std::sqrt(2.0), 0.0), Complex(0.0, 0.0), Complex(0.0, 0.0),
      Complex(1.0 / std::sqrt(2.0), 0.0);
  const DensityMatrix bell = projector(make_state(2, 2, bell_amp));
  const std::string bell_path = (dir / "bell.json").string();
  save_state_file(bell_path, bell);
  s.check(same_bits(load_state_file(bell_path).rho, bell.rho), "state file round trip bit exact");

  const DensityMatrix mixed =
      make_density(2, 2, 0.25 * ComplexMatrix::Identity(4, 4));
  const std::string mixed_path = (dir / "mixed.json").string();
  save_state_file(mixed_path, mixed);

  const std::string junk_path = (dir / "junk.json").string();
  std::ofstream(junk_path) << "this is not a state\n";

  std::ostringstream out, err;
  s.check(cmd_bound(bell_path, out, err) == kExitDetected, "detected state exits 0");
  s.check(out.str().find("verdict: entangled") != std::string::npos,
          "report carries the verdict line");
  out.str("");
  err.str("");
  s.check(cmd_bound(mixed_path, out, err) == kExitInconclusive, "undetected state exits 1");
  out.str("");
  err.str("");
  s.check(cmd_bound(junk_path, out, err) == kExitInputError, "unparsable file exits 2");
  out.str("");
  err.str("");
  s.check(cmd_bound((dir / "absent.json").string(), out, err) == kExitInputError,
          "missing file exits 2");

  SweepArgs good;
  good.family = "mixed2x2";
  good.x = 0.1;
  good.a_min = 0.0;
  good.a_max = 2.0;
  good.steps = 5;
  good.out_path = (dir / "sweep.csv").string();
  out.str("");
  err.str("");
  s.check(cmd_sweep(good, out, err) == 0, "valid sweep exits 0");
  {
    std::ifstream in(good.out_path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    SweepRequest greq;
    greq.family = SweepFamily::Mixed2x2;
    greq.x = 0.1;
    greq.a_min = 0.0;
    greq.a_max = 2.0;
    greq.steps = 5;
    s.check(buf.str() == csv_text(sweep_rows(greq, ExecMode::Serial)),
            "sweep file matches the in-process serialization");
  }

  const auto sweep_fails = [&](SweepArgs bad, const std::string& what) {
    std::ostringstream o2, e2;
    s.check(cmd_sweep(bad, o2, e2) == kExitInputError && !e2.str().empty(), what);
  };
  {
    SweepArgs bad = good;
    bad.family = "hyper4x4";
    sweep_fails(bad, "unknown family exits 2 with a diagnostic");
  }
  {
    SweepArgs bad = good;
    bad.a_min = 2.0;
    bad.a_max = 2.0;
    sweep_fails(bad, "empty range exits 2 with a diagnostic");
  }
  {
    SweepArgs bad = good;
    bad.x.reset();
    sweep_fails(bad, "missing mixing weight exits 2 with a diagnostic");
  }
  {
    SweepArgs bad = good;
    bad.family = "pure2x2";
    sweep_fails(bad, "mixing weight on a pure family exits 2 with a diagnostic");
  }
  {
    SweepArgs bad = good;
    bad.out_path = (dir / "no_such_dir" / "x.csv").string();
    sweep_fails(bad, "unwritable path exits 2 with a diagnostic");
  }

  fs::remove_all(dir, ec);
  return s.result();
}

}  // namespace

bool SelftestReport::all_passed() const {
  for (const SuiteResult& s : suites) {
    if (!s.ok()) return false;
  }
  return true;
}

int SelftestReport::failed_suites() const {
  int n = 0;
  for (const SuiteResult& s : suites) {
    if (!s.ok()) ++n;
  }
  return n;
}

SelftestReport run_selftest(std::uint64_t seed, int samples, ExecMode mode, std::ostream* log) {
  if (samples < 1) throw std::invalid_argument("run_selftest: samples must be >= 1");

  SelftestReport report;
  report.seed = seed;
  report.samples = samples;

  const auto add = [&](SuiteResult r) {
    if (log) {
      *log << (r.ok() ? "[ ok ]" : "[FAIL]") << ' ' << r.name << ' ' << r.passed << '/'
           << r.total << '\n';
      for (const std::string& note : r.notes) *log << "       " << note << '\n';
      log->flush();
    }
    report.suites.push_back(std::move(r));
  };

  add(suite_basis_orthogonality());
  add(suite_bloch_round_trip(seed, samples, mode));
  add(suite_schmidt_normalization(seed, samples, mode));
  add(suite_pure_norm_identity(seed, samples, mode));
  add(suite_partial_transpose_involution(seed, samples, mode));
  add(suite_constructor_determinism(seed, samples, mode));
  add(suite_isotropic_affinity(seed, samples, mode));
  add(suite_haar_moments(seed, samples));
  add(suite_soundness_separable(seed, samples, mode));
  add(suite_witness_nonnegativity(seed, samples, mode));
  add(suite_constructive_consistency(seed, samples, mode));
  add(suite_oracle_agreement(seed, samples, mode));
  add(suite_lu_invariance(seed, samples, mode));
  add(suite_continuity(seed, samples, mode));
  add(suite_fixed_witness_convexity(seed, samples, mode));
  add(suite_pure_state_agreement(seed, samples, mode));
  add(suite_norm_ordering(seed, samples, mode));
  add(suite_cli_contracts(seed, mode));

  return report;
}

}  // namespace witbound
