// Short tour: one small computation from each module, printed as plain text.
#include <cstdio>
#include <iostream>

#include "conelab/convex/checks.hpp"
#include "conelab/hilbert/hilbert_gap.hpp"
#include "conelab/kretschmer/analytic.hpp"
#include "conelab/kretschmer/discretize.hpp"
#include "conelab/kretschmer/witnesses.hpp"
#include "conelab/lp/simplex.hpp"
#include "conelab/pathology/pathology.hpp"
#include "conelab/socp/socp_gap.hpp"

using namespace conelab;

static Rational q(long a, long b = 1) { return make_rational(a, b); }

int main() {
  std::cout << "-- exact simplex\n";
  lp::FiniteLP p;
  p.direction = lp::Direction::min;
  p.objective = {1, 1};
  p.G = lp::Matrix(2, 2);
  p.G(0, 0) = 1, p.G(0, 1) = 2, p.G(1, 0) = 2, p.G(1, 1) = 1;
  p.rhs = {2, 2};
  p.sense = {lp::RowSense::ge, lp::RowSense::ge};
  p.bounds = {lp::VarBound::nonneg, lp::VarBound::nonneg};
  const auto s = lp::solve(p);
  std::cout << "min x1 + x2 s.t. x1 + 2x2 >= 2, 2x1 + x2 >= 2: " << s.value.describe() << " with multipliers ("
            << format_rational((*s.dual)[0]) << ", " << format_rational((*s.dual)[1]) << ")\n";

  std::cout << "\n-- a sublinear function on c00 that is neither lsc nor usc\n";
  using namespace pathology;
  const auto g3 = oracle(PathologyKind::g3);
  const SparseSeq zero;
  const auto lsc = convex::liminf_along(g3, zero, lsc_witness(zero), 64);
  std::cout << "g3(0) = " << lsc.f_at_base.describe() << ", liminf along " << lsc_witness(zero).label << " = "
            << lsc.estimate.describe() << "\n";

  std::cout << "\n-- rotated second-order cone program\n";
  const socp::SocPoint y{5, 3, 0};
  std::cout << "v(5,3,0) = " << socp::value(y).describe() << ", v**(5,3,0) = " << socp::biconjugate_value(y).describe()
            << ", v(5,3,-1/100) = " << socp::value({5, 3, q(-1, 100)}).describe() << "\n";

  std::cout << "\n-- Hilbert-space program, truncated\n";
  const auto model = hilbert::HilbertModel::dyadic(16);
  hilbert::OddVector b;
  b.set(1, q(1, 2));
  std::cout << "v(e1/2) = " << hilbert::value(model, b).value().describe() << "\n";
  for (const auto& w : hilbert::lsc_failure_witness(model, hilbert::OddVector{}, 16))
    if (w.m % 4 == 0) std::printf("  m=%2zu  ||b_m - 0|| = %.5f  v(b_m) = %.5f\n", w.m, w.distance, w.value);
  std::printf("dual norm lower bound at N=16: %.5f\n", hilbert::dual_norm_lower_bound(model));

  std::cout << "\n-- continuum LP on L2[0,1], alpha = 2\n";
  const auto a = kretschmer::analytic_values(2, kretschmer::TwoSided{0, 0});
  std::cout << "closed form for b = 1: primal " << format_rational(a.valP) << ", dual " << format_rational(a.valD) << "\n";
  for (std::size_t n : {8u, 64u, 512u}) {
    const kretschmer::GridQ one(n, Rational(1));
    std::cout << "  n=" << n << "  exact " << format_rational(kretschmer::primal_value(2, one))
              << "  sampled " << format_rational(kretschmer::primal_value(2, one, kretschmer::Mode::sampled))
              << "  dual " << format_rational(kretschmer::dual_value(2, one)) << "\n";
  }
  for (const auto& r : kretschmer::discontinuity_scenario(2, q(1, 4), {q(3, 4), q(15, 16), q(63, 64)}, 64))
    if (!r.gamma)
      std::printf("  b = indicator of [0, 1/4]: value %s\n", format_rational(r.discrete_valP).c_str());
    else
      std::printf("  plus indicator of [%s, 1], norm %.4f: value %s\n", format_rational(*r.gamma).c_str(),
                  r.perturbation_norm, format_rational(r.discrete_valP).c_str());
  return 0;
}
