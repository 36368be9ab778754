// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "cwb/groupring/checks.hpp"
#include "cwb/groupring/magnus.hpp"
#include "cwb/iterated/checks.hpp"
#include "cwb/lattice/cohomology.hpp"
#include "cwb/report/config.hpp"

using namespace cwb;
using curve::CMatrix;
using curve::CVector;
using curve::PeriodData;
using curve::SheetPoint;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

struct CurveData {
  std::string label;
  curve::CurvePtr c;
  PeriodData pd;
  PeriodData refined;
  SheetPoint p, q, b;
};

int failures = 0;

void criterion(int n, const std::string& name, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail << " [exception: " << e.what() << "]";
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (s > limit_s) {
    o.ok = false;
    o.detail << " [time " << s << " s over limit " << limit_s << " s]";
  }
  if (!o.ok) ++failures;
  std::printf("%s criterion %d (%s): %.2f s;%s\n", o.ok ? "PASS" : "FAIL", n, name.c_str(), s, o.detail.str().c_str());
  std::fflush(stdout);
}

std::string sci(long double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2Le", x);
  return buf;
}

curve::QuadratureOptions default_q() { return {1e-13L, 61, 20}; }
curve::QuadratureOptions doubled_q() { return {1e-16L, 31, 25}; }

}  // namespace

int main() {
  const report::RunConfig config = report::default_config();

  criterion(1, "lattice suite, g=2..5", 10, [](Outcome& o) {
    for (int g = 2; g <= 5; ++g) {
      o.require(lattice::verify_phi_v0(Genus(g)).passed(), "phi(v0') g=" + std::to_string(g));
      o.require(lattice::index_and_primitivity(Genus(g)).passed(), "SNF/primitivity g=" + std::to_string(g));
      o.require(lattice::verify_theta(Genus(g), 20240601).passed(), "theta g=" + std::to_string(g));
    }
    const auto t = lattice::theta_map(Genus(2));
    for (unsigned bits = 0; bits < 16; ++bits) {
      lattice::F2Vector v(4);
      for (int i = 0; i < 4; ++i) v[i] = (bits >> i) & 1;
      o.require(t.apply(lattice::square_class(Genus(2), v)) == v, "theta(v(x)v)=v");
    }
    o.detail << " phi(v0'), SNF (1..1,2), primitivity, theta exhaustive at g=2";
  });

  criterion(2, "group-ring suite, g=1..4", 30, [](Outcome& o) {
    for (int g = 1; g <= 4; ++g) {
      const Genus G(g);
      o.require(groupring::verify_modJ4(G).passed(), "modJ4 g=" + std::to_string(g));
      o.require(groupring::verify_lhs_lemma(G).passed(), "LHS lemma g=" + std::to_string(g));
      o.require(groupring::lhs_lemma_remainder(G).is_zero(), "LHS remainder g=" + std::to_string(g));
      o.require(groupring::verify_dbdq_vanish(G).passed(), "dbdq g=" + std::to_string(g));
      o.require(groupring::dbdq_pairing(G, true).is_zero(), "dbdq remainder g=" + std::to_string(g));
      const groupring::SurfaceAlphabet a{G};
      const auto meridians = groupring::concat(groupring::generator(a.d_b()), groupring::generator(a.d_q()));
      const auto db = groupring::NCSeries::symbol(a.d_b(), 3), dq = groupring::NCSeries::symbol(a.d_q(), 3);
      o.require(groupring::magnus_expand(meridians, 3) - groupring::NCSeries::one(3) == db + dq + db * dq,
                "Magnus(delta_b delta_q') g=" + std::to_string(g));
      if (g >= 2) {
        o.require(groupring::verify_collino(G).passed(), "Collino g=" + std::to_string(g));
        o.require(groupring::collino_coefficient(G) == g - 1, "Collino coefficient g=" + std::to_string(g));
      }
      if (g <= 2) {
        const auto r = groupring::j2j3_rank(G);
        o.require(r.rank == static_cast<std::size_t>(g * (2 * g + 1) + 1), "J2/J3 rank g=" + std::to_string(g));
        o.detail << " rank(J2/J3, g=" << g << ")=" << r.rank;
      }
    }
  });

  std::vector<CurveData> curves;
  criterion(3, "period suite", 120.0 * static_cast<double>(config.curves.size()), [&](Outcome& o) {
    for (const auto& cc : config.curves) {
      auto c = curve::Curve::build(cc.polynomial);
      const auto basis = curve::HomologyBasis::build(c);
      curves.push_back({cc.label, c, curve::compute_periods(basis, default_q()), curve::compute_periods(basis, doubled_q()),
                        report::resolve_point(*c, cc.p, "p"), report::resolve_point(*c, cc.q, "q"),
                        report::resolve_point(*c, cc.b, "b")});
    }
    for (const auto& cd : curves) {
      const auto& pd = cd.pd;
      const int g = pd.genus();
      const auto sym = curve::max_abs(pd.Z - pd.Z.transpose());
      const auto im = curve::min_eigenvalue_im(pd.Z);
      const auto dual = curve::max_abs(curve::dual_basis_periods(pd) - CMatrix::Identity(2 * g, 2 * g));
      const auto v0 = curve::v0_decomposition_defect(pd);
      const auto conv = std::max(curve::max_abs(pd.Z - cd.refined.Z), curve::max_abs(pd.raw - cd.refined.raw));
      o.require(sym < 1e-8L, cd.label + " symmetry");
      o.require(im > 0, cd.label + " Im Z");
      o.require(dual < 1e-8L, cd.label + " dual basis");
      o.require(v0 < 1e-8L, cd.label + " v0-decomp");
      o.require(conv < 1e-9L, cd.label + " self-convergence");
      o.detail << " " << cd.label << ": sym " << sci(sym) << ", min eig Im Z " << sci(im) << ", dual " << sci(dual)
               << ", v0 " << sci(v0) << ", conv " << sci(conv);
    }
  });

  criterion(4, "Abel-Jacobi suite", 60, [&](Outcome& o) {
    if (curves.empty()) throw std::runtime_error("no period data");
    for (const auto& cd : curves) {
      const auto& pd = cd.pd;
      const auto& c = *cd.c;
      std::mt19937_64 rng(config.seed);
      long double principal = 0;
      for (int trial = 0; trial < 20; ++trial) {
        const SheetPoint a = curve::random_point(c, rng), b = curve::random_point(c, rng), base = curve::random_point(c, rng);
        // div((x - x(a)) / (x - x(b))) = a + iota a - b - iota b
        const curve::Divisor d{{a, 1}, {curve::involution_conjugate(a), 1}, {b, -1}, {curve::involution_conjugate(b), -1}};
        principal = std::max(principal, curve::abel_jacobi(pd, d, base).reduction.residual);
      }
      const SheetPoint t1 = curve::default_auxiliary_point(c), t2 = curve::random_point(c, rng);
      const CVector k1 = curve::riemann_constant_twice(pd, cd.p, t1).v, k2 = curve::riemann_constant_twice(pd, cd.p, t2).v;
      const auto tind = curve::make_jacobian_point(k1 - k2, pd).reduction.residual;
      const SheetPoint pp = curve::involution_conjugate(cd.p), qq = curve::involution_conjugate(cd.q);
      const CVector lhs = curve::abel_jacobi(pd, {{pp, 1}, {qq, 1}, {cd.p, -1}, {cd.q, -1}}, cd.p).v;
      const CVector rhs = cplx(2) * curve::abel_jacobi_integral(pd, cd.p, qq);
      const auto pq = curve::make_jacobian_point(lhs - rhs, pd).reduction.residual;
      o.require(principal < 1e-6L, cd.label + " principal divisors");
      o.require(tind < 1e-6L, cd.label + " t-independence");
      o.require(pq < 1e-6L, cd.label + " p'+q'-p-q");
      o.detail << " " << cd.label << ": principal " << sci(principal) << ", t-indep " << sci(tind) << ", pq " << sci(pq);
    }
  });

  criterion(5, "iterated-integral suite", 600, [&](Outcome& o) {
    if (curves.empty()) throw std::runtime_error("no period data");
    for (const auto& cd : curves) {
      const auto& pd = cd.pd;
      const int n = 2 * pd.genus();
      const auto x = iterated::dual_basis_forms(pd);

      long double shuffle = 0;
      for (int l = 0; l < n; ++l) {
        const auto s = iterated::path_signature(pd, pd.basis.cycle(l), x, 2).value;
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) shuffle = std::max(shuffle, std::abs(s.at(i, j) + s.at(j, i) - s.at(i) * s.at(j)));
      }

      long double composition = 0;
      std::mt19937_64 rng(config.seed + 5);
      for (int trial = 0; trial < 20; ++trial) {
        const auto loop = pd.basis.cycle(static_cast<int>(rng() % static_cast<unsigned>(n)));
        std::uniform_real_distribution<long double> u(0.05L, static_cast<long double>(loop.segments().size()) - 0.05L);
        const auto [a, b] = loop.split(u(rng));
        const auto sa = iterated::path_signature(pd, a, x, 2).value;
        const auto sb = iterated::path_signature(pd, b, x, 2).value;
        const auto sab = iterated::path_signature(pd, loop, x, 2).value;
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            composition = std::max(composition, std::abs(sab.at(i, j) - (sa.at(i, j) + sa.at(i) * sb.at(j) + sb.at(i, j))));
      }

      const auto T = iterated::psi1_tensor(pd);
      long double psi = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k)
            psi = std::max(psi, std::abs(T[(i * n + j) * n + k] - cplx(i == k && j == k ? 1 : 0)));

      o.require(shuffle < 1e-8L, cd.label + " shuffle");
      o.require(composition < 1e-8L, cd.label + " composition");
      o.require(psi < 1e-7L, cd.label + " psi1");
      o.detail << " " << cd.label << ": shuffle " << sci(shuffle) << ", composition " << sci(composition) << ", psi1 "
               << sci(psi);
    }
  });

  criterion(6, "Kaenders relation and main arithmetic", 1800, [&](Outcome& o) {
    if (curves.empty()) throw std::runtime_error("no period data");
    for (const auto& cd : curves) {
      const auto& pd = cd.pd;
      const auto& c = *cd.c;
      const auto k = iterated::kaenders(pd, cd.p, curve::default_auxiliary_point(c));
      o.require(k.difference.residual < 1e-5L, cd.label + " Kaenders");
      o.detail << " " << cd.label << ": Kaenders " << sci(k.difference.residual);
    }
    for (const auto& cd : curves) {
      const auto& c = *cd.c;
      std::mt19937_64 rng(config.seed + 6);
      long double worst = 0;
      for (int trial = 0; trial < 5; ++trial) {
        const SheetPoint p = curve::random_point(c, rng), q = curve::random_point(c, rng), b = curve::random_point(c, rng);
        const SheetPoint t1 = curve::random_point(c, rng), t2 = curve::random_point(c, rng);
        const auto r = iterated::main_theorem_arithmetic(cd.pd, p, q, b, t1, t2);
        worst = std::max({worst, r.residual, r.fibre_residual});
      }
      o.require(worst < 1e-6L, cd.label + " main arithmetic");
      o.detail << "; " << cd.label << " main arithmetic, 5 random triples: " << sci(worst);
    }
  });

  criterion(7, "residue arithmetic", 60, [&](Outcome& o) {
    if (curves.empty()) throw std::runtime_error("no period data");
    for (const auto& cd : curves) {
      const int g = cd.pd.genus();
      const auto tr = curve::exact_trace_identity(cd.pd);
      o.require(tr.exact(), cd.label + " trace identity");
      o.require(groupring::verify_collino(Genus(g)).passed(), cd.label + " Collino");
      const auto r = iterated::residue_check(cd.pd, cd.label);
      o.require(r.passed(), cd.label + " residues");
      const long long res_b = std::stoll(r.witness["res_b_times_2pii"].get<std::string>());
      const long long res_q = std::stoll(r.witness["res_qprime_times_2pii"].get<std::string>());
      o.require(res_b == (g - 1) * res_q, cd.label + " Res_b = (g-1) Res_q'");
      o.detail << " " << cd.label << ": sum a_jk X_jk = " << tr.value.str() << ", res_sum = "
               << r.witness["res_sum_times_2pii"].get<std::string>() << ", Res_b = "
               << r.witness["res_b_times_2pii"].get<std::string>() << ", Res_q' = "
               << r.witness["res_qprime_times_2pii"].get<std::string>() << " (times 2 pi i)";
    }
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
