// Simulates the asymptotic null of the break-test battery and emits the
// critical-value table as a C++ source file (core/src/critical_values_table.cpp).
//
// The limiting statistic for l breaks on q moment dimensions is
//   sup over admissible partitions of sum_i ||W(l_i) - W(l_{i-1}) - dl_i W(1)||^2 / dl_i
// divided by l*q, with W a q-dimensional standard Brownian motion and every
// segment at least `trim` long.  On an n-point grid with iid N(0, I_q)
// increments this is the exact finite-sample ANOVA between-group statistic,
// maximized by the same dynamic program the estimator uses.
//
// Two passes:
//   pass 1 (coarse grid, full DP): supF(l>=2), UDmax, WDmax
//   pass 2 (fine grid, single split): supF(1) and the sequential family,
//     whose critical values are quantiles of the one-break distribution at
//     (1-alpha)^(1/(null+1)).
//
// Usage: gen_critical_values [out.cpp] [reps1] [n1] [reps2] [n2]

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include "regimefactor/parallel.hpp"
#include "regimefactor/rng.hpp"

namespace {

constexpr int kNuMax = 6;
const double kTrims[4] = {0.05, 0.10, 0.15, 0.25};
const int kMaxBreaks[4] = {8, 8, 5, 3};
const double kAlphas[3] = {0.10, 0.05, 0.01};
constexpr std::uint64_t kSeed = 0x5eedcaf3ull;

double quantile(std::vector<double>& v, double p) {
  std::sort(v.begin(), v.end());
  const double h = (static_cast<double>(v.size()) - 1.0) * p;
  const size_t lo = static_cast<size_t>(std::floor(h));
  const size_t hi = std::min(lo + 1, v.size() - 1);
  return v[lo] + (h - lo) * (v[hi] - v[lo]);
}

// between-group deviation of segment [a, b] (0-based, inclusive):
//   ||S_{b+1} - S_a - (len/n) S_n||^2 / len
struct PrefixPath {
  int n;
  int q;
  std::vector<double> S; // (n+1) x q prefix sums, row-major

  double seg(int a, int b) const {
    const int len = b - a + 1;
    const double w = static_cast<double>(len) / n;
    double acc = 0.0;
    const double* sb = &S[static_cast<size_t>(b + 1) * q];
    const double* sa = &S[static_cast<size_t>(a) * q];
    const double* sn = &S[static_cast<size_t>(n) * q];
    for (int d = 0; d < q; ++d) {
      const double v = sb[d] - sa[d] - w * sn[d];
      acc += v * v;
    }
    return acc / len;
  }
};

PrefixPath draw_path(regimefactor::Rng& rng, int n, int q) {
  PrefixPath p;
  p.n = n;
  p.q = q;
  p.S.assign(static_cast<size_t>(n + 1) * q, 0.0);
  for (int i = 1; i <= n; ++i)
    for (int d = 0; d < q; ++d)
      p.S[static_cast<size_t>(i) * q + d] =
          p.S[static_cast<size_t>(i - 1) * q + d] + rng.normal();
  return p;
}

// max over admissible partitions with l breaks of the summed segment
// deviations, for all l = 1..lmax at min length h, via DP on suffixes
std::vector<double> dp_between(const PrefixPath& p, int h, int lmax,
                               const std::vector<double>& segcache) {
  const int n = p.n;
  const double NEG = -std::numeric_limits<double>::infinity();
  auto seg = [&](int a, int b) { return segcache[static_cast<size_t>(a) * n + b]; };

  std::vector<std::vector<double>> best(lmax + 1, std::vector<double>(n + 1, NEG));
  for (int a = 0; a + h <= n; ++a) best[0][a] = seg(a, n - 1);
  std::vector<double> out(lmax + 1, NEG);
  for (int k = 1; k <= lmax; ++k) {
    for (int a = 0; a + (k + 1) * h <= n; ++a) {
      double bv = NEG;
      const int emax = n - 1 - k * h;
      for (int e = a + h - 1; e <= emax; ++e) {
        const double v = seg(a, e) + best[k - 1][e + 1];
        if (v > bv) bv = v;
      }
      best[k][a] = bv;
    }
    out[k] = best[k][0];
  }
  return out;
}

} // namespace

int main(int argc, char** argv) {
  std::string out_path = argc > 1 ? argv[1] : "critical_values_table.cpp";
  const int reps1 = argc > 2 ? std::atoi(argv[2]) : 15000;
  const int n1 = argc > 3 ? std::atoi(argv[3]) : 600;
  const int reps2 = argc > 4 ? std::atoi(argv[4]) : 120000;
  const int n2 = argc > 5 ? std::atoi(argv[5]) : 2400;

  for (int ti = 0; ti < 4; ++ti) {
    if (std::fabs(kTrims[ti] * n1 - std::round(kTrims[ti] * n1)) > 1e-9 ||
        std::fabs(kTrims[ti] * n2 - std::round(kTrims[ti] * n2)) > 1e-9) {
      std::fprintf(stderr, "grid sizes must make trim*n integral\n");
      return 1;
    }
  }

  double supf[4][kNuMax][3][8];
  double ud[4][kNuMax][3];
  double wd[4][kNuMax][3];
  double seqv[4][kNuMax][3][8];
  const double NaN = std::numeric_limits<double>::quiet_NaN();
  for (int t = 0; t < 4; ++t)
    for (int v = 0; v < kNuMax; ++v)
      for (int a = 0; a < 3; ++a) {
        ud[t][v][a] = wd[t][v][a] = NaN;
        for (int l = 0; l < 8; ++l) supf[t][v][a][l] = seqv[t][v][a][l] = NaN;
      }

  for (int q = 1; q <= kNuMax; ++q) {
    // ---- pass 1: full DP on the coarse grid
    // per-rep supF(l) samples per trim, plus per-trim UDmax samples
    std::vector<std::vector<std::vector<double>>> s1(
        4, std::vector<std::vector<double>>(9));
    for (int ti = 0; ti < 4; ++ti)
      for (int l = 1; l <= kMaxBreaks[ti]; ++l) s1[ti][l].resize(reps1);

    const int hmin = static_cast<int>(std::lround(kTrims[0] * n1));
    std::vector<std::vector<double>> seg_buffers(regimefactor::thread_count());

    regimefactor::parallel_for(static_cast<size_t>(reps1), [&](size_t rep) {
      regimefactor::Rng rng(regimefactor::Rng::derive(kSeed, q * 1000000ull + rep));
      const PrefixPath p = draw_path(rng, n1, q);
      // cache segment deviations for all spans >= the smallest trim
      std::vector<double> cache(static_cast<size_t>(n1) * n1,
                                -std::numeric_limits<double>::infinity());
      for (int a = 0; a < n1; ++a)
        for (int b = a + hmin - 1; b < n1; ++b)
          cache[static_cast<size_t>(a) * n1 + b] = p.seg(a, b);
      for (int ti = 0; ti < 4; ++ti) {
        const int h = static_cast<int>(std::lround(kTrims[ti] * n1));
        const auto between = dp_between(p, h, kMaxBreaks[ti], cache);
        for (int l = 1; l <= kMaxBreaks[ti]; ++l)
          s1[ti][l][rep] = between[l] / (static_cast<double>(l) * q);
      }
    });

    for (int ti = 0; ti < 4; ++ti) {
      for (int ai = 0; ai < 3; ++ai)
        for (int l = 2; l <= kMaxBreaks[ti]; ++l) {
          std::vector<double> v = s1[ti][l];
          supf[ti][q - 1][ai][l - 1] = quantile(v, 1.0 - kAlphas[ai]);
        }
    }

    // ---- pass 2: one break on the fine grid -> supF(1) + sequential family
    std::vector<std::vector<double>> s2(4, std::vector<double>(reps2));
    regimefactor::parallel_for(static_cast<size_t>(reps2), [&](size_t rep) {
      regimefactor::Rng rng(
          regimefactor::Rng::derive(kSeed ^ 0xabcdef12345ull, q * 10000000ull + rep));
      const PrefixPath p = draw_path(rng, n2, q);
      for (int ti = 0; ti < 4; ++ti) {
        const int h = static_cast<int>(std::lround(kTrims[ti] * n2));
        double best = -1.0;
        for (int e = h - 1; e + h <= n2 - 1; ++e) {
          const double v = p.seg(0, e) + p.seg(e + 1, n2 - 1);
          if (v > best) best = v;
        }
        s2[ti][rep] = best; // raw between deviation, one break
      }
    });

    for (int ti = 0; ti < 4; ++ti) {
      std::vector<double> sorted = s2[ti];
      std::sort(sorted.begin(), sorted.end());
      auto qtl = [&](double pr) {
        const double hh = (static_cast<double>(sorted.size()) - 1.0) * pr;
        const size_t lo = static_cast<size_t>(std::floor(hh));
        const size_t hi = std::min(lo + 1, sorted.size() - 1);
        return sorted[lo] + (hh - lo) * (sorted[hi] - sorted[lo]);
      };
      for (int ai = 0; ai < 3; ++ai) {
        supf[ti][q - 1][ai][0] = qtl(1.0 - kAlphas[ai]) / q; // supF(1) = between/q
        for (int k = 0; k < 8; ++k)
          seqv[ti][q - 1][ai][k] =
              qtl(std::pow(1.0 - kAlphas[ai], 1.0 / (k + 1)));
      }
    }

    // ---- double-maximum statistics from the pass-1 samples (replacing the
    // l=1 coordinate with its own coarse-grid draw keeps the max internally
    // consistent within each replication)
    for (int ti = 0; ti < 4; ++ti) {
      for (int ai = 0; ai < 3; ++ai) {
        std::vector<double> udv(reps1), wdv(reps1);
        for (int rep = 0; rep < reps1; ++rep) {
          double u = -1.0, wmx = -1.0;
          for (int l = 1; l <= kMaxBreaks[ti]; ++l) {
            const double s = s1[ti][l][rep];
            u = std::max(u, s);
            // weights from the tabulated supF quantiles at this alpha
            const double c1 = supf[ti][q - 1][ai][0];
            const double cl = supf[ti][q - 1][ai][l - 1];
            wmx = std::max(wmx, c1 / cl * s);
          }
          udv[rep] = u;
          wdv[rep] = wmx;
        }
        ud[ti][q - 1][ai] = quantile(udv, 1.0 - kAlphas[ai]);
        wd[ti][q - 1][ai] = quantile(wdv, 1.0 - kAlphas[ai]);
      }
    }
    std::fprintf(stderr, "q=%d done: supF(1) 5%% @trim.05 = %.3f, UDmax 5%% = %.3f\n",
                 q, supf[0][q - 1][1][0], ud[0][q - 1][1]);
  }

  std::ofstream f(out_path);
  if (!f) {
    std::fprintf(stderr, "cannot write %s\n", out_path.c_str());
    return 1;
  }
  f << "// Generated by tools/gen_critical_values (reps1=" << reps1 << " n1=" << n1
    << " reps2=" << reps2 << " n2=" << n2 << " seed=0x" << std::hex << kSeed
    << std::dec << ").\n"
    << "// Do not edit by hand; rerun the generator to refresh.\n"
    << "#include \"critical_values_raw.hpp\"\n\n"
    << "#include <limits>\n\n"
    << "namespace regimefactor {\n\n"
    << "namespace { constexpr double xx = std::numeric_limits<double>::quiet_NaN(); }\n\n"
    << "const CriticalValueTable::Raw kBuiltinCriticalValues = {\n";
  char buf[64];
  auto emit = [&](double v) {
    if (std::isnan(v)) return std::string("xx");
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return std::string(buf);
  };
  f << "  // supf[trim][nu][alpha][l]\n  {\n";
  for (int ti = 0; ti < 4; ++ti) {
    f << "    {";
    for (int v = 0; v < kNuMax; ++v) {
      f << "{";
      for (int ai = 0; ai < 3; ++ai) {
        f << "{";
        for (int l = 0; l < 8; ++l) f << emit(supf[ti][v][ai][l]) << (l < 7 ? "," : "");
        f << "}" << (ai < 2 ? "," : "");
      }
      f << "}" << (v < kNuMax - 1 ? ",\n     " : "");
    }
    f << "}" << (ti < 3 ? "," : "") << "\n";
  }
  f << "  },\n  // ud[trim][nu][alpha]\n  {\n";
  for (int ti = 0; ti < 4; ++ti) {
    f << "    {";
    for (int v = 0; v < kNuMax; ++v) {
      f << "{";
      for (int ai = 0; ai < 3; ++ai) f << emit(ud[ti][v][ai]) << (ai < 2 ? "," : "");
      f << "}" << (v < kNuMax - 1 ? "," : "");
    }
    f << "}" << (ti < 3 ? "," : "") << "\n";
  }
  f << "  },\n  // wd[trim][nu][alpha]\n  {\n";
  for (int ti = 0; ti < 4; ++ti) {
    f << "    {";
    for (int v = 0; v < kNuMax; ++v) {
      f << "{";
      for (int ai = 0; ai < 3; ++ai) f << emit(wd[ti][v][ai]) << (ai < 2 ? "," : "");
      f << "}" << (v < kNuMax - 1 ? "," : "");
    }
    f << "}" << (ti < 3 ? "," : "") << "\n";
  }
  f << "  },\n  // seq[trim][nu][alpha][null]\n  {\n";
  for (int ti = 0; ti < 4; ++ti) {
    f << "    {";
    for (int v = 0; v < kNuMax; ++v) {
      f << "{";
      for (int ai = 0; ai < 3; ++ai) {
        f << "{";
        for (int k = 0; k < 8; ++k) f << emit(seqv[ti][v][ai][k]) << (k < 7 ? "," : "");
        f << "}" << (ai < 2 ? "," : "");
      }
      f << "}" << (v < kNuMax - 1 ? ",\n     " : "");
    }
    f << "}" << (ti < 3 ? "," : "") << "\n";
  }
  f << "  }\n};\n\n} // namespace regimefactor\n";
  std::fprintf(stderr, "wrote %s\n", out_path.c_str());
  return 0;
}
