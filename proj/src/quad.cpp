#include "hh/quad.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

namespace hh {

namespace {

// 15-point Kronrod rule with embedded 7-point Gauss rule on [-1,1]
// (the classic QUADPACK dqk15 node/weight set).
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

void validate(const Tolerance& tol) {
  if (!(tol.rel > 0.0 && tol.rel < 1.0))
    throw InputError("tolerance: rel must be in (0,1)");
  if (!(tol.abs > 0.0)) throw InputError("tolerance: abs must be positive");
  if (tol.max_subdiv < 1)
    throw InputError("tolerance: max_subdiv must be at least 1");
}

struct RuleEval {
  double value = 0.0;
  double err = 0.0;
  bool finite = true;   // false: some node produced +-inf
  double bad_at = 0.0;  // abscissa of the first non-finite value
};

// One Kronrod pass over [a,b]. NaN raises EvalError immediately; +-inf is
// reported through `finite` so the refinement loop can decide (an overflow
// deep in a refinement is how divergence shows up and must not throw).
RuleEval gk15(const std::function<double(double)>& f, double a, double b,
              std::int64_t& evals) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double fv1[7], fv2[7];
  RuleEval out;

  const auto probe = [&](double x) {
    ++evals;
    const double v = f(x);
    if (std::isnan(v)) throw EvalError("integrand returned NaN", x);
    if (std::isinf(v) && out.finite) {
      out.finite = false;
      out.bad_at = x;
    }
    return v;
  };

  const double fc = probe(c);
  double resg = kWg[3] * fc;
  double resk = kWgk[7] * fc;
  double resabs = kWgk[7] * std::abs(fc);
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    fv1[j] = probe(c - dx);
    fv2[j] = probe(c + dx);
    const double fsum = fv1[j] + fv2[j];
    resk += kWgk[j] * fsum;
    resabs += kWgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
    if (j % 2 == 1) resg += kWg[j / 2] * fsum;
  }
  if (!out.finite) return out;

  const double reskh = resk * 0.5;
  double resasc = kWgk[7] * std::abs(fc - reskh);
  for (int j = 0; j < 7; ++j)
    resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));

  out.value = resk * h;
  resabs *= std::abs(h);
  resasc *= std::abs(h);
  double err = std::abs((resk - resg) * h);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  const double eps50 = 50.0 * std::numeric_limits<double>::epsilon();
  if (resabs > std::numeric_limits<double>::min() / eps50)
    err = std::max(eps50 * resabs, err);
  out.err = err;
  return out;
}

struct Segment {
  double a = 0.0, b = 0.0;
  double value = 0.0, err = 0.0;
  int fn = 0;  // index into the integrand list
  bool splittable = true;
};

// Partial sums over the dyadic chain [0, 2^-k] of one piece. B[k] estimates
// the piece integral after the k-th halving of the leftmost segment.
struct ChainState {
  double shell_sum = 0.0;
  std::vector<double> B;
  bool done = false;
};

// Iterated Aitken extrapolation of the chain sums. For an endpoint
// singularity u^(-alpha) the remainder of B is geometric with ratio
// 2^-(1-alpha), which bisection alone cannot push below tolerance once alpha
// is near 1; acceleration removes it. Divergent chains have non-contracting
// differences and are refused, so they still end frozen and unconverged.
bool aitken_limit(const std::vector<double>& B, double accept, double& limit,
                  double& spread) {
  const std::size_t n = B.size();
  if (n < 5) return false;
  const double eps = std::numeric_limits<double>::epsilon();
  if (std::abs(B[n - 1] - B[n - 2]) <=
      8.0 * eps * std::max(std::abs(B[n - 1]), 1e-300)) {
    limit = B[n - 1];
    spread = std::abs(B[n - 1] - B[n - 2]);
    return true;
  }
  for (std::size_t i = n - 3; i < n - 1; ++i) {
    const double d0 = B[i] - B[i - 1];
    const double d1 = B[i + 1] - B[i];
    if (!(std::abs(d1) <= 0.999 * std::abs(d0))) return false;
  }
  std::vector<double> cur(B.begin() + (n > 12 ? n - 12 : 0), B.end());
  for (int pass = 0; pass < 3 && cur.size() >= 3; ++pass) {
    std::vector<double> nxt;
    for (std::size_t i = 0; i + 2 < cur.size(); ++i) {
      const double d1 = cur[i + 1] - cur[i];
      const double d2 = cur[i + 2] - cur[i + 1];
      const double den = d2 - d1;
      if (std::abs(den) <= 16.0 * eps * std::abs(cur[i + 2]))
        nxt.push_back(cur[i + 2]);
      else
        nxt.push_back(cur[i + 2] - d2 * d2 / den);
    }
    cur = std::move(nxt);
  }
  if (cur.size() < 2) return false;
  limit = cur.back();
  spread = std::abs(cur.back() - cur[cur.size() - 2]);
  return std::isfinite(limit) && spread <= accept;
}

// Globally adaptive refinement over seed segments, worst error first.
// A segment is frozen (kept with its current estimate and error) when its
// refinement overflows or its width hits the floating-point floor; frozen
// error keeps the total honest, so true divergence ends converged == false.
QuadResult refine(const std::vector<std::function<double(double)>>& fns,
                  std::vector<Segment> segs, const Tolerance& tol) {
  QuadResult out;
  std::int64_t evals = 0;

  for (auto& s : segs) {
    const RuleEval e = gk15(fns[s.fn], s.a, s.b, evals);
    if (!e.finite) throw EvalError("integrand is not finite", e.bad_at);
    s.value = e.value;
    s.err = e.err;
  }

  const auto totals = [&segs](double& v, double& e) {
    v = 0.0;
    e = 0.0;
    for (const auto& s : segs) {
      v += s.value;
      e += s.err;
    }
  };

  std::vector<ChainState> chains(fns.size());
  int splits = 0;
  double total = 0.0, toterr = 0.0;
  while (true) {
    totals(total, toterr);
    if (toterr <= std::max(tol.rel * std::abs(total), tol.abs)) {
      out.converged = true;
      break;
    }
    if (splits >= tol.max_subdiv) break;

    std::size_t worst = segs.size();
    double werr = -1.0;
    for (std::size_t i = 0; i < segs.size(); ++i)
      if (segs[i].splittable && segs[i].err > werr) {
        werr = segs[i].err;
        worst = i;
      }
    if (worst == segs.size()) break;  // everything frozen

    Segment& s = segs[worst];
    const double mid = 0.5 * (s.a + s.b);
    // Width floor: below ~1e-280 the tail transform 1/u would overflow and
    // 0*inf noise would masquerade as NaN. Freezing keeps the segment's error
    // in the total, so unresolvable singularities still end converged=false.
    if (!(mid > s.a && mid < s.b) || (s.b - s.a) < 1e-280) {
      s.splittable = false;
      continue;
    }
    const RuleEval l = gk15(fns[s.fn], s.a, mid, evals);
    const RuleEval r = l.finite ? gk15(fns[s.fn], mid, s.b, evals) : RuleEval{};
    if (!l.finite || !r.finite) {
      s.splittable = false;
      continue;
    }
    Segment right{mid, s.b, r.value, r.err, s.fn, true};
    s.b = mid;
    s.value = l.value;
    s.err = l.err;
    if (s.a == 0.0 && !chains[s.fn].done) {
      ChainState& c = chains[s.fn];
      c.shell_sum += r.value;
      c.B.push_back(c.shell_sum + l.value);
      double limit = 0.0, spread = 0.0;
      const double accept = 0.25 * std::max(tol.rel * std::abs(total), tol.abs);
      if (aitken_limit(c.B, accept, limit, spread)) {
        s.value = limit - c.shell_sum;
        s.err = std::max(spread, 50.0 * std::numeric_limits<double>::epsilon() *
                                     std::abs(limit));
        s.splittable = false;
        c.done = true;
      }
    }
    segs.push_back(right);
    ++splits;
  }

  totals(total, toterr);
  out.value = total;
  out.err_estimate = toterr;
  out.evaluations = evals;
  return out;
}

QuadResult half_line_impl(const std::function<double(double)>& f,
                          const Tolerance& tol) {
  // Split at 1; map the tail onto (0,1] via s -> 1/s. Both pieces then have
  // their only possible singularity at the left endpoint, which the rule
  // never evaluates.
  std::vector<std::function<double(double)>> fns;
  fns.push_back(f);
  fns.push_back([&f](double u) {
    const double inv = 1.0 / u;
    return f(inv) * inv * inv;
  });
  std::vector<Segment> segs(2);
  segs[0] = {0.0, 1.0, 0.0, 0.0, 0, true};
  segs[1] = {0.0, 1.0, 0.0, 0.0, 1, true};
  return refine(fns, std::move(segs), tol);
}

// Thrown internally when an inner integral fails to converge, so the outer
// refinement does not burn its full budget on meaningless values.
struct InnerDivergence {};

QuadResult nested_impl(const std::function<double(double, double)>& f,
                       const std::function<double(double, double)>& post,
                       double inner_sensitivity, const Tolerance& tol,
                       bool allow_shortcut) {
  std::int64_t inner_evals = 0;
  // Inner runs must converge in the relative sense: the outer tail transform
  // multiplies inner values by r^2, so a fixed absolute floor would be
  // amplified into the outer integrand unnoticed. The tiny floor only guards
  // against integrals whose value underflows. Inners also run two digits
  // tighter than the outer, or the outer refinement stalls chasing structure
  // below the inner noise floor.
  Tolerance inner_tol = tol;
  inner_tol.rel = tol.rel * 0.01;
  inner_tol.abs = 1e-300;
  bool inner_all_conv = true;
  // Inner error propagates two ways: relative error of relatively-converged
  // inners multiplies the outer value; absolute-floor inners (value near 0,
  // error pinned at tol.abs) contribute their absolute error directly. The
  // split avoids blowing up the bound when an inner integral is legitimately
  // tiny.
  double inner_relmax = 0.0, inner_absmax = 0.0;

  const auto outer = [&](double r) {
    const QuadResult q =
        integrate_half_line([&f, r](double s) { return f(r, s); }, inner_tol);
    inner_evals += q.evaluations;
    if (!q.converged) {
      // A width-floor stall at extreme r can miss the requested relative
      // target while still carrying several correct digits; its true error
      // is accounted below through the absolute bucket. Only an estimate
      // with no significant digits left signals divergence.
      const bool salvageable = std::isfinite(q.value) &&
                               q.err_estimate <= 1e-6 * std::abs(q.value);
      if (!salvageable) {
        inner_all_conv = false;
        if (allow_shortcut) throw InnerDivergence{};
      }
    }
    if (q.value != 0.0 &&
        q.err_estimate <= tol.rel * std::abs(q.value) * (1.0 + 1e-9))
      inner_relmax = std::max(inner_relmax, q.err_estimate / std::abs(q.value));
    else
      inner_absmax = std::max(inner_absmax, q.err_estimate);
    return post(r, q.value);
  };

  QuadResult out = half_line_impl(outer, tol);
  out.evaluations = inner_evals;
  out.err_estimate += inner_sensitivity *
                      (inner_relmax * std::abs(out.value) + inner_absmax);
  out.converged = out.converged && inner_all_conv &&
                  out.err_estimate <=
                      std::max(tol.rel * std::abs(out.value), tol.abs) * 10.0;
  return out;
}

}  // namespace

QuadResult integrate_half_line(const std::function<double(double)>& f,
                               const Tolerance& tol) {
  if (!f) throw InputError("integrate_half_line: missing integrand");
  validate(tol);
  return half_line_impl(f, tol);
}

QuadResult integrate_half_line_nested(
    const std::function<double(double, double)>& f,
    const std::function<double(double, double)>& post, double inner_sensitivity,
    const Tolerance& tol) {
  if (!f || !post) throw InputError("nested integration: missing function");
  validate(tol);
  try {
    return nested_impl(f, post, inner_sensitivity, tol, true);
  } catch (const InnerDivergence&) {
    // A divergent inner integral was hit. Redo a bounded coarse pass just to
    // report a representative partial value; the result is not converged.
    Tolerance coarse = tol;
    coarse.max_subdiv = 32;
    QuadResult out = nested_impl(f, post, inner_sensitivity, coarse, false);
    out.converged = false;
    out.err_estimate = std::max(out.err_estimate, std::abs(out.value));
    return out;
  }
}

QuadResult integrate_half_plane(const std::function<double(double, double)>& f,
                                const Tolerance& tol) {
  if (!f) throw InputError("integrate_half_plane: missing integrand");
  validate(tol);
  return integrate_half_line_nested(
      f, [](double, double inner) { return inner; }, 1.0, tol);
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

QuadResult mc_integrate(const std::function<double(std::span<const double>)>& f,
                        std::span<const Interval> box, const McOptions& opt) {
  if (!f) throw InputError("mc_integrate: missing integrand");
  if (box.empty()) throw InputError("mc_integrate: empty box");
  for (const auto& iv : box)
    if (!(iv.lo < iv.hi) || !std::isfinite(iv.lo) || !std::isfinite(iv.hi))
      throw InputError("mc_integrate: box intervals need lo < hi, finite");
  if (opt.n_samples == 0)
    throw InputError("mc_integrate: n_samples must be positive");

  double vol = 1.0;
  for (const auto& iv : box) vol *= (iv.hi - iv.lo);

  const std::uint64_t n = opt.n_samples;
  const std::uint64_t chunk = opt.chunk_size == 0 ? n : opt.chunk_size;
  std::vector<double> x(box.size());
  double sum = 0.0, sumsq = 0.0;
  std::uint64_t done = 0, c = 0;
  while (done < n) {
    const std::uint64_t m = std::min<std::uint64_t>(chunk, n - done);
    std::mt19937_64 rng(splitmix64(opt.seed + (c + 1) * 0x9E3779B97F4A7C15ULL));
    double s = 0.0, s2 = 0.0;
    for (std::uint64_t i = 0; i < m; ++i) {
      for (std::size_t d = 0; d < x.size(); ++d) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        x[d] = box[d].lo + u * (box[d].hi - box[d].lo);
      }
      const double v = f(x);
      if (std::isnan(v)) throw EvalError("mc integrand returned NaN", x[0]);
      s += v;
      s2 += v * v;
    }
    sum += s;
    sumsq += s2;
    done += m;
    ++c;
  }

  const double nd = static_cast<double>(n);
  const double mean = sum / nd;
  double var = 0.0;
  if (n > 1) var = std::max(0.0, (sumsq - nd * mean * mean) / (nd - 1.0));
  QuadResult out;
  out.value = vol * mean;
  out.err_estimate = std::abs(vol) * std::sqrt(var / nd);
  out.evaluations = static_cast<std::int64_t>(n);
  out.converged = std::isfinite(out.value);
  return out;
}

double gamma_fn(double x) {
  if (!std::isfinite(x) || x <= 0.0)
    throw InputError("gamma_fn: defined here for x > 0 only");
  // Lift small arguments through Gamma(x) = Gamma(x+1)/x so the shifted
  // series below stays in its accurate range.
  if (x < 0.5) return gamma_fn(x + 1.0) / x;

  static constexpr double g = 7.0;
  static constexpr std::array<double, 9> c = {
      0.99999999999980993, 676.5203681218851, -1259.1392167224028,
      771.32342877765313, -176.61502916214059, 12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

  const double z = x - 1.0;
  double a = c[0];
  for (int i = 1; i < 9; ++i) a += c[i] / (z + static_cast<double>(i));
  const double t = z + g + 0.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) *
         std::exp(-t) * a;
}

}  // namespace hh
