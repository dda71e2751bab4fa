// Copyright 2026 The growthkit Authors
// SPDX-License-Identifier: Apache-2.0
#include "growthkit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "growthkit/error.hpp"
#include "growthkit/format.hpp"

namespace gk {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
// Relative slack on bounds formed as products or ratios of estimates.
constexpr double kProductSlack = 0.01;

bool positive(const GrowthEstimate& e, const Tolerances& tol) {
  return e.finite() && e.value > tol.tiny;
}

bool positive_finite_pair(const OrderEstimate& o, const Tolerances& tol) {
  return positive(o.lambda, tol) && o.rho.finite() && o.lambda.value <= o.rho.value + o.rho.conv_tol;
}

std::string pair_text(int p, int q) {
  return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

double product_tol(double ctol, double lo, double hi) {
  double scale = 0;
  if (std::isfinite(lo)) scale = std::max(scale, std::fabs(lo));
  if (std::isfinite(hi)) scale = std::max(scale, std::fabs(hi));
  return ctol + kProductSlack * scale;
}

ReportRow value_row(double lo, double hi, double measured, bool settled, double tol) {
  ReportRow row;
  row.predicted_lo = lo;
  row.predicted_hi = hi;
  row.measured = measured;
  row.tolerance = tol;
  if (!settled || std::isnan(measured)) {
    row.margin = kNaN;
    row.verdict = Verdict::Inconclusive;
    return row;
  }
  auto gap = [](double a, double b) {
    if (a == b) return 0.0;
    return a - b;
  };
  row.margin = std::min(gap(measured, lo), gap(hi, measured));
  row.verdict = row.margin >= -tol ? Verdict::Pass : Verdict::Fail;
  return row;
}

ReportRow class_row(GrowthClass expected, const GrowthEstimate& e) {
  ReportRow row;
  const double target = expected == GrowthClass::Infinity ? kInf
                        : expected == GrowthClass::Zero   ? 0.0
                                                          : 1.0;
  row.predicted_lo = row.predicted_hi = target;
  row.measured = e.value;
  row.tolerance = e.conv_tol;
  if (e.cls == expected) {
    row.margin = 0;
    row.verdict = Verdict::Pass;
  } else if (e.cls == GrowthClass::Unsettled) {
    row.margin = kNaN;
    row.verdict = Verdict::Inconclusive;
  } else {
    row.margin = -kInf;
    row.verdict = Verdict::Fail;
  }
  return row;
}

ReportRow hypothesis_row(const std::string& relation, const std::string& subject) {
  ReportRow row;
  row.predicted_lo = row.predicted_hi = row.measured = row.margin = kNaN;
  row.verdict = Verdict::HypothesisViolated;
  row.relation = relation;
  row.subject = subject;
  return row;
}

struct Subject {
  std::string name;
  GrowthObject fn;
};

std::vector<Subject> subjects_of(const CompositionCase& c, bool* exact_within = nullptr) {
  CompositeCurves curves = composite_bound_curves(c.f, c.g);
  if (exact_within) *exact_within = curves.exact_within;
  std::vector<Subject> out;
  if (curves.exact) out.push_back({"exact", *curves.exact});
  out.push_back({"upper", curves.upper});
  out.push_back({"lower", curves.lower});
  return out;
}

VerificationReport report_header(int theorem, const CompositionCase& c) {
  VerificationReport rep;
  rep.theorem = theorem;
  rep.instance = c.id;
  rep.case_tag = std::string(case_tag_name(c.tag));
  rep.predicted = predicted_pair(c.mf, c.mg);
  rep.hypothesis = std::string(hypothesis_tag_name(c.hypothesis));
  rep.description = "f=" + c.f.describe() + " " + pair_text(c.mf.pair.p, c.mf.pair.q) +
                    "; g=" + c.g.describe() + " " + pair_text(c.mg.pair.p, c.mg.pair.q);
  return rep;
}

void push(VerificationReport& rep, ReportRow row, const std::string& subject,
          const std::string& relation) {
  row.theorem = rep.theorem;
  row.case_tag = rep.case_tag;
  row.instance = rep.instance;
  row.subject = subject;
  row.relation = relation;
  rep.rows.push_back(std::move(row));
}

}  // namespace

Measured measure(const GrowthObject& f, int p_max, const GridSpec& spec, const Tolerances& tol) {
  IndexPairResult r = detect_index_pair(f, p_max, spec, tol);
  return Measured{{r.p, r.q}, r.rho, r.lambda};
}

std::string_view case_tag_name(CaseTag c) noexcept {
  switch (c) {
    case CaseTag::QEqualsM: return "i";
    case CaseTag::QGreaterM: return "ii";
    case CaseTag::QLessM: return "iii";
  }
  return "?";
}

std::string_view hypothesis_tag_name(HypothesisTag h) noexcept {
  switch (h) {
    case HypothesisTag::LambdaFPositive: return "lambda_f_positive";
    case HypothesisTag::LambdaGPositive: return "lambda_g_positive";
    case HypothesisTag::Both: return "both";
    case HypothesisTag::Neither: return "neither";
  }
  return "?";
}

CaseTag case_of(int q, int m) noexcept {
  if (q == m) return CaseTag::QEqualsM;
  return q > m ? CaseTag::QGreaterM : CaseTag::QLessM;
}

CompositionCase make_case(std::string id, const GrowthObject& f, const GrowthObject& g,
                          const GridSpec& spec, const Tolerances& tol) {
  CompositionCase c{std::move(id), f, g, measure(f, 6, spec, tol), measure(g, 6, spec, tol),
                    CaseTag::QEqualsM, HypothesisTag::Neither};
  c.tag = case_of(c.mf.pair.q, c.mg.pair.p);
  const bool lf = positive(c.mf.lambda, tol);
  const bool lg = positive(c.mg.lambda, tol);
  c.hypothesis = lf && lg ? HypothesisTag::Both
                 : lf     ? HypothesisTag::LambdaFPositive
                 : lg     ? HypothesisTag::LambdaGPositive
                          : HypothesisTag::Neither;
  return c;
}

IndexPair predicted_pair(const Measured& f, const Measured& g) {
  const int p = f.pair.p, q = f.pair.q, m = g.pair.p, n = g.pair.q;
  switch (case_of(q, m)) {
    case CaseTag::QEqualsM: return {p, n};
    case CaseTag::QGreaterM: return {p, q + n - m};
    case CaseTag::QLessM: return {p + m - q, n};
  }
  return {p, n};
}

Verdict VerificationReport::verdict() const {
  auto has = [&](Verdict v) {
    return std::any_of(rows.begin(), rows.end(), [&](const ReportRow& r) { return r.verdict == v; });
  };
  if (has(Verdict::Fail)) return Verdict::Fail;
  if (has(Verdict::Inconclusive)) return Verdict::Inconclusive;
  if (has(Verdict::HypothesisViolated)) return Verdict::HypothesisViolated;
  return Verdict::Pass;
}

ReportRow interval_row(double lo, double hi, const GrowthEstimate& measured, double tol) {
  return value_row(lo, hi, measured.value, measured.cls != GrowthClass::Unsettled, tol);
}

VerificationReport check_theorem1(const CompositionCase& c, const GridSpec& spec,
                                  const Tolerances& tol) {
  VerificationReport rep = report_header(1, c);
  const IndexPair pp = rep.predicted;
  const double rf = c.mf.rho.value, lf = c.mf.lambda.value;
  const double rg = c.mg.rho.value, lg = c.mg.lambda.value;
  const bool hf = positive(c.mf.lambda, tol);
  const bool hg = positive(c.mg.lambda, tol);
  const std::string at = pair_text(pp.p, pp.q);
  const std::string rho_at = "rho" + at;

  bool within = true;
  const std::vector<Subject> subjects = subjects_of(c, &within);
  std::optional<GrowthEstimate> lower_rho, upper_rho, exact_rho;
  for (const auto& s : subjects) {
    const double ctol = resolve_conv_tol(tol, s.fn.oscillating());
    const GrowthEstimate rho = pq_order(s.fn, pp.p, pp.q, spec, tol).rho;
    if (s.name == "lower") lower_rho = rho;
    if (s.name == "upper") upper_rho = rho;
    if (s.name == "exact") exact_rho = rho;

    auto bound = [&](bool hyp, const std::string& label, double lo, double hi, bool product) {
      if (!hyp) {
        push(rep, hypothesis_row("", ""), s.name, label + " [hypothesis fails]");
        return;
      }
      const double t = product ? product_tol(ctol, lo, hi) : ctol;
      push(rep, interval_row(lo, hi, rho, t), s.name, label);
    };
    switch (c.tag) {
      case CaseTag::QEqualsM:
        bound(hf, "(i)(a) lambda_f*rho_g <= " + rho_at + " <= rho_f*rho_g", lf * rg, rf * rg, true);
        bound(hg, "(i)(b) lambda_f*rho_g <= " + rho_at + " <= rho_f*rho_g", lf * rg, rf * rg, true);
        bound(hg, "(i)(b) diagnostic rho_f*lambda_g <= " + rho_at + " <= rho_f*rho_g", rf * lg,
              rf * rg, true);
        break;
      case CaseTag::QGreaterM:
        bound(hf, "(ii)(a) lambda_f <= " + rho_at + " <= rho_f", lf, rf, false);
        bound(hg, "(ii)(b) " + rho_at + " = rho_f", rf, rf, false);
        break;
      case CaseTag::QLessM:
        bound(hf, "(iii)(a) " + rho_at + " = rho_g", rg, rg, false);
        bound(hg, "(iii)(b) lambda_g <= " + rho_at + " <= rho_g", lg, rg, false);
        break;
    }

    // The pair is an index pair: the neighbouring cells are infinite, zero and one.
    auto cell = [&](int p, int q, GrowthClass expected, const std::string& name) {
      const std::string label = "index pair: rho" + pair_text(p, q) + " = " + name;
      if (!hf && !hg) {
        push(rep, hypothesis_row("", ""), s.name, label + " [hypothesis fails]");
        return;
      }
      push(rep, class_row(expected, pq_order(s.fn, p, q, spec, tol).rho), s.name, label);
    };
    if (pp.p - 1 >= pp.q) cell(pp.p - 1, pp.q, GrowthClass::Infinity, "inf");
    if (pp.q - 1 >= 1) cell(pp.p, pp.q - 1, GrowthClass::Zero, "0");
    cell(pp.p + 1, pp.q + 1, GrowthClass::Unit, "1");
  }

  if (exact_rho) {
    ReportRow row;
    row.predicted_lo = row.predicted_hi = row.measured = within ? 1 : 0;
    row.margin = within ? 0 : -kInf;
    row.verdict = within ? Verdict::Pass : Verdict::Fail;
    push(rep, row, "exact", "M_lower <= M_exact <= M_upper at sample radii");
  }
  if (exact_rho && lower_rho && upper_rho) {
    const double ctol = resolve_conv_tol(tol, false);
    push(rep, value_row(lower_rho->value, upper_rho->value, exact_rho->value,
                        exact_rho->finite() && lower_rho->finite() && upper_rho->finite(), ctol),
         "exact", "rho_lower <= " + rho_at + " <= rho_upper");
  }
  return rep;
}

VerificationReport check_theorem2(const CompositionCase& c, const GridSpec& spec,
                                  const Tolerances& tol) {
  VerificationReport rep = report_header(2, c);
  const IndexPair pp = rep.predicted;
  const double rf = c.mf.rho.value, lf = c.mf.lambda.value;
  const double rg = c.mg.rho.value, lg = c.mg.lambda.value;
  const bool both = c.hypothesis == HypothesisTag::Both;
  const std::string lam_at = "lambda" + pair_text(pp.p, pp.q);

  for (const auto& s : subjects_of(c)) {
    std::string label;
    double lo = 0, hi = 0;
    bool product = false;
    switch (c.tag) {
      case CaseTag::QEqualsM:
        label = "(i) lambda_f*lambda_g <= " + lam_at + " <= min(rho_f*lambda_g, lambda_f*rho_g)";
        lo = lf * lg;
        hi = std::min(rf * lg, lf * rg);
        product = true;
        break;
      case CaseTag::QGreaterM:
        label = "(ii) " + lam_at + " = lambda_f";
        lo = hi = lf;
        break;
      case CaseTag::QLessM:
        label = "(iii) " + lam_at + " = lambda_g";
        lo = hi = lg;
        break;
    }
    if (!both) {
      push(rep, hypothesis_row("", ""), s.name, label + " [needs lambda_f > 0 and lambda_g > 0]");
      continue;
    }
    const double ctol = resolve_conv_tol(tol, s.fn.oscillating());
    const GrowthEstimate lam = pq_order(s.fn, pp.p, pp.q, spec, tol).lambda;
    push(rep, interval_row(lo, hi, lam, product ? product_tol(ctol, lo, hi) : ctol), s.name, label);
  }
  return rep;
}

Comparator comparator(unsigned height) {
  return Comparator{exp_tower_comparator(height), {static_cast<int>(height) + 1, 1}};
}

Comparator comparator(const GrowthObject& fn, const GridSpec& spec, const Tolerances& tol) {
  return Comparator{fn, measure(fn, 6, spec, tol).pair};
}

namespace {

struct RatioShape {
  bool f_side = true;  // odd ids: denominator built from f
  int part = 0;        // 1 or 2; 0 when no side condition holds
  int level = 1;       // q-level of the r-grid
  int num_shift = 0;   // numerator argument exp^[num_shift](r)
  int den_shift = 0;   // denominator argument exp^[den_shift](r)
  int num_q = 1;       // second index of the numerator's relative order
  std::string failed;
};

RatioShape ratio_shape(int id, const RatioInstance& inst) {
  const int p = inst.base.mf.pair.p, q = inst.base.mf.pair.q;
  const int m = inst.base.mg.pair.p, n = inst.base.mg.pair.q;
  const int a = inst.h.pair.p;
  const int c = inst.k.pair.p;  // c for odd ids, x for even ids
  RatioShape s;
  s.f_side = id % 2 == 1;
  if (s.f_side) {
    if ((q == m && a == p && c == p && q >= n) || (q < m && c == p && a == p + m - q && q >= n)) {
      s.part = 1;
      s.level = n;
      s.den_shift = q - n;
      s.num_q = n;
    } else if (q > m && a == p && c == p) {
      s.part = 2;
      s.level = q + n - m;
      s.den_shift = m - n;
      s.num_q = q + n - m;
    } else {
      s.failed = "index-pair side condition: need (q=m, a=c=p, q>=n), (q<m, c=p, a=p+m-q, q>=n) "
                 "or (q>m, a=c=p)";
    }
  } else {
    if ((q == m && m == c && a == p) || (q < m && m == c && a == p + m - q)) {
      s.part = 1;
      s.level = n;
      s.num_q = n;
    } else if (q > m && m == c && a == p) {
      s.part = 2;
      s.level = n;
      s.num_shift = q - m;
      s.num_q = q + n - m;
    } else {
      s.failed = "index-pair side condition: need (q=m=x, a=p), (q<m=x, a=p+m-q) or (q>m=x, a=p)";
    }
  }
  return s;
}

// log^[k] M_c^-1(v) as a plain real, +inf beyond the mantissa range.
double relative_log(const GrowthObject& c, const TowerReal& v, int k) {
  const TowerReal u = inverse_max_modulus(c, v);
  const auto x = to_extended(log_k(u, static_cast<std::uint32_t>(k)));
  return x ? static_cast<double>(*x) : kInf;
}

}  // namespace

VerificationReport check_ratio_theorem(int id, const RatioInstance& inst, const GridSpec& spec,
                                       const Tolerances& tol) {
  if (id < 3 || id > 8) fail(ErrorCode::InvalidValue, "ratio theorems are 3 to 8");
  const CompositionCase& c = inst.base;
  VerificationReport rep = report_header(id, c);
  rep.description += "; h=" + inst.h.fn.describe() + " " + pair_text(inst.h.pair.p, inst.h.pair.q) +
                     (id % 2 == 1 ? "; k=" : "; l=") + inst.k.fn.describe() + " " +
                     pair_text(inst.k.pair.p, inst.k.pair.q);
  const RatioShape shape = ratio_shape(id, inst);
  const int b = inst.h.pair.q;
  const int d = inst.k.pair.q;  // d or y
  const int q = c.mf.pair.q, n = c.mg.pair.q;
  const std::string part = shape.part == 2 ? "(ii)" : "(i)";

  auto mark_all = [&](const std::string& why) {
    rep.hypothesis = why;
    push(rep, hypothesis_row("", ""), "ratio", why);
  };
  if (shape.part == 0) {
    mark_all(shape.failed);
    return rep;
  }
  const bool lambda_ok = shape.f_side ? positive(c.mf.lambda, tol) : positive(c.mg.lambda, tol);
  if (!lambda_ok) {
    mark_all(shape.f_side ? "needs lambda_f > 0" : "needs lambda_g > 0");
    return rep;
  }

  // Relative order of the denominator function against k (or l).
  const GrowthObject& den_fn = shape.f_side ? c.f : c.g;
  const int den_q = shape.f_side ? q : n;
  const OrderEstimate den_order = relative_pq_order(den_fn, inst.k.fn, d, den_q, spec, tol);
  const std::string kname = shape.f_side ? "k" : "l";
  const std::string den_tag = "_" + kname + pair_text(d, den_q);

  for (const auto& s : subjects_of(c)) {
    const OrderEstimate num_order = relative_pq_order(s.fn, inst.h.fn, b, shape.num_q, spec, tol);
    const bool osc = s.fn.oscillating() || den_fn.oscillating();
    const double ctol = resolve_conv_tol(tol, osc);

    const bool need_lambda = id == 3 || id == 4 || id == 7 || id == 8;
    auto admissible = [&](const OrderEstimate& o) {
      return need_lambda ? positive_finite_pair(o, tol) : (o.rho.finite() && positive(o.rho, tol));
    };
    if (!admissible(num_order) || !admissible(den_order)) {
      push(rep, hypothesis_row("", ""), s.name,
           need_lambda ? "needs 0 < lambda <= rho < inf for both relative orders"
                       : "needs 0 < rho < inf for both relative orders");
      continue;
    }

    // Ratio sequence on a grid snapped to every breakpoint of both sides.
    auto [lo, hi] = grid_span(shape.level, spec);
    std::vector<TowerReal> snap;
    auto pull_back = [&](const std::vector<TowerReal>& radii, int shift) {
      for (const auto& u : radii) {
        try {
          snap.push_back(log_k(u, static_cast<std::uint32_t>(shift)));
        } catch (const Error&) {
        }
      }
    };
    pull_back(s.fn.boundary_radii(exp_k(lo, static_cast<std::uint32_t>(shape.num_shift)),
                                  exp_k(hi, static_cast<std::uint32_t>(shape.num_shift))),
              shape.num_shift);
    pull_back(den_fn.boundary_radii(exp_k(lo, static_cast<std::uint32_t>(shape.den_shift)),
                                    exp_k(hi, static_cast<std::uint32_t>(shape.den_shift))),
              shape.den_shift);
    const RGrid grid = make_grid(shape.level, spec, snap);
    std::vector<double> ratio;
    for (std::size_t i = grid.tail_begin; i < grid.size(); ++i) {
      const TowerReal& r = grid.r[i];
      const double num = relative_log(
          inst.h.fn, s.fn.max_modulus(exp_k(r, static_cast<std::uint32_t>(shape.num_shift))), b);
      const double den = relative_log(
          inst.k.fn, den_fn.max_modulus(exp_k(r, static_cast<std::uint32_t>(shape.den_shift))), d);
      ratio.push_back(den > 0 ? num / den : kInf);
    }
    const GrowthEstimate liminf = summarize_tail(ratio, TailStat::Inf, ctol, tol);
    const GrowthEstimate limsup = summarize_tail(ratio, TailStat::Sup, ctol, tol);

    const double lh = num_order.lambda.value, rh = num_order.rho.value;
    const double lk = den_order.lambda.value, rk = den_order.rho.value;
    const std::string num_tag = "_h" + pair_text(b, shape.num_q);
    const std::string lam_h = "lambda" + num_tag, rho_h = "rho" + num_tag;
    const std::string lam_k = "lambda" + den_tag, rho_k = "rho" + den_tag;
    const std::string prefix = part + " ";

    auto ge = [&](const GrowthEstimate& e, double v, const std::string& label) {
      push(rep, value_row(v, kInf, e.value, e.cls != GrowthClass::Unsettled, product_tol(ctol, v, v)),
           s.name, prefix + label);
    };
    auto le = [&](const GrowthEstimate& e, double v, const std::string& label) {
      push(rep, value_row(-kInf, v, e.value, e.cls != GrowthClass::Unsettled, product_tol(ctol, v, v)),
           s.name, prefix + label);
    };
    if (id == 3 || id == 4) {
      ge(liminf, lh / rk, lam_h + "/" + rho_k + " <= liminf R");
      le(liminf, lh / lk, "liminf R <= " + lam_h + "/" + lam_k);
      ge(limsup, lh / lk, lam_h + "/" + lam_k + " <= limsup R");
      le(limsup, rh / lk, "limsup R <= " + rho_h + "/" + lam_k);
      rep.chain_values.insert(rep.chain_values.end(),
                              {lh / rk, liminf.value, lh / lk, limsup.value, rh / lk});
    } else if (id == 5 || id == 6) {
      le(liminf, rh / rk, "liminf R <= " + rho_h + "/" + rho_k);
      ge(limsup, rh / rk, rho_h + "/" + rho_k + " <= limsup R");
      rep.chain_values.insert(rep.chain_values.end(), {liminf.value, rh / rk, limsup.value});
    } else {
      const double lo_v = std::min(lh / lk, rh / rk);
      const double hi_v = std::max(lh / lk, rh / rk);
      const std::string pair = "{" + lam_h + "/" + lam_k + ", " + rho_h + "/" + rho_k + "}";
      le(liminf, lo_v, "liminf R <= min" + pair);
      GrowthEstimate mid;
      mid.cls = GrowthClass::Finite;
      mid.value = lo_v;
      le(mid, hi_v, "min" + pair + " <= max" + pair);
      ge(limsup, hi_v, "max" + pair + " <= limsup R");
      rep.chain_values.insert(rep.chain_values.end(), {liminf.value, lo_v, hi_v, limsup.value});
    }
  }
  return rep;
}

std::optional<RatioInstance> default_ratio_instance(int id, const CompositionCase& c) {
  if (id < 3 || id > 8) return std::nullopt;
  const int p = c.mf.pair.p, q = c.mf.pair.q;
  const int m = c.mg.pair.p, n = c.mg.pair.q;
  int a = 0, second = 0;
  if (id % 2 == 1) {
    if (q == m && q >= n) a = p;
    else if (q < m && q >= n) a = p + m - q;
    else if (q > m) a = p;
    else return std::nullopt;
    second = p;
  } else {
    a = q < m ? p + m - q : p;
    second = m;
  }
  return RatioInstance{c, comparator(static_cast<unsigned>(a - 1)),
                       comparator(static_cast<unsigned>(second - 1))};
}

double chain_spread(const VerificationReport& report) {
  if (report.chain_values.empty()) return 0;
  auto [lo, hi] = std::minmax_element(report.chain_values.begin(), report.chain_values.end());
  return *hi - *lo;
}

}  // namespace gk
