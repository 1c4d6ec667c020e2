#include "pathgen/interval.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <initializer_list>
#include <limits>

#include "pathgen/errors.hpp"
#include "pathgen/eval.hpp"

namespace pathgen {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTwoPi = 6.283185307179586;
constexpr double kHalfPi = 1.5707963267948966;
constexpr double kPi = 3.141592653589793;
// Absolute slack when locating sine/cosine critical points; includes a
// candidate just outside the interval (sound: only widens) and absorbs the
// rounding of the k_min/k_max arithmetic for arguments up to kArgLimit.
constexpr double kCritGuard = 1e-6;
constexpr double kArgLimit = 1e9;

double up2(double x) {
  return std::nextafter(std::nextafter(x, kInf), kInf);
}

double dn2(double x) {
  return std::nextafter(std::nextafter(x, -kInf), -kInf);
}

// Hull of the non-NaN values; a NaN value marks an undefined corner. All
// NaN collapses to Empty (no defined result anywhere).
Interval hull(std::initializer_list<double> values, bool mu) {
  double lo = kInf, hi = -kInf;
  bool saw_value = false, saw_nan = false;
  for (double v : values) {
    if (std::isnan(v)) {
      saw_nan = true;
      continue;
    }
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    saw_value = true;
  }
  if (!saw_value) return Interval::empty_set();
  return Interval::make(lo, hi, mu || saw_nan);
}

bool contains_zero(const Interval& a) { return a.lo <= 0.0 && 0.0 <= a.hi; }

// Is there an integer k with c + 2*pi*k inside [lo - guard, hi + guard]?
bool spans_critical(double lo, double hi, double c) {
  double kmin = std::ceil((lo - kCritGuard - c) / kTwoPi);
  double kmax = std::floor((hi + kCritGuard - c) / kTwoPi);
  return kmin <= kmax;
}

Interval trig_iv(const Interval& a, bool is_sin) {
  if (a.degenerate()) {
    double v = is_sin ? std::sin(a.lo) : std::cos(a.lo);
    if (std::isnan(v)) return Interval::empty_set();
    return Interval::make(v, v, a.maybe_undefined);
  }
  if (!(a.hi - a.lo < kTwoPi) || std::max(std::fabs(a.lo), std::fabs(a.hi)) > kArgLimit) {
    // An argument exactly at an infinite endpoint evaluates to NaN.
    bool inf_arg = std::isinf(a.lo) || std::isinf(a.hi);
    return Interval::make(-1.0, 1.0, a.maybe_undefined || inf_arg);
  }
  double e1 = is_sin ? std::sin(a.lo) : std::cos(a.lo);
  double e2 = is_sin ? std::sin(a.hi) : std::cos(a.hi);
  double lo = dn2(std::min(e1, e2));
  double hi = up2(std::max(e1, e2));
  double max_at = is_sin ? kHalfPi : 0.0;
  double min_at = is_sin ? -kHalfPi : kPi;
  if (spans_critical(a.lo, a.hi, max_at)) hi = 1.0;
  if (spans_critical(a.lo, a.hi, min_at)) lo = -1.0;
  return Interval::make(std::max(lo, -1.0), std::min(hi, 1.0), a.maybe_undefined);
}

Interval sqrt_iv(const Interval& a) {
  if (a.hi < 0.0) return Interval::empty_set();
  bool clipped = a.lo < 0.0;
  double lo = clipped ? 0.0 : a.lo;
  // IEEE sqrt is correctly rounded, hence monotone: endpoints are exact.
  return Interval::make(std::sqrt(lo), std::sqrt(a.hi), a.maybe_undefined || clipped);
}

Interval abs_iv(const Interval& a) {
  if (a.lo >= 0.0) return Interval::make(a.lo, a.hi, a.maybe_undefined);
  if (a.hi <= 0.0) return Interval::make(-a.hi, -a.lo, a.maybe_undefined);
  return Interval::make(0.0, std::max(-a.lo, a.hi), a.maybe_undefined);
}

Interval exp_iv(const Interval& a) {
  if (a.degenerate()) {
    double v = std::exp(a.lo);
    return Interval::make(v, v, a.maybe_undefined);
  }
  double lo = std::max(0.0, dn2(std::exp(a.lo)));
  double hi = up2(std::exp(a.hi));
  return Interval::make(lo, hi, a.maybe_undefined);
}

Interval log_iv(const Interval& a) {
  if (a.hi <= 0.0) return Interval::empty_set();
  if (a.lo <= 0.0) {
    double hi = a.degenerate() ? std::log(a.hi) : up2(std::log(a.hi));
    return Interval::make(-kInf, hi, true);
  }
  if (a.degenerate()) {
    double v = std::log(a.lo);
    return Interval::make(v, v, a.maybe_undefined);
  }
  return Interval::make(dn2(std::log(a.lo)), up2(std::log(a.hi)), a.maybe_undefined);
}

// x^k for an integral constant k (algebraic power; negative bases allowed).
Interval int_pow_iv(const Interval& a, double kd) {
  bool even = std::fmod(kd, 2.0) == 0.0;
  if (kd == 0.0) return Interval::make(1.0, 1.0, a.maybe_undefined);
  bool degen = a.degenerate();
  double c1 = std::pow(a.lo, kd);
  double c2 = std::pow(a.hi, kd);
  if (kd > 0.0) {
    double lo, hi;
    if (even) {
      hi = std::max(c1, c2);
      lo = contains_zero(a) ? 0.0 : std::min(c1, c2);
    } else {
      lo = c1;
      hi = c2;
    }
    if (!degen) {
      lo = even && contains_zero(a) ? 0.0 : dn2(lo);
      hi = up2(hi);
      if (even) lo = std::max(lo, 0.0);
    }
    return Interval::make(lo, hi, a.maybe_undefined);
  }
  // negative exponent: pole at 0
  if (a.lo == 0.0 && a.hi == 0.0) return Interval::empty_set();
  if (contains_zero(a)) return Interval::whole(true);
  double lo = std::min(c1, c2);
  double hi = std::max(c1, c2);
  if (!degen) {
    lo = dn2(lo);
    hi = up2(hi);
  }
  return Interval::make(lo, hi, a.maybe_undefined);
}

// x^y with a non-constant exponent: exp(y*log(x)) semantics, base > 0.
Interval gen_pow_iv(const Interval& a, const Interval& b) {
  if (a.hi <= 0.0) return Interval::empty_set();
  bool clipped = a.lo <= 0.0;
  double base_lo = clipped ? 0.0 : a.lo;
  bool mu = a.maybe_undefined || b.maybe_undefined || clipped;
  bool degen = !clipped && a.degenerate() && b.degenerate();
  Interval h = hull({std::pow(base_lo, b.lo), std::pow(base_lo, b.hi),
                     std::pow(a.hi, b.lo), std::pow(a.hi, b.hi)},
                    mu);
  if (h.empty) return h;
  double lo = h.lo, hi = h.hi;
  if (!degen) {
    lo = std::max(0.0, dn2(lo));
    hi = up2(hi);
  }
  return Interval::make(lo, hi, h.maybe_undefined);
}

Interval min_iv(const Interval& a, const Interval& b) {
  return Interval::make(std::fmin(a.lo, b.lo), std::fmin(a.hi, b.hi),
                        a.maybe_undefined || b.maybe_undefined);
}

Interval max_iv(const Interval& a, const Interval& b) {
  return Interval::make(std::fmax(a.lo, b.lo), std::fmax(a.hi, b.hi),
                        a.maybe_undefined || b.maybe_undefined);
}

Interval call_iv(const NumExpr& e, const InputBox& box) {
  Interval a = iv_eval(*e.args[0], box);
  if (a.empty) return Interval::empty_set();
  switch (e.func) {
    case Func::Sin: return trig_iv(a, true);
    case Func::Cos: return trig_iv(a, false);
    case Func::Sqrt: return sqrt_iv(a);
    case Func::Abs: return abs_iv(a);
    case Func::Exp: return exp_iv(a);
    case Func::Log: return log_iv(a);
    case Func::Pow: {
      Interval b = iv_eval(*e.args[1], box);
      if (b.empty) return Interval::empty_set();
      // The same split as concrete evaluation: a syntactically integral
      // constant exponent selects the algebraic power.
      if (auto k = integer_constant_exponent(*e.args[1])) {
        Interval r = int_pow_iv(a, *k);
        if (r.empty) return r;
        return Interval::make(r.lo, r.hi, r.maybe_undefined || b.maybe_undefined);
      }
      return gen_pow_iv(a, b);
    }
    case Func::Min: {
      Interval b = iv_eval(*e.args[1], box);
      if (b.empty) return Interval::empty_set();
      return min_iv(a, b);
    }
    case Func::Max: {
      Interval b = iv_eval(*e.args[1], box);
      if (b.empty) return Interval::empty_set();
      return max_iv(a, b);
    }
  }
  return Interval::whole(true);
}

}  // namespace

Interval Interval::make(double lo, double hi, bool maybe_undefined) {
  assert(!std::isnan(lo) && !std::isnan(hi));
  assert(lo <= hi);
  Interval iv;
  iv.lo = lo;
  iv.hi = hi;
  iv.maybe_undefined = maybe_undefined;
  return iv;
}

Interval Interval::empty_set() {
  Interval iv;
  iv.empty = true;
  iv.maybe_undefined = true;
  return iv;
}

Interval Interval::whole(bool maybe_undefined) {
  return make(-kInf, kInf, maybe_undefined);
}

Interval iv_eval(const NumExpr& e, const InputBox& box) {
  switch (e.kind) {
    case NumKind::Const:
      if (std::isnan(e.value)) return Interval::empty_set();
      return Interval::make(e.value, e.value);
    case NumKind::Var: {
      const VarDomain* d = box.find(e.name);
      if (!d) throw UnboundVariableError(e.name);
      return Interval::make(d->lo, d->hi);
    }
    case NumKind::Neg: {
      Interval a = iv_eval(*e.args[0], box);
      if (a.empty) return a;
      return Interval::make(-a.hi, -a.lo, a.maybe_undefined);
    }
    case NumKind::Add:
    case NumKind::Sub:
    case NumKind::Mul:
    case NumKind::Div: {
      Interval a = iv_eval(*e.args[0], box);
      Interval b = iv_eval(*e.args[1], box);
      if (a.empty || b.empty) return Interval::empty_set();
      // Concrete operands can sit exactly on an infinite endpoint, where
      // inf - inf, 0 * inf and inf / inf turn NaN (undefined). Corner
      // hulls flag NaN corners on their own; the cases below are the
      // combinations a finite corner can mask.
      auto unbounded = [](const Interval& v) {
        return std::isinf(v.lo) || std::isinf(v.hi);
      };
      auto inf_point = [](const Interval& v) {
        return v.lo == v.hi && std::isinf(v.lo);
      };
      auto zero_point = [](const Interval& v) { return v.lo == 0.0 && v.hi == 0.0; };
      bool mu = a.maybe_undefined || b.maybe_undefined;
      switch (e.kind) {
        case NumKind::Add:
          mu = mu || (a.lo == -kInf && b.hi == kInf) || (a.hi == kInf && b.lo == -kInf);
          return hull({a.lo + b.lo, a.hi + b.hi}, mu);
        case NumKind::Sub:
          mu = mu || (a.lo == -kInf && b.lo == -kInf) || (a.hi == kInf && b.hi == kInf);
          return hull({a.lo - b.hi, a.hi - b.lo}, mu);
        case NumKind::Mul:
          mu = mu || (contains_zero(a) && unbounded(b)) ||
               (contains_zero(b) && unbounded(a));
          // A zero-degenerate factor makes every corner against an
          // unbounded side NaN, yet every defined product is 0; only a
          // pure-infinity other side has no defined product at all.
          if (zero_point(a) || zero_point(b)) {
            const Interval& other = zero_point(a) ? b : a;
            if (inf_point(other)) return Interval::empty_set();
            return Interval::make(0.0, 0.0, mu);
          }
          return hull({a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi}, mu);
        default:
          if (zero_point(b)) return Interval::empty_set();
          if (contains_zero(b)) return Interval::whole(true);
          mu = mu || (unbounded(a) && unbounded(b));
          // Same shape for division: a pure-infinity denominator sends
          // every finite numerator to 0 and infinite ones to NaN.
          if (inf_point(b)) {
            if (inf_point(a)) return Interval::empty_set();
            return Interval::make(0.0, 0.0, mu);
          }
          return hull({a.lo / b.lo, a.lo / b.hi, a.hi / b.lo, a.hi / b.hi}, mu);
      }
    }
    case NumKind::Call:
      return call_iv(e, box);
  }
  return Interval::whole(true);
}

Refutation refute_predicate(const Predicate& p, const InputBox& box) {
  Interval l = iv_eval(*p.lhs, box);
  Interval r = iv_eval(*p.rhs, box);
  // An Empty side has no defined value anywhere, so no point satisfies.
  if (l.empty || r.empty) return Refutation::Unsat;
  switch (p.op) {
    case RelOp::Le:
      return l.lo > r.hi ? Refutation::Unsat : Refutation::Unknown;
    case RelOp::Lt:
      return l.lo >= r.hi ? Refutation::Unsat : Refutation::Unknown;
    case RelOp::Ge:
      return l.hi < r.lo ? Refutation::Unsat : Refutation::Unknown;
    case RelOp::Gt:
      return l.hi <= r.lo ? Refutation::Unsat : Refutation::Unknown;
    case RelOp::Eq:
      return (l.hi < r.lo || r.hi < l.lo) ? Refutation::Unsat : Refutation::Unknown;
    case RelOp::Ne:
      return (l.degenerate() && r.degenerate() && l.lo == r.lo &&
              !l.maybe_undefined && !r.maybe_undefined)
                 ? Refutation::Unsat
                 : Refutation::Unknown;
  }
  return Refutation::Unknown;
}

Refutation refute_pc(const PathCondition& pc, const InputBox& box) {
  switch (pc.kind) {
    case CondKind::Leaf:
      return refute_predicate(pc.pred, box);
    case CondKind::And:
      for (const auto& c : pc.children) {
        if (refute_pc(*c, box) == Refutation::Unsat) return Refutation::Unsat;
      }
      return Refutation::Unknown;
    case CondKind::Or:
      for (const auto& c : pc.children) {
        if (refute_pc(*c, box) == Refutation::Unknown) return Refutation::Unknown;
      }
      return Refutation::Unsat;
    case CondKind::Not:
      return Refutation::Unknown;
  }
  return Refutation::Unknown;
}

}  // namespace pathgen
