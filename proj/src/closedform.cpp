#include "h3mag/closedform.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>

#include <boost/math/special_functions/ellint_1.hpp>
#include <boost/math/special_functions/ellint_2.hpp>
#include <boost/math/special_functions/jacobi_elliptic.hpp>

#include "h3mag/numdiff.hpp"

namespace h3mag {

namespace {

std::string lowered(std::string s)
{
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return s;
}

bool same_value(double a, double b)
{
  return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
}

double tk4_rate(double lambda)
{
  return (1.0 + lambda * lambda) / (3.0 * lambda);
}

// ---------------------------------------------------------------------------
// Printed transcriptions

PointH3 printed_geo_i(const ClosedFormSpec & s, double t)
{
  return {
    s.c1() * t + s.c2(),
    s.c3() * t + s.c4(),
    0.5 * s.c1() * s.c3() * t * t + s.c2() * s.c3() * t + s.c5()};
}

PointH3 printed_geo_ii(const ClosedFormSpec & s, double t)
{
  const double l = s.lambda;
  const double c = effective_c(s);
  const double ep = std::exp(c * l * t);
  const double em = std::exp(-c * l * t);
  const double c1 = s.c1(), c2 = s.c2(), c3 = s.c3();
  return {
    -(c1 / c) * ep - (c2 / c) * em + c3,
    c1 / (c * l) * ep - c2 / (c * l) * em + s.c4(),
    (2.0 * c1 * c2 + c * c) / c * t - c3 / (l * c) * (c1 * ep - c2 * em) +
      (c1 * c1 - c2 * c2) / (2.0 * c * c * l) * std::exp(-2.0 * c * l * t)};
}

PointH3 printed_tk1_1(const ClosedFormSpec & s, double t)
{
  const double l = s.lambda;
  const double c1 = s.c1(), c2 = s.c2(), c3 = s.c3();
  return {
    c1 * t + c2,
    -c1 / l * t * t + c3 * t + s.c4(),
    2.0 * c1 * c1 / (3.0 * l) * t * t * t + c1 * (c2 / l - 0.5 * c3) * t * t + (1.0 / l - c2 * c3) * t +
      s.c5()};
}

PointH3 printed_tk1_2(const ClosedFormSpec & s, double t)
{
  const double l = s.lambda;
  const double c1 = s.c1(), c2 = s.c2(), c3 = s.c3();
  return {
    c1 * l * t * t + c2 * t + c3,
    c1 * t + s.c4(),
    0.5 * c1 * c2 * t * t + (-1.0 / l + c3 * c1 - c1 * c1 / 3.0 * l) * t + s.c5()};
}

PointH3 printed_tk1_3(const ClosedFormSpec & s, double t)
{
  const double l = s.lambda;
  const double c = effective_c(s);
  const double a = std::sqrt(l * l * c * c - 1.0);
  const double ep = std::exp(a * t);
  const double em = std::exp(-a * t);
  const double c1 = s.c1(), c2 = s.c2(), c3 = s.c3();
  const double lc1 = l * c + 1.0;
  return {
    l / lc1 * (c1 * ep + c2 * em) + c3,
    (c1 * ep - c2 * em) / a + s.c4(),
    (c + 2.0 * l * c1 * c2 / lc1) * t +
      (c3 * (c1 * em - c2 * ep) + l / (2.0 * lc1) * (c1 * c1 * em * em - c2 * c2 * ep * ep)) / a + s.c5()};
}

PointH3 printed_tk2(const ClosedFormSpec & s, double t)
{
  const double l = s.lambda;
  const double c1 = s.c1(), c2 = s.c2();
  return {
    c1 * std::cos(t) - c2 * std::sin(t),
    c1 * c2 * std::cos(2.0 * t) / (2.0 * l) + (c1 * c1 - c2 * c2) * std::sin(2.0 * t) / (4.0 * l) +
      (c1 * c1 + c2 * c2) * t / (2.0 * l),
    (0.25 * c2 * (c1 * c1 - c2 * c2 / 3.0) * std::cos(3.0 * t) +
     0.25 * c1 * (c1 * c1 / 3.0 - c2 * c2) * std::sin(3.0 * t) +
     (1.0 + 0.75 * (c2 * c2 + c1 * c1)) * (c2 * std::cos(t) + c1 * std::sin(t))) /
      l};
}

PointH3 printed_tk3(const ClosedFormSpec & s, double t)
{
  const double l = s.lambda;
  const double c1 = s.c1(), c2 = s.c2(), c3 = s.c3(), c4 = s.c4();
  const double sg = std::sqrt(2.0 * l * c1 - 1.0);
  const double ep = std::exp(sg / l * t);
  const double em = std::exp(-sg / l * t);
  return {
    c1 * t + c2,
    c3 * ep + c4 * em,
    (-c3 / sg - c3 * (c2 - l * c1 * sg + c1 * t)) * ep + (c4 / sg - c4 * (c2 + l * c1 * sg + c1 * t)) * em};
}

PointH3 printed_tk4(const ClosedFormSpec & s, double t)
{
  const double beta = tk4_rate(s.lambda);
  const double gap = s.c1() - beta * t;
  if (!(gap > 0.0)) {
    throw DomainViolation(
      "TK4 printed: t = " + std::to_string(t) + " is at or beyond the pole t = " +
      std::to_string(s.c1() / beta) + " (square root of a non-positive number)");
  }
  const double b = static_cast<double>(s.branch);
  const double r = 1.0 / (std::sqrt(2.0) * std::sqrt(gap));
  return {r, b * r, 0.75 * std::log(std::abs(beta * t - s.c1())) + b / (4.0 * gap) + s.c2()};
}

// ---------------------------------------------------------------------------
// Corrected families

// Solution of y'' = −(k/λ) x', x'' = λ k y', z' + x y' = c: the frame
// components (y', x'/λ) rotate with angular frequency k.
PointH3 helix(double lambda, double freq, double c, const std::array<double, 5> & k, double t)
{
  const double c1 = k[0], c2 = k[1], c3 = k[2], c4 = k[3], c5 = k[4];
  const double ct = std::cos(freq * t);
  const double st = std::sin(freq * t);
  const double y = c4 + (c1 * st + c2 * ct) / freq;
  const double x = c3 + lambda / freq * (c2 * st - c1 * ct);
  const double z = (c + lambda * (c1 * c1 + c2 * c2) / (2.0 * freq)) * t +
                   lambda * (c1 * c1 - c2 * c2) * std::sin(2.0 * freq * t) / (4.0 * freq * freq) +
                   lambda * c1 * c2 * std::cos(2.0 * freq * t) / (2.0 * freq * freq) - c3 * (y - c4) + c5;
  return {x, y, z};
}

PointH3 corrected_geo_i(const ClosedFormSpec & s, double t)
{
  const double c1 = s.c1(), c2 = s.c2(), c3 = s.c3();
  return {c1 * t + c2, c3 * t + s.c4(), -0.5 * c1 * c3 * t * t - c2 * c3 * t + s.c5()};
}

PointH3 corrected_tk1_2(const ClosedFormSpec & s, double t)
{
  const double l = s.lambda;
  const double c1 = s.c1(), c2 = s.c2(), c3 = s.c3();
  return {c2 * t + c3, c1 * t + s.c4(), -t / l - 0.5 * c1 * c2 * t * t - c1 * c3 * t + s.c5()};
}

// x'' = −x − 2x³ with x(0) = c1, x'(0) = −c2, solved as x = A cn(Ωt + φ | m).
struct CnOrbit
{
  double amplitude = 0.0;
  double omega = 1.0;
  double m = 0.0;
  double modulus = 0.0;  // k = √m, the argument Boost expects
  double phase = 0.0;
  double period_quarter = std::numbers::pi / 2.0;  // K(m)
};

CnOrbit cn_orbit(double c1, double c2)
{
  CnOrbit o;
  const double energy = c2 * c2 + c1 * c1 + c1 * c1 * c1 * c1;
  const double a2 = 2.0 * energy / (1.0 + std::sqrt(1.0 + 4.0 * energy));
  o.amplitude = std::sqrt(a2);
  o.omega = std::sqrt(2.0 * a2 + 1.0);
  o.m = a2 / (2.0 * a2 + 1.0);
  o.modulus = std::sqrt(o.m);
  o.period_quarter = boost::math::ellint_1(o.modulus);
  if (o.amplitude == 0.0) {
    return o;
  }
  // sn²(φ)(1 − m sn²(φ)) = c2² / (A²Ω²), taking the root with sn² ≤ 1.
  const double r = c2 * c2 / (a2 * o.omega * o.omega);
  const double disc = std::max(0.0, 1.0 - 4.0 * o.m * r);
  const double sn2 = std::min(1.0, 2.0 * r / (1.0 + std::sqrt(disc)));
  const double amp = std::atan2(std::copysign(std::sqrt(sn2), c2), c1 / o.amplitude);
  o.phase = boost::math::ellint_1(o.modulus, amp);
  return o;
}

// Jacobi amplitude am(u | m), continuous in u.
double jacobi_amplitude(const CnOrbit & o, double u)
{
  const double two_k = 2.0 * o.period_quarter;
  const double n = std::floor((u + o.period_quarter) / two_k);
  const double r = u - n * two_k;
  double cn = 0.0, dn = 0.0;
  const double sn = boost::math::jacobi_elliptic(o.modulus, r, &cn, &dn);
  return n * std::numbers::pi + std::atan2(sn, cn);
}

PointH3 corrected_tk2(const ClosedFormSpec & s, double t)
{
  const double l = s.lambda;
  const CnOrbit o = cn_orbit(s.c1(), s.c2());
  const double u = o.omega * t + o.phase;

  double cn = 0.0, dn = 0.0;
  const double sn = boost::math::jacobi_elliptic(o.modulus, u, &cn, &dn);
  double cn0 = 0.0, dn0 = 0.0;
  const double sn0 = boost::math::jacobi_elliptic(o.modulus, o.phase, &cn0, &dn0);

  // y' = −x²/λ integrates through ∫cn² = (E(am u) − (1 − m)u)/m, and A²/m = Ω².
  auto epsilon = [&](double v) {
    return boost::math::ellint_2(o.modulus, jacobi_amplitude(o, v)) - (1.0 - o.m) * v;
  };
  const double y = s.c3() - o.omega / l * (epsilon(u) - epsilon(o.phase));

  // z' = (x + x³)/λ; the cn and cn³ antiderivatives combine into
  // ½[asin(k sn) + AΩ sn dn] / λ.
  auto primitive = [&](double snv, double dnv) {
    return std::asin(o.modulus * snv) + o.amplitude * o.omega * snv * dnv;
  };
  const double z = s.c4() + (primitive(sn, dn) - primitive(sn0, dn0)) / (2.0 * l);

  return {o.amplitude * cn, y, z};
}

PointH3 corrected_tk3(const ClosedFormSpec & s, double t)
{
  const double l = s.lambda;
  const double c1 = s.c1();
  const double rate = std::sqrt(2.0 * l * c1 - 1.0) / l;
  const double u = rate * t - s.c3();
  const double sech = 1.0 / std::cosh(u);
  const double th = std::tanh(u);
  const double gd = std::atan(std::sinh(u));
  const double y = rate * sech;
  const double x = s.c2() + c1 * t - l * rate * th;
  const double z = s.c4() - gd / l - x * y + c1 * gd - 0.5 * l * rate * rate * (sech * th + gd);
  return {x, y, z};
}

PointH3 corrected_tk4(const ClosedFormSpec & s, double t)
{
  const double l = s.lambda;
  const double radius = s.c1();
  const double r2 = radius * radius;
  const double nu = 0.5 * (r2 + static_cast<double>(s.branch) * std::sqrt(r2 * r2 + 2.0 * r2));
  const double phase = s.c3();
  const double th = nu * t + phase;
  const double z = s.c2() - r2 / l * (0.5 * (1.0 + nu) * t + 0.25 * (std::sin(2.0 * th) - std::sin(2.0 * phase)));
  return {radius * std::cos(th), radius / l * std::sin(th), z};
}

}  // namespace

std::string to_string(FamilyId f)
{
  switch (f) {
    case FamilyId::geo_i: return "GEO_I";
    case FamilyId::geo_ii: return "GEO_II";
    case FamilyId::tk1_1: return "TK1_1";
    case FamilyId::tk1_2: return "TK1_2";
    case FamilyId::tk1_3: return "TK1_3";
    case FamilyId::tk2: return "TK2";
    case FamilyId::tk3: return "TK3";
    case FamilyId::tk4: return "TK4";
  }
  return "?";
}

std::string to_string(Variant v)
{
  return v == Variant::printed ? "printed" : "corrected";
}

FamilyId parse_family(const std::string & name)
{
  const std::string n = lowered(name);
  for (FamilyId f : all_families) {
    if (lowered(to_string(f)) == n) return f;
  }
  throw std::invalid_argument("unknown family '" + name + "'");
}

Variant parse_variant(const std::string & name)
{
  const std::string n = lowered(name);
  if (n == "printed") return Variant::printed;
  if (n == "corrected") return Variant::corrected;
  throw std::invalid_argument("unknown variant '" + name + "' (expected printed or corrected)");
}

double effective_c(const ClosedFormSpec & spec)
{
  switch (spec.family) {
    case FamilyId::tk1_1: return 1.0 / spec.lambda;
    case FamilyId::tk1_2: return -1.0 / spec.lambda;
    case FamilyId::tk2:
    case FamilyId::tk3:
    case FamilyId::tk4: return 0.0;
    case FamilyId::geo_i: return spec.c.value_or(0.0);
    case FamilyId::geo_ii:
    case FamilyId::tk1_3: return spec.c.value_or(std::numeric_limits<double>::quiet_NaN());
  }
  return 0.0;
}

void validate(const ClosedFormSpec & spec)
{
  const std::string fam = to_string(spec.family);
  if (!std::isfinite(spec.lambda) || spec.lambda <= 0.0) {
    throw DomainViolation(fam + ": lambda must be finite and > 0");
  }
  for (double v : spec.k) {
    if (!std::isfinite(v)) throw DomainViolation(fam + ": constants must be finite");
  }
  if (spec.c && !std::isfinite(*spec.c)) throw DomainViolation(fam + ": c must be finite");
  if (spec.branch != 1 && spec.branch != -1) throw DomainViolation(fam + ": branch must be +1 or -1");

  const double l = spec.lambda;
  auto fixed_c = [&](double required, const char * rule) {
    if (spec.c && !same_value(*spec.c, required)) {
      throw DomainViolation(fam + ": family fixes " + rule);
    }
  };
  switch (spec.family) {
    case FamilyId::geo_i: break;
    case FamilyId::geo_ii:
      if (!spec.c || *spec.c == 0.0) throw DomainViolation(fam + ": requires c != 0");
      break;
    case FamilyId::tk1_1: fixed_c(1.0 / l, "c = 1/lambda"); break;
    case FamilyId::tk1_2: fixed_c(-1.0 / l, "c = -1/lambda"); break;
    case FamilyId::tk1_3:
      if (!spec.c) throw DomainViolation(fam + ": requires c with |lambda c| > 1");
      if (!(std::abs(l * *spec.c) > 1.0)) {
        throw DomainViolation(fam + ": requires |lambda c| > 1 (got lambda c = " + std::to_string(l * *spec.c) + ")");
      }
      break;
    case FamilyId::tk2: fixed_c(0.0, "c = 0"); break;
    case FamilyId::tk3:
      fixed_c(0.0, "c = 0");
      if (!(2.0 * l * spec.c1() - 1.0 > 0.0)) throw DomainViolation(fam + ": requires 2 lambda c1 - 1 > 0");
      break;
    case FamilyId::tk4: fixed_c(0.0, "c = 0"); break;
  }
}

SystemKind system_for(FamilyId f)
{
  switch (f) {
    case FamilyId::geo_i:
    case FamilyId::geo_ii: return SystemKind::geodesic();
    case FamilyId::tk1_1:
    case FamilyId::tk1_2:
    case FamilyId::tk1_3: return SystemKind::magnetic({KillingField::k1});
    case FamilyId::tk2: return SystemKind::magnetic({KillingField::k2});
    case FamilyId::tk3: return SystemKind::magnetic({KillingField::k3});
    case FamilyId::tk4: return SystemKind::magnetic({KillingField::k4});
  }
  return SystemKind::geodesic();
}

PointH3 eval(const ClosedFormSpec & spec, double t)
{
  validate(spec);
  if (!std::isfinite(t)) throw DomainViolation(to_string(spec.family) + ": t must be finite");
  const double l = spec.lambda;
  PointH3 out;
  if (spec.variant == Variant::printed) {
    switch (spec.family) {
      case FamilyId::geo_i: out = printed_geo_i(spec, t); break;
      case FamilyId::geo_ii: out = printed_geo_ii(spec, t); break;
      case FamilyId::tk1_1: out = printed_tk1_1(spec, t); break;
      case FamilyId::tk1_2: out = printed_tk1_2(spec, t); break;
      case FamilyId::tk1_3: out = printed_tk1_3(spec, t); break;
      case FamilyId::tk2: out = printed_tk2(spec, t); break;
      case FamilyId::tk3: out = printed_tk3(spec, t); break;
      case FamilyId::tk4: out = printed_tk4(spec, t); break;
    }
  } else {
    switch (spec.family) {
      case FamilyId::geo_i: out = corrected_geo_i(spec, t); break;
      case FamilyId::geo_ii: out = helix(l, l * effective_c(spec), effective_c(spec), spec.k, t); break;
      case FamilyId::tk1_1:
      case FamilyId::tk1_3: {
        const double c = effective_c(spec);
        out = helix(l, 1.0 + l * c, c, spec.k, t);
        break;
      }
      case FamilyId::tk1_2: out = corrected_tk1_2(spec, t); break;
      case FamilyId::tk2: out = corrected_tk2(spec, t); break;
      case FamilyId::tk3: out = corrected_tk3(spec, t); break;
      case FamilyId::tk4: out = corrected_tk4(spec, t); break;
    }
  }
  if (!std::isfinite(out.x) || !std::isfinite(out.y) || !std::isfinite(out.z)) {
    throw DomainViolation(to_string(spec.family) + ": non-finite value at t = " + std::to_string(t));
  }
  return out;
}

State to_initial_state(const ClosedFormSpec & spec, double t0)
{
  const PointH3 p = eval(spec, t0);
  const Vec3 v = numdiff::derivative([&](double t) -> Vec3 { return as_vec(eval(spec, t)); }, t0);
  return {p.x, p.y, p.z, v[0], v[1], v[2]};
}

std::optional<double> pole(const ClosedFormSpec & spec)
{
  if (spec.family == FamilyId::tk4 && spec.variant == Variant::printed) {
    return spec.c1() / tk4_rate(spec.lambda);
  }
  return std::nullopt;
}

TimeDomain natural_domain(const ClosedFormSpec & spec)
{
  if (auto tp = pole(spec)) {
    return {*tp - 2.0, *tp - 0.25};
  }
  return {0.0, 2.0};
}

std::vector<FamilyInfo> families()
{
  const std::vector<Variant> both{Variant::printed, Variant::corrected};
  return {
    {FamilyId::geo_i, "c1..c5 real (w = 0)", "geodesic", both,
     "z = -c1 c3 t^2/2 - c2 c3 t + c5"},
    {FamilyId::geo_ii, "c != 0", "geodesic", both, "helix with angular frequency lambda c"},
    {FamilyId::tk1_1, "c = 1/lambda", "k1", both, "helix with angular frequency 2"},
    {FamilyId::tk1_2, "c = -1/lambda", "k1", both, "affine x(t), y(t); z' = -1/lambda - x y'"},
    {FamilyId::tk1_3, "|λc| > 1", "k1", both, "helix with angular frequency 1 + lambda c"},
    {FamilyId::tk2, "c = 0", "k2", both, "x = A cn(Omega t + phi | m), elliptic y and z"},
    {FamilyId::tk3, "c = 0, 2λc1 − 1 > 0", "k3", both,
     "y = s sech(s t - c3), s = sqrt(2 lambda c1 - 1)/lambda"},
    {FamilyId::tk4, "c = 0; printed: (1+λ²)t/(3λ) < c1", "k4", both,
     "circles x = c1 cos(nu t + c3), lambda y = c1 sin(nu t + c3)"},
  };
}

}  // namespace h3mag
