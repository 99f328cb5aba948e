#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "h3mag/dynamics.hpp"

/*
 * Explicit curve families of the geodesic and K1–K4 magnetic flows.
 *
 * Every family ships in two variants:
 *
 *  - `printed`: a literal transcription of the printed formula, kept even
 *    where it does not solve its system, so that the residual oracle can
 *    measure it;
 *  - `corrected`: a family derived from the Levi-Civita Lorentz equation
 *    that passes the oracle. The constants play analogous roles (amplitudes,
 *    offsets) but the curves generally differ from the printed ones.
 *
 * Corrected families:
 *
 *  | family | system | curve |
 *  |--------|--------|-------|
 *  | GEO_I  | geodesic, w = 0 | x, y affine; z = −c1c3 t²/2 − c2c3 t + c5 |
 *  | GEO_II | geodesic, w = c | helix of angular frequency λc |
 *  | TK1_1  | K1, c = 1/λ | helix of angular frequency 2 |
 *  | TK1_2  | K1, c = −1/λ | affine x, y (the Lorentz force cancels the w-coupling) |
 *  | TK1_3  | K1, \|λc\| > 1 | helix of angular frequency 1 + λc |
 *  | TK2    | K2, c = 0 | x = A cn(Ωt + φ \| m), y and z from closed elliptic integrals |
 *  | TK3    | K3, c = 0 | homoclinic y = s sech(st − c3), s = √(2λc1 − 1)/λ |
 *  | TK4    | K4, c = 0 | uniform circles x = R cos θ, λy = R sin θ |
 */

namespace h3mag {

enum class FamilyId { geo_i, geo_ii, tk1_1, tk1_2, tk1_3, tk2, tk3, tk4 };
enum class Variant { printed, corrected };

inline constexpr std::array<FamilyId, 8> all_families = {
  FamilyId::geo_i, FamilyId::geo_ii, FamilyId::tk1_1, FamilyId::tk1_2,
  FamilyId::tk1_3, FamilyId::tk2,    FamilyId::tk3,   FamilyId::tk4};

std::string to_string(FamilyId f);
std::string to_string(Variant v);
/// Case-insensitive; accepts "GEO_I", "tk1_3", ... Throws std::invalid_argument.
FamilyId parse_family(const std::string & name);
Variant parse_variant(const std::string & name);

/// Raised for invalid constants or evaluation outside a family's real domain.
class DomainViolation : public std::domain_error
{
public:
  using std::domain_error::domain_error;
};

struct ClosedFormSpec
{
  FamilyId family = FamilyId::geo_i;
  Variant variant = Variant::corrected;
  double lambda = 1.0;
  /// First-integral constant. Required by GEO_II and TK1_3; fixed by the
  /// family elsewhere (an explicit value must then agree).
  std::optional<double> c;
  /// c1..c5
  std::array<double, 5> k{};
  /// ±1; only TK4 reads it.
  int branch = 1;

  double c1() const { return k[0]; }
  double c2() const { return k[1]; }
  double c3() const { return k[2]; }
  double c4() const { return k[3]; }
  double c5() const { return k[4]; }
};

/// Throws DomainViolation when the constants are inadmissible.
void validate(const ClosedFormSpec & spec);

/// The first-integral constant actually used (1/λ for TK1_1, 0 for TK2–TK4, ...).
double effective_c(const ClosedFormSpec & spec);

/// The magnetic or geodesic system whose solutions the family describes.
SystemKind system_for(FamilyId f);

/// Throws DomainViolation (invalid constants, pole, complex values).
PointH3 eval(const ClosedFormSpec & spec, double t);

/// Position from eval and velocity from a Richardson-extrapolated central
/// difference of eval.
State to_initial_state(const ClosedFormSpec & spec, double t0);

struct TimeDomain
{
  double t_min = 0.0;
  double t_max = 2.0;
};

/// The interval on which the family is checked by default.
TimeDomain natural_domain(const ClosedFormSpec & spec);

/// Location of the singular time, if the variant has one (printed TK4).
std::optional<double> pole(const ClosedFormSpec & spec);

struct FamilyInfo
{
  FamilyId id;
  std::string constraints;
  std::string system;
  std::vector<Variant> variants;
  std::string corrected_summary;
};

std::vector<FamilyInfo> families();

}  // namespace h3mag
