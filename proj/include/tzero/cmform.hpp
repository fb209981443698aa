#pragma once

#include <optional>

#include "tzero/characters.hpp"
#include "tzero/padic.hpp"
#include "tzero/quadfield.hpp"

namespace tzero {

/// y^2 = x^3 + a2 x^2 + a4 x + a6.
struct WeierstrassCurve {
  long a2 = 0;
  long a4 = 0;
  long a6 = 0;
};

/// Discriminant of the cubic's underlying curve, -16 (4 a^3 + 27 b^2) style for general a2.
mpz_class curve_discriminant(const WeierstrassCurve& e);
/// a_p = p + 1 - #E(F_p) by direct enumeration.
long ap_point_count(const WeierstrassCurve& e, unsigned long p);

struct CMFormSpec {
  QuadFieldData field;
  int weight;
  DirichletCharacter nebentypus;
  PadicNumber ap;
  std::optional<long> level;

  unsigned long prime() const { return ap.prime(); }
  /// psi(p) as a p-adic root of unity.
  PadicNumber psi_at_p() const;
};

CMFormSpec cm_spec(const QuadFieldData& field, int weight, const DirichletCharacter& psi,
                   const PadicNumber& ap, std::optional<long> level = std::nullopt);
/// Weight-2 spec with trivial Nebentypus, a_p from point counting.
CMFormSpec cm_spec_from_curve(const WeierstrassCurve& e, const QuadFieldData& field,
                              const PadicContext& ctx, std::optional<long> level = std::nullopt);

struct HeckeRoots {
  PadicNumber alpha;
  PadicNumber beta;
};

HeckeRoots unit_root(const CMFormSpec& spec, const PadicContext& ctx);

}  // namespace tzero
