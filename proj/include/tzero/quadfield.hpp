#pragma once

#include <array>
#include <string>
#include <vector>

#include "tzero/padic.hpp"

namespace tzero {

/// Invariants of the imaginary quadratic field Q(sqrt(-d)).
struct QuadFieldData {
  long d = 1;           // squarefree, positive
  long disc = -4;       // fundamental discriminant D < 0
  long class_number = 1;
  int roots_of_unity = 4;
};

enum class Splitting { split, inert, ramified };
std::string to_string(Splitting s);

/// Which Hensel lift of sqrt(D) fixes the embedding: the lift reducing to the least
/// positive square root of D mod p, or its negative.
enum class SqrtLift { least_residue, opposite };
std::string to_string(SqrtLift s);

QuadFieldData quad_field_data(long d);
/// Field data for a negative fundamental discriminant.
QuadFieldData quad_field_from_discriminant(long disc);

/// Reduced forms (a, b, c) of discriminant D < 0: |b| <= a <= c, b >= 0 when |b| = a or a = c.
std::vector<std::array<long, 3>> reduced_forms(long disc);

Splitting split_behavior(const QuadFieldData& field, unsigned long p);

/// (x, y) with pi = (x + y sqrt(D)) / 2.
struct NormRepresentation {
  long x = 0;
  long y = 0;
};

/// All solutions of x^2 - D y^2 = 4 p^h with y > 0 and x = yD mod 2, excluding those
/// with p dividing both coordinates. Ordered by y, then x.
std::vector<NormRepresentation> norm_representations(const QuadFieldData& field, unsigned long p);

PadicNumber sqrt_discriminant(const QuadFieldData& field, const PadicContext& ctx,
                              SqrtLift lift = SqrtLift::least_residue);

/// Split-prime package. `pibar` is the conjugate whose image under the embedding is a
/// p-adic unit; `pi` is the other one (valuation h_F).
struct SplitPrimeData {
  unsigned long p = 0;
  SqrtLift lift = SqrtLift::least_residue;
  PadicNumber sqrt_disc;
  NormRepresentation pi_coords;
  NormRepresentation pibar_coords;
  PadicNumber pi_image;
  PadicNumber pibar_image;
  PadicNumber log_pibar;
};

SplitPrimeData pi_bar(const QuadFieldData& field, const PadicContext& ctx,
                      SqrtLift lift = SqrtLift::least_residue);
SplitPrimeData pi_bar_from(const QuadFieldData& field, const PadicContext& ctx,
                           const NormRepresentation& rep, SqrtLift lift = SqrtLift::least_residue);

}  // namespace tzero
