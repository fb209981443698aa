#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "tzero/padic.hpp"

namespace tzero {

/// Kronecker symbol (D / n) for n >= 1.
int kronecker_symbol(long d, long n);
bool is_squarefree(long n);
bool is_fundamental_discriminant(long d);

/// A Dirichlet character with values in Q_p: every value is a root of unity of
/// order dividing lcm(2, p-1), or zero on residues sharing a factor with the modulus.
///
/// Characters built from Kronecker symbols and Teichmuller powers remember that
/// structure (`kronecker_part`, `teichmuller_exponent`) so they can be rebuilt at a
/// different working precision.
class DirichletCharacter {
 public:
  unsigned long modulus() const { return modulus_; }
  unsigned long conductor() const { return conductor_; }
  /// chi(-1).
  int parity() const { return parity_; }
  bool is_even() const { return parity_ == 1; }
  bool is_odd() const { return parity_ == -1; }
  bool is_trivial() const { return conductor_ == 1; }
  bool is_rational_valued() const { return rational_; }
  const PadicContext& context() const { return ctx_; }

  /// chi(a) for any integer a (reduced mod the modulus).
  const PadicNumber& operator()(long a) const;
  /// chi(a) as -1, 0, 1 for rational-valued characters.
  int sign_at(long a) const;

  /// Fundamental discriminant of the Kronecker factor (1 when absent) and the
  /// exponent of omega, when the character is known to be of that form.
  std::optional<long> kronecker_part() const { return kron_; }
  std::optional<long> teichmuller_exponent() const { return omega_exp_; }

  /// Canonical identifier for rational-valued primitive characters ("trivial",
  /// "kron(-4)", ...); a descriptive label otherwise.
  std::string label() const;

  DirichletCharacter primitive() const;
  DirichletCharacter inverse() const;
  /// The same character with values recomputed in `ctx` (same prime).
  DirichletCharacter rebind(const PadicContext& ctx) const;

 private:
  friend DirichletCharacter make_character(const PadicContext&, unsigned long,
                                           std::vector<PadicNumber>, std::optional<long>,
                                           std::optional<long>);
  DirichletCharacter(const PadicContext& ctx, unsigned long modulus,
                     std::vector<PadicNumber> values);

  PadicContext ctx_;
  unsigned long modulus_ = 1;
  unsigned long conductor_ = 1;
  int parity_ = 1;
  bool rational_ = true;
  std::vector<PadicNumber> values_;
  std::optional<long> kron_;
  std::optional<long> omega_exp_;
};

DirichletCharacter trivial_character(const PadicContext& ctx);
/// The character a -> (D / a) modulo |D| for a fundamental discriminant D.
DirichletCharacter char_from_kronecker(long d, const PadicContext& ctx);
/// omega^i modulo p (trivial, with conductor 1, when (p - 1) | i).
DirichletCharacter char_teichmuller_power(long i, const PadicContext& ctx);
/// Pointwise product on the lcm of the moduli, reduced to its conductor.
DirichletCharacter char_product(const DirichletCharacter& a, const DirichletCharacter& b);

/// Exact Bernoulli number B_n (B_1 = -1/2).
mpq_class bernoulli_number(int n);

/// B_{n,chi} = f^(n-1) sum_{a=1}^{f} chi(a) B_n(a/f), exactly. Requires a
/// rational-valued character; uses the character's modulus as f.
mpq_class gen_bernoulli_rational(int n, const DirichletCharacter& chi);
/// The same quantity in Q_p for any character in scope, with tracked precision.
PadicNumber gen_bernoulli(int n, const DirichletCharacter& chi);

/// L(a, chi) = -B_{1-a,chi} / (1 - a) for a <= 0 (chi rational-valued, primitive).
mpq_class dirichlet_L_nonpositive(int a, const DirichletCharacter& chi);

}  // namespace tzero
