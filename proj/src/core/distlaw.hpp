#pragma once

#include <vector>

#include "monad.hpp"

namespace catlaw {

// Candidate distributive law of s over t: both monads on the same base,
// lambda_a: S(T a) -> T(S a). Stored as a raw family so naturality is a
// checkable property rather than a type constraint.
struct DistLawCell {
  Monad s;
  Monad t;
  std::vector<ArrId> lambda;
};

// Swapped-composite algebra form: alpha_a: S(T(S a)) -> T(S a).
struct AlgebraFormLaw {
  Monad s;
  Monad t;
  std::vector<ArrId> alpha;
};

// Extension-operator form: per object a an extension-style S-algebra with
// carrier T(S a). lambda may carry a stored family to compare against the
// extracted one; empty means none supplied.
struct DistLawAlgebraExt {
  Monad s;
  Monad t;
  std::vector<ExtAlgebra> algebras;
  std::vector<ArrId> lambda;
};

// Classical checker: naturality, both unit triangles, both multiplication
// pentagons.
Report check_distlaw_monoidal(const DistLawCell& d);
// lambda as a 2-cell: naturality, unit triangles, extension squares probed
// over 2-cells theta: f => Tg and kappa: h => kS with f,g,h,k ranging over
// the word endofunctors {Id,S,T,SS,ST,TS,TT}; the generator instances
// theta = 1_T and kappa = 1_S arise inside the probe family.
Report check_distlaw_noiter_2cat(const DistLawCell& d);
// Pointwise form: unit triangles, the extension square exhaustively over
// every arrow f: a -> Tb, and the right-extension square over natural
// kappa: H => KS with H,K word endofunctors.
Report check_distlaw_noiter_cat(const DistLawCell& d);
// Preconditions: the pointwise form's axioms 1-2. When they hold, naturality
// of lambda must follow; a failure is an internal-consistency alarm.
Report derive_naturality(const DistLawCell& d);

// alpha_a := T(mu'_a) . lambda_{S a} and lambda_a := alpha_a . S(T(eta'_a)),
// computed without validation.
std::vector<ArrId> alpha_from_lambda_raw(const DistLawCell& d);
std::vector<ArrId> lambda_from_alpha_raw(const AlgebraFormLaw& a);
// Validated conversions; the source must pass its law checker.
AlgebraFormLaw lambda_to_alpha(const DistLawCell& d);
DistLawCell alpha_to_lambda(const AlgebraFormLaw& a);

// S-algebra laws for alpha plus the three compatibility diagrams.
Report check_alpha_conditions(const AlgebraFormLaw& a);

// Per-object algebras plus the three extension-form conditions, quantified
// at arrow level.
Report check_distlaw_algebra_ext(const DistLawAlgebraExt& x);
// The mixed characterizations: per-object algebras, algebra-morphism
// condition, unit triangle and extension square for the extracted lambda.
Report check_distlaw_inbetween_2cat(const DistLawAlgebraExt& x);
Report check_distlaw_inbetween_cat(const DistLawAlgebraExt& x);

// Embedding: op_a(f) := alpha_a . S f for every f into T(S a). Unchecked.
DistLawAlgebraExt distlaw_algebra_from_lambda(const DistLawCell& d);
// lambda_a := op_a(T(eta'_a)).
std::vector<ArrId> extract_lambda(const DistLawAlgebraExt& x);

// Composite monad on T.S: unit eta_{S a} . eta'_a, multiplication
// mu_{S a} . T(T(mu'_a)) . T(lambda_{S a}). Input must pass
// check_distlaw_monoidal.
MonadMonoidal compose_monads(const DistLawCell& d);

}  // namespace catlaw
