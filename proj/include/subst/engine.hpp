#pragma once

#include "subst/syntax.hpp"

namespace subst {

// The factored substitution calculus: one application operation covers
// renaming and substitution, with the sort lattice tracking which one is
// happening. All operations expect well-formed inputs (see each contract);
// structurally impossible cases throw ContractError.

// Least upper bound on sorts: V only if both are V.
Sort join(Sort q, Sort r);

// Order on sorts: V below T, reflexive.
bool leq(Sort q, Sort r);

// Coerce an expression up the sort order. Identity at equal sorts; wraps a
// variable into a term otherwise. Requires leq(sort_of(x), target).
ExprPtr coerce_expr(Sort target, const ExprPtr& x);

// Entrywise coercion of a whole renaming/substitution.
SubList coerce_sub(Sort target, const SubList& xs);

// x[ys]: apply a substitution or renaming to a variable or term.
// Result sort is join(sort_of(x), ys.sort).
ExprPtr subst_apply(const ExprPtr& x, const SubList& ys);

// xs+A: weaken the source context by A, shifting every entry.
SubList sub_weaken(const SubList& xs, const TyPtr& a);

// xs^A: weaken, then append the new zero variable; the functorial action of
// context extension.
SubList sub_lift(const SubList& xs, const TyPtr& a);

// The least variable at sort q (Zero or `Zero).
ExprPtr zero_at(Sort q);

// Weaken a single variable or term by one binding of type a. The term case
// applies a freshly built identity renaming over ctx, which is why the
// ambient context is an explicit argument.
ExprPtr suc_at(Sort q, const ExprPtr& x, const TyPtr& a, const Con& ctx);

// Identity renaming over ctx (sort V).
SubList id_sub(const Con& ctx);

// xs . ys: composition; ys is applied to every entry of xs.
SubList compose(const SubList& xs, const SubList& ys);

}  // namespace subst
