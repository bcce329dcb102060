#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace subst {

// Two-point sort lattice: V classifies variables/renamings, T terms/substitutions.
enum class Sort : std::uint8_t { V, T };

const char* sort_name(Sort s);

// Contract violations (ill-formed values reaching internals) throw this.
// User-input validation happens once, at the CLI boundary.
struct ContractError : std::logic_error {
  using std::logic_error::logic_error;
};

[[noreturn]] void contract_fail(const std::string& op, const std::string& what);

class Ty;
using TyPtr = std::shared_ptr<const Ty>;

// Simple types over one base type. Immutable trees, structural equality.
class Ty {
public:
  enum class Tag { Base, Arrow };

  static TyPtr base();
  static TyPtr arrow(TyPtr dom, TyPtr cod);

  Tag tag() const { return tag_; }
  bool is_arrow() const { return tag_ == Tag::Arrow; }
  const TyPtr& dom() const { return dom_; }
  const TyPtr& cod() const { return cod_; }

private:
  Ty(Tag tag, TyPtr dom, TyPtr cod)
      : tag_(tag), dom_(std::move(dom)), cod_(std::move(cod)) {}

  Tag tag_;
  TyPtr dom_, cod_;
};

bool ty_eq(const TyPtr& a, const TyPtr& b);
int ty_size(const TyPtr& t);
int ty_depth(const TyPtr& t);

// A context is a sequence of types; the rightmost entry is the most
// recently bound (the one de Bruijn index zero refers to).
using Con = std::vector<TyPtr>;

Con extend(Con ctx, const TyPtr& ty);
Con drop_last(Con ctx);
bool con_eq(const Con& a, const Con& b);
int con_nodes(const Con& ctx);

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Sort-indexed term. Zero/Suc build variables (sort V); Embed injects a
// variable into terms; App/Lam are term formers (sort T). Factories enforce
// the sort discipline; an Expr value carries no context.
class Expr {
public:
  enum class Tag { Zero, Suc, Embed, App, Lam };

  static ExprPtr zero();
  // suc(i, skipped): the variable i seen through one extra binding of type
  // `skipped`. Requires sort V for i.
  static ExprPtr suc(ExprPtr i, TyPtr skipped);
  // embed(i): variable as a term. Requires sort V for i.
  static ExprPtr embed(ExprPtr i);
  static ExprPtr app(ExprPtr fn, ExprPtr arg);    // both sort T
  static ExprPtr lam(TyPtr domain, ExprPtr body); // body sort T

  Tag tag() const { return tag_; }
  const ExprPtr& child() const { return a_; }  // Suc/Embed body, App fn, Lam body
  const ExprPtr& arg() const { return b_; }    // App argument
  const TyPtr& ty() const { return ty_; }      // Suc skipped type, Lam domain

private:
  Expr(Tag tag, ExprPtr a, ExprPtr b, TyPtr ty)
      : tag_(tag), a_(std::move(a)), b_(std::move(b)), ty_(std::move(ty)) {}

  Tag tag_;
  ExprPtr a_, b_;
  TyPtr ty_;
};

Sort sort_of(const ExprPtr& e);
bool expr_eq(const ExprPtr& a, const ExprPtr& b);
// Number of Expr constructors (type annotations not counted).
int expr_size(const ExprPtr& e);
// Total node count including type annotations; used for recursion budgets.
int expr_nodes(const ExprPtr& e);
// Full-traversal check of the sort discipline (factories already enforce it).
bool sort_sound(const ExprPtr& e);

// Type inference for the well-formedness judgment. Absent result = ill-formed.
std::optional<TyPtr> infer_expr(const Con& ctx, const ExprPtr& e);

// A simultaneous substitution (sort T) or renaming (sort V): one entry per
// target-context variable, rightmost entry for the most recent variable.
// `src` is the source context the entries live in; it is needed to rebuild
// identity renamings when weakening term entries.
struct SubList {
  Sort sort = Sort::V;
  Con src;
  std::vector<ExprPtr> entries;
};

SubList empty_sub(Sort sort, Con src);
SubList sub_ext(SubList xs, ExprPtr x);  // append; x must match xs.sort
SubList sub_drop_last(SubList xs);

bool sub_eq(const SubList& a, const SubList& b);
int sub_nodes(const SubList& xs);

// True iff xs is a well-formed substitution from src to tgt at xs.sort.
bool check_sub(const Con& src, const SubList& xs, const Con& tgt);

// Inferred target context of a well-formed SubList (absent if ill-formed).
std::optional<Con> sub_target(const SubList& xs);

}  // namespace subst
