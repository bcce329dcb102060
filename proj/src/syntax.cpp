#include "subst/syntax.hpp"

#include <algorithm>

namespace subst {

const char* sort_name(Sort s) { return s == Sort::V ? "V" : "T"; }

void contract_fail(const std::string& op, const std::string& what) {
  throw ContractError(op + ": " + what);
}

TyPtr Ty::base() {
  static const TyPtr b(new Ty(Tag::Base, nullptr, nullptr));
  return b;
}

TyPtr Ty::arrow(TyPtr dom, TyPtr cod) {
  if (!dom || !cod) contract_fail("Ty::arrow", "null component");
  return TyPtr(new Ty(Tag::Arrow, std::move(dom), std::move(cod)));
}

bool ty_eq(const TyPtr& a, const TyPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->tag() != b->tag()) return false;
  if (a->tag() == Ty::Tag::Base) return true;
  return ty_eq(a->dom(), b->dom()) && ty_eq(a->cod(), b->cod());
}

int ty_size(const TyPtr& t) {
  if (t->tag() == Ty::Tag::Base) return 1;
  return 1 + ty_size(t->dom()) + ty_size(t->cod());
}

int ty_depth(const TyPtr& t) {
  if (t->tag() == Ty::Tag::Base) return 0;
  return 1 + std::max(ty_depth(t->dom()), ty_depth(t->cod()));
}

Con extend(Con ctx, const TyPtr& ty) {
  ctx.push_back(ty);
  return ctx;
}

Con drop_last(Con ctx) {
  if (ctx.empty()) contract_fail("drop_last", "empty context");
  ctx.pop_back();
  return ctx;
}

bool con_eq(const Con& a, const Con& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!ty_eq(a[k], b[k])) return false;
  return true;
}

int con_nodes(const Con& ctx) {
  int n = 1;
  for (const auto& t : ctx) n += ty_size(t);
  return n;
}

ExprPtr Expr::zero() {
  static const ExprPtr z(new Expr(Tag::Zero, nullptr, nullptr, nullptr));
  return z;
}

ExprPtr Expr::suc(ExprPtr i, TyPtr skipped) {
  if (!i || !skipped) contract_fail("Expr::suc", "null component");
  if (sort_of(i) != Sort::V) contract_fail("Expr::suc", "body must be sort V");
  return ExprPtr(new Expr(Tag::Suc, std::move(i), nullptr, std::move(skipped)));
}

ExprPtr Expr::embed(ExprPtr i) {
  if (!i) contract_fail("Expr::embed", "null body");
  if (sort_of(i) != Sort::V) contract_fail("Expr::embed", "body must be sort V");
  return ExprPtr(new Expr(Tag::Embed, std::move(i), nullptr, nullptr));
}

ExprPtr Expr::app(ExprPtr fn, ExprPtr arg) {
  if (!fn || !arg) contract_fail("Expr::app", "null component");
  if (sort_of(fn) != Sort::T || sort_of(arg) != Sort::T)
    contract_fail("Expr::app", "children must be sort T");
  return ExprPtr(new Expr(Tag::App, std::move(fn), std::move(arg), nullptr));
}

ExprPtr Expr::lam(TyPtr domain, ExprPtr body) {
  if (!domain || !body) contract_fail("Expr::lam", "null component");
  if (sort_of(body) != Sort::T) contract_fail("Expr::lam", "body must be sort T");
  return ExprPtr(new Expr(Tag::Lam, std::move(body), nullptr, std::move(domain)));
}

Sort sort_of(const ExprPtr& e) {
  switch (e->tag()) {
    case Expr::Tag::Zero:
    case Expr::Tag::Suc:
      return Sort::V;
    default:
      return Sort::T;
  }
}

bool expr_eq(const ExprPtr& a, const ExprPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->tag() != b->tag()) return false;
  switch (a->tag()) {
    case Expr::Tag::Zero:
      return true;
    case Expr::Tag::Suc:
      return ty_eq(a->ty(), b->ty()) && expr_eq(a->child(), b->child());
    case Expr::Tag::Embed:
      return expr_eq(a->child(), b->child());
    case Expr::Tag::App:
      return expr_eq(a->child(), b->child()) && expr_eq(a->arg(), b->arg());
    case Expr::Tag::Lam:
      return ty_eq(a->ty(), b->ty()) && expr_eq(a->child(), b->child());
  }
  return false;
}

int expr_size(const ExprPtr& e) {
  switch (e->tag()) {
    case Expr::Tag::Zero:
      return 1;
    case Expr::Tag::Suc:
    case Expr::Tag::Embed:
    case Expr::Tag::Lam:
      return 1 + expr_size(e->child());
    case Expr::Tag::App:
      return 1 + expr_size(e->child()) + expr_size(e->arg());
  }
  return 0;
}

int expr_nodes(const ExprPtr& e) {
  switch (e->tag()) {
    case Expr::Tag::Zero:
      return 1;
    case Expr::Tag::Suc:
      return 1 + expr_nodes(e->child()) + ty_size(e->ty());
    case Expr::Tag::Embed:
      return 1 + expr_nodes(e->child());
    case Expr::Tag::App:
      return 1 + expr_nodes(e->child()) + expr_nodes(e->arg());
    case Expr::Tag::Lam:
      return 1 + expr_nodes(e->child()) + ty_size(e->ty());
  }
  return 0;
}

bool sort_sound(const ExprPtr& e) {
  switch (e->tag()) {
    case Expr::Tag::Zero:
      return true;
    case Expr::Tag::Suc:
    case Expr::Tag::Embed:
      return sort_of(e->child()) == Sort::V && sort_sound(e->child());
    case Expr::Tag::App:
      return sort_of(e->child()) == Sort::T && sort_of(e->arg()) == Sort::T &&
             sort_sound(e->child()) && sort_sound(e->arg());
    case Expr::Tag::Lam:
      return sort_of(e->child()) == Sort::T && sort_sound(e->child());
  }
  return false;
}

std::optional<TyPtr> infer_expr(const Con& ctx, const ExprPtr& e) {
  switch (e->tag()) {
    case Expr::Tag::Zero:
      if (ctx.empty()) return std::nullopt;
      return ctx.back();
    case Expr::Tag::Suc: {
      if (ctx.empty() || !ty_eq(ctx.back(), e->ty())) return std::nullopt;
      return infer_expr(drop_last(ctx), e->child());
    }
    case Expr::Tag::Embed:
      return infer_expr(ctx, e->child());
    case Expr::Tag::App: {
      auto fn = infer_expr(ctx, e->child());
      if (!fn || !(*fn)->is_arrow()) return std::nullopt;
      auto arg = infer_expr(ctx, e->arg());
      if (!arg || !ty_eq((*fn)->dom(), *arg)) return std::nullopt;
      return (*fn)->cod();
    }
    case Expr::Tag::Lam: {
      auto body = infer_expr(extend(ctx, e->ty()), e->child());
      if (!body) return std::nullopt;
      return Ty::arrow(e->ty(), *body);
    }
  }
  return std::nullopt;
}

SubList empty_sub(Sort sort, Con src) {
  return SubList{sort, std::move(src), {}};
}

SubList sub_ext(SubList xs, ExprPtr x) {
  if (sort_of(x) != xs.sort) contract_fail("sub_ext", "entry sort mismatch");
  xs.entries.push_back(std::move(x));
  return xs;
}

SubList sub_drop_last(SubList xs) {
  if (xs.entries.empty()) contract_fail("sub_drop_last", "empty substitution");
  xs.entries.pop_back();
  return xs;
}

bool sub_eq(const SubList& a, const SubList& b) {
  if (a.sort != b.sort || !con_eq(a.src, b.src)) return false;
  if (a.entries.size() != b.entries.size()) return false;
  for (std::size_t k = 0; k < a.entries.size(); ++k)
    if (!expr_eq(a.entries[k], b.entries[k])) return false;
  return true;
}

int sub_nodes(const SubList& xs) {
  int n = 1 + con_nodes(xs.src);
  for (const auto& e : xs.entries) n += expr_nodes(e);
  return n;
}

bool check_sub(const Con& src, const SubList& xs, const Con& tgt) {
  if (!con_eq(xs.src, src)) return false;
  if (xs.entries.size() != tgt.size()) return false;
  for (std::size_t k = 0; k < tgt.size(); ++k) {
    if (sort_of(xs.entries[k]) != xs.sort) return false;
    auto ty = infer_expr(src, xs.entries[k]);
    if (!ty || !ty_eq(*ty, tgt[k])) return false;
  }
  return true;
}

std::optional<Con> sub_target(const SubList& xs) {
  Con tgt;
  for (const auto& e : xs.entries) {
    if (sort_of(e) != xs.sort) return std::nullopt;
    auto ty = infer_expr(xs.src, e);
    if (!ty) return std::nullopt;
    tgt.push_back(*ty);
  }
  return tgt;
}

}  // namespace subst
