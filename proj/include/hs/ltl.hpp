#pragma once

#include <memory>
#include <string>
#include <vector>
#include <set>
#include <map>
#include <stdexcept>
#include <algorithm>

namespace hs {

// Plain LTL over named propositions. Or/Release are first-class so NNF can be
// stored; the automaton construction rewrites them away (see to_core).
enum class LK { True, False, Ap, Not, And, Or, X, U, R };

struct Ltl;
using LtlPtr = std::shared_ptr<const Ltl>;

struct Ltl {
  LK k;
  std::string name;  // Ap
  LtlPtr l, r;
};

inline LtlPtr mk_ltl(LK k, std::string name, LtlPtr l, LtlPtr r) {
  auto n = std::make_shared<Ltl>();
  const_cast<Ltl&>(*n) = Ltl{k, std::move(name), std::move(l), std::move(r)};
  return n;
}
inline LtlPtr ltt() { static LtlPtr v = mk_ltl(LK::True, "", nullptr, nullptr); return v; }
inline LtlPtr lff() { static LtlPtr v = mk_ltl(LK::False, "", nullptr, nullptr); return v; }
inline LtlPtr lap(const std::string& p) { return mk_ltl(LK::Ap, p, nullptr, nullptr); }
inline LtlPtr lnot(LtlPtr a) { return mk_ltl(LK::Not, "", std::move(a), nullptr); }
inline LtlPtr land(LtlPtr a, LtlPtr b) { return mk_ltl(LK::And, "", std::move(a), std::move(b)); }
inline LtlPtr lor(LtlPtr a, LtlPtr b) { return mk_ltl(LK::Or, "", std::move(a), std::move(b)); }
inline LtlPtr lX(LtlPtr a) { return mk_ltl(LK::X, "", std::move(a), nullptr); }
inline LtlPtr lU(LtlPtr a, LtlPtr b) { return mk_ltl(LK::U, "", std::move(a), std::move(b)); }
inline LtlPtr lR(LtlPtr a, LtlPtr b) { return mk_ltl(LK::R, "", std::move(a), std::move(b)); }
inline LtlPtr lF(LtlPtr a) { return lU(ltt(), std::move(a)); }
inline LtlPtr lG(LtlPtr a) { return lR(lff(), std::move(a)); }
inline LtlPtr limp(LtlPtr a, LtlPtr b) { return lor(lnot(std::move(a)), std::move(b)); }
inline LtlPtr liff(LtlPtr a, LtlPtr b) {
  return land(limp(a, b), limp(b, a));
}

// Canonical print; structural equality of formulas is string equality of prints.
inline std::string ltl_str(const LtlPtr& f) {
  switch (f->k) {
    case LK::True: return "true";
    case LK::False: return "false";
    case LK::Ap: return f->name;
    case LK::Not: return "!" + ltl_str(f->l);
    case LK::And: return "(" + ltl_str(f->l) + " & " + ltl_str(f->r) + ")";
    case LK::Or: return "(" + ltl_str(f->l) + " | " + ltl_str(f->r) + ")";
    case LK::X: return "X " + ltl_str(f->l);
    case LK::U: return "(" + ltl_str(f->l) + " U " + ltl_str(f->r) + ")";
    case LK::R: return "(" + ltl_str(f->l) + " R " + ltl_str(f->r) + ")";
  }
  return "";
}

inline bool ltl_eq(const LtlPtr& a, const LtlPtr& b) { return ltl_str(a) == ltl_str(b); }

inline void ltl_props_into(const LtlPtr& f, std::set<std::string>& out) {
  if (f->k == LK::Ap) out.insert(f->name);
  if (f->l) ltl_props_into(f->l, out);
  if (f->r) ltl_props_into(f->r, out);
}
inline std::set<std::string> ltl_props(const LtlPtr& f) {
  std::set<std::string> s;
  ltl_props_into(f, s);
  return s;
}

// Distinct subformulas, keyed by canonical print (post-order).
inline void ltl_subformulas_into(const LtlPtr& f, std::map<std::string, LtlPtr>& out) {
  if (f->l) ltl_subformulas_into(f->l, out);
  if (f->r) ltl_subformulas_into(f->r, out);
  out.emplace(ltl_str(f), f);
}
inline std::map<std::string, LtlPtr> ltl_subformulas(const LtlPtr& f) {
  std::map<std::string, LtlPtr> m;
  ltl_subformulas_into(f, m);
  return m;
}
inline size_t ltl_size(const LtlPtr& f) { return ltl_subformulas(f).size(); }

// Rewrite into the True/Ap/Not/And/X/U core used by the atom construction.
inline LtlPtr to_core(const LtlPtr& f) {
  switch (f->k) {
    case LK::True: return f;
    case LK::False: return lnot(ltt());
    case LK::Ap: return f;
    case LK::Not: return lnot(to_core(f->l));
    case LK::And: return land(to_core(f->l), to_core(f->r));
    case LK::Or: return lnot(land(lnot(to_core(f->l)), lnot(to_core(f->r))));
    case LK::X: return lX(to_core(f->l));
    case LK::U: return lU(to_core(f->l), to_core(f->r));
    case LK::R:
      // a R b = !( !a U !b )
      return lnot(lU(lnot(to_core(f->l)), lnot(to_core(f->r))));
  }
  throw std::logic_error("to_core");
}

// Negation normal form over the full algebra.
inline LtlPtr ltl_nnf(const LtlPtr& f, bool neg = false) {
  switch (f->k) {
    case LK::True: return neg ? lff() : ltt();
    case LK::False: return neg ? ltt() : lff();
    case LK::Ap: return neg ? lnot(f) : f;
    case LK::Not: return ltl_nnf(f->l, !neg);
    case LK::And:
      return neg ? lor(ltl_nnf(f->l, true), ltl_nnf(f->r, true))
                 : land(ltl_nnf(f->l, false), ltl_nnf(f->r, false));
    case LK::Or:
      return neg ? land(ltl_nnf(f->l, true), ltl_nnf(f->r, true))
                 : lor(ltl_nnf(f->l, false), ltl_nnf(f->r, false));
    case LK::X: return lX(ltl_nnf(f->l, neg));
    case LK::U:
      return neg ? lR(ltl_nnf(f->l, true), ltl_nnf(f->r, true))
                 : lU(ltl_nnf(f->l, false), ltl_nnf(f->r, false));
    case LK::R:
      return neg ? lU(ltl_nnf(f->l, true), ltl_nnf(f->r, true))
                 : lR(ltl_nnf(f->l, false), ltl_nnf(f->r, false));
  }
  throw std::logic_error("ltl_nnf");
}

// Stable string hash (FNV-1a), used for generated proposition names.
inline uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) { h ^= c; h *= 1099511628211ull; }
  return h;
}

}  // namespace hs
