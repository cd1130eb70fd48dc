#pragma once

#include "hs/ltl.hpp"

#include <functional>
#include <optional>

namespace hs {

// Unified quantifier-free AST for HyperLTL / HyperLTL_S / HyperLTL_C bodies.
// Temporal nodes carry a Gamma subscript (empty = plain); Ctx is the context
// modality <C>. An S-body has no Ctx nodes; a C-body has only empty subscripts.
enum class HK { True, False, At, Not, And, Or, X, U, R, Ctx };

struct Hf;
using HfPtr = std::shared_ptr<const Hf>;

// Gamma subscripts are kept sorted by canonical print and deduplicated.
using GammaSet = std::vector<LtlPtr>;

inline GammaSet mk_gamma(std::vector<LtlPtr> fs) {
  std::sort(fs.begin(), fs.end(),
            [](const LtlPtr& a, const LtlPtr& b) { return ltl_str(a) < ltl_str(b); });
  fs.erase(std::unique(fs.begin(), fs.end(),
                       [](const LtlPtr& a, const LtlPtr& b) { return ltl_eq(a, b); }),
           fs.end());
  return fs;
}
inline std::string gamma_str(const GammaSet& g) {
  std::string s = "{";
  for (size_t i = 0; i < g.size(); ++i) s += (i ? ", " : "") + ltl_str(g[i]);
  return s + "}";
}
inline bool gamma_eq(const GammaSet& a, const GammaSet& b) { return gamma_str(a) == gamma_str(b); }

struct Hf {
  HK k;
  std::string prop, var;        // At
  GammaSet gamma;               // X/U/R subscript
  std::vector<std::string> ctx; // Ctx (sorted, nonempty)
  HfPtr l, r;
};

inline HfPtr mk_hf(Hf n) { return std::make_shared<Hf>(std::move(n)); }
inline HfPtr htt() { static HfPtr v = mk_hf({HK::True, "", "", {}, {}, nullptr, nullptr}); return v; }
inline HfPtr hff() { static HfPtr v = mk_hf({HK::False, "", "", {}, {}, nullptr, nullptr}); return v; }
inline HfPtr hat(const std::string& p, const std::string& x) {
  return mk_hf({HK::At, p, x, {}, {}, nullptr, nullptr});
}
inline HfPtr hnot(HfPtr a) { return mk_hf({HK::Not, "", "", {}, {}, std::move(a), nullptr}); }
inline HfPtr hand(HfPtr a, HfPtr b) { return mk_hf({HK::And, "", "", {}, {}, std::move(a), std::move(b)}); }
inline HfPtr hor(HfPtr a, HfPtr b) { return mk_hf({HK::Or, "", "", {}, {}, std::move(a), std::move(b)}); }
inline HfPtr himp(HfPtr a, HfPtr b) { return hor(hnot(std::move(a)), std::move(b)); }
inline HfPtr hiff(HfPtr a, HfPtr b) { return hand(himp(a, b), himp(b, a)); }
inline HfPtr hX(GammaSet g, HfPtr a) {
  return mk_hf({HK::X, "", "", std::move(g), {}, std::move(a), nullptr});
}
inline HfPtr hU(GammaSet g, HfPtr a, HfPtr b) {
  return mk_hf({HK::U, "", "", std::move(g), {}, std::move(a), std::move(b)});
}
inline HfPtr hR(GammaSet g, HfPtr a, HfPtr b) {
  return mk_hf({HK::R, "", "", std::move(g), {}, std::move(a), std::move(b)});
}
inline HfPtr hF(GammaSet g, HfPtr a) { return hU(std::move(g), htt(), std::move(a)); }
inline HfPtr hG(GammaSet g, HfPtr a) { return hR(std::move(g), hff(), std::move(a)); }
inline HfPtr hctx(std::vector<std::string> c, HfPtr a) {
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  if (c.empty()) throw std::invalid_argument("empty context set");
  return mk_hf({HK::Ctx, "", "", {}, std::move(c), std::move(a), nullptr});
}

inline std::string hf_str(const HfPtr& f) {
  auto sub = [&](const GammaSet& g) { return g.empty() ? std::string() : "[" + gamma_str(g) + "]"; };
  switch (f->k) {
    case HK::True: return "true";
    case HK::False: return "false";
    case HK::At: return f->prop + "[" + f->var + "]";
    case HK::Not: return "!" + hf_str(f->l);
    case HK::And: return "(" + hf_str(f->l) + " & " + hf_str(f->r) + ")";
    case HK::Or: return "(" + hf_str(f->l) + " | " + hf_str(f->r) + ")";
    case HK::X: return "X" + sub(f->gamma) + " " + hf_str(f->l);
    case HK::U: return "(" + hf_str(f->l) + " U" + sub(f->gamma) + " " + hf_str(f->r) + ")";
    case HK::R: return "(" + hf_str(f->l) + " R" + sub(f->gamma) + " " + hf_str(f->r) + ")";
    case HK::Ctx: {
      std::string s = "<{";
      for (size_t i = 0; i < f->ctx.size(); ++i) s += (i ? ", " : "") + f->ctx[i];
      return s + "}> " + hf_str(f->l);
    }
  }
  return "";
}
inline bool hf_eq(const HfPtr& a, const HfPtr& b) { return hf_str(a) == hf_str(b); }

struct Quant {
  bool forall;
  std::string var;
};

struct Sentence {
  std::vector<Quant> prefix;
  HfPtr body;
};

inline std::string sentence_str(const Sentence& s) {
  std::string out;
  for (auto& q : s.prefix) out += (q.forall ? "forall " : "exists ") + q.var + ". ";
  return out + hf_str(s.body);
}

inline void hf_vars_into(const HfPtr& f, std::set<std::string>& out) {
  if (f->k == HK::At) out.insert(f->var);
  if (f->l) hf_vars_into(f->l, out);
  if (f->r) hf_vars_into(f->r, out);
}
inline std::set<std::string> hf_vars(const HfPtr& f) {
  std::set<std::string> s;
  hf_vars_into(f, s);
  return s;
}

inline bool has_ctx(const HfPtr& f) {
  if (f->k == HK::Ctx) return true;
  if (f->l && has_ctx(f->l)) return true;
  if (f->r && has_ctx(f->r)) return true;
  return false;
}
inline bool all_gamma_empty(const HfPtr& f) {
  if ((f->k == HK::X || f->k == HK::U || f->k == HK::R) && !f->gamma.empty()) return false;
  if (f->l && !all_gamma_empty(f->l)) return false;
  if (f->r && !all_gamma_empty(f->r)) return false;
  return true;
}
inline bool is_s_body(const HfPtr& f) { return !has_ctx(f); }
inline bool is_c_body(const HfPtr& f) { return all_gamma_empty(f); }
inline bool is_plain_body(const HfPtr& f) { return is_s_body(f) && is_c_body(f); }

// Negation normal form; negation pushed onto relativized atoms.
// not X_G a = X_G (not a); not <C> a = <C> (not a); U_G / R_G are duals.
inline HfPtr to_nnf(const HfPtr& f, bool neg = false) {
  switch (f->k) {
    case HK::True: return neg ? hff() : htt();
    case HK::False: return neg ? htt() : hff();
    case HK::At: return neg ? hnot(f) : f;
    case HK::Not: return to_nnf(f->l, !neg);
    case HK::And:
      return neg ? hor(to_nnf(f->l, true), to_nnf(f->r, true))
                 : hand(to_nnf(f->l, false), to_nnf(f->r, false));
    case HK::Or:
      return neg ? hand(to_nnf(f->l, true), to_nnf(f->r, true))
                 : hor(to_nnf(f->l, false), to_nnf(f->r, false));
    case HK::X: return hX(f->gamma, to_nnf(f->l, neg));
    case HK::U:
      return neg ? hR(f->gamma, to_nnf(f->l, true), to_nnf(f->r, true))
                 : hU(f->gamma, to_nnf(f->l, false), to_nnf(f->r, false));
    case HK::R:
      return neg ? hU(f->gamma, to_nnf(f->l, true), to_nnf(f->r, true))
                 : hR(f->gamma, to_nnf(f->l, false), to_nnf(f->r, false));
    case HK::Ctx: return hctx(f->ctx, to_nnf(f->l, neg));
  }
  throw std::logic_error("to_nnf");
}

// Size: distinct subformulas, plus (for S-bodies) distinct LTL subformulas
// occurring in subscripts. C-bodies count distinct subformulas only.
inline size_t size_of(const HfPtr& f) {
  std::set<std::string> subs;
  std::map<std::string, LtlPtr> ltls;
  std::function<void(const HfPtr&)> go = [&](const HfPtr& n) {
    if (n->l) go(n->l);
    if (n->r) go(n->r);
    for (auto& g : n->gamma) ltl_subformulas_into(g, ltls);
    subs.insert(hf_str(n));
  };
  go(f);
  return subs.size() + ltls.size();
}

inline HfPtr erase_subscripts(const HfPtr& f) {
  Hf n = *f;
  n.gamma.clear();
  if (f->l) n.l = erase_subscripts(f->l);
  if (f->r) n.r = erase_subscripts(f->r);
  return mk_hf(std::move(n));
}
inline Sentence erase_subscripts(const Sentence& s) {
  return Sentence{s.prefix, erase_subscripts(s.body)};
}

inline size_t alternation_depth(const Sentence& s) {
  size_t d = 0;
  for (size_t i = 1; i < s.prefix.size(); ++i)
    if (s.prefix[i].forall != s.prefix[i - 1].forall) ++d;
  return d;
}

// Leaf decomposition of the Boolean skeleton: leaves are At or temporal nodes.
inline void boolean_leaves(const HfPtr& f, std::vector<HfPtr>& out) {
  switch (f->k) {
    case HK::True:
    case HK::False:
      return;
    case HK::Not:
      boolean_leaves(f->l, out);
      return;
    case HK::And:
    case HK::Or:
      boolean_leaves(f->l, out);
      boolean_leaves(f->r, out);
      return;
    default:
      out.push_back(f);
  }
}

inline void subscripts_into(const HfPtr& f, std::vector<GammaSet>& out) {
  if (f->k == HK::X || f->k == HK::U || f->k == HK::R) out.push_back(f->gamma);
  if (f->l) subscripts_into(f->l, out);
  if (f->r) subscripts_into(f->r, out);
}

struct FragmentInfo {
  size_t alternation = 0;
  bool is_hyperltl = false;
  bool is_simple_s = false;
  bool is_bounded_c = false;
  bool is_exists_only = false;
  GammaSet gamma_prime;  // witnessing uniform subscript when is_simple_s
  size_t k = 0;          // synchrony bound size+1 when is_bounded_c
  std::string rationale;
};

// Simple S-body: Boolean combination of (a) parts whose every subscript equals
// one fixed Gamma' and (b) one-variable parts (arbitrary subscripts).
// Returns Gamma' when simple.
inline std::optional<GammaSet> simple_s_gamma(const HfPtr& body) {
  if (!is_s_body(body)) return std::nullopt;
  std::vector<HfPtr> leaves;
  boolean_leaves(body, leaves);
  std::optional<GammaSet> gp;
  for (auto& lf : leaves) {
    if (hf_vars(lf).size() <= 1) continue;  // one-variable part
    std::vector<GammaSet> subs;
    subscripts_into(lf, subs);
    for (auto& g : subs) {
      if (!gp) gp = g;
      else if (!gamma_eq(*gp, g)) return std::nullopt;
    }
  }
  if (!gp) gp = GammaSet{};
  return gp;
}

// Bounded C-body: every U/R occurs only under contexts global for it (the
// innermost enclosing context contains all trace variables of the node).
inline bool bounded_c_check(const HfPtr& f, const std::optional<std::set<std::string>>& ctx) {
  if (f->k == HK::U || f->k == HK::R) {
    if (ctx) {
      for (auto& v : hf_vars(f))
        if (!ctx->count(v)) return false;
    }
  }
  if (f->k == HK::Ctx) {
    std::set<std::string> c(f->ctx.begin(), f->ctx.end());
    return bounded_c_check(f->l, c);
  }
  if (f->l && !bounded_c_check(f->l, ctx)) return false;
  if (f->r && !bounded_c_check(f->r, ctx)) return false;
  return true;
}

inline FragmentInfo classify(const Sentence& s) {
  FragmentInfo fi;
  fi.alternation = alternation_depth(s);
  fi.is_hyperltl = is_plain_body(s.body);
  fi.is_exists_only = std::all_of(s.prefix.begin(), s.prefix.end(),
                                  [](const Quant& q) { return !q.forall; });
  if (is_s_body(s.body)) {
    auto gp = simple_s_gamma(s.body);
    if (gp) {
      fi.is_simple_s = true;
      fi.gamma_prime = *gp;
    }
  }
  if (is_c_body(s.body)) {
    // Top level evaluates under the global context VAR.
    if (bounded_c_check(s.body, std::nullopt)) {
      fi.is_bounded_c = true;
      fi.k = size_of(s.body) + 1;
    }
  }
  std::string why;
  if (fi.is_hyperltl) why = "plain HyperLTL (no contexts, all subscripts empty)";
  else if (fi.is_simple_s)
    why = "simple HyperLTL_S with Gamma' = " + gamma_str(fi.gamma_prime);
  else if (fi.is_bounded_c)
    why = "bounded HyperLTL_C with k = " + std::to_string(fi.k);
  else if (fi.is_exists_only)
    why = "exists-only prefix outside the decidable fragments";
  else
    why = "outside all decidable fragments";
  fi.rationale = why;
  return fi;
}

}  // namespace hs
