#include "qkp/grassmannian.hpp"

#include <algorithm>

namespace qkp {

GrClass GrClass::basis_class(RootSystemPtr rs, const AffineWeylElt& w) {
  GrClass x(rs);
  x.add_term(w, GroupAlgElt::one(x.rs_->rank()));
  return x;
}

void GrClass::add_term(const AffineWeylElt& w, const GroupAlgElt& coeff) {
  if (!rs_) throw Error("class has no root system");
  if (w.root_system()->type() != rs_->type())
    throw DimensionError("affine element from a different root system");
  if (coeff.rank() != rs_->rank() || coeff.q_mode())
    throw DimensionError("coefficient must lie in C[P]");
  if (!is_waf_minus(w))
    throw PreconditionError("index " + w.to_string() + " is not in W_af^-");
  if (coeff.is_zero()) return;
  Key key{w.finite().key(), w.translation().coords};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), std::make_pair(w, coeff));
  } else {
    it->second.second += coeff;
    if (it->second.second.is_zero()) terms_.erase(it);
  }
}

GrClass& GrClass::operator+=(const GrClass& o) {
  if (!rs_) return *this = o;
  for (const auto& [key, term] : o.terms_) add_term(term.first, term.second);
  return *this;
}

GrClass& GrClass::operator-=(const GrClass& o) {
  if (!rs_) *this = GrClass(o.rs_);
  for (const auto& [key, term] : o.terms_) add_term(term.first, -term.second);
  return *this;
}

GrClass GrClass::scale(const GroupAlgElt& c) const {
  GrClass out(rs_);
  if (c.is_zero()) return out;
  for (const auto& [key, term] : terms_) out.add_term(term.first, term.second * c);
  return out;
}

std::vector<std::pair<AffineWeylElt, GroupAlgElt>> GrClass::sorted_terms() const {
  std::vector<std::pair<AffineWeylElt, GroupAlgElt>> out;
  for (const auto& [key, term] : terms_) out.push_back(term);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    Int la = a.first.length(), lb = b.first.length();
    if (la != lb) return la < lb;
    if (a.first.finite().word() != b.first.finite().word())
      return a.first.finite().word() < b.first.finite().word();
    return a.first.translation() < b.first.translation();
  });
  return out;
}

std::string GrClass::render() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, coeff] : sorted_terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + coeff.render() + ") [Gr " + w.to_string() + "]";
  }
  return out;
}

GrClass pontryagin_translate(const GrClass& x, const CorootVec& beta) {
  const auto& rs = x.root_system();
  if (!rs->is_strictly_antidominant(beta))
    throw PreconditionError("translation coroot " + beta.to_string() +
                            " is not strictly antidominant");
  GrClass out(rs);
  AffineWeylElt t = AffineWeylElt::translation(rs, beta);
  for (const auto& [w, coeff] : x.sorted_terms()) out.add_term(w * t, coeff);
  return out;
}

LocalizedGrClass::LocalizedGrClass(GrClass numerator, std::vector<CorootVec> denom_chain)
    : num_(std::move(numerator)), chain_(std::move(denom_chain)) {
  const auto& rs = num_.root_system();
  if (!rs) throw Error("localized class has no root system");
  denom_ = CorootVec::zero(rs->rank());
  for (const auto& step : chain_) {
    if (!rs->is_strictly_antidominant(step))
      throw PreconditionError("denominator step " + step.to_string() +
                              " is not strictly antidominant");
    denom_ += step;
  }
}

LocalizedGrClass LocalizedGrClass::from_numerator(GrClass numerator) {
  return LocalizedGrClass(std::move(numerator), {});
}

LocalizedGrClass LocalizedGrClass::translated_by(const CorootVec& gamma) const {
  std::vector<CorootVec> chain = chain_;
  chain.push_back(gamma);
  return LocalizedGrClass(pontryagin_translate(num_, gamma), std::move(chain));
}

bool LocalizedGrClass::equals(const LocalizedGrClass& o) const {
  GrClass a = o.denom_.is_zero() ? num_ : pontryagin_translate(num_, o.denom_);
  GrClass b = denom_.is_zero() ? o.num_ : pontryagin_translate(o.num_, denom_);
  return a == b;
}

std::string LocalizedGrClass::render() const {
  return num_.render() + " / [Gr e * t" + denom_.to_string() + "]";
}

CorootVec deep_antidominant(const RootSystem& rs) {
  CorootVec sum = CorootVec::zero(rs.rank());
  for (const auto& root : rs.positive_roots()) sum += root.coroot;
  return -sum;
}

KClass peterson_phi(const LocalizedGrClass& x) {
  const auto& rs = x.numerator().root_system();

  // Translate until every numerator index u t_{b1} has b1 strictly
  // antidominant (the decomposition required by the localized basis rule).
  LocalizedGrClass shifted = x;
  CorootVec deep = deep_antidominant(*rs);
  for (;;) {
    bool ok = true;
    for (const auto& [w, coeff] : shifted.numerator().sorted_terms())
      if (!rs->is_strictly_antidominant(w.translation())) {
        ok = false;
        break;
      }
    if (ok) break;
    shifted = shifted.translated_by(deep);
  }

  auto space = ModuleSpace::make(rs, ParabolicSubset::empty(rs->rank()), false, true);
  KClass out(space);
  for (const auto& [w, coeff] : shifted.numerator().sorted_terms()) {
    int rep = space->coset->rep_id(w.finite());
    out.add_term(rep, w.translation() - shifted.denom(), coeff);
  }
  return out;
}

KClass eta_J(const LocalizedGrClass& x, const ParabolicSubset& J) {
  return phi_project(peterson_phi(x), J);
}

LocalizedGrClass peterson_phi_inverse(const KClass& x) {
  const ModuleSpace& space = *x.space();
  if (!space.J.members().empty())
    throw PreconditionError("Phi^{-1} lifts classes over the full flag manifold only");
  const auto& rs = space.rs;
  CorootVec deep = deep_antidominant(*rs);

  // Common denominator m * deep with every b2 + beta strictly antidominant.
  int m = 1;
  for (;;) {
    CorootVec denom = deep * Int(m);
    bool ok = true;
    for (const auto& [key, coeff] : x.terms())
      if (!rs->is_strictly_antidominant(denom + CorootVec(key.nov))) {
        ok = false;
        break;
      }
    if (ok) break;
    ++m;
  }
  CorootVec denom = deep * Int(m);
  std::vector<CorootVec> chain(m, deep);

  GrClass num(rs);
  for (const auto& [key, coeff] : x.terms())
    num.add_term(AffineWeylElt(space.coset->rep(key.rep), denom + CorootVec(key.nov)), coeff);
  return LocalizedGrClass(std::move(num), std::move(chain));
}

LocalizedGrClass pontryagin_product_loc(const LocalizedGrClass& x, const LocalizedGrClass& y,
                                        const QKRing& ring) {
  if (!ring.space()->J.members().empty())
    throw UnsupportedError("the localized Pontryagin product needs the full-flag ring");
  if (ring.space()->rs->type() != x.numerator().root_system()->type())
    throw UnsupportedError("no star table for type " +
                           x.numerator().root_system()->type().to_string());
  return peterson_phi_inverse(ring.star(peterson_phi(x), peterson_phi(y)));
}

}  // namespace qkp
