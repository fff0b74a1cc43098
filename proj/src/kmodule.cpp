#include "qkp/kmodule.hpp"

#include <algorithm>

namespace qkp {

using json = nlohmann::ordered_json;

std::shared_ptr<const ModuleSpace> ModuleSpace::make(RootSystemPtr rs, ParabolicSubset J,
                                                     bool q_mode, bool localized,
                                                     Basis basis) {
  auto space = std::make_shared<ModuleSpace>();
  space->rs = rs;
  space->J = J;
  space->coset = std::make_shared<CosetSpace>(rs, J);
  space->q_mode = q_mode;
  space->localized = localized;
  space->basis = basis;
  return space;
}

bool ModuleSpace::same_space(const ModuleSpace& o) const {
  return rs->type() == o.rs->type() && J == o.J && q_mode == o.q_mode &&
         localized == o.localized && basis == o.basis;
}

KClass KClass::basis_class(ModuleSpacePtr space, int rep_id, const CorootVec& beta,
                           GroupAlgElt coeff) {
  KClass x(space);
  x.add_term(rep_id, beta, coeff);
  return x;
}

KClass KClass::basis_class(ModuleSpacePtr space, int rep_id) {
  const RootSystem& rs = *space->rs;
  GroupAlgElt one = GroupAlgElt::one(rs.rank(), space->q_mode);
  return basis_class(std::move(space), rep_id, CorootVec::zero(rs.rank()), std::move(one));
}

KClass KClass::identity_class(ModuleSpacePtr space) { return basis_class(std::move(space), 0); }

void KClass::add_term(int rep_id, const CorootVec& beta, const GroupAlgElt& coeff) {
  if (!space_) throw Error("class has no module space");
  if (rep_id < 0 || rep_id >= space_->dim()) throw DimensionError("basis index out of range");
  if (coeff.rank() != space_->rs->rank() || coeff.q_mode() != space_->q_mode)
    throw DimensionError("coefficient does not match module descriptor");
  for (int j : space_->J.members())
    if (beta.coords[j] != 0) throw DimensionError("Novikov exponent supported on J");
  if (!space_->localized && !beta.is_nonnegative())
    throw ModeError("negative Novikov exponent in unlocalized module");
  if (coeff.is_zero()) return;
  Key key{rep_id, beta.coords};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

namespace {
void check_same_space(const KClass& a, const KClass& b) {
  if (!a.space() || !b.space() || !a.space()->same_space(*b.space()))
    throw DimensionError("module space mismatch");
}
}  // namespace

KClass& KClass::operator+=(const KClass& o) {
  if (is_zero() && !space_) return *this = o;
  check_same_space(*this, o);
  for (const auto& [key, coeff] : o.terms_) add_term(key.rep, CorootVec(key.nov), coeff);
  return *this;
}

KClass& KClass::operator-=(const KClass& o) {
  if (is_zero() && !space_) *this = KClass(o.space_);
  check_same_space(*this, o);
  for (const auto& [key, coeff] : o.terms_) add_term(key.rep, CorootVec(key.nov), -coeff);
  return *this;
}

KClass KClass::operator-() const {
  KClass out(space_);
  for (const auto& [key, coeff] : terms_) out.terms_.emplace(key, -coeff);
  return out;
}

KClass KClass::scale(const GroupAlgElt& c) const {
  KClass out(space_);
  if (c.is_zero()) return out;
  for (const auto& [key, coeff] : terms_) out.add_term(key.rep, CorootVec(key.nov), coeff * c);
  return out;
}

KClass KClass::scale(const Rat& c) const {
  KClass out(space_);
  if (c == 0) return out;
  for (const auto& [key, coeff] : terms_) out.terms_.emplace(key, coeff * c);
  return out;
}

KClass KClass::novikov_shift(const CorootVec& beta) const {
  KClass out(space_);
  for (const auto& [key, coeff] : terms_)
    out.add_term(key.rep, CorootVec(key.nov) + beta, coeff);
  return out;
}

GroupAlgElt KClass::coeff(int rep_id, const CorootVec& beta) const {
  auto it = terms_.find(Key{rep_id, beta.coords});
  if (it == terms_.end()) return GroupAlgElt::zero(space_->rs->rank(), space_->q_mode);
  return it->second;
}

KClass KClass::novikov_zero_part() const {
  KClass out(space_);
  for (const auto& [key, coeff] : terms_) {
    bool zero = std::all_of(key.nov.begin(), key.nov.end(),
                            [](const Int& c) { return c == 0; });
    if (zero) out.terms_.emplace(key, coeff);
  }
  return out;
}

std::vector<FracElt> KClass::to_vector() const {
  RingDesc desc = space_->coeff_desc();
  std::vector<FracElt> v(space_->dim(), FracElt::zero(desc));
  std::vector<NovikovPoly> acc(space_->dim(), NovikovPoly::zero(desc));
  for (const auto& [key, coeff] : terms_) {
    CorootVec beta(key.nov);
    acc[key.rep] += NovikovPoly::from_scalar(desc, coeff, &beta);
  }
  for (int i = 0; i < space_->dim(); ++i) v[i] = FracElt(acc[i]);
  return v;
}

KClass KClass::from_poly_vector(ModuleSpacePtr space, const std::vector<NovikovPoly>& v) {
  if (static_cast<int>(v.size()) != space->dim())
    throw DimensionError("vector length mismatch");
  KClass out(space);
  for (int rep = 0; rep < space->dim(); ++rep)
    for (const auto& beta : v[rep].novikov_support())
      out.add_term(rep, beta, v[rep].group_coeff(beta));
  return out;
}

KClass KClass::from_vector(ModuleSpacePtr space, const std::vector<FracElt>& v) {
  std::vector<NovikovPoly> polys;
  polys.reserve(v.size());
  for (const auto& f : v) {
    if (!f.is_polynomial())
      throw NonpolynomialError("class coordinate has a residual denominator: " + f.render());
    polys.push_back(f.as_polynomial(true));
  }
  return from_poly_vector(std::move(space), polys);
}

std::vector<std::pair<AffineWeylElt, GroupAlgElt>> KClass::affine_terms() const {
  std::vector<std::pair<AffineWeylElt, GroupAlgElt>> out;
  for (const auto& [key, coeff] : terms_)
    out.emplace_back(AffineWeylElt(space_->coset->rep(key.rep), CorootVec(key.nov)), coeff);
  return out;
}

std::string KClass::render() const {
  if (terms_.empty()) return "0";
  RingDesc desc = space_->coeff_desc();
  desc.localized = true;
  std::string out;
  for (const auto& [key, coeff] : terms_) {
    if (!out.empty()) out += " + ";
    CorootVec beta(key.nov);
    NovikovPoly flat = NovikovPoly::from_scalar(desc, coeff, &beta);
    std::string index = space_->basis == ModuleSpace::Basis::kQuantum
                            ? space_->coset->rep(key.rep).to_word_string()
                            : AffineWeylElt(space_->coset->rep(key.rep), beta).to_string();
    out += "(" + flat.render() + ") [" + index + "]";
  }
  return out;
}

json KClass::to_json() const {
  json doc;
  doc["type"] = space_->rs->type().to_string();
  json jlist = json::array();
  for (int j : space_->J.members()) jlist.push_back(j + 1);
  doc["J"] = jlist;
  json terms = json::array();
  for (const auto& [key, coeff] : terms_) {
    json term;
    term["coeff"] = coeff.render();
    term["weyl"] = space_->coset->rep(key.rep).to_word_string();
    json nov = json::array();
    for (const auto& c : key.nov) nov.push_back(to_int(c, "novikov exponent"));
    term["novikov"] = nov;
    terms.push_back(std::move(term));
  }
  doc["terms"] = terms;
  return doc;
}

KClass KClass::from_json(const json& doc, bool q_mode) {
  if (!doc.contains("type") || !doc.contains("J") || !doc.contains("terms"))
    throw ParseError("class document must have type, J, terms");
  auto rs = RootSystem::make(CartanType::parse(doc["type"].get<std::string>()));
  std::vector<int> jm;
  for (const auto& v : doc["J"]) jm.push_back(v.get<int>() - 1);
  ParabolicSubset J(jm, rs->rank());

  try {
    // Localization is inferred from the exponents.
    bool localized = false;
    for (const auto& term : doc["terms"])
      for (const auto& c : term.at("novikov"))
        if (c.get<long long>() < 0) localized = true;

    auto space = ModuleSpace::make(rs, J, q_mode, localized);
    KClass out(space);
    for (const auto& term : doc["terms"]) {
      WeylElt u = parse_finite_word(rs, term.at("weyl").get<std::string>());
      auto id = space->coset->find(u);
      if (!id) throw ParseError("weyl index is not a minimal coset representative: " +
                                term.at("weyl").get<std::string>());
      std::vector<Int> nov;
      for (const auto& c : term.at("novikov")) nov.push_back(Int(c.get<long>()));
      if (static_cast<int>(nov.size()) != rs->rank())
        throw ParseError("novikov exponent has wrong length");
      GroupAlgElt coeff =
          GroupAlgElt::parse(rs->rank(), q_mode, term.at("coeff").get<std::string>());
      out.add_term(*id, CorootVec(std::move(nov)), coeff);
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed class document: ") + e.what());
  }
}

KClass psi_dictionary(const KClass& x, ModuleSpace::Basis direction) {
  if (x.space()->basis == direction) return x;
  auto space = std::make_shared<ModuleSpace>(*x.space());
  space->basis = direction;
  KClass out{ModuleSpacePtr(space)};
  for (const auto& [key, coeff] : x.terms()) out.add_term(key.rep, CorootVec(key.nov), coeff);
  return out;
}

KClass phi_project(const KClass& x, const ParabolicSubset& target_J) {
  const ModuleSpace& src = *x.space();
  if (!src.J.is_subset_of(target_J))
    throw PreconditionError("phi_J requires the source parabolic inside the target");
  auto space = ModuleSpace::make(src.rs, target_J, src.q_mode, src.localized, src.basis);
  KClass out(space);
  for (const auto& [key, coeff] : x.terms()) {
    const WeylElt& u = src.coset->rep(key.rep);
    int rep = space->coset->rep_id(u);
    CorootVec beta = src.rs->project_coroot(CorootVec(key.nov), target_J);
    out.add_term(rep, beta, coeff);
  }
  return out;
}

bool k_i_membership(const KClass& x, int i) {
  return phi_project(x, ParabolicSubset({i}, x.space()->rs->rank())).is_zero();
}

KClass q_shift(const KClass& x, int i, bool inverse) {
  const ModuleSpace& space = *x.space();
  if (!space.q_mode) throw ModeError("q shift requires q mode");
  if (space.J.contains(i)) throw DimensionError("q shift index must lie in J^c");
  KClass out(x.space());
  for (const auto& [key, coeff] : x.terms()) {
    Int exp = space.rs->pairing(CorootVec(key.nov), space.rs->fundamental_weight(i));
    GroupAlgElt c = coeff;
    c.shift(WeightVec::zero(space.rs->rank()), inverse ? Int(-exp) : exp);
    out.add_term(key.rep, CorootVec(key.nov), c);
  }
  return out;
}

namespace {
KClass convert_mode(const KClass& x, bool q_mode, bool localized) {
  auto space = ModuleSpace::make(x.space()->rs, x.space()->J, q_mode, localized,
                                 x.space()->basis);
  KClass out(space);
  for (const auto& [key, coeff] : x.terms()) {
    GroupAlgElt c = coeff;
    if (q_mode && !coeff.q_mode()) c = coeff.to_q_mode();
    if (!q_mode && coeff.q_mode()) c = coeff.q_to_one();
    out.add_term(key.rep, CorootVec(key.nov), c);
  }
  return out;
}
}  // namespace

KClass to_q_mode(const KClass& x) {
  return convert_mode(x, true, x.space()->localized);
}

KClass q_to_one(const KClass& x) {
  return convert_mode(x, false, x.space()->localized);
}

KClass to_localized(const KClass& x) {
  return convert_mode(x, x.space()->q_mode, true);
}

}  // namespace qkp
