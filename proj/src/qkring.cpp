#include "qkp/qkring.hpp"

#include <algorithm>
#include <sstream>

namespace qkp {

using json = nlohmann::ordered_json;

namespace {

int rep_of(const ModuleSpacePtr& space, const char* word) {
  return space->coset->rep_id(parse_finite_word(space->rs, word));
}

std::vector<std::vector<int>> monomials_of_degree(int nvars, int degree) {
  std::vector<std::vector<int>> out;
  if (nvars == 0) {
    if (degree == 0) out.push_back({});
    return out;
  }
  std::vector<int> m(nvars, 0);
  // lexicographically ordered compositions of `degree`
  while (true) {
    int sum = 0;
    for (int v : m) sum += v;
    if (sum == degree) out.push_back(m);
    int i = nvars - 1;
    while (i >= 0 && m[i] == degree) m[i--] = 0;
    if (i < 0) break;
    ++m[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ChevalleyTable::ChevalleyTable(ModuleSpacePtr space,
                               std::map<int, std::vector<KClass>> divisor_cols)
    : space_(std::move(space)), divisor_cols_(std::move(divisor_cols)) {
  const int dim = space_->dim();
  auto jc = space_->J.complement();
  if (static_cast<int>(divisor_cols_.size()) != static_cast<int>(jc.size()))
    throw InconsistentDataError("expected one divisor column per node outside J");
  for (int i : jc)
    if (!divisor_cols_.count(i))
      throw InconsistentDataError("missing divisor column for node " + std::to_string(i + 1));

  WeylGroup group(space_->rs);
  const WeylElt& w0 = group.longest();
  RingDesc desc = space_->coeff_desc();

  for (int i : jc) {
    const auto& col = divisor_cols_.at(i);
    if (static_cast<int>(col.size()) != dim)
      throw InconsistentDataError("divisor column has wrong length");
    // identity action: s_i * [O(e)] = [O(s_i)]
    int si = space_->coset->rep_id(WeylElt::simple_reflection(space_->rs, i));
    if (!(col[0] == KClass::basis_class(space_, si)))
      throw InconsistentDataError("divisor column violates the identity axiom for node " +
                                  std::to_string(i + 1));

    GroupAlgElt scalar = GroupAlgElt::monomial(-(w0.apply(space_->rs->fundamental_weight(i))),
                                               0, Rat(1), space_->q_mode);
    ExactMatrix m(dim, dim, desc);
    for (int u = 0; u < dim; ++u) {
      KClass a = (KClass::basis_class(space_, u) - col[u]).scale(scalar);
      std::vector<FracElt> v = a.to_vector();
      for (int row = 0; row < dim; ++row) m.at(row, u) = v[row];
    }
    ops_.emplace(i, std::move(m));
  }

  for (auto it = ops_.begin(); it != ops_.end(); ++it)
    for (auto jt = std::next(it); jt != ops_.end(); ++jt)
      if (!it->second.mul(jt->second).equals(jt->second.mul(it->second)))
        throw InconsistentDataError("Chevalley operators for nodes " +
                                    std::to_string(it->first + 1) + " and " +
                                    std::to_string(jt->first + 1) + " do not commute");
}

const ExactMatrix& ChevalleyTable::op(int i) const {
  auto it = ops_.find(i);
  if (it == ops_.end()) throw DimensionError("no Chevalley operator for node " + std::to_string(i + 1));
  return it->second;
}

KClass ChevalleyTable::apply(int i, const KClass& x) const {
  if (x.space()->rs->type() != space_->rs->type() || !(x.space()->J == space_->J))
    throw DimensionError("class does not live over this table's space");
  return KClass::from_vector(x.space(), op(i).apply(x.to_vector()));
}

WeightVec ChevalleyTable::dual_weight(int i) const {
  WeylGroup group(space_->rs);
  return -(group.longest().apply(space_->rs->fundamental_weight(i)));
}

RingTable::RingTable(ModuleSpacePtr space, std::vector<std::vector<KClass>> products)
    : space_(std::move(space)), products_(std::move(products)) {}

std::vector<KClass> golden_a2_column(const ModuleSpacePtr& space) {
  const auto& rs = space->rs;
  if (!(rs->type() == CartanType('A', 2)) || !space->J.members().empty() || space->q_mode)
    throw PreconditionError("golden data lives over qK_H(SL_3/B) at q = 1");
  const int e = rep_of(space, "e"), s1 = rep_of(space, "s1"), s2 = rep_of(space, "s2"),
            s12 = rep_of(space, "s1*s2"), s21 = rep_of(space, "s2*s1"),
            w0 = rep_of(space, "s1*s2*s1");
  const GroupAlgElt one = GroupAlgElt::one(2);
  const GroupAlgElt ea2 = GroupAlgElt::monomial(rs->simple_root_weight(1));
  const GroupAlgElt eth = GroupAlgElt::monomial(rs->theta().weight);
  const CorootVec zero = CorootVec::zero(2);
  const CorootVec a1v = CorootVec::simple(2, 0);
  const CorootVec thv = rs->theta().coroot;

  std::vector<KClass> col(6, KClass(space));
  col[e] = KClass::basis_class(space, s1);

  col[s1] = KClass(space);
  col[s1].add_term(s1, zero, one - ea2);
  col[s1].add_term(e, a1v, ea2);
  col[s1].add_term(s21, zero, ea2);
  col[s1].add_term(s2, a1v, -ea2);

  col[s2] = KClass(space);
  col[s2].add_term(s12, zero, one);
  col[s2].add_term(s21, zero, one);
  col[s2].add_term(w0, zero, -one);

  col[s12] = KClass(space);
  col[s12].add_term(s12, zero, one - ea2);
  col[s12].add_term(w0, zero, ea2);

  col[s21] = KClass(space);
  col[s21].add_term(s21, zero, one - eth);
  col[s21].add_term(s2, a1v, eth);

  col[w0] = KClass(space);
  col[w0].add_term(w0, zero, one - eth);
  col[w0].add_term(e, thv, eth);
  col[w0].add_term(s12, a1v, eth);
  col[w0].add_term(s1, thv, -eth);

  return col;
}

KClass apply_diagram_automorphism(const KClass& x, const DynkinAutomorphism& sigma) {
  const ModuleSpace& src = *x.space();
  std::vector<int> jm;
  for (int j : src.J.members()) jm.push_back(sigma(j));
  ParabolicSubset image_J(jm, src.rs->rank());
  ModuleSpacePtr space = image_J == src.J
                             ? x.space()
                             : ModuleSpace::make(src.rs, image_J, src.q_mode, src.localized,
                                                 src.basis);
  KClass out(space);
  for (const auto& [key, coeff] : x.terms()) {
    WeylElt u = sigma.apply(src.coset->rep(key.rep));
    out.add_term(space->coset->rep_id(u), sigma.apply(CorootVec(key.nov)),
                 coeff.permute_weights(sigma.perm()));
  }
  return out;
}

std::vector<KClass> derive_s2_column(const ModuleSpacePtr& space,
                                     const std::vector<KClass>& s1_column) {
  DynkinAutomorphism sigma(space->rs, {1, 0});
  std::vector<KClass> col(space->dim(), KClass(space));
  for (int u = 0; u < space->dim(); ++u) {
    int su = space->coset->rep_id(sigma.apply(space->coset->rep(u)));
    col[u] = apply_diagram_automorphism(s1_column[su], sigma);
  }
  return col;
}

OperatorPoly reconstruct_expression(int basis_id, const ChevalleyTable& t) {
  const ModuleSpacePtr& space = t.space();
  const int dim = space->dim();
  RingDesc desc = space->coeff_desc();
  desc.localized = true;
  const std::vector<int> vars = space->J.complement();
  const int nvars = static_cast<int>(vars.size());
  const int cap = 2 * dim;

  std::vector<std::vector<int>> monomials{std::vector<int>(nvars, 0)};
  std::map<std::vector<int>, int> index{{monomials[0], 0}};
  std::vector<FracElt> e0(dim, FracElt::zero(desc));
  e0[0] = FracElt::one(desc);
  std::vector<std::vector<FracElt>> columns{e0};

  std::vector<FracElt> rhs(dim, FracElt::zero(desc));
  rhs[basis_id] = FracElt::one(desc);

  std::vector<int> rank_profile;
  for (int degree = 0; degree <= cap; ++degree) {
    if (degree > 0) {
      for (const auto& m : monomials_of_degree(nvars, degree)) {
        int i0 = 0;
        while (m[i0] == 0) ++i0;
        std::vector<int> parent = m;
        --parent[i0];
        const auto& pcol = columns[index.at(parent)];
        index.emplace(m, static_cast<int>(monomials.size()));
        monomials.push_back(m);
        columns.push_back(t.op(vars[i0]).apply(pcol));
      }
    }
    // Degree escalation starts at 1; degree 0 only makes sense when there
    // are no operator variables at all (J = I).
    if (degree == 0 && nvars > 0) continue;
    ExactMatrix m(dim, static_cast<int>(monomials.size()), desc);
    for (size_t c = 0; c < columns.size(); ++c)
      for (int row = 0; row < dim; ++row) m.at(row, static_cast<int>(c)) = columns[c][row];
    SolveResult res = solve_linear(m, rhs);
    rank_profile.push_back(res.rank);
    if (res.status != SolveResult::Status::kNoSolution) {
      OperatorPoly p;
      for (size_t c = 0; c < monomials.size(); ++c)
        if (!res.solution[c].is_zero()) {
          int deg = 0;
          for (int v : monomials[c]) deg += v;
          p.degree = std::max(p.degree, deg);
          p.terms.emplace_back(monomials[c], res.solution[c]);
        }
      return p;
    }
  }
  std::ostringstream msg;
  msg << "no operator polynomial of degree <= " << cap << " expresses basis element "
      << basis_id << "; rank profile:";
  for (int r : rank_profile) msg << " " << r;
  throw ReconstructionError(msg.str());
}

QKRing::QKRing(ModuleSpacePtr space, std::shared_ptr<const ChevalleyTable> chevalley)
    : space_(std::move(space)), chevalley_(std::move(chevalley)) {
  const int dim = space_->dim();
  RingDesc desc = space_->coeff_desc();
  desc.localized = true;
  const std::vector<int> vars = space_->J.complement();
  const int nvars = static_cast<int>(vars.size());

  int max_degree = 0;
  for (int u = 0; u < dim; ++u) {
    expressions_.push_back(reconstruct_expression(u, *chevalley_));
    max_degree = std::max(max_degree, expressions_[u].degree);
  }

  // Monomial operator matrices up to the highest degree used.
  std::map<std::vector<int>, ExactMatrix> powers;
  powers.emplace(std::vector<int>(nvars, 0), ExactMatrix::identity(dim, desc));
  for (int degree = 1; degree <= max_degree; ++degree)
    for (const auto& m : monomials_of_degree(nvars, degree)) {
      int i0 = 0;
      while (m[i0] == 0) ++i0;
      std::vector<int> parent = m;
      --parent[i0];
      powers.emplace(m, chevalley_->op(vars[i0]).mul(powers.at(parent)));
    }

  std::vector<std::vector<KClass>> products(dim, std::vector<KClass>(dim));
  for (int u = 0; u < dim; ++u) {
    ExactMatrix p(dim, dim, desc);
    for (const auto& [m, c] : expressions_[u].terms) p = p.add(powers.at(m).scale(c));
    for (int v = 0; v < dim; ++v) {
      std::vector<FracElt> col(dim, FracElt::zero(desc));
      for (int row = 0; row < dim; ++row) col[row] = p.at(row, v);
      products[u][v] = KClass::from_vector(space_, col);
    }
  }
  table_ = std::make_shared<RingTable>(space_, std::move(products));
}

QKRing QKRing::from_divisor_columns(ModuleSpacePtr space,
                                    std::map<int, std::vector<KClass>> divisor_cols) {
  auto chev = std::make_shared<ChevalleyTable>(space, std::move(divisor_cols));
  return QKRing(std::move(space), std::move(chev));
}

QKRing QKRing::build_a2(const ParabolicSubset& J) {
  auto rs = RootSystem::make(CartanType('A', 2));
  auto space = ModuleSpace::make(rs, ParabolicSubset::empty(2));
  std::map<int, std::vector<KClass>> cols;
  cols[0] = golden_a2_column(space);
  cols[1] = derive_s2_column(space, cols[0]);
  QKRing full = from_divisor_columns(space, std::move(cols));
  if (J.members().empty()) return full;
  return quotient_ring(full, J);
}

QKRing QKRing::quotient_ring(const QKRing& base, const ParabolicSubset& J) {
  const ModuleSpace& src = *base.space_;
  if (!src.J.is_subset_of(J))
    throw PreconditionError("quotient requires the base parabolic inside the target");
  auto space = ModuleSpace::make(src.rs, J, src.q_mode, src.localized);

  std::map<int, std::vector<KClass>> cols;
  for (int i : J.complement()) {
    std::vector<KClass> col;
    col.reserve(space->dim());
    for (int u = 0; u < space->dim(); ++u) {
      // J-minimal representatives are in particular src-minimal.
      int lift = src.coset->rep_id(space->coset->rep(u));
      col.push_back(phi_project(base.chevalley_->divisor_cols().at(i)[lift], J));
    }
    cols.emplace(i, std::move(col));
  }
  auto chev = std::make_shared<ChevalleyTable>(space, std::move(cols));

  // Descent well-definedness: phi_J(A_i(w)) = Abar_i(phi_J(w)) for every
  // basis element w of the source.
  for (int w = 0; w < src.coset->size(); ++w) {
    KClass wc = KClass::basis_class(base.space_, w);
    for (int i : J.complement()) {
      KClass lhs = phi_project(base.chevalley_->apply(i, wc), J);
      KClass rhs = chev->apply(i, phi_project(wc, J));
      if (!(lhs == rhs))
        throw TheoremViolationError(
            "quotient operator is not well defined on basis element " +
            src.coset->rep(w).to_word_string() + " for node " + std::to_string(i + 1));
    }
  }
  return QKRing(space, chev);
}

KClass QKRing::star(const KClass& x, const KClass& y) const {
  const ModuleSpace& sx = *x.space();
  const ModuleSpace& sy = *y.space();
  if (sx.q_mode || sy.q_mode) throw ModeError("star products are computed at q = 1");
  if (sx.rs->type() != space_->rs->type() || !(sx.J == space_->J) ||
      sy.rs->type() != space_->rs->type() || !(sy.J == space_->J))
    throw DimensionError("classes do not live over this ring");
  bool localized = sx.localized || sy.localized;
  ModuleSpacePtr out_space =
      localized ? ModuleSpace::make(space_->rs, space_->J, false, true) : space_;
  KClass out(out_space);
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [ky, cy] : y.terms()) {
      CorootVec shift = CorootVec(kx.nov) + CorootVec(ky.nov);
      GroupAlgElt c = cx * cy;
      for (const auto& [kp, cp] : table_->product(kx.rep, ky.rep).terms())
        out.add_term(kp.rep, CorootVec(kp.nov) + shift, cp * c);
    }
  return out;
}

json QKRing::chevalley_to_json() const {
  json doc;
  doc["type"] = space_->rs->type().to_string();
  json jlist = json::array();
  for (int j : space_->J.members()) jlist.push_back(j + 1);
  doc["J"] = jlist;
  json basis = json::array();
  for (const auto& rep : space_->coset->reps()) basis.push_back(rep.to_word_string());
  doc["basis"] = basis;
  json columns = json::array();
  for (const auto& [i, col] : chevalley_->divisor_cols()) {
    json entry;
    entry["i"] = i + 1;
    json products = json::array();
    for (const auto& cls : col) products.push_back(cls.to_json());
    entry["products"] = products;
    columns.push_back(std::move(entry));
  }
  doc["columns"] = columns;
  return doc;
}

QKRing QKRing::from_chevalley_json(const json& doc) {
  for (const char* field : {"type", "J", "basis", "columns"})
    if (!doc.contains(field))
      throw ParseError("chevalley document is missing field '" + std::string(field) + "'");
  auto rs = RootSystem::make(CartanType::parse(doc["type"].get<std::string>()));
  std::vector<int> jm;
  for (const auto& v : doc["J"]) jm.push_back(v.get<int>() - 1);
  ParabolicSubset J(jm, rs->rank());
  auto space = ModuleSpace::make(rs, J);

  std::vector<std::string> basis;
  for (const auto& b : doc["basis"]) basis.push_back(b.get<std::string>());
  if (static_cast<int>(basis.size()) != space->dim())
    throw ParseError("basis list has wrong length");
  for (int u = 0; u < space->dim(); ++u)
    if (!(parse_finite_word(rs, basis[u]) == space->coset->rep(u)))
      throw ParseError("basis list does not match the canonical coset order at position " +
                       std::to_string(u));

  std::map<int, std::vector<KClass>> cols;
  for (const auto& entry : doc["columns"]) {
    int i = entry.at("i").get<int>() - 1;
    if (i < 0 || i >= rs->rank()) throw ParseError("column node out of range");
    std::vector<KClass> col;
    for (const auto& cdoc : entry.at("products")) {
      KClass parsed = KClass::from_json(cdoc);
      if (parsed.space()->rs->type() != rs->type() || !(parsed.space()->J == J))
        throw ParseError("product class document does not match the table header");
      KClass retargeted(space);
      for (const auto& [key, coeff] : parsed.terms())
        retargeted.add_term(key.rep, CorootVec(key.nov), coeff);
      col.push_back(std::move(retargeted));
    }
    if (static_cast<int>(col.size()) != space->dim())
      throw ParseError("product column has wrong length");
    cols.emplace(i, std::move(col));
  }
  return from_divisor_columns(space, std::move(cols));
}

json QKRing::table_to_json() const {
  json doc;
  doc["type"] = space_->rs->type().to_string();
  json jlist = json::array();
  for (int j : space_->J.members()) jlist.push_back(j + 1);
  doc["J"] = jlist;
  json basis = json::array();
  for (const auto& rep : space_->coset->reps()) basis.push_back(rep.to_word_string());
  doc["basis"] = basis;
  json products = json::array();
  for (int u = 0; u < space_->dim(); ++u)
    for (int v = 0; v < space_->dim(); ++v) {
      json entry;
      entry["lhs"] = space_->coset->rep(u).to_word_string();
      entry["rhs"] = space_->coset->rep(v).to_word_string();
      entry["class"] = table_->product(u, v).to_json();
      products.push_back(std::move(entry));
    }
  doc["products"] = products;
  return doc;
}

KClass chevalley_apply_q(const ChevalleyTable& t, int i, const KClass& x) {
  const ModuleSpace& sx = *x.space();
  if (!sx.q_mode) throw ModeError("the q transport acts on q-mode classes");
  if (sx.rs->type() != t.space()->rs->type() || !(sx.J == t.space()->J))
    throw DimensionError("class does not live over this table's space");
  KClass out(x.space());
  for (const auto& [key, coeff] : x.terms()) {
    CorootVec beta(key.nov);
    Int exp = sx.rs->pairing(beta, sx.rs->fundamental_weight(i));
    KClass base = t.apply(i, KClass::basis_class(t.space(), key.rep));
    GroupAlgElt c = coeff;
    c.shift(WeightVec::zero(sx.rs->rank()), -exp);
    for (const auto& [bk, bc] : base.terms())
      out.add_term(bk.rep, CorootVec(bk.nov) + beta, bc.to_q_mode() * c);
  }
  return out;
}

std::vector<std::vector<KClass>> QKRing::table_from_json(const json& doc,
                                                         ModuleSpacePtr space) {
  const int dim = space->dim();
  std::vector<std::vector<KClass>> products(dim, std::vector<KClass>(dim, KClass(space)));
  for (const auto& entry : doc.at("products")) {
    int u = space->coset->rep_id(parse_finite_word(space->rs, entry.at("lhs").get<std::string>()));
    int v = space->coset->rep_id(parse_finite_word(space->rs, entry.at("rhs").get<std::string>()));
    KClass parsed = KClass::from_json(entry.at("class"));
    KClass retargeted(space);
    for (const auto& [key, coeff] : parsed.terms())
      retargeted.add_term(key.rep, CorootVec(key.nov), coeff);
    products[u][v] = std::move(retargeted);
  }
  return products;
}

}  // namespace qkp
