#include "qkp/verify.hpp"

#include <map>
#include <random>

#include "qkp/grassmannian.hpp"

namespace qkp {

using json = nlohmann::ordered_json;

void SuiteReport::check(bool cond, const std::string& invariant, json witness) {
  ++checks;
  if (!cond) failures.push_back(Failure{invariant, std::move(witness)});
}

json SuiteReport::to_json() const {
  json doc;
  doc["suite"] = suite;
  doc["checks"] = checks;
  doc["notes"] = notes;
  json fails = json::array();
  for (const auto& f : failures) {
    json entry;
    entry["invariant"] = f.invariant;
    entry["witness"] = f.witness;
    fails.push_back(std::move(entry));
  }
  doc["failures"] = fails;
  doc["ok"] = ok();
  return doc;
}

namespace {

KClass basis_q(const ModuleSpacePtr& space, int rep, const CorootVec& beta) {
  return KClass::basis_class(space, rep, beta,
                             GroupAlgElt::one(space->rs->rank(), space->q_mode));
}

json class_witness(const char* label, const KClass& x) {
  json w;
  w[label] = x.render();
  return w;
}

}  // namespace

SuiteReport verify_golden() {
  SuiteReport report{.suite = "golden"};
  QKRing ring = QKRing::build_a2(ParabolicSubset::empty(2));
  const auto& space = ring.space();
  auto golden = golden_a2_column(space);
  auto derived = derive_s2_column(space, golden);
  int s1 = space->coset->rep_id(parse_finite_word(space->rs, "s1"));
  int s2 = space->coset->rep_id(parse_finite_word(space->rs, "s2"));
  for (int v = 0; v < space->dim(); ++v) {
    std::string rhs = space->coset->rep(v).to_word_string();
    bool match = ring.table().product(s1, v) == golden[v];
    report.check(match, "reconstruction reproduces s1 * " + rhs,
                 class_witness("reconstructed", ring.table().product(s1, v)));
    if (match) report.notes.push_back("matched s1 * " + rhs);
    report.check(ring.table().product(s2, v) == derived[v],
                 "reconstruction reproduces s2 * " + rhs,
                 class_witness("reconstructed", ring.table().product(s2, v)));
  }
  return report;
}

namespace {

// Commutativity / associativity / identity / Q-polynomiality of one table.
void check_ring_axioms(SuiteReport& report, const QKRing& ring, const std::string& label) {
  const auto& space = ring.space();
  const int dim = space->dim();
  auto word = [&](int u) { return space->coset->rep(u).to_word_string(); };
  auto cls = [&](int u) { return KClass::basis_class(space, u); };

  for (int u = 0; u < dim; ++u)
    for (int v = 0; v < dim; ++v)
      report.check(ring.star(cls(u), cls(v)) == ring.star(cls(v), cls(u)),
                   label + "commutativity " + word(u) + " , " + word(v));

  for (int u = 0; u < dim; ++u)
    for (int v = 0; v < dim; ++v)
      for (int w = 0; w < dim; ++w)
        report.check(ring.star(ring.star(cls(u), cls(v)), cls(w)) ==
                         ring.star(cls(u), ring.star(cls(v), cls(w))),
                     label + "associativity " + word(u) + " , " + word(v) + " , " + word(w));

  for (int v = 0; v < dim; ++v)
    report.check(ring.star(cls(0), cls(v)) == cls(v),
                 label + "identity acts trivially on " + word(v));

  for (int u = 0; u < dim; ++u)
    for (int v = 0; v < dim; ++v) {
      bool poly = true;
      for (const auto& [key, coeff] : ring.table().product(u, v).terms())
        for (const auto& c : key.nov)
          if (c < 0) poly = false;
      report.check(poly,
                   label + "structure constants polynomial in Q for " + word(u) + " * " + word(v));
    }
}

}  // namespace

SuiteReport verify_ring_axioms() {
  SuiteReport report{.suite = "ring"};
  QKRing ring = QKRing::build_a2(ParabolicSubset::empty(2));
  const auto& space = ring.space();
  const int dim = space->dim();
  auto word = [&](int u) { return space->coset->rep(u).to_word_string(); };
  auto cls = [&](int u) { return KClass::basis_class(space, u); };

  check_ring_axioms(report, ring, "");

  // The same axioms hold in every quotient ring (27 triples each for the
  // maximal parabolics).
  for (int j = 0; j < 2; ++j) {
    ParabolicSubset J({j}, 2);
    check_ring_axioms(report, QKRing::quotient_ring(ring, J), "J=" + J.to_string() + " ");
  }
  check_ring_axioms(report, QKRing::quotient_ring(ring, ParabolicSubset::full(2)), "J=I ");

  // Classical degeneration: the Q^0 part is itself a commutative,
  // associative, unital table.
  auto star0 = [&](const KClass& x, const KClass& y) {
    KClass out(space);
    for (const auto& [kx, cx] : x.terms())
      for (const auto& [ky, cy] : y.terms()) {
        KClass p = ring.table()
                       .product(kx.rep, ky.rep)
                       .novikov_zero_part()
                       .novikov_shift(CorootVec(kx.nov) + CorootVec(ky.nov));
        out += p.scale(cx * cy);
      }
    return out;
  };
  for (int u = 0; u < dim; ++u)
    for (int v = 0; v < dim; ++v) {
      report.check(star0(cls(u), cls(v)) == star0(cls(v), cls(u)),
                   "classical commutativity " + word(u) + " , " + word(v));
      for (int w = 0; w < dim; ++w)
        report.check(star0(star0(cls(u), cls(v)), cls(w)) ==
                         star0(cls(u), star0(cls(v), cls(w))),
                     "classical associativity " + word(u) + " , " + word(v) + " , " + word(w));
    }
  for (int v = 0; v < dim; ++v)
    report.check(star0(cls(0), cls(v)) == cls(v), "classical identity on " + word(v));

  return report;
}

std::vector<KernelGenerator> straighten_kernel_element(const KClass& x,
                                                       const ParabolicSubset& J) {
  const ModuleSpace& space = *x.space();
  if (!space.J.members().empty())
    throw PreconditionError("straightening expects a class over the full flag module");
  std::vector<KernelGenerator> parts;
  KClass work = x;

  // Copies its arguments; work is mutated underneath the caller.
  auto emit = [&](GroupAlgElt c, int u_rep, CorootVec beta, int i, CorootVec beta_prime) {
    // subtract c ([O(u)]Q^beta - [O(u s_i)]Q^{beta'}) from work
    WeylElt us = space.coset->rep(u_rep) * WeylElt::simple_reflection(space.rs, i);
    work.add_term(u_rep, beta, -c);
    work.add_term(space.coset->rep_id(us), beta_prime, c);
    parts.push_back(KernelGenerator{std::move(c), u_rep, std::move(beta), i,
                                    std::move(beta_prime)});
  };

  for (;;) {
    // Find a term that is not J-canonical: Weyl part with a descent in J,
    // or a Novikov exponent supported on J.  Term data is copied out before
    // emit rewrites the map.
    GroupAlgElt coeff;
    int rep = -1, descent = -1, jcoord = -1;
    CorootVec beta;
    for (const auto& [key, c] : work.terms()) {
      const WeylElt& u = space.coset->rep(key.rep);
      CorootVec b(key.nov);
      for (int j : J.members()) {
        if (descent < 0 && u.has_right_descent(j)) descent = j;
        if (jcoord < 0 && b.coords[j] != 0) jcoord = j;
      }
      if (descent >= 0 || jcoord >= 0) {
        coeff = c;
        rep = key.rep;
        beta = std::move(b);
        break;
      }
    }
    if (rep < 0) break;
    if (descent >= 0) {
      emit(coeff, rep, beta, descent, beta);
    } else {
      // (u,beta) - (u,beta - alpha_j^vee) as two generators through u s_j.
      CorootVec delta = beta;
      delta.coords[jcoord] -= 1;
      emit(coeff, rep, beta, jcoord, beta);
      WeylElt us = space.coset->rep(rep) * WeylElt::simple_reflection(space.rs, jcoord);
      emit(coeff, space.coset->rep_id(us), beta, jcoord, delta);
    }
  }
  if (!work.is_zero())
    throw TheoremViolationError("kernel element did not straighten to zero");
  return parts;
}

namespace {

// Shared fixture for the quotient-side suites.
struct QuotientContext {
  RootSystemPtr rs = RootSystem::make(CartanType('A', 2));
  ParabolicSubset none = ParabolicSubset::empty(2);
  ParabolicSubset j1 = ParabolicSubset({0}, 2);
  ParabolicSubset j2 = ParabolicSubset({1}, 2);
  ParabolicSubset all = ParabolicSubset::full(2);
  QKRing full = QKRing::build_a2(ParabolicSubset::empty(2));
  std::map<std::vector<int>, QKRing> rings;

  QuotientContext() {
    rings.emplace(none.members(), full);
    rings.emplace(j1.members(), QKRing::quotient_ring(full, j1));
    rings.emplace(j2.members(), QKRing::quotient_ring(full, j2));
    rings.emplace(all.members(), QKRing::quotient_ring(full, all));
  }
};

const QuotientContext& quotient_context() {
  static QuotientContext ctx;
  return ctx;
}

}  // namespace

SuiteReport verify_quotient_tables() {
  SuiteReport report{.suite = "quotient-tables"};
  const QuotientContext& ctx = quotient_context();
  const auto& rs = ctx.rs;
  const auto& space = ctx.full.space();
  const GroupAlgElt one = GroupAlgElt::one(2);
  const CorootVec zero = CorootVec::zero(2), a1v = CorootVec::simple(2, 0);
  const GroupAlgElt ea2 = GroupAlgElt::monomial(rs->simple_root_weight(1));
  const GroupAlgElt eth = GroupAlgElt::monomial(rs->theta().weight);

  // The displayed quotient products for J = {2}.
  {
    const QKRing& q = ctx.rings.at(ctx.j2.members());
    auto qs = q.space();
    int e = qs->coset->rep_id(parse_finite_word(rs, "e"));
    int s1 = qs->coset->rep_id(parse_finite_word(rs, "s1"));
    int s21 = qs->coset->rep_id(parse_finite_word(rs, "s2*s1"));

    KClass expect(qs);
    expect.add_term(s1, zero, one - ea2);
    expect.add_term(s21, zero, ea2);
    report.check(q.table().product(s1, s1) == expect, "J={2}: s1 * s1 quotient product",
                 class_witness("got", q.table().product(s1, s1)));

    report.check(q.table().product(s1, e) == KClass::basis_class(qs, s1),
                 "J={2}: s1 * 1 quotient product");

    KClass expect2(qs);
    expect2.add_term(s21, zero, one - eth);
    expect2.add_term(e, a1v, eth);
    report.check(q.table().product(s1, s21) == expect2, "J={2}: s1 * s2s1 quotient product",
                 class_witness("got", q.table().product(s1, s21)));
  }

  // For J = {1} every displayed image is an identity product.
  {
    const QKRing& q = ctx.rings.at(ctx.j1.members());
    auto qs = q.space();
    for (int v = 0; v < qs->dim(); ++v)
      report.check(q.table().product(0, v) == KClass::basis_class(qs, v),
                   "J={1}: 1 * " + qs->coset->rep(v).to_word_string());
  }

  // J = I collapses everything to 1 * 1 = 1 with all Q |-> 1.
  {
    const QKRing& q = ctx.rings.at(ctx.all.members());
    report.check(q.space()->dim() == 1, "J=I: module is one dimensional");
    report.check(q.table().product(0, 0) == KClass::identity_class(q.space()),
                 "J=I: 1 * 1 = 1");
    for (int u = 0; u < space->dim(); ++u)
      for (const Int b1 : {0, 1, 2})
        for (const Int b2 : {0, 1, 2}) {
          KClass x = basis_q(space, u, CorootVec({b1, b2}));
          report.check(phi_project(x, ctx.all) == KClass::identity_class(q.space()),
                       "J=I: [O(u)]Q^beta collapses to 1");
        }
  }
  return report;
}

SuiteReport verify_quotient_homomorphism() {
  SuiteReport report{.suite = "quotient-homomorphism"};
  const QuotientContext& ctx = quotient_context();
  const auto& space = ctx.full.space();

  for (const auto& [jm, q] : ctx.rings) {
    ParabolicSubset J(jm, 2);
    for (int u = 0; u < space->dim(); ++u)
      for (int v = 0; v < space->dim(); ++v) {
        KClass lhs = phi_project(ctx.full.star(KClass::basis_class(space, u),
                                               KClass::basis_class(space, v)),
                                 J);
        KClass rhs = q.star(phi_project(KClass::basis_class(space, u), J),
                            phi_project(KClass::basis_class(space, v), J));
        report.check(lhs == rhs,
                     "homomorphism onto J=" + J.to_string() + " at (" +
                         space->coset->rep(u).to_word_string() + ", " +
                         space->coset->rep(v).to_word_string() + ")",
                     class_witness("lhs", lhs));
      }
  }

  // Factorization through intermediate parabolics on basis elements with
  // Novikov exponents in [0,2]^2.
  const std::vector<ParabolicSubset> subsets{ctx.none, ctx.j1, ctx.j2, ctx.all};
  for (const auto& J : subsets)
    for (const auto& Jp : subsets) {
      if (!J.is_subset_of(Jp)) continue;
      for (int u = 0; u < space->dim(); ++u)
        for (const Int b1 : {0, 1, 2})
          for (const Int b2 : {0, 1, 2}) {
            KClass x = basis_q(space, u, CorootVec({b1, b2}));
            report.check(phi_project(x, Jp) == phi_project(phi_project(x, J), Jp),
                         "factorization " + J.to_string() + " -> " + Jp.to_string());
          }
    }
  return report;
}

SuiteReport verify_ideal_stability() {
  SuiteReport report{.suite = "ideal-stability"};
  const QuotientContext& ctx = quotient_context();
  const auto& rs = ctx.rs;
  const auto& space = ctx.full.space();

  for (int i = 0; i < 2; ++i) {
    ParabolicSubset Ji({i}, 2);
    int j = 1 - i;
    for (int u = 0; u < space->dim(); ++u) {
      WeylElt us = space->coset->rep(u) * WeylElt::simple_reflection(rs, i);
      int us_rep = space->coset->rep_id(us);
      for (const Int b1 : {0, 1, 2})
        for (const Int b2 : {0, 1, 2})
          for (const Int k : {-2, -1, 0, 1, 2}) {
            CorootVec beta({b1, b2});
            CorootVec beta_prime = beta;
            beta_prime.coords[i] += k;
            if (beta_prime.coords[i] < 0 || beta_prime.coords[i] > 2) continue;
            KClass g = basis_q(space, u, beta) - basis_q(space, us_rep, beta_prime);
            KClass image = phi_project(ctx.full.chevalley().apply(j, g), Ji);
            report.check(image.is_zero(),
                         "K_" + std::to_string(i + 1) + " stable under A_" +
                             std::to_string(j + 1),
                         class_witness("image", image));
          }
    }
  }
  return report;
}

SuiteReport verify_kernel_straightening(uint64_t seed) {
  SuiteReport report{.suite = "kernel-straightening"};
  const QuotientContext& ctx = quotient_context();
  const auto& rs = ctx.rs;
  const auto& space = ctx.full.space();

  std::mt19937_64 rng(seed);
  for (const auto& J : {ctx.j1, ctx.j2, ctx.all}) {
    std::vector<WeylElt> wj{WeylElt::identity(rs)};
    for (int j : J.members()) wj.push_back(WeylElt::simple_reflection(rs, j));
    if (J.members().size() == 2)
      wj.push_back(wj[1] * wj[2]);  // enough of W_J to randomize cosets
    for (int trial = 0; trial < 20; ++trial) {
      KClass x(space);
      for (int t = 0; t < 4; ++t) {
        int u = static_cast<int>(rng() % space->dim());
        const WeylElt& s = wj[rng() % wj.size()];
        int u2 = space->coset->rep_id(space->coset->rep(u) * s);
        CorootVec beta(
            {Int(static_cast<long>(rng() % 3)), Int(static_cast<long>(rng() % 3))});
        CorootVec beta2 = beta;
        for (int j : J.members())
          beta2.coords[j] = Int(static_cast<long>(rng() % 3));
        WeightVec lambda({Int(static_cast<long>(rng() % 3) - 1),
                          Int(static_cast<long>(rng() % 3) - 1)});
        GroupAlgElt c = GroupAlgElt::monomial(lambda, 0, rng() % 2 ? Rat(1) : Rat(-1));
        x += basis_q(space, u, beta).scale(c) - basis_q(space, u2, beta2).scale(c);
      }
      if (!phi_project(x, J).is_zero()) continue;  // zero by construction
      auto parts = straighten_kernel_element(x, J);
      KClass rebuilt(space);
      for (const auto& p : parts) {
        WeylElt us = space->coset->rep(p.u_rep) * WeylElt::simple_reflection(rs, p.i);
        rebuilt += basis_q(space, p.u_rep, p.beta).scale(p.coeff) -
                   basis_q(space, space->coset->rep_id(us), p.beta_prime).scale(p.coeff);
        report.check(J.contains(p.i), "kernel generator index lies in J");
      }
      report.check(rebuilt == x, "kernel element reassembles from K_i generators",
                   class_witness("x", x));
    }
  }
  return report;
}

SuiteReport verify_quotients(uint64_t seed) {
  SuiteReport report{.suite = "quotient"};
  for (SuiteReport part : {verify_quotient_tables(), verify_quotient_homomorphism(),
                           verify_ideal_stability(), verify_kernel_straightening(seed)}) {
    report.checks += part.checks;
    report.notes.insert(report.notes.end(), part.notes.begin(), part.notes.end());
    for (auto& f : part.failures) {
      f.invariant = part.suite + ": " + f.invariant;
      report.failures.push_back(std::move(f));
    }
  }
  return report;
}

SuiteReport verify_affine_combinatorics() {
  SuiteReport report{.suite = "affine"};

  struct BallProbe {
    CartanType type;
    int radius;
  };
  for (const BallProbe& probe : {BallProbe{CartanType('A', 2), 8}, BallProbe{CartanType('B', 2), 6}}) {
    auto rs = RootSystem::make(probe.type);
    std::vector<AffineWeylElt> gens;
    for (int i = 0; i <= rs->rank(); ++i) gens.push_back(AffineWeylElt::simple_affine(rs, i));

    // Breadth-first word-length oracle over the affine generators.
    std::map<std::pair<std::vector<Int>, std::vector<Int>>, int> depth;
    std::vector<AffineWeylElt> frontier{AffineWeylElt::identity(rs)};
    auto key_of = [](const AffineWeylElt& w) {
      return std::make_pair(w.finite().key(), w.translation().coords);
    };
    depth.emplace(key_of(frontier[0]), 0);
    for (int d = 0; d < probe.radius; ++d) {
      std::vector<AffineWeylElt> next;
      for (const auto& w : frontier)
        for (const auto& s : gens) {
          AffineWeylElt ws = w * s;
          if (depth.emplace(key_of(ws), d + 1).second) next.push_back(ws);
        }
      frontier = std::move(next);
      for (const auto& w : frontier)
        report.check(w.length() == d + 1,
                     probe.type.to_string() + ": length formula matches BFS depth " +
                         std::to_string(d + 1),
                     json{{"element", w.to_string()}, {"formula", w.length().get_str()}});
    }
    report.notes.push_back(probe.type.to_string() + " ball size " +
                           std::to_string(depth.size()));

    // t_{-theta^vee} = s_theta s_0 as a group identity.
    AffineWeylElt lhs = AffineWeylElt(WeylElt::reflection(rs, rs->highest_root_index()),
                                      CorootVec::zero(rs->rank())) *
                        AffineWeylElt::simple_affine(rs, 0);
    report.check(lhs == AffineWeylElt::translation(rs, -rs->theta().coroot),
                 probe.type.to_string() + ": s_theta s_0 = t_{-theta^vee}");

    // u t_beta lies in W_af^- for strictly antidominant beta.
    WeylGroup group(rs);
    std::vector<CorootVec> antidominant;
    std::vector<Int> coords(rs->rank(), -4);
    for (;;) {
      CorootVec beta(coords);
      if (rs->is_strictly_antidominant(beta)) antidominant.push_back(beta);
      int i = rs->rank() - 1;
      while (i >= 0 && coords[i] == 0) coords[i--] = -4;
      if (i < 0) break;
      coords[i] += 1;
    }
    for (const auto& u : group.elements())
      for (const auto& beta : antidominant)
        report.check(is_waf_minus(AffineWeylElt(u, beta)),
                     probe.type.to_string() + ": u t_beta in W_af^-",
                     json{{"element", AffineWeylElt(u, beta).to_string()}});
  }
  return report;
}

SuiteReport verify_peterson(uint64_t seed) {
  SuiteReport report{.suite = "peterson"};
  auto rs = RootSystem::make(CartanType('A', 2));
  QKRing ring = QKRing::build_a2(ParabolicSubset::empty(2));
  WeylGroup group(rs);
  const auto& elements = group.elements();
  std::mt19937_64 rng(seed);

  auto random_antidominant = [&]() {
    for (;;) {
      CorootVec beta({Int(-1 - static_cast<long>(rng() % 4)),
                      Int(-1 - static_cast<long>(rng() % 4))});
      if (rs->is_strictly_antidominant(beta)) return beta;
    }
  };

  const std::vector<ParabolicSubset> subsets{
      ParabolicSubset::empty(2), ParabolicSubset({0}, 2), ParabolicSubset({1}, 2),
      ParabolicSubset::full(2)};

  for (int trial = 0; trial < 100; ++trial) {
    const WeylElt& u = elements[rng() % elements.size()];
    CorootVec b1 = random_antidominant(), b2 = random_antidominant();
    LocalizedGrClass x(GrClass::basis_class(rs, AffineWeylElt(u, b1)), {b2});

    KClass got = peterson_phi(x);
    auto space = got.space();
    KClass expected = basis_q(space, space->coset->rep_id(u), b1 - b2);
    report.check(got == expected, "Phi matches the localized basis rule",
                 json{{"element", AffineWeylElt(u, b1).to_string()},
                      {"denom", b2.to_string()}});

    for (const auto& J : subsets)
      report.check(eta_J(x, J) == phi_project(got, J),
                   "eta_J = phi_J o Phi for J=" + J.to_string());

    // Product against a translation class: the localized product agrees
    // with the index translation rule.
    CorootVec gamma = random_antidominant(), d2 = random_antidominant();
    LocalizedGrClass y(GrClass::basis_class(rs, AffineWeylElt::translation(rs, gamma)), {d2});
    LocalizedGrClass via_star = pontryagin_product_loc(x, y, ring);
    LocalizedGrClass via_translate(pontryagin_translate(x.numerator(), gamma),
                                   {b2, d2});
    report.check(via_star.equals(via_translate),
                 "localized product agrees with pontryagin_translate",
                 json{{"x", x.render()}, {"gamma", gamma.to_string()}});
    report.check(pontryagin_product_loc(y, x, ring).equals(via_star),
                 "localized product commutes");

    // Unit: t_{b2} / t_{b2}.
    LocalizedGrClass unit(GrClass::basis_class(rs, AffineWeylElt::translation(rs, d2)), {d2});
    report.check(pontryagin_product_loc(x, unit, ring).equals(x),
                 "localized unit acts trivially");
  }

  // Surjectivity: every [O_{B(u)}]Q^beta has an explicit preimage.
  auto space = ModuleSpace::make(rs, ParabolicSubset::empty(2), false, true);
  for (int trial = 0; trial < 30; ++trial) {
    int u = static_cast<int>(rng() % space->dim());
    CorootVec beta({Int(static_cast<long>(rng() % 5) - 2),
                    Int(static_cast<long>(rng() % 5) - 2)});
    KClass target = basis_q(space, u, beta);
    LocalizedGrClass lift = peterson_phi_inverse(target);
    report.check(peterson_phi(lift) == target, "Phi o Phi^{-1} = id on the localized basis",
                 class_witness("target", target));
  }
  return report;
}

SuiteReport verify_a1_fixture(const json& chevalley_doc) {
  SuiteReport report{.suite = "fixture"};
  QKRing ring = QKRing::from_chevalley_json(chevalley_doc);
  auto space = ring.space();
  report.check(space->rs->type() == CartanType('A', 1), "fixture is type A1");
  report.check(space->dim() == 2, "fixture table is 2 x 2");

  auto cls = [&](int u) { return KClass::basis_class(space, u); };
  for (int u = 0; u < 2; ++u)
    for (int v = 0; v < 2; ++v) {
      report.check(ring.star(cls(u), cls(v)) == ring.star(cls(v), cls(u)),
                   "fixture commutativity");
      for (int w = 0; w < 2; ++w)
        report.check(ring.star(ring.star(cls(u), cls(v)), cls(w)) ==
                         ring.star(cls(u), ring.star(cls(v), cls(w))),
                     "fixture associativity");
    }

  int s1 = space->coset->rep_id(parse_finite_word(space->rs, "s1"));
  KClass expect(space);
  expect.add_term(s1, CorootVec::zero(1),
                  GroupAlgElt::one(1) - GroupAlgElt::monomial(space->rs->simple_root_weight(0)));
  expect.add_term(0, CorootVec::simple(1, 0),
                  GroupAlgElt::monomial(space->rs->simple_root_weight(0)));
  report.check(ring.table().product(s1, s1) == expect,
               "s1 * s1 = (1 - e^{alpha_1}) s1 + e^{alpha_1} Q1 * 1",
               class_witness("got", ring.table().product(s1, s1)));
  return report;
}

std::vector<SuiteReport> verify_core_suites(uint64_t seed) {
  return {verify_golden(), verify_ring_axioms(), verify_quotients(seed)};
}

}  // namespace qkp
