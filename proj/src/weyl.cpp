#include "qkp/weyl.hpp"

#include <algorithm>
#include <deque>

namespace qkp {

namespace {

// Roots keep a uniform coordinate sign; negativity of w(alpha) can be read
// off any nonzero coordinate of its coroot image.
bool coroot_is_negative(const std::vector<Int>& coords) {
  for (const auto& c : coords) {
    if (c < 0) return true;
    if (c > 0) return false;
  }
  return false;
}

int count_inversions(const RootSystem& rs, const IntMatrix& m) {
  int n = 0;
  for (const auto& root : rs.positive_roots())
    if (coroot_is_negative(m.apply(root.coroot.coords))) ++n;
  return n;
}

}  // namespace

WeylElt::WeylElt(RootSystemPtr rs, IntMatrix m, IntMatrix minv)
    : rs_(std::move(rs)), m_(std::move(m)), minv_(std::move(minv)) {
  length_ = count_inversions(*rs_, m_);
}

WeylElt WeylElt::identity(RootSystemPtr rs) {
  int r = rs->rank();
  return WeylElt(std::move(rs), IntMatrix::identity(r), IntMatrix::identity(r));
}

WeylElt WeylElt::simple_reflection(RootSystemPtr rs, int i) {
  if (i < 0 || i >= rs->rank()) throw DimensionError("simple reflection index out of range");
  IntMatrix m = rs->coroot_reflection(i);
  return WeylElt(std::move(rs), m, m);
}

WeylElt WeylElt::reflection(RootSystemPtr rs, int pos_root_index) {
  const auto& root = rs->positive_roots().at(pos_root_index);
  int r = rs->rank();
  // s_alpha(beta) = beta - <beta, alpha> alpha^vee
  IntMatrix m = IntMatrix::identity(r);
  for (int j = 0; j < r; ++j)
    for (int k = 0; k < r; ++k) m.at(k, j) -= root.weight.coords[j] * root.coroot.coords[k];
  return WeylElt(std::move(rs), m, m);
}

WeylElt WeylElt::from_word(RootSystemPtr rs, const std::vector<int>& word) {
  WeylElt w = identity(rs);
  for (int i : word) w = w * simple_reflection(rs, i);
  return w;
}

void WeylElt::check_same(const WeylElt& o) const {
  if (rs_->type() != o.rs_->type())
    throw DimensionError("Weyl elements from different root systems");
}

WeylElt WeylElt::operator*(const WeylElt& o) const {
  check_same(o);
  return WeylElt(rs_, m_.mul(o.m_), o.minv_.mul(minv_));
}

WeylElt WeylElt::inverse() const { return WeylElt(rs_, minv_, m_); }

CorootVec WeylElt::apply(const CorootVec& beta) const {
  rs_->check_rank(beta.rank(), "coroot");
  return CorootVec(m_.apply(beta.coords));
}

WeightVec WeylElt::apply(const WeightVec& lambda) const {
  // <w beta, w lambda> = <beta, lambda> forces the weight action to be the
  // transpose-inverse of the coroot action.
  rs_->check_rank(lambda.rank(), "weight");
  return WeightVec(minv_.transpose().apply(lambda.coords));
}

bool WeylElt::has_right_descent(int i) const {
  std::vector<Int> col(rs_->rank());
  for (int k = 0; k < rs_->rank(); ++k) col[k] = m_.at(k, i);
  return coroot_is_negative(col);
}

bool WeylElt::has_left_descent(int i) const {
  std::vector<Int> col(rs_->rank());
  for (int k = 0; k < rs_->rank(); ++k) col[k] = minv_.at(k, i);
  return coroot_is_negative(col);
}

const std::vector<int>& WeylElt::word() const {
  if (!word_) {
    std::vector<int> w;
    WeylElt u = *this;
    while (!u.is_identity()) {
      int i = 0;
      while (!u.has_left_descent(i)) ++i;
      w.push_back(i);
      u = WeylElt::simple_reflection(rs_, i) * u;
    }
    word_ = std::move(w);
  }
  return *word_;
}

std::string WeylElt::to_word_string() const {
  if (is_identity()) return "e";
  std::string s;
  for (int i : word()) {
    if (!s.empty()) s += "*";
    s += "s" + std::to_string(i + 1);
  }
  return s;
}

AffineWeylElt::AffineWeylElt(WeylElt finite, CorootVec translation)
    : finite_(std::move(finite)), beta_(std::move(translation)) {
  finite_.root_system()->check_rank(beta_.rank(), "translation coroot");
}

AffineWeylElt AffineWeylElt::identity(RootSystemPtr rs) {
  int r = rs->rank();
  return AffineWeylElt(WeylElt::identity(std::move(rs)), CorootVec::zero(r));
}

AffineWeylElt AffineWeylElt::translation(RootSystemPtr rs, CorootVec beta) {
  return AffineWeylElt(WeylElt::identity(std::move(rs)), std::move(beta));
}

AffineWeylElt AffineWeylElt::simple_affine(RootSystemPtr rs, int i) {
  if (i == 0) {
    const auto& theta = rs->theta();
    CorootVec beta = -theta.coroot;
    return AffineWeylElt(WeylElt::reflection(rs, rs->highest_root_index()), std::move(beta));
  }
  int r = rs->rank();
  return AffineWeylElt(WeylElt::simple_reflection(std::move(rs), i - 1), CorootVec::zero(r));
}

AffineWeylElt AffineWeylElt::operator*(const AffineWeylElt& o) const {
  // (u, beta)(v, gamma) = (uv, v^{-1}(beta) + gamma)
  return AffineWeylElt(finite_ * o.finite_,
                       o.finite_.inverse().apply(beta_) + o.beta_);
}

AffineWeylElt AffineWeylElt::inverse() const {
  WeylElt uinv = finite_.inverse();
  return AffineWeylElt(uinv, -finite_.apply(beta_));
}

Int AffineWeylElt::length() const {
  const RootSystem& rs = *root_system();
  Int total = 0;
  for (const auto& root : rs.positive_roots()) {
    Int term = rs.pairing(beta_, root.weight);
    if (coroot_is_negative(finite_.apply(root.coroot).coords)) term += 1;
    total += abs(term);
  }
  return total;
}

std::string AffineWeylElt::to_string() const {
  return finite_.to_word_string() + " * t" + beta_.to_string();
}

CosetSpace::CosetSpace(RootSystemPtr rs, ParabolicSubset J)
    : rs_(std::move(rs)), J_(std::move(J)) {
  rs_->check_rank(J_.rank(), "parabolic subset");
  WeylGroup group(rs_);
  for (const auto& w : group.elements()) {
    bool minimal = true;
    for (int j : J_.members())
      if (w.has_right_descent(j)) {
        minimal = false;
        break;
      }
    if (minimal) reps_.push_back(w);
  }
  // elements() is already sorted by (length, word)
  for (size_t id = 0; id < reps_.size(); ++id) index_[reps_[id].key()] = static_cast<int>(id);
}

int CosetSpace::rep_id(const WeylElt& u) const {
  auto it = index_.find(min_coset_rep(u, J_).key());
  if (it == index_.end()) throw Error("coset representative lookup failed");
  return it->second;
}

std::optional<int> CosetSpace::find(const WeylElt& u) const {
  auto it = index_.find(u.key());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

WeylGroup::WeylGroup(RootSystemPtr rs) : rs_(std::move(rs)) {}

const std::vector<WeylElt>& WeylGroup::elements() const {
  if (!elements_.empty()) return elements_;
  if (rs_->rank() > 4)
    throw UnsupportedError("full Weyl group enumeration is limited to rank <= 4");
  std::map<std::vector<Int>, WeylElt> seen;
  std::deque<WeylElt> queue;
  WeylElt id = WeylElt::identity(rs_);
  seen.emplace(id.key(), id);
  queue.push_back(id);
  while (!queue.empty()) {
    WeylElt w = queue.front();
    queue.pop_front();
    for (int i = 0; i < rs_->rank(); ++i) {
      WeylElt next = w * WeylElt::simple_reflection(rs_, i);
      if (seen.emplace(next.key(), next).second) queue.push_back(next);
    }
  }
  for (auto& [key, w] : seen) elements_.push_back(w);
  std::sort(elements_.begin(), elements_.end(), [](const WeylElt& a, const WeylElt& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.word() < b.word();
  });
  return elements_;
}

const WeylElt& WeylGroup::longest() const {
  if (!longest_) longest_ = elements().back();
  return *longest_;
}

CosetSpacePtr WeylGroup::coset_space(const ParabolicSubset& J) const {
  auto it = cosets_.find(J.members());
  if (it == cosets_.end())
    it = cosets_.emplace(J.members(), std::make_shared<CosetSpace>(rs_, J)).first;
  return it->second;
}

WeylElt min_coset_rep(const WeylElt& u, const ParabolicSubset& J) {
  u.root_system()->check_rank(J.rank(), "parabolic subset");
  WeylElt w = u;
  bool reduced = true;
  while (reduced) {
    reduced = false;
    for (int j : J.members()) {
      if (w.has_right_descent(j)) {
        w = w * WeylElt::simple_reflection(w.root_system(), j);
        reduced = true;
        break;
      }
    }
  }
  return w;
}

AffineWeylElt project_affine(const AffineWeylElt& w, const ParabolicSubset& J) {
  const auto& rs = w.root_system();
  return AffineWeylElt(min_coset_rep(w.finite(), J),
                       rs->project_coroot(w.translation(), J));
}

bool is_waf_minus(const AffineWeylElt& w) {
  Int len = w.length();
  for (int i = 1; i <= w.root_system()->rank(); ++i) {
    AffineWeylElt ws = w * AffineWeylElt::simple_affine(w.root_system(), i);
    if (ws.length() <= len) return false;
  }
  return true;
}

DynkinAutomorphism::DynkinAutomorphism(RootSystemPtr rs, std::vector<int> perm)
    : rs_(std::move(rs)), perm_(std::move(perm)) {
  const int r = rs_->rank();
  if (static_cast<int>(perm_.size()) != r)
    throw DimensionError("automorphism permutation has wrong size");
  std::vector<char> hit(r, 0);
  for (int v : perm_) {
    if (v < 0 || v >= r || hit[v])
      throw ParseError("not a permutation of the node set");
    hit[v] = 1;
  }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (rs_->cartan(perm_[i], perm_[j]) != rs_->cartan(i, j))
        throw PreconditionError("permutation does not preserve the Cartan matrix");
}

CorootVec DynkinAutomorphism::apply(const CorootVec& beta) const {
  rs_->check_rank(beta.rank(), "coroot");
  CorootVec out = CorootVec::zero(rs_->rank());
  for (int i = 0; i < rs_->rank(); ++i) out.coords[perm_[i]] = beta.coords[i];
  return out;
}

WeightVec DynkinAutomorphism::apply(const WeightVec& lambda) const {
  rs_->check_rank(lambda.rank(), "weight");
  WeightVec out = WeightVec::zero(rs_->rank());
  for (int i = 0; i < rs_->rank(); ++i) out.coords[perm_[i]] = lambda.coords[i];
  return out;
}

WeylElt DynkinAutomorphism::apply(const WeylElt& w) const {
  std::vector<int> image;
  for (int i : w.word()) image.push_back(perm_[i]);
  return WeylElt::from_word(rs_, image);
}

AffineWeylElt DynkinAutomorphism::apply(const AffineWeylElt& w) const {
  return AffineWeylElt(apply(w.finite()), apply(w.translation()));
}

AffineWeylElt parse_affine_word(RootSystemPtr rs, std::string_view text) {
  std::string s;
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ParseError("empty element word");

  AffineWeylElt out = AffineWeylElt::identity(rs);
  size_t pos = 0;
  while (pos < s.size()) {
    size_t next = s.find('*', pos);
    // '*' inside t[...] does not occur; ',' separates coordinates there.
    std::string tok = s.substr(pos, next == std::string::npos ? next : next - pos);
    pos = next == std::string::npos ? s.size() : next + 1;
    if (tok.empty() || (next != std::string::npos && pos >= s.size()))
      throw ParseError("empty factor in element word");
    if (tok == "e") continue;
    if (tok[0] == 's') {
      int i;
      try {
        size_t used = 0;
        i = std::stoi(tok.substr(1), &used);
        if (used != tok.size() - 1) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw ParseError("bad generator '" + tok + "'");
      }
      if (i < 0 || i > rs->rank())
        throw ParseError("generator index out of range in '" + tok + "'");
      out = out * AffineWeylElt::simple_affine(rs, i);
      continue;
    }
    if (tok[0] == 't') {
      if (tok.size() < 3 || tok[1] != '[' || tok.back() != ']')
        throw ParseError("bad translation '" + tok + "'");
      std::vector<Int> coords;
      std::string body = tok.substr(2, tok.size() - 3);
      size_t p = 0;
      while (true) {
        size_t c = body.find(',', p);
        coords.push_back(parse_int(body.substr(p, c == std::string::npos ? c : c - p)));
        if (c == std::string::npos) break;
        p = c + 1;
      }
      if (static_cast<int>(coords.size()) != rs->rank())
        throw ParseError("translation has wrong number of coordinates");
      out = out * AffineWeylElt::translation(rs, CorootVec(std::move(coords)));
      continue;
    }
    throw ParseError("unrecognized factor '" + tok + "'");
  }
  return out;
}

WeylElt parse_finite_word(RootSystemPtr rs, std::string_view text) {
  AffineWeylElt w = parse_affine_word(std::move(rs), text);
  if (!w.translation().is_zero())
    throw ParseError("expected a finite Weyl word: '" + std::string(text) + "'");
  return w.finite();
}

}  // namespace qkp
