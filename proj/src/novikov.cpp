#include "qkp/novikov.hpp"

#include <algorithm>

namespace qkp {

NovikovPoly NovikovPoly::one(RingDesc desc) { return constant(std::move(desc), Rat(1)); }

NovikovPoly NovikovPoly::constant(RingDesc desc, Rat c) {
  NovikovPoly p(std::move(desc));
  int r = p.desc_.rank;
  p.add_term(Key{std::vector<Int>(r), std::vector<Int>(r), 0}, std::move(c));
  return p;
}

NovikovPoly NovikovPoly::q_monomial(RingDesc desc, const CorootVec& beta, Rat c) {
  NovikovPoly p(std::move(desc));
  p.add_term(Key{beta.coords, std::vector<Int>(p.desc_.rank), 0}, std::move(c));
  return p;
}

NovikovPoly NovikovPoly::from_scalar(RingDesc desc, const GroupAlgElt& c,
                                     const CorootVec* beta) {
  if (c.rank() != desc.rank || c.q_mode() != desc.q_mode)
    throw DimensionError("scalar does not match ring descriptor");
  NovikovPoly p(std::move(desc));
  std::vector<Int> nov =
      beta ? beta->coords : std::vector<Int>(p.desc_.rank);
  for (const auto& [key, coeff] : c.terms())
    p.add_term(Key{nov, key.wt, key.q}, coeff);
  return p;
}

bool NovikovPoly::is_one() const {
  if (terms_.size() != 1) return false;
  const auto& [key, coeff] = *terms_.begin();
  if (coeff != 1 || key.q != 0) return false;
  auto all_zero = [](const std::vector<Int>& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& c) { return c == 0; });
  };
  return all_zero(key.nov) && all_zero(key.wt);
}

bool NovikovPoly::novikov_nonnegative() const {
  for (const auto& [key, coeff] : terms_)
    for (const auto& c : key.nov)
      if (c < 0) return false;
  return true;
}

void NovikovPoly::check_key(const Key& key) const {
  if (static_cast<int>(key.nov.size()) != desc_.rank ||
      static_cast<int>(key.wt.size()) != desc_.rank)
    throw DimensionError("exponent length does not match the ring rank");
  for (int j : desc_.J.members())
    if (key.nov[j] != 0)
      throw DimensionError("Novikov exponent supported on J");
  if (!desc_.localized)
    for (const auto& c : key.nov)
      if (c < 0) throw ModeError("negative Novikov exponent in unlocalized ring");
  if (!desc_.q_mode && key.q != 0) throw ModeError("q exponent outside q mode");
}

void NovikovPoly::check_compatible(const NovikovPoly& o) const {
  if (!desc_.same_ring(o.desc_)) throw DimensionError("ring descriptor mismatch");
}

void NovikovPoly::add_term(Key key, Rat coeff) {
  if (coeff == 0) return;
  check_key(key);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), std::move(coeff));
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

NovikovPoly& NovikovPoly::operator+=(const NovikovPoly& o) {
  check_compatible(o);
  desc_.localized = desc_.localized || o.desc_.localized;
  for (const auto& [key, coeff] : o.terms_) add_term(key, coeff);
  return *this;
}

NovikovPoly& NovikovPoly::operator-=(const NovikovPoly& o) {
  check_compatible(o);
  desc_.localized = desc_.localized || o.desc_.localized;
  for (const auto& [key, coeff] : o.terms_) add_term(key, -coeff);
  return *this;
}

NovikovPoly NovikovPoly::operator-() const {
  NovikovPoly out(desc_);
  for (const auto& [key, coeff] : terms_) out.terms_.emplace(key, -coeff);
  return out;
}

NovikovPoly NovikovPoly::operator*(const NovikovPoly& o) const {
  check_compatible(o);
  RingDesc d = desc_;
  d.localized = desc_.localized || o.desc_.localized;
  NovikovPoly out(d);
  const int r = desc_.rank;
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_) {
      Key key = ka;
      for (int i = 0; i < r; ++i) {
        key.nov[i] += kb.nov[i];
        key.wt[i] += kb.wt[i];
      }
      key.q += kb.q;
      out.add_term(std::move(key), ca * cb);
    }
  return out;
}

NovikovPoly NovikovPoly::operator*(const Rat& c) const {
  NovikovPoly out(desc_);
  if (c == 0) return out;
  for (const auto& [key, coeff] : terms_) out.terms_.emplace(key, coeff * c);
  return out;
}

void NovikovPoly::q_shift_exponents(const CorootVec& beta) {
  if (beta.rank() != desc_.rank) throw DimensionError("coroot rank mismatch");
  TermMap shifted;
  for (auto& [key, coeff] : terms_) {
    Key k = key;
    for (int i = 0; i < desc_.rank; ++i) k.nov[i] += beta.coords[i];
    check_key(k);
    shifted.emplace(std::move(k), coeff);
  }
  terms_ = std::move(shifted);
}

NovikovPoly NovikovPoly::divide_monomial(const Key& m) const {
  RingDesc d = desc_;
  d.localized = true;
  NovikovPoly out(d);
  for (const auto& [key, coeff] : terms_) {
    Key k = key;
    for (int i = 0; i < desc_.rank; ++i) {
      k.nov[i] -= m.nov[i];
      k.wt[i] -= m.wt[i];
    }
    k.q -= m.q;
    out.terms_.emplace(std::move(k), coeff);
  }
  return out;
}

NovikovPoly::Key NovikovPoly::content_key() const {
  if (terms_.empty()) throw Error("content of zero polynomial");
  Key m = terms_.begin()->first;
  for (const auto& [key, coeff] : terms_) {
    for (int i = 0; i < desc_.rank; ++i) {
      if (key.nov[i] < m.nov[i]) m.nov[i] = key.nov[i];
      if (key.wt[i] < m.wt[i]) m.wt[i] = key.wt[i];
    }
    if (key.q < m.q) m.q = key.q;
  }
  return m;
}

const NovikovPoly::Key& NovikovPoly::leading_key() const {
  if (terms_.empty()) throw Error("leading term of zero polynomial");
  return terms_.rbegin()->first;
}

const Rat& NovikovPoly::leading_coeff() const {
  if (terms_.empty()) throw Error("leading term of zero polynomial");
  return terms_.rbegin()->second;
}

std::optional<NovikovPoly> NovikovPoly::exact_div(const NovikovPoly& g) const {
  check_compatible(g);
  if (g.is_zero()) throw Error("division by zero polynomial");
  RingDesc d = desc_;
  d.localized = true;
  NovikovPoly quotient(d), rest = with_localized(true);
  NovikovPoly gl = g.with_localized(true);
  const Key& lg = gl.leading_key();
  const Rat& cg = gl.leading_coeff();
  const int r = desc_.rank;
  size_t guard = 0;
  constexpr size_t kDivisionCap = 1u << 20;
  while (!rest.is_zero()) {
    if (++guard > kDivisionCap) return std::nullopt;
    Key t = rest.leading_key();
    for (int i = 0; i < r; ++i) {
      t.nov[i] -= lg.nov[i];
      t.wt[i] -= lg.wt[i];
    }
    t.q -= lg.q;
    Rat c = rest.leading_coeff() / cg;
    NovikovPoly term(d);
    term.terms_.emplace(t, c);
    quotient += term;
    rest -= term * gl;
  }
  return quotient;
}

NovikovPoly NovikovPoly::specialize_novikov(const ParabolicSubset& target_J) const {
  RingDesc d = desc_;
  d.J = desc_.J.unite(target_J);
  NovikovPoly out(d);
  for (const auto& [key, coeff] : terms_) {
    Key k = key;
    for (int j : target_J.members()) k.nov[j] = 0;
    out.add_term(std::move(k), coeff);
  }
  return out;
}

NovikovPoly NovikovPoly::q_to_one() const {
  RingDesc d = desc_;
  d.q_mode = false;
  NovikovPoly out(d);
  for (const auto& [key, coeff] : terms_) out.add_term(Key{key.nov, key.wt, 0}, coeff);
  return out;
}

NovikovPoly NovikovPoly::permute_nodes(const std::vector<int>& perm) const {
  RingDesc d = desc_;
  std::vector<int> jm;
  for (int j : desc_.J.members()) jm.push_back(perm[j]);
  d.J = ParabolicSubset(jm, desc_.rank);
  NovikovPoly out(d);
  for (const auto& [key, coeff] : terms_) {
    Key k = key;
    for (int i = 0; i < desc_.rank; ++i) {
      k.nov[perm[i]] = key.nov[i];
      k.wt[perm[i]] = key.wt[i];
    }
    out.add_term(std::move(k), coeff);
  }
  return out;
}

NovikovPoly NovikovPoly::with_localized(bool localized) const {
  RingDesc d = desc_;
  d.localized = localized;
  NovikovPoly out(d);
  for (const auto& [key, coeff] : terms_) {
    out.check_key(key);
    out.terms_.emplace(key, coeff);
  }
  return out;
}

GroupAlgElt NovikovPoly::group_coeff(const CorootVec& beta) const {
  GroupAlgElt out(desc_.rank, desc_.q_mode);
  for (const auto& [key, coeff] : terms_)
    if (key.nov == beta.coords) out.add_term(GroupAlgElt::Key{key.wt, key.q}, coeff);
  return out;
}

std::vector<CorootVec> NovikovPoly::novikov_support() const {
  std::vector<CorootVec> out;
  for (const auto& [key, coeff] : terms_) {
    CorootVec b(key.nov);
    if (out.empty() || !(out.back() == b)) out.push_back(std::move(b));
  }
  return out;
}

std::string NovikovPoly::render() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, coeff] : terms_) {
    if (!out.empty()) out += " + ";
    out += to_string(coeff);
    for (int i = 0; i < desc_.rank; ++i)
      if (key.wt[i] != 0)
        out += " * " + weight_var_name(i, desc_.rank) + "^" + key.wt[i].get_str();
    if (key.q != 0) out += " * q^" + key.q.get_str();
    for (int i = 0; i < desc_.rank; ++i)
      if (key.nov[i] != 0)
        out += " * Q" + std::to_string(i + 1) + "^" + key.nov[i].get_str();
  }
  return out;
}

namespace {
std::string trim(std::string_view s) {
  size_t b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return "";
  size_t e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}
}  // namespace

NovikovPoly NovikovPoly::parse(RingDesc desc, std::string_view text) {
  NovikovPoly out(desc);
  const int r = desc.rank;
  std::string s(text);
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t plus = s.find('+', pos);
    std::string term = trim(s.substr(pos, plus == std::string::npos ? plus : plus - pos));
    pos = plus == std::string::npos ? s.size() + 1 : plus + 1;
    if (term.empty()) {
      if (plus == std::string::npos) break;
      throw ParseError("empty term in coefficient text");
    }
    if (term == "0") continue;
    Key key{std::vector<Int>(r), std::vector<Int>(r), 0};
    Rat coeff(1);
    bool saw_coeff = false;
    size_t fpos = 0;
    while (fpos < term.size()) {
      size_t star = term.find('*', fpos);
      std::string factor =
          trim(term.substr(fpos, star == std::string::npos ? star : star - fpos));
      fpos = star == std::string::npos ? term.size() : star + 1;
      if (factor.empty() || (star != std::string::npos && fpos >= term.size()))
        throw ParseError("empty factor in coefficient term");
      size_t caret = factor.find('^');
      std::string name = factor.substr(0, caret);
      Int exp = caret == std::string::npos ? Int(1) : parse_int(factor.substr(caret + 1));
      bool matched = false;
      if (name.size() >= 2 && name[0] == 'Q') {
        int qi = 0;
        try {
          size_t used = 0;
          qi = std::stoi(name.substr(1), &used);
          if (used != name.size() - 1) throw std::invalid_argument("");
        } catch (const std::exception&) {
          throw ParseError("bad Novikov variable '" + name + "'");
        }
        if (qi < 1 || qi > r) throw ParseError("Novikov index out of range in '" + name + "'");
        key.nov[qi - 1] += exp;
        matched = true;
      }
      for (int i = 0; i < r && !matched; ++i)
        if (name == weight_var_name(i, r)) {
          key.wt[i] += exp;
          matched = true;
        }
      if (!matched && name == "q") {
        if (!desc.q_mode) throw ModeError("q variable outside q mode");
        key.q += exp;
        matched = true;
      }
      if (!matched) {
        if (saw_coeff || caret != std::string::npos)
          throw ParseError("unrecognized variable '" + name + "'");
        coeff = parse_rational(name);
        saw_coeff = true;
      }
    }
    out.add_term(std::move(key), coeff);
  }
  return out;
}

FracElt::FracElt(NovikovPoly num)
    : num_(num.with_localized(true)),
      den_(NovikovPoly::one(num_.desc())) {}

FracElt::FracElt(NovikovPoly num, NovikovPoly den)
    : num_(num.with_localized(true)), den_(den.with_localized(true)) {
  if (den_.is_zero()) throw Error("zero denominator");
  if (!num_.desc().same_ring(den_.desc())) throw DimensionError("ring descriptor mismatch");
  normalize();
}

FracElt FracElt::zero(const RingDesc& desc) { return FracElt(NovikovPoly::zero(desc)); }
FracElt FracElt::one(const RingDesc& desc) { return FracElt(NovikovPoly::one(desc)); }

bool FracElt::is_polynomial() const { return den_.is_one(); }

NovikovPoly FracElt::as_polynomial(bool localized) const {
  if (!den_.is_one()) throw NonpolynomialError("fraction has a nontrivial denominator");
  return num_.with_localized(localized);
}

FracElt FracElt::operator+(const FracElt& o) const {
  FracElt out;
  out.num_ = num_ * o.den_ + o.num_ * den_;
  out.den_ = den_ * o.den_;
  out.normalize();
  return out;
}

FracElt FracElt::operator-(const FracElt& o) const {
  FracElt out;
  out.num_ = num_ * o.den_ - o.num_ * den_;
  out.den_ = den_ * o.den_;
  out.normalize();
  return out;
}

FracElt FracElt::operator*(const FracElt& o) const {
  FracElt out;
  out.num_ = num_ * o.num_;
  out.den_ = den_ * o.den_;
  out.normalize();
  return out;
}

FracElt FracElt::operator/(const FracElt& o) const {
  if (o.is_zero()) throw Error("division by zero fraction");
  FracElt out;
  out.num_ = num_ * o.den_;
  out.den_ = den_ * o.num_;
  out.normalize();
  return out;
}

FracElt FracElt::operator-() const {
  FracElt out = *this;
  out.num_ = -out.num_;
  return out;
}

bool FracElt::equals(const FracElt& o) const {
  return (num_ * o.den_) == (o.num_ * den_);
}

void FracElt::normalize() {
  if (num_.is_zero()) {
    den_ = NovikovPoly::one(den_.desc());
    return;
  }
  auto content = den_.content_key();
  num_ = num_.divide_monomial(content);
  den_ = den_.divide_monomial(content);
  Rat lead = den_.leading_coeff();
  if (lead != 1) {
    Rat inv = Rat(1) / lead;
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

std::string FracElt::render() const {
  if (den_.is_one()) return num_.render();
  return "(" + num_.render() + ") / (" + den_.render() + ")";
}

}  // namespace qkp
