#include "qkp/group_alg.hpp"

#include <sstream>

namespace qkp {

int graded_lex_cmp(const std::vector<Int>& a, const std::vector<Int>& b) {
  Int da = 0, db = 0;
  for (const auto& c : a) da += c;
  for (const auto& c : b) db += c;
  if (da != db) return da < db ? -1 : 1;
  if (a < b) return -1;
  if (b < a) return 1;
  return 0;
}

std::string weight_var_name(int i, int rank) {
  static const char* names[4] = {"x", "y", "z", "w"};
  if (rank > 4)
    throw UnsupportedError("coefficient text is limited to rank <= 4");
  return names[i];
}

GroupAlgElt GroupAlgElt::constant(int rank, Rat c, bool q_mode) {
  GroupAlgElt e(rank, q_mode);
  e.add_term(Key{std::vector<Int>(rank), 0}, std::move(c));
  return e;
}

GroupAlgElt GroupAlgElt::monomial(WeightVec lambda, Int qexp, Rat coeff, bool q_mode) {
  GroupAlgElt e(lambda.rank(), q_mode);
  if (!q_mode && qexp != 0) throw ModeError("q exponent outside q mode");
  e.add_term(Key{std::move(lambda.coords), std::move(qexp)}, std::move(coeff));
  return e;
}

bool GroupAlgElt::is_one() const {
  if (terms_.size() != 1) return false;
  const auto& [key, coeff] = *terms_.begin();
  if (coeff != 1 || key.q != 0) return false;
  for (const auto& c : key.wt)
    if (c != 0) return false;
  return true;
}

bool GroupAlgElt::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const auto& key = terms_.begin()->first;
  if (key.q != 0) return false;
  for (const auto& c : key.wt)
    if (c != 0) return false;
  return true;
}

void GroupAlgElt::check_compatible(const GroupAlgElt& o) const {
  if (rank_ != o.rank_ || q_mode_ != o.q_mode_)
    throw DimensionError("group algebra descriptor mismatch");
}

void GroupAlgElt::add_term(Key key, Rat coeff) {
  if (coeff == 0) return;
  if (static_cast<int>(key.wt.size()) != rank_)
    throw DimensionError("exponent length does not match the rank");
  if (!q_mode_ && key.q != 0) throw ModeError("q exponent outside q mode");
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), std::move(coeff));
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupAlgElt& GroupAlgElt::operator+=(const GroupAlgElt& o) {
  check_compatible(o);
  for (const auto& [key, coeff] : o.terms_) add_term(key, coeff);
  return *this;
}

GroupAlgElt& GroupAlgElt::operator-=(const GroupAlgElt& o) {
  check_compatible(o);
  for (const auto& [key, coeff] : o.terms_) add_term(key, -coeff);
  return *this;
}

GroupAlgElt GroupAlgElt::operator-() const {
  GroupAlgElt out(rank_, q_mode_);
  for (const auto& [key, coeff] : terms_) out.terms_.emplace(key, -coeff);
  return out;
}

GroupAlgElt GroupAlgElt::operator*(const GroupAlgElt& o) const {
  check_compatible(o);
  GroupAlgElt out(rank_, q_mode_);
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_) {
      Key key = ka;
      for (int i = 0; i < rank_; ++i) key.wt[i] += kb.wt[i];
      key.q += kb.q;
      out.add_term(std::move(key), ca * cb);
    }
  return out;
}

GroupAlgElt GroupAlgElt::operator*(const Rat& c) const {
  GroupAlgElt out(rank_, q_mode_);
  if (c == 0) return out;
  for (const auto& [key, coeff] : terms_) out.terms_.emplace(key, coeff * c);
  return out;
}

void GroupAlgElt::shift(const WeightVec& lambda, const Int& qexp) {
  if (lambda.rank() != rank_) throw DimensionError("weight rank mismatch");
  if (!q_mode_ && qexp != 0) throw ModeError("q exponent outside q mode");
  TermMap shifted;
  for (auto& [key, coeff] : terms_) {
    Key k = key;
    for (int i = 0; i < rank_; ++i) k.wt[i] += lambda.coords[i];
    k.q += qexp;
    shifted.emplace(std::move(k), coeff);
  }
  terms_ = std::move(shifted);
}

GroupAlgElt GroupAlgElt::q_to_one() const {
  GroupAlgElt out(rank_, false);
  for (const auto& [key, coeff] : terms_) out.add_term(Key{key.wt, 0}, coeff);
  return out;
}

GroupAlgElt GroupAlgElt::to_q_mode() const {
  GroupAlgElt out(rank_, true);
  for (const auto& [key, coeff] : terms_) out.terms_.emplace(key, coeff);
  return out;
}

GroupAlgElt GroupAlgElt::permute_weights(const std::vector<int>& perm) const {
  GroupAlgElt out(rank_, q_mode_);
  for (const auto& [key, coeff] : terms_) {
    Key k = key;
    for (int i = 0; i < rank_; ++i) k.wt[perm[i]] = key.wt[i];
    out.add_term(std::move(k), coeff);
  }
  return out;
}

std::string GroupAlgElt::render() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, coeff] : terms_) {
    if (!out.empty()) out += " + ";
    out += to_string(coeff);
    for (int i = 0; i < rank_; ++i)
      if (key.wt[i] != 0) out += " * " + weight_var_name(i, rank_) + "^" + key.wt[i].get_str();
    if (key.q != 0) out += " * q^" + key.q.get_str();
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

GroupAlgElt GroupAlgElt::parse(int rank, bool q_mode, std::string_view text) {
  GroupAlgElt out(rank, q_mode);
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
    Key key{std::vector<Int>(rank), 0};
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
      for (int i = 0; i < rank && !matched; ++i)
        if (name == weight_var_name(i, rank)) {
          key.wt[i] += exp;
          matched = true;
        }
      if (!matched && name == "q") {
        if (!q_mode) throw ModeError("q variable outside q mode");
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

}  // namespace qkp
