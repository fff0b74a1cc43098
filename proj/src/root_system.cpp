#include "qkp/root_system.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace qkp {

namespace {

bool rank_admissible(char f, int r) {
  switch (f) {
    case 'A': return r >= 1;
    case 'B': return r >= 2;
    case 'C': return r >= 2;
    case 'D': return r >= 3;
    case 'E': return r >= 6 && r <= 8;
    case 'F': return r == 4;
    case 'G': return r == 2;
    default: return false;
  }
}

// Number of positive roots per type, used as a construction self-check.
int positive_root_count(char f, int r) {
  switch (f) {
    case 'A': return r * (r + 1) / 2;
    case 'B':
    case 'C': return r * r;
    case 'D': return r * (r - 1);
    case 'E': return r == 6 ? 36 : (r == 7 ? 63 : 120);
    case 'F': return 24;
    case 'G': return 6;
    default: return -1;
  }
}

// pairing_matrix[i][j] = <alpha_i^vee, alpha_j> for the Bourbaki numbering.
std::vector<std::vector<int>> pairing_matrix(CartanType t) {
  const int r = t.rank;
  std::vector<std::vector<int>> p(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i) p[i][i] = 2;
  auto bond = [&](int i, int j, int pij, int pji) {
    p[i][j] = pij;
    p[j][i] = pji;
  };
  auto chain = [&](int from, int to) {
    for (int i = from; i < to; ++i) bond(i, i + 1, -1, -1);
  };
  switch (t.family) {
    case 'A':
      chain(0, r - 1);
      break;
    case 'B':  // alpha_r short
      chain(0, r - 2);
      bond(r - 2, r - 1, -1, -2);
      break;
    case 'C':  // alpha_r long
      chain(0, r - 2);
      bond(r - 2, r - 1, -2, -1);
      break;
    case 'D':
      chain(0, r - 3);
      bond(r - 3, r - 2, -1, -1);
      bond(r - 3, r - 1, -1, -1);
      break;
    case 'E':
      // Bourbaki: chain 1-3-4-5-...-r, with node 2 attached to node 4.
      bond(0, 2, -1, -1);
      bond(1, 3, -1, -1);
      for (int i = 2; i < r - 1; ++i) bond(i, i + 1, -1, -1);
      break;
    case 'F':  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      bond(0, 1, -1, -1);
      bond(1, 2, -1, -2);
      bond(2, 3, -1, -1);
      break;
    case 'G':  // alpha_1 short, alpha_2 long
      bond(0, 1, -3, -1);
      break;
  }
  return p;
}

}  // namespace

CartanType::CartanType(char f, int r) : family(f), rank(r) {
  if (!rank_admissible(f, r))
    throw ParseError("inadmissible Cartan type " + std::string(1, f) +
                     std::to_string(r));
}

CartanType CartanType::parse(std::string_view text) {
  if (text.size() < 2) throw ParseError("Cartan type too short: '" + std::string(text) + "'");
  char f = text[0];
  if (f < 'A' || f > 'G')
    throw ParseError("unknown Cartan family '" + std::string(1, f) + "'");
  int r = 0;
  for (size_t k = 1; k < text.size(); ++k) {
    if (text[k] < '0' || text[k] > '9')
      throw ParseError("bad rank in Cartan type '" + std::string(text) + "'");
    r = r * 10 + (text[k] - '0');
    if (r > 64) throw ParseError("rank out of range in '" + std::string(text) + "'");
  }
  return CartanType(f, r);
}

bool WeightVec::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Int& c) { return c == 0; });
}

bool WeightVec::is_dominant() const {
  return std::all_of(coords.begin(), coords.end(), [](const Int& c) { return c >= 0; });
}

WeightVec& WeightVec::operator+=(const WeightVec& o) {
  if (coords.size() != o.coords.size()) throw DimensionError("weight rank mismatch");
  for (size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
  return *this;
}

WeightVec& WeightVec::operator-=(const WeightVec& o) {
  if (coords.size() != o.coords.size()) throw DimensionError("weight rank mismatch");
  for (size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
  return *this;
}

WeightVec WeightVec::operator-() const {
  WeightVec w = *this;
  for (auto& c : w.coords) c = -c;
  return w;
}

WeightVec WeightVec::operator*(const Int& k) const {
  WeightVec w = *this;
  for (auto& c : w.coords) c *= k;
  return w;
}

namespace {
std::string vec_to_string(const std::vector<Int>& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + "]";
}
}  // namespace

std::string WeightVec::to_string() const { return vec_to_string(coords); }

CorootVec CorootVec::simple(int rank, int i) {
  CorootVec b = zero(rank);
  b.coords[i] = 1;
  return b;
}

bool CorootVec::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Int& c) { return c == 0; });
}

bool CorootVec::is_nonnegative() const {
  return std::all_of(coords.begin(), coords.end(), [](const Int& c) { return c >= 0; });
}

CorootVec& CorootVec::operator+=(const CorootVec& o) {
  if (coords.size() != o.coords.size()) throw DimensionError("coroot rank mismatch");
  for (size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
  return *this;
}

CorootVec& CorootVec::operator-=(const CorootVec& o) {
  if (coords.size() != o.coords.size()) throw DimensionError("coroot rank mismatch");
  for (size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
  return *this;
}

CorootVec CorootVec::operator-() const {
  CorootVec b = *this;
  for (auto& c : b.coords) c = -c;
  return b;
}

CorootVec CorootVec::operator*(const Int& k) const {
  CorootVec b = *this;
  for (auto& c : b.coords) c *= k;
  return b;
}

std::string CorootVec::to_string() const { return vec_to_string(coords); }

ParabolicSubset::ParabolicSubset(std::vector<int> members, int rank)
    : rank_(rank), members_(std::move(members)), mask_(rank, 0) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (int i : members_) {
    if (i < 0 || i >= rank) throw DimensionError("parabolic node out of range");
    mask_[i] = 1;
  }
}

ParabolicSubset ParabolicSubset::full(int rank) {
  std::vector<int> all(rank);
  for (int i = 0; i < rank; ++i) all[i] = i;
  return ParabolicSubset(std::move(all), rank);
}

std::vector<int> ParabolicSubset::complement() const {
  std::vector<int> out;
  for (int i = 0; i < rank_; ++i)
    if (!mask_[i]) out.push_back(i);
  return out;
}

bool ParabolicSubset::is_subset_of(const ParabolicSubset& other) const {
  if (rank_ != other.rank_) return false;
  for (int i : members_)
    if (!other.contains(i)) return false;
  return true;
}

ParabolicSubset ParabolicSubset::unite(const ParabolicSubset& other) const {
  if (rank_ != other.rank_) throw DimensionError("parabolic rank mismatch");
  std::vector<int> m = members_;
  m.insert(m.end(), other.members_.begin(), other.members_.end());
  return ParabolicSubset(std::move(m), rank_);
}

std::string ParabolicSubset::to_string() const {
  std::string s = "{";
  for (size_t k = 0; k < members_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(members_[k] + 1);  // 1-based in text
  }
  return s + "}";
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m{n, std::vector<Int>(static_cast<size_t>(n) * n)};
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::mul(const IntMatrix& o) const {
  IntMatrix out{n, std::vector<Int>(static_cast<size_t>(n) * n)};
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const Int& aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) out.at(i, j) += aik * o.at(k, j);
    }
  return out;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
  std::vector<Int> out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += at(i, j) * v[j];
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out{n, std::vector<Int>(static_cast<size_t>(n) * n)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(j, i) = at(i, j);
  return out;
}

RootSystem::RootSystem(CartanType type) : type_(type) {
  const int r = rank();
  auto p = pairing_matrix(type);

  // cartan(i, j) = <alpha_j^vee, alpha_i> = p[j][i]
  cartan_ = IntMatrix{r, std::vector<Int>(static_cast<size_t>(r) * r)};
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) cartan_.at(i, j) = p[j][i];

  // Reflection matrices.  s_i(alpha_j^vee) = alpha_j^vee - <alpha_j^vee, alpha_i> alpha_i^vee
  // and s_i(varpi_j) = varpi_j - delta_ij alpha_i.
  for (int i = 0; i < r; ++i) {
    IntMatrix cm = IntMatrix::identity(r);
    for (int j = 0; j < r; ++j) cm.at(i, j) -= cartan_.at(i, j);
    coroot_refl_.push_back(std::move(cm));

    IntMatrix wm = IntMatrix::identity(r);
    for (int k = 0; k < r; ++k) wm.at(k, i) -= cartan_.at(i, k);
    weight_refl_.push_back(std::move(wm));
  }

  // Positive roots: closure of the simple roots under simple reflections.
  std::map<std::vector<Int>, int> seen;
  for (int i = 0; i < r; ++i) {
    PosRoot root;
    root.root = std::vector<Int>(r);
    root.root[i] = 1;
    root.coroot = CorootVec::simple(r, i);
    seen[root.root] = static_cast<int>(positive_.size());
    positive_.push_back(std::move(root));
  }
  for (size_t k = 0; k < positive_.size(); ++k) {
    for (int i = 0; i < r; ++i) {
      // <alpha_i^vee, alpha> with alpha = sum c_k alpha_k is sum c_k p[i][k].
      Int pair_i = 0;
      for (int j = 0; j < r; ++j) pair_i += positive_[k].root[j] * p[i][j];
      std::vector<Int> image = positive_[k].root;
      image[i] -= pair_i;
      bool positive_image =
          std::all_of(image.begin(), image.end(), [](const Int& c) { return c >= 0; });
      if (!positive_image || seen.count(image)) continue;
      // coroot of s_i(alpha) = s_i(alpha^vee)
      PosRoot root;
      root.root = std::move(image);
      root.coroot = CorootVec(coroot_refl_[i].apply(positive_[k].coroot.coords));
      seen[root.root] = static_cast<int>(positive_.size());
      positive_.push_back(std::move(root));
    }
  }
  if (static_cast<int>(positive_.size()) != positive_root_count(type.family, r))
    throw Error("positive root count mismatch for " + type.to_string());

  // Sort by (height, lex) for stable output, then derive weight coordinates.
  std::sort(positive_.begin(), positive_.end(),
            [](const PosRoot& a, const PosRoot& b) {
              Int ha = 0, hb = 0;
              for (const auto& c : a.root) ha += c;
              for (const auto& c : b.root) hb += c;
              if (ha != hb) return ha < hb;
              return a.root < b.root;
            });
  for (auto& root : positive_) {
    std::vector<Int> w(r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) w[i] += p[i][j] * root.root[j];
    root.weight = WeightVec(std::move(w));
  }

  // Highest root: the unique maximal-height positive root; check dominance
  // and <theta^vee, theta> = 2.
  theta_index_ = static_cast<int>(positive_.size()) - 1;
  if (!positive_[theta_index_].weight.is_dominant())
    throw Error("highest root is not dominant for " + type.to_string());
  if (pairing(positive_[theta_index_].coroot, positive_[theta_index_].weight) != 2)
    throw Error("<theta^vee, theta> != 2 for " + type.to_string());
}

std::shared_ptr<const RootSystem> RootSystem::make(CartanType type) {
  return std::shared_ptr<const RootSystem>(new RootSystem(type));
}

WeightVec RootSystem::fundamental_weight(int i) const {
  WeightVec w = WeightVec::zero(rank());
  w.coords[i] = 1;
  return w;
}

WeightVec RootSystem::simple_root_weight(int i) const {
  std::vector<Int> w(rank());
  for (int j = 0; j < rank(); ++j) w[j] = cartan_.at(i, j);
  return WeightVec(std::move(w));
}

Int RootSystem::pairing(const CorootVec& beta, const WeightVec& lambda) const {
  check_rank(beta.rank(), "coroot");
  check_rank(lambda.rank(), "weight");
  Int s = 0;
  for (int i = 0; i < rank(); ++i) s += beta.coords[i] * lambda.coords[i];
  return s;
}

Int RootSystem::pairing_simple_root(const CorootVec& beta, int i) const {
  check_rank(beta.rank(), "coroot");
  Int s = 0;
  for (int j = 0; j < rank(); ++j) s += beta.coords[j] * cartan_.at(i, j);
  return s;
}

CorootVec RootSystem::project_coroot(const CorootVec& beta, const ParabolicSubset& J) const {
  check_rank(beta.rank(), "coroot");
  CorootVec out = beta;
  for (int i : J.members()) out.coords[i] = 0;
  return out;
}

WeightVec RootSystem::project_weight(const WeightVec& lambda, const ParabolicSubset& J) const {
  check_rank(lambda.rank(), "weight");
  WeightVec out = lambda;
  for (int i : J.members()) out.coords[i] = 0;
  return out;
}

bool RootSystem::is_strictly_antidominant(const CorootVec& beta) const {
  check_rank(beta.rank(), "coroot");
  for (int i = 0; i < rank(); ++i)
    if (pairing_simple_root(beta, i) >= 0) return false;
  return true;
}

void RootSystem::check_rank(int r, const char* what) const {
  if (r != rank())
    throw DimensionError(std::string(what) + " has rank " + std::to_string(r) +
                         ", expected " + std::to_string(rank()));
}

}  // namespace qkp
