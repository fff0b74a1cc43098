#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qkp/group_alg.hpp"

namespace qkp {

/// Ring descriptor for C[P] (x) C[Q^vee_J]: rank, parabolic J (Novikov
/// variables are Q_i for i in J^c), Laurent flag for the Q part, q flag.
struct RingDesc {
  int rank = 0;
  ParabolicSubset J;
  bool localized = false;
  bool q_mode = false;

  bool same_ring(const RingDesc& o) const {
    return rank == o.rank && J == o.J && q_mode == o.q_mode;
  }
};

/// Polynomial in the Novikov variables with GroupAlgElt coefficients,
/// stored flat as (novikov exponent, weight exponent, q exponent) -> Rat
/// in Novikov-major graded-lex order.
class NovikovPoly {
 public:
  struct Key {
    std::vector<Int> nov;
    std::vector<Int> wt;
    Int q;
    bool operator==(const Key& o) const {
      return nov == o.nov && wt == o.wt && q == o.q;
    }
  };
  struct KeyLess {
    bool operator()(const Key& a, const Key& b) const {
      int c = graded_lex_cmp(a.nov, b.nov);
      if (c != 0) return c < 0;
      c = graded_lex_cmp(a.wt, b.wt);
      if (c != 0) return c < 0;
      return a.q < b.q;
    }
  };
  using TermMap = std::map<Key, Rat, KeyLess>;

  NovikovPoly() = default;
  explicit NovikovPoly(RingDesc desc) : desc_(std::move(desc)) {}

  static NovikovPoly zero(RingDesc desc) { return NovikovPoly(std::move(desc)); }
  static NovikovPoly one(RingDesc desc);
  static NovikovPoly constant(RingDesc desc, Rat c);
  /// c Q^{beta}.
  static NovikovPoly q_monomial(RingDesc desc, const CorootVec& beta, Rat c = Rat(1));
  static NovikovPoly from_scalar(RingDesc desc, const GroupAlgElt& c,
                                 const CorootVec* beta = nullptr);

  const RingDesc& desc() const { return desc_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  /// All Novikov exponents lie in Q^vee_{J,+}.
  bool novikov_nonnegative() const;

  NovikovPoly& operator+=(const NovikovPoly& o);
  NovikovPoly& operator-=(const NovikovPoly& o);
  friend NovikovPoly operator+(NovikovPoly a, const NovikovPoly& b) { return a += b; }
  friend NovikovPoly operator-(NovikovPoly a, const NovikovPoly& b) { return a -= b; }
  NovikovPoly operator-() const;
  NovikovPoly operator*(const NovikovPoly& o) const;
  NovikovPoly operator*(const Rat& c) const;

  friend bool operator==(const NovikovPoly& a, const NovikovPoly& b) {
    return a.desc_.same_ring(b.desc_) && a.terms_ == b.terms_;
  }

  /// Multiply by Q^{beta} in place.
  void q_shift_exponents(const CorootVec& beta);
  /// Divide every term by the given monomial key.
  NovikovPoly divide_monomial(const Key& m) const;
  /// Componentwise minimum of all exponent keys (the content monomial).
  Key content_key() const;
  const Key& leading_key() const;
  const Rat& leading_coeff() const;

  /// Exact division; nullopt when the divisor does not divide exactly.
  std::optional<NovikovPoly> exact_div(const NovikovPoly& g) const;

  /// Ring maps.
  NovikovPoly specialize_novikov(const ParabolicSubset& target_J) const;
  NovikovPoly q_to_one() const;
  NovikovPoly permute_nodes(const std::vector<int>& perm) const;
  NovikovPoly with_localized(bool localized) const;

  /// View of the GroupAlgElt coefficient of Q^{beta}.
  GroupAlgElt group_coeff(const CorootVec& beta) const;
  std::vector<CorootVec> novikov_support() const;

  /// Text: terms "c * x^a * y^b * q^k * Q1^m * Q2^n" joined by " + ".
  std::string render() const;
  static NovikovPoly parse(RingDesc desc, std::string_view text);

  void add_term(Key key, Rat coeff);
  size_t term_count() const { return terms_.size(); }

 private:
  void check_key(const Key& key) const;
  void check_compatible(const NovikovPoly& o) const;

  RingDesc desc_;
  TermMap terms_;
};

/// Element of the fraction field; numerator and denominator live in the
/// localized ring, equality is by cross-multiplication.
class FracElt {
 public:
  FracElt() = default;
  explicit FracElt(NovikovPoly num);
  FracElt(NovikovPoly num, NovikovPoly den);

  static FracElt zero(const RingDesc& desc);
  static FracElt one(const RingDesc& desc);

  const NovikovPoly& num() const { return num_; }
  const NovikovPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// Denominator normalizes to 1.
  bool is_polynomial() const;
  /// Numerator after normalization; throws unless is_polynomial().
  NovikovPoly as_polynomial(bool localized) const;

  FracElt operator+(const FracElt& o) const;
  FracElt operator-(const FracElt& o) const;
  FracElt operator*(const FracElt& o) const;
  FracElt operator/(const FracElt& o) const;
  FracElt operator-() const;

  bool equals(const FracElt& o) const;

  /// Strips the denominator's content monomial and leading coefficient.
  void normalize();

  std::string render() const;

 private:
  NovikovPoly num_, den_;
};

}  // namespace qkp
