#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hi028/radicand.hpp"
#include "hi028/rational.hpp"

namespace hi028::exactnum {

/// One summand `coeff * sqrt(radicand)`; radicand 1 marks the rational part.
struct RadicalTerm {
  Integer radicand;
  Rational coeff;
};

/// Element of a real biquadratic field:
///
///   x = a + b*sqrt(k1) + c*sqrt(k2) + d*sqrt(m),   m = k1*k2 / gcd(k1,k2)^2
///
/// Invariants maintained by every constructor path:
///   * absent radicands are stored as 0; when k2 is absent so are c and d,
///     and when k1 is absent the value is plain rational;
///   * k1 < k2, both >= 2, neither a perfect square, k1*k2 not a perfect
///     square.  {1, sqrt(k1), sqrt(k2), sqrt(m)} is then a Q-basis, so the
///     zero test is coefficient comparison and needs no numerics.
///
/// Values whose radicals span more than two independent classes do not fit
/// and construction throws RADICAND_OVERFLOW.
class AlgNum {
 public:
  AlgNum() = default;
  AlgNum(const Rational& value) : a_(value) {}
  AlgNum(Rational&& value) : a_(std::move(value)) {}
  AlgNum(const Integer& value) : a_(value) {}
  AlgNum(int value) : a_(value) {}

  /// Canonicalises an arbitrary sum of radical terms.  With `reduce` set each
  /// radicand is first put through split_square; arithmetic below passes
  /// pre-reduced terms and skips that cost.
  static AlgNum from_terms(const std::vector<RadicalTerm>& terms, bool reduce = true) {
    Rational rational_part = 0;
    struct ClassAcc {
      Integer rep;
      Rational coeff;
    };
    std::vector<ClassAcc> classes;

    for (const RadicalTerm& term : terms) {
      if (term.coeff.is_zero()) continue;
      Integer k = term.radicand;
      Rational coeff = term.coeff;
      if (k <= 0) throw Error(ErrorCode::negative_radicand, "radicand must be positive");
      if (k != 1) {
        if (reduce) {
          SqrtSplit split = split_square(k);
          if (split.scale != 1) coeff *= Rational(split.scale);
          k = split.radicand;
        } else {
          Integer root;
          if (is_perfect_square(k, &root)) {
            coeff *= Rational(root);
            k = 1;
          }
        }
      }
      if (k == 1) {
        rational_part += coeff;
        continue;
      }
      bool merged = false;
      for (ClassAcc& cls : classes) {
        if (cls.rep == k) {
          cls.coeff += coeff;
          merged = true;
          break;
        }
        Rational ratio;  // sqrt(k) = ratio * sqrt(cls.rep)
        if (same_class(k, cls.rep, &ratio)) {
          if (k < cls.rep) {
            cls.coeff /= ratio;  // rebase the class onto the smaller radicand
            cls.rep = k;
            cls.coeff += coeff;
          } else {
            cls.coeff += coeff * ratio;
          }
          merged = true;
          break;
        }
      }
      if (!merged) classes.push_back({std::move(k), std::move(coeff)});
    }

    std::erase_if(classes, [](const ClassAcc& cls) { return cls.coeff.is_zero(); });
    std::sort(classes.begin(), classes.end(),
              [](const ClassAcc& lhs, const ClassAcc& rhs) { return lhs.rep < rhs.rep; });

    AlgNum out;
    out.a_ = std::move(rational_part);
    switch (classes.size()) {
      case 0:
        return out;
      case 1:
        out.k1_ = classes[0].rep;
        out.b_ = classes[0].coeff;
        return out;
      case 2:
        out.k1_ = classes[0].rep;
        out.k2_ = classes[1].rep;
        out.b_ = classes[0].coeff;
        out.c_ = classes[1].coeff;
        return out;
      case 3: {
        Integer triple = classes[0].rep * classes[1].rep * classes[2].rep;
        if (!is_perfect_square(triple))
          throw Error(ErrorCode::radicand_overflow, "more than two independent radicands");
        out.k1_ = classes[0].rep;
        out.k2_ = classes[1].rep;
        out.b_ = classes[0].coeff;
        out.c_ = classes[1].coeff;
        Integer mval = derived_m(out.k1_, out.k2_);
        Rational ratio;  // sqrt(rep) = ratio * sqrt(mval)
        if (!same_class(classes[2].rep, mval, &ratio))
          throw Error(ErrorCode::radicand_overflow, "radicand classes are inconsistent");
        out.d_ = classes[2].coeff * ratio;
        return out;
      }
      default:
        throw Error(ErrorCode::radicand_overflow, "more than two independent radicands");
    }
  }

  bool is_zero() const { return a_.is_zero() && b_.is_zero() && c_.is_zero() && d_.is_zero(); }
  bool is_rational() const { return b_.is_zero() && c_.is_zero() && d_.is_zero(); }

  const Rational& rational_part() const { return a_; }
  const Rational& coeff_k1() const { return b_; }
  const Rational& coeff_k2() const { return c_; }
  const Rational& coeff_m() const { return d_; }
  const Integer& k1() const { return k1_; }
  const Integer& k2() const { return k2_; }
  bool has_k1() const { return !k1_.is_zero(); }
  bool has_k2() const { return !k2_.is_zero(); }
  Integer m() const { return has_k2() ? derived_m(k1_, k2_) : Integer(0); }

  const Rational& as_rational() const {
    if (!is_rational()) throw std::logic_error("as_rational on an irrational value");
    return a_;
  }

  std::vector<RadicalTerm> term_list() const {
    std::vector<RadicalTerm> terms;
    if (!a_.is_zero()) terms.push_back({Integer(1), a_});
    if (!b_.is_zero()) terms.push_back({k1_, b_});
    if (!c_.is_zero()) terms.push_back({k2_, c_});
    if (!d_.is_zero()) terms.push_back({derived_m(k1_, k2_), d_});
    return terms;
  }

  AlgNum operator-() const {
    AlgNum out = *this;
    out.a_ = -out.a_;
    out.b_ = -out.b_;
    out.c_ = -out.c_;
    out.d_ = -out.d_;
    return out;
  }

  friend AlgNum operator+(const AlgNum& lhs, const AlgNum& rhs) {
    if (rhs.is_zero()) return lhs;
    if (lhs.is_zero()) return rhs;
    if (lhs.is_rational() && rhs.is_rational()) return AlgNum(lhs.a_ + rhs.a_);
    if (lhs.is_rational()) {
      AlgNum out = rhs;
      out.a_ += lhs.a_;
      return out;
    }
    if (rhs.is_rational()) {
      AlgNum out = lhs;
      out.a_ += rhs.a_;
      return out;
    }
    if (lhs.k1_ == rhs.k1_ && lhs.k2_ == rhs.k2_) {
      AlgNum out;
      out.a_ = lhs.a_ + rhs.a_;
      out.b_ = lhs.b_ + rhs.b_;
      out.c_ = lhs.c_ + rhs.c_;
      out.d_ = lhs.d_ + rhs.d_;
      out.k1_ = lhs.k1_;
      out.k2_ = lhs.k2_;
      return out.renormalise();
    }
    std::vector<RadicalTerm> terms = lhs.term_list();
    for (RadicalTerm& term : rhs.term_list()) terms.push_back(std::move(term));
    return from_terms(terms, /*reduce=*/false);
  }

  friend AlgNum operator-(const AlgNum& lhs, const AlgNum& rhs) { return lhs + (-rhs); }

  friend AlgNum operator*(const AlgNum& lhs, const AlgNum& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return AlgNum();
    if (lhs.is_rational()) return rhs.scaled(lhs.a_);
    if (rhs.is_rational()) return lhs.scaled(rhs.a_);
    std::vector<RadicalTerm> products;
    products.reserve(16);
    for (const RadicalTerm& tl : lhs.term_list()) {
      for (const RadicalTerm& tr : rhs.term_list()) {
        Rational coeff = tl.coeff * tr.coeff;
        if (tl.radicand == 1) {
          products.push_back({tr.radicand, std::move(coeff)});
        } else if (tr.radicand == 1) {
          products.push_back({tl.radicand, std::move(coeff)});
        } else if (tl.radicand == tr.radicand) {
          products.push_back({Integer(1), coeff * Rational(tl.radicand)});
        } else {
          // sqrt(p)*sqrt(q) = g*sqrt((p/g)*(q/g)) with g = gcd(p, q)
          Integer g = boost::multiprecision::gcd(tl.radicand, tr.radicand);
          Integer rest = (tl.radicand / g) * (tr.radicand / g);
          products.push_back({std::move(rest), coeff * Rational(g)});
        }
      }
    }
    return from_terms(products, /*reduce=*/false);
  }

  friend AlgNum operator/(const AlgNum& lhs, const AlgNum& rhs) {
    if (rhs.is_zero()) throw Error(ErrorCode::division_by_zero);
    if (rhs.is_rational()) return lhs.scaled(Rational(1) / rhs.a_);
    return lhs * rhs.inverse();
  }

  AlgNum& operator+=(const AlgNum& rhs) { return *this = *this + rhs; }
  AlgNum& operator-=(const AlgNum& rhs) { return *this = *this - rhs; }
  AlgNum& operator*=(const AlgNum& rhs) { return *this = *this * rhs; }
  AlgNum& operator/=(const AlgNum& rhs) { return *this = *this / rhs; }

  /// Multiplicative inverse through conjugation: x * conj1(x) falls into
  /// Q(sqrt(k2)), one more radical flip lands in Q, and the inverse is the
  /// conjugate product over that rational norm.
  AlgNum inverse() const {
    if (is_zero()) throw Error(ErrorCode::division_by_zero);
    if (is_rational()) return AlgNum(Rational(1) / a_);
    if (!has_k2()) {
      Rational norm = a_ * a_ - b_ * b_ * Rational(k1_);
      std::vector<RadicalTerm> terms{{Integer(1), a_ / norm}, {k1_, -b_ / norm}};
      return from_terms(terms, /*reduce=*/false);
    }
    AlgNum p = conj1();
    AlgNum t = *this * p;  // collapses into a single radical class (or Q)
    if (t.is_rational()) {
      if (t.a_.is_zero()) throw std::logic_error("conjugate norm failed to collapse");
      return p.scaled(Rational(1) / t.a_);
    }
    AlgNum q = t.conj1();  // t is canonical single-radical, so conj1 flips it
    AlgNum norm = t * q;
    if (!norm.is_rational() || norm.a_.is_zero())
      throw std::logic_error("conjugate norm failed to collapse");
    return (p * q).scaled(Rational(1) / norm.a_);
  }

  friend bool operator==(const AlgNum& lhs, const AlgNum& rhs) {
    if (lhs.k1_ == rhs.k1_ && lhs.k2_ == rhs.k2_)
      return lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_ && lhs.c_ == rhs.c_ && lhs.d_ == rhs.d_;
    return (lhs - rhs).is_zero();
  }
  friend bool operator!=(const AlgNum& lhs, const AlgNum& rhs) { return !(lhs == rhs); }

  /// Exact sign.  Zero is settled by the coefficient test; otherwise rational
  /// enclosures of each sqrt are refined (doubling the bit budget) until the
  /// interval clears zero, which linear independence guarantees it will.
  int sign() const {
    if (is_zero()) return 0;
    if (is_rational()) return a_.sign();
    for (unsigned bits = 64;; bits *= 2) {
      auto [lo, hi] = enclose(bits);
      if (lo.sign() > 0) return 1;
      if (hi.sign() < 0) return -1;
    }
  }

  /// Rational interval containing the value, from sqrt enclosures with
  /// denominator 2^bits.
  std::pair<Rational, Rational> enclose(unsigned bits) const {
    Rational lo = a_;
    Rational hi = a_;
    auto add_term = [&](const Integer& k, const Rational& coeff) {
      if (coeff.is_zero()) return;
      Integer scaled = k << (2 * bits);
      Integer root = isqrt(scaled);
      Rational denom(Integer(1) << bits);
      Rational slo = Rational(root) / denom;
      Rational shi = Rational(root + 1) / denom;
      if (coeff.sign() > 0) {
        lo += coeff * slo;
        hi += coeff * shi;
      } else {
        lo += coeff * shi;
        hi += coeff * slo;
      }
    };
    if (has_k1()) add_term(k1_, b_);
    if (has_k2()) add_term(k2_, c_);
    if (has_k2()) add_term(derived_m(k1_, k2_), d_);
    return {std::move(lo), std::move(hi)};
  }

 private:
  static Integer derived_m(const Integer& k1, const Integer& k2) {
    Integer g = boost::multiprecision::gcd(k1, k2);
    return (k1 / g) * (k2 / g);
  }

  AlgNum scaled(const Rational& factor) const {
    if (factor.is_zero()) return AlgNum();
    AlgNum out = *this;
    out.a_ *= factor;
    out.b_ *= factor;
    out.c_ *= factor;
    out.d_ *= factor;
    return out;
  }

  AlgNum conj1() const {  // sqrt(k1) -> -sqrt(k1)
    AlgNum out = *this;
    out.b_ = -out.b_;
    out.d_ = -out.d_;
    return out;
  }

  AlgNum conj2() const {  // sqrt(k2) -> -sqrt(k2)
    AlgNum out = *this;
    out.c_ = -out.c_;
    out.d_ = -out.d_;
    return out;
  }

  /// After slot-wise addition coefficients may vanish; shrink the basis so the
  /// canonical-form invariants keep holding.
  AlgNum renormalise() const {
    if (has_k2() && c_.is_zero() && d_.is_zero()) {
      AlgNum out;
      out.a_ = a_;
      out.b_ = b_;
      if (!b_.is_zero()) out.k1_ = k1_;
      return out;
    }
    if (has_k2() && b_.is_zero() && !c_.is_zero() && d_.is_zero()) {
      AlgNum out;
      out.a_ = a_;
      out.b_ = c_;
      out.k1_ = k2_;
      return out;
    }
    if (has_k2() && (b_.is_zero() || c_.is_zero()))
      return from_terms(term_list(), /*reduce=*/false);
    if (has_k1() && !has_k2() && b_.is_zero()) {
      AlgNum out;
      out.a_ = a_;
      return out;
    }
    return *this;
  }

  Rational a_{0};
  Rational b_{0};
  Rational c_{0};
  Rational d_{0};
  Integer k1_{0};
  Integer k2_{0};
};

inline int sign(const AlgNum& x) { return x.sign(); }

/// Three-way comparison; exact.
inline int compare(const AlgNum& lhs, const AlgNum& rhs) { return (lhs - rhs).sign(); }

inline bool operator<(const AlgNum& lhs, const AlgNum& rhs) { return compare(lhs, rhs) < 0; }
inline bool operator>(const AlgNum& lhs, const AlgNum& rhs) { return compare(lhs, rhs) > 0; }
inline bool operator<=(const AlgNum& lhs, const AlgNum& rhs) { return compare(lhs, rhs) <= 0; }
inline bool operator>=(const AlgNum& lhs, const AlgNum& rhs) { return compare(lhs, rhs) >= 0; }

inline AlgNum square(const AlgNum& x) { return x * x; }

/// Exact square root of a nonnegative rational: sqrt(p/q) = sqrt(p*q)/q.
inline AlgNum sqrt_rational(const Rational& value) {
  int s = value.sign();
  if (s < 0) throw Error(ErrorCode::negative_radicand, "sqrt of a negative rational");
  if (s == 0) return AlgNum();
  Integer p = numerator(value);
  Integer q = denominator(value);
  SqrtSplit split = split_square(p * q);
  Rational scale = make_rational(split.scale, q);
  if (split.radicand == 1) return AlgNum(scale);
  return AlgNum::from_terms({{split.radicand, scale}}, /*reduce=*/false);
}

/// Square root of a field element when the root stays inside a biquadratic
/// field: rational values always work, single-radical values work when
/// a^2 - b^2*k is a rational square (classic denesting), anything else gives
/// nullopt.  Negative input throws NEGATIVE_RADICAND.
inline std::optional<AlgNum> try_sqrt(const AlgNum& x) {
  int s = x.sign();
  if (s < 0) throw Error(ErrorCode::negative_radicand, "sqrt of a negative value");
  if (s == 0) return AlgNum();
  if (x.is_rational()) return sqrt_rational(x.rational_part());
  if (x.has_k2()) return std::nullopt;

  // x = a + b*sqrt(k); try (u + v*sqrt(k))^2 = x, which forces
  // u^2 + v^2 k = a, 2uv = b and hence (u^2 - v^2 k)^2 = a^2 - b^2 k.
  const Rational& a = x.rational_part();
  const Rational& b = x.coeff_k1();
  Rational disc = a * a - b * b * Rational(x.k1());
  if (disc.sign() < 0) return std::nullopt;
  AlgNum t = sqrt_rational(disc);
  if (!t.is_rational()) return std::nullopt;
  for (int branch = 0; branch < 2; ++branch) {
    Rational u_sq = branch == 0 ? Rational((a + t.rational_part()) / 2)
                                : Rational((a - t.rational_part()) / 2);
    if (u_sq.sign() <= 0) continue;
    AlgNum u = sqrt_rational(u_sq);
    AlgNum sqrt_k = AlgNum::from_terms({{x.k1(), Rational(1)}}, /*reduce=*/false);
    AlgNum root = u + AlgNum(b / (2 * u_sq)) * u * sqrt_k;
    if (root.sign() < 0) root = -root;
    if (square(root) == x) return root;
  }
  return std::nullopt;
}

// -- text form ---------------------------------------------------------------
//
// Terms in basis order, joined with " + " / " - "; radical coefficients are
// always written, so sqrt(2) serialises as "1*sqrt(2)".  Zero is "0".

inline std::string to_string(const AlgNum& x) {
  if (x.is_zero()) return "0";
  std::string out;
  auto append = [&](const Rational& coeff, const Integer* radicand) {
    if (coeff.is_zero()) return;
    if (out.empty()) {
      if (coeff.sign() < 0) out += '-';
    } else {
      out += coeff.sign() < 0 ? " - " : " + ";
    }
    Rational mag = coeff.sign() < 0 ? Rational(-coeff) : coeff;
    out += to_string(mag);
    if (radicand) {
      out += "*sqrt(";
      out += radicand->str();
      out += ')';
    }
  };
  Integer mval = x.m();
  append(x.rational_part(), nullptr);
  append(x.coeff_k1(), &x.k1());
  append(x.coeff_k2(), &x.k2());
  append(x.coeff_m(), &mval);
  return out;
}

inline AlgNum parse_algnum(std::string_view text) {
  auto fail = [&] { throw Error(ErrorCode::parse_error, "bad value '" + std::string(text) + "'"); };
  if (text.empty()) fail();
  if (text == "0") return AlgNum();

  std::vector<RadicalTerm> terms;
  std::size_t pos = 0;
  bool negative = false;
  if (text[0] == '-') {
    negative = true;
    pos = 1;
  }
  while (true) {
    std::size_t term_end = text.find(' ', pos);
    std::string_view body = text.substr(pos, term_end == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : term_end - pos);
    std::size_t star = body.find("*sqrt(");
    Integer radicand = 1;
    std::string_view coeff_text = body;
    if (star != std::string_view::npos) {
      if (body.size() < star + 7 || body.back() != ')') fail();
      std::string_view rad_text = body.substr(star + 6, body.size() - star - 7);
      if (rad_text.empty()) fail();
      radicand = 0;
      for (char ch : rad_text) {
        if (ch < '0' || ch > '9') fail();
        radicand = radicand * 10 + (ch - '0');
      }
      coeff_text = body.substr(0, star);
    }
    Rational coeff = parse_rational(coeff_text);
    if (coeff.sign() < 0) fail();  // signs live in the separators
    if (negative) coeff = -coeff;
    terms.push_back({std::move(radicand), std::move(coeff)});

    if (term_end == std::string_view::npos) break;
    // expect " + " or " - "
    if (term_end + 3 > text.size()) fail();
    char op = text[term_end + 1];
    if ((op != '+' && op != '-') || text[term_end + 2] != ' ') fail();
    negative = op == '-';
    pos = term_end + 3;
    if (pos >= text.size()) fail();
  }
  return AlgNum::from_terms(terms, /*reduce=*/true);
}

// -- decimal rendering --------------------------------------------------------

namespace detail {

/// Largest e with 10^e <= value, for value > 0.
inline long exp10_floor(const Rational& value) {
  Integer p = numerator(value);
  Integer q = denominator(value);
  long guess = static_cast<long>(p.str().size()) - static_cast<long>(q.str().size());
  auto cmp_pow10 = [&](long e) {
    // sign of value - 10^e
    Integer lhs = p;
    Integer rhs = q;
    if (e >= 0)
      rhs *= boost::multiprecision::pow(Integer(10), static_cast<unsigned>(e));
    else
      lhs *= boost::multiprecision::pow(Integer(10), static_cast<unsigned>(-e));
    return lhs.compare(rhs);
  };
  while (cmp_pow10(guess) < 0) --guess;
  while (cmp_pow10(guess + 1) >= 0) ++guess;
  return guess;
}

/// floor(value + 1/2) for value >= 0.
inline Integer round_half_up(const Rational& value) {
  Integer p = numerator(value);
  Integer q = denominator(value);
  return (2 * p + q) / (2 * q);
}

/// value * 10^e exactly.
inline Rational scale_pow10(const Rational& value, long e) {
  if (e == 0) return value;
  Integer pow = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(e < 0 ? -e : e));
  return e > 0 ? value * Rational(pow) : value / Rational(pow);
}

inline std::string place_digits(const Integer& mantissa, long e, int digits, bool negative) {
  std::string ds = mantissa.str();
  std::string out;
  if (e >= digits - 1) {
    out = ds + std::string(static_cast<std::size_t>(e - digits + 1), '0');
  } else if (e >= 0) {
    out = ds.substr(0, static_cast<std::size_t>(e + 1)) + "." +
          ds.substr(static_cast<std::size_t>(e + 1));
  } else {
    out = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + ds;
  }
  return negative ? "-" + out : out;
}

}  // namespace detail

/// Correctly rounded decimal with `digits` significant digits (round half away
/// from zero), in plain positional notation.  Deterministic: rationals round
/// exactly; irrational values refine enclosures until the rounding is settled,
/// which happens because an irrational never sits on a rounding boundary.
inline std::string to_decimal(const AlgNum& x, int digits) {
  if (digits < 1) throw std::logic_error("to_decimal needs at least one digit");
  int s = x.sign();
  if (s == 0) return "0";
  bool negative = s < 0;

  Integer cap = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(digits));
  if (x.is_rational()) {
    Rational y = x.rational_part();
    if (negative) y = -y;
    long e = detail::exp10_floor(y);
    Integer mantissa = detail::round_half_up(detail::scale_pow10(y, digits - 1 - e));
    if (mantissa == cap) {
      mantissa /= 10;
      ++e;
    }
    return detail::place_digits(mantissa, e, digits, negative);
  }

  AlgNum y = negative ? -x : x;
  for (unsigned bits = 128;; bits *= 2) {
    auto [lo, hi] = y.enclose(bits);
    if (lo.sign() <= 0) continue;
    long e = detail::exp10_floor(lo);
    if (detail::exp10_floor(hi) != e) continue;
    Integer mlo = detail::round_half_up(detail::scale_pow10(lo, digits - 1 - e));
    Integer mhi = detail::round_half_up(detail::scale_pow10(hi, digits - 1 - e));
    if (mlo != mhi) continue;
    if (mlo == cap) {
      mlo /= 10;
      ++e;
    }
    return detail::place_digits(mlo, e, digits, negative);
  }
}

}  // namespace hi028::exactnum
