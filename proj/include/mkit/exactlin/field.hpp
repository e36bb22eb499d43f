#ifndef MKIT_EXACTLIN_FIELD_HPP
#define MKIT_EXACTLIN_FIELD_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mkit {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Raised when scalars or matrices over different fields are combined.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

namespace exactlin {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

/// The ground field: either the rationals or GF(p) with p < 2^31 prime.
class FieldSpec {
 public:
  enum class Kind { Rationals, PrimeField };

  constexpr FieldSpec() = default;

  static constexpr FieldSpec rationals() { return FieldSpec{}; }

  static FieldSpec prime(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 31))
      throw Error("prime field characteristic must be below 2^31, got " + std::to_string(p));
    if (!is_prime(p)) throw Error("characteristic " + std::to_string(p) + " is not prime");
    FieldSpec f;
    f.characteristic_ = static_cast<std::uint32_t>(p);
    return f;
  }

  constexpr Kind kind() const { return characteristic_ == 0 ? Kind::Rationals : Kind::PrimeField; }
  constexpr std::uint32_t characteristic() const { return characteristic_; }
  constexpr bool is_rational() const { return characteristic_ == 0; }

  /// "Q" or "Fp:<p>", the form accepted by the CLI's --field flag.
  std::string name() const { return is_rational() ? "Q" : "Fp:" + std::to_string(characteristic_); }

  static FieldSpec parse(std::string_view text) {
    if (text == "Q") return rationals();
    if (text.starts_with("Fp:")) {
      auto digits = text.substr(3);
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos)
        throw ParseError("malformed field '" + std::string(text) + "'");
      return prime(std::stoull(std::string(digits)));
    }
    throw ParseError("unknown field '" + std::string(text) + "', expected Q or Fp:<p>");
  }

  friend constexpr bool operator==(FieldSpec, FieldSpec) = default;

 private:
  std::uint32_t characteristic_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, FieldSpec f) { return os << f.name(); }

/// An exact field element. Rationals are kept in lowest terms with a positive
/// denominator (mpq canonical form); residues are kept in [0, p).
class Scalar {
 public:
  Scalar() = default;

  Scalar(FieldSpec field, long value) : field_(field) {
    if (field.is_rational()) {
      q_ = value;
    } else {
      const long p = field.characteristic();
      long r = value % p;
      residue_ = static_cast<std::uint32_t>(r < 0 ? r + p : r);
    }
  }

  Scalar(FieldSpec field, long num, long den) : Scalar(field, num) {
    if (den == 0) throw Error("zero denominator");
    *this /= Scalar(field, den);
  }

  static Scalar zero(FieldSpec f) { return Scalar(f, 0); }
  static Scalar one(FieldSpec f) { return Scalar(f, 1); }

  /// Parses "a", "a/b" (rationals) or decimal digits (residues, reduced mod p).
  static Scalar parse(FieldSpec field, std::string_view text) {
    auto bad = [&] { return ParseError("malformed scalar '" + std::string(text) + "' over " + field.name()); };
    if (text.empty()) throw bad();
    if (field.is_rational()) {
      auto slash = text.find('/');
      auto valid_int = [](std::string_view s) {
        if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
        return !s.empty() && s.find_first_not_of("0123456789") == std::string_view::npos;
      };
      std::string_view num = text.substr(0, slash);
      std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
      if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') throw bad();
      mpz_class n(std::string(num[0] == '+' ? num.substr(1) : num));
      mpz_class d{std::string(den)};
      if (d == 0) throw bad();
      Scalar s;
      s.field_ = field;
      s.q_ = mpq_class(n, d);
      s.q_.canonicalize();
      return s;
    }
    bool negative = text[0] == '-';
    std::string_view digits = negative ? text.substr(1) : text;
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos) throw bad();
    std::uint64_t r = 0;
    for (char c : digits) r = (r * 10 + static_cast<std::uint64_t>(c - '0')) % field.characteristic();
    Scalar s(field, static_cast<long>(r));
    return negative ? -s : s;
  }

  FieldSpec field() const { return field_; }

  bool is_zero() const { return field_.is_rational() ? sgn(q_) == 0 : residue_ == 0; }
  bool is_one() const { return field_.is_rational() ? q_ == 1 : residue_ == 1; }

  const mpq_class& rational() const { return q_; }
  std::uint32_t residue() const { return residue_; }

  std::string to_string() const {
    if (!field_.is_rational()) return std::to_string(residue_);
    return q_.get_str();
  }

  Scalar operator-() const {
    Scalar r = *this;
    if (field_.is_rational()) {
      r.q_ = -q_;
    } else if (residue_ != 0) {
      r.residue_ = field_.characteristic() - residue_;
    }
    return r;
  }

  Scalar& operator+=(const Scalar& o) {
    check(o);
    if (field_.is_rational()) {
      q_ += o.q_;
    } else {
      residue_ = static_cast<std::uint32_t>((std::uint64_t{residue_} + o.residue_) % field_.characteristic());
    }
    return *this;
  }

  Scalar& operator-=(const Scalar& o) { return *this += -o; }

  Scalar& operator*=(const Scalar& o) {
    check(o);
    if (field_.is_rational()) {
      q_ *= o.q_;
    } else {
      residue_ = static_cast<std::uint32_t>((std::uint64_t{residue_} * o.residue_) % field_.characteristic());
    }
    return *this;
  }

  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  Scalar inverse() const {
    if (is_zero()) throw Error("division by zero");
    Scalar r = *this;
    if (field_.is_rational()) {
      r.q_ = 1 / q_;
      return r;
    }
    // Fermat: a^(p-2)
    const std::uint64_t p = field_.characteristic();
    std::uint64_t base = residue_, result = 1, e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    r.residue_ = static_cast<std::uint32_t>(result);
    return r;
  }

  /// Adds a*b in place; the hot path of elimination.
  void add_product(const Scalar& a, const Scalar& b) {
    if (field_.is_rational()) {
      check(a);
      check(b);
      mpq_class t = a.q_ * b.q_;
      q_ += t;
    } else {
      Scalar t = a;
      t *= b;
      *this += t;
    }
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.field_ != b.field_) return false;
    return a.field_.is_rational() ? a.q_ == b.q_ : a.residue_ == b.residue_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

 private:
  void check(const Scalar& o) const {
    if (field_ != o.field_)
      throw FieldMismatch("scalar over " + field_.name() + " combined with scalar over " + o.field_.name());
  }

  FieldSpec field_;
  mpq_class q_;
  std::uint32_t residue_ = 0;
};

}  // namespace exactlin
}  // namespace mkit

#endif  // MKIT_EXACTLIN_FIELD_HPP
