#pragma once

#include <gmpxx.h>

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>

namespace lagsub::exact {

/// Returns true if d >= 2 and d has no repeated prime factor.
bool is_square_free_radicand(long d);

/**
 * Element of the field Q(sqrt d)(i), stored as rational coordinates over the
 * basis {1, i, w, w*i} with w = sqrt(d).
 *
 * A scalar carries its radicand d (0 when no sqrt(d) has been adjoined).
 * Arithmetic between scalars of two different nonzero radicands throws
 * FieldMismatch; a radicand-0 scalar combines with anything.
 *
 * Real structure: 1 and w are real, i and w*i are imaginary.
 */
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(mpq_class v) : re_(std::move(v)) { re_.canonicalize(); }  // NOLINT

  /// a + b*i + c*w + e*w*i over Q(sqrt d)(i).
  static Scalar from_parts(mpq_class a, mpq_class b, mpq_class c = 0, mpq_class e = 0, long d = 0);
  static Scalar imaginary_unit() { return from_parts(0, 1); }
  /// sqrt(d) as an element of Q(sqrt d)(i).
  static Scalar sqrt_of(long d);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }
  const mpq_class& sre() const { return sre_; }
  const mpq_class& sim() const { return sim_; }
  long radicand() const { return d_; }

  bool is_zero() const;
  bool is_one() const;
  /// True iff the scalar lies in Q.
  bool is_rational() const;
  /// True iff the scalar lies in the real subfield Q(sqrt d).
  bool is_real() const;

  /// Complex conjugation (i -> -i), the nontrivial automorphism over Q(sqrt d).
  Scalar conj() const;
  /// Real part as an element of Q(sqrt d).
  Scalar real_part() const;
  /// Imaginary part as an element of Q(sqrt d) (so x = re + i*im).
  Scalar imag_part() const;
  /// Rational value; throws PreconditionFailed if not rational.
  const mpq_class& as_rational() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Lexicographic order on (re, im, sre, sim); used only for canonical keys.
  friend bool lex_less(const Scalar& a, const Scalar& b);

  std::complex<double> to_complex() const;

  /// Canonical text form, e.g. "0", "-3/2", "1/2+3/4*w*i".
  std::string str() const;
  /// Parses the text form; `d` is the document radicand used for "w".
  static Scalar parse(std::string_view text, long d = 0);

 private:
  mpq_class re_{0}, im_{0}, sre_{0}, sim_{0};
  long d_ = 0;

  static long merge_radicand(long a, long b);
  void normalize();
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace lagsub::exact
