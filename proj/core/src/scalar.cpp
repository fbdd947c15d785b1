#include "lagsub/exact/scalar.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <vector>

#include "lagsub/error.hpp"

namespace lagsub::exact {

bool is_square_free_radicand(long d) {
  if (d < 2) return false;
  for (long p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

Scalar Scalar::from_parts(mpq_class a, mpq_class b, mpq_class c, mpq_class e, long d) {
  if ((sgn(c) != 0 || sgn(e) != 0) && d == 0) {
    throw FieldMismatch("scalar has a sqrt(d) component but no radicand was declared");
  }
  if (d != 0 && !is_square_free_radicand(d)) {
    throw ParseError("radicand must be a square-free integer >= 2, got " + std::to_string(d));
  }
  Scalar s;
  s.re_ = std::move(a);
  s.im_ = std::move(b);
  s.sre_ = std::move(c);
  s.sim_ = std::move(e);
  s.d_ = d;
  s.normalize();
  return s;
}

Scalar Scalar::sqrt_of(long d) { return from_parts(0, 0, 1, 0, d); }

void Scalar::normalize() {
  re_.canonicalize();
  im_.canonicalize();
  sre_.canonicalize();
  sim_.canonicalize();
}

long Scalar::merge_radicand(long a, long b) {
  if (a == 0) return b;
  if (b == 0 || a == b) return a;
  throw FieldMismatch("mixed-field operation: sqrt(" + std::to_string(a) + ") vs sqrt(" +
                      std::to_string(b) + ")");
}

bool Scalar::is_zero() const {
  return sgn(re_) == 0 && sgn(im_) == 0 && sgn(sre_) == 0 && sgn(sim_) == 0;
}

bool Scalar::is_one() const {
  return re_ == 1 && sgn(im_) == 0 && sgn(sre_) == 0 && sgn(sim_) == 0;
}

bool Scalar::is_rational() const { return sgn(im_) == 0 && sgn(sre_) == 0 && sgn(sim_) == 0; }

bool Scalar::is_real() const { return sgn(im_) == 0 && sgn(sim_) == 0; }

Scalar Scalar::conj() const {
  Scalar s = *this;
  s.im_ = -s.im_;
  s.sim_ = -s.sim_;
  return s;
}

Scalar Scalar::real_part() const {
  Scalar s;
  s.re_ = re_;
  s.sre_ = sre_;
  s.d_ = d_;
  return s;
}

Scalar Scalar::imag_part() const {
  Scalar s;
  s.re_ = im_;
  s.sre_ = sim_;
  s.d_ = d_;
  return s;
}

const mpq_class& Scalar::as_rational() const {
  if (!is_rational()) throw PreconditionFailed("scalar " + str() + " is not rational");
  return re_;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  s.re_ = -s.re_;
  s.im_ = -s.im_;
  s.sre_ = -s.sre_;
  s.sim_ = -s.sim_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  d_ = merge_radicand(d_, o.d_);
  re_ += o.re_;
  im_ += o.im_;
  if (sgn(o.sre_) != 0) sre_ += o.sre_;
  if (sgn(o.sim_) != 0) sim_ += o.sim_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  d_ = merge_radicand(d_, o.d_);
  re_ -= o.re_;
  im_ -= o.im_;
  if (sgn(o.sre_) != 0) sre_ -= o.sre_;
  if (sgn(o.sim_) != 0) sim_ -= o.sim_;
  return *this;
}

namespace {

// (a + b i)(c + e i) over Q(i).
void gauss_mul(const mpq_class& a, const mpq_class& b, const mpq_class& c, const mpq_class& e,
               mpq_class& out_re, mpq_class& out_im) {
  out_re = a * c - b * e;
  out_im = a * e + b * c;
}

}  // namespace

Scalar operator*(const Scalar& x, const Scalar& y) {
  Scalar out;
  out.d_ = Scalar::merge_radicand(x.d_, y.d_);
  const bool xq = sgn(x.sre_) == 0 && sgn(x.sim_) == 0;
  const bool yq = sgn(y.sre_) == 0 && sgn(y.sim_) == 0;
  // x = p + q w, y = p' + q' w; xy = (pp' + d qq') + (pq' + qp') w.
  gauss_mul(x.re_, x.im_, y.re_, y.im_, out.re_, out.im_);
  if (xq && yq) return out;
  mpq_class t_re, t_im;
  if (!xq && !yq) {
    gauss_mul(x.sre_, x.sim_, y.sre_, y.sim_, t_re, t_im);
    out.re_ += t_re * out.d_;
    out.im_ += t_im * out.d_;
  }
  if (!yq) {
    gauss_mul(x.re_, x.im_, y.sre_, y.sim_, t_re, t_im);
    out.sre_ += t_re;
    out.sim_ += t_im;
  }
  if (!xq) {
    gauss_mul(x.sre_, x.sim_, y.re_, y.im_, t_re, t_im);
    out.sre_ += t_re;
    out.sim_ += t_im;
  }
  return out;
}

Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }

Scalar& Scalar::operator/=(const Scalar& o) { return *this = *this * o.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw PreconditionFailed("division by zero");
  // x = p + q w; x^{-1} = (p - q w) / (p^2 - d q^2) with the norm in Q(i).
  mpq_class n_re, n_im, t_re, t_im;
  gauss_mul(re_, im_, re_, im_, n_re, n_im);
  if (sgn(sre_) != 0 || sgn(sim_) != 0) {
    gauss_mul(sre_, sim_, sre_, sim_, t_re, t_im);
    n_re -= t_re * d_;
    n_im -= t_im * d_;
  }
  const mpq_class abs2 = n_re * n_re + n_im * n_im;
  const mpq_class inv_re = n_re / abs2;
  const mpq_class inv_im = -n_im / abs2;
  Scalar num;
  num.re_ = re_;
  num.im_ = im_;
  num.sre_ = -sre_;
  num.sim_ = -sim_;
  num.d_ = d_;
  Scalar norm_inv;
  norm_inv.re_ = inv_re;
  norm_inv.im_ = inv_im;
  return num * norm_inv;
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.re_ == b.re_ && a.im_ == b.im_ && a.sre_ == b.sre_ && a.sim_ == b.sim_;
}

bool lex_less(const Scalar& a, const Scalar& b) {
  if (a.re_ != b.re_) return a.re_ < b.re_;
  if (a.im_ != b.im_) return a.im_ < b.im_;
  if (a.sre_ != b.sre_) return a.sre_ < b.sre_;
  return a.sim_ < b.sim_;
}

std::complex<double> Scalar::to_complex() const {
  const double w = d_ > 0 ? std::sqrt(static_cast<double>(d_)) : 0.0;
  return {re_.get_d() + w * sre_.get_d(), im_.get_d() + w * sim_.get_d()};
}

std::string Scalar::str() const {
  if (is_zero()) return "0";
  std::string out;
  auto term = [&out](const mpq_class& q, const char* suffix) {
    if (sgn(q) == 0) return;
    std::string t = q.get_str();
    if (!out.empty() && t.front() != '-') out += '+';
    out += t;
    out += suffix;
  };
  term(re_, "");
  term(im_, "*i");
  term(sre_, "*w");
  term(sim_, "*w*i");
  return out;
}

namespace {

mpq_class parse_rational(const std::string& text, std::string_view whole) {
  if (text.empty()) throw ParseError("empty coefficient in scalar '" + std::string(whole) + "'");
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/') {
      throw ParseError("bad coefficient '" + text + "' in scalar '" + std::string(whole) + "'");
    }
  }
  mpq_class q;
  if (q.set_str(text, 10) != 0) {
    throw ParseError("bad coefficient '" + text + "' in scalar '" + std::string(whole) + "'");
  }
  if (text.find('/') != std::string::npos) {
    const auto den = text.substr(text.find('/') + 1);
    if (den.empty() || mpz_class(den) == 0) {
      throw ParseError("zero denominator in scalar '" + std::string(whole) + "'");
    }
  }
  q.canonicalize();
  return q;
}

}  // namespace

Scalar Scalar::parse(std::string_view text, long d) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw ParseError("empty scalar");
  // Split into signed terms at top-level '+'/'-' (a sign never appears inside p/q).
  std::vector<std::pair<int, std::string>> terms;
  std::size_t start = 0;
  int sign = 1;
  if (s[0] == '+' || s[0] == '-') {
    sign = s[0] == '-' ? -1 : 1;
    start = 1;
  }
  for (std::size_t pos = start; pos <= s.size(); ++pos) {
    if (pos == s.size() || s[pos] == '+' || s[pos] == '-') {
      terms.emplace_back(sign, s.substr(start, pos - start));
      if (pos < s.size()) sign = s[pos] == '-' ? -1 : 1;
      start = pos + 1;
    }
  }
  mpq_class parts[4] = {0, 0, 0, 0};
  bool uses_w = false;
  for (const auto& [sg, body] : terms) {
    if (body.empty()) throw ParseError("malformed scalar '" + s + "'");
    bool has_i = false;
    bool has_w = false;
    bool has_coeff = false;
    mpq_class coeff = 1;
    std::size_t b = 0;
    while (b <= body.size()) {
      const auto e = body.find('*', b);
      const auto factor = body.substr(b, e == std::string::npos ? std::string::npos : e - b);
      if (factor == "i") {
        if (has_i) throw ParseError("repeated i in scalar '" + s + "'");
        has_i = true;
      } else if (factor == "w") {
        if (has_w) throw ParseError("repeated w in scalar '" + s + "'");
        has_w = true;
      } else {
        if (has_coeff) throw ParseError("two coefficients in one term of '" + s + "'");
        coeff = parse_rational(factor, s);
        has_coeff = true;
      }
      if (e == std::string::npos) break;
      b = e + 1;
    }
    if (sg < 0) coeff = -coeff;
    parts[(has_w ? 2 : 0) + (has_i ? 1 : 0)] += coeff;
    uses_w = uses_w || has_w;
  }
  if (uses_w && d == 0) throw ParseError("scalar '" + s + "' uses w but no radicand is declared");
  return from_parts(parts[0], parts[1], parts[2], parts[3], d);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace lagsub::exact
