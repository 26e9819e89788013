#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

namespace symfn {

// Complex number with exact rational real and imaginary parts.
// All arithmetic is exact; parts are kept canonicalized so that
// operator== is plain component equality.
struct QComplex {
  mpq_class re;
  mpq_class im;

  QComplex() : re(0), im(0) {}

  QComplex(mpq_class real, mpq_class imag = mpq_class(0))
      : re(std::move(real)), im(std::move(imag)) {
    re.canonicalize();
    im.canonicalize();
  }

  static QComplex integer(long v) { return QComplex(mpq_class(v)); }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }

  QComplex operator-() const { return QComplex(-re, -im); }

  friend QComplex operator+(const QComplex& a, const QComplex& b) {
    return QComplex(a.re + b.re, a.im + b.im);
  }
  friend QComplex operator-(const QComplex& a, const QComplex& b) {
    return QComplex(a.re - b.re, a.im - b.im);
  }
  friend QComplex operator*(const QComplex& a, const QComplex& b) {
    return QComplex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend bool operator==(const QComplex& a, const QComplex& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const QComplex& a, const QComplex& b) { return !(a == b); }

  // Exact upper bound on the modulus: |z| <= |re| + |im|.  Used for
  // rigorous tail estimates without leaving rational arithmetic.
  mpq_class abs_upper_bound() const {
    return abs(re) + abs(im);
  }

  std::string str() const {
    if (is_real()) return re.get_str();
    if (sgn(re) == 0) return im.get_str() + "*i";
    std::string s = re.get_str();
    if (sgn(im) >= 0) s += "+";
    return s + im.get_str() + "*i";
  }
};

}  // namespace symfn
