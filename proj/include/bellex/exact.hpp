#pragma once

#include <gmpxx.h>

#include <complex>
#include <stdexcept>
#include <string>

namespace bellex {

using Rat = mpq_class;

/// Complex number with exact rational real/imaginary parts. Sufficient for
/// the roots of unity with q in {1,2,4}, i.e. entries in Q(i).
struct XComplex {
    Rat re, im;

    XComplex() : re(0), im(0) {}
    XComplex(Rat r) : re(std::move(r)), im(0) {}
    XComplex(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    bool is_real() const { return im == 0; }
    bool is_zero() const { return re == 0 && im == 0; }

    XComplex conj() const { return {re, -im}; }

    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

    friend XComplex operator+(const XComplex& a, const XComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend XComplex operator-(const XComplex& a, const XComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend XComplex operator*(const XComplex& a, const XComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    XComplex& operator+=(const XComplex& o) { re += o.re; im += o.im; return *this; }
    friend bool operator==(const XComplex& a, const XComplex& b) {
        return a.re == b.re && a.im == b.im;
    }
};

/// True when exact arithmetic covers the q-th roots of unity.
inline bool exact_roots_available(int q) { return q == 1 || q == 2 || q == 4; }

/// omega^e for omega = e^{2 pi i / q}, exact; requires q in {1,2,4}.
inline XComplex exact_root(int q, long e) {
    e = ((e % q) + q) % q;
    if (q == 1) return {Rat(1)};
    if (q == 2) return {Rat(e == 0 ? 1 : -1)};
    switch (e) {  // q == 4
        case 0: return {Rat(1)};
        case 1: return {Rat(0), Rat(1)};
        case 2: return {Rat(-1)};
        default: return {Rat(0), Rat(-1)};
    }
}

inline std::complex<double> float_root(int q, long e) {
    const double t = 2.0 * 3.14159265358979323846 * static_cast<double>(((e % q) + q) % q) / q;
    return {std::cos(t), std::sin(t)};
}

/// Parses "p", "p/q" or a decimal literal into an exact rational.
Rat parse_rational(const std::string& tok);

/// Compact text form: integer, p/q, or decimal re-encoded exactly.
std::string format_rational(const Rat& r);

}  // namespace bellex
