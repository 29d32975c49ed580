// Dense univariate polynomials over Z: arithmetic, content/primitive part,
// subresultant gcd and resultant, discriminant, text format.
#ifndef NCT_INTPOLY_HPP
#define NCT_INTPOLY_HPP

#include <string>
#include <vector>

#include "nct/integer.hpp"

namespace nct {

class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(const BigInt& constant);
    explicit IntPoly(std::vector<BigInt> coeffs); // low-to-high, trimmed on construction

    static IntPoly zero() { return IntPoly(); }
    static IntPoly one() { return IntPoly(BigInt(1)); }
    static IntPoly x();
    // c * x^k
    static IntPoly monomial(const BigInt& c, int k);

    // -1 for the zero polynomial
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    const BigInt& lc() const;
    BigInt coeff(int i) const; // 0 beyond the degree
    const std::vector<BigInt>& coeffs() const { return c_; }

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const BigInt& k) const;

    IntPoly derivative() const;
    // x^deg * f(1/x); trailing zero coefficients of f drop out
    IntPoly reversed() const;
    // f(-x)
    IntPoly negate_variable() const;
    // f(x + a)
    IntPoly shift(const BigInt& a) const;
    // a^(deg-1) * f(x/a): monic when a = lc(f) and f primitive-ready
    IntPoly monicize_scale(const BigInt& a) const;
    // f(a*x)
    IntPoly scale_variable(const BigInt& a) const;

    BigInt eval(const BigInt& x) const;
    BigRat eval(const BigRat& x) const;
    // numerator of den^deg * f(num/den); shares no state with eval(BigRat)
    BigInt eval_homogeneous(const BigInt& num, const BigInt& den) const;

    BigInt content() const; // >= 0; content(0) = 0
    IntPoly primitive_part() const; // lc sign preserved
    bool is_primitive() const;
    BigInt norm2_squared() const; // sum of squared coefficients
    BigInt height() const; // max |coefficient|

    // Division with remainder when it is exact over Z; false if not divisible.
    bool divide_exact(const IntPoly& divisor, IntPoly& quotient) const;
    // lc(divisor)^(deg f - deg g + 1) * f = q*divisor + r with deg r < deg g
    void pseudo_divrem(const IntPoly& divisor, IntPoly& q, IntPoly& r) const;

    std::string to_string() const; // expression form, explicit signs
    static IntPoly parse(const std::string& text);

    // total order: degree, then coefficients low-to-high
    static int compare(const IntPoly& a, const IntPoly& b);

  private:
    void trim();
    std::vector<BigInt> c_;
};

inline bool canonical_less(const IntPoly& a, const IntPoly& b) {
    return IntPoly::compare(a, b) < 0;
}

// Primitive gcd with positive leading coefficient; gcd(0,0) = 0.
IntPoly poly_gcd(const IntPoly& f, const IntPoly& g);

// Resultant via the subresultant polynomial remainder sequence.
BigInt poly_resultant(const IntPoly& f, const IntPoly& g);

// (-1)^(d(d-1)/2) * Res(f, f') / lc(f); requires deg f >= 1.
BigInt poly_discriminant(const IntPoly& f);

} // namespace nct

#endif
