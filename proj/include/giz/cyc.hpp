#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace giz {

// Element of the cyclotomic field Q(zeta_N), stored as its coefficient
// vector in the power basis, always reduced modulo Phi_N.
class CycNumber {
public:
    CycNumber();
    explicit CycNumber(int conductor);
    CycNumber(const mpq_class& q, int conductor);
    CycNumber(long q, int conductor);

    static CycNumber zeta(int conductor, long power = 1);

    int conductor() const { return n_; }
    int degree() const { return static_cast<int>(c_.size()); }
    const std::vector<mpq_class>& coefficients() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    // Rational value if the element lies in Q.
    std::optional<mpq_class> as_rational() const;

    // Image under Q(zeta_N) -> Q(zeta_M); M must be a multiple of N.
    CycNumber lift(int m) const;

    CycNumber inverse() const;
    CycNumber pow(long k) const;

    CycNumber operator-() const;
    CycNumber& operator+=(const CycNumber& b);
    CycNumber& operator-=(const CycNumber& b);
    CycNumber& operator*=(const CycNumber& b);
    CycNumber& operator/=(const CycNumber& b);

    friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
    friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
    friend CycNumber operator*(CycNumber a, const CycNumber& b) { return a *= b; }
    friend CycNumber operator/(CycNumber a, const CycNumber& b) { return a /= b; }

    friend bool operator==(const CycNumber& a, const CycNumber& b);
    friend bool operator!=(const CycNumber& a, const CycNumber& b) { return !(a == b); }
    // Lexicographic on coefficient vectors (after lifting to a common conductor).
    friend bool operator<(const CycNumber& a, const CycNumber& b);

    // Printable in the scalar grammar, e.g. "1 - 1/2*z + 3*z^2".
    std::string str() const;

private:
    int n_;
    std::vector<mpq_class> c_;
};

enum class ArithOp { Add, Sub, Mul, Div };

CycNumber cyc_arith(ArithOp op, const CycNumber& a, const CycNumber& b);

// expr := term (('+'|'-') term)*; term := factor (('*'|'/') factor)*;
// factor := integer | 'z' ('^' integer)? | '(' expr ')' | '-' factor
CycNumber cyc_parse(const std::string& expr, int conductor);

// Least m with a^m = 1, if a is a root of unity.
std::optional<int> root_of_unity_order(const CycNumber& a);

// Integer coefficients of the N-th cyclotomic polynomial, low degree first.
const std::vector<mpz_class>& cyclotomic_polynomial(int n);

long euler_phi(long n);

}  // namespace giz
