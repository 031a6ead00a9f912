#include "giz/cyc.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <cctype>
#include <sstream>

#include "giz/errors.hpp"

namespace giz {

namespace {

using Poly = std::vector<mpq_class>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of p modulo the monic integer polynomial m.
void reduce_mod(Poly& p, const std::vector<mpz_class>& m) {
    const std::size_t d = m.size() - 1;
    for (std::size_t i = p.size(); i-- > d;) {
        if (p[i] == 0) continue;
        mpq_class c = p[i];
        for (std::size_t j = 0; j <= d; ++j) p[i - d + j] -= c * m[j];
    }
    p.resize(d);
}

// Quotient and remainder over Q.
void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    r = a;
    trim(r);
    q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, 0);
    const mpq_class lead = b.back();
    while (!r.empty() && r.size() >= b.size()) {
        std::size_t shift = r.size() - b.size();
        mpq_class c = r.back() / lead;
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
        trim(r);
    }
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

Poly sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

int common_conductor(int a, int b) { return std::lcm(a, b); }

}  // namespace

long euler_phi(long n) {
    long r = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        r -= r / p;
    }
    if (n > 1) r -= r / n;
    return r;
}

const std::vector<mpz_class>& cyclotomic_polynomial(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<mpz_class>> cache;
    if (n <= 0) throw InputError("conductor must be positive");
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    // x^n - 1 divided by Phi_d for the proper divisors d.
    std::vector<mpz_class> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d) continue;
        const auto& f = cyclotomic_polynomial(d);
        std::size_t fd = f.size() - 1;
        std::vector<mpz_class> q(num.size() - fd, 0);
        for (std::size_t i = num.size(); i-- > fd;) {
            mpz_class c = num[i];
            if (c == 0) continue;
            q[i - fd] = c;
            for (std::size_t j = 0; j <= fd; ++j) num[i - fd + j] -= c * f[j];
        }
        num = std::move(q);
    }
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(n, std::move(num)).first->second;
}

CycNumber::CycNumber() : CycNumber(1) {}

CycNumber::CycNumber(int conductor) : n_(conductor) {
    if (conductor <= 0) throw InputError("conductor must be positive");
    c_.assign(euler_phi(conductor), 0);
}

CycNumber::CycNumber(const mpq_class& q, int conductor) : CycNumber(conductor) {
    c_[0] = q;
    c_[0].canonicalize();
}

CycNumber::CycNumber(long q, int conductor) : CycNumber(mpq_class(q), conductor) {}

CycNumber CycNumber::zeta(int conductor, long power) {
    CycNumber r(conductor);
    long k = ((power % conductor) + conductor) % conductor;
    Poly p(k + 1, 0);
    p[k] = 1;
    reduce_mod(p, cyclotomic_polynomial(conductor));
    r.c_ = std::move(p);
    return r;
}

bool CycNumber::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool CycNumber::is_one() const {
    if (c_[0] != 1) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

std::optional<mpq_class> CycNumber::as_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return std::nullopt;
    return c_[0];
}

CycNumber CycNumber::lift(int m) const {
    if (m == n_) return *this;
    if (m <= 0 || m % n_) throw InputError("lift target must be a multiple of the conductor");
    int step = m / n_;
    Poly p(static_cast<std::size_t>(step) * c_.size() + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) p[i * step] = c_[i];
    reduce_mod(p, cyclotomic_polynomial(m));
    CycNumber r(m);
    r.c_ = std::move(p);
    return r;
}

CycNumber CycNumber::inverse() const {
    if (is_zero()) throw InputError("division by zero");
    const auto& phi = cyclotomic_polynomial(n_);
    Poly m(phi.begin(), phi.end());
    Poly a = c_;
    trim(a);
    // Extended Euclid keeping only the cofactor of a.
    Poly r0 = m, r1 = a, s0, s1{1};
    while (!(r1.size() == 1)) {
        Poly q, r;
        divmod(r0, r1, q, r);
        Poly s = sub(s0, mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    mpq_class c = r1[0];
    for (auto& x : s1) x /= c;
    reduce_mod(s1, phi);
    CycNumber out(n_);
    out.c_ = std::move(s1);
    return out;
}

CycNumber CycNumber::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    CycNumber result(1, n_);
    CycNumber base = *this;
    while (k > 0) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return result;
}

CycNumber CycNumber::operator-() const {
    CycNumber r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

CycNumber& CycNumber::operator+=(const CycNumber& b) {
    if (b.n_ != n_) {
        int m = common_conductor(n_, b.n_);
        return *this = lift(m) + b.lift(m);
    }
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
    return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& b) { return *this += -b; }

CycNumber& CycNumber::operator*=(const CycNumber& b) {
    if (b.n_ != n_) {
        int m = common_conductor(n_, b.n_);
        return *this = lift(m) * b.lift(m);
    }
    Poly p = mul(c_, b.c_);
    reduce_mod(p, cyclotomic_polynomial(n_));
    c_ = std::move(p);
    return *this;
}

CycNumber& CycNumber::operator/=(const CycNumber& b) {
    if (b.n_ != n_) {
        int m = common_conductor(n_, b.n_);
        return *this = lift(m) / b.lift(m);
    }
    return *this *= b.inverse();
}

bool operator==(const CycNumber& a, const CycNumber& b) {
    if (a.n_ != b.n_) {
        int m = common_conductor(a.n_, b.n_);
        return a.lift(m).c_ == b.lift(m).c_;
    }
    return a.c_ == b.c_;
}

bool operator<(const CycNumber& a, const CycNumber& b) {
    if (a.n_ != b.n_) {
        int m = common_conductor(a.n_, b.n_);
        return a.lift(m) < b.lift(m);
    }
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] < b.c_[i]) return true;
        if (b.c_[i] < a.c_[i]) return false;
    }
    return false;
}

std::string CycNumber::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        mpq_class x = c_[i];
        if (x == 0) continue;
        bool neg = x < 0;
        if (neg) x = -x;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (i == 0) {
            os << x.get_str();
            continue;
        }
        if (x != 1) os << x.get_str() << "*";
        os << "z";
        if (i > 1) os << "^" << i;
    }
    if (first) os << "0";
    return os.str();
}

CycNumber cyc_arith(ArithOp op, const CycNumber& a, const CycNumber& b) {
    switch (op) {
        case ArithOp::Add: return a + b;
        case ArithOp::Sub: return a - b;
        case ArithOp::Mul: return a * b;
        case ArithOp::Div: return a / b;
    }
    throw InputError("unknown operation");
}

namespace {

class ScalarParser {
public:
    ScalarParser(const std::string& s, int n) : s_(s), n_(n) {}

    CycNumber run() {
        CycNumber v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, 1, static_cast<int>(pos_) + 1);
    }

    void skip() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    CycNumber expr() {
        CycNumber v = term();
        for (;;) {
            if (eat('+'))
                v += term();
            else if (eat('-'))
                v -= term();
            else
                return v;
        }
    }

    CycNumber term() {
        CycNumber v = factor();
        for (;;) {
            if (eat('*')) {
                v *= factor();
            } else if (eat('/')) {
                std::size_t at = pos_;
                CycNumber d = factor();
                if (d.is_zero()) {
                    pos_ = at;
                    fail("division by zero");
                }
                v /= d;
            } else {
                return v;
            }
        }
    }

    mpz_class integer() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return mpz_class(s_.substr(start, pos_ - start));
    }

    CycNumber factor() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of expression");
        char c = s_[pos_];
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (c == '(') {
            ++pos_;
            CycNumber v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (c == 'z') {
            ++pos_;
            if (!eat('^')) return CycNumber::zeta(n_, 1);
            skip();
            std::size_t at = pos_;
            bool neg = false;
            if (pos_ < s_.size() && s_[pos_] == '-') {
                neg = true;
                ++pos_;
            }
            std::size_t digits = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ == digits) {
                pos_ = at;
                fail("power of z must be an integer");
            }
            if (pos_ < s_.size() && s_[pos_] == '.') {
                pos_ = at;
                fail("power of z must be an integer");
            }
            mpz_class e(s_.substr(digits, pos_ - digits));
            e %= n_;
            long k = e.get_si();
            return CycNumber::zeta(n_, neg ? -k : k);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class v = integer();
            return CycNumber(mpq_class(v), n_);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const std::string& s_;
    int n_;
    std::size_t pos_ = 0;
};

}  // namespace

CycNumber cyc_parse(const std::string& expr, int conductor) {
    if (conductor <= 0) throw InputError("conductor must be positive");
    return ScalarParser(expr, conductor).run();
}

std::optional<int> root_of_unity_order(const CycNumber& a) {
    if (a.is_zero()) throw InputError("zero has no multiplicative order");
    int l = std::lcm(2, a.conductor());
    for (int d = 1; d <= l; ++d) {
        if (l % d) continue;
        if (a.pow(d).is_one()) return d;
    }
    return std::nullopt;
}

}  // namespace giz
