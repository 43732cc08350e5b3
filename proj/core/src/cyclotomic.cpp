#include "hesspoly/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace hesspoly {

int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

// Exact division of integer polynomials, low-to-high coefficients.
std::vector<Integer> poly_div_exact(std::vector<Integer> num, const std::vector<Integer>& den) {
    std::vector<Integer> q(num.size() - den.size() + 1, Integer(0));
    for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
        Integer lead = num[i + den.size() - 1];
        if (lead == 0) continue;
        Integer c = lead / den.back();
        q[i] = c;
        for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    for (const auto& v : num)
        if (v != 0) throw std::logic_error("cyclotomic: non-exact division");
    return q;
}

struct CycloTable {
    int n = 1;
    int deg = 1;
    std::vector<Integer> phi;
    // powers[k] = x^k reduced mod Phi_n, for k in [0, max(2*deg-2, n-1)].
    std::vector<std::vector<Rational>> powers;
};

const CycloTable& table_for(int n) {
    static std::map<int, CycloTable> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    CycloTable t;
    t.n = n;
    t.phi = cyclotomic_polynomial(n);
    t.deg = static_cast<int>(t.phi.size()) - 1;
    int top = std::max(2 * t.deg - 2, n - 1);
    t.powers.resize(top + 1);
    for (int k = 0; k < t.deg; ++k) {
        t.powers[k].assign(t.deg, Rational(0));
        t.powers[k][k] = 1;
    }
    for (int k = t.deg; k <= top; ++k) {
        // x^k = x * x^(k-1), then replace x^deg by -(phi_0 + ... ) (Phi is monic).
        std::vector<Rational> v(t.deg, Rational(0));
        const auto& prev = t.powers[k - 1];
        for (int i = 0; i + 1 < t.deg; ++i) v[i + 1] = prev[i];
        Rational carry = prev[t.deg - 1];
        if (carry != 0) {
            for (int i = 0; i < t.deg; ++i) v[i] -= carry * Rational(t.phi[i]);
        }
        t.powers[k] = std::move(v);
    }
    auto res = cache.emplace(n, std::move(t));
    return res.first->second;
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
    // x^n - 1
    std::vector<Integer> num(n + 1, Integer(0));
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d == 0) num = poly_div_exact(std::move(num), cyclotomic_polynomial(d));
    }
    return num;
}

Cyclo::Cyclo(int n, std::vector<Rational> coeffs) : n_(n), c_(std::move(coeffs)) {
    const auto& t = table_for(n);
    if (static_cast<int>(c_.size()) != t.deg)
        throw std::invalid_argument("Cyclo: coefficient count must equal deg Phi_n");
    // Canonical representation: rational values live at conductor 1, so
    // equality and ordering are plain (conductor, coefficients) comparisons.
    if (n_ > 1 && is_rational()) {
        Rational v = c_[0];
        n_ = 1;
        c_.assign(1, v);
    }
}

Cyclo Cyclo::zeta(int n) {
    if (n == 1) return Cyclo(Rational(1));
    const auto& t = table_for(n);
    std::vector<Rational> c(t.deg, Rational(0));
    if (t.deg == 1) {
        // n = 2: zeta = -1
        c[0] = t.powers[1][0];
        return Cyclo(n, c);
    }
    c[1] = 1;
    return Cyclo(n, c);
}

Cyclo Cyclo::sqrt_minus3() { return Cyclo(1) + Cyclo(2) * zeta(3); }

Cyclo Cyclo::sqrt5() {
    Cyclo e = zeta(5);
    return Cyclo(1) + Cyclo(2) * e + Cyclo(2) * e.pow(4);
}

Cyclo Cyclo::sqrt3() {
    Cyclo z = zeta(12);
    return z + z.pow(11);
}

Cyclo Cyclo::sqrt2() {
    Cyclo z = zeta(8);
    return z + z.pow(7);
}

bool Cyclo::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r == 0; });
}

bool Cyclo::is_one() const {
    if (c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool Cyclo::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational Cyclo::rational_value() const {
    if (!is_rational()) throw std::logic_error("Cyclo: not a rational value");
    return c_[0];
}

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

namespace {
// Coefficient vector of `a` in the conductor-m basis; requires cond(a) | m.
std::vector<Rational> lift_coeffs(const Cyclo& a, int m) {
    int n = a.conductor();
    const auto& t = table_for(m);
    std::vector<Rational> out(t.deg, Rational(0));
    if (n == 1) {
        out[0] = a.coeffs()[0];
        return out;
    }
    if (m % n != 0)
        throw conductor_mismatch("Cyclo: mixed conductors " + std::to_string(n) + " and " +
                                 std::to_string(m) + " (use embedded())");
    int step = m / n;
    for (int i = 0; i < static_cast<int>(a.coeffs().size()); ++i) {
        if (a.coeffs()[i] == 0) continue;
        int e = (i * step) % m;
        const auto& row = t.powers[e];
        for (int j = 0; j < t.deg; ++j) out[j] += a.coeffs()[i] * row[j];
    }
    return out;
}

// Common conductor for a binary operation: equal, or one side rational.
int common_conductor(const Cyclo& a, const Cyclo& b) {
    if (a.conductor() == b.conductor()) return a.conductor();
    if (a.conductor() == 1) return b.conductor();
    if (b.conductor() == 1) return a.conductor();
    throw conductor_mismatch("Cyclo: mixed conductors " + std::to_string(a.conductor()) + " and " +
                             std::to_string(b.conductor()) + " (use embedded())");
}
}  // namespace

Cyclo Cyclo::operator+(const Cyclo& o) const {
    int m = common_conductor(*this, o);
    if (m == 1) return Cyclo(c_[0] + o.c_[0]);
    std::vector<Rational> a = lift_coeffs(*this, m), b = lift_coeffs(o, m);
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return Cyclo(m, std::move(a));
}

Cyclo Cyclo::operator-(const Cyclo& o) const {
    int m = common_conductor(*this, o);
    if (m == 1) return Cyclo(c_[0] - o.c_[0]);
    std::vector<Rational> a = lift_coeffs(*this, m), b = lift_coeffs(o, m);
    for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return Cyclo(m, std::move(a));
}

Cyclo Cyclo::operator*(const Cyclo& o) const {
    int m = common_conductor(*this, o);
    if (m == 1) return Cyclo(c_[0] * o.c_[0]);
    // scalar shortcut
    if (conductor() == 1) {
        if (c_[0] == 0) return Cyclo(Rational(0));
        std::vector<Rational> b = o.c_;
        for (auto& v : b) v *= c_[0];
        return Cyclo(m, std::move(b));
    }
    if (o.conductor() == 1) return o * *this;
    const auto& t = table_for(m);
    std::vector<Rational> raw(2 * t.deg - 1, Rational(0));
    for (int i = 0; i < t.deg; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < t.deg; ++j) {
            if (o.c_[j] == 0) continue;
            raw[i + j] += c_[i] * o.c_[j];
        }
    }
    std::vector<Rational> red(t.deg, Rational(0));
    for (int k = 0; k < static_cast<int>(raw.size()); ++k) {
        if (raw[k] == 0) continue;
        if (k < t.deg) {
            red[k] += raw[k];
        } else {
            const auto& row = t.powers[k];
            for (int i = 0; i < t.deg; ++i) red[i] += raw[k] * row[i];
        }
    }
    return Cyclo(m, std::move(red));
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw std::domain_error("Cyclo: division by zero");
    if (n_ == 1) return Cyclo(Rational(1) / c_[0]);
    // Extended Euclid for (this mod Phi_n, Phi_n) over Q[x].
    const auto& t = table_for(n_);
    using Poly = std::vector<Rational>;
    auto trim = [](Poly& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    };
    Poly r0(t.phi.size());
    for (size_t i = 0; i < t.phi.size(); ++i) r0[i] = Rational(t.phi[i]);
    Poly r1 = c_;
    trim(r1);
    Poly s0 = {Rational(0)}, s1 = {Rational(1)};  // coefficients of `this`
    while (true) {
        // divide r0 by r1: r0 = q*r1 + r
        Poly rem = r0;
        Poly q(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 1, Rational(0));
        while (rem.size() >= r1.size() && !rem.empty()) {
            Rational c = rem.back() / r1.back();
            size_t shift = rem.size() - r1.size();
            q[shift] = c;
            for (size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
            trim(rem);
            if (rem.empty()) break;
        }
        // s_new = s0 - q*s1
        Poly snew(std::max(s0.size(), q.size() + s1.size()), Rational(0));
        for (size_t i = 0; i < s0.size(); ++i) snew[i] += s0[i];
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < s1.size(); ++j) snew[i + j] -= q[i] * s1[j];
        }
        trim(snew);
        if (rem.empty()) {
            // r1 is the gcd; it must be a nonzero constant since Phi_n is
            // irreducible and `this` is nonzero mod Phi_n.
            if (r1.size() != 1) throw std::logic_error("Cyclo: gcd with Phi_n not constant");
            std::vector<Rational> out(t.deg, Rational(0));
            for (size_t i = 0; i < s1.size() && i < out.size(); ++i) out[i] = s1[i] / r1[0];
            return Cyclo(n_, std::move(out));
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(snew);
    }
}

Cyclo Cyclo::conjugate() const {
    if (n_ == 1) return *this;
    const auto& t = table_for(n_);
    std::vector<Rational> out(t.deg, Rational(0));
    for (int i = 0; i < t.deg; ++i) {
        if (c_[i] == 0) continue;
        int e = static_cast<int>((static_cast<long>(n_ - 1) * i) % n_);
        const auto& row = t.powers[e];
        for (int j = 0; j < t.deg; ++j) out[j] += c_[i] * row[j];
    }
    return Cyclo(n_, std::move(out));
}

Cyclo Cyclo::embedded(int m) const {
    if (m == n_ || n_ == 1) return *this;  // rationals are already canonical
    if (m % n_ != 0)
        throw conductor_mismatch("Cyclo: conductor " + std::to_string(n_) +
                                 " does not divide target " + std::to_string(m));
    return Cyclo(m, lift_coeffs(*this, m));
}

Cyclo Cyclo::pow(long e) const {
    if (e == 0) return Cyclo(n_ == 1 ? Cyclo(1) : Cyclo(Rational(1)).embedded(n_));
    Cyclo base = *this;
    if (e < 0) {
        base = base.inverse();
        e = -e;
    }
    Cyclo acc = Cyclo(Rational(1));
    if (n_ != 1) acc = acc.embedded(n_);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = (e >>= 1) ? base * base : base;
    }
    return acc;
}

bool Cyclo::operator==(const Cyclo& o) const {
    // Representation is canonical (rationals at conductor 1), so this is
    // exact value equality whenever one conductor divides the other.
    return n_ == o.n_ && c_ == o.c_;
}

bool Cyclo::operator<(const Cyclo& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    for (size_t i = 0; i < c_.size(); ++i) {
        int cmp = mpq_cmp(c_[i].get_mpq_t(), o.c_[i].get_mpq_t());
        if (cmp != 0) return cmp < 0;
    }
    return false;
}

namespace {
std::string symbol_for(int n) {
    if (n == 3) return "w";
    if (n == 4) return "i";
    return "z" + std::to_string(n);
}
}  // namespace

std::string Cyclo::str() const {
    if (is_zero()) return "0";
    std::string sym = symbol_for(n_);
    std::ostringstream out;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        Rational coef = c_[k];
        bool neg = coef < 0;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        Rational mag = neg ? Rational(-coef) : coef;
        if (k == 0) {
            out << mag.get_str();
        } else {
            if (mag != 1) out << mag.get_str() << "*";
            out << sym;
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

Cyclo Cyclo::parse(const std::string& text, int conductor_hint) {
    // Grammar: term (('+'|'-') term)*, term := rational ['*' sym ['^' int]] | sym ['^' int]
    // sym := 'w' | 'i' | 'z' digits
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    int n = std::max(conductor_hint, 1);
    struct Term {
        Rational coef;
        int sym_n = 0;  // 0: constant
        int exp = 0;
    };
    std::vector<Term> terms;
    skip_ws();
    bool first = true;
    while (pos < text.size()) {
        int sign = 1;
        skip_ws();
        if (!first || text[pos] == '+' || text[pos] == '-') {
            if (pos >= text.size()) break;
            if (text[pos] == '+') {
                ++pos;
            } else if (text[pos] == '-') {
                sign = -1;
                ++pos;
            } else if (!first) {
                throw std::invalid_argument("Cyclo::parse: expected '+' or '-' in: " + text);
            }
        }
        first = false;
        skip_ws();
        Term t;
        t.coef = sign;
        bool have_num = false;
        size_t start = pos;
        while (pos < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
            ++pos;
        if (pos > start) {
            t.coef = sign * Rational(text.substr(start, pos - start));
            t.coef.canonicalize();
            have_num = true;
        }
        skip_ws();
        if (pos < text.size() && text[pos] == '*') {
            ++pos;
            skip_ws();
        }
        if (pos < text.size() &&
            (text[pos] == 'w' || text[pos] == 'i' || text[pos] == 'z')) {
            char c = text[pos];
            ++pos;
            if (c == 'w') {
                t.sym_n = 3;
            } else if (c == 'i') {
                t.sym_n = 4;
            } else {
                size_t ds = pos;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
                if (pos == ds) throw std::invalid_argument("Cyclo::parse: bad symbol in: " + text);
                t.sym_n = std::stoi(text.substr(ds, pos - ds));
            }
            t.exp = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                size_t ds = pos;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
                t.exp = std::stoi(text.substr(ds, pos - ds));
            }
        } else if (!have_num) {
            throw std::invalid_argument("Cyclo::parse: empty term in: " + text);
        }
        terms.push_back(t);
        skip_ws();
    }
    for (const auto& t : terms)
        if (t.sym_n != 0) n = std::lcm(n, t.sym_n);
    Cyclo acc = Cyclo(Rational(0));
    if (n > 1) acc = acc.embedded(n);
    for (const auto& t : terms) {
        Cyclo part(t.coef);
        if (t.sym_n != 0) part = part.embedded(n) * zeta(t.sym_n).embedded(n).pow(t.exp);
        acc = acc + part;
    }
    return acc;
}

std::complex<double> Cyclo::approx() const {
    std::complex<double> z = std::polar(1.0, 2.0 * M_PI / n_);
    std::complex<double> acc(0.0, 0.0), p(1.0, 0.0);
    for (size_t i = 0; i < c_.size(); ++i) {
        acc += c_[i].get_d() * p;
        p *= z;
    }
    return acc;
}

}  // namespace hesspoly
