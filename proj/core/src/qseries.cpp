#include "hesspoly/qseries.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hesspoly {

Rational QSeries::at(long num) const {
    if (num >= known_)
        throw std::out_of_range("QSeries: coefficient at " + std::to_string(num) + "/" +
                                std::to_string(d_) + " is beyond the truncation frontier");
    auto it = c_.find(num);
    return it == c_.end() ? Rational(0) : it->second;
}

QSeries QSeries::rescaled(long m) const {
    if (m == d_) return *this;
    if (m % d_ != 0) throw std::invalid_argument("QSeries: incompatible denominators");
    long f = m / d_;
    QSeries r(m, known_ >= kInf ? kInf : known_ * f);
    for (const auto& [e, c] : c_) r.c_[e * f] = c;
    return r;
}

QSeries QSeries::truncated(long new_known) const {
    QSeries r(d_, std::min(known_, new_known));
    for (const auto& [e, c] : c_)
        if (e < r.known_) r.c_[e] = c;
    return r;
}

long QSeries::lcm_den(const QSeries& a, const QSeries& b) { return std::lcm(a.d_, b.d_); }

QSeries QSeries::operator-() const {
    QSeries r = *this;
    for (auto& [e, c] : r.c_) c = -c;
    return r;
}

QSeries QSeries::operator+(const QSeries& o) const {
    long m = lcm_den(*this, o);
    QSeries a = rescaled(m), b = o.rescaled(m);
    QSeries r(m, std::min(a.known_, b.known_));
    for (const auto& [e, c] : a.c_)
        if (e < r.known_) r.c_[e] = c;
    for (const auto& [e, c] : b.c_) {
        if (e >= r.known_) continue;
        auto it = r.c_.find(e);
        if (it == r.c_.end())
            r.c_[e] = c;
        else {
            it->second += c;
            if (it->second == 0) r.c_.erase(it);
        }
    }
    return r;
}

QSeries QSeries::operator-(const QSeries& o) const { return *this + (-o); }

QSeries QSeries::operator*(const QSeries& o) const {
    long m = lcm_den(*this, o);
    QSeries a = rescaled(m), b = o.rescaled(m);
    long va = a.lead(), vb = b.lead();
    long k;
    if (a.known_ >= kInf && b.known_ >= kInf)
        k = kInf;
    else
        k = std::min(a.known_ >= kInf ? kInf : a.known_ + vb,
                     b.known_ >= kInf ? kInf : b.known_ + va);
    QSeries r(m, k);
    for (const auto& [ea, ca] : a.c_) {
        if (ea + vb >= k) break;
        for (const auto& [eb, cb] : b.c_) {
            long e = ea + eb;
            if (e >= k) break;
            auto it = r.c_.find(e);
            if (it == r.c_.end()) {
                Rational prod = ca * cb;
                if (prod != 0) r.c_[e] = prod;
            } else {
                it->second += ca * cb;
                if (it->second == 0) r.c_.erase(it);
            }
        }
    }
    return r;
}

QSeries QSeries::scaled(const Rational& s) const {
    QSeries r(d_, known_);
    if (s == 0) return r;
    for (const auto& [e, c] : c_) r.c_[e] = c * s;
    return r;
}

QSeries QSeries::inverse() const {
    if (c_.empty()) throw std::domain_error("QSeries: inverse of zero series");
    long v = lead();
    Rational lc = c_.begin()->second;
    if (known_ >= kInf) {
        // exact data: only a monomial can be inverted exactly
        if (c_.size() == 1) {
            QSeries h(d_, kInf);
            h.c_[-v] = 1 / lc;
            return h;
        }
        throw std::logic_error("QSeries: cannot invert an exact non-monomial series exactly");
    }
    long kh = known_ - 2 * v;  // frontier of the inverse
    QSeries h(d_, kh);
    if (kh <= -v) return h;
    // u = this shifted so its lead sits at exponent 0; g = 1/u
    std::map<long, Rational> u;
    for (const auto& [e, c] : c_) u[e - v] = c;
    std::map<long, Rational> g;
    g[0] = 1 / lc;
    long span = kh + v;  // g exponents run below span
    for (long e = 1; e < span; ++e) {
        Rational acc(0);
        for (const auto& [j, uc] : u) {
            if (j == 0) continue;
            if (j > e) break;
            auto it = g.find(e - j);
            if (it != g.end()) acc += uc * it->second;
        }
        if (acc != 0) g[e] = -acc / lc;
    }
    for (const auto& [e, c] : g)
        if (e - v < h.known_ && c != 0) h.c_[e - v] = c;
    return h;
}

QSeries QSeries::operator/(const QSeries& o) const { return *this * o.inverse(); }

QSeries QSeries::pow_int(long e) const {
    if (e < 0) return inverse().pow_int(-e);
    QSeries acc = QSeries::one(d_);
    QSeries base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

QSeries QSeries::q_d_dq() const {
    QSeries r(d_, known_);
    for (const auto& [e, c] : c_) {
        Rational v = c * rat(e, d_);
        if (v != 0) r.c_[e] = v;
    }
    return r;
}

void QSeries::set(long num, const Rational& r) {
    if (num >= known_) throw std::out_of_range("QSeries::set beyond frontier");
    if (r == 0)
        c_.erase(num);
    else
        c_[num] = r;
}

std::string QSeries::str(long max_terms) const {
    std::ostringstream out;
    long shown = 0;
    for (const auto& [e, c] : c_) {
        if (shown++ >= max_terms) {
            out << " + ...";
            break;
        }
        if (shown > 1) out << " + ";
        out << "(" << c.get_str() << ")q^(" << e << "/" << d_ << ")";
    }
    if (c_.empty()) out << "0";
    if (known_ < kInf) out << "  [known below " << known_ << "/" << d_ << "]";
    return out.str();
}

namespace qseries {

QSeries theta_A2(int which, int N) {
    if (N < 1) throw std::invalid_argument("theta_A2: N must be positive");
    QSeries s(3, 3L * N);
    long B = static_cast<long>(std::sqrt(2.0 * N)) + 4;
    for (long x = -B; x <= B; ++x) {
        for (long y = -B; y <= B; ++y) {
            long q3;
            if (which == 0)
                q3 = 3 * (x * x - x * y + y * y);
            else
                q3 = 3 * (x * x - x * y + y * y + x - y) + 1;
            if (q3 < 0 || q3 >= 3L * N) continue;
            Rational cur = s.coeffs().count(q3) ? s.coeffs().at(q3) : Rational(0);
            s.set(q3, cur + 1);
        }
    }
    return s;
}

QSeries eisenstein(int k, int N) {
    if (k != 4 && k != 6) throw std::invalid_argument("eisenstein: k must be 4 or 6");
    QSeries s(1, N);
    s.set(0, Rational(1));
    long scale = (k == 4) ? 240 : -504;
    int r = (k == 4) ? 3 : 5;
    for (long m = 1; m < N; ++m) {
        Integer sigma(0);
        for (long dd = 1; dd <= m; ++dd) {
            if (m % dd) continue;
            Integer acc(1);
            for (int i = 0; i < r; ++i) acc *= Integer(dd);
            sigma += acc;
        }
        s.set(m, Rational(sigma) * scale);
    }
    return s;
}

QSeries delta_eisenstein(int N) {
    QSeries e4 = eisenstein(4, N), e6 = eisenstein(6, N);
    return (e4.pow_int(3) - e6.pow_int(2)).scaled(rat(1, 1728));
}

QSeries delta_product(int N) { return eta_quotient({{rat(1), 24}}, N, 1); }

namespace {

// (1 - q^(a/d))^e with integer e (possibly negative), complete below window.
QSeries binomial_factor(long d, long a, long e, long window) {
    QSeries s(d, window);
    s.set(0, Rational(1));
    if (e == 0) return s;
    Rational coef(1);
    for (long j = 1; a * j < window; ++j) {
        coef = coef * rat(e - (j - 1), j);
        s.set(a * j, coef * ((j % 2) ? Rational(-1) : Rational(1)));
    }
    return s;
}

}  // namespace

QSeries eta_quotient(const std::vector<std::pair<Rational, int>>& factors, int N, long d) {
    long window = d * static_cast<long>(N);
    Rational lead_exp(0);
    for (const auto& [k, e] : factors) lead_exp += k * rat(e, 24);
    Rational lead_units = lead_exp * rat(d);
    if (!is_integer(lead_units))
        throw std::invalid_argument("eta_quotient: leading exponent not representable at d = " +
                                    std::to_string(d));
    long shift = static_cast<long>(lead_units.get_num().get_si());
    QSeries acc(d, window);
    if (shift < window) acc.set(shift, Rational(1));
    for (const auto& [k, e] : factors) {
        Rational grain = k * rat(d);
        if (!is_integer(grain) || grain <= 0)
            throw std::invalid_argument("eta_quotient: scale not representable at d = " +
                                        std::to_string(d));
        long a = static_cast<long>(grain.get_num().get_si());
        for (long m = 1; a * m < window; ++m) acc = acc * binomial_factor(d, a * m, e, window);
    }
    return acc;
}

Check verify_theta_eisenstein(int N) {
    QSeries t0 = theta_A2(0, N), t1 = theta_A2(1, N);
    QSeries e4 = eisenstein(4, N).rescaled(3), e6 = eisenstein(6, N).rescaled(3);
    QSeries lhs4 = t0.pow_int(4) + (t0 * t1.pow_int(3)).scaled(rat(8));
    QSeries lhs6 = t0.pow_int(6) - (t0.pow_int(3) * t1.pow_int(3)).scaled(rat(20)) -
                   t1.pow_int(6).scaled(rat(8));
    QSeries d4 = lhs4 - e4;
    QSeries d6 = lhs6 - e6;
    std::ostringstream detail;
    detail << "windows " << d4.known() << "/3 and " << d6.known() << "/3";
    bool pass = d4.is_zero_on_window() && d6.is_zero_on_window() && d4.known() >= 3L * N &&
                d6.known() >= 3L * N;
    if (!d4.is_zero_on_window()) detail << "; E4 first mismatch at q^(" << d4.lead() << "/3)";
    if (!d6.is_zero_on_window()) detail << "; E6 first mismatch at q^(" << d6.lead() << "/3)";
    return {pass, detail.str()};
}

Check delta_two_routes(int N) {
    QSeries a = delta_eisenstein(N), b = delta_product(N);
    QSeries d = a - b;
    std::ostringstream detail;
    detail << "window " << d.known() << " q-powers";
    if (!d.is_zero_on_window()) detail << "; first mismatch at q^" << d.lead();
    return {d.is_zero_on_window() && d.known() >= N, detail.str()};
}

Check picard_fuchs_residual(int N) {
    QSeries eta_ratio = eta_quotient({{rat(3), 3}, {rat(1, 3), -3}}, N);
    QSeries t = eta_ratio.scaled(rat(9)) + QSeries::one(72);
    QSeries f = eta_quotient({{rat(1, 3), 3}, {rat(1), -1}}, N);
    QSeries tq = t.q_d_dq();
    QSeries fq = f.q_d_dq();
    QSeries f1 = fq / tq;           // df/dt
    QSeries f2 = f1.q_d_dq() / tq;  // d^2 f/dt^2
    QSeries residual =
        (t.pow_int(3) - QSeries::one(72)) * f2 + t.pow_int(2).scaled(rat(3)) * f1 + t * f;
    std::ostringstream detail;
    detail << "residual window " << residual.known() << "/72";
    if (!residual.is_zero_on_window())
        detail << "; first nonzero at q^(" << residual.lead() << "/72)";
    return {residual.is_zero_on_window() && residual.known() > 72, detail.str()};
}

Check rform_ode_residual(int N) {
    QSeries r = eta_quotient({{rat(3), 3}, {rat(1, 3), -3}}, N);
    QSeries f = eta_quotient({{rat(1, 3), 3}, {rat(1), -1}}, N);
    QSeries rq = r.q_d_dq();
    QSeries fq = f.q_d_dq();
    QSeries f1 = fq / rq;
    QSeries f2 = f1.q_d_dq() / rq;
    QSeries nine_r_1 = r.scaled(rat(9)) + QSeries::one(72);
    QSeries quad = r.pow_int(2).scaled(rat(27)) + r.scaled(rat(9)) + QSeries::one(72);
    QSeries residual = r * quad * f2 + nine_r_1.pow_int(2) * f1 + nine_r_1.scaled(rat(3)) * f;
    std::ostringstream detail;
    detail << "residual window " << residual.known() << "/72";
    if (!residual.is_zero_on_window())
        detail << "; first nonzero at q^(" << residual.lead() << "/72)";
    return {residual.is_zero_on_window() && residual.known() > 72, detail.str()};
}

}  // namespace qseries
}  // namespace hesspoly
