#include "hesspoly/mpoly.hpp"

#include <atomic>
#include <sstream>

#include "hesspoly/ratfunc.hpp"

namespace hesspoly {

namespace {
std::atomic<size_t> g_term_cap{5'000'000};
}

size_t MPoly::term_cap() { return g_term_cap.load(); }
void MPoly::set_term_cap(size_t cap) { g_term_cap.store(cap); }

MPoly::MPoly(const VariableSpace* sp, int conductor)
    : sp_(sp), cond_(conductor), t_(GradLexDesc{sp->size()}) {
    if (sp->size() > kMaxVars) throw space_mismatch("space too large for MPoly");
}

MPoly MPoly::constant(const VariableSpace* sp, const Cyclo& c) {
    MPoly p(sp, c.conductor());
    if (!c.is_zero()) p.t_.emplace(Monomial{}, c);
    return p;
}

MPoly MPoly::var(const VariableSpace* sp, int index, int conductor) {
    if (index < 0 || index >= sp->size()) throw space_mismatch("variable index out of range");
    MPoly p(sp, conductor);
    Monomial m;
    m.e[index] = 1;
    Cyclo one = Cyclo(1);
    if (conductor > 1) one = one.embedded(conductor);
    p.t_.emplace(m, one);
    return p;
}

int MPoly::degree() const {
    if (t_.empty()) return kNegInfinity;
    return t_.begin()->first.deg(sp_->size());  // leading term has max degree
}

bool MPoly::is_homogeneous(int* deg_out) const {
    if (t_.empty()) {
        if (deg_out) *deg_out = kNegInfinity;
        return true;
    }
    int d = t_.begin()->first.deg(sp_->size());
    for (const auto& [m, c] : t_)
        if (m.deg(sp_->size()) != d) return false;
    if (deg_out) *deg_out = d;
    return true;
}

MPoly MPoly::with_conductor(int m) const {
    if (m == cond_) return *this;
    MPoly r(sp_, m);
    for (const auto& [mon, c] : t_) r.t_.emplace(mon, c.embedded(m));
    return r;
}

void MPoly::align(MPoly& a, MPoly& b) {
    if (a.sp_ != b.sp_) throw space_mismatch("MPoly: space mismatch (" + a.sp_->id + " vs " +
                                             b.sp_->id + ")");
    if (a.cond_ == b.cond_) return;
    if (a.cond_ == 1)
        a = a.with_conductor(b.cond_);
    else if (b.cond_ == 1)
        b = b.with_conductor(a.cond_);
    else
        throw conductor_mismatch("MPoly: mixed conductors (use with_conductor())");
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly a = *this, b = o;
    align(a, b);
    for (const auto& [m, c] : b.t_) {
        auto it = a.t_.find(m);
        if (it == a.t_.end()) {
            a.t_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) a.t_.erase(it);
        }
    }
    a.check_cap();
    return a;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator*(const MPoly& o) const {
    MPoly a = *this, b = o;
    align(a, b);
    MPoly r(a.sp_, a.cond_);
    int nv = a.sp_->size();
    // iterate over the smaller factor outside
    const MPoly& outer = a.t_.size() <= b.t_.size() ? a : b;
    const MPoly& inner = a.t_.size() <= b.t_.size() ? b : a;
    for (const auto& [ma, ca] : outer.t_) {
        for (const auto& [mb, cb] : inner.t_) {
            Monomial m;
            for (int i = 0; i < nv; ++i) {
                int s = ma.e[i] + mb.e[i];
                if (s > 255) throw std::overflow_error("MPoly: exponent overflow");
                m.e[i] = static_cast<uint8_t>(s);
            }
            Cyclo prod = ca * cb;
            auto it = r.t_.find(m);
            if (it == r.t_.end()) {
                if (!prod.is_zero()) r.t_.emplace(m, std::move(prod));
            } else {
                it->second += prod;
                if (it->second.is_zero()) r.t_.erase(it);
            }
        }
        r.check_cap();
    }
    return r;
}

MPoly MPoly::scaled(const Cyclo& c) const {
    if (c.is_zero()) return MPoly(sp_, cond_);
    MPoly a = *this;
    Cyclo s = c;
    if (s.conductor() != a.cond_) {
        if (s.conductor() == 1)
            s = s.embedded(a.cond_);
        else if (a.cond_ == 1)
            a = a.with_conductor(s.conductor());
        else
            throw conductor_mismatch("MPoly::scaled: mixed conductors");
    }
    for (auto& [m, v] : a.t_) v = v * s;
    return a;
}

MPoly MPoly::pow(unsigned e) const {
    MPoly acc = MPoly::constant(sp_, Cyclo(1)).with_conductor(cond_);
    MPoly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

bool MPoly::operator==(const MPoly& o) const {
    if (sp_ != o.sp_) return false;
    if (cond_ == o.cond_) return t_ == o.t_;
    return (*this - o).is_zero();
}

MPoly MPoly::substitute_linear(const Mat& m) const {
    int nv = sp_->size();
    if (m.rows() != nv || m.cols() != nv)
        throw space_mismatch("substitute_linear: matrix dimension mismatch");
    std::vector<MPoly> images;
    images.reserve(nv);
    int mc = cond_;
    for (int i = 0; i < nv; ++i)
        for (int j = 0; j < nv; ++j)
            if (m.at(i, j).conductor() > mc) mc = m.at(i, j).conductor();
    for (int i = 0; i < nv; ++i) {
        MPoly img(sp_, mc);
        for (int j = 0; j < nv; ++j) {
            if (m.at(i, j).is_zero()) continue;
            img += MPoly::var(sp_, j, mc).scaled(m.at(i, j).embedded(mc));
        }
        images.push_back(std::move(img));
    }
    return substitute_map(sp_, images);
}

MPoly MPoly::substitute_map(const VariableSpace* target, std::span<const MPoly> images) const {
    int nv = sp_->size();
    if (static_cast<int>(images.size()) != nv)
        throw space_mismatch("substitute_map: one image per variable required");
    int mc = cond_;
    for (const auto& img : images) mc = std::max(mc, img.conductor());
    MPoly acc(target, mc);
    // cache images powers lazily per variable
    std::vector<std::vector<MPoly>> powers(nv);
    auto img_pow = [&](int v, int e) -> const MPoly& {
        auto& cache = powers[v];
        if (cache.empty()) cache.push_back(MPoly::constant(target, Cyclo(1)).with_conductor(mc));
        while (static_cast<int>(cache.size()) <= e)
            cache.push_back(cache.back() * images[v].with_conductor(mc));
        return cache[e];
    };
    for (const auto& [mon, c] : t_) {
        MPoly term = MPoly::constant(target, c.embedded(mc));
        for (int v = 0; v < nv; ++v)
            if (mon.e[v] > 0) term = term * img_pow(v, mon.e[v]);
        acc += term;
    }
    return acc;
}

MPoly MPoly::partial_derivative(int var) const {
    if (var < 0 || var >= sp_->size()) throw space_mismatch("partial_derivative: unknown variable");
    MPoly r(sp_, cond_);
    for (const auto& [m, c] : t_) {
        if (m.e[var] == 0) continue;
        Monomial d = m;
        d.e[var] -= 1;
        Cyclo nc = c * Cyclo(static_cast<long>(m.e[var]));
        auto it = r.t_.find(d);
        if (it == r.t_.end())
            r.t_.emplace(d, nc);
        else {
            it->second += nc;
            if (it->second.is_zero()) r.t_.erase(it);
        }
    }
    return r;
}

Cyclo MPoly::eval(std::span<const Cyclo> point) const {
    int nv = sp_->size();
    if (static_cast<int>(point.size()) != nv)
        throw space_mismatch("eval: point length mismatch");
    int mc = cond_;
    for (const auto& p : point) mc = std::max(mc, p.conductor());
    // per-variable power tables
    std::vector<std::vector<Cyclo>> pw(nv);
    for (int v = 0; v < nv; ++v) pw[v].push_back(Cyclo(1).embedded(mc));
    auto get_pow = [&](int v, int e) -> const Cyclo& {
        auto& cache = pw[v];
        while (static_cast<int>(cache.size()) <= e)
            cache.push_back(cache.back() * point[v].embedded(mc));
        return cache[e];
    };
    Cyclo acc = Cyclo(Rational(0)).embedded(mc);
    for (const auto& [m, c] : t_) {
        Cyclo term = c.embedded(mc);
        for (int v = 0; v < nv; ++v)
            if (m.e[v] > 0) term = term * get_pow(v, m.e[v]);
        acc += term;
    }
    return acc;
}

MPoly::Division MPoly::divide_exact(const MPoly& g) const {
    if (g.is_zero()) throw std::domain_error("divide_exact: division by zero polynomial");
    MPoly rem = *this, div = g;
    align(rem, div);
    MPoly q(rem.sp_, rem.cond_);
    int nv = sp_->size();
    const auto& [gm, gc] = *div.t_.begin();
    Cyclo gcinv = gc.inverse();
    while (!rem.is_zero()) {
        const auto& [rm, rc] = *rem.t_.begin();
        Monomial d;
        bool divisible = true;
        for (int i = 0; i < nv; ++i) {
            if (rm.e[i] < gm.e[i]) {
                divisible = false;
                break;
            }
            d.e[i] = rm.e[i] - gm.e[i];
        }
        if (!divisible) return {false, rem};
        Cyclo coef = rc * gcinv;
        MPoly t(rem.sp_, rem.cond_);
        t.t_.emplace(d, coef);
        q += t;
        rem -= t * div;
    }
    return {true, q};
}

void MPoly::set_term(const Monomial& m, const Cyclo& c) {
    auto it = t_.find(m);
    if (it != t_.end()) t_.erase(it);
    if (!c.is_zero()) {
        Cyclo v = c;
        if (v.conductor() != cond_) {
            if (v.conductor() == 1)
                v = v.embedded(cond_);
            else
                throw conductor_mismatch("set_term: conductor mismatch");
        }
        t_.emplace(m, v);
    }
}

void MPoly::check_cap() const {
    if (t_.size() > term_cap())
        throw term_cap_exceeded("MPoly: term count " + std::to_string(t_.size()) +
                                " exceeds cap " + std::to_string(term_cap()));
}

std::string MPoly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : t_) {
        std::string cs = c.str();
        bool needs_paren = cs.find(' ') != std::string::npos;
        bool neg = !needs_paren && cs[0] == '-';
        if (first) {
            first = false;
            if (neg) {
                out << "-";
                cs = cs.substr(1);
            }
        } else {
            if (neg) {
                out << " - ";
                cs = cs.substr(1);
            } else {
                out << " + ";
            }
        }
        std::string mono;
        for (int v = 0; v < sp_->size(); ++v) {
            if (m.e[v] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += sp_->vars[v];
            if (m.e[v] > 1) mono += "^" + std::to_string(m.e[v]);
        }
        if (mono.empty()) {
            out << (needs_paren ? "(" + cs + ")" : cs);
        } else if (cs == "1") {
            out << mono;
        } else {
            out << (needs_paren ? "(" + cs + ")" : cs) << "*" << mono;
        }
    }
    return out.str();
}

namespace {

MPoly minor_det(const std::vector<std::vector<MPoly>>& m, std::vector<int> rows,
                std::vector<int> cols) {
    const MPoly& probe = m[rows[0]][cols[0]];
    if (rows.size() == 1) return probe;
    MPoly acc(probe.space(), probe.conductor());
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    for (size_t j = 0; j < cols.size(); ++j) {
        std::vector<int> sub_cols;
        for (size_t k = 0; k < cols.size(); ++k)
            if (k != j) sub_cols.push_back(cols[k]);
        MPoly term = m[rows[0]][cols[j]] * minor_det(m, sub_rows, sub_cols);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace

MPoly jacobian_det(std::span<const MPoly> forms, std::span<const int> vars) {
    if (forms.size() != vars.size())
        throw space_mismatch("jacobian_det: system must be square");
    size_t n = forms.size();
    std::vector<std::vector<MPoly>> jac(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) jac[i].push_back(forms[i].partial_derivative(vars[j]));
    if (n <= 4) {
        std::vector<int> idx(n);
        for (size_t i = 0; i < n; ++i) idx[i] = static_cast<int>(i);
        return minor_det(jac, idx, idx);
    }
    // Fraction-free (Bareiss) elimination over the polynomial ring.
    auto& a = jac;
    MPoly prev = MPoly::constant(forms[0].space(), Cyclo(1));
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return MPoly::zero(forms[0].space(), forms[0].conductor());
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                MPoly num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                auto d = num.divide_exact(prev);
                if (!d.ok) throw std::logic_error("jacobian_det: Bareiss division failed");
                a[i][j] = d.value;
            }
        }
        prev = a[k][k];
    }
    MPoly det = a[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

RatFunc substitute_map_rat(const MPoly& f, const VariableSpace* target,
                           std::span<const RatFunc> images) {
    int nv = f.space()->size();
    if (static_cast<int>(images.size()) != nv)
        throw space_mismatch("substitute_map_rat: one image per variable required");
    RatFunc acc = RatFunc(MPoly::zero(target, f.conductor()));
    for (const auto& [mon, c] : f.terms()) {
        RatFunc term(MPoly::constant(target, c));
        for (int v = 0; v < nv; ++v)
            for (int k = 0; k < mon.e[v]; ++k) term = term * images[v];
        acc = acc + term;
    }
    return acc;
}

}  // namespace hesspoly
