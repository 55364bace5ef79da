#include "exactmath/mpoly.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace exactmath {

namespace {
std::mutex g_var_mutex;
std::vector<std::string>& registry()
{
    static std::vector<std::string> names{"x", "y", "z", "X", "Y", "W", "t", "s",
                                          "u", "v", "w", "mu", "lam"};
    return names;
}
} // namespace

Var var_id(std::string_view name)
{
    std::lock_guard<std::mutex> lock(g_var_mutex);
    auto& r = registry();
    for (size_t i = 0; i < r.size(); ++i)
        if (r[i] == name)
            return static_cast<Var>(i);
    r.emplace_back(name);
    return static_cast<Var>(r.size() - 1);
}

const std::string& var_name(Var v)
{
    std::lock_guard<std::mutex> lock(g_var_mutex);
    return registry().at(static_cast<size_t>(v));
}

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const
{
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        Var va = i < a.size() ? a[i].first : 1 << 30;
        Var vb = j < b.size() ? b[j].first : 1 << 30;
        Var v = std::min(va, vb);
        int ea = va == v ? a[i].second : 0;
        int eb = vb == v ? b[j].second : 0;
        if (ea != eb)
            return ea < eb;
        if (va == v)
            ++i;
        if (vb == v)
            ++j;
    }
    return false;
}

int exponent(const Monomial& m, Var v)
{
    for (const auto& [w, e] : m)
        if (w == v)
            return e;
    return 0;
}

int total_degree(const Monomial& m)
{
    int d = 0;
    for (const auto& p : m)
        d += p.second;
    return d;
}

Monomial mono_mul(const Monomial& a, const Monomial& b)
{
    Monomial r;
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first))
            r.push_back(a[i++]);
        else if (i == a.size() || b[j].first < a[i].first)
            r.push_back(b[j++]);
        else {
            r.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        }
    }
    return r;
}

bool mono_divides(const Monomial& d, const Monomial& m)
{
    for (const auto& [v, e] : d)
        if (exponent(m, v) < e)
            return false;
    return true;
}

Monomial mono_div(const Monomial& m, const Monomial& d)
{
    Monomial r;
    for (const auto& [v, e] : m) {
        int k = e - exponent(d, v);
        if (k < 0)
            throw std::domain_error("monomial does not divide");
        if (k > 0)
            r.emplace_back(v, k);
    }
    return r;
}

MPoly::MPoly(const Scalar& c)
{
    if (!c.is_zero())
        t_.emplace(Monomial{}, c);
}

MPoly MPoly::variable(Var v, int e)
{
    MPoly p;
    if (e == 0)
        return MPoly(1);
    p.t_.emplace(Monomial{{v, e}}, Scalar(1));
    return p;
}

MPoly MPoly::term(const Scalar& c, Monomial m)
{
    MPoly p;
    std::sort(m.begin(), m.end());
    Monomial clean;
    for (const auto& pe : m) {
        if (pe.second == 0)
            continue;
        if (!clean.empty() && clean.back().first == pe.first)
            clean.back().second += pe.second;
        else
            clean.push_back(pe);
    }
    if (!c.is_zero())
        p.t_.emplace(std::move(clean), c);
    return p;
}

void MPoly::add_term(const Monomial& m, const Scalar& c)
{
    if (c.is_zero())
        return;
    auto it = t_.find(m);
    if (it == t_.end()) {
        t_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        t_.erase(it);
}

bool MPoly::is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty()); }

Scalar MPoly::constant_term() const
{
    auto it = t_.find(Monomial{});
    return it == t_.end() ? Scalar(0) : it->second;
}

int MPoly::total_degree() const
{
    int d = t_.empty() ? -1 : 0;
    for (const auto& [m, c] : t_)
        d = std::max(d, exactmath::total_degree(m));
    return d;
}

int MPoly::total_degree(const std::vector<Var>& vs) const
{
    int d = t_.empty() ? -1 : 0;
    for (const auto& [m, c] : t_) {
        int k = 0;
        for (Var v : vs)
            k += exponent(m, v);
        d = std::max(d, k);
    }
    return d;
}

int MPoly::degree(Var v) const
{
    int d = t_.empty() ? -1 : 0;
    for (const auto& [m, c] : t_)
        d = std::max(d, exponent(m, v));
    return d;
}

int MPoly::low_degree(Var v) const
{
    if (t_.empty())
        return -1;
    int d = 1 << 30;
    for (const auto& [m, c] : t_)
        d = std::min(d, exponent(m, v));
    return d;
}

std::vector<Var> MPoly::variables() const
{
    std::vector<Var> vs;
    for (const auto& [m, c] : t_)
        for (const auto& [v, e] : m)
            if (std::find(vs.begin(), vs.end(), v) == vs.end())
                vs.push_back(v);
    std::sort(vs.begin(), vs.end());
    return vs;
}

FieldPtr MPoly::field() const
{
    FieldPtr K;
    for (const auto& [m, c] : t_)
        K = common_field(K, c.field());
    return K;
}

Scalar MPoly::coeff(const Monomial& m) const
{
    auto it = t_.find(m);
    return it == t_.end() ? Scalar(0) : it->second;
}

const Monomial& MPoly::lead_monomial() const
{
    if (t_.empty())
        throw std::logic_error("lead of zero polynomial");
    return t_.rbegin()->first;
}

const Scalar& MPoly::lead_coeff() const
{
    if (t_.empty())
        throw std::logic_error("lead of zero polynomial");
    return t_.rbegin()->second;
}

std::vector<MPoly> MPoly::coefficients(Var v) const
{
    std::vector<MPoly> out(std::max(0, degree(v) + 1));
    for (const auto& [m, c] : t_) {
        int e = 0;
        Monomial rest;
        for (const auto& pe : m) {
            if (pe.first == v)
                e = pe.second;
            else
                rest.push_back(pe);
        }
        out[e].t_.emplace(std::move(rest), c);
    }
    return out;
}

MPoly MPoly::from_coefficients(Var v, const std::vector<MPoly>& c)
{
    MPoly r;
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero())
            continue;
        Monomial vm;
        if (i > 0)
            vm.emplace_back(v, static_cast<int>(i));
        for (const auto& [m, a] : c[i].t_)
            r.add_term(mono_mul(m, vm), a);
    }
    return r;
}

MPoly MPoly::operator-() const
{
    MPoly r = *this;
    for (auto& [m, c] : r.t_)
        c = -c;
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o)
{
    for (const auto& [m, c] : o.t_)
        add_term(m, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o)
{
    for (const auto& [m, c] : o.t_)
        add_term(m, -c);
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b)
{
    MPoly r;
    if (a.is_zero() || b.is_zero())
        return r;
    for (const auto& [ma, ca] : a.t_)
        for (const auto& [mb, cb] : b.t_)
            r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
}

MPoly MPoly::scaled(const Scalar& c) const
{
    if (c.is_zero())
        return {};
    MPoly r = *this;
    for (auto& [m, a] : r.t_)
        a *= c;
    for (auto it = r.t_.begin(); it != r.t_.end();)
        it = it->second.is_zero() ? r.t_.erase(it) : std::next(it);
    return r;
}

MPoly MPoly::pow(int e) const
{
    if (e < 0)
        throw std::invalid_argument("negative power of a polynomial");
    MPoly r(1), b = *this;
    while (e > 0) {
        if (e & 1)
            r *= b;
        e >>= 1;
        if (e)
            b *= b;
    }
    return r;
}

MPoly MPoly::derivative(Var v) const
{
    MPoly r;
    for (const auto& [m, c] : t_) {
        int e = exponent(m, v);
        if (e == 0)
            continue;
        Monomial nm;
        for (const auto& pe : m) {
            if (pe.first != v)
                nm.push_back(pe);
            else if (pe.second > 1)
                nm.emplace_back(v, pe.second - 1);
        }
        r.add_term(nm, c * Scalar(e));
    }
    return r;
}

MPoly MPoly::subs(Var v, const MPoly& e) const
{
    auto cs = coefficients(v);
    MPoly r;
    for (int i = static_cast<int>(cs.size()) - 1; i >= 0; --i)
        r = r * e + cs[i];
    return r;
}

MPoly MPoly::subs(const std::map<Var, MPoly>& m) const
{
    std::map<std::pair<Var, int>, MPoly> cache;
    auto power = [&](Var v, int e) -> const MPoly& {
        auto key = std::make_pair(v, e);
        auto it = cache.find(key);
        if (it != cache.end())
            return it->second;
        MPoly p = m.at(v).pow(e);
        return cache.emplace(key, std::move(p)).first->second;
    };
    MPoly r;
    for (const auto& [mono, c] : t_) {
        MPoly term = MPoly::term(c, {});
        Monomial keep;
        for (const auto& [v, e] : mono) {
            if (m.count(v))
                term = term * power(v, e);
            else
                keep.emplace_back(v, e);
        }
        if (!keep.empty())
            term = term * MPoly::term(Scalar(1), keep);
        r += term;
    }
    return r;
}

MPoly MPoly::eval(Var v, const Scalar& a) const
{
    MPoly r;
    for (const auto& [m, c] : t_) {
        int e = exponent(m, v);
        if (e == 0) {
            r.add_term(m, c);
            continue;
        }
        Monomial nm;
        for (const auto& pe : m)
            if (pe.first != v)
                nm.push_back(pe);
        r.add_term(nm, c * a.pow(e));
    }
    return r;
}

Scalar MPoly::eval_all(const std::map<Var, Scalar>& point) const
{
    Scalar s(0);
    for (const auto& [m, c] : t_) {
        Scalar term = c;
        for (const auto& [v, e] : m)
            term *= point.at(v).pow(e);
        s += term;
    }
    return s;
}

MPoly MPoly::homogeneous_part(int d) const
{
    MPoly r;
    for (const auto& [m, c] : t_)
        if (exactmath::total_degree(m) == d)
            r.t_.emplace(m, c);
    return r;
}

MPoly MPoly::homogeneous_part(int d, const std::vector<Var>& vs) const
{
    MPoly r;
    for (const auto& [m, c] : t_) {
        int k = 0;
        for (Var v : vs)
            k += exponent(m, v);
        if (k == d)
            r.t_.emplace(m, c);
    }
    return r;
}

MPoly MPoly::homogenize(const std::vector<Var>& vs, Var hvar, int d) const
{
    if (d < 0)
        d = total_degree(vs);
    MPoly r;
    for (const auto& [m, c] : t_) {
        int k = 0;
        for (Var v : vs)
            k += exponent(m, v);
        if (k > d)
            throw std::invalid_argument("homogenize: degree bound too small");
        Monomial hm;
        if (d - k > 0)
            hm.emplace_back(hvar, d - k);
        r.add_term(mono_mul(m, hm), c);
    }
    return r;
}

MPoly MPoly::strip_monomial(Monomial* removed) const
{
    if (t_.empty())
        return *this;
    Monomial g = t_.begin()->first;
    for (const auto& [m, c] : t_) {
        Monomial ng;
        for (const auto& [v, e] : g) {
            int k = std::min(e, exponent(m, v));
            if (k > 0)
                ng.emplace_back(v, k);
        }
        g = std::move(ng);
    }
    if (removed)
        *removed = g;
    if (g.empty())
        return *this;
    MPoly r;
    for (const auto& [m, c] : t_)
        r.t_.emplace(mono_div(m, g), c);
    return r;
}

MPoly MPoly::monic_lex() const
{
    if (t_.empty())
        return *this;
    return scaled(lead_coeff().inverse());
}

UniPoly MPoly::to_uni(Var v) const
{
    std::vector<Scalar> c(std::max(0, degree(v) + 1));
    for (const auto& [m, a] : t_) {
        if (m.size() > 1 || (m.size() == 1 && m[0].first != v))
            throw std::invalid_argument("to_uni: polynomial involves other variables: " + str());
        c[m.empty() ? 0 : m[0].second] = a;
    }
    return UniPoly(std::move(c));
}

MPoly MPoly::from_uni(const UniPoly& p, Var v)
{
    MPoly r;
    for (int i = 0; i <= p.degree(); ++i)
        if (!p.coeff(i).is_zero())
            r.t_.emplace(i == 0 ? Monomial{} : Monomial{{v, i}}, p.coeff(i));
    return r;
}

std::string MPoly::str() const
{
    if (t_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    // descending total degree, then descending lex
    std::vector<std::pair<Monomial, Scalar>> items(t_.rbegin(), t_.rend());
    std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        return exactmath::total_degree(a.first) > exactmath::total_degree(b.first);
    });
    for (const auto& [m, c] : items) {
        std::string cs = c.str();
        bool compound = !c.is_rational();
        bool neg = !compound && sgn(c.rational()) < 0;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        if (neg)
            cs = cs.substr(1);
        if (compound)
            cs = "(" + cs + ")";
        std::string mono;
        for (const auto& [v, e] : m) {
            if (!mono.empty())
                mono += "*";
            mono += var_name(v);
            if (e > 1)
                mono += "^" + std::to_string(e);
        }
        if (mono.empty())
            os << cs;
        else if (cs == "1")
            os << mono;
        else
            os << cs << "*" << mono;
        first = false;
    }
    return os.str();
}

MPoly exact_div(const MPoly& a, const MPoly& b)
{
    MPoly q;
    if (!mdivides(b, a, &q))
        throw std::domain_error("inexact multivariate division");
    return q;
}

bool mdivides(const MPoly& b, const MPoly& a, MPoly* quotient)
{
    if (b.is_zero())
        throw DivisionByZero();
    MPoly r = a, q;
    const Monomial& lb = b.lead_monomial();
    Scalar inv = b.lead_coeff().inverse();
    while (!r.is_zero()) {
        const Monomial& lr = r.lead_monomial();
        if (!mono_divides(lb, lr))
            return false;
        MPoly t = MPoly::term(r.lead_coeff() * inv, mono_div(lr, lb));
        q += t;
        r -= t * b;
    }
    if (quotient)
        *quotient = std::move(q);
    return true;
}

namespace {

using Coeffs = std::vector<MPoly>;

int cdeg(const Coeffs& c) { return static_cast<int>(c.size()) - 1; }

void ctrim(Coeffs& c)
{
    while (!c.empty() && c.back().is_zero())
        c.pop_back();
}

Coeffs prem(const Coeffs& a, const Coeffs& b)
{
    Coeffs r = a;
    int db = cdeg(b);
    const MPoly& lb = b.back();
    int steps = cdeg(a) - db + 1;
    while (cdeg(r) >= db) {
        MPoly lr = r.back();
        int shift = cdeg(r) - db;
        for (auto& c : r)
            c = c * lb;
        for (int j = 0; j <= db; ++j)
            r[shift + j] -= lr * b[j];
        ctrim(r);
        --steps;
    }
    if (steps > 0) {
        MPoly f = lb.pow(steps);
        for (auto& c : r)
            c = c * f;
    }
    return r;
}

} // namespace

MPoly resultant(const MPoly& p, const MPoly& q, Var v)
{
    if (p.is_zero() || q.is_zero())
        return {};
    Coeffs A = p.coefficients(v), B = q.coefficients(v);
    if (cdeg(A) == 0 && cdeg(B) == 0)
        throw std::invalid_argument("no elimination variable");
    int s = 1;
    if (cdeg(A) < cdeg(B)) {
        std::swap(A, B);
        if (cdeg(A) % 2 == 1 && cdeg(B) % 2 == 1)
            s = -s;
    }
    if (cdeg(B) == 0)
        return B[0].pow(cdeg(A));
    MPoly g(1), h(1);
    while (true) {
        int delta = cdeg(A) - cdeg(B);
        if (cdeg(A) % 2 == 1 && cdeg(B) % 2 == 1)
            s = -s;
        Coeffs R = prem(A, B);
        A = std::move(B);
        if (R.empty())
            return {};
        MPoly div = g * h.pow(delta);
        for (auto& c : R)
            c = exact_div(c, div);
        B = std::move(R);
        g = A.back();
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            h = exact_div(g.pow(delta), h.pow(delta - 1));
        }
        if (cdeg(B) == 0)
            break;
    }
    int da = cdeg(A);
    MPoly res = da == 1 ? B[0] : exact_div(B[0].pow(da), h.pow(da - 1));
    return s < 0 ? -res : res;
}

MPoly primitive_part(const MPoly& p, Var v, Var other, UniPoly* content)
{
    if (p.is_zero())
        return p;
    UniPoly g;
    for (const auto& c : p.coefficients(v)) {
        if (c.is_zero())
            continue;
        g = gcd(g, c.to_uni(other));
    }
    if (content)
        *content = g;
    if (g.degree() <= 0)
        return p;
    return exact_div(p, MPoly::from_uni(g, other));
}

bool proportional(const MPoly& a, const MPoly& b, Scalar* ratio)
{
    if (a.is_zero() || b.is_zero())
        return a.is_zero() && b.is_zero();
    if (a.size() != b.size())
        return false;
    Scalar r = a.lead_coeff() / b.lead_coeff();
    if (a != b.scaled(r))
        return false;
    if (ratio)
        *ratio = r;
    return true;
}

} // namespace exactmath
