#include "exactmath/unipoly.hpp"

#include <sstream>

namespace exactmath {

UniPoly::UniPoly(std::vector<Scalar> c) : c_(std::move(c)) { trim(); }

UniPoly::UniPoly(const Scalar& c0)
{
    if (!c0.is_zero())
        c_.push_back(c0);
}

UniPoly UniPoly::monomial(const Scalar& c, int k)
{
    if (c.is_zero())
        return {};
    std::vector<Scalar> v(k + 1);
    v[k] = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::from_roots(const std::vector<Scalar>& roots)
{
    UniPoly p(Scalar(1));
    for (const auto& r : roots)
        p *= UniPoly({-r, Scalar(1)});
    return p;
}

void UniPoly::trim()
{
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

Scalar UniPoly::coeff(int i) const
{
    if (i < 0 || i >= static_cast<int>(c_.size()))
        return Scalar(0);
    return c_[i];
}

Scalar UniPoly::lead() const { return c_.empty() ? Scalar(0) : c_.back(); }

FieldPtr UniPoly::field() const
{
    FieldPtr K;
    for (const auto& c : c_)
        K = common_field(K, c.field());
    return K;
}

bool UniPoly::is_rational() const
{
    for (const auto& c : c_)
        if (!c.is_rational())
            return false;
    return true;
}

int UniPoly::low_degree() const
{
    for (size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero())
            return static_cast<int>(i);
    return -1;
}

UniPoly UniPoly::operator-() const
{
    UniPoly r = *this;
    for (auto& c : r.c_)
        c = -c;
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o)
{
    if (c_.size() < o.c_.size())
        c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o)
{
    if (c_.size() < o.c_.size())
        c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero())
            continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            r[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(r));
}

UniPoly& UniPoly::operator*=(const UniPoly& o) { return *this = *this * o; }

UniPoly operator*(const Scalar& s, const UniPoly& p)
{
    if (s.is_zero())
        return {};
    UniPoly r = p;
    for (auto& c : r.c_)
        c *= s;
    r.trim();
    return r;
}

Scalar UniPoly::eval(const Scalar& x) const
{
    Scalar r(0);
    for (int i = degree(); i >= 0; --i)
        r = r * x + c_[i];
    return r;
}

UniPoly UniPoly::compose(const UniPoly& inner) const
{
    UniPoly r;
    for (int i = degree(); i >= 0; --i)
        r = r * inner + UniPoly(c_[i]);
    return r;
}

UniPoly UniPoly::derivative() const
{
    if (c_.size() <= 1)
        return {};
    std::vector<Scalar> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i)
        r[i - 1] = c_[i] * Scalar(static_cast<long>(i));
    return UniPoly(std::move(r));
}

UniPoly UniPoly::monic() const
{
    if (is_zero() || lead().is_one())
        return *this;
    return lead().inverse() * *this;
}

UniPoly UniPoly::pow(int e) const
{
    UniPoly r(Scalar(1)), b = *this;
    while (e > 0) {
        if (e & 1)
            r *= b;
        e >>= 1;
        if (e)
            b *= b;
    }
    return r;
}

UniPoly UniPoly::shift(int k) const
{
    if (is_zero() || k == 0)
        return *this;
    std::vector<Scalar> r(k, Scalar(0));
    r.insert(r.end(), c_.begin(), c_.end());
    return UniPoly(std::move(r));
}

UniPoly UniPoly::taylor_shift(const Scalar& a) const
{
    return compose(UniPoly({a, Scalar(1)}));
}

UniPoly UniPoly::scale_var(const Scalar& s) const
{
    UniPoly r = *this;
    Scalar p(1);
    for (auto& c : r.c_) {
        c *= p;
        p *= s;
    }
    r.trim();
    return r;
}

std::string UniPoly::str(const std::string& var) const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Scalar& c = c_[i];
        if (c.is_zero())
            continue;
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
        if (i == 0) {
            os << cs;
        } else {
            if (cs != "1")
                os << cs << "*";
            os << var;
            if (i > 1)
                os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b)
{
    if (b.is_zero())
        throw DivisionByZero();
    if (a.degree() < b.degree())
        return {UniPoly(), a};
    Scalar inv = b.lead().inverse();
    std::vector<Scalar> r = a.coeffs();
    int db = b.degree();
    std::vector<Scalar> q(a.degree() - db + 1);
    const auto& bc = b.coeffs();
    for (int i = a.degree(); i >= db; --i) {
        if (r[i].is_zero())
            continue;
        Scalar f = r[i] * inv;
        q[i - db] = f;
        for (int j = 0; j <= db; ++j)
            r[i - db + j] -= f * bc[j];
    }
    r.resize(db);
    return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly operator/(const UniPoly& a, const UniPoly& b)
{
    auto [q, r] = divmod(a, b);
    if (!r.is_zero())
        throw std::domain_error("inexact polynomial division");
    return q;
}

UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

bool divides(const UniPoly& d, const UniPoly& p) { return (p % d).is_zero(); }

UniPoly gcd(const UniPoly& a, const UniPoly& b)
{
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

XGcd xgcd(const UniPoly& a, const UniPoly& b)
{
    UniPoly r0 = a, r1 = b, s0(Scalar(1)), s1, t0, t1(Scalar(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        UniPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero())
        return {r0, s0, t0};
    Scalar inv = r0.lead().inverse();
    return {inv * r0, inv * s0, inv * t0};
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p)
{
    if (p.is_zero())
        throw std::invalid_argument("squarefree decomposition of the zero polynomial");
    std::vector<std::pair<UniPoly, int>> out;
    if (p.degree() == 0)
        return out;
    UniPoly f = p.monic();
    UniPoly df = f.derivative();
    UniPoly a = gcd(f, df);
    UniPoly b = f / a;
    UniPoly c = df / a;
    UniPoly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        UniPoly g = gcd(b, d);
        if (g.degree() > 0)
            out.emplace_back(g, i);
        b = b / g;
        c = d / g;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

UniPoly squarefree_part(const UniPoly& p)
{
    if (p.degree() <= 0)
        return p.is_zero() ? p : UniPoly(Scalar(1));
    return p.monic() / gcd(p, p.derivative());
}

bool is_squarefree(const UniPoly& p)
{
    if (p.degree() <= 0)
        return !p.is_zero();
    return gcd(p, p.derivative()).degree() == 0;
}

Scalar resultant(const UniPoly& a, const UniPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return Scalar(0);
    if (a.degree() == 0)
        return a.lead().pow(b.degree());
    if (b.degree() == 0)
        return b.lead().pow(a.degree());
    // res(a,b) = (-1)^{deg a deg b} lc(b)^{deg a - deg r} res(b, r), r = a mod b
    UniPoly r = a % b;
    if (r.is_zero())
        return Scalar(0);
    Scalar sign = (a.degree() % 2 == 1 && b.degree() % 2 == 1) ? Scalar(-1) : Scalar(1);
    return sign * b.lead().pow(a.degree() - r.degree()) * resultant(b, r);
}

Scalar discriminant(const UniPoly& p)
{
    int n = p.degree();
    if (n < 1)
        throw std::invalid_argument("discriminant of a constant");
    Scalar r = resultant(p, p.derivative());
    Scalar sign = ((n * (n - 1) / 2) % 2) ? Scalar(-1) : Scalar(1);
    return sign * r / p.lead();
}

UniPoly primitive_integer(const UniPoly& p)
{
    if (p.is_zero())
        return p;
    Integer den = 1, num = 0;
    for (const auto& c : p.coeffs()) {
        const Rational& q = c.rational();
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    }
    std::vector<Scalar> out;
    for (const auto& c : p.coeffs()) {
        Rational q = c.rational() * den;
        out.emplace_back(q);
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), q.get_num_mpz_t());
    }
    if (sgn(p.lead().rational()) < 0)
        num = -num;
    for (auto& c : out)
        c = Scalar(Rational(c.rational() / num));
    return UniPoly(std::move(out));
}

} // namespace exactmath
