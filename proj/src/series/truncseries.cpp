#include "series/truncseries.hpp"

#include <numeric>
#include <stdexcept>

namespace series {

namespace {

long floor_index(const Rational& e, int r)
{
    Rational q = e * r;
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return f.get_si();
}

// when a has no known term: exact zero gives +inf (nullopt), else its precision
std::optional<Rational> low_bound(const TruncSeries& a)
{
    if (auto o = a.ord())
        return o;
    return a.precision();
}

std::optional<Rational> add_prec(const std::optional<Rational>& a, const std::optional<Rational>& b)
{
    if (!a || !b)
        return std::nullopt;
    return Rational(*a + *b);
}

} // namespace

std::optional<Rational> min_prec(const std::optional<Rational>& a, const std::optional<Rational>& b)
{
    if (!a)
        return b;
    if (!b)
        return a;
    return *a < *b ? a : b;
}

TruncSeries::TruncSeries(const Scalar& c, std::optional<Rational> prec) : prec_(std::move(prec))
{
    if (!c.is_zero())
        c_.emplace(0, c);
    trim();
}

TruncSeries TruncSeries::monomial(const Scalar& c, const Rational& e, std::optional<Rational> prec)
{
    TruncSeries s;
    Rational ec = e;
    ec.canonicalize();
    s.r_ = static_cast<int>(ec.get_den().get_si());
    s.prec_ = std::move(prec);
    if (!c.is_zero())
        s.c_.emplace(ec.get_num().get_si(), c);
    s.trim();
    return s;
}

TruncSeries TruncSeries::from_uni(const UniPoly& p, std::optional<Rational> prec)
{
    TruncSeries s;
    s.prec_ = std::move(prec);
    for (int i = 0; i <= p.degree(); ++i)
        if (!p.coeff(i).is_zero())
            s.c_.emplace(i, p.coeff(i));
    s.trim();
    return s;
}

TruncSeries TruncSeries::from_terms(int r, std::map<long, Scalar> terms, std::optional<Rational> prec)
{
    if (r < 1)
        throw std::invalid_argument("ramification must be positive");
    TruncSeries s;
    s.r_ = r;
    s.c_ = std::move(terms);
    s.prec_ = std::move(prec);
    s.trim();
    return s;
}

TruncSeries TruncSeries::zero(const Rational& prec)
{
    TruncSeries s;
    s.prec_ = prec;
    return s;
}

void TruncSeries::trim()
{
    for (auto it = c_.begin(); it != c_.end();) {
        bool drop = it->second.is_zero();
        if (!drop && prec_ && Rational(it->first, r_) > *prec_)
            drop = true;
        it = drop ? c_.erase(it) : std::next(it);
    }
}

Scalar TruncSeries::coeff(const Rational& e) const
{
    if (prec_ && e > *prec_)
        throw std::domain_error("coefficient beyond truncation order: increase N");
    Rational q = e * r_;
    if (q.get_den() != 1)
        return Scalar(0);
    auto it = c_.find(q.get_num().get_si());
    return it == c_.end() ? Scalar(0) : it->second;
}

std::optional<Rational> TruncSeries::ord() const
{
    if (c_.empty())
        return std::nullopt;
    Rational e(c_.begin()->first, r_);
    e.canonicalize();
    return e;
}

Scalar TruncSeries::lead() const
{
    if (c_.empty())
        throw std::domain_error("leading coefficient of a zero series");
    return c_.begin()->second;
}

FieldPtr TruncSeries::field() const
{
    FieldPtr K;
    for (const auto& [k, v] : c_)
        K = exactmath::common_field(K, v.field());
    return K;
}

TruncSeries TruncSeries::regrid(int r) const
{
    if (r % r_ != 0)
        throw std::invalid_argument("regrid to a grid that is not a refinement");
    if (r == r_)
        return *this;
    TruncSeries s;
    s.r_ = r;
    s.prec_ = prec_;
    int f = r / r_;
    for (const auto& [k, v] : c_)
        s.c_.emplace(k * f, v);
    return s;
}

TruncSeries TruncSeries::truncated(const Rational& prec) const
{
    TruncSeries s = *this;
    s.prec_ = min_prec(prec_, prec);
    s.trim();
    return s;
}

TruncSeries TruncSeries::exact() const
{
    TruncSeries s = *this;
    s.prec_.reset();
    return s;
}

TruncSeries TruncSeries::compose_power(int q) const
{
    if (q < 1)
        throw std::invalid_argument("compose_power needs q >= 1");
    TruncSeries s;
    s.r_ = r_;
    if (prec_)
        s.prec_ = *prec_ * q;
    for (const auto& [k, v] : c_)
        s.c_.emplace(k * q, v);
    return s;
}

TruncSeries TruncSeries::shifted(const Rational& e) const
{
    Rational ec = e;
    ec.canonicalize();
    int den = static_cast<int>(ec.get_den().get_si());
    int r = std::lcm(r_, den);
    TruncSeries s = regrid(r);
    long off = Rational(ec * r).get_num().get_si();
    TruncSeries out;
    out.r_ = r;
    if (s.prec_)
        out.prec_ = *s.prec_ + ec;
    for (const auto& [k, v] : s.c_)
        out.c_.emplace(k + off, v);
    return out;
}

TruncSeries TruncSeries::operator-() const
{
    TruncSeries s = *this;
    for (auto& [k, v] : s.c_)
        v = -v;
    return s;
}

TruncSeries operator+(const TruncSeries& a0, const TruncSeries& b0)
{
    int r = std::lcm(a0.r_, b0.r_);
    TruncSeries a = a0.regrid(r), b = b0.regrid(r);
    a.prec_ = min_prec(a.prec_, b.prec_);
    for (const auto& [k, v] : b.c_) {
        auto it = a.c_.find(k);
        if (it == a.c_.end())
            a.c_.emplace(k, v);
        else
            it->second += v;
    }
    a.trim();
    return a;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }

TruncSeries operator*(const TruncSeries& a0, const TruncSeries& b0)
{
    int r = std::lcm(a0.r_, b0.r_);
    TruncSeries a = a0.regrid(r), b = b0.regrid(r);
    TruncSeries out;
    out.r_ = r;
    if ((a.is_exact() && a.is_zero()) || (b.is_exact() && b.is_zero()))
        return out;
    out.prec_ = min_prec(add_prec(a.prec_, low_bound(b)), add_prec(b.prec_, low_bound(a)));
    std::optional<long> bound;
    if (out.prec_)
        bound = floor_index(*out.prec_, r);
    for (const auto& [i, u] : a.c_) {
        for (const auto& [j, v] : b.c_) {
            if (bound && i + j > *bound)
                break;
            auto it = out.c_.find(i + j);
            if (it == out.c_.end())
                out.c_.emplace(i + j, u * v);
            else
                it->second += u * v;
        }
    }
    out.trim();
    return out;
}

TruncSeries TruncSeries::scaled(const Scalar& s) const
{
    TruncSeries out = *this;
    for (auto& [k, v] : out.c_)
        v *= s;
    out.trim();
    return out;
}

TruncSeries TruncSeries::pow(int e) const
{
    if (e < 0)
        return inverse().pow(-e);
    TruncSeries result(Scalar(1)), base = *this;
    result.r_ = r_;
    while (e > 0) {
        if (e & 1)
            result = result * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return result;
}

TruncSeries TruncSeries::inverse(std::optional<Rational> cap) const
{
    if (c_.empty())
        throw exactmath::DivisionByZero();
    long v = c_.begin()->first;
    Rational vr(v, r_);
    vr.canonicalize();
    if (!prec_ && c_.size() == 1) {
        TruncSeries s;
        s.r_ = r_;
        s.c_.emplace(-v, c_.begin()->second.inverse());
        return s;
    }
    std::optional<Rational> res_prec;
    if (prec_)
        res_prec = *prec_ - 2 * vr;
    res_prec = min_prec(res_prec, cap);
    if (!res_prec)
        throw std::domain_error("inverse of an exact series needs a precision cap");
    long top = floor_index(*res_prec, r_);
    TruncSeries s;
    s.r_ = r_;
    s.prec_ = res_prec;
    if (top < -v)
        return s;
    long n = top + v;
    std::vector<Scalar> b(n + 1), inv(n + 1);
    for (long i = 0; i <= n; ++i) {
        auto it = c_.find(v + i);
        if (it != c_.end())
            b[i] = it->second;
    }
    Scalar i0 = b[0].inverse();
    inv[0] = i0;
    for (long j = 1; j <= n; ++j) {
        Scalar acc(0);
        for (long i = 1; i <= j; ++i)
            if (!b[i].is_zero() && !inv[j - i].is_zero())
                acc += b[i] * inv[j - i];
        inv[j] = -(i0 * acc);
    }
    for (long j = 0; j <= n; ++j)
        if (!inv[j].is_zero())
            s.c_.emplace(j - v, inv[j]);
    return s;
}

TruncSeries operator/(const TruncSeries& a, const TruncSeries& b)
{
    if (b.is_zero())
        throw exactmath::DivisionByZero();
    std::optional<Rational> cap;
    if (b.is_exact() && b.terms().size() > 1) {
        if (a.is_exact())
            throw std::domain_error("division of exact series needs a precision");
        Rational vb = *b.ord();
        cap = *a.precision() - vb - (a.ord() ? *a.ord() : Rational(0));
    }
    return a * b.inverse(cap);
}

bool operator==(const TruncSeries& a, const TruncSeries& b)
{
    if (a.prec_ != b.prec_)
        return false;
    int r = std::lcm(a.r_, b.r_);
    return a.regrid(r).c_ == b.regrid(r).c_;
}

bool TruncSeries::agrees_with(const TruncSeries& o, const Rational& e) const
{
    if ((prec_ && *prec_ < e) || (o.prec_ && *o.prec_ < e))
        throw std::domain_error("comparison beyond truncation order: increase N");
    TruncSeries d = (*this - o).exact().truncated(e);
    return d.is_zero();
}

std::string TruncSeries::str(const std::string& var) const
{
    std::string out;
    auto expo = [&](const Rational& e) {
        if (e == 0)
            return std::string();
        if (e == 1)
            return var;
        std::string s = exactmath::to_short_string(e);
        if (e.get_den() != 1 || e < 0)
            s = "(" + s + ")";
        return var + "^" + s;
    };
    for (const auto& [k, v] : c_) {
        Rational e(k, r_);
        e.canonicalize();
        std::string cs;
        bool neg = false;
        if (v.is_rational()) {
            Rational q = v.rational();
            neg = q < 0;
            if (neg)
                q = -q;
            cs = exactmath::to_short_string(q);
        } else {
            cs = "(" + v.str() + ")";
        }
        std::string ms = expo(e);
        std::string term;
        if (ms.empty())
            term = cs;
        else if (cs == "1")
            term = ms;
        else
            term = cs + "*" + ms;
        if (out.empty())
            out = neg ? "-" + term : term;
        else
            out += (neg ? " - " : " + ") + term;
    }
    if (prec_) {
        Rational next = *prec_ + Rational(1, r_);
        next.canonicalize();
        std::string o = "O(" + (next == 0 ? std::string("1") : expo(next)) + ")";
        out = out.empty() ? o : out + " + " + o;
    } else if (out.empty()) {
        out = "0";
    }
    return out;
}

TruncSeries eval_at(const std::vector<UniPoly>& ycoeffs, const TruncSeries& s)
{
    TruncSeries acc;
    for (auto it = ycoeffs.rbegin(); it != ycoeffs.rend(); ++it)
        acc = acc * s + TruncSeries::from_uni(*it);
    return acc;
}

std::vector<UniPoly> y_coefficients(const exactmath::MPoly& G, exactmath::Var vx, exactmath::Var vy)
{
    std::vector<UniPoly> out;
    for (const auto& c : G.coefficients(vy))
        out.push_back(c.to_uni(vx));
    return out;
}

} // namespace series
