#include "exactmath/scalar.hpp"
#include "exactmath/unipoly.hpp"

#include <atomic>
#include <sstream>

namespace exactmath {

std::string to_string(const Rational& q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_short_string(const Rational& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return to_string(q);
}

Rational parse_rational(const std::string& s)
{
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational: " + s);
    if (q.get_den() == 0)
        throw DivisionByZero();
    q.canonicalize();
    return q;
}

namespace {
std::atomic<int> g_depth_limit{2};
std::atomic<int> g_field_counter{0};

std::vector<Scalar> trimmed(std::vector<Scalar> v)
{
    while (!v.empty() && v.back().is_zero())
        v.pop_back();
    return v;
}
} // namespace

int tower_depth_limit() { return g_depth_limit.load(); }
void set_tower_depth_limit(int d) { g_depth_limit.store(d); }

ZeroDivisorSplit::ZeroDivisorSplit(FieldPtr f, std::vector<Scalar> a, std::vector<Scalar> b)
    : std::runtime_error("zero divisor in " + (f ? f->name() : std::string("Q"))),
      field(std::move(f)), factor1(std::move(a)), factor2(std::move(b))
{
}

ExtensionBudgetExceeded::ExtensionBudgetExceeded(const std::string& factor)
    : std::runtime_error("extension tower budget exceeded; blocking factor " + factor),
      blocking_factor(factor)
{
}

bool field_contains(const FieldPtr& big, const FieldPtr& small)
{
    if (!small)
        return true;
    for (const ExtField* f = big.get(); f; f = f->base().get())
        if (f == small.get())
            return true;
    return false;
}

FieldPtr common_field(const FieldPtr& a, const FieldPtr& b)
{
    if (a == b || !b)
        return a;
    if (!a)
        return b;
    if (field_contains(a, b))
        return a;
    if (field_contains(b, a))
        return b;
    throw std::logic_error("incompatible fields " + a->name() + " and " + b->name());
}

FieldPtr ExtField::make(FieldPtr base, std::vector<Scalar> modulus, std::string name)
{
    modulus = trimmed(std::move(modulus));
    if (modulus.size() < 3)
        throw std::invalid_argument("extension modulus must have degree >= 2");
    int depth = base ? base->depth() + 1 : 1;
    UniPoly m(modulus);
    if (depth > tower_depth_limit())
        throw ExtensionBudgetExceeded(m.str("u"));
    m = m.monic();
    if (!gcd(m, m.derivative()).is_constant())
        throw std::invalid_argument("extension modulus not squarefree: " + m.str("u"));
    auto* f = new ExtField();
    f->base_ = std::move(base);
    f->modulus_ = m.coeffs();
    f->depth_ = depth;
    f->name_ = name.empty() ? "u" + std::to_string(++g_field_counter) : name;
    return FieldPtr(f);
}

int ExtField::absolute_degree() const
{
    return degree() * (base_ ? base_->absolute_degree() : 1);
}

std::string ExtField::modulus_str() const
{
    return UniPoly(modulus_).str(name_);
}

const Rational& Scalar::rational() const
{
    if (field_)
        throw std::logic_error("scalar is not rational: " + str());
    return q_;
}

Scalar Scalar::generator(const FieldPtr& K)
{
    return from_rep(K, {Scalar(0), Scalar(1)});
}

Scalar Scalar::from_rep(const FieldPtr& K, std::vector<Scalar> rep)
{
    if (!K)
        return rep.empty() ? Scalar(0) : rep[0];
    rep = trimmed(std::move(rep));
    if (static_cast<int>(rep.size()) > K->degree())
        rep = (UniPoly(rep) % UniPoly(K->modulus())).coeffs();
    if (rep.size() <= 1)
        return rep.empty() ? Scalar(0) : rep[0];
    Scalar s;
    s.field_ = K;
    s.rep_ = std::move(rep);
    return s;
}

std::vector<Scalar> Scalar::coords_in(const FieldPtr& K) const
{
    if (field_ == K)
        return field_ ? rep_ : (is_zero() ? std::vector<Scalar>{} : std::vector<Scalar>{*this});
    if (!field_contains(K, field_))
        throw std::logic_error("element not in field");
    if (is_zero())
        return {};
    return {*this};
}

Scalar Scalar::operator-() const
{
    if (!field_)
        return Scalar(Rational(-q_));
    Scalar r = *this;
    for (auto& c : r.rep_)
        c = -c;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o)
{
    if (!field_ && !o.field_) {
        q_ += o.q_;
        return *this;
    }
    FieldPtr K = common_field(field_, o.field_);
    auto a = coords_in(K);
    auto b = o.coords_in(K);
    if (a.size() < b.size())
        a.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i)
        a[i] += b[i];
    *this = from_rep(K, std::move(a));
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o)
{
    if (!field_ && !o.field_) {
        q_ *= o.q_;
        return *this;
    }
    FieldPtr K = common_field(field_, o.field_);
    UniPoly p = UniPoly(coords_in(K)) * UniPoly(o.coords_in(K));
    *this = from_rep(K, p.coeffs());
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o)
{
    if (!field_ && !o.field_) {
        if (sgn(o.q_) == 0)
            throw DivisionByZero();
        q_ /= o.q_;
        return *this;
    }
    return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b)
{
    if (!a.field_ && !b.field_)
        return a.q_ == b.q_;
    if (a.field_ != b.field_) {
        // demotion makes representations canonical per field chain
        return false;
    }
    return a.rep_ == b.rep_;
}

Scalar Scalar::inverse() const
{
    if (!field_) {
        if (sgn(q_) == 0)
            throw DivisionByZero();
        return Scalar(Rational(1 / q_));
    }
    UniPoly m(field_->modulus());
    XGcd e = xgcd(UniPoly(rep_), m);
    if (e.g.degree() > 0) {
        UniPoly other = m / e.g;
        throw ZeroDivisorSplit(field_, e.g.coeffs(), other.monic().coeffs());
    }
    // s*a = g (mod m) with g a nonzero constant of the base
    Scalar g0 = e.g.coeff(0);
    return from_rep(field_, ((Scalar(1) / g0) * e.s).coeffs());
}

Scalar Scalar::pow(long e) const
{
    if (e < 0)
        return inverse().pow(-e);
    Scalar result(1), b = *this;
    while (e) {
        if (e & 1)
            result *= b;
        e >>= 1;
        if (e)
            b *= b;
    }
    return result;
}

std::string Scalar::str() const
{
    if (!field_)
        return to_short_string(q_);
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(rep_.size()) - 1; i >= 0; --i) {
        if (rep_[i].is_zero())
            continue;
        std::string c = rep_[i].str();
        bool simple = rep_[i].is_rational();
        bool neg = simple && sgn(rep_[i].rational()) < 0;
        if (neg)
            c = (-rep_[i]).str();
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (i == 0) {
            os << (simple ? c : "(" + c + ")");
            continue;
        }
        if (!(simple && c == "1"))
            os << (simple ? c : "(" + c + ")") << "*";
        os << field_->name();
        if (i > 1)
            os << "^" << i;
    }
    return os.str();
}

bool decide_zero(const Scalar& a)
{
    if (a.is_zero())
        return true;
    if (a.is_rational())
        return false;
    (void)a.inverse();
    return false;
}

Scalar lift(const Scalar& a, const FieldPtr& K)
{
    if (!field_contains(K, a.field()))
        throw std::logic_error("cannot lift element into field");
    return a;
}

namespace {
// power sums of the roots of a monic modulus (Newton identities), p_0 .. p_{n-1}
std::vector<Scalar> power_sums(const std::vector<Scalar>& monic)
{
    int n = static_cast<int>(monic.size()) - 1;
    // e_k = (-1)^k c_{n-k}
    std::vector<Scalar> e(n + 1);
    for (int k = 0; k <= n; ++k)
        e[k] = (k % 2 ? -monic[n - k] : monic[n - k]);
    std::vector<Scalar> p(n);
    p[0] = Scalar(n);
    for (int k = 1; k < n; ++k) {
        Scalar s = (k % 2 ? Scalar(1) : Scalar(-1)) * Scalar(k) * e[k];
        for (int i = 1; i < k; ++i) {
            Scalar term = e[k - i] * p[i];
            s += ((k - i) % 2 ? term : -term);
        }
        p[k] = s;
    }
    return p;
}

Scalar relative_trace(const Scalar& a, const FieldPtr& K)
{
    auto c = a.coords_in(K);
    auto p = power_sums(K->modulus());
    Scalar t(0);
    for (size_t i = 0; i < c.size(); ++i)
        t += c[i] * p[i];
    return t;
}
} // namespace

Scalar trace(const Scalar& a, const FieldPtr& K)
{
    Scalar t = a;
    for (FieldPtr f = K; f; f = f->base())
        t = relative_trace(t, f);
    return t;
}

} // namespace exactmath
