#include "exactmath/roots.hpp"

#include <algorithm>

namespace exactmath {

namespace {

int sign_of(const Rational& q) { return sgn(q); }

std::vector<UniPoly> sturm_sequence(const UniPoly& p)
{
    std::vector<UniPoly> s{p, p.derivative()};
    while (!s.back().is_zero()) {
        UniPoly r = s[s.size() - 2] % s.back();
        if (r.is_zero())
            break;
        s.push_back(-r);
    }
    return s;
}

int variations(const std::vector<UniPoly>& seq, const Rational& x)
{
    int count = 0, last = 0;
    for (const auto& f : seq) {
        int sg = sign_of(f.eval(Scalar(x)).rational());
        if (sg == 0)
            continue;
        if (last != 0 && sg != last)
            ++count;
        last = sg;
    }
    return count;
}

void isolate_integers(const std::vector<UniPoly>& seq, const UniPoly& q, Integer a, Integer b, int count,
                      std::vector<Integer>& out)
{
    if (count == 0)
        return;
    if (b - a == 1) {
        if (q.eval(Scalar(b)).is_zero())
            out.push_back(b);
        return;
    }
    Integer mid = a + (b - a) / 2;
    int vm = variations(seq, Rational(mid));
    int left = variations(seq, Rational(a)) - vm;
    isolate_integers(seq, q, a, mid, left, out);
    isolate_integers(seq, q, mid, b, count - left, out);
}

} // namespace

int sturm_count(const UniPoly& p, const Rational& a, const Rational& b)
{
    auto seq = sturm_sequence(p);
    return variations(seq, a) - variations(seq, b);
}

namespace {

// f primitive integer, squarefree, f(0) != 0
std::vector<Rational> rational_roots_sturm(const UniPoly& f)
{
    std::vector<Rational> out;
    int n = f.degree();
    // monic integer transform: q(w) = a_n^{n-1} f(w / a_n)
    Integer an = f.lead().rational().get_num();
    std::vector<Scalar> qc(n + 1);
    Integer bound = 0;
    for (int i = 0; i <= n; ++i) {
        Integer pw;
        mpz_pow_ui(pw.get_mpz_t(), an.get_mpz_t(), static_cast<unsigned long>(i == n ? 0 : n - 1 - i));
        Integer c = (i == n) ? Integer(1) : Integer(f.coeff(i).rational().get_num() * pw);
        qc[i] = Scalar(c);
        Integer ac = abs(c);
        if (i < n && ac > bound)
            bound = ac;
    }
    bound += 1;
    UniPoly q(qc);
    auto seq = sturm_sequence(q);
    std::vector<Integer> ints;
    int total = variations(seq, Rational(-bound)) - variations(seq, Rational(bound));
    isolate_integers(seq, q, -bound, bound, total, ints);
    for (const auto& w : ints)
        out.emplace_back(Rational(w, an));
    return out;
}

// Integer residues of the coefficients of f mod m.
Integer eval_mod(const std::vector<Integer>& c, const Integer& x, const Integer& m)
{
    Integer v = 0;
    for (size_t i = c.size(); i-- > 0;) {
        v = v * x + c[i];
        mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    }
    return v;
}

// Rational roots by lifting the simple roots mod a prime p. Returns false when
// no prime in the table has only simple roots.
bool rational_roots_padic(const UniPoly& f, std::vector<Rational>& out)
{
    static const unsigned long primes[] = {10007, 10009, 10037, 10039, 10061, 10067, 10069, 10079, 10091, 10093,
                                           10099, 10103, 10111, 10133, 10139, 10141, 10151, 10159, 10163, 10169};
    std::vector<Integer> c, dc;
    for (const auto& a : f.coeffs())
        c.push_back(a.rational().get_num());
    for (size_t i = 1; i < c.size(); ++i)
        dc.push_back(c[i] * static_cast<unsigned long>(i));
    const Integer& an = c.back();
    Integer bound = 2 * abs(an) * abs(c.front()) + 1;
    for (unsigned long pl : primes) {
        Integer p(pl);
        if (eval_mod({an}, Integer(0), p) == 0)
            continue;
        std::vector<Integer> roots;
        bool simple = true;
        for (unsigned long x = 0; x < pl && simple; ++x)
            if (eval_mod(c, Integer(x), p) == 0) {
                simple = eval_mod(dc, Integer(x), p) != 0;
                roots.emplace_back(x);
            }
        if (!simple)
            continue;
        for (Integer r : roots) {
            Integer M = p;
            while (M <= bound) {
                M *= M;
                Integer d = eval_mod(dc, r, M), inv;
                mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), M.get_mpz_t());
                r = r - eval_mod(c, r, M) * inv;
                mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), M.get_mpz_t());
            }
            Integer w = r * an;
            mpz_fdiv_r(w.get_mpz_t(), w.get_mpz_t(), M.get_mpz_t());
            if (2 * w > M)
                w -= M;
            Rational q(w, an);
            q.canonicalize();
            if (f.eval(Scalar(q)).is_zero())
                out.push_back(q);
        }
        return true;
    }
    return false;
}

} // namespace

std::vector<Rational> rational_roots(const UniPoly& p)
{
    if (p.is_zero())
        throw std::invalid_argument("rational roots of the zero polynomial");
    std::vector<Rational> out;
    if (p.degree() < 1)
        return out;
    UniPoly f = primitive_integer(squarefree_part(p));
    if (f.coeff(0).is_zero()) {
        out.push_back(0);
        f = primitive_integer(f / UniPoly::variable());
    }
    if (f.degree() < 1)
        return out;
    std::vector<Rational> found;
    if (!rational_roots_padic(f, found))
        found = rational_roots_sturm(f);
    out.insert(out.end(), found.begin(), found.end());
    for (auto& r : out)
        r.canonicalize();
    std::sort(out.begin(), out.end());
    return out;
}

SquarefreeRoots squarefree_roots(const UniPoly& p)
{
    if (p.is_zero())
        throw std::invalid_argument("squarefree_roots: zero polynomial");
    SquarefreeRoots out;
    out.factors = squarefree_decomposition(p);
    for (const auto& [f, m] : out.factors) {
        if (f.degree() == 1) {
            out.roots.emplace_back(-f.coeff(0) / f.lead(), m);
            continue;
        }
        if (!f.is_rational()) {
            out.residual.emplace_back(f, m);
            continue;
        }
        UniPoly rest = f;
        for (const auto& r : rational_roots(f)) {
            out.roots.emplace_back(Scalar(r), m);
            rest = rest / UniPoly({Scalar(Rational(-r)), Scalar(1)});
        }
        if (rest.degree() > 0)
            out.residual.emplace_back(rest.monic(), m);
    }
    return out;
}

int RootClass::conjugates() const
{
    FieldPtr F = minpoly.field();
    return degree() * (F ? F->absolute_degree() : 1);
}

RootClass make_class(const UniPoly& factor, int multiplicity, const FieldPtr& base)
{
    RootClass rc;
    rc.minpoly = factor.monic();
    rc.multiplicity = multiplicity;
    if (rc.minpoly.degree() == 1) {
        rc.value = -rc.minpoly.coeff(0);
        return rc;
    }
    rc.own_field = ExtField::make(common_field(base, rc.minpoly.field()), rc.minpoly.coeffs());
    rc.value = Scalar::generator(rc.own_field);
    return rc;
}

std::vector<RootClass> root_classes(const UniPoly& p, const FieldPtr& base)
{
    std::vector<RootClass> out;
    auto sr = squarefree_roots(p);
    for (const auto& [r, m] : sr.roots) {
        RootClass rc;
        rc.value = r;
        rc.minpoly = UniPoly({-r, Scalar(1)});
        rc.multiplicity = m;
        out.push_back(rc);
    }
    for (const auto& [f, m] : sr.residual)
        out.push_back(make_class(f, m, base));
    return out;
}

} // namespace exactmath
