#include "exactmath/numeric.hpp"

#include <sstream>

namespace exactmath {

Real to_real(const Rational& q)
{
    return Real(q.get_num().get_str()) / Real(q.get_den().get_str());
}

namespace {

Complex horner(const std::vector<Complex>& c, const Complex& x)
{
    Complex r(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        r = r * x + *it;
    return r;
}

std::vector<Complex> deriv(const std::vector<Complex>& c)
{
    std::vector<Complex> d;
    for (size_t i = 1; i < c.size(); ++i)
        d.push_back(c[i] * Real(static_cast<long>(i)));
    return d;
}

} // namespace

std::vector<Complex> complex_roots(const std::vector<Complex>& coeffs_in)
{
    std::vector<Complex> c = coeffs_in;
    while (!c.empty() && abs(c.back()) == 0)
        c.pop_back();
    int n = static_cast<int>(c.size()) - 1;
    if (n < 1)
        return {};
    std::vector<Complex> roots;
    // pull out zero roots exactly
    size_t lead_zero = 0;
    while (lead_zero < c.size() && abs(c[lead_zero]) == 0)
        ++lead_zero;
    for (size_t i = 0; i < lead_zero; ++i)
        roots.emplace_back(0);
    c.erase(c.begin(), c.begin() + static_cast<long>(lead_zero));
    n = static_cast<int>(c.size()) - 1;
    if (n < 1)
        return roots;
    Complex lead = c.back();
    for (auto& a : c)
        a /= lead;
    Real radius = 0;
    for (int i = 0; i < n; ++i)
        radius = std::max(radius, Real(abs(c[i])));
    radius = 1 + radius;
    std::vector<Complex> z(n);
    Real pi = boost::multiprecision::atan(Real(1)) * 4;
    for (int k = 0; k < n; ++k) {
        Real ang = 2 * pi * k / n + Real("0.4");
        z[k] = Complex(radius / 2 * cos(ang), radius / 2 * sin(ang));
    }
    auto dc = deriv(c);
    Real tol("1e-45");
    for (int iter = 0; iter < 2000; ++iter) {
        Real worst = 0;
        for (int k = 0; k < n; ++k) {
            Complex p = horner(c, z[k]);
            Complex dp = horner(dc, z[k]);
            if (abs(p) == 0)
                continue;
            Complex ratio = p / dp;
            Complex sum(0);
            for (int j = 0; j < n; ++j)
                if (j != k)
                    sum += Complex(1) / (z[k] - z[j]);
            Complex w = ratio / (Complex(1) - ratio * sum);
            z[k] -= w;
            Real rel = abs(w) / (1 + abs(z[k]));
            if (rel > worst)
                worst = rel;
        }
        if (worst < tol)
            break;
    }
    for (auto& r : z)
        roots.push_back(r);
    return roots;
}

Complex Embedding::value_of(const ExtField* f) const
{
    for (const auto& [g, v] : values)
        if (g == f)
            return v;
    throw std::logic_error("embedding does not cover field " + f->name());
}

Complex evaluate(const Scalar& a, const Embedding& e)
{
    if (a.is_rational())
        return Complex(to_real(a.rational()));
    Complex g = e.value_of(a.field().get());
    Complex r(0);
    const auto& rep = a.rep();
    for (auto it = rep.rbegin(); it != rep.rend(); ++it)
        r = r * g + evaluate(*it, e);
    return r;
}

std::vector<Embedding> embeddings(const FieldPtr& K)
{
    if (!K)
        return {Embedding{}};
    std::vector<Embedding> out;
    for (const auto& e : embeddings(K->base())) {
        std::vector<Complex> c;
        for (const auto& m : K->modulus())
            c.push_back(evaluate(m, e));
        for (const auto& r : complex_roots(c)) {
            Embedding ne = e;
            ne.values.emplace_back(K.get(), r);
            out.push_back(std::move(ne));
        }
    }
    return out;
}

std::string decimal(const Real& r, int digits)
{
    std::ostringstream os;
    os.precision(digits);
    os << r;
    return os.str();
}

std::string decimal(const Complex& c, int digits)
{
    Real im = c.imag();
    Real scale = 1 + abs(c.real());
    if (abs(im) < Real("1e-40") * scale)
        return decimal(c.real(), digits);
    std::ostringstream os;
    os << decimal(c.real(), digits) << (im < 0 ? " - " : " + ") << decimal(abs(im), digits) << "*i";
    return os.str();
}

} // namespace exactmath
