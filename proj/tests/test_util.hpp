#pragma once

#include "exactmath/mpoly.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace testutil {

using exactmath::MPoly;
using exactmath::Scalar;
using exactmath::UniPoly;

// Sparse random polynomial in x, y with |coefficients| <= 5.
inline MPoly random_bivariate(std::mt19937& rng, int total, int ydeg)
{
    MPoly p;
    for (int j = 0; j <= ydeg; ++j)
        for (int i = 0; i + j <= total; ++i) {
            if (rng() % 2)
                continue;
            long c = static_cast<long>(rng() % 11) - 5;
            p += MPoly(Scalar(c)) * MPoly::variable(exactmath::vars::x).pow(i) * MPoly::variable(exactmath::vars::y).pow(j);
        }
    return p;
}

// F = prod (y - a_j) + x * R with distinct small integers a_j, total degree m
inline MPoly corpus_curve(std::mt19937& rng, int m)
{
    std::vector<long> roots;
    while (static_cast<int>(roots.size()) < m) {
        long a = static_cast<long>(rng() % 19) - 9;
        if (std::find(roots.begin(), roots.end(), a) == roots.end())
            roots.push_back(a);
    }
    MPoly F(1);
    for (long a : roots)
        F *= MPoly::variable(exactmath::vars::y) - MPoly(Scalar(a));
    MPoly R;
    for (int i = 0; i < m; ++i)
        for (int j = 0; i + j <= m - 1; ++j) {
            if (rng() % 3 == 0)
                continue;
            long c = static_cast<long>(rng() % 19) - 9;
            R += MPoly(Scalar(c)) * MPoly::variable(exactmath::vars::x).pow(i) *
                 MPoly::variable(exactmath::vars::y).pow(j);
        }
    return F + MPoly::variable(exactmath::vars::x) * R;
}

inline UniPoly random_uni(std::mt19937& rng, int deg)
{
    std::vector<Scalar> c;
    for (int i = 0; i < deg; ++i)
        c.emplace_back(static_cast<long>(rng() % 9) - 4);
    c.emplace_back(1);
    return UniPoly(c);
}

inline MPoly det(std::vector<std::vector<MPoly>> m)
{
    size_t n = m.size();
    if (n == 0)
        return MPoly(1);
    if (n == 1)
        return m[0][0];
    MPoly total;
    for (size_t col = 0; col < n; ++col) {
        if (m[0][col].is_zero())
            continue;
        std::vector<std::vector<MPoly>> minor;
        for (size_t r = 1; r < n; ++r) {
            std::vector<MPoly> row;
            for (size_t c = 0; c < n; ++c)
                if (c != col)
                    row.push_back(m[r][c]);
            minor.push_back(row);
        }
        MPoly term = m[0][col] * det(minor);
        if (col % 2)
            total -= term;
        else
            total += term;
    }
    return total;
}

// Resultant as the Sylvester determinant.
inline MPoly sylvester_resultant(const MPoly& p, const MPoly& q, exactmath::Var v)
{
    auto a = p.coefficients(v), b = q.coefficients(v);
    int m = static_cast<int>(a.size()) - 1, n = static_cast<int>(b.size()) - 1;
    std::vector<std::vector<MPoly>> s(m + n, std::vector<MPoly>(m + n));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k)
            s[r][r + k] = a[m - k];
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k)
            s[n + r][r + k] = b[n - k];
    return det(s);
}

// Degree in y of gcd(p, q) over Q(x), via specialisation at several x values.
inline int modular_gcd_degree_y(const MPoly& p, const MPoly& q)
{
    using namespace exactmath;
    int best = 1 << 30;
    int tried = 0;
    for (long x0 = 3; tried < 4; x0 += 7) {
        UniPoly a = p.eval(vars::x, Scalar(x0)).to_uni(vars::y);
        UniPoly b = q.eval(vars::x, Scalar(x0)).to_uni(vars::y);
        if (a.degree() != p.degree(vars::y) || b.degree() != q.degree(vars::y))
            continue;
        best = std::min(best, gcd(a, b).degree());
        ++tried;
    }
    return best;
}

} // namespace testutil
