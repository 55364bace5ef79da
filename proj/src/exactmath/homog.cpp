#include "exactmath/homog.hpp"

namespace exactmath {

UniPoly HomogForm::dehomogenize_first() const
{
    std::vector<Scalar> c(degree + 1);
    for (const auto& [m, a] : form.terms())
        c[exponent(m, v2)] = a;
    return UniPoly(std::move(c));
}

HomogForm homog_part(const MPoly& p, int d, Var v1, Var v2)
{
    HomogForm f;
    f.degree = d;
    f.v1 = v1;
    f.v2 = v2;
    f.form = p.homogeneous_part(d, {v1, v2});
    return f;
}

std::vector<HomogForm> homog_parts(const MPoly& p, Var v1, Var v2)
{
    std::vector<HomogForm> out;
    for (int d = p.total_degree({v1, v2}); d >= 0; --d) {
        HomogForm f = homog_part(p, d, v1, v2);
        if (!f.form.is_zero())
            out.push_back(std::move(f));
    }
    return out;
}

MPoly sum_forms(const std::vector<HomogForm>& forms)
{
    MPoly s;
    for (const auto& f : forms)
        s += f.form;
    return s;
}

bool form_is_squarefree(const HomogForm& f)
{
    if (f.form.is_zero())
        return false;
    UniPoly a = f.dehomogenize_first();
    // the root at infinity [0:1] has multiplicity degree - deg a
    int inf = f.degree - a.degree();
    if (inf > 1)
        return false;
    return is_squarefree(a);
}

} // namespace exactmath
