#pragma once

#include "exactmath/mpoly.hpp"
#include "exactmath/roots.hpp"

#include <optional>
#include <type_traits>
#include <vector>

namespace exactmath {

int absolute_degree(const FieldPtr& K);

// A class of conjugate common solutions.
struct PointClass {
    Scalar x, y;
    int conjugates = 1;
};

// p(x0, y) as a polynomial in vy; p must not involve other variables.
UniPoly specialize(const MPoly& p, Var vx, const Scalar& x0, Var vy);

// Enumerate the common zeros of eqs (bivariate in vx, vy). The x-candidates come
// from the first pair of equations with a nonvanishing resultant in vy; the
// y-values from the gcd of every specialised equation. fn runs inside the
// dynamic-evaluation context of the point, so it may decide zero-ness of values
// built from the point. Returns nullopt when every resultant vanishes identically.
template <class Fn>
auto solve_each(const std::vector<MPoly>& eqs, Var vx, Var vy, Fn&& fn)
    -> std::optional<std::vector<std::invoke_result_t<Fn&, const PointClass&>>>
{
    using R = std::invoke_result_t<Fn&, const PointClass&>;
    UniPoly res;
    bool found = false;
    for (size_t i = 0; i < eqs.size() && !found; ++i)
        for (size_t j = i + 1; j < eqs.size() && !found; ++j) {
            if (!eqs[i].involves(vy) && !eqs[j].involves(vy))
                continue;
            MPoly r = resultant(eqs[i], eqs[j], vy);
            if (!r.is_zero()) {
                res = r.to_uni(vx);
                found = true;
            }
        }
    if (!found)
        return std::nullopt;
    std::vector<R> out;
    if (res.degree() <= 0)
        return out;
    for (const auto& xc : root_classes(squarefree_part(res))) {
        auto per_x = split_eval(xc, [&](const RootClass& xr) {
            std::vector<R> got;
            UniPoly h;
            for (const auto& e : eqs)
                h = gcd(h, specialize(e, vx, xr.value, vy));
            if (h.degree() <= 0)
                return got;
            int xdeg = absolute_degree(xr.own_field ? xr.own_field : xr.value.field());
            for (const auto& yc : root_classes(h, xr.own_field ? xr.own_field : xr.value.field())) {
                auto per_y = split_eval(yc, [&](const RootClass& yr) {
                    PointClass pc{xr.value, yr.value, yr.degree() * xdeg};
                    return fn(pc);
                });
                for (auto& entry : per_y)
                    got.push_back(std::move(entry.second));
            }
            return got;
        });
        for (auto& entry : per_x)
            for (auto& r : entry.second)
                out.push_back(std::move(r));
    }
    return out;
}

// Plain enumeration of solution classes.
std::optional<std::vector<PointClass>> solve_system(const std::vector<MPoly>& eqs, Var vx, Var vy);

} // namespace exactmath
