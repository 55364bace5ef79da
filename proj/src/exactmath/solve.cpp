#include "exactmath/solve.hpp"

namespace exactmath {

int absolute_degree(const FieldPtr& K) { return K ? K->absolute_degree() : 1; }

UniPoly specialize(const MPoly& p, Var vx, const Scalar& x0, Var vy)
{
    return p.eval(vx, x0).to_uni(vy);
}

std::optional<std::vector<PointClass>> solve_system(const std::vector<MPoly>& eqs, Var vx, Var vy)
{
    return solve_each(eqs, vx, vy, [](const PointClass& p) { return p; });
}

} // namespace exactmath
