#include "series/lift.hpp"

#include <stdexcept>

namespace series {

using exactmath::RootClass;

namespace {

thread_local int g_steps = 0;

Scalar eval_const(const std::vector<UniPoly>& cs, const Scalar& y0)
{
    Scalar acc(0);
    for (auto it = cs.rbegin(); it != cs.rend(); ++it)
        acc = acc * y0 + it->coeff(0);
    return acc;
}

} // namespace

int last_lift_steps() { return g_steps; }

TruncSeries newton_lift(const MPoly& G, const Scalar& y0, int N, LiftScheme scheme, Var vx, Var vy)
{
    if (N < 0)
        throw std::invalid_argument("truncation order must be non-negative");
    auto cs = y_coefficients(G, vx, vy);
    auto ds = y_coefficients(G.derivative(vy), vx, vy);
    if (!eval_const(cs, y0).is_zero())
        throw std::invalid_argument("y0 is not a root of G(0, y)");
    Scalar d = eval_const(ds, y0);
    if (d.is_zero())
        throw std::invalid_argument("simple-root precondition violated");
    Scalar dinv = d.inverse();
    Rational NN(N);
    g_steps = 0;
    TruncSeries s(y0);
    if (scheme == LiftScheme::successive) {
        // Coefficient n of G(x, s) with s_n still unset; s_n then enters only
        // through G_y(0, y0) * s_n, so one term is fixed per step.
        int m = static_cast<int>(cs.size()) - 1;
        std::vector<Scalar> sc(N + 1);
        sc[0] = y0;
        std::vector<std::vector<Scalar>> pw(m + 1, std::vector<Scalar>(N + 1));
        pw[0][0] = Scalar(1);
        for (int j = 1; j <= m; ++j)
            pw[j][0] = pw[j - 1][0] * y0;
        for (int n = 1; n <= N; ++n) {
            for (int j = 1; j <= m; ++j) {
                Scalar acc(0);
                for (int k = 1; k < n; ++k)
                    if (!sc[k].is_zero() && !pw[j - 1][n - k].is_zero())
                        acc += sc[k] * pw[j - 1][n - k];
                pw[j][n] = acc + y0 * pw[j - 1][n];
            }
            Scalar qn(0);
            for (int j = 0; j <= m; ++j)
                for (int i = 0; i <= std::min(n, cs[j].degree()); ++i) {
                    const Scalar& c = cs[j].coeff(i);
                    if (!c.is_zero() && !pw[j][n - i].is_zero())
                        qn += c * pw[j][n - i];
                }
            if (qn.is_zero())
                continue;
            sc[n] = -(qn * dinv);
            ++g_steps;
            Scalar yk(1);
            for (int j = 1; j <= m; ++j) {
                // d/ds_n of pw[j][n] is j * y0^(j-1)
                pw[j][n] += Scalar(j) * yk * sc[n];
                yk *= y0;
            }
        }
        return TruncSeries::from_uni(UniPoly(sc), NN);
    }
    int P = 0;
    while (P < N) {
        int P2 = std::min(2 * P + 1, N);
        Rational PP(P2);
        TruncSeries st = s.exact().truncated(PP);
        TruncSeries g = eval_at(cs, st).truncated(PP);
        TruncSeries gy = eval_at(ds, st).truncated(PP);
        s = (st - g / gy).truncated(PP).exact();
        P = P2;
        ++g_steps;
    }
    return s.truncated(NN);
}

TruncSeries trace_series(const TruncSeries& s, const FieldPtr& K)
{
    if (!K)
        return s;
    return s.map([&](const Scalar& v) { return exactmath::trace(v, K); });
}

FibreFactorization factor_fibrewise(const MPoly& F0, int N, LiftScheme scheme, Var vx, Var vy)
{
    FibreFactorization out;
    out.vx = vx;
    out.vy = vy;
    out.N = N;
    int m = F0.total_degree();
    auto ycs = F0.coefficients(vy);
    if (m < 1 || F0.degree(vy) != m || !ycs.back().is_constant())
        throw std::invalid_argument("F must be monic in y of degree equal to its total degree");
    MPoly F = F0.scaled(ycs.back().constant_term().inverse());
    out.F = F;
    out.m = m;
    UniPoly f0 = F.eval(vx, Scalar(0)).to_uni(vy);
    if (!exactmath::is_squarefree(f0))
        throw std::invalid_argument("F(0,y) is not squarefree: the fibre over x=0 must be m distinct points");
    for (const auto& rc : exactmath::root_classes(f0)) {
        auto lifted = exactmath::split_eval(rc, [&](const RootClass& c) {
            return newton_lift(F, c.value, N, scheme, vx, vy);
        });
        for (auto& [cls, eta] : lifted)
            out.sheets.push_back(Sheet{cls.value, eta, cls.own_field, cls.degree()});
    }

    Rational NN(N);
    auto fc = y_coefficients(F, vx, vy);
    bool all_rational = true;
    for (const auto& sh : out.sheets)
        all_rational = all_rational && !sh.field && !sh.eta.field();
    out.elementary.assign(m + 1, TruncSeries());
    if (all_rational) {
        // prod (y - eta_j), coefficients lowest power of y first
        out.product_checked = true;
        std::vector<TruncSeries> prod{TruncSeries(Scalar(1))};
        for (const auto& sh : out.sheets) {
            std::vector<TruncSeries> next(prod.size() + 1, TruncSeries());
            for (size_t i = 0; i < prod.size(); ++i) {
                next[i + 1] = next[i + 1] + prod[i];
                next[i] = next[i] - prod[i] * sh.eta;
            }
            prod = std::move(next);
        }
        out.product_ok = prod.size() == fc.size();
        for (size_t i = 0; out.product_ok && i < fc.size(); ++i)
            out.product_ok = prod[i].agrees_with(TruncSeries::from_uni(fc[i]), NN);
        for (int k = 0; k <= m; ++k)
            out.elementary[k] = ((k % 2) ? -prod[m - k] : prod[m - k]).truncated(NN);
    } else {
        // power sums are rational: absolute traces over each sheet's field
        std::vector<TruncSeries> p(m + 1);
        for (const auto& sh : out.sheets) {
            TruncSeries pk = TruncSeries(Scalar(1));
            for (int k = 1; k <= m; ++k) {
                pk = (pk * sh.eta).truncated(NN);
                TruncSeries t = trace_series(pk, sh.field);
                p[k] = p[k] + t;
            }
        }
        out.elementary[0] = TruncSeries(Scalar(1));
        for (int k = 1; k <= m; ++k) {
            TruncSeries acc = TruncSeries::zero(NN);
            for (int i = 1; i <= k; ++i) {
                TruncSeries t = out.elementary[k - i] * p[i];
                acc = (i % 2) ? acc + t : acc - t;
            }
            out.elementary[k] = acc.scaled(Scalar(Rational(1, k))).truncated(NN);
        }
    }
    out.vieta_ok = true;
    for (int k = 1; k <= m; ++k) {
        TruncSeries expect = TruncSeries::from_uni(fc[m - k]);
        TruncSeries got = (k % 2) ? -out.elementary[k] : out.elementary[k];
        if (!got.agrees_with(expect, NN))
            out.vieta_ok = false;
    }
    if (!out.vieta_ok || (out.product_checked && !out.product_ok))
        throw std::logic_error("fibrewise factorization failed its product check");
    return out;
}

} // namespace series
