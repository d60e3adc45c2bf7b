#include "matmonoid/extremal.hpp"

namespace matmonoid {

namespace {

BigFloat real(std::uint64_t x) { return BigFloat(Natural(x)); }

BigFloat two_pow(std::uint64_t k) { return pow(BigFloat(2), k); }

} // namespace

ClosedFormParams closed_form_params(MonoidParams const& p, Natural const& a, Natural const& c) {
    BigFloat const u = real(p.u());
    BigFloat const v = real(p.v());
    BigFloat const uv = u * v;
    BigFloat const four_uv = BigFloat(4) + uv;
    BigFloat const root_u = sqrt(u);
    BigFloat const s = sqrt(v * four_uv);       // sqrt(v(4+uv))
    BigFloat const d = sqrt(uv * four_uv);      // sqrt(uv(4+uv))
    BigFloat const P = BigFloat(2) + uv;
    BigFloat const A(a);
    BigFloat const C(c);

    ClosedFormParams out;
    out.p_plus = v * root_u + s;
    out.p_minus = -(v * root_u) + s;
    out.q_plus = P + d;
    out.q_minus = P - d;
    out.lambda1 = out.q_plus / BigFloat(2);
    out.lambda2 = out.q_minus / BigFloat(2);
    out.c1 = (C * out.p_plus + A * root_u * out.q_plus) / (BigFloat(2) * s);
    out.c2 = (C * out.p_minus - A * root_u * out.q_minus) / (BigFloat(2) * s);
    return out;
}

BigFloat gamma_closed_form(MonoidParams const& p, Natural const& a, Natural const& c, std::uint64_t n) {
    auto const k = closed_form_params(p, a, c);
    BigFloat const A(a);
    BigFloat const C(c);
    BigFloat const root_u = sqrt(real(p.u()));
    BigFloat const s = sqrt(real(p.v()) * (BigFloat(4) + real(p.u()) * real(p.v())));
    BigFloat const num = (C * k.p_plus + A * k.q_plus * root_u) * pow(k.q_plus, n) +
                         (C * k.p_minus - A * k.q_minus * root_u) * pow(k.q_minus, n);
    return num / (two_pow(n + 1) * s);
}

BigFloat alpha_closed_form(MonoidParams const& p, Natural const& a, Natural const& c, std::uint64_t n) {
    auto const k = closed_form_params(p, a, c);
    BigFloat const A(a);
    BigFloat const C(c);
    BigFloat const u = real(p.u());
    BigFloat const v = real(p.v());
    BigFloat const root_u = sqrt(u);
    BigFloat const d = sqrt(u * v * (BigFloat(4) + u * v));
    BigFloat const num = (C * k.p_plus + A * k.q_plus * root_u) * pow(k.q_plus, n) * k.p_minus -
                         (C * k.p_minus - A * k.q_minus * root_u) * pow(k.q_minus, n) * k.p_plus;
    return num / (two_pow(n + 2) * d);
}

BigFloat closed_form_float(MonoidParams const& p, std::uint64_t n, Parity parity) {
    BigFloat const s = real(p.s());
    BigFloat const t = real(p.t());
    BigFloat const uv = real(p.u()) * real(p.v());
    BigFloat const four_uv = BigFloat(4) + uv;
    BigFloat const d = sqrt(uv * four_uv);
    BigFloat const q_plus = BigFloat(2) + uv + d;
    BigFloat const q_minus = BigFloat(2) + uv - d;
    BigFloat const root_t = sqrt(t);
    BigFloat const root_s4 = sqrt(s * four_uv);
    BigFloat const qp = pow(q_plus, n + 1);
    BigFloat const qm = pow(q_minus, n + 1);

    if (parity == Parity::Odd) return root_t * (qp - qm) / (two_pow(n + 1) * root_s4);

    BigFloat const p_plus = s * root_t + root_s4;
    BigFloat const p_minus = -(s * root_t) + root_s4;
    if (p.s() > 1) return (p_plus * qp + p_minus * qm) / (two_pow(n + 2) * root_s4);
    return root_t * ((root_t * p_minus + BigFloat(2)) * qp + (root_t * p_plus - BigFloat(2)) * qm) /
           (two_pow(n + 2) * sqrt(four_uv));
}

} // namespace matmonoid
