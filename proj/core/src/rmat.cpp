#include "shifted/rmat.hpp"

#include <fmt/format.h>

namespace shifted {

static int parity(int d) { return ((d % 2) + 2) % 2; }

RMatrix canonical_r(const ManinTriple& T) {
    if (T.x_basis.empty()) throw AlgebraError("canonical_r: triple has no dual matching");
    RatTensor r(2, T.dbl.basis());
    for (int a = 0; a < T.pairs(); ++a)
        for (const auto& [iu, cu] : T.x_basis[a].entries())
            for (const auto& [iv, cv] : T.eps_basis[a].entries())
                r.add({iu[0], iv[0], -1}, cu * cv);
    return RMatrix{std::move(r)};
}

Report check_rmatrix_contractions(const ManinTriple& T, const RMatrix& r) {
    Report rep("r-contractions");
    RatTensor kappa = T.metric.as_tensor();
    bool plus_ok = true, minus_ok = true, degree_ok = true;

    for (const auto& [idx, c] : r.tensor.entries())
        if (r.tensor.entry_degree(idx) != 1) {
            rep.fail("degree 1", fmt::format("entry ({}, {}) has degree {}",
                                             T.dbl.basis()->label(idx[0]),
                                             T.dbl.basis()->label(idx[1]),
                                             r.tensor.entry_degree(idx)));
            degree_ok = false;
            break;
        }
    if (degree_ok) rep.pass("degree 1");

    for (int a = 0; a < T.pairs() && plus_ok; ++a) {
        RatTensor got = contract(kappa, r.tensor, 1, T.x_basis[a]);
        if (!(got == -T.x_basis[a])) {
            rep.fail("(1 (x) kappa)(r, X) = -X",
                     fmt::format("X = pair {}: got {}", a, got.str()));
            plus_ok = false;
        }
    }
    if (plus_ok) rep.pass("(1 (x) kappa)(r, X) = -X");

    for (int a = 0; a < T.pairs() && minus_ok; ++a) {
        RatTensor got = contract(kappa, r.tensor, 0, T.eps_basis[a]);
        RatTensor expect = T.eps_basis[a];
        if (parity(expect.homogeneous_degree()) == 1) expect = -expect;
        if (!(got == expect)) {
            rep.fail("(kappa (x) 1)(r, Y) = (-1)^{|Y|} Y",
                     fmt::format("Y = pair {}: got {}", a, got.str()));
            minus_ok = false;
        }
    }
    if (minus_ok) rep.pass("(kappa (x) 1)(r, Y) = (-1)^{|Y|} Y");
    return rep;
}

RatTensor commutator_12_13(const GradedLieAlgebra& L, const RatTensor& A, const RatTensor& B) {
    RatTensor out(3, L.basis());
    for (const auto& [ia, ca] : A.entries())
        for (const auto& [ib, cb] : B.entries()) {
            int sign = parity(L.degree(ia[1]) * L.degree(ib[0]));
            for (const auto& [c, f] : L.bracket_basis(ia[0], ib[0])) {
                Rational v = ca * cb * f;
                out.add({c, ia[1], ib[1]}, sign ? -v : v);
            }
        }
    return out;
}

RatTensor commutator_12_23(const GradedLieAlgebra& L, const RatTensor& A, const RatTensor& B) {
    RatTensor out(3, L.basis());
    for (const auto& [ia, ca] : A.entries())
        for (const auto& [ib, cb] : B.entries())
            for (const auto& [c, f] : L.bracket_basis(ia[1], ib[0]))
                out.add({ia[0], c, ib[1]}, ca * cb * f);
    return out;
}

RatTensor commutator_13_23(const GradedLieAlgebra& L, const RatTensor& A, const RatTensor& B) {
    RatTensor out(3, L.basis());
    for (const auto& [ia, ca] : A.entries())
        for (const auto& [ib, cb] : B.entries()) {
            int sign = parity(L.degree(ia[1]) * L.degree(ib[0]));
            for (const auto& [c, f] : L.bracket_basis(ia[1], ib[1])) {
                Rational v = ca * cb * f;
                out.add({ia[0], ib[0], c}, sign ? -v : v);
            }
        }
    return out;
}

RatTensor adjoint_commutator_2slot(const GradedLieAlgebra& L, const RatTensor& a,
                                   const RatTensor& x) {
    if (x.arity() != 1) throw AlgebraError("adjoint_commutator_2slot: x must have arity 1");
    // [a, Delta x] = -(-1)^{|a||x|} [Delta x, a], entry by entry
    RatTensor out(2, L.basis());
    for (const auto& [idx, c] : a.entries()) {
        RatTensor single(2, L.basis());
        single.add(idx, c);
        for (const auto& [xi, xc] : x.entries()) {
            RatTensor term = L.ad2(xi[0], single);
            term.scale(xc);
            int sign = parity(a.entry_degree(idx) * L.degree(xi[0]));
            if (sign == 0) term = -term;
            out += term;
        }
    }
    return out;
}

DoubleCobracket make_double_cobracket(const ManinTriple& T) {
    return DoubleCobracket{double_cobracket(T)};
}

Report check_coboundary(const ManinTriple& T, const RMatrix& r) {
    Report rep("coboundary");
    DoubleCobracket dg = make_double_cobracket(T);
    bool ok = true;
    long boundary = 0;
    for (int v = 0; v < T.dbl.dim() && ok; ++v) {
        RatTensor lhs = adjoint_commutator_2slot(T.dbl, -r.tensor, T.dbl.basis_vector(v));
        RatTensor diff = lhs - dg.delta.at(v);
        for (const auto& [idx, c] : diff.entries()) {
            int ids[3] = {v, idx[0], idx[1]};
            if (!T.filter(ids)) { ++boundary; continue; }
            rep.fail("[-r, Delta(v)] = delta_g(v)",
                     fmt::format("v = {}: residual entry ({}, {}) = {}", T.dbl.basis()->label(v),
                                 T.dbl.basis()->label(idx[0]), T.dbl.basis()->label(idx[1]),
                                 c.str()));
            ok = false;
            break;
        }
    }
    if (ok) rep.pass("[-r, Delta(v)] = delta_g(v)");
    if (boundary > 0) rep.set_param("boundary_entries_ignored", std::to_string(boundary));
    return rep;
}

static bool assert_zero_filtered(Report& rep, const ManinTriple& T, const RatTensor& t,
                                 const std::string& name, long& boundary) {
    for (const auto& [idx, c] : t.entries()) {
        int ids[3] = {idx[0], idx[1], idx[2]};
        if (!T.filter(ids)) { ++boundary; continue; }
        rep.fail(name, fmt::format("residual entry ({}, {}, {}) = {}", T.dbl.basis()->label(idx[0]),
                                   T.dbl.basis()->label(idx[1]), T.dbl.basis()->label(idx[2]),
                                   c.str()));
        return false;
    }
    rep.pass(name);
    return true;
}

Report check_cybe(const ManinTriple& T, const RMatrix& r) {
    Report rep("cybe");
    const auto& L = T.dbl;
    RatTensor sum = commutator_12_13(L, r.tensor, r.tensor);
    sum += commutator_12_23(L, r.tensor, r.tensor);
    sum += commutator_13_23(L, r.tensor, r.tensor);
    long boundary = 0;
    assert_zero_filtered(rep, T, sum, "[r12,r13] + [r12,r23] + [r13,r23] = 0", boundary);
    if (boundary > 0) rep.set_param("boundary_entries_ignored", std::to_string(boundary));
    return rep;
}

Report check_dr_identities(const ManinTriple& T, const RMatrix& r) {
    Report rep("dr-identities");
    const auto& L = T.dbl;
    DoubleCobracket dg = make_double_cobracket(T);

    // (delta_g (x) 1)(r): delta is odd, no crossing over slot 1
    RatTensor lhs1(3, L.basis());
    for (const auto& [idx, c] : r.tensor.entries())
        for (const auto& [didx, dc] : dg.delta.at(idx[0]).entries())
            lhs1.add({didx[0], didx[1], idx[1]}, c * dc);
    // (1 (x) delta_g)(r): crossing the first slot
    RatTensor lhs2(3, L.basis());
    for (const auto& [idx, c] : r.tensor.entries()) {
        int sign = parity(L.degree(idx[0]));
        for (const auto& [didx, dc] : dg.delta.at(idx[1]).entries()) {
            Rational v = c * dc;
            lhs2.add({idx[0], didx[0], didx[1]}, sign ? -v : v);
        }
    }

    long boundary = 0;
    assert_zero_filtered(rep, T, lhs1 - commutator_13_23(L, r.tensor, r.tensor),
                         "delta_g (x) 1 (r) = [r13, r23]", boundary);
    assert_zero_filtered(rep, T, lhs2 - commutator_12_13(L, r.tensor, r.tensor),
                         "1 (x) delta_g (r) = [r12, r13]", boundary);
    if (boundary > 0) rep.set_param("boundary_entries_ignored", std::to_string(boundary));
    return rep;
}

RatTensor omega_of(const RMatrix& r) { return r.tensor - braid(r.tensor); }

Report check_omega(const ManinTriple& T, const RMatrix& r) {
    Report rep("omega");
    RatTensor omega = omega_of(r);
    rep.require("sigma(Omega) = -Omega", braid(omega) == -omega, omega.str());
    bool inv = true;
    long boundary = 0;
    for (int v = 0; v < T.dbl.dim() && inv; ++v) {
        RatTensor comm = adjoint_commutator_2slot(T.dbl, omega, T.dbl.basis_vector(v));
        for (const auto& [idx, c] : comm.entries()) {
            int ids[3] = {v, idx[0], idx[1]};
            if (!T.filter(ids)) { ++boundary; continue; }
            rep.fail("[Omega, Delta(v)] = 0",
                     fmt::format("v = {}: residual {}", T.dbl.basis()->label(v), comm.str()));
            inv = false;
            break;
        }
    }
    if (inv) rep.pass("[Omega, Delta(v)] = 0");
    if (boundary > 0) rep.set_param("boundary_entries_ignored", std::to_string(boundary));
    return rep;
}

} // namespace shifted
