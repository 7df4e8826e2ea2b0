#include "shifted/bialg.hpp"

#include <fmt/format.h>

namespace shifted {

Cobracket Cobracket::zero(const BasisPtr& basis) {
    Cobracket d{basis, {}};
    d.delta.assign(basis->dim(), RatTensor(2, basis));
    return d;
}

RatTensor Cobracket::apply(const RatTensor& x) const {
    if (x.arity() != 1) throw AlgebraError("cobracket: argument must have arity 1");
    RatTensor out(2, basis);
    for (const auto& [idx, c] : x.entries()) {
        RatTensor term = delta.at(idx[0]);
        term.scale(c);
        out += term;
    }
    return out;
}

bool Cobracket::is_zero() const {
    for (const auto& t : delta)
        if (!t.is_zero()) return false;
    return true;
}

static int parity(int degree) { return ((degree % 2) + 2) % 2; }

// (delta (x) 1)(t) and (1 (x) delta)(t) for arity-2 t; delta is odd, so the
// second variant crosses the first slot.
static RatTensor delta_slot1(const Cobracket& d, const RatTensor& t) {
    RatTensor out(3, t.basis());
    for (const auto& [idx, c] : t.entries())
        for (const auto& [didx, dc] : d.delta.at(idx[0]).entries())
            out.add({didx[0], didx[1], idx[1]}, c * dc);
    return out;
}

static RatTensor delta_slot2(const Cobracket& d, const RatTensor& t) {
    RatTensor out(3, t.basis());
    for (const auto& [idx, c] : t.entries()) {
        int sign = parity(t.basis()->degree(idx[0]));
        for (const auto& [didx, dc] : d.delta.at(idx[1]).entries()) {
            Rational v = c * dc;
            out.add({idx[0], didx[0], didx[1]}, sign ? -v : v);
        }
    }
    return out;
}

Report check_shifted_bialgebra(const GradedLieAlgebra& h, const Cobracket& delta,
                               const TupleFilter& filter) {
    Report rep("shifted-bialgebra");
    const auto& basis = *h.basis();
    if (delta.basis != h.basis()) throw AlgebraError("cobracket: basis mismatch");

    bool formed = true;
    for (int a = 0; a < h.dim() && formed; ++a) {
        const RatTensor& d = delta.delta.at(a);
        if (!sym2_check(d)) {
            rep.fail("cobracket lands in Sym^2",
                     fmt::format("delta({}) is not graded-symmetric: {}", basis.label(a), d.str()));
            formed = false;
        } else if (!d.is_zero()) {
            for (const auto& [idx, c] : d.entries()) {
                if (d.entry_degree(idx) != basis.degree(a) + 1) {
                    rep.fail("cobracket degree +1",
                             fmt::format("delta({}) has an entry of degree {} != {}", basis.label(a),
                                         d.entry_degree(idx), basis.degree(a) + 1));
                    formed = false;
                    break;
                }
            }
        }
    }
    if (formed) {
        rep.pass("cobracket lands in Sym^2");
        rep.pass("cobracket degree +1");
    } else {
        return rep; // identities are meaningless on malformed input
    }

    bool cojacobi = true;
    for (int a = 0; a < h.dim(); ++a) {
        int ids[1] = {a};
        if (!filter(ids)) continue;
        RatTensor s = delta_slot1(delta, delta.delta.at(a)) + delta_slot2(delta, delta.delta.at(a));
        if (!symmetrize_tensor(s).is_zero()) {
            rep.fail("co-Jacobi in Sym^3",
                     fmt::format("generator {}: symmetrized residual {}", basis.label(a),
                                 symmetrize_tensor(s).str()));
            cojacobi = false;
            break;
        }
    }
    if (cojacobi) rep.pass("co-Jacobi in Sym^3");

    bool cocycle = true;
    for (int a = 0; a < h.dim() && cocycle; ++a)
        for (int b = 0; b < h.dim(); ++b) {
            int ids[2] = {a, b};
            if (!filter(ids)) continue;
            RatTensor lhs = delta.apply(h.bracket(h.basis_vector(a), h.basis_vector(b)));
            // [delta(a), Delta(b)] = -(-1)^{(|a|+1)|b|} [Delta(b), delta(a)]
            RatTensor t1 = h.ad2(b, delta.delta.at(a));
            if (parity((basis.degree(a) + 1) * basis.degree(b)) == 0) t1 = -t1;
            RatTensor t2 = h.ad2(a, delta.delta.at(b));
            if (parity(basis.degree(a)) == 1) t2 = -t2;
            RatTensor rhs = t1 + t2;
            if (!(lhs == rhs)) {
                rep.fail("cocycle identity",
                         fmt::format("pair ({}, {}): delta([X,Y]) = {} but bracket side = {}",
                                     basis.label(a), basis.label(b), lhs.str(), rhs.str()));
                cocycle = false;
                break;
            }
        }
    if (cocycle) rep.pass("cocycle identity");
    return rep;
}

/// Shared projector: decompose double vectors along the transverse pair.
class TripleProjector {
  public:
    explicit TripleProjector(const ManinTriple& T) : T_(T) {
        int n = T.dbl.dim();
        RatMatrix m(n, n);
        int col = 0;
        for (const auto& v : T.x_basis) {
            for (const auto& [idx, c] : v.entries()) m.at(idx[0], col) = c;
            ++col;
        }
        for (const auto& v : T.eps_basis) {
            for (const auto& [idx, c] : v.entries()) m.at(idx[0], col) = c;
            ++col;
        }
        if (col != n) throw AlgebraError("triple: matched bases do not span the double");
        auto inv = m.inverse();
        if (!inv) throw AlgebraError("triple: matched bases are degenerate");
        inv_ = *inv;
    }

    /// Coordinates (plus part, minus part) of v in the matched bases.
    std::pair<std::vector<Rational>, std::vector<Rational>> coords(const RatTensor& v) const {
        int n = T_.dbl.dim(), p = T_.pairs();
        std::vector<Rational> full(n);
        for (int r = 0; r < n; ++r) {
            Rational acc;
            for (const auto& [idx, c] : v.entries()) acc += inv_.at(r, idx[0]) * c;
            full[r] = acc;
        }
        std::vector<Rational> plus(full.begin(), full.begin() + p);
        std::vector<Rational> minus(full.begin() + p, full.end());
        return {plus, minus};
    }

    RatTensor plus_part(const RatTensor& v) const {
        auto [p, m] = coords(v);
        RatTensor out(1, T_.dbl.basis());
        for (int i = 0; i < T_.pairs(); ++i) {
            RatTensor term = T_.x_basis[i];
            term.scale(p[i]);
            out += term;
        }
        return out;
    }

    RatTensor minus_part(const RatTensor& v) const {
        auto [p, m] = coords(v);
        RatTensor out(1, T_.dbl.basis());
        for (int i = 0; i < T_.pairs(); ++i) {
            RatTensor term = T_.eps_basis[i];
            term.scale(m[i]);
            out += term;
        }
        return out;
    }

  private:
    const ManinTriple& T_;
    RatMatrix inv_;
};

std::pair<RatTensor, RatTensor> ManinTriple::project(const RatTensor& v) const {
    TripleProjector proj(*this);
    return {proj.plus_part(v), proj.minus_part(v)};
}

GradedLieAlgebra side_subalgebra(const ManinTriple& T, TripleSide side) {
    const auto& gens = side == TripleSide::Plus ? T.x_basis : T.eps_basis;
    const Subspace& sub = side == TripleSide::Plus ? T.h_plus : T.h_minus;
    std::vector<BasisVector> vecs;
    for (size_t i = 0; i < gens.size(); ++i) {
        const auto& g = gens[i];
        std::string label;
        if (g.entries().size() == 1 && g.entries().begin()->second == Rational(1))
            label = T.dbl.basis()->label(g.entries().begin()->first[0]);
        else
            label = fmt::format("{}{}", side == TripleSide::Plus ? "p" : "m", i);
        vecs.push_back({label, g.homogeneous_degree()});
    }
    auto basis = std::make_shared<GradedBasis>(std::move(vecs));
    std::vector<BracketSpec> specs;
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i; j < gens.size(); ++j) {
            RatTensor br = T.dbl.bracket(gens[i], gens[j]);
            auto coords = sub.coordinates(br);
            if (!coords)
                throw AlgebraError("side_subalgebra: side is not bracket-closed");
            BracketSpec spec{static_cast<int>(i), static_cast<int>(j), {}};
            for (size_t c = 0; c < coords->size(); ++c)
                if (!(*coords)[c].is_zero()) spec.terms.emplace_back(static_cast<int>(c), (*coords)[c]);
            specs.push_back(std::move(spec));
        }
    return GradedLieAlgebra(basis, specs);
}

// Cobracket on the primary side of a matched pair (primary_i, dual^j with
// kappa(primary_i, dual^j) = delta_ij):
//   delta(v_a) = sum (-1)^{|v_c|(|v_b|+1)} g^{bc}_a v_b (x) v_c,
// where g are the structure constants of the dual basis. The minus side uses
// the flipped matching (eps^a, -x_b).
ShiftedBialgebra cobracket_from_triple(const ManinTriple& T, TripleSide side) {
    GradedLieAlgebra algebra = side_subalgebra(T, side);
    const auto& primary = side == TripleSide::Plus ? T.x_basis : T.eps_basis;
    const auto& dual = side == TripleSide::Plus ? T.eps_basis : T.x_basis;
    const Subspace& dual_space = side == TripleSide::Plus ? T.h_minus : T.h_plus;
    bool negate_dual = side == TripleSide::Minus; // kappa(eps^a, -x_b) = delta_ab
    int n = static_cast<int>(primary.size());

    Cobracket delta{algebra.basis(), {}};
    std::vector<std::vector<std::vector<Rational>>> g(
        n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n)));
    for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
            RatTensor db = dual[b], dc = dual[c];
            if (negate_dual) { db = -db; dc = -dc; }
            RatTensor br = T.dbl.bracket(db, dc);
            auto coords = dual_space.coordinates(br);
            if (!coords) throw AlgebraError("cobracket_from_triple: dual side not closed");
            for (int a = 0; a < n; ++a) g[b][c][a] = negate_dual ? -(*coords)[a] : (*coords)[a];
        }
    for (int a = 0; a < n; ++a) {
        RatTensor d(2, algebra.basis());
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (g[b][c][a].is_zero()) continue;
                int sign = parity(algebra.degree(c) * (algebra.degree(b) + 1));
                Rational v = g[b][c][a];
                d.add({b, c, -1}, sign ? -v : v);
            }
        delta.delta.push_back(std::move(d));
    }
    return ShiftedBialgebra{std::move(algebra), std::move(delta)};
}

std::vector<RatTensor> double_cobracket(const ManinTriple& T) {
    ShiftedBialgebra plus = cobracket_from_triple(T, TripleSide::Plus);
    ShiftedBialgebra minus = cobracket_from_triple(T, TripleSide::Minus);
    TripleProjector proj(T);
    int n = T.dbl.dim(), p = T.pairs();

    // per-pair cobracket tensors written over the double's own basis
    auto lift = [&](const Cobracket& d, const std::vector<RatTensor>& gens) {
        std::vector<RatTensor> out;
        for (int a = 0; a < static_cast<int>(gens.size()); ++a) {
            RatTensor t(2, T.dbl.basis());
            for (const auto& [idx, c] : d.delta.at(a).entries())
                for (const auto& [iu, cu] : gens[idx[0]].entries())
                    for (const auto& [iv, cv] : gens[idx[1]].entries())
                        t.add({iu[0], iv[0], -1}, c * cu * cv);
            out.push_back(std::move(t));
        }
        return out;
    };
    std::vector<RatTensor> dplus = lift(plus.cobracket, T.x_basis);
    std::vector<RatTensor> dminus = lift(minus.cobracket, T.eps_basis);

    std::vector<RatTensor> out;
    for (int i = 0; i < n; ++i) {
        auto [cp, cm] = proj.coords(T.dbl.basis_vector(i));
        RatTensor t(2, T.dbl.basis());
        for (int a = 0; a < p; ++a) {
            if (!cp[a].is_zero()) {
                RatTensor term = dplus[a];
                term.scale(cp[a]);
                t += term;
            }
            if (!cm[a].is_zero()) {
                RatTensor term = dminus[a];
                term.scale(-cm[a]); // delta_g restricts to -delta* on h_-
                t += term;
            }
        }
        out.push_back(std::move(t));
    }
    return out;
}

ShiftedBialgebra dualize(const ShiftedBialgebra& h) {
    const auto& basis = *h.algebra.basis();
    int n = basis.dim();
    std::vector<BasisVector> dual_vecs;
    for (int a = 0; a < n; ++a)
        dual_vecs.push_back({basis.label(a) + "*", 1 - basis.degree(a)});
    auto dual_basis = std::make_shared<GradedBasis>(std::move(dual_vecs));

    // bracket on duals from the cobracket: g^{bc}_a = (-1)^{|x_c|(|x_b|+1)} D_a^{bc}
    std::vector<BracketSpec> specs;
    for (int b = 0; b < n; ++b)
        for (int c = b; c < n; ++c) {
            std::vector<std::pair<int, Rational>> terms;
            for (int a = 0; a < n; ++a) {
                Rational D = h.cobracket.delta.at(a).coeff({b, c, -1});
                if (D.is_zero()) continue;
                int sign = parity(basis.degree(c) * (basis.degree(b) + 1));
                terms.emplace_back(a, sign ? -D : D);
            }
            if (!terms.empty()) specs.push_back({b, c, std::move(terms)});
        }
    GradedLieAlgebra dual_algebra(dual_basis, specs);

    // cobracket on duals from the bracket:
    // delta*(eps^a) = -sum (-1)^{|x_b|(|x_c|+1)} f_{bc}^a eps^b (x) eps^c
    Cobracket dual_delta{dual_basis, {}};
    for (int a = 0; a < n; ++a) {
        RatTensor d(2, dual_basis);
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (const auto& [target, f] : h.algebra.bracket_basis(b, c)) {
                    if (target != a) continue;
                    int sign = parity(basis.degree(b) * (basis.degree(c) + 1));
                    d.add({b, c, -1}, sign ? f : -f);
                }
        dual_delta.delta.push_back(std::move(d));
    }
    return ShiftedBialgebra{std::move(dual_algebra), std::move(dual_delta)};
}

ManinTriple build_double(const ShiftedBialgebra& h) {
    const auto& basis = *h.algebra.basis();
    int n = basis.dim();
    std::vector<BasisVector> dbl_vecs;
    for (int a = 0; a < n; ++a) dbl_vecs.push_back(basis.vectors()[a]);
    for (int a = 0; a < n; ++a) dbl_vecs.push_back({basis.label(a) + "*", 1 - basis.degree(a)});
    auto dbl_basis = std::make_shared<GradedBasis>(std::move(dbl_vecs));

    // canonical pairing kappa(x_a, eps^a) = 1
    std::vector<std::tuple<int, int, Rational>> kappa_entries;
    for (int a = 0; a < n; ++a) kappa_entries.emplace_back(a, n + a, Rational(1));
    ShiftedMetric metric(dbl_basis, std::move(kappa_entries));

    // g^{bc}_a from the cobracket, as in dualize
    auto g = [&](int b, int c, int a) {
        Rational D = h.cobracket.delta.at(a).coeff({b, c, -1});
        if (D.is_zero()) return D;
        int sign = parity(basis.degree(c) * (basis.degree(b) + 1));
        return sign ? -D : D;
    };

    std::vector<BracketSpec> specs;
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            auto terms = h.algebra.bracket_basis(a, b);
            if (!terms.empty()) specs.push_back({a, b, terms});
        }
    for (int b = 0; b < n; ++b)
        for (int c = b; c < n; ++c) {
            std::vector<std::pair<int, Rational>> terms;
            for (int a = 0; a < n; ++a) {
                Rational v = g(b, c, a);
                if (!v.is_zero()) terms.emplace_back(n + a, v);
            }
            if (!terms.empty()) specs.push_back({n + b, n + c, std::move(terms)});
        }

    // mixed bracket [x_a, eps^b]: unique solution of the kappa-invariance
    // system  kappa(u, x_c) = (-1)^{|x_a|} kappa(eps^b, [x_c, x_a]),
    //         kappa(u, eps^c) = (-1)^{|eps^b|} kappa(x_a, [eps^b, eps^c]).
    // With the canonical pairing the Gram matrix is block +-identity, so the
    // solve is direct.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::vector<std::pair<int, Rational>> terms;
            // minus-part coordinates q_c: kappa(q_c eps^c, x_c) = -q_c
            for (int c = 0; c < n; ++c) {
                Rational rhs;
                for (const auto& [e, f] : h.algebra.bracket_basis(c, a))
                    rhs += f * metric.kappa(n + b, e);
                if (parity(basis.degree(a))) rhs = -rhs;
                if (!rhs.is_zero()) terms.emplace_back(n + c, -rhs);
            }
            // plus-part coordinates p_c: kappa(p_c x_c, eps^c) = +p_c
            for (int c = 0; c < n; ++c) {
                Rational rhs;
                for (int e = 0; e < n; ++e) {
                    Rational gv = g(b, c, e);
                    if (!gv.is_zero()) rhs += gv * metric.kappa(a, n + e);
                }
                if (parity(1 - basis.degree(b))) rhs = -rhs;
                if (!rhs.is_zero()) terms.emplace_back(c, rhs);
            }
            if (!terms.empty()) specs.push_back({a, n + b, std::move(terms)});
        }

    GradedLieAlgebra dbl(dbl_basis, specs);
    std::vector<int> plus_ids(n), minus_ids(n);
    for (int a = 0; a < n; ++a) { plus_ids[a] = a; minus_ids[a] = n + a; }
    Subspace h_plus = Subspace::from_indices(dbl_basis, plus_ids);
    Subspace h_minus = Subspace::from_indices(dbl_basis, minus_ids);
    std::vector<RatTensor> x_basis = h_plus.span(), eps_basis = h_minus.span();
    return ManinTriple{std::move(dbl), std::move(metric), std::move(h_plus), std::move(h_minus),
                       std::move(x_basis), std::move(eps_basis), all_tuples()};
}

ManinTriple triple_from_subspaces(const GradedLieAlgebra& dbl, const ShiftedMetric& metric,
                                  const Subspace& h_plus, const Subspace& h_minus,
                                  TupleFilter filter) {
    int p = h_plus.dim();
    if (p != h_minus.dim() || 2 * p != dbl.dim())
        throw AlgebraError("triple_from_subspaces: pair does not halve the double");
    // solve for the dual basis inside h_minus: kappa(x_i, eps^j) = delta_ij
    RatMatrix gram(p, p);
    for (int i = 0; i < p; ++i)
        for (int k = 0; k < p; ++k)
            gram.at(i, k) = metric.kappa(h_plus.span()[i], h_minus.span()[k]);
    auto inv = gram.inverse();
    if (!inv) throw AlgebraError("triple_from_subspaces: pair is not transverse under kappa");
    std::vector<RatTensor> eps_basis;
    for (int j = 0; j < p; ++j) {
        RatTensor e(1, dbl.basis());
        for (int k = 0; k < p; ++k) {
            RatTensor term = h_minus.span()[k];
            term.scale(inv->at(k, j));
            e += term;
        }
        eps_basis.push_back(std::move(e));
    }
    Subspace h_minus_matched(dbl.basis(), eps_basis);
    return ManinTriple{dbl, metric, h_plus, std::move(h_minus_matched), h_plus.span(),
                       std::move(eps_basis), std::move(filter)};
}

Report verify_prop_delta(const ManinTriple& T) {
    Report rep("prop-delta");
    TripleProjector proj(T);
    int p = T.pairs();
    auto rush = [&](const RatTensor& x, const RatTensor& y) { return T.dbl.bracket(x, y); };

    auto deg = [&](const RatTensor& v) { return v.homogeneous_degree(); };

    bool zxy_ok = true;
    for (int xi = 0; xi < p && zxy_ok; ++xi)
        for (int zi = 0; zi < p && zxy_ok; ++zi)
            for (int wi = 0; wi < p; ++wi) {
                const RatTensor& X = T.x_basis[xi];
                const RatTensor& Z = T.eps_basis[zi];
                const RatTensor& W = T.eps_basis[wi];
                std::vector<int> ids;
                for (const auto* v : {&X, &Z, &W})
                    for (const auto& [idx, c] : v->entries()) ids.push_back(idx[0]);
                if (!T.filter(ids)) continue;
                RatTensor lhs = proj.minus_part(rush(X, rush(Z, W)));
                RatTensor t1 = rush(proj.minus_part(rush(X, Z)), W);
                RatTensor t2 = proj.minus_part(rush(proj.plus_part(rush(X, Z)), W));
                RatTensor t3 = rush(proj.minus_part(rush(X, W)), Z);
                RatTensor t4 = proj.minus_part(rush(proj.plus_part(rush(X, W)), Z));
                RatTensor rhs = t1 + t2;
                RatTensor sub = t3 + t4;
                if (parity(deg(Z) * deg(W)) == 0) rhs -= sub; else rhs += sub;
                if (!(lhs == rhs)) {
                    rep.fail("mixed Jacobi (action on h-)",
                             fmt::format("triple (x{}, e{}, e{}): lhs {} vs rhs {}", xi, zi, wi,
                                         lhs.str(), rhs.str()));
                    zxy_ok = false;
                    break;
                }
            }
    if (zxy_ok) rep.pass("mixed Jacobi (action on h-)");

    bool xyz_ok = true;
    for (int zi = 0; zi < p && xyz_ok; ++zi)
        for (int xi = 0; xi < p && xyz_ok; ++xi)
            for (int yi = 0; yi < p; ++yi) {
                const RatTensor& Z = T.x_basis[zi];
                const RatTensor& X = T.eps_basis[xi];
                const RatTensor& Y = T.eps_basis[yi];
                std::vector<int> ids;
                for (const auto* v : {&Z, &X, &Y})
                    for (const auto& [idx, c] : v->entries()) ids.push_back(idx[0]);
                if (!T.filter(ids)) continue;
                auto lact = [&](const RatTensor& z, const RatTensor& x) {
                    return proj.plus_part(rush(z, x));
                };
                RatTensor lhs = lact(Z, rush(X, Y));
                RatTensor rhs = lact(lact(Z, X), Y);
                RatTensor sub = lact(lact(Z, Y), X);
                if (parity(deg(X) * deg(Y)) == 0) rhs -= sub; else rhs += sub;
                if (!(lhs == rhs)) {
                    rep.fail("iterated right action on h+",
                             fmt::format("triple (x{}, e{}, e{}): lhs {} vs rhs {}", zi, xi, yi,
                                         lhs.str(), rhs.str()));
                    xyz_ok = false;
                    break;
                }
            }
    if (xyz_ok) rep.pass("iterated right action on h+");
    return rep;
}

} // namespace shifted
