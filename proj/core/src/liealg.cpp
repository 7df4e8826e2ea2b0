#include "shifted/liealg.hpp"

#include <fmt/format.h>

namespace shifted {

TupleFilter all_tuples() {
    return [](std::span<const int>) { return true; };
}

static std::vector<std::pair<int, Rational>> combine_terms(std::vector<std::pair<int, Rational>> terms) {
    std::map<int, Rational> acc;
    for (auto& [c, coeff] : terms) acc[c] += coeff;
    std::vector<std::pair<int, Rational>> out;
    for (auto& [c, coeff] : acc)
        if (!coeff.is_zero()) out.emplace_back(c, coeff);
    return out;
}

GradedLieAlgebra::GradedLieAlgebra(BasisPtr basis, const std::vector<BracketSpec>& specs,
                                   Report* validation)
    : basis_(std::move(basis)) {
    auto report = [&](bool ok, const std::string& name, const std::string& witness) {
        if (validation) validation->require(name, ok, witness);
        else if (!ok) throw AlgebraError(name + ": " + witness);
    };

    for (const auto& spec : specs) {
        if (spec.a < 0 || spec.a >= dim() || spec.b < 0 || spec.b >= dim())
            throw AlgebraError("bracket spec: index out of range");
        int da = degree(spec.a), db = degree(spec.b);
        auto terms = combine_terms(spec.terms);
        for (const auto& [c, coeff] : terms) {
            if (c < 0 || c >= dim()) throw AlgebraError("bracket spec: target index out of range");
            report(degree(c) == da + db, "bracket degree compatibility",
                   fmt::format("[{}, {}] hits {} of degree {} != {}", basis_->label(spec.a),
                               basis_->label(spec.b), basis_->label(c), degree(c), da + db));
        }
        if (spec.a == spec.b && da % 2 == 0) {
            report(terms.empty(), "even self-bracket",
                   fmt::format("[{0}, {0}] must vanish for even {0}", basis_->label(spec.a)));
            continue;
        }
        // canonicalize to a <= b
        int a = spec.a, b = spec.b;
        if (a > b) {
            std::swap(a, b);
            int sign = (degree(a) * degree(b)) % 2 == 0 ? -1 : 1; // -(-1)^{|a||b|}
            for (auto& [c, coeff] : terms) coeff *= Rational(sign);
        }
        auto key = std::make_pair(a, b);
        auto it = f_.find(key);
        if (it == f_.end()) {
            if (!terms.empty()) f_.emplace(key, std::move(terms));
        } else {
            bool same = it->second == terms;
            report(same, "antisymmetry consistency",
                   fmt::format("[{}, {}] given twice with incompatible values", basis_->label(a),
                               basis_->label(b)));
        }
    }
}

std::vector<std::pair<int, Rational>> GradedLieAlgebra::bracket_basis(int a, int b) const {
    if (a == b && degree(a) % 2 == 0) return {};
    bool flip = a > b;
    auto it = f_.find(flip ? std::make_pair(b, a) : std::make_pair(a, b));
    if (it == f_.end()) return {};
    if (!flip) return it->second;
    auto terms = it->second;
    int sign = (degree(a) * degree(b)) % 2 == 0 ? -1 : 1;
    for (auto& [c, coeff] : terms) coeff *= Rational(sign);
    return terms;
}

RatTensor GradedLieAlgebra::basis_vector(int a) const {
    RatTensor t(1, basis_);
    t.add({a, -1, -1}, Rational(1));
    return t;
}

RatTensor GradedLieAlgebra::bracket(const RatTensor& x, const RatTensor& y) const {
    if (x.basis() != basis_ || y.basis() != basis_) throw AlgebraError("bracket: basis mismatch");
    if (x.arity() != 1 || y.arity() != 1) throw AlgebraError("bracket: arity must be 1");
    RatTensor out(1, basis_);
    for (const auto& [ia, ca] : x.entries())
        for (const auto& [ib, cb] : y.entries())
            for (const auto& [c, f] : bracket_basis(ia[0], ib[0]))
                out.add({c, -1, -1}, ca * cb * f);
    return out;
}

RatTensor GradedLieAlgebra::ad2(int a, const RatTensor& t) const {
    if (t.arity() != 2) throw AlgebraError("ad2: arity must be 2");
    if (t.basis() != basis_) throw AlgebraError("ad2: basis mismatch");
    int da = degree(a);
    RatTensor out(2, basis_);
    for (const auto& [idx, c] : t.entries()) {
        for (const auto& [u, f] : bracket_basis(a, idx[0]))
            out.add({u, idx[1], -1}, c * f);
        int sign = (da * basis_->degree(idx[0])) % 2 == 0 ? 1 : -1;
        for (const auto& [v, f] : bracket_basis(a, idx[1]))
            out.add({idx[0], v, -1}, c * f * Rational(sign));
    }
    return out;
}

RatTensor GradedLieAlgebra::ad3(int a, const RatTensor& t) const {
    if (t.arity() != 3) throw AlgebraError("ad3: arity must be 3");
    if (t.basis() != basis_) throw AlgebraError("ad3: basis mismatch");
    int da = degree(a);
    RatTensor out(3, basis_);
    for (const auto& [idx, c] : t.entries()) {
        for (const auto& [u, f] : bracket_basis(a, idx[0]))
            out.add({u, idx[1], idx[2]}, c * f);
        int s1 = (da * basis_->degree(idx[0])) % 2 == 0 ? 1 : -1;
        for (const auto& [v, f] : bracket_basis(a, idx[1]))
            out.add({idx[0], v, idx[2]}, c * f * Rational(s1));
        int s2 = (da * (basis_->degree(idx[0]) + basis_->degree(idx[1]))) % 2 == 0 ? 1 : -1;
        for (const auto& [w, f] : bracket_basis(a, idx[2]))
            out.add({idx[0], idx[1], w}, c * f * Rational(s2));
    }
    return out;
}

Report GradedLieAlgebra::check_jacobi(const TupleFilter& filter) const {
    Report rep("jacobi");
    for (int a = 0; a < dim() && rep.ok(); ++a)
        for (int b = 0; b < dim() && rep.ok(); ++b)
            for (int c = 0; c < dim(); ++c) {
                int ids[3] = {a, b, c};
                if (!filter(ids)) continue;
                int da = degree(a), db = degree(b), dc = degree(c);
                RatTensor va = basis_vector(a), vb = basis_vector(b), vc = basis_vector(c);
                RatTensor sum(1, basis_);
                auto term = [&](const RatTensor& x, const RatTensor& y, const RatTensor& z, int s) {
                    RatTensor t = bracket(bracket(x, y), z);
                    if (s % 2 != 0) t = -t;
                    sum += t;
                };
                // (-1)^{|c||a|}[[a,b],c] + (-1)^{|a||b|}[[b,c],a] + (-1)^{|b||c|}[[c,a],b]
                term(va, vb, vc, dc * da);
                term(vb, vc, va, da * db);
                term(vc, va, vb, db * dc);
                if (!sum.is_zero()) {
                    rep.fail("graded Jacobi identity",
                             fmt::format("triple ({}, {}, {}): residual {}", basis_->label(a),
                                         basis_->label(b), basis_->label(c), sum.str()));
                    break;
                }
            }
    if (rep.checks().empty() || rep.ok()) {
        Report fresh("jacobi");
        fresh.pass("graded Jacobi identity");
        return fresh;
    }
    return rep;
}

ShiftedMetric::ShiftedMetric(BasisPtr basis, std::vector<std::tuple<int, int, Rational>> entries)
    : basis_(std::move(basis)) {
    for (auto& [a, b, v] : entries) {
        if (a < 0 || a >= basis_->dim() || b < 0 || b >= basis_->dim())
            throw AlgebraError("metric: index out of range");
        if (v.is_zero()) continue;
        auto [it, fresh] = k_.emplace(std::make_pair(a, b), v);
        if (!fresh && !(it->second == v))
            throw AlgebraError("metric: duplicate entry with different value");
    }
    // fill mirrors by antisymmetry where not explicitly given; explicitly
    // stated values win so that corrupted inputs reach check_metric intact
    std::vector<std::pair<std::pair<int, int>, Rational>> mirrors;
    for (const auto& [key, v] : k_) {
        auto mirror = std::make_pair(key.second, key.first);
        if (k_.find(mirror) == k_.end()) mirrors.emplace_back(mirror, -v);
    }
    for (auto& [key, v] : mirrors) k_.emplace(key, v);
}

Rational ShiftedMetric::kappa(int a, int b) const {
    auto it = k_.find({a, b});
    return it == k_.end() ? Rational() : it->second;
}

Rational ShiftedMetric::kappa(const RatTensor& x, const RatTensor& y) const {
    Rational out;
    for (const auto& [ia, ca] : x.entries())
        for (const auto& [ib, cb] : y.entries())
            out += ca * cb * kappa(ia[0], ib[0]);
    return out;
}

RatTensor ShiftedMetric::as_tensor() const {
    RatTensor t(2, basis_);
    for (const auto& [key, v] : k_) t.add({key.first, key.second, -1}, v);
    return t;
}

Report check_metric(const GradedLieAlgebra& L, const ShiftedMetric& kappa,
                    const TupleFilter& filter) {
    Report rep("metric");
    const auto& basis = *L.basis();
    int n = basis.dim();

    bool support_ok = true, antisym_ok = true;
    for (int a = 0; a < n && support_ok && antisym_ok; ++a)
        for (int b = 0; b < n; ++b) {
            Rational v = kappa.kappa(a, b);
            if (v.is_zero()) continue;
            if (basis.degree(a) + basis.degree(b) != 1) {
                rep.fail("degree-1 support", fmt::format("kappa({}, {}) = {} pairs degrees {} and {}",
                                                         basis.label(a), basis.label(b), v.str(),
                                                         basis.degree(a), basis.degree(b)));
                support_ok = false;
                break;
            }
            if (!(kappa.kappa(b, a) == -v)) {
                rep.fail("antisymmetry", fmt::format("kappa({0}, {1}) = {2} but kappa({1}, {0}) = {3}",
                                                     basis.label(a), basis.label(b), v.str(),
                                                     kappa.kappa(b, a).str()));
                antisym_ok = false;
                break;
            }
        }
    if (support_ok) rep.pass("degree-1 support");
    if (antisym_ok) rep.pass("antisymmetry");

    // invariance: kappa([y,x], z) = (-1)^{|x|} kappa(y, [x,z])
    bool inv_ok = true;
    for (int y = 0; y < n && inv_ok; ++y)
        for (int x = 0; x < n && inv_ok; ++x)
            for (int z = 0; z < n; ++z) {
                int ids[3] = {y, x, z};
                if (!filter(ids)) continue;
                Rational lhs;
                for (const auto& [c, f] : L.bracket_basis(y, x)) lhs += f * kappa.kappa(c, z);
                Rational rhs;
                for (const auto& [c, f] : L.bracket_basis(x, z)) rhs += f * kappa.kappa(y, c);
                if (basis.degree(x) % 2 != 0) rhs = -rhs;
                if (!(lhs == rhs)) {
                    rep.fail("invariance",
                             fmt::format("triple ({}, {}, {}): kappa([y,x],z) = {} vs (-1)^|x| "
                                         "kappa(y,[x,z]) = {}",
                                         basis.label(y), basis.label(x), basis.label(z), lhs.str(),
                                         rhs.str()));
                    inv_ok = false;
                    break;
                }
            }
    if (inv_ok) rep.pass("invariance");

    // nondegeneracy: each g_n x g_{1-n} block has full (square) rank
    std::map<int, std::vector<int>> by_degree;
    for (int a = 0; a < n; ++a) by_degree[basis.degree(a)].push_back(a);
    bool nondeg_ok = true;
    for (const auto& [d, rows] : by_degree) {
        auto it = by_degree.find(1 - d);
        int cols_n = it == by_degree.end() ? 0 : static_cast<int>(it->second.size());
        if (static_cast<int>(rows.size()) != cols_n) {
            rep.fail("nondegeneracy", fmt::format("dim g_{} = {} != dim g_{} = {}", d, rows.size(),
                                                  1 - d, cols_n));
            nondeg_ok = false;
            break;
        }
        RatMatrix block(static_cast<int>(rows.size()), cols_n);
        for (size_t r = 0; r < rows.size(); ++r)
            for (int c = 0; c < cols_n; ++c) block.at(static_cast<int>(r), c) = kappa.kappa(rows[r], it->second[c]);
        if (block.rank() != static_cast<int>(rows.size())) {
            // name a radical vector
            RatMatrix tr(cols_n, static_cast<int>(rows.size()));
            for (int r = 0; r < cols_n; ++r)
                for (size_t c = 0; c < rows.size(); ++c)
                    tr.at(r, static_cast<int>(c)) = kappa.kappa(rows[c], it->second[r]);
            auto ker = tr.kernel();
            std::string witness = fmt::format("block g_{} x g_{} is singular", d, 1 - d);
            if (!ker.empty()) {
                witness += "; radical vector";
                for (size_t c = 0; c < rows.size(); ++c)
                    if (!ker[0][c].is_zero())
                        witness += fmt::format(" + {}*{}", ker[0][c].str(), basis.label(rows[c]));
            }
            rep.fail("nondegeneracy", witness);
            nondeg_ok = false;
            break;
        }
    }
    if (nondeg_ok) rep.pass("nondegeneracy");
    return rep;
}

Subspace::Subspace(BasisPtr basis, std::vector<RatTensor> span)
    : basis_(std::move(basis)), span_(std::move(span)) {
    for (const auto& v : span_) {
        if (v.basis() != basis_) throw AlgebraError("subspace: basis mismatch");
        if (v.arity() != 1) throw AlgebraError("subspace: generators must have arity 1");
    }
    RatMatrix m(static_cast<int>(span_.size()), basis_->dim());
    for (size_t r = 0; r < span_.size(); ++r)
        for (const auto& [idx, c] : span_[r].entries()) m.at(static_cast<int>(r), idx[0]) = c;
    if (m.rank() != static_cast<int>(span_.size()))
        throw AlgebraError("subspace: generators are linearly dependent");
}

Subspace Subspace::from_indices(const BasisPtr& basis, std::span<const int> ids) {
    std::vector<RatTensor> span;
    for (int id : ids) {
        RatTensor t(1, basis);
        t.add({id, -1, -1}, Rational(1));
        span.push_back(std::move(t));
    }
    return Subspace(basis, std::move(span));
}

std::optional<std::vector<Rational>> Subspace::coordinates(const RatTensor& v) const {
    RatMatrix m(basis_->dim(), dim());
    for (int c = 0; c < dim(); ++c)
        for (const auto& [idx, coeff] : span_[c].entries()) m.at(idx[0], c) = coeff;
    std::vector<Rational> b(basis_->dim());
    for (const auto& [idx, coeff] : v.entries()) b[idx[0]] = coeff;
    return m.solve(b);
}

bool Subspace::contains(const RatTensor& v) const { return coordinates(v).has_value(); }

Subspace orthogonal_complement(const Subspace& S, const GradedLieAlgebra& L,
                               const ShiftedMetric& kappa) {
    Report metric_rep = check_metric(L, kappa);
    if (!metric_rep.ok())
        throw AlgebraError("orthogonal_complement: kappa is not a valid shifted metric");
    int n = L.dim();
    RatMatrix m(S.dim(), n);
    for (int r = 0; r < S.dim(); ++r)
        for (int c = 0; c < n; ++c) {
            Rational acc;
            for (const auto& [idx, coeff] : S.span()[r].entries())
                acc += coeff * kappa.kappa(idx[0], c);
            m.at(r, c) = acc;
        }
    std::vector<RatTensor> gens;
    for (const auto& row : m.kernel()) {
        RatTensor t(1, L.basis());
        for (int c = 0; c < n; ++c) t.add({c, -1, -1}, row[c]);
        gens.push_back(std::move(t));
    }
    return Subspace(L.basis(), std::move(gens));
}

static bool subspace_equal(const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim()) return false;
    for (const auto& v : b.span())
        if (!a.contains(v)) return false;
    return true;
}

Report check_lagrangian_pair(const GradedLieAlgebra& L, const ShiftedMetric& kappa,
                             const Subspace& h_plus, const Subspace& h_minus,
                             const TupleFilter& filter) {
    Report rep("lagrangian-pair");
    auto check_side = [&](const Subspace& h, const char* name) {
        bool closed = true;
        for (int i = 0; i < h.dim() && closed; ++i)
            for (int j = 0; j < h.dim(); ++j) {
                RatTensor br = L.bracket(h.span()[i], h.span()[j]);
                std::vector<int> ids;
                for (const auto& [idx, c] : h.span()[i].entries()) ids.push_back(idx[0]);
                for (const auto& [idx, c] : h.span()[j].entries()) ids.push_back(idx[0]);
                if (!filter(ids)) continue;
                if (!h.contains(br)) {
                    rep.fail(fmt::format("{} bracket-closed", name),
                             fmt::format("generators {} and {} escape: {}", i, j, br.str()));
                    closed = false;
                    break;
                }
            }
        if (closed) rep.pass(fmt::format("{} bracket-closed", name));

        bool isotropic = true;
        for (int i = 0; i < h.dim() && isotropic; ++i)
            for (int j = 0; j < h.dim(); ++j) {
                Rational v = kappa.kappa(h.span()[i], h.span()[j]);
                if (!v.is_zero()) {
                    rep.fail(fmt::format("{} isotropic", name),
                             fmt::format("kappa(gen {}, gen {}) = {}", i, j, v.str()));
                    isotropic = false;
                    break;
                }
            }
        if (isotropic) rep.pass(fmt::format("{} isotropic", name));

        Subspace perp = orthogonal_complement(h, L, kappa);
        rep.require(fmt::format("{} equals own orthogonal", name), subspace_equal(h, perp),
                    fmt::format("dim {} = {}, dim perp = {}", name, h.dim(), perp.dim()));
    };
    check_side(h_plus, "h+");
    check_side(h_minus, "h-");

    bool dims = h_plus.dim() + h_minus.dim() == L.dim();
    RatMatrix all(h_plus.dim() + h_minus.dim(), L.dim());
    int r = 0;
    for (const auto& v : h_plus.span()) {
        for (const auto& [idx, c] : v.entries()) all.at(r, idx[0]) = c;
        ++r;
    }
    for (const auto& v : h_minus.span()) {
        for (const auto& [idx, c] : v.entries()) all.at(r, idx[0]) = c;
        ++r;
    }
    rep.require("direct sum decomposition", dims && all.rank() == L.dim(),
                fmt::format("dim h+ = {}, dim h- = {}, dim g = {}, combined rank = {}",
                            h_plus.dim(), h_minus.dim(), L.dim(), all.rank()));
    return rep;
}

std::pair<Subspace, Subspace> canonical_lagrangians(const GradedLieAlgebra& L,
                                                    const ShiftedMetric& kappa) {
    std::vector<int> plus, minus;
    for (int a = 0; a < L.dim(); ++a)
        (L.degree(a) <= 0 ? plus : minus).push_back(a);
    Subspace h_plus = Subspace::from_indices(L.basis(), plus);
    Subspace h_minus = Subspace::from_indices(L.basis(), minus);
    // degree additivity makes both halves subalgebras; verify anyway to catch
    // corrupted inputs where stored degrees lie about the brackets
    for (const auto* side : {&h_plus, &h_minus}) {
        for (int i = 0; i < side->dim(); ++i)
            for (int j = 0; j < side->dim(); ++j) {
                RatTensor br = L.bracket(side->span()[i], side->span()[j]);
                if (!side->contains(br))
                    throw AlgebraError(fmt::format("canonical_lagrangians: degree half not closed, "
                                                   "bracket escapes: {}", br.str()));
            }
    }
    (void)kappa;
    return {std::move(h_plus), std::move(h_minus)};
}

std::vector<std::pair<int, Rational>> coadjoint_action(const GradedLieAlgebra& L, int a, int b) {
    // x_a . eps^b = f_{ca}^b eps^c
    std::vector<std::pair<int, Rational>> out;
    for (int c = 0; c < L.dim(); ++c)
        for (const auto& [target, coeff] : L.bracket_basis(c, a))
            if (target == b && !coeff.is_zero()) out.emplace_back(c, coeff);
    return out;
}

} // namespace shifted
