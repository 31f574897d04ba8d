#include "charcat/baer/baer.hpp"

#include <algorithm>

#include "charcat/core/errors.hpp"
#include "charcat/ff/fp.hpp"
#include "charcat/groups/homs.hpp"
#include "charcat/io/json_io.hpp"

namespace charcat::baer {

using ff::Mat;
using ff::Vec;

namespace {

// All vectors of F_p^n in little-endian counting order.
std::vector<Vec> all_vectors(std::uint64_t p, std::size_t n) {
    std::vector<Vec> out;
    Vec v(n, 0);
    while (true) {
        out.push_back(v);
        std::size_t i = 0;
        while (i < n && ++v[i] == p) v[i++] = 0;
        if (i == n) break;
    }
    return out;
}

Elem power_product(const groups::FiniteGroup& g, const std::vector<Elem>& base, const Vec& exps) {
    Elem acc = g.identity();
    for (std::size_t i = 0; i < base.size(); ++i)
        acc = g.mul(acc, g.pow(base[i], static_cast<std::int64_t>(exps[i])));
    return acc;
}

// f^T G_k = G_k f* for every Gram matrix, i.e. b(fu, v) = b(u, f* v).
bool is_adjoint_pair(const ff::BilinearMap& b, const Mat& f, const Mat& fs) {
    const Mat ft = f.transpose();
    return std::all_of(b.grams.begin(), b.grams.end(), [&](const Mat& gk) { return ft * gk == gk * fs; });
}

} // namespace

bool is_class2_exponent_p(const groups::FiniteGroup& g, std::uint64_t p) {
    if (p == 2 || !ff::is_prime(p)) throw InvalidInput("the prime must be odd");
    std::size_t n = g.order();
    while (n % p == 0) n /= p;
    if (n != 1) return false;
    if (p % g.exponent() != 0) return false;
    std::vector<bool> central(g.order(), true);
    for (Elem x = 0; x < g.order(); ++x)
        for (Elem y = 0; y < g.order() && central[x]; ++y) central[x] = g.mul(x, y) == g.mul(y, x);
    for (Elem x = 0; x < g.order(); ++x)
        for (Elem y = 0; y < g.order(); ++y)
            if (!central[g.commutator(x, y)]) return false;
    return true;
}

std::pair<Mat, Mat> BaerCoordinates::induced(const GroupHom& phi) const {
    const std::size_t n = v_lifts.size();
    const std::size_t m = w_basis.size();
    Mat alpha(p, n, n);
    Mat beta(p, m, m);
    for (std::size_t j = 0; j < n; ++j) {
        const Vec& c = v_coord[phi(v_lifts[j])];
        for (std::size_t i = 0; i < n; ++i) alpha(i, j) = c[i];
    }
    for (std::size_t j = 0; j < m; ++j) {
        const Vec& c = w_coord[phi(w_basis[j])];
        if (c.empty()) throw InvalidInput("map does not preserve the derived subgroup");
        for (std::size_t i = 0; i < m; ++i) beta(i, j) = c[i];
    }
    return {alpha, beta};
}

BaerCoordinates bimap_from_group(const GroupRef& g, std::uint64_t p) {
    if (!is_class2_exponent_p(*g, p))
        throw InvalidInput(g->id() + " is not a p-group of class at most 2 and exponent p");
    BaerCoordinates c;
    c.group = g;
    c.p = p;
    c.derived = groups::derived_subgroup(g);

    const std::size_t derived_size = c.derived.size();
    std::vector<Elem> seed;
    std::size_t span_size = 1;
    for (Elem x : c.derived.members()) {
        if (x == g->identity()) continue;
        seed.push_back(x);
        const std::size_t s = groups::subgroup_closure(g, seed).size();
        if (s > span_size) {
            span_size = s;
            c.w_basis.push_back(x);
        } else {
            seed.pop_back();
        }
        if (span_size == derived_size) break;
    }
    // Each accepted lift multiplies the span by p, so the cosets of the lifts are independent.
    for (Elem x = 0; x < g->order() && span_size < g->order(); ++x) {
        seed.push_back(x);
        const std::size_t s = groups::subgroup_closure(g, seed).size();
        if (s > span_size) {
            span_size = s;
            c.v_lifts.push_back(x);
        } else {
            seed.pop_back();
        }
    }
    const std::size_t m = c.w_basis.size();
    c.w_coord.assign(g->order(), {});
    for (const Vec& w : all_vectors(p, m)) c.w_coord[power_product(*g, c.w_basis, w)] = w;
    c.v_coord.assign(g->order(), {});
    const std::size_t n = c.v_lifts.size();
    for (const Vec& v : all_vectors(p, n)) {
        const Elem rep = power_product(*g, c.v_lifts, v);
        for (Elem d : c.derived.members()) c.v_coord[g->mul(rep, d)] = v;
    }

    std::vector<Mat> grams(m, Mat(p, n, n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vec& w = c.w_coord[g->commutator(c.v_lifts[i], c.v_lifts[j])];
            for (std::size_t k = 0; k < m; ++k) grams[k](i, j) = w[k];
        }
    c.b = ff::BilinearMap(p, n, m, std::move(grams));
    return c;
}

groups::FiniteGroup group_from_bimap(const ff::BilinearMap& b, std::string id) {
    const std::uint64_t p = b.p;
    if (p == 2) throw InvalidInput("the prime must be odd");
    if (!b.is_alternating()) throw InvalidInput("the bimap must be alternating");
    const std::size_t n = b.v_dim;
    const std::size_t m = b.w_dim;
    const auto elems = all_vectors(p, n + m);
    const ff::Residue half = ff::inv_mod(2, p);
    auto encode = [&](const Vec& x) {
        Elem idx = 0;
        for (std::size_t i = x.size(); i-- > 0;) idx = static_cast<Elem>(idx * p + x[i]);
        return idx;
    };
    auto label = [&](Elem a) {
        const Vec& x = elems[a];
        std::string s = "(";
        for (std::size_t i = 0; i < n + m; ++i) {
            if (i == n) s += ";";
            else if (i > 0) s += ",";
            s += std::to_string(x[i]);
        }
        return s + ")";
    };
    auto mul = [&](Elem a, Elem c) {
        const Vec& x = elems[a];
        const Vec& y = elems[c];
        const std::span<const ff::Residue> u(x.data(), n);
        const std::span<const ff::Residue> v(y.data(), n);
        const Vec bw = b.eval(u, v);
        Vec z(n + m);
        for (std::size_t i = 0; i < n; ++i) z[i] = (x[i] + y[i]) % p;
        for (std::size_t k = 0; k < m; ++k) z[n + k] = (x[n + k] + y[n + k] + half * bw[k]) % p;
        return encode(z);
    };
    return groups::from_rule(std::move(id), elems.size(), label, mul);
}

AdjointAlgebra adjoint_algebra(const ff::BilinearMap& b) {
    const std::uint64_t p = b.p;
    const std::size_t n = b.v_dim;
    const std::size_t n2 = n * n;
    // Unknowns: f_{ri} at r*n+i, then f*_{sj} at n2 + s*n+j.
    Mat system(p, std::max<std::size_t>(1, b.w_dim * n2), 2 * n2);
    std::size_t row = 0;
    for (const Mat& gk : b.grams)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j, ++row) {
                for (std::size_t r = 0; r < n; ++r)
                    system(row, r * n + i) = (system(row, r * n + i) + gk(r, j)) % p;
                for (std::size_t s = 0; s < n; ++s)
                    system(row, n2 + s * n + j) = (system(row, n2 + s * n + j) + ff::neg_mod(gk(i, s), p)) % p;
            }
    AdjointAlgebra out;
    const ff::Subspace sol = system.kernel();
    std::vector<Mat> fs;
    for (const Vec& x : sol.basis()) {
        const std::span<const ff::Residue> all(x);
        Mat f = Mat::unflatten(p, n, n, all.subspan(0, n2));
        Mat fstar = Mat::unflatten(p, n, n, all.subspan(n2, n2));
        fs.push_back(f);
        out.pairs.emplace_back(std::move(f), std::move(fstar));
    }
    out.algebra = ff::algebra_closure(p, n, fs, true);
    return out;
}

Report baer_morphism_checks(const BaerCoordinates& c, const std::vector<GroupHom>& auts, Perturbation perturb) {
    Report r("Baer functor on " + c.group->id());
    const auto adj = adjoint_algebra(c.b);
    std::vector<std::pair<Mat, Mat>> induced;
    for (const auto& phi : auts) {
        auto [alpha, beta] = c.induced(phi);
        if (perturb == Perturbation::TransposeAlpha) alpha = alpha.transpose();
        if (perturb == Perturbation::TransposeBeta) beta = beta.transpose();
        induced.emplace_back(std::move(alpha), std::move(beta));
    }
    r.law("B(phi) is a bimap morphism");
    r.law("B(phi psi) = B(phi) B(psi)");
    r.law("alpha f alpha^-1 has adjoint alpha f* alpha^-1");
    for (std::size_t i = 0; i < auts.size(); ++i) {
        const auto& [alpha, beta] = induced[i];
        r.check("B(phi) is a bimap morphism", ff::is_bimap_morphism(c.b, c.b, alpha, beta),
                [&] { return std::vector<std::string>{"aut#" + std::to_string(i)}; });
        const auto alpha_inv = alpha.inverse();
        for (std::size_t t = 0; t < adj.pairs.size(); ++t) {
            const bool ok = alpha_inv && is_adjoint_pair(c.b, alpha * adj.pairs[t].first * *alpha_inv,
                                                         alpha * adj.pairs[t].second * *alpha_inv);
            r.check("alpha f alpha^-1 has adjoint alpha f* alpha^-1", ok, [&] {
                return std::vector<std::string>{"aut#" + std::to_string(i), "pair#" + std::to_string(t)};
            });
        }
    }
    for (std::size_t i = 0; i < auts.size(); ++i)
        for (std::size_t j = 0; j < auts.size(); ++j) {
            auto [alpha, beta] = c.induced(groups::compose(auts[i], auts[j]));
            if (perturb == Perturbation::TransposeAlpha) alpha = alpha.transpose();
            if (perturb == Perturbation::TransposeBeta) beta = beta.transpose();
            const bool ok = alpha == induced[i].first * induced[j].first && beta == induced[i].second * induced[j].second;
            r.check("B(phi psi) = B(phi) B(psi)", ok, [&] {
                return std::vector<std::string>{"aut#" + std::to_string(i), "aut#" + std::to_string(j)};
            });
        }
    return r;
}

PipelineResult pipeline(const GroupRef& g, std::uint64_t p, const Config& cfg) {
    PipelineResult res{bimap_from_group(g, p), {}, {}, {}, {}, {}, false, Report("Baer pipeline on " + g->id())};
    const auto& c = res.coords;
    const std::size_t n = c.b.v_dim;
    res.adjoint = adjoint_algebra(c.b);
    res.radical = ff::jacobson_radical(res.adjoint.algebra);

    std::vector<Vec> images;
    for (const Mat& j : ff::subspace_matrices(res.radical, n))
        for (std::size_t i = 0; i < n; ++i) images.push_back(j.col(i));
    res.jv = ff::Subspace::span(p, n, images);

    std::vector<Elem> members;
    for (Elem x = 0; x < g->order(); ++x)
        if (res.jv.contains(c.v_coord[x])) members.push_back(x);
    res.h = Subgroup(g, std::move(members));

    res.certificate = counitals::is_characteristic(res.h, cfg);
    res.brute_force = counitals::brute_force_characteristic(res.h, cfg);

    Report& r = res.checks;
    r.record("b_G is alternating", c.b.is_alternating());
    r.record("A(b) is a unital subalgebra",
             is_product_closed(res.adjoint.algebra) && res.adjoint.algebra.contains(Mat::identity(p, n)));
    r.law("(fg)* = g* f*");
    for (std::size_t i = 0; i < res.adjoint.pairs.size(); ++i)
        for (std::size_t j = 0; j < res.adjoint.pairs.size(); ++j) {
            const auto& [f, fs] = res.adjoint.pairs[i];
            const auto& [h, hs] = res.adjoint.pairs[j];
            r.check("(fg)* = g* f*", is_adjoint_pair(c.b, f * h, hs * fs), [&] {
                return std::vector<std::string>{"pair#" + std::to_string(i), "pair#" + std::to_string(j)};
            });
        }
    r.record("J(A) is contained in A", res.radical.is_subspace_of(res.adjoint.algebra.as_subspace()));

    const auto group_back = make_ref(group_from_bimap(c.b, "G(b_" + g->id() + ")"));
    r.record("G(b_G) is isomorphic to G", groups::find_isomorphism(g, group_back, cfg).has_value());

    const auto auts = groups::automorphism_generators(g, cfg);
    r.law("alpha(J.V) = J.V");
    for (std::size_t i = 0; i < auts.gens.size(); ++i)
        r.check("alpha(J.V) = J.V", res.jv.image_under(c.induced(auts.gens[i]).first) == res.jv,
                [&] { return std::vector<std::string>{"aut#" + std::to_string(i)}; });
    r.merge(baer_morphism_checks(c, auts.gens), "functor: ");
    r.record("H is characteristic", res.certificate.holds);
    r.record("brute force agrees", res.brute_force == res.certificate.holds);
    return res;
}

nlohmann::json PipelineResult::to_json() const {
    nlohmann::json j;
    j["group"] = coords.group->id();
    j["p"] = coords.p;
    auto grams = nlohmann::json::array();
    for (const auto& gk : coords.b.grams) grams.push_back(io::to_json(gk));
    j["grams"] = grams;
    j["v_dim"] = coords.b.v_dim;
    j["w_dim"] = coords.b.w_dim;
    auto basis = nlohmann::json::array();
    for (const auto& a : adjoint.algebra.basis) basis.push_back(io::to_json(a));
    j["algebra_basis"] = basis;
    j["radical"] = io::to_json(radical);
    j["jv"] = io::to_json(jv);
    j["subgroup"] = h.members();
    j["subgroup_labels"] = io::member_labels(h);
    j["characteristic"] = certificate.holds;
    if (certificate.certificate) j["certificate"] = certificate.certificate->to_json();
    if (certificate.counterexample) j["counterexample"] = certificate.counterexample->to_json();
    j["brute_force"] = brute_force;
    j["checks"] = checks.to_json();
    return j;
}

} // namespace charcat::baer
