#ifndef EOSTRATA_STRATA_HPP
#define EOSTRATA_STRATA_HPP

// The strata atlas: enumeration of B(G,mu) by concave lattice polygons, the
// map b -> w(b), fundamental EO strata, Min(w) and generic Newton points, the
// order-correspondence check, and the Hilbert-Blumenthal fixture.

#include "affine.hpp"
#include "eo_order.hpp"

namespace eostrata {

struct NewtonPt {
    RationalCoweight nu;
    Pi1Class kappa;
    friend bool operator==(const NewtonPt& a, const NewtonPt& b) {
        return a.nu == b.nu && a.kappa == b.kappa;
    }
    friend bool operator<(const NewtonPt& a, const NewtonPt& b) {
        if (a.nu != b.nu) return a.nu < b.nu;
        return a.kappa < b.kappa;
    }
};

inline bool newton_leq(const RootSystem& rs, const NewtonPt& b1, const NewtonPt& b2) {
    return b1.kappa == b2.kappa && dominance_leq(rs, b1.nu, b2.nu);
}

struct BGmu {
    std::vector<NewtonPt> elements;         // mu-ordinary first, basic last
    std::vector<std::vector<char>> leq;
    int basic = -1;
    int mu_ordinary = -1;
};

namespace detail {

// Concave lattice polygons from (0,0) to (width, height): weakly decreasing
// slope vectors in which every slope a/b (lowest terms) has multiplicity
// divisible by b.  Slopes are bounded to [lo, hi].
inline void polygons_rec(Int width, Int height, Int x, Int y, Rat last, Rat lo, Rat hi,
                         std::vector<Rat>& cur, std::vector<std::vector<Rat>>& out) {
    if (x == width) {
        if (y == height) out.push_back(cur);
        return;
    }
    for (Int dx = 1; dx <= width - x; ++dx) {
        // dy range from slope bounds
        Rat lodx = lo * Rat(dx), hidx = hi * Rat(dx);
        Int dy_min = lodx.numerator() % lodx.denominator() == 0
                         ? lodx.numerator() / lodx.denominator()
                         : floor_div(lodx.numerator(), lodx.denominator()) + 1;
        Int dy_max = floor_div(hidx.numerator(), hidx.denominator());
        for (Int dy = dy_min; dy <= dy_max; ++dy) {
            Rat s(dy, dx);
            if (s >= last) continue;
            Int rx = width - x - dx;
            Rat ry = Rat(height - y - dy);
            // remaining slopes are < s and >= lo
            if (ry > s * Rat(rx)) continue;
            if (ry < lo * Rat(rx)) continue;
            size_t mark = cur.size();
            for (Int t = 0; t < dx; ++t) cur.push_back(s);
            polygons_rec(width, height, x + dx, y + dy, s, lo, hi, cur, out);
            cur.resize(mark);
        }
    }
}

inline std::vector<std::vector<Rat>> concave_lattice_polygons(Int width, Int height, Rat lo,
                                                              Rat hi) {
    std::vector<std::vector<Rat>> out;
    std::vector<Rat> cur;
    // "last" sentinel above any admissible slope
    polygons_rec(width, height, 0, 0, hi + Rat(1), lo, hi, cur, out);
    return out;
}

inline std::vector<Rat> flatten(const RationalCoweight& nu) {
    std::vector<Rat> out;
    for (auto& v : nu) out.insert(out.end(), v.begin(), v.end());
    return out;
}

} // namespace detail

inline BGmu enumerate_bgmu(const RootSystem& rs) {
    const Coweight& mu = rs.spec.mu;
    if (mu.empty()) throw spec_error("enumerate_bgmu requires mu in the GroupSpec");
    for (auto& f : rs.spec.factors)
        if (f.flip)
            throw unsupported_error("enumerate_bgmu does not support flip factors");
    RationalCoweight mubar = gamma_average(rs, mu);
    Pi1Class kappa_mu = pi1_image(rs, mu);

    // Per factor: candidate per-copy slope vectors (shared by all copies).
    std::vector<std::vector<std::vector<Rat>>> factor_candidates;
    int comp0 = 0;
    for (int f = 0; f < (int)rs.spec.factors.size(); ++f) {
        const FactorSpec& fs = rs.spec.factors[f];
        Int d = fs.copies;
        Int width = fs.kind == FactorKind::GL ? fs.rank : 2 * fs.rank;
        Int height = 0;
        for (Int cp = 0; cp < d; ++cp)
            for (Int v : mu[comp0 + cp]) height += v;
        Rat lo = mubar[comp0].back() * Rat(d);
        Rat hi = mubar[comp0].front() * Rat(d);
        std::vector<std::vector<Rat>> cands;
        for (auto& poly : detail::concave_lattice_polygons(width, height, lo, hi)) {
            std::vector<Rat> r(poly.size());
            for (size_t k = 0; k < poly.size(); ++k) r[k] = poly[k] / Rat(d);
            if (fs.kind == FactorKind::GSp) {
                Rat cs = r.front() + r.back();
                bool ok = true;
                for (size_t k = 0; k < r.size(); ++k)
                    if (r[k] + r[r.size() - 1 - k] != cs) ok = false;
                if (!ok) continue;
            }
            cands.push_back(std::move(r));
        }
        factor_candidates.push_back(std::move(cands));
        comp0 += (int)d;
    }

    // Cartesian product over factors; filter by dominance against mubar.
    std::vector<NewtonPt> found;
    std::vector<size_t> idx(rs.spec.factors.size(), 0);
    for (;;) {
        RationalCoweight nu(rs.num_components());
        bool valid = true;
        for (int c = 0; c < rs.num_components() && valid; ++c) {
            int f = rs.components[c].factor;
            if (factor_candidates[f].empty()) { valid = false; break; }
            nu[c] = factor_candidates[f][idx[f]];
        }
        if (!valid) break;
        if (dominance_leq(rs, nu, mubar)) {
            NewtonPt b{nu, kappa_mu};
            found.push_back(std::move(b));
        }
        // advance the product counter
        int f = 0;
        for (; f < (int)idx.size(); ++f) {
            if (++idx[f] < factor_candidates[f].size()) break;
            idx[f] = 0;
        }
        if (f == (int)idx.size()) break;
    }

    // mu-ordinary first: sort by flattened slope vector, descending.
    std::sort(found.begin(), found.end(), [&](const NewtonPt& a, const NewtonPt& b) {
        return detail::flatten(a.nu) > detail::flatten(b.nu);
    });

    BGmu bg;
    bg.elements = std::move(found);
    int N = (int)bg.elements.size();
    bg.leq.assign(N, std::vector<char>(N, 0));
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
            bg.leq[a][b] = newton_leq(rs, bg.elements[a], bg.elements[b]) ? 1 : 0;
    for (int a = 0; a < N; ++a) {
        bool min_all = true, max_all = true;
        for (int b = 0; b < N; ++b) {
            min_all = min_all && bg.leq[a][b];
            max_all = max_all && bg.leq[b][a];
        }
        if (min_all) bg.basic = a;
        if (max_all) bg.mu_ordinary = a;
    }
    if (bg.basic < 0 || bg.mu_ordinary < 0)
        throw integrity_error("B(G,mu) lacks a unique minimum or maximum");
    if (bg.elements[bg.mu_ordinary].nu != mubar)
        throw integrity_error("the maximum of B(G,mu) is not mubar");
    for (auto& b : bg.elements)
        if (b.kappa != kappa_mu) throw integrity_error("kappa mismatch inside B(G,mu)");
    return bg;
}

// J determined by mu: the simple reflections orthogonal to mu.
inline std::vector<int> type_from_mu(const RootSystem& rs) {
    if (rs.spec.mu.empty()) throw spec_error("GroupSpec has no mu");
    std::vector<int> J;
    for (int s = 0; s < rs.num_simples(); ++s)
        if (pairing(rs.simple_roots[s], rs.spec.mu) == 0) J.push_back(s);
    return J;
}

// The w0-twisted variant (type of [mu^{-1}]); equals the diagram involution
// image of type_from_mu.
inline std::vector<int> type_from_mu_inv(const RootSystem& rs) {
    if (rs.spec.mu.empty()) throw spec_error("GroupSpec has no mu");
    Coweight muinv = dominant_rep<Int>(rs, cw_neg(rs.spec.mu));
    std::vector<int> J;
    for (int s = 0; s < rs.num_simples(); ++s)
        if (pairing(rs.simple_roots[s], muinv) == 0) J.push_back(s);
    return J;
}

// x_w = w * x * t^mu
inline ExtAffineElt distinguished_element(const EOPoset& eo, const WeylElt& w,
                                          const Coweight& mu) {
    const RootSystem& rs = eo.rs;
    eo.idx(w);
    ExtAffineElt e = mul(rs, from_weyl(rs, w), from_weyl(rs, eo.x));
    return mul(rs, e, ExtAffineElt{weyl_identity(rs), mu});
}

struct StrataAtlas {
    RootSystem rs;
    std::vector<int> J;
    EOPoset eo;
    BGmu bg;
    bool split = false;
    std::vector<ExtAffineElt> x_w;  // indexed like eo.elements
    std::vector<char> fundamental;  // indexed like eo.elements
    std::vector<NewtonPt> b_w;      // (nu, kappa)(x_w)
    std::vector<int> w_of_b_idx;    // indexed like bg.elements; -1 if non-split
};

inline StrataAtlas build_atlas(const GroupSpec& spec) {
    StrataAtlas at;
    at.rs = build_root_system(spec);
    at.J = type_from_mu(at.rs);
    at.eo = build_eo_poset(at.rs, at.J);
    at.bg = enumerate_bgmu(at.rs);
    at.split = is_split(at.rs);
    std::vector<WeylElt> W = enumerate_group(at.rs);
    auto parabolics = enumerate_semistandard(at.rs);
    int N = (int)at.eo.elements.size();
    for (int k = 0; k < N; ++k) {
        ExtAffineElt x = distinguished_element(at.eo, at.eo.elements[k], spec.mu);
        at.x_w.push_back(x);
        at.fundamental.push_back(
            fundamental_conjugate(at.rs, x, W, parabolics).has_value() ? 1 : 0);
        at.b_w.push_back({newton_point(at.rs, x), kappa_point(at.rs, x)});
    }
    at.w_of_b_idx.assign(at.bg.elements.size(), -1);
    if (at.split) {
        for (int b = 0; b < (int)at.bg.elements.size(); ++b) {
            int hit = -1;
            for (int k = 0; k < N; ++k) {
                if (!at.fundamental[k] || !(at.b_w[k] == at.bg.elements[b])) continue;
                if (hit >= 0)
                    throw integrity_error("multiple fundamental strata map to one b");
                hit = k;
            }
            if (hit < 0) throw integrity_error("no fundamental stratum maps to some b");
            at.w_of_b_idx[b] = hit;
        }
    }
    return at;
}

inline std::vector<int> fundamental_strata(const StrataAtlas& at) {
    std::vector<int> out;
    for (int k = 0; k < (int)at.fundamental.size(); ++k)
        if (at.fundamental[k]) out.push_back(k);
    return out;
}

inline WeylElt w_of_b(const StrataAtlas& at, int b) {
    if (!at.split) throw unsupported_error("w_of_b requires a split configuration");
    return at.eo.elements[at.w_of_b_idx[b]];
}

// Min(w) = fundamental w' below w in the specialization order.
inline std::vector<int> min_set(const StrataAtlas& at, const WeylElt& w) {
    if (!at.split) throw unsupported_error("min_set requires a split configuration");
    int b = at.eo.idx(w);
    std::vector<int> out;
    for (int a = 0; a < (int)at.eo.elements.size(); ++a)
        if (at.fundamental[a] && at.eo.leq[a][b]) out.push_back(a);
    return out;
}

// All maximal b in B(G,mu) with w(b) in Min(w).
inline std::vector<int> generic_newton(const StrataAtlas& at, const WeylElt& w) {
    if (!at.split) throw unsupported_error("generic_newton requires a split configuration");
    std::vector<int> mins = min_set(at, w);
    std::vector<int> cand;
    for (int b = 0; b < (int)at.bg.elements.size(); ++b)
        if (std::find(mins.begin(), mins.end(), at.w_of_b_idx[b]) != mins.end())
            cand.push_back(b);
    std::vector<int> out;
    for (int b : cand) {
        bool maximal = true;
        for (int b2 : cand)
            if (b2 != b && at.bg.leq[b][b2]) maximal = false;
        if (maximal) out.push_back(b);
    }
    return out;
}

struct OrderCorrespondenceReport {
    bool pass = true;
    std::vector<std::string> counterexamples;
};

inline OrderCorrespondenceReport verify_order_correspondence(const StrataAtlas& at) {
    if (!at.split)
        throw unsupported_error("verify_order_correspondence requires a split configuration");
    OrderCorrespondenceReport rep;
    int N = (int)at.bg.elements.size();
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            bool lhs = at.bg.leq[a][b];
            bool rhs = at.eo.leq[at.w_of_b_idx[a]][at.w_of_b_idx[b]] != 0;
            if (lhs != rhs) {
                rep.pass = false;
                rep.counterexamples.push_back("b pair (" + std::to_string(a) + "," +
                                              std::to_string(b) + "): newton " +
                                              (lhs ? "<=" : "!<=") + " but EO " +
                                              (rhs ? "<=" : "!<="));
            }
        }
    return rep;
}

inline MeetOutcome eo_newton_meets(const StrataAtlas& at, const WeylElt& w,
                                   const ExtAffineElt& x_b, Int bound = -1) {
    ExtAffineElt x_w = at.x_w[at.eo.idx(w)];
    if (bound < 0) bound = default_meet_bound(at.rs, at.rs.spec.mu);
    return eo_newton_meets_core(at.rs, x_w, x_b, bound);
}

// ---------------------------------------------------------------------------
// Hilbert-Blumenthal fixture: GL(2) with g cyclically permuted copies.
// ---------------------------------------------------------------------------

struct HBFixture {
    GroupSpec spec;
    RootSystem rs;
    ExtAffineElt x, xprime, y;
    SemistandardParabolic P, Pprime;
    bool conj_identity = false;     // x = y^{-1} x' sigma(y)
    bool x_P_fundamental = false;
    bool xprime_Pprime_fundamental = false;
    bool distinct_sigma_orbits = false;
    bool same_newton_kappa = false;
    bool all_pass() const {
        return conj_identity && x_P_fundamental && xprime_Pprime_fundamental &&
               distinct_sigma_orbits && same_newton_kappa;
    }
};

// Borel-type parabolic for the fixture: M = T on every copy, Phi_N = {-alpha}
// on the listed (1-based) copies and {+alpha} elsewhere.
inline SemistandardParabolic hb_parabolic(const RootSystem& rs,
                                          const std::set<int>& lower_copies) {
    SemistandardParabolic P;
    P.cls.assign(rs.all_roots.size(), 0);
    for (int a = 0; a < (int)rs.all_roots.size(); ++a) {
        const Root& r = rs.all_roots[a];
        bool lower = lower_copies.count(r.comp + 1) > 0;
        bool pos = root_is_positive(r);
        P.cls[a] = (pos != lower) ? 1 : 2; // N holds +alpha, or -alpha on lower copies
    }
    P.u = weyl_identity(rs);
    return P;
}

namespace detail {

// Orientation propagation for the Borel-type parabolic of the fixture: the
// orientation flips after every s-carrying copy, and copies acting by a pure
// translation must stay upper.  Returns the set of lower copies (1-based).
inline std::set<int> hb_lower_copies(int g, const std::set<int>& phi1_copies) {
    std::vector<int> lower(g + 1, 0);
    for (int tau = 1; tau < g; ++tau)
        lower[tau + 1] = phi1_copies.count(tau) ? lower[tau] : 1 - lower[tau];
    int wrap = phi1_copies.count(g) ? lower[g] : 1 - lower[g];
    if (wrap != lower[1])
        throw unsupported_error("hb_fixture needs an even number of s-copies (even g)");
    std::set<int> out;
    for (int tau = 1; tau <= g; ++tau)
        if (lower[tau]) out.insert(tau);
    return out;
}

} // namespace detail

inline HBFixture hb_fixture(int g) {
    if (g < 6) throw spec_error("hb_fixture requires g >= 6");
    HBFixture fx;
    fx.spec.factors = {FactorSpec{FactorKind::GL, 2, g, false}};
    fx.spec.kappa_degree = 1;
    fx.spec.mu.assign(g, {1, 0});
    fx.rs = build_root_system(fx.spec);
    const RootSystem& rs = fx.rs;

    // per-copy building blocks of W~(GL_2): t^{(1,0)} or s t^{(1,0)}
    auto set_copy = [&](ExtAffineElt& e, int copy1b, bool s_part, Int l0, Int l1) {
        int c = copy1b - 1;
        e.w.p[c] = s_part ? std::vector<int>{1, 0} : std::vector<int>{0, 1};
        e.lam[c] = {l0, l1};
    };

    fx.x = aff_identity(rs);
    fx.xprime = aff_identity(rs);
    for (int tau = 1; tau <= g; ++tau) {
        bool x_is_phi1 = (tau == 5 || tau == 6);
        bool xp_is_phi1 = (tau == 3 || tau == 6);
        set_copy(fx.x, tau, !x_is_phi1, 1, 0);
        set_copy(fx.xprime, tau, !xp_is_phi1, 1, 0);
    }
    fx.y = aff_identity(rs);
    set_copy(fx.y, 3, true, 0, 0);
    set_copy(fx.y, 4, true, 1, -1);

    // for g = 6 these come out as the explicit choices {2,4} and {2,5}
    fx.P = hb_parabolic(rs, detail::hb_lower_copies(g, {5, 6}));
    fx.Pprime = hb_parabolic(rs, detail::hb_lower_copies(g, {3, 6}));

    ExtAffineElt rhs = mul(rs, mul(rs, inv(rs, fx.y), fx.xprime), sigma(rs, fx.y));
    fx.conj_identity = (rhs == fx.x);
    fx.x_P_fundamental = is_P_fundamental(rs, fx.x, fx.P);
    fx.xprime_Pprime_fundamental = is_P_fundamental(rs, fx.xprime, fx.Pprime);

    bool met = false;
    ExtAffineElt cur = fx.x;
    for (Int k = 0; k < phi_order(rs); ++k) {
        if (cur == fx.xprime) met = true;
        cur = sigma(rs, cur);
    }
    fx.distinct_sigma_orbits = !met;
    fx.same_newton_kappa = newton_point(rs, fx.x) == newton_point(rs, fx.xprime) &&
                           kappa_point(rs, fx.x) == kappa_point(rs, fx.xprime);
    return fx;
}

} // namespace eostrata

#endif
