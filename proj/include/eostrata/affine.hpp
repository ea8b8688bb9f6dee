#ifndef EOSTRATA_AFFINE_HPP
#define EOSTRATA_AFFINE_HPP

// Extended affine Weyl group W~ = W x X_*(T): arithmetic, sigma-action,
// Iwahori-Matsumoto length, Omega, Newton/Kottwitz points, P-fundamental
// tests, the superbasic and slope-standard-form constructions, Demazure
// supports, and the bounded EO/Newton incidence search.
//
// An element w * t^lam acts on the standard basis by e_l -> p^{lam_l} e_{w(l)}.

#include "weyl.hpp"

#include <cassert>
#include <cstdint>

namespace eostrata {

struct ExtAffineElt {
    WeylElt w;
    Coweight lam;
    friend bool operator==(const ExtAffineElt& a, const ExtAffineElt& b) {
        return a.w == b.w && a.lam == b.lam;
    }
    friend bool operator!=(const ExtAffineElt& a, const ExtAffineElt& b) { return !(a == b); }
    friend bool operator<(const ExtAffineElt& a, const ExtAffineElt& b) {
        if (a.w != b.w) return a.w < b.w;
        return a.lam < b.lam;
    }
};

inline ExtAffineElt aff_identity(const RootSystem& rs) {
    return {weyl_identity(rs), zero_coweight(rs)};
}

inline ExtAffineElt from_weyl(const RootSystem& rs, const WeylElt& w) {
    return {w, zero_coweight(rs)};
}

inline ExtAffineElt from_translation(const WeylElt& id, const Coweight& lam) {
    return {id, lam};
}

// (w t^lam)(w' t^lam') = (w w') t^{(w'^{-1} lam) + lam'}
inline ExtAffineElt mul(const RootSystem&, const ExtAffineElt& x, const ExtAffineElt& y) {
    ExtAffineElt out;
    out.w = mul(x.w, y.w);
    out.lam = cw_add(apply_coweight<Int>(inv(y.w), x.lam), y.lam);
    return out;
}

inline ExtAffineElt inv(const RootSystem&, const ExtAffineElt& x) {
    ExtAffineElt out;
    out.w = inv(x.w);
    out.lam = cw_neg(apply_coweight<Int>(x.w, x.lam));
    return out;
}

inline ExtAffineElt sigma(const RootSystem& rs, const ExtAffineElt& x) {
    return {phi_apply(rs, x.w), phi_coweight(rs, x.lam)};
}

// Iwahori level function: c(alpha) = 0 for positive alpha, 1 for negative.
inline Int level(const Root& a) { return root_is_positive(a) ? 0 : 1; }

inline Int affine_length(const RootSystem& rs, const ExtAffineElt& x) {
    Int l = 0;
    for (auto& a : rs.positive_roots) {
        Int p = pairing(a, x.lam);
        if (root_is_positive(apply_root(rs, x.w, a)))
            l += p < 0 ? -p : p;
        else
            l += p - 1 < 0 ? 1 - p : p - 1;
    }
    return l;
}

inline bool is_in_omega(const RootSystem& rs, const ExtAffineElt& x) {
    return affine_length(rs, x) == 0;
}

inline Pi1Class kappa_point(const RootSystem& rs, const ExtAffineElt& x) {
    return pi1_image(rs, x.lam);
}

inline Int weyl_group_size(const RootSystem& rs) {
    Int sz = 1;
    for (auto& c : rs.components) {
        if (c.kind == FactorKind::GL)
            for (int k = 2; k <= c.dim; ++k) sz *= k;
        else {
            for (int k = 2; k <= c.rank; ++k) sz *= k;
            for (int k = 0; k < c.rank; ++k) sz *= 2;
        }
    }
    return sz;
}

// Raw Newton slope vector c/m: m minimal with x sigma(x) ... sigma^{m-1}(x) a
// pure translation t^c AND phi^m = id (so that (x sigma)^m is a genuine
// translation, not a translation twisted by a diagram automorphism).
inline RationalCoweight newton_point_raw(const RootSystem& rs, const ExtAffineElt& x) {
    Int bound = weyl_group_size(rs) * phi_order(rs) + 1;
    ExtAffineElt p = x;
    ExtAffineElt xs = x;
    for (Int m = 1; m <= bound; ++m) {
        if (is_identity(p.w) && m % phi_order(rs) == 0) {
            RationalCoweight nu = to_rational(p.lam);
            for (auto& v : nu)
                for (auto& r : v) r /= Rat(m);
            return nu;
        }
        xs = sigma(rs, xs);
        p = mul(rs, p, xs);
    }
    throw integrity_error("newton_point iteration failed to reach a pure translation");
}

inline RationalCoweight newton_point(const RootSystem& rs, const ExtAffineElt& x) {
    return dominant_rep<Rat>(rs, newton_point_raw(rs, x));
}

// ---------------------------------------------------------------------------
// Semistandard parabolics and fundamental elements
// ---------------------------------------------------------------------------

// Partition of the roots into Levi (0), N (1) and Nbar (2) parts, indexed by
// rs.all_roots.  Realized as u * P_{J'} * u^{-1} for a standard parabolic.
struct SemistandardParabolic {
    std::vector<int8_t> cls;
    std::vector<int> std_J; // a standard J' realizing the Levi
    WeylElt u;              // a conjugator realizing the partition
    bool is_full(const RootSystem& rs) const {
        for (auto c : cls)
            if (c != 0) return false;
        (void)rs;
        return true;
    }
};

// Roots of the standard Levi W_J: the W_J-orbit of the simple roots in J.
inline std::set<Root> levi_roots(const RootSystem& rs, const std::vector<int>& J) {
    std::set<Root> out;
    for (auto& w : enumerate_subgroup(rs, J))
        for (int s : J) out.insert(apply_root(rs, w, rs.simple_roots[s]));
    return out;
}

inline std::vector<SemistandardParabolic> enumerate_semistandard(const RootSystem& rs) {
    std::vector<SemistandardParabolic> out;
    std::set<std::vector<int8_t>> seen;
    std::vector<WeylElt> W = enumerate_group(rs);
    int k = rs.num_simples();
    // Descending masks put J' = I (hence P = G) first.
    for (int mask = (1 << k) - 1; mask >= 0; --mask) {
        std::vector<int> J;
        for (int s = 0; s < k; ++s)
            if (mask & (1 << s)) J.push_back(s);
        std::set<Root> phiJ = levi_roots(rs, J);
        for (auto& u : W) {
            std::vector<int8_t> cls(rs.all_roots.size(), 0);
            for (int a = 0; a < (int)rs.all_roots.size(); ++a) {
                const Root& r = rs.all_roots[a];
                int tgt = rs.root_index.at(apply_root(rs, u, r));
                if (phiJ.count(r))
                    cls[tgt] = 0;
                else
                    cls[tgt] = root_is_positive(r) ? 1 : 2;
            }
            if (seen.insert(cls).second) {
                SemistandardParabolic p;
                p.cls = std::move(cls);
                p.std_J = J;
                p.u = u;
                out.push_back(std::move(p));
            }
        }
    }
    return out;
}

inline bool is_P_fundamental(const RootSystem& rs, const ExtAffineElt& x,
                             const SemistandardParabolic& P) {
    for (int a = 0; a < (int)rs.all_roots.size(); ++a) {
        const Root& alpha = rs.all_roots[a];
        int8_t cl = P.cls[a];
        int b = rs.phi_root_idx[rs.root_index.at(apply_root(rs, x.w, alpha))];
        if (P.cls[b] != cl) return false;
        Int lhs = level(alpha) + pairing(alpha, x.lam);
        Int rhs = level(rs.all_roots[b]);
        if (cl == 0 && lhs != rhs) return false;
        if (cl == 1 && lhs < rhs) return false;
        if (cl == 2 && lhs > rhs) return false;
    }
    return true;
}

inline std::optional<SemistandardParabolic>
is_fundamental(const RootSystem& rs, const ExtAffineElt& x,
               const std::vector<SemistandardParabolic>& parabolics) {
    for (auto& P : parabolics)
        if (is_P_fundamental(rs, x, P)) return P;
    return std::nullopt;
}

inline std::optional<SemistandardParabolic> is_fundamental(const RootSystem& rs,
                                                           const ExtAffineElt& x) {
    return is_fundamental(rs, x, enumerate_semistandard(rs));
}

inline ExtAffineElt sigma_conjugate(const RootSystem& rs, const WeylElt& y,
                                    const ExtAffineElt& x) {
    // y x sigma(y)^{-1}
    ExtAffineElt yx = mul(rs, from_weyl(rs, y), x);
    return mul(rs, yx, inv(rs, from_weyl(rs, phi_apply(rs, y))));
}

// Is some W-sigma-conjugate of x fundamental?  Returns the witness conjugate.
inline std::optional<std::pair<WeylElt, SemistandardParabolic>>
fundamental_conjugate(const RootSystem& rs, const ExtAffineElt& x,
                      const std::vector<WeylElt>& W,
                      const std::vector<SemistandardParabolic>& parabolics) {
    for (auto& y : W) {
        auto hit = is_fundamental(rs, sigma_conjugate(rs, y, x), parabolics);
        if (hit) return std::make_pair(y, *hit);
    }
    return std::nullopt;
}

// Group the fundamental candidates w * t^{mu'} by (nu, kappa).
struct FundamentalClass {
    RationalCoweight nu;
    Pi1Class kappa;
    std::vector<ExtAffineElt> elements;
};

inline std::vector<FundamentalClass> fundamental_search(const RootSystem& rs,
                                                        const Coweight& mu) {
    if (!is_dominant(rs, mu) || !is_minuscule(rs, mu))
        throw spec_error("fundamental_search requires a minuscule dominant mu");
    std::vector<WeylElt> W = enumerate_group(rs);
    auto parabolics = enumerate_semistandard(rs);
    std::set<Coweight> orbit = minuscule_orbit(rs, mu);
    std::map<std::pair<std::vector<std::vector<Rat>>, Pi1Class>, std::vector<ExtAffineElt>>
        groups;
    WeylElt id = weyl_identity(rs);
    for (auto& w : W)
        for (auto& mup : orbit) {
            ExtAffineElt x{w, mup};
            if (!fundamental_conjugate(rs, x, W, parabolics)) continue;
            groups[{newton_point(rs, x), kappa_point(rs, x)}].push_back(x);
        }
    std::vector<FundamentalClass> out;
    for (auto& [key, elts] : groups) out.push_back({key.first, key.second, elts});
    return out;
}

// ---------------------------------------------------------------------------
// Superbasic representatives (one GL(n) factor with d copies, slope q/(nd))
// ---------------------------------------------------------------------------

inline ExtAffineElt superbasic_rep(const RootSystem& rs, Int q) {
    if (rs.spec.factors.size() != 1 || rs.spec.factors[0].kind != FactorKind::GL ||
        rs.spec.factors[0].flip)
        throw unsupported_error("superbasic_rep requires a single GL factor without flip");
    Int n = rs.spec.factors[0].rank, d = rs.spec.factors[0].copies;
    if (gcd_ll(q, n) != 1) throw spec_error("superbasic_rep requires gcd(q, n) = 1");
    ExtAffineElt x = aff_identity(rs);
    for (Int tau = 1; tau <= d; ++tau) {
        Int k = floor_div(tau * q, d) - floor_div((tau - 1) * q, d);
        int c = (int)tau - 1;
        for (Int l = 0; l < n; ++l) {
            x.w.p[c][l] = (int)mod_floor(l + k, n);
            x.lam[c][l] = floor_div(l + k, n);
        }
    }
    return x;
}

struct SuperbasicViolation {
    int property; // 1..5
    int m;        // product length (0 for the element itself)
    std::string detail;
};

struct SuperbasicReport {
    int window = 0;
    std::vector<SuperbasicViolation> violations;
    bool all_pass() const { return violations.empty(); }
};

inline bool in_levi(const RootSystem& rs, const WeylElt& w, const std::vector<int>& J_M) {
    return is_identity(coset_decompose(rs, w, J_M).second);
}

// Check properties (1)-(5) of the superbasic construction for x viewed inside
// the ambient group of rs, with M the standard Levi generated by J_M.
inline SuperbasicReport check_superbasic_properties(const RootSystem& rs,
                                                    const ExtAffineElt& x,
                                                    const std::vector<int>& J_M,
                                                    int window) {
    SuperbasicReport rep;
    rep.window = window;
    std::set<Root> phiM = levi_roots(rs, J_M);

    auto M_dominant = [&](RationalCoweight lam) {
        for (;;) {
            bool moved = false;
            for (int s : J_M)
                if (pairing_t<Rat>(rs.simple_roots[s], lam) < Rat(0)) {
                    lam = reflect_coweight<Rat>(rs, s, lam);
                    moved = true;
                }
            if (!moved) return lam;
        }
    };

    auto root_str = [&](const Root& a) {
        return "comp " + std::to_string(a.comp) + " e" + std::to_string(a.i + 1) + "-e" +
               std::to_string(a.j + 1);
    };

    ExtAffineElt y = x;
    ExtAffineElt xs = x;
    for (int m = 0; m <= window; ++m) {
        if (m > 0) {
            xs = sigma(rs, xs);
            y = mul(rs, y, xs);
        }
        int prop_base = m == 0 ? 0 : 5;
        if (!in_levi(rs, y.w, J_M))
            rep.violations.push_back({m == 0 ? 1 : 5, m, "finite part leaves the Levi"});
        RationalCoweight mu_y = M_dominant(to_rational(y.lam));
        RationalCoweight nu_y = M_dominant(newton_point_raw(rs, y));
        RationalCoweight diff = cw_add(mu_y, cw_neg(nu_y));
        for (auto& a : rs.positive_roots) {
            Rat v = pairing(a, diff);
            if (v >= Rat(2) || v <= Rat(-2))
                rep.violations.push_back(
                    {m == 0 ? 2 : 5, m, "|<alpha, mu - nu>| >= 2 at " + root_str(a)});
        }
        if (m == 0) {
            for (auto& a : rs.positive_roots) {
                Rat v = pairing(a, mu_y);
                if (v > Rat(1) || v < Rat(-1))
                    rep.violations.push_back({3, m, "mu not minuscule at " + root_str(a)});
            }
        }
        for (auto& a : rs.positive_roots) {
            if (phiM.count(a)) continue; // Phi_N = positive roots outside M
            if (pairing(a, mu_y) < Rat(-1))
                rep.violations.push_back(
                    {m == 0 ? 4 : 5, m, "<alpha, mu> < -1 at N-root " + root_str(a)});
        }
        (void)prop_base;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Slope standard form (monomial matrix of F in the reversed basis)
// ---------------------------------------------------------------------------

struct SlopeDatum {
    Int n = 0;
    Int h = 1;
    Int mult = 1;
};
using SlopeData = std::vector<SlopeDatum>;

inline void validate_slope_data(const SlopeData& sd, bool symplectic = false) {
    std::set<std::pair<Int, Int>> seen;
    for (auto& s : sd) {
        if (s.h < 1 || s.mult < 1) throw spec_error("slope data: h and mult must be >= 1");
        if (gcd_ll(s.n, s.h) != 1) throw spec_error("slope data: gcd(n, h) must be 1");
        if (!seen.insert({s.n, s.h}).second)
            throw spec_error("slope data: slopes must be pairwise distinct");
    }
    if (symplectic) {
        for (auto& s : sd) {
            bool found = false;
            for (auto& t : sd)
                if (t.h == s.h && t.n == s.h - s.n && t.mult == s.mult) found = true;
            if (!found)
                throw spec_error("slope data: symplectic symmetry requires matching 1-lambda");
        }
    }
}

inline Int slope_total_height(const SlopeData& sd) {
    Int t = 0;
    for (auto& s : sd) t += s.h * s.mult;
    return t;
}

// Simple indices of the Levi induced by the decomposition into simple
// isocrystals (one block of size h per multiplicity unit, in the given order).
inline std::vector<int> oort_levi(const SlopeData& sd) {
    std::vector<int> J;
    Int off = 0;
    for (auto& s : sd)
        for (Int m = 0; m < s.mult; ++m) {
            for (Int k = 0; k + 1 < s.h; ++k) J.push_back((int)(off + k));
            off += s.h;
        }
    return J;
}

inline ExtAffineElt oort_minimal_rep(const RootSystem& rs, const SlopeData& sd) {
    if (rs.num_components() != 1 || rs.components[0].kind != FactorKind::GL)
        throw unsupported_error("oort_minimal_rep is implemented for a single split GL factor");
    validate_slope_data(sd);
    if (slope_total_height(sd) != rs.components[0].dim)
        throw spec_error("slope data total height does not match the ambient rank");
    ExtAffineElt x = aff_identity(rs);
    Int off = 0;
    for (auto& s : sd)
        for (Int m = 0; m < s.mult; ++m) {
            // simple summand of slope n/h: F(e_j) = e_{j+n} inside a block of
            // height h with e_{j+h} = p e_j, then pass to the reversed f-basis
            // f_j = e_{h+1-j}
            for (Int j = 0; j < s.h; ++j) {
                Int t = s.h - 1 - j + s.n;
                Int e = mod_floor(t, s.h);
                x.w.p[0][off + j] = (int)(off + s.h - 1 - e);
                x.lam[0][off + j] = floor_div(t, s.h);
            }
            off += s.h;
        }
    return x;
}

// b I_M b^{-1} = I_M at root level (plain conjugation, no sigma twist).
inline bool conj_preserves_levi_iwahori(const RootSystem& rs, const ExtAffineElt& x,
                                        const std::vector<int>& J_M) {
    std::set<Root> phiM = levi_roots(rs, J_M);
    for (auto& a : phiM) {
        Root b = apply_root(rs, x.w, a);
        if (!phiM.count(b)) return false;
        if (level(a) + pairing(a, x.lam) != level(b)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Affine simple reflections, Demazure supports, bounded incidence search
// ---------------------------------------------------------------------------

// Finite simples followed by one s_0 = s_theta t^{theta_vee} per component
// that has roots (a GL(1) component contributes nothing).
inline std::vector<ExtAffineElt> affine_simples(const RootSystem& rs) {
    std::vector<ExtAffineElt> out;
    for (int s = 0; s < rs.num_simples(); ++s)
        out.push_back(from_weyl(rs, simple_reflection(rs, s)));
    for (int c = 0; c < rs.num_components(); ++c) {
        int D = rs.components[c].dim;
        if (D < 2) continue;
        ExtAffineElt s0 = aff_identity(rs);
        std::swap(s0.w.p[c][0], s0.w.p[c][D - 1]); // s_theta, theta = e_1 - e_D
        s0.lam[c][0] = 1;
        s0.lam[c][D - 1] = -1;
        out.push_back(s0);
    }
    return out;
}

// Decompose v = l_1 ... l_k * omega with the l_i affine simple letters and
// omega of length zero; returns the letter list and omega.
inline std::pair<std::vector<ExtAffineElt>, ExtAffineElt>
affine_decompose(const RootSystem& rs, ExtAffineElt v) {
    std::vector<ExtAffineElt> letters;
    auto simples = affine_simples(rs);
    Int l = affine_length(rs, v);
    while (l > 0) {
        bool found = false;
        for (auto& s : simples) {
            ExtAffineElt sv = mul(rs, s, v);
            Int lsv = affine_length(rs, sv);
            if (lsv < l) {
                letters.push_back(s);
                v = sv;
                l = lsv;
                found = true;
                break;
            }
        }
        if (!found) throw integrity_error("positive-length element with no left descent");
    }
    return {letters, v};
}

// supp(IuI * IvI) = {z : IzI subset IuI IvI}.
inline std::set<ExtAffineElt> demazure_support(const RootSystem& rs, const ExtAffineElt& u,
                                               const ExtAffineElt& v) {
    auto [letters, omega] = affine_decompose(rs, v);
    std::set<ExtAffineElt> S{u};
    for (auto& s : letters) {
        std::set<ExtAffineElt> nxt;
        for (auto& z : S) {
            ExtAffineElt zs = mul(rs, z, s);
            if (affine_length(rs, zs) > affine_length(rs, z)) {
                nxt.insert(zs);
            } else {
                nxt.insert(z);
                nxt.insert(zs);
            }
        }
        S.swap(nxt);
    }
    if (!is_identity(omega.w) || omega.lam != zero_coweight(rs)) {
        std::set<ExtAffineElt> shifted;
        for (auto& z : S) shifted.insert(mul(rs, z, omega));
        S.swap(shifted);
    }
    return S;
}

inline bool is_split(const RootSystem& rs) {
    for (auto& f : rs.spec.factors)
        if (f.copies != 1 || f.flip) return false;
    return true;
}

// Length-zero generators of Omega, one per component (plus nothing for GL(1),
// whose translations are added separately since they are all length zero).
inline std::vector<ExtAffineElt> omega_generators(const RootSystem& rs) {
    std::vector<ExtAffineElt> out;
    for (int c = 0; c < rs.num_components(); ++c) {
        const Component& comp = rs.components[c];
        ExtAffineElt g = aff_identity(rs);
        if (comp.kind == FactorKind::GL) {
            int n = comp.dim;
            for (int l = 0; l < n; ++l) g.w.p[c][l] = (int)mod_floor(l - 1, n);
            g.lam[c][0] = 1;
        } else {
            // w0 w_{0,J} t^{mu} for the Siegel J and mu = (1^g, 0^g)
            int g2 = comp.dim, gg = comp.rank;
            std::vector<int> perm(g2);
            for (int l = 0; l < g2; ++l) perm[l] = g2 - 1 - l; // w0
            // w_{0,J}: reverses 1..g and g+1..2g separately
            std::vector<int> wj(g2);
            for (int l = 0; l < gg; ++l) wj[l] = gg - 1 - l;
            for (int l = gg; l < g2; ++l) wj[l] = g2 - 1 - (l - gg);
            for (int l = 0; l < g2; ++l) g.w.p[c][l] = perm[wj[l]];
            for (int l = 0; l < gg; ++l) g.lam[c][l] = 1;
        }
        if (!is_in_omega(rs, g))
            throw integrity_error("constructed Omega generator has positive length");
        out.push_back(g);
    }
    return out;
}

enum class MeetResult { Yes, NoWithinBound, Unknown };

struct MeetOutcome {
    MeetResult result = MeetResult::Unknown;
    Int witness_length = -1; // length of the W_aff part of a witness y
};

// Default search bound l(w0) + 2<2 rho, mu>.
inline Int default_meet_bound(const RootSystem& rs, const Coweight& mu) {
    Int b = length(rs, longest_element(rs));
    for (auto& a : rs.positive_roots) b += 2 * pairing(a, mu);
    return b;
}

// Does the EO stratum of x_w meet the sigma-conjugacy class of x_b?
// Tests x_w in supp(I y^{-1} I x_b I y I) over y = omega * v with omega in
// Omega and v in W_aff of length <= bound.  Split configurations only.
inline MeetOutcome eo_newton_meets_core(const RootSystem& rs, const ExtAffineElt& x_w,
                                        const ExtAffineElt& x_b, Int bound) {
    if (!is_split(rs))
        throw unsupported_error("eo_newton_meets requires a split configuration");
    MeetOutcome out;
    if (kappa_point(rs, x_w) != kappa_point(rs, x_b)) {
        out.result = MeetResult::NoWithinBound;
        return out;
    }
    // Omega-conjugates of x_b.
    std::set<ExtAffineElt> conj{x_b};
    {
        std::vector<ExtAffineElt> stack{x_b};
        auto gens = omega_generators(rs);
        while (!stack.empty()) {
            ExtAffineElt cur = stack.back();
            stack.pop_back();
            for (auto& g : gens) {
                for (ExtAffineElt z : {mul(rs, mul(rs, g, cur), inv(rs, g)),
                                       mul(rs, mul(rs, inv(rs, g), cur), g)}) {
                    if (conj.insert(z).second) stack.push_back(z);
                }
            }
            if (conj.size() > 100000) {
                out.result = MeetResult::Unknown;
                return out;
            }
        }
    }
    // BFS over W_aff elements of length <= bound.
    std::vector<ExtAffineElt> frontier{aff_identity(rs)};
    std::set<ExtAffineElt> seen{aff_identity(rs)};
    auto simples = affine_simples(rs);
    for (Int l = 0; l <= bound; ++l) {
        for (auto& v : frontier) {
            ExtAffineElt vinv = inv(rs, v);
            for (auto& xb : conj) {
                auto S = demazure_support(rs, mul(rs, vinv, xb), v);
                if (S.count(x_w)) {
                    out.result = MeetResult::Yes;
                    out.witness_length = l;
                    return out;
                }
            }
        }
        if (l == bound) break;
        std::vector<ExtAffineElt> nxt;
        for (auto& v : frontier)
            for (auto& s : simples) {
                ExtAffineElt vs = mul(rs, v, s);
                if (affine_length(rs, vs) == l + 1 && seen.insert(vs).second)
                    nxt.push_back(vs);
            }
        frontier.swap(nxt);
    }
    out.result = MeetResult::NoWithinBound;
    return out;
}

} // namespace eostrata

#endif
