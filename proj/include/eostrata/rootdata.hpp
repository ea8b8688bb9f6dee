#ifndef EOSTRATA_ROOTDATA_HPP
#define EOSTRATA_ROOTDATA_HPP

// Based root data for products of GL(n) and GSp(g) factors with unramified
// restriction of scalars.  A GSp(g) copy is modeled on 2g coordinates with the
// identification e_i - e_j = e_{2g+1-j} - e_{2g+1-i}; one canonical
// representative is stored per root so that GL and GSp share all code paths.

#include "core.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

namespace eostrata {

enum class FactorKind { GL, GSp };

struct FactorSpec {
    FactorKind kind = FactorKind::GL;
    int rank = 1; // n for GL, g (genus) for GSp
    int copies = 1;
    bool flip = false; // outer diagram involution applied once per Frobenius cycle
};

// Coweights are stored per component (= per factor copy) as coordinate vectors:
// length n for a GL copy, length 2g for a GSp copy.
using Coweight = std::vector<std::vector<Int>>;
using RationalCoweight = std::vector<std::vector<Rat>>;

struct GroupSpec {
    std::vector<FactorSpec> factors;
    int kappa_degree = 1;
    Coweight mu; // indexed by global component order
};

// Canonical root e_i - e_j (0-based coordinates) of one component.
struct Root {
    int comp = 0;
    int i = 0;
    int j = 0;
    friend bool operator==(const Root& a, const Root& b) {
        return a.comp == b.comp && a.i == b.i && a.j == b.j;
    }
    friend bool operator<(const Root& a, const Root& b) {
        if (a.comp != b.comp) return a.comp < b.comp;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

struct Component {
    int factor = 0;
    int copy = 0;
    FactorKind kind = FactorKind::GL;
    int rank = 1; // n or g
    int dim = 1;  // n or 2g
};

// One integer per factor: determinant valuation for GL, similitude valuation
// for GSp.  For a GL factor with flip the Galois group acts on the determinant
// by -1, so the coinvariants are Z/2 and the value is stored mod 2.
using Pi1Class = std::vector<Int>;

struct RootSystem {
    GroupSpec spec;
    std::vector<Component> components;
    std::vector<Root> positive_roots; // canonical representatives, i < j
    std::vector<Root> all_roots;      // positives followed by their negatives
    std::vector<Root> simple_roots;   // global simple-reflection index -> root
    std::vector<Coweight> simple_coroots;
    std::vector<int> simple_comp; // component of each simple root
    std::map<Root, int> root_index;
    std::vector<int> phi_root_idx;   // Frobenius action on all_roots, by index
    std::vector<int> phi_simple_idx; // Frobenius on simple indices

    int num_simples() const { return (int)simple_roots.size(); }
    int num_components() const { return (int)components.size(); }
    int total_dim() const {
        int t = 0;
        for (auto& c : components) t += c.dim;
        return t;
    }
};

inline Root canonical_root(const RootSystem& rs, Root r) {
    const Component& c = rs.components[r.comp];
    if (c.kind == FactorKind::GSp) {
        int D = c.dim;
        int i2 = D - 1 - r.j, j2 = D - 1 - r.i;
        if (i2 < r.i || (i2 == r.i && j2 < r.j)) { r.i = i2; r.j = j2; }
    }
    return r;
}

inline bool root_is_positive(const Root& r) { return r.i < r.j; }

inline Root negate_root(const RootSystem& rs, const Root& r) {
    return canonical_root(rs, Root{r.comp, r.j, r.i});
}

// Frobenius moves the content of component c to component next(c); the flip
// (diagram involution) is applied on the wrap-around step of a flip factor.
inline std::pair<int, bool> phi_component_step(const RootSystem& rs, int comp) {
    const Component& c = rs.components[comp];
    const FactorSpec& f = rs.spec.factors[c.factor];
    int next_copy = c.copy + 1;
    bool flip = false;
    if (next_copy == f.copies) {
        next_copy = 0;
        flip = f.flip;
    }
    return {comp - c.copy + next_copy, flip};
}

inline Root phi_root(const RootSystem& rs, const Root& r) {
    auto [tgt, flip] = phi_component_step(rs, r.comp);
    int n = rs.components[r.comp].dim;
    Root out{tgt, r.i, r.j};
    if (flip) { // alpha -> -w0(alpha): e_i - e_j -> e_{n-1-j} - e_{n-1-i}
        out.i = n - 1 - r.j;
        out.j = n - 1 - r.i;
    }
    return canonical_root(rs, out);
}

template <class V>
inline std::vector<std::vector<V>> phi_coweight_t(const RootSystem& rs,
                                                  const std::vector<std::vector<V>>& lam) {
    std::vector<std::vector<V>> out(lam.size());
    for (int c = 0; c < rs.num_components(); ++c) {
        auto [tgt, flip] = phi_component_step(rs, c);
        int n = rs.components[c].dim;
        std::vector<V> v(n);
        for (int k = 0; k < n; ++k) v[k] = flip ? V(-lam[c][n - 1 - k]) : lam[c][k];
        out[tgt] = std::move(v);
    }
    return out;
}

inline Coweight phi_coweight(const RootSystem& rs, const Coweight& lam) {
    return phi_coweight_t<Int>(rs, lam);
}
inline RationalCoweight phi_coweight(const RootSystem& rs, const RationalCoweight& lam) {
    return phi_coweight_t<Rat>(rs, lam);
}

inline int phi_simple(const RootSystem& rs, int s) { return rs.phi_simple_idx[s]; }

// Order of the Frobenius diagram automorphism phi.
inline Int phi_order(const RootSystem& rs) {
    Int ord = 1;
    for (auto& f : rs.spec.factors) ord = lcm_ll(ord, (Int)f.copies * (f.flip ? 2 : 1));
    return ord;
}

template <class V>
inline V pairing_t(const Root& a, const std::vector<std::vector<V>>& lam) {
    return lam[a.comp][a.i] - lam[a.comp][a.j];
}

inline Int pairing(const Root& a, const Coweight& lam) { return pairing_t<Int>(a, lam); }
inline Rat pairing(const Root& a, const RationalCoweight& lam) { return pairing_t<Rat>(a, lam); }

inline RationalCoweight to_rational(const Coweight& lam) {
    RationalCoweight out(lam.size());
    for (size_t c = 0; c < lam.size(); ++c)
        for (Int v : lam[c]) out[c].push_back(Rat(v));
    return out;
}

inline Coweight zero_coweight(const RootSystem& rs) {
    Coweight z(rs.num_components());
    for (int c = 0; c < rs.num_components(); ++c) z[c].assign(rs.components[c].dim, 0);
    return z;
}

template <class V>
inline std::vector<std::vector<V>> cw_add(const std::vector<std::vector<V>>& a,
                                          const std::vector<std::vector<V>>& b) {
    auto out = a;
    for (size_t c = 0; c < a.size(); ++c)
        for (size_t k = 0; k < a[c].size(); ++k) out[c][k] = a[c][k] + b[c][k];
    return out;
}

template <class V>
inline std::vector<std::vector<V>> cw_neg(const std::vector<std::vector<V>>& a) {
    auto out = a;
    for (auto& v : out)
        for (auto& x : v) x = -x;
    return out;
}

// Similitude coordinate of a GSp component vector.
template <class V>
inline V similitude(const RootSystem& rs, const std::vector<std::vector<V>>& lam, int comp) {
    int D = rs.components[comp].dim;
    return lam[comp][0] + lam[comp][D - 1];
}

inline void validate_coweight_shape(const RootSystem& rs, const Coweight& lam,
                                    const char* what) {
    if ((int)lam.size() != rs.num_components())
        throw spec_error(std::string(what) + ": expected " +
                         std::to_string(rs.num_components()) + " component vectors, got " +
                         std::to_string(lam.size()));
    for (int c = 0; c < rs.num_components(); ++c) {
        if ((int)lam[c].size() != rs.components[c].dim)
            throw spec_error(std::string(what) + ": component " + std::to_string(c) +
                             " must have length " + std::to_string(rs.components[c].dim));
        if (rs.components[c].kind == FactorKind::GSp) {
            int D = rs.components[c].dim;
            Int csim = lam[c][0] + lam[c][D - 1];
            for (int k = 0; k < D; ++k)
                if (lam[c][k] + lam[c][D - 1 - k] != csim)
                    throw spec_error(std::string(what) + ": component " + std::to_string(c) +
                                     " violates the GSp similitude constraint");
        }
    }
}

template <class V>
inline bool is_dominant(const RootSystem& rs, const std::vector<std::vector<V>>& lam) {
    for (auto& a : rs.simple_roots)
        if (pairing_t<V>(a, lam) < V(0)) return false;
    return true;
}

inline bool is_minuscule(const RootSystem& rs, const Coweight& mu) {
    for (auto& a : rs.positive_roots) {
        Int p = pairing(a, mu);
        if (p < -1 || p > 1) return false;
    }
    return true;
}

inline RootSystem build_root_system(const GroupSpec& spec) {
    if (spec.factors.empty()) throw spec_error("GroupSpec has no factors");
    if (spec.kappa_degree < 1) throw spec_error("kappa_degree must be >= 1");
    for (int f = 0; f < (int)spec.factors.size(); ++f) {
        const FactorSpec& fs = spec.factors[f];
        if (fs.rank < 1)
            throw spec_error("factor " + std::to_string(f) + ": rank must be >= 1");
        if (fs.copies < 1)
            throw spec_error("factor " + std::to_string(f) + ": copies must be >= 1");
        if (fs.kind == FactorKind::GSp && fs.flip)
            throw spec_error("factor " + std::to_string(f) + ": GSp does not admit flip");
    }

    RootSystem rs;
    rs.spec = spec;
    for (int f = 0; f < (int)spec.factors.size(); ++f) {
        const FactorSpec& fs = spec.factors[f];
        int dim = fs.kind == FactorKind::GL ? fs.rank : 2 * fs.rank;
        for (int cp = 0; cp < fs.copies; ++cp)
            rs.components.push_back(Component{f, cp, fs.kind, fs.rank, dim});
    }

    for (int c = 0; c < rs.num_components(); ++c) {
        const Component& comp = rs.components[c];
        int D = comp.dim;
        if (comp.kind == FactorKind::GL) {
            for (int i = 0; i < D; ++i)
                for (int j = i + 1; j < D; ++j) rs.positive_roots.push_back(Root{c, i, j});
            for (int i = 0; i + 1 < D; ++i) {
                rs.simple_roots.push_back(Root{c, i, i + 1});
                rs.simple_comp.push_back(c);
            }
        } else {
            std::set<Root> seen;
            for (int i = 0; i < D; ++i)
                for (int j = i + 1; j < D; ++j) {
                    Root r = canonical_root(rs, Root{c, i, j});
                    if (seen.insert(r).second) rs.positive_roots.push_back(r);
                }
            for (int i = 0; i < comp.rank; ++i) {
                rs.simple_roots.push_back(Root{c, i, i + 1});
                rs.simple_comp.push_back(c);
            }
        }
    }

    rs.all_roots = rs.positive_roots;
    for (auto& r : rs.positive_roots) rs.all_roots.push_back(negate_root(rs, r));
    for (int k = 0; k < (int)rs.all_roots.size(); ++k) rs.root_index[rs.all_roots[k]] = k;

    for (int s = 0; s < rs.num_simples(); ++s) {
        const Root& a = rs.simple_roots[s];
        Coweight cv = zero_coweight(rs);
        const Component& comp = rs.components[a.comp];
        if (comp.kind == FactorKind::GL || a.j == comp.dim - 1 - a.i) {
            cv[a.comp][a.i] = 1;
            cv[a.comp][a.j] = -1;
        } else { // short GSp root: coroot spreads over the symmetric pair
            int D = comp.dim;
            cv[a.comp][a.i] += 1;
            cv[a.comp][a.j] -= 1;
            cv[a.comp][D - 1 - a.j] += 1;
            cv[a.comp][D - 1 - a.i] -= 1;
        }
        rs.simple_coroots.push_back(std::move(cv));
    }

    rs.phi_root_idx.resize(rs.all_roots.size());
    for (int k = 0; k < (int)rs.all_roots.size(); ++k)
        rs.phi_root_idx[k] = rs.root_index.at(phi_root(rs, rs.all_roots[k]));
    rs.phi_simple_idx.resize(rs.num_simples());
    for (int s = 0; s < rs.num_simples(); ++s) {
        Root img = phi_root(rs, rs.simple_roots[s]);
        auto it = std::find(rs.simple_roots.begin(), rs.simple_roots.end(), img);
        if (it == rs.simple_roots.end())
            throw integrity_error("Frobenius does not preserve the simple roots");
        rs.phi_simple_idx[s] = (int)(it - rs.simple_roots.begin());
    }

    if (!spec.mu.empty()) {
        validate_coweight_shape(rs, spec.mu, "mu");
        if (!is_dominant(rs, spec.mu)) throw spec_error("mu is not dominant");
        if (!is_minuscule(rs, spec.mu)) throw spec_error("mu is not minuscule");
        for (int c = 0; c < rs.num_components(); ++c)
            if (rs.components[c].kind == FactorKind::GSp &&
                similitude(rs, spec.mu, c) != 1)
                throw spec_error("mu must have similitude coordinate 1 on GSp components");
    }
    return rs;
}

// Exact Gaussian elimination: solve sum_s c_s * coroot_s = target over Q.
// Returns the coefficient vector, or nullopt if the target is not in the span.
inline std::optional<std::vector<Rat>> solve_in_simple_coroots(const RootSystem& rs,
                                                               const RationalCoweight& target) {
    int rows = rs.total_dim(), cols = rs.num_simples();
    std::vector<std::vector<Rat>> A(rows, std::vector<Rat>(cols + 1, Rat(0)));
    int row0 = 0;
    for (int c = 0; c < rs.num_components(); ++c) {
        for (int k = 0; k < rs.components[c].dim; ++k) {
            for (int s = 0; s < cols; ++s)
                A[row0 + k][s] = Rat(rs.simple_coroots[s][c][k]);
            A[row0 + k][cols] = target[c][k];
        }
        row0 += rs.components[c].dim;
    }
    std::vector<int> pivot_col_of_row;
    int r = 0;
    for (int col = 0; col < cols && r < rows; ++col) {
        int p = -1;
        for (int rr = r; rr < rows; ++rr)
            if (A[rr][col] != Rat(0)) { p = rr; break; }
        if (p < 0) continue;
        std::swap(A[r], A[p]);
        Rat inv = Rat(1) / A[r][col];
        for (int cc = col; cc <= cols; ++cc) A[r][cc] *= inv;
        for (int rr = 0; rr < rows; ++rr) {
            if (rr == r || A[rr][col] == Rat(0)) continue;
            Rat f = A[rr][col];
            for (int cc = col; cc <= cols; ++cc) A[rr][cc] -= f * A[r][cc];
        }
        pivot_col_of_row.push_back(col);
        ++r;
    }
    for (int rr = r; rr < rows; ++rr)
        if (A[rr][cols] != Rat(0)) return std::nullopt;
    std::vector<Rat> coef(cols, Rat(0));
    for (int rr = 0; rr < r; ++rr) coef[pivot_col_of_row[rr]] = A[rr][cols];
    return coef;
}

inline bool dominance_leq(const RootSystem& rs, const RationalCoweight& nu1,
                          const RationalCoweight& nu2) {
    if (!is_dominant(rs, nu1) || !is_dominant(rs, nu2))
        throw spec_error("dominance_leq requires dominant coweights");
    RationalCoweight diff = cw_add(nu2, cw_neg(nu1));
    auto coef = solve_in_simple_coroots(rs, diff);
    if (!coef) return false;
    for (auto& c : *coef)
        if (c < Rat(0)) return false;
    return true;
}

// pi1 fold: one integer per factor.
inline Pi1Class pi1_image(const RootSystem& rs, const Coweight& lam) {
    Pi1Class out(rs.spec.factors.size(), 0);
    for (int c = 0; c < rs.num_components(); ++c) {
        const Component& comp = rs.components[c];
        if (comp.kind == FactorKind::GL)
            for (auto& v : lam[c]) out[comp.factor] += v;
        else
            out[comp.factor] += similitude(rs, lam, c);
    }
    for (int f = 0; f < (int)out.size(); ++f)
        if (rs.spec.factors[f].flip) out[f] = mod_floor(out[f], 2);
    return out;
}

// simple reflection acting on a coweight: s_a(lam) = lam - <a,lam> a^vee
template <class V>
inline std::vector<std::vector<V>> reflect_coweight(const RootSystem& rs, int s,
                                                    const std::vector<std::vector<V>>& lam) {
    V p = pairing_t<V>(rs.simple_roots[s], lam);
    auto out = lam;
    const Coweight& cv = rs.simple_coroots[s];
    for (size_t c = 0; c < out.size(); ++c)
        for (size_t k = 0; k < out[c].size(); ++k) out[c][k] -= p * V(cv[c][k]);
    return out;
}

inline std::set<Coweight> minuscule_orbit(const RootSystem& rs, const Coweight& mu) {
    std::set<Coweight> orbit;
    std::vector<Coweight> stack{mu};
    orbit.insert(mu);
    while (!stack.empty()) {
        Coweight cur = stack.back();
        stack.pop_back();
        for (int s = 0; s < rs.num_simples(); ++s) {
            Coweight nxt = reflect_coweight<Int>(rs, s, cur);
            if (orbit.insert(nxt).second) stack.push_back(nxt);
        }
    }
    return orbit;
}

inline RationalCoweight gamma_average(const RootSystem& rs, const Coweight& mu) {
    RationalCoweight mu0 = to_rational(mu);
    RationalCoweight acc = mu0;
    RationalCoweight cur = mu0;
    Int count = 1;
    for (;;) {
        cur = phi_coweight(rs, cur);
        if (cur == mu0) break;
        acc = cw_add(acc, cur);
        ++count;
        if (count > 4 * phi_order(rs))
            throw integrity_error("gamma_average failed to terminate");
    }
    for (auto& v : acc)
        for (auto& x : v) x /= Rat(count);
    return acc;
}

template <class V>
inline std::vector<std::vector<V>> dominant_rep(const RootSystem& rs,
                                                std::vector<std::vector<V>> lam) {
    for (;;) {
        bool moved = false;
        for (int s = 0; s < rs.num_simples(); ++s) {
            if (pairing_t<V>(rs.simple_roots[s], lam) < V(0)) {
                lam = reflect_coweight<V>(rs, s, lam);
                moved = true;
            }
        }
        if (!moved) return lam;
    }
}

} // namespace eostrata

#endif
