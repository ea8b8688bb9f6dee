#ifndef EOSTRATA_WEYL_HPP
#define EOSTRATA_WEYL_HPP

// Finite Weyl group engine on top of rootdata: elements as per-component
// permutations, length, Bruhat order (type-specific fast paths plus an
// independent subword oracle), coset representatives, longest elements, and
// the Frobenius action.

#include "rootdata.hpp"

#include <functional>
#include <sstream>

namespace eostrata {

struct WeylElt {
    // p[c][i] = w(i), 0-based, one permutation per component.
    std::vector<std::vector<int>> p;
    friend bool operator==(const WeylElt& a, const WeylElt& b) { return a.p == b.p; }
    friend bool operator!=(const WeylElt& a, const WeylElt& b) { return !(a == b); }
    friend bool operator<(const WeylElt& a, const WeylElt& b) { return a.p < b.p; }
};

inline WeylElt weyl_identity(const RootSystem& rs) {
    WeylElt w;
    w.p.resize(rs.num_components());
    for (int c = 0; c < rs.num_components(); ++c) {
        w.p[c].resize(rs.components[c].dim);
        for (int i = 0; i < rs.components[c].dim; ++i) w.p[c][i] = i;
    }
    return w;
}

inline bool is_identity(const WeylElt& w) {
    for (auto& perm : w.p)
        for (int i = 0; i < (int)perm.size(); ++i)
            if (perm[i] != i) return false;
    return true;
}

// composition: (a*b)(i) = a(b(i))
inline WeylElt mul(const WeylElt& a, const WeylElt& b) {
    WeylElt out = a;
    for (size_t c = 0; c < a.p.size(); ++c)
        for (size_t i = 0; i < a.p[c].size(); ++i) out.p[c][i] = a.p[c][b.p[c][i]];
    return out;
}

inline WeylElt inv(const WeylElt& w) {
    WeylElt out = w;
    for (size_t c = 0; c < w.p.size(); ++c)
        for (size_t i = 0; i < w.p[c].size(); ++i) out.p[c][w.p[c][i]] = (int)i;
    return out;
}

inline WeylElt simple_reflection(const RootSystem& rs, int s) {
    WeylElt w = weyl_identity(rs);
    const Root& a = rs.simple_roots[s];
    const Component& comp = rs.components[a.comp];
    std::swap(w.p[a.comp][a.i], w.p[a.comp][a.j]);
    if (comp.kind == FactorKind::GSp && a.j != comp.dim - 1 - a.i) {
        int D = comp.dim;
        std::swap(w.p[a.comp][D - 1 - a.j], w.p[a.comp][D - 1 - a.i]);
    }
    return w;
}

// (w lam)_{w(i)} = lam_i
template <class V>
inline std::vector<std::vector<V>> apply_coweight(const WeylElt& w,
                                                  const std::vector<std::vector<V>>& lam) {
    auto out = lam;
    for (size_t c = 0; c < lam.size(); ++c)
        for (size_t i = 0; i < lam[c].size(); ++i) out[c][w.p[c][i]] = lam[c][i];
    return out;
}

inline Root apply_root(const RootSystem& rs, const WeylElt& w, const Root& r) {
    return canonical_root(rs, Root{r.comp, w.p[r.comp][r.i], w.p[r.comp][r.j]});
}

inline int length(const RootSystem& rs, const WeylElt& w) {
    int l = 0;
    for (auto& a : rs.positive_roots)
        if (!root_is_positive(apply_root(rs, w, a))) ++l;
    return l;
}

inline bool is_left_descent(const RootSystem& rs, const WeylElt& w, int s) {
    // l(s w) < l(w)  iff  w^{-1}(alpha_s) < 0; test via positions of alpha_s
    // under w^{-1}, i.e. alpha_s applied to inv(w).  Cheaper: w^{-1} of a
    // simple root is negative iff the root's preimage pair is inverted.
    const Root& a = rs.simple_roots[s];
    WeylElt wi = inv(w);
    return !root_is_positive(apply_root(rs, wi, a));
}

inline bool is_right_descent(const RootSystem& rs, const WeylElt& w, int s) {
    return !root_is_positive(apply_root(rs, w, rs.simple_roots[s]));
}

inline std::string one_line(const RootSystem& rs, const WeylElt& w) {
    std::ostringstream os;
    auto emit = [&](const std::vector<int>& perm) {
        os << '[';
        for (size_t i = 0; i < perm.size(); ++i) {
            if (i) os << ',';
            os << perm[i] + 1;
        }
        os << ']';
    };
    if (w.p.size() == 1) {
        emit(w.p[0]);
    } else {
        os << '[';
        for (size_t c = 0; c < w.p.size(); ++c) {
            if (c) os << ',';
            emit(w.p[c]);
        }
        os << ']';
    }
    return os.str();
}

// Deterministic global ordering: (length, lexicographic one-line notation).
inline void sort_elements(const RootSystem& rs, std::vector<WeylElt>& v) {
    std::sort(v.begin(), v.end(), [&](const WeylElt& a, const WeylElt& b) {
        int la = length(rs, a), lb = length(rs, b);
        if (la != lb) return la < lb;
        return a.p < b.p;
    });
}

inline std::vector<WeylElt> enumerate_subgroup(const RootSystem& rs,
                                               const std::vector<int>& J) {
    std::set<WeylElt> seen;
    std::vector<WeylElt> stack{weyl_identity(rs)};
    seen.insert(stack[0]);
    while (!stack.empty()) {
        WeylElt cur = stack.back();
        stack.pop_back();
        for (int s : J) {
            WeylElt nxt = mul(cur, simple_reflection(rs, s));
            if (seen.insert(nxt).second) stack.push_back(nxt);
        }
    }
    std::vector<WeylElt> out(seen.begin(), seen.end());
    sort_elements(rs, out);
    return out;
}

inline std::vector<int> all_simples(const RootSystem& rs) {
    std::vector<int> I(rs.num_simples());
    for (int s = 0; s < rs.num_simples(); ++s) I[s] = s;
    return I;
}

inline std::vector<WeylElt> enumerate_group(const RootSystem& rs) {
    return enumerate_subgroup(rs, all_simples(rs));
}

// Greedy left-descent peeling: returns (i1,...,ik) with w = s_{i1}...s_{ik}.
inline std::vector<int> reduced_word(const RootSystem& rs, WeylElt w) {
    std::vector<int> word;
    int l = length(rs, w);
    while (l > 0) {
        for (int s = 0; s < rs.num_simples(); ++s) {
            if (is_left_descent(rs, w, s)) {
                word.push_back(s);
                w = mul(simple_reflection(rs, s), w);
                --l;
                break;
            }
        }
    }
    return word;
}

namespace detail {
// Ehresmann / sorted-prefix criterion for one GL component.
inline bool bruhat_leq_gl(const std::vector<int>& u, const std::vector<int>& w) {
    int n = (int)u.size();
    std::vector<int> su, sw;
    for (int k = 0; k < n - 1; ++k) {
        su.insert(std::upper_bound(su.begin(), su.end(), u[k]), u[k]);
        sw.insert(std::upper_bound(sw.begin(), sw.end(), w[k]), w[k]);
        for (int t = 0; t <= k; ++t)
            if (su[t] > sw[t]) return false;
    }
    return true;
}

// Symplectic criterion: compare sorted prefixes of length 1..g only.
inline bool bruhat_leq_gsp(const std::vector<int>& u, const std::vector<int>& w, int g) {
    std::vector<int> su, sw;
    for (int k = 0; k < g; ++k) {
        su.insert(std::upper_bound(su.begin(), su.end(), u[k]), u[k]);
        sw.insert(std::upper_bound(sw.begin(), sw.end(), w[k]), w[k]);
        for (int t = 0; t <= k; ++t)
            if (su[t] > sw[t]) return false;
    }
    return true;
}
} // namespace detail

inline bool bruhat_leq(const RootSystem& rs, const WeylElt& u, const WeylElt& w) {
    for (int c = 0; c < rs.num_components(); ++c) {
        const Component& comp = rs.components[c];
        bool ok = comp.kind == FactorKind::GL
                      ? detail::bruhat_leq_gl(u.p[c], w.p[c])
                      : detail::bruhat_leq_gsp(u.p[c], w.p[c], comp.rank);
        if (!ok) return false;
    }
    return true;
}

// Independent subword oracle (exchange-property recursion); test-side only.
inline bool bruhat_leq_subword(const RootSystem& rs, const WeylElt& u, const WeylElt& w) {
    if (length(rs, u) > length(rs, w)) return false;
    if (is_identity(u)) return true;
    if (is_identity(w)) return false;
    int s = -1;
    for (int t = 0; t < rs.num_simples(); ++t)
        if (is_left_descent(rs, w, t)) { s = t; break; }
    WeylElt sw = mul(simple_reflection(rs, s), w);
    if (is_left_descent(rs, u, s))
        return bruhat_leq_subword(rs, mul(simple_reflection(rs, s), u), sw);
    return bruhat_leq_subword(rs, u, sw);
}

enum class CosetSide { Left, Right };

// Left: the set JW of minimal representatives of W_J \ W (w < sw for s in J).
inline std::vector<WeylElt> min_coset_reps(const RootSystem& rs, const std::vector<int>& J,
                                           CosetSide side = CosetSide::Left) {
    std::vector<WeylElt> out;
    for (auto& w : enumerate_group(rs)) {
        bool ok = true;
        for (int s : J) {
            bool desc = side == CosetSide::Left ? is_left_descent(rs, w, s)
                                                : is_right_descent(rs, w, s);
            if (desc) { ok = false; break; }
        }
        if (ok) out.push_back(w);
    }
    return out; // already in (length, lex) order
}

// w = w'_J * Jw with w'_J in W_J, Jw in JW, lengths additive.
inline std::pair<WeylElt, WeylElt> coset_decompose(const RootSystem& rs, const WeylElt& w,
                                                   const std::vector<int>& J) {
    WeylElt u = weyl_identity(rs), v = w;
    for (;;) {
        bool moved = false;
        for (int s : J) {
            if (is_left_descent(rs, v, s)) {
                WeylElt sr = simple_reflection(rs, s);
                v = mul(sr, v);
                u = mul(u, sr);
                moved = true;
                break;
            }
        }
        if (!moved) break;
    }
    return {u, v};
}

inline std::vector<WeylElt> double_coset_reps(const RootSystem& rs, const std::vector<int>& J,
                                              const std::vector<int>& K) {
    std::vector<WeylElt> out;
    for (auto& w : min_coset_reps(rs, J, CosetSide::Left)) {
        bool ok = true;
        for (int s : K)
            if (is_right_descent(rs, w, s)) { ok = false; break; }
        if (ok) out.push_back(w);
    }
    return out;
}

inline WeylElt longest_element(const RootSystem& rs, const std::vector<int>& J) {
    WeylElt w = weyl_identity(rs);
    for (;;) {
        bool moved = false;
        for (int s : J) {
            if (!is_right_descent(rs, w, s)) {
                w = mul(w, simple_reflection(rs, s));
                moved = true;
            }
        }
        if (!moved) return w;
    }
}

inline WeylElt longest_element(const RootSystem& rs) {
    return longest_element(rs, all_simples(rs));
}

inline WeylElt phi_apply(const RootSystem& rs, const WeylElt& w) {
    WeylElt out = w;
    for (int c = 0; c < rs.num_components(); ++c) {
        auto [tgt, flip] = phi_component_step(rs, c);
        int n = rs.components[c].dim;
        std::vector<int> q(n);
        for (int i = 0; i < n; ++i)
            q[i] = flip ? n - 1 - w.p[c][n - 1 - i] : w.p[c][i];
        out.p[tgt] = std::move(q);
    }
    return out;
}

inline WeylElt phi_power(const RootSystem& rs, WeylElt w, int k) {
    for (int t = 0; t < k; ++t) w = phi_apply(rs, w);
    return w;
}

inline std::vector<int> phi_set(const RootSystem& rs, const std::vector<int>& J) {
    std::vector<int> out;
    for (int s : J) out.push_back(phi_simple(rs, s));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace eostrata

#endif
