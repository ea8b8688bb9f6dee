#ifndef EOSTRATA_SIEGEL_HPP
#define EOSTRATA_SIEGEL_HPP

// Siegel-case dictionary for a single split GSp(g) factor with
// J = {s_1,...,s_{g-1}}: the {0,1}^g encoding of JW, elementary sequences,
// closed-form length, and the a-number.

#include "weyl.hpp"

namespace eostrata {

using EpsVector = std::vector<int>;        // entries in {0,1}, length g
using ElementarySequence = std::vector<int>; // phi(0..g), phi(0) = 0

inline void require_siegel(const RootSystem& rs) {
    if (rs.num_components() != 1 || rs.components[0].kind != FactorKind::GSp)
        throw unsupported_error("operation requires a single split GSp factor");
}

inline std::vector<int> siegel_J(const RootSystem& rs) {
    require_siegel(rs);
    std::vector<int> J;
    for (int s = 0; s + 1 < rs.num_simples(); ++s) J.push_back(s);
    return J;
}

inline bool in_JW(const RootSystem& rs, const WeylElt& w, const std::vector<int>& J) {
    for (int s : J)
        if (is_left_descent(rs, w, s)) return false;
    return true;
}

// eps_i = 0 iff i is among w^{-1}(1),...,w^{-1}(g)  (1-based statement).
inline EpsVector w_to_eps(const RootSystem& rs, const WeylElt& w) {
    require_siegel(rs);
    int g = rs.components[0].rank;
    if (!in_JW(rs, w, siegel_J(rs))) throw spec_error("w is not in JW");
    WeylElt wi = inv(w);
    std::vector<char> low(2 * g, 0);
    for (int a = 0; a < g; ++a) low[wi.p[0][a]] = 1;
    EpsVector eps(g);
    for (int i = 0; i < g; ++i) eps[i] = low[i] ? 0 : 1;
    return eps;
}

inline void validate_eps(const EpsVector& eps) {
    for (int e : eps)
        if (e != 0 && e != 1) throw spec_error("eps entries must be 0 or 1");
}

inline WeylElt eps_to_w(const RootSystem& rs, const EpsVector& eps) {
    require_siegel(rs);
    validate_eps(eps);
    int g = rs.components[0].rank;
    if ((int)eps.size() != g) throw spec_error("eps must have length g");
    for (auto& w : min_coset_reps(rs, siegel_J(rs)))
        if (w_to_eps(rs, w) == eps) return w;
    throw integrity_error("no coset representative matches eps");
}

inline int length_eps(const EpsVector& eps) {
    int g = (int)eps.size(), l = 0;
    for (int i = 1; i <= g; ++i) l += i * eps[g - i]; // sum i * eps_{g+1-i}
    return l;
}

// phi_w(i) = i - #{1 <= a <= g : w^{-1}(a) <= i}
inline ElementarySequence elem_seq(const RootSystem& rs, const WeylElt& w) {
    require_siegel(rs);
    int g = rs.components[0].rank;
    if (!in_JW(rs, w, siegel_J(rs))) throw spec_error("w is not in JW");
    WeylElt wi = inv(w);
    ElementarySequence phi(g + 1, 0);
    for (int i = 1; i <= g; ++i) {
        int cnt = 0;
        for (int a = 0; a < g; ++a)
            if (wi.p[0][a] < i) ++cnt;
        phi[i] = i - cnt;
    }
    return phi;
}

inline void validate_elem_seq(const ElementarySequence& phi) {
    if (phi.empty() || phi[0] != 0)
        throw spec_error("elementary sequence must start with phi(0) = 0");
    for (size_t i = 1; i < phi.size(); ++i)
        if (phi[i] < phi[i - 1] || phi[i] > phi[i - 1] + 1)
            throw spec_error("elementary sequence must satisfy phi(i-1) <= phi(i) <= phi(i-1)+1");
}

inline EpsVector elem_seq_to_eps(const ElementarySequence& phi) {
    validate_elem_seq(phi);
    EpsVector eps(phi.size() - 1);
    for (size_t i = 1; i < phi.size(); ++i) eps[i - 1] = phi[i] - phi[i - 1];
    return eps;
}

inline WeylElt elem_seq_to_w(const RootSystem& rs, const ElementarySequence& phi) {
    return eps_to_w(rs, elem_seq_to_eps(phi));
}

// Bruhat order restricted to JW: componentwise elementary-sequence comparison.
inline bool bruhat_on_JW(const RootSystem& rs, const WeylElt& wp, const WeylElt& w) {
    ElementarySequence a = elem_seq(rs, wp), b = elem_seq(rs, w);
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline int a_number(const EpsVector& eps) {
    int g = (int)eps.size(), ones = 0;
    for (int e : eps) ones += e;
    return g - ones;
}

} // namespace eostrata

#endif
