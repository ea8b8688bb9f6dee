#ifndef EOSTRATA_EO_ORDER_HPP
#define EOSTRATA_EO_ORDER_HPP

// The Ekedahl-Oort index set JW with the specialization order, closures,
// dimensions, Galois orbits, and poset topology.  The order is computed by the
// literal existential definition: w' <= w iff there is y in W_J with
// y w' x phi(y^{-1}) x^{-1} <= w in Bruhat order, x = w0 w_{0,phi(J)}.

#include "weyl.hpp"

namespace eostrata {

struct EOPoset {
    RootSystem rs;
    std::vector<int> J;
    std::vector<int> K; // K = w0 phi(J) w0 as a subset of I
    WeylElt x;          // x = w0 w_{0,phi(J)} = w_{0,K} w0
    std::vector<WeylElt> elements; // JW in (length, lex) order
    std::map<WeylElt, int> index;
    std::vector<std::vector<char>> leq; // leq[a][b]: elements[a] <= elements[b]
    int dim_par_j = 0;
    std::vector<std::vector<int>> orbits; // Galois orbits (phi^kappa_degree)
    std::vector<int> orbit_of;

    int idx(const WeylElt& w) const {
        auto it = index.find(w);
        if (it == index.end()) throw spec_error("element is not in JW");
        return it->second;
    }
};

// Conjugate the subset J by w0: s -> the simple reflection equal to w0 s w0.
inline std::vector<int> w0_conjugate_set(const RootSystem& rs, const std::vector<int>& J) {
    WeylElt w0 = longest_element(rs);
    std::vector<int> out;
    for (int s : J) {
        WeylElt c = mul(mul(w0, simple_reflection(rs, s)), w0);
        int found = -1;
        for (int t = 0; t < rs.num_simples(); ++t)
            if (c == simple_reflection(rs, t)) { found = t; break; }
        if (found < 0) throw integrity_error("w0-conjugate of a simple is not simple");
        out.push_back(found);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline EOPoset build_eo_poset(const RootSystem& rs, std::vector<int> J) {
    std::sort(J.begin(), J.end());
    std::vector<int> Jn = J;
    for (int t = 0; t < rs.spec.kappa_degree; ++t) Jn = phi_set(rs, Jn);
    if (Jn != J)
        throw spec_error("J is not stable under phi^kappa_degree");

    EOPoset po;
    po.rs = rs;
    po.J = J;
    WeylElt w0 = longest_element(rs);
    std::vector<int> phiJ = phi_set(rs, J);
    po.x = mul(w0, longest_element(rs, phiJ));
    po.K = w0_conjugate_set(rs, phiJ);
    if (po.x != mul(longest_element(rs, po.K), w0))
        throw integrity_error("the two factorizations of x disagree");

    po.elements = min_coset_reps(rs, J, CosetSide::Left);
    for (int k = 0; k < (int)po.elements.size(); ++k) po.index[po.elements[k]] = k;
    po.dim_par_j = length(rs, w0) - length(rs, longest_element(rs, J));

    std::vector<WeylElt> WJ = enumerate_subgroup(rs, J);
    WeylElt xinv = inv(po.x);
    int N = (int)po.elements.size();
    po.leq.assign(N, std::vector<char>(N, 0));
    for (int a = 0; a < N; ++a) {
        for (int b = 0; b < N; ++b) {
            const WeylElt& wp = po.elements[a];
            const WeylElt& w = po.elements[b];
            bool rel = false;
            for (auto& y : WJ) {
                WeylElt z = mul(mul(mul(mul(y, wp), po.x), phi_apply(rs, inv(y))), xinv);
                if (bruhat_leq(rs, z, w)) { rel = true; break; }
            }
            po.leq[a][b] = rel ? 1 : 0;
        }
    }

    // Theorem-backed structural checks; failure flags an implementation bug.
    for (int a = 0; a < N; ++a) {
        if (!po.leq[a][a]) throw integrity_error("specialization order is not reflexive");
        for (int b = 0; b < N; ++b) {
            if (a != b && po.leq[a][b] && po.leq[b][a])
                throw integrity_error("specialization order is not antisymmetric");
            if (a != b && po.leq[a][b] &&
                length(rs, po.elements[a]) >= length(rs, po.elements[b]))
                throw integrity_error("specialization order is not strictly graded by length");
            for (int c = 0; c < N; ++c)
                if (po.leq[a][b] && po.leq[b][c] && !po.leq[a][c])
                    throw integrity_error("specialization order is not transitive");
        }
    }

    // Galois orbits under phi^kappa_degree and equivariance of the order.
    po.orbit_of.assign(N, -1);
    for (int a = 0; a < N; ++a) {
        if (po.orbit_of[a] >= 0) continue;
        std::vector<int> orb;
        int cur = a;
        do {
            po.orbit_of[cur] = (int)po.orbits.size();
            orb.push_back(cur);
            cur = po.idx(phi_power(rs, po.elements[cur], rs.spec.kappa_degree));
        } while (cur != a);
        po.orbits.push_back(orb);
    }
    for (int a = 0; a < N; ++a) {
        int fa = po.idx(phi_power(rs, po.elements[a], rs.spec.kappa_degree));
        for (int b = 0; b < N; ++b) {
            int fb = po.idx(phi_power(rs, po.elements[b], rs.spec.kappa_degree));
            if (po.leq[a][b] != po.leq[fa][fb])
                throw integrity_error("specialization order is not Galois equivariant");
        }
    }
    // Quotient order: "for one representative" must equal "for all".
    for (auto& o1 : po.orbits)
        for (auto& o2 : po.orbits) {
            bool any = false;
            for (int a : o1)
                for (int b : o2) any = any || po.leq[a][b];
            if (!any) continue;
            for (int a : o1) {
                bool hit = false;
                for (int b : o2) hit = hit || po.leq[a][b];
                if (!hit)
                    throw integrity_error("quotient order representative semantics failed");
            }
        }
    return po;
}

inline std::vector<WeylElt> closure(const EOPoset& po, const WeylElt& w) {
    int b = po.idx(w);
    std::vector<WeylElt> out;
    for (int a = 0; a < (int)po.elements.size(); ++a)
        if (po.leq[a][b]) out.push_back(po.elements[a]);
    return out;
}

inline int dimension(const EOPoset& po, const WeylElt& w) {
    po.idx(w);
    return length(po.rs, w);
}

inline int codimension(const EOPoset& po, const WeylElt& w) {
    return po.dim_par_j - dimension(po, w);
}

inline bool galois_compatible(const EOPoset& po) {
    int N = (int)po.elements.size();
    for (int a = 0; a < N; ++a) {
        int fa = po.idx(phi_power(po.rs, po.elements[a], po.rs.spec.kappa_degree));
        for (int b = 0; b < N; ++b) {
            int fb = po.idx(phi_power(po.rs, po.elements[b], po.rs.spec.kappa_degree));
            if (po.leq[a][b] != po.leq[fa][fb]) return false;
        }
    }
    return true;
}

inline bool poset_is_open(const EOPoset& po, const std::vector<WeylElt>& S) {
    std::set<int> in;
    for (auto& w : S) in.insert(po.idx(w));
    for (int a : in)
        for (int b = 0; b < (int)po.elements.size(); ++b)
            if (po.leq[a][b] && !in.count(b)) return false;
    return true;
}

inline std::vector<WeylElt> specialization_closure(const EOPoset& po,
                                                   const std::vector<WeylElt>& S) {
    std::set<int> in;
    for (auto& w : S) in.insert(po.idx(w));
    std::vector<WeylElt> out;
    for (int a = 0; a < (int)po.elements.size(); ++a) {
        bool below = false;
        for (int b : in) below = below || po.leq[a][b];
        if (below) out.push_back(po.elements[a]);
    }
    return out;
}

// Covering relations of the specialization order, in element-index order.
inline std::vector<std::pair<int, int>> hasse_diagram(const EOPoset& po) {
    int N = (int)po.elements.size();
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            if (a == b || !po.leq[a][b]) continue;
            bool cover = true;
            for (int c = 0; c < N && cover; ++c)
                if (c != a && c != b && po.leq[a][c] && po.leq[c][b]) cover = false;
            if (cover) edges.emplace_back(a, b);
        }
    return edges;
}

inline WeylElt eo_maximum(const EOPoset& po) {
    // uw = w_{0,J} w0
    return mul(longest_element(po.rs, po.J), longest_element(po.rs));
}

} // namespace eostrata

#endif
