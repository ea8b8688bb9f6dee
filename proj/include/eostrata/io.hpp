#ifndef EOSTRATA_IO_HPP
#define EOSTRATA_IO_HPP

// JSON ingestion of GroupSpec, serializations of elements and reports, DOT and
// CSV exports.  All output is deterministic: ordered JSON, fixed column order,
// and the global (length, lexicographic) sort rule inherited from the library.

#include "siegel.hpp"
#include "strata.hpp"

#include <json.hpp>

namespace eostrata {

using ojson = nlohmann::ordered_json;

inline std::pair<int, int> line_col_of_offset(const std::string& text, size_t byte) {
    int line = 1, col = 1;
    for (size_t k = 0; k < byte && k < text.size(); ++k) {
        if (text[k] == '\n') {
            ++line;
            col = 1;
        } else
            ++col;
    }
    return {line, col};
}

inline GroupSpec parse_group_spec(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, col] = line_col_of_offset(text, e.byte > 0 ? e.byte - 1 : 0);
        throw parse_error("JSON parse error at line " + std::to_string(line) + ", column " +
                          std::to_string(col) + ": " + e.what());
    }
    try {
        GroupSpec spec;
        if (!j.contains("factors") || !j["factors"].is_array() || j["factors"].empty())
            throw parse_error("spec must contain a non-empty \"factors\" array");
        for (auto& jf : j["factors"]) {
            FactorSpec f;
            std::string kind = jf.at("kind").get<std::string>();
            if (kind == "GL") {
                f.kind = FactorKind::GL;
                f.rank = jf.at("n").get<int>();
            } else if (kind == "GSp") {
                f.kind = FactorKind::GSp;
                f.rank = jf.at("g").get<int>();
            } else {
                throw parse_error("unknown factor kind \"" + kind + "\"");
            }
            f.copies = jf.value("copies", 1);
            f.flip = jf.value("flip", false);
            spec.factors.push_back(f);
        }
        spec.kappa_degree = j.value("kappa_degree", 1);
        if (!j.contains("mu") || !j["mu"].is_array())
            throw parse_error("spec must contain a \"mu\" array of integer vectors");
        for (auto& jv : j["mu"]) spec.mu.push_back(jv.get<std::vector<Int>>());
        return spec;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("malformed spec: ") + e.what());
    }
}

// Canonical JSON of a spec; used for cache keys and report headers.
inline std::string canonical_spec_json(const GroupSpec& spec) {
    ojson j;
    j["factors"] = ojson::array();
    for (auto& f : spec.factors) {
        ojson jf;
        jf["kind"] = f.kind == FactorKind::GL ? "GL" : "GSp";
        jf[f.kind == FactorKind::GL ? "n" : "g"] = f.rank;
        jf["copies"] = f.copies;
        jf["flip"] = f.flip;
        j["factors"].push_back(jf);
    }
    j["kappa_degree"] = spec.kappa_degree;
    j["mu"] = spec.mu;
    return j.dump();
}

inline std::string nu_to_string(const RationalCoweight& nu) {
    std::string out;
    for (size_t c = 0; c < nu.size(); ++c) {
        if (c) out += ";";
        out += "(";
        for (size_t k = 0; k < nu[c].size(); ++k) {
            if (k) out += ",";
            out += rat_to_string(nu[c][k]);
        }
        out += ")";
    }
    return out;
}

inline std::string kappa_to_string(const Pi1Class& k) {
    std::string out = "(";
    for (size_t f = 0; f < k.size(); ++f) {
        if (f) out += ",";
        out += std::to_string(k[f]);
    }
    return out + ")";
}

inline ojson ext_affine_to_json(const RootSystem& rs, const ExtAffineElt& x) {
    ojson j;
    j["w"] = one_line(rs, x.w);
    j["lambda"] = x.lam;
    return j;
}

inline std::string eps_to_string(const EpsVector& eps) {
    std::string out = "(";
    for (size_t k = 0; k < eps.size(); ++k) {
        if (k) out += ",";
        out += std::to_string(eps[k]);
    }
    return out + ")";
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

inline bool is_siegel(const RootSystem& rs) {
    return rs.num_components() == 1 && rs.components[0].kind == FactorKind::GSp;
}

inline ojson eo_report(const EOPoset& po) {
    const RootSystem& rs = po.rs;
    bool siegel = is_siegel(rs) && po.J == siegel_J(rs);
    ojson rows = ojson::array();
    for (int k = 0; k < (int)po.elements.size(); ++k) {
        const WeylElt& w = po.elements[k];
        ojson row;
        row["w"] = one_line(rs, w);
        row["length"] = length(rs, w);
        if (siegel) {
            row["eps"] = eps_to_string(w_to_eps(rs, w));
            row["elementary_sequence"] = elem_seq(rs, w);
        }
        row["galois_orbit"] = po.orbit_of[k];
        row["closure_size"] = (int)closure(po, w).size();
        rows.push_back(row);
    }
    ojson j;
    j["J"] = po.J;
    j["x"] = one_line(rs, po.x);
    j["dim_par_J"] = po.dim_par_j;
    j["elements"] = rows;
    ojson edges = ojson::array();
    for (auto& [a, b] : hasse_diagram(po))
        edges.push_back(ojson::array({one_line(rs, po.elements[a]), one_line(rs, po.elements[b])}));
    j["hasse"] = edges;
    return j;
}

inline std::string eo_dot(const EOPoset& po) {
    const RootSystem& rs = po.rs;
    std::string out = "digraph eo {\n  rankdir=BT;\n";
    for (int k = 0; k < (int)po.elements.size(); ++k)
        out += "  n" + std::to_string(k) + " [label=\"" + one_line(rs, po.elements[k]) +
               " | " + std::to_string(length(rs, po.elements[k])) + "\"];\n";
    for (auto& [a, b] : hasse_diagram(po))
        out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
    out += "}\n";
    return out;
}

inline std::string siegel_csv(const EOPoset& po) {
    const RootSystem& rs = po.rs;
    if (!is_siegel(rs) || po.J != siegel_J(rs))
        throw unsupported_error("CSV export requires a Siegel configuration");
    std::string out = "eps,length,a_number,elementary_sequence,closure_size\n";
    for (auto& w : po.elements) {
        EpsVector eps = w_to_eps(rs, w);
        ElementarySequence phi = elem_seq(rs, w);
        std::string phis;
        for (size_t i = 0; i < phi.size(); ++i) {
            if (i) phis += " ";
            phis += std::to_string(phi[i]);
        }
        out += "\"" + eps_to_string(eps) + "\"," + std::to_string(length_eps(eps)) + "," +
               std::to_string(a_number(eps)) + ",\"" + phis + "\"," +
               std::to_string((int)closure(po, w).size()) + "\n";
    }
    return out;
}

inline ojson newton_report(const RootSystem& rs, const BGmu& bg) {
    ojson rows = ojson::array();
    int N = (int)bg.elements.size();
    for (int b = 0; b < N; ++b) {
        ojson row;
        row["nu"] = nu_to_string(bg.elements[b].nu);
        row["kappa"] = kappa_to_string(bg.elements[b].kappa);
        row["basic"] = (b == bg.basic);
        row["mu_ordinary"] = (b == bg.mu_ordinary);
        rows.push_back(row);
    }
    ojson edges = ojson::array();
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            if (a == b || !bg.leq[a][b]) continue;
            bool cover = true;
            for (int c = 0; c < N && cover; ++c)
                if (c != a && c != b && bg.leq[a][c] && bg.leq[c][b]) cover = false;
            if (cover)
                edges.push_back(ojson::array(
                    {nu_to_string(bg.elements[a].nu), nu_to_string(bg.elements[b].nu)}));
        }
    ojson j;
    j["elements"] = rows;
    j["hasse"] = edges;
    return j;
}

inline ojson map_report(const StrataAtlas& at) {
    if (!at.split) throw unsupported_error("cmd_map requires a split configuration");
    const RootSystem& rs = at.rs;
    ojson rows = ojson::array();
    for (int b = 0; b < (int)at.bg.elements.size(); ++b) {
        ojson row;
        row["nu"] = nu_to_string(at.bg.elements[b].nu);
        row["kappa"] = kappa_to_string(at.bg.elements[b].kappa);
        row["w_of_b"] = one_line(rs, w_of_b(at, b));
        row["length"] = length(rs, w_of_b(at, b));
        rows.push_back(row);
    }
    ojson wrows = ojson::array();
    for (int k = 0; k < (int)at.eo.elements.size(); ++k) {
        const WeylElt& w = at.eo.elements[k];
        ojson row;
        row["w"] = one_line(rs, w);
        row["length"] = length(rs, w);
        row["fundamental"] = (bool)at.fundamental[k];
        row["b_w"] = nu_to_string(at.b_w[k].nu);
        ojson mins = ojson::array();
        for (int a : min_set(at, w)) mins.push_back(one_line(rs, at.eo.elements[a]));
        row["min_set"] = mins;
        ojson gen = ojson::array();
        for (int b : generic_newton(at, w)) gen.push_back(nu_to_string(at.bg.elements[b].nu));
        row["generic_newton"] = gen;
        wrows.push_back(row);
    }
    ojson j;
    j["b_to_w"] = rows;
    j["strata"] = wrows;
    return j;
}

} // namespace eostrata

#endif
