// eostrata command-line front end: EO posets, B(G,mu) tables, the b -> w map,
// and the invariant verification suite, with an on-disk result cache.

#include <eostrata/eostrata.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unistd.h>

namespace fs = std::filesystem;
using namespace eostrata;

static constexpr const char* kVersion = "0.1.0";

static std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open spec file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

static std::string fnv1a_hex(const std::string& data) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", (unsigned long long)h);
    return buf;
}

static fs::path cache_dir() {
    if (const char* env = std::getenv("EOSTRATA_CACHE_DIR")) return fs::path(env);
    if (const char* home = std::getenv("HOME"))
        return fs::path(home) / ".cache" / "eostrata";
    return fs::temp_directory_path() / "eostrata-cache";
}

struct Cache {
    bool enabled = true;

    std::optional<std::string> get(const std::string& key) const {
        if (!enabled) return std::nullopt;
        std::ifstream in(cache_dir() / (key + ".out"), std::ios::binary);
        if (!in) return std::nullopt;
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    void put(const std::string& key, const std::string& value) const {
        if (!enabled) return;
        std::error_code ec;
        fs::path dir = cache_dir();
        fs::create_directories(dir, ec);
        if (ec) return; // cache is best-effort
        fs::path tmp = dir / (key + ".tmp" + std::to_string(::getpid()));
        {
            std::ofstream out(tmp, std::ios::binary);
            if (!out) return;
            out << value;
        }
        fs::rename(tmp, dir / (key + ".out"), ec);
        if (ec) fs::remove(tmp, ec);
    }
};

// Produce (and cache) the report for one command invocation.
static void emit(const Cache& cache, const GroupSpec& spec, const std::string& command,
                 const std::function<std::string()>& compute) {
    std::string key =
        fnv1a_hex(std::string(kVersion) + "\x1f" + command + "\x1f" + canonical_spec_json(spec));
    if (auto hit = cache.get(key)) {
        std::cout << *hit;
        return;
    }
    std::string out = compute();
    cache.put(key, out);
    std::cout << out;
}

static int run_eo(const Cache& cache, const GroupSpec& spec, const std::string& format,
                  bool hasse_only) {
    RootSystem rs = build_root_system(spec);
    std::string command = "eo/" + format + (hasse_only ? "/hasse" : "");
    emit(cache, spec, command, [&] {
        EOPoset po = build_eo_poset(rs, type_from_mu(rs));
        if (format == "dot") return eo_dot(po);
        if (format == "csv") return siegel_csv(po);
        ojson rep = eo_report(po);
        if (hasse_only) rep = rep["hasse"];
        return rep.dump(2) + "\n";
    });
    return 0;
}

static int run_newton(const Cache& cache, const GroupSpec& spec) {
    RootSystem rs = build_root_system(spec);
    emit(cache, spec, "newton", [&] {
        return newton_report(rs, enumerate_bgmu(rs)).dump(2) + "\n";
    });
    return 0;
}

static int run_map(const Cache& cache, const GroupSpec& spec) {
    if (!is_split(build_root_system(spec)))
        throw unsupported_error("cmd_map requires a split configuration");
    emit(cache, spec, "map", [&] {
        return map_report(build_atlas(spec)).dump(2) + "\n";
    });
    return 0;
}

static int run_verify(const GroupSpec& spec) {
    // build_eo_poset / enumerate_bgmu / build_atlas already throw
    // integrity_error when any structural invariant fails
    StrataAtlas at = build_atlas(spec);
    std::vector<std::string> failures;

    for (auto& a : at.rs.all_roots)
        if (level(a) + pairing(a, spec.mu) !=
            level(apply_root(at.rs, mul(longest_element(at.rs),
                                        longest_element(at.rs, at.J)),
                             a)))
            failures.push_back("root identity fails at a root");

    if (at.split) {
        if (!is_identity(w_of_b(at, at.bg.basic)))
            failures.push_back("w(basic) != 1");
        if (!(w_of_b(at, at.bg.mu_ordinary) == eo_maximum(at.eo)))
            failures.push_back("w(mu-ordinary) != uw");
        OrderCorrespondenceReport rep = verify_order_correspondence(at);
        for (auto& c : rep.counterexamples) failures.push_back(c);
        for (int k = 0; k < (int)at.eo.elements.size(); ++k) {
            int b = -1;
            for (int j = 0; j < (int)at.bg.elements.size(); ++j)
                if (at.bg.elements[j] == at.b_w[k]) b = j;
            if (b < 0 || !at.eo.leq[at.w_of_b_idx[b]][k])
                failures.push_back("w(b_w) does not specialize to " +
                                   one_line(at.rs, at.eo.elements[k]));
        }
    }
    if (!galois_compatible(at.eo)) failures.push_back("EO order not Galois equivariant");

    if (failures.empty()) {
        std::cout << "verify: pass (" << at.eo.elements.size() << " strata, "
                  << at.bg.elements.size() << " newton points)\n";
        return 0;
    }
    std::cout << "verify: FAIL\n";
    for (auto& f : failures) std::cout << "  " << f << "\n";
    return 1;
}

int main(int argc, char** argv) {
    CLI::App app{"Combinatorics of Ekedahl-Oort and Newton stratifications"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string spec_path, format = "json";
    bool no_cache = false, hasse = false;
    app.add_flag("--no-cache", no_cache, "bypass the on-disk cache");

    CLI::App* eo = app.add_subcommand("eo", "Ekedahl-Oort poset report");
    eo->add_option("spec", spec_path, "group spec JSON file")->required();
    eo->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "dot", "csv"}));
    eo->add_flag("--hasse", hasse, "emit only the Hasse diagram (json format)");

    CLI::App* newton = app.add_subcommand("newton", "B(G,mu) report");
    newton->add_option("spec", spec_path, "group spec JSON file")->required();

    CLI::App* map_cmd = app.add_subcommand("map", "b -> w(b) atlas report");
    map_cmd->add_option("spec", spec_path, "group spec JSON file")->required();

    CLI::App* verify = app.add_subcommand("verify", "run the invariant suite");
    verify->add_option("spec", spec_path, "group spec JSON file")->required();

    CLI11_PARSE(app, argc, argv);

    Cache cache;
    cache.enabled = !no_cache;

    try {
        GroupSpec spec = parse_group_spec(read_file(spec_path));
        if (eo->parsed()) return run_eo(cache, spec, format, hasse);
        if (newton->parsed()) return run_newton(cache, spec);
        if (map_cmd->parsed()) return run_map(cache, spec);
        return run_verify(spec);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const spec_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const unsupported_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const integrity_error& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return 1;
    }
}
