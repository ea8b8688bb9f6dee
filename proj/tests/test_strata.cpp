#include <catch2/catch_amalgamated.hpp>

#include <eostrata/strata.hpp>

using namespace eostrata;

static GroupSpec gl_spec(int n, Coweight mu, int copies = 1) {
    GroupSpec s;
    s.factors = {FactorSpec{FactorKind::GL, n, copies, false}};
    s.mu = std::move(mu);
    return s;
}

static GroupSpec gsp_spec(int g) {
    GroupSpec s;
    s.factors = {FactorSpec{FactorKind::GSp, g, 1, false}};
    std::vector<Int> mu(2 * g, 0);
    for (int i = 0; i < g; ++i) mu[i] = 1;
    s.mu = {mu};
    return s;
}

static std::vector<GroupSpec> shipped_configs() {
    return {gl_spec(2, {{1, 0}}),
            gl_spec(3, {{1, 0, 0}}),
            gl_spec(3, {{1, 1, 0}}),
            gl_spec(4, {{1, 0, 0, 0}}),
            gl_spec(4, {{1, 1, 0, 0}}),
            gl_spec(4, {{1, 1, 1, 0}}),
            gsp_spec(1),
            gsp_spec(2),
            gsp_spec(3)};
}

static std::vector<Rat> flat(const RationalCoweight& nu) {
    std::vector<Rat> out;
    for (auto& v : nu) out.insert(out.end(), v.begin(), v.end());
    return out;
}

TEST_CASE("B(G,mu) counts and contents") {
    BGmu b2 = enumerate_bgmu(build_root_system(gl_spec(2, {{1, 0}})));
    REQUIRE(b2.elements.size() == 2);
    REQUIRE(b2.elements[b2.mu_ordinary].nu == RationalCoweight{{Rat(1), Rat(0)}});
    REQUIRE(b2.elements[b2.basic].nu == RationalCoweight{{Rat(1, 2), Rat(1, 2)}});
    REQUIRE(b2.mu_ordinary == 0);
    REQUIRE(b2.basic == (int)b2.elements.size() - 1);

    BGmu b4 = enumerate_bgmu(build_root_system(gl_spec(4, {{1, 1, 0, 0}})));
    REQUIRE(b4.elements.size() == 5);
    std::set<std::vector<Rat>> got;
    for (auto& b : b4.elements) got.insert(flat(b.nu));
    std::set<std::vector<Rat>> want{
        {Rat(1), Rat(1), Rat(0), Rat(0)},
        {Rat(1), Rat(1, 2), Rat(1, 2), Rat(0)},
        {Rat(1), Rat(1, 3), Rat(1, 3), Rat(1, 3)},
        {Rat(2, 3), Rat(2, 3), Rat(2, 3), Rat(0)},
        {Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2)}};
    REQUIRE(got == want);

    BGmu bc = enumerate_bgmu(build_root_system(gsp_spec(2)));
    REQUIRE(bc.elements.size() == 3);
    REQUIRE(bc.elements[bc.basic].nu ==
            RationalCoweight{{Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2)}});

    GroupSpec flip = gl_spec(2, {{1, 0}});
    flip.factors[0].flip = true;
    REQUIRE_THROWS_AS(enumerate_bgmu(build_root_system(flip)), unsupported_error);
}

TEST_CASE("B(G,mu) against a brute-force denominator sweep") {
    // oracle: all weakly decreasing vectors with denominators dividing lcm(1..n),
    // dominated by mu, with integral polygon breakpoints
    for (int n = 2; n <= 4; ++n)
        for (int k = 1; k < n; ++k) {
            Coweight mu{std::vector<Int>(n, 0)};
            for (int i = 0; i < k; ++i) mu[0][i] = 1;
            RootSystem rs = build_root_system(gl_spec(n, mu));
            BGmu bg = enumerate_bgmu(rs);

            Int L = 1;
            for (Int t = 2; t <= n; ++t) L = L / gcd_ll(L, t) * t;
            std::set<std::vector<Rat>> oracle;
            std::vector<Int> v(n, 0);
            std::function<void(int)> rec = [&](int pos) {
                if (pos == n) {
                    Int sum = 0;
                    for (Int e : v) sum += e;
                    if (sum != (Int)k * L) return;
                    // integral breakpoints: partial sums integral where slope changes
                    Int acc = 0;
                    for (int i = 0; i < n; ++i) {
                        acc += v[i];
                        bool corner = (i == n - 1) || v[i + 1] != v[i];
                        if (corner && acc % L != 0) return;
                    }
                    RationalCoweight nu{std::vector<Rat>(n)};
                    for (int i = 0; i < n; ++i) nu[0][i] = Rat(v[i], L);
                    if (!dominance_leq(rs, nu, to_rational(mu))) return;
                    oracle.insert(flat(nu));
                    return;
                }
                Int hi = pos == 0 ? L : v[pos - 1];
                for (Int e = 0; e <= hi; ++e) {
                    v[pos] = e;
                    rec(pos + 1);
                }
            };
            rec(0);
            std::set<std::vector<Rat>> got;
            for (auto& b : bg.elements) got.insert(flat(b.nu));
            REQUIRE(got == oracle);
        }
}

TEST_CASE("newton_leq") {
    RootSystem rs = build_root_system(gl_spec(4, {{1, 1, 0, 0}}));
    Pi1Class kap = pi1_image(rs, rs.spec.mu);
    NewtonPt a{{{Rat(1), Rat(1, 3), Rat(1, 3), Rat(1, 3)}}, kap};
    NewtonPt b{{{Rat(2, 3), Rat(2, 3), Rat(2, 3), Rat(0)}}, kap};
    NewtonPt basic{{{Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2)}}, kap};
    REQUIRE(!newton_leq(rs, a, b));
    REQUIRE(!newton_leq(rs, b, a)); // incomparable pair
    REQUIRE(newton_leq(rs, basic, a));
    REQUIRE(newton_leq(rs, basic, b));
    NewtonPt other{basic.nu, Pi1Class{0}};
    REQUIRE(!newton_leq(rs, other, basic)); // kappa mismatch
}

TEST_CASE("type_from_mu") {
    RootSystem r4 = build_root_system(gl_spec(4, {{1, 1, 0, 0}}));
    REQUIRE(type_from_mu(r4) == std::vector<int>{0, 2});
    REQUIRE(type_from_mu_inv(r4) == std::vector<int>{0, 2});

    RootSystem r3 = build_root_system(gl_spec(3, {{1, 0, 0}}));
    REQUIRE(type_from_mu(r3) == std::vector<int>{1});
    REQUIRE(type_from_mu_inv(r3) == std::vector<int>{0});

    RootSystem rc = build_root_system(gsp_spec(2));
    REQUIRE(type_from_mu(rc) == std::vector<int>{0}); // the Siegel J
}

TEST_CASE("distinguished elements") {
    StrataAtlas at = build_atlas(gl_spec(2, {{1, 0}}));
    REQUIRE(at.J.empty());
    // x_1 = w0 t^mu = s t^(1,0), the basic length-zero element
    REQUIRE(at.x_w[0].w.p[0] == std::vector<int>{1, 0});
    REQUIRE(at.x_w[0].lam == Coweight{{1, 0}});
    REQUIRE(is_in_omega(at.rs, at.x_w[0]));

    for (const GroupSpec& spec : shipped_configs()) {
        StrataAtlas a = build_atlas(spec);
        int top = (int)a.eo.elements.size() - 1;
        // nu(x_uw) = mubar, the mu-ordinary point
        REQUIRE(a.b_w[top].nu == gamma_average(a.rs, spec.mu));
        REQUIRE(a.b_w[top] == a.bg.elements[a.bg.mu_ordinary]);
        REQUIRE(a.b_w[0] == a.bg.elements[a.bg.basic]);
    }
}

TEST_CASE("fundamental strata and the b -> w map") {
    for (const GroupSpec& spec : shipped_configs()) {
        StrataAtlas at = build_atlas(spec);
        int N = (int)at.eo.elements.size();
        // identity and uw are always fundamental
        REQUIRE(at.fundamental[0]);
        REQUIRE(at.fundamental[N - 1]);
        // endpoints of b -> w
        REQUIRE(is_identity(w_of_b(at, at.bg.basic)));
        REQUIRE(w_of_b(at, at.bg.mu_ordinary) == eo_maximum(at.eo));
        // the fundamental strata biject onto B(G,mu)
        auto fs = fundamental_strata(at);
        REQUIRE(fs.size() == at.bg.elements.size());
        std::set<NewtonPt> images;
        for (int k : fs) images.insert(at.b_w[k]);
        std::set<NewtonPt> all(at.bg.elements.begin(), at.bg.elements.end());
        REQUIRE(images == all);
    }

    StrataAtlas g2 = build_atlas(gl_spec(2, {{1, 0}}));
    REQUIRE(fundamental_strata(g2) == std::vector<int>{0, 1});
}

TEST_CASE("corEONP shadow: w(b_w) specializes to w") {
    for (const GroupSpec& spec : shipped_configs()) {
        StrataAtlas at = build_atlas(spec);
        for (int k = 0; k < (int)at.eo.elements.size(); ++k) {
            int b = -1;
            for (int j = 0; j < (int)at.bg.elements.size(); ++j)
                if (at.bg.elements[j] == at.b_w[k]) b = j;
            REQUIRE(b >= 0); // (nu,kappa)(x_w) always lies in B(G,mu)
            REQUIRE(at.eo.leq[at.w_of_b_idx[b]][k]);
        }
    }
}

TEST_CASE("min sets and generic newton points") {
    StrataAtlas at = build_atlas(gl_spec(2, {{1, 0}}));
    WeylElt s = at.eo.elements[1];
    REQUIRE(min_set(at, s) == std::vector<int>{0, 1});
    REQUIRE(min_set(at, at.eo.elements[0]) == std::vector<int>{0});
    REQUIRE(generic_newton(at, s) == std::vector<int>{at.bg.mu_ordinary});
    REQUIRE(generic_newton(at, at.eo.elements[0]) == std::vector<int>{at.bg.basic});

    // generic Newton point always dominates the distinguished one
    for (const GroupSpec& spec : shipped_configs()) {
        StrataAtlas a = build_atlas(spec);
        for (int k = 0; k < (int)a.eo.elements.size(); ++k) {
            int bk = -1;
            for (int j = 0; j < (int)a.bg.elements.size(); ++j)
                if (a.bg.elements[j] == a.b_w[k]) bk = j;
            for (int b : generic_newton(a, a.eo.elements[k]))
                REQUIRE(a.bg.leq[bk][b]);
        }
    }
}

TEST_CASE("order correspondence") {
    for (const GroupSpec& spec : shipped_configs()) {
        StrataAtlas at = build_atlas(spec);
        OrderCorrespondenceReport rep = verify_order_correspondence(at);
        REQUIRE(rep.counterexamples.empty());
        REQUIRE(rep.pass);
    }
}

TEST_CASE("bounded incidence through the atlas") {
    StrataAtlas at = build_atlas(gl_spec(2, {{1, 0}}));
    ExtAffineElt basic = at.x_w[0];
    REQUIRE(eo_newton_meets(at, at.eo.elements[0], basic).result == MeetResult::Yes);
    REQUIRE(eo_newton_meets(at, at.eo.elements[1], basic).result ==
            MeetResult::NoWithinBound);
    REQUIRE(eo_newton_meets(at, at.eo.elements[1], at.x_w[1]).result == MeetResult::Yes);
}

TEST_CASE("hilbert-blumenthal fixture") {
    HBFixture fx = hb_fixture(6);
    REQUIRE(fx.conj_identity);
    REQUIRE(fx.x_P_fundamental);
    REQUIRE(fx.xprime_Pprime_fundamental);
    REQUIRE(fx.distinct_sigma_orbits);
    REQUIRE(fx.same_newton_kappa);
    REQUIRE(fx.all_pass());
    // for g = 6 the parabolics are exactly the explicit {2,4} / {2,5} choices
    REQUIRE(fx.P.cls == hb_parabolic(fx.rs, {2, 4}).cls);
    REQUIRE(fx.Pprime.cls == hb_parabolic(fx.rs, {2, 5}).cls);
    // the parabolics are not interchangeable
    REQUIRE(!is_P_fundamental(fx.rs, fx.xprime, fx.P));

    REQUIRE(hb_fixture(8).all_pass());
    REQUIRE_THROWS_AS(hb_fixture(5), spec_error);
    // an odd number of copies leaves no consistent Borel-type parabolic
    REQUIRE_THROWS_AS(hb_fixture(7), unsupported_error);
}
