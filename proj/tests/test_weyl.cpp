#include <catch2/catch_amalgamated.hpp>

#include <eostrata/weyl.hpp>

using namespace eostrata;

static RootSystem gl(int n, int copies = 1, bool flip = false) {
    GroupSpec s;
    s.factors = {FactorSpec{FactorKind::GL, n, copies, flip}};
    return build_root_system(s);
}

static RootSystem gsp(int g) {
    GroupSpec s;
    s.factors = {FactorSpec{FactorKind::GSp, g, 1, false}};
    return build_root_system(s);
}

TEST_CASE("GSp permutations satisfy the symplectic constraint") {
    RootSystem rs = gsp(2);
    for (auto& w : enumerate_group(rs)) {
        int D = 4;
        for (int i = 0; i < D; ++i)
            REQUIRE(w.p[0][i] + w.p[0][D - 1 - i] == D - 1);
    }
    REQUIRE(enumerate_group(rs).size() == 8);
}

TEST_CASE("group sizes") {
    REQUIRE(enumerate_group(gl(4)).size() == 24);
    REQUIRE(enumerate_group(gsp(3)).size() == 48);
    REQUIRE(enumerate_group(gl(2, 3)).size() == 8);
}

TEST_CASE("length basics") {
    RootSystem rs = gsp(2);
    REQUIRE(length(rs, weyl_identity(rs)) == 0);
    // s_2 = tau_2 (the long simple reflection)
    REQUIRE(length(rs, simple_reflection(rs, 1)) == 1);
    REQUIRE(length(rs, longest_element(rs)) == 4);
}

TEST_CASE("GSp closed-form length matches the generic one") {
    // l(w) = #{i<j<=g : w(i)>w(j)} + #{i<=j<=g : w(i)+w(j) > 2g+1}  (1-based)
    for (int g : {1, 2, 3}) {
        RootSystem rs = gsp(g);
        for (auto& w : enumerate_group(rs)) {
            int closed = 0;
            for (int i = 1; i <= g; ++i)
                for (int j = i + 1; j <= g; ++j)
                    if (w.p[0][i - 1] > w.p[0][j - 1]) ++closed;
            for (int i = 1; i <= g; ++i)
                for (int j = i; j <= g; ++j)
                    if (w.p[0][i - 1] + 1 + w.p[0][j - 1] + 1 > 2 * g + 1) ++closed;
            REQUIRE(closed == length(rs, w));
        }
    }
}

TEST_CASE("GL length is the inversion count") {
    RootSystem rs = gl(4);
    for (auto& w : enumerate_group(rs)) {
        int invs = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (w.p[0][i] > w.p[0][j]) ++invs;
        REQUIRE(invs == length(rs, w));
    }
}

TEST_CASE("length identities") {
    for (RootSystem rs : {gl(3), gsp(2), gl(2, 2)}) {
        auto W = enumerate_group(rs);
        WeylElt w0 = longest_element(rs);
        int l0 = length(rs, w0);
        for (auto& w : W) {
            REQUIRE(length(rs, inv(w)) == length(rs, w));
            REQUIRE(length(rs, mul(w0, w)) == l0 - length(rs, w));
        }
        for (auto& u : W)
            for (auto& v : W)
                REQUIRE(length(rs, mul(u, v)) <= length(rs, u) + length(rs, v));
    }
}

TEST_CASE("reduced words are reduced and multiply back") {
    for (RootSystem rs : {gl(4), gsp(2)}) {
        for (auto& w : enumerate_group(rs)) {
            auto word = reduced_word(rs, w);
            REQUIRE((int)word.size() == length(rs, w));
            WeylElt prod = weyl_identity(rs);
            for (int s : word) prod = mul(prod, simple_reflection(rs, s));
            REQUIRE(prod == w);
        }
    }
}

TEST_CASE("bruhat_leq agrees with the subword oracle") {
    for (RootSystem rs : {gl(2), gl(3), gl(4), gsp(1), gsp(2), gsp(3)}) {
        auto W = enumerate_group(rs);
        for (auto& u : W)
            for (auto& w : W)
                REQUIRE(bruhat_leq(rs, u, w) == bruhat_leq_subword(rs, u, w));
    }
}

TEST_CASE("bruhat examples") {
    RootSystem r3 = gl(3);
    WeylElt u{{{1, 0, 2}}}, w{{{2, 1, 0}}};
    REQUIRE(bruhat_leq(r3, u, w));
    RootSystem rc = gsp(2);
    REQUIRE(!bruhat_leq(rc, simple_reflection(rc, 0), simple_reflection(rc, 1)));
    for (auto& x : enumerate_group(rc)) REQUIRE(bruhat_leq(rc, weyl_identity(rc), x));
}

TEST_CASE("min_coset_reps") {
    RootSystem rs = gsp(2);
    auto all = min_coset_reps(rs, {});
    REQUIRE(all.size() == 8);
    auto top = min_coset_reps(rs, {0, 1});
    REQUIRE(top.size() == 1);
    REQUIRE(is_identity(top[0]));

    auto J1 = min_coset_reps(rs, {0});
    REQUIRE(J1.size() == 4);
    for (int k = 0; k < 4; ++k) REQUIRE(length(rs, J1[k]) == k);
    for (auto& w : J1) REQUIRE(!is_left_descent(rs, w, 0));
}

TEST_CASE("min_coset_reps cardinality |W|/|W_J|") {
    for (RootSystem rs : {gl(4), gsp(3)}) {
        int k = rs.num_simples();
        for (int mask = 0; mask < (1 << k); ++mask) {
            std::vector<int> J;
            for (int s = 0; s < k; ++s)
                if (mask & (1 << s)) J.push_back(s);
            size_t wj = enumerate_subgroup(rs, J).size();
            REQUIRE(min_coset_reps(rs, J).size() == enumerate_group(rs).size() / wj);
        }
    }
}

TEST_CASE("coset_decompose") {
    RootSystem rs = gsp(2);
    std::vector<int> J{0};
    WeylElt s1s2 = mul(simple_reflection(rs, 0), simple_reflection(rs, 1));
    auto [wj, jw] = coset_decompose(rs, s1s2, J);
    REQUIRE(wj == simple_reflection(rs, 0));
    REQUIRE(jw == simple_reflection(rs, 1));
    for (auto& w : enumerate_group(rs)) {
        auto [u, v] = coset_decompose(rs, w, J);
        REQUIRE(mul(u, v) == w);
        REQUIRE(length(rs, w) == length(rs, u) + length(rs, v));
        for (int s : J) REQUIRE(!is_left_descent(rs, v, s));
    }
}

TEST_CASE("double_coset_reps") {
    RootSystem rs = gsp(2);
    REQUIRE(double_coset_reps(rs, {0, 1}, {0, 1}).size() == 1);
    REQUIRE(double_coset_reps(rs, {}, {}).size() == 8);
    REQUIRE(double_coset_reps(rs, {0}, {0}).size() == 3); // {0,...,g} for g=2
}

TEST_CASE("longest elements") {
    RootSystem r3 = gl(3);
    REQUIRE(longest_element(r3).p[0] == std::vector<int>{2, 1, 0});
    REQUIRE(is_identity(longest_element(r3, {})));
    RootSystem rc = gsp(2);
    WeylElt w0 = longest_element(rc);
    for (int i = 0; i < 4; ++i) REQUIRE(w0.p[0][i] == 3 - i);
    REQUIRE(length(rc, w0) == 4);
}

TEST_CASE("phi_apply") {
    RootSystem rs = gl(2, 2);
    WeylElt w = weyl_identity(rs);
    w.p[0] = {1, 0};
    WeylElt fw = phi_apply(rs, w);
    REQUIRE(fw.p[0] == std::vector<int>{0, 1});
    REQUIRE(fw.p[1] == std::vector<int>{1, 0});

    RootSystem rsplit = gl(3);
    for (auto& u : enumerate_group(rsplit)) REQUIRE(phi_apply(rsplit, u) == u);

    // flip on GL(n): phi(s_i) = s_{n-i} after a full cycle
    RootSystem rf = gl(4, 1, true);
    for (int s = 0; s < 3; ++s)
        REQUIRE(phi_apply(rf, simple_reflection(rf, s)) == simple_reflection(rf, 2 - s));
}

TEST_CASE("phi preserves length and Bruhat order") {
    for (RootSystem rs : {gl(3, 2), gl(3, 1, true)}) {
        auto W = enumerate_group(rs);
        for (auto& u : W) REQUIRE(length(rs, phi_apply(rs, u)) == length(rs, u));
        for (auto& u : W)
            for (auto& w : W)
                REQUIRE(bruhat_leq(rs, u, w) ==
                        bruhat_leq(rs, phi_apply(rs, u), phi_apply(rs, w)));
    }
}

TEST_CASE("one-line serialization") {
    RootSystem rs = gsp(2);
    WeylElt w = weyl_identity(rs);
    w.p[0] = {1, 0, 3, 2};
    REQUIRE(one_line(rs, w) == "[2,1,4,3]");
    RootSystem r2 = gl(2, 2);
    REQUIRE(one_line(r2, weyl_identity(r2)) == "[[1,2],[1,2]]");
}

TEST_CASE("deterministic enumeration order") {
    RootSystem rs = gl(3);
    auto W = enumerate_group(rs);
    for (size_t k = 1; k < W.size(); ++k) {
        int la = length(rs, W[k - 1]), lb = length(rs, W[k]);
        REQUIRE((la < lb || (la == lb && W[k - 1].p < W[k].p)));
    }
}
