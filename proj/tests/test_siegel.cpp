#include <catch2/catch_amalgamated.hpp>

#include <eostrata/eo_order.hpp>
#include <eostrata/siegel.hpp>

using namespace eostrata;

static RootSystem gsp(int g) {
    GroupSpec s;
    s.factors = {FactorSpec{FactorKind::GSp, g, 1, false}};
    return build_root_system(s);
}

TEST_CASE("eps round trips and counts 2^g") {
    for (int g = 1; g <= 4; ++g) {
        RootSystem rs = gsp(g);
        auto reps = min_coset_reps(rs, siegel_J(rs));
        REQUIRE(reps.size() == (size_t)(1 << g));
        std::set<EpsVector> seen;
        for (auto& w : reps) {
            EpsVector eps = w_to_eps(rs, w);
            REQUIRE(eps_to_w(rs, eps) == w);
            seen.insert(eps);
        }
        REQUIRE(seen.size() == (size_t)(1 << g));
    }
}

TEST_CASE("distinguished eps values") {
    RootSystem rs = gsp(2);
    REQUIRE(w_to_eps(rs, weyl_identity(rs)) == EpsVector{0, 0});
    EOPoset po = build_eo_poset(rs, siegel_J(rs));
    REQUIRE(w_to_eps(rs, eo_maximum(po)) == EpsVector{1, 1});
    // s_2 (1-based), the long simple reflection, has eps = (0,1)
    REQUIRE(w_to_eps(rs, simple_reflection(rs, 1)) == EpsVector{0, 1});

    RootSystem r3 = gsp(3);
    EOPoset p3 = build_eo_poset(r3, siegel_J(r3));
    REQUIRE(w_to_eps(r3, weyl_identity(r3)) == EpsVector{0, 0, 0});
    REQUIRE(w_to_eps(r3, eo_maximum(p3)) == EpsVector{1, 1, 1});
}

TEST_CASE("closed-form length matches the Weyl length") {
    for (int g = 1; g <= 5; ++g) {
        RootSystem rs = gsp(g);
        for (auto& w : min_coset_reps(rs, siegel_J(rs)))
            REQUIRE(length_eps(w_to_eps(rs, w)) == length(rs, w));
    }
}

TEST_CASE("bruhat_on_JW agrees with generic Bruhat order") {
    for (int g = 1; g <= 4; ++g) {
        RootSystem rs = gsp(g);
        auto reps = min_coset_reps(rs, siegel_J(rs));
        for (auto& u : reps)
            for (auto& w : reps)
                REQUIRE(bruhat_on_JW(rs, u, w) == bruhat_leq(rs, u, w));
    }
}

TEST_CASE("elementary sequences") {
    RootSystem rs = gsp(3);
    REQUIRE(elem_seq(rs, weyl_identity(rs)) == ElementarySequence{0, 0, 0, 0});
    EOPoset po = build_eo_poset(rs, siegel_J(rs));
    REQUIRE(elem_seq(rs, eo_maximum(po)) == ElementarySequence{0, 1, 2, 3});

    for (auto& w : min_coset_reps(rs, siegel_J(rs))) {
        ElementarySequence phi = elem_seq(rs, w);
        REQUIRE_NOTHROW(validate_elem_seq(phi));
        REQUIRE(elem_seq_to_eps(phi) == w_to_eps(rs, w));
        REQUIRE(elem_seq_to_w(rs, phi) == w);
    }

    REQUIRE_THROWS_AS(validate_elem_seq(ElementarySequence{0, 2}), spec_error);
    REQUIRE_THROWS_AS(validate_elem_seq(ElementarySequence{1, 1}), spec_error);
    REQUIRE_THROWS_AS(validate_elem_seq(ElementarySequence{0, 1, 0}), spec_error);
}

TEST_CASE("a-number") {
    REQUIRE(a_number(EpsVector{0, 0}) == 2);
    REQUIRE(a_number(EpsVector{1, 1}) == 0);
    REQUIRE(a_number(EpsVector{1, 0, 1}) == 1);
    // superspecial locus: the identity has a-number g
    for (int g = 1; g <= 4; ++g) {
        RootSystem rs = gsp(g);
        REQUIRE(a_number(w_to_eps(rs, weyl_identity(rs))) == g);
    }
}

TEST_CASE("non-Siegel inputs are rejected") {
    GroupSpec s;
    s.factors = {FactorSpec{FactorKind::GL, 3, 1, false}};
    RootSystem rs = build_root_system(s);
    REQUIRE_THROWS_AS(siegel_J(rs), unsupported_error);
    REQUIRE_THROWS_AS(w_to_eps(rs, weyl_identity(rs)), unsupported_error);

    RootSystem rc = gsp(2);
    // w0 is not a minimal-length representative
    REQUIRE_THROWS_AS(w_to_eps(rc, longest_element(rc)), spec_error);
    REQUIRE_THROWS_AS(eps_to_w(rc, EpsVector{0, 2}), spec_error);
    REQUIRE_THROWS_AS(eps_to_w(rc, EpsVector{0}), spec_error);
}

TEST_CASE("specialization order on the Siegel poset is graded by a-number reversals") {
    // smaller in the order => larger a-number (strict length grading + the
    // closed-form length being monotone in ones-weighted positions)
    RootSystem rs = gsp(3);
    EOPoset po = build_eo_poset(rs, siegel_J(rs));
    for (auto& u : po.elements)
        for (auto& w : po.elements)
            if (po.leq[po.idx(u)][po.idx(w)] && !(u == w))
                REQUIRE(length_eps(w_to_eps(rs, u)) < length_eps(w_to_eps(rs, w)));
}
