#include <catch2/catch_amalgamated.hpp>

#include "ydw/quandle.hpp"
#include "ydw/standard_groups.hpp"

using namespace ydw;

TEST_CASE("tetrahedral quandle table") {
    auto q = tetrahedral();
    CHECK(q.op(0, 1) == 3); // 1 |> 2 = 4
    CHECK(q.op(1, 0) == 2); // 2 |> 1 = 3
    CHECK(q.op(0, 0) == 0);
}

TEST_CASE("dihedral quandle formula") {
    auto q = dihedral(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(q.op(i, j) == ((2 * i - j) % 4 + 4) % 4);
}

TEST_CASE("trivial quandle") {
    auto q = trivial_quandle(2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            CHECK(q.op(i, j) == j);
}

TEST_CASE("axiom violations carry the failing triple") {
    // breaking idempotence
    CHECK_THROWS_AS(FiniteQuandle({{1, 0}, {1, 0}}), NotAQuandleError);
    // breaking self-distributivity: valid rows, bad interaction
    try {
        FiniteQuandle({{0, 2, 1}, {2, 1, 0}, {0, 1, 2}});
        FAIL("expected NotAQuandleError");
    } catch (const NotAQuandleError& e) {
        CHECK(e.i >= 1);
    }
}

TEST_CASE("catalogue quandles satisfy the axioms and match their structure") {
    for (const auto& name : catalogue_names())
        CHECK_NOTHROW(catalogue_quandle(name)); // constructor validates

    SECTION("Z_T^{4,1} is tetrahedron plus a point") {
        auto iso = is_isomorphic(catalogue_quandle("Z_T^{4,1}"),
                                 disjoint_union(tetrahedral(), trivial_quandle(1)));
        REQUIRE(iso.has_value());
    }
    SECTION("Z_2^{2,2} is the dihedral quandle D4") {
        auto iso = is_isomorphic(catalogue_quandle("Z_2^{2,2}"), dihedral(4));
        REQUIRE(iso.has_value());
    }
    SECTION("Z_3^{3,1} is D3 plus a point") {
        auto iso = is_isomorphic(catalogue_quandle("Z_3^{3,1}"),
                                 disjoint_union(dihedral(3), trivial_quandle(1)));
        REQUIRE(iso.has_value());
    }
}

TEST_CASE("tetrahedral and dihedral(4) are not isomorphic") {
    // oracle: exhaustive check over all 24 bijections
    auto a = tetrahedral(), b = dihedral(4);
    std::vector<int> f{0, 1, 2, 3};
    bool any = false;
    do {
        bool ok = true;
        for (int i = 0; i < 4 && ok; ++i)
            for (int j = 0; j < 4 && ok; ++j)
                if (f[a.op(i, j)] != b.op(f[i], f[j]))
                    ok = false;
        any = any || ok;
    } while (std::next_permutation(f.begin(), f.end()));
    CHECK(!any);
    CHECK(!is_isomorphic(a, b).has_value());
}

TEST_CASE("isomorphism is reflexive and symmetric on the catalogue") {
    for (const auto& name : catalogue_names()) {
        auto q = catalogue_quandle(name);
        auto self = is_isomorphic(q, q);
        REQUIRE(self.has_value());
        for (const auto& other : catalogue_names()) {
            auto p = catalogue_quandle(other);
            auto fwd = is_isomorphic(q, p);
            auto bwd = is_isomorphic(p, q);
            CHECK(fwd.has_value() == bwd.has_value());
            if (fwd && bwd) {
                // composition is an isomorphism q -> q
                int n = static_cast<int>(q.size());
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) {
                        auto& f = *fwd;
                        auto& g = *bwd;
                        CHECK(g[f[q.op(i, j)]] == q.op(g[f[i]], g[f[j]]));
                    }
            }
        }
    }
}

TEST_CASE("amalgamated sum rebuilds Z_4^{4,2}") {
    // sigma/tau derived from the conjugation quandle h^G cup g^G, not from
    // the printed cycles (whose tau acts on out-of-range indices)
    auto Y = trivial_quandle(2);
    auto Z = dihedral(4);
    std::vector<std::vector<int>> sigma{{1, 2, 3, 0}, {3, 0, 1, 2}};
    std::vector<std::vector<int>> tau{{1, 0}, {1, 0}, {1, 0}, {1, 0}};
    auto amal = amalgamated_sum(Y, Z, sigma, tau);
    CHECK(is_isomorphic(amal, catalogue_quandle("Z_4^{4,2}")).has_value());

    SECTION("it matches the conjugation quandle of the Gamma4 quotient") {
        auto q = make_gamma4_quotient();
        auto conj = conjugation_quandle(q.img, {q.h, q.g});
        CHECK(conj.quandle.size() == 6);
        CHECK(is_isomorphic(conj.quandle, catalogue_quandle("Z_4^{4,2}")).has_value());
    }
    SECTION("invalid gluing data is rejected") {
        std::vector<std::vector<int>> bad{{1, 2, 3, 0}, {0, 1, 2, 3}};
        CHECK_THROWS_AS(amalgamated_sum(Y, Z, bad, tau), NotAQuandleError);
    }
}

TEST_CASE("Z_3^{3,2} is an amalgam of D3 and the trivial 2-quandle") {
    auto Y = dihedral(3);
    auto Z = trivial_quandle(2);
    // D3 elements swap the two points; the points rotate D3
    std::vector<std::vector<int>> sigma{{1, 0}, {1, 0}, {1, 0}};
    std::vector<std::vector<int>> tau{{1, 2, 0}, {2, 0, 1}};
    auto amal = amalgamated_sum(Y, Z, sigma, tau);
    CHECK(is_isomorphic(amal, catalogue_quandle("Z_3^{3,2}")).has_value());
}

TEST_CASE("conjugation quandle is closed and contains the seed classes") {
    auto q = make_t_quotient();
    auto conj = conjugation_quandle(q.img, {q.x1, q.z});
    CHECK(conj.quandle.size() == 5); // 4-element class plus the central z
    auto iso = is_isomorphic(conj.quandle,
                             disjoint_union(tetrahedral(), trivial_quandle(1)));
    CHECK(iso.has_value());
    for (const auto& e : conj.labels) {
        auto cls = q.img->conjugacy_class(e.index());
        for (uint32_t c : cls) {
            bool found = false;
            for (const auto& l : conj.labels)
                found = found || l.index() == c;
            CHECK(found);
        }
    }
}

TEST_CASE("enveloping presentations") {
    SECTION("trivial(2) gives commuting generators") {
        auto p = enveloping_presentation(trivial_quandle(2));
        REQUIRE(p.generators.size() == 2);
        auto img = FiniteGroupImage::enumerate(p, {word_power(1, 3), word_power(2, 5)});
        CHECK(img->order() == 15); // Z_3 x Z_5: generators commute
    }
    SECTION("tetra + point envelops onto the T-quotient") {
        auto q = make_t_quotient();
        auto p = enveloping_presentation(disjoint_union(tetrahedral(), trivial_quandle(1)));
        std::vector<Word> images{q.x1.word(), q.x2.word(), q.x3.word(), q.x4.word(),
                                 q.z.word()};
        CHECK(hom_check(p, *q.img, images));
        CHECK(images_generate(*q.img, images));
        // finite image of the enveloping group matches the T-quotient order
        auto env = FiniteGroupImage::enumerate(p, {word_power(5, 6), word_power(1, 6)});
        CHECK(env->order() == 288);
        // and T surjects onto it: chi1 -> x1, chi2 -> x2, zeta -> x5
        std::vector<Word> back{{5}, {1}, {2}};
        CHECK(hom_check(t_presentation(), *env, back));
        CHECK(images_generate(*env, back));
    }
    SECTION("Z_4^{4,2} envelops compatibly with Gamma4") {
        auto p = enveloping_presentation(catalogue_quandle("Z_4^{4,2}"));
        auto env = FiniteGroupImage::enumerate(p, {word_power(1, 4), word_power(5, 4)});
        CHECK(env->order() == 64);
        // a -> e1 (4-class), b -> e5 (2-class), nu -> b a b^-1 a^-1
        std::vector<Word> images{{1}, {5}, {5, 1, -5, -1}};
        CHECK(hom_check(gamma_presentation(4), *env, images));
        CHECK(images_generate(*env, images));
    }
}

TEST_CASE("row-permutation text round trip") {
    for (const auto& name : catalogue_names()) {
        auto q = catalogue_quandle(name);
        std::istringstream is(q.to_text());
        std::vector<std::string> rows;
        std::string line;
        while (std::getline(is, line))
            if (!line.empty())
                rows.push_back(line);
        CHECK(from_row_permutations(rows) == q);
    }
}
