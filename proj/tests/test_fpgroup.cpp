#include <catch2/catch_amalgamated.hpp>

#include "ydw/fpgroup.hpp"
#include "ydw/standard_groups.hpp"

#include <set>

using namespace ydw;

namespace {

// brute-force multiplication-table oracle: closure of explicit permutations
size_t perm_group_order(std::vector<std::vector<int>> gens) {
    std::set<std::vector<int>> seen(gens.begin(), gens.end());
    size_t n = gens[0].size();
    std::vector<int> id(n);
    for (size_t i = 0; i < n; ++i)
        id[i] = static_cast<int>(i);
    seen.insert(id);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> cur(seen.begin(), seen.end());
        for (const auto& a : cur)
            for (const auto& g : gens) {
                std::vector<int> p(n);
                for (size_t i = 0; i < n; ++i)
                    p[i] = g[a[i]];
                if (seen.insert(p).second)
                    grew = true;
            }
    }
    return seen.size();
}

} // namespace

TEST_CASE("todd_coxeter: dihedral group of order 8") {
    Presentation d({"r", "s"}, {{1, 1, 1, 1}, {2, 2}, {1, 2, 1, 2}});
    auto img = FiniteGroupImage::enumerate(d, {});
    // oracle: symmetries of the square as explicit permutations
    size_t expected = perm_group_order({{1, 2, 3, 0}, {3, 2, 1, 0}});
    CHECK(expected == 8);
    CHECK(img->order() == expected);
}

TEST_CASE("todd_coxeter: Gamma4 quotient with a^4 = b^4 = 1") {
    auto q = make_gamma4_quotient();
    CHECK(q.img->order() == 64); // order found by enumeration, frozen
    CHECK(q.img->element_order(q.eps.index()) == 4);
    CHECK(!((q.g * q.h) == (q.h * q.g)));
    // nu^2 != 1 in this quotient
    CHECK(!(q.eps * q.eps).is_identity());
    CHECK(q.img->conjugacy_class(q.g.index()).size() == 4);
    CHECK(q.img->conjugacy_class(q.h.index()).size() == 2);
}

TEST_CASE("todd_coxeter: T quotients") {
    SECTION("extras {zeta, chi1^6}") {
        auto img = FiniteGroupImage::enumerate(t_presentation(), {{1}, word_power(2, 6)});
        CHECK(img->order() == 48); // frozen from enumeration
        auto x1 = img->generator(1), x2 = img->generator(2);
        auto x3 = conjugate(x2, x1), x4 = conjugate(x1, x2);
        std::set<uint32_t> distinct{x1.index(), x2.index(), x3.index(), x4.index()};
        CHECK(distinct.size() == 4);
    }
    SECTION("canonical quotient T/(zeta^6, chi1^6)") {
        auto q = make_t_quotient();
        CHECK(q.img->order() == 288);
        CHECK(q.img->element_order(q.z.index()) == 6);
        CHECK(q.img->conjugacy_class(q.x1.index()).size() == 4);
    }
    SECTION("coset limit exceeded raises") {
        // free group on two generators is infinite
        Presentation f({"a", "b"}, {});
        CHECK_THROWS_AS(FiniteGroupImage::enumerate(f, {}, 100), EnumerationOverflowError);
    }
}

TEST_CASE("element arithmetic") {
    auto q = make_t_quotient();
    SECTION("x2 x1 x4 = x1 x2 x3") {
        CHECK((q.x2 * q.x1 * q.x4) == (q.x1 * q.x2 * q.x3));
    }
    SECTION("a * a^-1 = identity") {
        for (uint32_t i = 0; i < q.img->order(); i += 17) {
            auto a = q.img->element_by_index(i);
            CHECK((a * a.inverse()).is_identity());
        }
    }
    SECTION("foreign generator raises") {
        CHECK_THROWS_AS(q.img->element({4}), BadWordError);
    }
    SECTION("Gamma4: class of g is {g, eps g, eps^2 g, eps^3 g}") {
        auto p = make_gamma4_quotient();
        auto cls = p.img->conjugacy_class(p.g.index());
        REQUIRE(cls.size() == 4);
        std::set<uint32_t> expect;
        for (int k = 0; k < 4; ++k)
            expect.insert((p.eps.pow(k) * p.g).index());
        CHECK(std::set<uint32_t>(cls.begin(), cls.end()) == expect);
    }
}

TEST_CASE("centralizers, classes, center") {
    auto q = make_t_quotient();
    SECTION("centralizer of x1 has index four and equals <x1, x2x3, z>") {
        auto cent = q.img->centralizer_elements(q.x1.index());
        CHECK(q.img->order() / cent.size() == 4);
        auto sub = q.img->subgroup_closure(
            {q.x1.index(), (q.x2 * q.x3).index(), q.z.index()});
        CHECK(sub == cent);
        // abelian
        for (uint32_t a : sub)
            for (uint32_t b : sub)
                REQUIRE(q.img->mul_idx(a, b) == q.img->mul_idx(b, a));
    }
    SECTION("x1 x2 x3 is central, identity is central") {
        CHECK(q.img->is_central((q.x1 * q.x2 * q.x3).index()));
        CHECK(q.img->is_central(0));
    }
    SECTION("|class| * |centralizer| = |G|") {
        for (uint32_t i = 0; i < q.img->order(); i += 31) {
            auto cls = q.img->conjugacy_class(i);
            auto cent = q.img->centralizer_elements(i);
            CHECK(cls.size() * cent.size() == q.img->order());
        }
        // and the reported generating set generates the full centralizer
        auto gens = q.img->centralizer_generators(q.x1.index());
        CHECK(q.img->subgroup_closure(gens) == q.img->centralizer_elements(q.x1.index()));
    }
    SECTION("class transversal conjugates the base point") {
        auto cls = q.img->conjugacy_class(q.x1.index());
        auto tr = q.img->class_transversal(q.x1.index());
        REQUIRE(cls.size() == tr.size());
        for (size_t i = 0; i < cls.size(); ++i)
            CHECK(q.img->conj_idx(tr[i], q.x1.index()) == cls[i]);
    }
}

TEST_CASE("left-action law of conjugation") {
    auto q = make_gamma4_quotient();
    auto e = [&](uint32_t i) { return q.img->element_by_index(i); };
    for (uint32_t a = 1; a < q.img->order(); a += 13)
        for (uint32_t b = 2; b < q.img->order(); b += 17) {
            auto c = q.g;
            CHECK(conjugate(e(a), conjugate(e(b), c)) == conjugate(e(a) * e(b), c));
        }
}

TEST_CASE("T-quotient satisfies the cube relations") {
    auto q = make_t_quotient();
    auto c = q.x1.pow(3);
    CHECK(c == q.x2.pow(3));
    CHECK(c == q.x3.pow(3));
    CHECK(c == q.x4.pow(3));
    CHECK(q.img->is_central(c.index()));
}

TEST_CASE("hom_check") {
    SECTION("T -> T-quotient via chi_i -> x_i z, zeta -> z^-1") {
        auto q = make_t_quotient();
        // images for generators (zeta, chi1, chi2)
        std::vector<Word> images{
            word_inverse(q.z.word()),
            word_concat(q.x1.word(), q.z.word()),
            word_concat(q.x2.word(), q.z.word()),
        };
        CHECK(hom_check(t_presentation(), *q.img, images));
        CHECK(images_generate(*q.img, images));
    }
    SECTION("Gamma4 -> Gamma4-quotient via a -> g^-1, b -> eps h g^2, nu -> eps^-1") {
        auto p = make_gamma4_quotient();
        std::vector<Word> images{
            word_inverse(p.g.word()),
            (p.eps * p.h * p.g * p.g).word(),
            word_inverse(p.eps.word()),
        };
        CHECK(hom_check(gamma_presentation(4), *p.img, images));
        CHECK(images_generate(*p.img, images));
    }
    SECTION("all generators -> identity is always a homomorphism") {
        auto q = make_t_quotient();
        std::vector<Word> images{{}, {}, {}};
        CHECK(hom_check(t_presentation(), *q.img, images));
        CHECK(!images_generate(*q.img, images));
    }
    SECTION("a broken map is rejected") {
        auto q = make_t_quotient();
        // chi1 -> z is not compatible with chi1^3 = chi2^3 unless chi2 also
        // maps to an element with the same cube
        std::vector<Word> images{q.z.word(), q.z.word(), q.x2.word()};
        CHECK(!hom_check(t_presentation(), *q.img, images));
    }
}

TEST_CASE("presentation text format") {
    Presentation p = parse_presentation(
        "gens: a b v\n"
        "rels: b a B A V, a v A v, b v B V, v^4\n");
    REQUIRE(p.generators.size() == 3);
    REQUIRE(p.relators.size() == 4);
    CHECK(p.relators[0] == Word{2, 1, -2, -1, -3});
    CHECK(p.relators[1] == Word{1, 3, -1, 3});
    CHECK(p.relators[3] == Word{3, 3, 3, 3});
    // matches the built-in Gamma4 presentation
    auto img1 = FiniteGroupImage::enumerate(p, {parse_word(p, "a^4"), parse_word(p, "b^4")});
    CHECK(img1->order() == 64);
    CHECK_THROWS_AS(parse_word(p, "c"), BadWordError);
}
