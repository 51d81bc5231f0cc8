#pragma once

// The two groups of interest and canonical finite quotients used by the
// case studies: T = <zeta, chi1, chi2> (a central extension of SL(2,3) times
// a central line) and Gamma_n = <a, b, nu>.

#include "fpgroup.hpp"

namespace ydw {

// zeta chi1 = chi1 zeta, zeta chi2 = chi2 zeta,
// chi1 chi2 chi1 = chi2 chi1 chi2, chi1^3 = chi2^3
inline Presentation t_presentation() {
    return Presentation({"zeta", "chi1", "chi2"},
                        {{1, 2, -1, -2},
                         {1, 3, -1, -3},
                         {2, 3, 2, -3, -2, -3},
                         {2, 2, 2, -3, -3, -3}});
}

// ba = nu ab, a nu = nu^-1 a, b nu = nu b, nu^n = 1
inline Presentation gamma_presentation(unsigned n) {
    Presentation p({"a", "b", "nu"}, {});
    p.relators.push_back({2, 1, -2, -1, -3});
    p.relators.push_back({1, 3, -1, 3});
    p.relators.push_back({2, 3, -2, -3});
    p.relators.push_back(Word(n, 3));
    return p;
}

inline Word word_power(int letter, unsigned e) { return Word(e, letter); }

struct TQuotient {
    ImagePtr img;
    GroupElement z, x1, x2, x3, x4;

    GroupElement x(int i) const {
        switch (i) {
        case 1:
            return x1;
        case 2:
            return x2;
        case 3:
            return x3;
        case 4:
            return x4;
        }
        throw Error("x index out of range");
    }
};

// T/(zeta^zexp, chi1^xexp); the default (6, 6) has order 288 and carries
// every character value needed in characteristic 0 and 2
inline TQuotient make_t_quotient(unsigned zexp = 6, unsigned xexp = 6,
                                 uint32_t max_cosets = 1'000'000) {
    Presentation p = t_presentation();
    std::vector<Word> extras{word_power(1, zexp), word_power(2, xexp)};
    auto img = FiniteGroupImage::enumerate(p, extras, max_cosets);
    TQuotient q;
    q.img = img;
    q.z = img->generator(0);
    q.x1 = img->generator(1);
    q.x2 = img->generator(2);
    q.x3 = conjugate(q.x2, q.x1); // chi3 = chi2 chi1 chi2^-1
    q.x4 = conjugate(q.x1, q.x2); // chi4 = chi1 chi2 chi1^-1
    return q;
}

struct Gamma4Quotient {
    ImagePtr img;
    GroupElement g, h, eps; // images of a, b, nu
};

// Gamma_4/(a^aexp, b^bexp); the default (4, 4) has order 64, eps of order 4
inline Gamma4Quotient make_gamma4_quotient(unsigned aexp = 4, unsigned bexp = 4,
                                           uint32_t max_cosets = 1'000'000) {
    Presentation p = gamma_presentation(4);
    std::vector<Word> extras{word_power(1, aexp), word_power(2, bexp)};
    auto img = FiniteGroupImage::enumerate(p, extras, max_cosets);
    return Gamma4Quotient{img, img->generator(0), img->generator(1), img->generator(2)};
}

} // namespace ydw
