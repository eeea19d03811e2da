#pragma once

#include "sgf/rational.hpp"
#include "sgf/series.hpp"
#include "sgf/signature.hpp"

#include <string>
#include <vector>

namespace sgf {

// Compactly supported measure on R: atoms and/or piecewise-constant density,
// exact rational data.  Not necessarily a probability measure (the sextuple
// components are finite measures).
struct CompactMeasure {
    struct Atom {
        Rat x;
        Rat w;
    };
    struct Piece {
        Rat a, b;  // interval [a, b]
        Rat h;     // density height
    };
    std::vector<Atom> atoms;
    std::vector<Piece> pieces;

    static CompactMeasure point(const Rat& x, const Rat& w = Rat(1)) {
        CompactMeasure m;
        m.atoms.push_back({x, w});
        return m;
    }
    static CompactMeasure uniform01() {
        CompactMeasure m;
        m.pieces.push_back({Rat(0), Rat(1), Rat(1)});
        return m;
    }

    Rat mass() const;
    Rat moment(unsigned k) const;  // int x^k dm, exact
    bool density_at_most_one() const;

    // pushforward under x -> c x (degeneration scaling uses c = 1/delta)
    CompactMeasure scaled(const Rat& c) const;
};

std::string compact_measure_to_json(const CompactMeasure& m);
CompactMeasure compact_measure_from_json(const std::string& text);

// (1/N) sum_i delta((lambda_i + N - i)/N).
CompactMeasure empirical_measure(const Signature& lambda);

// Cauchy-Stieltjes transform as the moment sequence m_0..m_M of
// C(z) = sum m_k z^{-k-1}.
RSeries cauchy_transform(const CompactMeasure& m, std::size_t M);

// Compositional inverse of a series of shape 1/z + a_0 + a_1 z + ... .
// Input: moments (m_0 = 1, m_1, ...) of C(z) = sum m_k z^{-k-1};
// output: coefficients a_0..a_M with C^{(-1)}(w) = 1/w + sum_j a_j w^j.
RSeries invert_series(const RSeries& moments);

// R-transform R(w) = C^{(-1)}(w) - 1/w as an ordinary power series.
RSeries r_transform(const CompactMeasure& m, std::size_t M);

// H'(1+t) as a Taylor series in t; the 1/t singularities cancel exactly.
RSeries h_prime(const CompactMeasure& m, std::size_t M);

// Limit data of an extreme-character sequence.
struct LimitSextuple {
    CompactMeasure Aplus, Aminus, Bplus, Bminus;
    Rat Gplus = 0, Gminus = 0;
};

// F_J(1+t) as a Taylor series in t.
RSeries voiculescu_F(const LimitSextuple& J, std::size_t M);

// finite-N value (1/N) log(s_lambda(x, 1^{N-1})/s_lambda(1^N)) vs the series
// limit H_m(x) = int_1^x H'; returns (finite, limit, |gap|).
struct CharacterAsymptotics {
    double finite_value;
    double limit_value;
    double gap;
};
CharacterAsymptotics check_character_asymptotics(const Signature& lambda,
                                                 const CompactMeasure& m, const Rat& x,
                                                 std::size_t series_order = 24);

}  // namespace sgf
