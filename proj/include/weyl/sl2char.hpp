#pragma once

#include <map>
#include <string>

#include "weyl/numbers.hpp"

namespace weyl {

/// Finite-support weight-multiplicity function of a finite-dimensional
/// sl2-module: weight -> dimension of the weight space.
class Sl2Char {
public:
    Sl2Char() = default;

    void add(int weight, Int dim);
    Int at(int weight) const;
    bool is_zero() const;
    const std::map<int, Int>& weights() const { return w_; }

    friend Sl2Char operator+(const Sl2Char& a, const Sl2Char& b);
    friend bool operator==(const Sl2Char& a, const Sl2Char& b);
    friend bool operator!=(const Sl2Char& a, const Sl2Char& b) { return !(a == b); }

    std::string str() const;

private:
    std::map<int, Int> w_; // only nonzero entries kept
};

/// Multiplicities of irreducibles: highest weight -> multiplicity.
class IrrDecomp {
public:
    void add(int hw, Int mult);
    Int at(int hw) const;
    const std::map<int, Int>& mults() const { return m_; }

    friend bool operator==(const IrrDecomp& a, const IrrDecomp& b);
    friend bool operator!=(const IrrDecomp& a, const IrrDecomp& b) { return !(a == b); }

    std::string str() const;

private:
    std::map<int, Int> m_;
};

/// Character of V(lambda): weights lambda, lambda-2, ..., -lambda.
/// V(lambda) = 0 for lambda < 0 by convention.
Sl2Char irr_char(int lambda);

/// Weight-space convolution, the character of a tensor product.
Sl2Char char_mul(const Sl2Char& a, const Sl2Char& b);

/// Peel from the highest weight: m_lambda = chi(lambda) - chi(lambda + 2).
/// Throws "not a module character" when a multiplicity goes negative or the
/// reconstruction does not reproduce chi (e.g. asymmetric input).
IrrDecomp decompose(const Sl2Char& chi);

/// Classical sl2 tensor decomposition; serves as an oracle for
/// decompose(char_mul(...)).
IrrDecomp clebsch_gordan(int lambda, int mu);

} // namespace weyl
