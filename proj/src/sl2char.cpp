#include "weyl/sl2char.hpp"

#include <sstream>
#include <stdexcept>

namespace weyl {

void Sl2Char::add(int weight, Int dim) {
    if (dim == 0) return;
    Int& v = w_[weight];
    v += dim;
    if (v == 0) w_.erase(weight);
}

Int Sl2Char::at(int weight) const {
    auto it = w_.find(weight);
    return it == w_.end() ? Int(0) : it->second;
}

bool Sl2Char::is_zero() const { return w_.empty(); }

Sl2Char operator+(const Sl2Char& a, const Sl2Char& b) {
    Sl2Char r = a;
    for (const auto& [mu, d] : b.w_) r.add(mu, d);
    return r;
}

bool operator==(const Sl2Char& a, const Sl2Char& b) { return a.w_ == b.w_; }

std::string Sl2Char::str() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [mu, d] : w_) {
        if (!first) os << ", ";
        first = false;
        os << mu << ":" << d;
    }
    os << "}";
    return os.str();
}

void IrrDecomp::add(int hw, Int mult) {
    if (mult == 0) return;
    Int& v = m_[hw];
    v += mult;
    if (v == 0) m_.erase(hw);
}

Int IrrDecomp::at(int hw) const {
    auto it = m_.find(hw);
    return it == m_.end() ? Int(0) : it->second;
}

bool operator==(const IrrDecomp& a, const IrrDecomp& b) { return a.m_ == b.m_; }

std::string IrrDecomp::str() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [hw, m] : m_) {
        if (!first) os << ", ";
        first = false;
        os << hw << ":" << m;
    }
    os << "}";
    return os.str();
}

Sl2Char irr_char(int lambda) {
    Sl2Char c;
    if (lambda < 0) return c;
    for (int mu = -lambda; mu <= lambda; mu += 2) c.add(mu, 1);
    return c;
}

Sl2Char char_mul(const Sl2Char& a, const Sl2Char& b) {
    Sl2Char r;
    for (const auto& [mu, da] : a.weights())
        for (const auto& [nu, db] : b.weights())
            r.add(mu + nu, da * db);
    return r;
}

IrrDecomp decompose(const Sl2Char& chi) {
    IrrDecomp d;
    if (chi.is_zero()) return d;
    int top = chi.weights().rbegin()->first;
    for (int mu = top; mu >= 0; --mu) {
        Int m = chi.at(mu) - chi.at(mu + 2);
        if (m < 0) throw std::invalid_argument("not a module character");
        d.add(mu, m);
    }
    Sl2Char rebuilt;
    for (const auto& [hw, m] : d.mults())
        for (int mu = -hw; mu <= hw; mu += 2) rebuilt.add(mu, m);
    if (rebuilt != chi) throw std::invalid_argument("not a module character");
    return d;
}

IrrDecomp clebsch_gordan(int lambda, int mu) {
    if (lambda < 0 || mu < 0)
        throw std::invalid_argument("clebsch_gordan: weights must be nonnegative");
    IrrDecomp d;
    for (int nu = 0; nu <= std::min(lambda, mu); ++nu)
        d.add(lambda + mu - 2 * nu, 1);
    return d;
}

} // namespace weyl
