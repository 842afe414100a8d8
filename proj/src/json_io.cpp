#include "weyl/json_io.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace weyl {

using nlohmann::json;

static long long to_ll(const Int& v) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (v < lo || v > hi)
        throw std::runtime_error("coefficient exceeds JSON integer range");
    return v.convert_to<long long>();
}

json to_json(const TruncSeries& s) {
    json coeffs = json::array();
    for (int e = s.lo(); e <= s.hi(); ++e) {
        Int c = s.coeff(e);
        if (c != 0) coeffs.push_back(json::array({e, to_ll(c)}));
    }
    return json{{"lo", s.lo()}, {"hi", s.hi()}, {"coeffs", std::move(coeffs)}};
}

TruncSeries series_from_json(const json& j) {
    int lo = j.at("lo").get<int>();
    int hi = j.at("hi").get<int>();
    if (lo > hi) throw std::invalid_argument("series JSON: lo > hi");
    std::vector<Int> cs(static_cast<size_t>(hi - lo) + 1, Int(0));
    for (const auto& pair : j.at("coeffs")) {
        int e = pair.at(0).get<int>();
        if (e < lo || e > hi) throw std::invalid_argument("series JSON: exponent out of window");
        cs[static_cast<size_t>(e - lo)] = Int(pair.at(1).get<long long>());
    }
    return TruncSeries::truncated(lo, std::move(cs));
}

json to_json(const Sl2Char& c) {
    json weights = json::array();
    for (const auto& [mu, d] : c.weights())
        weights.push_back(json::array({mu, to_ll(d)}));
    return json{{"weights", std::move(weights)}};
}

Sl2Char sl2char_from_json(const json& j) {
    Sl2Char c;
    for (const auto& pair : j.at("weights"))
        c.add(pair.at(0).get<int>(), Int(pair.at(1).get<long long>()));
    return c;
}

json to_json(const GradedChar& c) {
    json terms = json::array();
    for (const auto& [l, s] : c.terms())
        terms.push_back(json{{"weight", l}, {"series", to_json(s)}});
    return json{{"window", json{{"lo", c.window().lo}, {"hi", c.window().hi}}},
                {"terms", std::move(terms)}};
}

GradedChar gchar_from_json(const json& j) {
    Window w{j.at("window").at("lo").get<int>(), j.at("window").at("hi").get<int>()};
    GradedChar c(w);
    for (const auto& t : j.at("terms"))
        c.add_term(t.at("weight").get<int>(), series_from_json(t.at("series")));
    return c;
}

json to_json(const FiltMultiplicity& fm) {
    json mults = json::array();
    for (const auto& [mu, s] : fm.mults)
        mults.push_back(json{{"weight", mu}, {"series", to_json(s)}});
    return json{{"basis", to_string(fm.basis)},
                {"mults", std::move(mults)},
                {"certified_nonneg", fm.certified_nonneg}};
}

std::string to_csv(const GradedChar& c) {
    std::ostringstream os;
    os << "weight,exponent,coefficient\n";
    for (const auto& [l, s] : c.terms())
        for (int e = s.lo(); e <= s.hi(); ++e) {
            Int v = s.coeff(e);
            if (v != 0) os << l << "," << e << "," << v << "\n";
        }
    return os.str();
}

json module_report(const lab::Realization& m, const GradedChar& chr) {
    json blocks = json::array();
    for (const auto& [key, basis] : m.blocks()) {
        int dim = m.block_dim(key);
        if (dim == 0) continue;
        blocks.push_back(
            json{{"degree", key.degree}, {"weight", key.weight}, {"dim", dim}});
    }
    return json{{"kind", lab::to_string(m.kind())},
                {"lambda", m.lambda()},
                {"trunc", m.trunc()},
                {"blocks", std::move(blocks)},
                {"char", to_json(chr)}};
}

std::string matrix_text(const RatMatrix& m) {
    std::ostringstream os;
    for (const auto& row : m) {
        for (size_t j = 0; j < row.size(); ++j) {
            if (j) os << " ";
            os << numerator(row[j]) << "/" << denominator(row[j]);
        }
        os << "\n";
    }
    return os.str();
}

std::string pretty(const GradedChar& c) {
    std::ostringstream os;
    os << "window " << c.window().lo << ":" << c.window().hi << "\n";
    for (const auto& [l, s] : c.terms())
        os << "V(" << l << "): " << s.str() << "\n";
    return os.str();
}

std::string pretty(const FiltMultiplicity& fm) {
    std::ostringstream os;
    os << "basis " << to_string(fm.basis) << ", certified_nonneg "
       << (fm.certified_nonneg ? "true" : "false") << "\n";
    for (const auto& [mu, s] : fm.mults)
        os << "W[" << mu << "]: " << s.str() << "\n";
    return os.str();
}

} // namespace weyl
