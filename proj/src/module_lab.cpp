#include "weyl/module_lab.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "weyl/sl2char.hpp"

namespace weyl::lab {

int label_degree(const Label& l) {
    int d = 0;
    for (const Factor& f : l) d += f.power;
    return d;
}

int label_weight(const Label& l) {
    int w = 0;
    for (const Factor& f : l) w += 3 - 2 * f.letter;
    return w;
}

std::string to_string(Kind k) {
    switch (k) {
    case Kind::Tensor: return "tensor";
    case Kind::Sym: return "sym";
    case Kind::Wedge: return "wedge";
    case Kind::LocalQuotient: return "local-quotient";
    }
    return "?";
}

static int gen_weight_shift(Gen g) {
    switch (g) {
    case Gen::X: return 2;
    case Gen::Y: return -2;
    case Gen::H: return 0;
    }
    return 0;
}

Realization Realization::build(Kind k, int lambda, int trunc, BuildLimits lim) {
    if (k == Kind::LocalQuotient) return local_weyl_quotient(lambda, trunc, lim);
    if (lambda < 1) throw std::invalid_argument("build: lambda must be >= 1");
    if (lambda > lim.max_lambda || trunc > lim.max_trunc || trunc < 0)
        throw std::invalid_argument("build: caps exceeded");
    if (k == Kind::Tensor)
        return build_sym_product(std::vector<int>(static_cast<size_t>(lambda), 1), trunc, lim);
    Realization m;
    m.kind_ = k;
    m.lambda_ = lambda;
    m.trunc_ = trunc;
    m.antisym_ = (k == Kind::Wedge);
    m.groups_ = {lambda};
    if (lambda > lim.max_lambda || trunc > lim.max_trunc || trunc < 0)
        throw std::invalid_argument("build: caps exceeded");
    m.enumerate_basis(lim.max_basis);
    return m;
}

Realization Realization::build_sym_product(const std::vector<int>& groups, int trunc,
                                           BuildLimits lim) {
    Realization m;
    m.kind_ = Kind::Tensor;
    m.groups_ = groups;
    m.lambda_ = 0;
    for (int g : groups) {
        if (g < 1) throw std::invalid_argument("build_sym_product: group sizes must be >= 1");
        m.lambda_ += g;
    }
    m.trunc_ = trunc;
    if (m.lambda_ > lim.max_lambda + 1 || trunc > lim.max_trunc || trunc < 0)
        throw std::invalid_argument("build: caps exceeded");
    m.enumerate_basis(lim.max_basis);
    return m;
}

void Realization::enumerate_basis(long max_basis) {
    size_t slots = static_cast<size_t>(lambda_);
    std::vector<size_t> group_of(slots), start_of(slots);
    {
        size_t i = 0, g = 0;
        for (int gs : groups_) {
            for (int j = 0; j < gs; ++j, ++i) {
                group_of[i] = g;
                start_of[i] = i - static_cast<size_t>(j);
            }
            ++g;
        }
    }
    Label cur(slots);
    long count = 0;
    std::function<void(size_t, int)> rec = [&](size_t slot, int budget) {
        if (slot == slots) {
            int d = label_degree(cur), w = label_weight(cur);
            blocks_[{d, w}].push_back(cur);
            if (++count > max_basis)
                throw std::invalid_argument("build: basis size cap exceeded");
            return;
        }
        bool fresh = (start_of[slot] == slot);
        Factor lowest{1, 0};
        if (!fresh) {
            lowest = cur[slot - 1];
            if (antisym_) { // strictly increasing within the group
                if (lowest.power + 1 <= budget) {
                    ++lowest.power;
                } else if (lowest.letter == 1) {
                    lowest = {2, 0};
                } else {
                    return;
                }
            }
        }
        for (int letter = lowest.letter; letter <= 2; ++letter) {
            int pmin = (letter == lowest.letter) ? lowest.power : 0;
            for (int power = pmin; power <= budget; ++power) {
                cur[slot] = {letter, power};
                rec(slot + 1, budget - power);
            }
        }
    };
    rec(0, trunc_);
    for (auto& [key, basis] : blocks_)
        for (size_t i = 0; i < basis.size(); ++i)
            pos_.emplace(basis[i], static_cast<int>(i));
}

int Realization::block_dim(BlockKey k) const {
    if (kind_ == Kind::LocalQuotient) {
        auto it = quot_.find(k);
        return it == quot_.end() ? 0 : it->second.dim;
    }
    auto it = blocks_.find(k);
    return it == blocks_.end() ? 0 : static_cast<int>(it->second.size());
}

long Realization::total_dim() const {
    long n = 0;
    for (const auto& [key, basis] : blocks_) n += block_dim(key);
    return n;
}

std::pair<Label, int> Realization::canonicalize(Label raw) const {
    if (antisym_) {
        int sign = 1;
        for (size_t i = 1; i < raw.size(); ++i)
            for (size_t j = i; j > 0 && raw[j] < raw[j - 1]; --j) {
                std::swap(raw[j], raw[j - 1]);
                sign = -sign;
            }
        for (size_t i = 1; i < raw.size(); ++i)
            if (raw[i] == raw[i - 1]) return {std::move(raw), 0};
        return {std::move(raw), sign};
    }
    size_t off = 0;
    for (int gs : groups_) {
        std::sort(raw.begin() + static_cast<long>(off),
                  raw.begin() + static_cast<long>(off) + gs);
        off += static_cast<size_t>(gs);
    }
    return {std::move(raw), 1};
}

static void prune_zeros(Realization::Vec& v) {
    for (auto it = v.begin(); it != v.end();)
        it = (it->second == 0) ? v.erase(it) : std::next(it);
}

Realization::Vec Realization::apply_gen(Gen g, int r, const Vec& v) const {
    Vec out;
    for (const auto& [lab, c] : v) {
        if (label_degree(lab) + r > trunc_) continue; // truncated at trunc_
        for (size_t i = 0; i < lab.size(); ++i) {
            const Factor f = lab[i];
            Factor nf{};
            int scale = 1;
            switch (g) {
            case Gen::X:
                if (f.letter != 2) continue; // x e_1 = 0
                nf = {1, f.power + r};
                break;
            case Gen::Y:
                if (f.letter != 1) continue; // y e_2 = 0
                nf = {2, f.power + r};
                break;
            case Gen::H:
                scale = 3 - 2 * f.letter;
                nf = {f.letter, f.power + r};
                break;
            }
            Label raw = lab;
            raw[i] = nf;
            auto [can, sgn] = canonicalize(std::move(raw));
            if (sgn == 0) continue;
            out[can] += c * (scale * sgn);
        }
    }
    prune_zeros(out);
    return out;
}

Realization::Vec Realization::apply_powersum(int s, const Vec& v) const {
    Vec out;
    for (const auto& [lab, c] : v) {
        if (label_degree(lab) + s > trunc_) continue;
        for (size_t i = 0; i < lab.size(); ++i) {
            Label raw = lab;
            raw[i].power += s;
            auto [can, sgn] = canonicalize(std::move(raw));
            if (sgn == 0) continue;
            out[can] += c * sgn;
        }
    }
    prune_zeros(out);
    return out;
}

Realization::Vec Realization::apply_h_slots(int a, const std::vector<int>& slots,
                                            const Vec& v) const {
    // Slot-restricted operators are only well defined when no reordering
    // happens under canonicalization.
    if (antisym_ || std::any_of(groups_.begin(), groups_.end(), [](int g) { return g > 1; }))
        throw std::logic_error("apply_h_slots: needs a plain tensor build");
    Vec out;
    for (const auto& [lab, c] : v) {
        if (label_degree(lab) + a > trunc_) continue;
        for (int i : slots) {
            const Factor f = lab[static_cast<size_t>(i)];
            Label raw = lab;
            raw[static_cast<size_t>(i)] = {f.letter, f.power + a};
            auto [can, sgn] = canonicalize(std::move(raw));
            if (sgn == 0) continue;
            out[can] += c * ((3 - 2 * f.letter) * sgn);
        }
    }
    prune_zeros(out);
    return out;
}

RatMatrix Realization::gen_matrix(Gen g, int r, BlockKey src) const {
    BlockKey dst{src.degree + r, src.weight + gen_weight_shift(g)};
    auto its = blocks_.find(src);
    size_t n = its == blocks_.end() ? 0 : its->second.size();
    auto itd = blocks_.find(dst);
    size_t cols = (dst.degree <= trunc_ && itd != blocks_.end()) ? itd->second.size() : 0;
    RatMatrix mat(n, RatRow(cols, Rat(0)));
    if (n == 0 || cols == 0) return mat;
    for (size_t i = 0; i < n; ++i) {
        Vec img = apply_gen(g, r, Vec{{its->second[i], Rat(1)}});
        for (const auto& [lab, c] : img)
            mat[i][static_cast<size_t>(pos_.at(lab))] = c;
    }
    return mat;
}

RatMatrix Realization::powersum_matrix(int s, BlockKey src) const {
    BlockKey dst{src.degree + s, src.weight};
    auto its = blocks_.find(src);
    size_t n = its == blocks_.end() ? 0 : its->second.size();
    auto itd = blocks_.find(dst);
    size_t cols = (dst.degree <= trunc_ && itd != blocks_.end()) ? itd->second.size() : 0;
    RatMatrix mat(n, RatRow(cols, Rat(0)));
    if (n == 0 || cols == 0) return mat;
    for (size_t i = 0; i < n; ++i) {
        Vec img = apply_powersum(s, Vec{{its->second[i], Rat(1)}});
        for (const auto& [lab, c] : img)
            mat[i][static_cast<size_t>(pos_.at(lab))] = c;
    }
    return mat;
}

RatRow Realization::coords(BlockKey k, const Vec& v) const {
    auto it = blocks_.find(k);
    size_t n = it == blocks_.end() ? 0 : it->second.size();
    RatRow row(n, Rat(0));
    for (const auto& [lab, c] : v) {
        if (label_degree(lab) != k.degree || label_weight(lab) != k.weight)
            throw std::logic_error("coords: vector leaves the block");
        row[static_cast<size_t>(pos_.at(lab))] = c;
    }
    return row;
}

Realization::Vec Realization::from_coords(BlockKey k, const RatRow& row) const {
    const auto& basis = blocks_.at(k);
    Vec v;
    for (size_t i = 0; i < row.size(); ++i)
        if (row[i] != 0) v.emplace(basis[i], row[i]);
    return v;
}

const RatMatrix& Realization::quotient_projection(BlockKey k) const {
    if (kind_ != Kind::LocalQuotient)
        throw std::logic_error("quotient_projection: not a quotient realization");
    return quot_.at(k).projection;
}

Realization local_weyl_quotient(int lambda, int trunc, BuildLimits lim) {
    Realization m = Realization::build(Kind::Sym, lambda, trunc, lim);
    m.kind_ = Kind::LocalQuotient;
    for (const auto& [key, basis] : m.blocks_) {
        int n = static_cast<int>(basis.size());
        RowSpace img(n);
        for (int s = 1; s <= lambda; ++s) {
            BlockKey src{key.degree - s, key.weight};
            auto it = m.blocks_.find(src);
            if (it == m.blocks_.end()) continue;
            for (const Label& lab : it->second)
                img.add(m.coords(key, m.apply_powersum(s, Realization::Vec{{lab, Rat(1)}})));
        }
        Realization::QuotBlock qb;
        qb.dim = n - img.rank();
        std::vector<int> kept_index(static_cast<size_t>(n), -1);
        {
            std::vector<char> is_pivot(static_cast<size_t>(n), 0);
            for (int p : img.pivots()) is_pivot[static_cast<size_t>(p)] = 1;
            for (int c = 0; c < n; ++c)
                if (!is_pivot[static_cast<size_t>(c)]) {
                    kept_index[static_cast<size_t>(c)] = static_cast<int>(qb.kept.size());
                    qb.kept.push_back(c);
                }
        }
        qb.projection.assign(static_cast<size_t>(n), RatRow(static_cast<size_t>(qb.dim), Rat(0)));
        for (int c = 0; c < n; ++c) {
            if (kept_index[static_cast<size_t>(c)] >= 0) {
                qb.projection[static_cast<size_t>(c)]
                             [static_cast<size_t>(kept_index[static_cast<size_t>(c)])] = 1;
            } else {
                // pivot column: its class is minus the pivot row on kept columns
                size_t ri = 0;
                while (img.pivots()[ri] != c) ++ri;
                const RatRow& row = img.rows()[ri];
                for (int kc : qb.kept)
                    qb.projection[static_cast<size_t>(c)]
                                 [static_cast<size_t>(kept_index[static_cast<size_t>(kc)])] =
                        -row[static_cast<size_t>(kc)];
            }
        }
        m.quot_.emplace(key, std::move(qb));
    }
    return m;
}

TruncSeries wedge_top_space(int lambda, int trunc, BuildLimits lim) {
    Realization m = Realization::build(Kind::Wedge, lambda, trunc, lim);
    std::vector<Int> dims(static_cast<size_t>(trunc) + 1, Int(0));
    for (int d = 0; d <= trunc; ++d) dims[static_cast<size_t>(d)] = m.block_dim({d, lambda});
    return TruncSeries::truncated(0, std::move(dims));
}

std::vector<Realization::Vec> highest_weight_vectors(const Realization& m, int degree,
                                                     int weight) {
    if (degree >= m.trunc())
        throw std::runtime_error("no headroom; kernel not certifiable");
    BlockKey src{degree, weight};
    auto it = m.blocks().find(src);
    if (it == m.blocks().end()) return {};
    size_t n = it->second.size();
    RatMatrix stacked(n);
    for (int r = 0; r <= m.trunc() - degree; ++r) {
        RatMatrix mr = m.gen_matrix(Gen::X, r, src);
        for (size_t i = 0; i < n; ++i)
            stacked[i].insert(stacked[i].end(), mr[i].begin(), mr[i].end());
    }
    RatMatrix sols = nullspace(transpose(stacked), static_cast<int>(n));
    std::vector<Realization::Vec> out;
    out.reserve(sols.size());
    for (const RatRow& row : sols) out.push_back(m.from_coords(src, row));
    return out;
}

GarlandElement garland_p(int n) {
    std::vector<GarlandElement> p(static_cast<size_t>(n) + 1);
    p[0].terms.emplace(std::vector<int>{}, Rat(1));
    for (int m2 = 1; m2 <= n; ++m2) {
        GarlandElement& pm = p[static_cast<size_t>(m2)];
        for (int k = 1; k <= m2; ++k) {
            for (const auto& [part, c] : p[static_cast<size_t>(m2 - k)].terms) {
                std::vector<int> key = part;
                key.push_back(k);
                std::sort(key.begin(), key.end(), std::greater<int>());
                pm.terms[key] += c;
            }
        }
        for (auto& [part, c] : pm.terms) c /= -m2;
    }
    return p[static_cast<size_t>(n)];
}

static void vec_axpy(Realization::Vec& acc, const Rat& c, const Realization::Vec& v) {
    for (const auto& [lab, x] : v) {
        Rat& a = acc[lab];
        a += c * x;
        if (a == 0) acc.erase(lab);
    }
}

Realization::Vec apply_garland(const Realization& m, const GarlandElement& g,
                               const Realization::Vec& v) {
    Realization::Vec acc;
    for (const auto& [part, c] : g.terms) {
        Realization::Vec w = v;
        for (int a : part) w = m.apply_gen(Gen::H, a, w);
        vec_axpy(acc, c, w);
    }
    return acc;
}

Realization::Vec apply_garland_slots(const Realization& m, const GarlandElement& g,
                                     const std::vector<int>& slots,
                                     const Realization::Vec& v) {
    Realization::Vec acc;
    for (const auto& [part, c] : g.terms) {
        Realization::Vec w = v;
        for (int a : part) w = m.apply_h_slots(a, slots, w);
        vec_axpy(acc, c, w);
    }
    return acc;
}

bool verify_garland(int lambda, int s, int trunc) {
    if (s < 0 || s > trunc)
        throw std::invalid_argument("verify_garland: need 0 <= s <= trunc");
    Realization m = Realization::build(Kind::Sym, lambda, trunc);
    Label top(static_cast<size_t>(lambda), Factor{1, 0});
    Realization::Vec w{{top, Rat(1)}};

    Realization::Vec lhs = w;
    for (int i = 0; i < s; ++i) lhs = m.apply_gen(Gen::Y, 0, lhs);
    for (int i = 0; i < s; ++i) lhs = m.apply_gen(Gen::X, 1, lhs);

    GarlandElement ps = garland_p(s);
    Realization::Vec pw = apply_garland(m, ps, w);
    if (s >= lambda + 1 && !pw.empty()) return false; // P_s kills the generator

    // Ladder identity with divided-power normalization: (-1)^s (s!)^2 P_s.
    Int fact = 1;
    for (int i = 2; i <= s; ++i) fact *= i;
    Rat norm = Rat(fact * fact) * (s % 2 ? -1 : 1);
    Realization::Vec rhs;
    vec_axpy(rhs, norm, pw);
    if (lhs != rhs) return false;

    // Comultiplication on W(1) (x) W(1): P_s = sum_k P_k (x) P_{s-k}.
    Realization t2 = Realization::build(Kind::Tensor, 2, s + 2);
    for (const auto& [key, basis] : t2.blocks()) {
        if (key.degree > 2) continue; // headroom for degree +s images
        for (const Label& lab : basis) {
            Realization::Vec v{{lab, Rat(1)}};
            Realization::Vec direct = apply_garland(t2, ps, v);
            Realization::Vec split;
            for (int k = 0; k <= s; ++k) {
                Realization::Vec tmp = apply_garland_slots(t2, garland_p(k), {0}, v);
                tmp = apply_garland_slots(t2, garland_p(s - k), {1}, tmp);
                vec_axpy(split, Rat(1), tmp);
            }
            if (direct != split) return false;
        }
    }
    return true;
}

GradedChar graded_char_of(const Realization& m, int safe_degree) {
    if (safe_degree > m.trunc())
        throw std::invalid_argument("graded_char_of: safe_degree exceeds truncation");
    std::map<int, std::vector<Int>> series;
    for (int d = 0; d <= safe_degree; ++d) {
        Sl2Char layer;
        for (const auto& [key, basis] : m.blocks())
            if (key.degree == d) layer.add(key.weight, m.block_dim(key));
        if (layer.is_zero()) continue;
        IrrDecomp dec;
        try {
            dec = decompose(layer);
        } catch (const std::invalid_argument&) {
            throw std::runtime_error("layer not sl2-complete");
        }
        for (const auto& [hw, mult] : dec.mults()) {
            auto& cs = series[hw];
            cs.resize(static_cast<size_t>(safe_degree) + 1);
            cs[static_cast<size_t>(d)] = mult;
        }
    }
    GradedChar c(Window{0, safe_degree});
    for (auto& [hw, cs] : series) {
        cs.resize(static_cast<size_t>(safe_degree) + 1);
        c.add_term(hw, TruncSeries::truncated(0, std::move(cs)));
    }
    return c;
}

static RatRow row_times(const RatRow& row, const RatMatrix& mat) {
    RatRow out(mat.empty() ? 0 : mat[0].size(), Rat(0));
    for (size_t i = 0; i < row.size(); ++i) {
        if (row[i] == 0) continue;
        for (size_t j = 0; j < out.size(); ++j) out[j] += row[i] * mat[i][j];
    }
    return out;
}

OCanonicalResult ocanonical_filtration(const Realization& m, int w) {
    if (m.kind() == Kind::LocalQuotient)
        throw std::invalid_argument("ocanonical_filtration: needs a plain realization");
    std::map<BlockKey, RowSpace> span;
    for (const auto& [key, basis] : m.blocks())
        span.emplace(key, RowSpace(static_cast<int>(basis.size())));

    constexpr Gen gens[] = {Gen::X, Gen::Y, Gen::H};
    for (int d = 0; d <= m.trunc(); ++d) {
        // generators: full weight spaces of weight >= w
        for (const auto& [key, basis] : m.blocks()) {
            if (key.degree != d || key.weight < w) continue;
            RowSpace& rs = span.at(key);
            for (size_t i = 0; i < basis.size(); ++i) {
                RatRow e(basis.size(), Rat(0));
                e[i] = 1;
                rs.add(std::move(e));
            }
        }
        // images from lower degrees
        for (const auto& [src, basis] : m.blocks()) {
            if (src.degree >= d) continue;
            const RowSpace& rs = span.at(src);
            if (rs.rank() == 0) continue;
            int r = d - src.degree;
            for (Gen g : gens) {
                RatMatrix mat = m.gen_matrix(g, r, src);
                if (mat.empty() || mat[0].empty()) continue;
                RowSpace& out = span.at({d, src.weight + gen_weight_shift(g)});
                for (const RatRow& row : rs.rows()) out.add(row_times(row, mat));
            }
        }
        // close under the degree-preserving sl2 action within this degree
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& [src, basis] : m.blocks()) {
                if (src.degree != d) continue;
                const RowSpace& rs = span.at(src);
                if (rs.rank() == 0) continue;
                for (Gen g : {Gen::X, Gen::Y}) {
                    RatMatrix mat = m.gen_matrix(g, 0, src);
                    if (mat.empty() || mat[0].empty()) continue;
                    RowSpace& out = span.at({d, src.weight + gen_weight_shift(g)});
                    std::vector<RatRow> rows = rs.rows(); // snapshot
                    for (const RatRow& row : rows)
                        if (out.add(row_times(row, mat))) changed = true;
                }
            }
        }
    }

    auto make_char = [&](bool sub) {
        std::map<int, std::vector<Int>> series;
        for (int d = 0; d <= m.trunc(); ++d) {
            Sl2Char layer;
            for (const auto& [key, basis] : m.blocks()) {
                if (key.degree != d) continue;
                int rank = span.at(key).rank();
                layer.add(key.weight, sub ? rank : static_cast<int>(basis.size()) - rank);
            }
            if (layer.is_zero()) continue;
            IrrDecomp dec;
            try {
                dec = decompose(layer);
            } catch (const std::invalid_argument&) {
                throw std::runtime_error("layer not sl2-complete");
            }
            for (const auto& [hw, mult] : dec.mults()) {
                auto& cs = series[hw];
                cs.resize(static_cast<size_t>(m.trunc()) + 1);
                cs[static_cast<size_t>(d)] = mult;
            }
        }
        GradedChar c(Window{0, m.trunc()});
        for (auto& [hw, cs] : series) {
            cs.resize(static_cast<size_t>(m.trunc()) + 1);
            c.add_term(hw, TruncSeries::truncated(0, std::move(cs)));
        }
        return c;
    };
    return {make_char(true), make_char(false)};
}

} // namespace weyl::lab
