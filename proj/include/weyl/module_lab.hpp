#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "weyl/graded_char.hpp"
#include "weyl/linalg.hpp"

namespace weyl::lab {

/// One tensor factor e_letter (x) t^power of V(1) (x) C[t];
/// letter 1 has weight +1, letter 2 has weight -1.
struct Factor {
    int letter = 1; // 1 or 2
    int power = 0;
    auto operator<=>(const Factor&) const = default;
};

using Label = std::vector<Factor>;

int label_degree(const Label& l);
int label_weight(const Label& l);

struct BlockKey {
    int degree = 0;
    int weight = 0;
    auto operator<=>(const BlockKey&) const = default;
};

enum class Kind { Tensor, Sym, Wedge, LocalQuotient };
enum class Gen { X, Y, H };

std::string to_string(Kind k);

struct BuildLimits {
    int max_lambda = 6;
    int max_trunc = 12;
    long max_basis = 1'000'000;
};

/// Explicit basis-indexed realization of a truncated graded module built from
/// tensor factors of W(1) = V(1) (x) C[t]: ordered factor tuples (Tensor),
/// multisets (Sym), strictly increasing tuples with signs (Wedge), a tensor
/// product of symmetrized groups, or the local Weyl quotient of a Sym build.
///
/// Operator images beyond degree trunc() are dropped; every derived quantity
/// is exact only for the degrees it reports.
class Realization {
public:
    using Vec = std::map<Label, Rat>; // module vector, exact coefficients

    static Realization build(Kind k, int lambda, int trunc, BuildLimits lim = {});
    /// Tensor product of symmetric powers with the given group sizes,
    /// e.g. {lambda, 1} realizes W(lambda) (x) W(1).
    static Realization build_sym_product(const std::vector<int>& groups, int trunc,
                                         BuildLimits lim = {});

    Kind kind() const { return kind_; }
    int lambda() const { return lambda_; }
    int trunc() const { return trunc_; }
    const std::vector<int>& groups() const { return groups_; }

    const std::map<BlockKey, std::vector<Label>>& blocks() const { return blocks_; }
    /// Quotient dimension for LocalQuotient builds, plain dimension otherwise.
    int block_dim(BlockKey k) const;
    long total_dim() const;

    /// Canonical form of a raw factor tuple: (label, coefficient).  The
    /// coefficient is 0/1 for symmetrized groups and the permutation sign for
    /// Wedge (0 on repeated factors).
    std::pair<Label, int> canonicalize(Label raw) const;

    /// Action of x,y,h (x) t^r as a derivation over the factors.  Image terms
    /// whose degree exceeds trunc() are dropped.
    Vec apply_gen(Gen g, int r, const Vec& v) const;
    /// Right action of the power sum p_s = t_1^s + ... (degree +s).
    Vec apply_powersum(int s, const Vec& v) const;
    /// h (x) t^a restricted to the given factor slots (used for checking the
    /// comultiplication expansion on tensor builds).
    Vec apply_h_slots(int a, const std::vector<int>& slots, const Vec& v) const;

    /// Matrix of the generator from block src into block
    /// (src.degree + r, src.weight + shift); rows are images of the source
    /// basis in target coordinates.  Empty target gives zero columns.
    RatMatrix gen_matrix(Gen g, int r, BlockKey src) const;
    RatMatrix powersum_matrix(int s, BlockKey src) const;

    RatRow coords(BlockKey k, const Vec& v) const;
    Vec from_coords(BlockKey k, const RatRow& row) const;

    /// Projection onto the local-Weyl quotient basis (LocalQuotient only):
    /// block dimension x quotient dimension.
    const RatMatrix& quotient_projection(BlockKey k) const;

private:
    Kind kind_ = Kind::Sym;
    std::vector<int> groups_; // factor-slot group sizes, symmetrized per group
    bool antisym_ = false;
    int lambda_ = 0;
    int trunc_ = 0;
    std::map<BlockKey, std::vector<Label>> blocks_;
    std::map<Label, int> pos_; // position of a label within its block

    struct QuotBlock {
        int dim = 0;
        std::vector<int> kept; // non-pivot columns of the relation space
        RatMatrix projection;
    };
    std::map<BlockKey, QuotBlock> quot_;

    void enumerate_basis(long max_basis);
    friend Realization local_weyl_quotient(int lambda, int trunc, BuildLimits lim);
};

/// W_loc(lambda) as the per-block quotient of Sym(lambda) by the images of
/// the power sums p_1, ..., p_lambda from lower degrees.  Exact for every
/// degree <= trunc because power sums only raise degree.
Realization local_weyl_quotient(int lambda, int trunc, BuildLimits lim = {});

/// Hilbert series of the weight-lambda part of Wedge(lambda), degrees <= trunc;
/// equals u^{a_lambda} (1:u)_lambda truncated.
TruncSeries wedge_top_space(int lambda, int trunc, BuildLimits lim = {});

/// Joint kernel of x (x) t^r, 0 <= r <= trunc - degree, on block (degree,
/// weight).  Requires headroom (degree < trunc); results are exact up to
/// truncation only.
std::vector<Realization::Vec> highest_weight_vectors(const Realization& m, int degree,
                                                     int weight);

/// Garland element P_n of U(h (x) t C[t]) as a rational combination of
/// commuting monomials in h (x) t^a; keys are partitions of n.
struct GarlandElement {
    std::map<std::vector<int>, Rat> terms;
};

GarlandElement garland_p(int n);

Realization::Vec apply_garland(const Realization& m, const GarlandElement& g,
                               const Realization::Vec& v);
Realization::Vec apply_garland_slots(const Realization& m, const GarlandElement& g,
                                     const std::vector<int>& slots,
                                     const Realization::Vec& v);

/// Checks, on the highest-weight generator of Sym(lambda):
///   (x (x) t)^s (y (x) 1)^s w = (-1)^s (s!)^2 P_s w,
/// that P_s w = 0 once s > lambda, and that on W(1) (x) W(1) applying P_s
/// equals the comultiplication expansion sum_k P_k (x) P_{s-k}.
bool verify_garland(int lambda, int s, int trunc);

/// Layer-by-layer character of the realization: decompose each degree d <=
/// safe_degree as an sl2 character.  Throws "layer not sl2-complete" when a
/// layer fails to decompose (a construction bug, not a truncation effect).
GradedChar graded_char_of(const Realization& m, int safe_degree);

struct OCanonicalResult {
    GradedChar submodule; // ch of M^w, exact for degrees <= trunc
    GradedChar quotient;  // ch of M / M^w
};

/// The submodule generated by all weight spaces of weight >= w, computed
/// degree by degree (exact within the window since operators raise degree),
/// together with the complementary quotient character.
OCanonicalResult ocanonical_filtration(const Realization& m, int w);

} // namespace weyl::lab
