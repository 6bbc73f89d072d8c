#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nefres/homalg.hpp"

namespace nefres {

/// What is known about a nef bundle E: rank, det, and optionally bigness of H(E) or higher Chern classes.
struct NefProblem {
    Variety variety;
    int rank = 1;
    PicClass c1;
    std::optional<bool> big;
    std::vector<Int> higher_chern;  // c2, c3, ... when known

    NefProblem(Variety v, int r, PicClass c) : variety(v), rank(r), c1(std::move(c)) {}

    /// Throws on r < 1, wrong Picard rank, or a non-nef determinant.
    void check() const;

    std::optional<Int> c2() const;
    ChernData chern() const;
    /// Bigness of H(E): from the flag, or from the top Segre number when enough Chern classes are given.
    std::optional<bool> bigness() const;
};

struct DminBounds {
    std::optional<PicClass> lower;  // nullopt: unbounded below
    PicClass upper;

    bool contains(const PicClass& dmin) const;
};

DminBounds dmin_bounds(const NefProblem& p);

struct MaskOptions {
    /// Also use Hom(det E, E) = 0, which kills O(k) slots with k >= d + dmin.
    bool no_map_from_det = false;
};

/// Indices j with e_{0,j} forced to zero in the standard resolution of E(dmin).
std::set<int> vanishing_mask(const NefProblem& p, const PicClass& dmin, MaskOptions opt = {});

struct PropagationViolation {
    int l;
    int k;
    std::string rule;
};

/// For even quadrics (Q2 included): a row vanishing beyond index 2 forces the next row to vanish beyond 0.
std::vector<PropagationViolation> spinor_propagation(const NefProblem& p, const ExponentTable& t);

}  // namespace nefres
