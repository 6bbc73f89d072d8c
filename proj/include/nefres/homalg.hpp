#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nefres/collections.hpp"

namespace nefres {

using DimVector = std::vector<Int>;

/// Exponents e_{l,j} of a standard resolution, stored dense (m+1)x(m+1);
/// entries with j > m-l are structural zeros.
struct ExponentTable {
    std::vector<std::vector<Int>> e;
    std::optional<PicClass> dmin;

    int m() const { return static_cast<int>(e.size()) - 1; }
    Int at(int l, int j) const { return e.at(l).at(j); }

    bool operator==(const ExponentTable&) const = default;
};

/// W_i = sum_{j>i} v_j dim Hom(G_i,G_j).
DimVector kernel_dims(const ExcCollection& c, const DimVector& v);

/// e_{l,j} = sum_{k>j} e_{l-1,k} dim Hom(G_j,G_k), starting from e0.
ExponentTable resolution_exponents(const ExcCollection& c, const DimVector& e0,
                                   std::optional<PicClass> dmin = std::nullopt);

/// (l, j) such that row l vanishes beyond j while row l+1 has a nonzero entry beyond j-1.
std::vector<std::pair<int, int>> staircase_violations(const ExponentTable& t);

/// Drops G_0 from degree 0, e_{0,0} -> 0 and e_{1,0} -> e_{1,0} - e_{0,0}.
ExponentTable reduce_no_trivial_quotient(const ExponentTable& t);

/// A summand mult * bundle placed in homological degree `degree` (sign (-1)^degree).
struct Term {
    int degree = 0;
    BundleSym bundle;
    Int mult = 0;

    bool operator==(const Term&) const = default;
};

std::vector<Term> terms_from_table(const ExcCollection& c, const ExponentTable& t);
std::vector<Term> twist_terms(const std::vector<Term>& terms, const PicClass& t);
/// Merges equal (degree, bundle) pairs, drops zero multiplicities, sorts.
std::vector<Term> normalize_terms(std::vector<Term> terms);

struct Check {
    std::vector<Int> lhs;
    std::vector<Int> rhs;
    bool ok = false;
};

struct VerifyReport {
    Check rank;
    Check det;
    std::optional<Check> chi;

    bool ok() const { return rank.ok && det.ok && (!chi || chi->ok); }
};

/// K-class check of an alternating sum of terms against a target bundle.
VerifyReport verify_terms(const Variety& v, const std::vector<Term>& terms, const ChernData& target);
VerifyReport verify_resolution(const ExcCollection& c, const ExponentTable& t, const ChernData& target);

/// Chern data of E(t) from that of E (all classes on Picard rank one, c1 and c2 on Q2).
ChernData twist_chern(const Variety& v, const ChernData& cd, const PicClass& t);

/// Chern classes of an alternating sum of line bundles; nullopt if a spinor term occurs.
std::optional<ChernData> chern_from_line_terms(const Variety& v, const std::vector<Term>& terms);

}  // namespace nefres
