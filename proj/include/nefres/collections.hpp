#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nefres/geometry.hpp"

namespace nefres {

enum class Flavor { Line, Spinor, SpinorPlus, SpinorMinus };

std::string flavor_name(Flavor f);
Flavor parse_flavor(const std::string& s);

/// Spinor data on Q^n, n >= 3.
int spinor_s(const Variety& v);
Int spinor_rank(const Variety& v);
Int spinor_sections(const Variety& v);

/// A line bundle O(t), or a spinor bundle twisted by O(t).
struct BundleSym {
    Flavor flavor = Flavor::Line;
    PicClass twist;

    static BundleSym line(PicClass t) { return {Flavor::Line, std::move(t)}; }
    static BundleSym spinor(Flavor f, Int t = 0) { return {f, PicClass(t)}; }

    bool is_line() const { return flavor == Flavor::Line; }
    bool is_spinor() const { return !is_line(); }

    /// Throws unless the flavor is allowed on v.
    void check(const Variety& v) const;

    Int rank(const Variety& v) const;
    PicClass c1(const Variety& v) const;
    BundleSym twisted(const PicClass& t) const;

    std::string str() const;

    bool operator==(const BundleSym&) const = default;
    auto operator<=>(const BundleSym&) const = default;
};

/// Flavor of the dual spinor: S^v = S'(-1).
Flavor dual_spinor(const Variety& v, Flavor f);

/// h^0(S(t)) for t >= -1 by the tautological-sequence recursion.
Int spinor_twisted_sections(const Variety& v, Flavor f, Int t);

/// dim Ext^q(a, b) for q = 0..n, or nullopt when this library has no trusted value.
std::optional<std::vector<Int>> ext_dims(const Variety& v, const BundleSym& a, const BundleSym& b);

/// Where an entry of the spinor Ext table comes from.
std::string ext_justification(const Variety& v, const BundleSym& a, const BundleSym& b);

class ExcCollection {
public:
    ExcCollection(Variety v, std::vector<BundleSym> gens);

    const Variety& variety() const { return variety_; }
    const std::vector<BundleSym>& gens() const { return gens_; }
    const std::vector<std::vector<Int>>& hom() const { return hom_; }
    std::size_t size() const { return gens_.size(); }
    int m() const { return static_cast<int>(gens_.size()) - 1; }

    Int hom_dim(int j, int k) const;

private:
    Variety variety_;
    std::vector<BundleSym> gens_;
    std::vector<std::vector<Int>> hom_;
};

ExcCollection standard_collection(const Variety& v);
ExcCollection twist_collection(const ExcCollection& c, const PicClass& t);

struct ExtFailure {
    int j;
    int k;
    int q;
    Int dim;  // -1 when unverifiable
    bool operator==(const ExtFailure&) const = default;
};

struct ValidationReport {
    bool ok = true;
    std::vector<ExtFailure> failures;
    std::vector<ExtFailure> unverifiable;
};

/// Checks RHom(G_j,G_j) = K, RHom(G_j,G_k) = 0 for j > k and Ext^{>0}(G_j,G_k) = 0 for j < k.
ValidationReport validate_strong_exceptional(const Variety& v, const std::vector<BundleSym>& gens);
ValidationReport validate_strong_exceptional(const ExcCollection& c);

}  // namespace nefres
