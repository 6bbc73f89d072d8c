#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nefres {

using Int = std::int64_t;

enum class VarietyKind { ProjSpace, Quadric };

/// P^n (n >= 1) or a smooth quadric Q^n (n >= 2).
class Variety {
public:
    static Variety projective_space(int n);
    static Variety quadric(int n);
    /// Parses "P<n>" / "Q<n>".
    static Variety parse(std::string_view spec);

    VarietyKind kind() const { return kind_; }
    int dim() const { return dim_; }
    int picard_rank() const { return is_quadric_surface() ? 2 : 1; }

    bool is_projective_space() const { return kind_ == VarietyKind::ProjSpace; }
    bool is_quadric() const { return kind_ == VarietyKind::Quadric; }
    bool is_quadric_surface() const { return is_quadric() && dim_ == 2; }
    bool is_odd_quadric() const { return is_quadric() && dim_ % 2 == 1; }
    bool is_even_quadric() const { return is_quadric() && dim_ % 2 == 0; }
    bool is_surface() const { return dim_ == 2; }

    /// Degree of h^n in the fixed integer Chow convention: 1 on P^n, 2 on Q^n.
    Int top_degree() const { return is_quadric() ? 2 : 1; }

    std::string name() const;

    auto operator<=>(const Variety&) const = default;

private:
    Variety(VarietyKind kind, int dim) : kind_(kind), dim_(dim) {}

    VarietyKind kind_;
    int dim_;
};

/// Element of Pic X: one coordinate, or the pair (a,b) on Q^2.
class PicClass {
public:
    PicClass() = default;
    explicit PicClass(Int k) : coords_{k} {}
    PicClass(Int a, Int b) : coords_{a, b} {}
    explicit PicClass(std::vector<Int> coords) : coords_(std::move(coords)) {}

    static PicClass zero(const Variety& v);
    /// O(k) on Picard-rank-one varieties and the diagonal (k,k) on Q^2.
    static PicClass hyperplane(const Variety& v, Int k);

    std::size_t size() const { return coords_.size(); }
    Int operator[](std::size_t i) const { return coords_.at(i); }
    const std::vector<Int>& coords() const { return coords_; }

    /// The single coordinate; throws on Q^2 classes.
    Int degree() const;

    bool is_zero() const;
    /// Componentwise >= 0.
    bool effective() const;
    /// Componentwise <=.
    bool dominated_by(const PicClass& other) const;

    /// Throws InvalidInput unless the class has the Picard rank of v.
    void check(const Variety& v) const;

    PicClass operator-() const;
    PicClass& operator+=(const PicClass& o);
    PicClass& operator-=(const PicClass& o);
    friend PicClass operator+(PicClass a, const PicClass& b) { return a += b; }
    friend PicClass operator-(PicClass a, const PicClass& b) { return a -= b; }
    friend PicClass operator*(Int k, PicClass a);

    std::string str() const;

    bool operator==(const PicClass&) const = default;
    auto operator<=>(const PicClass&) const = default;

private:
    std::vector<Int> coords_;
};

/// Intersection pairing on a surface (P^2: d*d', Q^2: ad'+bc'), returned as a degree.
Int intersect(const Variety& v, const PicClass& x, const PicClass& y);

Int binomial(Int n, Int k);

using CohomologyVector = std::vector<Int>;

/// h^0..h^n of the line bundle O(t).
CohomologyVector line_cohomology(const Variety& v, const PicClass& t);

Int euler_characteristic(const CohomologyVector& h);

/// Rank, first Chern class and (optionally) higher Chern classes c_2, c_3, ...
/// Higher classes are coefficients of h^k; on surfaces c_2 is the degree.
struct ChernData {
    int rank = 1;
    PicClass c1;
    std::vector<Int> higher;

    std::optional<Int> c2() const;
};

/// Riemann-Roch on P^2 and Q^2.
Int euler_char_surface(const Variety& v, const ChernData& cd);

/// Degree of the top Segre class, i.e. H(E)^{n+r-1} on P(E).
Int segre_top(const Variety& v, const ChernData& cd);

/// -K_X as a Picard class.
PicClass anticanonical_class(const Variety& v);

}  // namespace nefres
