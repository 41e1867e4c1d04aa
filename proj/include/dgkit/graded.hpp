#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "dgkit/sparse.hpp"

namespace dgkit {

struct WindowOverflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Degree window [degree_min, degree_max] plus a cap on word length (weight).
struct Truncation {
    int degree_min = -8;
    int degree_max = 8;
    int weight_cap = 6;

    /// Parses "dmin:dmax:L".
    static Truncation parse(const std::string& text);
    bool contains(int degree) const { return degree >= degree_min && degree <= degree_max; }
    std::string to_string() const;
    friend bool operator==(const Truncation&, const Truncation&) = default;
};

struct BasisElement {
    std::string name;
    int degree = 0;
    int weight = 1;
    /// Structural key for derived spaces: factor indices for tensors and
    /// words, (source, target) for hom spaces, the original index for duals.
    std::vector<int> key;

    friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

/// Finite graded space with a named basis ordered by (degree, insertion order).
/// Each degree carries a completeness flag: false when the window dropped
/// basis elements of that degree (for instance words longer than the cap).
class GradedSpace {
public:
    GradedSpace(Field field, Truncation window, std::vector<BasisElement> elements,
                std::set<int> incomplete_degrees = {});

    const Field& field() const { return field_; }
    const Truncation& window() const { return window_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const BasisElement& operator[](int i) const { return basis_[i]; }
    const std::vector<BasisElement>& basis() const { return basis_; }
    int degree(int i) const { return basis_[i].degree; }
    int weight(int i) const { return basis_[i].weight; }
    const std::string& name(int i) const { return basis_[i].name; }
    const std::vector<int>& key(int i) const { return basis_[i].key; }

    std::optional<int> find(const std::string& name) const;
    std::optional<int> find_key(const std::vector<int>& key) const;
    /// Indices of the basis elements of degree n, in basis order.
    std::vector<int> in_degree(int n) const;
    std::map<int, int> dims() const;
    /// Degree n is complete when no basis element of that degree was dropped.
    bool complete(int n) const { return !incomplete_.count(n); }
    const std::set<int>& incomplete_degrees() const { return incomplete_; }

    Vec basis_vector(int i) const { return Vec(i, field_.one()); }
    /// Degree of a homogeneous element, nullopt for zero or mixed degrees.
    std::optional<int> degree_of(const Vec& v) const;
    /// Human readable element, e.g. "x.y - 1/2 z".
    std::string format(const Vec& v) const;

private:
    Field field_;
    Truncation window_;
    std::vector<BasisElement> basis_;
    std::unordered_map<std::string, int> by_name_;
    std::map<std::vector<int>, int> by_key_;
    std::set<int> incomplete_;
};

using SpacePtr = std::shared_ptr<const GradedSpace>;

/// Smallest window containing the given degrees, with the given weight cap.
Truncation hull(const std::vector<BasisElement>& elements, int weight_cap);

/// Homogeneous linear map stored as images of source basis elements.
struct GradedMap {
    SpacePtr source;
    SpacePtr target;
    int degree = 0;
    std::vector<Vec> columns;

    Vec apply(const Vec& v) const;
    Vec operator()(int i) const { return columns[i]; }
    /// First column violating homogeneity, as a message.
    std::optional<std::string> homogeneity_violation() const;

    static GradedMap zero(SpacePtr source, SpacePtr target, int degree);
    static GradedMap identity(SpacePtr space);
};

/// g after f; spaces must agree by basis names.
GradedMap compose(const GradedMap& g, const GradedMap& f);
bool same_basis(const GradedSpace& a, const GradedSpace& b);
bool operator==(const GradedMap& a, const GradedMap& b);

/// (-1)^{|x||y|} and the swapped pair.
std::pair<Scalar, std::pair<int, int>> koszul_swap(const GradedSpace& X, const GradedSpace& Y, int x, int y);
Vec2 koszul_swap(const GradedSpace& X, const GradedSpace& Y, const Vec2& v);

/// Basis pairs (x, y) keyed {x, y}, named "x|y". Without an explicit window
/// the output window is the hull of all pairs; with one, pairs outside it are
/// dropped or, in strict mode, raise WindowOverflow.
SpacePtr tensor_space(const GradedSpace& X, const GradedSpace& Y,
                      std::optional<Truncation> window = std::nullopt, bool strict = false);
/// Element of a tensor space from a pair combination; pairs missing from the
/// basis are dropped and clear *exact.
Vec from_pairs(const GradedSpace& XY, const Vec2& v, bool* exact = nullptr);
Vec2 to_pairs(const GradedSpace& XY, const Vec& v);

/// Basis [x,y] (the map sending x to y and the rest to zero), degree |y|-|x|.
SpacePtr hom_space(const GradedSpace& X, const GradedSpace& Y);
/// f(x) for f in a hom space built from (X, Y).
Vec evaluate(const GradedSpace& hom, const Vec& f, int x);
/// The element of hom(X,Y) given by a map (columns indexed by X).
Vec hom_element(const GradedSpace& hom, const std::vector<Vec>& images);

struct Curried {
    SpacePtr hom;
    GradedMap map;
};
/// lambda1(f)(y)(x) = f(x|y)(-1)^{|x||y|}, a map Y -> [X,Z].
Curried lambda1(const GradedSpace& X, const GradedSpace& Y, const GradedMap& f);
/// lambda2(f)(x)(y) = f(x|y), a map X -> [Y,Z].
Curried lambda2(const GradedSpace& X, const GradedSpace& Y, const GradedMap& f);
/// Inverses of the two transforms; XY is the tensor space used as source.
GradedMap uncurry1(const GradedSpace& X, SpacePtr XY, SpacePtr Z, const Curried& c);
GradedMap uncurry2(SpacePtr XY, SpacePtr Z, const Curried& c);

/// (f|g)(x|y) = f(x)|g(y) (-1)^{|g||x|}.
GradedMap strength_tensor(const GradedMap& f, const GradedMap& g, SpacePtr source = nullptr,
                          SpacePtr target = nullptr);

/// S^n X: basis "s(x)" (n = 1), "s^-1(x)" (n = -1) or "s^n(x)", degree |x|+n.
SpacePtr suspend(const GradedSpace& X, int n, bool strict = false);

/// Dual basis "x*" in degree -|x|, keyed by the original index.
SpacePtr graded_dual(const GradedSpace& X);
/// Transpose: tf(phi) = phi o f (-1)^{|phi||f|}, a map Y* -> X*.
GradedMap transpose(const GradedMap& f, SpacePtr source_dual = nullptr, SpacePtr target_dual = nullptr);
/// i_X(x) = (-1)^{|x|} x**.
GradedMap double_dual_map(SpacePtr X, SpacePtr X_double_dual);
/// (phi|psi)(x|y) = phi(x) psi(y) (-1)^{|x||psi|} for dual basis elements.
Scalar tensor_pairing(const GradedSpace& Xd, const GradedSpace& Yd, int phi, int psi,
                      const GradedSpace& X, int x, int y);

}  // namespace dgkit
