#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cubenori {

/**
 * Elementary cube: a product of intervals [k, k] or [k, k+1].
 *
 * Each coordinate is stored as the code 2*lo + (1 if non-degenerate), so the
 * natural lexicographic order on codes sorts by lower corner first. The cube
 * with no coordinates is the single point of ambient dimension 0.
 */
class Cube
{
public:
    Cube() = default;
    /// Throws InvalidCube unless every hi - lo is 0 or 1.
    static Cube from_intervals(const std::vector<std::pair<int, int>>& intervals);
    static Cube vertex(const std::vector<int>& coordinates);

    std::size_t ambient() const noexcept { return code_.size(); }
    int dimension() const noexcept { return dimension_; }

    int lo(std::size_t i) const;
    int hi(std::size_t i) const { return lo(i) + (nondegenerate(i) ? 1 : 0); }
    bool nondegenerate(std::size_t i) const { return (code_[i] & 1) != 0; }
    std::vector<std::size_t> nondegenerate_coordinates() const;
    std::vector<std::pair<int, int>> intervals() const;

    /// Face obtained by collapsing coordinate i (non-degenerate) to its lower or upper end.
    Cube face(std::size_t i, bool upper) const;
    /// Signed boundary: the m-th free coordinate contributes (-1)^m (upper - lower).
    std::vector<std::pair<Cube, int>> boundary() const;

    /// Coordinates [begin, end) as a cube of smaller ambient dimension.
    Cube slice(std::size_t begin, std::size_t end) const;

    std::string to_string() const;

    friend Cube operator*(const Cube& a, const Cube& b);
    friend bool operator==(const Cube& a, const Cube& b) { return a.code_ == b.code_; }
    friend auto operator<=>(const Cube& a, const Cube& b) { return a.code_ <=> b.code_; }

private:
    explicit Cube(std::vector<int> code);

    std::vector<int> code_;
    int dimension_ = 0;
};

/**
 * Finite face-closed set of elementary cubes in a fixed ambient dimension.
 * Cubes are kept grouped by dimension and sorted within each group; the
 * position of a cube in its group is its index in cochain bases.
 */
class CubicalComplex
{
public:
    /// The empty complex in ambient dimension 0.
    CubicalComplex() = default;
    /// Throws InvalidCube on an ambient mismatch and NotFaceClosed when a face is missing.
    CubicalComplex(std::size_t ambient, std::vector<Cube> cubes);

    static CubicalComplex empty(std::size_t ambient);
    /// Smallest complex containing the given cubes.
    static CubicalComplex closure(std::size_t ambient, const std::vector<Cube>& cubes);

    std::size_t ambient() const noexcept { return ambient_; }
    /// Maximal cube dimension, -1 when empty.
    int dimension() const noexcept { return static_cast<int>(by_dimension_.size()) - 1; }
    bool is_empty() const noexcept { return by_dimension_.empty(); }
    std::size_t size() const;

    /// Cubes of dimension n in basis order (empty outside [0, dimension()]).
    const std::vector<Cube>& cubes(int n) const;
    std::size_t count(int n) const { return cubes(n).size(); }
    std::vector<Cube> all_cubes() const;

    bool contains(const Cube& c) const;
    std::optional<std::size_t> index_of(const Cube& c) const;
    bool is_subcomplex_of(const CubicalComplex& other) const;

    /// Lower and upper corner of the bounding box; empty vectors for the empty complex.
    std::pair<std::vector<int>, std::vector<int>> bounding_box() const;

    std::string to_string() const;

    friend bool operator==(const CubicalComplex& a, const CubicalComplex& b);

private:
    std::size_t ambient_ = 0;
    std::vector<std::vector<Cube>> by_dimension_;
};

/// X x Y by concatenating intervals; empty if either factor is empty.
CubicalComplex product(const CubicalComplex& x, const CubicalComplex& y);
CubicalComplex join(const CubicalComplex& y, const CubicalComplex& z, const CubicalComplex& within);
CubicalComplex intersection(const CubicalComplex& y, const CubicalComplex& z, const CubicalComplex& within);
CubicalComplex skeleton(const CubicalComplex& x, int p);
/// Structural isomorphism: a coordinate permutation followed by a translation.
bool isomorphic(const CubicalComplex& a, const CubicalComplex& b);

/// (X, Y) with Y a subcomplex of X.
class SubcomplexPair
{
public:
    SubcomplexPair() = default;
    /// Throws NotASubcomplex unless sub is contained in total.
    SubcomplexPair(CubicalComplex total, CubicalComplex sub);
    /// (X, empty).
    static SubcomplexPair absolute(const CubicalComplex& x);

    const CubicalComplex& total() const noexcept { return total_; }
    const CubicalComplex& sub() const noexcept { return sub_; }

    /// Cubes of X outside Y of dimension n, in basis order.
    std::vector<Cube> relative_cubes(int n) const;

    friend bool operator==(const SubcomplexPair& a, const SubcomplexPair& b)
    {
        return a.total_ == b.total_ && a.sub_ == b.sub_;
    }

private:
    CubicalComplex total_;
    CubicalComplex sub_;
};

/// (X x X', X x Y' + Y x X').
SubcomplexPair pair_product(const SubcomplexPair& p, const SubcomplexPair& q);

/**
 * How one target coordinate is computed from a source vertex: either a
 * constant or a function of one source coordinate, given by an affine rule
 * or by a table of values on consecutive integers. Adjacent arguments must
 * have values differing by at most one.
 */
struct CoordinateRule
{
    enum class Kind { constant, affine, table };

    Kind kind = Kind::constant;
    std::size_t source = 0;
    int constant = 0;
    int scale = 1;
    int offset = 0;
    int origin = 0;
    std::vector<int> values;

    static CoordinateRule fixed(int value);
    /// t = scale * s + offset with scale in {-1, 0, 1}.
    static CoordinateRule affine(std::size_t source, int scale = 1, int offset = 0);
    /// t = values[s - origin].
    static CoordinateRule tabulated(std::size_t source, int origin, std::vector<int> values);
};

/**
 * Map of cubical complexes defined coordinate-wise on vertices.
 *
 * The image of an elementary cube is the product of the coordinate images of
 * its intervals. The constructor checks that every source cube lands on a
 * cube of the target and that no free coordinate drives two moving target
 * coordinates.
 */
class CubicalMap
{
public:
    /// Throws NotACubicalMap when the rules do not define a map source -> target.
    CubicalMap(CubicalComplex source, CubicalComplex target, std::vector<CoordinateRule> rules);

    static CubicalMap identity(const CubicalComplex& x);
    /// Inclusion of a subcomplex; throws NotASubcomplex.
    static CubicalMap inclusion(const CubicalComplex& sub, const CubicalComplex& x);
    /// Constant map onto a vertex of the target.
    static CubicalMap constant(const CubicalComplex& source, const CubicalComplex& target,
                               const std::vector<int>& vertex);
    /// Projection X x Y -> X or X x Y -> Y.
    static CubicalMap projection(const CubicalComplex& x, const CubicalComplex& y, bool onto_first);
    /// Swap X x Y -> Y x X.
    static CubicalMap swap(const CubicalComplex& x, const CubicalComplex& y);

    const CubicalComplex& source() const noexcept { return source_; }
    const CubicalComplex& target() const noexcept { return target_; }
    const std::vector<CoordinateRule>& rules() const noexcept { return rules_; }

    int map_coordinate(std::size_t target_coordinate, const std::vector<int>& vertex) const;
    std::vector<int> map_vertex(const std::vector<int>& vertex) const;
    Cube image(const Cube& c) const;
    /// Coefficient of image(c) in the induced chain map: 0 when the dimension
    /// drops, otherwise the sign of the permutation of free coordinates times
    /// the orientation of each coordinate image.
    int chain_sign(const Cube& c) const;

private:
    struct Edge
    {
        int image_lo;
        int direction; // -1, 0 or +1
    };
    Edge map_interval(std::size_t target_coordinate, const Cube& c) const;
    void validate() const;

    CubicalComplex source_;
    CubicalComplex target_;
    std::vector<CoordinateRule> rules_;
};

/// g o f.
CubicalMap compose(const CubicalMap& g, const CubicalMap& f);
/// f x g : X x X' -> Y x Y'.
CubicalMap product(const CubicalMap& f, const CubicalMap& g);

CubicalComplex direct_image(const CubicalMap& f, const CubicalComplex& y);
CubicalComplex inverse_image(const CubicalMap& f, const CubicalComplex& y);

/// Map of pairs (X, Y) -> (X', Y'); throws NotAPairMap unless f(Y) lies in Y'.
class PairMap
{
public:
    PairMap(SubcomplexPair source, SubcomplexPair target, CubicalMap map);

    static PairMap identity(const SubcomplexPair& p);
    /// The identity of X viewed as (X, Y) -> (X', Y') for Y in Y', X in X'.
    static PairMap inclusion(const SubcomplexPair& source, const SubcomplexPair& target);

    const SubcomplexPair& source() const noexcept { return source_; }
    const SubcomplexPair& target() const noexcept { return target_; }
    const CubicalMap& map() const noexcept { return map_; }

private:
    SubcomplexPair source_;
    SubcomplexPair target_;
    CubicalMap map_;
};

PairMap compose(const PairMap& g, const PairMap& f);
PairMap pair_product(const PairMap& f, const PairMap& g);

/// Z in Y in X.
class Triple
{
public:
    /// Throws NotATriple unless z is in y and y is in x.
    Triple(CubicalComplex x, CubicalComplex y, CubicalComplex z);

    const CubicalComplex& x() const noexcept { return x_; }
    const CubicalComplex& y() const noexcept { return y_; }
    const CubicalComplex& z() const noexcept { return z_; }

    SubcomplexPair outer() const { return SubcomplexPair(x_, y_); }  ///< (X, Y)
    SubcomplexPair whole() const { return SubcomplexPair(x_, z_); }  ///< (X, Z)
    SubcomplexPair inner() const { return SubcomplexPair(y_, z_); }  ///< (Y, Z)

private:
    CubicalComplex x_;
    CubicalComplex y_;
    CubicalComplex z_;
};

/// X = Y + Z with Y, Z subcomplexes.
class Cover
{
public:
    /// Throws NotACover unless join(y, z) == x.
    Cover(CubicalComplex x, CubicalComplex y, CubicalComplex z);

    const CubicalComplex& x() const noexcept { return x_; }
    const CubicalComplex& y() const noexcept { return y_; }
    const CubicalComplex& z() const noexcept { return z_; }
    const CubicalComplex& overlap() const noexcept { return overlap_; }

private:
    CubicalComplex x_;
    CubicalComplex y_;
    CubicalComplex z_;
    CubicalComplex overlap_;
};

namespace shapes {

/// Single vertex, ambient dimension 0; the final object.
CubicalComplex point();
/// Solid box [0, n_1] x ... x [0, n_k].
CubicalComplex box(const std::vector<int>& extents);
/// All cubes of the box lying on its topological boundary.
CubicalComplex box_boundary(const std::vector<int>& extents);
CubicalComplex interval();
CubicalComplex interval_boundary();
CubicalComplex square();
CubicalComplex square_boundary();
CubicalComplex solid_cube();
CubicalComplex cube_boundary();
/// Boundary of the square times itself: a 2-torus.
CubicalComplex torus();
/// Boundary of the square times the solid square.
CubicalComplex solid_torus();
/// The solid torus relative to a loop on its surface that winds twice
/// around the core; H^2 of this pair is Z/2.
SubcomplexPair double_loop_pair();

} // namespace shapes

} // namespace cubenori
