#include "cubenori/cubes.hpp"

#include "cubenori/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace cubenori {

// ---------------------------------------------------------------------------
// Cube

Cube::Cube(std::vector<int> code) : code_(std::move(code))
{
    for (int c : code_)
        dimension_ += c & 1;
}

Cube Cube::from_intervals(const std::vector<std::pair<int, int>>& intervals)
{
    std::vector<int> code;
    code.reserve(intervals.size());
    for (const auto& [lo, hi] : intervals) {
        if (hi - lo != 0 && hi - lo != 1)
            throw InvalidCube("interval [" + std::to_string(lo) + "," + std::to_string(hi) +
                              "] is not elementary");
        code.push_back(2 * lo + (hi - lo));
    }
    return Cube(std::move(code));
}

Cube Cube::vertex(const std::vector<int>& coordinates)
{
    std::vector<int> code;
    code.reserve(coordinates.size());
    for (int x : coordinates)
        code.push_back(2 * x);
    return Cube(std::move(code));
}

int Cube::lo(std::size_t i) const
{
    // floor division keeps negative coordinates right
    const int c = code_[i];
    return (c - (c & 1)) / 2;
}

std::vector<std::size_t> Cube::nondegenerate_coordinates() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < code_.size(); ++i)
        if (nondegenerate(i))
            out.push_back(i);
    return out;
}

std::vector<std::pair<int, int>> Cube::intervals() const
{
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < code_.size(); ++i)
        out.emplace_back(lo(i), hi(i));
    return out;
}

Cube Cube::face(std::size_t i, bool upper) const
{
    if (!nondegenerate(i))
        throw InvalidCube("face along a degenerate coordinate");
    std::vector<int> code = code_;
    code[i] = 2 * (lo(i) + (upper ? 1 : 0));
    return Cube(std::move(code));
}

std::vector<std::pair<Cube, int>> Cube::boundary() const
{
    std::vector<std::pair<Cube, int>> out;
    int sign = 1;
    for (std::size_t i : nondegenerate_coordinates()) {
        out.emplace_back(face(i, true), sign);
        out.emplace_back(face(i, false), -sign);
        sign = -sign;
    }
    return out;
}

Cube Cube::slice(std::size_t begin, std::size_t end) const
{
    return Cube(std::vector<int>(code_.begin() + static_cast<long>(begin), code_.begin() + static_cast<long>(end)));
}

std::string Cube::to_string() const
{
    if (code_.empty())
        return "pt";
    std::ostringstream os;
    for (std::size_t i = 0; i < code_.size(); ++i) {
        if (i)
            os << 'x';
        if (nondegenerate(i))
            os << '[' << lo(i) << ',' << hi(i) << ']';
        else
            os << '[' << lo(i) << ']';
    }
    return os.str();
}

Cube operator*(const Cube& a, const Cube& b)
{
    std::vector<int> code = a.code_;
    code.insert(code.end(), b.code_.begin(), b.code_.end());
    return Cube(std::move(code));
}

// ---------------------------------------------------------------------------
// CubicalComplex

namespace {

const std::vector<Cube>& no_cubes()
{
    static const std::vector<Cube> none;
    return none;
}

} // namespace

CubicalComplex::CubicalComplex(std::size_t ambient, std::vector<Cube> cubes) : ambient_(ambient)
{
    std::sort(cubes.begin(), cubes.end());
    cubes.erase(std::unique(cubes.begin(), cubes.end()), cubes.end());
    for (auto& c : cubes) {
        if (c.ambient() != ambient_)
            throw InvalidCube("cube " + c.to_string() + " is not in ambient dimension " + std::to_string(ambient_));
        const auto d = static_cast<std::size_t>(c.dimension());
        if (by_dimension_.size() <= d)
            by_dimension_.resize(d + 1);
        by_dimension_[d].push_back(std::move(c));
    }
    for (const auto& group : by_dimension_)
        for (const auto& c : group)
            for (const auto& [f, s] : c.boundary())
                if (!contains(f))
                    throw NotFaceClosed("face " + f.to_string() + " of " + c.to_string() + " is missing");
}

CubicalComplex CubicalComplex::empty(std::size_t ambient)
{
    CubicalComplex c;
    c.ambient_ = ambient;
    return c;
}

CubicalComplex CubicalComplex::closure(std::size_t ambient, const std::vector<Cube>& cubes)
{
    std::set<Cube> all;
    std::vector<Cube> pending(cubes.begin(), cubes.end());
    while (!pending.empty()) {
        Cube c = std::move(pending.back());
        pending.pop_back();
        if (c.ambient() != ambient)
            throw InvalidCube("cube " + c.to_string() + " is not in ambient dimension " + std::to_string(ambient));
        if (!all.insert(c).second)
            continue;
        for (const auto& [f, s] : c.boundary())
            pending.push_back(f);
    }
    return CubicalComplex(ambient, std::vector<Cube>(all.begin(), all.end()));
}

std::size_t CubicalComplex::size() const
{
    std::size_t n = 0;
    for (const auto& g : by_dimension_)
        n += g.size();
    return n;
}

const std::vector<Cube>& CubicalComplex::cubes(int n) const
{
    if (n < 0 || n > dimension())
        return no_cubes();
    return by_dimension_[static_cast<std::size_t>(n)];
}

std::vector<Cube> CubicalComplex::all_cubes() const
{
    std::vector<Cube> out;
    for (const auto& g : by_dimension_)
        out.insert(out.end(), g.begin(), g.end());
    return out;
}

std::optional<std::size_t> CubicalComplex::index_of(const Cube& c) const
{
    if (c.ambient() != ambient_)
        return std::nullopt;
    const auto& group = cubes(c.dimension());
    const auto it = std::lower_bound(group.begin(), group.end(), c);
    if (it == group.end() || !(*it == c))
        return std::nullopt;
    return static_cast<std::size_t>(it - group.begin());
}

bool CubicalComplex::contains(const Cube& c) const
{
    return index_of(c).has_value();
}

bool CubicalComplex::is_subcomplex_of(const CubicalComplex& other) const
{
    if (is_empty())
        return true;
    if (ambient_ != other.ambient_)
        return false;
    for (const auto& g : by_dimension_)
        for (const auto& c : g)
            if (!other.contains(c))
                return false;
    return true;
}

std::pair<std::vector<int>, std::vector<int>> CubicalComplex::bounding_box() const
{
    if (is_empty())
        return {};
    std::vector<int> lo(ambient_), hi(ambient_);
    bool first = true;
    for (const auto& c : cubes(0)) {
        for (std::size_t i = 0; i < ambient_; ++i) {
            lo[i] = first ? c.lo(i) : std::min(lo[i], c.lo(i));
            hi[i] = first ? c.lo(i) : std::max(hi[i], c.lo(i));
        }
        first = false;
    }
    return {lo, hi};
}

std::string CubicalComplex::to_string() const
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& g : by_dimension_)
        for (const auto& c : g) {
            os << (first ? "" : ", ") << c.to_string();
            first = false;
        }
    os << '}';
    return os.str();
}

bool operator==(const CubicalComplex& a, const CubicalComplex& b)
{
    if (a.is_empty() && b.is_empty())
        return true;
    return a.ambient_ == b.ambient_ && a.by_dimension_ == b.by_dimension_;
}

CubicalComplex product(const CubicalComplex& x, const CubicalComplex& y)
{
    const std::size_t ambient = x.ambient() + y.ambient();
    std::vector<Cube> cubes;
    cubes.reserve(x.size() * y.size());
    for (const auto& a : x.all_cubes())
        for (const auto& b : y.all_cubes())
            cubes.push_back(a * b);
    return CubicalComplex(ambient, std::move(cubes));
}

namespace {

void require_sub(const CubicalComplex& y, const CubicalComplex& x, const char* what)
{
    if (!y.is_subcomplex_of(x))
        throw NotASubcomplex(std::string(what) + " is not a subcomplex of the ambient complex");
}

} // namespace

CubicalComplex join(const CubicalComplex& y, const CubicalComplex& z, const CubicalComplex& within)
{
    require_sub(y, within, "first argument");
    require_sub(z, within, "second argument");
    std::vector<Cube> cubes = y.all_cubes();
    const auto more = z.all_cubes();
    cubes.insert(cubes.end(), more.begin(), more.end());
    return CubicalComplex(within.ambient(), std::move(cubes));
}

CubicalComplex intersection(const CubicalComplex& y, const CubicalComplex& z, const CubicalComplex& within)
{
    require_sub(y, within, "first argument");
    require_sub(z, within, "second argument");
    std::vector<Cube> cubes;
    for (const auto& c : y.all_cubes())
        if (z.contains(c))
            cubes.push_back(c);
    return CubicalComplex(within.ambient(), std::move(cubes));
}

CubicalComplex skeleton(const CubicalComplex& x, int p)
{
    std::vector<Cube> cubes;
    for (int n = 0; n <= std::min(p, x.dimension()); ++n)
        cubes.insert(cubes.end(), x.cubes(n).begin(), x.cubes(n).end());
    return CubicalComplex(x.ambient(), std::move(cubes));
}

bool isomorphic(const CubicalComplex& a, const CubicalComplex& b)
{
    if (a.is_empty() || b.is_empty())
        return a.is_empty() && b.is_empty();
    if (a.ambient() != b.ambient() || a.size() != b.size())
        return false;
    for (int n = 0; n <= a.dimension(); ++n)
        if (a.count(n) != b.count(n))
            return false;
    const std::size_t k = a.ambient();
    const auto [alo, ahi] = a.bounding_box();
    const auto [blo, bhi] = b.bounding_box();
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do {
        bool ok = true;
        for (std::size_t i = 0; i < k && ok; ++i)
            ok = ahi[perm[i]] - alo[perm[i]] == bhi[i] - blo[i];
        if (!ok)
            continue;
        for (const auto& c : a.all_cubes()) {
            std::vector<std::pair<int, int>> iv(k);
            for (std::size_t i = 0; i < k; ++i) {
                const int shift = blo[i] - alo[perm[i]];
                iv[i] = {c.lo(perm[i]) + shift, c.hi(perm[i]) + shift};
            }
            if (!b.contains(Cube::from_intervals(iv))) {
                ok = false;
                break;
            }
        }
        if (ok)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// ---------------------------------------------------------------------------
// Pairs

SubcomplexPair::SubcomplexPair(CubicalComplex total, CubicalComplex sub)
    : total_(std::move(total)), sub_(std::move(sub))
{
    if (!sub_.is_subcomplex_of(total_))
        throw NotASubcomplex("pair " + sub_.to_string() + " is not inside " + total_.to_string());
    if (sub_.is_empty())
        sub_ = CubicalComplex::empty(total_.ambient());
}

SubcomplexPair SubcomplexPair::absolute(const CubicalComplex& x)
{
    return SubcomplexPair(x, CubicalComplex::empty(x.ambient()));
}

std::vector<Cube> SubcomplexPair::relative_cubes(int n) const
{
    std::vector<Cube> out;
    for (const auto& c : total_.cubes(n))
        if (!sub_.contains(c))
            out.push_back(c);
    return out;
}

SubcomplexPair pair_product(const SubcomplexPair& p, const SubcomplexPair& q)
{
    const CubicalComplex total = product(p.total(), q.total());
    const CubicalComplex sub = join(product(p.total(), q.sub()), product(p.sub(), q.total()), total);
    return SubcomplexPair(total, sub);
}

// ---------------------------------------------------------------------------
// Maps

CoordinateRule CoordinateRule::fixed(int value)
{
    CoordinateRule r;
    r.kind = Kind::constant;
    r.constant = value;
    return r;
}

CoordinateRule CoordinateRule::affine(std::size_t source, int scale, int offset)
{
    if (scale < -1 || scale > 1)
        throw NotACubicalMap("affine coordinate rule needs scale -1, 0 or 1");
    CoordinateRule r;
    r.kind = Kind::affine;
    r.source = source;
    r.scale = scale;
    r.offset = offset;
    return r;
}

CoordinateRule CoordinateRule::tabulated(std::size_t source, int origin, std::vector<int> values)
{
    for (std::size_t i = 0; i + 1 < values.size(); ++i)
        if (std::abs(values[i + 1] - values[i]) > 1)
            throw NotACubicalMap("table values must change by at most one per step");
    CoordinateRule r;
    r.kind = Kind::table;
    r.source = source;
    r.origin = origin;
    r.values = std::move(values);
    return r;
}

CubicalMap::CubicalMap(CubicalComplex source, CubicalComplex target, std::vector<CoordinateRule> rules)
    : source_(std::move(source)), target_(std::move(target)), rules_(std::move(rules))
{
    validate();
}

int CubicalMap::map_coordinate(std::size_t j, const std::vector<int>& v) const
{
    const CoordinateRule& r = rules_[j];
    switch (r.kind) {
    case CoordinateRule::Kind::constant:
        return r.constant;
    case CoordinateRule::Kind::affine:
        return r.scale * v[r.source] + r.offset;
    case CoordinateRule::Kind::table: {
        const long k = static_cast<long>(v[r.source]) - r.origin;
        if (k < 0 || k >= static_cast<long>(r.values.size()))
            throw NotACubicalMap("coordinate " + std::to_string(v[r.source]) + " outside the table");
        return r.values[static_cast<std::size_t>(k)];
    }
    }
    return 0;
}

std::vector<int> CubicalMap::map_vertex(const std::vector<int>& v) const
{
    std::vector<int> out(rules_.size());
    for (std::size_t j = 0; j < rules_.size(); ++j)
        out[j] = map_coordinate(j, v);
    return out;
}

CubicalMap::Edge CubicalMap::map_interval(std::size_t j, const Cube& c) const
{
    const CoordinateRule& r = rules_[j];
    std::vector<int> low(c.ambient());
    for (std::size_t i = 0; i < c.ambient(); ++i)
        low[i] = c.lo(i);
    const int a = map_coordinate(j, low);
    if (r.kind == CoordinateRule::Kind::constant || !c.nondegenerate(r.source))
        return {a, 0};
    low[r.source] += 1;
    const int b = map_coordinate(j, low);
    if (b == a)
        return {a, 0};
    return {std::min(a, b), b > a ? 1 : -1};
}

Cube CubicalMap::image(const Cube& c) const
{
    std::vector<std::pair<int, int>> iv(rules_.size());
    for (std::size_t j = 0; j < rules_.size(); ++j) {
        const Edge e = map_interval(j, c);
        iv[j] = {e.image_lo, e.image_lo + (e.direction != 0 ? 1 : 0)};
    }
    return Cube::from_intervals(iv);
}

int CubicalMap::chain_sign(const Cube& c) const
{
    // free target coordinates in order, each tagged with the position of the
    // source coordinate driving it among the free source coordinates
    const auto free_source = c.nondegenerate_coordinates();
    std::vector<std::size_t> order;
    int sign = 1;
    for (std::size_t j = 0; j < rules_.size(); ++j) {
        const Edge e = map_interval(j, c);
        if (e.direction == 0)
            continue;
        sign *= e.direction;
        const auto pos = std::find(free_source.begin(), free_source.end(), rules_[j].source) - free_source.begin();
        order.push_back(static_cast<std::size_t>(pos));
    }
    if (order.size() != free_source.size())
        return 0;
    for (std::size_t a = 0; a < order.size(); ++a)
        for (std::size_t b = a + 1; b < order.size(); ++b)
            if (order[a] > order[b])
                sign = -sign;
    return sign;
}

void CubicalMap::validate() const
{
    if (!source_.is_empty() && rules_.size() != target_.ambient())
        throw NotACubicalMap("expected " + std::to_string(target_.ambient()) + " coordinate rules, got " +
                             std::to_string(rules_.size()));
    for (const auto& r : rules_)
        if (r.kind != CoordinateRule::Kind::constant && r.source >= source_.ambient())
            throw NotACubicalMap("rule reads coordinate " + std::to_string(r.source) + " of a " +
                                 std::to_string(source_.ambient()) + "-dimensional source");
    for (const auto& c : source_.all_cubes()) {
        std::vector<int> movers(c.ambient(), 0);
        for (std::size_t j = 0; j < rules_.size(); ++j)
            if (map_interval(j, c).direction != 0)
                ++movers[rules_[j].source];
        for (int m : movers)
            if (m > 1)
                throw NotACubicalMap("cube " + c.to_string() + " is sent to a diagonal");
        const Cube img = image(c);
        if (!target_.contains(img))
            throw NotACubicalMap("image " + img.to_string() + " of " + c.to_string() + " is not in the target");
    }
}

CubicalMap CubicalMap::identity(const CubicalComplex& x)
{
    std::vector<CoordinateRule> rules;
    for (std::size_t i = 0; i < x.ambient(); ++i)
        rules.push_back(CoordinateRule::affine(i));
    return CubicalMap(x, x, std::move(rules));
}

CubicalMap CubicalMap::inclusion(const CubicalComplex& sub, const CubicalComplex& x)
{
    if (!sub.is_subcomplex_of(x))
        throw NotASubcomplex("inclusion of a complex that is not a subcomplex");
    std::vector<CoordinateRule> rules;
    for (std::size_t i = 0; i < x.ambient(); ++i)
        rules.push_back(CoordinateRule::affine(i));
    const CubicalComplex s = sub.is_empty() ? CubicalComplex::empty(x.ambient()) : sub;
    return CubicalMap(s, x, std::move(rules));
}

CubicalMap CubicalMap::constant(const CubicalComplex& source, const CubicalComplex& target,
                                const std::vector<int>& vertex)
{
    std::vector<CoordinateRule> rules;
    for (int v : vertex)
        rules.push_back(CoordinateRule::fixed(v));
    return CubicalMap(source, target, std::move(rules));
}

CubicalMap CubicalMap::projection(const CubicalComplex& x, const CubicalComplex& y, bool onto_first)
{
    std::vector<CoordinateRule> rules;
    const std::size_t begin = onto_first ? 0 : x.ambient();
    const std::size_t count = onto_first ? x.ambient() : y.ambient();
    for (std::size_t i = 0; i < count; ++i)
        rules.push_back(CoordinateRule::affine(begin + i));
    return CubicalMap(product(x, y), onto_first ? x : y, std::move(rules));
}

CubicalMap CubicalMap::swap(const CubicalComplex& x, const CubicalComplex& y)
{
    std::vector<CoordinateRule> rules;
    for (std::size_t i = 0; i < y.ambient(); ++i)
        rules.push_back(CoordinateRule::affine(x.ambient() + i));
    for (std::size_t i = 0; i < x.ambient(); ++i)
        rules.push_back(CoordinateRule::affine(i));
    return CubicalMap(product(x, y), product(y, x), std::move(rules));
}

CubicalMap compose(const CubicalMap& g, const CubicalMap& f)
{
    if (!(f.target() == g.source()))
        throw CompositionMismatch("cubical maps are not composable");
    const CubicalComplex& x = f.source();
    std::vector<CoordinateRule> rules;
    const auto [lo, hi] = x.bounding_box();
    for (std::size_t j = 0; j < g.rules().size(); ++j) {
        const CoordinateRule& outer = g.rules()[j];
        if (outer.kind == CoordinateRule::Kind::constant) {
            rules.push_back(outer);
            continue;
        }
        const CoordinateRule& inner = f.rules()[outer.source];
        if (inner.kind == CoordinateRule::Kind::constant || x.is_empty()) {
            std::vector<int> v(g.source().ambient(), 0);
            v[outer.source] = inner.constant;
            rules.push_back(CoordinateRule::fixed(x.is_empty() ? 0 : g.map_coordinate(j, v)));
            continue;
        }
        // tabulate over the source bounding box
        const std::size_t s = inner.source;
        std::vector<int> values;
        std::vector<int> probe(x.ambient(), 0);
        for (int t = lo[s]; t <= hi[s]; ++t) {
            probe[s] = t;
            std::vector<int> mid(g.source().ambient(), 0);
            mid[outer.source] = f.map_coordinate(outer.source, probe);
            values.push_back(g.map_coordinate(j, mid));
        }
        rules.push_back(CoordinateRule::tabulated(s, lo[s], std::move(values)));
    }
    return CubicalMap(x, g.target(), std::move(rules));
}

CubicalMap product(const CubicalMap& f, const CubicalMap& g)
{
    std::vector<CoordinateRule> rules = f.rules();
    for (CoordinateRule r : g.rules()) {
        r.source += f.source().ambient();
        rules.push_back(std::move(r));
    }
    return CubicalMap(product(f.source(), g.source()), product(f.target(), g.target()), std::move(rules));
}

CubicalComplex direct_image(const CubicalMap& f, const CubicalComplex& y)
{
    if (!y.is_subcomplex_of(f.source()))
        throw NotASubcomplex("direct image of a complex outside the source");
    std::vector<Cube> cubes;
    for (const auto& c : y.all_cubes())
        cubes.push_back(f.image(c));
    return CubicalComplex::closure(f.target().ambient(), cubes);
}

CubicalComplex inverse_image(const CubicalMap& f, const CubicalComplex& y)
{
    if (!y.is_subcomplex_of(f.target()))
        throw NotASubcomplex("inverse image of a complex outside the target");
    std::vector<Cube> cubes;
    for (const auto& c : f.source().all_cubes())
        if (y.contains(f.image(c)))
            cubes.push_back(c);
    return CubicalComplex(f.source().ambient(), std::move(cubes));
}

PairMap::PairMap(SubcomplexPair source, SubcomplexPair target, CubicalMap map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map))
{
    if (!(map_.source() == source_.total()) || !(map_.target() == target_.total()))
        throw NotAPairMap("underlying map does not run between the total complexes");
    for (const auto& c : source_.sub().all_cubes())
        if (!target_.sub().contains(map_.image(c)))
            throw NotAPairMap("cube " + c.to_string() + " of the subcomplex leaves the target subcomplex");
}

PairMap PairMap::identity(const SubcomplexPair& p)
{
    return PairMap(p, p, CubicalMap::identity(p.total()));
}

PairMap PairMap::inclusion(const SubcomplexPair& source, const SubcomplexPair& target)
{
    return PairMap(source, target, CubicalMap::inclusion(source.total(), target.total()));
}

PairMap compose(const PairMap& g, const PairMap& f)
{
    if (!(f.target() == g.source()))
        throw CompositionMismatch("pair maps are not composable");
    return PairMap(f.source(), g.target(), compose(g.map(), f.map()));
}

PairMap pair_product(const PairMap& f, const PairMap& g)
{
    return PairMap(pair_product(f.source(), g.source()), pair_product(f.target(), g.target()),
                   product(f.map(), g.map()));
}

Triple::Triple(CubicalComplex x, CubicalComplex y, CubicalComplex z)
    : x_(std::move(x)), y_(std::move(y)), z_(std::move(z))
{
    if (!y_.is_subcomplex_of(x_) || !z_.is_subcomplex_of(y_))
        throw NotATriple("expected Z inside Y inside X");
    if (y_.is_empty())
        y_ = CubicalComplex::empty(x_.ambient());
    if (z_.is_empty())
        z_ = CubicalComplex::empty(x_.ambient());
}

Cover::Cover(CubicalComplex x, CubicalComplex y, CubicalComplex z)
    : x_(std::move(x)), y_(std::move(y)), z_(std::move(z))
{
    if (!y_.is_subcomplex_of(x_) || !z_.is_subcomplex_of(x_))
        throw NotACover("pieces are not subcomplexes of the total complex");
    if (!(join(y_, z_, x_) == x_))
        throw NotACover("pieces do not cover the total complex");
    if (y_.is_empty())
        y_ = CubicalComplex::empty(x_.ambient());
    if (z_.is_empty())
        z_ = CubicalComplex::empty(x_.ambient());
    overlap_ = intersection(y_, z_, x_);
}

// ---------------------------------------------------------------------------

namespace shapes {

CubicalComplex point()
{
    return CubicalComplex(0, {Cube()});
}

namespace {

void box_cubes(const std::vector<int>& extents, std::size_t i, std::vector<std::pair<int, int>>& iv,
               bool boundary_only, bool on_boundary, std::vector<Cube>& out)
{
    if (i == extents.size()) {
        if (!boundary_only || on_boundary)
            out.push_back(Cube::from_intervals(iv));
        return;
    }
    for (int a = 0; a <= extents[i]; ++a) {
        iv[i] = {a, a};
        box_cubes(extents, i + 1, iv, boundary_only, on_boundary || a == 0 || a == extents[i], out);
        if (a < extents[i]) {
            iv[i] = {a, a + 1};
            box_cubes(extents, i + 1, iv, boundary_only, on_boundary, out);
        }
    }
}

} // namespace

CubicalComplex box(const std::vector<int>& extents)
{
    std::vector<Cube> cubes;
    std::vector<std::pair<int, int>> iv(extents.size());
    box_cubes(extents, 0, iv, false, false, cubes);
    return CubicalComplex(extents.size(), std::move(cubes));
}

CubicalComplex box_boundary(const std::vector<int>& extents)
{
    std::vector<Cube> cubes;
    std::vector<std::pair<int, int>> iv(extents.size());
    box_cubes(extents, 0, iv, true, false, cubes);
    return CubicalComplex(extents.size(), std::move(cubes));
}

CubicalComplex interval() { return box({1}); }
CubicalComplex interval_boundary() { return box_boundary({1}); }
CubicalComplex square() { return box({1, 1}); }
CubicalComplex square_boundary() { return box_boundary({1, 1}); }
CubicalComplex solid_cube() { return box({1, 1, 1}); }
CubicalComplex cube_boundary() { return box_boundary({1, 1, 1}); }

CubicalComplex torus()
{
    return product(square_boundary(), square_boundary());
}

CubicalComplex solid_torus()
{
    return product(square_boundary(), square());
}

SubcomplexPair double_loop_pair()
{
    // vertices of the square boundary in cyclic order
    const int ring[4][2] = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    // two steps around the core for each step around the meridian
    const int path[13][2] = {{0, 0}, {1, 0}, {2, 0}, {2, 1}, {3, 1}, {0, 1}, {0, 2},
                             {1, 2}, {2, 2}, {2, 3}, {3, 3}, {0, 3}, {0, 0}};
    auto point = [&](int k) {
        const auto& a = ring[path[k][0]];
        const auto& b = ring[path[k][1]];
        return std::vector<int>{a[0], a[1], b[0], b[1]};
    };
    std::vector<Cube> edges;
    for (int k = 0; k < 12; ++k) {
        const auto u = point(k);
        const auto v = point(k + 1);
        std::vector<std::pair<int, int>> iv;
        for (std::size_t i = 0; i < 4; ++i)
            iv.emplace_back(std::min(u[i], v[i]), std::max(u[i], v[i]));
        edges.push_back(Cube::from_intervals(iv));
    }
    return SubcomplexPair(solid_torus(), CubicalComplex::closure(4, edges));
}

} // namespace shapes

} // namespace cubenori
