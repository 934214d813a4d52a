#include "toric/geom.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace toric {

namespace {
long long gcd_ll(long long a, long long b) {
    while (b) { long long t = a % b; a = b; b = t; }
    return a < 0 ? -a : a;
}
} // namespace

Rational::Rational(long long num, long long den) : num_(num), den_(den) {
    if (den_ == 0) fail(Errc::BadInput, "rational with zero denominator");
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    long long g = gcd_ll(num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
    if (num_ == 0) den_ = 1;
}

Rational Rational::mod1() const {
    long long q = num_ / den_;
    long long r = num_ % den_;
    if (r < 0) { r += den_; --q; }
    return Rational(r, den_);
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(s));
        return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::exception&) {
        fail(Errc::BadInput, "cannot parse rational '" + s + "'");
    }
}

TorusPoint::TorusPoint(std::map<std::string, Rational> coords) : coords_(std::move(coords)) {
    for (auto& [label, value] : coords_) value = value.mod1();
}

const Rational& TorusPoint::at(const std::string& label) const {
    auto it = coords_.find(label);
    if (it == coords_.end()) fail(Errc::MissingCoordinate, "no coordinate for vertex '" + label + "'");
    return it->second;
}

Orientation alpha(const GraphPtr& g, const TorusPoint& p) {
    for (const auto& l : g->labels()) p.at(l); // MissingCoordinate check up front
    std::vector<EdgeDir> dirs(g->size());
    for (int e = 0; e < g->size(); ++e) {
        auto [u, v] = g->edges()[e];
        const Rational& xu = p.at(g->label(u));
        const Rational& xv = p.at(g->label(v));
        if (xu == xv) dirs[e] = EdgeDir::Both;
        else dirs[e] = xu < xv ? EdgeDir::Forward : EdgeDir::Backward;
    }
    return Orientation(g, std::move(dirs));
}

TorusPoint point_of_extension(const std::vector<std::string>& order,
                              const std::vector<std::string>& vertex_set) {
    std::set<std::string> want(vertex_set.begin(), vertex_set.end());
    std::set<std::string> got(order.begin(), order.end());
    if (got.size() != order.size() || got != want)
        fail(Errc::NotAPermutation, "sequence is not a permutation of the vertex set");
    std::map<std::string, Rational> coords;
    long long n = static_cast<long long>(order.size());
    for (long long k = 0; k < n; ++k) coords[order[k]] = Rational(k + 1, n + 1);
    return TorusPoint(std::move(coords));
}

bool in_order_polytope(const Orientation& o, const std::map<std::string, Rational>& point) {
    Poset p = Poset::from_orientation(o); // NotAcyclic on bad input
    const Graph& g = o.graph();
    std::vector<Rational> x(g.order());
    for (int v = 0; v < g.order(); ++v) {
        auto it = point.find(g.label(v));
        if (it == point.end())
            fail(Errc::MissingCoordinate, "no coordinate for vertex '" + g.label(v) + "'");
        x[v] = it->second;
        if (x[v] < Rational(0) || Rational(1) < x[v]) return false;
    }
    for (int i = 0; i < g.order(); ++i)
        for (VertexSet t = p.above(i); t; t &= t - 1)
            if (!(x[i] <= x[lowest_bit(t)])) return false;
    return true;
}

ReconcileReport reconcile_chamber_bijection(const Graph& g, int cap) {
    int n = g.order();
    if (n > cap) fail(Errc::CapExceeded, "vertex count exceeds reconciliation cap");
    auto gp = std::make_shared<const Graph>(g);

    ReconcileReport rep;
    rep.flip_class_count = count_flip_classes(g, cap);
    rep.tutte = tutte_10(g);

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    // cell key: canonical member code of the flip class of the alpha image
    std::map<std::string, std::set<std::string>> cell_orientations;
    std::map<std::string, long long> cell_perms;
    std::map<std::string, Orientation> cell_canonical;
    std::map<std::vector<int>, std::string> cell_of_perm;
    std::set<std::string> hit;
    do {
        std::vector<std::string> order;
        for (int v : perm) order.push_back(g.label(v));
        Orientation image = alpha(gp, point_of_extension(order, g.labels()));
        FlipClassPtr cls = flip_class(image, cap);
        std::string key = cls->canonical().code();
        cell_orientations[key].insert(image.code());
        cell_perms[key]++;
        cell_canonical.emplace(key, cls->canonical());
        cell_of_perm[perm] = key;
        hit.insert(image.code());
    } while (std::next_permutation(perm.begin(), perm.end()));

    // rotation closure: a cyclic shift of the sample order stays in its cell
    rep.rotation_closed = true;
    for (const auto& [pm, key] : cell_of_perm) {
        std::vector<int> rot(pm.begin() + 1, pm.end());
        rot.push_back(pm.front());
        if (cell_of_perm.at(rot) != key) { rep.rotation_closed = false; break; }
    }

    rep.surjective = static_cast<long long>(hit.size()) ==
                     static_cast<long long>(acyclic_orientations(gp, cap).size());

    for (const auto& [key, orients] : cell_orientations) {
        ReconcileReport::Cell cell{cell_canonical.at(key),
                                   static_cast<long long>(orients.size()), cell_perms.at(key)};
        rep.cells.push_back(std::move(cell));
    }
    std::sort(rep.cells.begin(), rep.cells.end(), [](const auto& a, const auto& b) {
        return a.canonical < b.canonical;
    });

    rep.ok = rep.rotation_closed && rep.surjective &&
             static_cast<long long>(rep.cells.size()) == rep.flip_class_count &&
             (!g.connected() || rep.flip_class_count == rep.tutte);
    return rep;
}

} // namespace toric
