#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "toric/flipclass.hpp"
#include "toric/poset.hpp"

namespace toric {

// Exact rational arithmetic; the geometric oracle never touches floating
// point because coordinate equality carries meaning (ties).
class Rational {
public:
    Rational() = default;
    Rational(long long num, long long den = 1);

    long long num() const { return num_; }
    long long den() const { return den_; }

    Rational operator+(const Rational& o) const { return {num_ * o.den_ + o.num_ * den_, den_ * o.den_}; }
    Rational operator-(const Rational& o) const { return {num_ * o.den_ - o.num_ * den_, den_ * o.den_}; }
    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator<(const Rational& o) const { return num_ * o.den_ < o.num_ * den_; }
    bool operator<=(const Rational& o) const { return *this < o || *this == o; }

    Rational mod1() const; // representative in [0,1)

    std::string to_string() const; // "p/q" (or "p" when q == 1)
    static Rational parse(const std::string& s);

private:
    long long num_ = 0, den_ = 1;
};

// Point of R^V/Z^V with exact coordinates, reduced modulo 1.
class TorusPoint {
public:
    TorusPoint() = default;
    explicit TorusPoint(std::map<std::string, Rational> coords);
    const std::map<std::string, Rational>& coords() const { return coords_; }
    const Rational& at(const std::string& label) const; // Errc::MissingCoordinate

private:
    std::map<std::string, Rational> coords_;
};

// alpha_G: edge {i,j} oriented i->j when <x_i> <= <x_j>, both ways on ties.
Orientation alpha(const GraphPtr& g, const TorusPoint& p);

// Canonical interior point of the open region of a total order: the k-th
// listed vertex gets coordinate k/(n+1). Errc::NotAPermutation.
TorusPoint point_of_extension(const std::vector<std::string>& order,
                              const std::vector<std::string>& vertex_set);

// Weak order-polytope membership with coordinates read in [0,1].
bool in_order_polytope(const Orientation& o, const std::map<std::string, Rational>& point);

// Sample-point reconciliation of the chamber bijection: one canonical
// point per permutation of V, grouped by flip class of the alpha image.
struct ReconcileReport {
    struct Cell {
        Orientation canonical;       // canonical member of the flip class
        long long orientation_count; // distinct alpha images in the cell
        long long permutation_count; // sample points in the cell
    };
    std::vector<Cell> cells;
    long long flip_class_count = 0;  // independent count over the graph
    long long tutte = 0;             // T_G(1,0)
    bool rotation_closed = false;    // cells are unions of cyclic word classes
    bool surjective = false;         // every acyclic orientation is hit
    bool ok = false;
};
ReconcileReport reconcile_chamber_bijection(const Graph& g, int cap = 8);

} // namespace toric
