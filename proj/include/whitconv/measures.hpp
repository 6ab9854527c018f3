#pragma once

// Finite measures on [0,inf): discrete atom lists and grid densities stored
// against the weight m(x)dx, plus the CSV/JSON serialization both use.

#include <optional>
#include <string>
#include <vector>

#include "whitconv/errors.hpp"
#include "whitconv/interp.hpp"
#include "whitconv/params.hpp"

namespace whitconv {

struct DiscreteMeasure {
    struct Atom {
        double x;
        double w;
    };
    std::vector<Atom> atoms;

    static DiscreteMeasure dirac(double x) { return DiscreteMeasure{{{x, 1.0}}}; }

    double total_mass() const {
        double s = 0;
        for (const auto& a : atoms) s += a.w;
        return s;
    }
    bool is_probability(double tol = 1e-12) const {
        return std::fabs(total_mass() - 1.0) <= tol;
    }
    void validate() const {
        for (const auto& a : atoms) {
            if (a.x < 0) throw DomainError("DiscreteMeasure: locations must be >= 0");
            if (!(a.w > 0)) throw DomainError("DiscreteMeasure: weights must be > 0");
        }
        for (size_t i = 0; i < atoms.size(); ++i)
            for (size_t j = i + 1; j < atoms.size(); ++j)
                if (atoms[i].x == atoms[j].x)
                    throw DomainError("DiscreteMeasure: locations must be distinct");
    }
    // weight sitting exactly at zero (0 if none)
    double weight_at_zero() const {
        for (const auto& a : atoms)
            if (a.x == 0.0) return a.w;
        return 0.0;
    }
};

// Density f on a strictly increasing grid, representing f(x) m(x) dx, plus an
// optional atom at zero.
struct GridDensity {
    std::vector<double> grid;
    std::vector<double> values;
    double atom_at_zero = 0.0;

    void validate() const;
    // integral of values against m(x)dx by the trapezoid rule on the grid
    double grid_mass(const Params& p) const;
    double total_mass(const Params& p) const { return atom_at_zero + grid_mass(p); }
    // pchip interpolant of the density (0 outside the grid span)
    Pchip interpolant() const { return Pchip(grid, values); }
    double operator()(double x) const;
};

// Hybrid measure: atoms plus a grid density. Convolution results and
// semigroup laws with a point mass at zero live here.
struct Measure {
    DiscreteMeasure atoms;   // may be empty
    GridDensity density;     // may be empty (no grid)

    bool has_density() const { return !density.grid.empty(); }
    double total_mass(const Params& p) const {
        return atoms.total_mass() + (has_density() ? density.total_mass(p) : 0.0);
    }
    static Measure from(DiscreteMeasure d) { return Measure{std::move(d), {}}; }
    static Measure from(GridDensity g) { return Measure{{}, std::move(g)}; }
};

// geometric grid of n points on [lo, hi]
std::vector<double> geometric_grid(double lo, double hi, int n);

// ---- serialization -------------------------------------------------------
// CSV: version comment line, then "x,value" header, then rows (%.17g).
// JSON: {kind, grid, values, atom_at_zero}; kind is "density" or "atoms".

std::string to_csv(const GridDensity& g);
std::string to_csv(const DiscreteMeasure& m);
std::string to_json(const GridDensity& g);
std::string to_json(const DiscreteMeasure& m);

GridDensity grid_density_from_json(const std::string& text);
DiscreteMeasure discrete_from_json(const std::string& text);
// dispatch on the "kind" field
Measure measure_from_json(const std::string& text);
GridDensity grid_density_from_csv(const std::string& text);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

} // namespace whitconv
