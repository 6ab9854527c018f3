#include "whitconv/measures.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "whitconv/spectral.hpp"

namespace whitconv {

void GridDensity::validate() const {
    if (grid.size() != values.size())
        throw DomainError("GridDensity: grid/values length mismatch");
    if (atom_at_zero < 0) throw DomainError("GridDensity: atom_at_zero must be >= 0");
    for (size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] > 0)) throw DomainError("GridDensity: grid must be > 0");
        if (i && !(grid[i] > grid[i - 1]))
            throw DomainError("GridDensity: grid must be strictly increasing");
        if (!std::isfinite(values[i]) || values[i] < 0)
            throw DomainError("GridDensity: values must be finite and >= 0");
    }
}

double GridDensity::grid_mass(const Params& p) const {
    double s = 0;
    for (size_t i = 0; i + 1 < grid.size(); ++i) {
        double f0 = values[i] * m_weight(p, grid[i]);
        double f1 = values[i + 1] * m_weight(p, grid[i + 1]);
        s += 0.5 * (f0 + f1) * (grid[i + 1] - grid[i]);
    }
    return s;
}

double GridDensity::operator()(double x) const {
    if (grid.empty() || x < grid.front() || x > grid.back()) return 0.0;
    return Pchip(grid, values)(x);
}

std::vector<double> geometric_grid(double lo, double hi, int n) {
    if (!(lo > 0) || !(hi > lo) || n < 2) throw DomainError("geometric_grid: bad range");
    std::vector<double> g(n);
    double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < n; ++i) g[i] = std::exp(llo + (lhi - llo) * i / (n - 1));
    g.front() = lo;
    g.back() = hi;
    return g;
}

namespace {
std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}
constexpr const char* kCsvVersion = "# whitconv csv v1";
} // namespace

std::string to_csv(const GridDensity& g) {
    std::ostringstream os;
    os << kCsvVersion << "\n"
       << "x,value\n";
    if (g.atom_at_zero > 0) os << "0," << fmt17(g.atom_at_zero) << "\n";
    for (size_t i = 0; i < g.grid.size(); ++i)
        os << fmt17(g.grid[i]) << "," << fmt17(g.values[i]) << "\n";
    return os.str();
}

std::string to_csv(const DiscreteMeasure& m) {
    std::ostringstream os;
    os << kCsvVersion << "\n"
       << "x,value\n";
    for (const auto& a : m.atoms) os << fmt17(a.x) << "," << fmt17(a.w) << "\n";
    return os.str();
}

std::string to_json(const GridDensity& g) {
    nlohmann::ordered_json j;
    j["kind"] = "density";
    j["grid"] = g.grid;
    j["values"] = g.values;
    j["atom_at_zero"] = g.atom_at_zero;
    return j.dump(2) + "\n";
}

std::string to_json(const DiscreteMeasure& m) {
    nlohmann::ordered_json j;
    j["kind"] = "atoms";
    std::vector<double> grid, values;
    double at_zero = 0;
    for (const auto& a : m.atoms) {
        if (a.x == 0.0) {
            at_zero += a.w;
        } else {
            grid.push_back(a.x);
            values.push_back(a.w);
        }
    }
    j["grid"] = grid;
    j["values"] = values;
    j["atom_at_zero"] = at_zero;
    return j.dump(2) + "\n";
}

GridDensity grid_density_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    GridDensity g;
    g.grid = j.at("grid").get<std::vector<double>>();
    g.values = j.at("values").get<std::vector<double>>();
    g.atom_at_zero = j.value("atom_at_zero", 0.0);
    g.validate();
    return g;
}

DiscreteMeasure discrete_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    DiscreteMeasure m;
    auto grid = j.at("grid").get<std::vector<double>>();
    auto values = j.at("values").get<std::vector<double>>();
    if (grid.size() != values.size()) throw DomainError("measure json: length mismatch");
    double at_zero = j.value("atom_at_zero", 0.0);
    if (at_zero > 0) m.atoms.push_back({0.0, at_zero});
    for (size_t i = 0; i < grid.size(); ++i) m.atoms.push_back({grid[i], values[i]});
    m.validate();
    return m;
}

Measure measure_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    std::string kind = j.value("kind", "density");
    if (kind == "atoms") return Measure::from(discrete_from_json(text));
    return Measure::from(grid_density_from_json(text));
}

GridDensity grid_density_from_csv(const std::string& text) {
    GridDensity g;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("x,", 0) == 0) continue;
        auto comma = line.find(',');
        if (comma == std::string::npos) throw DomainError("csv: missing comma in " + line);
        double x = std::stod(line.substr(0, comma));
        double v = std::stod(line.substr(comma + 1));
        if (x == 0.0) {
            g.atom_at_zero = v;
        } else {
            g.grid.push_back(x);
            g.values.push_back(v);
        }
    }
    g.validate();
    return g;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw Error("cannot open for writing: " + path);
    os << content;
}

std::string read_text_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw Error("cannot open for reading: " + path);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

} // namespace whitconv
