#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gfd/ode.hpp"
#include "gfd/reference_tables.hpp"

namespace gfd {

inline std::string format_double(const char* fmt, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

struct ReproducedCell {
    double computed;
    double reference;
    double deviation() const { return std::abs(computed - reference); }
};

struct ReproducedRow {
    double t;
    ReproducedCell present;
    ReproducedCell cd;
};

struct ReproductionReport {
    TableId id;
    double tolerance;
    std::vector<ReproducedRow> rows;

    double max_deviation() const {
        double m = 0.0;
        for (const auto& r : rows) m = std::max({m, r.present.deviation(), r.cd.deviation()});
        return m;
    }
    bool passed() const { return max_deviation() <= tolerance; }
};

struct TableOptions {
    std::optional<double> tolerance;
    /// Recompute the GFD column with A = 1, i.e. as the conformable derivative.
    bool conformable_present = false;
};

/// Recomputes the GFD and CD columns of a reference table from the closed forms.
inline ReproductionReport reproduce_table(TableId id, const TableOptions& options = {}) {
    const ReferenceTable& table = reference_table(id);
    const FracOrder order(table.alpha);
    const ShapeParam shape(table.alpha);
    ReproductionReport report{id, options.tolerance.value_or(table.tolerance), {}};
    for (const auto& row : table.rows) {
        const double present = options.conformable_present ? conformable_closed(table.problem, row.t, order)
                                                           : riccati_closed(table.problem, row.t, order, shape);
        const double cd = conformable_closed(table.problem, row.t, order);
        report.rows.push_back({row.t,
                               {present, *row.cells[present_column].value()},
                               {cd, *row.cells[cd_column].value()}});
    }
    return report;
}

/// CSV with one row per t: recomputed columns with deviations, then the
/// context columns echoed as printed.
inline void write_table_csv(std::ostream& out, const ReproductionReport& report) {
    const ReferenceTable& table = reference_table(report.id);
    out << "t,present_computed,present_reference,present_deviation,cd_computed,cd_reference,cd_deviation";
    for (std::size_t c = 1; c + 1 < table.columns.size(); ++c) out << ',' << table.columns[c];
    out << '\n';
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const auto& r = report.rows[i];
        const auto& ref = table.rows[i];
        out << format_double("%.1f", r.t) << ',' << format_double("%.8f", r.present.computed) << ','
            << ref.cells[present_column].printed << ',' << format_double("%.3e", r.present.deviation()) << ','
            << format_double("%.8f", r.cd.computed) << ',' << ref.cells[cd_column].printed << ','
            << format_double("%.3e", r.cd.deviation());
        for (std::size_t c = 1; c + 1 < table.columns.size(); ++c) out << ',' << ref.cells[c].display();
        out << '\n';
    }
}

inline void write_table_summary(std::ostream& out, const ReproductionReport& report) {
    const ReferenceTable& table = reference_table(report.id);
    const int decimals = report.id == TableId::Table3 ? 4 : 5;
    const std::string fmt = "%." + std::to_string(decimals) + "f";
    out << "Table " << static_cast<int>(report.id) << " (alpha = beta = " << format_double("%.2f", table.alpha)
        << ", " << (table.problem == RiccatiKind::Riccati1 ? "D^a y + y^2 = 1" : "D^a y = 2y - y^2 + 1")
        << ")\n";
    out << "  t     GFD        ref        CD         ref       ";
    for (std::size_t c = 1; c + 1 < table.columns.size(); ++c) out << ' ' << table.columns[c];
    out << '\n';
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const auto& r = report.rows[i];
        const auto& ref = table.rows[i];
        char line[160];
        std::snprintf(line, sizeof line, "  %.1f   %-10s %-10s %-10s %-10s", r.t,
                      format_double(fmt.c_str(), r.present.computed).c_str(),
                      std::string(ref.cells[present_column].printed).c_str(),
                      format_double(fmt.c_str(), r.cd.computed).c_str(),
                      std::string(ref.cells[cd_column].printed).c_str());
        out << line;
        for (std::size_t c = 1; c + 1 < table.columns.size(); ++c) out << ' ' << ref.cells[c].display();
        out << '\n';
    }
    out << "  max deviation " << format_double("%.3e", report.max_deviation()) << " (tolerance "
        << format_double("%.1e", report.tolerance) << "): " << (report.passed() ? "PASS" : "FAIL") << '\n';
}

struct FigureSpec {
    RiccatiKind problem;
    double alpha;
};

inline FigureSpec figure_spec(int id) {
    switch (id) {
        case 1: return {RiccatiKind::Riccati1, 0.75};
        case 2: return {RiccatiKind::Riccati1, 0.90};
        case 3: return {RiccatiKind::Riccati2, 0.90};
        default: throw std::invalid_argument("figure id must be 1, 2 or 3");
    }
}

struct ErrorCurveRecord {
    double x;
    double err_gfd;
    double err_cd;
};

struct ErrorCurveData {
    std::vector<ErrorCurveRecord> records;
    /// err_gfd < err_cd at every point.
    bool ordering_holds() const {
        return std::all_of(records.begin(), records.end(),
                           [](const ErrorCurveRecord& r) { return r.err_gfd < r.err_cd; });
    }
    double max_error() const {
        double m = 0.0;
        for (const auto& r : records) m = std::max({m, r.err_gfd, r.err_cd});
        return m;
    }
};

inline ErrorCurveData error_curves(RiccatiKind problem, FracOrder order, int grid_size) {
    if (grid_size < 2) throw std::invalid_argument("error curve grid needs at least 2 points");
    const auto grid = uniform_grid(grid_size);
    const auto gfd = abs_rel_error_curve(problem, DerivativeKind::GFD, order, grid);
    const auto cd = abs_rel_error_curve(problem, DerivativeKind::CD, order, grid);
    ErrorCurveData data;
    for (std::size_t i = 0; i < gfd.points.size(); ++i)
        data.records.push_back({gfd.points[i].x, gfd.points[i].error, cd.points[i].error});
    return data;
}

inline void write_error_curves_csv(std::ostream& out, const ErrorCurveData& data) {
    out << "x,err_gfd,err_cd\n";
    for (const auto& r : data.records)
        out << format_double("%.6f", r.x) << ',' << format_double("%.10e", r.err_gfd) << ','
            << format_double("%.10e", r.err_cd) << '\n';
}

/// Writes (x, err_gfd, err_cd) records to `path`.
inline ErrorCurveData emit_error_curves(RiccatiKind problem, FracOrder order, int grid_size,
                                        const std::string& path) {
    ErrorCurveData data = error_curves(problem, order, grid_size);
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    write_error_curves_csv(file, data);
    if (!file) throw std::runtime_error("failed writing output file: " + path);
    return data;
}

inline void write_curve_csv(std::ostream& out, const SolutionCurve& curve) {
    out << "x,y\n";
    for (const auto& s : curve.samples) out << format_double("%.10f", s.x) << ',' << format_double("%.12e", s.y) << '\n';
}

}  // namespace gfd
