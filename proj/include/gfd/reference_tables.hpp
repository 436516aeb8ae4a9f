#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gfd/ode.hpp"

namespace gfd {

enum class TableId { Table1 = 1, Table2 = 2, Table3 = 3 };

/// One printed cell; absent cells are empty strings.
struct ReferenceCell {
    std::string_view printed;

    std::optional<double> value() const {
        if (printed.empty()) return std::nullopt;
        return std::stod(std::string(printed));
    }
    std::string display() const { return printed.empty() ? std::string("—") : std::string(printed); }
};

struct ReferenceRow {
    double t;
    std::array<ReferenceCell, 5> cells;  // same order as ReferenceTable::columns
};

/// Reference Riccati comparison tables. Column 0 is the GFD result, the last
/// column the conformable-derivative result; the rest are third-party
/// numerical methods kept for context only.
struct ReferenceTable {
    TableId id;
    double alpha;
    RiccatiKind problem;
    std::array<std::string_view, 5> columns;
    std::array<ReferenceRow, 6> rows;
    double tolerance;  // half a unit in the last printed decimal

    std::size_t column_index(std::string_view name) const {
        if (name == "EHPM" && id == TableId::Table2) name = "MHPM";
        for (std::size_t i = 0; i < columns.size(); ++i)
            if (columns[i] == name) return i;
        throw std::out_of_range("no column '" + std::string(name) + "'");
    }
};

inline constexpr std::size_t present_column = 0;
inline constexpr std::size_t cd_column = 4;

inline const ReferenceTable& reference_table(TableId id) {
    static const ReferenceTable table1{
        TableId::Table1,
        0.75,
        RiccatiKind::Riccati1,
        {"Present", "BPM", "EHPM", "IABMM", "CD"},
        {{
            {0.0, {{{"0"}, {"0"}, {"0"}, {"0"}, {"0"}}}},
            {0.2, {{{"0.31439"}, {"0.30996891"}, {"0.3214"}, {"0.3117"}, {"0.37889"}}}},
            {0.4, {{{"0.49848"}, {"0.48162749"}, {"0.5077"}, {"0.4855"}, {"0.58539"}}}},
            {0.6, {{{"0.63022"}, {"0.59777979"}, {"0.6259"}, {"0.6045"}, {"0.72064"}}}},
            {0.8, {{{"0.72609"}, {"0.67884745"}, {"0.7028"}, {"0.6880"}, {"0.81029"}}}},
            {1.0, {{{"0.79618"}, {"0.73684181"}, {"0.7542"}, {"0.7478"}, {"0.87006"}}}},
        }},
        5e-5,
    };
    static const ReferenceTable table2{
        TableId::Table2,
        0.9,
        RiccatiKind::Riccati1,
        {"Present", "BPM", "MHPM", "IABMM", "CD"},
        {{
            {0.0, {{{"0"}, {"0"}, {"0"}, {"0"}, {"0"}}}},
            {0.2, {{{"0.23952"}, {"0.23878798"}, {"0.2391"}, {"0.2393"}, {"0.25526"}}}},
            {0.4, {{{"0.42667"}, {"0.42258214"}, {"0.4229"}, {"0.4234"}, {"0.45191"}}}},
            {0.6, {{{"0.57607"}, {"0.56617082"}, {"0.5653"}, {"0.5679"}, {"0.60539"}}}},
            {0.8, {{{"0.69138"}, {"0.67462642"}, {"0.6740"}, {"0.6774"}, {"0.72063"}}}},
            {1.0, {{{"0.7778"}, {"0.75460256"}, {"0.7569"}, {"0.7584"}, {"0.80445"}}}},
        }},
        5e-5,
    };
    static const ReferenceTable table3{
        TableId::Table3,
        0.9,
        RiccatiKind::Riccati2,
        {"Present", "BPM", "FTBM", "IABMM", "CD"},
        {{
            {0.0, {{{"0"}, {"0"}, {"0"}, {"0"}, {"0"}}}},
            {0.2, {{{"0.30718"}, {"0.31488815"}, {"0.31485423"}, {""}, {"0.33295"}}}},
            {0.4, {{{"0.67131"}, {"0.69756771"}, {"0.69751826"}, {""}, {"0.73105"}}}},
            {0.6, {{{"1.0666"}, {"1.10789047"}, {"0.90364539"}, {""}, {"1.1561"}}}},
            {0.8, {{{"1.4397"}, {"1.47772823"}, {"1.47768008"}, {""}, {"1.5422"}}}},
            {1.0, {{{"1.7485"}, {"1.76542008"}, {"1.76525852"}, {"1.7356"}, {"1.8457"}}}},
        }},
        5e-4,
    };
    switch (id) {
        case TableId::Table1: return table1;
        case TableId::Table2: return table2;
        case TableId::Table3: return table3;
    }
    throw std::invalid_argument("unknown table id");
}

inline TableId table_id_from_int(int id) {
    if (id < 1 || id > 3) throw std::invalid_argument("table id must be 1, 2 or 3");
    return static_cast<TableId>(id);
}

}  // namespace gfd
