#pragma once

/**
 * @file render.hpp
 * @brief Triangle rendering with hockey-stick highlighting.
 *
 * Text output mirrors the usual figure layout: rows centered on fixed-width
 * cells, stick cells drawn as [x], puck cells as (x). CSV and JSON leave the
 * values undecorated and carry the marked cells in a parallel structure.
 */

#include "stickkit/coefficients.hpp"
#include "stickkit/integer.hpp"

#include <json.hpp>

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace stickkit {

enum class render_format { text, csv, json };

// Identity instance whose stick and puck cells get marked; the family is
// implied by the triangle kind (pascal or trinomial hockey stick).
struct highlight_spec {
    long long n;
    long long k;
};

struct render_spec {
    triangle_kind kind;
    long long rows;
    std::optional<highlight_spec> highlight;
    render_format format = render_format::text;
};

// A cell address. pos is the triangle's native position: 0..row for pascal,
// -row..row for trinomial.
struct cell_ref {
    long long row;
    long long pos;
    bool operator==(const cell_ref&) const = default;
};

struct highlight_cells {
    std::vector<cell_ref> stick;
    std::vector<cell_ref> puck;
};

// Render spec violation (highlighted cells outside the rendered region).
class render_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The cells an identity instance touches: the stick summands and the puck
/// cells of the alternating right-hand side.
inline highlight_cells highlight_cells_for(triangle_kind kind, highlight_spec spec) {
    if (spec.n < 0 || spec.k < 0)
        throw std::invalid_argument("highlight: negative identity parameters");
    highlight_cells cells;
    const auto [n, k] = spec;
    if (kind == triangle_kind::pascal) {
        for (long long i = 0; i <= k; ++i) cells.stick.push_back({n + 2 * i, i});
        for (long long j = 0; j <= k / 2; ++j) cells.puck.push_back({n + 2 * k + 1 - j, k - 2 * j});
    } else {
        for (long long i = 0; i <= k; ++i) cells.stick.push_back({n + i, n});
        for (long long s = 0; s <= k / 2; ++s) cells.puck.push_back({n + k + 1, n + 2 * s + 1});
    }
    return cells;
}

namespace detail {

inline std::optional<highlight_cells> checked_highlight(const render_spec& spec) {
    if (!spec.highlight) return std::nullopt;
    highlight_cells cells = highlight_cells_for(spec.kind, *spec.highlight);
    long long deepest = 0;
    for (const auto& list : {cells.stick, cells.puck})
        for (const cell_ref& c : list) deepest = std::max(deepest, c.row);
    if (deepest > spec.rows - 1)
        throw render_error("highlight cells extend past row " + std::to_string(spec.rows - 1));
    return cells;
}

enum class cell_mark { none, stick, puck };

inline cell_mark mark_of(const std::optional<highlight_cells>& cells, cell_ref ref) {
    if (!cells) return cell_mark::none;
    if (std::find(cells->stick.begin(), cells->stick.end(), ref) != cells->stick.end())
        return cell_mark::stick;
    if (std::find(cells->puck.begin(), cells->puck.end(), ref) != cells->puck.end())
        return cell_mark::puck;
    return cell_mark::none;
}

inline triangle_row fetch_row(triangle_kind kind, long long n) {
    return kind == triangle_kind::pascal ? pascal_row(n) : trinomial_row(n);
}

// Native position of entry index i within row n.
inline long long entry_pos(triangle_kind kind, long long n, std::size_t i) {
    return kind == triangle_kind::pascal ? static_cast<long long>(i)
                                         : static_cast<long long>(i) - n;
}

inline std::string decorate(const Integer& value, cell_mark mark) {
    switch (mark) {
        case cell_mark::stick: return "[" + value.str() + "]";
        case cell_mark::puck: return "(" + value.str() + ")";
        default: return value.str();
    }
}

inline std::string render_text(const render_spec& spec,
                               const std::vector<triangle_row>& rows,
                               const std::optional<highlight_cells>& cells) {
    // One cell string per entry, decorated where marked.
    std::vector<std::vector<std::string>> grid;
    std::size_t width = 1;
    for (const triangle_row& row : rows) {
        std::vector<std::string> line;
        line.reserve(row.entries.size());
        for (std::size_t i = 0; i < row.entries.size(); ++i) {
            cell_ref ref{row.n, entry_pos(spec.kind, row.n, i)};
            line.push_back(decorate(row.entries[i], mark_of(cells, ref)));
            width = std::max(width, line.back().size());
        }
        grid.push_back(std::move(line));
    }

    // Pascal rows shift by half a cell per row; keep the stride even so the
    // offsets stay integral.
    std::size_t stride = width + 1;
    if (spec.kind == triangle_kind::pascal && stride % 2 != 0) ++stride;
    const std::size_t gap = stride - width;

    std::ostringstream out;
    const std::size_t last = grid.size() - 1;
    for (std::size_t r = 0; r < grid.size(); ++r) {
        const std::size_t steps = last - r;
        const std::size_t indent =
            spec.kind == triangle_kind::pascal ? steps * stride / 2 : steps * stride;
        std::string line(indent, ' ');
        for (std::size_t i = 0; i < grid[r].size(); ++i) {
            if (i > 0) line.append(gap, ' ');
            const std::string& cell = grid[r][i];
            const std::size_t pad = width - cell.size();
            line.append(pad / 2, ' ');
            line += cell;
            line.append(pad - pad / 2, ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << '\n';
    }
    return out.str();
}

inline std::string render_csv(const std::vector<triangle_row>& rows,
                              const std::optional<highlight_cells>& cells) {
    std::ostringstream out;
    for (const triangle_row& row : rows) {
        for (std::size_t i = 0; i < row.entries.size(); ++i) {
            if (i > 0) out << ',';
            out << row.entries[i].str();
        }
        out << '\n';
    }
    if (cells) {
        for (const cell_ref& c : cells->stick) out << "stick," << c.row << ',' << c.pos << '\n';
        for (const cell_ref& c : cells->puck) out << "puck," << c.row << ',' << c.pos << '\n';
    }
    return out.str();
}

inline std::string render_json(const render_spec& spec,
                               const std::vector<triangle_row>& rows,
                               const std::optional<highlight_cells>& cells) {
    nlohmann::json doc;
    doc["kind"] = spec.kind == triangle_kind::pascal ? "pascal" : "trinomial";
    doc["rows"] = spec.rows;
    nlohmann::json triangle = nlohmann::json::array();
    for (const triangle_row& row : rows) {
        nlohmann::json entries = nlohmann::json::array();
        for (const Integer& v : row.entries) entries.push_back(v.str());
        triangle.push_back(std::move(entries));
    }
    doc["triangle"] = std::move(triangle);
    if (cells) {
        auto cell_list = [](const std::vector<cell_ref>& list) {
            nlohmann::json arr = nlohmann::json::array();
            for (const cell_ref& c : list) arr.push_back({{"row", c.row}, {"pos", c.pos}});
            return arr;
        };
        doc["marks"] = {{"stick", cell_list(cells->stick)}, {"puck", cell_list(cells->puck)}};
    }
    return doc.dump(2) + "\n";
}

} // namespace detail

/// Render the requested triangle in the requested format.
inline std::string render_triangle(const render_spec& spec) {
    if (spec.rows < 1) throw std::invalid_argument("render_triangle: rows must be >= 1");
    const std::optional<highlight_cells> cells = detail::checked_highlight(spec);
    std::vector<triangle_row> rows;
    rows.reserve(static_cast<std::size_t>(spec.rows));
    for (long long n = 0; n < spec.rows; ++n) rows.push_back(detail::fetch_row(spec.kind, n));
    switch (spec.format) {
        case render_format::text: return detail::render_text(spec, rows, cells);
        case render_format::csv: return detail::render_csv(rows, cells);
        case render_format::json: return detail::render_json(spec, rows, cells);
    }
    throw std::invalid_argument("render_triangle: unknown format");
}

} // namespace stickkit
