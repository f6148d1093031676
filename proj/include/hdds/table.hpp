#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hdds/density.hpp"
#include "hdds/render.hpp"
#include "hdds/sample.hpp"

namespace hdds {

/// A conditioning column: ordered level labels plus one level code per record.
struct cond_column {
    std::string name;
    std::vector<std::string> levels;
    std::vector<std::uint32_t> codes;
};

inline void validate(const cond_column& c) {
    if (c.levels.empty())
        throw std::invalid_argument("conditioning column has no levels");
    for (auto code : c.codes)
        if (code >= c.levels.size())
            throw std::invalid_argument("conditioning code outside level set");
}

/// Ingested records: one numeric target and up to two conditioning columns.
struct dataset {
    sample target;
    cond_column cond_x;
    std::optional<cond_column> cond_y;
    std::string source_label;
};

inline void validate(const dataset& ds) {
    validate(ds.target);
    validate(ds.cond_x);
    if (ds.cond_x.codes.size() != ds.target.values.size())
        throw std::invalid_argument("conditioning column length mismatch");
    if (ds.cond_y) {
        validate(*ds.cond_y);
        if (ds.cond_y->codes.size() != ds.target.values.size())
            throw std::invalid_argument("conditioning column length mismatch");
    }
}

/// Percentile cut points for turning a continuous conditioner into classes.
/// Records equal to a cut point fall in the lower class.
struct binning_rule {
    int n_classes{2};
    std::vector<double> edges;  // n_classes + 1 boundaries, strictly increasing
};

inline binning_rule make_binning_rule(const std::vector<double>& values, int n_classes) {
    if (n_classes < 2)
        throw std::invalid_argument("n_classes must be at least 2");
    for (double v : values)
        if (!std::isfinite(v))
            throw std::invalid_argument("binning input contains non-finite value");
    std::vector<double> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    const auto distinct =
        static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
    if (distinct <= static_cast<std::size_t>(n_classes))
        throw std::runtime_error("degenerate binning");
    sorted = values;
    std::sort(sorted.begin(), sorted.end());
    binning_rule rule;
    rule.n_classes = n_classes;
    rule.edges.resize(static_cast<std::size_t>(n_classes) + 1);
    for (int j = 0; j <= n_classes; ++j)
        rule.edges[static_cast<std::size_t>(j)] =
            quantile_sorted(sorted, static_cast<double>(j) / n_classes);
    for (int j = 0; j < n_classes; ++j)
        if (!(rule.edges[static_cast<std::size_t>(j)] < rule.edges[static_cast<std::size_t>(j) + 1]))
            throw std::runtime_error("degenerate binning");
    return rule;
}

inline cond_column bin_continuous(const std::vector<double>& values, const binning_rule& rule,
                                  std::string name = "binned") {
    cond_column col;
    col.name = std::move(name);
    for (int j = 0; j < rule.n_classes; ++j) {
        const auto ju = static_cast<std::size_t>(j);
        const std::string open = j == 0 ? "[" : "(";
        col.levels.push_back(open + format_bound_label(rule.edges[ju]) + ", " +
                             format_bound_label(rule.edges[ju + 1]) + "]");
    }
    col.codes.reserve(values.size());
    for (double v : values) {
        std::uint32_t cls = 0;
        for (int j = 1; j < rule.n_classes; ++j)
            if (v > rule.edges[static_cast<std::size_t>(j)]) cls = static_cast<std::uint32_t>(j);
        col.codes.push_back(cls);
    }
    return col;
}

inline cond_column bin_continuous(const std::vector<double>& values, int n_classes,
                                  std::string name = "binned") {
    return bin_continuous(values, make_binning_rule(values, n_classes), std::move(name));
}

/// Joint and marginal relative frequencies of the two conditioning variables.
struct prob_table {
    std::vector<std::vector<double>> joint;        // I x J
    std::vector<double> row_marg;                  // I
    std::vector<double> col_marg;                  // J
    std::vector<std::vector<std::size_t>> counts;  // I x J
    std::size_t n{0};
};

inline prob_table joint_probabilities(const dataset& ds) {
    validate(ds);
    if (!ds.cond_y)
        throw std::invalid_argument("joint_probabilities requires both conditioning columns");
    const std::size_t ni = ds.cond_x.levels.size();
    const std::size_t nj = ds.cond_y->levels.size();
    prob_table t;
    t.n = ds.target.values.size();
    t.counts.assign(ni, std::vector<std::size_t>(nj, 0));
    for (std::size_t r = 0; r < t.n; ++r)
        ++t.counts[ds.cond_x.codes[r]][ds.cond_y->codes[r]];

    t.joint.assign(ni, std::vector<double>(nj, 0.0));
    t.row_marg.assign(ni, 0.0);
    t.col_marg.assign(nj, 0.0);
    std::vector<std::size_t> row_counts(ni, 0), col_counts(nj, 0);
    for (std::size_t i = 0; i < ni; ++i)
        for (std::size_t j = 0; j < nj; ++j) {
            t.joint[i][j] =
                static_cast<double>(t.counts[i][j]) / static_cast<double>(t.n);
            row_counts[i] += t.counts[i][j];
            col_counts[j] += t.counts[i][j];
        }
    // marginals from integer count sums, so they stay exact ratios
    for (std::size_t i = 0; i < ni; ++i)
        t.row_marg[i] = static_cast<double>(row_counts[i]) / static_cast<double>(t.n);
    for (std::size_t j = 0; j < nj; ++j)
        t.col_marg[j] = static_cast<double>(col_counts[j]) / static_cast<double>(t.n);
    return t;
}

/// Replace cond_y with the product of cond_y and an extra column; levels are
/// the observed (y, w) pairs in (y, w) order, labeled "y x w".
inline dataset compose_conditioning(const dataset& ds, const cond_column& extra) {
    validate(ds);
    validate(extra);
    if (extra.codes.size() != ds.target.values.size())
        throw std::invalid_argument("composite column length mismatch");
    if (!ds.cond_y)
        throw std::invalid_argument("compose_conditioning requires cond_y");

    const std::size_t nw = extra.levels.size();
    std::map<std::uint64_t, std::uint32_t> pair_code;  // (y, w) key -> new code, key-ordered
    for (std::size_t r = 0; r < ds.target.values.size(); ++r) {
        const std::uint64_t key =
            static_cast<std::uint64_t>(ds.cond_y->codes[r]) * nw + extra.codes[r];
        pair_code.emplace(key, 0);
    }
    cond_column composite;
    composite.name = ds.cond_y->name + "\xc3\x97" + extra.name;  // UTF-8 multiplication sign
    std::uint32_t next = 0;
    for (auto& [key, code] : pair_code) {
        code = next++;
        const auto yi = static_cast<std::size_t>(key / nw);
        const auto wi = static_cast<std::size_t>(key % nw);
        composite.levels.push_back(ds.cond_y->levels[yi] + "\xc3\x97" + extra.levels[wi]);
    }
    composite.codes.reserve(ds.target.values.size());
    for (std::size_t r = 0; r < ds.target.values.size(); ++r) {
        const std::uint64_t key =
            static_cast<std::uint64_t>(ds.cond_y->codes[r]) * nw + extra.codes[r];
        composite.codes.push_back(pair_code.at(key));
    }
    dataset out = ds;
    out.cond_y = std::move(composite);
    return out;
}

enum class cell_role { joint, row_marginal, col_marginal, grand_marginal };

/// One table cell: the conditional (or marginal) density of the target over
/// the cell's record subset, the conditioning probability, and the scaled
/// diameter. Sparse cells keep their values for a dots-only display.
struct table_cell {
    std::optional<density_grid> grid;
    double probability{0.0};
    double diameter{0.0};
    cell_role role{cell_role::joint};
    std::vector<double> values;
    std::size_t count{0};
};

struct table_config {
    double coverage{0.99};
    int n_bins{128};
    std::optional<double> bandwidth{};
    std::optional<double> lower_bound{};
    double k{0.5};
    double d_base{320.0};
    hcl_color base{10.0, 90.0, 30.0};
    hcl_color base2{250.0, 90.0, 30.0};
    double gamma{1.0};
    std::size_t min_cell_count{5};
};

/// The (I+1) x (J+1) grid of conditional and marginal density cells. The last
/// column holds p(z|x_i), the last row p(z|y_j), the corner the marginal p(z).
/// With a single conditioner the table is a single (I+1)-cell column.
struct hdds_table {
    std::vector<std::vector<table_cell>> cells;
    shading_context ctx;
    support_bounds bounds;
    double k{0.5};
    double d_base{320.0};
    std::vector<std::string> row_labels;  // I+1 entries, last is the margin row
    std::vector<std::string> col_labels;  // J+1 entries (or just the margin column)
};

namespace detail {

inline support_bounds target_bounds(const sample& target, const table_config& cfg) {
    if (target.kind == sample_kind::discrete) {
        const auto [mn, mx] = std::minmax_element(target.values.begin(), target.values.end());
        return support_bounds{*mn - 0.5, *mx + 0.5, 1.0};
    }
    return truncation_bounds(target, cfg.coverage, cfg.lower_bound);
}

inline hdds_table build_table_with_bounds(const dataset& ds, const table_config& cfg,
                                          const support_bounds& bounds, hcl_color base) {
    validate(ds);
    const std::size_t n = ds.target.values.size();
    const std::size_t ni = ds.cond_x.levels.size();
    const std::size_t nj = ds.cond_y ? ds.cond_y->levels.size() : 0;

    hdds_table table;
    table.bounds = bounds;
    table.k = cfg.k;
    table.d_base = cfg.d_base;
    table.row_labels = ds.cond_x.levels;
    table.row_labels.push_back("all");
    if (nj > 0) {
        table.col_labels = ds.cond_y->levels;
        table.col_labels.push_back("all");
    } else {
        table.col_labels = {"all"};
    }

    const std::size_t rows = ni + 1;
    const std::size_t cols = nj + 1;
    table.cells.assign(rows, std::vector<table_cell>(cols));
    for (std::size_t r = 0; r < n; ++r) {
        const double v = ds.target.values[r];
        const std::size_t i = ds.cond_x.codes[r];
        const std::size_t j = nj > 0 ? ds.cond_y->codes[r] : 0;
        if (nj > 0) table.cells[i][j].values.push_back(v);
        table.cells[i][cols - 1].values.push_back(v);
        if (nj > 0) table.cells[rows - 1][j].values.push_back(v);
        table.cells[rows - 1][cols - 1].values.push_back(v);
    }

    long long range_lo = 0, range_hi = 0;
    if (ds.target.kind == sample_kind::discrete) {
        const auto [mn, mx] =
            std::minmax_element(ds.target.values.begin(), ds.target.values.end());
        range_lo = static_cast<long long>(std::llround(*mn));
        range_hi = static_cast<long long>(std::llround(*mx));
    }

    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            table_cell& cell = table.cells[i][j];
            cell.count = cell.values.size();
            const bool margin_row = i == rows - 1;
            const bool margin_col = j == cols - 1;
            cell.role = margin_row && margin_col ? cell_role::grand_marginal
                        : margin_row            ? cell_role::col_marginal
                        : margin_col            ? cell_role::row_marginal
                                                : cell_role::joint;
            cell.probability = margin_row && margin_col
                                   ? 1.0
                                   : static_cast<double>(cell.count) / static_cast<double>(n);
            cell.diameter = cell.probability > 0.0
                                ? diameter_scale(cell.probability, cfg.k, cfg.d_base)
                                : 0.0;
            if (cell.count >= std::max<std::size_t>(cfg.min_cell_count, 1)) {
                const sample sub{cell.values, ds.target.kind};
                cell.grid = ds.target.kind == sample_kind::discrete
                                ? estimate_discrete(sub, range_lo, range_hi)
                                : estimate_continuous(sub, bounds, cfg.n_bins, cfg.bandwidth);
            }
        }

    std::vector<const density_grid*> grids;
    for (const auto& row : table.cells)
        for (const auto& cell : row)
            if (cell.grid) grids.push_back(&*cell.grid);
    table.ctx = grids.empty()
                    ? shading_context{base, cfg.gamma, 1.0}
                    : make_context(std::span<const density_grid* const>(grids), base, cfg.gamma);
    return table;
}

}  // namespace detail

/// Build an HDDS table: truncation bounds are computed once from the full
/// target sample, every cell's density lives on that shared grid, and one
/// shading context spans all cells.
inline hdds_table build_table(const dataset& ds, const table_config& cfg) {
    validate(ds);
    if (ds.target.values.empty())
        throw std::runtime_error("empty target after filtering");
    return detail::build_table_with_bounds(ds, cfg, detail::target_bounds(ds.target, cfg),
                                           cfg.base);
}

/// Two HDDS tables over shared (pooled) support bounds, one per source; each
/// source keeps its own probabilities, diameters, and shading context.
struct comparison_table {
    hdds_table a;
    hdds_table b;
    std::string label_a;
    std::string label_b;
};

inline comparison_table build_comparison(const dataset& ds_a, const dataset& ds_b,
                                         const table_config& cfg) {
    validate(ds_a);
    validate(ds_b);
    auto check_levels = [](const cond_column& a, const cond_column& b) {
        if (a.levels != b.levels) {
            std::string msg = "conditioning level sets differ:";
            for (const auto& l : a.levels)
                if (std::find(b.levels.begin(), b.levels.end(), l) == b.levels.end())
                    msg += " -" + l;
            for (const auto& l : b.levels)
                if (std::find(a.levels.begin(), a.levels.end(), l) == a.levels.end())
                    msg += " +" + l;
            throw std::runtime_error(msg);
        }
    };
    check_levels(ds_a.cond_x, ds_b.cond_x);
    if (ds_a.cond_y.has_value() != ds_b.cond_y.has_value())
        throw std::runtime_error("conditioning level sets differ: second conditioner missing");
    if (ds_a.cond_y) check_levels(*ds_a.cond_y, *ds_b.cond_y);
    if (ds_a.target.kind != ds_b.target.kind)
        throw std::runtime_error("target kinds differ between sources");

    sample pooled = ds_a.target;
    pooled.values.insert(pooled.values.end(), ds_b.target.values.begin(),
                         ds_b.target.values.end());
    const support_bounds bounds = detail::target_bounds(pooled, cfg);

    comparison_table cmp;
    cmp.a = detail::build_table_with_bounds(ds_a, cfg, bounds, cfg.base);
    cmp.b = detail::build_table_with_bounds(ds_b, cfg, bounds, cfg.base2);
    cmp.label_a = ds_a.source_label;
    cmp.label_b = ds_b.source_label;
    return cmp;
}

// ---------------------------------------------------------------------------
// Table rendering

struct table_render_options {
    bool show_median{false};
    bool show_dots{false};
    std::uint64_t seed{12345};
    double label_size{13.0};
};

namespace detail {

struct table_layout {
    double left_gutter, top_gutter, pad, cell_w, cell_h, baseline_off;
};

inline table_layout layout_for(const hdds_table& t, bool full_disks) {
    table_layout ly{};
    ly.pad = std::max(8.0, 0.04 * t.d_base);
    ly.left_gutter = 96.0;
    ly.top_gutter = 30.0;
    ly.cell_w = t.d_base + 2.0 * ly.pad;
    ly.cell_h = (full_disks ? t.d_base : t.d_base / 2.0) + 2.0 * ly.pad;
    ly.baseline_off = full_disks ? ly.cell_h / 2.0 : ly.cell_h - ly.pad;
    return ly;
}

inline void cell_labels(std::vector<element>& els, const hdds_table& t,
                        const table_layout& ly, double label_size) {
    for (std::size_t j = 0; j < t.col_labels.size(); ++j) {
        text_elem h;
        h.x = ly.left_gutter + ly.cell_w * (static_cast<double>(j) + 0.5);
        h.y = ly.top_gutter - 8.0;
        h.size = label_size;
        h.anchor = text_anchor::middle;
        h.text = t.col_labels[j];
        els.push_back(h);
    }
    for (std::size_t i = 0; i < t.row_labels.size(); ++i) {
        text_elem h;
        h.x = ly.left_gutter - 8.0;
        h.y = ly.top_gutter + ly.cell_h * (static_cast<double>(i) + 0.5) + label_size * 0.35;
        h.size = label_size;
        h.anchor = text_anchor::end;
        h.text = t.row_labels[i];
        els.push_back(h);
    }
}

// Separators before the margin row/column, echoing the table scheme.
inline void separators(std::vector<element>& els, const hdds_table& t,
                       const table_layout& ly, double width_px) {
    const rgb_color gray{0.45, 0.45, 0.45};
    const auto rows = static_cast<double>(t.row_labels.size());
    const auto cols = static_cast<double>(t.col_labels.size());
    const double x_end = ly.left_gutter + ly.cell_w * cols;
    const double y_end = ly.top_gutter + ly.cell_h * rows;
    if (t.col_labels.size() > 1) {
        const double x = ly.left_gutter + ly.cell_w * (cols - 1.0);
        els.push_back(line_elem{x, ly.top_gutter, x, y_end, width_px, gray});
    }
    if (t.row_labels.size() > 1) {
        const double y = ly.top_gutter + ly.cell_h * (rows - 1.0);
        els.push_back(line_elem{ly.left_gutter, y, x_end, y, width_px, gray});
    }
}

inline std::uint64_t cell_seed(std::uint64_t base, std::size_t i, std::size_t j) {
    return base ^ (0x9e3779b97f4a7c15ULL * (i * 8191 + j + 1));
}

// Half-disk outline plus data dots for cells too sparse to shade.
inline void sparse_cell(std::vector<element>& els, const table_cell& cell,
                        const hdds_table& t, const strip_options& so, sample_kind kind,
                        orientation orient, std::uint64_t seed) {
    if (cell.count == 0 || cell.diameter <= 0.0) return;
    const double r = cell.diameter / 2.0;
    sector_elem outline;
    outline.cx = so.cx;
    outline.cy = so.cy;
    outline.radius = r;
    outline.theta_start = 0.0;
    outline.theta_end = M_PI;
    outline.orient = orient;
    outline.stroke = rgb_color{0.6, 0.6, 0.6};
    outline.stroke_width = 0.008 * r;
    els.push_back(outline);

    half_disk_strip frame;
    frame.diameter = cell.diameter;
    frame.orient = orient;
    frame.bounds = t.bounds;
    const int nb = kind == sample_kind::discrete
                       ? static_cast<int>(std::lround(t.bounds.hi - t.bounds.lo))
                       : 1;
    sector whole;
    for (int b = 0; b < std::max(nb, 1); ++b) {
        whole.theta_start = M_PI * static_cast<double>(b) / std::max(nb, 1);
        whole.theta_end = M_PI * static_cast<double>(b + 1) / std::max(nb, 1);
        frame.sectors.push_back(whole);
    }
    const dot_overlay dots = render_dots(sample{cell.values, kind}, frame, seed);
    for (auto& e : render_overlay(dots, frame, so)) els.push_back(std::move(e));
}

inline void shaded_cell(std::vector<element>& els, const table_cell& cell,
                        const hdds_table& t, const strip_options& so, sample_kind kind,
                        orientation orient, const table_render_options& opts,
                        std::uint64_t seed) {
    const half_disk_strip strip = tessellate(*cell.grid, t.ctx, cell.diameter, orient);
    for (auto& e : render_strip(strip, so)) els.push_back(std::move(e));
    if (opts.show_dots) {
        const dot_overlay dots = render_dots(sample{cell.values, kind}, strip, seed);
        for (auto& e : render_overlay(dots, strip, so)) els.push_back(std::move(e));
    }
}

}  // namespace detail

/// Render an HDDS table to a complete figure.
inline figure_doc render_table(const hdds_table& t, const sample_kind target_kind,
                               const table_render_options& opts = {}) {
    const detail::table_layout ly = detail::layout_for(t, false);
    figure_doc doc;
    doc.seed = opts.seed;
    doc.width = ly.left_gutter + ly.cell_w * static_cast<double>(t.col_labels.size()) + 8.0;
    doc.height = ly.top_gutter + ly.cell_h * static_cast<double>(t.row_labels.size()) +
                 opts.label_size * 2.0;

    detail::cell_labels(doc.elements, t, ly, opts.label_size);
    detail::separators(doc.elements, t, ly, 1.0);

    for (std::size_t i = 0; i < t.cells.size(); ++i)
        for (std::size_t j = 0; j < t.cells[i].size(); ++j) {
            const table_cell& cell = t.cells[i][j];
            strip_options so;
            so.cx = ly.left_gutter + ly.cell_w * (static_cast<double>(j) + 0.5);
            so.cy = ly.top_gutter + ly.cell_h * static_cast<double>(i) + ly.baseline_off;
            so.show_median = opts.show_median;
            so.label_size = opts.label_size;
            so.show_bound_labels =
                cell.role == cell_role::grand_marginal;  // one shared bounds legend
            const std::uint64_t seed = detail::cell_seed(opts.seed, i, j);
            if (cell.count == 0) {
                text_elem empty;
                empty.x = so.cx;
                empty.y = so.cy - opts.label_size * 0.5;
                empty.size = opts.label_size;
                empty.anchor = text_anchor::middle;
                empty.text = "n=0";
                empty.fill = rgb_color{0.45, 0.45, 0.45};
                doc.elements.push_back(empty);
            } else if (!cell.grid) {
                detail::sparse_cell(doc.elements, cell, t, so, target_kind, orientation::up,
                                    seed);
            } else {
                detail::shaded_cell(doc.elements, cell, t, so, target_kind, orientation::up,
                                    opts, seed);
            }
        }
    return doc;
}

/// Render a two-source comparison table: in every cell, source A's half disk
/// on top and source B's below, forming a disk.
inline figure_doc render_comparison(const comparison_table& cmp, sample_kind target_kind,
                                    const table_render_options& opts = {}) {
    const detail::table_layout ly = detail::layout_for(cmp.a, true);
    const double legend_h = opts.label_size * 3.0;
    figure_doc doc;
    doc.seed = opts.seed;
    doc.width =
        ly.left_gutter + ly.cell_w * static_cast<double>(cmp.a.col_labels.size()) + 8.0;
    doc.height = legend_h + ly.top_gutter +
                 ly.cell_h * static_cast<double>(cmp.a.row_labels.size()) +
                 opts.label_size * 2.0;

    auto legend_entry = [&](double y, const hcl_color& color, const std::string& label) {
        text_elem e;
        e.x = ly.left_gutter;
        e.y = y;
        e.size = opts.label_size;
        e.anchor = text_anchor::start;
        e.text = label;
        e.fill = hcl_to_rgb(color);
        doc.elements.push_back(e);
    };
    legend_entry(opts.label_size * 1.2, cmp.a.ctx.base,
                 cmp.label_a.empty() ? "source A" : cmp.label_a);
    legend_entry(opts.label_size * 2.4, cmp.b.ctx.base,
                 cmp.label_b.empty() ? "source B" : cmp.label_b);

    hdds_table shifted = cmp.a;  // reuse the single-table chrome at an offset
    std::vector<element> chrome;
    detail::cell_labels(chrome, shifted, ly, opts.label_size);
    detail::separators(chrome, shifted, ly, 1.0);
    for (element& e : chrome) {
        if (auto* txt = std::get_if<text_elem>(&e)) txt->y += legend_h;
        if (auto* ln = std::get_if<line_elem>(&e)) {
            ln->y1 += legend_h;
            ln->y2 += legend_h;
        }
        doc.elements.push_back(e);
    }

    for (std::size_t i = 0; i < cmp.a.cells.size(); ++i)
        for (std::size_t j = 0; j < cmp.a.cells[i].size(); ++j) {
            strip_options so;
            so.cx = ly.left_gutter + ly.cell_w * (static_cast<double>(j) + 0.5);
            so.cy = legend_h + ly.top_gutter + ly.cell_h * static_cast<double>(i) +
                    ly.baseline_off;
            so.show_median = opts.show_median;
            so.label_size = opts.label_size;
            so.show_bound_labels = false;
            auto render_half = [&](const hdds_table& t, orientation orient,
                                   std::uint64_t seed) {
                const table_cell& cell = t.cells[i][j];
                if (cell.count == 0) return;
                if (!cell.grid)
                    detail::sparse_cell(doc.elements, cell, t, so, target_kind, orient, seed);
                else
                    detail::shaded_cell(doc.elements, cell, t, so, target_kind, orient, opts,
                                        seed);
            };
            render_half(cmp.a, orientation::up, detail::cell_seed(opts.seed, i, j));
            render_half(cmp.b, orientation::down, detail::cell_seed(opts.seed + 1, i, j));
            const double r_max =
                std::max(cmp.a.cells[i][j].diameter, cmp.b.cells[i][j].diameter) / 2.0;
            if (r_max > 0.0)
                doc.elements.push_back(line_elem{so.cx - r_max, so.cy, so.cx + r_max, so.cy,
                                                 0.0035 * r_max, black});
        }
    return doc;
}

}  // namespace hdds
