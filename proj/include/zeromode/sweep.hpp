#pragma once

// Figure and sweep drivers behind the CLI. Every runner returns plain tables;
// writers format doubles with 17 significant digits and "\n" line endings so
// identical inputs give byte-identical files.

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "zeromode/gaussian.hpp"

namespace zeromode {

// Bad flags or grid strings; the CLI maps these to exit status 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Spacing { linear, geometric };

struct ParamGrid {
    double start = 0.0;
    double stop = 1.0;
    std::size_t count = 2;
    Spacing spacing = Spacing::linear;
};

// "start:stop:count[:geom|:lin]". Throws UsageError on malformed input or
// count < 2, start == stop, or a geometric grid whose endpoints differ in sign
// or touch zero.
ParamGrid parse_grid(const std::string& text);
void validate(const ParamGrid& g);
std::vector<double> grid_values(const ParamGrid& g);

using Cell = std::variant<double, long long, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

// Ordered key/value pairs for the JSON "meta" object and CSV comment-free output.
using Meta = std::vector<std::pair<std::string, Cell>>;

struct SweepOutput {
    Meta meta;
    Table table;
    std::optional<Table> summary;  // fig3 only
};

enum class Format { csv, json };

Format parse_format(const std::string& text);

// %.17g; infinities as "inf" / "-inf", NaN as "nan".
std::string format_double(double x);
std::string format_cell(const Cell& c);
Cell entropy_cell(const EntropyValue& s);

void write_csv(const Table& t, std::ostream& os);
// {"meta": {...}, "rows": [{col: value, ...}, ...], "summary": [...]}
void write_json(const SweepOutput& out, std::ostream& os);

// Writes to `path`, or stdout when empty. For CSV with a summary table the
// summary goes to "<stem>_summary<ext>" next to `path` (or after a blank line
// on stdout). I/O failures throw std::runtime_error naming the path.
void emit(const SweepOutput& out, Format fmt, const std::string& path);

// Evaluates fn(0..n-1) on up to `jobs` threads and returns results in index
// order. The first exception in index order is rethrown.
std::vector<std::vector<Cell>> parallel_rows(std::size_t n, unsigned jobs,
                                             const std::function<std::vector<Cell>(std::size_t)>& fn);

struct CommonOptions {
    unsigned jobs = 1;
    double zero_tol = kDefaultZeroTol;
    double rel_tol = 1e-8;
};

struct Fig1Options {
    ParamGrid grid{1e-4, 1.0, 100, Spacing::geometric};
};

struct Fig2Options {
    ParamGrid grid{1e-4, 1.0, 100, Spacing::geometric};
    double omega0 = 1.0;
    double mass = 1.0;
    double hbar = 1.0;
};

struct Fig3Options {
    std::vector<double> zetas{1e-1, 1e-2, 1e-3};
    double eta = 1.0;
    ParamGrid kappa_grid{0.0, 3.0, 121, Spacing::linear};
    std::vector<double> invariance_etas{0.25, 0.5, 1.0, 2.0, 4.0};
};

struct Fig4Options {
    ParamGrid grid{0.0, 0.5, 101, Spacing::linear};
};

struct TripartiteSweepOptions {
    ParamGrid delta_grid{1e-8, 1e-1, 29, Spacing::geometric};
    double alpha_t = 1.0;
    double beta_t = 1.0;
};

enum class LatticeAxis { mu, spacing };

struct LatticeSweepOptions {
    LatticeAxis axis = LatticeAxis::mu;
    ParamGrid grid{0.9, 0.999, 12, Spacing::linear};
    std::size_t sites = 32;
    double m_f = 1.0;      // spacing axis only
    double spacing = 1.0;  // unused on the mu axis
};

SweepOutput run_fig1(const Fig1Options& o, const CommonOptions& c);
SweepOutput run_fig2(const Fig2Options& o, const CommonOptions& c);
SweepOutput run_fig3(const Fig3Options& o, const CommonOptions& c);
SweepOutput run_fig4(const Fig4Options& o, const CommonOptions& c);
SweepOutput run_tripartite_sweep(const TripartiteSweepOptions& o, const CommonOptions& c);
SweepOutput run_lattice_sweep(const LatticeSweepOptions& o, const CommonOptions& c);

inline constexpr const char* kVersion = "0.1.0";

}  // namespace zeromode
