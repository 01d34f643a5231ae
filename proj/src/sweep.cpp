#include "zeromode/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include <json.hpp>

#include "zeromode/closed_forms.hpp"
#include "zeromode/errors.hpp"
#include "zeromode/hydrogen.hpp"
#include "zeromode/lattice.hpp"
#include "zeromode/tripartite.hpp"

namespace zeromode {

namespace {

double parse_number(const std::string& s, const std::string& whole) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw UsageError("grid '" + whole + "': '" + s + "' is not a number");
    }
    if (used != s.size()) throw UsageError("grid '" + whole + "': '" + s + "' is not a number");
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t from = 0;
    for (;;) {
        const auto at = s.find(sep, from);
        parts.push_back(s.substr(from, at - from));
        if (at == std::string::npos) break;
        from = at + 1;
    }
    return parts;
}

nlohmann::ordered_json to_json(const Cell& c) {
    if (const auto* d = std::get_if<double>(&c)) {
        if (!std::isfinite(*d)) return format_double(*d);
        return *d;
    }
    if (const auto* i = std::get_if<long long>(&c)) return *i;
    return std::get<std::string>(c);
}

nlohmann::ordered_json rows_json(const Table& t) {
    auto rows = nlohmann::ordered_json::array();
    for (const auto& r : t.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t j = 0; j < t.columns.size(); ++j) obj[t.columns[j]] = to_json(r[j]);
        rows.push_back(std::move(obj));
    }
    return rows;
}

Meta base_meta(const std::string& subject, const CommonOptions& c) {
    return {{"subject", subject},
            {"version", std::string(kVersion)},
            {"zero_tol", c.zero_tol},
            {"rel_tol", c.rel_tol}};
}

void add_grid_meta(Meta& m, const std::string& name, const ParamGrid& g) {
    m.emplace_back(name + "_start", g.start);
    m.emplace_back(name + "_stop", g.stop);
    m.emplace_back(name + "_count", static_cast<long long>(g.count));
    m.emplace_back(name + "_spacing", std::string(g.spacing == Spacing::geometric ? "geometric" : "linear"));
}

std::string join_doubles(const std::vector<double>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += format_double(v[i]);
    }
    return out;
}

}  // namespace

void validate(const ParamGrid& g) {
    if (g.count < 2) throw UsageError("grid: count must be at least 2");
    if (!std::isfinite(g.start) || !std::isfinite(g.stop)) throw UsageError("grid: endpoints must be finite");
    if (g.start == g.stop) throw UsageError("grid: start and stop must differ");
    if (g.spacing == Spacing::geometric && !(g.start * g.stop > 0.0))
        throw UsageError("grid: geometric spacing needs nonzero endpoints of the same sign");
}

ParamGrid parse_grid(const std::string& text) {
    const auto parts = split(text, ':');
    if (parts.size() != 3 && parts.size() != 4) throw UsageError("grid '" + text + "': expected start:stop:count[:geom]");
    ParamGrid g;
    g.start = parse_number(parts[0], text);
    g.stop = parse_number(parts[1], text);
    const double count = parse_number(parts[2], text);
    if (count != std::floor(count) || count < 0 || count > 1e7) throw UsageError("grid '" + text + "': bad count");
    g.count = static_cast<std::size_t>(count);
    if (parts.size() == 4) {
        if (parts[3] == "geom" || parts[3] == "geometric")
            g.spacing = Spacing::geometric;
        else if (parts[3] == "lin" || parts[3] == "linear")
            g.spacing = Spacing::linear;
        else
            throw UsageError("grid '" + text + "': spacing must be 'geom' or 'lin'");
    }
    validate(g);
    return g;
}

std::vector<double> grid_values(const ParamGrid& g) {
    validate(g);
    std::vector<double> v(g.count);
    const double last = static_cast<double>(g.count - 1);
    for (std::size_t i = 0; i < g.count; ++i) {
        const double t = static_cast<double>(i) / last;
        if (g.spacing == Spacing::linear)
            v[i] = g.start + (g.stop - g.start) * t;
        else
            v[i] = g.start * std::pow(g.stop / g.start, t);
    }
    // Endpoints exactly as requested.
    v.front() = g.start;
    v.back() = g.stop;
    return v;
}

Format parse_format(const std::string& text) {
    if (text == "csv") return Format::csv;
    if (text == "json") return Format::json;
    throw UsageError("format must be csv or json, got '" + text + "'");
}

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string format_cell(const Cell& c) {
    if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
    if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
    return std::get<std::string>(c);
}

Cell entropy_cell(const EntropyValue& s) {
    if (s.is_divergent()) return std::numeric_limits<double>::infinity();
    return s.nats();
}

namespace {

// RFC 4180 quoting for fields with separators or quotes.
std::string csv_field(std::string s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
    }
    return q + '"';
}

}  // namespace

void write_csv(const Table& t, std::ostream& os) {
    for (std::size_t j = 0; j < t.columns.size(); ++j) os << (j ? "," : "") << csv_field(t.columns[j]);
    os << '\n';
    for (const auto& r : t.rows) {
        for (std::size_t j = 0; j < r.size(); ++j) os << (j ? "," : "") << csv_field(format_cell(r[j]));
        os << '\n';
    }
}

void write_json(const SweepOutput& out, std::ostream& os) {
    nlohmann::ordered_json doc;
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    for (const auto& [k, v] : out.meta) meta[k] = to_json(v);
    doc["meta"] = std::move(meta);
    doc["rows"] = rows_json(out.table);
    if (out.summary) doc["summary"] = rows_json(*out.summary);
    os << doc.dump(2) << '\n';
}

namespace {

void write_file(const std::filesystem::path& path, const std::function<void(std::ostream&)>& body) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    body(f);
    f.flush();
    if (!f) throw std::runtime_error("write to '" + path.string() + "' failed");
}

}  // namespace

void emit(const SweepOutput& out, Format fmt, const std::string& path) {
    if (fmt == Format::json) {
        if (path.empty())
            write_json(out, std::cout);
        else
            write_file(path, [&](std::ostream& os) { write_json(out, os); });
        return;
    }
    if (path.empty()) {
        write_csv(out.table, std::cout);
        if (out.summary) {
            std::cout << '\n';
            write_csv(*out.summary, std::cout);
        }
        return;
    }
    const std::filesystem::path p(path);
    write_file(p, [&](std::ostream& os) { write_csv(out.table, os); });
    if (out.summary) {
        auto sp = p;
        sp.replace_filename(p.stem().string() + "_summary" + p.extension().string());
        write_file(sp, [&](std::ostream& os) { write_csv(*out.summary, os); });
    }
}

std::vector<std::vector<Cell>> parallel_rows(std::size_t n, unsigned jobs,
                                             const std::function<std::vector<Cell>(std::size_t)>& fn) {
    std::vector<std::vector<Cell>> rows(n);
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                rows[i] = fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return rows;
}

SweepOutput run_fig1(const Fig1Options& o, const CommonOptions& c) {
    const auto rs = grid_values(o.grid);
    SweepOutput out;
    out.meta = base_meta("fig1", c);
    add_grid_meta(out.meta, "R", o.grid);
    out.table.columns = {"R", "S"};
    out.table.rows = parallel_rows(rs.size(), c.jobs, [&](std::size_t i) -> std::vector<Cell> {
        return {rs[i], entropy_cell(entropy_closed(rs[i]))};
    });
    return out;
}

SweepOutput run_fig2(const Fig2Options& o, const CommonOptions& c) {
    const auto rs = grid_values(o.grid);
    const double energy = ir_energy_choice(o.omega0, o.hbar);
    SweepOutput out;
    out.meta = base_meta("fig2", c);
    add_grid_meta(out.meta, "R", o.grid);
    out.meta.emplace_back("omega0", o.omega0);
    out.meta.emplace_back("mass", o.mass);
    out.meta.emplace_back("hbar", o.hbar);
    out.meta.emplace_back("E_minus", energy);
    out.table.columns = {"R", "S", "S_reference"};
    out.table.rows = parallel_rows(rs.size(), c.jobs, [&](std::size_t i) -> std::vector<Cell> {
        const double r = rs[i];
        if (r < 0.0 || r > 1.0) throw DomainError("fig2: R must lie in [0, 1]");
        const auto s = free_particle_entropy(o.omega0, r * o.omega0, energy, o.mass, o.hbar);
        const double ref = r == 0.0 ? std::numeric_limits<double>::infinity() : 0.0 - std::sqrt(2.0) * std::log(r);
        return {r, entropy_cell(s), ref};
    });
    return out;
}

SweepOutput run_fig3(const Fig3Options& o, const CommonOptions& c) {
    if (o.zetas.empty()) throw UsageError("fig3: need at least one zeta");
    for (double z : o.zetas)
        if (!(z > 0.0)) throw UsageError("fig3: zeta values must be positive");
    if (!(o.kappa_grid.start >= 0.0) || !(o.kappa_grid.stop >= 0.0)) throw UsageError("fig3: kappa must be nonnegative");
    const auto kappas = grid_values(o.kappa_grid);
    QuadratureConfig quad;
    quad.rel_tol = c.rel_tol;

    SweepOutput out;
    out.meta = base_meta("fig3", c);
    out.meta.emplace_back("eta", o.eta);
    out.meta.emplace_back("zetas", join_doubles(o.zetas));
    out.meta.emplace_back("invariance_etas", join_doubles(o.invariance_etas));
    add_grid_meta(out.meta, "kappa", o.kappa_grid);

    out.table.columns = {"zeta", "kappa", "g"};
    const std::size_t nk = kappas.size();
    out.table.rows = parallel_rows(o.zetas.size() * nk, c.jobs, [&](std::size_t i) -> std::vector<Cell> {
        const double z = o.zetas[i / nk];
        const double k = kappas[i % nk];
        return {z, k, g_integrand(k, o.eta, z)};
    });

    Table summary;
    summary.columns = {"zeta", "eta", "S", "abs_error", "kappa_max", "eta_spread"};
    summary.rows = parallel_rows(o.zetas.size(), c.jobs, [&](std::size_t i) -> std::vector<Cell> {
        const double z = o.zetas[i];
        const auto r = hydrogen_entropy(o.eta, z, quad);
        double lo = r.entropy.nats();
        double hi = lo;
        for (double e : o.invariance_etas) {
            const double s = signed_spectral_entropy(e, z, quad).integral.value;
            lo = std::min(lo, s);
            hi = std::max(hi, s);
        }
        return {z, o.eta, entropy_cell(r.entropy), r.abs_error, r.kappa_max, hi - lo};
    });
    out.summary = std::move(summary);
    return out;
}

SweepOutput run_fig4(const Fig4Options& o, const CommonOptions& c) {
    const auto eps = grid_values(o.grid);
    SweepOutput out;
    out.meta = base_meta("fig4", c);
    add_grid_meta(out.meta, "eps", o.grid);
    out.table.columns = {"eps", "lambda", "S", "warning"};
    out.table.rows = parallel_rows(eps.size(), c.jobs, [&](std::size_t i) -> std::vector<Cell> {
        const double e = eps[i];
        return {e, distorted_coordinate_eigenvalue(e), entropy_cell(distorted_coordinate_entropy(e)),
                static_cast<long long>(distorted_coordinate_warning(e) ? 1 : 0)};
    });
    return out;
}

SweepOutput run_tripartite_sweep(const TripartiteSweepOptions& o, const CommonOptions& c) {
    const auto deltas = grid_values(o.delta_grid);
    const double s = o.alpha_t * o.alpha_t + o.beta_t * o.beta_t;
    if (s == 0.0) throw UsageError("tripartite-sweep: alpha_t and beta_t cannot both vanish");
    SweepOutput out;
    out.meta = base_meta("tripartite", c);
    out.meta.emplace_back("alpha_t", o.alpha_t);
    out.meta.emplace_back("beta_t", o.beta_t);
    add_grid_meta(out.meta, "delta", o.delta_grid);
    out.table.columns = {"delta", "k", "regime", "kappa2", "S1", "S2"};
    out.table.rows = parallel_rows(deltas.size(), c.jobs, [&](std::size_t i) -> std::vector<Cell> {
        const ScaledCoupling sc{o.alpha_t, o.beta_t, s * (1.0 + deltas[i])};
        const auto regime = classify(sc, c.zero_tol);
        if (regime.label == RegimeLabel::inverted)
            return {deltas[i], sc.k, std::string(to_string(regime.label)), regime.kappa2, std::string("undefined"),
                    std::string("undefined")};
        return {deltas[i], sc.k, std::string(to_string(regime.label)), regime.kappa2,
                entropy_cell(entropy_x1(sc, c.zero_tol)), entropy_cell(entropy_x2(sc, c.zero_tol))};
    });
    return out;
}

SweepOutput run_lattice_sweep(const LatticeSweepOptions& o, const CommonOptions& c) {
    if (o.sites < 2 || o.sites > 1024) throw UsageError("lattice-sweep: sites must lie in [2, 1024]");
    const auto xs = grid_values(o.grid);
    const auto cut = half_chain(o.sites);
    SweepOutput out;
    out.meta = base_meta("lattice", c);
    out.meta.emplace_back("sites", static_cast<long long>(o.sites));
    out.meta.emplace_back("axis", std::string(o.axis == LatticeAxis::mu ? "mu" : "spacing"));
    if (o.axis == LatticeAxis::spacing) out.meta.emplace_back("m_f", o.m_f);
    add_grid_meta(out.meta, o.axis == LatticeAxis::mu ? "mu" : "a", o.grid);

    if (o.axis == LatticeAxis::mu) {
        out.table.columns = {"mu", "omega_bar0", "zero_modes", "S"};
        out.table.rows = parallel_rows(xs.size(), c.jobs, [&](std::size_t i) -> std::vector<Cell> {
            const double mu = xs[i];
            const auto t = transformed_modes(o.sites, mu);
            std::vector<double> sq(t.omega_bar.size());
            std::transform(t.omega_bar.begin(), t.omega_bar.end(), sq.begin(), [](double w) { return w * w; });
            return {mu, t.omega_bar[0], static_cast<long long>(zero_mode_count(sq, c.zero_tol)),
                    entropy_cell(transformed_entropy(o.sites, mu, cut, c.zero_tol))};
        });
    } else {
        out.table.columns = {"a", "mu", "zero_modes", "S"};
        out.table.rows = parallel_rows(xs.size(), c.jobs, [&](std::size_t i) -> std::vector<Cell> {
            const LatticeParams p{o.sites, xs[i], o.m_f};
            const auto spec = dispersion_spectrum(p);
            return {xs[i], lattice_mu(p.a, p.m_f), static_cast<long long>(zero_mode_count(spec, c.zero_tol)),
                    entropy_cell(half_chain_entropy(p, cut, false, c.zero_tol))};
        });
    }
    return out;
}

}  // namespace zeromode
