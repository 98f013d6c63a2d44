#pragma once

#include <nhc/asymptotics.hpp>
#include <nhc/cm.hpp>
#include <nhc/curve.hpp>
#include <nhc/errors.hpp>
#include <nhc/families.hpp>
#include <nhc/height.hpp>
#include <nhc/oracle.hpp>
#include <nhc/parse.hpp>
#include <nhc/render.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace nhc::cli {

enum ExitCode : int {
    ok = 0,
    usage = 2,
    special_j = 3,
    singular = 4,
    mismatch = 5,
    over_budget = 6,
};

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) {
        if (!cur.empty()) out.push_back(cur);
    }
    return out;
}

inline std::string j_text(const Rational& j) { return j.get_num().get_str() + "/" + j.get_den().get_str(); }

inline std::string two_decimals(const Real& x) { return to_fixed(x, 2); }

inline std::string significant(const Real& x, int digits) { return x.str(digits); }

inline std::vector<Rational> parse_bounds(const std::string& list) {
    std::vector<Rational> out;
    for (const auto& part : split(list, ',')) {
        out.push_back(parse_bound(part));
    }
    if (out.empty()) {
        throw std::invalid_argument("empty bound list");
    }
    return out;
}

/// d_K as a number and j as a decimal string, so every table row serializes the same way.
inline std::vector<Cell> order_cells(const CmOrder& o) {
    return {Cell::integer(o.d_k), Cell::integer(o.f), Cell::text(o.j.get_str())};
}

struct CountArgs {
    std::string family = "all";
    std::string height = "cal";
    std::string bound;
    std::string j;
    bool asymptotic = false;
    bool force_generic = false;
    std::string format = "table";
};

inline Table count_table(const CountArgs& a) {
    const HeightSpec spec = parse_height_spec(a.height);
    const Rational X = parse_bound(a.bound);
    const bool needs_j = a.family == "j" || a.family == "j-rep";
    if (needs_j != !a.j.empty()) {
        throw std::invalid_argument(needs_j ? "--j is required for family " + a.family
                                            : "--j only applies to families j and j-rep");
    }
    if (a.force_generic && !needs_j) {
        throw std::invalid_argument("--force-generic only applies to families j and j-rep");
    }
    const Rational j = needs_j ? parse_j(a.j) : Rational(0);
    if (a.force_generic) {
        j_invariant_data(j, spec);  // throws SpecialJInvariantError for j = 0, 1728
    }

    Integer count;
    Real approx;
    if (a.family == "all") {
        count = count_tilde_all(spec, X);
        approx = main_term_tilde_all(spec, X);
    } else if (a.family == "rep") {
        count = count_rep_all(spec, X);
        approx = main_term_rep_all(spec, X);
    } else if (a.family == "j") {
        count = count_tilde_j(j, spec, X);
        approx = main_term_tilde_j(j, spec, X);
    } else if (a.family == "j-rep") {
        count = count_rep_j(j, spec, X);
        approx = main_term_rep_j(j, spec, X);
    } else if (a.family == "cm") {
        count = count_tilde_cm(spec, X);
        approx = cm_asymptotic_tilde(spec, X);
    } else if (a.family == "cm-rep") {
        count = count_rep_cm(spec, X);
        approx = cm_asymptotic(spec, X);
    } else {
        throw std::invalid_argument("unknown family '" + a.family + "'");
    }

    Table t;
    t.columns = {"family", "height", "bound"};
    std::vector<Cell> row{Cell::text(a.family), Cell::text(to_string(spec)), Cell::text(bound_label(X))};
    if (needs_j) {
        t.columns.push_back("j");
        row.push_back(Cell::text(j_text(j)));
    }
    t.columns.push_back("count");
    row.push_back(Cell::integer(count));
    if (a.asymptotic) {
        const AsymptoticReport r = report(count, approx);
        t.columns.insert(t.columns.end(), {"main_term", "relative_error"});
        row.push_back(Cell::real(two_decimals(r.approximation)));
        row.push_back(Cell::text(format_percent(r.relative_error)));
    }
    t.add(std::move(row));
    return t;
}

inline Table parametrize_table(const std::string& j_arg, const std::string& height, const std::string& bound,
                               bool squarefree_only) {
    const Rational j = parse_j(j_arg);
    const HeightSpec spec = parse_height_spec(height);
    const Rational X = parse_bound(bound);
    Table t;
    t.columns = {"m", "A", "B", "height"};
    for (const auto& pc : parametrize(j, spec, X, squarefree_only)) {
        t.add({Cell::integer(pc.m), Cell::text(pc.curve.A.get_str()), Cell::text(pc.curve.B.get_str()),
               Cell::text(pc.height.get_str())});
    }
    return t;
}

inline Table twist_table(const std::string& A, const std::string& B) {
    Integer a, b;
    if (a.set_str(A, 10) != 0 || b.set_str(B, 10) != 0) {
        throw std::invalid_argument("--A and --B must be integers");
    }
    const TwistDecomposition td = twist_decompose({a, b});
    Table t;
    t.columns = {"d", "A0", "B0"};
    t.add({Cell::integer(td.d), Cell::text(td.representative.A.get_str()),
           Cell::text(td.representative.B.get_str())});
    return t;
}

inline std::vector<Rational> default_count_bounds() {
    std::vector<Rational> out;
    for (unsigned long e : {10ul, 15ul, 20ul, 25ul, 30ul}) {
        out.emplace_back(ipow(Integer(10), e));
    }
    return out;
}

inline std::vector<Rational> default_error_bounds() {
    std::vector<Rational> out;
    for (unsigned long e = 1; e <= 7; ++e) {
        out.emplace_back(ipow(Integer(10), e));
    }
    out.emplace_back(Integer(27) * ipow(Integer(10), 9));
    return out;
}

inline Table named_table(const std::string& name, const HeightSpec& spec, const std::string& bounds_arg) {
    Table t;
    if (name == "cm-minimal") {
        t.columns = {"d_K", "f", "j", "A1", "B1", "A2", "B2", "height"};
        for (const auto& row : cm_minimal_table(spec)) {
            const auto& c = row.minimal.curves;
            std::vector<Cell> cells = order_cells(row.order);
            for (const WeierstrassCurve& curve : c) {
                cells.push_back(Cell::text(curve.A.get_str()));
                cells.push_back(Cell::text(curve.B.get_str()));
            }
            cells.push_back(Cell::text(row.minimal.height.get_str()));
            t.add(std::move(cells));
        }
    } else if (name == "cm-counts") {
        const auto bounds = bounds_arg.empty() ? default_count_bounds() : parse_bounds(bounds_arg);
        const CmCountTable counts = cm_count_table(spec, bounds);
        t.columns = {"d_K", "f", "j"};
        for (const auto& X : bounds) {
            t.columns.push_back(bound_label(X));
        }
        const auto& orders = cm_orders();
        for (std::size_t i = 0; i < orders.size(); ++i) {
            std::vector<Cell> row = order_cells(orders[i]);
            for (const auto& n : counts.counts[i]) {
                row.push_back(Cell::integer(n));
            }
            t.add(std::move(row));
        }
        std::vector<Cell> total{Cell::text("total"), Cell::text(""), Cell::text("")};
        for (const auto& n : counts.totals) {
            total.push_back(Cell::integer(n));
        }
        t.add(std::move(total));
    } else if (name == "coefficients") {
        t.columns = {"d_K", "f", "j", "coefficient"};
        const Real z2 = zeta_value(2);
        for (const auto& o : cm_orders()) {
            const Rational j(o.j);
            if (is_special_j(j)) continue;
            std::vector<Cell> row = order_cells(o);
            row.push_back(Cell::real(significant(2 * c_constant(j, spec) / z2, 10)));
            t.add(std::move(row));
        }
    } else if (name == "relative-error") {
        const auto bounds = bounds_arg.empty() ? default_error_bounds() : parse_bounds(bounds_arg);
        t.columns = {"X", "exact", "approximation", "relative_error"};
        for (const auto& X : bounds) {
            const AsymptoticReport r = report(count_rep_cm(spec, X), cm_asymptotic(spec, X));
            t.add({Cell::text(bound_label(X)), Cell::integer(r.exact), Cell::real(two_decimals(r.approximation)),
                   Cell::text(format_percent(r.relative_error))});
        }
    } else {
        throw std::invalid_argument("unknown table '" + name + "'");
    }
    return t;
}

/// Oracle against every formula; returns the name of the first mismatching family, if any.
inline std::optional<std::string> verify_table(const HeightSpec& spec, const Rational& X,
                                               const std::vector<Rational>& js, unsigned threads, Table& t) {
    CensusOptions opts;
    opts.threads = threads;
    const CensusResult census = brute_census(spec, X, js, opts);
    t.columns = {"family", "formula", "oracle", "status"};
    std::optional<std::string> first;
    auto check = [&](const std::string& family, const Integer& formula, std::uint64_t oracle) {
        const bool same = formula == Integer(std::to_string(oracle));
        if (!same && !first) first = family;
        t.add({Cell::text(family), Cell::integer(formula), Cell::integer(Integer(std::to_string(oracle))),
               Cell::text(same ? "ok" : "MISMATCH")});
    };
    check("all", count_tilde_all(spec, X), census.total_elliptic);
    check("rep", count_rep_all(spec, X), census.total_representatives);
    for (const auto& [j, counts] : census.per_j) {
        check("j=" + j_text(j), count_tilde_j(j, spec, X), counts.tilde);
        check("j-rep=" + j_text(j), count_rep_j(j, spec, X), counts.rep);
    }
    return first;
}

inline void emit(const Table& t, const std::string& format, const std::string& output, std::ostream& out) {
    const OutputFormat f = parse_output_format(format);
    if (output.empty()) {
        render(t, f, out);
        return;
    }
    std::ofstream file(output);
    if (!file) {
        throw std::runtime_error("cannot open '" + output + "' for writing");
    }
    render(t, f, file);
}

}  // namespace detail

/// Runs one command line (args excludes the program name); returns the exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Count elliptic curves y^2 = x^3 + Ax + B by naive height"};
    app.require_subcommand(1);
    const std::vector<std::string> formats{"table", "csv", "json"};

    detail::CountArgs count;
    auto* cmd_count = app.add_subcommand("count", "exact count of a family of curves up to a height bound");
    cmd_count->add_option("--family", count.family, "all, rep, j, j-rep, cm or cm-rep")
        ->check(CLI::IsMember({"all", "rep", "j", "j-rep", "cm", "cm-rep"}));
    cmd_count->add_option("--height", count.height, "cal, ncal or alpha/p:q,beta/p:q");
    cmd_count->add_option("--bound", count.bound, "height bound X: 1000, 1e25, 27/10")->required();
    cmd_count->add_option("--j", count.j, "j-invariant, or cm:<d_K>[:f]");
    cmd_count->add_flag("--asymptotic", count.asymptotic, "also print the main term and relative error");
    cmd_count->add_flag("--force-generic", count.force_generic, "use the generic c(j) parametrization");
    cmd_count->add_option("--format", count.format)->check(CLI::IsMember(formats));

    std::string p_j, p_height = "cal", p_bound, p_format = "table";
    bool p_squarefree = false;
    auto* cmd_param = app.add_subcommand("parametrize", "list the curves with a given j-invariant, by m");
    cmd_param->add_option("--j", p_j, "j-invariant, or cm:<d_K>[:f]")->required();
    cmd_param->add_option("--height", p_height);
    cmd_param->add_option("--bound", p_bound)->required();
    cmd_param->add_flag("--squarefree-only", p_squarefree, "only representatives (twist-minimal curves)");
    cmd_param->add_option("--format", p_format)->check(CLI::IsMember(formats));

    std::string t_A, t_B, t_format = "table";
    auto* cmd_twist = app.add_subcommand("twist", "write E_{A,B} as d * E0 with E0 a representative");
    cmd_twist->add_option("--A", t_A)->required();
    cmd_twist->add_option("--B", t_B)->required();
    cmd_twist->add_option("--format", t_format)->check(CLI::IsMember(formats));

    std::string tb_name, tb_height = "cal", tb_format = "table", tb_output, tb_bounds;
    auto* cmd_tables = app.add_subcommand("tables", "regenerate a reference table");
    cmd_tables->add_option("--name", tb_name, "cm-minimal, cm-counts, coefficients or relative-error")->required();
    cmd_tables->add_option("--height", tb_height);
    cmd_tables->add_option("--format", tb_format)->check(CLI::IsMember(formats));
    cmd_tables->add_option("--output", tb_output, "write to this file instead of stdout");
    cmd_tables->add_option("--bounds", tb_bounds, "comma-separated height bounds");

    std::string v_height = "cal", v_bound, v_j, v_format = "table";
    unsigned v_threads = 0;
    auto* cmd_verify = app.add_subcommand("verify", "check every counting formula against a brute-force scan");
    cmd_verify->add_option("--height", v_height);
    cmd_verify->add_option("--bound", v_bound)->required();
    cmd_verify->add_option("--j", v_j, "comma-separated j-invariants to track (default: the 13 CM values)");
    cmd_verify->add_option("--threads", v_threads, "worker threads (default: all cores)");
    cmd_verify->add_option("--format", v_format)->check(CLI::IsMember(formats));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return usage;
    }

    try {
        if (*cmd_count) {
            detail::emit(detail::count_table(count), count.format, "", out);
        } else if (*cmd_param) {
            detail::emit(detail::parametrize_table(p_j, p_height, p_bound, p_squarefree), p_format, "", out);
        } else if (*cmd_twist) {
            detail::emit(detail::twist_table(t_A, t_B), t_format, "", out);
        } else if (*cmd_tables) {
            detail::emit(detail::named_table(tb_name, parse_height_spec(tb_height), tb_bounds), tb_format,
                         tb_output, out);
        } else if (*cmd_verify) {
            const HeightSpec spec = parse_height_spec(v_height);
            const Rational X = parse_bound(v_bound);
            std::vector<Rational> js;
            if (v_j.empty()) {
                for (const auto& o : cm_orders()) js.emplace_back(o.j);
            } else {
                for (const auto& part : detail::split(v_j, ',')) js.push_back(parse_j(part));
            }
            Table t;
            const auto bad = detail::verify_table(spec, X, js, v_threads, t);
            detail::emit(t, v_format, "", out);
            if (bad) {
                err << "FAIL: first mismatch in family " << *bad << '\n';
                return mismatch;
            }
            err << "PASS\n";
        }
    } catch (const SpecialJInvariantError& e) {
        err << "error: " << e.what() << '\n';
        return special_j;
    } catch (const SingularCurveError& e) {
        err << "error: " << e.what() << '\n';
        return singular;
    } catch (const ScanBudgetError& e) {
        err << "refused: " << e.what() << '\n';
        return over_budget;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }
    return ok;
}

}  // namespace nhc::cli
