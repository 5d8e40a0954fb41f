#include "theta/cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "theta/characters.hpp"
#include "theta/closed_forms.hpp"
#include "theta/errors.hpp"
#include "theta/group_expr.hpp"
#include "theta/routes.hpp"

namespace theta {

namespace {

constexpr std::size_t kTableBruteForceOrder = 250;

struct Common {
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    long max_order = 0;  // 0: not given
    std::string mode = "naive";
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--threads", c.threads, "worker threads for the burnside route")->check(CLI::Range(1u, 1024u));
    sub->add_option("--max-order", c.max_order, "brute-force order budget (overrides THETA_DIM_MAX_ORDER)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--burnside-mode", c.mode, "naive or class")->check(CLI::IsMember({"naive", "class"}));
}

std::optional<std::size_t> env_max_order() {
    const char* v = std::getenv("THETA_DIM_MAX_ORDER");
    if (!v || !*v) return std::nullopt;
    char* end = nullptr;
    const long n = std::strtol(v, &end, 10);
    if (*end != '\0' || n <= 0) throw InvalidParameter(std::string("THETA_DIM_MAX_ORDER is not a positive integer: ") + v);
    return static_cast<std::size_t>(n);
}

RouteOptions route_options(const Common& c, std::optional<std::size_t> fallback = std::nullopt) {
    std::optional<std::size_t> budget;
    if (c.max_order > 0) {
        budget = static_cast<std::size_t>(c.max_order);
    } else if (auto env = env_max_order()) {
        budget = env;
    } else {
        budget = fallback;
    }
    RouteOptions o;
    if (budget) o = RouteOptions::with_max_order(*budget, c.threads);
    o.threads = c.threads;
    o.burnside_mode = c.mode == "class" ? BurnsideMode::ClassReduced : BurnsideMode::Naive;
    return o;
}

std::string pair_text(const DimensionReport& r) {
    return "(" + (r.dim_cpi ? to_string(*r.dim_cpi) : std::string("-")) + ", " +
           (r.dim_ker ? to_string(*r.dim_ker) : std::string("-")) + ")";
}

int cmd_compute(const std::string& text, const std::string& method, bool json, bool csv, const Common& c,
                std::ostream& out) {
    const GroupExpr e = parse_group_expr(text);
    const auto m = parse_method(method);
    DimensionReport r = run_method(e, *m, route_options(c));
    if (json) {
        out << to_json(r) << '\n';
    } else if (csv) {
        r.group = slug(e);
        out << csv_header() << '\n' << to_csv_row(r) << '\n';
    } else {
        out << to_text(r);
    }
    return kExitOk;
}

int cmd_verify(const std::string& text, const Common& c, std::ostream& out, std::ostream& err) {
    const GroupExpr e = parse_group_expr(text);
    validate(e);
    const RouteOptions opts = route_options(c);
    out << "group " << to_string(e) << " order " << expr_order(e).get_str() << '\n';
    std::vector<DimensionReport> done;
    for (Method m : {Method::Closed, Method::Chars, Method::Burnside, Method::Orbits, Method::Diagrams}) {
        try {
            DimensionReport r = run_method(e, m, opts);
            out << std::left << std::setw(10) << r.method << pair_text(r) << "  z2 "
                << (r.dim_classhat_z2 ? to_string(*r.dim_classhat_z2) : "-");
            if (r.d1) out << "  d1 " << to_string(*r.d1) << "  d2 " << to_string(*r.d2);
            out << "  " << std::fixed << std::setprecision(1) << r.millis << " ms\n";
            out.unsetf(std::ios::fixed);
            done.push_back(std::move(r));
        } catch (const UnsupportedGroup& ex) {
            out << std::left << std::setw(10) << method_name(m) << "skipped: " << ex.what() << '\n';
        } catch (const ResourceError& ex) {
            out << std::left << std::setw(10) << method_name(m) << "skipped: " << ex.what() << '\n';
        }
    }
    int mismatches = 0;
    auto compare = [&](const DimensionReport& a, const DimensionReport& b, const char* field, const auto& va,
                       const auto& vb) {
        if (va && vb && *va != *vb) {
            ++mismatches;
            out << "MISMATCH " << field << ": " << a.method << " " << to_string(*va) << " vs " << b.method << " "
                << to_string(*vb) << '\n';
        }
    };
    for (std::size_t i = 0; i < done.size(); ++i) {
        for (std::size_t j = i + 1; j < done.size(); ++j) {
            const auto &a = done[i], &b = done[j];
            compare(a, b, "dim_Cpi", a.dim_cpi, b.dim_cpi);
            compare(a, b, "dim_ker_eps", a.dim_ker, b.dim_ker);
            compare(a, b, "dim_classhat_Z2", a.dim_classhat_z2, b.dim_classhat_z2);
            compare(a, b, "d1", a.d1, b.d1);
            compare(a, b, "d2", a.d2, b.d2);
        }
    }
    if (mismatches) {
        err << "verify: " << mismatches << " mismatches\n";
        return kExitMismatch;
    }
    out << "agree: " << done.size() << " methods on " << (done.empty() ? "-" : pair_text(done.front())) << '\n';
    return kExitOk;
}

int cmd_table(const std::string& family, long max_p, long max_k, long max_n, const Common& c, std::ostream& out,
              std::ostream& err) {
    RouteOptions opts = route_options(c, kTableBruteForceOrder);
    std::vector<std::pair<long, GroupExpr>> rows;
    if (family == "d4p") {
        for (long p = 1; p <= max_p; ++p) rows.push_back({p, GroupExpr{{FamilyParams::binary_dihedral(p)}}});
    } else if (family == "t8_3k") {
        for (long k = 1; k <= max_k; ++k) rows.push_back({k, GroupExpr{{FamilyParams::tprime(k)}}});
    } else {
        for (long n = 1; n <= max_n; ++n) rows.push_back({n, GroupExpr{{FamilyParams::cyclic(n)}}});
    }
    out << "param,dim_Cpi,dim_ker_eps,method\n";
    for (const auto& [param, e] : rows) {
        const DimensionReport closed = run_method(e, Method::Closed, opts);
        std::string tag = "closed";
        if (expr_order(e) <= Integer(static_cast<unsigned long>(opts.burnside_max_order))) {
            const DimensionReport brute = run_method(e, Method::Burnside, opts);
            if (brute.dim_cpi != closed.dim_cpi || brute.dim_ker != closed.dim_ker) {
                err << "table: " << to_string(e) << " closed " << pair_text(closed) << " vs burnside "
                    << pair_text(brute) << '\n';
                return kExitMismatch;
            }
            tag = "closed+burnside";
        }
        out << param << ',' << to_string(*closed.dim_cpi) << ',' << to_string(*closed.dim_ker) << ',' << tag << '\n';
    }
    return kExitOk;
}

int cmd_classes(const std::string& text, std::ostream& out) {
    const GroupExpr e = parse_group_expr(text);
    const FiniteGroup g = build_group(e);
    const ClassData cd = compute_classes(g);
    const auto orders = element_orders(g);
    out << "# " << to_string(e) << ", order " << g.order() << ", " << cd.num_classes() << " classes\n";
    out << "class,representative,size,order,square,cube,inverse\n";
    for (std::size_t i = 0; i < cd.num_classes(); ++i) {
        const Elem r = cd.representatives[i];
        std::string label = g.label(r);
        if (label.empty()) label = "1";
        out << i << ',' << label << ',' << cd.sizes[i] << ',' << orders[r] << ',' << cd.square_class[i] << ','
            << cd.cube_class[i] << ',' << cd.inverse_class[i] << '\n';
    }
    return kExitOk;
}

int cmd_chartab(const std::string& text, bool csv, std::ostream& out) {
    const GroupExpr e = parse_group_expr(text);
    const ClassesAndTable ct = build_table(e);
    out << (csv ? format_table_csv(ct.table) : format_table_text(ct.table));
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Dimensions of the odd theta spaces for spherical 3-manifold groups", "theta_dim"};
    app.require_subcommand(1);

    std::string expr, method = "auto", family;
    bool json = false, csv = false;
    long max_p = 15, max_k = 9, max_n = 12;
    Common common;

    auto* compute = app.add_subcommand("compute", "compute both dimensions for a group expression");
    compute->add_option("expr", expr, "e.g. \"Z(5) x Dstar(4)\"")->required();
    compute->add_option("--method", method, "auto|closed|chars|burnside|orbits|diagrams")
        ->check(CLI::IsMember({"auto", "closed", "chars", "burnside", "orbits", "diagrams"}));
    auto* json_flag = compute->add_flag("--json", json, "JSON output");
    compute->add_flag("--csv", csv, "CSV output")->excludes(json_flag);
    add_common(compute, common);

    auto* verify = app.add_subcommand("verify", "run every applicable method and compare");
    verify->add_option("expr", expr)->required();
    add_common(verify, common);

    auto* table = app.add_subcommand("table", "reproduce a dimension table as CSV");
    table->add_option("family", family, "d4p|t8_3k|zn")->required()->check(CLI::IsMember({"d4p", "t8_3k", "zn"}));
    table->add_option("--max-p", max_p)->check(CLI::Range(1L, 100000L));
    table->add_option("--max-k", max_k)->check(CLI::Range(1L, 1000L));
    table->add_option("--max-n", max_n)->check(CLI::Range(1L, 10000000L));
    add_common(table, common);

    auto* classes = app.add_subcommand("classes", "conjugacy classes with square, cube and inverse maps");
    classes->add_option("expr", expr)->required();

    auto* chartab = app.add_subcommand("chartab", "character table");
    chartab->add_option("expr", expr)->required();
    chartab->add_flag("--csv", csv, "CSV output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*compute) return cmd_compute(expr, method, json, csv, common, out);
        if (*verify) return cmd_verify(expr, common, out, err);
        if (*table) return cmd_table(family, max_p, max_k, max_n, common, out, err);
        if (*classes) return cmd_classes(expr, out);
        if (*chartab) return cmd_chartab(expr, csv, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return kExitResource;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitMismatch;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace theta
