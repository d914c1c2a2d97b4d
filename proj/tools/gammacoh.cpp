// Command-line front end for the Gamma_n / G(de,e,n) cohomology engine:
// Betti rows, stable series, cup products, duality and stabilization reports,
// and reproduction of the built-in reference tables, emitted as JSON or CSV.

#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gammacoh/cohomology.hpp"
#include "gammacoh/characters.hpp"
#include "gammacoh/cup.hpp"
#include "gammacoh/literals.hpp"
#include "gammacoh/multigraph.hpp"
#include "gammacoh/tables.hpp"

using json = nlohmann::ordered_json;
using namespace gcoh;

namespace {

const char* kVersion = "1.0.0";

struct Common {
    std::string family = "A";
    int d = 1, e = 1, n = 0;
    std::string sector = "trivial";
    std::string method;
    bool allow_slow = false;
    bool deterministic = false;
    int threads = (int)std::max(1u, std::thread::hardware_concurrency());
    std::string out;
    std::string format = "json";
};

void add_output_flags(CLI::App* cmd, Common& o) {
    cmd->add_flag("--allow-slow", o.allow_slow, "unlock the large-parameter guards");
    cmd->add_flag("--deterministic", o.deterministic, "suppress the timestamp field");
    cmd->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--out", o.out, "write the report to this file instead of stdout");
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
}

void add_family_flags(CLI::App* cmd, Common& o) {
    cmd->add_option("--family", o.family, "A (Gamma_n), B, D, or gdeen")
        ->check(CLI::IsMember({"A", "B", "D", "gdeen"}));
    cmd->add_option("--d", o.d, "d of G(de,e,n), family gdeen only");
    cmd->add_option("--e", o.e, "e of G(de,e,n), family gdeen only");
}

GParams params_for(const Common& o) {
    if (o.family == "B") return GParams{2, 1, o.n};
    if (o.family == "D") return GParams{1, 2, o.n};
    return GParams{o.d, o.e, o.n};
}

Sector parse_sector(const std::string& s) {
    if (s == "trivial") return Sector::trivial;
    if (s == "sign") return Sector::sign;
    throw CLI::ValidationError("--sector", "must be trivial or sign");
}

json row_to_json(const std::vector<Int>& row) {
    json a = json::array();
    for (const auto& v : row) a.push_back(v.get_str());
    return a;
}

void stamp(json& doc, const Common& o) {
    doc["version"] = kVersion;
    if (!o.deterministic) doc["timestamp"] = (long long)std::time(nullptr);
}

int emit(const Common& o, const json& doc, const std::string& csv) {
    std::string text = o.format == "csv" ? csv : doc.dump(2) + "\n";
    if (o.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(o.out);
        if (!f) {
            std::cerr << "error: cannot open " << o.out << "\n";
            return 2;
        }
        f << text;
    }
    return 0;
}

std::string row_csv(const std::vector<Int>& row, const std::string& label) {
    std::string line = label;
    for (const auto& v : row) line += "," + v.get_str();
    return line + "\n";
}

// --- betti ------------------------------------------------------------------

int run_betti(const Common& o) {
    json doc;
    doc["command"] = "betti";
    doc["family"] = o.family;
    doc["n"] = o.n;
    if (o.n < 2) throw CLI::ValidationError("--n", "must be at least 2");

    std::vector<std::pair<std::string, std::vector<Int>>> rows;
    if (o.family == "A") {
        Sector sector = parse_sector(o.sector);
        doc["sector"] = o.sector;
        std::string method = o.method.empty() ? "molien" : o.method;
        if (o.n > 9 || (o.n == 9 && !o.allow_slow)) {
            std::cerr << "error: family A with n >= 9 requires --allow-slow (n <= 9)\n";
            return 2;
        }
        int N = pair_count(o.n);
        bool all = method == "all";
        if (all || method == "molien")
            rows.emplace_back("molien", betti_molien(o.n, sector, -1, o.threads));
        if (all || method == "graphs") {
            if (o.n > 8) {
                std::cerr << "error: the graphs method enumerates classes and "
                             "is limited to n <= 8\n";
                return 2;
            }
            std::vector<Int> row;
            for (int r = 0; r <= N; ++r) row.push_back(betti_graphs(o.n, r, sector));
            rows.emplace_back("graphs", std::move(row));
        }
        if (all || method == "characters") {
            std::vector<Int> row;
            for (int r = 0; r <= N; ++r) row.push_back(betti_via_characters(o.n, r, sector));
            rows.emplace_back("characters", std::move(row));
        }
        if (rows.empty()) {
            std::cerr << "error: unknown method " << method << "\n";
            return 2;
        }
        for (auto& [name, row] : rows) row.resize(N + 1, Int(0));
    } else {
        if (o.sector != "trivial") {
            std::cerr << "error: the sign sector is only defined for family A\n";
            return 2;
        }
        std::string method = o.method.empty() ? "molien" : o.method;
        if (method == "characters") {
            std::cerr << "error: the character method is only available for family A\n";
            return 2;
        }
        GParams p = params_for(o);
        doc["d"] = p.d;
        doc["e"] = p.e;
        if (o.n >= 6 && !o.allow_slow) {
            std::cerr << "error: families B/D/gdeen with n >= 6 require --allow-slow\n";
            return 2;
        }
        int N = p.form_count();
        bool all = method == "all";
        if (all || method == "molien")
            rows.emplace_back("molien", betti_multigraph_molien(p));
        if (all || method == "graphs")
            rows.emplace_back("graphs",
                              betti_multigraph_orbits(p, o.allow_slow ? 200000 : 20000));
        if (rows.empty()) {
            std::cerr << "error: unknown method " << method
                      << " (families B/D/gdeen support graphs, molien, all)\n";
            return 2;
        }
        for (auto& [name, row] : rows) row.resize(N + 1, Int(0));
    }

    bool agree = true;
    for (size_t i = 1; i < rows.size(); ++i)
        if (rows[i].second != rows[0].second) agree = false;
    json methods = json::array();
    for (const auto& [name, row] : rows) methods.push_back(name);
    doc["methods"] = methods;
    doc["agreement"] = agree;
    doc["betti"] = row_to_json(rows[0].second);
    stamp(doc, o);

    std::string csv = "r,betti\n";
    for (size_t r = 0; r < rows[0].second.size(); ++r)
        csv += std::to_string(r) + "," + rows[0].second[r].get_str() + "\n";
    int rc = emit(o, doc, csv);
    if (rc) return rc;
    if (!agree) {
        std::cerr << "error: the requested methods disagree\n";
        return 1;
    }
    return 0;
}

// --- stable -----------------------------------------------------------------

int run_stable(const Common& o, int max_degree) {
    if (max_degree < 0) throw CLI::ValidationError("--max-degree", "must be >= 0");
    if (max_degree > 10 && !o.allow_slow) {
        std::cerr << "error: --max-degree above 10 requires --allow-slow\n";
        return 2;
    }
    Poly s = stable_series(max_degree, o.threads);
    s.resize(max_degree + 1, Int(0));

    std::string euler_status = "skipped";
    bool ok = true;
    int census_max = std::min(max_degree, 7);
    if (census_max >= 1) {
        Poly ep = euler_product_series(connected_census(census_max), census_max);
        euler_status = "ok";
        for (int r = 0; r <= census_max; ++r)
            if (ep[r] != s[r]) {
                euler_status = "mismatch";
                ok = false;
            }
    }

    json doc;
    doc["command"] = "stable";
    doc["max_degree"] = max_degree;
    doc["methods"] = json::array({"molien"});
    doc["coefficients"] = row_to_json(s);
    doc["euler_product_check"] = euler_status;
    stamp(doc, o);

    std::string csv = "r,coefficient\n";
    for (int r = 0; r <= max_degree; ++r)
        csv += std::to_string(r) + "," + s[r].get_str() + "\n";
    int rc = emit(o, doc, csv);
    if (rc) return rc;
    if (!ok) {
        std::cerr << "error: Euler-product cross-check failed\n";
        return 1;
    }
    return 0;
}

// --- cup --------------------------------------------------------------------

int run_cup(const Common& o, const std::string& left, const std::string& right,
            bool oracle) {
    CohomClass A = parse_class_literal(left);
    CohomClass B = parse_class_literal(right);
    if (o.n != 0 && (A.n != o.n || B.n != o.n)) {
        std::cerr << "error: class literals disagree with --n\n";
        return 2;
    }
    if (A.n != B.n) {
        std::cerr << "error: the two classes live on different vertex counts\n";
        return 2;
    }
    CohomClass prod = cup(A, B);

    bool oracle_ok = true;
    std::string oracle_status = "skipped";
    if (oracle) {
        if (A.n > 7) {
            std::cerr << "error: --oracle is limited to n <= 7\n";
            return 2;
        }
        CohomClass check = oracle_exterior_product(A, B);
        oracle_ok = check.sector == prod.sector && check.coeff == prod.coeff;
        oracle_status = oracle_ok ? "ok" : "mismatch";
    }

    json doc;
    doc["command"] = "cup";
    doc["n"] = A.n;
    doc["left"] = left;
    doc["right"] = right;
    doc["sector"] = prod.sector == Sector::trivial ? "trivial" : "sign";
    json terms = json::array();
    std::string csv = "class,coefficient\n";
    for (const auto& [lit, coef] : class_terms(prod)) {
        terms.push_back(json{{"class", lit}, {"coefficient", coef}});
        csv += lit + "," + coef + "\n";
    }
    doc["terms"] = terms;
    doc["oracle_check"] = oracle_status;
    stamp(doc, o);

    int rc = emit(o, doc, csv);
    if (rc) return rc;
    if (!oracle_ok) {
        std::cerr << "error: cup product disagrees with the exterior-algebra oracle\n";
        return 1;
    }
    return 0;
}

// --- tables -----------------------------------------------------------------

int run_tables(const Common& o, int which, int limit_n) {
    const bool gamma = which == 1 || which == 3;
    int cap = o.allow_slow ? (gamma ? 9 : 8) : (which == 1 || which == 3 ? 8 : which == 7 ? 5 : 4);
    if (limit_n < 0) limit_n = cap;
    if (limit_n > cap) {
        std::cerr << "error: --limit-n " << limit_n << " exceeds the guard (" << cap
                  << (o.allow_slow ? "" : "; use --allow-slow") << ")\n";
        return 2;
    }

    const std::map<int, std::vector<long>>& golden =
        which == 1 ? tables::gamma_trivial_rows()
        : which == 3 ? tables::gamma_sign_rows()
        : which == 7 ? tables::d_rows()
                     : tables::b_rows();
    std::string label_prefix =
        which == 1 || which == 3 ? "Gamma_" : which == 7 ? "D" : "B";

    json doc;
    doc["command"] = "tables";
    doc["which"] = which;
    doc["limit_n"] = limit_n;
    json jrows = json::array();
    std::string csv;
    bool all_match = true;
    for (const auto& [n, gold] : golden) {
        if (n > limit_n) continue;
        std::vector<Int> row;
        if (gamma) {
            Sector sector = which == 1 ? Sector::trivial : Sector::sign;
            Poly p = betti_molien(n, sector, (int)gold.size() - 1, o.threads);
            row.assign(p.begin(), p.end());
        } else {
            GParams p = which == 7 ? GParams{1, 2, n} : GParams{2, 1, n};
            Poly b = betti_multigraph_molien(p, (int)gold.size() - 1);
            row.assign(b.begin(), b.end());
        }
        row.resize(gold.size(), Int(0));
        bool match = true;
        for (size_t r = 0; r < gold.size(); ++r)
            if (row[r] != Int(gold[r])) match = false;
        all_match = all_match && match;
        std::string label = label_prefix + std::to_string(n);
        jrows.push_back(json{{"row", label},
                             {"betti", row_to_json(row)},
                             {"match", match}});
        csv += row_csv(row, label);
    }
    doc["rows"] = jrows;
    doc["match"] = all_match;
    stamp(doc, o);

    int rc = emit(o, doc, csv);
    if (rc) return rc;
    if (!all_match) {
        std::cerr << "error: computed table disagrees with the reference values\n";
        return 1;
    }
    return 0;
}

// --- dual -------------------------------------------------------------------

int run_dual(const Common& o) {
    if (o.n < 2) throw CLI::ValidationError("--n", "must be at least 2");
    json doc;
    doc["command"] = "dual";
    doc["family"] = o.family;
    doc["n"] = o.n;
    bool ok;
    std::string csv;
    if (o.family == "A") {
        if (o.n > 8 && !o.allow_slow) {
            std::cerr << "error: family A duality with n > 8 requires --allow-slow\n";
            return 2;
        }
        DualityReport rep = duality_check(o.n);
        ok = rep.ok;
        doc["ok"] = rep.ok;
        doc["detail"] = rep.detail;
        csv = "ok,detail\n" + std::string(rep.ok ? "1" : "0") + "," + rep.detail + "\n";
    } else {
        if (o.n >= 5 && !o.allow_slow) {
            std::cerr << "error: multigraph duality with n >= 5 requires --allow-slow\n";
            return 2;
        }
        GParams p = params_for(o);
        doc["d"] = p.d;
        doc["e"] = p.e;
        MultiDualityReport rep = duality_multigraph(p.d, p.e, o.n);
        ok = rep.ok;
        doc["ok"] = rep.ok;
        doc["full_duality"] = rep.full_duality;
        json od = json::array();
        for (bool b : rep.orbit_dual) od.push_back(b);
        doc["orbit_dual"] = od;
        doc["detail"] = rep.detail;
        csv = "ok,full_duality,detail\n" + std::string(rep.ok ? "1" : "0") + "," +
              (rep.full_duality ? "1" : "0") + "," + rep.detail + "\n";
    }
    stamp(doc, o);
    int rc = emit(o, doc, csv);
    if (rc) return rc;
    return ok ? 0 : 1;
}

// --- stabilize --------------------------------------------------------------

int run_stabilize(const Common& o, int r, int n_max) {
    if (r < 0 || n_max < 2) throw CLI::ValidationError("--r/--n-max", "out of range");
    GParams base = o.family == "A" ? GParams{1, 1, 2} : params_for(o);
    if (n_max > 9 && !o.allow_slow) {
        std::cerr << "error: --n-max above 9 requires --allow-slow\n";
        return 2;
    }
    StabilizationReport rep = stabilization_check(base.d, base.e, r, n_max);

    json doc;
    doc["command"] = "stabilize";
    doc["family"] = o.family;
    doc["d"] = base.d;
    doc["e"] = base.e;
    doc["r"] = r;
    doc["n_max"] = n_max;
    doc["threshold"] = rep.threshold;
    doc["values"] = row_to_json(rep.values);
    doc["ok"] = rep.ok;
    doc["detail"] = rep.values.empty()
                        ? "n_max is below the stabilization threshold; nothing to check"
                        : rep.detail;
    stamp(doc, o);

    std::string csv = "n,betti\n";
    for (size_t i = 0; i < rep.values.size(); ++i)
        csv += std::to_string(rep.threshold + (int)i) + "," + rep.values[i].get_str() + "\n";
    int rc = emit(o, doc, csv);
    if (rc) return rc;
    return rep.ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cohomology of quasi-abelianized braid groups and G(de,e,n) families"};
    app.require_subcommand(1);

    Common o;

    auto* betti = app.add_subcommand("betti", "one Betti row by the requested method(s)");
    add_family_flags(betti, o);
    betti->add_option("--n", o.n, "number of strands")->required();
    betti->add_option("--sector", o.sector, "coefficient sector (family A)")
        ->check(CLI::IsMember({"trivial", "sign"}));
    betti->add_option("--method", o.method, "graphs|molien|characters|all");
    add_output_flags(betti, o);

    int max_degree = 10;
    auto* stable = app.add_subcommand("stable", "stable Poincare series of Gamma_infty");
    stable->add_option("--max-degree", max_degree, "highest degree to compute");
    add_output_flags(stable, o);

    std::string left, right;
    bool oracle = false;
    auto* cupc = app.add_subcommand("cup", "cup product of two alpha-basis classes");
    cupc->add_option("--n", o.n, "number of strands (checked against the literals)");
    cupc->add_option("--left", left, "alpha:<graph> or alphasgn:<graph>")->required();
    cupc->add_option("--right", right, "alpha:<graph> or alphasgn:<graph>")->required();
    cupc->add_flag("--oracle", oracle, "re-verify against the exterior-algebra oracle");
    add_output_flags(cupc, o);

    int which = 0, limit_n = -1;
    auto* tablesc = app.add_subcommand("tables", "reproduce a reference Betti table");
    tablesc->add_option("--which", which, "table number: 1, 3, 7, or 8")
        ->required()
        ->check(CLI::IsMember({1, 3, 7, 8}));
    tablesc->add_option("--limit-n", limit_n, "largest n to compute");
    add_output_flags(tablesc, o);

    auto* dual = app.add_subcommand("dual", "Poincare-duality report");
    add_family_flags(dual, o);
    dual->add_option("--n", o.n, "number of strands")->required();
    add_output_flags(dual, o);

    int stab_r = 0, stab_nmax = 0;
    auto* stab = app.add_subcommand("stabilize", "check stabilization of b(n, r) in n");
    add_family_flags(stab, o);
    stab->add_option("--r", stab_r, "cohomological degree")->required();
    stab->add_option("--n-max", stab_nmax, "largest n to check")->required();
    add_output_flags(stab, o);

    CLI11_PARSE(app, argc, argv);

    try {
        if (betti->parsed()) return run_betti(o);
        if (stable->parsed()) return run_stable(o, max_degree);
        if (cupc->parsed()) return run_cup(o, left, right, oracle);
        if (tablesc->parsed()) return run_tables(o, which, limit_n);
        if (dual->parsed()) return run_dual(o);
        if (stab->parsed()) return run_stabilize(o, stab_r, stab_nmax);
    } catch (const CLI::ValidationError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 2;
}
