// Command-line front end: permutation <-> Laguerre-history mappings,
// statistics, enumeration, gamma tables, orbits and the verification harness.

#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lhist/bijection.hpp"
#include "lhist/gamma.hpp"
#include "lhist/laguerre.hpp"
#include "lhist/perm.hpp"
#include "lhist/verify.hpp"

namespace {

using nlohmann::json;

json history_json(const lhist::LaguerreHistory& h) {
    return {{"path", lhist::to_string(h.path())}, {"mu", h.mu()}};
}

int cmd_map(const std::string& direction, const std::string& perm_text,
            const std::string& path_text, const std::string& mu_text, bool as_json) {
    if (direction == "phi" || direction == "psi") {
        const lhist::Permutation s = lhist::parse_permutation(perm_text);
        const lhist::LaguerreHistory h = direction == "phi" ? lhist::phi(s) : lhist::psi(s);
        if (as_json) {
            json j = history_json(h);
            j["perm"] = lhist::to_string(s);
            std::cout << j.dump() << '\n';
        } else {
            std::cout << "path " << lhist::to_string(h.path()) << '\n'
                      << "mu " << lhist::mu_to_string(h.mu()) << '\n';
        }
        return 0;
    }
    const lhist::LaguerreHistory h(lhist::parse_path(path_text), lhist::parse_mu(mu_text));
    const lhist::Permutation s =
        direction == "phi-inv" ? lhist::phi_inverse(h) : lhist::psi_inverse(h);
    if (as_json) {
        json j = history_json(h);
        j["perm"] = lhist::to_string(s);
        std::cout << j.dump() << '\n';
    } else {
        std::cout << lhist::to_string(s) << '\n';
    }
    return 0;
}

int cmd_stats(const std::string& perm_text, bool as_json) {
    const lhist::Permutation s = lhist::parse_permutation(perm_text);
    const int n = s.size();
    long long p312 = lhist::pattern_31_2(s), p213 = lhist::pattern_2_13(s);
    if (as_json) {
        json j{{"perm", lhist::to_string(s)},
               {"n", n},
               {"inv", lhist::inv(s)},
               {"exc", lhist::exc(s)},
               {"des", lhist::des(s)},
               {"dd", lhist::dd_count(s)},
               {"cros", lhist::cros(s)},
               {"nest", lhist::nest(s)},
               {"31-2", p312},
               {"2-13", p213},
               {"exc_set", lhist::exc_set(s)},
               {"des_set", lhist::des_set(s)},
               {"shifted_double_excedances", lhist::shifted_double_excedances(s)},
               {"val", lhist::val_vector(s)},
               {"pos", lhist::pos_vector(s)},
               {"nes", lhist::nes_vector(s)}};
        std::cout << j.dump() << '\n';
        return 0;
    }
    auto vec = [](const std::vector<int>& v) {
        std::string out = "(";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(v[i]);
        }
        return out + ")";
    };
    std::cout << "perm " << lhist::to_string(s) << "\nn " << n << "\ninv " << lhist::inv(s)
              << "\nexc " << lhist::exc(s) << "\ndes " << lhist::des(s) << "\ndd "
              << lhist::dd_count(s) << "\ncros " << lhist::cros(s) << "\nnest " << lhist::nest(s)
              << "\n31-2 " << p312 << "\n2-13 " << p213 << "\nexc_set " << vec(lhist::exc_set(s))
              << "\ndes_set " << vec(lhist::des_set(s)) << "\nsde "
              << vec(lhist::shifted_double_excedances(s)) << "\nval " << vec(lhist::val_vector(s))
              << "\npos " << vec(lhist::pos_vector(s)) << "\nnes " << vec(lhist::nes_vector(s))
              << '\n';
    return 0;
}

int cmd_enumerate(const std::string& set, int n, int k, bool have_k, bool count_only) {
    auto dump_perms = [&](const std::vector<lhist::Permutation>& ps) {
        if (count_only) {
            std::cout << ps.size() << '\n';
            return;
        }
        for (const auto& s : ps) std::cout << lhist::to_string(s) << '\n';
    };
    auto dump_histories = [&](const std::vector<lhist::LaguerreHistory>& hs) {
        if (count_only) {
            std::cout << hs.size() << '\n';
            return;
        }
        for (const auto& h : hs)
            std::cout << lhist::to_string(h.path()) << ' ' << lhist::mu_to_string(h.mu()) << '\n';
    };
    if (set == "Sn") {
        dump_perms(lhist::family(n, lhist::Family::All));
    } else if (set == "DD" || set == "DE") {
        if (!have_k) throw lhist::InvalidFamilyParams(set + " needs k");
        dump_perms(lhist::family(n, set == "DD" ? lhist::Family::DD : lhist::Family::DE, k));
    } else if (set == "ALT") {
        dump_perms(lhist::family(n, lhist::Family::Alternating));
    } else if (set == "L") {
        if (count_only) {
            long long c = 0;
            lhist::for_each_history(n, [&](const lhist::LaguerreHistory&) { ++c; });
            std::cout << c << '\n';
        } else {
            dump_histories(lhist::all_histories(n));
        }
    } else if (set == "O") {
        if (!have_k) throw lhist::InvalidFamilyParams("O needs k");
        dump_histories(lhist::orbit_reps(n, k));
    } else {
        throw CLI::ValidationError("set must be one of Sn, DD, DE, ALT, L, O");
    }
    return 0;
}

int cmd_gamma(int n, const std::string& model, bool as_json) {
    lhist::GammaExpansion g;
    if (model == "de")
        g = lhist::gamma_de(n);
    else if (model == "dd")
        g = lhist::gamma_dd(n);
    else
        g = lhist::gamma_expand(lhist::qt_eulerian(n), n);
    if (as_json)
        std::cout << lhist::to_json(g).dump() << '\n';
    else
        std::cout << lhist::to_string(g) << '\n';
    return 0;
}

int cmd_orbit(const std::string& path_text, const std::string& mu_text, bool as_json) {
    const lhist::LaguerreHistory h(lhist::parse_path(path_text), lhist::parse_mu(mu_text));
    const std::vector<lhist::LaguerreHistory> members = lhist::orbit(h);
    if (as_json) {
        json arr = json::array();
        for (const auto& m : members) arr.push_back(history_json(m));
        std::cout << json{{"orbit", arr}}.dump() << '\n';
    } else {
        for (const auto& m : members)
            std::cout << lhist::to_string(m.path()) << ' ' << lhist::mu_to_string(m.mu()) << '\n';
    }
    return 0;
}

int cmd_verify(const std::string& check, int max_n, int workers, bool as_json, bool corrupt) {
    if (corrupt) lhist::set_phi_mu_corruption(true);
    std::vector<lhist::CheckReport> reports;
    if (check.empty())
        reports = lhist::run_all(max_n, workers);
    else
        reports.push_back(lhist::run_check(check, max_n));
    if (as_json) {
        for (const auto& r : reports) std::cout << lhist::to_json(r).dump() << '\n';
    } else {
        std::cout << lhist::summary_table(reports);
    }
    for (const auto& r : reports)
        if (!r.pass) return 2;
    return 0;
}

using StatFn = std::function<long long(const lhist::Permutation&)>;

const std::map<std::string, StatFn>& stat_registry() {
    static const std::map<std::string, StatFn> reg = {
        {"inv", [](const lhist::Permutation& s) { return lhist::inv(s); }},
        {"exc", [](const lhist::Permutation& s) { return lhist::exc(s); }},
        {"des", [](const lhist::Permutation& s) { return lhist::des(s); }},
        {"dd", [](const lhist::Permutation& s) { return lhist::dd_count(s); }},
        {"cros", [](const lhist::Permutation& s) { return lhist::cros(s); }},
        {"nest", [](const lhist::Permutation& s) { return lhist::nest(s); }},
        {"31-2", [](const lhist::Permutation& s) { return lhist::pattern_31_2(s); }},
        {"2-13", [](const lhist::Permutation& s) { return lhist::pattern_2_13(s); }},
    };
    return reg;
}

int cmd_table(int n, const std::vector<std::string>& stats, bool aggregate) {
    std::vector<StatFn> fns;
    for (const std::string& name : stats) {
        auto it = stat_registry().find(name);
        if (it == stat_registry().end())
            throw CLI::ValidationError("unknown statistic '" + name + "'");
        fns.push_back(it->second);
    }
    if (aggregate) {
        std::map<std::vector<long long>, long long> counts;
        lhist::for_each_permutation(n, [&](const lhist::Permutation& s) {
            std::vector<long long> key;
            for (const auto& fn : fns) key.push_back(fn(s));
            ++counts[key];
        });
        for (const std::string& name : stats) std::cout << name << '\t';
        std::cout << "count\n";
        for (const auto& [key, c] : counts) {
            for (long long v : key) std::cout << v << '\t';
            std::cout << c << '\n';
        }
    } else {
        std::cout << "perm";
        for (const std::string& name : stats) std::cout << '\t' << name;
        std::cout << '\n';
        lhist::for_each_permutation(n, [&](const lhist::Permutation& s) {
            std::cout << lhist::to_string(s);
            for (const auto& fn : fns) std::cout << '\t' << fn(s);
            std::cout << '\n';
        });
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Laguerre-history encodings of permutations: mappings, statistics, "
                 "enumeration, gamma tables and exhaustive verification"};
    app.require_subcommand(1);

    // map
    std::string direction, perm_text, path_text, mu_text;
    bool as_json = false;
    CLI::App* map_cmd = app.add_subcommand("map", "Apply phi/psi or their inverses");
    map_cmd->add_option("direction", direction, "phi | phi-inv | psi | psi-inv")
        ->required()
        ->check(CLI::IsMember({"phi", "phi-inv", "psi", "psi-inv"}));
    map_cmd->add_option("perm", perm_text, "permutation (forward directions)");
    map_cmd->add_option("--path", path_text, "path word (inverse directions)");
    map_cmd->add_option("--mu", mu_text, "mu vector (inverse directions)");
    map_cmd->add_flag("--json", as_json);

    // stats
    CLI::App* stats_cmd = app.add_subcommand("stats", "Print all statistics of a permutation");
    stats_cmd->add_option("perm", perm_text)->required();
    stats_cmd->add_flag("--json", as_json);

    // enumerate
    std::string set_name;
    int n = 0, k = 0;
    bool count_only = false;
    CLI::App* enum_cmd = app.add_subcommand("enumerate", "List Sn, DD, DE, ALT, L or O");
    enum_cmd->add_option("set", set_name)->required()->check(
        CLI::IsMember({"Sn", "DD", "DE", "ALT", "L", "O"}));
    enum_cmd->add_option("n", n)->required();
    CLI::Option* k_opt = enum_cmd->add_option("k", k);
    enum_cmd->add_flag("--count-only", count_only);

    // gamma
    std::string model;
    CLI::App* gamma_cmd = app.add_subcommand("gamma", "Gamma expansions (de, dd, expand)");
    gamma_cmd->add_option("n", n)->required();
    gamma_cmd->add_option("model", model)->required()->check(
        CLI::IsMember({"de", "dd", "expand"}));
    gamma_cmd->add_flag("--json", as_json);

    // verify
    std::string check_name;
    int max_n = 5, workers = 1;
    bool corrupt_phi_mu = false;
    CLI::App* verify_cmd = app.add_subcommand("verify", "Run the identity checks");
    verify_cmd->add_option("check", check_name, "single check name (default: all)");
    verify_cmd->add_option("--max-n", max_n, "largest size to scan")->capture_default_str();
    verify_cmd->add_option("--workers", workers, "threads for independent checks");
    verify_cmd->add_flag("--json", as_json, "one JSON report per line");
    verify_cmd->add_flag("--corrupt-phi-mu", corrupt_phi_mu,
                         "harness self-test: corrupt phi's mu assignment");

    // orbit
    CLI::App* orbit_cmd = app.add_subcommand("orbit", "Level-toggle orbit of a history");
    orbit_cmd->add_option("--path", path_text)->required();
    orbit_cmd->add_option("--mu", mu_text);
    orbit_cmd->add_flag("--json", as_json);

    // table
    std::string stats_list;
    bool aggregate = false;
    CLI::App* table_cmd = app.add_subcommand("table", "Joint distribution table as TSV");
    table_cmd->add_option("n", n)->required();
    table_cmd->add_option("stats", stats_list, "comma-separated statistics")->required();
    table_cmd->add_flag("--aggregate", aggregate, "aggregate equal rows into counts");

    try {
        app.parse(argc, argv);
        if (map_cmd->parsed())
            return cmd_map(direction, perm_text, path_text, mu_text, as_json);
        if (stats_cmd->parsed()) return cmd_stats(perm_text, as_json);
        if (enum_cmd->parsed())
            return cmd_enumerate(set_name, n, k, k_opt->count() > 0, count_only);
        if (gamma_cmd->parsed()) return cmd_gamma(n, model, as_json);
        if (verify_cmd->parsed())
            return cmd_verify(check_name, max_n, workers, as_json, corrupt_phi_mu);
        if (orbit_cmd->parsed()) return cmd_orbit(path_text, mu_text, as_json);
        if (table_cmd->parsed()) {
            std::vector<std::string> names;
            std::size_t pos = 0;
            while (pos <= stats_list.size()) {
                std::size_t comma = stats_list.find(',', pos);
                names.push_back(stats_list.substr(
                    pos, comma == std::string::npos ? std::string::npos : comma - pos));
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
            return cmd_table(n, names, aggregate);
        }
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    } catch (const lhist::InternalInconsistency& e) {
        std::cerr << "internal inconsistency: " << e.what() << '\n';
        return 3;
    } catch (const lhist::NotInImage& e) {
        std::cerr << "internal inconsistency: " << e.what() << '\n';
        return 3;
    } catch (const lhist::ParseError& e) {
        std::cerr << "parse error at position " << e.position << ": " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
