// dtuple: command line front end for the D(n) m-tuple toolkit.
//
// Exit codes: 0 success, 1 domain error (bad tuple input, inapplicable
// bound, cache trouble), 2 usage error. JSON goes to stdout as a single
// document; progress and diagnostics go to stderr.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dtuple/bounds.hpp"
#include "dtuple/extension.hpp"
#include "dtuple/families.hpp"
#include "dtuple/search.hpp"
#include "dtuple/sieve.hpp"
#include "dtuple/tuples.hpp"

namespace {

using dtuple::Int;
using dtuple::Real;
using json = nlohmann::ordered_json;

Int parse_int(const std::string& text) {
    try {
        return Int(text, 10);
    } catch (const std::exception&) {
        throw dtuple::input_error("not an integer: " + text);
    }
}

std::vector<Int> parse_ints(const std::vector<std::string>& texts) {
    std::vector<Int> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(parse_int(t));
    return out;
}

// Numbers that fit 64 bits stay JSON numbers; anything larger degrades to a
// decimal string rather than losing digits.
json json_int(const Int& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

json json_elements(const std::vector<Int>& elems) {
    json arr = json::array();
    for (const Int& e : elems) arr.push_back(json_int(e));
    return arr;
}

double json_real(const Real& v) { return static_cast<double>(v); }

void emit(const json& doc) { std::cout << doc.dump() << "\n"; }

int run_verify(const Int& n, const std::vector<Int>& elements, bool as_json) {
    auto report = dtuple::verify(n, elements);
    if (as_json) {
        json doc;
        doc["valid"] = report.valid;
        doc["n"] = json_int(report.tuple.n);
        doc["elements"] = json_elements(report.tuple.elements);
        json witnesses = json::array();
        for (const auto& w : report.witnesses)
            witnesses.push_back(json{{"i", w.i}, {"j", w.j}, {"root", json_int(w.root)}});
        doc["witnesses"] = witnesses;
        if (report.first_failure) {
            doc["first_failure"] =
                json{{"i", report.first_failure->first}, {"j", report.first_failure->second}};
        }
        emit(doc);
    } else if (report.valid) {
        std::cout << "valid D(" << n << ") " << report.tuple.elements.size() << "-tuple\n";
    } else {
        const auto [i, j] = *report.first_failure;
        std::cout << "invalid: elements " << report.tuple.elements[i] << " and "
                  << report.tuple.elements[j] << " give "
                  << report.tuple.elements[i] * report.tuple.elements[j] + n
                  << ", not a square\n";
    }
    return 0;  // a well-formed but invalid tuple is still a successful check
}

int run_extend(const Int& n, const std::vector<Int>& triple, bool as_json) {
    auto ext = dtuple::triple_extension(triple[0], triple[1], triple[2], n);
    auto fourth = dtuple::regular_fourth(triple[0], triple[1], triple[2], n);
    if (as_json) {
        json doc;
        doc["n"] = json_int(n);
        doc["triple"] = json_elements(triple);
        doc["e"] = json_int(ext.e);
        doc["x"] = json_int(ext.x);
        doc["y"] = json_int(ext.y);
        doc["z"] = json_int(ext.z);
        doc["r"] = json_int(ext.r);
        doc["s"] = json_int(ext.s);
        doc["t"] = json_int(ext.t);
        doc["fourth"] = json_elements(fourth);
        emit(doc);
    } else {
        std::cout << "e=" << ext.e << " x=" << ext.x << " y=" << ext.y << " z=" << ext.z
                  << "\n";
        if (fourth.empty()) {
            std::cout << "no regular fourth element\n";
        } else {
            std::cout << "fourth:";
            for (const Int& d : fourth) std::cout << " " << d;
            std::cout << "\n";
        }
    }
    return 0;
}

int run_solve(const Int& n, const Int& max, const std::vector<Int>& prefix) {
    auto xs = dtuple::solve_system(prefix, n, max);
    emit(json_elements(xs));
    return 0;
}

json report_to_json(const dtuple::SearchReport& r) {
    json doc;
    doc["n"] = r.n;
    doc["N"] = r.limit;
    doc["c"] = r.max_size;
    doc["witness"] = json_elements(r.witness.elements);
    doc["nodes"] = r.nodes_explored;
    doc["pairs"] = r.pairs_found;
    doc["ms"] = r.elapsed.count();
    return doc;
}

int run_maxtuple(long long n, long long max, bool as_json) {
    auto report = dtuple::max_tuple(n, max);
    if (as_json) {
        emit(report_to_json(report));
    } else {
        std::cout << "C = " << report.max_size << ", witness {";
        for (std::size_t i = 0; i < report.witness.elements.size(); ++i)
            std::cout << (i ? "," : "") << report.witness.elements[i];
        std::cout << "} (" << report.pairs_found << " pairs, " << report.nodes_explored
                  << " nodes, " << report.elapsed.count() << " ms)\n";
    }
    return 0;
}

int run_scan(long long from, long long to, const std::optional<std::string>& cache,
             unsigned jobs) {
    auto rows = dtuple::cn_scan(from, to, cache, jobs, [](const dtuple::SearchReport& r) {
        std::cerr << "n=" << r.n << " C_n=" << r.max_size << " (" << r.elapsed.count()
                  << " ms)\n";
    });
    json doc = json::array();
    for (const auto& r : rows) {
        json row;
        row["n"] = r.n;
        row["N"] = r.limit;
        row["c"] = r.max_size;
        row["witness"] = json_elements(r.witness.elements);
        row["nodes"] = r.nodes_explored;
        row["ms"] = r.elapsed.count();
        doc.push_back(row);
    }
    emit(doc);
    return 0;
}

int run_bounds(const Int& n, bool as_json) {
    auto rep = dtuple::theorem_bounds(n);
    if (as_json) {
        json doc;
        doc["n"] = json_int(rep.n);
        doc["large"] = json_real(rep.large_max);
        doc["small"] = json_real(rep.small_max);
        if (rep.very_small_max) doc["very_small"] = json_real(*rep.very_small_max);
        doc["overall"] = json_real(rep.overall_max);
        if (rep.gyarmati) doc["gyarmati"] = json_real(*rep.gyarmati);
        emit(doc);
    } else {
        std::cout << "large <= " << json_real(rep.large_max)
                  << "\nsmall < " << json_real(rep.small_max);
        if (rep.very_small_max) std::cout << "\nvery_small < " << json_real(*rep.very_small_max);
        std::cout << "\noverall <= " << json_real(rep.overall_max);
        if (rep.gyarmati) std::cout << "\ngyarmati <= " << json_real(*rep.gyarmati);
        std::cout << "\n";
    }
    return 0;
}

int run_gp(const Int& n, const std::vector<Int>& prefix, long pmin, long pmax) {
    std::cout << "p,g,bound_0722,ok\n";
    for (long p = pmin; p <= pmax; ++p) {
        if (!dtuple::is_probable_prime(Int(p)) || p == 2) continue;
        bool divides = false;
        for (const Int& a : prefix) {
            if (mpz_divisible_ui_p(a.get_mpz_t(), static_cast<unsigned long>(p))) {
                divides = true;
                break;
            }
        }
        if (divides) continue;  // the sieve set requires gcd(prefix, p) = 1
        const auto g = dtuple::admissible_residues(prefix, n, p).size();
        const double bound = 0.722 * std::sqrt(static_cast<double>(p)) *
                             std::log(static_cast<double>(p));
        std::printf("%ld,%zu,%.6f,%d\n", p, g, bound, g < bound ? 1 : 0);
    }
    return 0;
}

int run_families(bool list, const std::string& gen, const Int& k, const Int& a) {
    if (list) {
        json doc = json::array();
        for (const auto& f : dtuple::catalog()) {
            json row;
            row["name"] = f.name;
            row["source"] = f.source;
            row["n"] = json_int(f.tuple.n);
            row["elements"] = json_elements(f.tuple.elements);
            doc.push_back(row);
        }
        emit(doc);
        return 0;
    }
    dtuple::DTuple t;
    if (gen == "d1") {
        t = dtuple::d1_quadruple(k);
    } else if (gen == "dsq") {
        t = dtuple::dsq_triple(a);
    } else {
        throw dtuple::input_error("families: unknown generator '" + gen + "' (use d1 or dsq)");
    }
    std::cout << dtuple::to_json_string(t) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Diophantine D(n) m-tuple toolkit"};
    app.require_subcommand(1);

    std::string n_text;
    std::string max_text = "1000";
    std::vector<std::string> element_texts;
    bool flag_json = false;
    bool flag_csv = false;

    auto* cmd_verify = app.add_subcommand("verify", "check the pairwise square condition");
    cmd_verify->add_option("--n", n_text, "the D(n) parameter")->required();
    cmd_verify->add_option("elements", element_texts, "tuple elements")->required();
    cmd_verify->add_flag("--json", flag_json, "emit JSON");

    auto* cmd_extend = app.add_subcommand("extend", "extension data and regular fourth elements of a triple");
    cmd_extend->add_option("--n", n_text, "the D(n) parameter")->required();
    cmd_extend->add_option("elements", element_texts, "triple a b c")->expected(3)->required();
    cmd_extend->add_flag("--json", flag_json, "emit JSON");

    auto* cmd_solve = app.add_subcommand("solve", "x in [1,N] with a_i*x + n all square");
    cmd_solve->add_option("--n", n_text, "the D(n) parameter")->required();
    cmd_solve->add_option("--max", max_text, "search bound N")->required();
    cmd_solve->add_option("elements", element_texts, "prefix elements")->required();

    long long mt_n = 0;
    long long mt_max = 0;
    auto* cmd_maxtuple = app.add_subcommand("maxtuple", "exact maximum D(n) tuple in [1,N]");
    cmd_maxtuple->add_option("--n", mt_n, "the D(n) parameter")->required();
    cmd_maxtuple->add_option("--max", mt_max, "search bound N")->required();
    cmd_maxtuple->add_flag("--json", flag_json, "emit JSON");

    long long scan_from = 0;
    long long scan_to = 0;
    std::string cache_path;
    unsigned jobs = 0;
    auto* cmd_scan = app.add_subcommand("scan", "resumable C_n scan over an n range");
    cmd_scan->add_option("--from", scan_from, "first n")->required();
    cmd_scan->add_option("--to", scan_to, "last n")->required();
    cmd_scan->add_option("--cache", cache_path, "JSONL cache path (resume support)");
    cmd_scan->add_option("--jobs", jobs, "worker count (default: logical cores)")
        ->envname("DTUPLE_JOBS");

    auto* cmd_bounds = app.add_subcommand("bounds", "closed-form size bounds for D(n) sets");
    cmd_bounds->add_option("--n", n_text, "the D(n) parameter")->required();
    cmd_bounds->add_flag("--json", flag_json, "emit JSON");

    long pmin = 83;
    long pmax = 199;
    auto* cmd_gp = app.add_subcommand("gp", "admissible residue counts g(p) as CSV");
    cmd_gp->add_option("--n", n_text, "the D(n) parameter")->required();
    cmd_gp->add_option("--pmin", pmin, "first prime (default 83)");
    cmd_gp->add_option("--pmax", pmax, "last prime (default 199)");
    cmd_gp->add_option("elements", element_texts, "prefix elements")->required();
    cmd_gp->add_flag("--csv", flag_csv, "emit CSV (default)");

    bool fam_list = false;
    std::string fam_gen;
    std::string fam_k = "1";
    std::string fam_a = "5";
    auto* cmd_families = app.add_subcommand("families", "parametric families and the fixture catalog");
    cmd_families->add_flag("--list", fam_list, "list the fixture catalog");
    cmd_families->add_option("--gen", fam_gen, "generator: d1 or dsq");
    cmd_families->add_option("--k", fam_k, "parameter for --gen d1");
    cmd_families->add_option("--a", fam_a, "parameter for --gen dsq");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_verify->parsed())
            return run_verify(parse_int(n_text), parse_ints(element_texts), flag_json);
        if (cmd_extend->parsed())
            return run_extend(parse_int(n_text), parse_ints(element_texts), flag_json);
        if (cmd_solve->parsed())
            return run_solve(parse_int(n_text), parse_int(max_text), parse_ints(element_texts));
        if (cmd_maxtuple->parsed()) return run_maxtuple(mt_n, mt_max, flag_json);
        if (cmd_scan->parsed()) {
            std::optional<std::string> cache;
            if (!cache_path.empty()) cache = cache_path;
            return run_scan(scan_from, scan_to, cache, jobs);
        }
        if (cmd_bounds->parsed()) return run_bounds(parse_int(n_text), flag_json);
        if (cmd_gp->parsed())
            return run_gp(parse_int(n_text), parse_ints(element_texts), pmin, pmax);
        if (cmd_families->parsed())
            return run_families(fam_list, fam_gen, parse_int(fam_k), parse_int(fam_a));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
