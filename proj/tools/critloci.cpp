// Command-line front end: setup ingestion, ideal export, dimension/degree
// reports, fibre queries, nesting checks and the bundled verification suites.
//
// Exit codes: 0 success (and all checks passed for `verify`), 2 usage or
// parse errors, 3 domain-condition failures. Diagnostics go to stderr,
// results to stdout.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <critloci/geometry.hpp>
#include <critloci/hilbert.hpp>
#include <critloci/io.hpp>
#include <critloci/suites.hpp>

using namespace critloci;

namespace {

struct Options {
    std::string setup_path;
    std::string ideal_path;
    std::string out_path;
    std::string side = "X";
    std::string point;
    std::string direction = "forward";
    std::string subset;
    std::string field = "Q";
    long prime = 32003;
    std::uint64_t seed = 1;
    long budget = 2000000;
    bool json_output = false;
    std::string suite;
};

std::vector<int> parse_subset(const std::string& text, int n) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        int v = std::stoi(item);
        if (v < 1 || v > n) throw std::invalid_argument("subset index out of range");
        out.push_back(v - 1); // CLI uses 1-based view numbers
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.empty()) throw std::invalid_argument("subset is empty");
    return out;
}

template <class K>
int cmd_build_ideal(const Options& opt) {
    json doc = load_json_file(opt.setup_path);
    ProjectionSetup<K> s = setup_from_json<K>(doc);
    Ideal<K> ideal;
    if (opt.side == "X" || opt.side == "Y") {
        ideal = critical_ideal(s, opt.side == "X" ? Side::X : Side::Y);
    } else if (opt.side == "U") {
        ideal = unified_ideal(s);
    } else {
        std::cerr << "unknown side '" << opt.side << "' (use X, Y or U)\n";
        return 2;
    }
    json out = ideal_to_json(ideal);
    out["setup_summary"] = {{"k", s.k}, {"h", s.hs}, {"side", opt.side}};
    if (!opt.out_path.empty()) save_json_file(opt.out_path, out);
    if (opt.json_output) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "field " << K::field_name() << ", ring";
        for (const auto& v : ideal.ring->vars) std::cout << " " << v;
        std::cout << " (" << ideal.ring->order.tag() << ")\n";
        if (ideal.gens.empty()) {
            std::cout << "zero ideal: the critical locus is the whole projective space "
                      << "(fewer matrix rows than columns)\n";
        } else {
            std::cout << ideal.gens.size()
                      << (ideal.gens.size() == 1 ? " generator, degree" : " generators, degrees");
            for (const auto& g : ideal.gens) {
                auto info = g.degree_info();
                std::cout << " " << info.total_degree.value();
                if (info.bidegree)
                    std::cout << "(" << info.bidegree->first << "," << info.bidegree->second
                              << ")";
            }
            std::cout << "\n";
        }
        if (!opt.out_path.empty()) std::cout << "wrote " << opt.out_path << "\n";
    }
    return 0;
}

template <class K>
int run_dim_degree(const Options& opt, const json& doc, bool probabilistic) {
    Ideal<K> ideal = ideal_from_json<K>(doc);
    // the fallback run is unbudgeted: the prime field is the fast lane
    BuchbergerOptions budget{probabilistic ? static_cast<size_t>(-1)
                                           : static_cast<size_t>(opt.budget)};
    json report;
    report["field"] = K::field_name();

    std::optional<int> dim = dimension(groebner_of(ideal, budget));
    std::optional<long long> deg;
    if (dim && !ideal.ring->blocked()) deg = degree(ideal);

    if (!dim) {
        std::cout << "empty locus\n";
        return 0;
    }
    report["dimension"] = *dim;
    if (deg) report["degree"] = *deg;
    report["probabilistic"] = probabilistic;

    std::optional<int> exp_dim;
    std::optional<long long> exp_deg;
    if (doc.contains("setup_summary")) {
        const auto& meta = doc["setup_summary"];
        int k = meta.at("k").get<int>();
        std::vector<int> hs = meta.at("h").get<std::vector<int>>();
        int sum_h = 0;
        for (int h : hs) sum_h += h;
        exp_dim = 2 * k - sum_h;
        if (*exp_dim >= 0)
            exp_deg = binomial(static_cast<int>(hs.size()) - k - 1 + sum_h,
                               static_cast<int>(hs.size()) - 1);
    }
    if (ideal.ring->blocked()) {
        // degree of a product-space locus: factorwise hyperplane slice counts,
        // with the Segre (1,1) count reported alongside; dim-many slicing
        // forms of each kind cut the locus down to points
        SeededRng rng(opt.seed);
        std::vector<Poly<K>> sx, sy, sb;
        for (int i = 0; i < *dim; ++i) {
            sx.push_back(random_linear_form<K>(ideal.ring, 0, ideal.ring->block_split, rng));
            sy.push_back(
                random_linear_form<K>(ideal.ring, ideal.ring->block_split, ideal.ring->nvars(), rng));
            sb.push_back(random_bilinear_form<K>(ideal.ring, rng));
        }
        long long cx = affine_slice_count(ideal, sx, opt.seed + 1, budget);
        long long cy = affine_slice_count(ideal, sy, opt.seed + 2, budget);
        long long cb = affine_slice_count(ideal, sb, opt.seed + 3, budget);
        report["degree_interpretation"] = "factorwise hyperplane slice count";
        report["x_slice_count"] = cx;
        report["y_slice_count"] = cy;
        report["segre_slice_count"] = cb;
        report["seed"] = opt.seed;
        if (opt.json_output) {
            std::cout << report.dump(2) << "\n";
        } else {
            std::cout << "dimension " << *dim << " (product ring: Krull minus one per factor)"
                      << (probabilistic ? "  [probabilistic GF fallback]" : "") << "\n";
            std::cout << "degree (factorwise hyperplane slices): x " << cx << ", y " << cy
                      << "; Segre (1,1)-slice count " << cb << "  [seed " << opt.seed << "]\n";
        }
        return 0;
    }
    if (opt.json_output) {
        if (exp_dim) report["expected_dimension"] = *exp_dim;
        if (exp_deg) report["expected_degree"] = *exp_deg;
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << "actual:   dim " << *dim << ", degree " << *deg
                  << (probabilistic ? "  [probabilistic GF fallback]" : "") << "\n";
        if (exp_dim) {
            std::cout << "expected: dim " << *exp_dim;
            if (exp_deg) std::cout << ", degree " << *exp_deg;
            std::cout << ((*exp_dim != *dim || (exp_deg && deg && *exp_deg != *deg))
                              ? "  [MISMATCH with the formulas]"
                              : "")
                      << "\n";
        }
    }
    return 0;
}

template <class K>
int cmd_dim_degree(const Options& opt) {
    json doc = load_json_file(opt.ideal_path);
    try {
        return run_dim_degree<K>(opt, doc, false);
    } catch (const BudgetExceeded&) {
        if constexpr (!K::is_prime_field) {
            std::cerr << "rational run exceeded the work budget; retrying over GF("
                      << PrimeField::modulus() << ") [probabilistic]\n";
            return run_dim_degree<PrimeField>(opt, doc, true);
        } else {
            throw;
        }
    }
}

template <class K>
int cmd_fiber(const Options& opt) {
    json doc = load_json_file(opt.setup_path);
    ProjectionSetup<K> s = setup_from_json<K>(doc);
    ProjectivePoint<K> x = point_from_string<K>(opt.point);
    Direction dir = (opt.direction == "backward") ? Direction::Backward : Direction::Forward;
    FibreResult<K> f = conjugate_point(s, x, dir);
    if (f.kind == FibreResult<K>::Kind::NotInLocus) {
        std::cerr << "point " << x.str() << " is not on the critical locus\n";
        return 3;
    }
    if (opt.json_output) {
        json rep;
        rep["input"] = x.str();
        rep["direction"] = opt.direction;
        rep["outcome"] = f.describe();
        if (f.kind == FibreResult<K>::Kind::Point) rep["witness"] = f.point->str();
        if (f.kind == FibreResult<K>::Kind::LinearSpace) {
            json forms = json::array();
            RingPtr ring = coordinate_ring(dir == Direction::Forward ? 'y' : 'x', s.k + 1);
            for (const auto& form : cutting_forms(f.space)) {
                Poly<K> p = Poly<K>::zero(ring);
                for (int i = 0; i <= s.k; ++i)
                    if (!form[i].is_zero()) p += Poly<K>::term(ring, Monomial::var(i), form[i]);
                forms.push_back(p.str());
            }
            rep["cutting_forms"] = forms;
        }
        rep["views_used"] = f.case_r;
        std::cout << rep.dump(2) << "\n";
        return 0;
    }
    if (f.kind == FibreResult<K>::Kind::LinearSpace) {
        std::cout << "LinearSpace dim " << f.space_projective_dim() << ":";
        RingPtr ring = coordinate_ring(dir == Direction::Forward ? 'y' : 'x', s.k + 1);
        bool first = true;
        for (const auto& form : cutting_forms(f.space)) {
            Poly<K> p = Poly<K>::zero(ring);
            for (int i = 0; i <= s.k; ++i)
                if (!form[i].is_zero()) p += Poly<K>::term(ring, Monomial::var(i), form[i]);
            std::cout << (first ? " " : ", ") << p.str() << " = 0";
            first = false;
        }
        std::cout << "\n";
    } else {
        std::cout << f.describe() << "\n";
    }
    return 0;
}

template <class K>
int cmd_nesting(const Options& opt) {
    json doc = load_json_file(opt.setup_path);
    ProjectionSetup<K> s = setup_from_json<K>(doc);
    std::vector<int> subset = parse_subset(opt.subset, s.n());
    NestingReport<K> rep = nesting_check(s, subset);
    if (opt.json_output) {
        json j;
        j["subset"] = opt.subset;
        j["verdict"] = rep.verdict;
        json nfs = json::array();
        for (const auto& nf : rep.normal_forms)
            if (!nf.is_zero()) nfs.push_back(nf.str());
        j["nonzero_normal_forms"] = nfs;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "nesting verdict: " << (rep.verdict ? "true" : "false") << "\n";
        for (size_t i = 0; i < rep.normal_forms.size(); ++i)
            if (!rep.normal_forms[i].is_zero())
                std::cout << "nonzero normal form for generator " << i << ": "
                          << rep.normal_forms[i].str() << "\n";
    }
    return 0;
}

int cmd_verify(const Options& opt) {
    std::vector<suites::CheckResult> results;
    try {
        results = suites::run_suite(opt.suite, opt.seed);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "; known suites:";
        for (const auto& n : suites::suite_names()) std::cerr << " " << n;
        std::cerr << "\n";
        return 2;
    }
    bool all = true;
    if (opt.json_output) {
        json rep;
        rep["suite"] = opt.suite;
        rep["seed"] = opt.seed;
        json checks = json::array();
        for (const auto& r : results) {
            if (!r.pass && !r.skipped) all = false;
            checks.push_back({{"name", r.name},
                              {"status", r.skipped ? "skip" : (r.pass ? "pass" : "fail")},
                              {"detail", r.detail}});
        }
        rep["checks"] = checks;
        rep["all_passed"] = all;
        std::cout << rep.dump(2) << "\n";
        return all ? 0 : 1;
    }
    for (const auto& r : results) {
        const char* tag = r.skipped ? "SKIP" : (r.pass ? "PASS" : "FAIL");
        if (!r.pass && !r.skipped) all = false;
        std::cout << tag << "  " << r.name;
        if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
        std::cout << "\n";
    }
    std::cout << (all ? "all checks passed" : "CHECKS FAILED") << "  [seed " << opt.seed
              << "]\n";
    return all ? 0 : 1;
}

template <class K>
int dispatch(const std::string& cmd, const Options& opt) {
    if (cmd == "build-ideal") return cmd_build_ideal<K>(opt);
    if (cmd == "dim-degree") return cmd_dim_degree<K>(opt);
    if (cmd == "fiber") return cmd_fiber<K>(opt);
    if (cmd == "nesting") return cmd_nesting<K>(opt);
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact critical-locus computations for pairs of camera n-tuples"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--field", opt.field, "coefficient field: Q or GFp")
            ->check(CLI::IsMember({"Q", "GFp"}));
        sub->add_option("--prime", opt.prime, "modulus for GFp (default 32003)");
        sub->add_option("--seed", opt.seed, "seed for randomized steps (echoed in output)");
        sub->add_flag("--json", opt.json_output, "machine-readable output");
    };

    CLI::App* build = app.add_subcommand("build-ideal", "construct a critical or unified ideal");
    build->add_option("--setup", opt.setup_path, "setup JSON file")->required();
    build->add_option("--side", opt.side, "X, Y or U (unified)");
    build->add_option("--out", opt.out_path, "output ideal JSON path");
    add_common(build);

    CLI::App* dd = app.add_subcommand("dim-degree", "dimension and degree of an ideal");
    dd->add_option("--ideal", opt.ideal_path, "ideal JSON file")->required();
    dd->add_option("--budget", opt.budget, "max basis reductions before GF fallback");
    add_common(dd);

    CLI::App* fib = app.add_subcommand("fiber", "fibre of the unified locus over a point");
    fib->add_option("--setup", opt.setup_path, "setup JSON file")->required();
    fib->add_option("--point", opt.point, "comma-separated coordinates")->required();
    fib->add_option("--direction", opt.direction, "forward or backward")
        ->check(CLI::IsMember({"forward", "backward"}));
    add_common(fib);

    CLI::App* nest = app.add_subcommand("nesting", "nesting check for a view subset");
    nest->add_option("--setup", opt.setup_path, "setup JSON file")->required();
    nest->add_option("--subset", opt.subset, "1-based view indices, e.g. 1,2")->required();
    add_common(nest);

    CLI::App* ver = app.add_subcommand("verify", "run a bundled verification suite");
    ver->add_option("suite", opt.suite, "paper-ex-5.1 | paper-ex-5.2 | formulas | properties")
        ->required();
    add_common(ver);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        std::string cmd = app.get_subcommands().front()->get_name();
        // the setup file may name its own field when no flag overrides it
        CLI::App* sub = app.get_subcommands().front();
        bool field_given = sub->count("--field") > 0;
        std::string peek_path = !opt.setup_path.empty() ? opt.setup_path : opt.ideal_path;
        if (!field_given && !peek_path.empty()) {
            try {
                json peek = load_json_file(peek_path);
                if (peek.contains("field")) {
                    std::string f = peek["field"].get<std::string>();
                    if (f.rfind("GF(", 0) == 0 && f.back() == ')') {
                        opt.field = "GFp";
                        opt.prime = std::stol(f.substr(3, f.size() - 4));
                    }
                }
            } catch (const std::exception&) {
                // unreadable files fail later with a proper diagnostic
            }
        }
        if (opt.field == "GFp") PrimeField::set_modulus(opt.prime);
        if (cmd == "verify") return cmd_verify(opt);
        if (opt.field == "GFp") return dispatch<PrimeField>(cmd, opt);
        return dispatch<Rational>(cmd, opt);
    } catch (const json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
