#include "hpl/catalog.hpp"
#include "hpl/fixtures.hpp"
#include "hpl/pipeline.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace hpl;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kCounterexample = 2;

struct Globals {
    std::uint64_t seed = 1;
    std::uint64_t trials = 10000;
    bool trials_set = false;
    bool json_out = true;
    bool pretty = false;
    int workers = 0;
    ToleranceConfig cfg;
};

void emit(const Globals& g, const json& j) { std::cout << (g.pretty ? j.dump(2) : j.dump()) << "\n"; }

bool ends_with(const std::string& s, const std::string& suf)
{
    return s.size() >= suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0;
}

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open " + path);
    return json::parse(in);
}

// A catalog name, a matroid file or a polynomial file.
GenPoly load_polynomial(const std::string& input)
{
    if (ends_with(input, ".json")) {
        json j = read_json_file(input);
        if (j.contains("bases"))
            return GenPoly::from(basis_polynomial(matroid_from_json(j)));
        if (j.contains("entries"))
            return GenPoly::from(det_construction(complex_matrix_from_json(j)));
        return gen_poly_from_json(j);
    }
    return GenPoly::from(basis_polynomial(catalog(input)));
}

json manifest()
{
    for (const char* dir : {HPL_DATA_DIR, "data"}) {
        auto path = std::filesystem::path(dir) / "fixtures.json";
        if (std::filesystem::exists(path))
            return read_json_file(path.string());
    }
    return json::object();
}

int cmd_catalog(const Globals& g, const std::string& name)
{
    if (name.empty()) {
        json j{{"names", catalog_names()}, {"families", catalog_families()}};
        if (g.pretty) {
            for (const auto& n : catalog_names())
                std::cout << n << "\n";
            for (const auto& f : catalog_families())
                std::cout << f << "\n";
        } else {
            emit(g, j);
        }
        return kOk;
    }
    CatalogEntry e = catalog_entry(name);
    json j = matroid_to_json(e.matroid);
    j["name"] = e.name;
    j["title"] = e.title;
    j["labels"] = e.labels;
    j["hpp"] = e.hpp;
    j["nice"] = e.nice;
    j["conice"] = e.conice;
    if (e.presentation)
        j["presentation"] = presentation_to_json(*e.presentation);
    if (!e.note.empty())
        j["note"] = e.note;
    j["num_bases"] = e.matroid.bases().size();
    emit(g, j);
    return kOk;
}

int cmd_hpp(const Globals& g, const std::string& input, const std::string& method, int pivot)
{
    const GenPoly p = load_polynomial(input);
    RunOptions opt;
    opt.trials = g.trials;
    opt.seed = g.seed;
    opt.workers = g.workers;
    if (method == "rank2") {
        Rank2Result r = rank2_exact(p, g.cfg);
        emit(g, json{{"method", "rank2"}, {"hpp", r.hpp}, {"lambda2", r.lambda2}, {"eigenvalues", r.eigenvalues}});
        return r.hpp ? kOk : kCounterexample;
    }
    HppReport rep;
    if (method == "rays")
        rep = hpp_random_rays(p.to_multiaffine(), opt, g.cfg);
    else if (method == "elementary")
        rep = hpp_random_elementary(p.to_multiaffine(), opt, g.cfg, pivot);
    else if (method == "shifted")
        rep = shifted_hpp_random(p, opt, g.cfg);
    else
        throw std::invalid_argument("unknown method " + method);
    emit(g, report_to_json(rep));
    return rep.verdict == HppReport::Verdict::counterexample ? kCounterexample : kOk;
}

int cmd_reproduce(const Globals& g, const std::string& which, std::optional<double> eps, std::optional<double> a)
{
    FixtureParams fp;
    fp.eps = eps;
    fp.a = a;
    fp.seed = g.seed;
    fp.trials = g.trials_set ? g.trials : 0;
    fp.cfg = g.cfg;
    std::vector<std::string> names = which == "all" ? fixture_names() : std::vector<std::string>{which};
    const json tags = manifest();
    json out = json::array();
    bool all_pass = true;
    for (const auto& n : names) {
        auto results = run_fixture(n, fp);
        bool pass = true;
        json cases = json::array();
        for (const auto& r : results) {
            pass = pass && r.pass;
            cases.push_back(json{{"label", r.label}, {"pass", r.pass}, {"detail", r.detail}});
            if (g.pretty)
                std::cout << (r.pass ? "PASS " : "FAIL ") << n << "  " << r.label << "\n";
        }
        all_pass = all_pass && pass;
        json entry{{"fixture", n}, {"pass", pass}, {"cases", cases}};
        if (tags.contains(n))
            entry["provenance"] = tags[n];
        out.push_back(entry);
        if (g.pretty)
            std::cout << (pass ? "PASS " : "FAIL ") << n << " (" << results.size() << " cases)\n";
    }
    if (!g.pretty)
        emit(g, out);
    return all_pass ? kOk : kInputError;
}

int cmd_nice(const Globals& g, const std::string& name, const std::string& flat, const std::string& cotrunc,
             const std::string& transversal, const std::string& weights)
{
    if (!transversal.empty()) {
        Presentation pres;
        if (ends_with(transversal, ".json")) {
            pres = presentation_from_json(read_json_file(transversal));
        } else {
            auto e = catalog_entry(transversal);
            if (!e.presentation)
                throw std::invalid_argument(transversal + " has no stored presentation");
            pres = *e.presentation;
        }
        NonnegMatrix w;
        if (weights.empty() || weights == "ones")
            w = unit_weights(pres);
        else if (ends_with(weights, ".json"))
            w = nonneg_matrix_from_json(read_json_file(weights));
        else {
            // M_{a,b} stored weighting
            int n1 = 0, n2 = 0;
            if (std::sscanf(weights.c_str(), "M_{%d,%d}", &n1, &n2) != 2)
                throw std::invalid_argument("weights must be 'ones', M_{a,b} or a matrix file");
            w = m_family_weights(n1, n2);
        }
        emit(g, transversal_to_json(transversal_weight_verify(pres, w)));
        return kOk;
    }
    if (name.empty())
        throw std::invalid_argument("nice needs a matroid or --transversal");
    const Matroid m = ends_with(name, ".json") ? matroid_from_json(read_json_file(name)) : catalog(name);
    auto parse = [&](const std::string& s) {
        if (s == "all" || s == "E")
            return full_mask(m.n());
        Mask f = 0;
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            int e = std::stoi(tok);
            if (e < 0 || e >= m.n())
                throw std::out_of_range("element " + tok + " outside ground set");
            f |= bit(e);
        }
        return f;
    };
    NicenessSolution sol;
    if (!flat.empty() && cotrunc.empty())
        sol = nice_principal_solve(m, parse(flat));
    else if (!cotrunc.empty() && flat.empty())
        sol = nice_cotruncation_solve(m, parse(cotrunc));
    else
        throw std::invalid_argument("give exactly one of --flat or --cotrunc");
    emit(g, niceness_to_json(sol));
    return kOk;
}

int cmd_construct(const Globals& g, const std::string& script)
{
    emit(g, value_to_json(run_pipeline(script)));
    return kOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Half-plane property toolkit for matroids and multiaffine polynomials"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--seed", g.seed, "Base seed for sampling")->capture_default_str();
    auto* trials_opt = app.add_option("--trials", g.trials, "Number of random trials")->capture_default_str();
    app.add_flag("--json", g.json_out, "JSON output (default)");
    app.add_flag("--pretty", g.pretty, "Human-readable output");
    app.add_option("--tol-im", g.cfg.root_im_tol, "Imaginary-part tolerance for roots")->capture_default_str();
    app.add_option("--tol-re", g.cfg.root_re_tol, "Real-part tolerance for roots")->capture_default_str();
    app.add_option("--workers", g.workers, "Worker threads (0 = all cores)");
    app.fallthrough();

    std::string cat_name;
    auto* cat = app.add_subcommand("catalog", "List catalog names or print one matroid");
    cat->add_option("name", cat_name);

    std::string hpp_input, method = "rays";
    int pivot = -1;
    auto* hpp = app.add_subcommand("hpp", "Random search for half-plane counterexamples");
    hpp->add_option("input", hpp_input, "Catalog name or JSON file")->required();
    hpp->add_option("--method", method, "rays | elementary | shifted | rank2")
        ->check(CLI::IsMember({"rays", "elementary", "shifted", "rank2"}));
    hpp->add_option("--pivot", pivot, "Pivot element for the elementary method");

    std::string fixture;
    std::optional<double> eps, apar;
    auto* rep = app.add_subcommand("reproduce", "Run reproduction fixtures");
    rep->add_option("fixture", fixture, "Fixture name or 'all'")->required();
    rep->add_option("--eps", eps, "Perturbation size");
    rep->add_option("--a", apar, "Second perturbation parameter");

    std::string nice_name, flat, cotrunc, transversal, weights;
    auto* nice = app.add_subcommand("nice", "Solve or verify niceness weights");
    nice->add_option("matroid", nice_name);
    nice->add_option("--flat", flat, "Truncation set (comma list or 'all')");
    nice->add_option("--cotrunc", cotrunc, "Cotruncation set (comma list or 'all')");
    nice->add_option("--transversal", transversal, "Presentation file or catalog name");
    nice->add_option("--weights", weights, "'ones', M_{a,b} or a weight matrix file");

    std::string script;
    auto* con = app.add_subcommand("construct", "Run a construction pipeline");
    con->add_option("script", script, "e.g. \"basis F7 | relax 1,3,5\"")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }
    g.trials_set = trials_opt->count() > 0;
    try {
        if (*cat)
            return cmd_catalog(g, cat_name);
        if (*hpp)
            return cmd_hpp(g, hpp_input, method, pivot);
        if (*rep)
            return cmd_reproduce(g, fixture, eps, apar);
        if (*nice)
            return cmd_nice(g, nice_name, flat, cotrunc, transversal, weights);
        if (*con)
            return cmd_construct(g, script);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
