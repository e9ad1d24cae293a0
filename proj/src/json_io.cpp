#include "hpl/json_io.hpp"

#include <stdexcept>

namespace hpl {

namespace {

json cplx_json(cplx z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

cplx read_cplx(const json& j)
{
    if (j.is_number())
        return j.get<double>();
    if (!j.is_object())
        throw std::invalid_argument("expected a number or {re, im}");
    return {j.value("re", 0.0), j.value("im", 0.0)};
}

int read_n(const json& j)
{
    if (!j.is_object() || !j.contains("n"))
        throw std::invalid_argument("missing field \"n\"");
    int n = j.at("n").get<int>();
    check_ground(n);
    return n;
}

Mask read_subset(const json& j, int n)
{
    Mask s = 0;
    for (const auto& e : j) {
        int v = e.get<int>();
        if (v < 0 || v >= n)
            throw std::out_of_range("element " + std::to_string(v) + " outside ground set");
        if (has(s, v))
            throw std::invalid_argument("repeated element " + std::to_string(v));
        s |= bit(v);
    }
    return s;
}

}  // namespace

json poly_to_json(const MaPoly& p)
{
    json terms = json::array();
    for (const auto& [s, c] : p.terms()) {
        json t = cplx_json(c);
        t["subset"] = members_of(s);
        terms.push_back(t);
    }
    return json{{"n", p.n()}, {"terms", terms}};
}

json poly_to_json(const GenPoly& p)
{
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) {
        json t = cplx_json(c);
        t["exponents"] = m.exps;
        terms.push_back(t);
    }
    return json{{"n", p.n()}, {"terms", terms}};
}

GenPoly gen_poly_from_json(const json& j)
{
    const int n = read_n(j);
    GenPoly p(n);
    for (const auto& t : j.value("terms", json::array())) {
        MultiIndex m = MultiIndex::zero(n);
        if (t.contains("exponents")) {
            auto ex = t.at("exponents").get<std::vector<int>>();
            if (int(ex.size()) != n)
                throw std::invalid_argument("exponent vector length differs from n");
            for (int v : ex)
                if (v < 0)
                    throw std::invalid_argument("negative exponent");
            m = MultiIndex(ex);
        } else if (t.contains("subset")) {
            m = MultiIndex::from_mask(read_subset(t.at("subset"), n), n);
        } else {
            throw std::invalid_argument("term needs \"subset\" or \"exponents\"");
        }
        p.add(m, read_cplx(t));
    }
    return p;
}

MaPoly ma_poly_from_json(const json& j) { return gen_poly_from_json(j).to_multiaffine(); }

json matroid_to_json(const Matroid& m)
{
    json bases = json::array();
    for (Mask b : m.bases())
        bases.push_back(members_of(b));
    return json{{"n", m.n()}, {"rank", m.rank()}, {"bases", bases}};
}

Matroid matroid_from_json(const json& j)
{
    const int n = read_n(j);
    std::vector<Mask> bases;
    for (const auto& b : j.at("bases"))
        bases.push_back(read_subset(b, n));
    return Matroid(n, bases);
}

ComplexMatrix complex_matrix_from_json(const json& j)
{
    const auto& rows = j.at("entries");
    const int r = j.contains("rows") ? j.at("rows").get<int>() : int(rows.size());
    const int c = j.contains("cols") ? j.at("cols").get<int>() : (rows.empty() ? 0 : int(rows[0].size()));
    if (int(rows.size()) != r)
        throw std::invalid_argument("matrix: row count mismatch");
    ComplexMatrix a(r, c);
    for (int i = 0; i < r; ++i) {
        if (int(rows[i].size()) != c)
            throw std::invalid_argument("matrix: column count mismatch");
        for (int k = 0; k < c; ++k)
            a(i, k) = read_cplx(rows[i][k]);
    }
    return a;
}

NonnegMatrix nonneg_matrix_from_json(const json& j)
{
    ComplexMatrix a = complex_matrix_from_json(j);
    NonnegMatrix l(a.rows, a.cols);
    for (std::size_t k = 0; k < a.data.size(); ++k) {
        if (a.data[k].imag() != 0.0)
            throw std::invalid_argument("matrix: expected real entries");
        l.data[k] = a.data[k].real();
    }
    check_nonneg(l);
    return l;
}

json matrix_to_json(const ComplexMatrix& a)
{
    json rows = json::array();
    for (int i = 0; i < a.rows; ++i) {
        json row = json::array();
        for (int k = 0; k < a.cols; ++k)
            row.push_back(cplx_json(a(i, k)));
        rows.push_back(row);
    }
    return json{{"rows", a.rows}, {"cols", a.cols}, {"entries", rows}};
}

json presentation_to_json(const Presentation& p)
{
    json sets = json::array();
    for (Mask s : p.sets)
        sets.push_back(members_of(s));
    return json{{"n", p.n}, {"sets", sets}};
}

Presentation presentation_from_json(const json& j)
{
    Presentation p;
    p.n = read_n(j);
    for (const auto& s : j.at("sets"))
        p.sets.push_back(read_subset(s, p.n));
    return p;
}

std::string rational_string(const Rational& q)
{
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(q) == 1)
        return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

json counterexample_to_json(const Counterexample& c)
{
    json j{{"kind", kind_name(c.kind)}};
    if (c.kind == Counterexample::Kind::elementary) {
        json xs = json::array();
        for (const auto& z : c.x)
            xs.push_back(cplx_json(z));
        j["x"] = xs;
        j["pivot"] = c.pivot;
        j["residual"] = c.residual;
    } else {
        j[c.kind == Counterexample::Kind::ray ? "a" : "x"] = c.a;
        j[c.kind == Counterexample::Kind::ray ? "b" : "y"] = c.b;
        j["root"] = cplx_json(c.root);
    }
    return j;
}

json report_to_json(const HppReport& r)
{
    json j{{"verdict", r.verdict == HppReport::Verdict::counterexample ? "counterexample" : "no-counterexample"},
           {"method", r.method},
           {"trials", r.trials},
           {"counterexamples", r.counterexamples},
           {"degenerate", r.degenerate},
           {"root_failures", r.root_failures},
           {"seed", r.seed}};
    if (r.trials)
        j["rate"] = double(r.counterexamples) / double(r.trials);
    if (r.certificate)
        j["certificate"] = counterexample_to_json(*r.certificate);
    return j;
}

json niceness_to_json(const NicenessSolution& s)
{
    json w = json::array(), approx = json::array();
    for (const auto& q : s.weights) {
        w.push_back(rational_string(q));
        approx.push_back(q.convert_to<double>());
    }
    return json{{"status", status_name(s.status)},
                {"elements", s.unknowns},
                {"weights", w},
                {"weights_approx", approx},
                {"unique", s.unique},
                {"heuristic", s.heuristic},
                {"equations", s.equations},
                {"kernel_dim", s.kernel_dim}};
}

json transversal_to_json(const TransversalCheck& t)
{
    json vals = json::array();
    for (const auto& [s, c] : t.values)
        vals.push_back(json{{"basis", members_of(s)}, {"c", c}});
    return json{{"uniform", t.uniform}, {"extra_rows", t.extra_rows}, {"values", vals}};
}

}  // namespace hpl
