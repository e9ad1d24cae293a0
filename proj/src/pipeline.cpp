#include "hpl/pipeline.hpp"

#include "hpl/catalog.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace hpl {

namespace {

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\n");
    if (b == std::string::npos)
        return "";
    auto e = s.find_last_not_of(" \t\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;  // keep U_{2,3} intact
    for (char c : s) {
        if (c == '{')
            ++depth;
        if (c == '}')
            --depth;
        if (c == sep && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

std::vector<std::string> words(const std::string& s)
{
    std::vector<std::string> out;
    for (auto& w : split(s, ' '))
        if (!w.empty())
            out.push_back(w);
    return out;
}

struct Ctx {
    std::string base;
    PipelineValue cur;
};

json load(const Ctx& c, const std::string& arg)
{
    std::ifstream in(std::filesystem::path(c.base) / arg);
    if (!in)
        throw std::invalid_argument("cannot open " + arg);
    return json::parse(in);
}

Matroid matroid_arg(const Ctx& c, const std::string& arg)
{
    if (arg.size() > 5 && arg.substr(arg.size() - 5) == ".json")
        return matroid_from_json(load(c, arg));
    return catalog(arg);
}

std::vector<int> int_list(const std::string& s)
{
    std::vector<int> out;
    for (auto& t : split(s, ','))
        if (!t.empty())
            out.push_back(std::stoi(t));
    return out;
}

Mask subset_arg(const std::string& s, int n)
{
    if (s == "all" || s == "E")
        return full_mask(n);
    Mask m = 0;
    for (int e : int_list(s)) {
        if (e < 0 || e >= n)
            throw std::out_of_range("element " + std::to_string(e) + " outside ground set");
        m |= bit(e);
    }
    return m;
}

Weighting weights_arg(const std::string& s, int n)
{
    Weighting w;
    for (auto& t : split(s, ','))
        if (!t.empty())
            w.push_back(std::stod(t));
    if (w.size() == 1 && n > 1)
        w.assign(n, w[0]);
    check_weighting(w, n);
    return w;
}

int element_arg(const std::string& s) { return std::stoi(s); }

void need_args(const std::vector<std::string>& a, std::size_t k, const std::string& usage)
{
    if (a.size() != k)
        throw std::invalid_argument("usage: " + usage);
}

const Matroid& as_matroid(const Ctx& c)
{
    if (auto* m = std::get_if<Matroid>(&c.cur))
        return *m;
    throw std::invalid_argument("expected a matroid on the stack");
}

MaPoly as_ma(const Ctx& c)
{
    if (auto* p = std::get_if<MaPoly>(&c.cur))
        return *p;
    if (auto* g = std::get_if<GenPoly>(&c.cur))
        return g->to_multiaffine();
    if (auto* m = std::get_if<Matroid>(&c.cur))
        return basis_polynomial(*m);
    throw std::invalid_argument("expected a polynomial on the stack");
}

GenPoly as_gen(const Ctx& c)
{
    if (auto* g = std::get_if<GenPoly>(&c.cur))
        return *g;
    return GenPoly::from(as_ma(c));
}

bool holds_matroid(const Ctx& c) { return std::holds_alternative<Matroid>(c.cur); }

using Op = std::function<void(Ctx&, const std::vector<std::string>&)>;

template <class PolyFn, class MatFn>
void connect(Ctx& c, const std::vector<std::string>& a, const std::string& name, PolyFn pf, MatFn mf)
{
    need_args(a, 3, name + " OTHER e f");
    const Matroid other = matroid_arg(c, a[0]);
    if (holds_matroid(c))
        c.cur = mf(as_matroid(c), other, element_arg(a[1]), element_arg(a[2])).matroid;
    else
        c.cur = pf(as_ma(c), basis_polynomial(other), element_arg(a[1]), element_arg(a[2])).poly;
}

const std::map<std::string, Op>& ops()
{
    static const std::map<std::string, Op> table{
        {"basis",
         [](Ctx& c, const std::vector<std::string>& a) {
             need_args(a, 1, "basis NAME|FILE.json");
             c.cur = basis_polynomial(matroid_arg(c, a[0]));
         }},
        {"matroid",
         [](Ctx& c, const std::vector<std::string>& a) {
             need_args(a, 1, "matroid NAME|FILE.json");
             c.cur = matroid_arg(c, a[0]);
         }},
        {"indep",
         [](Ctx& c, const std::vector<std::string>& a) {
             need_args(a, 0, "indep");
             c.cur = independent_set_polynomial(as_matroid(c));
         }},
        {"poly",
         [](Ctx& c, const std::vector<std::string>& a) {
             need_args(a, 1, "poly FILE.json");
             GenPoly g = gen_poly_from_json(load(c, a[0]));
             if (g.multiaffine())
                 c.cur = g.to_multiaffine();
             else
                 c.cur = g;
         }},
        {"detpoly",
         [](Ctx& c, const std::vector<std::string>& a) {
             need_args(a, 1, "detpoly A.json");
             c.cur = det_construction(complex_matrix_from_json(load(c, a[0])));
         }},
        {"perpoly",
         [](Ctx& c, const std::vector<std::string>& a) {
             need_args(a, 1, "perpoly L.json");
             c.cur = per_construction(nonneg_matrix_from_json(load(c, a[0])));
         }},
        {"support",
         [](Ctx& c, const std::vector<std::string>& a) {
             need_args(a, 0, "support");
             auto r = support_matroid(as_ma(c));
             if (!r.matroid)
                 throw std::invalid_argument("support is not a matroid: " + r.report.message());
             c.cur = *r.matroid;
         }},
        {"dual",
         [](Ctx& c, const std::vector<std::string>& a) {
             need_args(a, 0, "dual");
             if (holds_matroid(c))
                 c.cur = matroid_dual(as_matroid(c));
             else
                 c.cur = dual(as_ma(c));
         }},
        {"delete",
         [](Ctx& c, const std::vector<std::string>& a) {
             need_args(a, 1, "delete e");
             if (holds_matroid(c))
                 c.cur = delete_element(as_matroid(c), element_arg(a[0]));
             else
                 c.cur = delete_element(as_ma(c), element_arg(a[0]));
         }},
        {"contract",
         [](Ctx& c, const std::vector<std::string>& a) {
             need_args(a, 1, "contract e");
             if (holds_matroid(c))
                 c.cur = contract_element(as_matroid(c), element_arg(a[0]));
             else
                 c.cur = contract_element(as_ma(c), element_arg(a[0]));
         }},
        {"relax",
         [](Ctx& c, const std::vector<std::string>& a) {
             need_args(a, 1, "relax e1,e2,...");
             if (holds_matroid(c)) {
                 const Matroid& m = as_matroid(c);
                 c.cur = relax(m, subset_arg(a[0], m.n()));
             } else {
                 MaPoly p = as_ma(c);
                 auto sm = support_matroid(p);
                 if (!sm.matroid)
                     throw std::invalid_argument("support is not a matroid");
                 const Mask h = subset_arg(a[0], p.n());
                 relax(*sm.matroid, h);  // validates the circuit-hyperplane
                 p.add(h, 1.0);
                 c.cur = p;
             }
         }},
        {"trunc",
         [](Ctx& c, const std::vector<std::string>& a) {
             need_args(a, 1, "trunc l1,l2,...");
             MaPoly p = as_ma(c);
             c.cur = principal_truncation(p, weights_arg(a[0], p.n()));
         }},
        {"ext",
         [](Ctx& c, const std::vector<std::string>& a) {
             need_args(a, 1, "ext l1,l2,...");
             MaPoly p = as_ma(c);
             c.cur = principal_extension(p, weights_arg(a[0], p.n()));
         }},
        {"cotrunc",
         [](Ctx& c, const std::vector<std::string>& a) {
             need_args(a, 1, "cotrunc l1,l2,...");
             MaPoly p = as_ma(c);
             c.cur = principal_cotruncation(p, weights_arg(a[0], p.n()));
         }},
        {"coext",
         [](Ctx& c, const std::vector<std::string>& a) {
             need_args(a, 1, "coext l1,l2,...");
             MaPoly p = as_ma(c);
             c.cur = principal_coextension(p, weights_arg(a[0], p.n()));
         }},
        {"parallel",
         [](Ctx& c, const std::vector<std::string>& a) {
             connect(c, a, "parallel", parallel_connection, parallel_connection_m);
         }},
        {"series",
         [](Ctx& c, const std::vector<std::string>& a) {
             connect(c, a, "series", series_connection, series_connection_m);
         }},
        {"twosum",
         [](Ctx& c, const std::vector<std::string>& a) { connect(c, a, "twosum", two_sum, two_sum_m); }},
        {"dsum",
         [](Ctx& c, const std::vector<std::string>& a) {
             need_args(a, 1, "dsum OTHER");
             c.cur = direct_sum(as_matroid(c), matroid_arg(c, a[0]));
         }},
        {"flat",
         [](Ctx& c, const std::vector<std::string>& a) {
             need_args(a, 1, "flat e1,e2,...|all");
             GenPoly g = as_gen(c);
             c.cur = multiaffine_part(g, subset_arg(a[0], g.n()));
         }},
        {"fold",
         [](Ctx& c, const std::vector<std::string>& a) {
             need_args(a, 1, "fold e1,e2,...|all");
             GenPoly g = as_gen(c);
             c.cur = fold_mod2(g, subset_arg(a[0], g.n()));
         }},
        {"conv",
         [](Ctx& c, const std::vector<std::string>& a) {
             need_args(a, 1, "conv OTHER");
             c.cur = convolution(as_ma(c), basis_polynomial(matroid_arg(c, a[0])));
         }},
        {"leading",
         [](Ctx& c, const std::vector<std::string>& a) {
             need_args(a, 0, "leading");
             c.cur = leading_part(as_gen(c));
         }},
        {"polarize",
         [](Ctx& c, const std::vector<std::string>& a) {
             need_args(a, 1, "polarize d1,d2,...");
             c.cur = polarize(as_gen(c), int_list(a[0])).poly;
         }},
    };
    return table;
}

}  // namespace

std::vector<std::string> pipeline_ops()
{
    std::vector<std::string> out;
    for (const auto& [k, v] : ops())
        out.push_back(k);
    return out;
}

PipelineValue run_pipeline(const std::string& script, const std::string& base_dir)
{
    Ctx c{base_dir, {}};
    auto steps = split(script, '|');
    for (std::size_t i = 0; i < steps.size(); ++i) {
        auto w = words(steps[i]);
        if (w.empty())
            throw PipelineError(int(i + 1), "empty step");
        auto it = ops().find(w[0]);
        if (it == ops().end())
            throw PipelineError(int(i + 1), "unknown operation '" + w[0] + "'");
        if (i == 0 && std::holds_alternative<std::monostate>(c.cur) && w[0] != "basis" && w[0] != "matroid" &&
            w[0] != "poly" && w[0] != "detpoly" && w[0] != "perpoly")
            throw PipelineError(1, "pipeline must start with basis, matroid, poly, detpoly or perpoly");
        try {
            it->second(c, std::vector<std::string>(w.begin() + 1, w.end()));
        } catch (const PipelineError&) {
            throw;
        } catch (const std::exception& e) {
            throw PipelineError(int(i + 1), e.what());
        }
    }
    return c.cur;
}

json value_to_json(const PipelineValue& v)
{
    if (auto* m = std::get_if<Matroid>(&v)) {
        json j = matroid_to_json(*m);
        j["type"] = "matroid";
        return j;
    }
    if (auto* p = std::get_if<MaPoly>(&v)) {
        json j = poly_to_json(*p);
        j["type"] = "polynomial";
        return j;
    }
    if (auto* g = std::get_if<GenPoly>(&v)) {
        json j = poly_to_json(*g);
        j["type"] = "polynomial";
        return j;
    }
    return json{{"type", "empty"}};
}

}  // namespace hpl
