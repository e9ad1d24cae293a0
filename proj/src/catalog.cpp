#include "hpl/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <regex>
#include <stdexcept>

namespace hpl {

Matroid rank3_from_lines(int n, const std::vector<std::vector<int>>& lines)
{
    std::vector<Mask> line_masks;
    for (const auto& l : lines) {
        Mask m = mask_of(l);
        if (m & ~full_mask(n))
            throw std::out_of_range("line point outside ground set");
        line_masks.push_back(m);
    }
    for (std::size_t i = 0; i < line_masks.size(); ++i)
        for (std::size_t j = i + 1; j < line_masks.size(); ++j)
            if (popcount(line_masks[i] & line_masks[j]) > 1)
                throw std::invalid_argument("two lines share more than one point");
    std::vector<Mask> bs;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                Mask t = bit(a) | bit(b) | bit(c);
                bool dep = std::any_of(line_masks.begin(), line_masks.end(),
                                       [t](Mask l) { return (l & t) == t; });
                if (!dep)
                    bs.push_back(t);
            }
    if (bs.empty())
        throw std::invalid_argument("point configuration has rank below 3");
    return Matroid::unchecked(n, std::move(bs));
}

namespace {

// Lines written with one-based single-character labels, e.g. "1237".
std::vector<std::vector<int>> lines_of(std::initializer_list<const char*> specs)
{
    std::vector<std::vector<int>> out;
    for (const char* s : specs) {
        std::vector<int> l;
        for (const char* c = s; *c; ++c)
            l.push_back(*c - '1');
        out.push_back(l);
    }
    return out;
}

std::vector<std::string> one_based(int n)
{
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i)
        v.push_back(std::to_string(i));
    return v;
}

std::vector<std::string> zero_based(int n)
{
    std::vector<std::string> v;
    for (int i = 0; i < n; ++i)
        v.push_back(std::to_string(i));
    return v;
}

Mask set_of(const char* s)
{
    Mask m = 0;
    for (const char* c = s; *c; ++c)
        m |= bit(*c - '1');
    return m;
}

Presentation pres_of(int n, std::initializer_list<const char*> sets)
{
    Presentation p;
    p.n = n;
    for (const char* s : sets)
        p.sets.push_back(set_of(s));
    return p;
}

CatalogEntry rank3(const std::string& name, const std::string& title, int n,
                   std::initializer_list<const char*> lines, const char* hpp, const char* nice,
                   const char* conice)
{
    CatalogEntry e;
    e.name = name;
    e.title = title;
    e.matroid = rank3_from_lines(n, lines_of(lines));
    e.labels = one_based(n);
    e.hpp = hpp;
    e.nice = nice;
    e.conice = conice;
    return e;
}

// Rank-4 matroid on 8 elements: every 4-set except the listed ones.
Matroid rank4_on8_except(std::initializer_list<const char*> nonbases)
{
    std::vector<Mask> bad;
    for (const char* s : nonbases)
        bad.push_back(set_of(s));
    std::vector<Mask> bs;
    for (Mask s = 0; s < 256; ++s)
        if (popcount(s) == 4 && std::find(bad.begin(), bad.end(), s) == bad.end())
            bs.push_back(s);
    return Matroid::unchecked(8, std::move(bs));
}

const std::map<std::string, std::function<CatalogEntry()>>& fixed_table()
{
    static const std::map<std::string, std::function<CatalogEntry()>> table = {
        {"MK4", [] { return rank3("MK4", "M(K4)", 6, {"123", "156", "346", "245"}, "yes", "no", "no"); }},
        {"W3",
         [] {
             auto e = rank3("W3", "W^3", 6, {"123", "345", "561"}, "yes", "no", "no");
             e.presentation = pres_of(6, {"456", "126", "234"});
             return e;
         }},
        {"Q6", [] { return rank3("Q6", "Q6", 6, {"135", "124"}, "yes", "yes", "yes"); }},
        {"P6", [] { return rank3("P6", "P6", 6, {"123"}, "yes", "yes", "yes"); }},
        {"Q7", [] { return rank3("Q7", "Q7", 7, {"123", "1456"}, "yes", "yes", "no"); }},
        {"Q7del7", [] { return rank3("Q7del7", "Q7 \\ 7", 6, {"123", "1456"}, "yes", "yes", "unknown"); }},
        {"S7", [] { return rank3("S7", "S7", 7, {"1234"}, "yes", "yes", "unknown"); }},
        {"MK4plus",
         [] { return rank3("MK4plus", "M(K4)+", 7, {"1237", "156", "346", "245"}, "yes", "no", "no"); }},
        {"W3plus", [] { return rank3("W3plus", "W^3+", 7, {"345", "1237", "156"}, "unknown", "no", "no"); }},
        {"F7",
         [] {
             return rank3("F7", "F7", 7, {"123", "345", "156", "147", "257", "367", "246"}, "no", "no", "no");
         }},
        {"F7m",
         [] { return rank3("F7m", "F7^-", 7, {"123", "345", "156", "147", "257", "367"}, "no", "no", "no"); }},
        {"F7mm", [] { return rank3("F7mm", "F7^--", 7, {"123", "345", "156", "257", "367"}, "no", "no", "no"); }},
        {"MK4pe", [] { return rank3("MK4pe", "M(K4)+e", 7, {"123", "156", "367", "257"}, "no", "no", "no"); }},
        {"F7m3", [] { return rank3("F7m3", "F7^-3", 7, {"345", "147", "123", "156"}, "no", "no", "no"); }},
        {"F7m4", [] { return rank3("F7m4", "F7^-4", 7, {"147", "123", "156"}, "unknown", "no", "no"); }},
        {"W3pe", [] { return rank3("W3pe", "W^3+e", 7, {"345", "123", "156"}, "unknown", "no", "no"); }},
        {"F7m5",
         [] {
             auto e = rank3("F7m5", "F7^-5", 7, {"123", "156"}, "yes", "no", "yes");
             e.presentation = pres_of(7, {"2347", "4567", "1234567"});
             return e;
         }},
        {"F7m6", [] { return rank3("F7m6", "F7^-6", 7, {"123"}, "yes", "yes", "unknown"); }},
        {"P7", [] { return rank3("P7", "P7", 7, {"345", "147", "267", "123", "156"}, "yes", "no", "no"); }},
        {"P7p", [] { return rank3("P7p", "P7'", 7, {"345", "267", "123", "156"}, "unknown", "no", "no"); }},
        {"P7pp", [] { return rank3("P7pp", "P7''", 7, {"345", "267", "123"}, "yes", "no", "yes"); }},
        {"P7ppp", [] { return rank3("P7ppp", "P7'''", 7, {"345", "267"}, "yes", "yes", "unknown"); }},
        {"F7m4pe", [] { return rank3("F7m4pe", "F7^-4+e", 8, {"147", "123", "156"}, "unknown", "no", "no"); }},
        {"W3pepf", [] { return rank3("W3pepf", "W^3+e+f", 8, {"345", "123", "156"}, "unknown", "no", "no"); }},
        {"W3pluspe",
         [] { return rank3("W3pluspe", "W^3+ +e", 8, {"345", "1237", "156"}, "unknown", "no", "no"); }},
        {"P7pe", [] { return rank3("P7pe", "P7'+e", 8, {"345", "267", "123", "156"}, "unknown", "no", "no"); }},
        {"Pappus",
         [] {
             return rank3("Pappus", "Pappus", 9, {"456", "123", "247", "359", "348", "168", "157", "269", "789"},
                          "no", "no", "no");
         }},
        {"NonPappus",
         [] {
             return rank3("NonPappus", "non-Pappus", 9, {"456", "123", "247", "359", "348", "168", "157", "269"},
                          "no", "no", "no");
         }},
        {"NonPappus_del1",
         [] {
             CatalogEntry e = rank3("NonPappus", "non-Pappus", 9,
                                    {"456", "123", "247", "359", "348", "168", "157", "269"}, "unknown", "no",
                                    "no");
             e.name = "NonPappus_del1";
             e.title = "non-Pappus \\ 1";
             e.matroid = delete_element(e.matroid, 0);
             e.labels.erase(e.labels.begin());
             return e;
         }},
        {"NonPappus_del9",
         [] {
             CatalogEntry e = rank3("NonPappus", "non-Pappus", 9,
                                    {"456", "123", "247", "359", "348", "168", "157", "269"}, "unknown", "no",
                                    "no");
             e.name = "NonPappus_del9";
             e.title = "non-Pappus \\ 9";
             e.matroid = delete_element(e.matroid, 8);
             e.labels.pop_back();
             return e;
         }},
        {"NonPappus_del9_pe",
         [] {
             CatalogEntry e = rank3("NonPappus_del9_pe", "(non-Pappus \\ 9)+e", 9,
                                    {"456", "123", "247", "348", "168", "157"}, "no", "no", "no");
             e.note = "element 9 is the freely added point";
             return e;
         }},
        {"P8",
         [] {
             CatalogEntry e;
             e.name = "P8";
             e.title = "P8";
             e.matroid = rank4_on8_except(
                 {"1238", "1247", "1346", "2345", "1458", "2367", "1567", "2568", "3578", "4678"});
             e.labels = one_based(8);
             e.hpp = "no";
             e.nice = e.conice = "no";
             return e;
         }},
        {"P8p",
         [] {
             CatalogEntry e;
             e.name = "P8p";
             e.title = "P8'";
             e.matroid =
                 rank4_on8_except({"1238", "1247", "1346", "2345", "2367", "1567", "2568", "3578", "4678"});
             e.labels = one_based(8);
             e.hpp = "no";
             e.nice = e.conice = "no";
             e.note = "P8 with circuit-hyperplane 1458 relaxed";
             return e;
         }},
        {"P8pp",
         [] {
             CatalogEntry e;
             e.name = "P8pp";
             e.title = "P8''";
             e.matroid = rank4_on8_except({"1238", "1247", "1346", "2345", "1567", "2568", "3578", "4678"});
             e.labels = one_based(8);
             e.hpp = "no";
             e.nice = e.conice = "no";
             e.note = "P8 with circuit-hyperplanes 1458 and 2367 relaxed";
             return e;
         }},
        {"V8",
         [] {
             CatalogEntry e;
             e.name = "V8";
             e.title = "Vamos";
             e.matroid = rank4_on8_except({"1234", "1256", "1278", "3456", "3478"});
             e.labels = one_based(8);
             e.hpp = "unknown";
             e.nice = e.conice = "no";
             e.note = "pairs 12, 34, 56, 78; the pair unions 12+34, 12+56, 12+78, 34+56, 34+78 are dependent";
             return e;
         }},
    };
    return table;
}

const std::map<std::string, std::string>& aliases()
{
    static const std::map<std::string, std::string> a = {
        {"P7ppe", "P7pe"}, {"U36", "U_{3,6}"}, {"Vamos", "V8"}, {"K4", "MK4"},
    };
    return a;
}

std::vector<int> parse_ints(const std::string& s)
{
    std::vector<int> out;
    std::size_t i = 0;
    while (i < s.size()) {
        std::size_t j = s.find_first_of(",;", i);
        if (j == std::string::npos)
            j = s.size();
        out.push_back(std::stoi(s.substr(i, j - i)));
        i = j + 1;
    }
    return out;
}

// Allocates consecutive element ids while lines are laid out.
struct Layout {
    int next = 0;
    std::vector<std::vector<int>> lines;
    std::vector<int> fresh(int k)
    {
        std::vector<int> v;
        for (int i = 0; i < k; ++i)
            v.push_back(next++);
        return v;
    }
};

void need(bool ok, const std::string& name, const char* why)
{
    if (!ok)
        throw std::invalid_argument("catalog: " + name + ": " + why);
}

CatalogEntry family_entry(const std::string& name, char fam, const std::vector<int>& args)
{
    CatalogEntry e;
    e.name = name;
    e.title = name;
    Layout lay;
    auto line_with = [&](std::vector<int> fixed, int total) {
        auto rest = lay.fresh(total - int(fixed.size()));
        fixed.insert(fixed.end(), rest.begin(), rest.end());
        lay.lines.push_back(fixed);
    };
    int free_pts = 0;
    switch (fam) {
    case 'C': {
        need(args.size() == 4, name, "expects C_{n1,n2,n3;n'}");
        need(args[0] >= 2 && args[1] >= 2 && args[2] >= 2, name, "line sizes must be at least 2");
        lay.fresh(3);
        line_with({0, 1}, args[0]);
        line_with({1, 2}, args[1]);
        line_with({2, 0}, args[2]);
        free_pts = args[3];
        bool smallest = args[0] == 3 && args[1] == 3 && args[2] == 3 && args[3] == 0;
        e.hpp = smallest ? "yes" : "unknown";
        e.nice = "no";
        e.note = "elements 0,1,2 are the simplex vertices";
        break;
    }
    case 'D': {
        need(args.size() == 3, name, "expects D_{n1,n2;n'}");
        need(args[0] >= 3 && args[1] >= 3, name, "line sizes must be at least 3");
        lay.fresh(1);
        line_with({0}, args[0]);
        line_with({0}, args[1]);
        free_pts = args[2];
        e.nice = args[2] <= 1 ? "yes" : "no";
        e.note = "element 0 is the common point";
        break;
    }
    case 'E': {
        need(args.size() == 4, name, "expects E_{n1,n2,n3;n'}");
        need(args[0] >= 3 && args[1] >= 3 && args[2] >= 3, name, "line sizes must be at least 3");
        lay.fresh(2);
        line_with({0, 1}, args[1]);
        line_with({0}, args[0]);
        line_with({1}, args[2]);
        free_pts = args[3];
        e.nice = "no";
        e.note = "elements 0 and 1 are where the outer lines meet the middle line";
        break;
    }
    case 'F': {
        need(args.size() == 4, name, "expects F_{n1,n2,n3;n'}");
        need(args[0] >= 3 && args[1] >= 3 && args[2] >= 3, name, "line sizes must be at least 3");
        lay.fresh(1);
        line_with({0}, args[0]);
        line_with({0}, args[1]);
        line_with({}, args[2]);
        free_pts = args[3];
        e.nice = "no";
        e.note = "element 0 is the common point of the first two lines";
        break;
    }
    case 'L': {
        need(args.size() >= 2 && args.size() <= 4, name, "expects L_{n1,...;n'}");
        for (std::size_t i = 0; i + 1 < args.size(); ++i) {
            need(args[i] >= 3, name, "line sizes must be at least 3");
            line_with({}, args[i]);
        }
        free_pts = args.back();
        const int lines = int(args.size()) - 1;
        const int cap = lines == 3 ? 0 : (lines == 2 ? 2 : 4);
        e.nice = free_pts <= cap ? "yes" : "no";
        break;
    }
    default:
        throw std::invalid_argument("catalog: unknown family in " + name);
    }
    need(free_pts >= 0, name, "free point count must be non-negative");
    lay.fresh(free_pts);
    e.matroid = rank3_from_lines(lay.next, lay.lines);
    e.labels = zero_based(lay.next);
    if (e.nice == "yes")
        e.hpp = "yes";
    return e;
}

CatalogEntry m_family(const std::string& name, int n1, int n2)
{
    need(n1 >= 2 && n2 >= 2, name, "needs n1, n2 >= 2");
    const int n = n1 + n2 + 2;
    std::vector<int> l1, l2{0};
    for (int i = 0; i <= n1; ++i)
        l1.push_back(i);
    for (int i = n1 + 1; i <= n1 + n2; ++i)
        l2.push_back(i);
    CatalogEntry e;
    e.name = name;
    e.title = name;
    e.matroid = rank3_from_lines(n, {l1, l2});
    e.labels = zero_based(n);
    e.hpp = "yes";
    e.nice = "yes";
    Presentation p;
    p.n = n;
    Mask ax = 0, ay = 0, az = 0;
    for (int i = 0; i <= n1 + n2; ++i)
        ax |= bit(i);
    for (int i = 1; i <= n1; ++i)
        ay |= bit(i);
    ay |= bit(n1 + n2 + 1);
    for (int i = n1 + 1; i <= n1 + n2 + 1; ++i)
        az |= bit(i);
    p.sets = {ax, ay, az};
    e.presentation = p;
    return e;
}

CatalogEntry n_family(const std::string& name, int k)
{
    need(k >= 1 && 2 * k + 1 <= kMaxGround, name, "needs k >= 1");
    Presentation p;
    p.n = 2 * k + 1;
    Mask a0 = bit(0) | bit(2 * k);
    for (int j = 1; j <= k; ++j)
        a0 |= bit(2 * j - 1);
    p.sets.push_back(a0);
    for (int j = 1; j <= k; ++j)
        p.sets.push_back(bit(2 * j - 2) | bit(2 * j - 1) | bit(2 * j));
    CatalogEntry e;
    e.name = name;
    e.title = name;
    e.matroid = transversal_matroid(p);
    e.labels = one_based(p.n);
    e.hpp = "yes";
    e.nice = "yes";
    e.presentation = p;
    return e;
}

}  // namespace

CatalogEntry catalog_entry(const std::string& raw)
{
    std::string name = raw;
    if (auto it = aliases().find(name); it != aliases().end())
        name = it->second;
    if (auto it = fixed_table().find(name); it != fixed_table().end())
        return it->second();

    static const std::regex uni(R"(U_\{(\d+),(\d+)\})");
    static const std::regex fam(R"(([CDEFL])_\{([0-9,]+;[0-9]+)\})");
    static const std::regex mfam(R"(M_\{(\d+),(\d+)\})");
    static const std::regex nfam(R"(N_\{?(\d+)\}?)");
    std::smatch m;
    if (std::regex_match(name, m, uni)) {
        int r = std::stoi(m[1]), n = std::stoi(m[2]);
        need(r >= 0 && r <= n && n <= kMaxGround, name, "needs 0 <= r <= n");
        CatalogEntry e;
        e.name = name;
        e.title = name;
        e.matroid = Matroid::uniform(r, n);
        e.labels = one_based(n);
        e.hpp = e.nice = e.conice = "yes";
        return e;
    }
    if (std::regex_match(name, m, fam))
        return family_entry(name, m[1].str()[0], parse_ints(m[2]));
    if (std::regex_match(name, m, mfam))
        return m_family(name, std::stoi(m[1]), std::stoi(m[2]));
    if (std::regex_match(name, m, nfam))
        return n_family(name, std::stoi(m[1]));
    throw std::invalid_argument("catalog: unknown matroid '" + raw + "'");
}

Matroid catalog(const std::string& name) { return catalog_entry(name).matroid; }

std::vector<std::string> catalog_names()
{
    std::vector<std::string> out;
    for (const auto& [k, v] : fixed_table())
        out.push_back(k);
    return out;
}

std::vector<std::string> catalog_families()
{
    return {"U_{r,n}",        "C_{n1,n2,n3;n'}", "D_{n1,n2;n'}", "E_{n1,n2,n3;n'}", "F_{n1,n2,n3;n'}",
            "L_{n1,n2,n3;n'}", "L_{n1,n2;n'}",    "L_{n1;n'}",    "M_{n1,n2}",       "N_k"};
}

}  // namespace hpl
