#pragma once

#include "hpl/matroid.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hpl {

// Known status values: "yes", "no", "unknown".
struct CatalogEntry {
    std::string name;
    std::string title;
    Matroid matroid;
    // labels[i] is the figure label of element i.
    std::vector<std::string> labels;
    std::string hpp = "unknown";
    std::string nice = "unknown";    // nice transversal
    std::string conice = "unknown";  // co-nice cotransversal
    std::optional<Presentation> presentation;
    std::string note;
};

// Accepts fixed names (F7, P8, ...), U_{r,n}, and the families
// C_{a,b,c;k}, D_{a,b;k}, E_{a,b,c;k}, F_{a,b,c;k}, L_{a,b,c;k}, L_{a,b;k},
// L_{a;k}, M_{a,b}, N_k. Throws std::invalid_argument for unknown names.
CatalogEntry catalog_entry(const std::string& name);
Matroid catalog(const std::string& name);

std::vector<std::string> catalog_names();
std::vector<std::string> catalog_families();

// Rank-3 matroid whose only dependent triples lie on the given lines.
Matroid rank3_from_lines(int n, const std::vector<std::vector<int>>& lines);

}  // namespace hpl
