#include "stperm/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#ifndef STPERM_DEFAULT_CATALOG_DIR
#define STPERM_DEFAULT_CATALOG_DIR "data/catalog"
#endif

namespace stperm {

namespace fs = std::filesystem;

std::string catalog_dir() {
    if (const char* env = std::getenv("STPERM_CATALOG_DIR")) return env;
    return STPERM_DEFAULT_CATALOG_DIR;
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    fs::path dir(catalog_dir());
    if (!fs::is_directory(dir)) return names;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".grp")
            names.push_back(entry.path().stem().string());
    std::sort(names.begin(), names.end());
    return names;
}

GroupPtr group_from_generators(const std::vector<std::vector<int>>& gens) {
    return FiniteGroup::from_permutations(gens);
}

GroupPtr load_group_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open group file: " + path);

    std::string name;
    long declared_order = -1;
    std::vector<std::vector<int>> rows;
    enum { None, Generators, Table } mode = None;
    int expected_rows = 0;

    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;

        if (mode != None && static_cast<int>(rows.size()) < expected_rows) {
            // Numeric data row.
            std::vector<int> row;
            std::istringstream rs(line);
            int v;
            while (rs >> v) row.push_back(v);
            if (!rs.eof()) throw ValidationError(path + ": non-numeric data row");
            rows.push_back(std::move(row));
            continue;
        }

        if (first == "name") {
            ls >> name;
        } else if (first == "order") {
            ls >> declared_order;
        } else if (first == "generators" || first == "table") {
            if (mode != None) throw ValidationError(path + ": duplicate data section");
            if (!(ls >> expected_rows) || expected_rows <= 0)
                throw ValidationError(path + ": bad row count after '" + first + "'");
            mode = first == "generators" ? Generators : Table;
        } else {
            throw ValidationError(path + ": unknown field '" + first + "'");
        }
    }

    if (mode == None) throw ValidationError(path + ": missing 'generators' or 'table' section");
    if (static_cast<int>(rows.size()) != expected_rows)
        throw ValidationError(path + ": expected " + std::to_string(expected_rows) +
                              " data rows, got " + std::to_string(rows.size()));

    GroupPtr g;
    if (mode == Generators) {
        g = FiniteGroup::from_permutations(rows);
    } else {
        g = FiniteGroup::from_table(rows);
    }
    if (declared_order >= 0 && g->order() != declared_order)
        throw ValidationError(path + ": declared order " + std::to_string(declared_order) +
                              " but built a group of order " + std::to_string(g->order()));
    return g;
}

GroupPtr catalog(const std::string& name) {
    if (name.find('/') != std::string::npos || name.find('\\') != std::string::npos ||
        name.find("..") != std::string::npos)
        throw std::invalid_argument("catalog: invalid group name '" + name + "'");
    fs::path file = fs::path(catalog_dir()) / (name + ".grp");
    if (!fs::is_regular_file(file))
        throw std::invalid_argument("catalog: unknown group '" + name + "' (no file " +
                                    file.string() + ")");
    return load_group_file(file.string());
}

} // namespace stperm
