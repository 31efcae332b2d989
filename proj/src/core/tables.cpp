#include "core/tables.hpp"

#include <stdexcept>

#include "json.hpp"

namespace symtrace {

std::vector<std::pair<Partition, TracePolynomial>> ch_table_rows(int k) {
    if (k < 2 || k > 5) throw std::invalid_argument("tables support 2 <= k <= 5");
    std::vector<std::pair<Partition, TracePolynomial>> rows;
    for (const auto& lam : partitions(k)) {
        if (lam.num_parts() < 2) continue;
        rows.emplace_back(lam, polarized_ch_map(lam));
    }
    return rows;
}

std::string ch_table_text(int k) {
    std::string s = "k=" + std::to_string(k) + "\n";
    for (const auto& [lam, f] : ch_table_rows(k))
        s += lam.str() + "  " + pretty_print(f) + "\n";
    return s;
}

std::string ch_table_json(int k) {
    nlohmann::json j;
    j["k"] = k;
    j["rows"] = nlohmann::json::array();
    for (const auto& [lam, f] : ch_table_rows(k)) {
        nlohmann::json row;
        row["partition"] = lam.parts();
        row["text"] = pretty_print(f);
        row["terms"] = nlohmann::json::parse(f.to_json())["terms"];
        j["rows"].push_back(row);
    }
    return j.dump();
}

}  // namespace symtrace
