#include "permcode/report.hpp"

#include <sstream>

namespace permcode {

nlohmann::json table_json(const PairTable& table) {
    nlohmann::json counts = nlohmann::json::array();
    for (const auto& [key, count] : table.counts) counts.push_back({{"d", key.first}, {"e", key.second}, {"count", count}});
    return {
        {"n", table.n},
        {"total", table.total()},
        {"matrix", dense_matrix(table)},
        {"counts", counts},
        {"polynomial", format_polynomial(table)},
    };
}

nlohmann::json to_json(const Report& report) {
    nlohmann::json j{
        {"n", report.n},
        {"check", report.check},
        {"pass", report.pass},
        {"cases", report.cases},
    };
    if (report.counterexample) j["counterexample"] = *report.counterexample;
    if (report.table) j["table"] = table_json(*report.table);
    nlohmann::json details = nlohmann::json::array();
    for (const auto& d : report.details) {
        nlohmann::json item{{"name", d.name}, {"pass", d.pass}};
        if (d.counterexample) item["counterexample"] = *d.counterexample;
        details.push_back(std::move(item));
    }
    j["details"] = std::move(details);
    return j;
}

std::string table_text(const PairTable& table) {
    std::ostringstream out;
    const auto m = dense_matrix(table);
    out << "n=" << table.n << " total=" << table.total() << "\n";
    out << "rows d (des/asc), columns e (ides/row)\n";
    for (const auto& row : m) {
        for (std::size_t e = 0; e < row.size(); ++e) out << (e ? " " : "") << row[e];
        out << '\n';
    }
    out << "A(u,v) = " << format_polynomial(table) << '\n';
    return out.str();
}

std::string to_text(const Report& report) {
    std::ostringstream out;
    out << report.check << " n=" << report.n << ": " << (report.pass ? "PASS" : "FAIL") << " (" << report.cases
        << " cases)\n";
    for (const auto& d : report.details) {
        out << "  [" << (d.pass ? "pass" : "FAIL") << "] " << d.name << '\n';
        if (d.counterexample) out << "         " << *d.counterexample << '\n';
    }
    if (report.table) out << table_text(*report.table);
    return out.str();
}

Report table_report(const PairTable& table, Side side) {
    Report r;
    r.n = table.n;
    r.check = side == Side::Perms ? "double_eulerian:perms" : "double_eulerian:seqs";
    r.cases = table.total();
    const bool sums = table.total() == factorial(table.n);
    r.details.push_back({"table sums to n!", sums,
                         sums ? std::nullopt
                              : std::optional<std::string>("sum " + std::to_string(table.total()))});
    r.pass = sums;
    if (!sums) r.counterexample = r.details.back().counterexample;
    r.table = table;
    return r;
}

}  // namespace permcode
