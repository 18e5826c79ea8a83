// Compare H_{j+2} at d+2 with H_j at d for the triple-root family.
#include <iostream>

#include "stratahom/stratahom.hpp"

using namespace stratahom;

int main(int argc, char** argv) {
    int d = argc > 1 ? std::stoi(argv[1]) : 7;
    auto r = stability_report(PosetFamily::max_ge(3), d, Variant::proj);
    std::cout << "max-ge:3, d=" << d << ", psi(d+2)=" << *r.psi_upper << "\n";
    for (auto& row : r.rows)
        std::cout << "  j=" << row.j << "  " << row.upper.to_string() << " vs " << row.lower.to_string()
                  << (row.guaranteed ? "  [zone]" : "") << (row.isomorphic ? "" : "  differs") << "\n";
    return r.violations().empty() ? 0 : 1;
}
