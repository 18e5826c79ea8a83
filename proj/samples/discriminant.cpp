// Homology of the discriminant in projectivized binary forms, next to the closed form.
#include <iostream>

#include "stratahom/stratahom.hpp"

using namespace stratahom;

int main(int argc, char** argv) {
    int dmax = argc > 1 ? std::stoi(argv[1]) : 8;
    for (int d = 2; d <= dmax; ++d) {
        auto h = homology_B(d, PosetFamily::disc(), true);
        auto e = discriminant_oracle(d);
        std::cout << "d=" << d << ":";
        for (int j = 0; j <= d; ++j)
            if (!h.at(j).is_zero()) std::cout << "  H~_" << j << " = " << h.at(j).to_string();
        std::cout << (h == e ? "  (closed form agrees)" : "  (closed form DISAGREES)") << "\n";
    }
}
