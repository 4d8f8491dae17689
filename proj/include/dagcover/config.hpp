#pragma once

#include <cstdlib>

namespace dagcover {

// Budget constants for the size bounds the constructions are checked
// against. c1: paths per vertex (x log n log Phi), c2: portals per
// covering set (x 1/eps), c3: |X_v| (x eps^-1 log Phi log^2 n),
// c4: planar cover extra edges (x n eps^-1 log^2 n log Phi).
struct BudgetConstants {
    double c1 = 8.0;
    double c2 = 8.0;
    double c3 = 8.0;
    double c4 = 8.0;

    // Environment overrides: DAGCOVER_C1 .. DAGCOVER_C4.
    static BudgetConstants from_env() {
        BudgetConstants b;
        if (const char* s = std::getenv("DAGCOVER_C1")) b.c1 = std::atof(s);
        if (const char* s = std::getenv("DAGCOVER_C2")) b.c2 = std::atof(s);
        if (const char* s = std::getenv("DAGCOVER_C3")) b.c3 = std::atof(s);
        if (const char* s = std::getenv("DAGCOVER_C4")) b.c4 = std::atof(s);
        return b;
    }
};

}  // namespace dagcover
