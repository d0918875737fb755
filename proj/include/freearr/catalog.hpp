#pragma once

#include <string>
#include <vector>

#include "freearr/arrangement.hpp"

namespace freearr {

// The rank-7 subarrangement of the E7 Weyl arrangement and its relatives,
// in the coordinates of the shipped data files.
Arrangement arr_A();
Arrangement arr_B();    // A minus ker(x3 + x4)
Arrangement arr_C();    // rank-5 arrangement in its own coordinates
Arrangement arr_D();    // C minus ker(x1 + x2)
Arrangement arr_Dpp();  // D restricted to ker(x4)

// Distinguished flats.
Flat flat_Z();  // of A: ker(x1) meet ker(x1+x2+2x3+2x4+2x5+x6)
Flat flat_X();  // of B: ker(x1) meet ker(x6)
Flat flat_Y();  // of B: ker(x1) meet ker(x1+x2+2x3+2x4+2x5+x6) meet ker(x6)

// Positive roots of E7 in simple-root coordinates, generated from the
// Cartan matrix; 63 hyperplanes in dimension 7.
Arrangement e7_positive_roots();

// Non-free triple in dimension 4 with Q = wxyz(x+y)(x+z)(x-z)(y-z)(y+z)(x+y-z)(w+x-y),
// taken at ker(x+y-z).
Triple example_4_1();

// Embed `base` (which must contain a coordinate hyperplane ker(x_i); the
// smallest such i serves as x) one dimension up with new last coordinate z,
// add ker(z), ker(x-z), ..., ker(mx-z), and take the triple at ker(mx-z).
Triple example_4_2(const Arrangement& base, int m);

// Shipped text blobs: arrangements ("a", "b", "c", "d", "dpp", "e7") for the
// CLI catalog, plus induction tables and chains ("a.table", "c.table",
// "b.chain", "d.chain").
std::vector<std::string> catalog_names();
std::string catalog_text(const std::string& name);
Arrangement catalog_get(const std::string& name);

}  // namespace freearr
