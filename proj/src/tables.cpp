#include "tables.hpp"

namespace so5cg::detail {

namespace {

// (jb1, jb2) x (1,1) -> (jb1 + 1, jb2 + 1)
const std::array<TableRow, 14> kRaise11{{
    {2, 2, 2, "1/4", "1", "1",
     "(j1 + j2 - jb1 + jb2 + 1)*(j1 - j2 + jb1 + jb2 + 2)*(-j1 + j2 + jb1 + jb2 + 2)*(j1 + j2 + jb1 - jb2 + 2)*(j1 + j2 - jb1 + jb2 + 2)*(j1 + j2 + jb1 + jb2 + 3)*(j1 - j2 + jb1 + jb2 + 3)*(-j1 + j2 + jb1 + jb2 + 3)*(j1 + j2 + jb1 - jb2 + 3)*(j1 + j2 + jb1 + jb2 + 4)*(j1 + j2 + jb1 + jb2 + 5)*(j1 + j2 + jb1 + jb2 + 6)",
     "(j1 + 1)*(j2 + 1)*(2*j1 + 3)*(2*j2 + 3)"},
    {-2, -2, 2, "1/4", "1", "1",
     "(j1 + j2 + jb1 - jb2)*(j1 + j2 - jb1 + jb2)*(-j1 - j2 + jb1 + jb2 + 1)*(j1 + j2 + jb1 - jb2 + 1)*(j1 + j2 - jb1 + jb2 - 1)*(j1 - j2 + jb1 + jb2 + 2)*(-j1 + j2 + jb1 + jb2 + 2)*(-j1 - j2 + jb1 + jb2 + 2)*(j1 - j2 + jb1 + jb2 + 3)*(-j1 + j2 + jb1 + jb2 + 3)*(-j1 - j2 + jb1 + jb2 + 3)*(-j1 - j2 + jb1 + jb2 + 4)",
     "j1*j2*(2*j1 - 1)*(2*j2 - 1)"},
    {-2, 2, 2, "1/4", "1", "1",
     "(j1 - j2 + jb1 - jb2)*(-j1 - j2 + jb1 + jb2 + 1)*(-j1 + j2 + jb1 - jb2 + 1)*(j1 - j2 + jb1 - jb2 - 1)*(-j1 + j2 + jb1 + jb2 + 2)*(-j1 - j2 + jb1 + jb2 + 2)*(-j1 + j2 + jb1 - jb2 + 2)*(j1 + j2 + jb1 + jb2 + 3)*(-j1 + j2 + jb1 + jb2 + 3)*(j1 + j2 + jb1 + jb2 + 4)*(-j1 + j2 + jb1 + jb2 + 4)*(-j1 + j2 + jb1 + jb2 + 5)",
     "j1*(2*j1 - 1)*(2*j2^2 + 5*j2 + 3)"},
    {2, -2, 2, "1/4", "1", "1",
     "(-j1 + j2 + jb1 - jb2)*(-j1 - j2 + jb1 + jb2 + 1)*(j1 - j2 + jb1 - jb2 + 1)*(-j1 + j2 + jb1 - jb2 - 1)*(j1 - j2 + jb1 + jb2 + 2)*(-j1 - j2 + jb1 + jb2 + 2)*(j1 - j2 + jb1 - jb2 + 2)*(j1 + j2 + jb1 + jb2 + 3)*(j1 - j2 + jb1 + jb2 + 3)*(j1 + j2 + jb1 + jb2 + 4)*(j1 - j2 + jb1 + jb2 + 4)*(j1 - j2 + jb1 + jb2 + 5)",
     "j2*(2*j2 - 1)*(2*j1^2 + 5*j1 + 3)"},
    {2, 0, 2, "1/4", "1", "1",
     "(-j1 + j2 + jb1 - jb2)*(-j1 - j2 + jb1 + jb2 + 1)*(j1 - j2 + jb1 - jb2 + 1)*(j1 + j2 - jb1 + jb2 + 1)*(j1 - j2 + jb1 + jb2 + 2)*(-j1 + j2 + jb1 + jb2 + 2)*(j1 + j2 + jb1 - jb2 + 2)*(j1 + j2 + jb1 + jb2 + 3)*(j1 - j2 + jb1 + jb2 + 3)*(j1 + j2 + jb1 + jb2 + 4)*(j1 - j2 + jb1 + jb2 + 4)*(j1 + j2 + jb1 + jb2 + 5)",
     "j2*(j1 + 1)*(j2 + 1)*(2*j1 + 3)"},
    {-2, 0, 2, "-1/4", "1", "1",
     "(j1 - j2 + jb1 - jb2)*(j1 + j2 - jb1 + jb2)*(-j1 - j2 + jb1 + jb2 + 1)*(j1 + j2 + jb1 - jb2 + 1)*(-j1 + j2 + jb1 - jb2 + 1)*(j1 - j2 + jb1 + jb2 + 2)*(-j1 + j2 + jb1 + jb2 + 2)*(-j1 - j2 + jb1 + jb2 + 2)*(j1 + j2 + jb1 + jb2 + 3)*(-j1 + j2 + jb1 + jb2 + 3)*(-j1 - j2 + jb1 + jb2 + 3)*(-j1 + j2 + jb1 + jb2 + 4)",
     "j1*j2*(j2 + 1)*(2*j1 - 1)"},
    {0, 2, 2, "1/4", "1", "1",
     "(j1 - j2 + jb1 - jb2)*(-j1 - j2 + jb1 + jb2 + 1)*(-j1 + j2 + jb1 - jb2 + 1)*(j1 + j2 - jb1 + jb2 + 1)*(j1 - j2 + jb1 + jb2 + 2)*(-j1 + j2 + jb1 + jb2 + 2)*(j1 + j2 + jb1 - jb2 + 2)*(j1 + j2 + jb1 + jb2 + 3)*(-j1 + j2 + jb1 + jb2 + 3)*(j1 + j2 + jb1 + jb2 + 4)*(-j1 + j2 + jb1 + jb2 + 4)*(j1 + j2 + jb1 + jb2 + 5)",
     "j1*(j1 + 1)*(j2 + 1)*(2*j2 + 3)"},
    {0, -2, 2, "-1/4", "1", "1",
     "(-j1 + j2 + jb1 - jb2)*(j1 + j2 - jb1 + jb2)*(-j1 - j2 + jb1 + jb2 + 1)*(j1 + j2 + jb1 - jb2 + 1)*(j1 - j2 + jb1 - jb2 + 1)*(j1 - j2 + jb1 + jb2 + 2)*(-j1 + j2 + jb1 + jb2 + 2)*(-j1 - j2 + jb1 + jb2 + 2)*(j1 + j2 + jb1 + jb2 + 3)*(j1 - j2 + jb1 + jb2 + 3)*(-j1 - j2 + jb1 + jb2 + 3)*(j1 - j2 + jb1 + jb2 + 4)",
     "j1*j2*(j1 + 1)*(2*j2 - 1)"},
    {0, 0, 2, "-1/4", "1", "(j1^2 + j1 + j2^2 + j2 - jb1^2 + 2*jb1*jb2 - jb1 - jb2^2 + jb2)",
     "(-j1 - j2 + jb1 + jb2 + 1)*(j1 - j2 + jb1 + jb2 + 2)*(-j1 + j2 + jb1 + jb2 + 2)*(-j1 - j2 + jb1 + jb2 + 2)*(j1 + j2 + jb1 + jb2 + 3)*(j1 - j2 + jb1 + jb2 + 3)*(-j1 + j2 + jb1 + jb2 + 3)*(j1 + j2 + jb1 + jb2 + 4)",
     "j1*j2*(j1 + 1)*(j2 + 1)"},
    {1, 1, 1, "1/2", "1", "1",
     "(-j1 - j2 + jb1 + jb2 + 1)*(j1 + j2 - jb1 + jb2 + 1)*(j1 - j2 + jb1 + jb2 + 2)*(-j1 + j2 + jb1 + jb2 + 2)*(j1 + j2 + jb1 - jb2 + 2)*(j1 + j2 + jb1 + jb2 + 3)*(j1 - j2 + jb1 + jb2 + 3)*(-j1 + j2 + jb1 + jb2 + 3)*(j1 + j2 + jb1 + jb2 + 4)*(j1 + j2 + jb1 + jb2 + 5)",
     "(j1 + 1)*(j2 + 1)"},
    {-1, -1, 1, "-1/2", "1", "1",
     "(j1 + j2 - jb1 + jb2)*(-j1 - j2 + jb1 + jb2 + 1)*(j1 + j2 + jb1 - jb2 + 1)*(j1 - j2 + jb1 + jb2 + 2)*(-j1 + j2 + jb1 + jb2 + 2)*(-j1 - j2 + jb1 + jb2 + 2)*(j1 + j2 + jb1 + jb2 + 3)*(j1 - j2 + jb1 + jb2 + 3)*(-j1 + j2 + jb1 + jb2 + 3)*(-j1 - j2 + jb1 + jb2 + 3)",
     "j1*j2"},
    {1, -1, 1, "1/2", "1", "1",
     "(-j1 + j2 + jb1 - jb2)*(-j1 - j2 + jb1 + jb2 + 1)*(j1 - j2 + jb1 - jb2 + 1)*(j1 - j2 + jb1 + jb2 + 2)*(-j1 + j2 + jb1 + jb2 + 2)*(-j1 - j2 + jb1 + jb2 + 2)*(j1 + j2 + jb1 + jb2 + 3)*(j1 - j2 + jb1 + jb2 + 3)*(j1 + j2 + jb1 + jb2 + 4)*(j1 - j2 + jb1 + jb2 + 4)",
     "j2*(j1 + 1)"},
    {-1, 1, 1, "1/2", "1", "1",
     "(j1 - j2 + jb1 - jb2)*(-j1 - j2 + jb1 + jb2 + 1)*(-j1 + j2 + jb1 - jb2 + 1)*(j1 - j2 + jb1 + jb2 + 2)*(-j1 + j2 + jb1 + jb2 + 2)*(-j1 - j2 + jb1 + jb2 + 2)*(j1 + j2 + jb1 + jb2 + 3)*(-j1 + j2 + jb1 + jb2 + 3)*(j1 + j2 + jb1 + jb2 + 4)*(-j1 + j2 + jb1 + jb2 + 4)",
     "j1*(j2 + 1)"},
    {0, 0, 0, "1/2", "5", "1",
     "(-j1 - j2 + jb1 + jb2 + 1)*(j1 - j2 + jb1 + jb2 + 2)*(-j1 + j2 + jb1 + jb2 + 2)*(-j1 - j2 + jb1 + jb2 + 2)*(j1 + j2 + jb1 + jb2 + 3)*(j1 - j2 + jb1 + jb2 + 3)*(-j1 + j2 + jb1 + jb2 + 3)*(j1 + j2 + jb1 + jb2 + 4)",
     "1"},
}};

// (jb1, jb2) x (1,1) -> (jb1 + 1, jb2)
const std::array<TableRow, 14> kRaise10{{
    {2, 2, 2, "-1/4", "1", "1",
     "(-j1 - j2 + jb1 + jb2)*(j1 - j2 + jb1 - jb2 + 1)*(-j1 + j2 + jb1 - jb2 + 1)*(j1 + j2 - jb1 + jb2 + 1)*(j1 - j2 + jb1 + jb2 + 2)*(-j1 + j2 + jb1 + jb2 + 2)*(j1 + j2 + jb1 - jb2 + 2)*(j1 + j2 + jb1 + jb2 + 3)*(j1 + j2 + jb1 - jb2 + 3)*(j1 + j2 + jb1 + jb2 + 4)*(j1 + j2 + jb1 - jb2 + 4)*(j1 + j2 + jb1 + jb2 + 5)",
     "(j1 + 1)*(j2 + 1)*(2*j1 + 3)*(2*j2 + 3)"},
    {-2, -2, 2, "1/4", "1", "1",
     "(j1 + j2 - jb1 + jb2)*(-j1 - j2 + jb1 + jb2 + 1)*(j1 + j2 + jb1 - jb2 + 1)*(j1 - j2 + jb1 - jb2 + 1)*(-j1 + j2 + jb1 - jb2 + 1)*(j1 + j2 - jb1 + jb2 - 1)*(j1 + j2 - jb1 + jb2 - 2)*(j1 + j2 + jb1 + jb2 + 2)*(j1 - j2 + jb1 + jb2 + 2)*(-j1 + j2 + jb1 + jb2 + 2)*(-j1 - j2 + jb1 + jb2 + 2)*(-j1 - j2 + jb1 + jb2 + 3)",
     "j1*j2*(2*j1 - 1)*(2*j2 - 1)"},
    {-2, 2, 2, "1/4", "1", "1",
     "(j1 - j2 + jb1 - jb2)*(j1 + j2 - jb1 + jb2)*(j1 - j2 + jb1 + jb2 + 1)*(-j1 - j2 + jb1 + jb2 + 1)*(-j1 + j2 + jb1 - jb2 + 1)*(-j1 + j2 + jb1 + jb2 + 2)*(j1 + j2 + jb1 - jb2 + 2)*(-j1 + j2 + jb1 - jb2 + 2)*(j1 + j2 + jb1 + jb2 + 3)*(-j1 + j2 + jb1 + jb2 + 3)*(-j1 + j2 + jb1 - jb2 + 3)*(-j1 + j2 + jb1 + jb2 + 4)",
     "j1*(2*j1 - 1)*(2*j2^2 + 5*j2 + 3)"},
    {2, -2, 2, "1/4", "1", "1",
     "(-j1 + j2 + jb1 - jb2)*(j1 + j2 - jb1 + jb2)*(-j1 + j2 + jb1 + jb2 + 1)*(-j1 - j2 + jb1 + jb2 + 1)*(j1 - j2 + jb1 - jb2 + 1)*(j1 - j2 + jb1 + jb2 + 2)*(j1 + j2 + jb1 - jb2 + 2)*(j1 - j2 + jb1 - jb2 + 2)*(j1 + j2 + jb1 + jb2 + 3)*(j1 - j2 + jb1 + jb2 + 3)*(j1 - j2 + jb1 - jb2 + 3)*(j1 - j2 + jb1 + jb2 + 4)",
     "j2*(2*j2 - 1)*(2*j1^2 + 5*j1 + 3)"},
    {2, 0, 2, "1/4", "1", "(-j1^2 + j1*(2*jb1 + 1) + j2^2 + j2 - jb1^2 - jb1 + jb2^2 + jb2)",
     "(j1 - j2 + jb1 - jb2 + 1)*(j1 - j2 + jb1 + jb2 + 2)*(j1 + j2 + jb1 - jb2 + 2)*(j1 - j2 + jb1 - jb2 + 2)*(j1 + j2 + jb1 + jb2 + 3)*(j1 - j2 + jb1 + jb2 + 3)*(j1 + j2 + jb1 - jb2 + 3)*(j1 + j2 + jb1 + jb2 + 4)",
     "j2*(j2 + 1)*(2*j1^2 + 5*j1 + 3)"},
    {-2, 0, 2, "-1/4", "1", "(2*j2*jb2 + (j1 - j2 + jb1 - jb2 + 1)*(j1 + j2 + jb1 + jb2 + 2))",
     "(j1 + j2 - jb1 + jb2)*(-j1 - j2 + jb1 + jb2 + 1)*(-j1 + j2 + jb1 - jb2 + 1)*(j1 + j2 - jb1 + jb2 - 1)*(-j1 + j2 + jb1 + jb2 + 2)*(-j1 - j2 + jb1 + jb2 + 2)*(-j1 + j2 + jb1 - jb2 + 2)*(-j1 + j2 + jb1 + jb2 + 3)",
     "j1*j2*(j2 + 1)*(2*j1 - 1)"},
    {0, 2, 2, "1/4", "1", "(j1^2 + j1 - j2^2 + j2*(2*jb1 + 1) - jb1^2 - jb1 + jb2^2 + jb2)",
     "(-j1 + j2 + jb1 - jb2 + 1)*(-j1 + j2 + jb1 + jb2 + 2)*(j1 + j2 + jb1 - jb2 + 2)*(-j1 + j2 + jb1 - jb2 + 2)*(j1 + j2 + jb1 + jb2 + 3)*(-j1 + j2 + jb1 + jb2 + 3)*(j1 + j2 + jb1 - jb2 + 3)*(j1 + j2 + jb1 + jb2 + 4)",
     "j1*(j1 + 1)*(2*j2^2 + 5*j2 + 3)"},
    {0, -2, 2, "1/4", "1", "(j1^2 + j1 - j2^2 - j2*(2*jb1 + 3) - jb1^2 - 3*jb1 + jb2^2 + jb2 - 2)",
     "(j1 + j2 - jb1 + jb2)*(-j1 - j2 + jb1 + jb2 + 1)*(j1 - j2 + jb1 - jb2 + 1)*(j1 + j2 - jb1 + jb2 - 1)*(j1 - j2 + jb1 + jb2 + 2)*(-j1 - j2 + jb1 + jb2 + 2)*(j1 - j2 + jb1 - jb2 + 2)*(j1 - j2 + jb1 + jb2 + 3)",
     "j1*j2*(j1 + 1)*(2*j2 - 1)"},
    {0, 0, 2, "-1/4", "1", "(j1^2 + j1 + j2^2 + j2 - jb1^2 - 3*jb1 + jb2^2 + jb2 - 2)",
     "(j1 + j2 - jb1 + jb2)*(-j1 - j2 + jb1 + jb2 + 1)*(j1 - j2 + jb1 - jb2 + 1)*(-j1 + j2 + jb1 - jb2 + 1)*(j1 - j2 + jb1 + jb2 + 2)*(-j1 + j2 + jb1 + jb2 + 2)*(j1 + j2 + jb1 - jb2 + 2)*(j1 + j2 + jb1 + jb2 + 3)",
     "j1*j2*(j1 + 1)*(j2 + 1)"},
    {1, 1, 1, "1/2", "1", "(j1 + j2 - jb1)",
     "(j1 - j2 + jb1 - jb2 + 1)*(-j1 + j2 + jb1 - jb2 + 1)*(j1 - j2 + jb1 + jb2 + 2)*(-j1 + j2 + jb1 + jb2 + 2)*(j1 + j2 + jb1 - jb2 + 2)*(j1 + j2 + jb1 + jb2 + 3)*(j1 + j2 + jb1 - jb2 + 3)*(j1 + j2 + jb1 + jb2 + 4)",
     "(j1 + 1)*(j2 + 1)"},
    {-1, -1, 1, "-1/2", "1", "(j1 + j2 + jb1 + 2)",
     "(j1 + j2 - jb1 + jb2)*(-j1 - j2 + jb1 + jb2 + 1)*(j1 - j2 + jb1 - jb2 + 1)*(-j1 + j2 + jb1 - jb2 + 1)*(j1 + j2 - jb1 + jb2 - 1)*(j1 - j2 + jb1 + jb2 + 2)*(-j1 + j2 + jb1 + jb2 + 2)*(-j1 - j2 + jb1 + jb2 + 2)",
     "j1*j2"},
    {1, -1, 1, "1/2", "1", "(-j1 + j2 + jb1 + 1)",
     "(j1 + j2 - jb1 + jb2)*(-j1 - j2 + jb1 + jb2 + 1)*(j1 - j2 + jb1 - jb2 + 1)*(j1 - j2 + jb1 + jb2 + 2)*(j1 + j2 + jb1 - jb2 + 2)*(j1 - j2 + jb1 - jb2 + 2)*(j1 + j2 + jb1 + jb2 + 3)*(j1 - j2 + jb1 + jb2 + 3)",
     "j2*(j1 + 1)"},
    {-1, 1, 1, "1/2", "1", "(j1 - j2 + jb1 + 1)",
     "(j1 + j2 - jb1 + jb2)*(-j1 - j2 + jb1 + jb2 + 1)*(-j1 + j2 + jb1 - jb2 + 1)*(-j1 + j2 + jb1 + jb2 + 2)*(j1 + j2 + jb1 - jb2 + 2)*(-j1 + j2 + jb1 - jb2 + 2)*(j1 + j2 + jb1 + jb2 + 3)*(-j1 + j2 + jb1 + jb2 + 3)",
     "j1*(j2 + 1)"},
    {0, 0, 0, "1/2", "5", "1",
     "(j1 + j2 - jb1 + jb2)*(-j1 - j2 + jb1 + jb2 + 1)*(j1 - j2 + jb1 - jb2 + 1)*(-j1 + j2 + jb1 - jb2 + 1)*(j1 - j2 + jb1 + jb2 + 2)*(-j1 + j2 + jb1 + jb2 + 2)*(j1 + j2 + jb1 - jb2 + 2)*(j1 + j2 + jb1 + jb2 + 3)",
     "1"},
}};

// (jb1, jb2) x (1,1) -> (jb1, jb2 + 1)
const std::array<TableRow, 14> kRaise01{{
    {2, 2, 2, "1/4", "2", "1",
     "(-j1 - j2 + jb1 + jb2)*(j1 - j2 + jb1 - jb2)*(-j1 + j2 + jb1 - jb2)*(j1 + j2 - jb1 + jb2 + 1)*(j1 - j2 + jb1 + jb2 + 2)*(-j1 + j2 + jb1 + jb2 + 2)*(j1 + j2 + jb1 - jb2 + 2)*(j1 + j2 - jb1 + jb2 + 2)*(j1 + j2 + jb1 + jb2 + 3)*(j1 + j2 - jb1 + jb2 + 3)*(j1 + j2 + jb1 + jb2 + 4)*(j1 + j2 + jb1 + jb2 + 5)",
     "(j1 + 1)*(j2 + 1)*(2*j1 + 3)*(2*j2 + 3)"},
    {-2, -2, 2, "-1/4", "2", "1",
     "(j1 + j2 + jb1 - jb2)*(j1 - j2 + jb1 - jb2)*(-j1 + j2 + jb1 - jb2)*(j1 + j2 - jb1 + jb2)*(-j1 - j2 + jb1 + jb2 + 1)*(j1 + j2 + jb1 - jb2 + 1)*(j1 + j2 + jb1 - jb2 - 1)*(j1 + j2 + jb1 + jb2 + 2)*(j1 - j2 + jb1 + jb2 + 2)*(-j1 + j2 + jb1 + jb2 + 2)*(-j1 - j2 + jb1 + jb2 + 2)*(-j1 - j2 + jb1 + jb2 + 3)",
     "j1*j2*(2*j1 - 1)*(2*j2 - 1)"},
    {-2, 2, 2, "1/4", "2", "1",
     "(j1 - j2 + jb1 - jb2)*(j1 - j2 + jb1 + jb2 + 1)*(-j1 - j2 + jb1 + jb2 + 1)*(j1 + j2 + jb1 - jb2 + 1)*(-j1 + j2 + jb1 - jb2 + 1)*(j1 + j2 - jb1 + jb2 + 1)*(j1 - j2 + jb1 - jb2 - 1)*(j1 - j2 + jb1 - jb2 - 2)*(-j1 + j2 + jb1 + jb2 + 2)*(j1 + j2 + jb1 + jb2 + 3)*(-j1 + j2 + jb1 + jb2 + 3)*(-j1 + j2 + jb1 + jb2 + 4)",
     "j1*(j2 + 1)*(2*j1 - 1)*(2*j2 + 3)"},
    {2, -2, 2, "1/4", "2", "1",
     "(-j1 + j2 + jb1 - jb2)*(-j1 + j2 + jb1 + jb2 + 1)*(-j1 - j2 + jb1 + jb2 + 1)*(j1 + j2 + jb1 - jb2 + 1)*(j1 - j2 + jb1 - jb2 + 1)*(j1 + j2 - jb1 + jb2 + 1)*(-j1 + j2 + jb1 - jb2 - 1)*(-j1 + j2 + jb1 - jb2 - 2)*(j1 - j2 + jb1 + jb2 + 2)*(j1 + j2 + jb1 + jb2 + 3)*(j1 - j2 + jb1 + jb2 + 3)*(j1 - j2 + jb1 + jb2 + 4)",
     "j2*(j1 + 1)*(2*j2 - 1)*(2*j1 + 3)"},
    {2, 0, 2, "1/4", "2", "(-j1^2 + 2*j1*jb2 + j2^2 + j2 + jb1^2 + 2*jb1 - jb2^2 + 1)",
     "(j1 - j2 - jb1 + jb2)*(j1 + j2 - jb1 + jb2 + 1)*(j1 - j2 - jb1 + jb2 + 1)*(j1 - j2 + jb1 + jb2 + 2)*(j1 + j2 - jb1 + jb2 + 2)*(j1 + j2 + jb1 + jb2 + 3)*(j1 - j2 + jb1 + jb2 + 3)*(j1 + j2 + jb1 + jb2 + 4)",
     "j2*(j2 + 1)*(2*j1^2 + 5*j1 + 3)"},
    {-2, 0, 2, "-1/4", "2", "(j1^2 + j1*(2*jb2 + 2) - j2^2 - j2 - jb1^2 - 2*jb1 + jb2^2 + 2*jb2)",
     "(j1 + j2 + jb1 - jb2)*(j1 - j2 + jb1 - jb2)*(-j1 - j2 + jb1 + jb2 + 1)*(j1 + j2 + jb1 - jb2 + 1)*(j1 - j2 + jb1 - jb2 - 1)*(-j1 + j2 + jb1 + jb2 + 2)*(-j1 - j2 + jb1 + jb2 + 2)*(-j1 + j2 + jb1 + jb2 + 3)",
     "j1*j2*(j2 + 1)*(2*j1 - 1)"},
    {0, 2, 2, "1/4", "2", "(j1^2 + j1 - j2^2 + 2*j2*jb2 + jb1^2 + 2*jb1 - jb2^2 + 1)",
     "(j1 - j2 + jb1 - jb2)*(j1 + j2 - jb1 + jb2 + 1)*(j1 - j2 + jb1 - jb2 - 1)*(-j1 + j2 + jb1 + jb2 + 2)*(j1 + j2 - jb1 + jb2 + 2)*(j1 + j2 + jb1 + jb2 + 3)*(-j1 + j2 + jb1 + jb2 + 3)*(j1 + j2 + jb1 + jb2 + 4)",
     "j1*(j1 + 1)*(2*j2^2 + 5*j2 + 3)"},
    {0, -2, 2, "1/4", "2", "(j1^2 + j1 - j2^2 - 2*j2*(jb2 + 1) + jb1^2 + 2*jb1 - jb2^2 - 2*jb2)",
     "(j1 + j2 + jb1 - jb2)*(-j1 + j2 + jb1 - jb2)*(-j1 - j2 + jb1 + jb2 + 1)*(j1 + j2 + jb1 - jb2 + 1)*(-j1 + j2 + jb1 - jb2 - 1)*(j1 - j2 + jb1 + jb2 + 2)*(-j1 - j2 + jb1 + jb2 + 2)*(j1 - j2 + jb1 + jb2 + 3)",
     "j1*j2*(j1 + 1)*(2*j2 - 1)"},
    {0, 0, 2, "1/4", "2", "(j1^2 + j1 + j2^2 + j2 + jb1^2 + 2*jb1 - jb2^2 - 2*jb2)",
     "(j1 - j2 + jb1 - jb2)*(-j1 + j2 + jb1 - jb2)*(-j1 - j2 + jb1 + jb2 + 1)*(j1 + j2 + jb1 - jb2 + 1)*(j1 + j2 - jb1 + jb2 + 1)*(j1 - j2 + jb1 + jb2 + 2)*(-j1 + j2 + jb1 + jb2 + 2)*(j1 + j2 + jb1 + jb2 + 3)",
     "j1*j2*(j1 + 1)*(j2 + 1)"},
    {1, 1, 1, "-1/4", "2", "(2*j1 + 2*j2 - 2*jb2 + 1)",
     "(j1 - j2 + jb1 - jb2)*(-j1 + j2 + jb1 - jb2)*(j1 + j2 - jb1 + jb2 + 1)*(j1 - j2 + jb1 + jb2 + 2)*(-j1 + j2 + jb1 + jb2 + 2)*(j1 + j2 - jb1 + jb2 + 2)*(j1 + j2 + jb1 + jb2 + 3)*(j1 + j2 + jb1 + jb2 + 4)",
     "(j1 + 1)*(j2 + 1)"},
    {-1, -1, 1, "1/4", "2", "(2*j1 + 2*j2 + 2*jb2 + 3)",
     "(j1 + j2 + jb1 - jb2)*(j1 - j2 + jb1 - jb2)*(-j1 + j2 + jb1 - jb2)*(-j1 - j2 + jb1 + jb2 + 1)*(j1 + j2 + jb1 - jb2 + 1)*(j1 - j2 + jb1 + jb2 + 2)*(-j1 + j2 + jb1 + jb2 + 2)*(-j1 - j2 + jb1 + jb2 + 2)",
     "j1*j2"},
    {1, -1, 1, "1/4", "2", "(-2*j1 + 2*j2 + 2*jb2 + 1)",
     "(-j1 + j2 + jb1 - jb2)*(-j1 - j2 + jb1 + jb2 + 1)*(j1 + j2 + jb1 - jb2 + 1)*(j1 + j2 - jb1 + jb2 + 1)*(-j1 + j2 + jb1 - jb2 - 1)*(j1 - j2 + jb1 + jb2 + 2)*(j1 + j2 + jb1 + jb2 + 3)*(j1 - j2 + jb1 + jb2 + 3)",
     "j2*(j1 + 1)"},
    {-1, 1, 1, "1/4", "2", "(2*j1 - 2*j2 + 2*jb2 + 1)",
     "(j1 - j2 + jb1 - jb2)*(-j1 - j2 + jb1 + jb2 + 1)*(j1 + j2 + jb1 - jb2 + 1)*(j1 + j2 - jb1 + jb2 + 1)*(j1 - j2 + jb1 - jb2 - 1)*(-j1 + j2 + jb1 + jb2 + 2)*(j1 + j2 + jb1 + jb2 + 3)*(-j1 + j2 + jb1 + jb2 + 3)",
     "j1*(j2 + 1)"},
    {0, 0, 0, "-1/2", "10", "1",
     "(j1 - j2 + jb1 - jb2)*(-j1 + j2 + jb1 - jb2)*(-j1 - j2 + jb1 + jb2 + 1)*(j1 + j2 + jb1 - jb2 + 1)*(j1 + j2 - jb1 + jb2 + 1)*(j1 - j2 + jb1 + jb2 + 2)*(-j1 + j2 + jb1 + jb2 + 2)*(j1 + j2 + jb1 + jb2 + 3)",
     "1"},
}};

// (jb1, jb2) x (1,1) -> (jb1 + 1, jb2 - 1)
const std::array<TableRow, 14> kRaise1m1{{
    {2, 2, 2, "1/4", "1", "1",
     "(-j1 - j2 + jb1 + jb2)*(j1 - j2 + jb1 - jb2 + 1)*(-j1 + j2 + jb1 - jb2 + 1)*(-j1 - j2 + jb1 + jb2 - 1)*(j1 + j2 + jb1 - jb2 + 2)*(j1 - j2 + jb1 - jb2 + 2)*(-j1 + j2 + jb1 - jb2 + 2)*(j1 + j2 + jb1 + jb2 + 3)*(j1 + j2 + jb1 - jb2 + 3)*(j1 + j2 + jb1 + jb2 + 4)*(j1 + j2 + jb1 - jb2 + 4)*(j1 + j2 + jb1 - jb2 + 5)",
     "(j1 + 1)*(j2 + 1)*(2*j1 + 3)*(2*j2 + 3)"},
    {-2, -2, 2, "1/4", "1", "1",
     "(j1 + j2 - jb1 + jb2)*(j1 + j2 + jb1 + jb2 + 1)*(-j1 - j2 + jb1 + jb2 + 1)*(j1 - j2 + jb1 - jb2 + 1)*(-j1 + j2 + jb1 - jb2 + 1)*(j1 + j2 - jb1 + jb2 - 1)*(j1 + j2 - jb1 + jb2 - 3)*(j1 + j2 - jb1 + jb2 - 2)*(j1 + j2 + jb1 + jb2 + 2)*(-j1 - j2 + jb1 + jb2 + 2)*(j1 - j2 + jb1 - jb2 + 2)*(-j1 + j2 + jb1 - jb2 + 2)",
     "j1*j2*(2*j1 - 1)*(2*j2 - 1)"},
    {-2, 2, 2, "1/4", "1", "1",
     "(j1 - j2 + jb1 + jb2)*(j1 + j2 - jb1 + jb2)*(j1 - j2 + jb1 + jb2 + 1)*(-j1 + j2 + jb1 - jb2 + 1)*(j1 + j2 - jb1 + jb2 - 1)*(-j1 + j2 + jb1 + jb2 + 2)*(j1 + j2 + jb1 - jb2 + 2)*(-j1 + j2 + jb1 - jb2 + 2)*(-j1 + j2 + jb1 + jb2 + 3)*(j1 + j2 + jb1 - jb2 + 3)*(-j1 + j2 + jb1 - jb2 + 3)*(-j1 + j2 + jb1 - jb2 + 4)",
     "j1*(2*j1 - 1)*(2*j2^2 + 5*j2 + 3)"},
    {2, -2, 2, "1/4", "1", "1",
     "(-j1 + j2 + jb1 + jb2)*(j1 + j2 - jb1 + jb2)*(-j1 + j2 + jb1 + jb2 + 1)*(j1 - j2 + jb1 - jb2 + 1)*(j1 + j2 - jb1 + jb2 - 1)*(j1 - j2 + jb1 + jb2 + 2)*(j1 + j2 + jb1 - jb2 + 2)*(j1 - j2 + jb1 - jb2 + 2)*(j1 - j2 + jb1 + jb2 + 3)*(j1 + j2 + jb1 - jb2 + 3)*(j1 - j2 + jb1 - jb2 + 3)*(j1 - j2 + jb1 - jb2 + 4)",
     "j2*(2*j2 - 1)*(2*j1^2 + 5*j1 + 3)"},
    {2, 0, 2, "-1/4", "1", "1",
     "(-j1 - j2 + jb1 + jb2)*(j1 + j2 - jb1 + jb2)*(-j1 + j2 + jb1 + jb2 + 1)*(j1 - j2 + jb1 - jb2 + 1)*(-j1 + j2 + jb1 - jb2 + 1)*(j1 - j2 + jb1 + jb2 + 2)*(j1 + j2 + jb1 - jb2 + 2)*(j1 - j2 + jb1 - jb2 + 2)*(j1 + j2 + jb1 + jb2 + 3)*(j1 + j2 + jb1 - jb2 + 3)*(j1 - j2 + jb1 - jb2 + 3)*(j1 + j2 + jb1 - jb2 + 4)",
     "j2*(j2 + 1)*(2*j1^2 + 5*j1 + 3)"},
    {-2, 0, 2, "-1/4", "1", "1",
     "(j1 + j2 - jb1 + jb2)*(j1 - j2 + jb1 + jb2 + 1)*(-j1 - j2 + jb1 + jb2 + 1)*(j1 - j2 + jb1 - jb2 + 1)*(-j1 + j2 + jb1 - jb2 + 1)*(j1 + j2 - jb1 + jb2 - 1)*(j1 + j2 - jb1 + jb2 - 2)*(j1 + j2 + jb1 + jb2 + 2)*(-j1 + j2 + jb1 + jb2 + 2)*(j1 + j2 + jb1 - jb2 + 2)*(-j1 + j2 + jb1 - jb2 + 2)*(-j1 + j2 + jb1 - jb2 + 3)",
     "j1*j2*(j2 + 1)*(2*j1 - 1)"},
    {0, 2, 2, "-1/4", "1", "1",
     "(-j1 - j2 + jb1 + jb2)*(j1 + j2 - jb1 + jb2)*(j1 - j2 + jb1 + jb2 + 1)*(j1 - j2 + jb1 - jb2 + 1)*(-j1 + j2 + jb1 - jb2 + 1)*(-j1 + j2 + jb1 + jb2 + 2)*(j1 + j2 + jb1 - jb2 + 2)*(-j1 + j2 + jb1 - jb2 + 2)*(j1 + j2 + jb1 + jb2 + 3)*(j1 + j2 + jb1 - jb2 + 3)*(-j1 + j2 + jb1 - jb2 + 3)*(j1 + j2 + jb1 - jb2 + 4)",
     "j1*(j1 + 1)*(2*j2^2 + 5*j2 + 3)"},
    {0, -2, 2, "-1/4", "1", "1",
     "(j1 + j2 - jb1 + jb2)*(-j1 + j2 + jb1 + jb2 + 1)*(-j1 - j2 + jb1 + jb2 + 1)*(j1 - j2 + jb1 - jb2 + 1)*(-j1 + j2 + jb1 - jb2 + 1)*(j1 + j2 - jb1 + jb2 - 1)*(j1 + j2 - jb1 + jb2 - 2)*(j1 + j2 + jb1 + jb2 + 2)*(j1 - j2 + jb1 + jb2 + 2)*(j1 + j2 + jb1 - jb2 + 2)*(j1 - j2 + jb1 - jb2 + 2)*(j1 - j2 + jb1 - jb2 + 3)",
     "j1*j2*(j1 + 1)*(2*j2 - 1)"},
    {0, 0, 2, "1/4", "1", "(2*j1*j2 + (-j1 - j2 + jb1 + jb2 + 1)*(j1 + j2 + jb1 + jb2 + 2))",
     "(j1 + j2 - jb1 + jb2)*(j1 - j2 + jb1 - jb2 + 1)*(-j1 + j2 + jb1 - jb2 + 1)*(j1 + j2 - jb1 + jb2 - 1)*(j1 + j2 + jb1 - jb2 + 2)*(j1 - j2 + jb1 - jb2 + 2)*(-j1 + j2 + jb1 - jb2 + 2)*(j1 + j2 + jb1 - jb2 + 3)",
     "j1*j2*(j1 + 1)*(j2 + 1)"},
    {1, 1, 1, "-1/2", "1", "1",
     "(-j1 - j2 + jb1 + jb2)*(j1 + j2 - jb1 + jb2)*(j1 - j2 + jb1 - jb2 + 1)*(-j1 + j2 + jb1 - jb2 + 1)*(j1 + j2 + jb1 - jb2 + 2)*(j1 - j2 + jb1 - jb2 + 2)*(-j1 + j2 + jb1 - jb2 + 2)*(j1 + j2 + jb1 + jb2 + 3)*(j1 + j2 + jb1 - jb2 + 3)*(j1 + j2 + jb1 - jb2 + 4)",
     "(j1 + 1)*(j2 + 1)"},
    {-1, -1, 1, "-1/2", "1", "1",
     "(j1 + j2 - jb1 + jb2)*(-j1 - j2 + jb1 + jb2 + 1)*(j1 - j2 + jb1 - jb2 + 1)*(-j1 + j2 + jb1 - jb2 + 1)*(j1 + j2 - jb1 + jb2 - 1)*(j1 + j2 - jb1 + jb2 - 2)*(j1 + j2 + jb1 + jb2 + 2)*(j1 + j2 + jb1 - jb2 + 2)*(j1 - j2 + jb1 - jb2 + 2)*(-j1 + j2 + jb1 - jb2 + 2)",
     "j1*j2"},
    {1, -1, 1, "1/2", "1", "1",
     "(j1 + j2 - jb1 + jb2)*(-j1 + j2 + jb1 + jb2 + 1)*(j1 - j2 + jb1 - jb2 + 1)*(-j1 + j2 + jb1 - jb2 + 1)*(j1 + j2 - jb1 + jb2 - 1)*(j1 - j2 + jb1 + jb2 + 2)*(j1 + j2 + jb1 - jb2 + 2)*(j1 - j2 + jb1 - jb2 + 2)*(j1 + j2 + jb1 - jb2 + 3)*(j1 - j2 + jb1 - jb2 + 3)",
     "j2*(j1 + 1)"},
    {-1, 1, 1, "1/2", "1", "1",
     "(j1 + j2 - jb1 + jb2)*(j1 - j2 + jb1 + jb2 + 1)*(j1 - j2 + jb1 - jb2 + 1)*(-j1 + j2 + jb1 - jb2 + 1)*(j1 + j2 - jb1 + jb2 - 1)*(-j1 + j2 + jb1 + jb2 + 2)*(j1 + j2 + jb1 - jb2 + 2)*(-j1 + j2 + jb1 - jb2 + 2)*(j1 + j2 + jb1 - jb2 + 3)*(-j1 + j2 + jb1 - jb2 + 3)",
     "j1*(j2 + 1)"},
    {0, 0, 0, "1/2", "5", "1",
     "(j1 + j2 - jb1 + jb2)*(j1 - j2 + jb1 - jb2 + 1)*(-j1 + j2 + jb1 - jb2 + 1)*(j1 + j2 - jb1 + jb2 - 1)*(j1 + j2 + jb1 - jb2 + 2)*(j1 - j2 + jb1 - jb2 + 2)*(-j1 + j2 + jb1 - jb2 + 2)*(j1 + j2 + jb1 - jb2 + 3)",
     "1"},
}};

// (jb1, jb2) x (1,1) -> (jb1 + 1/2, jb2 + 1/2)
const std::array<TableRow, 14> kRaiseHH{{
    {2, 2, 2, "-1/4", "2", "(j1 - j2)",
     "(-j1 - j2 + jb1 + jb2)*(j1 + j2 - jb1 + jb2 + 1)*(j1 - j2 + jb1 + jb2 + 2)*(-j1 + j2 + jb1 + jb2 + 2)*(j1 + j2 + jb1 - jb2 + 2)*(j1 + j2 - jb1 + jb2 + 2)*(j1 + j2 + jb1 + jb2 + 3)*(j1 + j2 + jb1 - jb2 + 3)*(j1 + j2 + jb1 + jb2 + 4)*(j1 + j2 + jb1 + jb2 + 5)",
     "(j1 + 1)*(j2 + 1)*(2*j1 + 3)*(2*j2 + 3)"},
    {-2, -2, 2, "1/4", "2", "(j1 - j2)",
     "(j1 + j2 + jb1 - jb2)*(j1 + j2 - jb1 + jb2)*(-j1 - j2 + jb1 + jb2 + 1)*(j1 + j2 + jb1 - jb2 + 1)*(j1 + j2 - jb1 + jb2 - 1)*(j1 + j2 + jb1 + jb2 + 2)*(j1 - j2 + jb1 + jb2 + 2)*(-j1 + j2 + jb1 + jb2 + 2)*(-j1 - j2 + jb1 + jb2 + 2)*(-j1 - j2 + jb1 + jb2 + 3)",
     "j1*j2*(2*j1 - 1)*(2*j2 - 1)"},
    {-2, 2, 2, "1/4", "2", "(j1 + j2 + 1)",
     "(j1 - j2 + jb1 - jb2)*(j1 - j2 + jb1 + jb2 + 1)*(-j1 - j2 + jb1 + jb2 + 1)*(-j1 + j2 + jb1 - jb2 + 1)*(j1 - j2 + jb1 - jb2 - 1)*(-j1 + j2 + jb1 + jb2 + 2)*(-j1 + j2 + jb1 - jb2 + 2)*(j1 + j2 + jb1 + jb2 + 3)*(-j1 + j2 + jb1 + jb2 + 3)*(-j1 + j2 + jb1 + jb2 + 4)",
     "j1*(2*j1 - 1)*(2*j2^2 + 5*j2 + 3)"},
    {2, -2, 2, "-1/4", "2", "(j1 + j2 + 1)",
     "(-j1 + j2 + jb1 - jb2)*(-j1 + j2 + jb1 + jb2 + 1)*(-j1 - j2 + jb1 + jb2 + 1)*(j1 - j2 + jb1 - jb2 + 1)*(-j1 + j2 + jb1 - jb2 - 1)*(j1 - j2 + jb1 + jb2 + 2)*(j1 - j2 + jb1 - jb2 + 2)*(j1 + j2 + jb1 + jb2 + 3)*(j1 - j2 + jb1 + jb2 + 3)*(j1 - j2 + jb1 + jb2 + 4)",
     "j2*(2*j2 - 1)*(2*j1^2 + 5*j1 + 3)"},
    {2, 0, 2, "-1/4", "2", "(j2*(j2 + 1) + (j1 + 1)*(-j1 + jb1 + jb2 + 1))",
     "(-j1 + j2 + jb1 - jb2)*(j1 - j2 + jb1 - jb2 + 1)*(j1 + j2 - jb1 + jb2 + 1)*(j1 - j2 + jb1 + jb2 + 2)*(j1 + j2 + jb1 - jb2 + 2)*(j1 + j2 + jb1 + jb2 + 3)*(j1 - j2 + jb1 + jb2 + 3)*(j1 + j2 + jb1 + jb2 + 4)",
     "j2*(j1 + 1)*(j2 + 1)*(2*j1 + 3)"},
    {-2, 0, 2, "-1/4", "2", "(j1^2 + j1*(jb1 + jb2 + 2) - j2*(j2 + 1))",
     "(j1 - j2 + jb1 - jb2)*(j1 + j2 - jb1 + jb2)*(-j1 - j2 + jb1 + jb2 + 1)*(j1 + j2 + jb1 - jb2 + 1)*(-j1 + j2 + jb1 - jb2 + 1)*(-j1 + j2 + jb1 + jb2 + 2)*(-j1 - j2 + jb1 + jb2 + 2)*(-j1 + j2 + jb1 + jb2 + 3)",
     "j1*j2*(j2 + 1)*(2*j1 - 1)"},
    {0, 2, 2, "1/4", "2", "(j1*(j1 + 1) + (j2 + 1)*(-j2 + jb1 + jb2 + 1))",
     "(j1 - j2 + jb1 - jb2)*(-j1 + j2 + jb1 - jb2 + 1)*(j1 + j2 - jb1 + jb2 + 1)*(-j1 + j2 + jb1 + jb2 + 2)*(j1 + j2 + jb1 - jb2 + 2)*(j1 + j2 + jb1 + jb2 + 3)*(-j1 + j2 + jb1 + jb2 + 3)*(j1 + j2 + jb1 + jb2 + 4)",
     "j1*(j1 + 1)*(j2 + 1)*(2*j2 + 3)"},
    {0, -2, 2, "-1/4", "2", "(j1^2 + j1 - j2*(j2 + jb1 + jb2 + 2))",
     "(-j1 + j2 + jb1 - jb2)*(j1 + j2 - jb1 + jb2)*(-j1 - j2 + jb1 + jb2 + 1)*(j1 + j2 + jb1 - jb2 + 1)*(j1 - j2 + jb1 - jb2 + 1)*(j1 - j2 + jb1 + jb2 + 2)*(-j1 - j2 + jb1 + jb2 + 2)*(j1 - j2 + jb1 + jb2 + 3)",
     "j1*j2*(j1 + 1)*(2*j2 - 1)"},
    {0, 0, 2, "1/4", "2", "(j1 - j2)*(j1 + j2 + 1)*(-j1^2 - j1 - j2^2 - j2 + (jb1 - jb2)*(jb1 - jb2 + 1))",
     "(-j1 - j2 + jb1 + jb2 + 1)*(j1 - j2 + jb1 + jb2 + 2)*(-j1 + j2 + jb1 + jb2 + 2)*(j1 + j2 + jb1 + jb2 + 3)",
     "j1*j2*(j1 + 1)*(j2 + 1)"},
    {1, 1, 1, "1/4", "2", "(j1 - j2)*(2*j1 + 2*j2 - jb1 - jb2 + 1)",
     "(j1 + j2 - jb1 + jb2 + 1)*(j1 - j2 + jb1 + jb2 + 2)*(-j1 + j2 + jb1 + jb2 + 2)*(j1 + j2 + jb1 - jb2 + 2)*(j1 + j2 + jb1 + jb2 + 3)*(j1 + j2 + jb1 + jb2 + 4)",
     "(j1 + 1)*(j2 + 1)"},
    {-1, -1, 1, "-1/4", "2", "(j1 - j2)*(2*j1 + 2*j2 + jb1 + jb2 + 3)",
     "(j1 + j2 - jb1 + jb2)*(-j1 - j2 + jb1 + jb2 + 1)*(j1 + j2 + jb1 - jb2 + 1)*(j1 - j2 + jb1 + jb2 + 2)*(-j1 + j2 + jb1 + jb2 + 2)*(-j1 - j2 + jb1 + jb2 + 2)",
     "j1*j2"},
    {1, -1, 1, "-1/4", "2", "(j1 + j2 + 1)*(-2*j1 + 2*j2 + jb1 + jb2 + 1)",
     "(-j1 + j2 + jb1 - jb2)*(-j1 - j2 + jb1 + jb2 + 1)*(j1 - j2 + jb1 - jb2 + 1)*(j1 - j2 + jb1 + jb2 + 2)*(j1 + j2 + jb1 + jb2 + 3)*(j1 - j2 + jb1 + jb2 + 3)",
     "j2*(j1 + 1)"},
    {-1, 1, 1, "1/4", "2", "(j1 + j2 + 1)*(2*j1 - 2*j2 + jb1 + jb2 + 1)",
     "(j1 - j2 + jb1 - jb2)*(-j1 - j2 + jb1 + jb2 + 1)*(-j1 + j2 + jb1 - jb2 + 1)*(-j1 + j2 + jb1 + jb2 + 2)*(j1 + j2 + jb1 + jb2 + 3)*(-j1 + j2 + jb1 + jb2 + 3)",
     "j1*(j2 + 1)"},
    {0, 0, 0, "1/2", "10", "(j1 - j2)*(j1 + j2 + 1)",
     "(-j1 - j2 + jb1 + jb2 + 1)*(j1 - j2 + jb1 + jb2 + 2)*(-j1 + j2 + jb1 + jb2 + 2)*(j1 + j2 + jb1 + jb2 + 3)",
     "1"},
}};

// (jb1, jb2) x (1,1) -> (jb1 + 1/2, jb2 - 1/2)
const std::array<TableRow, 14> kRaiseHmH{{
    {2, 2, 2, "1/4", "2", "(j1 - j2)",
     "(-j1 - j2 + jb1 + jb2)*(j1 - j2 + jb1 - jb2 + 1)*(-j1 + j2 + jb1 - jb2 + 1)*(j1 + j2 - jb1 + jb2 + 1)*(-j1 - j2 + jb1 + jb2 - 1)*(j1 + j2 + jb1 - jb2 + 2)*(j1 + j2 + jb1 + jb2 + 3)*(j1 + j2 + jb1 - jb2 + 3)*(j1 + j2 + jb1 + jb2 + 4)*(j1 + j2 + jb1 - jb2 + 4)",
     "(j1 + 1)*(j2 + 1)*(2*j1 + 3)*(2*j2 + 3)"},
    {-2, -2, 2, "1/4", "2", "(j1 - j2)",
     "(j1 + j2 - jb1 + jb2)*(j1 + j2 + jb1 + jb2 + 1)*(-j1 - j2 + jb1 + jb2 + 1)*(j1 + j2 + jb1 - jb2 + 1)*(j1 - j2 + jb1 - jb2 + 1)*(-j1 + j2 + jb1 - jb2 + 1)*(j1 + j2 - jb1 + jb2 - 1)*(j1 + j2 - jb1 + jb2 - 2)*(j1 + j2 + jb1 + jb2 + 2)*(-j1 - j2 + jb1 + jb2 + 2)",
     "j1*j2*(2*j1 - 1)*(2*j2 - 1)"},
    {-2, 2, 2, "1/4", "2", "(j1 + j2 + 1)",
     "(j1 - j2 + jb1 + jb2)*(j1 - j2 + jb1 - jb2)*(j1 + j2 - jb1 + jb2)*(j1 - j2 + jb1 + jb2 + 1)*(-j1 + j2 + jb1 - jb2 + 1)*(-j1 + j2 + jb1 + jb2 + 2)*(j1 + j2 + jb1 - jb2 + 2)*(-j1 + j2 + jb1 - jb2 + 2)*(-j1 + j2 + jb1 + jb2 + 3)*(-j1 + j2 + jb1 - jb2 + 3)",
     "j1*(2*j1 - 1)*(2*j2^2 + 5*j2 + 3)"},
    {2, -2, 2, "-1/4", "2", "(j1 + j2 + 1)",
     "(-j1 + j2 + jb1 + jb2)*(-j1 + j2 + jb1 - jb2)*(j1 + j2 - jb1 + jb2)*(-j1 + j2 + jb1 + jb2 + 1)*(j1 - j2 + jb1 - jb2 + 1)*(j1 - j2 + jb1 + jb2 + 2)*(j1 + j2 + jb1 - jb2 + 2)*(j1 - j2 + jb1 - jb2 + 2)*(j1 - j2 + jb1 + jb2 + 3)*(j1 - j2 + jb1 - jb2 + 3)",
     "j2*(2*j2 - 1)*(2*j1^2 + 5*j1 + 3)"},
    {2, 0, 2, "1/4", "2", "(j2*(j2 + 1) - (j1 + 1)*(j1 - jb1 + jb2))",
     "(-j1 - j2 + jb1 + jb2)*(-j1 + j2 + jb1 + jb2 + 1)*(j1 - j2 + jb1 - jb2 + 1)*(j1 - j2 + jb1 + jb2 + 2)*(j1 + j2 + jb1 - jb2 + 2)*(j1 - j2 + jb1 - jb2 + 2)*(j1 + j2 + jb1 + jb2 + 3)*(j1 + j2 + jb1 - jb2 + 3)",
     "j2*(j1 + 1)*(j2 + 1)*(2*j1 + 3)"},
    {-2, 0, 2, "-1/4", "2", "(j1^2 + j1*(jb1 - jb2 + 1) - j2*(j2 + 1))",
     "(j1 + j2 - jb1 + jb2)*(j1 - j2 + jb1 + jb2 + 1)*(-j1 - j2 + jb1 + jb2 + 1)*(-j1 + j2 + jb1 - jb2 + 1)*(j1 + j2 - jb1 + jb2 - 1)*(j1 + j2 + jb1 + jb2 + 2)*(-j1 + j2 + jb1 + jb2 + 2)*(-j1 + j2 + jb1 - jb2 + 2)",
     "j1*j2*(j2 + 1)*(2*j1 - 1)"},
    {0, 2, 2, "-1/4", "2", "(j1^2 + j1 - (j2 + 1)*(j2 - jb1 + jb2))",
     "(-j1 - j2 + jb1 + jb2)*(j1 - j2 + jb1 + jb2 + 1)*(-j1 + j2 + jb1 - jb2 + 1)*(-j1 + j2 + jb1 + jb2 + 2)*(j1 + j2 + jb1 - jb2 + 2)*(-j1 + j2 + jb1 - jb2 + 2)*(j1 + j2 + jb1 + jb2 + 3)*(j1 + j2 + jb1 - jb2 + 3)",
     "j1*(j1 + 1)*(j2 + 1)*(2*j2 + 3)"},
    {0, -2, 2, "-1/4", "2", "(j1^2 + j1 - j2*(j2 + jb1 - jb2 + 1))",
     "(j1 + j2 - jb1 + jb2)*(-j1 + j2 + jb1 + jb2 + 1)*(-j1 - j2 + jb1 + jb2 + 1)*(j1 - j2 + jb1 - jb2 + 1)*(j1 + j2 - jb1 + jb2 - 1)*(j1 + j2 + jb1 + jb2 + 2)*(j1 - j2 + jb1 + jb2 + 2)*(j1 - j2 + jb1 - jb2 + 2)",
     "j1*j2*(j1 + 1)*(2*j2 - 1)"},
    {0, 0, 2, "1/4", "2", "(j1^2 + j1 - j2*(j2 + 1))*(-j1^2 - j1 - j2^2 - j2 + 3*jb1 + 3*jb2 + (jb1 + jb2)^2 + 2)",
     "(j1 + j2 - jb1 + jb2)*(j1 - j2 + jb1 - jb2 + 1)*(-j1 + j2 + jb1 - jb2 + 1)*(j1 + j2 + jb1 - jb2 + 2)",
     "j1*j2*(j1 + 1)*(j2 + 1)"},
    {1, 1, 1, "-1/4", "2", "(j1 - j2)*(2*j1 + 2*j2 - jb1 + jb2 + 2)",
     "(-j1 - j2 + jb1 + jb2)*(j1 - j2 + jb1 - jb2 + 1)*(-j1 + j2 + jb1 - jb2 + 1)*(j1 + j2 + jb1 - jb2 + 2)*(j1 + j2 + jb1 + jb2 + 3)*(j1 + j2 + jb1 - jb2 + 3)",
     "(j1 + 1)*(j2 + 1)"},
    {-1, -1, 1, "-1/4", "2", "(j1 - j2)*(2*j1 + 2*j2 + jb1 - jb2 + 2)",
     "(j1 + j2 - jb1 + jb2)*(-j1 - j2 + jb1 + jb2 + 1)*(j1 - j2 + jb1 - jb2 + 1)*(-j1 + j2 + jb1 - jb2 + 1)*(j1 + j2 - jb1 + jb2 - 1)*(j1 + j2 + jb1 + jb2 + 2)",
     "j1*j2"},
    {1, -1, 1, "1/4", "2", "(j1 + j2 + 1)*(2*j1 - 2*j2 - jb1 + jb2)",
     "(j1 + j2 - jb1 + jb2)*(-j1 + j2 + jb1 + jb2 + 1)*(j1 - j2 + jb1 - jb2 + 1)*(j1 - j2 + jb1 + jb2 + 2)*(j1 + j2 + jb1 - jb2 + 2)*(j1 - j2 + jb1 - jb2 + 2)",
     "j2*(j1 + 1)"},
    {-1, 1, 1, "1/4", "2", "(j1 + j2 + 1)*(2*j1 - 2*j2 + jb1 - jb2)",
     "(j1 + j2 - jb1 + jb2)*(j1 - j2 + jb1 + jb2 + 1)*(-j1 + j2 + jb1 - jb2 + 1)*(-j1 + j2 + jb1 + jb2 + 2)*(j1 + j2 + jb1 - jb2 + 2)*(-j1 + j2 + jb1 - jb2 + 2)",
     "j1*(j2 + 1)"},
    {0, 0, 0, "1/2", "10", "(j1 - j2)*(j1 + j2 + 1)",
     "(j1 + j2 - jb1 + jb2)*(j1 - j2 + jb1 - jb2 + 1)*(-j1 + j2 + jb1 - jb2 + 1)*(j1 + j2 + jb1 - jb2 + 2)",
     "1"},
}};

// (jb1, jb2) x (1,1) -> (jb1, jb2), first copy
const std::array<TableRow, 14> kDiagonalCopy1{{
    {2, 2, 2, "-1/8", "1", "1",
     "(j1 + j2 - jb1 - jb2)*(j1 + j2 - jb1 + jb2 + 1)*(j1 + j2 - jb1 - jb2 + 1)*(j1 + j2 + jb1 - jb2 + 2)*(j1 + j2 - jb1 + jb2 + 2)*(j1 + j2 + jb1 + jb2 + 3)*(j1 + j2 + jb1 - jb2 + 3)*(j1 + j2 + jb1 + jb2 + 4)",
     "(j1 + 1)*(j2 + 1)*(2*j1 + 3)*(2*j2 + 3)"},
    {-2, -2, 2, "-1/8", "1", "1",
     "(j1 + j2 + jb1 - jb2)*(j1 + j2 - jb1 + jb2)*(j1 + j2 + jb1 + jb2 + 1)*(-j1 - j2 + jb1 + jb2 + 1)*(j1 + j2 + jb1 - jb2 + 1)*(j1 + j2 - jb1 + jb2 - 1)*(j1 + j2 + jb1 + jb2 + 2)*(-j1 - j2 + jb1 + jb2 + 2)",
     "j1*j2*(2*j1 - 1)*(2*j2 - 1)"},
    {-2, 2, 2, "-1/8", "1", "1",
     "(j1 - j2 + jb1 + jb2)*(j1 - j2 + jb1 - jb2)*(j1 - j2 + jb1 + jb2 + 1)*(-j1 + j2 + jb1 - jb2 + 1)*(j1 - j2 + jb1 - jb2 - 1)*(-j1 + j2 + jb1 + jb2 + 2)*(-j1 + j2 + jb1 - jb2 + 2)*(-j1 + j2 + jb1 + jb2 + 3)",
     "j1*(2*j1 - 1)*(2*j2^2 + 5*j2 + 3)"},
    {2, -2, 2, "-1/8", "1", "1",
     "(-j1 + j2 + jb1 + jb2)*(-j1 + j2 + jb1 - jb2)*(-j1 + j2 + jb1 + jb2 + 1)*(j1 - j2 + jb1 - jb2 + 1)*(-j1 + j2 + jb1 - jb2 - 1)*(j1 - j2 + jb1 + jb2 + 2)*(j1 - j2 + jb1 - jb2 + 2)*(j1 - j2 + jb1 + jb2 + 3)",
     "j2*(2*j2 - 1)*(2*j1^2 + 5*j1 + 3)"},
    {2, 0, 2, "-1/8", "1", "1",
     "(-j1 - j2 + jb1 + jb2)*(-j1 + j2 + jb1 - jb2)*(-j1 + j2 + jb1 + jb2 + 1)*(j1 - j2 + jb1 - jb2 + 1)*(j1 + j2 - jb1 + jb2 + 1)*(j1 - j2 + jb1 + jb2 + 2)*(j1 + j2 + jb1 - jb2 + 2)*(j1 + j2 + jb1 + jb2 + 3)",
     "j2*(j1 + 1)*(j2 + 1)*(2*j1 + 3)"},
    {-2, 0, 2, "1/8", "1", "1",
     "(j1 - j2 + jb1 - jb2)*(j1 + j2 - jb1 + jb2)*(j1 - j2 + jb1 + jb2 + 1)*(-j1 - j2 + jb1 + jb2 + 1)*(j1 + j2 + jb1 - jb2 + 1)*(-j1 + j2 + jb1 - jb2 + 1)*(j1 + j2 + jb1 + jb2 + 2)*(-j1 + j2 + jb1 + jb2 + 2)",
     "j1*j2*(j2 + 1)*(2*j1 - 1)"},
    {0, 2, 2, "-1/8", "1", "1",
     "(-j1 - j2 + jb1 + jb2)*(j1 - j2 + jb1 - jb2)*(j1 - j2 + jb1 + jb2 + 1)*(-j1 + j2 + jb1 - jb2 + 1)*(j1 + j2 - jb1 + jb2 + 1)*(-j1 + j2 + jb1 + jb2 + 2)*(j1 + j2 + jb1 - jb2 + 2)*(j1 + j2 + jb1 + jb2 + 3)",
     "j1*(j1 + 1)*(j2 + 1)*(2*j2 + 3)"},
    {0, -2, 2, "1/8", "1", "1",
     "(-j1 + j2 + jb1 - jb2)*(j1 + j2 - jb1 + jb2)*(-j1 + j2 + jb1 + jb2 + 1)*(-j1 - j2 + jb1 + jb2 + 1)*(j1 + j2 + jb1 - jb2 + 1)*(j1 - j2 + jb1 - jb2 + 1)*(j1 + j2 + jb1 + jb2 + 2)*(j1 - j2 + jb1 + jb2 + 2)",
     "j1*j2*(j1 + 1)*(2*j2 - 1)"},
    {0, 0, 2, "-1/8", "1", "(j1^4 + 2*j1^3 - j1^2*(10*j2^2 + 10*j2 + 2*jb1^2 + 4*jb1 + 2*jb2^2 + 2*jb2 + 1) - j1*(10*j2^2 + 10*j2 + 2*jb1^2 + 4*jb1 + 2*jb2^2 + 2*jb2 + 2) + j2^4 + 2*j2^3 - j2^2*(2*jb1^2 + 4*jb1 + 2*jb2^2 + 2*jb2 + 1) - 2*j2*(jb1^2 + 2*jb1 + jb2^2 + jb2 + 1) + jb1^4 + 4*jb1^3 - 2*jb1^2*jb2^2 - 2*jb1^2*jb2 + 5*jb1^2 - 4*jb1*jb2^2 - 4*jb1*jb2 + 2*jb1 + jb2^4 + 2*jb2^3 - jb2^2 - 2*jb2)",
     "1",
     "j1*j2*(j1 + 1)*(j2 + 1)"},
    {1, 1, 1, "1/8", "1", "(2*j1 + 2*j2 + 3)",
     "(-j1 - j2 + jb1 + jb2)*(j1 + j2 - jb1 + jb2 + 1)*(j1 + j2 + jb1 - jb2 + 2)*(j1 + j2 + jb1 + jb2 + 3)",
     "(j1 + 1)*(j2 + 1)"},
    {-1, -1, 1, "1/8", "1", "(2*j1 + 2*j2 + 1)",
     "(j1 + j2 - jb1 + jb2)*(-j1 - j2 + jb1 + jb2 + 1)*(j1 + j2 + jb1 - jb2 + 1)*(j1 + j2 + jb1 + jb2 + 2)",
     "j1*j2"},
    {1, -1, 1, "1/8", "1", "(2*j1 - 2*j2 + 1)",
     "(-j1 + j2 + jb1 - jb2)*(-j1 + j2 + jb1 + jb2 + 1)*(j1 - j2 + jb1 - jb2 + 1)*(j1 - j2 + jb1 + jb2 + 2)",
     "j2*(j1 + 1)"},
    {-1, 1, 1, "-1/8", "1", "(2*j1 - 2*j2 - 1)",
     "(j1 - j2 + jb1 - jb2)*(j1 - j2 + jb1 + jb2 + 1)*(-j1 + j2 + jb1 - jb2 + 1)*(-j1 + j2 + jb1 + jb2 + 2)",
     "j1*(j2 + 1)"},
    {0, 0, 0, "-1/10", "5", "(5*j1^2 + 5*j1 + 5*j2^2 + 5*j2 - 3*jb1^2 - 6*jb1 - 3*jb2^2 - 3*jb2)",
     "1",
     "1"},
}};

// (jb1, jb2) x (1,1) -> (jb1, jb2), auxiliary vector
const std::array<TableRow, 14> kDiagonalAux{{
    {2, 2, 2, "1/4", "1", "((j1 - j2)^2)",
     "(j1 + j2 - jb1 - jb2)*(j1 + j2 - jb1 + jb2 + 1)*(j1 + j2 - jb1 - jb2 + 1)*(j1 + j2 + jb1 - jb2 + 2)*(j1 + j2 - jb1 + jb2 + 2)*(j1 + j2 + jb1 + jb2 + 3)*(j1 + j2 + jb1 - jb2 + 3)*(j1 + j2 + jb1 + jb2 + 4)",
     "(j1 + 1)*(j2 + 1)*(2*j1 + 3)*(2*j2 + 3)"},
    {-2, -2, 2, "1/4", "1", "((j1 - j2)^2)",
     "(j1 + j2 + jb1 - jb2)*(j1 + j2 - jb1 + jb2)*(j1 + j2 + jb1 + jb2 + 1)*(-j1 - j2 + jb1 + jb2 + 1)*(j1 + j2 + jb1 - jb2 + 1)*(j1 + j2 - jb1 + jb2 - 1)*(j1 + j2 + jb1 + jb2 + 2)*(-j1 - j2 + jb1 + jb2 + 2)",
     "j1*j2*(2*j1 - 1)*(2*j2 - 1)"},
    {-2, 2, 2, "1/4", "1", "((j1 + j2 + 1)^2)",
     "(j1 - j2 + jb1 + jb2)*(j1 - j2 + jb1 - jb2)*(j1 - j2 + jb1 + jb2 + 1)*(-j1 + j2 + jb1 - jb2 + 1)*(j1 - j2 + jb1 - jb2 - 1)*(-j1 + j2 + jb1 + jb2 + 2)*(-j1 + j2 + jb1 - jb2 + 2)*(-j1 + j2 + jb1 + jb2 + 3)",
     "j1*(2*j1 - 1)*(2*j2^2 + 5*j2 + 3)"},
    {2, -2, 2, "1/4", "1", "((j1 + j2 + 1)^2)",
     "(-j1 + j2 + jb1 + jb2)*(-j1 + j2 + jb1 - jb2)*(-j1 + j2 + jb1 + jb2 + 1)*(j1 - j2 + jb1 - jb2 + 1)*(-j1 + j2 + jb1 - jb2 - 1)*(j1 - j2 + jb1 + jb2 + 2)*(j1 - j2 + jb1 - jb2 + 2)*(j1 - j2 + jb1 + jb2 + 3)",
     "j2*(2*j2 - 1)*(2*j1^2 + 5*j1 + 3)"},
    {2, 0, 2, "1/4", "1", "((j1 + 1)^2 - j2*(j2 + 1))",
     "(-j1 - j2 + jb1 + jb2)*(-j1 + j2 + jb1 - jb2)*(-j1 + j2 + jb1 + jb2 + 1)*(j1 - j2 + jb1 - jb2 + 1)*(j1 + j2 - jb1 + jb2 + 1)*(j1 - j2 + jb1 + jb2 + 2)*(j1 + j2 + jb1 - jb2 + 2)*(j1 + j2 + jb1 + jb2 + 3)",
     "j2*(j2 + 1)*(j1 + 1)*(2*j1 + 3)"},
    {-2, 0, 2, "1/4", "1", "(-j1^2 + j2^2 + j2)",
     "(j1 - j2 + jb1 - jb2)*(j1 + j2 - jb1 + jb2)*(j1 - j2 + jb1 + jb2 + 1)*(-j1 - j2 + jb1 + jb2 + 1)*(j1 + j2 + jb1 - jb2 + 1)*(-j1 + j2 + jb1 - jb2 + 1)*(j1 + j2 + jb1 + jb2 + 2)*(-j1 + j2 + jb1 + jb2 + 2)",
     "j1*(2*j1 - 1)*j2*(j2 + 1)"},
    {0, 2, 2, "1/4", "1", "((j2 + 1)^2 - j1*(j1 + 1))",
     "(-j1 - j2 + jb1 + jb2)*(j1 - j2 + jb1 - jb2)*(j1 - j2 + jb1 + jb2 + 1)*(-j1 + j2 + jb1 - jb2 + 1)*(j1 + j2 - jb1 + jb2 + 1)*(-j1 + j2 + jb1 + jb2 + 2)*(j1 + j2 + jb1 - jb2 + 2)*(j1 + j2 + jb1 + jb2 + 3)",
     "j1*(j1 + 1)*(j2 + 1)*(2*j2 + 3)"},
    {0, -2, 2, "1/4", "1", "(j1^2 + j1 - j2^2)",
     "(-j1 + j2 + jb1 - jb2)*(j1 + j2 - jb1 + jb2)*(-j1 + j2 + jb1 + jb2 + 1)*(-j1 - j2 + jb1 + jb2 + 1)*(j1 + j2 + jb1 - jb2 + 1)*(j1 - j2 + jb1 - jb2 + 1)*(j1 + j2 + jb1 + jb2 + 2)*(j1 - j2 + jb1 + jb2 + 2)",
     "j1*(j1 + 1)*j2*(2*j2 - 1)"},
    {0, 0, 2, "-1/4", "1", "(j1^6 + 3*j1^5 - j1^4*(j2^2 + j2 + 2*jb1^2 + 4*jb1 + 2*jb2^2 + 2*jb2 - 1) - j1^3*(2*j2^2 + 2*j2 + 4*jb1^2 + 8*jb1 + 4*jb2^2 + 4*jb2 + 3) + j1^2*(-j2^4 - 2*j2^3 + j2^2*(4*jb1^2 + 8*jb1 + 4*jb2^2 + 4*jb2 + 2) + j2*(4*jb1^2 + 8*jb1 + 4*jb2^2 + 4*jb2 + 3) + jb1^4 + 4*jb1^3 + jb1^2*(-2*jb2^2 - 2*jb2 + 3) - 2*jb1*(2*jb2^2 + 2*jb2 + 1) + jb2^4 + 2*jb2^3 - 3*jb2^2 - 4*jb2 - 2) + j1*(-j2^4 - 2*j2^3 + j2^2*(4*jb1^2 + 8*jb1 + 4*jb2^2 + 4*jb2 + 3) + j2*(4*jb1^2 + 8*jb1 + 4*jb2^2 + 4*jb2 + 4) + jb1^4 + 4*jb1^3 + jb1^2*(-2*jb2^2 - 2*jb2 + 5) + jb1*(-4*jb2^2 - 4*jb2 + 2) + jb2*(jb2^3 + 2*jb2^2 - jb2 - 2)) + j2*(j2 + 1)*(j2^4 + 2*j2^3 - j2^2*(2*jb1^2 + 4*jb1 + 2*jb2^2 + 2*jb2 + 1) - j2*(2*jb1^2 + 4*jb1 + 2*jb2^2 + 2*jb2 + 2) + jb1^4 + 4*jb1^3 + jb1^2*(-2*jb2^2 - 2*jb2 + 5) + jb1*(-4*jb2^2 - 4*jb2 + 2) + jb2*(jb2^3 + 2*jb2^2 - jb2 - 2)))",
     "1",
     "j1*j2*(j1 + 1)*(j2 + 1)"},
    {1, 1, 1, "-1/4", "1", "((j1 - j2)^2)*(2*j1 + 2*j2 + 3)",
     "(-j1 - j2 + jb1 + jb2)*(j1 + j2 - jb1 + jb2 + 1)*(j1 + j2 + jb1 - jb2 + 2)*(j1 + j2 + jb1 + jb2 + 3)",
     "(j1 + 1)*(j2 + 1)"},
    {-1, -1, 1, "-1/4", "1", "((j1 - j2)^2)*(2*j1 + 2*j2 + 1)",
     "(j1 + j2 - jb1 + jb2)*(-j1 - j2 + jb1 + jb2 + 1)*(j1 + j2 + jb1 - jb2 + 1)*(j1 + j2 + jb1 + jb2 + 2)",
     "j1*j2"},
    {1, -1, 1, "1/4", "1", "((j1 + j2 + 1)^2)*(-2*j1 + 2*j2 - 1)",
     "(-j1 + j2 + jb1 - jb2)*(-j1 + j2 + jb1 + jb2 + 1)*(j1 - j2 + jb1 - jb2 + 1)*(j1 - j2 + jb1 + jb2 + 2)",
     "j2*(j1 + 1)"},
    {-1, 1, 1, "1/4", "1", "((j1 + j2 + 1)^2)*(2*j1 - 2*j2 - 1)",
     "(j1 - j2 + jb1 - jb2)*(j1 - j2 + jb1 + jb2 + 1)*(-j1 + j2 + jb1 - jb2 + 1)*(-j1 + j2 + jb1 + jb2 + 2)",
     "j1*(j2 + 1)"},
    {0, 0, 0, "-1/10", "5", "(jb1^4 + 4*jb1^3 + jb1^2*(-2*jb2^2 - 2*jb2 + 5) + jb1*(-4*jb2^2 - 4*jb2 + 2) + jb2^4 + 2*jb2^3 - jb2^2 - 2*jb2 - 5*(j1^2 + j1 - j2*(j2 + 1))^2)",
     "1",
     "1"},
}};
const std::array<NormRow, 7> kNorms{{
    {"1", "1", "(2*jb2 + 1)*(2*jb1 + 2)*(2*jb2 + 2)*(2*jb1 + 3)*(jb1 + jb2 + 2)*(jb1 + jb2 + 3)*(2*jb1 + 2*jb2 + 3)*(2*jb1 + 2*jb2 + 5)"},
    {"1", "1", "jb2*(2*jb1 + 2)*(2*jb2 + 2)*(2*jb1 + 3)*(jb1 - jb2 + 1)*(2*jb1 - 2*jb2 + 1)*(jb1 + jb2 + 2)*(2*jb1 + 2*jb2 + 3)"},
    {"1", "1", "(2*jb1 + 1)*(2*jb2 + 1)*(2*jb2 + 2)*(2*jb1 + 3)*(jb1 - jb2)*(2*jb1 - 2*jb2 + 1)*(jb1 + jb2 + 2)*(2*jb1 + 2*jb2 + 3)"},
    {"1", "1", "jb2*(2*jb2 + 1)*(2*jb1 + 3)*(4*jb1 + 4)*(jb1 - jb2 + 1)*(2*jb1 - 2*jb2 + 1)*(jb1 - jb2 + 2)*(2*jb1 - 2*jb2 + 3)"},
    {"1", "1", "(2*jb2 + 1)*(2*jb1 + 2)*(jb1 - jb2)*(jb1 + jb2 + 1)*(jb1 - jb2 + 1)*(jb1 + jb2 + 2)*(jb1 + jb2 + 3)*(2*jb1 + 2*jb2 + 3)"},
    {"1", "1", "(2*jb2 + 1)*(2*jb1 + 2)*(jb1 - jb2)*(jb1 + jb2 + 1)*(jb1 - jb2 + 1)*(2*jb1 - 2*jb2 + 1)*(jb1 + jb2 + 2)*(jb1 - jb2 + 2)"},
    {"2", "5", "(4*jb2^2*(jb2 + 1)^2 + 11*(8*jb1^2 + 16*jb1 + 5)*jb2*(jb2 + 1) + jb1*(jb1 + 2)*(2*jb1 - 1)*(2*jb1 + 5))"},
}};

}  // namespace

const std::array<TableRow, 14>& table_rows(Family f) {
    switch (f) {
        case Family::Raise11: return kRaise11;
        case Family::Raise10: return kRaise10;
        case Family::Raise01: return kRaise01;
        case Family::Raise1m1: return kRaise1m1;
        case Family::RaiseHH: return kRaiseHH;
        case Family::RaiseHmH: return kRaiseHmH;
        case Family::Diagonal: return kDiagonalCopy1;
        case Family::Aux: return kDiagonalAux;
    }
    return kDiagonalAux;
}

const NormRow& norm_row(Family f) { return kNorms.at(static_cast<std::size_t>(f)); }

const char* const kMixingXScale = "-1/10";
const char* const kMixingXPoly =
    "(jb1 - jb2)*(jb1 - jb2 + 1)*(jb1 + jb2 + 1)*(jb1 + jb2 + 2)*(4*jb1*(jb1 + 2) + 4*jb2*(jb2 + 1) - 5)";
const char* const kMixingH2Scale = "1/5";
const char* const kMixingH2Poly =
    "(jb1 - jb2)*(jb1 - jb2 + 1)*(jb1 + jb2 + 1)*(jb1 + jb2 + 2)"
    "*(4*jb2^4 + 8*jb2^3 - (8*jb1*(jb1 + 2) + 9)*jb2^2 - (8*jb1*(jb1 + 2) + 13)*jb2"
    " + (jb1 + 1)^2*(4*jb1*(jb1 + 2) - 5))";

}  // namespace so5cg::detail
