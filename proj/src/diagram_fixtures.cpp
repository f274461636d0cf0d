#include "cominus/minuscule.hpp"

namespace cominus {
namespace fixtures {

namespace {

// Vertex names and labeled cover edges of the 27-vertex diagram, transcribed
// from the source data. Each entry reads: below above letter, meaning the
// f_letter edge goes from `above` down to `below`.
const DiagramFixture kE6 = {
    {"p0",   "p1",   "p2",   "p3",   "p4'",  "p4''", "p5'",  "p5''", "p6'",
     "p6''", "p7'",  "p7''", "p8",   "p8'",  "p8''", "p9'",  "p9''", "p10'",
     "p10''","p11'", "p11''","p12'", "p12''","p13",  "p14",  "p15",  "p16"},
    {
        {"p0", "p1", 6},     {"p1", "p2", 5},     {"p2", "p3", 4},
        {"p3", "p4'", 2},    {"p3", "p4''", 3},   {"p4'", "p5'", 3},
        {"p4''", "p5'", 2},  {"p4''", "p5''", 1}, {"p5'", "p6'", 4},
        {"p5'", "p6''", 1},  {"p5''", "p6''", 2}, {"p6'", "p7'", 5},
        {"p6'", "p7''", 1},  {"p6''", "p7''", 4}, {"p7'", "p8", 6},
        {"p7'", "p8'", 1},   {"p7''", "p8'", 5},  {"p7''", "p8''", 3},
        {"p8", "p9'", 1},    {"p8'", "p9'", 6},   {"p8'", "p9''", 3},
        {"p8''", "p9''", 5}, {"p9'", "p10'", 3},  {"p9''", "p10'", 6},
        {"p9''", "p10''", 4},{"p10'", "p11'", 4}, {"p10''", "p11'", 6},
        {"p10''", "p11''", 2},{"p11'", "p12'", 5},{"p11'", "p12''", 2},
        {"p11''", "p12''", 6},{"p12'", "p13", 2}, {"p12''", "p13", 5},
        {"p13", "p14", 4},   {"p14", "p15", 3},   {"p15", "p16", 1},
    }};

// The 56-vertex diagram, including the commutative cube around degree 13.
const DiagramFixture kE7 = {
    {"p0",   "p1",   "p2",   "p3",   "p4",   "p5'",  "p5''", "p6'",  "p6''",
     "p7'",  "p7''", "p8'",  "p8''", "p9",   "p9'",  "p9''", "p10",  "p10'",
     "p10''","p11",  "p11'", "p11''","p12",  "p12'", "p12''","p13",  "p13'",
     "p13''","p14",  "p14'", "p14''","p15",  "p15'", "p15''","p16",  "p16'",
     "p16''","p17",  "p17'", "p17''","p18",  "p18'", "p18''","p19'", "p19''",
     "p20'", "p20''","p21'", "p21''","p22'", "p22''","p23",  "p24",  "p25",
     "p26",  "p27"},
    {
        {"p0", "p1", 7},       {"p1", "p2", 6},       {"p2", "p3", 5},
        {"p3", "p4", 4},       {"p4", "p5'", 2},      {"p4", "p5''", 3},
        {"p5'", "p6'", 3},     {"p5''", "p6'", 2},    {"p5''", "p6''", 1},
        {"p6'", "p7'", 4},     {"p6'", "p7''", 1},    {"p6''", "p7''", 2},
        {"p7'", "p8'", 5},     {"p7'", "p8''", 1},    {"p7''", "p8''", 4},
        {"p8'", "p9", 6},      {"p8'", "p9'", 1},     {"p8''", "p9'", 5},
        {"p8''", "p9''", 3},   {"p9", "p10", 7},      {"p9", "p10'", 1},
        {"p9'", "p10'", 6},    {"p9'", "p10''", 3},   {"p9''", "p10''", 5},
        {"p10", "p11", 1},     {"p10'", "p11", 7},    {"p10'", "p11'", 3},
        {"p10''", "p11'", 6},  {"p10''", "p11''", 4}, {"p11", "p12", 3},
        {"p11'", "p12", 7},    {"p11'", "p12'", 4},   {"p11''", "p12'", 6},
        {"p11''", "p12''", 2}, {"p12", "p13", 4},     {"p12'", "p13", 7},
        {"p12'", "p13'", 5},   {"p12'", "p13''", 2},  {"p12''", "p13''", 6},
        {"p13", "p14''", 5},   {"p13", "p14'", 2},    {"p13'", "p14''", 7},
        {"p13'", "p14", 2},    {"p13''", "p14'", 7},  {"p13''", "p14", 5},
        {"p14''", "p15'", 2},  {"p14'", "p15'", 5},   {"p14", "p15'", 7},
        {"p14''", "p15''", 6}, {"p14", "p15", 4},     {"p15''", "p16''", 2},
        {"p15'", "p16''", 6},  {"p15'", "p16'", 4},   {"p15", "p16'", 7},
        {"p15", "p16", 3},     {"p16''", "p17''", 4}, {"p16'", "p17''", 6},
        {"p16'", "p17'", 3},   {"p16", "p17'", 7},    {"p16", "p17", 1},
        {"p17''", "p18''", 5}, {"p17''", "p18'", 3},  {"p17'", "p18'", 6},
        {"p17'", "p18", 1},    {"p17", "p18", 7},     {"p18''", "p19''", 3},
        {"p18'", "p19''", 5},  {"p18'", "p19'", 1},   {"p18", "p19'", 6},
        {"p19''", "p20''", 4}, {"p19''", "p20'", 1},  {"p19'", "p20'", 5},
        {"p20''", "p21''", 2}, {"p20''", "p21'", 1},  {"p20'", "p21'", 4},
        {"p21''", "p22''", 1}, {"p21'", "p22''", 2},  {"p21'", "p22'", 3},
        {"p22''", "p23", 3},   {"p22'", "p23", 2},    {"p23", "p24", 4},
        {"p24", "p25", 5},     {"p25", "p26", 6},     {"p26", "p27", 7},
    }};

}  // namespace

const DiagramFixture* diagram_fixture(const CartanType& t) {
  if (t.series == 'E' && t.rank == 6) return &kE6;
  if (t.series == 'E' && t.rank == 7) return &kE7;
  return nullptr;
}

}  // namespace fixtures
}  // namespace cominus
