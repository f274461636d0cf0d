#include <stdexcept>
#include <vector>

#include "cominus/nobody.hpp"

// Valuation tables of the Plucker coordinates, one row per label.

namespace cominus {
namespace fixtures {

namespace {

const std::vector<std::pair<std::string, std::string>> kE6 = {
    {"p0", "0000000000000000"},   {"p1", "0000000000000001"},
    {"p2", "0000000000000011"},   {"p3", "0000000000000111"},
    {"p4'", "0000000000001111"},  {"p4''", "0000000000010111"},
    {"p5'", "0000000000011111"},  {"p5''", "0000000100010111"},
    {"p6'", "0000000000111111"},  {"p6''", "0000000100011111"},
    {"p7'", "0000000001111111"},  {"p7''", "0000000100111111"},
    {"p8", "0000000011111111"},   {"p8'", "0000000101111111"},
    {"p8''", "0000001100111111"}, {"p9'", "0000000111111111"},
    {"p9''", "0000001101111111"}, {"p10'", "0000001111111111"},
    {"p10''", "0000011101111111"},{"p11'", "0000011111111111"},
    {"p11''", "0001011101111111"},{"p12'", "0000111111111111"},
    {"p12''", "0001011111111111"},{"p13", "0001111111111111"},
    {"p14", "0011111111111111"},  {"p15", "0111111111111111"},
    {"p16", "1111111111111111"},
};

const std::vector<std::pair<std::string, std::string>> kE7 = {
    {"p0", "000000000000000000000000000"},
    {"p1", "000000000000000000000000001"},
    {"p2", "000000000000000000000000011"},
    {"p3", "000000000000000000000000111"},
    {"p4", "000000000000000000000001111"},
    {"p5'", "000000000000000000000101111"},
    {"p5''", "000000000000000000000011111"},
    {"p6'", "000000000000000000000111111"},
    {"p6''", "000000000000000001000011111"},
    {"p7''", "000000000000000001000111111"},
    {"p7'", "000000000000000000001111111"},
    {"p8''", "000000000000000001001111111"},
    {"p8'", "000000000000000000011111111"},
    {"p9''", "000000000000000011001111111"},
    {"p9'", "000000000000000001011111111"},
    {"p9", "000000000000000000111111111"},
    {"p10''", "000000000000000011011111111"},
    {"p10'", "000000000000000001111111111"},
    {"p10", "000000000000100000111111111"},
    {"p11''", "000000000000000111011111111"},
    {"p11'", "000000000000000011111111111"},
    {"p11", "000000000000100001111111111"},
    {"p12''", "000000000000001111011111111"},
    {"p12'", "000000000000000111111111111"},
    {"p12", "000000000000100011111111111"},
    {"p13''", "000000000000001111111111111"},
    {"p13'", "000000000000010111111111111"},
    {"p13", "000000000000100111111111111"},
    {"p14", "000000000000011111111111111"},
    {"p14'", "000000000000101111111111111"},
    {"p14''", "000000000000110111111111111"},
    {"p15", "000000000001011111111111111"},
    {"p15'", "000000000000111111111111111"},
    {"p15''", "000000001000110111111111111"},
    {"p16", "000000000011011111111111111"},
    {"p16'", "000000000001111111111111111"},
    {"p16''", "000000001000111111111111111"},
    {"p17", "000000000111011111111111111"},
    {"p17'", "000000000011111111111111111"},
    {"p17''", "000000001001111111111111111"},
    {"p18", "000000000111111111111111111"},
    {"p18'", "000000001011111111111111111"},
    {"p18''", "000000011001111111111111111"},
    {"p19'", "000000001111111111111111111"},
    {"p19''", "000000011011111111111111111"},
    {"p20'", "000000011111111111111111111"},
    {"p20''", "000000111011111111111111111"},
    {"p21'", "000000111111111111111111111"},
    {"p21''", "000001111011111111111111111"},
    {"p22''", "000001111111111111111111111"},
    {"p22'", "000010111111111111111111111"},
    {"p23", "000011111111111111111111111"},
    {"p24", "000111111111111111111111111"},
    {"p25", "001111111111111111111111111"},
    {"p26", "011111111111111111111111111"},
    {"p27", "111111111111111111111111111"},
};

}  // namespace

const std::vector<std::pair<std::string, std::string>>& valuation_fixture(const CartanType& t) {
  if (t.series == 'E' && t.rank == 6) return kE6;
  if (t.series == 'E' && t.rank == 7) return kE7;
  throw std::invalid_argument("no valuation fixture for " + t.name());
}

}  // namespace fixtures
}  // namespace cominus
