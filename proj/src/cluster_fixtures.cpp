#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cominus/cluster.hpp"

// Arrow lists of the reference quiver figures, transcribed as the grid codes
// of the source drawings ("43" = column 4, row 3; "4-1" = column 4, row -1;
// "00" = the extra frozen vertex). Rows are translated to ascending ranks per
// column so the generated quivers can be compared code-for-code.

namespace cominus {
namespace fixtures {

namespace {

using Key = std::pair<int, int>;
using Arrow = std::pair<Key, Key>;

const char* kE6Gls =
    "12>11 22>21 33>32 32>31 44>43 43>42 42>41 53>52 52>51 62>61 "
    "11>32 31>42 21>43 61>53 52>44 00>11 41>21 41>51 51>42 51>61 "
    "42>32 42>52 32>12 32>43 43>33 43>22";

const char* kE6Cmp =
    "12>33 33>44 44>53 53>62 22>44 41>21 41>51 51>42 51>61 42>32 "
    "42>52 32>12 32>43 43>33 43>22 11>31 31>41 21>42 61>52 52>43";

const char* kE7Gls =
    "12>11 22>21 21>20 33>32 32>31 31>30 44>43 43>42 42>41 41>40 40>4-1 "
    "53>52 52>51 51>50 50>5-1 62>61 61>60 60>6-1 72>71 71>70 "
    "70>60 6-1>50 5-1>40 20>41 11>32 31>42 21>43 61>53 52>44 71>62 "
    "4-1>20 4-1>30 30>11 30>40 40>31 40>50 50>41 50>60 60>51 60>71 "
    "41>21 41>51 51>42 51>61 42>32 42>52 32>12 32>43 43>33 43>22 00>70";

const char* kE7Cmp =
    "12>33 33>44 44>53 53>62 62>72 22>44 4-1>20 4-1>30 30>11 30>40 "
    "40>31 40>50 50>41 50>60 60>51 60>71 41>21 41>51 51>42 51>61 "
    "42>32 42>52 32>12 32>43 43>33 43>22 70>6-1 6-1>5-1 5-1>4-1 20>40 "
    "11>31 31>41 21>42 61>52 52>43 71>61";

std::pair<int, int> parse_code(const std::string& s) {
  int col = s[0] - '0';
  int row = std::stoi(s.substr(1));
  return {col, row};
}

std::vector<Arrow> parse_arrows(const char* text) {
  std::vector<Arrow> raw;
  std::istringstream is(text);
  std::string tok;
  std::map<int, std::set<int>> rows_by_col;
  while (is >> tok) {
    size_t gt = tok.find('>');
    auto a = parse_code(tok.substr(0, gt));
    auto b = parse_code(tok.substr(gt + 1));
    raw.push_back({a, b});
    rows_by_col[a.first].insert(a.second);
    rows_by_col[b.first].insert(b.second);
  }
  // translate row codes to ascending ranks per column; the extra vertex "00"
  // keeps (0, 1)
  std::map<Key, Key> rank_of;
  for (const auto& [col, rows] : rows_by_col) {
    int r = 1;
    for (int row : rows) rank_of[{col, row}] = {col, col == 0 ? 1 : r}, ++r;
  }
  std::vector<Arrow> out;
  for (const auto& [a, b] : raw) out.push_back({rank_of.at(a), rank_of.at(b)});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Arrow> gls_quiver_fixture(const CartanType& t) {
  if (t.series == 'E' && t.rank == 6) return parse_arrows(kE6Gls);
  if (t.series == 'E' && t.rank == 7) return parse_arrows(kE7Gls);
  throw std::invalid_argument("no quiver fixture for " + t.name());
}

std::vector<Arrow> cmp_quiver_fixture(const CartanType& t) {
  if (t.series == 'E' && t.rank == 6) return parse_arrows(kE6Cmp);
  if (t.series == 'E' && t.rank == 7) return parse_arrows(kE7Cmp);
  throw std::invalid_argument("no quiver fixture for " + t.name());
}

}  // namespace fixtures
}  // namespace cominus
