#include "cominus/plucker.hpp"

// Transcriptions of the q-polynomial tables, Plucker relations and
// superpotential data, one entry per display line. The torus sums on the
// potential lines are the pinned Laurent quotients of each term. test_tables
// pins a checksum of these strings against accidental edits.

namespace cominus {
namespace tables_text {

const std::string kE6 = R"(
q12 = p1*p11'' - p0*p12''
q16 = p7'*p9' - p8*p8'
q20 = p5''*p15 - p4''*p16
q24 = p0*(p11'*p13 - p12'*p12'') - p1*(p10''*p13 - p11''*p12') + p2*(p10''*p12'' - p11'*p11'')
q13 = p2*p11'' - p0*p13
q17 = p7'*p10' - p8*p9''
q21 = p6''*p15 - p5'*p16
q25 = p0*p11'*p14 - p1*p10''*p14 + p3*(p10''*p12'' - p11'*p11'')
q8 = p1*p7' - p0*p8
q8' = p2*p6' - p1*p7' + p0*p8
q10 = p2*p8'' - p1*p9'' + p0*p10'
q15 = p6'*(p1*p8' - p0*p9') - p7''*(p1*p7' - p0*p8)
rel p8 = p1*p7' - p2*p6' + p3*p5' - p4'*p4''
rel p9' = p1*p8' - p2*p7'' + p3*p6'' - p4'*p5''
rel p10' = p1*p9'' - p2*p8'' + p4''*p6'' - p5'*p5''
rel p11' = p1*p10'' - p3*p8'' + p4''*p7'' - p5''*p6'
rel p12' = p2*p10'' - p3*p9'' + p4''*p8' - p5''*p7'
rel p12'' = p1*p11'' - p4'*p8'' + p5'*p7'' - p6'*p6''
rel p13 = p2*p11'' - p4'*p9'' + p5'*p8' - p6''*p7'
rel p14 = p3*p11'' - p4'*p10'' + p6'*p8' - p7'*p7''
rel p15 = p4''*p11'' - p5'*p10'' + p6'*p9'' - p7'*p8''
rel p16 = p5''*p11'' - p6''*p10'' + p7''*p9'' - p8'*p8''
pot p1 / p0 = a9 + a16
pot p9' / p8 = a1 + a8
pot q13 / q12 = a5 + a10 + a15
pot q17 / q16 = a2 + a7 + a12
pot q21 / q20 = a4 + a13
pot q25 / q24 = a3 + a6 + a11 + a14
qpot p5'' / p16
minors p16 q12 q20 q24 q16 p8
)";

const std::string kE7 = R"(
q18 = p1*p17 - p0*p18
q36 = p10*p26 - p9*p27
q27 = p0*p27 - p1*p26 + p2*p25 - p3*p24 + p4*p23 - p5''*p22'' + p6''*p21''
q45 = (p9*p11 - p10*p10')*p25 - (p8'*p11 - p9'*p10)*p26 + (p8'*p10' - p9*p9')*p27
q36' = (p0*p14' - p1*p13'' + p2*p12'')*p22' + (-p0*p13 + p1*p12' - p2*p11'')*p23 + (p0*p12 - p1*p11' + p2*p10'')*p24 - p2*p9''*p25 + p1*p9''*p26 - p0*p9''*p27
q27' = -p0*p27 + p1*p26 - p2*p25 + p3*p24
q27'' = -p6''*p21'' - p7'*p20' + p7''*p20'' + p8'*p19' - p9*p18 + p10*p17
q54 = (p5''*p7'' - p6'*p6'')*(p20''*p22'' - p21'*p21'') - (p4*p7'' - p5'*p6'')*(p20''*p23 - p21''*p22') + (p4*p6' - p5'*p5'')*(p21'*p23 - p22'*p22'') + q27'*q27''
q19 = p2*p17 - p0*p19'
q28 = p5'*p23 - p6'*p22'' + p7''*p21''
q37 = p11*p26 - p10'*p27
q46 = (p9*p12 - p10*p11')*p25 + (-p8'*p12 + p10*p10'')*p26 + (p8'*p11' - p9*p10'')*p27
q37' = (p0*p15' - p1*p14 + p3*p12'')*p22' + (-p0*p14'' + p1*p13' - p3*p11'')*p23 + p3*p10''*p24 + (p0*p12 - p1*p11' - p3*p9'')*p25 + p1*p10''*p26 - p0*p10''*p27
q55 = (p5''*p8'' - p6''*p7')*(p20''*p22'' - p21'*p21'') - p4*p8''*(p20''*p23 - p21''*p22') + p4*p7'*(p21'*p23 - p22'*p22'') + p5'*p24*(-p5''*p21' + p6''*p20'') + p4*p24*(-p4*p23 + p5'*p22' + p5''*p22'' - p6''*p21'') + (p4*p24 - p7'*p21' + p8''*p20'')*(-p0*p27 + p1*p26 - p2*p25 + p3*p24)
q10 = p1*p9 - p10
q10' = p2*p8' - p1*p9 + p10
q10'' = p3*p7' - p2*p8' + p1*p9 - p10
q12 = p5''*p7'' - p6'*p6''
q14 = p2*p12'' - p1*p13'' + p14'
q19' = p9'*(p10 - p1*p9) - p8'*(p11 - p1*p10')
q20 = p5'*p15'' - p4*p16'' + p3*p17'' - p2*p18''
q23 = p5''*(p18 - p1*p17) - p6''*(p17' - p1*p16)
q18' = p2*(p5'*p11'' - p4*p12'') + p1*(p4*p13'' - p5'*p12') + p5'*p13 - p4*p14'
q28' = (p1*p15 - p16')*(p5''*p7'' - p6'*p6'') - (p1*p16 - p17')*(p4*p7'' - p5'*p6'') + (p1*p17 - p18)*(p4*p6' - p5'*p5'')
q30 = p18''*(p3*p9'' - p2*p10'' + p1*p11' - p12) - p19''*(p3*p8'' - p2*p9' + p1*p10' - p11) - p20'*(-p3*p7' + p2*p8' - p1*p9 + p10) + p3*q27''
q40 = (p2*p12'' - p1*p13'' + p14')*(p6''*p20'' - p5''*p21' + p4*p22') + (p2*p11'' - p1*p12' + p13)*(-p5'*p22' + p6'*p21' - p7''*p20'' + q27'')
rel p10 = p1*p9 - p2*p8' + p3*p7' - p4*p6' + p5'*p5''
rel p11 = p1*p10' - p2*p9' + p3*p8'' - p4*p7'' + p5'*p6''
rel p12 = p1*p11' - p2*p10'' + p3*p9'' - p5''*p7'' + p6'*p6''
rel p13 = p1*p12' - p2*p11'' + p4*p9'' - p5''*p8'' + p6''*p7'
rel p14' = p1*p13'' - p2*p12'' + p5'*p9'' - p6'*p8'' + p7'*p7''
rel p14'' = p1*p13' - p3*p11'' + p4*p10'' - p5''*p9' + p6''*p8'
rel p15' = p1*p14 - p3*p12'' + p5'*p10'' - p6'*p9' + p7''*p8'
rel p15'' = p2*p13' - p3*p12' + p4*p11' - p5''*p10' + p6''*p9
rel p16' = p1*p15 - p4*p12'' + p5'*p11'' - p7'*p9' + p8'*p8''
rel p16'' = p2*p14 - p3*p13'' + p5'*p11' - p6'*p10' + p7''*p9
rel p17' = p1*p16 - p5''*p12'' + p6'*p11'' - p7'*p10'' + p8'*p9''
rel p17'' = p2*p15 - p4*p13'' + p5'*p12' - p7'*p10' + p8''*p9
rel p18 = p1*p17 - p6''*p12'' + p7''*p11'' - p8''*p10'' + p9'*p9''
rel p18' = p2*p16 - p5''*p13'' + p6'*p12' - p7'*p11' + p9*p9''
rel p18'' = p3*p15 - p4*p14 + p5'*p13' - p8'*p10' + p9*p9'
rel p19' = p2*p17 - p6''*p13'' + p7''*p12' - p8''*p11' + p9''*p10'
rel p19'' = p3*p16 - p5''*p14 + p6'*p13' - p8'*p11' + p9*p10''
rel p20' = p3*p17 - p6''*p14 + p7''*p13' - p9'*p11' + p10'*p10''
rel p20'' = p4*p16 - p5''*p15 + p7'*p13' - p8'*p12' + p9*p11''
rel p21' = p4*p17 - p6''*p15 + p8''*p13' - p9'*p12' + p10'*p11''
rel p21'' = p5'*p16 - p6'*p15 + p7'*p14 - p8'*p13'' + p9*p12''
rel p22' = p5''*p17 - p6''*p16 + p9''*p13' - p10''*p12' + p11'*p11''
rel p22'' = p5'*p17 - p7''*p15 + p8''*p14 - p9'*p13'' + p10'*p12''
rel p23 = p6'*p17 - p7''*p16 + p9''*p14 - p10''*p13'' + p11'*p12''
rel p24 = p7'*p17 - p8''*p16 + p9''*p15 - p11''*p13'' + p12'*p12''
rel p25 = p8'*p17 - p9'*p16 + p10''*p15 - p11''*p14 + p12''*p13'
rel p26 = p9*p17 - p10'*p16 + p11'*p15 - p12'*p14 + p13'*p13''
rel p27 = p1*p26 - p2*p25 + p3*p24 - p4*p23 + p5'*p22' + p5''*p22'' - p6'*p21' + p7'*p20' - p8'*p19' + p9*p18 - p10*p17
pot p1 / p0 = a1 + a15 + a27
pot q19 / q18 = a2 + a9 + a19 + a26
pot q28 / q27 = a6 + a13 + a22
pot q37 / q36 = a10 + a18
pot q37' / q36' = a3 + a8 + a14 + a20 + a25
pot q46 / q45 = a5 + a11 + a17 + a23
pot q55 / q54 = a4 + a7 + a12 + a16 + a21 + a24
qpot p10 / p27
minors q18 q27 q36' q54 q45 q36 p27
)";

}  // namespace tables_text

const std::string& builtin_tables_text(const CartanType& t) {
  if (t.series == 'E' && t.rank == 6) return tables_text::kE6;
  if (t.series == 'E' && t.rank == 7) return tables_text::kE7;
  throw std::invalid_argument("no builtin tables for " + t.name());
}

}  // namespace cominus
