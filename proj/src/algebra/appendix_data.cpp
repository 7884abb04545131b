#include "appendix_data.hpp"

namespace limcyc::appendix_data {

const std::vector<Source>& general() {
  static const std::vector<Source> s = {
      {"R1", R"(
-u^6*(u^2+1)*v^20 -3*u^5*(5*u^4-2*u^2+5)*v^19 -3*u^4*(u^2+1)*(16*u^4-45*u^2+16)*v^18
-u^3*(17*u^8+594*u^6-2526*u^4+594*u^2+17)*v^17
+u^4*(u^2+1)*(53*u^2+14*u-53)*(53*u^2-14*u-53)*v^16
+12*u^3*(4*u^8+3773*u^6-8726*u^4+3773*u^2+4)*v^15
-u^2*(u^2+1)*(428*u^8-17291*u^6+41082*u^4-17291*u^2+428)*v^14
+u*(17*u^12-14970*u^10-472783*u^8+931608*u^6-472783*u^4-14970*u^2+17)*v^13
-u^2*(u^2+1)*(7713*u^8+948069*u^6-1882520*u^4+948069*u^2+7713)*v^12
-u*(105*u^12+397793*u^10+1044840*u^8-2824512*u^6+1044840*u^4+397793*u^2+105)*v^11
+(u^2+1)*(17*u^12-55874*u^10-1803982*u^8+3675182*u^6-1803982*u^4-55874*u^2+17)*v^10
-u*(105*u^12+397793*u^10+1044840*u^8-2824512*u^6+1044840*u^4+397793*u^2+105)*v^9
-u^2*(u^2+1)*(7713*u^8+948069*u^6-1882520*u^4+948069*u^2+7713)*v^8
+u*(17*u^12-14970*u^10-472783*u^8+931608*u^6-472783*u^4-14970*u^2+17)*v^7
-u^2*(u^2+1)*(428*u^8-17291*u^6+41082*u^4-17291*u^2+428)*v^6
+12*u^3*(4*u^8+3773*u^6-8726*u^4+3773*u^2+4)*v^5
+u^4*(u^2+1)*(53*u^2+14*u-53)*(53*u^2-14*u-53)*v^4 -u^3*(17*u^8+594*u^6-2526*u^4+594*u^2+17)*v^3
-3*u^4*(u^2+1)*(16*u^4-45*u^2+16)*v^2 -3*u^5*(5*u^4-2*u^2+5)*v -u^6*(u^2+1)
)"},
      {"R2", R"(
-64*u^4*v^12 +264*u^3*(u^2+1)*v^11 -3*u^2*(688*u^4-1493*u^2+688)*v^10
+2*u*(u^2+1)*(68*u^4-1877*u^2+68)*v^9 +3*u^2*(39521*u^4-78382*u^2+39521)*v^8
-6*u*(u^2+1)*(6106*u^4-10251*u^2+6106)*v^7
+(1836*u^8-1581246*u^6+3161950*u^4-1581246*u^2+1836)*v^6
-6*u*(u^2+1)*(6106*u^4-10251*u^2+6106)*v^5 +3*u^2*(39521*u^4-78382*u^2+39521)*v^4
+2*u*(u^2+1)*(68*u^4-1877*u^2+68)*v^3 -3*u^2*(688*u^4-1493*u^2+688)*v^2 +264*u^3*(u^2+1)*v
-64*u^4
)"},
      {"H3", R"(
u^3*(v^2-1)^5*(2*u^2*v+u*v^2+u+2*v)*g^5 -u^2*v*(v^2-1)^4*(u^2-1)*(u^2*v+14*u*v^2+14*u+v)*g^4
-2*u*(v^2-1)^3*(u^6*v^3-8*u^5*v^4-9*u^4*v^5+u^3*v^6-8*u^5*v^2-47*u^4*v^3+79*u^3*v^4
-9*u^2*v^5-9*u^4*v+79*u^3*v^2-47*u^2*v^3-8*u*v^4+u^3-9*u^2*v-8*u*v^2+v^3)*g^3
+2*u*v*(v^2-1)^2*(u^2-1)*(u^4*v^4-15*u^3*v^5-u^2*v^6+u^4*v^2-98*u^3*v^3+127*u^2*v^4
-15*u*v^5-15*u^3*v+127*u^2*v^2-98*u*v^3+v^4-u^2-15*u*v+v^2)*g^2
+u*(v^2-1)*(2*u^6*v^7+16*u^5*v^8-4*u^4*v^9+u^3*v^10+108*u^6*v^5-112*u^5*v^6-34*u^4*v^7
-3*u^3*v^8-4*u^2*v^9+2*u^6*v^3-112*u^5*v^4-164*u^4*v^5+322*u^3*v^6-34*u^2*v^7+16*u*v^8
+16*u^5*v^2-34*u^4*v^3+322*u^3*v^4-164*u^2*v^5-112*u*v^6+2*v^7-4*u^4*v-3*u^3*v^2-34*u^2*v^3
-112*u*v^4+108*v^5+u^3-4*u^2*v+16*u*v^2+2*v^3)*g
-v^2*(u^2-1)*(2*u^5*v^7+u^4*v^8+32*u^6*v^4-50*u^5*v^5+28*u^4*v^6-20*u^3*v^7+u^2*v^8
-50*u^5*v^3+38*u^4*v^4-12*u^3*v^5+28*u^2*v^6+2*u*v^7+2*u^5*v+28*u^4*v^2-12*u^3*v^3
+38*u^2*v^4-50*u*v^5+u^4-20*u^3*v+28*u^2*v^2-50*u*v^3+32*v^4+u^2+2*u*v)
)"},
      {"H31", R"(
9*u^4*v^7 +u^3*(8*u^2+3*u+54)*v^6 +u^2*(22*u^3-111*u^2-306*u+594)*v^5
+u*(16*u^4-183*u^3+854*u^2-936*u+72)*v^4 -u*(4*u^4+21*u^3-180*u^2+356*u-24)*v^3
-u*(8*u^4-101*u^3+358*u^2-344*u-120)*v^2 +(-2*u^5+43*u^4-338*u^3+1186*u^2-1848*u+1024)*v
-u*(u-2)*(u-4)^2
)"},
  };
  return s;
}

const std::vector<Source>& displays() {
  static const std::vector<Source> s = {
      {"R1_v1", R"(
(u+1)^2*(u^2+u+1)*(17*u^10-227*u^9-71526*u^8-610029*u^7-1615317*u^6+4554960*u^5-1615317*u^4
-610029*u^3-71526*u^2-227*u+17)
)"},
      {"R1_vu", R"(
-81*u^6*(u^2+1)*(u^20-25*u^18-456*u^16+25326*u^14-7797*u^12-31194*u^10-7797*u^8+25326*u^6-456*u^4
-25*u^2+1)
)"},
      {"R1_u74", R"(
-899358946693952*v^20-998033287229652576*v^19-236273294846159095872*v^18-6233874231058218081704*v^17
+13828786452622076515408*v^16+20501425245268386910464*v^15-11457482312591678745030912*v^14
+28434278502998776616331514*v^13
-212676989914124169685024388*v^12-354523933163399054340696386*v^11+994839798467750981296989933*v^10
-354523933163399054340696386*v^9-212676989914124169685024388*v^8+28434278502998776616331514*v^7
-11457482312591678745030912*v^6+20501425245268386910464*v^5+13828786452622076515408*v^4
-6233874231058218081704*v^3
-236273294846159095872*v^2-998033287229652576*v-899358946693952
)"},
      {"R1_u76", R"(
-1113227487383552*v^20-1268771824564122624*v^19-308489817962516201472*v^18-8356334350772692924096*v^17
+18055403762437022103808*v^16+27280979403158247822336*v^15-15784652469256215920728512*v^14
+40621920223278737678705036*v^13
-292552429520779710016454288*v^12-490771670006273317238659564*v^11+1560081942219797860180360833*v^10
-490771670006273317238659564*v^9-292552429520779710016454288*v^8+40621920223278737678705036*v^7
-15784652469256215920728512*v^6+27280979403158247822336*v^5+18055403762437022103808*v^4
-8356334350772692924096*v^3
-308489817962516201472*v^2-1268771824564122624*v-1113227487383552
)"},
      {"R1_v2", R"(
17408*u^14-127360*u^13-97804288*u^12-1143554440*u^11-5615140720*u^10-5209018030*u^9+5416299723*u^8
+11881429500*u^7+5416299723*u^6-5209018030*u^5-5615140720*u^4-1143554440*u^3-97804288*u^2-127360*u
+17408
)"},
      {"R2_v1", R"(
1836*u^8-73000*u^7-1348248*u^6+43032*u^5+2700488*u^4+43032*u^3-1348248*u^2-73000*u+1836
)"},
      {"R2_vu", R"(
-216*u^4*(8*u^12-393*u^10+8490*u^8-15968*u^6+8490*u^4-393*u^2+8)
)"},
      {"R2_u76", R"(
-2135179264*v^12+669494588928*v^11-397583235316224*v^10+1982571342746336*v^9+22839237334338480*v^8
-536478278900935632*v^7+1738931358905378380*v^6-536478278900935632*v^5+22839237334338480*v^4
+1982571342746336*v^3-397583235316224*v^2+669494588928*v-2135179264
)"},
      {"H3_76_3", R"(
509522997149696*g^5-11464849789747200*g^4-254059618640269312*g^3+47622937841740800*g^2
+3611925187779284480*g
-24809993679363631200
)"},
      {"H3_76_4", R"(
15836668279200000*g^5-278265426516000000*g^4-3292245295420608000*g^3-216103625559360000*g^2
+33077473098545767680*g-141369532357567852800
)"},
      {"H3_g2", R"(
-32*v^22+(-6*v^9+302*v^7-218*v^5+18*v^3)*v^14+(23*v^10-1020*v^8+1226*v^6+4*v^4-297*v^2)*v^12
+(-32*v^11+1658*v^9-2802*v^7-202*v^5+1778*v^3-432*v)*v^10+(18*v^12-1352*v^10+3290*v^8-3290*v^4
+1352*v^2-18)*v^8+(432*v^11-1778*v^9+202*v^7+2802*v^5-1658*v^3+32*v)*v^6+(297*v^10-4*v^8-1226*v^6
+1020*v^4-23*v^2)*v^4+(-18*v^9+218*v^7-302*v^5+6*v^3)*v^2+32*v^6
)"},
      {"H31_v1", R"(
32*u^5-160*u^4+96*u^3+800*u^2-1600*u+1024
)"},
      {"H31_vu", R"(
u*(17*u^10+25*u^9-41*u^8-493*u^7+1419*u^6-657*u^5-599*u^4+29*u^3+1316*u^2-1880*u+1056)
)"},
      {"H31_u76", R"(
300259584*v^7+20407994240*v^6+51947461024*v^5+34832612448*v^4-10765745952*v^3-17069780576*v^2
-3778140160*v-29154816
)"},
      {"R1_uv2", R"(
-9*v^10*(51*v^26-94*v^25+682*v^24+471*v^23+2699*v^22+33297*v^21+38096*v^20-13039*v^19+197314*v^18
-252196*v^17+309782*v^16-354726*v^15+192534*v^14-296674*v^13+192534*v^12-354726*v^11+309782*v^10
-252196*v^9+197314*v^8-13039*v^7+38096*v^6+33297*v^5+2699*v^4+471*v^3+682*v^2-94*v+51)*(v+1)^2
)"},
  };
  return s;
}

}  // namespace limcyc::appendix_data
