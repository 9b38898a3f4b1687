#pragma once
// Generated by tests/reference/generate_reference.py; do not edit.

#include <vector>

namespace drkernel::reference {

struct Case {
  const char* name;
  int m;
  int multiplicity;
  std::vector<double> V, Y;
  double a;
  bool theta_infinity;
  std::vector<double> v, y;
  double busemann;
  std::vector<double> gradient;
  std::vector<double> hessian;  // row-major
  std::vector<double> spectrum;  // ascending
};

inline const std::vector<Case>& cases() {
  static const std::vector<Case> all = {
      {"heisenberg_general", 1, 1, {0.3, -0.7}, {0.4}, 1.3, false, {1.1, 0.2}, {-0.5},
       0.5608045925057923102,
       {-0.037976021733173274206, -0.037175789106321724731, -0.64664303474528556345, 0.76093926702007647785},
       {0.78879319493318640041, -0.2467339327288824915, 0.001865793886182655977, 0.028897446141979365617, -0.2467339327288824915, 0.70838258754445744172, -0.024039465086762607591, 0.001865793886182655977, 0.001865793886182655977, -0.024039465086762607591, 0.29161741245554255828, 0.2467339327288824915, 0.028897446141979365617, 0.001865793886182655977, 0.2467339327288824915, 0.21120680506681359959},
       {0.000000000000000000000003902754106076382581, 0.5, 0.5, 1.0}},
      {"complex_mult2_general", 1, 2, {0.5, -0.2, 0.9, 0.1}, {-0.6}, 0.8, false, {-0.3, 0.4, 0.1, 0.7}, {0.25},
       0.48365014361095006069,
       {0.088492333455439845099, 0.35479397706731709454, -0.54108421832429889352, 0.35479397706731709454, -0.54108421832429889352, -0.39353184363388979015},
       {0.57351820943674976304, 0.090768661535870387576, 0.093752266490465591602, 0.090768661535870387576, 0.093752266490465591602, 0.034824551132184187302, 0.090768661535870387576, 0.58344668257818681106, 0.19197342174763849764, 0.083446682578186811056, 0.19197342174763849764, 0.093752266490465591602, 0.093752266490465591602, 0.19197342174763849764, 0.41655331742181318894, 0.19197342174763849764, -0.083446682578186811056, -0.090768661535870387576, 0.090768661535870387576, 0.083446682578186811056, 0.19197342174763849764, 0.58344668257818681106, 0.19197342174763849764, 0.093752266490465591602, 0.093752266490465591602, 0.19197342174763849764, -0.083446682578186811056, 0.19197342174763849764, 0.41655331742181318894, -0.090768661535870387576, 0.034824551132184187302, 0.093752266490465591602, -0.090768661535870387576, 0.093752266490465591602, -0.090768661535870387576, 0.42648179056325023696},
       {-0.000000000000000000000006803212532189608884, 0.5, 0.5, 0.5, 0.5, 1.0}},
      {"nonsymmetric_general", 2, 1, {1.0, 0.5, -0.3, 0.2}, {0.4, -1.0}, 0.7, false, {0.1, 0.2, 0.3, 0.4}, {1.0, 0.0},
       0.40664349925784410084,
       {-0.36674646690864159395, 0.20601978963891934546, -0.023260298830200571262, -0.57652312100568558771, 0.16189906408004683331, -0.37995211985481504363, -0.56529461734496872345},
       {0.66470932339569550315, 0.20515012344588127594, 0.080633846433886921252, -0.078244916085139457376, -0.073263175248851745251, -0.13934609755120215014, -0.20731980367373978436, 0.20515012344588127594, 0.65216546864179678492, -0.013742167877079044559, 0.10950804723705690371, -0.061155785748032223735, -0.010886823043751724189, -0.016731023485415121915, 0.080633846433886921252, -0.013742167877079044559, 0.64464391486561681913, -0.041211474700635182842, -0.079638303259737475237, 0.12075529363355485828, -0.14578800672257254168, -0.078244916085139457376, 0.10950804723705690371, -0.041211474700635182842, 0.35450810924843524061, 0.051636491776043507534, -0.08641209697539960081, -0.19631232359689009433, -0.073263175248851745251, -0.061155785748032223735, -0.079638303259737475237, 0.051636491776043507534, 0.54947021285848430848, 0.1947067942345633209, 0.0023561906285364556031, -0.13934609755120215014, -0.010886823043751724189, 0.12075529363355485828, -0.08641209697539960081, 0.1947067942345633209, 0.65484868100349911077, -0.21478488820273736346, -0.20731980367373978436, -0.016731023485415121915, -0.14578800672257254168, -0.19631232359689009433, 0.0023561906285364556031, -0.21478488820273736346, 0.47965428998647223294},
       {-0.0000000000000000000000054574297100276109929, 0.36909081927261610951, 0.5, 0.5, 0.68537847949348686589, 0.9455307012338970246, 1.0}},
      {"quaternionic_general", 3, 1, {-0.4, 0.8, 0.3, -1.1}, {0.2, 0.5, -0.7}, 2.1, false, {0.6, -0.1, 0.9, 0.2}, {-0.3, 0.8, 0.1},
       0.70802469560699113112,
       {0.23606510154112055308, -0.60138969990907632162, 0.36818073714933270408, -0.04438762477348342124, -0.5283379663477007851, 0.32464352585337750252, -0.23995391041336598012, -0.054443324211435978684},
       {0.55510432069337511357, 0.15045503628385613443, -0.0080187508543562615433, -0.14265197901123805501, 0.0090221243285967221439, -0.076637006895244955586, 0.056644744226920184563, 0.012852168858208781372, 0.15045503628385613443, 0.52749937598427645642, 0.22142010302653970318, -0.026694260342201876536, -0.31773701103241543952, 0.11634140034410157725, 0.0088245379850560264341, 0.08295837693573436488, -0.0080187508543562615433, 0.22142010302653970318, 0.75361189193317931, 0.016342668409409108124, 0.1945238619138758105, -0.11103957695041896367, -0.027353623727444369861, 0.17317533140158618832, -0.14265197901123805501, -0.026694260342201876536, 0.016342668409409108124, 0.88719868590797376997, -0.023451667403827053495, 0.13011018635602278214, -0.0021630684293225305467, 0.076479262399767254048, 0.0090221243285967221439, -0.31773701103241543952, 0.1945238619138758105, -0.023451667403827053495, 0.61002794045658112183, 0.018391152076761115694, -0.20567263329126174364, -0.020276559486042610769, -0.076637006895244955586, 0.11634140034410157725, -0.11103957695041896367, 0.13011018635602278214, 0.018391152076761115694, 0.50543763398048208402, 0.077899483518900607691, 0.017674672731179129476, 0.056644744226920184563, 0.0088245379850560264341, -0.027353623727444369861, -0.0021630684293225305467, -0.20567263329126174364, 0.077899483518900607691, 0.55325317373632900434, -0.013063888540436747874, 0.012852168858208781372, 0.08295837693573436488, 0.17317533140158618832, 0.076479262399767254048, -0.020276559486042610769, 0.017674672731179129476, -0.013063888540436747874, 0.60786697730780313986},
       {0.0000000000000000000000012121468020794010696, 0.5, 0.5, 0.5, 0.5, 1.0, 1.0, 1.0}},
      {"octonionic_general", 7, 1, {0.1, -0.2, 0.3, 0.4, -0.5, 0.6, 0.05, -0.15}, {0.3, -0.1, 0.2, 0.0, 0.5, -0.4, 0.1}, 0.9, false, {0.2, 0.1, -0.3, 0.5, 0.0, -0.2, 0.4, 0.3}, {0.1, 0.2, -0.3, 0.4, -0.5, 0.6, -0.7},
       0.74215216304927293417,
       {-0.54564518425626891615, -0.12675613509670949677, -0.22825166418218912957, -0.14417802390624829981, 0.065858817645421717089, -0.32974719326766876238, 0.16755824399915342951, -0.020038570418773824825, -0.24335138965885702584, 0.12809624890409826205, -0.1031647642180657144, 0.1031647642180657144, -0.17366068643374395258, 0.34388254739355238134, -0.30691517354874550035, 0.36365579386868164327},
       {0.55741080980840840348, -0.022097588602268189689, -0.059353933648895147605, 0.091289656294092769032, -0.013305643593841080706, -0.096610278695522105521, 0.13814247860232918018, -0.058005899349579444463, -0.084510835590746286055, 0.06989510133581358142, -0.056291356780521005171, 0.056291356780521005171, -0.094757117247210358704, 0.18763785593507001724, -0.16746678642204999038, 0.19842703265133654323, -0.022097588602268189689, 0.62879340530487867157, -0.028932298781126333484, -0.018275449076237020972, 0.0083480091867726304156, -0.041797479777597397901, 0.021239035412924105454, -0.0025400117391470215351, -0.030846281623570075545, -0.048953502279125850987, -0.18303646750456768682, 0.062317957073322547668, -0.105327246763585488, -0.0031259070469365098197, 0.0081685686996205553315, -0.0021770753223600984406, -0.059353933648895147605, -0.028932298781126333484, 0.59276170088759510063, -0.032908873895100623108, 0.015032384728638829569, -0.075265345622751346534, 0.038245448040252075504, -0.0045738370459171120584, -0.055545359670682486348, 0.076304468076044727649, -0.072788719400613884871, -0.14641217159638571048, 0.007076789000230869477, -0.0048229256072136775026, -0.1183265773839464038, 0.035933090238826334072, 0.091289656294092769032, -0.018275449076237020972, -0.032908873895100623108, 0.62407322051202323439, 0.0094953941849188596899, -0.047542298713964225245, 0.024158216508998928884, -0.00288912148488501252, -0.03508592247585343356, 0.067709854319673039904, 0.032192194246473631068, 0.080064579552310203874, -0.072110004501415206435, 0.097852984397729009109, -0.12756511256210390799, 0.0057160440602902441479, -0.013305643593841080706, 0.0083480091867726304156, 0.015032384728638829569, 0.0094953941849188596899, 0.64052313922788102972, 0.021716760270505028722, -0.011035187836527323423, 0.0013197165550849672212, 0.016026834795302629063, 0.16152343321648480834, -0.05839617831652493887, 0.040271976694117861584, 0.059709765738698553936, 0.024424251920960323561, 0.066928200129114030505, -0.10726462994710110668, -0.096610278695522105521, -0.041797479777597397901, -0.075265345622751346534, -0.047542298713964225245, 0.021716760270505028722, 0.53612731162162864547, 0.055251860667580045555, -0.0066076623526872025815, -0.080244437717794897151, -0.0044757511375111491889, 0.013053658456167387066, -0.014254386813651855937, -0.010197837844275411027, 0.17858479252735543602, 0.068755283665164085182, 0.070673287060846450652, 0.13814247860232918018, 0.021239035412924105454, 0.038245448040252075504, 0.024158216508998928884, -0.011035187836527323423, 0.055251860667580045555, 0.61678475795745410437, 0.0033576276716231226584, 0.040775531525991828191, 0.061851106803753346712, -0.030986571523714061973, -0.064358056636161168976, -0.036092208040069713087, -0.010554069695030914296, 0.10066735781940044721, 0.10902617447336796477, -0.058005899349579444463, -0.0025400117391470215351, -0.0045738370459171120583, -0.00288912148488501252, 0.0013197165550849672212, -0.0066076623526872025816, 0.0033576276716231226584, 0.64445897878510578326, -0.004876413958185474856, 0.05083954396272540232, 0.081247414940482625419, -0.044647855289234333724, -0.17343961260819754569, -0.042350275641144201497, 0.040916144770441652583, -0.05790334547696278048, -0.084510835590746286055, -0.030846281623570075545, -0.055545359670682486348, -0.03508592247585343356, 0.016026834795302629063, -0.080244437717794897151, 0.040775531525991828191, -0.004876413958185474856, 0.58564062424063707443, 0.078244350082094534476, 0.021609840945459621488, 0.10841997806929715362, 0.0069806209101146174033, -0.086275404926473633195, -0.0094977462798810390319, 0.13556242888362691509, 0.06989510133581358142, -0.048953502279125850987, 0.076304468076044727649, 0.067709854319673039904, 0.16152343321648480834, -0.0044757511375111491889, 0.061851106803753346712, 0.05083954396272540232, 0.078244350082094534476, 0.83873082792716536416, 0.013215019315409955867, -0.013215019315409955867, 0.022245282514273425709, -0.044050064384699852889, 0.039314682463344618704, -0.04658294308682009443, -0.056291356780521005171, -0.18303646750456768682, -0.072788719400613884871, 0.032192194246473631068, -0.05839617831652493887, 0.013053658456167387066, -0.030986571523714061973, 0.081247414940482625419, 0.021609840945459621488, 0.013215019315409955867, 0.84449650833429696739, 0.010642968576169091973, -0.017915663769884638155, 0.035476561920563639911, -0.03166283151410304862, 0.037516464230996049206, 0.056291356780521005171, 0.062317957073322547668, -0.14641217159638571048, 0.080064579552310203874, 0.040271976694117861584, -0.014254386813651855937, -0.064358056636161168976, -0.044647855289234333724, 0.10841997806929715362, -0.013215019315409955867, 0.010642968576169091973, 0.84449650833429696739, 0.017915663769884638155, -0.035476561920563639911, 0.03166283151410304862, -0.037516464230996049206, -0.094757117247210358704, -0.105327246763585488, 0.007076789000230869477, -0.072110004501415206435, 0.059709765738698553936, -0.010197837844275411027, -0.036092208040069713087, -0.17343961260819754569, 0.0069806209101146174033, 0.022245282514273425709, -0.017915663769884638155, 0.017915663769884638155, 0.82498144289782691847, 0.05971887923294879385, -0.053299099715406798511, 0.063152714788843349496, 0.18763785593507001724, -0.0031259070469365098197, -0.0048229256072136775026, 0.097852984397729009109, 0.024424251920960323561, 0.17858479252735543602, -0.010554069695030914296, -0.042350275641144201497, -0.086275404926473633195, -0.044050064384699852889, 0.035476561920563639911, -0.035476561920563639911, 0.05971887923294879385, 0.73688427050858725966, 0.10554277171367682873, -0.12505488076998683069, -0.16746678642204999038, 0.0081685686996205553315, -0.1183265773839464038, -0.12756511256210390799, 0.066928200129114030505, 0.068755283665164085182, 0.10066735781940044721, 0.040916144770441652583, -0.0094977462798810390319, 0.039314682463344618704, -0.03166283151410304862, 0.03166283151410304862, -0.053299099715406798511, 0.10554277171367682873, 0.76094255315600948971, 0.11161148108721324639, 0.19842703265133654323, -0.0021770753223600984406, 0.035933090238826334072, 0.0057160440602902441479, -0.10726462994710110668, 0.070673287060846450652, 0.10902617447336796477, -0.05790334547696278048, 0.13556242888362691509, -0.04658294308682009443, 0.037516464230996049206, -0.037516464230996049206, 0.063152714788843349496, -0.12505488076998683069, 0.11161148108721324639, 0.72289394049620498591},
       {0.0000000000000000000000011378041110389049908, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0}},
      {"nonsymmetric_v0", 2, 1, {0.6, -0.4, 0.2, 0.9}, {0.3, 0.1}, 1.5, false, {0.6, -0.4, 0.2, 0.9}, {1.05, 0.85},
       -0.47756007669304938051,
       {0.33333333333333333333, 0.0, 1.0022867662845733673e-37, 0.0, 0.0, -0.66666666666666666667, -0.66666666666666666667},
       {0.88888888888888888889, -0.0000000000000000000000050114338314228668365, 0.0, 0.0, 0.0, 0.22222222222222222222, 0.22222222222222222222, 0.0, 0.5, -0.0000000000000000000000037265859718516773806, -0.0000000000000000000000037265859718516773806, 0.0, 5.0114338314228668365e-38, 0.0, 5.0114338314228668365e-38, 0.0000000000000000000000037265859718516773806, 0.5, -0.000000000000000000000013363823550460978231, 0.0000000000000000000000037265859718516773806, 0.0, 0.0, 0.0, 0.0000000000000000000000037265859718516773806, -0.000000000000000000000013363823550460978231, 0.5, -0.0000000000000000000000037265859718516773806, 0.0, 0.0, 0.0, 0.0, -0.0000000000000000000000037265859718516773806, 0.0000000000000000000000037265859718516773806, 0.5, 0.0, 5.0114338314228668365e-38, 0.22222222222222222222, 5.0114338314228668365e-38, 0.0, 0.0, 0.0, 0.55555555555555555556, -0.44444444444444444444, 0.22222222222222222222, 0.0, 0.0, 0.0, 5.0114338314228668365e-38, -0.44444444444444444444, 0.55555555555555555556},
       {0.000000000000000000000010022861078483529969, 0.5, 0.5, 0.5, 0.5, 1.0, 1.0}},
      {"nonsymmetric_y0", 2, 1, {0.6, -0.4, 0.2, 0.9}, {0.3, 0.1}, 1.5, false, {1.1, -0.65, 0.5, 1.0}, {0.2, 0.0475},
       -0.56110280754605559769,
       {0.87134502923976608187, -0.38198670452759112642, 0.19099335226379556321, -0.22919202271655467585, -0.076397340905518225285, 0.0, 0.0},
       {0.12037892000957559591, 0.16642110811289788841, -0.083210554056448944207, 0.099852664867738733048, 0.033284221622579577683, 0.0, 0.0, 0.16642110811289788841, 0.4715468007250094046, 0.064202090671773651152, -0.094843997583301984656, -0.014591384243584920716, -0.083210554056448944207, 0.099852664867738733048, -0.083210554056448944207, 0.064202090671773651152, 0.55763596776216043683, 0.021887076365377381075, 0.058365536974339682865, -0.16642110811289788841, -0.033284221622579577683, 0.099852664867738733048, -0.094843997583301984656, 0.021887076365377381075, 0.54961070642818873044, 0.018968799516660396931, 0.033284221622579577683, -0.16642110811289788841, 0.033284221622579577683, -0.014591384243584920716, 0.058365536974339682865, 0.018968799516660396931, 0.54158544509421702404, -0.099852664867738733048, -0.083210554056448944207, 0.0, -0.083210554056448944207, -0.16642110811289788841, 0.033284221622579577683, -0.099852664867738733048, 0.87962107999042440409, 0.0, 0.0, 0.099852664867738733048, -0.033284221622579577683, -0.16642110811289788841, -0.083210554056448944207, 0.0, 0.87962107999042440409},
       {-0.0000000000000000000000015012193144010046273, 0.5, 0.5, 0.5, 0.5, 1.0, 1.0}},
      {"quaternionic_infinity", 3, 1, {0.6, -0.4, 0.2, 0.9}, {0.3, 0.1, -0.2}, 0.4, true, {}, {},
       0.91629073187415506518,
       {-1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
       {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.5, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.5, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.5, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.5, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0},
       {0.0, 0.5, 0.5, 0.5, 0.5, 1.0, 1.0, 1.0}},
  };
  return all;
}

}  // namespace drkernel::reference
