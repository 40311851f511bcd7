#pragma once

// Expected beta = 16 pair-correlation tables: normalization denominators,
// r(y) coefficients by descending power and cos(k theta) coefficients by
// ascending k.

#include <utility>
#include <string_view>
#include <vector>

namespace tables {

struct PairTable {
  int M;
  std::string_view norm_num;
  std::string_view norm_den;
  std::vector<std::pair<int, std::string_view>> r;
  std::vector<std::pair<int, std::string_view>> fourier;
};

inline const std::vector<PairTable>& beta16() {
  static const std::vector<PairTable> t = {
      {4, "12", "99561092450391000",
       {
           {32, "12870"},
           {30, "320320"},
           {28, "22994400"},
           {26, "268195200"},
           {24, "5071284400"},
           {22, "23874264960"},
           {20, "215207952960"},
           {18, "254763308800"},
           {16, "2436174140400"},
           {14, "-2292869779200"},
           {12, "12661736447360"},
           {10, "-21738014538240"},
           {8, "36816650270400"},
           {6, "-43095224972800"},
           {4, "35720422982400"},
           {2, "-18426562452480"},
           {0, "4465830320120"},
       },
       {
           {0, "118075131722187900"},
           {2, "213766603488921600"},
           {4, "158481210768192000"},
           {6, "96065488366848000"},
           {8, "47480325016924800"},
           {10, "19055181216614400"},
           {12, "6176104576012800"},
           {14, "1604801113344000"},
           {16, "331315058646000"},
           {18, "53682163292160"},
           {20, "6731088698880"},
           {22, "638896527360"},
           {24, "44999094400"},
           {26, "2230425600"},
           {28, "77975040"},
           {30, "1464320"},
           {32, "25740"},
       }},
      {5, "20", "7656714453153197981835000",
       {
           {48, "9465511770"},
           {46, "-26726150880"},
           {44, "1017078519600"},
           {42, "47238601924800"},
           {40, "-309243642107400"},
           {38, "3582382328965440"},
           {36, "8316664938822240"},
           {34, "-150541961420822400"},
           {32, "1380760795798827300"},
           {30, "-4467019703704272000"},
           {28, "1140384068909616960"},
           {26, "72058305100576354560"},
           {24, "-347152302588287196000"},
           {22, "742339143220330656000"},
           {20, "-116898029205563548800"},
           {18, "-3557317781523015544320"},
           {16, "9104214857906943776430"},
           {14, "-8019052421829687295200"},
           {12, "-5679307289719178715600"},
           {10, "17996708682478726200000"},
           {8, "-10152703343080717178760"},
           {6, "-5002967022288185396160"},
           {4, "4575147589326263320800"},
           {2, "1003927326173995766400"},
           {0, "17725775603742191700"},
       },
       {
           {0, "246563699858183708375661000"},
           {2, "465727370420524755793536000"},
           {4, "392285293376234908519584000"},
           {6, "294591250231999404038784000"},
           {8, "197120766096092961383976000"},
           {10, "117431537219232058982016000"},
           {12, "62216406700671716385235200"},
           {14, "29275482236971810871116800"},
           {16, "12214266507988416658729800"},
           {18, "4509469834211802982579200"},
           {20, "1469813045677907747731200"},
           {22, "421773093442219018705920"},
           {24, "106203105750701891954880"},
           {26, "23378305018893834746880"},
           {28, "4478670640088860849920"},
           {30, "742545200580675148800"},
           {32, "105932607489264338640"},
           {34, "12901031043491036160"},
           {36, "1326253783709986560"},
           {38, "114403575099939840"},
           {40, "8146060456248000"},
           {42, "456087964400640"},
           {44, "20929545711360"},
           {46, "855236828160"},
           {48, "18931023540"},
       }},
      {6, "30", "2889253496242619386328267523990000",
       {
           {64, "99561092450391000"},
           {62, "-2293887570057008640"},
           {60, "29234092041020655360"},
           {58, "-233037842068173542400"},
           {56, "2570110185308835312000"},
           {54, "-34769352212608261248000"},
           {52, "370237231600199029946880"},
           {50, "-2750986150525240158136320"},
           {48, "15868045721917816108624800"},
           {46, "-85719567550218211588492800"},
           {44, "489690642781322769058272000"},
           {42, "-2661618272154068193895019520"},
           {40, "12088358584235274923179678080"},
           {38, "-45133280783262574039660723200"},
           {36, "149519236121248085045619494400"},
           {34, "-479337485462335081099964160000"},
           {32, "1468477085601996344193043055760"},
           {30, "-3958521784145569339542873469440"},
           {28, "9037773641518524206215550496000"},
           {26, "-18187118515733318049926150323200"},
           {24, "34248319980119855364931166390400"},
           {22, "-59443896348939732246057042201600"},
           {20, "88617988648727371296927130867200"},
           {18, "-111345609884277417307472304691200"},
           {16, "124447163190041591180410092163200"},
           {14, "-125007449747844157477063579699200"},
           {12, "103281272904656629583781486105600"},
           {10, "-68665200143241567896813963980800"},
           {8, "39413141819233148796281980070400"},
           {6, "-16767860222869455568077756518400"},
           {4, "5318174506889516654964627302400"},
           {2, "-1088464869074174319545545728000"},
           {0, "108656639093091455882121691800"},
       },
       {
           {0, "1392968344952515316713424670628254600"},
           {2, "2683136499928597908237146479261286400"},
           {4, "2396855326278025276738716960654336000"},
           {6, "1985732466477010409334394895339520000"},
           {8, "1525453313439224718086765162092185600"},
           {10, "1086333660616440626740600768519372800"},
           {12, "716913950607648252913961387875737600"},
           {14, "438255383130013294869806055297024000"},
           {16, "248041177919425024623387656839224000"},
           {18, "129896828278260908317140114074419200"},
           {20, "62900066613343210359500666530713600"},
           {22, "28140648277386383160361255935590400"},
           {24, "11621272276750613056217285512550400"},
           {26, "4425519260407430865436223345049600"},
           {28, "1552230781514297298085961466777600"},
           {30, "500786818482709704188864880230400"},
           {32, "148393515635861604354307960984800"},
           {34, "40319458262945776918999277568000"},
           {36, "10025440522668881880715791360000"},
           {38, "2276334643199562401445521326080"},
           {40, "470868639752793808225590359040"},
           {42, "88480327233922073304953978880"},
           {44, "15048243843315362505350553600"},
           {46, "2307932656429825238645145600"},
           {48, "318247821460574863560331200"},
           {50, "39229136328273704545075200"},
           {52, "4272783290612194619289600"},
           {54, "407613854944772152934400"},
           {56, "34604318070329790182400"},
           {58, "2662759282536706129920"},
           {60, "175456450154948751360"},
           {62, "8156044693536030720"},
           {64, "199122184900782000"},
       }},
  };
  return t;
}

}  // namespace tables
