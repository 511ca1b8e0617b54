// Coordinates transcribed from the published figures.
#pragma once

#include <string_view>
#include <vector>

namespace figdata {

struct Point {
  int d;
  std::string_view value;
};
using Column = std::vector<Point>;

// limit law of the r-th leaf depth, binary trees; index 0 is r = 0
inline const std::vector<Column> binary_leaf_limit = {
  {{1, "1/4"}, {2, "1/4"}, {3, "3/16"}, {4, "1/8"}, {5, "5/64"}, {6, "3/64"}, {7, "7/256"}, {8, "1/64"}, {9, "9/1024"}, {10, "5/1024"}, {11, "11/4096"}, {12, "3/2048"}, {13, "13/16384"}, {14, "7/16384"}, {15, "15/65536"}, {16, "1/8192"}, {17, "17/262144"}, {18, "9/262144"}, {19, "19/1048576"}, {20, "5/524288"}},
  {{1, "0"}, {2, "1/8"}, {3, "3/16"}, {4, "3/16"}, {5, "5/32"}, {6, "15/128"}, {7, "21/256"}, {8, "7/128"}, {9, "9/256"}, {10, "45/2048"}, {11, "55/4096"}, {12, "33/4096"}, {13, "39/8192"}, {14, "91/32768"}, {15, "105/65536"}, {16, "15/16384"}, {17, "17/32768"}, {18, "153/524288"}, {19, "171/1048576"}, {20, "95/1048576"}},
  {{1, "0"}, {2, "1/32"}, {3, "3/32"}, {4, "9/64"}, {5, "5/32"}, {6, "75/512"}, {7, "63/512"}, {8, "49/512"}, {9, "9/128"}, {10, "405/8192"}, {11, "275/8192"}, {12, "363/16384"}, {13, "117/8192"}, {14, "1183/131072"}, {15, "735/131072"}, {16, "225/65536"}, {17, "17/8192"}, {18, "2601/2097152"}, {19, "1539/2097152"}, {20, "1805/4194304"}},
  {{1, "0"}, {2, "1/64"}, {3, "3/64"}, {4, "11/128"}, {5, "15/128"}, {6, "135/1024"}, {7, "133/1024"}, {8, "119/1024"}, {9, "99/1024"}, {10, "1245/16384"}, {11, "935/16384"}, {12, "1353/32768"}, {13, "949/32768"}, {14, "5187/262144"}, {15, "3465/262144"}, {16, "1135/131072"}, {17, "731/131072"}, {18, "14841/4194304"}, {19, "9291/4194304"}, {20, "11495/8388608"}},
  {{1, "0"}, {2, "5/512"}, {3, "15/512"}, {4, "57/1024"}, {5, "85/1024"}, {6, "855/8192"}, {7, "945/8192"}, {8, "945/8192"}, {9, "873/8192"}, {10, "12105/131072"}, {11, "9955/131072"}, {12, "15675/262144"}, {13, "11895/262144"}, {14, "69979/2097152"}, {15, "50085/2097152"}, {16, "17505/1048576"}, {17, "11985/1048576"}, {18, "257805/33554432"}, {19, "170487/33554432"}, {20, "222205/67108864"}},
  {{1, "0"}, {2, "7/1024"}, {3, "21/1024"}, {4, "81/2048"}, {5, "125/2048"}, {6, "1329/16384"}, {7, "1575/16384"}, {8, "1701/16384"}, {9, "1701/16384"}, {10, "25515/262144"}, {11, "22649/262144"}, {12, "38379/524288"}, {13, "31239/524288"}, {14, "196469/4194304"}, {15, "149835/4194304"}, {16, "55629/2097152"}, {17, "40341/2097152"}, {18, "916623/67108864"}, {19, "638685/67108864"}, {20, "875045/134217728"}},
  {{1, "0"}, {2, "21/4096"}, {3, "63/4096"}, {4, "245/8192"}, {5, "385/8192"}, {6, "4215/65536"}, {7, "5201/65536"}, {8, "5901/65536"}, {9, "6237/65536"}, {10, "99225/1048576"}, {11, "93555/1048576"}, {12, "168399/2097152"}, {13, "145483/2097152"}, {14, "969787/16777216"}, {15, "782565/16777216"}, {16, "306845/8388608"}, {17, "234549/8388608"}, {18, "5606685/268435456"}, {19, "4102119/268435456"}, {20, "5890665/536870912"}},
  {{1, "0"}, {2, "33/8192"}, {3, "99/8192"}, {4, "387/16384"}, {5, "615/16384"}, {6, "6855/131072"}, {7, "8673/131072"}, {8, "10159/131072"}, {9, "11151/131072"}, {10, "185085/2097152"}, {11, "182655/2097152"}, {12, "344817/4194304"}, {13, "312741/4194304"}, {14, "2189187/33554432"}, {15, "1854525/33554432"}, {16, "762855/16777216"}, {17, "611167/16777216"}, {18, "15295257/536870912"}, {19, "11702043/536870912"}, {20, "17550015/1073741824"}},
};

// limit law of the r-th up-step height; index 0 is r = 1
inline const std::vector<Column> upstep_limit = {
  {{1, "1"}, {2, "0"}, {3, "0"}, {4, "0"}, {5, "0"}, {6, "0"}, {7, "0"}, {8, "0"}},
  {{1, "1/4"}, {2, "3/4"}, {3, "0"}, {4, "0"}, {5, "0"}, {6, "0"}, {7, "0"}, {8, "0"}},
  {{1, "1/8"}, {2, "3/8"}, {3, "1/2"}, {4, "0"}, {5, "0"}, {6, "0"}, {7, "0"}, {8, "0"}},
  {{1, "5/64"}, {2, "15/64"}, {3, "3/8"}, {4, "5/16"}, {5, "0"}, {6, "0"}, {7, "0"}, {8, "0"}},
  {{1, "7/128"}, {2, "21/128"}, {3, "9/32"}, {4, "5/16"}, {5, "3/16"}, {6, "0"}, {7, "0"}, {8, "0"}},
  {{1, "21/512"}, {2, "63/512"}, {3, "7/32"}, {4, "35/128"}, {5, "15/64"}, {6, "7/64"}, {7, "0"}, {8, "0"}},
  {{1, "33/1024"}, {2, "99/1024"}, {3, "45/256"}, {4, "15/64"}, {5, "15/64"}, {6, "21/128"}, {7, "1/16"}, {8, "0"}},
};

// limit law of the r-th down-step height; index 0 is r = 1
inline const std::vector<Column> downstep_limit = {
  {{1, "1/4"}, {2, "1/4"}, {3, "3/16"}, {4, "1/8"}, {5, "5/64"}, {6, "3/64"}, {7, "7/256"}, {8, "1/64"}, {9, "9/1024"}, {10, "5/1024"}, {11, "11/4096"}, {12, "3/2048"}, {13, "13/16384"}, {14, "7/16384"}, {15, "15/65536"}, {16, "1/8192"}},
  {{1, "1/8"}, {2, "3/16"}, {3, "3/16"}, {4, "5/32"}, {5, "15/128"}, {6, "21/256"}, {7, "7/128"}, {8, "9/256"}, {9, "45/2048"}, {10, "55/4096"}, {11, "33/4096"}, {12, "39/8192"}, {13, "91/32768"}, {14, "105/65536"}, {15, "15/16384"}, {16, "17/32768"}},
  {{1, "5/64"}, {2, "9/64"}, {3, "21/128"}, {4, "5/32"}, {5, "135/1024"}, {6, "105/1024"}, {7, "77/1024"}, {8, "27/512"}, {9, "585/16384"}, {10, "385/16384"}, {11, "495/32768"}, {12, "39/4096"}, {13, "1547/262144"}, {14, "945/262144"}, {15, "285/131072"}, {16, "85/65536"}},
  {{1, "7/128"}, {2, "7/64"}, {3, "9/64"}, {4, "75/512"}, {5, "275/2048"}, {6, "231/2048"}, {7, "91/1024"}, {8, "273/4096"}, {9, "1575/32768"}, {10, "275/8192"}, {11, "187/8192"}, {12, "1989/131072"}, {13, "5187/524288"}, {14, "3325/524288"}, {15, "525/131072"}, {16, "1309/524288"}},
  {{1, "21/512"}, {2, "45/512"}, {3, "495/4096"}, {4, "275/2048"}, {5, "2145/16384"}, {6, "1911/16384"}, {7, "3185/32768"}, {8, "315/4096"}, {9, "3825/65536"}, {10, "2805/65536"}, {11, "31977/1048576"}, {12, "11115/524288"}, {13, "60515/4194304"}, {14, "40425/4194304"}, {15, "26565/4194304"}, {16, "4301/1048576"}},
  {{1, "33/1024"}, {2, "297/4096"}, {3, "429/4096"}, {4, "1001/8192"}, {5, "4095/32768"}, {6, "1911/16384"}, {7, "833/8192"}, {8, "1377/16384"}, {9, "8721/131072"}, {10, "53295/1048576"}, {11, "39501/1048576"}, {12, "57057/2097152"}, {13, "161161/8388608"}, {14, "111573/8388608"}, {15, "18975/2097152"}, {16, "25415/4194304"}},
  {{1, "429/16384"}, {2, "1001/16384"}, {3, "3003/32768"}, {4, "455/4096"}, {5, "7735/65536"}, {6, "7497/65536"}, {7, "6783/65536"}, {8, "2907/32768"}, {9, "305235/4194304"}, {10, "241395/4194304"}, {11, "370139/8388608"}, {12, "69069/2097152"}, {13, "805805/33554432"}, {14, "575575/33554432"}, {15, "201825/16777216"}, {16, "69615/8388608"}},
};

// limit law of the r-th leaf depth, Schroeder trees (decimals); index 0 is r = 0
inline const std::vector<Column> schroeder_leaf_limit = {
  {{1, "0.3432"}, {2, "0.2843"}, {3, "0.1766"}, {4, "0.09752"}, {5, "0.05049"}, {6, "0.02510"}, {7, "0.01214"}, {8, "0.005745"}, {9, "0.002678"}, {10, "0.001233"}, {11, "0.0005618"}, {12, "0.0002538"}, {13, "0.0001138"}, {14, "0.00005076"}, {15, "0.00002250"}, {16, "9.936e-6"}},
  {{1, "0.05890"}, {2, "0.2154"}, {3, "0.2372"}, {4, "0.1884"}, {5, "0.1271"}, {6, "0.07796"}, {7, "0.04476"}, {8, "0.02456"}, {9, "0.01302"}, {10, "0.006724"}, {11, "0.003392"}, {12, "0.001682"}, {13, "0.0008200"}, {14, "0.0003966"}, {15, "0.0001892"}, {16, "0.00008960"}},
  {{1, "0.02021"}, {2, "0.1025"}, {3, "0.1777"}, {4, "0.1947"}, {5, "0.1683"}, {6, "0.1257"}, {7, "0.08555"}, {8, "0.05408"}, {9, "0.03252"}, {10, "0.01872"}, {11, "0.01045"}, {12, "0.005707"}, {13, "0.003028"}, {14, "0.001573"}, {15, "0.0008105"}, {16, "0.0004106"}},
  {{1, "0.01040"}, {2, "0.05765"}, {3, "0.1183"}, {4, "0.1592"}, {5, "0.1662"}, {6, "0.1468"}, {7, "0.1153"}, {8, "0.08304"}, {9, "0.05600"}, {10, "0.03582"}, {11, "0.02197"}, {12, "0.01302"}, {13, "0.007489"}, {14, "0.004205"}, {15, "0.002311"}, {16, "0.001247"}},
  {{1, "0.006550"}, {2, "0.03743"}, {3, "0.08244"}, {4, "0.1235"}, {5, "0.1460"}, {6, "0.1461"}, {7, "0.1291"}, {8, "0.1039"}, {9, "0.07760"}, {10, "0.05453"}, {11, "0.03656"}, {12, "0.02347"}, {13, "0.01452"}, {14, "0.008770"}, {15, "0.005159"}, {16, "0.002953"}},
  {{1, "0.004594"}, {2, "0.02663"}, {3, "0.06074"}, {4, "0.09653"}, {5, "0.1231"}, {6, "0.1343"}, {7, "0.1297"}, {8, "0.1140"}, {9, "0.09270"}, {10, "0.07071"}, {11, "0.05120"}, {12, "0.03539"}, {13, "0.02350"}, {14, "0.01513"}, {15, "0.009453"}, {16, "0.005752"}},
  {{1, "0.003452"}, {2, "0.02015"}, {3, "0.04691"}, {4, "0.07717"}, {5, "0.1033"}, {6, "0.1196"}, {7, "0.1232"}, {8, "0.1158"}, {9, "0.1011"}, {10, "0.08274"}, {11, "0.06371"}, {12, "0.04703"}, {13, "0.03338"}, {14, "0.02283"}, {15, "0.01497"}, {16, "0.009770"}},
  {{1, "0.002712"}, {2, "0.01593"}, {3, "0.03756"}, {4, "0.06325"}, {5, "0.08746"}, {6, "0.1055"}, {7, "0.1142"}, {8, "0.1132"}, {9, "0.1042"}, {10, "0.09030"}, {11, "0.07376"}, {12, "0.05755"}, {13, "0.04309"}, {14, "0.03108"}, {15, "0.02155"}, {16, "0.01468"}},
};

// limit law of the depth of node r; index 0 is r = 1
inline const std::vector<Column> noncrossing_limit = {
  {{1, "4/9"}, {2, "8/27"}, {3, "4/27"}, {4, "16/243"}, {5, "20/729"}, {6, "8/729"}, {7, "28/6561"}, {8, "32/19683"}, {9, "4/6561"}, {10, "40/177147"}, {11, "44/531441"}, {12, "16/531441"}},
  {{1, "32/243"}, {2, "68/243"}, {3, "184/729"}, {4, "1076/6561"}, {5, "592/6561"}, {6, "884/19683"}, {7, "3704/177147"}, {8, "548/59049"}, {9, "704/177147"}, {10, "7916/4782969"}, {11, "3224/4782969"}, {12, "3868/14348907"}},
  {{1, "448/6561"}, {2, "1088/6561"}, {3, "1472/6561"}, {4, "36208/177147"}, {5, "25984/177147"}, {6, "5344/59049"}, {7, "241024/4782969"}, {8, "41552/1594323"}, {9, "60992/4782969"}, {10, "771712/129140163"}, {11, "349376/129140163"}, {12, "153776/129140163"}},
  {{1, "2560/59049"}, {2, "59264/531441"}, {3, "91264/531441"}, {4, "917200/4782969"}, {5, "2425792/14348907"}, {6, "1802080/14348907"}, {7, "10635584/129140163"}, {8, "6353744/129140163"}, {9, "3533440/129140163"}, {10, "16714304/1162261467"}, {11, "75545600/10460353203"}, {12, "36545968/10460353203"}},
  {{1, "146432/4782969"}, {2, "389120/4782969"}, {3, "1920512/14348907"}, {4, "21377536/129140163"}, {5, "21479744/129140163"}, {6, "6112256/43046721"}, {7, "123860800/1162261467"}, {8, "27983488/387420489"}, {9, "157346944/3486784401"}, {10, "2484864512/94143178827"}, {11, "1376814464/94143178827"}, {12, "2187764480/282429536481"}},
  {{1, "2981888/129140163"}, {2, "8092672/129140163"}, {3, "13864960/129140163"}, {4, "164108288/1162261467"}, {5, "178827776/1162261467"}, {6, "55999936/387420489"}, {7, "11315320192/94143178827"}, {8, "2833804736/31381059609"}, {9, "5869627904/94143178827"}, {10, "101950811264/2541865828329"}, {11, "61796785408/2541865828329"}, {12, "35614329472/2541865828329"}},
  {{1, "21168128/1162261467"}, {2, "174915584/3486784401"}, {3, "308051968/3486784401"}, {4, "3799146496/31381059609"}, {5, "39347520512/282429536481"}, {6, "39504505856/282429536481"}, {7, "318763256320/2541865828329"}, {8, "259532832512/2541865828329"}, {9, "194512148480/2541865828329"}, {10, "407211191296/7625597484987"}, {11, "801518414848/22876792454961"}, {12, "498521490944/22876792454961"}},
};

// average depth of each leaf, binary trees of size 20
inline const std::vector<Point> binary_leaf_n20 = {
  {0, "30/11"}, {1, "49/11"}, {2, "807/143"}, {3, "34609/5291"}, {4, "38314/5291"}, {5, "41221/5291"}, {6, "103663/12617"}, {7, "3122507/365893"}, {8, "3203257/365893"}, {9, "9752537/1097679"}, {10, "34150511/3825245"}, {11, "9752537/1097679"}, {12, "3203257/365893"}, {13, "3122507/365893"}, {14, "103663/12617"}, {15, "41221/5291"}, {16, "38314/5291"}, {17, "34609/5291"}, {18, "807/143"}, {19, "49/11"}, {20, "30/11"}
};

// average height of each vertex, Dyck paths of semilength 20
inline const std::vector<Point> dyck_vertex_n20 = {
  {0, "0"}, {1, "1"}, {2, "19/13"}, {3, "25/13"}, {4, "1077/481"}, {5, "1229/481"}, {6, "1343/481"}, {7, "1457/481"}, {8, "16996/5291"}, {9, "17965/5291"}, {10, "580171/164021"}, {11, "54857/14911"}, {12, "1637365/432419"}, {13, "129529/33263"}, {14, "132113/33263"}, {15, "134697/33263"}, {16, "681883/166315"}, {17, "690281/166315"}, {18, "47914921/11475735"}, {19, "48200453/11475735"}, {20, "48200453/11475735"}, {21, "48200453/11475735"}, {22, "47914921/11475735"}, {23, "690281/166315"}, {24, "681883/166315"}, {25, "134697/33263"}, {26, "132113/33263"}, {27, "129529/33263"}, {28, "1637365/432419"}, {29, "54857/14911"}, {30, "580171/164021"}, {31, "17965/5291"}, {32, "16996/5291"}, {33, "1457/481"}, {34, "1343/481"}, {35, "1229/481"}, {36, "1077/481"}, {37, "25/13"}, {38, "19/13"}, {39, "1"}, {40, "0"}
};

// average height of each up-step, Dyck paths of semilength 20
inline const std::vector<Point> dyck_upstep_n20 = {
  {1, "1"}, {2, "45/26"}, {3, "1114/481"}, {4, "1348/481"}, {5, "17003/5291"}, {6, "89899/25234"}, {7, "1411570/365893"}, {8, "3003679/731786"}, {9, "4726585/1097679"}, {10, "34150511/7650490"}, {11, "5025952/1097679"}, {12, "3402835/731786"}, {13, "1710937/365893"}, {14, "117427/25234"}, {15, "24218/5291"}, {16, "23486/5291"}, {17, "22355/5291"}, {18, "1119/286"}, {19, "38/11"}, {20, "30/11"}
};

// average depth of each leaf, increasing binary trees of size 20
inline const std::vector<Point> increasing_leaf_n20 = {
  {0, "55835135/15519504"}, {1, "352893319/77597520"}, {2, "20400421/4084080"}, {3, "64604663/12252240"}, {4, "3938059/720720"}, {5, "2018579/360360"}, {6, "410923/72072"}, {7, "416071/72072"}, {8, "4034/693"}, {9, "16213/2772"}, {10, "7381/1260"}, {11, "16213/2772"}, {12, "4034/693"}, {13, "416071/72072"}, {14, "410923/72072"}, {15, "2018579/360360"}, {16, "3938059/720720"}, {17, "64604663/12252240"}, {18, "20400421/4084080"}, {19, "352893319/77597520"}, {20, "55835135/15519504"}
};

// fixed-r limit averages, Schroeder trees (decimals)
inline const std::vector<Point> schroeder_fixed_r_decimal = {
  {0, "2.414213562"}, {1, "3.828427118"}, {2, "4.899494922"}, {3, "5.793939213"}, {4, "6.577269557"}, {5, "7.282610240"}, {6, "7.929372267"}, {7, "8.530065214"}
};

}  // namespace figdata
