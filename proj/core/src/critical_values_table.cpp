// Generated by tools/gen_critical_values (reps1=30000 n1=600 reps2=250000 n2=2400 seed=0x5eedcaf3).
// Do not edit by hand; rerun the generator to refresh.
#include "critical_values_raw.hpp"

#include <limits>

namespace regimefactor {

namespace { constexpr double xx = std::numeric_limits<double>::quiet_NaN(); }

const CriticalValueTable::Raw kBuiltinCriticalValues = {
  // supf[trim][nu][alpha][l]
  {
    {{{8.1190,7.6763,6.8906,6.4023,5.9424,5.5650,5.2361,4.9363},{9.6931,8.5718,7.5747,7.0050,6.4671,6.0398,5.6671,5.3263},{13.2166,10.5063,9.0872,8.2007,7.5308,6.9695,6.5146,6.1052}},
     {{5.5167,5.1234,4.7148,4.4115,4.1558,3.9338,3.7418,3.5679},{6.3714,5.6684,5.1335,4.7568,4.4586,4.2061,3.9946,3.7920},{8.2567,6.8315,5.9755,5.4307,5.0634,4.7646,4.4852,4.2523}},
     {{4.4742,4.1265,3.8239,3.6049,3.4224,3.2724,3.1336,3.0067},{5.0832,4.4986,4.1150,3.8604,3.6363,3.4616,3.3021,3.1669},{6.4138,5.2622,4.7108,4.3500,4.0644,3.8425,3.6611,3.5013}},
     {{3.8852,3.6021,3.3565,3.1781,3.0288,2.9023,2.7904,2.6849},{4.3641,3.9071,3.5890,3.3743,3.2048,3.0625,2.9329,2.8191},{5.4070,4.4941,4.0553,3.7705,3.5436,3.3718,3.2212,3.0917}},
     {{3.5060,3.2429,3.0348,2.8865,2.7622,2.6536,2.5577,2.4696},{3.9041,3.4851,3.2284,3.0537,2.9047,2.7867,2.6798,2.5860},{4.7624,4.0096,3.6296,3.3905,3.1978,3.0444,2.9166,2.8073}},
     {{3.2357,2.9983,2.8181,2.6929,2.5821,2.4861,2.4020,2.3230},{3.5792,3.2124,2.9952,2.8358,2.7154,2.6048,2.5083,2.4239},{4.3283,3.6699,3.3405,3.1146,2.9624,2.8243,2.7167,2.6161}}},
    {{{7.5731,6.7778,5.9310,5.2865,4.7311,4.2183,3.7353,3.1338},{9.1532,7.7142,6.6356,5.8784,5.2346,4.6494,4.1154,3.4614},{12.6933,9.7320,8.2354,7.1522,6.3258,5.6024,4.9727,4.1749}},
     {{5.2127,4.6454,4.1632,3.7863,3.4507,3.1416,2.8341,2.4354},{6.0814,5.1852,4.5860,4.1299,3.7520,3.4120,3.0699,2.6458},{7.9411,6.3179,5.4468,4.8266,4.3413,3.9154,3.5067,3.0440}},
     {{4.2615,3.7926,3.4387,3.1598,2.9141,2.6840,2.4442,2.1392},{4.8755,4.1829,3.7362,3.4026,3.1286,2.8742,2.6174,2.2947},{6.2082,4.9887,4.3655,3.9153,3.5725,3.2635,2.9651,2.5976}},
     {{3.7156,3.3337,3.0452,2.8182,2.6174,2.4265,2.2299,1.9719},{4.1915,3.6434,3.2932,3.0162,2.7912,2.5790,2.3635,2.0936},{5.2322,4.2582,3.7607,3.4336,3.1464,2.9119,2.6619,2.3552}},
     {{3.3622,3.0212,2.7783,2.5859,2.4144,2.2541,2.0829,1.8610},{3.7665,3.2747,2.9772,2.7564,2.5614,2.3831,2.2002,1.9667},{4.6199,3.7931,3.3844,3.0905,2.8583,2.6563,2.4397,2.1744}},
     {{3.1108,2.8091,2.5934,2.4242,2.2675,2.1254,1.9735,1.7742},{3.4582,3.0302,2.7765,2.5797,2.4052,2.2487,2.0824,1.8720},{4.2105,3.4963,3.1219,2.8687,2.6583,2.4710,2.2885,2.0561}}},
    {{{7.1441,6.0693,5.0956,4.2811,3.3183,xx,xx,xx},{8.6954,7.0179,5.8004,4.8384,3.7837,xx,xx,xx},{12.2627,9.0036,7.3039,6.0322,4.7237,xx,xx,xx}},
     {{4.9770,4.2776,3.6836,3.1870,2.5646,xx,xx,xx},{5.8286,4.8203,4.0911,3.5183,2.8349,xx,xx,xx},{7.7072,5.9604,4.9801,4.1896,3.3843,xx,xx,xx}},
     {{4.0851,3.5188,3.0962,2.7165,2.2378,xx,xx,xx},{4.7023,3.9059,3.3981,2.9627,2.4411,xx,xx,xx},{6.0306,4.7382,4.0160,3.4576,2.8515,xx,xx,xx}},
     {{3.5773,3.1195,2.7705,2.4586,2.0618,xx,xx,xx},{4.0605,3.4356,3.0000,2.6534,2.2273,xx,xx,xx},{5.1065,4.0528,3.4950,3.0470,2.5531,xx,xx,xx}},
     {{3.2461,2.8348,2.5385,2.2713,1.9315,xx,xx,xx},{3.6556,3.0945,2.7423,2.4374,2.0727,xx,xx,xx},{4.5081,3.6085,3.1367,2.7660,2.3578,xx,xx,xx}},
     {{3.0087,2.6443,2.3845,2.1458,1.8396,xx,xx,xx},{3.3611,2.8740,2.5677,2.2990,1.9704,xx,xx,xx},{4.1153,3.3442,2.9297,2.5996,2.2275,xx,xx,xx}}},
    {{{6.3709,4.7303,2.0666,xx,xx,xx,xx,xx},{7.8843,5.5901,2.5547,xx,xx,xx,xx,xx},{11.3781,7.6213,3.7300,xx,xx,xx,xx,xx}},
     {{4.5364,3.4863,1.7825,xx,xx,xx,xx,xx},{5.3853,4.0012,2.1173,xx,xx,xx,xx,xx},{7.2641,5.1237,2.7919,xx,xx,xx,xx,xx}},
     {{3.7678,2.9562,1.6318,xx,xx,xx,xx,xx},{4.3766,3.3252,1.8870,xx,xx,xx,xx,xx},{5.7262,4.1366,2.4134,xx,xx,xx,xx,xx}},
     {{3.3227,2.6536,1.5507,xx,xx,xx,xx,xx},{3.8073,2.9646,1.7704,xx,xx,xx,xx,xx},{4.8729,3.6277,2.1941,xx,xx,xx,xx,xx}},
     {{3.0284,2.4469,1.4899,xx,xx,xx,xx,xx},{3.4445,2.6993,1.6796,xx,xx,xx,xx,xx},{4.3000,3.2302,2.0632,xx,xx,xx,xx,xx}},
     {{2.8172,2.3030,1.4465,xx,xx,xx,xx,xx},{3.1759,2.5270,1.6094,xx,xx,xx,xx,xx},{3.9394,2.9790,1.9343,xx,xx,xx,xx,xx}}}
  },
  // ud[trim][nu][alpha]
  {
    {{8.6107,9.8910,13.0064},{5.7253,6.4319,8.1671},{4.5689,5.1060,6.3267},{3.9775,4.4200,5.3529},{3.5633,3.9117,4.7483},{3.2775,3.5778,4.2745}},
    {{7.8988,9.2578,12.3919},{5.3705,6.1206,7.8625},{4.3337,4.8900,6.2044},{3.7810,4.2383,5.1940},{3.4009,3.7651,4.6144},{3.1401,3.4444,4.1749}},
    {{7.3460,8.7428,12.0202},{5.0799,5.8518,7.6383},{4.1255,4.6989,6.0596},{3.6215,4.0841,5.0755},{3.2722,3.6486,4.5171},{3.0244,3.3423,4.1092}},
    {{6.3626,7.8373,11.1334},{4.5400,5.3598,7.1847},{3.7617,4.3635,5.6801},{3.3194,3.8190,4.8474},{3.0215,3.4146,4.2615},{2.8131,3.1588,3.9257}}
  },
  // wd[trim][nu][alpha]
  {
    {{9.2775,10.9310,14.5896},{6.1522,7.0486,9.0357},{4.9163,5.5577,6.9674},{4.2492,4.7408,5.7876},{3.7983,4.2216,5.0925},{3.4871,3.8482,4.6149}},
    {{8.7983,10.5275,14.1050},{5.9148,6.7929,8.7808},{4.7583,5.4103,6.8280},{4.1116,4.6160,5.6795},{3.6920,4.1073,5.0063},{3.4006,3.7575,4.5406}},
    {{8.3255,9.9812,13.6546},{5.6354,6.5252,8.4922},{4.5539,5.2141,6.5586},{3.9578,4.4781,5.5439},{3.5647,3.9883,4.8662},{3.2907,3.6475,4.4265}},
    {{7.5285,9.1301,12.7139},{5.2026,6.0545,8.0567},{4.2519,4.8835,6.2371},{3.7261,4.2185,5.3161},{3.3614,3.7765,4.6179},{3.1019,3.4578,4.2714}}
  },
  // seq[trim][nu][alpha][null]
  {
    {{{8.1190,9.6344,10.5272,11.1583,11.6349,12.0310,12.3572,12.6309},{9.6931,11.2117,12.0904,12.7024,13.1665,13.5387,13.9039,14.1812},{13.2166,14.6731,15.5461,16.2079,16.7033,17.0795,17.3643,17.6921}},
     {{11.0334,12.6847,13.6434,14.2908,14.8048,15.2194,15.5812,15.8630},{12.7427,14.3445,15.2864,15.9210,16.4680,16.8781,17.2171,17.5198},{16.5134,18.0612,18.9864,19.6265,20.0902,20.4548,20.8189,21.0625}},
     {{13.4227,15.1883,16.2134,16.9314,17.4636,17.8892,18.2490,18.5928},{15.2496,16.9916,17.9484,18.6596,19.1909,19.6266,20.0248,20.3620},{19.2414,20.9276,21.8605,22.4882,22.9682,23.3680,23.7162,23.9933}},
     {{15.5408,17.3829,18.4444,19.1718,19.7513,20.1948,20.5860,20.9311},{17.4564,19.2425,20.2660,20.9975,21.5819,22.0463,22.4030,22.7065},{21.6281,23.2883,24.2134,24.8816,25.4203,25.7583,26.1211,26.4456}},
     {{17.5298,19.4511,20.5419,21.3007,21.8722,22.3581,22.7499,23.0804},{19.5207,21.3682,22.4260,23.1601,23.7646,24.2354,24.6550,24.9927},{23.8119,25.6399,26.6255,27.2624,27.7713,28.2149,28.6551,29.0577}},
     {{19.4144,21.4041,22.5509,23.3011,23.9292,24.4362,24.8773,25.2445},{21.4754,23.3768,24.5153,25.3147,25.9180,26.4116,26.8250,27.1779},{25.9698,27.7900,28.8689,29.6010,30.1479,30.6066,30.9710,31.3016}}},
    {{{7.5731,9.0913,9.9708,10.6056,11.1037,11.4890,11.8532,12.1275},{9.1532,10.6677,11.5527,12.1864,12.6343,13.0379,13.3606,13.6272},{12.6933,14.1780,15.0260,15.6287,16.0963,16.5373,16.9112,17.1960}},
     {{10.4255,12.0973,13.0310,13.7096,14.1957,14.6041,14.9566,15.2860},{12.1628,13.7650,14.6781,15.3389,15.8404,16.2582,16.6301,16.9178},{15.8821,17.4879,18.3893,19.0064,19.4638,19.8166,20.1695,20.4629}},
     {{12.7845,14.5599,15.5699,16.3031,16.8547,17.2863,17.6624,17.9590},{14.6264,16.3686,17.3523,18.0146,18.5788,19.0413,19.3771,19.7462},{18.6247,20.3491,21.2722,21.9537,22.4453,22.7994,23.1293,23.4266}},
     {{14.8623,16.6944,17.7829,18.5067,19.0712,19.5575,19.9098,20.2516},{16.7658,18.5726,19.6178,20.3211,20.8819,21.3409,21.7317,22.1025},{20.9289,22.6686,23.6361,24.2846,24.8178,25.2028,25.5872,25.7962}},
     {{16.8109,18.7632,19.8648,20.6376,21.2349,21.6868,22.0556,22.4064},{18.8323,20.7051,21.7451,22.4817,23.0447,23.5448,23.9441,24.2853},{23.0996,24.9074,25.9214,26.6195,27.1032,27.5275,27.9039,28.2732}},
     {{18.6648,20.6779,21.8289,22.6374,23.2126,23.7336,24.1529,24.5082},{20.7494,22.7025,23.7970,24.5736,25.2112,25.7018,26.1632,26.5103},{25.2631,27.1719,28.1720,29.0074,29.6040,30.0572,30.4596,30.8025}}},
    {{{7.1441,8.6339,9.5191,10.1475,10.6272,11.0382,11.3800,11.6698},{8.6954,10.2040,11.0957,11.7425,12.2259,12.5975,12.9303,13.2006},{12.2627,13.6963,14.5578,15.1999,15.6247,16.0160,16.3867,16.6656}},
     {{9.9540,11.5913,12.5491,13.2156,13.7582,14.1564,14.4960,14.8157},{11.6572,13.2860,14.2104,14.8718,15.3765,15.7718,16.1084,16.4314},{15.4145,16.9543,17.8564,18.4838,18.9542,19.3655,19.6789,19.9613}},
     {{12.2554,14.0404,15.0618,15.7784,16.3395,16.7815,17.1317,17.4555},{14.1068,15.8474,16.8475,17.5241,18.0245,18.4820,18.8753,19.1880},{18.0917,19.7882,20.7452,21.4242,21.9748,22.3772,22.6652,22.9237}},
     {{14.3093,16.1692,17.2381,17.9913,18.5721,19.0311,19.4320,19.7644},{16.2418,18.0689,19.0981,19.8211,20.3615,20.8336,21.2329,21.5838},{20.4260,22.2064,23.0983,23.7906,24.3409,24.7434,25.1048,25.4033}},
     {{16.2307,18.2072,19.3154,20.0880,20.6699,21.1310,21.4934,21.8363},{18.2782,20.1631,21.2044,21.8891,22.4841,22.9429,23.3622,23.7417},{22.5405,24.3634,25.3838,26.0914,26.6912,27.0777,27.3849,27.7089}},
     {{18.0520,20.0976,21.2282,22.0642,22.6721,23.1419,23.5852,23.9438},{20.1665,22.1361,23.2137,24.0238,24.6302,25.1423,25.5565,25.9175},{24.6915,26.5938,27.7234,28.4203,29.0280,29.5141,29.8927,30.2509}}},
    {{{6.3709,7.8322,8.6987,9.3176,9.7894,10.1890,10.4969,10.7901},{7.8843,9.3831,10.2414,10.8502,11.3365,11.7313,12.0420,12.3124},{11.3781,12.8030,13.6223,14.2909,14.7573,15.1667,15.4432,15.7691}},
     {{9.0728,10.7049,11.6341,12.3213,12.8198,13.2269,13.6085,13.9171},{10.7706,12.3776,13.2900,13.9695,14.4743,14.8958,15.2385,15.4867},{14.5282,16.0627,16.9661,17.6242,18.0938,18.4835,18.7425,19.0587}},
     {{11.3034,13.0683,14.0895,14.8293,15.3640,15.8204,16.2165,16.5205},{13.1298,14.8877,15.8973,16.5921,17.1054,17.5777,17.9339,18.2648},{17.1787,18.8471,19.8400,20.4994,21.0331,21.4289,21.7581,22.0970}},
     {{13.2906,15.1622,16.2233,16.9854,17.5627,18.0371,18.4362,18.7892},{15.2291,17.0512,18.1054,18.8584,19.4308,19.8803,20.2329,20.5664},{19.4915,21.1570,22.2001,22.9004,23.3364,23.7503,24.1575,24.4248}},
     {{15.1421,17.1406,18.2537,19.0260,19.6434,20.1272,20.5081,20.8515},{17.2226,19.1015,20.1997,20.9093,21.4541,21.9061,22.3282,22.6690},{21.4998,23.2557,24.2905,24.9925,25.6304,26.0342,26.4686,26.7977}},
     {{16.9030,18.9744,20.1447,20.9638,21.5797,22.1116,22.5271,22.8774},{19.0554,21.0331,22.1936,22.9412,23.5735,24.0865,24.5056,24.8923},{23.6364,25.5862,26.7595,27.5254,28.0894,28.5759,29.0071,29.3080}}}
  }
};

} // namespace regimefactor
