// Pentagon geometry tables written by tools/gen_layout.cpp; do not edit.

#include "dodec/render.hpp"

#include <algorithm>

namespace dodec {
namespace {

const TileLayout kTiles[] = {
    {0, 0, {0.000000000, -0.378497123, -0.233924087, 0.233924087, 0.378497123}, {0.397975427, 0.122981170, -0.321968884, -0.321968884, 0.122981170}, {4, 0, 1, 2, 3}, {0, 1, 2, 3, 4}},
    {1, 1, {0.000000000, 0.220579580, 0.459101870, 0.577484836, 0.378497123}, {0.397975427, 0.678874140, 0.631899513, 0.419567293, 0.122981170}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {1, 2, {0.713810514, 0.821184065, 0.770885639, 0.577484836, 0.378497123}, {0.000000000, 0.181246084, 0.336048721, 0.419567293, 0.122981170}, {4, 0, 1, 2, 3}, {0, 1, 2, 3, 4}},
    {1, 3, {0.671013463, 0.595580915, 0.459101870, 0.577484836, 0.701314030}, {0.638171727, 0.684141298, 0.631899513, 0.419567293, 0.547229677}, {2, 3, 4, 0, 1}, {3, 4, 0, 1, 2}},
    {1, 4, {0.303728397, 0.220579580, 0.459101870, 0.466612415, 0.399582816}, {0.836092548, 0.678874140, 0.631899513, 0.777842398, 0.835377636}, {1, 2, 3, 4, 0}, {2, 3, 4, 0, 1}},
    {1, 5, {0.713810514, 0.821184065, 0.917969225, 0.933038243, 0.889028503}, {0.000000000, 0.181246084, 0.121879955, 0.048614368, -0.030496065}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {1, 6, {0.907715999, 0.821184065, 0.770885639, 0.874607504, 0.908663002}, {0.238607271, 0.181246084, 0.336048721, 0.340504740, 0.295242507}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {1, 7, {0.783418603, 0.814291943, 0.770885639, 0.577484836, 0.701314030}, {0.509096269, 0.440965818, 0.336048721, 0.419567293, 0.547229677}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {1, 8, {0.671013463, 0.722088916, 0.746046336, 0.754695574, 0.701314030}, {0.638171727, 0.646379580, 0.627339033, 0.593808084, 0.547229677}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {1, 9, {0.671013463, 0.595580915, 0.643212519, 0.671483957, 0.686589861}, {0.638171727, 0.684141298, 0.721073911, 0.710092902, 0.686149708}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {1, 10, {0.580391335, 0.595580915, 0.459101870, 0.466612415, 0.538052357}, {0.754322305, 0.684141298, 0.631899513, 0.777842398, 0.785083372}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {1, 11, {0.440399215, 0.467838528, 0.487018442, 0.466612415, 0.399582816}, {0.865017682, 0.858049967, 0.834555550, 0.777842398, 0.835377636}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {1, 12, {0.303728397, 0.331531290, 0.366093879, 0.391605765, 0.399582816}, {0.836092548, 0.901254933, 0.903390652, 0.886489644, 0.835377636}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {1, 13, {0.959593180, 0.975765999, 0.971313964, 0.933038243, 0.889028503}, {-0.036801903, -0.006989437, 0.021457347, 0.048614368, -0.030496065}, {3, 4, 0, 1, 2}, {4, 0, 1, 2, 3}},
    {1, 14, {0.976740990, 0.966036762, 0.917969225, 0.933038243, 0.972304796}, {0.092605096, 0.115058443, 0.121879955, 0.048614368, 0.069012905}, {2, 3, 4, 0, 1}, {3, 4, 0, 1, 2}},
    {1, 15, {0.907715999, 0.821184065, 0.917969225, 0.949515023, 0.944206470}, {0.238607271, 0.181246084, 0.121879955, 0.167704391, 0.205290215}, {1, 2, 3, 4, 0}, {2, 3, 4, 0, 1}},
    {1, 16, {0.907715999, 0.944741162, 0.947261378, 0.938808106, 0.908663002}, {0.238607271, 0.253450127, 0.272733370, 0.288217120, 0.295242507}, {4, 0, 1, 2, 3}, {0, 1, 2, 3, 4}},
    {1, 17, {0.928921485, 0.926659206, 0.913285902, 0.874607504, 0.908663002}, {0.318645011, 0.336140336, 0.350259462, 0.340504740, 0.295242507}, {3, 4, 0, 1, 2}, {4, 0, 1, 2, 3}},
    {1, 18, {0.866747958, 0.814291943, 0.770885639, 0.874607504, 0.884545641}, {0.422435225, 0.440965818, 0.336048721, 0.340504740, 0.388907365}, {2, 3, 4, 0, 1}, {3, 4, 0, 1, 2}},
    {1, 19, {0.783418603, 0.814291943, 0.849169814, 0.844631969, 0.827175872}, {0.509096269, 0.440965818, 0.474737927, 0.499194852, 0.515673807}, {0, 1, 2, 3, 4}, {1, 2, 3, 4, 0}},
    {1, 20, {0.783418603, 0.798421816, 0.785302988, 0.754695574, 0.701314030}, {0.509096269, 0.553564665, 0.579195437, 0.593808084, 0.547229677}, {4, 0, 1, 2, 3}, {0, 1, 2, 3, 4}},
    {1, 21, {0.771914294, 0.763926533, 0.746046336, 0.754695574, 0.774662214}, {0.621968407, 0.628895576, 0.627339033, 0.593808084, 0.610124497}, {2, 3, 4, 0, 1}, {3, 4, 0, 1, 2}},
    {1, 22, {0.739735233, 0.722088916, 0.746046336, 0.752849990, 0.748605896}, {0.656402497, 0.646379580, 0.627339033, 0.643253409, 0.651700732}, {1, 2, 3, 4, 0}, {2, 3, 4, 0, 1}},
    {1, 23, {0.671013463, 0.722088916, 0.721038405, 0.709583713, 0.686589861}, {0.638171727, 0.646379580, 0.670371631, 0.682842045, 0.686149708}, {0, 1, 2, 3, 4}, {1, 2, 3, 4, 0}},
    {1, 24, {0.697625604, 0.693854137, 0.686395305, 0.671483957, 0.686589861}, {0.701882612, 0.710478027, 0.714937548, 0.710092902, 0.686149708}, {3, 4, 0, 1, 2}, {4, 0, 1, 2, 3}},
    {1, 25, {0.668820355, 0.658879650, 0.643212519, 0.671483957, 0.674318907}, {0.733271243, 0.736453096, 0.721073911, 0.710092902, 0.725837257}, {2, 3, 4, 0, 1}, {3, 4, 0, 1, 2}},
    {1, 26, {0.580391335, 0.595580915, 0.643212519, 0.634233129, 0.615337408}, {0.754322305, 0.684141298, 0.721073911, 0.747741907, 0.760350382}, {0, 1, 2, 3, 4}, {1, 2, 3, 4, 0}},
    {1, 27, {0.580391335, 0.590101939, 0.580185632, 0.564218429, 0.538052357}, {0.754322305, 0.784990107, 0.798557014, 0.803795578, 0.785083372}, {4, 0, 1, 2, 3}, {0, 1, 2, 3, 4}},
    {1, 28, {0.532986470, 0.515155998, 0.487018442, 0.466612415, 0.538052357}, {0.820181841, 0.834256506, 0.834555550, 0.777842398, 0.785083372}, {3, 4, 0, 1, 2}, {4, 0, 1, 2, 3}},
    {1, 29, {0.481936251, 0.467838528, 0.487018442, 0.496803507, 0.490705538}, {0.865611438, 0.858049967, 0.834555550, 0.854208307, 0.862679232}, {1, 2, 3, 4, 0}, {2, 3, 4, 0, 1}},
    {1, 30, {0.440399215, 0.467838528, 0.467838199, 0.461292037, 0.451951864}, {0.865017682, 0.858049967, 0.873728580, 0.879444283, 0.880375032}, {0, 1, 2, 3, 4}, {1, 2, 3, 4, 0}},
    {1, 31, {0.440399215, 0.430147950, 0.414748187, 0.391605765, 0.399582816}, {0.865017682, 0.885864011, 0.892904500, 0.886489644, 0.835377636}, {4, 0, 1, 2, 3}, {0, 1, 2, 3, 4}},
    {1, 32, {0.388472284, 0.379126905, 0.366093879, 0.391605765, 0.395685114}, {0.913353117, 0.914779124, 0.903390652, 0.886489644, 0.906369540}, {2, 3, 4, 0, 1}, {3, 4, 0, 1, 2}},
    {1, 33, {0.340879090, 0.331531290, 0.366093879, 0.362048955, 0.352992471}, {0.925286385, 0.901254933, 0.903390652, 0.920876728, 0.926332927}, {1, 2, 3, 4, 0}, {2, 3, 4, 0, 1}},
    {1, 34, {0.959593180, 0.975765999, 0.989634257, 0.991051818, 0.985337077}, {-0.036801903, -0.006989437, -0.017383935, -0.027634664, -0.038266062}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {1, 35, {0.990729889, 0.975765999, 0.971313964, 0.989634257, 0.992962434}, {0.000000000, -0.006989437, 0.021457347, 0.017383935, 0.008635631}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {1, 36, {0.985150125, 0.985337077, 0.971313964, 0.933038243, 0.972304796}, {0.053349113, 0.038266062, 0.021457347, 0.048614368, 0.069012905}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {1, 37, {0.976740990, 0.988694971, 0.990897052, 0.988433797, 0.972304796}, {0.092605096, 0.087217462, 0.080226635, 0.072614329, 0.069012905}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {1, 38, {0.976740990, 0.966036762, 0.983730087, 0.987974614, 0.987259489}, {0.092605096, 0.115058443, 0.115498352, 0.108192671, 0.100659848}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {1, 39, {0.975429766, 0.966036762, 0.917969225, 0.949515023, 0.971494440}, {0.135347977, 0.115058443, 0.121879955, 0.167704391, 0.152444181}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {1, 40, {0.966579966, 0.972171891, 0.970564115, 0.949515023, 0.944206470}, {0.201448009, 0.190859967, 0.178779790, 0.167704391, 0.205290215}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {1, 41, {0.907715999, 0.944741162, 0.957454967, 0.959173397, 0.944206470}, {0.238607271, 0.253450127, 0.239976370, 0.224779825, 0.205290215}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {1, 42, {0.958328479, 0.944741162, 0.947261378, 0.956880598, 0.959455436}, {0.257721226, 0.253450127, 0.272733370, 0.269616028, 0.264329202}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {1, 43, {0.954105083, 0.954370849, 0.947261378, 0.938808106, 0.950547321}, {0.284904965, 0.279521549, 0.272733370, 0.288217120, 0.289453431}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {1, 44, {0.928921485, 0.940804222, 0.943925312, 0.938808106, 0.908663002}, {0.318645011, 0.310995736, 0.301390012, 0.288217120, 0.295242507}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {1, 45, {0.928921485, 0.926659206, 0.936400880, 0.939350163, 0.939145395}, {0.318645011, 0.336140336, 0.334827427, 0.330315939, 0.324544952}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {1, 46, {0.932608991, 0.926659206, 0.913285902, 0.926788762, 0.931584560}, {0.344316355, 0.336140336, 0.350259462, 0.354790496, 0.350106939}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {1, 47, {0.908109845, 0.915651911, 0.913285902, 0.874607504, 0.884545641}, {0.381937279, 0.368632947, 0.350259462, 0.340504740, 0.388907365}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {1, 48, {0.866747958, 0.890286987, 0.898688255, 0.900387787, 0.884545641}, {0.422435225, 0.425847384, 0.417019343, 0.405166587, 0.388907365}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {1, 49, {0.866747958, 0.814291943, 0.849169814, 0.868694803, 0.875559953}, {0.422435225, 0.440965818, 0.474737927, 0.463844418, 0.447700172}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {1, 50, {0.862882309, 0.863742587, 0.849169814, 0.844631969, 0.857876079}, {0.493187198, 0.484781908, 0.474737927, 0.499194852, 0.498861041}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {1, 51, {0.842341372, 0.848808588, 0.851136172, 0.844631969, 0.827175872}, {0.522240582, 0.517529963, 0.510579914, 0.499194852, 0.515673807}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {1, 52, {0.783418603, 0.798421816, 0.819646668, 0.828361015, 0.827175872}, {0.509096269, 0.553564665, 0.548208708, 0.535896375, 0.515673807}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {1, 53, {0.810848953, 0.798421816, 0.785302988, 0.801517317, 0.808399380}, {0.567628522, 0.553564665, 0.579195437, 0.582336418, 0.576662302}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {1, 54, {0.785534515, 0.790412911, 0.785302988, 0.754695574, 0.774662214}, {0.604882555, 0.595756320, 0.579195437, 0.593808084, 0.610124497}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {1, 55, {0.771914294, 0.778114458, 0.780840536, 0.781760980, 0.774662214}, {0.621968407, 0.622351318, 0.619915572, 0.615788760, 0.610124497}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {1, 56, {0.771914294, 0.763926533, 0.770120838, 0.773074501, 0.774428306}, {0.621968407, 0.628895576, 0.632026496, 0.630309359, 0.627378869}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {1, 57, {0.764035572, 0.763926533, 0.746046336, 0.752849990, 0.760462189}, {0.637082235, 0.628895576, 0.627339033, 0.643253409, 0.641526097}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {1, 58, {0.753667739, 0.755980619, 0.756977895, 0.752849990, 0.748605896}, {0.652800122, 0.651110687, 0.648170135, 0.643253409, 0.651700732}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {1, 59, {0.739735233, 0.745462843, 0.748561184, 0.750082510, 0.748605896}, {0.656402497, 0.660774448, 0.659369900, 0.656759961, 0.651700732}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {1, 60, {0.739735233, 0.722088916, 0.721038405, 0.732543800, 0.737990106}, {0.656402497, 0.646379580, 0.670371631, 0.670394324, 0.665454235}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {1, 61, {0.723584990, 0.725888301, 0.721038405, 0.709583713, 0.718963628}, {0.684335179, 0.679531978, 0.670371631, 0.682842045, 0.686932928}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {1, 62, {0.697625604, 0.706081317, 0.710469924, 0.709583713, 0.686589861}, {0.701882612, 0.699607147, 0.694047437, 0.682842045, 0.686149708}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {1, 63, {0.697625604, 0.693854137, 0.698635885, 0.700980648, 0.702115199}, {0.701882612, 0.710478027, 0.711533391, 0.709964297, 0.706977737}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {1, 64, {0.695181001, 0.693854137, 0.686395305, 0.691133350, 0.693762184}, {0.715079995, 0.710478027, 0.714937548, 0.718381132, 0.717300619}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {1, 65, {0.681570986, 0.685328054, 0.686395305, 0.671483957, 0.674318907}, {0.725399903, 0.721932076, 0.714937548, 0.710092902, 0.725837257}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {1, 66, {0.668820355, 0.673661741, 0.676134518, 0.677466875, 0.674318907}, {0.733271243, 0.735111854, 0.733765241, 0.731080924, 0.725837257}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {1, 67, {0.668820355, 0.658879650, 0.664156688, 0.667610998, 0.669536946}, {0.733271243, 0.736453096, 0.742087742, 0.741061280, 0.738586873}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {1, 68, {0.655240684, 0.658879650, 0.643212519, 0.634233129, 0.648047287}, {0.745946033, 0.736453096, 0.721073911, 0.747741907, 0.750581878}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {1, 69, {0.627149371, 0.633993153, 0.638002500, 0.634233129, 0.615337408}, {0.768742991, 0.766232004, 0.760436268, 0.747741907, 0.760350382}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {1, 70, {0.580391335, 0.590101939, 0.604696654, 0.613086629, 0.615337408}, {0.754322305, 0.784990107, 0.784155605, 0.776817527, 0.760350382}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {1, 71, {0.595969365, 0.590101939, 0.580185632, 0.588490500, 0.593131843}, {0.795159890, 0.784990107, 0.798557014, 0.802118345, 0.800017595}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {1, 72, {0.577574128, 0.581006314, 0.580185632, 0.564218429, 0.572077333}, {0.811320937, 0.807555925, 0.798557014, 0.803795578, 0.812518468}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {1, 73, {0.532986470, 0.549343183, 0.558914755, 0.564218429, 0.538052357}, {0.820181841, 0.823129851, 0.817418101, 0.803795578, 0.785083372}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {1, 74, {0.532986470, 0.515155998, 0.526064253, 0.532815281, 0.537318217}, {0.820181841, 0.834256506, 0.841764165, 0.839742030, 0.834009145}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {1, 75, {0.513588161, 0.515155998, 0.487018442, 0.496803507, 0.506956329}, {0.848272151, 0.834256506, 0.834555550, 0.854208307, 0.853680923}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {1, 76, {0.495539564, 0.498488015, 0.500531680, 0.496803507, 0.490705538}, {0.865003370, 0.863936320, 0.860968269, 0.854208307, 0.862679232}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {1, 77, {0.481936251, 0.485950499, 0.488915157, 0.490959992, 0.490705538}, {0.865611438, 0.870225715, 0.869788069, 0.867852444, 0.862679232}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {1, 78, {0.481936251, 0.467838528, 0.467838199, 0.474820190, 0.479279287}, {0.865611438, 0.858049967, 0.873728580, 0.874874992, 0.872373425}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {1, 79, {0.467809123, 0.469649106, 0.467838199, 0.461292037, 0.465258745}, {0.881465127, 0.879298854, 0.873728580, 0.879444283, 0.882128291}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {1, 80, {0.455410256, 0.458601238, 0.460818107, 0.461292037, 0.451951864}, {0.886219370, 0.886063246, 0.884318121, 0.879444283, 0.880375032}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {1, 81, {0.440399215, 0.430147950, 0.440531057, 0.447174810, 0.451951864}, {0.865017682, 0.885864011, 0.890169504, 0.887713735, 0.880375032}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {1, 82, {0.431140058, 0.430147950, 0.414748187, 0.421961494, 0.427241372}, {0.896048992, 0.885864011, 0.892904500, 0.900347728, 0.899641420}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {1, 83, {0.404833102, 0.411214407, 0.414748187, 0.391605765, 0.395685114}, {0.907506966, 0.903853794, 0.892904500, 0.886489644, 0.906369540}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {1, 84, {0.388472284, 0.392827597, 0.395779912, 0.398073158, 0.395685114}, {0.913353117, 0.916320848, 0.915680496, 0.913167829, 0.906369540}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {1, 85, {0.388472284, 0.379126905, 0.382527397, 0.385632202, 0.387953670}, {0.913353117, 0.914779124, 0.920224346, 0.920184562, 0.918506946}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {1, 86, {0.375131835, 0.379126905, 0.366093879, 0.362048955, 0.369801235}, {0.921484987, 0.914779124, 0.903390652, 0.920876728, 0.923510247}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {1, 87, {0.357361254, 0.360566664, 0.363112491, 0.362048955, 0.352992471}, {0.930395819, 0.930013845, 0.927735369, 0.920876728, 0.926332927}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {1, 88, {0.340879090, 0.344072485, 0.348281749, 0.351440685, 0.352992471}, {0.925286385, 0.933788066, 0.934187927, 0.932347960, 0.926332927}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {2, 1, {-0.000000000, -0.378497123, -0.577484836, -0.459101870, -0.220579580}, {0.397975427, 0.122981170, 0.419567293, 0.631899513, 0.678874140}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {2, 2, {0.000000000, 0.220579580, 0.081384562, -0.081384562, -0.220579580}, {0.397975427, 0.678874140, 0.837000576, 0.837000576, 0.678874140}, {0, 1, 2, 3, 4}, {1, 2, 3, 4, 0}},
    {2, 3, {-0.303728397, -0.399582816, -0.466612415, -0.459101870, -0.220579580}, {0.836092548, 0.835377636, 0.777842398, 0.631899513, 0.678874140}, {3, 4, 0, 1, 2}, {4, 0, 1, 2, 3}},
    {2, 4, {-0.671013463, -0.701314030, -0.577484836, -0.459101870, -0.595580915}, {0.638171727, 0.547229677, 0.419567293, 0.631899513, 0.684141298}, {2, 3, 4, 0, 1}, {3, 4, 0, 1, 2}},
    {2, 5, {0.303728397, 0.220579580, 0.081384562, 0.167753366, 0.242089662}, {0.836092548, 0.678874140, 0.837000576, 0.910703590, 0.902394766}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {2, 6, {0.000000000, 0.053570670, 0.081384562, -0.081384562, -0.053570670}, {0.955424821, 0.937022917, 0.837000576, 0.837000576, 0.937022917}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {2, 7, {-0.303728397, -0.242089662, -0.167753366, -0.081384562, -0.220579580}, {0.836092548, 0.902394766, 0.910703590, 0.837000576, 0.678874140}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {2, 8, {-0.303728397, -0.399582816, -0.391605765, -0.366093879, -0.331531290}, {0.836092548, 0.835377636, 0.886489644, 0.903390652, 0.901254933}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {2, 9, {-0.440399215, -0.399582816, -0.466612415, -0.487018442, -0.467838528}, {0.865017682, 0.835377636, 0.777842398, 0.834555550, 0.858049967}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {2, 10, {-0.580391335, -0.538052357, -0.466612415, -0.459101870, -0.595580915}, {0.754322305, 0.785083372, 0.777842398, 0.631899513, 0.684141298}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {2, 11, {-0.671013463, -0.686589861, -0.671483957, -0.643212519, -0.595580915}, {0.638171727, 0.686149708, 0.710092902, 0.721073911, 0.684141298}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {2, 12, {-0.671013463, -0.701314030, -0.754695574, -0.746046336, -0.722088916}, {0.638171727, 0.547229677, 0.593808084, 0.627339033, 0.646379580}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {2, 13, {0.303728397, 0.331531290, 0.308175625, 0.279745372, 0.242089662}, {0.836092548, 0.901254933, 0.925848757, 0.930405160, 0.902394766}, {4, 0, 1, 2, 3}, {0, 1, 2, 3, 4}},
    {2, 14, {0.234823533, 0.213756885, 0.189094695, 0.167753366, 0.242089662}, {0.946042973, 0.957552431, 0.954310572, 0.910703590, 0.902394766}, {3, 4, 0, 1, 2}, {4, 0, 1, 2, 3}},
    {2, 15, {0.096533249, 0.053570670, 0.081384562, 0.167753366, 0.133919924}, {0.961431881, 0.937022917, 0.837000576, 0.910703590, 0.954865957}, {2, 3, 4, 0, 1}, {3, 4, 0, 1, 2}},
    {2, 16, {0.000000000, 0.053570670, 0.050895679, 0.033335015, 0.015996889}, {0.955424821, 0.937022917, 0.976822635, 0.985178352, 0.981923555}, {0, 1, 2, 3, 4}, {1, 2, 3, 4, 0}},
    {2, 17, {0.000000000, -0.015996889, -0.033335015, -0.050895679, -0.053570670}, {0.955424821, 0.981923555, 0.985178352, 0.976822635, 0.937022917}, {4, 0, 1, 2, 3}, {0, 1, 2, 3, 4}},
    {2, 18, {-0.096533249, -0.133919924, -0.167753366, -0.081384562, -0.053570670}, {0.961431881, 0.954865957, 0.910703590, 0.837000576, 0.937022917}, {3, 4, 0, 1, 2}, {4, 0, 1, 2, 3}},
    {2, 19, {-0.234823533, -0.242089662, -0.167753366, -0.189094695, -0.213756885}, {0.946042973, 0.902394766, 0.910703590, 0.954310572, 0.957552431}, {1, 2, 3, 4, 0}, {2, 3, 4, 0, 1}},
    {2, 20, {-0.303728397, -0.242089662, -0.279745372, -0.308175625, -0.331531290}, {0.836092548, 0.902394766, 0.930405160, 0.925848757, 0.901254933}, {0, 1, 2, 3, 4}, {1, 2, 3, 4, 0}},
    {2, 21, {-0.340879090, -0.352992471, -0.362048955, -0.366093879, -0.331531290}, {0.925286385, 0.926332927, 0.920876728, 0.903390652, 0.901254933}, {3, 4, 0, 1, 2}, {4, 0, 1, 2, 3}},
    {2, 22, {-0.388472284, -0.395685114, -0.391605765, -0.366093879, -0.379126905}, {0.913353117, 0.906369540, 0.886489644, 0.903390652, 0.914779124}, {2, 3, 4, 0, 1}, {3, 4, 0, 1, 2}},
    {2, 23, {-0.440399215, -0.399582816, -0.391605765, -0.414748187, -0.430147950}, {0.865017682, 0.835377636, 0.886489644, 0.892904500, 0.885864011}, {1, 2, 3, 4, 0}, {2, 3, 4, 0, 1}},
    {2, 24, {-0.440399215, -0.451951864, -0.461292037, -0.467838199, -0.467838528}, {0.865017682, 0.880375032, 0.879444283, 0.873728580, 0.858049967}, {4, 0, 1, 2, 3}, {0, 1, 2, 3, 4}},
    {2, 25, {-0.481936251, -0.490705538, -0.496803507, -0.487018442, -0.467838528}, {0.865611438, 0.862679232, 0.854208307, 0.834555550, 0.858049967}, {3, 4, 0, 1, 2}, {4, 0, 1, 2, 3}},
    {2, 26, {-0.532986470, -0.538052357, -0.466612415, -0.487018442, -0.515155998}, {0.820181841, 0.785083372, 0.777842398, 0.834555550, 0.834256506}, {1, 2, 3, 4, 0}, {2, 3, 4, 0, 1}},
    {2, 27, {-0.580391335, -0.538052357, -0.564218429, -0.580185632, -0.590101939}, {0.754322305, 0.785083372, 0.803795578, 0.798557014, 0.784990107}, {0, 1, 2, 3, 4}, {1, 2, 3, 4, 0}},
    {2, 28, {-0.580391335, -0.615337408, -0.634233129, -0.643212519, -0.595580915}, {0.754322305, 0.760350382, 0.747741907, 0.721073911, 0.684141298}, {4, 0, 1, 2, 3}, {0, 1, 2, 3, 4}},
    {2, 29, {-0.668820355, -0.674318907, -0.671483957, -0.643212519, -0.658879650}, {0.733271243, 0.725837257, 0.710092902, 0.721073911, 0.736453096}, {2, 3, 4, 0, 1}, {3, 4, 0, 1, 2}},
    {2, 30, {-0.697625604, -0.686589861, -0.671483957, -0.686395305, -0.693854137}, {0.701882612, 0.686149708, 0.710092902, 0.714937548, 0.710478027}, {1, 2, 3, 4, 0}, {2, 3, 4, 0, 1}},
    {2, 31, {-0.671013463, -0.686589861, -0.709583713, -0.721038405, -0.722088916}, {0.638171727, 0.686149708, 0.682842045, 0.670371631, 0.646379580}, {0, 1, 2, 3, 4}, {1, 2, 3, 4, 0}},
    {2, 32, {-0.739735233, -0.748605896, -0.752849990, -0.746046336, -0.722088916}, {0.656402497, 0.651700732, 0.643253409, 0.627339033, 0.646379580}, {3, 4, 0, 1, 2}, {4, 0, 1, 2, 3}},
    {2, 33, {-0.771914294, -0.774662214, -0.754695574, -0.746046336, -0.763926533}, {0.621968407, 0.610124497, 0.593808084, 0.627339033, 0.628895576}, {2, 3, 4, 0, 1}, {3, 4, 0, 1, 2}},
    {2, 34, {0.340879090, 0.331531290, 0.308175625, 0.322346908, 0.332533981}, {0.925286385, 0.901254933, 0.925848757, 0.935826177, 0.934006708}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {2, 35, {0.298629293, 0.306152372, 0.308175625, 0.279745372, 0.289280699}, {0.947031950, 0.942240116, 0.925848757, 0.930405160, 0.946570040}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {2, 36, {0.234823533, 0.253690109, 0.268092714, 0.279745372, 0.242089662}, {0.946042973, 0.953419228, 0.948936112, 0.930405160, 0.902394766}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {2, 37, {0.234823533, 0.213756885, 0.222574813, 0.229903965, 0.236382510}, {0.946042973, 0.957552431, 0.967256473, 0.967190492, 0.962495465}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {2, 38, {0.209346756, 0.213756885, 0.189094695, 0.194143855, 0.202403601}, {0.970045174, 0.957552431, 0.954310572, 0.971273863, 0.973053069}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {2, 39, {0.155225261, 0.172700799, 0.189094695, 0.167753366, 0.133919924}, {0.971053960, 0.969513661, 0.954310572, 0.910703590, 0.954865957}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {2, 40, {0.096533249, 0.107101195, 0.118899020, 0.129891121, 0.133919924}, {0.961431881, 0.981523033, 0.983569385, 0.978307319, 0.954865957}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {2, 41, {0.096533249, 0.053570670, 0.050895679, 0.067638765, 0.082622563}, {0.961431881, 0.937022917, 0.976822635, 0.984750562, 0.981688896}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {2, 42, {0.045096026, 0.051032335, 0.050895679, 0.033335015, 0.039272286}, {0.994178560, 0.991064784, 0.976822635, 0.985178352, 0.993363463}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {2, 43, {0.018448704, 0.023873962, 0.029076021, 0.033335015, 0.015996889}, {0.993470253, 0.995448333, 0.994037524, 0.985178352, 0.981923555}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {2, 44, {0.000000000, -0.015996889, -0.005050028, 0.005050028, 0.015996889}, {0.955424821, 0.981923555, 0.990860954, 0.990860954, 0.981923555}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {2, 45, {-0.018448704, -0.015996889, -0.033335015, -0.029076021, -0.023873962}, {0.993470253, 0.981923555, 0.985178352, 0.994037524, 0.995448333}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {2, 46, {-0.045096026, -0.039272286, -0.033335015, -0.050895679, -0.051032335}, {0.994178560, 0.993363463, 0.985178352, 0.976822635, 0.991064784}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {2, 47, {-0.096533249, -0.082622563, -0.067638765, -0.050895679, -0.053570670}, {0.961431881, 0.981688896, 0.984750562, 0.976822635, 0.937022917}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {2, 48, {-0.096533249, -0.133919924, -0.129891121, -0.118899020, -0.107101195}, {0.961431881, 0.954865957, 0.978307319, 0.983569385, 0.981523033}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {2, 49, {-0.155225261, -0.133919924, -0.167753366, -0.189094695, -0.172700799}, {0.971053960, 0.954865957, 0.910703590, 0.954310572, 0.969513661}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {2, 50, {-0.209346756, -0.202403601, -0.194143855, -0.189094695, -0.213756885}, {0.970045174, 0.973053069, 0.971273863, 0.954310572, 0.957552431}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {2, 51, {-0.234823533, -0.236382510, -0.229903965, -0.222574813, -0.213756885}, {0.946042973, 0.962495465, 0.967190492, 0.967256473, 0.957552431}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {2, 52, {-0.234823533, -0.242089662, -0.279745372, -0.268092714, -0.253690109}, {0.946042973, 0.902394766, 0.930405160, 0.948936112, 0.953419228}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {2, 53, {-0.298629293, -0.289280699, -0.279745372, -0.308175625, -0.306152372}, {0.947031950, 0.946570040, 0.930405160, 0.925848757, 0.942240116}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {2, 54, {-0.340879090, -0.332533981, -0.322346908, -0.308175625, -0.331531290}, {0.925286385, 0.934006708, 0.935826177, 0.925848757, 0.901254933}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {2, 55, {-0.340879090, -0.352992471, -0.351440685, -0.348281749, -0.344072485}, {0.925286385, 0.926332927, 0.932347960, 0.934187927, 0.933788066}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {2, 56, {-0.357361254, -0.352992471, -0.362048955, -0.363112491, -0.360566664}, {0.930395819, 0.926332927, 0.920876728, 0.927735369, 0.930013845}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {2, 57, {-0.375131835, -0.369801235, -0.362048955, -0.366093879, -0.379126905}, {0.921484987, 0.923510247, 0.920876728, 0.903390652, 0.914779124}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {2, 58, {-0.388472284, -0.387953670, -0.385632202, -0.382527397, -0.379126905}, {0.913353117, 0.918506946, 0.920184562, 0.920224346, 0.914779124}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {2, 59, {-0.388472284, -0.395685114, -0.398073158, -0.395779912, -0.392827597}, {0.913353117, 0.906369540, 0.913167829, 0.915680496, 0.916320848}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {2, 60, {-0.404833102, -0.395685114, -0.391605765, -0.414748187, -0.411214407}, {0.907506966, 0.906369540, 0.886489644, 0.892904500, 0.903853794}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {2, 61, {-0.431140058, -0.427241372, -0.421961494, -0.414748187, -0.430147950}, {0.896048992, 0.899641420, 0.900347728, 0.892904500, 0.885864011}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {2, 62, {-0.440399215, -0.451951864, -0.447174810, -0.440531057, -0.430147950}, {0.865017682, 0.880375032, 0.887713735, 0.890169504, 0.885864011}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {2, 63, {-0.455410256, -0.451951864, -0.461292037, -0.460818107, -0.458601238}, {0.886219370, 0.880375032, 0.879444283, 0.884318121, 0.886063246}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {2, 64, {-0.467809123, -0.465258745, -0.461292037, -0.467838199, -0.469649106}, {0.881465127, 0.882128291, 0.879444283, 0.873728580, 0.879298854}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {2, 65, {-0.481936251, -0.479279287, -0.474820190, -0.467838199, -0.467838528}, {0.865611438, 0.872373425, 0.874874992, 0.873728580, 0.858049967}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {2, 66, {-0.481936251, -0.490705538, -0.490959992, -0.488915157, -0.485950499}, {0.865611438, 0.862679232, 0.867852444, 0.869788069, 0.870225715}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {2, 67, {-0.495539564, -0.490705538, -0.496803507, -0.500531680, -0.498488015}, {0.865003370, 0.862679232, 0.854208307, 0.860968269, 0.863936320}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {2, 68, {-0.513588161, -0.506956329, -0.496803507, -0.487018442, -0.515155998}, {0.848272151, 0.853680923, 0.854208307, 0.834555550, 0.834256506}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {2, 69, {-0.532986470, -0.537318217, -0.532815281, -0.526064253, -0.515155998}, {0.820181841, 0.834009145, 0.839742030, 0.841764165, 0.834256506}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {2, 70, {-0.532986470, -0.538052357, -0.564218429, -0.558914755, -0.549343183}, {0.820181841, 0.785083372, 0.803795578, 0.817418101, 0.823129851}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {2, 71, {-0.577574128, -0.572077333, -0.564218429, -0.580185632, -0.581006314}, {0.811320937, 0.812518468, 0.803795578, 0.798557014, 0.807555925}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {2, 72, {-0.595969365, -0.593131843, -0.588490500, -0.580185632, -0.590101939}, {0.795159890, 0.800017595, 0.802118345, 0.798557014, 0.784990107}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {2, 73, {-0.580391335, -0.615337408, -0.613086629, -0.604696654, -0.590101939}, {0.754322305, 0.760350382, 0.776817527, 0.784155605, 0.784990107}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {2, 74, {-0.627149371, -0.615337408, -0.634233129, -0.638002500, -0.633993153}, {0.768742991, 0.760350382, 0.747741907, 0.760436268, 0.766232004}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {2, 75, {-0.655240684, -0.648047287, -0.634233129, -0.643212519, -0.658879650}, {0.745946033, 0.750581878, 0.747741907, 0.721073911, 0.736453096}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {2, 76, {-0.668820355, -0.669536946, -0.667610998, -0.664156688, -0.658879650}, {0.733271243, 0.738586873, 0.741061280, 0.742087742, 0.736453096}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {2, 77, {-0.668820355, -0.674318907, -0.677466875, -0.676134518, -0.673661741}, {0.733271243, 0.725837257, 0.731080924, 0.733765241, 0.735111854}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {2, 78, {-0.681570986, -0.674318907, -0.671483957, -0.686395305, -0.685328054}, {0.725399903, 0.725837257, 0.710092902, 0.714937548, 0.721932076}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {2, 79, {-0.695181001, -0.693762184, -0.691133350, -0.686395305, -0.693854137}, {0.715079995, 0.717300619, 0.718381132, 0.714937548, 0.710478027}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {2, 80, {-0.697625604, -0.702115199, -0.700980648, -0.698635885, -0.693854137}, {0.701882612, 0.706977737, 0.709964297, 0.711533391, 0.710478027}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {2, 81, {-0.697625604, -0.686589861, -0.709583713, -0.710469924, -0.706081317}, {0.701882612, 0.686149708, 0.682842045, 0.694047437, 0.699607147}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {2, 82, {-0.723584990, -0.718963628, -0.709583713, -0.721038405, -0.725888301}, {0.684335179, 0.686932928, 0.682842045, 0.670371631, 0.679531978}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {2, 83, {-0.739735233, -0.737990106, -0.732543800, -0.721038405, -0.722088916}, {0.656402497, 0.665454235, 0.670394324, 0.670371631, 0.646379580}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {2, 84, {-0.739735233, -0.748605896, -0.750082510, -0.748561184, -0.745462843}, {0.656402497, 0.651700732, 0.656759961, 0.659369900, 0.660774448}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {2, 85, {-0.753667739, -0.748605896, -0.752849990, -0.756977895, -0.755980619}, {0.652800122, 0.651700732, 0.643253409, 0.648170135, 0.651110687}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {2, 86, {-0.764035572, -0.760462189, -0.752849990, -0.746046336, -0.763926533}, {0.637082235, 0.641526097, 0.643253409, 0.627339033, 0.628895576}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {2, 87, {-0.771914294, -0.774428306, -0.773074501, -0.770120838, -0.763926533}, {0.621968407, 0.627378869, 0.630309359, 0.632026496, 0.628895576}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {2, 88, {-0.771914294, -0.774662214, -0.781760980, -0.780840536, -0.778114458}, {0.621968407, 0.610124497, 0.615788760, 0.619915572, 0.622351318}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {3, 1, {-0.713810514, -0.378497123, -0.233924087, -0.577484836, -0.742842430}, {0.000000000, 0.122981170, -0.321968884, -0.419567293, -0.241364137}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {3, 2, {-0.713810514, -0.378497123, -0.577484836, -0.770885639, -0.821184065}, {0.000000000, 0.122981170, 0.419567293, 0.336048721, 0.181246084}, {1, 2, 3, 4, 0}, {2, 3, 4, 0, 1}},
    {3, 3, {-0.713810514, -0.889028503, -0.917969225, -0.883963247, -0.742842430}, {0.000000000, -0.030496065, -0.121879955, -0.203408258, -0.241364137}, {4, 0, 1, 2, 3}, {0, 1, 2, 3, 4}},
    {3, 4, {-0.834701664, -0.814291943, -0.737164304, -0.577484836, -0.742842430}, {-0.355019823, -0.440965818, -0.497886008, -0.419567293, -0.241364137}, {3, 4, 0, 1, 2}, {4, 0, 1, 2, 3}},
    {3, 5, {-0.783418603, -0.701314030, -0.577484836, -0.770885639, -0.814291943}, {0.509096269, 0.547229677, 0.419567293, 0.336048721, 0.440965818}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {3, 6, {-0.907715999, -0.908663002, -0.874607504, -0.770885639, -0.821184065}, {0.238607271, 0.295242507, 0.340504740, 0.336048721, 0.181246084}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {3, 7, {-0.713810514, -0.889028503, -0.933038243, -0.917969225, -0.821184065}, {0.000000000, -0.030496065, 0.048614368, 0.121879955, 0.181246084}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {3, 8, {-0.959593180, -0.889028503, -0.917969225, -0.964114590, -0.972304796}, {-0.036801903, -0.030496065, -0.121879955, -0.098498849, -0.069012905}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {3, 9, {-0.960624068, -0.958771545, -0.917969225, -0.883963247, -0.944206470}, {-0.179788859, -0.151539379, -0.121879955, -0.203408258, -0.205290215}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {3, 10, {-0.834701664, -0.896753929, -0.912925979, -0.883963247, -0.742842430}, {-0.355019823, -0.318886549, -0.269114097, -0.203408258, -0.241364137}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {3, 11, {-0.834701664, -0.814291943, -0.864735086, -0.882838436, -0.884545641}, {-0.355019823, -0.440965818, -0.440953841, -0.419188418, -0.388907365}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {3, 12, {-0.837881258, -0.814291943, -0.737164304, -0.797958806, -0.827175872}, {-0.487005094, -0.440965818, -0.497886008, -0.534261354, -0.515673807}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {3, 13, {-0.783418603, -0.701314030, -0.754695574, -0.785302988, -0.798421816}, {0.509096269, 0.547229677, 0.593808084, 0.579195437, 0.553564665}, {0, 1, 2, 3, 4}, {1, 2, 3, 4, 0}},
    {3, 14, {-0.783418603, -0.827175872, -0.844631969, -0.849169814, -0.814291943}, {0.509096269, 0.515673807, 0.499194852, 0.474737927, 0.440965818}, {4, 0, 1, 2, 3}, {0, 1, 2, 3, 4}},
    {3, 15, {-0.866747958, -0.884545641, -0.874607504, -0.770885639, -0.814291943}, {0.422435225, 0.388907365, 0.340504740, 0.336048721, 0.440965818}, {3, 4, 0, 1, 2}, {4, 0, 1, 2, 3}},
    {3, 16, {-0.928921485, -0.908663002, -0.874607504, -0.913285902, -0.926659206}, {0.318645011, 0.295242507, 0.340504740, 0.350259462, 0.336140336}, {1, 2, 3, 4, 0}, {2, 3, 4, 0, 1}},
    {3, 17, {-0.907715999, -0.908663002, -0.938808106, -0.947261378, -0.944741162}, {0.238607271, 0.295242507, 0.288217120, 0.272733370, 0.253450127}, {0, 1, 2, 3, 4}, {1, 2, 3, 4, 0}},
    {3, 18, {-0.907715999, -0.944206470, -0.949515023, -0.917969225, -0.821184065}, {0.238607271, 0.205290215, 0.167704391, 0.121879955, 0.181246084}, {4, 0, 1, 2, 3}, {0, 1, 2, 3, 4}},
    {3, 19, {-0.976740990, -0.972304796, -0.933038243, -0.917969225, -0.966036762}, {0.092605096, 0.069012905, 0.048614368, 0.121879955, 0.115058443}, {2, 3, 4, 0, 1}, {3, 4, 0, 1, 2}},
    {3, 20, {-0.959593180, -0.889028503, -0.933038243, -0.971313964, -0.975765999}, {-0.036801903, -0.030496065, 0.048614368, 0.021457347, -0.006989437}, {1, 2, 3, 4, 0}, {2, 3, 4, 0, 1}},
    {3, 21, {-0.959593180, -0.985337077, -0.990075639, -0.987685092, -0.972304796}, {-0.036801903, -0.038266062, -0.049463173, -0.059762459, -0.069012905}, {4, 0, 1, 2, 3}, {0, 1, 2, 3, 4}},
    {3, 22, {-0.987163303, -0.988694971, -0.984282082, -0.964114590, -0.972304796}, {-0.077888818, -0.087217462, -0.096235315, -0.098498849, -0.069012905}, {3, 4, 0, 1, 2}, {4, 0, 1, 2, 3}},
    {3, 23, {-0.975429766, -0.958771545, -0.917969225, -0.964114590, -0.977366881}, {-0.135347977, -0.151539379, -0.121879955, -0.098498849, -0.118526301}, {2, 3, 4, 0, 1}, {3, 4, 0, 1, 2}},
    {3, 24, {-0.960624068, -0.958771545, -0.976947218, -0.978948295, -0.975535214}, {-0.179788859, -0.151539379, -0.157780919, -0.166951569, -0.174943588}, {0, 1, 2, 3, 4}, {1, 2, 3, 4, 0}},
    {3, 25, {-0.960624068, -0.972171891, -0.972093056, -0.965921103, -0.944206470}, {-0.179788859, -0.190859967, -0.200106156, -0.208523329, -0.205290215}, {4, 0, 1, 2, 3}, {0, 1, 2, 3, 4}},
    {3, 26, {-0.952617045, -0.944741162, -0.912925979, -0.883963247, -0.944206470}, {-0.232143031, -0.253450127, -0.269114097, -0.203408258, -0.205290215}, {2, 3, 4, 0, 1}, {3, 4, 0, 1, 2}},
    {3, 27, {-0.928921485, -0.896753929, -0.912925979, -0.938808106, -0.938760072}, {-0.318645011, -0.318886549, -0.269114097, -0.288217120, -0.305021637}, {1, 2, 3, 4, 0}, {2, 3, 4, 0, 1}},
    {3, 28, {-0.834701664, -0.896753929, -0.913285902, -0.907133628, -0.884545641}, {-0.355019823, -0.318886549, -0.350259462, -0.372126593, -0.388907365}, {0, 1, 2, 3, 4}, {1, 2, 3, 4, 0}},
    {3, 29, {-0.904013525, -0.904059250, -0.898688255, -0.882838436, -0.884545641}, {-0.399055263, -0.409492681, -0.417019343, -0.419188418, -0.388907365}, {3, 4, 0, 1, 2}, {4, 0, 1, 2, 3}},
    {3, 30, {-0.890117477, -0.883108199, -0.864735086, -0.882838436, -0.892053828}, {-0.440344714, -0.446587722, -0.440953841, -0.419188418, -0.431872876}, {2, 3, 4, 0, 1}, {3, 4, 0, 1, 2}},
    {3, 31, {-0.837881258, -0.814291943, -0.864735086, -0.868694803, -0.860374428}, {-0.487005094, -0.440965818, -0.440953841, -0.463844418, -0.478592047}, {1, 2, 3, 4, 0}, {2, 3, 4, 0, 1}},
    {3, 32, {-0.837881258, -0.852866631, -0.851136172, -0.844413787, -0.827175872}, {-0.487005094, -0.500690487, -0.510579914, -0.517226654, -0.515673807}, {4, 0, 1, 2, 3}, {0, 1, 2, 3, 4}},
    {3, 33, {-0.834181517, -0.830061741, -0.819646668, -0.797958806, -0.827175872}, {-0.532197886, -0.541935312, -0.548208708, -0.534261354, -0.515673807}, {3, 4, 0, 1, 2}, {4, 0, 1, 2, 3}},
    {3, 34, {-0.785534515, -0.774662214, -0.754695574, -0.785302988, -0.790412911}, {0.604882555, 0.610124497, 0.593808084, 0.579195437, 0.595756320}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {3, 35, {-0.810848953, -0.808399380, -0.801517317, -0.785302988, -0.798421816}, {0.567628522, 0.576662302, 0.582336418, 0.579195437, 0.553564665}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {3, 36, {-0.783418603, -0.827175872, -0.828361015, -0.819646668, -0.798421816}, {0.509096269, 0.515673807, 0.535896375, 0.548208708, 0.553564665}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {3, 37, {-0.842341372, -0.827175872, -0.844631969, -0.851136172, -0.848808588}, {0.522240582, 0.515673807, 0.499194852, 0.510579914, 0.517529963}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {3, 38, {-0.862882309, -0.857876079, -0.844631969, -0.849169814, -0.863742587}, {0.493187198, 0.498861041, 0.499194852, 0.474737927, 0.484781908}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {3, 39, {-0.866747958, -0.875559953, -0.868694803, -0.849169814, -0.814291943}, {0.422435225, 0.447700172, 0.463844418, 0.474737927, 0.440965818}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {3, 40, {-0.866747958, -0.884545641, -0.900387787, -0.898688255, -0.890286987}, {0.422435225, 0.388907365, 0.405166587, 0.417019343, 0.425847384}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {3, 41, {-0.908109845, -0.884545641, -0.874607504, -0.913285902, -0.915651911}, {0.381937279, 0.388907365, 0.340504740, 0.350259462, 0.368632947}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {3, 42, {-0.932608991, -0.931584560, -0.926788762, -0.913285902, -0.926659206}, {0.344316355, 0.350106939, 0.354790496, 0.350259462, 0.336140336}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {3, 43, {-0.928921485, -0.939145395, -0.939350163, -0.936400880, -0.926659206}, {0.318645011, 0.324544952, 0.330315939, 0.334827427, 0.336140336}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {3, 44, {-0.928921485, -0.908663002, -0.938808106, -0.943925312, -0.940804222}, {0.318645011, 0.295242507, 0.288217120, 0.301390012, 0.310995736}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {3, 45, {-0.954105083, -0.950547321, -0.938808106, -0.947261378, -0.954370849}, {0.284904965, 0.289453431, 0.288217120, 0.272733370, 0.279521549}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {3, 46, {-0.958328479, -0.959455436, -0.956880598, -0.947261378, -0.944741162}, {0.257721226, 0.264329202, 0.269616028, 0.272733370, 0.253450127}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {3, 47, {-0.907715999, -0.944206470, -0.959173397, -0.957454967, -0.944741162}, {0.238607271, 0.205290215, 0.224779825, 0.239976370, 0.253450127}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {3, 48, {-0.966579966, -0.944206470, -0.949515023, -0.970564115, -0.972171891}, {0.201448009, 0.205290215, 0.167704391, 0.178779790, 0.190859967}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {3, 49, {-0.975429766, -0.971494440, -0.949515023, -0.917969225, -0.966036762}, {0.135347977, 0.152444181, 0.167704391, 0.121879955, 0.115058443}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {3, 50, {-0.976740990, -0.987259489, -0.987974614, -0.983730087, -0.966036762}, {0.092605096, 0.100659848, 0.108192671, 0.115498352, 0.115058443}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {3, 51, {-0.976740990, -0.972304796, -0.988433797, -0.990897052, -0.988694971}, {0.092605096, 0.069012905, 0.072614329, 0.080226635, 0.087217462}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {3, 52, {-0.985150125, -0.972304796, -0.933038243, -0.971313964, -0.985337077}, {0.053349113, 0.069012905, 0.048614368, 0.021457347, 0.038266062}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {3, 53, {-0.990729889, -0.992962434, -0.989634257, -0.971313964, -0.975765999}, {0.000000000, 0.008635631, 0.017383935, 0.021457347, -0.006989437}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {3, 54, {-0.959593180, -0.985337077, -0.991051818, -0.989634257, -0.975765999}, {-0.036801903, -0.038266062, -0.027634664, -0.017383935, -0.006989437}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {3, 55, {-0.994409470, -0.985337077, -0.990075639, -0.995316747, -0.996090495}, {-0.038675997, -0.038266062, -0.049463173, -0.046128589, -0.042555681}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {3, 56, {-0.995916955, -0.995289707, -0.990075639, -0.987685092, -0.994536699}, {-0.055529192, -0.052362630, -0.049463173, -0.059762459, -0.058654505}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {3, 57, {-0.987163303, -0.992306413, -0.992585305, -0.987685092, -0.972304796}, {-0.077888818, -0.072017055, -0.066321513, -0.059762459, -0.069012905}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {3, 58, {-0.987163303, -0.988694971, -0.993436293, -0.994314428, -0.993392828}, {-0.077888818, -0.087217462, -0.085131611, -0.082405352, -0.079440211}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {3, 59, {-0.992863317, -0.988694971, -0.984282082, -0.991485585, -0.993166622}, {-0.090442532, -0.087217462, -0.096235315, -0.096405693, -0.093448230}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {3, 60, {-0.986688280, -0.988190722, -0.984282082, -0.964114590, -0.977366881}, {-0.111781959, -0.104584085, -0.096235315, -0.098498849, -0.118526301}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {3, 61, {-0.975429766, -0.985422838, -0.987634680, -0.986674846, -0.977366881}, {-0.135347977, -0.133144195, -0.128326204, -0.123086480, -0.118526301}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {3, 62, {-0.975429766, -0.958771545, -0.976947218, -0.982450548, -0.982733091}, {-0.135347977, -0.151539379, -0.157780919, -0.150969887, -0.143892428}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {3, 63, {-0.984411800, -0.983574215, -0.976947218, -0.978948295, -0.983437138}, {-0.162347095, -0.159264045, -0.157780919, -0.166951569, -0.164994735}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {3, 64, {-0.981392460, -0.982884122, -0.982726719, -0.978948295, -0.975535214}, {-0.174944554, -0.172525210, -0.169894728, -0.166951569, -0.174943588}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {3, 65, {-0.960624068, -0.972171891, -0.977781875, -0.978783070, -0.975535214}, {-0.179788859, -0.190859967, -0.186243475, -0.181229595, -0.174943588}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {3, 66, {-0.977800800, -0.972171891, -0.972093056, -0.977091703, -0.978300703}, {-0.193251854, -0.190859967, -0.200106156, -0.198749546, -0.196206651}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {3, 67, {-0.975693535, -0.975797239, -0.972093056, -0.965921103, -0.973502278}, {-0.207119270, -0.203985389, -0.200106156, -0.208523329, -0.209980089}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {3, 68, {-0.952617045, -0.965462227, -0.968556926, -0.965921103, -0.944206470}, {-0.232143031, -0.226320857, -0.218342207, -0.208523329, -0.205290215}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {3, 69, {-0.952617045, -0.944741162, -0.959230292, -0.963291107, -0.963128089}, {-0.232143031, -0.253450127, -0.253296993, -0.247242887, -0.240197404}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {3, 70, {-0.952599388, -0.944741162, -0.912925979, -0.938808106, -0.950124969}, {-0.268095302, -0.253450127, -0.269114097, -0.288217120, -0.278963435}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {3, 71, {-0.947572150, -0.950092285, -0.949532601, -0.938808106, -0.938760072}, {-0.303021336, -0.298593681, -0.292995860, -0.288217120, -0.305021637}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {3, 72, {-0.928921485, -0.940406657, -0.944149767, -0.944713445, -0.938760072}, {-0.318645011, -0.321082629, -0.316882871, -0.311819525, -0.305021637}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {3, 73, {-0.928921485, -0.896753929, -0.913285902, -0.928251558, -0.932637840}, {-0.318645011, -0.318886549, -0.350259462, -0.343030217, -0.332783285}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {3, 74, {-0.924644599, -0.924917845, -0.913285902, -0.907133628, -0.920371483}, {-0.366184609, -0.358899848, -0.350259462, -0.372126593, -0.371788705}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {3, 75, {-0.904013525, -0.911917342, -0.914103411, -0.907133628, -0.884545641}, {-0.399055263, -0.392660921, -0.384387039, -0.372126593, -0.388907365}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {3, 76, {-0.904013525, -0.904059250, -0.909336153, -0.911094303, -0.911003086}, {-0.399055263, -0.409492681, -0.408531579, -0.405935261, -0.402332822}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {3, 77, {-0.907305845, -0.904059250, -0.898688255, -0.904648054, -0.906789270}, {-0.413528333, -0.409492681, -0.417019343, -0.418392856, -0.416296210}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {3, 78, {-0.898376220, -0.900513322, -0.898688255, -0.882838436, -0.892053828}, {-0.428696431, -0.424051630, -0.417019343, -0.419188418, -0.431872876}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {3, 79, {-0.890117477, -0.894904232, -0.896577732, -0.896793007, -0.892053828}, {-0.440344714, -0.440184550, -0.438148965, -0.435314898, -0.431872876}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {3, 80, {-0.890117477, -0.883108199, -0.889341312, -0.891831104, -0.892598830}, {-0.440344714, -0.446587722, -0.449283099, -0.447281180, -0.444566301}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {3, 81, {-0.883557063, -0.883108199, -0.864735086, -0.868694803, -0.879625618}, {-0.455332740, -0.446587722, -0.440953841, -0.463844418, -0.461224598}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {3, 82, {-0.870585136, -0.874441490, -0.875484017, -0.868694803, -0.860374428}, {-0.480373869, -0.476699020, -0.471501095, -0.463844418, -0.478592047}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {3, 83, {-0.837881258, -0.852866631, -0.860936071, -0.863951374, -0.860374428}, {-0.487005094, -0.500690487, -0.496233631, -0.489527316, -0.478592047}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {3, 84, {-0.858794532, -0.852866631, -0.851136172, -0.856404083, -0.858416167}, {-0.504786761, -0.500690487, -0.510579914, -0.510420870, -0.508167487}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {3, 85, {-0.852853920, -0.853745949, -0.851136172, -0.844413787, -0.850365464}, {-0.517776027, -0.515054282, -0.510579914, -0.517226654, -0.519633173}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {3, 86, {-0.834181517, -0.842001187, -0.845123315, -0.844413787, -0.827175872}, {-0.532197886, -0.529771772, -0.525000054, -0.517226654, -0.515673807}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {3, 87, {-0.834181517, -0.830061741, -0.835984269, -0.838352981, -0.839073344}, {-0.532197886, -0.541935312, -0.542654354, -0.540461238, -0.537121513}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {3, 88, {-0.832341868, -0.830061741, -0.819646668, -0.827227341, -0.830867740}, {-0.547713692, -0.541935312, -0.548208708, -0.553209682, -0.551059033}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {4, 1, {-0.000000000, -0.220579580, -0.233924087, 0.233924087, 0.220579580}, {-0.781070754, -0.678874140, -0.321968884, -0.321968884, -0.678874140}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {4, 2, {-0.426135101, -0.220579580, -0.233924087, -0.577484836, -0.557818089}, {-0.724984336, -0.678874140, -0.321968884, -0.419567293, -0.629311045}, {2, 3, 4, 0, 1}, {3, 4, 0, 1, 2}},
    {4, 3, {-0.000000000, -0.220579580, -0.245721435, -0.167753366, -0.079706916}, {-0.781070754, -0.678874140, -0.854940153, -0.910703590, -0.903555615}, {0, 1, 2, 3, 4}, {1, 2, 3, 4, 0}},
    {4, 4, {-0.000000000, 0.079706916, 0.167753366, 0.245721435, 0.220579580}, {-0.781070754, -0.903555615, -0.910703590, -0.854940153, -0.678874140}, {4, 0, 1, 2, 3}, {0, 1, 2, 3, 4}},
    {4, 5, {-0.671013463, -0.726268986, -0.737164304, -0.577484836, -0.557818089}, {-0.638171727, -0.587755969, -0.497886008, -0.419567293, -0.629311045}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {4, 6, {-0.426135101, -0.507428670, -0.561584619, -0.594107834, -0.557818089}, {-0.724984336, -0.789555514, -0.772954917, -0.726579415, -0.629311045}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {4, 7, {-0.426135101, -0.220579580, -0.245721435, -0.334559685, -0.399582816}, {-0.724984336, -0.678874140, -0.854940153, -0.872349435, -0.835377636}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {4, 8, {-0.234823533, -0.261529911, -0.245721435, -0.167753366, -0.204249820}, {-0.946042973, -0.923999760, -0.854940153, -0.910703590, -0.947365281}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {4, 9, {-0.096533249, -0.125859797, -0.152154187, -0.167753366, -0.079706916}, {-0.961431881, -0.969165592, -0.958674169, -0.910703590, -0.903555615}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {4, 10, {-0.000000000, 0.079706916, 0.026166927, -0.026166927, -0.079706916}, {-0.781070754, -0.903555615, -0.951405031, -0.951405031, -0.903555615}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {4, 11, {0.096533249, 0.079706916, 0.167753366, 0.152154187, 0.125859797}, {-0.961431881, -0.903555615, -0.910703590, -0.958674169, -0.969165592}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {4, 12, {0.234823533, 0.204249820, 0.167753366, 0.245721435, 0.261529911}, {-0.946042973, -0.947365281, -0.910703590, -0.854940153, -0.923999760}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {4, 13, {-0.773197192, -0.726268986, -0.737164304, -0.797958806, -0.793519563}, {-0.588283382, -0.587755969, -0.497886008, -0.534261354, -0.567886291}, {1, 2, 3, 4, 0}, {2, 3, 4, 0, 1}},
    {4, 14, {-0.671013463, -0.726268986, -0.746046336, -0.735768150, -0.713910502}, {-0.638171727, -0.587755969, -0.627339033, -0.649033045, -0.660906397}, {0, 1, 2, 3, 4}, {1, 2, 3, 4, 0}},
    {4, 15, {-0.671013463, -0.669599622, -0.643212519, -0.594107834, -0.557818089}, {-0.638171727, -0.693786630, -0.721073911, -0.726579415, -0.629311045}, {4, 0, 1, 2, 3}, {0, 1, 2, 3, 4}},
    {4, 16, {-0.606041900, -0.590101939, -0.561584619, -0.594107834, -0.615337408}, {-0.777432199, -0.784990107, -0.772954917, -0.726579415, -0.760350382}, {2, 3, 4, 0, 1}, {3, 4, 0, 1, 2}},
    {4, 17, {-0.532986470, -0.507428670, -0.561584619, -0.564218429, -0.552104713}, {-0.820181841, -0.789555514, -0.772954917, -0.803795578, -0.816619860}, {1, 2, 3, 4, 0}, {2, 3, 4, 0, 1}},
    {4, 18, {-0.426135101, -0.507428670, -0.487018442, -0.452912632, -0.399582816}, {-0.724984336, -0.789555514, -0.834555550, -0.851218943, -0.835377636}, {0, 1, 2, 3, 4}, {1, 2, 3, 4, 0}},
    {4, 19, {-0.407948858, -0.389902245, -0.366093879, -0.334559685, -0.399582816}, {-0.883200544, -0.900319334, -0.903390652, -0.872349435, -0.835377636}, {3, 4, 0, 1, 2}, {4, 0, 1, 2, 3}},
    {4, 20, {-0.294880927, -0.261529911, -0.245721435, -0.334559685, -0.320559672}, {-0.930168466, -0.923999760, -0.854940153, -0.872349435, -0.917143790}, {2, 3, 4, 0, 1}, {3, 4, 0, 1, 2}},
    {4, 21, {-0.234823533, -0.261529911, -0.268092714, -0.258907925, -0.248374003}, {-0.946042973, -0.923999760, -0.948936112, -0.956902849, -0.957811959}, {0, 1, 2, 3, 4}, {1, 2, 3, 4, 0}},
    {4, 22, {-0.234823533, -0.230973569, -0.222574813, -0.212634667, -0.204249820}, {-0.946042973, -0.962917061, -0.967256473, -0.965846236, -0.947365281}, {4, 0, 1, 2, 3}, {0, 1, 2, 3, 4}},
    {4, 23, {-0.189297765, -0.172700799, -0.152154187, -0.167753366, -0.204249820}, {-0.966157783, -0.969513661, -0.958674169, -0.910703590, -0.947365281}, {3, 4, 0, 1, 2}, {4, 0, 1, 2, 3}},
    {4, 24, {-0.135075720, -0.125859797, -0.152154187, -0.151834722, -0.143731282}, {-0.981849664, -0.969165592, -0.958674169, -0.977889003, -0.982626027}, {1, 2, 3, 4, 0}, {2, 3, 4, 0, 1}},
    {4, 25, {-0.096533249, -0.125859797, -0.118899020, -0.110081011, -0.100168565}, {-0.961431881, -0.969165592, -0.983569385, -0.986351638, -0.983082812}, {0, 1, 2, 3, 4}, {1, 2, 3, 4, 0}},
    {4, 26, {-0.096533249, -0.073593714, -0.050895679, -0.026166927, -0.079706916}, {-0.961431881, -0.977728790, -0.976822635, -0.951405031, -0.903555615}, {3, 4, 0, 1, 2}, {4, 0, 1, 2, 3}},
    {4, 27, {-0.000000000, 0.015996889, 0.026166927, -0.026166927, -0.015996889}, {-0.987070753, -0.981923555, -0.951405031, -0.951405031, -0.981923555}, {2, 3, 4, 0, 1}, {3, 4, 0, 1, 2}},
    {4, 28, {0.096533249, 0.079706916, 0.026166927, 0.050895679, 0.073593714}, {-0.961431881, -0.903555615, -0.951405031, -0.976822635, -0.977728790}, {1, 2, 3, 4, 0}, {2, 3, 4, 0, 1}},
    {4, 29, {0.096533249, 0.100168565, 0.110081011, 0.118899020, 0.125859797}, {-0.961431881, -0.983082812, -0.986351638, -0.983569385, -0.969165592}, {4, 0, 1, 2, 3}, {0, 1, 2, 3, 4}},
    {4, 30, {0.135075720, 0.143731282, 0.151834722, 0.152154187, 0.125859797}, {-0.981849664, -0.982626027, -0.977889003, -0.958674169, -0.969165592}, {3, 4, 0, 1, 2}, {4, 0, 1, 2, 3}},
    {4, 31, {0.189297765, 0.204249820, 0.167753366, 0.152154187, 0.172700799}, {-0.966157783, -0.947365281, -0.910703590, -0.958674169, -0.969513661}, {2, 3, 4, 0, 1}, {3, 4, 0, 1, 2}},
    {4, 32, {0.234823533, 0.204249820, 0.212634667, 0.222574813, 0.230973569}, {-0.946042973, -0.947365281, -0.965846236, -0.967256473, -0.962917061}, {0, 1, 2, 3, 4}, {1, 2, 3, 4, 0}},
    {4, 33, {0.234823533, 0.248374003, 0.258907925, 0.268092714, 0.261529911}, {-0.946042973, -0.957811959, -0.956902849, -0.948936112, -0.923999760}, {4, 0, 1, 2, 3}, {0, 1, 2, 3, 4}},
    {4, 34, {-0.810848953, -0.818021011, -0.819646668, -0.797958806, -0.793519563}, {-0.567628522, -0.560168730, -0.548208708, -0.534261354, -0.567886291}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {4, 35, {-0.773197192, -0.790412911, -0.798247587, -0.801517317, -0.793519563}, {-0.588283382, -0.595756320, -0.590635047, -0.582336418, -0.567886291}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {4, 36, {-0.773197192, -0.726268986, -0.746046336, -0.765645371, -0.774662214}, {-0.588283382, -0.587755969, -0.627339033, -0.622217054, -0.610124497}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {4, 37, {-0.754496522, -0.756978108, -0.746046336, -0.735768150, -0.748605896}, {-0.647339385, -0.639733035, -0.627339033, -0.649033045, -0.651700732}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {4, 38, {-0.727966131, -0.735694197, -0.739543331, -0.735768150, -0.713910502}, {-0.671662167, -0.668246617, -0.661732096, -0.649033045, -0.660906397}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {4, 39, {-0.671013463, -0.669599622, -0.696351071, -0.709583713, -0.713910502}, {-0.638171727, -0.693786630, -0.694360038, -0.682842045, -0.660906397}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {4, 40, {-0.680118739, -0.669599622, -0.643212519, -0.663571450, -0.674318907}, {-0.715119162, -0.693786630, -0.721073911, -0.731116312, -0.725837257}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {4, 41, {-0.633542768, -0.643865313, -0.643212519, -0.594107834, -0.615337408}, {-0.756922871, -0.745638676, -0.721073911, -0.726579415, -0.760350382}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {4, 42, {-0.606041900, -0.615656340, -0.620846947, -0.623819290, -0.615337408}, {-0.777432199, -0.780564252, -0.777800572, -0.771792198, -0.760350382}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {4, 43, {-0.606041900, -0.590101939, -0.598872479, -0.604424290, -0.607803592}, {-0.777432199, -0.784990107, -0.792890442, -0.791301855, -0.787102793}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {4, 44, {-0.586499015, -0.590101939, -0.561584619, -0.564218429, -0.578327897}, {-0.798655019, -0.784990107, -0.772954917, -0.803795578, -0.804591683}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {4, 45, {-0.560757602, -0.565795408, -0.569021848, -0.564218429, -0.552104713}, {-0.821283706, -0.819367381, -0.814578195, -0.803795578, -0.816619860}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {4, 46, {-0.532986470, -0.541247237, -0.547880045, -0.552112447, -0.552104713}, {-0.820181841, -0.831784306, -0.830814129, -0.826731593, -0.816619860}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {4, 47, {-0.532986470, -0.507428670, -0.487018442, -0.510179197, -0.524100947}, {-0.820181841, -0.789555514, -0.834555550, -0.842767324, -0.836437009}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {4, 48, {-0.481936251, -0.490278077, -0.487018442, -0.452912632, -0.469950490}, {-0.865611438, -0.857021317, -0.834555550, -0.851218943, -0.867815332}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {4, 49, {-0.407948858, -0.430147950, -0.445191323, -0.452912632, -0.399582816}, {-0.883200544, -0.885864011, -0.876838275, -0.851218943, -0.835377636}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {4, 50, {-0.407948858, -0.389902245, -0.400813164, -0.408198290, -0.413834775}, {-0.883200544, -0.900319334, -0.907833967, -0.906186321, -0.899891956}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {4, 51, {-0.388472284, -0.389902245, -0.366093879, -0.374503172, -0.382504092}, {-0.913353117, -0.900319334, -0.903390652, -0.917617342, -0.917607705}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {4, 52, {-0.340879090, -0.355166152, -0.366093879, -0.334559685, -0.320559672}, {-0.925286385, -0.920447663, -0.903390652, -0.872349435, -0.917143790}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {4, 53, {-0.294880927, -0.306152372, -0.315055240, -0.322346908, -0.320559672}, {-0.930168466, -0.942240116, -0.941694836, -0.935826177, -0.917143790}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {4, 54, {-0.294880927, -0.261529911, -0.268092714, -0.279969727, -0.289280699}, {-0.930168466, -0.923999760, -0.948936112, -0.951085870, -0.946570040}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {4, 55, {-0.267336033, -0.270506367, -0.268092714, -0.258907925, -0.263698894}, {-0.960488784, -0.957691147, -0.948936112, -0.956902849, -0.960856996}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {4, 56, {-0.251544992, -0.254943864, -0.257761613, -0.258907925, -0.248374003}, {-0.963985847, -0.964332773, -0.962757704, -0.956902849, -0.957811959}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {4, 57, {-0.234823533, -0.230973569, -0.238147256, -0.243650220, -0.248374003}, {-0.946042973, -0.962917061, -0.965993975, -0.964499197, -0.957811959}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {4, 58, {-0.231423135, -0.230973569, -0.222574813, -0.226023724, -0.228887909}, {-0.969321097, -0.962917061, -0.967256473, -0.971121174, -0.971113870}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {4, 59, {-0.218030816, -0.220795679, -0.222574813, -0.212634667, -0.214698633}, {-0.973434679, -0.972217407, -0.967256473, -0.965846236, -0.972749824}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {4, 60, {-0.189297765, -0.198592487, -0.205902352, -0.212634667, -0.204249820}, {-0.966157783, -0.972938844, -0.972143485, -0.965846236, -0.947365281}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {4, 61, {-0.189297765, -0.172700799, -0.177884749, -0.183150428, -0.187837097}, {-0.966157783, -0.969513661, -0.978336630, -0.978951376, -0.976419356}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {4, 62, {-0.166831395, -0.172700799, -0.152154187, -0.151834722, -0.160013021}, {-0.979099915, -0.969513661, -0.958674169, -0.977889003, -0.981018257}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {4, 63, {-0.146979470, -0.149798713, -0.152472040, -0.151834722, -0.143731282}, {-0.986290475, -0.986399269, -0.984649963, -0.977889003, -0.982626027}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {4, 64, {-0.135075720, -0.136884790, -0.139646672, -0.142099769, -0.143731282}, {-0.981849664, -0.987420535, -0.988091571, -0.987129008, -0.982626027}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {4, 65, {-0.135075720, -0.125859797, -0.118899020, -0.125023146, -0.130101015}, {-0.981849664, -0.969165592, -0.983569385, -0.987478223, -0.986881041}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {4, 66, {-0.115707928, -0.118363630, -0.118899020, -0.110081011, -0.112915890}, {-0.991050448, -0.989661929, -0.983569385, -0.986351638, -0.990686419}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {4, 67, {-0.101125816, -0.104523752, -0.107536296, -0.110081011, -0.100168565}, {-0.990743101, -0.991943068, -0.991073274, -0.986351638, -0.983082812}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {4, 68, {-0.096533249, -0.073593714, -0.083100310, -0.091644771, -0.100168565}, {-0.961431881, -0.977728790, -0.988146133, -0.988623828, -0.983082812}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {4, 69, {-0.069181641, -0.073593714, -0.050895679, -0.055518706, -0.062531364}, {-0.990214325, -0.977728790, -0.976822635, -0.990555295, -0.992546538}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {4, 70, {-0.028294769, -0.039395616, -0.050895679, -0.026166927, -0.015996889}, {-0.989826986, -0.988821860, -0.976822635, -0.951405031, -0.981923555}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {4, 71, {-0.000000000, -0.004625482, -0.009615197, -0.014766088, -0.015996889}, {-0.987070753, -0.994833410, -0.995861980, -0.993599868, -0.981923555}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {4, 72, {-0.000000000, 0.015996889, 0.014766088, 0.009615197, 0.004625482}, {-0.987070753, -0.981923555, -0.993599868, -0.995861980, -0.994833410}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {4, 73, {0.028294769, 0.015996889, 0.026166927, 0.050895679, 0.039395616}, {-0.989826986, -0.981923555, -0.951405031, -0.976822635, -0.988821860}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {4, 74, {0.069181641, 0.062531364, 0.055518706, 0.050895679, 0.073593714}, {-0.990214325, -0.992546538, -0.990555295, -0.976822635, -0.977728790}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {4, 75, {0.096533249, 0.100168565, 0.091644771, 0.083100310, 0.073593714}, {-0.961431881, -0.983082812, -0.988623828, -0.988146133, -0.977728790}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {4, 76, {0.101125816, 0.100168565, 0.110081011, 0.107536296, 0.104523752}, {-0.990743101, -0.983082812, -0.986351638, -0.991073274, -0.991943068}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {4, 77, {0.115707928, 0.112915890, 0.110081011, 0.118899020, 0.118363630}, {-0.991050448, -0.990686419, -0.986351638, -0.983569385, -0.989661929}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {4, 78, {0.135075720, 0.130101015, 0.125023146, 0.118899020, 0.125859797}, {-0.981849664, -0.986881041, -0.987478223, -0.983569385, -0.969165592}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {4, 79, {0.135075720, 0.143731282, 0.142099769, 0.139646672, 0.136884790}, {-0.981849664, -0.982626027, -0.987129008, -0.988091571, -0.987420535}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {4, 80, {0.146979470, 0.143731282, 0.151834722, 0.152472040, 0.149798713}, {-0.986290475, -0.982626027, -0.977889003, -0.984649963, -0.986399269}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {4, 81, {0.166831395, 0.160013021, 0.151834722, 0.152154187, 0.172700799}, {-0.979099915, -0.981018257, -0.977889003, -0.958674169, -0.969513661}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {4, 82, {0.189297765, 0.187837097, 0.183150428, 0.177884749, 0.172700799}, {-0.966157783, -0.976419356, -0.978951376, -0.978336630, -0.969513661}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {4, 83, {0.189297765, 0.204249820, 0.212634667, 0.205902352, 0.198592487}, {-0.966157783, -0.947365281, -0.965846236, -0.972143485, -0.972938844}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {4, 84, {0.218030816, 0.214698633, 0.212634667, 0.222574813, 0.220795679}, {-0.973434679, -0.972749824, -0.965846236, -0.967256473, -0.972217407}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {4, 85, {0.231423135, 0.228887909, 0.226023724, 0.222574813, 0.230973569}, {-0.969321097, -0.971113870, -0.971121174, -0.967256473, -0.962917061}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {4, 86, {0.234823533, 0.248374003, 0.243650220, 0.238147256, 0.230973569}, {-0.946042973, -0.957811959, -0.964499197, -0.965993975, -0.962917061}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {4, 87, {0.251544992, 0.248374003, 0.258907925, 0.257761613, 0.254943864}, {-0.963985847, -0.957811959, -0.956902849, -0.962757704, -0.964332773}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {4, 88, {0.267336033, 0.263698894, 0.258907925, 0.268092714, 0.270506367}, {-0.960488784, -0.960856996, -0.956902849, -0.948936112, -0.957691147}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {5, 1, {0.713810514, 0.742842430, 0.577484836, 0.233924087, 0.378497123}, {-0.000000000, -0.241364137, -0.419567293, -0.321968884, 0.122981170}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {5, 2, {0.426135101, 0.557818089, 0.577484836, 0.233924087, 0.220579580}, {-0.724984336, -0.629311045, -0.419567293, -0.321968884, -0.678874140}, {3, 4, 0, 1, 2}, {4, 0, 1, 2, 3}},
    {5, 3, {0.834701664, 0.742842430, 0.577484836, 0.737164304, 0.814291943}, {-0.355019823, -0.241364137, -0.419567293, -0.497886008, -0.440965818}, {1, 2, 3, 4, 0}, {2, 3, 4, 0, 1}},
    {5, 4, {0.713810514, 0.742842430, 0.883963247, 0.917969225, 0.889028503}, {-0.000000000, -0.241364137, -0.203408258, -0.121879955, -0.030496065}, {0, 1, 2, 3, 4}, {1, 2, 3, 4, 0}},
    {5, 5, {0.426135101, 0.399582816, 0.334559685, 0.245721435, 0.220579580}, {-0.724984336, -0.835377636, -0.872349435, -0.854940153, -0.678874140}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {5, 6, {0.426135101, 0.557818089, 0.594107834, 0.561584619, 0.507428670}, {-0.724984336, -0.629311045, -0.726579415, -0.772954917, -0.789555514}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {5, 7, {0.671013463, 0.557818089, 0.577484836, 0.737164304, 0.726268986}, {-0.638171727, -0.629311045, -0.419567293, -0.497886008, -0.587755969}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {5, 8, {0.837881258, 0.827175872, 0.797958806, 0.737164304, 0.814291943}, {-0.487005094, -0.515673807, -0.534261354, -0.497886008, -0.440965818}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {5, 9, {0.834701664, 0.884545641, 0.882838436, 0.864735086, 0.814291943}, {-0.355019823, -0.388907365, -0.419188418, -0.440953841, -0.440965818}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {5, 10, {0.834701664, 0.742842430, 0.883963247, 0.912925979, 0.896753929}, {-0.355019823, -0.241364137, -0.203408258, -0.269114097, -0.318886549}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {5, 11, {0.960624068, 0.944206470, 0.883963247, 0.917969225, 0.958771545}, {-0.179788859, -0.205290215, -0.203408258, -0.121879955, -0.151539379}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {5, 12, {0.959593180, 0.972304796, 0.964114590, 0.917969225, 0.889028503}, {-0.036801903, -0.069012905, -0.098498849, -0.121879955, -0.030496065}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {5, 13, {0.294880927, 0.320559672, 0.334559685, 0.245721435, 0.261529911}, {-0.930168466, -0.917143790, -0.872349435, -0.854940153, -0.923999760}, {2, 3, 4, 0, 1}, {3, 4, 0, 1, 2}},
    {5, 14, {0.407948858, 0.399582816, 0.334559685, 0.366093879, 0.389902245}, {-0.883200544, -0.835377636, -0.872349435, -0.903390652, -0.900319334}, {1, 2, 3, 4, 0}, {2, 3, 4, 0, 1}},
    {5, 15, {0.426135101, 0.399582816, 0.452912632, 0.487018442, 0.507428670}, {-0.724984336, -0.835377636, -0.851218943, -0.834555550, -0.789555514}, {0, 1, 2, 3, 4}, {1, 2, 3, 4, 0}},
    {5, 16, {0.532986470, 0.552104713, 0.564218429, 0.561584619, 0.507428670}, {-0.820181841, -0.816619860, -0.803795578, -0.772954917, -0.789555514}, {3, 4, 0, 1, 2}, {4, 0, 1, 2, 3}},
    {5, 17, {0.606041900, 0.615337408, 0.594107834, 0.561584619, 0.590101939}, {-0.777432199, -0.760350382, -0.726579415, -0.772954917, -0.784990107}, {2, 3, 4, 0, 1}, {3, 4, 0, 1, 2}},
    {5, 18, {0.671013463, 0.557818089, 0.594107834, 0.643212519, 0.669599622}, {-0.638171727, -0.629311045, -0.726579415, -0.721073911, -0.693786630}, {1, 2, 3, 4, 0}, {2, 3, 4, 0, 1}},
    {5, 19, {0.671013463, 0.713910502, 0.735768150, 0.746046336, 0.726268986}, {-0.638171727, -0.660906397, -0.649033045, -0.627339033, -0.587755969}, {4, 0, 1, 2, 3}, {0, 1, 2, 3, 4}},
    {5, 20, {0.773197192, 0.793519563, 0.797958806, 0.737164304, 0.726268986}, {-0.588283382, -0.567886291, -0.534261354, -0.497886008, -0.587755969}, {3, 4, 0, 1, 2}, {4, 0, 1, 2, 3}},
    {5, 21, {0.834181517, 0.827175872, 0.797958806, 0.819646668, 0.830061741}, {-0.532197886, -0.515673807, -0.534261354, -0.548208708, -0.541935312}, {1, 2, 3, 4, 0}, {2, 3, 4, 0, 1}},
    {5, 22, {0.837881258, 0.827175872, 0.844413787, 0.851136172, 0.852866631}, {-0.487005094, -0.515673807, -0.517226654, -0.510579914, -0.500690487}, {0, 1, 2, 3, 4}, {1, 2, 3, 4, 0}},
    {5, 23, {0.837881258, 0.860374428, 0.868694803, 0.864735086, 0.814291943}, {-0.487005094, -0.478592047, -0.463844418, -0.440953841, -0.440965818}, {4, 0, 1, 2, 3}, {0, 1, 2, 3, 4}},
    {5, 24, {0.890117477, 0.892053828, 0.882838436, 0.864735086, 0.883108199}, {-0.440344714, -0.431872876, -0.419188418, -0.440953841, -0.446587722}, {2, 3, 4, 0, 1}, {3, 4, 0, 1, 2}},
    {5, 25, {0.904013525, 0.884545641, 0.882838436, 0.898688255, 0.904059250}, {-0.399055263, -0.388907365, -0.419188418, -0.417019343, -0.409492681}, {1, 2, 3, 4, 0}, {2, 3, 4, 0, 1}},
    {5, 26, {0.834701664, 0.884545641, 0.907133628, 0.913285902, 0.896753929}, {-0.355019823, -0.388907365, -0.372126593, -0.350259462, -0.318886549}, {4, 0, 1, 2, 3}, {0, 1, 2, 3, 4}},
    {5, 27, {0.928921485, 0.938760072, 0.938808106, 0.912925979, 0.896753929}, {-0.318645011, -0.305021637, -0.288217120, -0.269114097, -0.318886549}, {3, 4, 0, 1, 2}, {4, 0, 1, 2, 3}},
    {5, 28, {0.952617045, 0.944206470, 0.883963247, 0.912925979, 0.944741162}, {-0.232143031, -0.205290215, -0.203408258, -0.269114097, -0.253450127}, {2, 3, 4, 0, 1}, {3, 4, 0, 1, 2}},
    {5, 29, {0.960624068, 0.944206470, 0.965921103, 0.972093056, 0.972171891}, {-0.179788859, -0.205290215, -0.208523329, -0.200106156, -0.190859967}, {0, 1, 2, 3, 4}, {1, 2, 3, 4, 0}},
    {5, 30, {0.960624068, 0.975535214, 0.978948295, 0.976947218, 0.958771545}, {-0.179788859, -0.174943588, -0.166951569, -0.157780919, -0.151539379}, {4, 0, 1, 2, 3}, {0, 1, 2, 3, 4}},
    {5, 31, {0.975429766, 0.977366881, 0.964114590, 0.917969225, 0.958771545}, {-0.135347977, -0.118526301, -0.098498849, -0.121879955, -0.151539379}, {3, 4, 0, 1, 2}, {4, 0, 1, 2, 3}},
    {5, 32, {0.987163303, 0.972304796, 0.964114590, 0.984282082, 0.988694971}, {-0.077888818, -0.069012905, -0.098498849, -0.096235315, -0.087217462}, {1, 2, 3, 4, 0}, {2, 3, 4, 0, 1}},
    {5, 33, {0.959593180, 0.972304796, 0.987685092, 0.990075639, 0.985337077}, {-0.036801903, -0.069012905, -0.059762459, -0.049463173, -0.038266062}, {0, 1, 2, 3, 4}, {1, 2, 3, 4, 0}},
    {5, 34, {0.294880927, 0.289280699, 0.279969727, 0.268092714, 0.261529911}, {-0.930168466, -0.946570040, -0.951085870, -0.948936112, -0.923999760}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {5, 35, {0.294880927, 0.320559672, 0.322346908, 0.315055240, 0.306152372}, {-0.930168466, -0.917143790, -0.935826177, -0.941694836, -0.942240116}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {5, 36, {0.340879090, 0.320559672, 0.334559685, 0.366093879, 0.355166152}, {-0.925286385, -0.917143790, -0.872349435, -0.903390652, -0.920447663}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {5, 37, {0.388472284, 0.382504092, 0.374503172, 0.366093879, 0.389902245}, {-0.913353117, -0.917607705, -0.917617342, -0.903390652, -0.900319334}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {5, 38, {0.407948858, 0.413834775, 0.408198290, 0.400813164, 0.389902245}, {-0.883200544, -0.899891956, -0.906186321, -0.907833967, -0.900319334}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {5, 39, {0.407948858, 0.399582816, 0.452912632, 0.445191323, 0.430147950}, {-0.883200544, -0.835377636, -0.851218943, -0.876838275, -0.885864011}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {5, 40, {0.481936251, 0.469950490, 0.452912632, 0.487018442, 0.490278077}, {-0.865611438, -0.867815332, -0.851218943, -0.834555550, -0.857021317}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {5, 41, {0.532986470, 0.524100947, 0.510179197, 0.487018442, 0.507428670}, {-0.820181841, -0.836437009, -0.842767324, -0.834555550, -0.789555514}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {5, 42, {0.532986470, 0.552104713, 0.552112447, 0.547880045, 0.541247237}, {-0.820181841, -0.816619860, -0.826731593, -0.830814129, -0.831784306}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {5, 43, {0.560757602, 0.552104713, 0.564218429, 0.569021848, 0.565795408}, {-0.821283706, -0.816619860, -0.803795578, -0.814578195, -0.819367381}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {5, 44, {0.586499015, 0.578327897, 0.564218429, 0.561584619, 0.590101939}, {-0.798655019, -0.804591683, -0.803795578, -0.772954917, -0.784990107}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {5, 45, {0.606041900, 0.607803592, 0.604424290, 0.598872479, 0.590101939}, {-0.777432199, -0.787102793, -0.791301855, -0.792890442, -0.784990107}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {5, 46, {0.606041900, 0.615337408, 0.623819290, 0.620846947, 0.615656340}, {-0.777432199, -0.760350382, -0.771792198, -0.777800572, -0.780564252}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {5, 47, {0.633542768, 0.615337408, 0.594107834, 0.643212519, 0.643865313}, {-0.756922871, -0.760350382, -0.726579415, -0.721073911, -0.745638676}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {5, 48, {0.680118739, 0.674318907, 0.663571450, 0.643212519, 0.669599622}, {-0.715119162, -0.725837257, -0.731116312, -0.721073911, -0.693786630}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {5, 49, {0.671013463, 0.713910502, 0.709583713, 0.696351071, 0.669599622}, {-0.638171727, -0.660906397, -0.682842045, -0.694360038, -0.693786630}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {5, 50, {0.727966131, 0.713910502, 0.735768150, 0.739543331, 0.735694197}, {-0.671662167, -0.660906397, -0.649033045, -0.661732096, -0.668246617}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {5, 51, {0.754496522, 0.748605896, 0.735768150, 0.746046336, 0.756978108}, {-0.647339385, -0.651700732, -0.649033045, -0.627339033, -0.639733035}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {5, 52, {0.773197192, 0.774662214, 0.765645371, 0.746046336, 0.726268986}, {-0.588283382, -0.610124497, -0.622217054, -0.627339033, -0.587755969}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {5, 53, {0.773197192, 0.793519563, 0.801517317, 0.798247587, 0.790412911}, {-0.588283382, -0.567886291, -0.582336418, -0.590635047, -0.595756320}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {5, 54, {0.810848953, 0.793519563, 0.797958806, 0.819646668, 0.818021011}, {-0.567628522, -0.567886291, -0.534261354, -0.548208708, -0.560168730}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {5, 55, {0.832341868, 0.830867740, 0.827227341, 0.819646668, 0.830061741}, {-0.547713692, -0.551059033, -0.553209682, -0.548208708, -0.541935312}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {5, 56, {0.834181517, 0.839073344, 0.838352981, 0.835984269, 0.830061741}, {-0.532197886, -0.537121513, -0.540461238, -0.542654354, -0.541935312}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {5, 57, {0.834181517, 0.827175872, 0.844413787, 0.845123315, 0.842001187}, {-0.532197886, -0.515673807, -0.517226654, -0.525000054, -0.529771772}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {5, 58, {0.852853920, 0.850365464, 0.844413787, 0.851136172, 0.853745949}, {-0.517776027, -0.519633173, -0.517226654, -0.510579914, -0.515054282}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {5, 59, {0.858794532, 0.858416167, 0.856404083, 0.851136172, 0.852866631}, {-0.504786761, -0.508167487, -0.510420870, -0.510579914, -0.500690487}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {5, 60, {0.837881258, 0.860374428, 0.863951374, 0.860936071, 0.852866631}, {-0.487005094, -0.478592047, -0.489527316, -0.496233631, -0.500690487}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {5, 61, {0.870585136, 0.860374428, 0.868694803, 0.875484017, 0.874441490}, {-0.480373869, -0.478592047, -0.463844418, -0.471501095, -0.476699020}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {5, 62, {0.883557063, 0.879625618, 0.868694803, 0.864735086, 0.883108199}, {-0.455332740, -0.461224598, -0.463844418, -0.440953841, -0.446587722}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {5, 63, {0.890117477, 0.892598830, 0.891831104, 0.889341312, 0.883108199}, {-0.440344714, -0.444566301, -0.447281180, -0.449283099, -0.446587722}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {5, 64, {0.890117477, 0.892053828, 0.896793007, 0.896577732, 0.894904232}, {-0.440344714, -0.431872876, -0.435314898, -0.438148965, -0.440184550}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {5, 65, {0.898376220, 0.892053828, 0.882838436, 0.898688255, 0.900513322}, {-0.428696431, -0.431872876, -0.419188418, -0.417019343, -0.424051630}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {5, 66, {0.907305845, 0.906789270, 0.904648054, 0.898688255, 0.904059250}, {-0.413528333, -0.416296210, -0.418392856, -0.417019343, -0.409492681}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {5, 67, {0.904013525, 0.911003086, 0.911094303, 0.909336153, 0.904059250}, {-0.399055263, -0.402332822, -0.405935261, -0.408531579, -0.409492681}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {5, 68, {0.904013525, 0.884545641, 0.907133628, 0.914103411, 0.911917342}, {-0.399055263, -0.388907365, -0.372126593, -0.384387039, -0.392660921}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {5, 69, {0.924644599, 0.920371483, 0.907133628, 0.913285902, 0.924917845}, {-0.366184609, -0.371788705, -0.372126593, -0.350259462, -0.358899848}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {5, 70, {0.928921485, 0.932637840, 0.928251558, 0.913285902, 0.896753929}, {-0.318645011, -0.332783285, -0.343030217, -0.350259462, -0.318886549}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {5, 71, {0.928921485, 0.938760072, 0.944713445, 0.944149767, 0.940406657}, {-0.318645011, -0.305021637, -0.311819525, -0.316882871, -0.321082629}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {5, 72, {0.947572150, 0.938760072, 0.938808106, 0.949532601, 0.950092285}, {-0.303021336, -0.305021637, -0.288217120, -0.292995860, -0.298593681}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {5, 73, {0.952599388, 0.950124969, 0.938808106, 0.912925979, 0.944741162}, {-0.268095302, -0.278963435, -0.288217120, -0.269114097, -0.253450127}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {5, 74, {0.952617045, 0.963128089, 0.963291107, 0.959230292, 0.944741162}, {-0.232143031, -0.240197404, -0.247242887, -0.253296993, -0.253450127}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {5, 75, {0.952617045, 0.944206470, 0.965921103, 0.968556926, 0.965462227}, {-0.232143031, -0.205290215, -0.208523329, -0.218342207, -0.226320857}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {5, 76, {0.975693535, 0.973502278, 0.965921103, 0.972093056, 0.975797239}, {-0.207119270, -0.209980089, -0.208523329, -0.200106156, -0.203985389}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {5, 77, {0.977800800, 0.978300703, 0.977091703, 0.972093056, 0.972171891}, {-0.193251854, -0.196206651, -0.198749546, -0.200106156, -0.190859967}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {5, 78, {0.960624068, 0.975535214, 0.978783070, 0.977781875, 0.972171891}, {-0.179788859, -0.174943588, -0.181229595, -0.186243475, -0.190859967}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {5, 79, {0.981392460, 0.975535214, 0.978948295, 0.982726719, 0.982884122}, {-0.174944554, -0.174943588, -0.166951569, -0.169894728, -0.172525210}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {5, 80, {0.984411800, 0.983437138, 0.978948295, 0.976947218, 0.983574215}, {-0.162347095, -0.164994735, -0.166951569, -0.157780919, -0.159264045}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {5, 81, {0.975429766, 0.982733091, 0.982450548, 0.976947218, 0.958771545}, {-0.135347977, -0.143892428, -0.150969887, -0.157780919, -0.151539379}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {5, 82, {0.975429766, 0.977366881, 0.986674846, 0.987634680, 0.985422838}, {-0.135347977, -0.118526301, -0.123086480, -0.128326204, -0.133144195}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {5, 83, {0.986688280, 0.977366881, 0.964114590, 0.984282082, 0.988190722}, {-0.111781959, -0.118526301, -0.098498849, -0.096235315, -0.104584085}, {1, 0, 4, 3, 2}, {1, 0, 4, 3, 2}},
    {5, 84, {0.992863317, 0.993166622, 0.991485585, 0.984282082, 0.988694971}, {-0.090442532, -0.093448230, -0.096405693, -0.096235315, -0.087217462}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
    {5, 85, {0.987163303, 0.993392828, 0.994314428, 0.993436293, 0.988694971}, {-0.077888818, -0.079440211, -0.082405352, -0.085131611, -0.087217462}, {4, 3, 2, 1, 0}, {4, 3, 2, 1, 0}},
    {5, 86, {0.987163303, 0.972304796, 0.987685092, 0.992585305, 0.992306413}, {-0.077888818, -0.069012905, -0.059762459, -0.066321513, -0.072017055}, {0, 4, 3, 2, 1}, {0, 4, 3, 2, 1}},
    {5, 87, {0.995916955, 0.994536699, 0.987685092, 0.990075639, 0.995289707}, {-0.055529192, -0.058654505, -0.059762459, -0.049463173, -0.052362630}, {2, 1, 0, 4, 3}, {2, 1, 0, 4, 3}},
    {5, 88, {0.994409470, 0.996090495, 0.995316747, 0.990075639, 0.985337077}, {-0.038675997, -0.042555681, -0.046128589, -0.049463173, -0.038266062}, {3, 2, 1, 0, 4}, {3, 2, 1, 0, 4}},
};

}  // namespace

const TileLayout* find_tile_layout(int sector, int index) {
  const TileLayout* b = std::begin(kTiles);
  const TileLayout* e = std::end(kTiles);
  const TileLayout* it = std::lower_bound(
      b, e, std::make_pair(sector, index),
      [](const TileLayout& t, const std::pair<int, int>& k) {
        return std::make_pair(t.sector, t.index) < k;
      });
  if (it != e && it->sector == sector && it->index == index) return it;
  return nullptr;
}

int tile_layout_count() { return static_cast<int>(std::size(kTiles)); }

}  // namespace dodec
