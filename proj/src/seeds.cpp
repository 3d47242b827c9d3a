#include "ramsey/bounds.hpp"

namespace ramsey {

namespace {

// Published values and bounds for R([s,2],[t,2]) and R([s,2],[t,1]),
// transcribed cell by cell (single values are exact, pairs are intervals,
// empty cells are simply absent). The loader canonicalizes the symmetric
// duplicates of the [*,2] block and checks that they agree. One cell of the
// source grid (K_7-e versus K_3-e) prints 13 where both symmetry and the
// exact closed form 2k-3 force 11; it is shipped as 11.
const char kTable1Json[] = R"json([
 {
  "patterns": [
   [
    3,
    2
   ],
   [
    3,
    2
   ]
  ],
  "lower": 3,
  "upper": 3,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    4,
    2
   ],
   [
    3,
    2
   ]
  ],
  "lower": 5,
  "upper": 5,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    5,
    2
   ],
   [
    3,
    2
   ]
  ],
  "lower": 7,
  "upper": 7,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    6,
    2
   ],
   [
    3,
    2
   ]
  ],
  "lower": 9,
  "upper": 9,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    7,
    2
   ],
   [
    3,
    2
   ]
  ],
  "lower": 11,
  "upper": 11,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    8,
    2
   ],
   [
    3,
    2
   ]
  ],
  "lower": 13,
  "upper": 13,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    9,
    2
   ],
   [
    3,
    2
   ]
  ],
  "lower": 15,
  "upper": 15,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    10,
    2
   ],
   [
    3,
    2
   ]
  ],
  "lower": 17,
  "upper": 17,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    11,
    2
   ],
   [
    3,
    2
   ]
  ],
  "lower": 19,
  "upper": 19,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    3,
    2
   ],
   [
    4,
    2
   ]
  ],
  "lower": 5,
  "upper": 5,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    4,
    2
   ],
   [
    4,
    2
   ]
  ],
  "lower": 10,
  "upper": 10,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    5,
    2
   ],
   [
    4,
    2
   ]
  ],
  "lower": 13,
  "upper": 13,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    6,
    2
   ],
   [
    4,
    2
   ]
  ],
  "lower": 17,
  "upper": 17,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    7,
    2
   ],
   [
    4,
    2
   ]
  ],
  "lower": 28,
  "upper": 28,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    8,
    2
   ],
   [
    4,
    2
   ]
  ],
  "lower": 29,
  "upper": 38,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    9,
    2
   ],
   [
    4,
    2
   ]
  ],
  "lower": 34,
  "upper": 34,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    10,
    2
   ],
   [
    4,
    2
   ]
  ],
  "lower": 41,
  "upper": 41,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    3,
    2
   ],
   [
    5,
    2
   ]
  ],
  "lower": 7,
  "upper": 7,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    4,
    2
   ],
   [
    5,
    2
   ]
  ],
  "lower": 13,
  "upper": 13,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    5,
    2
   ],
   [
    5,
    2
   ]
  ],
  "lower": 22,
  "upper": 22,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    6,
    2
   ],
   [
    5,
    2
   ]
  ],
  "lower": 31,
  "upper": 39,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    7,
    2
   ],
   [
    5,
    2
   ]
  ],
  "lower": 40,
  "upper": 66,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    3,
    2
   ],
   [
    6,
    2
   ]
  ],
  "lower": 9,
  "upper": 9,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    4,
    2
   ],
   [
    6,
    2
   ]
  ],
  "lower": 17,
  "upper": 17,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    5,
    2
   ],
   [
    6,
    2
   ]
  ],
  "lower": 31,
  "upper": 39,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    6,
    2
   ],
   [
    6,
    2
   ]
  ],
  "lower": 45,
  "upper": 70,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    7,
    2
   ],
   [
    6,
    2
   ]
  ],
  "lower": 59,
  "upper": 135,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    3,
    2
   ],
   [
    7,
    2
   ]
  ],
  "lower": 11,
  "upper": 11,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    4,
    2
   ],
   [
    7,
    2
   ]
  ],
  "lower": 28,
  "upper": 28,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    5,
    2
   ],
   [
    7,
    2
   ]
  ],
  "lower": 40,
  "upper": 66,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    6,
    2
   ],
   [
    7,
    2
   ]
  ],
  "lower": 59,
  "upper": 135,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    7,
    2
   ],
   [
    7,
    2
   ]
  ],
  "lower": 251,
  "upper": 251,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    3,
    2
   ],
   [
    3,
    1
   ]
  ],
  "lower": 5,
  "upper": 5,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    4,
    2
   ],
   [
    3,
    1
   ]
  ],
  "lower": 7,
  "upper": 7,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    5,
    2
   ],
   [
    3,
    1
   ]
  ],
  "lower": 11,
  "upper": 11,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    6,
    2
   ],
   [
    3,
    1
   ]
  ],
  "lower": 17,
  "upper": 17,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    7,
    2
   ],
   [
    3,
    1
   ]
  ],
  "lower": 21,
  "upper": 21,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    8,
    2
   ],
   [
    3,
    1
   ]
  ],
  "lower": 25,
  "upper": 25,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    9,
    2
   ],
   [
    3,
    1
   ]
  ],
  "lower": 31,
  "upper": 31,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    10,
    2
   ],
   [
    3,
    1
   ]
  ],
  "lower": 37,
  "upper": 37,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    11,
    2
   ],
   [
    3,
    1
   ]
  ],
  "lower": 42,
  "upper": 45,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    3,
    2
   ],
   [
    4,
    1
   ]
  ],
  "lower": 7,
  "upper": 7,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    4,
    2
   ],
   [
    4,
    1
   ]
  ],
  "lower": 11,
  "upper": 11,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    5,
    2
   ],
   [
    4,
    1
   ]
  ],
  "lower": 19,
  "upper": 19,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    6,
    2
   ],
   [
    4,
    1
   ]
  ],
  "lower": 30,
  "upper": 33,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    7,
    2
   ],
   [
    4,
    1
   ]
  ],
  "lower": 37,
  "upper": 52,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    8,
    2
   ],
   [
    4,
    1
   ]
  ],
  "lower": 75,
  "upper": 75,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    9,
    2
   ],
   [
    4,
    1
   ]
  ],
  "lower": 105,
  "upper": 105,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    10,
    2
   ],
   [
    4,
    1
   ]
  ],
  "lower": 139,
  "upper": 139,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    11,
    2
   ],
   [
    4,
    1
   ]
  ],
  "lower": 184,
  "upper": 184,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    3,
    2
   ],
   [
    5,
    1
   ]
  ],
  "lower": 9,
  "upper": 9,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    4,
    2
   ],
   [
    5,
    1
   ]
  ],
  "lower": 16,
  "upper": 16,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    5,
    2
   ],
   [
    5,
    1
   ]
  ],
  "lower": 30,
  "upper": 34,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    6,
    2
   ],
   [
    5,
    1
   ]
  ],
  "lower": 43,
  "upper": 67,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    7,
    2
   ],
   [
    5,
    1
   ]
  ],
  "lower": 112,
  "upper": 112,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    8,
    2
   ],
   [
    5,
    1
   ]
  ],
  "lower": 183,
  "upper": 183,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    9,
    2
   ],
   [
    5,
    1
   ]
  ],
  "lower": 277,
  "upper": 277,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    10,
    2
   ],
   [
    5,
    1
   ]
  ],
  "lower": 409,
  "upper": 409,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    11,
    2
   ],
   [
    5,
    1
   ]
  ],
  "lower": 581,
  "upper": 581,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    3,
    2
   ],
   [
    6,
    1
   ]
  ],
  "lower": 11,
  "upper": 11,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    4,
    2
   ],
   [
    6,
    1
   ]
  ],
  "lower": 21,
  "upper": 21,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    5,
    2
   ],
   [
    6,
    1
   ]
  ],
  "lower": 37,
  "upper": 53,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    6,
    2
   ],
   [
    6,
    1
   ]
  ],
  "lower": 110,
  "upper": 110,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    7,
    2
   ],
   [
    6,
    1
   ]
  ],
  "lower": 205,
  "upper": 205,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    8,
    2
   ],
   [
    6,
    1
   ]
  ],
  "lower": 373,
  "upper": 373,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    9,
    2
   ],
   [
    6,
    1
   ]
  ],
  "lower": 621,
  "upper": 621,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    10,
    2
   ],
   [
    6,
    1
   ]
  ],
  "lower": 1007,
  "upper": 1007,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    11,
    2
   ],
   [
    6,
    1
   ]
  ],
  "lower": 1544,
  "upper": 1544,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    3,
    2
   ],
   [
    7,
    1
   ]
  ],
  "lower": 13,
  "upper": 13,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    4,
    2
   ],
   [
    7,
    1
   ]
  ],
  "lower": 28,
  "upper": 30,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    5,
    2
   ],
   [
    7,
    1
   ]
  ],
  "lower": 51,
  "upper": 83,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    6,
    2
   ],
   [
    7,
    1
   ]
  ],
  "lower": 193,
  "upper": 193,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    7,
    2
   ],
   [
    7,
    1
   ]
  ],
  "lower": 392,
  "upper": 392,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    8,
    2
   ],
   [
    7,
    1
   ]
  ],
  "lower": 753,
  "upper": 753,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    9,
    2
   ],
   [
    7,
    1
   ]
  ],
  "lower": 1336,
  "upper": 1336,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    10,
    2
   ],
   [
    7,
    1
   ]
  ],
  "lower": 2303,
  "upper": 2303,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    11,
    2
   ],
   [
    7,
    1
   ]
  ],
  "lower": 3751,
  "upper": 3751,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    3,
    2
   ],
   [
    8,
    1
   ]
  ],
  "lower": 15,
  "upper": 15,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    4,
    2
   ],
   [
    8,
    1
   ]
  ],
  "lower": 42,
  "upper": 42,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    5,
    2
   ],
   [
    8,
    1
   ]
  ],
  "lower": 123,
  "upper": 123,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    6,
    2
   ],
   [
    8,
    1
   ]
  ],
  "lower": 300,
  "upper": 300,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    7,
    2
   ],
   [
    8,
    1
   ]
  ],
  "lower": 657,
  "upper": 657,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    8,
    2
   ],
   [
    8,
    1
   ]
  ],
  "lower": 1349,
  "upper": 1349,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    9,
    2
   ],
   [
    8,
    1
   ]
  ],
  "lower": 2558,
  "upper": 2558,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    10,
    2
   ],
   [
    8,
    1
   ]
  ],
  "lower": 4722,
  "upper": 4722,
  "source": "small-ramsey-survey"
 },
 {
  "patterns": [
   [
    11,
    2
   ],
   [
    8,
    1
   ]
  ],
  "lower": 8200,
  "upper": 8200,
  "source": "small-ramsey-survey"
 }
]
)json";

}  // namespace

const char* SeedTable::table1_text() { return kTable1Json; }

const SeedTable& SeedTable::table1() {
  static const SeedTable table = SeedTable::from_json(nlohmann::json::parse(kTable1Json));
  return table;
}

}  // namespace ramsey
