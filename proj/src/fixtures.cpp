#include "singspec/report.hpp"

// Kept byte-identical to tests/fixtures/*.json (checked by the test suite).

namespace singspec {

const std::string& fixture_i2_model() {
  static const std::string text = R"json({
  "n": 2,
  "components": [
    {
      "id": "C1",
      "multiplicity": 1,
      "kind": "vertical"
    },
    {
      "id": "C2",
      "multiplicity": 1,
      "kind": "vertical"
    }
  ],
  "strata": [
    {
      "ids": [
        "C1"
      ],
      "cover_class": [
        [
          0,
          0,
          "0",
          -1
        ],
        [
          1,
          1,
          "0",
          1
        ]
      ]
    },
    {
      "ids": [
        "C2"
      ],
      "cover_class": [
        [
          0,
          0,
          "0",
          -1
        ],
        [
          1,
          1,
          "0",
          1
        ]
      ]
    },
    {
      "ids": [
        "C1",
        "C2"
      ],
      "cover_class": [
        [
          0,
          0,
          "0",
          2
        ]
      ]
    }
  ]
}
)json";
  return text;
}

// Minimal resolution of x^2 + y^3: exceptional curves E1, E2, E3 of
// multiplicity 2, 3, 6 and the strict transform S. Only strata over the
// origin are listed.
const std::string& fixture_cusp_model() {
  static const std::string text = R"json({
  "n": 2,
  "components": [
    {
      "id": "E1",
      "multiplicity": 2,
      "kind": "vertical"
    },
    {
      "id": "E2",
      "multiplicity": 3,
      "kind": "vertical"
    },
    {
      "id": "E3",
      "multiplicity": 6,
      "kind": "vertical"
    },
    {
      "id": "S",
      "multiplicity": 1,
      "kind": "vertical"
    }
  ],
  "strata": [
    {
      "ids": [
        "E1"
      ],
      "cover_class": [
        [
          1,
          1,
          "0",
          1
        ],
        [
          1,
          1,
          "1/2",
          1
        ]
      ]
    },
    {
      "ids": [
        "E2"
      ],
      "cover_class": [
        [
          1,
          1,
          "0",
          1
        ],
        [
          1,
          1,
          "1/3",
          1
        ],
        [
          1,
          1,
          "2/3",
          1
        ]
      ]
    },
    {
      "ids": [
        "E3"
      ],
      "cover_class": [
        [
          0,
          0,
          "0",
          -2
        ],
        [
          0,
          0,
          "1/3",
          -1
        ],
        [
          0,
          0,
          "1/2",
          -1
        ],
        [
          0,
          0,
          "2/3",
          -1
        ],
        [
          0,
          1,
          "5/6",
          -1
        ],
        [
          1,
          0,
          "1/6",
          -1
        ],
        [
          1,
          1,
          "0",
          1
        ]
      ]
    },
    {
      "ids": [
        "E1",
        "E3"
      ],
      "cover_class": [
        [
          0,
          0,
          "0",
          1
        ],
        [
          0,
          0,
          "1/2",
          1
        ]
      ]
    },
    {
      "ids": [
        "E2",
        "E3"
      ],
      "cover_class": [
        [
          0,
          0,
          "0",
          1
        ],
        [
          0,
          0,
          "1/3",
          1
        ],
        [
          0,
          0,
          "2/3",
          1
        ]
      ]
    },
    {
      "ids": [
        "E3",
        "S"
      ],
      "cover_class": [
        [
          0,
          0,
          "0",
          1
        ]
      ]
    }
  ]
}
)json";
  return text;
}

}  // namespace singspec
