#include "trilie/builtin.hpp"

#include <sstream>

#include "trilie/errors.hpp"

namespace trilie {

namespace {

const char* kHouBai16Input = R"({
  "schema": "trilie/algebra-v1",
  "dim": 4,
  "basis": ["x1", "x2", "x3", "x4"],
  "brackets": [
    {"a": 2, "b": 3, "c": 4, "coeffs": {"1": "1"}},
    {"a": 1, "b": 3, "c": 4, "coeffs": {"2": "1"}}
  ],
  "derivation": [
    "1", "0", "0", "0",
    "0", "1", "0", "0",
    "0", "0", "1", "0",
    "0", "0", "0", "-1"
  ]
}
)";

// The published 16-dimensional bracket table, line for line and in print order.
// Lines that conflict with a duplicate or with the regenerated table carry an
// annotation; everything else is expected to match the engine exactly.
struct RefLine {
  int a, b, c;
  int value;  // index of the single basis vector on the right-hand side
  const char* annotation;
};

const RefLine kHouBai16Table[] = {
    {2, 3, 4, 1, nullptr},
    {1, 3, 4, 2, nullptr},
    {1, 4, 6, 7, nullptr},
    {2, 5, 3, 8, nullptr},
    {2, 4, 5, 7, nullptr},
    {3, 5, 4, 6, nullptr},
    {3, 6, 4, 5, nullptr},
    {3, 4, 9, 10, nullptr},
    {3, 1, 14, 16, nullptr},
    {3, 2, 13, 16, nullptr},
    {6, 3, 9, 16, nullptr},
    {3, 6, 12, 13, nullptr},
    {4, 6, 9, 15, nullptr},
    {6, 4, 11, 13, nullptr},
    {2, 3, 12, 10, "ambiguous duplicate of {2,3,12}: printed twice with different values"},
    {4, 1, 11, 10, nullptr},
    {2, 3, 12, 9, "ambiguous duplicate of {2,3,12}: printed twice with different values"},
    {4, 2, 11, 9, nullptr},
    {1, 14, 4, 15, "inconsistent with the regenerated table: sign"},
    {2, 4, 13, 15, nullptr},
    {4, 3, 13, 14, nullptr},
    {4, 3, 14, 13, nullptr},
    {1, 5, 11, 16, "inconsistent with the regenerated table: this bracket vanishes"},
    {5, 2, 12, 15, nullptr},
    {5, 3, 10, 16, nullptr},
    {3, 5, 12, 14, nullptr},
    {4, 5, 10, 15, nullptr},
    {5, 4, 11, 14, nullptr},
    {1, 6, 11, 16, nullptr},
    {6, 1, 12, 15, nullptr},
    {9, 4, 11, 2, nullptr},
    {9, 12, 3, 2, nullptr},
    {10, 4, 11, 1, nullptr},
    {10, 12, 3, 1, nullptr},
    {11, 1, 12, 2, nullptr},
    {11, 10, 12, 1, "ambiguous duplicate of {10,11,12}: printed twice with different values"},
    {10, 11, 5, 8, nullptr},
    {10, 5, 12, 7, nullptr},
    {11, 12, 5, 6, nullptr},
    {9, 11, 6, 8, nullptr},
    {9, 6, 12, 7, nullptr},
    {11, 12, 6, 5, nullptr},
    {13, 10, 3, 8, nullptr},
    {13, 4, 10, 7, nullptr},
    {13, 2, 11, 8, nullptr},
    {13, 11, 4, 6, nullptr},
    {13, 12, 2, 7, nullptr},
    {13, 3, 12, 6, nullptr},
    {14, 9, 3, 8, nullptr},
    {14, 4, 9, 7, nullptr},
    {14, 1, 11, 8, nullptr},
    {14, 11, 4, 5, nullptr},
    {14, 12, 1, 7, nullptr},
    {14, 3, 12, 5, nullptr},
    {10, 12, 11, 9, "ambiguous duplicate of {10,11,12}: printed twice with different values"},
    {9, 12, 11, 10, nullptr},
    {9, 11, 14, 16, nullptr},
    {9, 14, 12, 15, nullptr},
    {10, 11, 13, 16, nullptr},
    {10, 13, 12, 15, nullptr},
    {1, 6, 3, 8, nullptr},
    {3, 4, 10, 9, nullptr},
    {11, 12, 13, 14, nullptr},
    {11, 14, 12, 13, "inconsistent with the regenerated table: sign"},
};

std::string render_table() {
  TableDocument doc;
  doc.dim = 16;
  for (const RefLine& line : kHouBai16Table) {
    TableLine tl;
    tl.args = {line.a, line.b, line.c};
    tl.coeffs[line.value] = Rational(1);
    if (line.annotation) tl.annotation = line.annotation;
    doc.lines.push_back(std::move(tl));
  }
  return serialize_table_document(doc);
}

}  // namespace

std::vector<std::string> builtin_ids() { return {"hou-bai-16"}; }

std::string builtin_algebra_document(const std::string& id) {
  if (id == "hou-bai-16") return kHouBai16Input;
  throw Error(ErrorKind::Parse, "unknown example '" + id + "'");
}

std::string builtin_reference_table(const std::string& id) {
  if (id == "hou-bai-16") {
    static const std::string table = render_table();
    return table;
  }
  throw Error(ErrorKind::Parse, "unknown example '" + id + "'");
}

}  // namespace trilie
