#include "upb/uom.hpp"

#include <sstream>

namespace upb {

namespace {

// Rows are written as space-separated labels, constraints as
// "subject: item item ..." (the subject may not equal any listed item,
// projectively).  Constraint subjects are listed in first-appearance order
// of the variable in the grid.
UomSpec make_spec(const std::string& name, const std::vector<std::string>& rows,
                  const std::vector<std::string>& constraints) {
    UomSpec spec;
    spec.name = name;
    for (const auto& line : rows) {
        std::istringstream in(line);
        std::vector<Label> row;
        std::string tok;
        while (in >> tok) row.push_back(Label::parse(tok));
        spec.grid.push_back(row);
    }
    spec.rows = int(spec.grid.size());
    spec.cols = spec.grid.empty() ? 0 : int(spec.grid[0].size());
    for (const auto& line : constraints) {
        auto colon = line.find(':');
        if (colon == std::string::npos) throw ParseError("bad constraint: " + line);
        Constraint c;
        c.subject = line.substr(0, colon);
        std::istringstream in(line.substr(colon + 1));
        std::string tok;
        while (in >> tok) c.forbidden.push_back(Label::parse(tok));
        spec.constraints.push_back(c);
    }
    spec.validate();
    return spec;
}

// The 4-qubit families and their constrained variants, plus the 3-qubit
// set.  Each grid is transcribed verbatim from its source, including the
// two constraint sets the lint flags as suspicious (F6(i2=i3') bounds i4
// away from 0 only; F6(i2=i4') does the same for i3).  Every row is one
// product vector; column k is qubit k.
std::vector<UomSpec> build_catalog() {
    std::vector<UomSpec> cat;

    cat.push_back(make_spec("F1",
        {"0   0   0   0",
         "0   1   0   1",
         "1   g3  h3  i3",
         "1   g3' h3  i4",
         "f5  g3' 1   i4'",
         "f5  g3  1   i3'",
         "f5' 0   h3' 1",
         "f5' 1   h3' 0"},
        {"g3: 0 1", "h3: 0 1", "i3: 0 1 i4", "i4: 0 1", "f5: 0 1"}));

    cat.push_back(make_spec("F1(i3=i4')",
        {"0   0   0   0",
         "0   1   0   1",
         "1   g3  h3  i3",
         "1   g3' h3  i3'",
         "f5  g3' 1   i3",
         "f5  g3  1   i3'",
         "f5' 0   h3' 1",
         "f5' 1   h3' 0"},
        {"g3: 0 1", "h3: 0 1", "i3: 0 1", "f5: 0 1"}));

    cat.push_back(make_spec("F2",
        {"0   0   0   0",
         "0   1   0   i2",
         "1   g3  h3  i3",
         "1   g3' h3  i4",
         "f5  g3' 1   i4'",
         "f5  g3  1   i3'",
         "f5' 1   h3' i2'",
         "f5' 0   h3' 1"},
        {"i2: 0 1", "g3: 0 1", "h3: 0 1", "i3: i4 i4'", "f5: 0 1"}));

    cat.push_back(make_spec("F2(i2=i3)",
        {"0   0   0   0",
         "0   1   0   i2",
         "1   g3  h3  i2",
         "1   g3' h3  i4",
         "f5  g3' 1   i4'",
         "f5  g3  1   i2'",
         "f5' 1   h3' i2'",
         "f5' 0   h3' 1"},
        {"i2: 0 1 i4 i4'", "g3: 0 1", "h3: 0 1", "i4: 0 1", "f5: 0 1"}));

    cat.push_back(make_spec("F2(i2=i3,i4=0)",
        {"0   0   0   0",
         "0   1   0   i2",
         "1   g3  h3  i2",
         "1   g3' h3  0",
         "f5  g3' 1   1",
         "f5  g3  1   i2'",
         "f5' 1   h3' i2'",
         "f5' 0   h3' 1"},
        {"i2: 0 1", "g3: 0 1", "h3: 0 1", "f5: 0 1"}));

    cat.push_back(make_spec("F2(i2=i3,i4=1)",
        {"0   0   0   0",
         "0   1   0   i2",
         "1   g3  h3  i2",
         "1   g3' h3  1",
         "f5  g3' 1   0",
         "f5  g3  1   i2'",
         "f5' 1   h3' i2'",
         "f5' 0   h3' 1"},
        {"i2: 0 1", "g3: 0 1", "h3: 0 1", "f5: 0 1"}));

    cat.push_back(make_spec("F2(i2=i3')",
        {"0   0   0   0",
         "0   1   0   i2",
         "1   g3  h3  i2'",
         "1   g3' h3  i4",
         "f5  g3' 1   i4'",
         "f5  g3  1   i2",
         "f5' 1   h3' i2'",
         "f5' 0   h3' 1"},
        {"i2: 0 1 i4 i4'", "g3: 0 1", "h3: 0 1", "i4: 0 1", "f5: 0 1"}));

    cat.push_back(make_spec("F2(i2=i3',i4=0)",
        {"0   0   0   0",
         "0   1   0   i2",
         "1   g3  h3  i2'",
         "1   g3' h3  0",
         "f5  g3' 1   1",
         "f5  g3  1   i2",
         "f5' 1   h3' i2'",
         "f5' 0   h3' 1"},
        {"i2: 0 1", "g3: 0 1", "h3: 0 1", "f5: 0 1"}));

    cat.push_back(make_spec("F2(i2=i3',i4=1)",
        {"0   0   0   0",
         "0   1   0   i2",
         "1   g3  h3  i2'",
         "1   g3' h3  1",
         "f5  g3' 1   0",
         "f5  g3  1   i2",
         "f5' 1   h3' i2'",
         "f5' 0   h3' 1"},
        {"i2: 0 1", "g3: 0 1", "h3: 0 1", "f5: 0 1"}));

    cat.push_back(make_spec("F2(i2=i4)",
        {"0   0   0   0",
         "0   1   0   i2",
         "1   g3  h3  i3",
         "1   g3' h3  i2",
         "f5  g3' 1   i2'",
         "f5  g3  1   i3'",
         "f5' 1   h3' i2'",
         "f5' 0   h3' 1"},
        {"i2: 0 1 i3 i3'", "g3: 0 1", "h3: 0 1", "i3: 0 1", "f5: 0 1"}));

    cat.push_back(make_spec("F2(i2=i4,i3=0)",
        {"0   0   0   0",
         "0   1   0   i2",
         "1   g3  h3  0",
         "1   g3' h3  i2",
         "f5  g3' 1   i2'",
         "f5  g3  1   1",
         "f5' 1   h3' i2'",
         "f5' 0   h3' 1"},
        {"i2: 0 1", "g3: 0 1", "h3: 0 1", "f5: 0 1"}));

    cat.push_back(make_spec("F2(i2=i4,i3=1)",
        {"0   0   0   0",
         "0   1   0   i2",
         "1   g3  h3  1",
         "1   g3' h3  i2",
         "f5  g3' 1   i2'",
         "f5  g3  1   0",
         "f5' 1   h3' i2'",
         "f5' 0   h3' 1"},
        {"i2: 0 1", "g3: 0 1", "h3: 0 1", "f5: 0 1"}));

    cat.push_back(make_spec("F2(i2=i4')",
        {"0   0   0   0",
         "0   1   0   i2",
         "1   g3  h3  i3",
         "1   g3' h3  i2'",
         "f5  g3' 1   i2",
         "f5  g3  1   i3'",
         "f5' 1   h3' i2'",
         "f5' 0   h3' 1"},
        {"i2: 0 1 i3 i3'", "g3: 0 1", "h3: 0 1", "i3: 0 1", "f5: 0 1"}));

    cat.push_back(make_spec("F2(i2=i4',i3=0)",
        {"0   0   0   0",
         "0   1   0   i2",
         "1   g3  h3  0",
         "1   g3' h3  i2'",
         "f5  g3' 1   i2",
         "f5  g3  1   1",
         "f5' 1   h3' i2'",
         "f5' 0   h3' 1"},
        {"i2: 0 1", "g3: 0 1", "h3: 0 1", "f5: 0 1"}));

    cat.push_back(make_spec("F2(i2=i4',i3=1)",
        {"0   0   0   0",
         "0   1   0   i2",
         "1   g3  h3  1",
         "1   g3' h3  i2'",
         "f5  g3' 1   i2",
         "f5  g3  1   0",
         "f5' 1   h3' i2'",
         "f5' 0   h3' 1"},
        {"i2: 0 1", "g3: 0 1", "h3: 0 1", "f5: 0 1"}));

    cat.push_back(make_spec("F3",
        {"0   0   0   0",
         "0   1   0   i2",
         "1   g3  h3  0",
         "1   g3' h4  i2",
         "f5  g3' 1   i2'",
         "f5  g3  1   1",
         "f5' 1   h3' i2'",
         "f5' 0   h4' 1"},
        {"i2: 0 1", "g3: 0 1", "h3: 0 1 h4", "h4: 0 1", "f5: 0 1"}));

    cat.push_back(make_spec("F4",
        {"0   0   0   0",
         "0   1   0   i2",
         "1   g3  h3  i3",
         "1   g4  h3  i3'",
         "f5  g3' 1   i3",
         "f5  g4' 1   i3'",
         "f5' 1   h3' i2'",
         "f5' 0   h3' 1"},
        {"i2: 0 1 i3 i3'", "g3: 0 1 g4 g4'", "h3: 0 1", "i3: 0 1", "g4: 0 1",
         "f5: 0 1"}));

    cat.push_back(make_spec("F5",
        {"0   0   0   0",
         "0   1   0   i2",
         "1   g3  h3  1",
         "1   g3' h3  i2'",
         "f5  g3  1   0",
         "f6  g3' 1   i2",
         "f5' 1   h3' i2'",
         "f6' 0   h3' 1"},
        {"i2: 0 1", "g3: 0 1", "h3: 0 1", "f5: 0 1 f6", "f6: 0 1"}));

    cat.push_back(make_spec("F6",
        {"0   0   0   0",
         "0   1   h2  i2",
         "1   g3  0   i3",
         "1   g3' h2  i4",
         "f5  1   h2' i3'",
         "f5  0   1   i4'",
         "f5' g3  1   i2'",
         "f5' g3' h2' 1"},
        {"h2: 0 1", "i2: 0 i3' i4", "g3: 0 1", "i3: 0 i4", "i4: 0 1", "f5: 0 1"}));

    cat.push_back(make_spec("F6(i2=1)",
        {"0   0   0   0",
         "0   1   h2  1",
         "1   g3  0   i3",
         "1   g3' h2  i4",
         "f5  1   h2' i3'",
         "f5  0   1   i4'",
         "f5' g3  1   0",
         "f5' g3' h2' 1"},
        {"h2: 0 1", "g3: 0 1", "i3: 0 1 i4", "i4: 0 1", "f5: 0 1"}));

    // The source states this variant's last inequality on the primed label
    // (i3' != 0,1); orthogonal partners swap 0 and 1, so it is recorded on
    // the base variable as i3 != 0,1.
    cat.push_back(make_spec("F6(i2=1,i3=i4')",
        {"0   0   0   0",
         "0   1   h2  1",
         "1   g3  0   i3",
         "1   g3' h2  i3'",
         "f5  1   h2' i3'",
         "f5  0   1   i3",
         "f5' g3  1   0",
         "f5' g3' h2' 1"},
        {"h2: 0 1", "g3: 0 1", "i3: 0 1", "f5: 0 1"}));

    cat.push_back(make_spec("F6(i2=i3)",
        {"0   0   0   0",
         "0   1   h2  i2",
         "1   g3  0   i2",
         "1   g3' h2  i4",
         "f5  1   h2' i2'",
         "f5  0   1   i4'",
         "f5' g3  1   i2'",
         "f5' g3' h2' 1"},
        {"h2: 0 1", "i2: 0 1 i4 i4'", "g3: 0 1", "i4: 0 1", "f5: 0 1"}));

    cat.push_back(make_spec("F6(i2=i3')",
        {"0   0   0   0",
         "0   1   h2  i2",
         "1   g3  0   i2'",
         "1   g3' h2  i4",
         "f5  1   h2' i2",
         "f5  0   1   i4'",
         "f5' g3  1   i2'",
         "f5' g3' h2' 1"},
        {"h2: 0 1", "i2: 0 1 i4 i4'", "g3: 0 1", "i4: 0", "f5: 0 1"}));

    cat.push_back(make_spec("F6(i2=i3',i4=1)",
        {"0   0   0   0",
         "0   1   h2  i2",
         "1   g3  0   i2'",
         "1   g3' h2  1",
         "f5  1   h2' i2",
         "f5  0   1   0",
         "f5' g3  1   i2'",
         "f5' g3' h2' 1"},
        {"h2: 0 1", "i2: 0 1", "g3: 0 1", "f5: 0 1"}));

    cat.push_back(make_spec("F6(i2=i4')",
        {"0   0   0   0",
         "0   1   h2  i2",
         "1   g3  0   i3",
         "1   g3' h2  i2'",
         "f5  1   h2' i3'",
         "f5  0   1   i2",
         "f5' g3  1   i2'",
         "f5' g3' h2' 1"},
        {"h2: 0 1", "i2: 0 1 i3 i3'", "g3: 0 1", "i3: 0", "f5: 0 1"}));

    cat.push_back(make_spec("SHIFTS3",
        {"0   0   0",
         "1   y   z",
         "x   1   z'",
         "x'  y'  1"},
        {"y: 0 1", "z: 0 1", "x: 0 1"}));

    return cat;
}

} // namespace

const std::vector<UomSpec>& catalog() {
    static const std::vector<UomSpec> cat = build_catalog();
    return cat;
}

const UomSpec& catalog_by_name(const std::string& name) {
    for (const auto& spec : catalog())
        if (spec.name == name) return spec;
    throw UnknownVariable("no catalog entry named " + name);
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (const auto& spec : catalog()) names.push_back(spec.name);
    return names;
}

} // namespace upb
