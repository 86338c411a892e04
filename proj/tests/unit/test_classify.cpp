#include <doctest.h>

#include "hyperclass/apex.hpp"
#include "hyperclass/classify.hpp"
#include "hyperclass/tables.hpp"

using namespace hyperclass;

TEST_CASE("parametric family patterns") {
    ParametricFamily f;
    f.label = "(r, -r, 1/2)";
    f.slope = {1, -1, 0};
    f.offset = {Rat(0), Rat(0), Rat(1, 2)};
    f.excluded_r = {Rat(1, 2)};
    CHECK(f.at(Rat(1, 3)) == std::vector<Rat>{Rat(1, 3), Rat(2, 3), Rat(1, 2)});
    CHECK(f.matches({Rat(1, 3), Rat(2, 3), Rat(1, 2)}));
    CHECK_FALSE(f.matches({Rat(1, 2), Rat(1, 2), Rat(1, 2)})); // excluded r
    CHECK_FALSE(f.matches({Rat(1, 3), Rat(1, 3), Rat(1, 2)}));
    CHECK(f.admissible(Rat(1, 7)));
    CHECK_FALSE(f.admissible(Rat(1, 2)));
    CHECK_FALSE(f.admissible(Rat(0)));
}

TEST_CASE("F4 characterization examples") {
    CHECK(f4_characterization(Rat(1, 4), Rat(3, 4), Rat(1, 2), Rat(1, 3)));
    CHECK(f4_characterization(Rat(1, 6), Rat(5, 6), Rat(1, 3), Rat(2, 3)));
    CHECK_FALSE(f4_characterization(Rat(1, 5), Rat(2, 5), Rat(1, 3), Rat(1, 3)));
}

TEST_CASE("FC signature condition") {
    CHECK(fc_signature_condition(Rat(1, 4), Rat(3, 4), {Rat(1, 2), Rat(1, 3), Rat(1, 2)}));
    CHECK_FALSE(fc_signature_condition(Rat(1, 6), Rat(5, 6), {Rat(2, 3), Rat(2, 3), Rat(2, 3)}));
    // Empty product case reduces to a > 0.
    CHECK(fc_signature_condition(Rat(1, 3), Rat(1, 2), {}));
    CHECK_FALSE(fc_signature_condition(Rat(0), Rat(1, 2), {}));
    CHECK_THROWS_AS(fc_signature_condition(Rat(3, 4), Rat(1, 4), {Rat(1, 2)}), InputError);
    CHECK_THROWS_AS(fc_signature_condition(Rat(1, 4), Rat(3, 4), {Rat(3, 2)}), InputError);
}

TEST_CASE("comparison report flags a corrupted solution set") {
    SolutionSet s = classify_family(Family::G1, 0);
    CompareReport ok = compare_with_reference(s, "thm_G1");
    CHECK(ok.pass);

    // Swap one conjugation class for a fabricated one.
    SolutionSet corrupted = s;
    corrupted.sporadic.erase({Rat(1, 6), Rat(1, 2), Rat(2, 3)});
    corrupted.sporadic.erase({Rat(5, 6), Rat(1, 2), Rat(1, 3)});
    for (const auto& t : conjugation_orbit({Rat(1, 7), Rat(1, 2), Rat(2, 3)}))
        corrupted.sporadic.insert(t);
    CompareReport bad = compare_with_reference(corrupted, "thm_G1");
    CHECK_FALSE(bad.pass);
    CHECK(bad.missing.size() == 1);
    CHECK(bad.extra.size() == 1);
    CHECK(bad.missing[0] == std::vector<Rat>{Rat(1, 6), Rat(1, 2), Rat(2, 3)});
    CHECK(bad.extra[0][0] == Rat(1, 7));

    CHECK_THROWS_AS(compare_with_reference(s, "no-such-table"), InputError);
}

TEST_CASE("reference tables are wired to families") {
    CHECK(reference_table_id(Family::H4, 0) == "table5");
    CHECK(reference_table_id(Family::FC, 2) == "table3");
    CHECK(reference_table_id(Family::FC, 3) == "table4");
    CHECK(reference_table("table2").representatives.size() == 40);
    CHECK(reference_table("table3").representatives.size() == 40);
    CHECK(reference_table("table3").duplicate_rows.size() == 4);
    CHECK(reference_table("table5").representatives.size() == 66);
    CHECK(reference_table("table6").representatives.size() == 48);
    CHECK(reference_table("table4").representatives.size() == 25);
}

TEST_CASE("small classifications regenerate the published lists") {
    SolutionSet g3 = classify_family(Family::G3, 0);
    CHECK(g3.families.size() == 1);
    CHECK(g3.sporadic.size() == 4);
    CHECK(compare_with_reference(g3, "thm_G3").pass);

    SolutionSet h3 = classify_family(Family::H3, 0);
    CHECK(h3.sporadic.size() == 6);
    CHECK(compare_with_reference(h3, "thm_H3").pass);
}
