#include "doctest.h"

#include <map>
#include <set>

#include "cremona/catalog.hpp"
#include "cremona/cubes.hpp"

using namespace cremona;

TEST_CASE("membership test on the twelve special points")
{
    CHECK(is_member(g0().matrix()));
    CHECK(is_member(GroupElement::identity().matrix()));
    GroupElement::Mat stretched{{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 2}}};
    CHECK_FALSE(is_member(stretched));
    GroupElement::Mat singular{{{1, 0, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}};
    CHECK_THROWS_AS(is_member(singular), error);
}

TEST_CASE("closure enumeration finds all 576 elements, 192 per type")
{
    const auto& all = enumerate_group();
    CHECK(all.size() == 576);
    std::map<ElemType, int> counts;
    for (const auto& g : all) {
        CHECK(is_member(g.matrix()));
        counts[classify(g).tag]++;
    }
    CHECK(counts[ElemType::A] == 192);
    CHECK(counts[ElemType::B] == 192);
    CHECK(counts[ElemType::C] == 192);
    CHECK(enumerate_cb().size() == 192);
}

TEST_CASE("closure property on sample products")
{
    const auto& all = enumerate_group();
    std::set<GroupElement> lookup(all.begin(), all.end());
    for (std::size_t i = 0; i < all.size(); i += 37)
        for (std::size_t j = 0; j < all.size(); j += 53) CHECK(lookup.count(all[i] * all[j]) == 1);
}

TEST_CASE("classification via the orbit of the coordinate points")
{
    ElementType a = classify(g0());
    CHECK(a.tag == ElemType::A);
    CHECK(a.orbit_size == 8);
    ElementType b = classify(GroupElement::identity());
    CHECK(b.tag == ElemType::B);
    CHECK(b.orbit_size == 4);
    ElementType c = classify(catalog::type_c_representative());
    CHECK(c.tag == ElemType::C);
    CHECK(c.orbit_size == 12);
}

TEST_CASE("element orders")
{
    CHECK(element_order(g0()) == 2);
    CHECK(element_order(GroupElement::identity()) == 1);
    // order-6 representative of the signed-permutation subgroup
    GroupElement xiv(GroupElement::Mat{{{-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}}});
    CHECK(element_order(xiv) == 6);
}

TEST_CASE("inverse preserves the type")
{
    const auto& all = enumerate_group();
    for (std::size_t i = 0; i < all.size(); i += 23) {
        CHECK(classify(all[i]).tag == classify(all[i].inverse()).tag);
    }
}

TEST_CASE("type B elements are exactly the signed permutations")
{
    for (const auto& g : enumerate_group()) {
        bool sp = g.is_signed_permutation();
        bool type_b = classify(g).tag == ElemType::B;
        CHECK(sp == type_b);
    }
}

TEST_CASE("every element permutes the three special families")
{
    const auto& sp = SpecialPoints::instance();
    const auto& all = enumerate_group();
    for (std::size_t i = 0; i < all.size(); i += 19) {
        std::set<char> targets;
        targets.insert(family_action(all[i], sp.E).target);
        targets.insert(family_action(all[i], sp.P).target);
        targets.insert(family_action(all[i], sp.Q).target);
        CHECK(targets.size() == 3); // a genuine permutation of {E, P, Q}
    }
}

TEST_CASE("fourteen conjugacy classes in the signed-permutation subgroup")
{
    auto classes = conjugacy_classes_B();
    CHECK(classes.size() == 14);
    std::size_t total = 0;
    bool identity_singleton = false;
    std::set<int> orders;
    for (const auto& c : classes) {
        total += c.members.size();
        orders.insert(c.order);
        if (c.representative == GroupElement::identity()) identity_singleton = c.members.size() == 1;
    }
    CHECK(total == 192);
    CHECK(identity_singleton);
    CHECK(orders == std::set<int>{1, 2, 3, 4, 6});
}

TEST_CASE("the fourteen table representatives hit all fourteen classes")
{
    auto classes = conjugacy_classes_B();
    std::set<std::size_t> hit;
    for (const auto& row : catalog::case_b_rows()) {
        for (std::size_t i = 0; i < classes.size(); ++i)
            for (const auto& m : classes[i].members)
                if (m == row.matrix) hit.insert(i);
        CHECK(element_order(row.matrix) == row.order);
    }
    CHECK(hit.size() == 14);
}
