#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "pbr/builtin.hpp"
#include "pbr/errors.hpp"

using namespace pbr;

TEST_CASE("all_subgroups counts and classes") {
  SUBCASE("trivial group") {
    LatticePtr lat = all_subgroups(builtin_group("cyclic:1"));
    CHECK(lat->subgroup_count() == 1);
    CHECK(lat->class_count() == 1);
  }
  SUBCASE("sym:3 has 6 subgroups in 4 classes") {
    LatticePtr lat = all_subgroups(builtin_group("sym:3"));
    CHECK(lat->subgroup_count() == 6);
    CHECK(lat->class_count() == 4);
  }
  SUBCASE("alt:4 has 10 subgroups in 5 classes") {
    LatticePtr lat = all_subgroups(builtin_group("alt:4"));
    CHECK(lat->subgroup_count() == 10);
    REQUIRE(lat->class_count() == 5);
    // classes in canonical order: 1, C2 (x3), C3 (x4), V4, A4
    CHECK(lat->class_order(0) == 1);
    CHECK(lat->class_order(1) == 2);
    CHECK(lat->class_size(1) == 3);
    CHECK(lat->class_order(2) == 3);
    CHECK(lat->class_size(2) == 4);
    CHECK(lat->class_order(3) == 4);
    CHECK(lat->class_is_normal(3));
    CHECK(lat->class_order(4) == 12);
  }
}

TEST_CASE("lattice equals the exhaustive subset oracle") {
  for (const char *spec : {"sym:3", "alt:4", "dihedral:4", "quaternion:8", "cyclic:12",
                           "dihedral:8", "prod(cyclic:2,cyclic:2)"}) {
    CAPTURE(spec);
    GroupPtr g = builtin_group(spec);
    LatticePtr lat = all_subgroups(g);
    auto oracle = pbr::testing::oracle_subgroup_masks(*g);
    REQUIRE(lat->subgroup_count() == static_cast<int>(oracle.size()));
    std::vector<std::vector<std::uint8_t>> ours;
    for (int i = 0; i < lat->subgroup_count(); ++i) ours.push_back(lat->subgroup(i).mask());
    std::sort(ours.begin(), ours.end());
    CHECK(ours == oracle);
  }
}

TEST_CASE("lattice structural invariants") {
  for (const char *spec : {"sym:4", "alt:4", "dihedral:6", "cyclic:24"}) {
    CAPTURE(spec);
    GroupPtr g = builtin_group(spec);
    LatticePtr lat = all_subgroups(g);
    CHECK(lat->class_order(lat->trivial_class()) == 1);
    CHECK(lat->class_order(lat->full_class()) == g->order());
    for (int c = 0; c < lat->class_count(); ++c) {
      CHECK(g->order() % lat->class_size(c) == 0); // orbit sizes divide |G|
      // each class is one conjugation orbit
      std::set<std::vector<std::uint8_t>> orbit;
      for (int x = 0; x < g->order(); ++x)
        orbit.insert(conjugate_subgroup(lat->class_rep(c), x).mask());
      CHECK(static_cast<int>(orbit.size()) == lat->class_size(c));
      for (int id : lat->class_members(c)) CHECK(orbit.count(lat->subgroup(id).mask()) == 1);
    }
    // ascending class order
    for (int c = 0; c + 1 < lat->class_count(); ++c)
      CHECK(lat->class_order(c) <= lat->class_order(c + 1));
  }
}

TEST_CASE("collections from predicates") {
  LatticePtr a4 = all_subgroups(builtin_group("alt:4"));
  SUBCASE("all classes form a collection") {
    Collection d = full_collection(a4);
    CHECK(d.size() == 5);
    CHECK(d.is_collection());
  }
  SUBCASE("normal classes form a collection") {
    Collection d = normal_collection(a4);
    CHECK(d.size() == 3); // 1, V4, A4
    CHECK(d.is_collection());
  }
  SUBCASE("an explicit valid family") {
    Collection d = collection_from_predicate(
        a4, [&](int c) { return a4->class_order(c) != 2 && a4->class_order(c) != 3; });
    CHECK(d.size() == 3);
  }
  SUBCASE("rejects families that are not intersection-closed") {
    LatticePtr s3 = all_subgroups(builtin_group("sym:3"));
    // {(C2), (S3)} misses the trivial intersection of two distinct C2's
    CHECK_THROWS_AS(collection_from_predicate(s3, [&](int c) { return s3->class_order(c) != 1 && s3->class_order(c) != 3; }),
                    NotIntersectionClosed);
  }
}

TEST_CASE("collection closure") {
  SUBCASE("empty seed gives {(G)}") {
    LatticePtr lat = all_subgroups(builtin_group("sym:3"));
    Collection d = collection_closure(lat, {});
    CHECK(d.size() == 1);
    CHECK(d.class_ids()[0] == lat->full_class());
  }
  SUBCASE("closing the C2 class of sym:3 adds the trivial class") {
    LatticePtr lat = all_subgroups(builtin_group("sym:3"));
    int c2 = 1; // canonical order: 1, C2, C3, S3
    REQUIRE(lat->class_order(c2) == 2);
    Collection d = collection_closure(lat, {c2});
    CHECK(d.size() == 3);
  }
  SUBCASE("cyclic:6 with classes C2 and C3") {
    LatticePtr lat = all_subgroups(builtin_group("cyclic:6"));
    REQUIRE(lat->class_count() == 4);
    Collection d = collection_closure(lat, {1, 2});
    CHECK(d.size() == 4);
  }
}

TEST_CASE("sub_over and restrict_over") {
  LatticePtr a4 = all_subgroups(builtin_group("alt:4"));
  Subgroup v4 = commutator_subgroup(a4->parent());

  CHECK(sub_over(a4, trivial_subgroup(a4->parent())) == full_collection(a4));
  Collection over_v4 = sub_over(a4, v4);
  CHECK(over_v4.size() == 2);

  CHECK(restrict_over(full_collection(a4), trivial_subgroup(a4->parent())) == full_collection(a4));
  CHECK(restrict_over(full_collection(a4), v4) == over_v4);
  CHECK(restrict_over(normal_collection(a4), v4) == over_v4);

  LatticePtr c12 = all_subgroups(builtin_group("cyclic:12"));
  // unique subgroup of order 2
  int c2_id = -1;
  for (int i = 0; i < c12->subgroup_count(); ++i)
    if (c12->subgroup(i).order() == 2) c2_id = i;
  REQUIRE(c2_id >= 0);
  CHECK(sub_over(c12, c12->subgroup(c2_id)).size() == 4); // C2, C4, C6, C12

  GroupPtr s3 = builtin_group("sym:3");
  LatticePtr s3lat = all_subgroups(s3);
  int t = -1;
  for (int i = 0; i < s3lat->subgroup_count(); ++i)
    if (s3lat->subgroup(i).order() == 2) { t = i; break; }
  CHECK_THROWS_AS(sub_over(s3lat, s3lat->subgroup(t)), NotNormal);
}

TEST_CASE("image collections under surjections") {
  SUBCASE("identity surjection returns the same class sets") {
    LatticePtr lat = all_subgroups(builtin_group("sym:3"));
    std::vector<int> ids(lat->parent()->order());
    for (int i = 0; i < lat->parent()->order(); ++i) ids[i] = i;
    GroupHom id(lat->parent(), lat->parent(), ids);
    Collection d = full_collection(lat);
    Collection img = image_collection(id, d, lat);
    CHECK(img == d);
  }
  SUBCASE("A4 -> A4/V4 maps sub(A4) to the full collection of C3") {
    GroupPtr a4 = builtin_group("alt:4");
    LatticePtr lat = all_subgroups(a4);
    auto [q, pi] = quotient_group(a4, commutator_subgroup(a4));
    LatticePtr qlat = all_subgroups(q);
    Collection img = image_collection(pi, full_collection(lat), qlat);
    CHECK(img.size() == 2);
    CHECK(img == full_collection(qlat));
  }
  SUBCASE("C6 -> C6/C3 maps sub(C6) to sub(C2)") {
    GroupPtr c6 = builtin_group("cyclic:6");
    LatticePtr lat = all_subgroups(c6);
    int c3_id = -1;
    for (int i = 0; i < lat->subgroup_count(); ++i)
      if (lat->subgroup(i).order() == 3) c3_id = i;
    auto [q, pi] = quotient_group(c6, lat->subgroup(c3_id));
    LatticePtr qlat = all_subgroups(q);
    CHECK(q->order() == 2);
    Collection img = image_collection(pi, full_collection(lat), qlat);
    CHECK(img == full_collection(qlat));
  }
}

TEST_CASE("parabolic collections of I2(m)") {
  CHECK(parabolic_collection(all_subgroups(builtin_group("dihedral:3"))).size() == 3);
  CHECK(parabolic_collection(all_subgroups(builtin_group("dihedral:5"))).size() == 3);
  CHECK(parabolic_collection(all_subgroups(builtin_group("dihedral:7"))).size() == 3);
  CHECK(parabolic_collection(all_subgroups(builtin_group("dihedral:2"))).size() == 4);
  CHECK(parabolic_collection(all_subgroups(builtin_group("dihedral:4"))).size() == 4);
  CHECK(parabolic_collection(all_subgroups(builtin_group("dihedral:6"))).size() == 4);
  CHECK_THROWS_AS(parabolic_collection(all_subgroups(builtin_group("sym:3"))), NotDihedral);
}

TEST_CASE("basic collections") {
  GroupPtr a4 = builtin_group("alt:4");
  LatticePtr lat = all_subgroups(a4);

  SUBCASE("{1,G} is basic for every corpus group") {
    for (const char *spec : {"cyclic:6", "sym:4", "quaternion:8", "alt:4"}) {
      LatticePtr l = all_subgroups(builtin_group(spec));
      CHECK(standard_basic(l, BasicKind::TrivialAndFull).size() == 2);
    }
  }
  SUBCASE("all normal subgroups form a basic collection") {
    BasicCollection s = standard_basic(lat, BasicKind::AllNormal);
    CHECK(s.size() == 3); // 1, V4, A4
    CHECK(is_basic_collection(lat, s.member_ids()));
  }
  SUBCASE("a non-normal member is rejected") {
    int c2_id = -1;
    for (int i = 0; i < lat->subgroup_count(); ++i)
      if (lat->subgroup(i).order() == 2) { c2_id = i; break; }
    REQUIRE(c2_id >= 0);
    CHECK_THROWS_AS(standard_basic(lat, BasicKind::WithNormal, c2_id), NotNormalMember);
  }
}

TEST_CASE("bs families") {
  GroupPtr a4 = builtin_group("alt:4");
  LatticePtr lat = all_subgroups(a4);
  Collection suball = full_collection(lat);
  int v4_id = lat->find_subgroup(commutator_subgroup(a4));
  REQUIRE(v4_id >= 0);
  BasicCollection s = standard_basic(lat, BasicKind::WithNormal, v4_id);

  SUBCASE("bs(D,G) is {(G)}") {
    Collection top = bs_family(suball, s, lat->full_subgroup_id());
    CHECK(top.size() == 1);
    CHECK(top.class_ids()[0] == lat->full_class());
    CHECK(top.is_collection());
  }
  SUBCASE("bs(sub(A4), <1>) consists of the classes 1, C2, C3") {
    Collection part = bs_family(suball, s, 0);
    REQUIRE(part.size() == 3);
    CHECK(lat->class_order(part.class_ids()[0]) == 1);
    CHECK(lat->class_order(part.class_ids()[1]) == 2);
    CHECK(lat->class_order(part.class_ids()[2]) == 3);
    CHECK_FALSE(part.is_collection());
  }
  SUBCASE("bs(parabolic, <1>) of a dihedral group") {
    LatticePtr d5 = all_subgroups(builtin_group("dihedral:5"));
    Collection para = parabolic_collection(d5);
    BasicCollection triv = standard_basic(d5, BasicKind::TrivialAndFull);
    Collection part = bs_family(para, triv, 0);
    REQUIRE(part.size() == 2);
    CHECK(d5->class_order(part.class_ids()[0]) == 1);
    CHECK(d5->class_order(part.class_ids()[1]) == 2);
  }
}

TEST_CASE("s_upper_d filters by nonempty bs") {
  SUBCASE("G always qualifies") {
    LatticePtr lat = all_subgroups(builtin_group("sym:3"));
    Collection d = collection_closure(lat, {});
    BasicCollection s = standard_basic(lat, BasicKind::TrivialAndFull);
    auto sd = s_upper_d(d, s);
    REQUIRE(sd.size() == 1);
    CHECK(sd[0] == lat->full_subgroup_id());
  }
  SUBCASE("A4 with S = {1, V4, A4} keeps all three") {
    LatticePtr lat = all_subgroups(builtin_group("alt:4"));
    int v4_id = lat->find_subgroup(commutator_subgroup(lat->parent()));
    BasicCollection s = standard_basic(lat, BasicKind::WithNormal, v4_id);
    CHECK(s_upper_d(full_collection(lat), s).size() == 3);
  }
  SUBCASE("C6: a chain member of S excluded by the letter of the definition") {
    // D = closure of {(C2)} = {(C2),(C6)} (the C2 of a cyclic group is
    // unique, so no intersection produces <1>), S = {1, C3, C6}.
    // bs(D,C3) is empty: the only member of D containing C3 is C6, and
    // C3 < C6 <= C6 with C6 in S blocks it.
    LatticePtr lat = all_subgroups(builtin_group("cyclic:6"));
    int c2_class = -1, c3_id = -1;
    for (int c = 0; c < lat->class_count(); ++c)
      if (lat->class_order(c) == 2) c2_class = c;
    for (int i = 0; i < lat->subgroup_count(); ++i)
      if (lat->subgroup(i).order() == 3) c3_id = i;
    REQUIRE(c2_class >= 0);
    REQUIRE(c3_id >= 0);
    Collection d = collection_closure(lat, {c2_class});
    REQUIRE(d.size() == 2);
    BasicCollection s = standard_basic(lat, BasicKind::WithNormal, c3_id);
    CHECK(bs_family(d, s, c3_id).size() == 0);
    auto sd = s_upper_d(d, s);
    REQUIRE(sd.size() == 2); // <1> and C6 remain
    CHECK(sd[0] == 0);
    CHECK(sd[1] == lat->full_subgroup_id());
  }
}

TEST_CASE("partition property of bs families") {
  for (const char *spec : {"sym:3", "alt:4", "dihedral:4", "cyclic:12", "quaternion:8"}) {
    CAPTURE(spec);
    LatticePtr lat = all_subgroups(builtin_group(spec));
    for (auto &[dname, d] : std::vector<std::pair<std::string, Collection>>{
             {"all", full_collection(lat)}, {"normal", normal_collection(lat)}}) {
      BasicCollection s = standard_basic(lat, BasicKind::AllNormal);
      std::vector<int> covered;
      for (int id : s_upper_d(d, s)) {
        Collection part = bs_family(d, s, id);
        for (int c : part.class_ids()) covered.push_back(c);
      }
      std::sort(covered.begin(), covered.end());
      bool disjoint = std::adjacent_find(covered.begin(), covered.end()) == covered.end();
      CHECK(disjoint);
      CHECK(covered == d.class_ids());
    }
  }
}

TEST_CASE("every constructed collection is intersection-closed") {
  // cross-check the eager validation with a direct pairwise scan
  for (const char *spec : {"sym:4", "dihedral:6"}) {
    CAPTURE(spec);
    LatticePtr lat = all_subgroups(builtin_group(spec));
    Collection d = normal_collection(lat);
    for (int c1 : d.class_ids())
      for (int id1 : lat->class_members(c1))
        for (int c2 : d.class_ids())
          for (int id2 : lat->class_members(c2)) {
            Subgroup meet = intersect(lat->subgroup(id1), lat->subgroup(id2));
            CHECK(d.contains_class(lat->class_of_mask(meet.mask())));
          }
  }
}

TEST_CASE("collection spec strings") {
  LatticePtr lat = all_subgroups(builtin_group("dihedral:4"));
  CHECK(collection_from_spec(lat, "all") == full_collection(lat));
  CHECK(collection_from_spec(lat, "normal") == normal_collection(lat));
  CHECK(collection_from_spec(lat, "parabolic") == parabolic_collection(lat));
  Collection d = collection_from_spec(lat, "closure:[1]");
  CHECK(d.contains_class(1));
  CHECK(d.is_collection());
  // restrict(all, center) on D8
  GroupPtr d8 = lat->parent();
  int center_id = lat->find_subgroup(centralizer_of_group(d8));
  REQUIRE(center_id >= 0);
  Collection r = collection_from_spec(lat, "restrict(all," + std::to_string(center_id) + ")");
  CHECK(r == sub_over(lat, lat->subgroup(center_id)));
  CHECK_THROWS_AS(collection_from_spec(lat, "bogus"), SpecParseError);
  CHECK_THROWS_AS(basic_from_spec(lat, "bogus"), SpecParseError);
}
