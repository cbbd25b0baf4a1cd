#include <doctest.h>

#include "oracles.hpp"
#include "pbr/builtin.hpp"
#include "pbr/errors.hpp"
#include "pbr/morphisms.hpp"
#include "pbr/verify.hpp"

using namespace pbr;

namespace {

int normal_subgroup_of_order(const LatticePtr &lat, int order) {
  for (int i = 0; i < lat->subgroup_count(); ++i)
    if (lat->subgroup_is_normal(i) && lat->subgroup(i).order() == order) return i;
  throw std::logic_error("no normal subgroup of that order");
}

} // namespace

TEST_CASE("quotient isomorphism") {
  SUBCASE("N = 1 gives the identity correspondence") {
    LatticePtr lat = all_subgroups(builtin_group("sym:3"));
    RingIso iso = quotient_iso(lat, trivial_subgroup(lat->parent()));
    CHECK(iso.verified);
    CHECK(iso.source.size() == lat->class_count());
  }
  SUBCASE("(A4, V4): two classes, with mark matrices [[3,1],[0,1]]") {
    LatticePtr lat = all_subgroups(builtin_group("alt:4"));
    Subgroup v4 = commutator_subgroup(lat->parent());
    RingIso iso = quotient_iso(lat, v4);
    CHECK(iso.verified);
    REQUIRE(iso.source.size() == 2);
    MarkMatrix m = table_of_marks(iso.source);
    CHECK(m.entries[0][0] == 3);
    CHECK(m.entries[0][1] == 1);
    CHECK(m.entries[1][0] == 0);
    CHECK(m.entries[1][1] == 1);
  }
  SUBCASE("(D8, center)") {
    LatticePtr lat = all_subgroups(builtin_group("dihedral:4"));
    Subgroup center = centralizer_of_group(lat->parent());
    REQUIRE(center.order() == 2);
    RingIso iso = quotient_iso(lat, center);
    CHECK(iso.verified);
    CHECK(iso.source.size() == all_subgroups(quotient_group(lat->parent(), center).first)->class_count());
  }
  SUBCASE("(S4, V4) and the remaining corpus pairs") {
    LatticePtr s4 = all_subgroups(builtin_group("sym:4"));
    CHECK(quotient_iso(s4, s4->subgroup(normal_subgroup_of_order(s4, 4))).verified);
    LatticePtr c12 = all_subgroups(builtin_group("cyclic:12"));
    CHECK(quotient_iso(c12, c12->subgroup(normal_subgroup_of_order(c12, 2))).verified);
    LatticePtr c6 = all_subgroups(builtin_group("cyclic:6"));
    CHECK(quotient_iso(c6, c6->subgroup(normal_subgroup_of_order(c6, 3))).verified);
  }
}

TEST_CASE("surjection isomorphism") {
  SUBCASE("the identity map") {
    LatticePtr lat = all_subgroups(builtin_group("dihedral:4"));
    std::vector<int> ids(lat->parent()->order());
    for (size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
    GroupHom f(lat->parent(), lat->parent(), ids);
    RingIso iso = surjection_iso(f, full_collection(lat));
    CHECK(iso.verified);
    CHECK(iso.source.size() == lat->class_count());
  }
  SUBCASE("A4 -> A4/V4 with D = sub(A4) lands on B(C3)") {
    GroupPtr a4 = builtin_group("alt:4");
    LatticePtr lat = all_subgroups(a4);
    auto [q, pi] = quotient_group(a4, commutator_subgroup(a4));
    RingIso iso = surjection_iso(pi, full_collection(lat));
    CHECK(iso.verified);
    CHECK(iso.source.size() == 2);
    CHECK(iso.target.lattice()->parent()->order() == 3);
  }
  SUBCASE("C12 -> C12/C2 with D = sub(C12): four divisor classes map across") {
    GroupPtr c12 = builtin_group("cyclic:12");
    LatticePtr lat = all_subgroups(c12);
    auto [q, pi] = quotient_group(c12, lat->subgroup(normal_subgroup_of_order(lat, 2)));
    CHECK(q->order() == 6);
    RingIso iso = surjection_iso(pi, full_collection(lat));
    CHECK(iso.verified);
    REQUIRE(iso.source.size() == 4); // C2, C4, C6, C12
    std::vector<int> source_orders, target_orders;
    for (int i = 0; i < 4; ++i) {
      source_orders.push_back(iso.source.lattice()->class_order(iso.source.class_ids()[i]));
      target_orders.push_back(
          iso.target.lattice()->class_order(iso.target.class_ids()[iso.class_map[i]]));
    }
    CHECK(source_orders == std::vector<int>{2, 4, 6, 12});
    CHECK(target_orders == std::vector<int>{1, 2, 3, 6});
  }
}

TEST_CASE("unit-count factorization through a surjection") {
  SUBCASE("identity: degenerate kernel") {
    LatticePtr lat = all_subgroups(builtin_group("sym:3"));
    std::vector<int> ids(lat->parent()->order());
    for (size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
    GroupHom f(lat->parent(), lat->parent(), ids);
    CheckReport r = matsuda_44_check(f, full_collection(lat));
    CHECK(r.passed());
  }
  SUBCASE("S3 -> S3/C3 and C6 -> C6/C3") {
    for (const char *spec : {"sym:3", "cyclic:6"}) {
      CAPTURE(spec);
      GroupPtr g = builtin_group(spec);
      LatticePtr lat = all_subgroups(g);
      auto [q, pi] = quotient_group(g, lat->subgroup(normal_subgroup_of_order(lat, 3)));
      CheckReport r = matsuda_44_check(pi, full_collection(lat));
      CHECK(r.passed());
    }
  }
  SUBCASE("the whole corpus against every proper normal quotient") {
    for (const char *spec : {"alt:4", "dihedral:4", "quaternion:8", "cyclic:12", "sym:4"}) {
      CAPTURE(spec);
      GroupPtr g = builtin_group(spec);
      LatticePtr lat = all_subgroups(g);
      for (int i = 0; i < lat->subgroup_count(); ++i) {
        if (!lat->subgroup_is_normal(i)) continue;
        auto [q, pi] = quotient_group(g, lat->subgroup(i));
        CheckReport r = matsuda_44_check(pi, full_collection(lat));
        CHECK(r.passed());
      }
    }
  }
}

TEST_CASE("Frobenius-Wielandt homomorphism") {
  SUBCASE("cyclic source: alpha is the divisor-order correspondence") {
    LatticePtr lat = all_subgroups(builtin_group("cyclic:12"));
    FWMap map = fw_alpha(lat);
    REQUIRE(map.source.size() == map.target.size());
    for (int j = 0; j < map.source.size(); ++j)
      for (int i = 0; i < map.target.size(); ++i)
        CHECK(map.matrix[i][j] == (i == j ? 1 : 0));
  }
  SUBCASE("S3: alpha(1 - [C6/C3]) = 1 - [S3/C3]") {
    LatticePtr lat = all_subgroups(builtin_group("sym:3"));
    FWMap map = fw_alpha(lat);
    // source classes of C6 are 1, C2, C3, C6; pick x = 1 - [C6/C3]
    REQUIRE(map.source.size() == 4);
    BurnsideElement x = sub(one_element(map.source), basis_element(map.source, 2));
    CHECK(map.source.lattice()->class_order(map.source.class_ids()[2]) == 3);
    BurnsideElement image = fw_apply(map, x);
    CHECK(image.coeffs == std::vector<Int>{0, 0, -1, 1});
  }
  SUBCASE("A4: alpha(1 - [C12/C6]) from the worked counterexample") {
    LatticePtr lat = all_subgroups(builtin_group("alt:4"));
    FWMap map = fw_alpha(lat);
    REQUIRE(map.source.size() == 6); // divisors of 12
    int c6_pos = -1;
    for (int j = 0; j < map.source.size(); ++j)
      if (map.source.lattice()->class_order(map.source.class_ids()[j]) == 6) c6_pos = j;
    REQUIRE(c6_pos >= 0);
    BurnsideElement x = sub(one_element(map.source), basis_element(map.source, c6_pos));
    BurnsideElement image = fw_apply(map, x);
    CHECK(image.coeffs == std::vector<Int>{1, -1, -2, 0, 1});
    CHECK(ghost(image) == std::vector<Int>{-1, -1, -1, 1, 1});
  }
  SUBCASE("alpha is unital, additive and multiplicative on basis pairs") {
    for (const char *spec : {"sym:3", "alt:4", "dihedral:4", "cyclic:12"}) {
      CAPTURE(spec);
      LatticePtr lat = all_subgroups(builtin_group(spec));
      FWMap map = fw_alpha(lat);
      CHECK(fw_apply(map, one_element(map.source)) == one_element(map.target));
      for (int i = 0; i < map.source.size(); ++i)
        for (int j = 0; j < map.source.size(); ++j) {
          BurnsideElement bi = basis_element(map.source, i), bj = basis_element(map.source, j);
          CHECK(fw_apply(map, multiply_cosets(bi, bj)) ==
                multiply_cosets(fw_apply(map, bi), fw_apply(map, bj)));
          CHECK(fw_apply(map, add(bi, bj)) == add(fw_apply(map, bi), fw_apply(map, bj)));
        }
    }
  }
}

TEST_CASE("seminilpotency") {
  SUBCASE("vacuous when p^a does not divide |G|") {
    LatticePtr lat = all_subgroups(builtin_group("cyclic:3"));
    CHECK(is_seminilpotent(lat, 2, 1).value);
    CHECK(is_seminilpotent(lat, 5, 2).value);
  }
  SUBCASE("S3 is 2-seminilpotent") {
    LatticePtr lat = all_subgroups(builtin_group("sym:3"));
    SeminilResult r = is_seminilpotent(lat, 2, 1);
    CHECK(r.value);
    CHECK(r.certificate.empty());
  }
  SUBCASE("A4 is not 2-seminilpotent; the trivial subgroup witnesses it") {
    LatticePtr lat = all_subgroups(builtin_group("alt:4"));
    SeminilResult r = is_seminilpotent(lat, 2, 1);
    CHECK_FALSE(r.value);
    REQUIRE_FALSE(r.certificate.empty());
    CHECK(r.certificate[0].subgroup_id == 0);
    CHECK(r.certificate[0].count == 0);
  }
  SUBCASE("the order-42 group is 2-seminilpotent but not nilpotent") {
    LatticePtr lat = corpus_lattice(order42_spec());
    CHECK(lat->parent()->order() == 42);
    CHECK(is_seminilpotent(lat, 2, 1).value);
    CHECK_FALSE(is_nilpotent(lat->parent()));
  }
  SUBCASE("parameter validation") {
    LatticePtr lat = all_subgroups(builtin_group("cyclic:4"));
    CHECK_THROWS_AS(is_seminilpotent(lat, 4, 1), Error);
    CHECK_THROWS_AS(is_seminilpotent(lat, 2, 0), Error);
  }
}

TEST_CASE("normal interior") {
  GroupPtr s3 = builtin_group("sym:3");
  LatticePtr s3lat = all_subgroups(s3);
  GroupPtr a4 = builtin_group("alt:4");
  LatticePtr a4lat = all_subgroups(a4);

  SUBCASE("normal subgroups are their own interior") {
    for (int i = 0; i < a4lat->subgroup_count(); ++i)
      if (a4lat->subgroup_is_normal(i))
        CHECK(normal_interior(a4lat, a4lat->subgroup(i)) == a4lat->subgroup(i));
  }
  SUBCASE("a transposition subgroup of S3 has interior S3") {
    for (int i = 0; i < s3lat->subgroup_count(); ++i)
      if (s3lat->subgroup(i).order() == 2)
        CHECK(normal_interior(s3lat, s3lat->subgroup(i)).order() == 6);
  }
  SUBCASE("an order-2 subgroup of A4 has interior V4") {
    for (int i = 0; i < a4lat->subgroup_count(); ++i)
      if (a4lat->subgroup(i).order() == 2)
        CHECK(normal_interior(a4lat, a4lat->subgroup(i)).order() == 4);
  }
  SUBCASE("equals the normal closure oracle everywhere") {
    for (const char *spec : {"sym:3", "sym:4", "alt:4", "dihedral:6", "quaternion:8"}) {
      CAPTURE(spec);
      LatticePtr lat = all_subgroups(builtin_group(spec));
      for (int i = 0; i < lat->subgroup_count(); ++i)
        CHECK(normal_interior(lat, lat->subgroup(i)).mask() ==
              pbr::testing::oracle_normal_closure(lat->parent(), lat->subgroup(i)));
    }
  }
}

TEST_CASE("interior count check") {
  for (const char *spec : {"cyclic:12", "sym:3", "alt:4", "sym:4", "dihedral:4"}) {
    CAPTURE(spec);
    LatticePtr lat = all_subgroups(builtin_group(spec));
    for (int p : {2, 3})
      for (int a : {1, 2}) {
        CAPTURE(p);
        CAPTURE(a);
        CHECK(interior_count_check(lat, p, a).passed());
      }
  }
}

TEST_CASE("Frobenius-Wielandt unit image") {
  SUBCASE("even cyclic groups: the image has order 4") {
    for (int n : {2, 6, 12, 24}) {
      CAPTURE(n);
      LatticePtr lat = all_subgroups(builtin_group("cyclic:" + std::to_string(n)));
      CheckReport r = imgfw_check(lat);
      CHECK(r.passed());
    }
  }
  SUBCASE("S3 passes") {
    CHECK(imgfw_check(all_subgroups(builtin_group("sym:3"))).passed());
  }
  SUBCASE("the order-42 group passes") {
    CHECK(imgfw_check(corpus_lattice(order42_spec())).passed());
  }
  SUBCASE("odd order and non-2-seminilpotent groups are not applicable") {
    CHECK(imgfw_check(all_subgroups(builtin_group("cyclic:15"))).status ==
          CheckStatus::not_applicable);
    CHECK(imgfw_check(all_subgroups(builtin_group("alt:4"))).status ==
          CheckStatus::not_applicable);
  }
}

TEST_CASE("containment of the unit image in the normal span") {
  SUBCASE("abelian groups are always contained") {
    for (const char *spec : {"cyclic:8", "cyclic:12", "cyclic:15", "prod(cyclic:2,cyclic:2)"}) {
      CAPTURE(spec);
      CheckReport r = imgfw_counterexample_check(all_subgroups(builtin_group(spec)));
      CHECK(r.passed());
    }
  }
  SUBCASE("S3 is contained") {
    CHECK(imgfw_counterexample_check(all_subgroups(builtin_group("sym:3"))).passed());
  }
  SUBCASE("A4 is NOT contained, witnessed by the (1,-1,-2,0,1) unit") {
    CheckReport r = imgfw_counterexample_check(all_subgroups(builtin_group("alt:4")));
    CHECK_FALSE(r.passed());
    bool found = false;
    for (auto &[k, v] : r.values)
      if (k == "witness_coeffs") {
        found = true;
        CHECK(v == "1,-1,-2,0,1");
      }
    CHECK(found);
  }
}

TEST_CASE("odd-order unit group checks") {
  for (const char *spec : {"cyclic:15", "cyclic:21", "cyclic:27",
                           "perm:\"(1 2 3 4 5 6 7),(2 3 5)(4 7 6)\""}) {
    CAPTURE(spec);
    CheckReport r = oddeq_corpus_check(all_subgroups(builtin_group(spec)));
    CHECK(r.passed());
  }
  CHECK(oddeq_corpus_check(all_subgroups(builtin_group("cyclic:4"))).status ==
        CheckStatus::not_applicable);
}
