#include <doctest.h>

#include <set>

#include "jnp/search.hpp"
#include "support.hpp"

using namespace jnp;
using namespace jnp::testing;

namespace {

struct LCoords {
    std::uint64_t l1, l2, l3, l4, l5, l6, l7, l8;
};

LCoords l_coords(const StructureTensor& t) {
    return {t.at(0, 0, 0).residue(), t.at(0, 0, 1).residue(), t.at(0, 1, 0).residue(),
            t.at(0, 1, 1).residue(), t.at(1, 0, 0).residue(), t.at(1, 0, 1).residue(),
            t.at(1, 1, 0).residue(), t.at(1, 1, 1).residue()};
}

} // namespace

TEST_CASE("one-dimensional scan matches the direct expansion") {
    Field f5 = Field::prime(5);
    Algebra base = Algebra::make(f5, 1);
    base.dot.at(0, 0, 0) = Scalar::one(f5);
    base.unit = unit_vec(f5, 1, 0);

    SearchResult res = enumerate_jnp(base);
    CHECK(res.candidates == 5);
    // direct expansion: for e o e = c e every law collapses to c = c
    CHECK(res.solutions.size() == 5);
    std::set<std::uint64_t> seen;
    for (const SearchSolution& s : res.solutions) seen.insert(s.circ.at(0, 0, 0).residue());
    CHECK(seen == std::set<std::uint64_t>{0, 1, 2, 3, 4});
}

TEST_CASE("solutions over the square-zero base have the forced shape") {
    for (std::uint32_t p : {3u, 5u}) {
        Field f = Field::prime(p);
        Algebra base = emit("2d-A1", f);
        SearchResult res = enumerate_jnp(base);
        CHECK(res.candidates == static_cast<std::uint64_t>(p) * p * p * p);
        // shape: l1 = l6, l3 = l5 = l7 = l8 = 0, with l1, l2, l4 free
        CHECK(res.solutions.size() == static_cast<std::size_t>(p) * p * p);
        std::set<std::vector<std::uint64_t>> found;
        for (const SearchSolution& s : res.solutions) {
            LCoords l = l_coords(s.circ);
            CHECK(l.l1 == l.l6);
            CHECK(l.l3 == 0);
            CHECK(l.l5 == 0);
            CHECK(l.l7 == 0);
            CHECK(l.l8 == 0);
            found.insert({l.l1, l.l2, l.l4});
        }
        // and conversely every shape point appears
        CHECK(found.size() == static_cast<std::size_t>(p) * p * p);
    }
}

TEST_CASE("solutions over the idempotent base have the forced shape") {
    Field f = Field::prime(3);
    Algebra base = emit("2d-A2", f);
    SearchResult res = enumerate_jnp(base);
    // shape: l1 + l2 = l4 = l6 = l8, l3 = l5 = l7 = 0, with l1, l2 free
    CHECK(res.solutions.size() == 9);
    std::set<std::vector<std::uint64_t>> found;
    for (const SearchSolution& s : res.solutions) {
        LCoords l = l_coords(s.circ);
        std::uint64_t sum = (l.l1 + l.l2) % 3;
        CHECK(sum == l.l4);
        CHECK(sum == l.l6);
        CHECK(sum == l.l8);
        CHECK(l.l3 == 0);
        CHECK(l.l5 == 0);
        CHECK(l.l7 == 0);
        found.insert({l.l1, l.l2});
    }
    CHECK(found.size() == 9);
}

TEST_CASE("every enumerated solution passes the filter law") {
    Field f = Field::prime(3);
    Algebra base = emit("2d-A1", f);
    for (SearchLaw law : {SearchLaw::Jnp, SearchLaw::Novikov, SearchLaw::Dnp}) {
        SearchResult res = enumerate_jnp(base, law);
        for (const SearchSolution& s : res.solutions) {
            Algebra alg = base;
            alg.circ = s.circ;
            switch (law) {
                case SearchLaw::Jnp: CHECK(check_jnp(alg).pass); break;
                case SearchLaw::Novikov: CHECK(check_novikov(alg).pass); break;
                case SearchLaw::Dnp: CHECK(check_dnp(alg).pass); break;
            }
        }
    }
    // within the differential shape, unital differential products are a
    // subset of the compatible ones
    std::size_t dnp = enumerate_jnp(base, SearchLaw::Dnp).solutions.size();
    std::size_t jnp = enumerate_jnp(base, SearchLaw::Jnp).solutions.size();
    CHECK(dnp <= jnp);
}

TEST_CASE("buckets partition the solutions with lex-least representatives") {
    Field f = Field::prime(3);
    SearchResult res = enumerate_jnp(emit("2d-A1", f));
    std::size_t members = 0;
    for (const SearchBucket& b : res.buckets) {
        members += b.members.size();
        for (std::size_t m : b.members)
            CHECK(res.solutions[m].profile == b.profile);
    }
    CHECK(members == res.solutions.size());
    CHECK(res.buckets.size() > 1);
}

TEST_CASE("scan order is deterministic") {
    Field f = Field::prime(3);
    SearchResult a = enumerate_jnp(emit("2d-A1", f));
    SearchResult b = enumerate_jnp(emit("2d-A1", f));
    REQUIRE(a.solutions.size() == b.solutions.size());
    for (std::size_t i = 0; i < a.solutions.size(); ++i)
        CHECK(a.solutions[i].circ == b.solutions[i].circ);
}

TEST_CASE("the operator scan misses nothing") {
    CHECK(cross_check_reduction(emit("2d-A1", Field::prime(2))));
    CHECK(cross_check_reduction(emit("2d-A2", Field::prime(3))));
    Field f5 = Field::prime(5);
    Algebra one = Algebra::make(f5, 1);
    one.dot.at(0, 0, 0) = Scalar::one(f5);
    one.unit = unit_vec(f5, 1, 0);
    CHECK(cross_check_reduction(one));
}

TEST_CASE("guards") {
    CHECK_THROWS_AS(enumerate_jnp(emit("2d-A1", Field::rational())), ConstraintViolation);
    CHECK_THROWS_AS(enumerate_jnp(emit("2d-A1", Field::prime(5)), SearchLaw::Jnp, 100),
                    BudgetExceeded);
    CHECK_THROWS_AS(cross_check_reduction(emit("2d-A1", Field::prime(3)), 1000),
                    BudgetExceeded);
}
