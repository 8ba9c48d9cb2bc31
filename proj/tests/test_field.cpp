// Copyright 2026 The ah Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ah/error.hpp"
#include "ah/field.hpp"
#include "oracles.hpp"

using namespace ah;
using oracle::GF;
using oracle::QQ;

static Scalar q(long n, long d) { return Scalar(QQ(), mpq_class(n, d)); }

TEST_CASE("rational arithmetic") {
    CHECK(q(1, 2) + q(1, 3) == q(5, 6));
    CHECK((q(1, 2) - q(1, 2)).is_zero());
    CHECK(q(2, 3).inverse() == q(3, 2));
    CHECK(q(-4, 6).to_string() == "-2/3");
    CHECK(q(5, 1).to_string() == "5");
    CHECK_THROWS_AS(Scalar::zero(QQ()).inverse(), Error);
}

TEST_CASE("prime field arithmetic") {
    auto f5 = GF(5);
    CHECK(Scalar(f5, 3L) * Scalar(f5, 4L) == Scalar(f5, 2L));
    CHECK(Scalar(GF(7), 3L) / Scalar(GF(7), 5L) == Scalar(GF(7), 2L));
    CHECK(Scalar(f5, -1L) == Scalar(f5, 4L));
    CHECK(Scalar(f5, 2L).pow(-1) == Scalar(f5, 3L));
}

TEST_CASE("inverse agrees with a brute-force table") {
    for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
        for (const Scalar& a : enumerate_units(GF(p))) {
            auto b = oracle::brute_inverse(a);
            REQUIRE(b);
            CHECK(a.inverse() == *b);
        }
    }
}

TEST_CASE("integer embedding") {
    CHECK(int_embed(5, QQ()) == q(5, 1));
    CHECK(int_embed(5, GF(5)).is_zero());
    CHECK(int_embed(10, GF(3)).is_one());
    CHECK(int_embed(-1, GF(3)) == Scalar(GF(3), 2L));
}

TEST_CASE("enumeration") {
    CHECK(enumerate(GF(3)).size() == 3);
    CHECK(enumerate(GF(2)).size() == 2);
    CHECK(enumerate_units(GF(7)).size() == 6);
    try {
        enumerate(QQ());
        FAIL("expected InfiniteField");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InfiniteField);
    }
}

TEST_CASE("multiplicative order and primitive roots") {
    CHECK(q(-1, 1).multiplicative_order() == 2);
    CHECK(q(1, 1).multiplicative_order() == 1);
    CHECK(q(2, 1).multiplicative_order() == 0);
    for (std::uint64_t p : {2u, 3u, 5u, 7u, 31u}) {
        Scalar g = primitive_root(GF(p));
        CHECK(g.multiplicative_order() == p - 1);
        for (const Scalar& a : enumerate_units(GF(p))) {
            std::uint64_t n = 1;
            Scalar b = a;
            while (!b.is_one()) {
                b *= a;
                ++n;
            }
            CHECK(a.multiplicative_order() == n);
        }
    }
}

TEST_CASE("field construction rejects non-primes") {
    CHECK(is_prime(2));
    CHECK(is_prime(4294967291ULL));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    try {
        FieldSpec::prime_field(4);
        FAIL("expected InvalidPrime");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidPrime);
    }
}

TEST_CASE("mixing fields is an error") {
    try {
        (void)(Scalar(GF(3), 1L) + Scalar(GF(5), 1L));
        FAIL("expected FieldMismatch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::FieldMismatch);
    }
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(7);
    for (auto spec : {QQ(), GF(5), GF(2)}) {
        for (int t = 0; t < 200; ++t) {
            Scalar a = oracle::small_scalar(rng, spec, -20, 20);
            Scalar b = oracle::small_scalar(rng, spec, -20, 20);
            Scalar c = oracle::small_scalar(rng, spec, -20, 20);
            CHECK((a + b) * c == a * c + b * c);
            CHECK((a * b) * c == a * (b * c));
            if (!b.is_zero()) CHECK(a / b * b == a);
        }
    }
}
