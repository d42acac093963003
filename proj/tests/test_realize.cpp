/*
   Copyright 2026 The weilfq Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include "weil/arith.hpp"
#include "weil/realize.hpp"
#include "weil/witness.hpp"

using namespace weil;

TEST(Witness, RoundTrip) {
    const WitnessRecord w = make_witness(IntPoly{Int(2), Int(2), Int(1)}, Int(2), "enumerate");
    EXPECT_EQ(w.order, 5);
    EXPECT_EQ(w.n, 1);
    const std::string text = to_json(w);
    EXPECT_NE(text.find("\"order\": \"5\""), std::string::npos);
    const WitnessRecord back = witness_from_json(text);
    EXPECT_EQ(back.f, w.f);
    EXPECT_EQ(back.order, w.order);
    EXPECT_EQ(back.hondaTate, w.hondaTate);
    EXPECT_EQ(back.method, "enumerate");
    EXPECT_FALSE(back.congruenceModulus.has_value());
    EXPECT_EQ(to_json(back), text);
    EXPECT_TRUE(recertify(back).flagsReproduced);
}

TEST(Witness, OrdersBeyond64Bits) {
    // x^54 - x^27 + 3^27 at q = 3: f(1) = 3^27, and 3^54 coefficient-free encoding
    const Int q(3), m = pow_int(q, 27);
    std::vector<Int> c(55, Int(0));
    c[0] = m;
    c[27] = -1;
    c[54] = 1;
    WitnessRecord w = make_witness(IntPoly(c), q, "exp");
    w.congruenceModulus = Int(4526522);
    const WitnessRecord back = witness_from_json(to_json(w, -1));
    EXPECT_EQ(back.order, m);
    EXPECT_EQ(back.congruenceModulus, Int(4526522));
    EXPECT_TRUE(recertify(back).flagsReproduced);
    EXPECT_EQ(back.hondaTate, HondaTate::VerifiedOrdinary);
}

TEST(Witness, TamperingAndMalformed) {
    WitnessRecord w = make_witness(IntPoly{Int(2), Int(2), Int(1)}, Int(2), "enumerate");
    w.order = 6;
    EXPECT_EQ(recertify(witness_from_json(to_json(w))).mismatch, "order");
    w = make_witness(IntPoly{Int(2), Int(2), Int(1)}, Int(2), "enumerate");
    w.ordinary = true;
    EXPECT_EQ(recertify(w).mismatch, "ordinary");
    EXPECT_THROW(witness_from_json("{}"), std::invalid_argument);
    EXPECT_THROW(witness_from_json("not json"), std::invalid_argument);
    std::string text = to_json(make_witness(IntPoly{Int(2), Int(2), Int(1)}, Int(2), "enumerate"), -1);
    const std::string good = text;
    text.replace(text.find("\"q\":\"2\""), 7, "\"q\":2");
    EXPECT_THROW(witness_from_json(text), std::invalid_argument);
    text = good;
    text.replace(text.find("weilfq.witness.v1"), 17, "weilfq.witness.v0");
    EXPECT_THROW(witness_from_json(text), std::invalid_argument);
}

TEST(Realize, SmallByEnumeration) {
    const RealizeOutcome r = realize(Int(2), Int(5));
    ASSERT_EQ(r.status, RealizeStatus::Found);
    EXPECT_EQ(r.witness->method, "enumerate");
    EXPECT_EQ(r.witness->f, (IntPoly{Int(2), Int(2), Int(1)}));
    RealizeOptions ord;
    ord.ordinary = true;
    const RealizeOutcome o = realize(Int(2), Int(5), ord);
    ASSERT_EQ(o.status, RealizeStatus::Found);
    EXPECT_TRUE(o.witness->ordinary);
    EXPECT_EQ(o.witness->order, 5);
}

TEST(Realize, NonExistenceNeedsCompleteness) {
    for (long m : {2, 14, 17}) {
        const RealizeOutcome r = realize(Int(7), Int(m));
        EXPECT_EQ(r.status, RealizeStatus::NonExistent) << m;
        EXPECT_FALSE(r.completeness.empty());
    }
    // q = 4: (sqrt q - 1)^{2n} = 1 never exceeds m, so absence is never a non-existence claim
    RealizeOptions ord;
    ord.ordinary = true;
    ord.method = "enumerate";
    const RealizeOutcome r = realize(Int(4), Int(3), ord);
    EXPECT_EQ(r.status, RealizeStatus::NotFound);
    EXPECT_TRUE(r.completeness.empty());
}

TEST(Realize, ConstructionMethods) {
    const RealizeOutcome e = realize(Int(3), pow_int(Int(3), 27));
    ASSERT_EQ(e.status, RealizeStatus::Found);
    EXPECT_EQ(e.witness->method, "exp");
    EXPECT_EQ(e.witness->hondaTate, HondaTate::VerifiedOrdinary);
    // x^{2n} - x^n + q^n
    std::vector<Int> c(55, Int(0));
    c[0] = pow_int(Int(3), 27);
    c[27] = -1;
    c[54] = 1;
    EXPECT_EQ(e.witness->f, IntPoly(c));

    RealizeOptions lq;
    lq.method = "largeq";
    const Int q(1009);
    const RealizeOutcome l = realize(q, q * q * q, lq);
    ASSERT_EQ(l.status, RealizeStatus::Found);
    EXPECT_EQ(l.witness->order, q * q * q);

    RealizeOptions iv;
    iv.method = "interval";
    const RealizeOutcome i = realize(Int(2), Int(1100), iv);
    ASSERT_EQ(i.status, RealizeStatus::Found);
    EXPECT_EQ(i.witness->method, "interval");
    EXPECT_EQ(i.witness->order, 1100);
    EXPECT_TRUE(i.witness->ordinary);

    RealizeOptions bad;
    bad.method = "guess";
    EXPECT_THROW(realize(Int(2), Int(5), bad), std::invalid_argument);
    EXPECT_THROW(realize(Int(6), Int(5)), std::invalid_argument);
    EXPECT_THROW(realize(Int(2), Int(0)), std::invalid_argument);
}
