#include "test_support.hpp"

#include <padicqf/riesz.hpp>
#include <padicqf/serialize.hpp>

#include <gtest/gtest.h>

using namespace padicqf;

TEST(Serialize, ScalarRoundTrip) {
    std::mt19937_64 rng(61);
    for (unsigned long p : {3ul, 5ul, 7ul}) {
        for (int level : {0, 1, 2}) {
            for (int it = 0; it < 10; ++it) {
                ExtScalar x = testkit::random_ext(rng, p, level);
                EXPECT_EQ(ext_from_json(json::parse(ext_json(x).dump()), p), x);
            }
        }
        EXPECT_EQ(ext_json(ExtScalar(p, make_rational(-3, 4))), "-3/4");
        ExtScalar r = ExtScalar::sqrt_p(p), s = ExtScalar::sigma(p);
        EXPECT_EQ(ext_from_json(json::parse(R"({"level":0,"r":[[0,"2"]]})"), p), r * ExtScalar(p, 2));
        EXPECT_EQ(ext_from_json(json::parse(R"({"level":0,"sr":[[0,"1"]],"1":[[0,"1"]]})"), p), s * r + ExtScalar(p, 1));
        EXPECT_EQ(ext_from_json(ext_json(s * r), p), s * r);
    }
}

TEST(Serialize, TestFunctionAndZetaRoundTrip) {
    std::mt19937_64 rng(62);
    for (unsigned long p : {3ul, 5ul}) {
        for (std::size_t n : {2ul, 4ul}) {
            for (int level : {0, 1}) {
                auto phi = testkit::random_test_function(rng, p, n, -1, n == 2 ? 1 : 0, 4, level);
                EXPECT_EQ(test_function_from_json(json::parse(test_function_json(phi).dump())), phi);
            }
        }
        auto K = RieszKernel::quaternary(p);
        RationalFunctionT z = K.engine().zeta(testkit::random_test_function(rng, p, 4, -1, 0, 3));
        EXPECT_EQ(ratfun_from_json(json::parse(ratfun_json(z).dump()), p), z);
    }
}

TEST(Serialize, RejectsMalformedInput) {
    EXPECT_THROW(test_function_from_json(json::parse(R"({"prime":3,"dim":2})")), invalid_input);
    EXPECT_THROW(test_function_from_json(json::parse(R"({"prime":3,"dim":2,"terms":[{"center":["0"],"gamma":0,"coeff":{"1":[[0,"1"]]}}]})")),
                 invalid_input);
    EXPECT_THROW(ext_from_json(json::parse(R"({"level":0,"bogus":[]})"), 3), invalid_input);
    EXPECT_THROW(load_test_function("/nonexistent/phi.json", 3, 4), invalid_input);
}
