#include <doctest.h>

#include "test_util.hpp"
#include "vsakit/codebook.hpp"
#include "vsakit/hypervector.hpp"

using namespace vsa;
using testutil::mean;
using testutil::rand_hv;
using testutil::sample_std;

TEST_CASE("random_hv is a pure function of its identity") {
    HyperVector a = random_hv("im", "a", 7, 8, Repr::Binary);
    HyperVector b = random_hv("im", "a", 7, 8, Repr::Binary);
    CHECK(a == b);
    CHECK(a.dim() == 8);
    CHECK(random_hv("im", "b", 7, 8, Repr::Binary) != a);
    CHECK(random_hv("im", "a", 8, 8, Repr::Binary) != a);
    CHECK(random_hv("other", "a", 7, 8, Repr::Binary) != a);
    CHECK_THROWS_AS(random_hv("im", "a", 7, 0, Repr::Binary), Error);
}

TEST_CASE("random pairs concentrate at normalized Hamming 0.5") {
    const std::uint32_t dim = 10000;
    std::vector<double> dists;
    for (int i = 0; i < 1000; ++i) {
        HyperVector a = rand_hv(dim, 2 * i);
        HyperVector b = rand_hv(dim, 2 * i + 1);
        double h = hamming_normalized(a, b);
        CHECK(h == doctest::Approx(0.5).epsilon(0.04));  // 0.5 +/- 0.02
        dists.push_back(h);
    }
    CHECK(mean(dists) > 0.49);
    CHECK(mean(dists) < 0.51);
    CHECK(sample_std(dists) <= 0.008);
}

TEST_CASE("pairwise distance concentration sharpens with dimension") {
    double prev_std = 1.0;
    for (std::uint32_t dim : {256u, 1024u, 10000u}) {
        std::vector<double> dists;
        for (int i = 0; i < 400; ++i)
            dists.push_back(hamming_normalized(rand_hv(dim, 2 * i, 5), rand_hv(dim, 2 * i + 1, 5)));
        double sd = sample_std(dists);
        CHECK(sd < prev_std);
        prev_std = sd;
    }
}

TEST_CASE("bind is elementwise XOR on binary vectors") {
    HyperVector a = HyperVector::from_bit_string("01101001", Repr::Binary);
    HyperVector b = HyperVector::from_bit_string("11001010", Repr::Binary);
    CHECK(bind(a, b).to_bit_string() == "10100011");
    CHECK(bind(a, a).to_bit_string() == "00000000");
}

TEST_CASE("bind requires matching shape") {
    HyperVector a = rand_hv(64, 0);
    HyperVector b = rand_hv(65, 1);
    CHECK_THROWS_AS(bind(a, b), Error);
    CHECK_THROWS_AS(bind(a, rand_hv(64, 1).as_repr(Repr::Bipolar)), Error);
}

TEST_CASE("binding preserves pairwise Hamming distance exactly") {
    const std::uint32_t dim = 1024;
    for (int i = 0; i < 50; ++i) {
        HyperVector a = rand_hv(dim, 3 * i);
        HyperVector b = rand_hv(dim, 3 * i + 1);
        HyperVector c = rand_hv(dim, 3 * i + 2);
        CHECK(hamming_raw(bind(a, c), bind(b, c)) == hamming_raw(a, b));
    }
}

TEST_CASE("unbind inverts bind exactly for both packed reprs") {
    for (Repr repr : {Repr::Binary, Repr::Bipolar}) {
        for (int i = 0; i < 50; ++i) {
            HyperVector a = rand_hv(777, 2 * i, 9, repr);
            HyperVector b = rand_hv(777, 2 * i + 1, 9, repr);
            CHECK(unbind(bind(a, b), b) == a);
        }
    }
}

TEST_CASE("noise commutes through XOR binding") {
    const std::uint32_t dim = 10000;
    HyperVector a = rand_hv(dim, 0);
    HyperVector b = rand_hv(dim, 1);
    HyperVector x = inject_noise(bind(a, b), 0.1, 42);
    HyperVector recovered = unbind(x, b);
    CHECK(recovered == inject_noise(a, 0.1, 42));  // identical flip mask
    CHECK(hamming_normalized(recovered, a) == doctest::Approx(0.1).epsilon(0.15));
}

TEST_CASE("unbinding recovers the bound item far above chance") {
    const std::uint32_t dim = 10000;
    HyperVector a = rand_hv(dim, 0);
    HyperVector b = rand_hv(dim, 1);
    HyperVector eps = rand_hv(dim, 2);
    HyperVector rec = unbind(bind(a, b), b);
    double sim_a = 1.0 - hamming_normalized(rec, a);
    double sim_eps = 1.0 - hamming_normalized(rec, eps);
    CHECK(sim_a == 1.0);
    CHECK(sim_a > sim_eps + 0.4);
}

TEST_CASE("bundle majority: two-of-three wins") {
    for (int i = 0; i < 20; ++i) {
        HyperVector a = rand_hv(512, 2 * i);
        HyperVector b = rand_hv(512, 2 * i + 1);
        BundleResult r = bundle({a, a, b}, 0);
        CHECK(r.binarized == a);
        CHECK(r.accumulator.repr() == Repr::IntAccum);
    }
}

TEST_CASE("bundle accumulator holds the bipolar elementwise sum") {
    HyperVector a = HyperVector::from_bit_string("1100", Repr::Binary);
    HyperVector b = HyperVector::from_bit_string("1010", Repr::Binary);
    BundleResult r = bundle({a, b}, 7);
    CHECK(r.accumulator.accum() == std::vector<std::int32_t>{2, 0, 0, -2});
}

TEST_CASE("bundle of three is equidistant from its constituents") {
    const std::uint32_t dim = 10000;
    for (int t = 0; t < 20; ++t) {
        HyperVector a = rand_hv(dim, 4 * t);
        HyperVector b = rand_hv(dim, 4 * t + 1);
        HyperVector c = rand_hv(dim, 4 * t + 2);
        HyperVector fresh = rand_hv(dim, 4 * t + 3);
        HyperVector m = bundle({a, b, c}, 11).binarized;
        for (const HyperVector* v : {&a, &b, &c}) {
            double h = hamming_normalized(m, *v);
            CHECK(h > 0.23);
            CHECK(h < 0.27);
        }
        double hf = hamming_normalized(m, fresh);
        CHECK(hf > 0.48);
        CHECK(hf < 0.52);
    }
}

TEST_CASE("empty bundle is rejected") {
    CHECK_THROWS_AS(bundle({}, 0), Error);
    try {
        bundle({}, 0);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::EmptyInput);
    }
}

TEST_CASE("permute rotates by one") {
    HyperVector a = HyperVector::from_bit_string("01100000", Repr::Binary);
    CHECK(permute(a, 1).to_bit_string() == "00110000");
    CHECK(permute(permute(a, 7), 1) == a);  // rho^D identity
    CHECK(permute(a, 8) == a);
    CHECK(permute(a, -1) == permute(a, 7));
}

TEST_CASE("permutation is a Hamming isometry") {
    const std::uint32_t dim = 1024;
    for (int i = 0; i < 30; ++i) {
        HyperVector a = rand_hv(dim, 2 * i);
        HyperVector b = rand_hv(dim, 2 * i + 1);
        int k = 1 + i * 31;
        CHECK(hamming_raw(permute(a, k), permute(b, k)) == hamming_raw(a, b));
        CHECK(permute(a, dim) == a);
    }
}

TEST_CASE("a vector and its rotation are quasi-orthogonal") {
    HyperVector a = rand_hv(10000, 0);
    CHECK(hamming_normalized(a, permute(a, 1)) == doctest::Approx(0.5).epsilon(0.04));
}

TEST_CASE("similarity metrics") {
    HyperVector a = rand_hv(4096, 0, 3, Repr::Bipolar);
    CHECK(similarity(a, a, SimilarityMetric::NormalizedHamming).value == 0.0);
    CHECK(similarity(a, complement(a), SimilarityMetric::Cosine).value == doctest::Approx(-1.0));
    CHECK(similarity(a, a, SimilarityMetric::Dot).value == doctest::Approx(4096.0));
    HyperVector zero = HyperVector::zeros(4096, Repr::Binary);
    CHECK_THROWS_AS(similarity(zero, zero, SimilarityMetric::Cosine), Error);
}

TEST_CASE("ranking orientation flips normalized Hamming") {
    SimilarityScore s{SimilarityMetric::NormalizedHamming, 0.2};
    CHECK(s.ranking_value() == doctest::Approx(0.8));
    SimilarityScore c{SimilarityMetric::Cosine, 0.3};
    CHECK(c.ranking_value() == doctest::Approx(0.3));
}

TEST_CASE("inject_noise endpoints and concentration") {
    HyperVector a = rand_hv(10000, 0);
    CHECK(inject_noise(a, 0.0, 5) == a);
    CHECK(inject_noise(a, 1.0, 5) == complement(a));
    double flipped = hamming_normalized(inject_noise(a, 0.1, 5), a);
    CHECK(flipped == doctest::Approx(0.1).epsilon(0.1));
    CHECK_THROWS_AS(inject_noise(a, -0.01, 5), Error);
    CHECK_THROWS_AS(inject_noise(a, 1.01, 5), Error);
}

TEST_CASE("binary/bipolar views round-trip exactly") {
    HyperVector a = rand_hv(1000, 0);
    HyperVector bip = a.as_repr(Repr::Bipolar);
    CHECK(bip.repr() == Repr::Bipolar);
    CHECK(bip.element(0) == (a.bit(0) ? 1 : -1));
    CHECK(bip.as_repr(Repr::Binary) == a);
}

TEST_CASE("codebook regenerates identically and preserves order") {
    Codebook cb("colors", 99, 256);
    cb.add("red");
    cb.add("green");
    cb.add("blue");
    Codebook cb2("colors", 99, 256);
    cb2.add("blue");  // different insertion order
    cb2.add("red");
    cb2.add("green");
    CHECK(cb.get("red") == cb2.get("red"));
    CHECK(cb.get("blue") == cb2.get("blue"));
    CHECK(cb.symbol_at(0) == "red");
    CHECK(cb2.symbol_at(0) == "blue");
    CHECK_THROWS_AS(cb.get("mauve"), Error);
    try {
        cb.get("mauve");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::MissingItem);
    }
}

TEST_CASE("int accumulator vectors respect their bit width") {
    HyperVector v = random_hv("im", "acc", 1, 64, Repr::IntAccum, 4);
    for (std::uint32_t i = 0; i < v.dim(); ++i) {
        CHECK(v.accum()[i] >= -8);
        CHECK(v.accum()[i] <= 7);
    }
    CHECK_THROWS_AS(HyperVector::zeros(8, Repr::IntAccum, 1), Error);
}
