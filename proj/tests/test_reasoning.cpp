#include <doctest.h>

#include "test_util.hpp"
#include "vsakit/prng.hpp"
#include "vsakit/reasoning.hpp"

using namespace vsa;
using testutil::rand_hv;

namespace {

std::vector<const Codebook*> ptrs(const std::vector<Codebook>& cbs) {
    std::vector<const Codebook*> out;
    for (const auto& cb : cbs) out.push_back(&cb);
    return out;
}

std::vector<Codebook> make_codebooks(std::size_t count, std::size_t items, std::uint32_t dim,
                                     std::uint64_t seed) {
    std::vector<Codebook> cbs;
    for (std::size_t i = 0; i < count; ++i) {
        cbs.emplace_back("factor" + std::to_string(i), seed + i, dim, Repr::Bipolar);
        cbs.back().add_range("item", items);
    }
    return cbs;
}

} // namespace

TEST_CASE("compose folds bind and stays order insensitive") {
    HyperVector a = rand_hv(1024, 0), b = rand_hv(1024, 1), c = rand_hv(1024, 2);
    CHECK(compose({a, b}) == bind(a, b));
    CHECK(compose({a, b, c}) == compose({c, a, b}));
    CHECK(unbind(unbind(compose({a, b, c}), b), c) == a);
    CHECK_THROWS_AS(compose({a}), Error);
}

TEST_CASE("cleanup memory returns stored items or an explicit no-match") {
    Codebook cb("items", 3, 10000);
    cb.add_range("w", 6);
    CleanupMemory cm(&cb, SimilarityMetric::Cosine, 0.25);

    auto hit = cm.query(inject_noise(cb.get("w2"), 0.05, 9));
    CHECK(hit.symbol.has_value());
    CHECK(*hit.symbol == "w2");
    CHECK(hit.score > 0.7);

    auto miss = cm.query(rand_hv(10000, 99));
    CHECK(!miss.symbol.has_value());
    CHECK(miss.score < 0.25);

    Codebook empty("none", 1, 16);
    CleanupMemory bad(&empty);
    CHECK_THROWS_AS(bad.query(rand_hv(16, 0)), Error);
}

TEST_CASE("query_unbind recovers an exactly bound filler") {
    Codebook cb("fillers", 5, 4096);
    cb.add_range("f", 4);
    HyperVector key = rand_hv(4096, 50);
    HyperVector composite = bind(cb.get("f1"), key);
    CleanupMemory cm(&cb, SimilarityMetric::Cosine, 0.25);
    auto res = query_unbind(composite, key, cm);
    CHECK(res.best_symbol == "f1");
    CHECK(res.score == doctest::Approx(1.0));
}

TEST_CASE("query_unbind resolves every role of a five-pair record") {
    const std::uint32_t D = 10000;
    Codebook roles("roles", 7, D);
    Codebook fillers("fillers", 8, D);
    roles.add_range("role", 5);
    fillers.add_range("filler", 5);

    std::vector<HyperVector> pairs;
    for (std::size_t i = 0; i < 5; ++i)
        pairs.push_back(bind(roles.at(i), fillers.at(i)));
    HyperVector record = bundle(pairs, 4).binarized;

    CleanupMemory cm(&fillers, SimilarityMetric::Cosine, 0.1);
    for (std::size_t i = 0; i < 5; ++i) {
        auto res = query_unbind(record, roles.at(i), cm);
        CHECK(res.best_symbol == "filler" + std::to_string(i));
        CHECK(res.symbol.has_value());
        // Cross-talk margin: the right filler clearly beats the noise floor.
        for (std::size_t j = 0; j < 5; ++j) {
            if (j == i) continue;
            double other = similarity(unbind(record, roles.at(i)).as_repr(Repr::Bipolar),
                                      fillers.at(j).as_repr(Repr::Bipolar),
                                      SimilarityMetric::Cosine)
                               .value;
            CHECK(res.score > other + 0.1);
        }
    }
}

TEST_CASE("the currency-of-mexico query decodes to the pegged answer") {
    const std::uint32_t D = 10000;
    Codebook vocab("vocab", 11, D);
    for (const char* s : {"USA", "DOL", "MEX", "PES", "name", "cur"}) vocab.add(s);

    HyperVector states = bundle({bind(vocab.get("name"), vocab.get("USA")),
                                 bind(vocab.get("cur"), vocab.get("DOL"))},
                                21)
                             .binarized;
    HyperVector mexico = bundle({bind(vocab.get("name"), vocab.get("MEX")),
                                 bind(vocab.get("cur"), vocab.get("PES"))},
                                22)
                             .binarized;
    HyperVector f = bind(states, mexico);

    CleanupMemory cm(&vocab, SimilarityMetric::Cosine, 0.1);
    auto res = query_unbind(f, vocab.get("DOL"), cm);
    CHECK(res.best_symbol == "PES");
    CHECK(res.score > 0.15);
}

TEST_CASE("one-factor resonator is a single clean-up") {
    std::vector<Codebook> cbs = make_codebooks(1, 4, 1024, 7);
    HyperVector f = cbs[0].get("item2");
    ResonatorState st = resonator_init(ptrs(cbs), ResonatorSchedule::Parallel, 0.0, 3);
    st = resonator_step(st, f, ptrs(cbs));
    CHECK(st.estimates[0] == cbs[0].get("item2"));
    st = resonator_step(st, f, ptrs(cbs));
    CHECK(st.all_converged());
}

TEST_CASE("true factors are a fixed point of the resonator step") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        std::vector<Codebook> cbs = make_codebooks(3, 16, 1024, 1000 + seed);
        HyperVector f = compose({cbs[0].at(1), cbs[1].at(7), cbs[2].at(12)});
        ResonatorState st = resonator_init(ptrs(cbs), ResonatorSchedule::Parallel, 0.0, seed);
        st.estimates = {cbs[0].at(1), cbs[1].at(7), cbs[2].at(12)};
        ResonatorState next = resonator_step(st, f, ptrs(cbs));
        CHECK(next.estimates[0] == cbs[0].at(1));
        CHECK(next.estimates[1] == cbs[1].at(7));
        CHECK(next.estimates[2] == cbs[2].at(12));
        CHECK(next.all_converged());
    }
}

TEST_CASE("resonator estimates stay bipolar with no zero leaks") {
    std::vector<Codebook> cbs = make_codebooks(2, 4, 128, 5);
    HyperVector f = compose({cbs[0].at(0), cbs[1].at(3)});
    ResonatorState st = resonator_init(ptrs(cbs), ResonatorSchedule::Parallel, 0.0, 5);
    for (int i = 0; i < 5; ++i) {
        st = resonator_step(st, f, ptrs(cbs));
        for (const auto& est : st.estimates) {
            CHECK(est.repr() == Repr::Bipolar);
            CHECK(est.dim() == 128);
        }
    }
}

TEST_CASE("factorize solves a 3x4 problem and reports a perfect recompose") {
    std::vector<Codebook> cbs = make_codebooks(3, 4, 1024, 77);
    HyperVector f = compose({cbs[0].at(3), cbs[1].at(0), cbs[2].at(2)});
    FactorizeResult res = factorize(f, ptrs(cbs), 100, ResonatorSchedule::Parallel, 0.0, 9);
    CHECK(res.converged);
    CHECK(res.factors == std::vector<std::string>{"item3", "item0", "item2"});
    CHECK(res.recompose_similarity == doctest::Approx(1.0));
    CHECK(res.trusted);
    CHECK(res.iterations <= 100);
}

TEST_CASE("factorize matches the brute-force oracle on most seeded trials") {
    const std::size_t trials = 50;
    std::size_t correct = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        std::vector<Codebook> cbs = make_codebooks(3, 8, 1024, 5000 + t);
        CounterRng pick = CounterRng::keyed("trial", std::to_string(t), 1);
        std::size_t ia = pick.next_below(8), ib = pick.next_below(8), ic = pick.next_below(8);
        HyperVector f = compose({cbs[0].at(ia), cbs[1].at(ib), cbs[2].at(ic)});

        // Brute force over all 512 combinations: the composed item triple is
        // the unique zero-distance combination.
        std::size_t best_combo = 0;
        std::uint32_t best_dist = 0xffffffff;
        for (std::size_t combo = 0; combo < 512; ++combo) {
            HyperVector cand = compose({cbs[0].at(combo / 64), cbs[1].at((combo / 8) % 8),
                                        cbs[2].at(combo % 8)});
            std::uint32_t d = hamming_raw(cand, f);
            if (d < best_dist) {
                best_dist = d;
                best_combo = combo;
            }
        }
        REQUIRE(best_combo == ia * 64 + ib * 8 + ic);
        REQUIRE(best_dist == 0);

        FactorizeResult res = factorize(f, ptrs(cbs), 100, ResonatorSchedule::Parallel, 0.0, t);
        if (res.converged && res.factors[0] == "item" + std::to_string(ia) &&
            res.factors[1] == "item" + std::to_string(ib) &&
            res.factors[2] == "item" + std::to_string(ic))
            ++correct;
    }
    CHECK(correct >= trials * 95 / 100);
}

TEST_CASE("parallel and sequential schedules agree; sequential is usually no slower") {
    std::size_t agree = 0, seq_not_slower = 0;
    const std::size_t trials = 100;
    for (std::uint64_t t = 0; t < trials; ++t) {
        std::vector<Codebook> cbs = make_codebooks(3, 4, 512, 9000 + t);
        HyperVector f = compose({cbs[0].at(1), cbs[1].at(2), cbs[2].at(3)});
        FactorizeResult par = factorize(f, ptrs(cbs), 100, ResonatorSchedule::Parallel, 0.0, t);
        FactorizeResult seq = factorize(f, ptrs(cbs), 100, ResonatorSchedule::Sequential, 0.0, t);
        if (par.converged && seq.converged && par.factors == seq.factors) ++agree;
        if (seq.iterations <= par.iterations) ++seq_not_slower;
    }
    CHECK(agree >= trials * 90 / 100);
    CHECK(seq_not_slower >= trials * 80 / 100);
}

TEST_CASE("an unrelated composite is flagged instead of trusted") {
    std::vector<Codebook> cbs = make_codebooks(3, 8, 1024, 31);
    HyperVector junk = rand_hv(1024, 123, 555, Repr::Bipolar);
    FactorizeResult res = factorize(junk, ptrs(cbs), 100, ResonatorSchedule::Parallel, 0.0, 3);
    CHECK(!res.trusted);
    CHECK((!res.converged || res.recompose_similarity < 0.5));
    CHECK(res.iterations <= 100);
}

TEST_CASE("low-rate noise injection breaks a limit cycle") {
    // Frozen instance: parallel updates oscillate for the full budget at
    // noise 0, while 1% noise settles on the true factors.
    std::vector<Codebook> cbs;
    for (int i = 0; i < 3; ++i) {
        cbs.emplace_back("factor" + std::to_string(i), 40987 + i, 256, Repr::Bipolar);
        cbs.back().add_range("item", 24);
    }
    HyperVector f = compose({cbs[0].at(3), cbs[1].at(15), cbs[2].at(6)});

    FactorizeResult dry = factorize(f, ptrs(cbs), 100, ResonatorSchedule::Parallel, 0.0, 141);
    CHECK(!dry.converged);
    CHECK(dry.iterations == 100);

    FactorizeResult wet = factorize(f, ptrs(cbs), 100, ResonatorSchedule::Parallel, 0.01, 141);
    CHECK(wet.converged);
    CHECK(wet.factors == std::vector<std::string>{"item3", "item15", "item6"});
    CHECK(wet.iterations < 100);
}

TEST_CASE("factorize validates its arguments") {
    std::vector<Codebook> cbs = make_codebooks(2, 4, 256, 3);
    HyperVector f = compose({cbs[0].at(0), cbs[1].at(1)});
    CHECK_THROWS_AS(factorize(f, ptrs(cbs), 0), Error);
    std::vector<Codebook> wrong = make_codebooks(2, 4, 128, 3);
    CHECK_THROWS_AS(factorize(f, ptrs(wrong), 10), Error);
}
