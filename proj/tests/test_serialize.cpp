#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "test_util.hpp"
#include "vsakit/serialize.hpp"

using namespace vsa;
using testutil::rand_hv;

TEST_CASE("binary container round-trips packed and accumulator vectors") {
    for (Repr repr : {Repr::Binary, Repr::Bipolar}) {
        HyperVector hv = rand_hv(1000, 3, 17, repr);
        std::stringstream buf;
        save_hv(hv, buf, 1234);
        std::uint64_t meta = 0;
        HyperVector back = load_hv(buf, &meta);
        CHECK(back == hv);
        CHECK(meta == 1234);
    }
    HyperVector acc = random_hv("im", "acc", 5, 64, Repr::IntAccum, 8);
    std::stringstream buf;
    save_hv(acc, buf);
    CHECK(load_hv(buf) == acc);
}

TEST_CASE("container rejects garbage") {
    std::stringstream buf("not a container at all");
    CHECK_THROWS_AS(load_hv(buf), Error);
}

TEST_CASE("json debug form round-trips") {
    HyperVector hv = rand_hv(16, 0);
    CHECK(hv_from_json(hv_to_json(hv)) == hv);
    HyperVector bip = rand_hv(16, 1, 1, Repr::Bipolar);
    CHECK(hv_from_json(hv_to_json(bip)) == bip);
}

TEST_CASE("atomic file write leaves no temp file behind") {
    std::string path = "serialize_test_output.bin";
    HyperVector hv = rand_hv(128, 9);
    save_hv_file(hv, path, 7);
    CHECK(load_hv_file(path) == hv);
    std::ifstream tmp(path + ".tmp");
    CHECK(!tmp.good());
    std::remove(path.c_str());
}
