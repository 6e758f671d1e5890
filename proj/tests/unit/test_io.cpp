#include <doctest.h>

#include <sstream>

#include "cnb/errors.hpp"
#include "cnb/io.hpp"
#include "helpers.hpp"

using namespace cnb;

TEST_CASE("parse_complex accepts the documented forms") {
    CHECK(parse_complex("3") == Cplx{3, 0});
    CHECK(parse_complex("-2.5") == Cplx{-2.5, 0});
    CHECK(parse_complex("3+4i") == Cplx{3, 4});
    CHECK(parse_complex("3-4i") == Cplx{3, -4});
    CHECK(parse_complex("4i") == Cplx{0, 4});
    CHECK(parse_complex("-4i") == Cplx{0, -4});
    CHECK(parse_complex("i") == Cplx{0, 1});
    CHECK(parse_complex("-i") == Cplx{0, -1});
    CHECK(parse_complex("+i") == Cplx{0, 1});
    CHECK(parse_complex("3+i") == Cplx{3, 1});
    CHECK(parse_complex("3-i") == Cplx{3, -1});
    CHECK(parse_complex("1.5e-3+2e2i") == Cplx{0.0015, 200});
    CHECK(parse_complex("  1 + 2i ") == Cplx{1, 2});
    CHECK(parse_complex("+0.5") == Cplx{0.5, 0});
}

TEST_CASE("parse_complex rejects malformed input") {
    for (const char* bad : {"", "abc", "1+", "1+2", "1 2i", "2j", "1+2ii", "i3", "1++2i",
                            "3+-4i", "inf", "nan", "1e999", "--1"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_complex(bad), ParseError);
    }
}

TEST_CASE("format/parse round-trip at full precision") {
    Rng rng(81);
    for (int rep = 0; rep < 500; ++rep) {
        const double re = rng.gaussian() * std::pow(10.0, rng.uniform(-12, 12));
        const double im = rng.gaussian() * std::pow(10.0, rng.uniform(-12, 12));
        Cplx z{re, im};
        if (rep % 5 == 0) z = Cplx{re, 0};
        if (rep % 7 == 0) z = Cplx{0, im};
        const Cplx back = parse_complex(format_complex(z));
        CHECK(back.real() == z.real());
        CHECK(back.imag() == z.imag());
    }
}

TEST_CASE("matrix file round-trip") {
    Rng rng(82);
    const ComplexMatrix a = cnb::test::gaussian_matrix(5, rng);
    const std::string text = matrix_to_string(a);
    const ComplexMatrix b = matrix_from_string(text);
    REQUIRE(b.rows() == 5);
    for (unsigned i = 0; i < 5; ++i)
        for (unsigned j = 0; j < 5; ++j) CHECK(a(i, j) == b(i, j));
}

TEST_CASE("read_matrix rejects malformed files") {
    auto reject = [](const std::string& text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(read_matrix(in), ParseError);
    };
    reject("");
    reject("2");
    reject("a b\n1 2\n");
    reject("2 2\n1 2 3\n");          // body ends early
    reject("1 1\n1 extra\n");        // trailing content
    reject("0 2\n");
    reject("-1 2\n");
    reject("1 2\n1 bogus\n");
    reject("200000 200000\n");
}

TEST_CASE("read_matrix_file on a missing path") {
    CHECK_THROWS_AS(read_matrix_file("/nonexistent/path/m.txt"), ParseError);
}

TEST_CASE("format_double human precision") {
    CHECK(format_double(1.0, 6) == "1");
    CHECK(format_double(0.5, 6) == "0.5");
    CHECK(format_complex(Cplx{1, -1}, 6) == "1-1i");
    CHECK(format_complex(Cplx{0, 2.5}, 6) == "2.5i");
    CHECK(format_complex(Cplx{-3, 0}, 6) == "-3");
}
