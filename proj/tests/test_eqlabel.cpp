#include <doctest.h>

#include <graphlabel/adjacency.hpp>
#include <graphlabel/error.hpp>
#include <graphlabel/evaluate.hpp>
#include <graphlabel/generators.hpp>
#include <graphlabel/labels_io.hpp>
#include <graphlabel/rng.hpp>
#include <graphlabel/sketch.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>

using namespace graphlabel;

namespace {
    // injective code renaming applied to every label
    LabelScheme renamed(LabelScheme scheme, const std::function<Code(Code)> & map)
    {
        for (auto & label : scheme.labels)
            for (auto & part : label.parts)
                for (auto & code : part.codes)
                    code = map(code);
        return scheme;
    }
}

TEST_CASE("forest labels decode parent-child edges")
{
    // rooted path: every vertex holds itself and at most one out-neighbor
    const Graph p5 = gen::path(5);
    const LabelScheme scheme = build_adjacency_labels(p5);
    CHECK(scheme.disjunctive);
    CHECK(scheme.max_codes() == 2);
    CHECK(decode(scheme, 1, 2) == 1);
    CHECK(decode(scheme, 0, 4) == 0);

    // star: leaves share no codes
    Graph star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    const LabelScheme star_scheme = build_adjacency_labels(star);
    CHECK(decode(star_scheme, 1, 2) == 0);
    CHECK(decode(star_scheme, 0, 3) == 1);
}

TEST_CASE("unknown decoder is rejected")
{
    LabelScheme scheme;
    scheme.decoder_id = "no_such_decoder";
    scheme.labels.resize(2);
    CHECK_THROWS_WITH_AS(decode(scheme, 0, 1), doctest::Contains("unknown decoder"), Error);
}

TEST_CASE("decode is invariant under injective code renaming")
{
    const Graph g = gen::gnp(40, 0.15, 21);
    const LabelScheme scheme = build_adjacency_labels(g);
    const LabelScheme shifted = renamed(scheme, [](Code c) { return c * 31 + 1009; });
    for (Vertex x = 0; x < g.vertex_count(); ++x)
        for (Vertex y = x + 1; y < g.vertex_count(); ++y)
            CHECK(decode(scheme, x, y) == decode(shifted, x, y));
}

TEST_CASE("decode depends only on the two labels")
{
    const Graph g = gen::gnp(20, 0.2, 5);
    LabelScheme scheme = build_adjacency_labels(g);
    const int before = decode(scheme, 3, 7);
    scheme.labels[11].parts[0].codes.assign({Code{999}, Code{998}});
    CHECK(decode(scheme, 3, 7) == before);
}

TEST_CASE("pair predicates")
{
    const Graph g = gen::path(6);

    const auto adj = PairPredicate::adjacency(g);
    CHECK(adj(0, 1) == 1);
    CHECK(adj(0, 2) == 0);

    const auto band = PairPredicate::dist_band(g, 1, 3);
    CHECK(band(0, 1) == 1);
    CHECK(band(0, 2) == PairPredicate::star);
    CHECK(band(0, 5) == 0);

    const auto leq = PairPredicate::dist_leq(g, 2);
    CHECK(leq(0, 2) == 1);
    CHECK(leq(0, 3) == 0);

    const Graph h(4, {{0, 1}});
    const auto restricted = PairPredicate::adjacency_restricted(h, {{0, 1}, {2, 3}});
    CHECK(restricted(0, 1) == 1);
    CHECK(restricted(2, 3) == 0);
    CHECK(restricted(0, 2) == PairPredicate::star);
}

TEST_CASE("exact scheme evaluation reports zero errors")
{
    const Graph g = gen::gnp(60, 0.1, 2);
    const auto report = evaluate_scheme(build_adjacency_labels(g), PairPredicate::adjacency(g));
    CHECK(report.exact());
    CHECK(report.pairs_checked == 60L * 59 / 2);
    CHECK(report.s == 0);
    CHECK(report.t == 1);
}

TEST_CASE("hash compiler basics")
{
    const Graph tree = gen::random_tree(30, 4);
    const LabelScheme scheme = build_adjacency_labels(tree);
    REQUIRE(scheme.max_codes() == 2);

    const Sketcher sk = compile_sketch(scheme, 99);
    CHECK(sk.params.at("w") == 12); // 3k^2 by default
    CHECK(sk.params.at("code_width") == 4);
    CHECK(sk.one_sided);
    CHECK(sk.size_bits <= 8 + 2 * 16 + 2 * 4 + 64); // parts + separators + codes, loose

    // bits and parsed mirror agree
    for (Vertex v = 0; v < tree.vertex_count(); ++v)
        CHECK(label_from_bits(sk.bits[v], 4) == sk.hashed[v]);
    for (Vertex x = 0; x < tree.vertex_count(); ++x)
        for (Vertex y = x + 1; y < tree.vertex_count(); ++y)
            CHECK(decode_sketch(sk, x, y) == decode_sketch_bits(sk.decoder_id, sk.params, sk.bits[x], sk.bits[y]));
}

TEST_CASE("compiled disjunctive sketches never miss ones")
{
    const Graph g = gen::gnp(25, 0.25, 8);
    const LabelScheme scheme = build_adjacency_labels(g);
    const auto report =
        evaluate_sketch(compile_sketch(scheme, 1), PairPredicate::adjacency(g), 400, 12345, 2);
    CHECK(report.false_negative_rate == 0.0);
    CHECK(report.randomized);
}

TEST_CASE("compiled sketch error stays under the union bound")
{
    // degeneracy-2 graph gives k = 3 codes, the documented w = 27 operating point
    const Graph g = gen::cycle(12);
    const LabelScheme scheme = build_adjacency_labels(g);
    REQUIRE(scheme.max_codes() == 3);
    const Sketcher sk = compile_sketch(scheme, 7, 27);
    const auto report = evaluate_sketch(sk, PairPredicate::adjacency(g), 3000, 99, 2);
    CHECK(report.false_negative_rate == 0.0);
    // per-pair error <= k^2/w = 1/3, with sampling slack
    CHECK(report.max_pair_error <= 1.0 / 3 + 0.03);
}

TEST_CASE("majority boosting cuts two-sided error")
{
    // one pair, engineered error ~ 1 - (8/9)^3 ~ 0.3 at w = 9
    LabelScheme scheme;
    scheme.decoder_id = "or_any";
    scheme.disjunctive = true;
    scheme.labels.resize(2);
    scheme.labels[0].parts.push_back(LabelPart{"", {100}});
    scheme.labels[1].parts.push_back(LabelPart{"", {200, 300, 400}});

    const Graph two(2, {});
    const auto pred = PairPredicate::adjacency(two);

    const Sketcher plain = compile_sketch(scheme, 5, 9);
    const auto plain_report = evaluate_sketch(plain, pred, 3000, 11, 2);
    CHECK(plain_report.max_pair_error > 0.15); // sanity: the instance is noisy

    const Sketcher boosted = boost_majority(plain, 15, 77);
    const auto boosted_report = evaluate_sketch(boosted, pred, 3000, 13, 2);
    CHECK(boosted_report.max_pair_error <= std::exp(-15.0 / 18));
    CHECK(boosted_report.max_pair_error < plain_report.max_pair_error);

    CHECK_THROWS_AS(boost_majority(plain, 4, 1), Error); // even copies rejected
}

TEST_CASE("boosting keeps one-sidedness")
{
    const Graph g = gen::path(8);
    const Sketcher plain = compile_sketch(build_adjacency_labels(g), 3, 2); // tiny w: lots of collisions
    const Sketcher boosted = boost_majority(plain, 3, 5);
    CHECK(boosted.one_sided);
    const auto report = evaluate_sketch(boosted, PairPredicate::adjacency(g), 500, 21, 2);
    CHECK(report.false_negative_rate == 0.0);
}

TEST_CASE("wilson interval")
{
    auto [lo, hi] = wilson_interval(0, 100);
    CHECK(lo == 0.0);
    CHECK(hi < 0.05);
    auto [lo2, hi2] = wilson_interval(50, 100);
    CHECK(lo2 > 0.4);
    CHECK(hi2 < 0.6);
}

TEST_CASE("label dump round trip")
{
    const auto dir = std::filesystem::temp_directory_path() / "graphlabel_labels_test";
    std::filesystem::create_directories(dir);

    const Graph g = gen::gnp(30, 0.12, 31);
    const LabelScheme scheme = build_adjacency_labels(g);
    const std::string path = (dir / "labels.json").string();
    serialize_labels(scheme, path);
    const auto loaded = deserialize_labels(path);
    REQUIRE(std::holds_alternative<LabelScheme>(loaded));
    const auto & back = std::get<LabelScheme>(loaded);
    CHECK(back.decoder_id == scheme.decoder_id);
    CHECK(back.disjunctive == scheme.disjunctive);
    CHECK(back.labels == scheme.labels);

    // tampering the decoder name must be rejected on load
    {
        std::ifstream in(path);
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        const auto at = text.find("or_first_vs_rest");
        REQUIRE(at != std::string::npos);
        text.replace(at, std::string("or_first_vs_rest").size(), "mystery_decoder2");
        std::ofstream out(path);
        out << text;
    }
    CHECK_THROWS_WITH_AS(deserialize_labels(path), doctest::Contains("unknown decoder"), Error);

    std::filesystem::remove_all(dir);
}

TEST_CASE("malformed dumps are rejected, not crashed on")
{
    const auto dir = std::filesystem::temp_directory_path() / "graphlabel_malformed_test";
    std::filesystem::create_directories(dir);
    const std::string path = (dir / "bad.json").string();

    auto expect_error = [&](const std::string & text) {
        std::ofstream(path) << text;
        CHECK_THROWS_AS(deserialize_labels(path), Error);
    };

    expect_error("not json at all {{{");
    expect_error(R"({"version":2,"decoder":"or_any"})");
    expect_error(R"({"version":1,"decoder":"or_any"})"); // neither labels nor sketch fields
    expect_error(R"({"version":1,"decoder":"or_any","params":{},"disjunctive":true,"labels":[[["01x",3]]]})");
    expect_error(R"({"version":1,"decoder":"or_any","params":{},"disjunctive":"maybe","labels":[]})");
    // sketch dump with too little data for the declared geometry
    expect_error(R"({"version":1,"decoder":"id_equality","params":{},"one_sided":false,)"
                 R"("n":100,"bits_per_vertex":2,"data":"AA=="})");

    std::filesystem::remove_all(dir);
}

TEST_CASE("truncated bit strings are rejected")
{
    CHECK_THROWS_AS(label_from_bits("1", 4), Error);
    Bits bits;
    append_varint(bits, 1);  // one part
    append_varint(bits, 5);  // five prefix bits
    bits += "01";            // but only two present
    CHECK_THROWS_AS(label_from_bits(bits, 4), Error);
}

TEST_CASE("sketch dump round trip and size scaling")
{
    const auto dir = std::filesystem::temp_directory_path() / "graphlabel_sketch_test";
    std::filesystem::create_directories(dir);

    const Graph small = gen::random_tree(50, 1);
    const Graph large = gen::random_tree(100, 1);

    std::uintmax_t sizes[2];
    int idx = 0;
    for (const Graph * g : {&small, &large}) {
        const Sketcher sk = compile_sketch(build_adjacency_labels(*g), 9);
        const std::string path = (dir / ("sk" + std::to_string(idx) + ".json")).string();
        serialize_labels(sk, path);
        sizes[idx++] = std::filesystem::file_size(path);

        const auto loaded = deserialize_labels(path);
        REQUIRE(std::holds_alternative<StoredSketch>(loaded));
        const auto & stored = std::get<StoredSketch>(loaded);
        CHECK(stored.vertex_count() == g->vertex_count());
        CHECK(stored.size_bits == sk.size_bits);
        for (Vertex x = 0; x < g->vertex_count(); ++x)
            for (Vertex y = x + 1; y < g->vertex_count(); ++y)
                CHECK(stored.decode(x, y) == decode_sketch(sk, x, y));
    }
    // linear growth, very loose band
    CHECK(sizes[1] > sizes[0]);
    CHECK(sizes[1] < 4 * sizes[0]);

    std::filesystem::remove_all(dir);
}
