#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <vector>

#include "graphcent/catalog.hpp"
#include "graphcent/graph.hpp"
#include "graphcent/graph_io.hpp"

namespace gc = graphcent;

namespace {

template <class Fn>
bool throws_code(Fn&& fn, gc::errc want) {
    try {
        (void)fn();
    } catch (const gc::graph_error& e) {
        return e.code() == want;
    } catch (...) {
        return false;
    }
    return false;
}

} // namespace

TEST_CASE("graph construction validates and normalizes") {
    SUBCASE("edges are normalized to (min,max) and sorted") {
        const gc::Graph a = gc::build_graph(4, {{2, 1}, {3, 0}, {0, 1}});
        const gc::Graph b = gc::build_graph(4, {{0, 1}, {1, 2}, {0, 3}});
        CHECK(a == b);
        CHECK(a.edges() == std::vector<gc::Graph::Edge>{{0, 1}, {0, 3}, {1, 2}});
    }
    SUBCASE("adjacency lists are sorted") {
        const gc::Graph g = gc::build_graph(4, {{3, 1}, {1, 0}, {1, 2}});
        CHECK(g.adjacency()[1] == std::vector<int>{0, 2, 3});
    }
    SUBCASE("rejects self-loops") {
        CHECK(throws_code([] { return gc::build_graph(3, {{1, 1}}); }, gc::errc::self_loop));
    }
    SUBCASE("rejects duplicates in either orientation") {
        CHECK(throws_code([] { return gc::build_graph(3, {{0, 1}, {1, 0}}); },
                          gc::errc::duplicate_edge));
        CHECK(throws_code([] { return gc::build_graph(3, {{0, 1}, {0, 1}}); },
                          gc::errc::duplicate_edge));
    }
    SUBCASE("rejects endpoints out of range and nonpositive n") {
        CHECK(throws_code([] { return gc::build_graph(3, {{0, 3}}); },
                          gc::errc::vertex_out_of_range));
        CHECK(throws_code([] { return gc::build_graph(3, {{-1, 2}}); },
                          gc::errc::vertex_out_of_range));
        CHECK(throws_code([] { return gc::build_graph(0, {}); },
                          gc::errc::vertex_out_of_range));
    }
    SUBCASE("isolated vertices are allowed") {
        const gc::Graph g = gc::build_graph(5, {{0, 1}});
        CHECK(g.vertex_count() == 5);
        CHECK(g.edge_count() == 1);
    }
}

TEST_CASE("degrees and laplacian") {
    const gc::Graph g = gc::build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
    const std::vector<int> d = gc::degrees(g);
    CHECK(d == std::vector<int>{3, 2, 3, 2});

    const Eigen::MatrixXd lap = gc::laplacian(g);
    CHECK(lap.rows() == 4);
    CHECK(lap.trace() == 2.0 * g.edge_count());
    for (int i = 0; i < 4; ++i) {
        CHECK(lap.row(i).sum() == 0.0);
        CHECK(lap(i, i) == static_cast<double>(d[i]));
        for (int j = 0; j < 4; ++j) {
            CHECK(lap(i, j) == lap(j, i));
        }
    }
    CHECK(lap(0, 1) == -1.0);
    CHECK(lap(1, 3) == 0.0);
}

TEST_CASE("connectivity and components") {
    CHECK(gc::is_connected(gc::build_graph(1, {})));
    CHECK(gc::is_connected(gc::build_graph(3, {{0, 1}, {1, 2}})));
    CHECK_FALSE(gc::is_connected(gc::build_graph(4, {{0, 1}, {2, 3}})));
    CHECK(gc::component_count(gc::build_graph(4, {{0, 1}, {2, 3}})) == 2);
    CHECK(gc::component_count(gc::build_graph(5, {{0, 1}})) == 4);
}

TEST_CASE("vertex removal relabels contiguously") {
    // Path 0-1-2-3: removing vertex 1 leaves {0} and the edge (2,3) -> (1,2).
    const gc::Graph g = gc::build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    const gc::Graph h = gc::remove_vertex(g, 1);
    CHECK(h.vertex_count() == 3);
    CHECK(h.edges() == std::vector<gc::Graph::Edge>{{1, 2}});
    CHECK_FALSE(gc::is_connected(h));

    SUBCASE("removing the star hub isolates everything") {
        const gc::Graph star = gc::catalog_graph(gc::CatalogId::star);
        const gc::Graph rest = gc::remove_vertex(star, 0);
        CHECK(rest.vertex_count() == 6);
        CHECK(rest.edge_count() == 0);
        CHECK(gc::component_count(rest) == 6);
    }
    SUBCASE("n = 1 cannot shrink further") {
        CHECK(throws_code([] { return gc::remove_vertex(gc::build_graph(1, {}), 0); },
                          gc::errc::too_small));
    }
}

TEST_CASE("catalog graphs have the expected shapes") {
    const auto& ids = gc::catalog_ids();
    CHECK(ids.size() == 10);
    for (const gc::CatalogId id : ids) {
        const gc::Graph g = gc::catalog_graph(id);
        CAPTURE(gc::to_string(id));
        CHECK(g.vertex_count() == 7);
        CHECK(gc::is_connected(g));
    }

    const auto edge_count = [](gc::CatalogId id) {
        return gc::catalog_graph(id).edge_count();
    };
    CHECK(edge_count(gc::CatalogId::star) == 6);
    CHECK(edge_count(gc::CatalogId::wheel) == 12);
    CHECK(edge_count(gc::CatalogId::balanced_tree) == 6);
    CHECK(edge_count(gc::CatalogId::lollipop) == 7);
    CHECK(edge_count(gc::CatalogId::barbell) == 8);
    CHECK(edge_count(gc::CatalogId::bipartite_3_4) == 12);
    CHECK(edge_count(gc::CatalogId::two_story_house) == 9);
    CHECK(edge_count(gc::CatalogId::path) == 6);
    CHECK(edge_count(gc::CatalogId::circle) == 7);
    CHECK(edge_count(gc::CatalogId::complete) == 21);

    const auto sorted_degrees = [](gc::CatalogId id) {
        std::vector<int> d = gc::degrees(gc::catalog_graph(id));
        std::sort(d.begin(), d.end());
        return d;
    };
    CHECK(sorted_degrees(gc::CatalogId::star) == std::vector<int>{1, 1, 1, 1, 1, 1, 6});
    CHECK(sorted_degrees(gc::CatalogId::wheel) == std::vector<int>{3, 3, 3, 3, 3, 3, 6});
    CHECK(sorted_degrees(gc::CatalogId::balanced_tree) == std::vector<int>{1, 1, 1, 1, 2, 3, 3});
    CHECK(sorted_degrees(gc::CatalogId::lollipop) == std::vector<int>{1, 2, 2, 2, 2, 2, 3});
    CHECK(sorted_degrees(gc::CatalogId::barbell) == std::vector<int>{2, 2, 2, 2, 2, 3, 3});
    CHECK(sorted_degrees(gc::CatalogId::bipartite_3_4) == std::vector<int>{3, 3, 3, 3, 4, 4, 4});
    CHECK(sorted_degrees(gc::CatalogId::two_story_house) == std::vector<int>{2, 2, 2, 3, 3, 3, 3});
    CHECK(sorted_degrees(gc::CatalogId::path) == std::vector<int>{1, 1, 2, 2, 2, 2, 2});
    CHECK(sorted_degrees(gc::CatalogId::circle) == std::vector<int>{2, 2, 2, 2, 2, 2, 2});
    CHECK(sorted_degrees(gc::CatalogId::complete) == std::vector<int>{6, 6, 6, 6, 6, 6, 6});
}

TEST_CASE("catalog names round-trip") {
    for (const gc::CatalogId id : gc::catalog_ids()) {
        const auto parsed = gc::catalog_from_string(gc::to_string(id));
        REQUIRE(parsed.has_value());
        CHECK(*parsed == id);
    }
    CHECK_FALSE(gc::catalog_from_string("petersen").has_value());
    CHECK_FALSE(gc::catalog_from_string("").has_value());
}

TEST_CASE("edge-list parsing") {
    SUBCASE("comments and blank lines are ignored") {
        std::istringstream in(
            "# a triangle plus a pendant\n"
            "4\n"
            "\n"
            "0 1\n"
            "1 2   # closing edge\n"
            "0 2\n"
            "2 3\n");
        const gc::Graph g = gc::read_graph(in, gc::GraphFormat::edge_list);
        CHECK(g.vertex_count() == 4);
        CHECK(g.edge_count() == 4);
    }
    SUBCASE("malformed header") {
        std::istringstream in("four\n0 1\n");
        CHECK(throws_code([&] { return gc::read_graph(in, gc::GraphFormat::edge_list); },
                          gc::errc::parse_error));
    }
    SUBCASE("missing endpoint") {
        std::istringstream in("3\n0\n");
        CHECK(throws_code([&] { return gc::read_graph(in, gc::GraphFormat::edge_list); },
                          gc::errc::parse_error));
    }
    SUBCASE("trailing junk on an edge line") {
        std::istringstream in("3\n0 1 2\n");
        CHECK(throws_code([&] { return gc::read_graph(in, gc::GraphFormat::edge_list); },
                          gc::errc::parse_error));
    }
    SUBCASE("structural validation still applies") {
        std::istringstream in("3\n0 1\n1 0\n");
        CHECK(throws_code([&] { return gc::read_graph(in, gc::GraphFormat::edge_list); },
                          gc::errc::duplicate_edge));
    }
    SUBCASE("empty input") {
        std::istringstream in("");
        CHECK(throws_code([&] { return gc::read_graph(in, gc::GraphFormat::edge_list); },
                          gc::errc::parse_error));
    }
}

TEST_CASE("json parsing") {
    SUBCASE("well-formed object") {
        std::istringstream in(R"({"n": 3, "edges": [[0,1],[1,2]]})");
        const gc::Graph g = gc::read_graph(in, gc::GraphFormat::json);
        CHECK(g.vertex_count() == 3);
        CHECK(g.edges() == std::vector<gc::Graph::Edge>{{0, 1}, {1, 2}});
    }
    SUBCASE("malformed json text") {
        std::istringstream in("{\"n\": 3,");
        CHECK(throws_code([&] { return gc::read_graph(in, gc::GraphFormat::json); },
                          gc::errc::parse_error));
    }
    SUBCASE("wrong shapes") {
        for (const char* text : {
                 R"({"edges": []})",                     // missing n
                 R"({"n": 3})",                          // missing edges
                 R"({"n": "3", "edges": []})",           // n not an integer
                 R"({"n": 3, "edges": [[0,1,2]]})",      // edge arity
                 R"({"n": 3, "edges": [[0]]})",          // edge arity
                 R"({"n": 3, "edges": 7})",              // edges not an array
                 R"([1,2,3])",                           // not an object
             }) {
            CAPTURE(text);
            std::istringstream in(text);
            CHECK(throws_code([&] { return gc::read_graph(in, gc::GraphFormat::json); },
                              gc::errc::parse_error));
        }
    }
}

TEST_CASE("serialization round-trips canonically") {
    const gc::Graph g = gc::build_graph(5, {{4, 0}, {1, 3}, {0, 1}});
    for (const gc::GraphFormat format : {gc::GraphFormat::edge_list, gc::GraphFormat::json}) {
        std::ostringstream out;
        gc::write_graph(out, g, format);
        std::istringstream in(out.str());
        const gc::Graph back = gc::read_graph(in, format);
        CHECK(back == g);

        // Canonical form: writing the re-read graph is byte-identical.
        std::ostringstream out2;
        gc::write_graph(out2, back, format);
        CHECK(out.str() == out2.str());
    }
}

TEST_CASE("read_graph_file infers format and reports missing files") {
    CHECK(throws_code([] { return gc::read_graph_file("definitely_missing_9371.txt"); },
                      gc::errc::parse_error));
}
