#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "collabnet/errors.hpp"
#include "collabnet/ingest.hpp"
#include "collabnet/report.hpp"
#include "collabnet/serialize.hpp"

using namespace collabnet;

namespace {

#ifndef COLLABNET_FIXTURE_DIR
#define COLLABNET_FIXTURE_DIR "tests/fixtures"
#endif

std::string fixture_path(const std::string& name) {
    return std::string(COLLABNET_FIXTURE_DIR) + "/" + name;
}

std::vector<PublicationRecord> fixture_corpus() {
    std::ifstream in(fixture_path("corpus20.jsonl"));
    REQUIRE(in.good());
    ParseResult parsed = parse_corpus(in, CorpusFormat::jsonl);
    EntityRegistry registry;
    {
        std::ifstream f(fixture_path("aliases.csv"));
        load_aliases_csv(f, registry);
    }
    {
        std::ifstream f(fixture_path("institute_countries.csv"));
        load_institute_countries_csv(f, registry);
    }
    registry.finalize();
    apply_aliases(parsed.records, registry);
    infer_countries(parsed.records, registry);
    return parsed.records;
}

bool close(double a, double b, double tol = 1e-9) { return std::abs(a - b) <= tol; }

}  // namespace

TEST_CASE("top entities of a weighted star") {
    CollabGraph star = CollabGraph::from_edges(
        Level::country, {{"hub", "a", 3}, {"hub", "b", 2}, {"hub", "c", 1}});
    TopEntitiesTable table = top_entities(star, 2);
    REQUIRE(table.rows.size() == 2);
    CHECK(table.rows[0] == RankedEntityRow{1, "hub", 6, 3});
    CHECK(table.rows[1] == RankedEntityRow{2, "a", 3, 1});
}

TEST_CASE("rank ties fall back to collaborator count, then name") {
    // y, x and z all total 4 collaborations with 3, 2 and 1 partners
    CollabGraph g = CollabGraph::from_edges(Level::country,
                                            {{"y", "q", 2}, {"y", "r", 1}, {"y", "s", 1},
                                             {"x", "t", 3}, {"x", "u", 1},
                                             {"z", "zpartner", 4}});
    TopEntitiesTable table = top_entities(g, 4);
    REQUIRE(table.rows.size() == 4);
    CHECK(table.rows[0].entity == "y");
    CHECK(table.rows[1].entity == "x");
    CHECK(table.rows[2].entity == "z");         // beats zpartner by name
    CHECK(table.rows[3].entity == "zpartner");
    CHECK(table.rows[0].collaborations == 4);
    CHECK(table.rows[2].collaborations == 4);

    // name tie-break: two nodes with identical totals and degrees
    CollabGraph pair = CollabGraph::from_edges(Level::country, {{"beta", "alpha", 1}});
    TopEntitiesTable names = top_entities(pair, 2);
    CHECK(names.rows[0].entity == "alpha");
    CHECK(names.rows[1].entity == "beta");
}

TEST_CASE("asking for more rows than nodes returns all rows") {
    CollabGraph g = CollabGraph::from_edges(Level::country, {{"a", "b", 1}});
    CHECK(top_entities(g, 10).rows.size() == 2);
    CHECK_THROWS_AS(top_entities(g, 0), DataError);
}

TEST_CASE("top table is a permutation prefix of the fully sorted entity list") {
    auto records = fixture_corpus();
    CollabGraph g = build_graph(records, {Level::author, {}, WeightPolicy::per_publication});
    TopEntitiesTable top3 = top_entities(g, 3);
    TopEntitiesTable all = top_entities(g, g.node_count());
    REQUIRE(static_cast<int>(all.rows.size()) == g.node_count());
    for (size_t i = 0; i < top3.rows.size(); ++i) CHECK(top3.rows[i] == all.rows[i]);
    for (size_t i = 1; i < all.rows.size(); ++i) {
        CHECK(all.rows[i - 1].collaborations >= all.rows[i].collaborations);
        CHECK(all.rows[i].rank == static_cast<int>(i) + 1);
    }
}

TEST_CASE("strongest links and their concentration") {
    CollabGraph g = CollabGraph::from_edges(
        Level::country, {{"a", "b", 5}, {"b", "c", 3}, {"c", "d", 1}});
    StrongestLinksTable table = strongest_links(g, 2);
    REQUIRE(table.rows.size() == 2);
    CHECK(table.rows[0] == RankedLinkRow{1, "a", "b", 5});
    CHECK(table.rows[1] == RankedLinkRow{2, "b", "c", 3});
    CHECK(close(table.concentration, 8.0 / 9.0));

    // a small share of links can hold most of the weight
    CollabGraph skew = CollabGraph::from_edges(
        Level::country,
        {{"u", "v", 570}, {"u", "w", 100}, {"v", "w", 100}, {"u", "x", 100},
         {"v", "x", 100}, {"w", "x", 106}});
    StrongestLinksTable first = strongest_links(skew, 1);
    CHECK(close(first.concentration, 570.0 / 1076.0));
}

TEST_CASE("fixture strongest links ties break lexicographically") {
    auto records = fixture_corpus();
    CollabGraph g = build_graph(records, {Level::country, {}, WeightPolicy::per_publication});
    StrongestLinksTable table = strongest_links(g, 5);
    REQUIRE(table.rows.size() == 5);
    CHECK(table.rows[0] == RankedLinkRow{1, "Australia", "China", 5});
    CHECK(table.rows[1] == RankedLinkRow{2, "China", "Japan", 2});
    CHECK(table.rows[2] == RankedLinkRow{3, "China", "United States", 2});
    CHECK(table.rows[3] == RankedLinkRow{4, "Germany", "United States", 2});
    CHECK(table.rows[4] == RankedLinkRow{5, "United Kingdom", "United States", 2});
    CHECK(close(table.concentration, 13.0 / 18.0));
}

TEST_CASE("authorship distributions") {
    std::vector<PublicationRecord> records{
        {"P1", "t", 2000, "j", {{"a", {}}, {"b", {}}}, {}},
        {"P2", "t", 2000, "j", {{"a", {}}, {"b", {}}, {"c", {}}}, {}},
    };
    DistributionTable table =
        authorship_distribution(records, DistributionAxis::authors_per_pub);
    REQUIRE(table.rows.size() == 2);
    CHECK(table.rows[0] == DistributionRow{2, 1, 0.5});
    CHECK(table.rows[1] == DistributionRow{3, 1, 0.5});

    // all authors from one institute -> a single count-1 row
    std::vector<PublicationRecord> one{
        {"P", "t", 2000, "j",
         {{"a", {{std::string("I"), std::nullopt}}}, {"b", {{std::string("I"), std::nullopt}}}},
         {}}};
    DistributionTable inst = authorship_distribution(one, DistributionAxis::institutes_per_pub);
    REQUIRE(inst.rows.size() == 1);
    CHECK(inst.rows[0] == DistributionRow{1, 1, 1.0});

    CHECK_THROWS_AS(authorship_distribution({}, DistributionAxis::authors_per_pub), DataError);
}

TEST_CASE("fixture distributions match the verified histograms") {
    auto records = fixture_corpus();
    auto check_hist = [&](DistributionAxis axis, std::vector<DistributionRow> expected) {
        DistributionTable table = authorship_distribution(records, axis);
        REQUIRE(table.rows.size() == expected.size());
        long long total = 0;
        double share = 0.0;
        for (size_t i = 0; i < expected.size(); ++i) {
            CHECK(table.rows[i].count == expected[i].count);
            CHECK(table.rows[i].publications == expected[i].publications);
            CHECK(close(table.rows[i].share, expected[i].share));
            total += table.rows[i].publications;
            share += table.rows[i].share;
        }
        CHECK(total == 20);
        CHECK(close(share, 1.0));
    };
    check_hist(DistributionAxis::authors_per_pub,
               {{1, 1, 0.05}, {2, 14, 0.70}, {3, 5, 0.25}});
    check_hist(DistributionAxis::institutes_per_pub,
               {{1, 3, 0.15}, {2, 13, 0.65}, {3, 4, 0.20}});
    check_hist(DistributionAxis::countries_per_pub,
               {{1, 6, 0.30}, {2, 12, 0.60}, {3, 2, 0.10}});
}

TEST_CASE("a one-edge graph exports two node lines and one weighted edge line") {
    CollabGraph g = CollabGraph::from_edges(Level::country, {{"a", "b", 3}});
    std::ostringstream out;
    export_graph(g, ExportFormat::dot, out);
    std::string dot = out.str();
    CHECK(dot.find("\"a\";") != std::string::npos);
    CHECK(dot.find("\"b\";") != std::string::npos);
    CHECK(dot.find("\"a\" -- \"b\" [weight=3, penwidth=3];") != std::string::npos);
}

TEST_CASE("edge csv export round-trips through the importer") {
    auto records = fixture_corpus();
    CollabGraph g = build_graph(records, {Level::institute, {}, WeightPolicy::per_publication});
    std::ostringstream out;
    export_graph(g, ExportFormat::edge_csv, out);
    std::istringstream in(out.str());
    CollabGraph back = read_edge_csv(in, nullptr, Level::institute);
    CHECK(back.node_names() == g.node_names());
    REQUIRE(back.edge_count() == g.edge_count());
    for (long long i = 0; i < g.edge_count(); ++i) {
        CHECK(back.edges()[static_cast<size_t>(i)].u == g.edges()[static_cast<size_t>(i)].u);
        CHECK(back.edges()[static_cast<size_t>(i)].v == g.edges()[static_cast<size_t>(i)].v);
        CHECK(back.edges()[static_cast<size_t>(i)].weight ==
              g.edges()[static_cast<size_t>(i)].weight);
    }
}

TEST_CASE("graphml export carries node attributes and edge weights") {
    CollabGraph g = CollabGraph::from_edges(
        Level::country, {{"A & B", "C <D>", 2}},
        {{"A & B", {{"region", "Europe"}}}, {"C <D>", {{"region", "Asia"}}}});
    std::ostringstream out;
    export_graph(g, ExportFormat::graphml, out);
    std::string xml = out.str();
    CHECK(xml.find("<node id=\"A &amp; B\">") != std::string::npos);
    CHECK(xml.find("C &lt;D&gt;") != std::string::npos);
    CHECK(xml.find("<data key=\"region\">Europe</data>") != std::string::npos);
    CHECK(xml.find("<data key=\"weight\">2</data>") != std::string::npos);
}

TEST_CASE("table serializers emit fixed headers") {
    CollabGraph g = CollabGraph::from_edges(Level::country, {{"a", "b", 2}});
    CHECK(to_csv(top_entities(g, 1)).starts_with("rank,entity,collaborations,collaborators\n"));
    CHECK(to_csv(strongest_links(g, 1)).starts_with("rank,source,target,weight\n"));

    std::vector<PublicationRecord> records{{"P", "t", 2000, "j", {{"a", {}}, {"b", {}}}, {}}};
    CHECK(to_csv(authorship_distribution(records, DistributionAxis::authors_per_pub))
              .starts_with("count,publications,share\n"));
}
