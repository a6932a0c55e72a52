#include <gtest/gtest.h>

#include "osclab/io.hpp"

using namespace osclab;

TEST(Io, DomainRoundTrip) {
    auto k = ConvexDomain::regular_polygon(6, 2.0, {1, 1});
    auto back = domain_from_json(domain_to_json(k));
    EXPECT_DOUBLE_EQ(back.diameter(), k.diameter());
    auto disk = domain_from_json(domain_to_json(ConvexDomain::disk({1, 2}, 3)));
    EXPECT_TRUE(disk.is_disk());
    EXPECT_DOUBLE_EQ(disk.radius(), 3);
}

TEST(Io, MalformedDomainRejected) {
    EXPECT_THROW(domain_from_json(json::parse(R"({"kind": "ellipse"})")), InvalidDomain);
    EXPECT_THROW(domain_from_json(json::parse(R"({"kind": "polygon", "vertices": [[0, 0], [1]]})")), InvalidDomain);
    EXPECT_THROW(domain_from_json(json::parse(R"({"vertices": []})")), InvalidDomain);
}

TEST(Io, PolynomialRoundTrip) {
    RootPolynomial p({{1, 2}, {-0.5, 0}}, {2, -1});
    auto q = polynomial_from_json(polynomial_to_json(p));
    EXPECT_EQ(q.lead(), p.lead());
    ASSERT_EQ(q.degree(), 2);
    EXPECT_EQ(q.roots()[0], p.roots()[0]);
}

TEST(Io, ReportNonFiniteBecomesString) {
    auto r = make_report("x", std::numeric_limits<double>::infinity(), 1.0);
    auto j = report_to_json(r);
    EXPECT_EQ(j["lhs"], "inf");
    EXPECT_EQ(j["verdict"], "pass");
}

TEST(Io, ManifestHashIgnoresOutputsAndTracksParams) {
    RunManifest a;
    a.command = "search";
    a.params = {{"n", 4}, {"q", "2"}};
    RunManifest b = a;
    b.outputs = {"search.json"};
    EXPECT_EQ(manifest_hash(a), manifest_hash(b));
    EXPECT_EQ(manifest_hash(a).size(), 16u);
    b.params["n"] = 5;
    EXPECT_NE(manifest_hash(a), manifest_hash(b));
    auto c = manifest_from_json(manifest_to_json(a));
    EXPECT_EQ(manifest_hash(c), manifest_hash(a));
}

TEST(Io, ExponentParsing) {
    EXPECT_EQ(parse_q("inf"), q_inf);
    EXPECT_EQ(parse_q("2"), 2.0);
    EXPECT_THROW(parse_q("0.5"), InvalidInput);
    EXPECT_THROW(parse_q("2x"), InvalidInput);
    EXPECT_EQ(format_q(q_inf), "inf");
}

TEST(Io, DecimateKeepsEnds) {
    std::vector<std::pair<long, double>> t;
    for (long i = 0; i < 5000; ++i) t.emplace_back(i, 1.0 / (i + 1));
    auto d = decimate(t, 1000);
    EXPECT_EQ(d.size(), 1000u);
    EXPECT_EQ(d.front(), t.front());
    EXPECT_EQ(d.back(), t.back());
}
