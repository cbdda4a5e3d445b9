#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qchan/error.hpp"
#include "qchan/io.hpp"
#include "qchan/tables.hpp"

#include <cmath>
#include <locale>
#include <sstream>

using namespace qchan;

namespace {

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

std::size_t column(const SweepTable& t, std::string_view name) {
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        if (t.columns[i].name == name) return i;
    FAIL("no column " << name);
    return 0;
}

struct CommaDecimal : std::numpunct<char> {
    char do_decimal_point() const override { return ','; }
};

} // namespace

TEST_CASE("number formatting") {
    CHECK(format_number(0.5) == "0.5");
    CHECK(format_number(2.0 / 3.0) == "0.666666667");
    CHECK(format_number(1.0) == "1");
    CHECK(format_number(1e-7) == "1e-07");
    std::ostringstream plain;
    write_csv(fig1(0.1), plain);
    const std::locale old = std::locale::global(std::locale(std::locale::classic(), new CommaDecimal));
    CHECK(format_number(0.25) == "0.25");
    std::ostringstream os;
    os.imbue(std::locale());
    write_csv(fig1(0.1), os);
    CHECK(os.str() == plain.str());
    std::locale::global(old);
}

TEST_CASE("published fixtures load") {
    const auto t1 = published_table1();
    REQUIRE(t1.size() == 16);
    CHECK(t1[0].fw == 0.96);
    CHECK(t1[0].a == 0.962437);
    CHECK(t1[0].p == 0.000006);
    const auto t2 = published_table2();
    REQUIRE(t2.size() == 10);
    CHECK(t2[0].s_lin == 0.593);
    CHECK(t2[0].f_werner == 0.818983);
}

TEST_CASE("CSV layout: title, provenance, header, rows") {
    const SweepTable t = table1();
    std::ostringstream os;
    write_csv(t, os);
    const auto ls = lines(os.str());
    REQUIRE(ls.size() == 3 + 16);
    CHECK(ls[0].rfind("# table1", 0) == 0);
    CHECK(ls[1].rfind("# provenance: f_w=input,a=input,p=input,f_wd=closedform", 0) == 0);
    CHECK(ls[2].rfind("f_w,a,p,f_wd,f_new", 0) == 0);
    CHECK(os.str().find('\r') == std::string::npos);
    for (std::size_t i = 3; i < ls.size(); ++i)
        CHECK(std::count(ls[i].begin(), ls[i].end(), ',') == std::count(ls[2].begin(), ls[2].end(), ','));
    for (const auto& c : t.columns) CHECK(!to_string(c.provenance).empty());
}

TEST_CASE("JSON layout") {
    std::ostringstream os;
    write_json(table2(), os);
    const auto j = nlohmann::json::parse(os.str());
    CHECK(j["rows"].size() == 10);
    CHECK(j["columns"][0]["name"] == "s_lin");
    CHECK(j["columns"][0]["provenance"] == "input");
    CHECK(j["rows"][0]["s_lin"] == 0.593);
}

TEST_CASE("Table I rows") {
    const SweepTable t = table1();
    const auto wd = column(t, "f_wd"), nw = column(t, "f_new"), cw = column(t, "chsh_wd"), cn = column(t, "chsh_new");
    for (const auto& row : t.rows) {
        CHECK(std::get<bool>(row[cw]));
        CHECK_FALSE(std::get<bool>(row[cn]));
    }
    CHECK(std::get<double>(t.rows[0][wd]) == doctest::Approx(0.777775).epsilon(5e-6));
    CHECK(std::get<double>(t.rows[0][nw]) == doctest::Approx(0.777775).epsilon(5e-6));
    for (const auto& r : published_table1()) {
        const auto e = evaluate_table1_row(r);
        CHECK(std::abs(e.f_wd - r.f_wd) < table_tolerance);
        CHECK(std::abs(e.f_new - r.f_new) < table_tolerance);
        CHECK(e.m_wd > 1.0);
        CHECK(e.m_new <= 1.0);
    }
}

TEST_CASE("Table II spot rows") {
    auto find = [](double s, double a) {
        for (const auto& r : published_table2())
            if (r.s_lin == s && r.a == a) return evaluate_table2_row(r);
        FAIL("row missing");
        return Table2Eval{};
    };
    const auto r1 = find(0.593, 0.82);
    CHECK(r1.f_werner == doctest::Approx(0.818983).epsilon(5e-6));
    CHECK(r1.f_mems == doctest::Approx(0.777625).epsilon(5e-6));
    CHECK(r1.f_wd == doctest::Approx(0.769726).epsilon(5e-6));
    CHECK(r1.f_new == doctest::Approx(0.777603).epsilon(5e-6));
    const auto r2 = find(0.66, 0.70);
    CHECK(r2.f_werner == doctest::Approx(0.791548).epsilon(5e-6));
    CHECK(r2.f_mems == doctest::Approx(0.750871).epsilon(5e-6));
    CHECK(r2.f_wd == doctest::Approx(0.775321).epsilon(5e-6));
    CHECK(r2.f_new == doctest::Approx(0.746896).epsilon(5e-6));
    const auto r3 = find(0.64, 0.74);
    CHECK(r3.f_wd > r3.f_mems);
    CHECK(r3.fw == doctest::Approx((1 + 3 * std::sqrt(1 - 0.64)) / 4));
}

TEST_CASE("fig1") {
    const SweepTable t = fig1(0.01);
    CHECK(t.columns.size() == 4);
    const auto& first = t.rows.front();
    const auto& last = t.rows.back();
    CHECK(std::get<double>(first[0]) == 0.0);
    CHECK(std::get<double>(first[1]) == 1.0);
    CHECK(std::get<double>(first[2]) == doctest::Approx(1.0));
    CHECK(std::get<double>(last[0]) == 8.0 / 9.0);
    CHECK(std::get<double>(last[1]) == doctest::Approx(2.0 / 3.0));
    for (std::size_t i = 1; i < t.rows.size(); ++i)
        CHECK(std::get<double>(t.rows[i][1]) > std::get<double>(t.rows[i][2]));
    CHECK_THROWS_AS(fig1(0.0), Error);
    CHECK_THROWS_AS(fig1(0.2), Error);
    CHECK_NOTHROW(fig1(0.1));
}

TEST_CASE("sweep") {
    const SweepTable t = sweep("werner", 0.1);
    CHECK(t.rows.size() == 11);
    const auto dev = column(t, "max_dev");
    for (const auto& row : t.rows) CHECK(std::get<double>(row[dev]) < 1e-9);
    CHECK(sweep("wd", 0.25, 0.8).rows.size() == 3);
    CHECK_THROWS_AS(sweep("werner", 0.0), Error);
    CHECK_THROWS_AS(sweep("werner", 0.6), Error);
    CHECK_THROWS_AS(sweep("ghz", 0.1), Error);
    CHECK_THROWS_AS(sweep("wd", 0.1, 0.5), Error);
    std::ostringstream a, b;
    write_csv(sweep("mems", 0.02), a);
    write_csv(sweep("mems", 0.02), b);
    CHECK(a.str() == b.str());
}
