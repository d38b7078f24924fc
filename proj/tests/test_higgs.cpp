#include "doctest.h"

#include "pms/higgs.hpp"

#include <random>

using namespace pms;

namespace {

HComplex reduced_e() { return reduce(build_complex(uniformizing())); }
HComplex reduced_s2() { return reduce(build_complex(sym_power(uniformizing(), 2))); }
HComplex reduced_end0() { return reduce(build_complex(end0(uniformizing()))); }

bool all_differentials_zero(const HComplex& c) {
    for (int k = 0; k < 2; ++k)
        for (const auto& row : c.d[k])
            for (Label l : row)
                if (l != Label::Zero) return false;
    return true;
}

}  // namespace

TEST_CASE("monomial serialization with the wedge folding") {
    CHECK(Monomial(0, 0).serialize() == "1");
    CHECK(Monomial(1, 0).serialize() == "W");
    CHECK(Monomial(0, -1).serialize() == "L^-1");
    CHECK(Monomial(1, -1).serialize() == "W*L^-1");
    CHECK(Monomial(2, -2).serialize() == "S2W*L^-2");
    CHECK(Monomial(0, 1).serialize() == "L^1");
    CHECK(Monomial::with_wedge(1, 1, -1).serialize() == "W*L^2");
    CHECK(Monomial::with_wedge(0, 1, -2).serialize() == "L^1");
    CHECK(Monomial(3, -3).serialize_twisted() == "S3W(-D)*L^-3");
    CHECK(Monomial(0, -1).serialize_twisted() == "L^-1");
}

TEST_CASE("uniformizing bundle shape") {
    RealizedHiggs e = uniformizing();
    CHECK(e.rank() == 3);
    CHECK(e.piece_ranks() == std::vector<int>{2, 1});
    CHECK(e.pieces[0].m == Monomial(1, -1));
    CHECK(e.pieces[1].m == Monomial(0, -1));
    CHECK(sym_power(e, 1) == e);
    CHECK(sym_power(e, 2).rank() == 6);
    CHECK(sym_power(e, 3).rank() == 10);
    CHECK(end0(e).rank() == 8);
    CHECK_THROWS_AS((void)sym_power(e, 0), std::invalid_argument);
}

TEST_CASE("built complexes have the expected dimensions and Euler number 0") {
    HComplex ce = build_complex(uniformizing());
    CHECK(ce.degree_dims() == std::array<int, 3>{3, 6, 3});
    CHECK(ce.euler() == 0);
    HComplex cs = build_complex(sym_power(uniformizing(), 2));
    CHECK(cs.degree_dims() == std::array<int, 3>{6, 12, 6});
    CHECK(cs.euler() == 0);
    HComplex cn = build_complex(end0(uniformizing()));
    CHECK(cn.degree_dims() == std::array<int, 3>{8, 16, 8});
    CHECK(cn.euler() == 0);
}

TEST_CASE("reduction of the uniformizing complex: bit-exact monomial lists") {
    HComplex r = reduced_e();
    auto s = r.serialize();
    CHECK(s[0] == std::vector<std::string>{"L^-1"});
    CHECK(s[1] == std::vector<std::string>{"S2W*L^-1"});
    CHECK(s[2] == std::vector<std::string>{"W*L^2"});
    CHECK(r.degree_dims() == std::array<int, 3>{1, 3, 2});
    CHECK(all_differentials_zero(r));
    CHECK(r.euler() == 0);
}

TEST_CASE("reduction of the symmetric square: bit-exact monomial lists") {
    HComplex r = reduced_s2();
    auto s = r.serialize();
    CHECK(s[0] == std::vector<std::string>{"L^-2"});
    CHECK(s[1] == std::vector<std::string>{"S3W*L^-2"});
    CHECK(s[2] == std::vector<std::string>{"S2W*L^1"});
    CHECK(r.degree_dims() == std::array<int, 3>{1, 4, 3});
    CHECK(all_differentials_zero(r));
    CHECK(r.euler() == 0);
}

TEST_CASE("reduction of the trace-free endomorphisms: bit-exact monomial lists") {
    HComplex r = reduced_end0();
    auto s = r.serialize();
    CHECK(s[0] == std::vector<std::string>{"W*L^-3"});
    CHECK(s[1] == std::vector<std::string>{"S3W*L^-3"});
    CHECK(s[2] == std::vector<std::string>{"W*L^3"});
    CHECK(r.degree_dims() == std::array<int, 3>{2, 4, 2});
    CHECK(all_differentials_zero(r));
    CHECK(r.euler() == 0);
}

TEST_CASE("reduce preserves the Euler characteristic and is idempotent") {
    for (int n = 1; n <= 3; ++n) {
        HComplex c = build_complex(sym_power(uniformizing(), n));
        HComplex r = reduce(c);
        CHECK(c.euler() == r.euler());
        HComplex rr = reduce(r);
        CHECK(rr.serialize() == r.serialize());
    }
}

TEST_CASE("synthetic complexes: contraction behavior at label level") {
    Monomial m(0, 1), other(0, 5);

    SUBCASE("a lone iso contracts away") {
        HComplex c;
        c.obj[0] = {m};
        c.obj[1] = {m, other};
        c.obj[2] = {};
        c.d[0] = {{Label::Iso, Label::Zero}};
        c.d[1] = {{}, {}};
        HComplex r = reduce(c);
        CHECK(r.obj[0].empty());
        REQUIRE(r.obj[1].size() == 1);
        CHECK(r.obj[1][0] == other);
    }

    SUBCASE("two disjoint isos cancel everything") {
        HComplex c;
        c.obj[0] = {m, m};
        c.obj[1] = {m, m};
        c.obj[2] = {};
        c.d[0] = {{Label::Iso, Label::Zero}, {Label::Zero, Label::Iso}};
        c.d[1] = {{}, {}};
        HComplex r = reduce(c);
        CHECK(r.obj[0].empty());
        CHECK(r.obj[1].empty());
    }

    SUBCASE("a fully nonzero square of isos admits no legal contraction") {
        HComplex c;
        c.obj[0] = {m, m};
        c.obj[1] = {m, m};
        c.obj[2] = {};
        c.d[0] = {{Label::Iso, Label::Iso}, {Label::Iso, Label::Iso}};
        c.d[1] = {{}, {}};
        CHECK_THROWS_AS((void)reduce(c), NonzeroCorrection);
    }

    SUBCASE("a leftover canonical differential is rejected") {
        HComplex c;
        c.obj[0] = {m};
        c.obj[1] = {other};
        c.obj[2] = {};
        c.d[0] = {{Label::Canonical}};
        c.d[1] = {{}};
        CHECK_THROWS_AS((void)reduce(c), HiggsError);
    }
}

TEST_CASE("hypercohomology terms of the reduced uniformizing complex") {
    auto terms = hypercoh(reduced_e(), default_axioms());
    /* 3 monomials x 3 cohomological degrees each. */
    CHECK(terms.size() == 9);
    int resolved = 0;
    for (const auto& t : terms) {
        if (t.group == "h0(L^-1)" || t.group == "h1(L^-1)") {
            REQUIRE(t.dim.has_value());
            CHECK(t.dim.value() == 0);
            CHECK(t.axiom_id == "nef_big_dual");
            ++resolved;
        }
        if (t.group == "h0(S2W*L^-1)") CHECK_FALSE(t.dim.has_value());
    }
    CHECK(resolved == 2);
    CHECK_THROWS_AS((void)hypercoh(build_complex(uniformizing()), default_axioms()),
                    std::invalid_argument);
}

TEST_CASE("l2 refinement of the uniformizing complex vanishes") {
    AxiomRegistry reg = default_axioms();
    L2Outcome out = l2_refine(reduced_e(), chase_certificate_s2w(reg), reg);
    CHECK(out.verdict == L2Verdict::Vanishes);
    CHECK(out.axioms_used == std::vector<std::string>{"nef_big_dual", "bogomolov_sommese"});
    REQUIRE(out.located.size() == 1);
    CHECK(out.located[0].complex_degree == 1);
    CHECK(out.located[0].group == "S2W*L^-1");
    CHECK(out.located[0].conclusion == "h0_L2(S2W*L^-1) <= 0");
}

TEST_CASE("l2 refinement of the symmetric square is bounded by three") {
    AxiomRegistry reg = default_axioms();
    L2Outcome out = l2_refine(reduced_s2(), chase_certificate_s3w(reg), reg);
    CHECK(out.verdict == L2Verdict::BoundedBy);
    CHECK(out.bound == 3);
    CHECK(out.axioms_used == std::vector<std::string>{"nef_big_dual", "miyaoka_s2"});
    REQUIRE(out.located.size() == 1);
    CHECK(out.located[0].conclusion == "h0_L2(S3W*L^-2) <= 3");
}

TEST_CASE("l2 refinement of the endomorphism complex vanishes with a located twist") {
    AxiomRegistry reg = default_axioms();
    L2Outcome out = l2_refine(reduced_end0(), global_h1_certificate(reg, "End0V1"), reg);
    CHECK(out.verdict == L2Verdict::Vanishes);
    CHECK(out.axioms_used == std::vector<std::string>{"li_schwermer"});
    bool located_s3 = false, located_w = false;
    for (const auto& lt : out.located) {
        if (lt.group == "S3W*L^-3" && lt.complex_degree == 1) {
            located_s3 = true;
            CHECK(lt.twisted_form == "S3W(-D)*L^-3");
            CHECK(lt.twist_note.find("not derived") != std::string::npos);
            CHECK(lt.conclusion == "h0_L2(S3W*L^-3) = 0");
        }
        if (lt.group == "W*L^-3" && lt.complex_degree == 0) {
            located_w = true;
            CHECK(lt.twisted_form.empty());
            CHECK(lt.conclusion == "h1_L2(W*L^-3) = 0");
        }
    }
    CHECK(located_s3);
    CHECK(located_w);
}

TEST_CASE("missing axioms degrade the refinement to Unknown") {
    AxiomRegistry empty;
    L2Outcome bad_cert = l2_refine(reduced_e(), chase_certificate_s2w(empty), empty);
    CHECK(bad_cert.verdict == L2Verdict::Unknown);
    REQUIRE_FALSE(bad_cert.notes.empty());
    CHECK(bad_cert.notes[0].find("certificate invalid") != std::string::npos);

    /* Valid chase certificate but no line-bundle axiom: the L^-1 term
     * stays unresolved. */
    AxiomRegistry only_bs;
    only_bs.add({"bogomolov_sommese", "W*L^-1", 0, std::nullopt, "subsheaf vanishing"});
    L2Outcome partial = l2_refine(reduced_e(), chase_certificate_s2w(only_bs), only_bs);
    CHECK(partial.verdict == L2Verdict::Unknown);
    bool noted = false;
    for (const auto& n : partial.notes) noted = noted || n.find("h1(L^-1)") != std::string::npos;
    CHECK(noted);
}

TEST_CASE("certificate that does not match any term leaves it unresolved") {
    AxiomRegistry reg = default_axioms();
    /* The s3w certificate targets S3W*L^-2 which does not occur in the
     * uniformizing complex, so its S2W term stays symbolic. */
    L2Outcome out = l2_refine(reduced_e(), chase_certificate_s3w(reg), reg);
    CHECK(out.verdict == L2Verdict::Unknown);
}
