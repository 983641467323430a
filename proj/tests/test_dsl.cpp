// Copyright 2026 The triwit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch2/catch_amalgamated.hpp>
#include <fstream>
#include <sstream>

#include "triwit/dsl.hpp"
#include "triwit/families.hpp"

using namespace triwit;
using dsl::ExprNode;
using Catch::Matchers::WithinAbs;

namespace {

struct CorpusEntry {
  std::string space_tag, name, text;
};

std::vector<CorpusEntry> load_corpus() {
  std::ifstream in(TRIWIT_SOURCE_DIR "/data/paper_ops.txt");
  REQUIRE(in);
  std::vector<CorpusEntry> entries;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    CorpusEntry e;
    ss >> e.space_tag >> e.name;
    std::string eq;
    ss >> eq;
    REQUIRE(eq == "=");
    std::getline(ss, e.text);
    entries.push_back(e);
  }
  return entries;
}

CompositeSpace space_for_tag(const std::string& tag) {
  if (tag == "boson3") return CompositeSpace(std::vector<ModeSpec>(3, ModeSpec::boson(4)));
  if (tag == "su2j1") return CompositeSpace(std::vector<ModeSpec>(3, ModeSpec::spin(2)));
  if (tag == "su11k12")
    return CompositeSpace(std::vector<ModeSpec>(3, ModeSpec::su11(1, 5)));
  FAIL("unknown corpus space tag " + tag);
  throw std::logic_error("unreachable");
}

Matrix builder_matrix(const std::string& tag, const std::string& name,
                      const CompositeSpace& space) {
  if (tag == "boson3") {
    if (name[0] == 'L') {
      const auto fam = boson_l_family(space, 2);
      return name == "L_x" ? fam.x.mat : name == "L_y" ? fam.y.mat : fam.z.mat;
    }
    const auto fam = boson_h_family(space);
    return name == "H_x" ? fam.x.mat : name == "H_y" ? fam.y.mat : fam.z.mat;
  }
  if (tag == "su2j1") {
    const auto fam = su2_families(space);
    const auto& triple = (name[0] == 'A') ? fam.a : fam.b;
    return name.ends_with("_x") ? triple.x.mat : name.ends_with("_y") ? triple.y.mat
                                                                      : triple.z.mat;
  }
  const auto fam = su11_families(space);
  const auto& triple = (name[0] == 'C') ? fam.c : fam.d;
  return name.ends_with("_x") ? triple.x.mat : name.ends_with("_y") ? triple.y.mat
                                                                    : triple.z.mat;
}

}  // namespace

TEST_CASE("parse structure") {
  SECTION("the cross-ladder expression") {
    const auto e = dsl::parse("1/2*(ad[1]*ad[2]*a[3] + a[1]*a[2]*ad[3])");
    REQUIRE(e->kind == ExprNode::Kind::Product);
    REQUIRE(e->children.size() == 2);
    CHECK(e->children[0]->kind == ExprNode::Kind::Scalar);
    CHECK(e->children[0]->scalar == Complex(0.5, 0.0));
    CHECK(e->children[1]->kind == ExprNode::Kind::Sum);
  }
  SECTION("commutator node") {
    const auto e = dsl::parse("comm(x[1], p[1])");
    CHECK(e->kind == ExprNode::Kind::Comm);
    REQUIRE(e->children.size() == 2);
    CHECK(e->children[0]->prim_name == "x");
  }
  SECTION("pt node with mode list") {
    const auto e = dsl::parse("pt(ad[1]*a[3]; 3)");
    REQUIRE(e->kind == ExprNode::Kind::Pt);
    CHECK(e->pt_modes == std::vector<int>{3});
    const auto e2 = dsl::parse("pt(n[1]; 1, 3)");
    CHECK(e2->pt_modes == std::vector<int>{1, 3});
  }
  SECTION("scalar folding keeps scalar products as one node") {
    const auto e = dsl::parse("-1/2*i");
    REQUIRE(e->kind == ExprNode::Kind::Scalar);
    CHECK(e->scalar == Complex(0.0, -0.5));
  }
}

TEST_CASE("parse errors carry positions") {
  SECTION("unknown primitive") {
    try {
      dsl::parse("q[1]");
      FAIL("expected a parse error");
    } catch (const dsl::ParseError& e) {
      CHECK(e.line() == 1);
      CHECK(e.column() >= 1);
      CHECK(std::string(e.what()).find("unknown") != std::string::npos);
    }
  }
  SECTION("syntax error") {
    CHECK_THROWS_AS(dsl::parse("n[1] + "), dsl::ParseError);
    CHECK_THROWS_AS(dsl::parse("(n[1]"), dsl::ParseError);
    CHECK_THROWS_AS(dsl::parse("n[1] n[2]"), dsl::ParseError);
  }
  SECTION("malformed rational") {
    CHECK_THROWS_AS(dsl::parse("1/0"), dsl::ParseError);
  }
  SECTION("pt needs a nonempty mode list") {
    CHECK_THROWS_AS(dsl::parse("pt(n[1];)"), dsl::ParseError);
  }
}

TEST_CASE("printer round trip") {
  SECTION("scalar i prints as i") {
    CHECK(dsl::print(ExprNode::make_scalar(Complex(0, 1))) == "i");
    CHECK(dsl::print(ExprNode::make_scalar(Complex(0, -1))) == "-i");
  }
  SECTION("nested pt prints its mode list") {
    const auto e = dsl::parse("pt(n[1]*n[3]; 1, 3)");
    CHECK(dsl::print(e) == "pt(n[1]*n[3]; 1,3)");
  }
  SECTION("round trip on a corpus of expressions") {
    std::vector<std::string> texts = {
        "comm(x[1], p[1])",
        "acomm(a[1], ad[1])",
        "dag(a[1]*a[2])",
        "pt(ad[1]*a[3]; 3)",
        "2*i*n[1] - 3/4*n[2]",
        "-(n[1]+1)*(n[2]+2)",
        "1.5e-3*x[1] + p[2]*p[2]",
        "(n[1] - n[2]) - (n[2] - n[3])",
    };
    for (const auto& entry : load_corpus()) texts.push_back(entry.text);
    for (const auto& text : texts) {
      CAPTURE(text);
      const auto e = dsl::parse(text);
      const auto roundtrip = dsl::parse(dsl::print(e));
      CHECK(dsl::structurally_equal(*e, *roundtrip));
    }
  }
}

TEST_CASE("lowering semantics") {
  CompositeSpace space(std::vector<ModeSpec>(3, ModeSpec::boson(3)));
  SECTION("pt of a diagonal is itself") {
    const auto a = dsl::lower_text("pt(n[1]; 1)", space);
    const auto b = dsl::lower_text("n[1]", space);
    CHECK((a.mat - b.mat).cwiseAbs().maxCoeff() == 0.0);
  }
  SECTION("guarded commutator of x and p is i") {
    CompositeSpace one({ModeSpec::boson(4)});
    const auto comm = dsl::lower_text("comm(x[1], p[1])", one);
    const auto p = safe_projector(one, 1);
    const Matrix dev =
        p.mat * (comm.mat - Complex(0, 1) * Matrix::Identity(5, 5)) * p.mat;
    CHECK(dev.cwiseAbs().maxCoeff() < 1e-14);
  }
  SECTION("lowering is a homomorphism") {
    const auto sum = dsl::lower_text("n[1] + 2*n[2]", space);
    const Matrix expected =
        dsl::lower_text("n[1]", space).mat + 2.0 * dsl::lower_text("n[2]", space).mat;
    CHECK((sum.mat - expected).cwiseAbs().maxCoeff() == 0.0);

    const auto dag = dsl::lower_text("dag(a[1]*a[2])", space);
    CHECK((dag.mat - dsl::lower_text("a[1]*a[2]", space).mat.adjoint().eval())
              .cwiseAbs()
              .maxCoeff() == 0.0);
  }
  SECTION("kind mismatch and bad indices are input errors") {
    CHECK_THROWS_AS(dsl::lower_text("jp[1]", space), std::invalid_argument);
    CHECK_THROWS_AS(dsl::lower_text("a[4]", space), std::invalid_argument);
    CHECK_THROWS_AS(dsl::lower_text("pt(n[1]; 4)", space), std::invalid_argument);
  }
  SECTION("scalars lower to scaled identities") {
    const auto s = dsl::lower_text("2 - i", space);
    const Matrix expected = Complex(2.0, -1.0) * Matrix::Identity(space.dim(), space.dim());
    CHECK((s.mat - expected).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("corpus lowers to the builder matrices exactly") {
  for (const auto& entry : load_corpus()) {
    CAPTURE(entry.space_tag, entry.name);
    const auto space = space_for_tag(entry.space_tag);
    const auto lowered = dsl::lower_text(entry.text, space);
    const Matrix expected = builder_matrix(entry.space_tag, entry.name, space);
    CHECK((lowered.mat - expected).cwiseAbs().maxCoeff() == 0.0);
  }
}
