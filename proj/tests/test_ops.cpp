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
#include <cmath>

#include "triwit/ops.hpp"
#include "triwit/states.hpp"

using namespace triwit;
using Catch::Matchers::WithinAbs;

TEST_CASE("lowering matrix elements") {
  SECTION("boson: <n-1|a|n> = sqrt(n)") {
    const Matrix a = mode_lower(ModeSpec::boson(2));
    CHECK(a(0, 1) == Complex(1.0, 0.0));
    CHECK(a(1, 2) == Complex(std::sqrt(2.0), 0.0));
    CHECK(a(2, 2) == Complex(0.0, 0.0));
  }
  SECTION("spin j=1/2: single unit entry") {
    const Matrix jm = mode_lower(ModeSpec::spin(1));
    REQUIRE(jm.rows() == 2);
    CHECK(jm(0, 1) == Complex(1.0, 0.0));
    CHECK(jm.cwiseAbs().sum() == 1.0);
  }
  SECTION("su11 k=1/2: <0|K-|1> = 1, <1|K-|2> = 2") {
    const Matrix km = mode_lower(ModeSpec::su11(1, 2));
    CHECK(km(0, 1) == Complex(1.0, 0.0));
    CHECK(km(1, 2) == Complex(2.0, 0.0));
  }
  SECTION("raise is the exact adjoint") {
    for (const auto& mode :
         {ModeSpec::boson(4), ModeSpec::spin(3), ModeSpec::su11(2, 5)}) {
      CHECK((mode_raise(mode) - mode_lower(mode).adjoint()).cwiseAbs().maxCoeff() == 0.0);
    }
  }
}

TEST_CASE("number operator is diag(0,1,2,...) for every kind") {
  for (const auto& mode : {ModeSpec::boson(2), ModeSpec::spin(2), ModeSpec::su11(3, 1)}) {
    const Matrix n = mode_number(mode);
    for (int i = 0; i < mode.dim(); ++i) CHECK(n(i, i) == Complex(i, 0.0));
  }
}

TEST_CASE("weight operator") {
  const Matrix jz = mode_weight(ModeSpec::spin(2));  // j = 1
  CHECK(jz(0, 0) == Complex(-1.0, 0.0));
  CHECK(jz(2, 2) == Complex(1.0, 0.0));
  const Matrix kz = mode_weight(ModeSpec::su11(1, 2));  // k = 1/2
  CHECK(kz(0, 0) == Complex(0.5, 0.0));
  CHECK(kz(2, 2) == Complex(2.5, 0.0));
  CHECK_THROWS_AS(mode_weight(ModeSpec::boson(2)), std::invalid_argument);
}

TEST_CASE("quadratures") {
  const ModeSpec mode = ModeSpec::boson(4);
  const auto [x, p] = quadratures(mode);
  SECTION("matrix element <0|x|1> = 1/sqrt(2)") {
    CHECK_THAT(x(0, 1).real(), WithinAbs(1.0 / std::sqrt(2.0), 1e-15));
  }
  SECTION("vacuum variance of x is 1/2 (brute force)") {
    CompositeSpace space({mode});
    const auto vac = basis_state(space, {0});
    const double second = vac.expectation((x * x).eval()).real();
    const double mean = vac.expectation(x).real();
    CHECK_THAT(second - mean * mean, WithinAbs(0.5, 1e-14));
  }
  SECTION("P [x,p] P = i P under a degree-1 guard") {
    CompositeSpace space({mode});
    const Operator xo{space, x}, po{space, p};
    const auto proj = safe_projector(space, 1);
    const Matrix dev = proj.mat * (commutator(xo, po).mat - Complex(0, 1) * Matrix::Identity(5, 5)) *
                       proj.mat;
    CHECK(dev.cwiseAbs().maxCoeff() < 1e-14);
  }
  SECTION("hermitian to zero error") {
    CHECK(hermiticity_error(x) == 0.0);
    CHECK(hermiticity_error(p) == 0.0);
  }
  CHECK_THROWS_AS(quadratures(ModeSpec::spin(2)), std::invalid_argument);
}

TEST_CASE("embed") {
  CompositeSpace space({ModeSpec::boson(1), ModeSpec::boson(1), ModeSpec::boson(1)});
  SECTION("annihilator on mode 3 maps |001> to |000>") {
    const auto a3 = embedded_lower(space, 2);
    Vector v = Vector::Zero(space.dim());
    v(space.index_of({0, 0, 1})) = 1.0;
    const Vector w = a3.mat * v;
    CHECK(w(space.index_of({0, 0, 0})) == Complex(1.0, 0.0));
    CHECK_THAT(w.norm(), WithinAbs(1.0, 1e-15));
  }
  SECTION("number on mode 1 has diagonal 1 at |100>") {
    const auto n1 = embedded_number(space, 0);
    CHECK(n1.mat(space.index_of({1, 0, 0}), space.index_of({1, 0, 0})) == Complex(1.0, 0.0));
    CHECK(n1.mat(space.index_of({0, 1, 1}), space.index_of({0, 1, 1})) == Complex(0.0, 0.0));
  }
  SECTION("identity embeds to identity") {
    const auto id = embed(Matrix::Identity(2, 2), 1, space);
    CHECK((id.mat - Matrix::Identity(8, 8)).cwiseAbs().maxCoeff() == 0.0);
  }
  SECTION("dimension mismatch") {
    CHECK_THROWS_AS(embed(Matrix::Identity(3, 3), 0, space), std::invalid_argument);
    CHECK_THROWS_AS(embed(Matrix::Identity(2, 2), 3, space), std::invalid_argument);
  }
}

TEST_CASE("commutators") {
  CompositeSpace space({ModeSpec::boson(4)});
  const auto a = embedded_lower(space, 0);
  const auto n = embedded_number(space, 0);
  SECTION("[N, a] = -a holds at the ulp level, even at the truncation edge") {
    CHECK((commutator(n, a).mat + a.mat).cwiseAbs().maxCoeff() < 1e-14);
  }
  SECTION("anticommutator(I, X) = 2X and [X, X] = 0") {
    const auto id = identity_op(space);
    CHECK((anticommutator(id, n).mat - 2.0 * n.mat).cwiseAbs().maxCoeff() == 0.0);
    CHECK(commutator(n, n).mat.cwiseAbs().maxCoeff() == 0.0);
  }
  SECTION("space mismatch is an input error") {
    CompositeSpace other({ModeSpec::boson(3)});
    const auto b = embedded_lower(other, 0);
    CHECK_THROWS_AS(commutator(a, b), std::invalid_argument);
    CHECK_THROWS_AS(anticommutator(a, b), std::invalid_argument);
  }
}
