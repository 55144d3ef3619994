#include "doctest.h"

#include "vcbent/perm_expr.hpp"

using namespace vcbent;

TEST_CASE("atoms") {
  CHECK(evaluate(*parse_perm_expr("N")) == gamma("N"));
  CHECK(evaluate(*parse_perm_expr("Z")) == pauli_z(3));
  CHECK(evaluate(*parse_perm_expr("Zc")) == pauli_z(3, true));
  CHECK(evaluate(*parse_perm_expr("Z", 5), 5) == pauli_z(5));
  CHECK_THROWS_AS(evaluate(*parse_perm_expr("N", 5), 5), std::invalid_argument);
}

TEST_CASE("composites") {
  CHECK(evaluate(*parse_perm_expr("kron(N,N)")) == kron(gamma("N"), gamma("N")));
  CHECK(evaluate(*parse_perm_expr("kron( P12 , I )")) == kron(gamma("P12"), gamma("I")));
  CHECK(evaluate(*parse_perm_expr("compose(Zc,P12)")) == compose(pauli_z(3, true), gamma("P12")));
  CHECK(evaluate(*parse_perm_expr("w^2*X")) == scale(gamma("X"), {1, 2}));
  CHECK(evaluate(*parse_perm_expr("w*X")) == scale(gamma("X"), {1, 1}));
  CHECK(evaluate(*parse_perm_expr("-w*X")) == scale(gamma("X"), {-1, 1}));
  CHECK(evaluate(*parse_perm_expr("blockdiag(w^2*Z,I,w*Zc)")) ==
        block_diag({scale(pauli_z(3), {1, 2}), gamma("I"), scale(pauli_z(3, true), {1, 1})}));
  CHECK(evaluate(*parse_perm_expr("diag(w^2,1,w,1,1,1,w,1,w^2)")) ==
        evaluate(*parse_perm_expr("blockdiag(w^2*Z,I,w*Zc)")));
  CHECK(evaluate(*parse_perm_expr("kron(I,I,I)")).size() == 27);
}

TEST_CASE("render is canonical and round-trips") {
  const char* inputs[] = {"kron(w^1*P12, compose(Zc,XT))", "diag(w^2,1,w,1,1,1,w,1,w^2)", "blockdiag(I,I,X)",
                          "-w^0*kron(N,compose(X,XT))", "kron(w*P12,compose(compose(P01,N),Z))"};
  for (const char* text : inputs) {
    const auto e = parse_perm_expr(text);
    const std::string r = render(*e);
    CHECK(r.find(' ') == std::string::npos);
    CHECK(*parse_perm_expr(r) == *e);
    CHECK(render(*parse_perm_expr(r)) == r);
  }
  CHECK(render(*parse_perm_expr("kron(w*P12, Z)")) == "kron(w^1*P12,Z)");
  CHECK(render(*parse_perm_expr("diag(1,-1,w)")) == "diag(1,-1,w^1)");
}

TEST_CASE("parse errors") {
  const char* bad[] = {"", "Q", "kron(N", "kron(N,)", "kron()", "diag(2,1,1)", "N N", "compose(N)x", "kron(N,N"};
  for (const char* text : bad) CHECK_THROWS_AS(parse_perm_expr(text), std::invalid_argument);
}

TEST_CASE("rotation exponents reduce mod p") {
  CHECK(evaluate(*parse_perm_expr("w^3*N")) == gamma("N"));
  CHECK(evaluate(*parse_perm_expr("w^4*N")) == scale(gamma("N"), {1, 1}));
}

TEST_CASE("evaluation errors") {
  CHECK_THROWS(evaluate(*parse_perm_expr("compose(N,kron(N,N))")));
}

TEST_CASE("table route agrees with the dense route") {
  const char* inputs[] = {"kron(N,N)",
                          "kron(P01,X)",
                          "kron(w^1*P12,compose(compose(P01,N),Z))",
                          "compose(kron(X,XT),kron(N,P12))",
                          "diag(w^2,1,w,1,1,1,w,1,w^2)",
                          "blockdiag(w^2*Z,I,w*Zc)",
                          "blockdiag(I,I,P12)",
                          "kron(I,blockdiag(I,X,N))",
                          "w^2*blockdiag(N,X,I)",
                          "kron(X,Z,N)"};
  for (const char* text : inputs) {
    CAPTURE(text);
    const auto e = parse_perm_expr(text);
    CHECK(conjugate_via_table(*e) == conjugate_by_c(evaluate(*e)));
  }
}

TEST_CASE("table route for atoms in other radices") {
  CHECK(std::get<GenPerm>(conjugate_via_table(*parse_perm_expr("Z", 5), 5)) ==
        std::get<GenPerm>(conjugate_by_c(pauli_z(5))));
  CHECK(conjugate_via_table(*parse_perm_expr("kron(Zc,Z)", 4), 4) == conjugate_by_c(kron(pauli_z(4, true), pauli_z(4))));
}
