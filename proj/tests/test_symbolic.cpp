#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sstk/parse.hpp"
#include "sstk/symexpr.hpp"

#include <random>

using namespace sstk;

namespace {

SymExpr E(const std::string& s)
{
    return parse_expr(s);
}

// Small random expressions for the property checks.  Polynomials of degree
// <= 3 in up to three variables with small integer coefficients.
Polynomial random_poly(std::mt19937& rng, const std::vector<std::string>& vars, int max_deg = 3)
{
    std::uniform_int_distribution<int> coef(-4, 4);
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> nterms(1, 4);
    Polynomial p;
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        Monomial m;
        int total = deg(rng);
        for (int d = 0; d < total; ++d) {
            std::uniform_int_distribution<size_t> pick(0, vars.size() - 1);
            m = m.times(Monomial::variable(vars[pick(rng)]));
        }
        int c = coef(rng);
        if (c != 0) p.add_term(m, Rat(c));
    }
    return p;
}

SymExpr random_expr(std::mt19937& rng, const std::vector<std::string>& vars)
{
    Polynomial num = random_poly(rng, vars);
    Polynomial den;
    do {
        den = random_poly(rng, vars, 2);
    } while (den.is_zero());
    if (num.is_zero()) num = Polynomial(Rat(1));
    return SymExpr(num, den);
}

} // namespace

TEST_CASE("monomial ordering is graded lex and deterministic")
{
    Monomial x = Monomial::variable("x");
    Monomial y = Monomial::variable("y");
    CHECK(Monomial::cmp(x.times(x), x) > 0);           // degree first
    CHECK(Monomial::cmp(x, y) > 0);                    // earlier name wins
    CHECK(Monomial::cmp(x.times(y), y.times(x)) == 0); // commutative
}

TEST_CASE("basic arithmetic identities")
{
    SymExpr lhs = E("(x + y)*(x - y)");
    CHECK(lhs.equals(E("x^2 - y^2")));

    SymExpr q = E("(u1^2 - u2^2)/(u1 - u2)");
    CHECK(q.equals(E("u1 + u2")));
    // oracle: multiply back
    CHECK((q * E("u1 - u2")).equals(E("u1^2 - u2^2")));

    // r^(1/2) * r^3 = r^(7/2) on a radial-positive variable
    SymExpr r12 = SymExpr::variable("r", 1);
    SymExpr r3 = SymExpr::variable("r", 6);
    CHECK((r12 * r3).equals(parse_expr("r^(7/2)")));
}

TEST_CASE("division by zero expression is rejected")
{
    CHECK_THROWS_AS(E("x") / SymExpr(), DomainError);
}

TEST_CASE("differentiation")
{
    SymExpr e = E("u1^2/2 - u2^2/2");
    CHECK(e.derivative("u1").equals(E("u1")));

    CHECK(E("2/x^2").derivative("x").equals(E("-4/x^3")));

    // d/dr r^(1/2) = (1/2) r^(-1/2)
    SymExpr d = parse_expr("r^(1/2)").derivative("r");
    CHECK(d.equals(SymExpr(Polynomial(Rat(1, 2)), Polynomial::variable("r", 1))));
}

TEST_CASE("evaluation")
{
    CHECK(E("u1^2 - u2^2").eval({{"u1", 1.0}, {"u2", 1.0}}) == doctest::Approx(0.0));
    CHECK(E("-4/x^3").eval({{"x", 2.0}}) == doctest::Approx(-0.5));
    CHECK(E("-4/x^3").eval_exact({{"x", Rat(2)}}) == Rat(-1, 2));
    CHECK_THROWS_AS(E("1/x").eval({{"x", 0.0}}), PoleError);

    // radical coefficient vs direct floating oracle
    SymExpr c = parse_expr("r^(7/2)") * parse_expr("mu^(1/2)") / parse_expr("m9^(1/2)");
    double r = 0.37, mu = 0.81, m9 = 1.44;
    double direct = std::sqrt(mu * std::pow(r, 7) / m9);
    double got = c.eval({{"r", r}, {"mu", mu}, {"m9", m9}});
    CHECK(std::abs(got - direct) / direct < 1e-12);

    CHECK_THROWS_AS(parse_expr("r^(1/2)").eval({{"r", -1.0}}), DomainError);
}

TEST_CASE("substitution")
{
    // r <- rho^2 in r^(7/2) gives rho^7
    SymExpr r72 = parse_expr("r^(7/2)");
    CHECK(r72.substitute("r", E("rho^2")).equals(E("rho^7")));

    // w <- u^2/2 in 1/w (one-dimensional slice); oracle by evaluation
    SymExpr s = E("1/w").substitute("w", E("u^2/2"));
    CHECK(s.equals(E("2/u^2")));
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(0.5, 2.0);
    for (int k = 0; k < 5; ++k) {
        double uv = u(rng);
        CHECK(s.eval({{"u", uv}}) == doctest::Approx(1.0 / (uv * uv / 2)).epsilon(1e-12));
    }

    // identity substitution
    SymExpr e = E("(x + 1)/(x - 1)");
    CHECK(e.substitute("x", E("x")).equals(e));

    // unsupported fractional exponent
    CHECK_THROWS_AS(r72.substitute("r", E("rho + 1")), SubstitutionError);
}

TEST_CASE("ring axioms at random sample points, exact rational path")
{
    std::mt19937 rng(42);
    std::vector<std::string> vars{"x", "y", "z"};
    std::uniform_int_distribution<int> val(-3, 3);
    for (int iter = 0; iter < 50; ++iter) {
        Polynomial a = random_poly(rng, vars), b = random_poly(rng, vars),
                   c = random_poly(rng, vars);
        SymExpr lhs = SymExpr(a) * (SymExpr(b) + SymExpr(c));
        SymExpr rhs = SymExpr(a) * SymExpr(b) + SymExpr(a) * SymExpr(c);
        std::map<std::string, Rat> env{{"x", Rat(val(rng))}, {"y", Rat(val(rng))},
                                       {"z", Rat(val(rng))}};
        CHECK(lhs.eval_exact(env) == rhs.eval_exact(env));
        CHECK(lhs.equals(rhs));
    }
}

TEST_CASE("derivation property d(ab) = a db + b da")
{
    std::mt19937 rng(11);
    std::vector<std::string> vars{"x", "y"};
    for (int iter = 0; iter < 30; ++iter) {
        SymExpr a = random_expr(rng, vars), b = random_expr(rng, vars);
        SymExpr lhs = (a * b).derivative("x");
        SymExpr rhs = a * b.derivative("x") + b * a.derivative("x");
        CHECK(lhs.equals(rhs));
    }
}

TEST_CASE("substitute then differentiate follows the chain rule")
{
    std::mt19937 rng(13);
    std::vector<std::string> vars{"t"};
    for (int iter = 0; iter < 30; ++iter) {
        Polynomial s = random_poly(rng, vars, 3);
        SymExpr e = random_expr(rng, {"x"});
        SymExpr composed = e.substitute("x", SymExpr(s));
        SymExpr lhs = composed.derivative("t");
        SymExpr rhs = e.derivative("x").substitute("x", SymExpr(s)) *
                      SymExpr(s).derivative("t");
        CHECK(lhs.equals(rhs));
    }
}

TEST_CASE("semantic equality is an equivalence and detects equal quotients")
{
    SymExpr a = E("(x^2 - y^2)/(x - y)");
    SymExpr b = E("x + y");
    SymExpr c = E("(x^2 + 2*x*y + y^2)/(x + y)");
    CHECK(a.equals(a));
    CHECK(a.equals(b));
    CHECK(b.equals(c));
    CHECK(a.equals(c));
    CHECK_FALSE(a.equals(E("x - y")));
}

TEST_CASE("printer and parser round-trip bit-identically")
{
    std::mt19937 rng(23);
    std::vector<std::string> vars{"x", "y", "u1"};
    for (int iter = 0; iter < 100; ++iter) {
        SymExpr e = random_expr(rng, vars);
        std::string s1 = e.str();
        SymExpr back = parse_expr(s1);
        CHECK(back.equals(e));
        CHECK(back.str() == s1);
    }
    for (const char* txt : {"-4/x^3", "r^(7/2)", "(u1 + u2)/(u1 - u2)", "0", "5/3"}) {
        SymExpr e = parse_expr(txt);
        CHECK(parse_expr(e.str()).str() == e.str());
    }
}

TEST_CASE("radical flag validation in the parser")
{
    std::set<std::string> ok{"r"};
    CHECK_NOTHROW(parse_expr("r^(7/2)", &ok));
    CHECK_THROWS_AS(parse_expr("x^(1/2)", &ok), ParseError);
}

TEST_CASE("reduce_radical imposes the defining relation")
{
    // rho = sqrt(x^2+y^2):  rho^2 - x^2 - y^2 reduces to zero.
    Polynomial sq = parse_expr("x^2 + y^2").num();
    SymExpr e = E("rho^2 - x^2 - y^2");
    CHECK(e.reduce_radical("rho", sq).is_zero());
    SymExpr f = E("rho^3");
    CHECK(f.reduce_radical("rho", sq).equals(E("rho*(x^2 + y^2)")));
}

TEST_CASE("polynomial exact square root")
{
    Polynomial p = parse_expr("x^2 + 2*x*y + y^2").num();
    auto s = p.sqrt_exact();
    REQUIRE(s.has_value());
    CHECK((SymExpr(*s).equals(E("x + y")) || SymExpr(*s).equals(E("-x - y"))));
    CHECK_FALSE(parse_expr("x^2 + 1").num().sqrt_exact().has_value());
}
