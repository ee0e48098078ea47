import math
import random
from decimal import Decimal, localcontext
from fractions import Fraction

import pytest

from fusion2.exactnum import (
    IncompatibleFieldError,
    Ordering,
    ParseError,
    QuadraticNumber,
    galois_conjugate,
    parse,
    qn_arith,
    qn_compare,
    render,
    solve_monic_quadratic,
    squarefree_split,
    two_cos_catalog,
)


def qn(a, b=0, D=0):
    return QuadraticNumber(Fraction(a), Fraction(b), D)


GOLDEN = qn(Fraction(1, 2), Fraction(1, 2), 5)          # (1 + sqrt 5)/2
GOLDEN_CONJ = qn(Fraction(1, 2), Fraction(-1, 2), 5)    # (1 - sqrt 5)/2


def decimal_value(x: QuadraticNumber, prec: int = 60) -> Decimal:
    with localcontext() as ctx:
        ctx.prec = prec
        return (
            Decimal(x.a.numerator) / Decimal(x.a.denominator)
            + Decimal(x.b.numerator) / Decimal(x.b.denominator)
            * Decimal(x.D).sqrt()
        )


class TestArithmetic:
    def test_golden_ratio_square(self):
        # (1+sqrt5)^2/4 = (6+2*sqrt5)/4 = 3/2 + 1/2*sqrt5
        assert GOLDEN * GOLDEN == qn(Fraction(3, 2), Fraction(1, 2), 5)
        assert qn_arith(GOLDEN, GOLDEN, "mul") == GOLDEN + 1

    def test_additive_identity(self):
        assert GOLDEN + qn(0) == GOLDEN

    def test_conjugate_difference_is_radical(self):
        assert GOLDEN - GOLDEN_CONJ == qn(0, 1, 5)

    def test_division(self):
        assert GOLDEN / GOLDEN == qn(1)
        # 1/golden = golden - 1
        assert qn(1) / GOLDEN == GOLDEN - 1

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            qn_arith(GOLDEN, qn(0), "div")

    def test_incompatible_fields(self):
        with pytest.raises(IncompatibleFieldError):
            qn(0, 1, 2) + qn(0, 1, 3)
        with pytest.raises(IncompatibleFieldError):
            qn_arith(qn(1, 1, 2), qn(1, 1, 5), "mul")

    def test_canonicalization(self):
        assert qn(0, 1, 8) == qn(0, 2, 2)          # sqrt8 = 2*sqrt2
        assert qn(3, 5, 1) == qn(8)                # sqrt1 folds into a
        assert qn(3, 5, 0) == qn(3)
        assert qn(2, 0, 7).D == 0                  # b = 0 collapses D

    def test_pow(self):
        assert GOLDEN ** 2 == GOLDEN * GOLDEN
        assert GOLDEN ** 0 == qn(1)
        assert GOLDEN ** -1 == GOLDEN.inverse()


class TestComparison:
    def test_golden_exceeds_one(self):
        assert qn_compare(GOLDEN, qn(1)) is Ordering.GT

    def test_reflexive(self):
        assert qn_compare(GOLDEN, GOLDEN) is Ordering.EQ

    def test_obstruction_witness(self):
        # 2 + 2*sqrt2 > 2, the n = 2 certificate comparison
        assert qn_compare(qn(2, 2, 2), qn(2)) is Ordering.GT

    def test_mixed_sign_cases(self):
        assert qn(3, -1, 5).sign() == 1        # 3 > sqrt5
        assert qn(2, -1, 5).sign() == -1       # 2 < sqrt5
        assert qn(-3, 1, 5).sign() == -1
        assert qn(-2, 1, 5).sign() == 1

    def test_total_order_operators(self):
        assert GOLDEN_CONJ < qn(0) < GOLDEN
        assert GOLDEN <= GOLDEN
        assert abs(GOLDEN_CONJ) == GOLDEN - 1


class TestGalois:
    def test_golden_conjugate(self):
        assert galois_conjugate(GOLDEN) == GOLDEN_CONJ

    def test_fixes_rationals(self):
        assert galois_conjugate(qn(Fraction(-7, 3))) == qn(Fraction(-7, 3))

    def test_involution(self):
        assert galois_conjugate(galois_conjugate(GOLDEN)) == GOLDEN


class TestSolveQuadratic:
    def test_golden_equation(self):
        # x^2 = 1 + x
        plus, minus = solve_monic_quadratic(Fraction(-1), Fraction(-1))
        assert plus == GOLDEN and minus == GOLDEN_CONJ

    def test_plus_minus_one(self):
        plus, minus = solve_monic_quadratic(Fraction(0), Fraction(-1))
        assert plus == qn(1) and minus == qn(-1)

    def test_silver_equation(self):
        # x^2 = 1 + 2x; squarefree part of disc 8 is 2
        plus, minus = solve_monic_quadratic(Fraction(-2), Fraction(-1))
        assert plus == qn(1, 1, 2) and minus == qn(1, -1, 2)

    def test_negative_discriminant(self):
        with pytest.raises(ValueError):
            solve_monic_quadratic(Fraction(0), Fraction(1))

    def test_roots_solve_the_equation(self):
        rng = random.Random(7)
        for _ in range(100):
            p = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
            q = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
            if p * p - 4 * q < 0:
                continue
            for root in solve_monic_quadratic(p, q):
                assert root * root + p * root + q == qn(0)


class TestSquarefree:
    @pytest.mark.parametrize("n,expected", [
        (0, (1, 0)), (1, (1, 1)), (8, (2, 2)), (12, (2, 3)),
        (49, (7, 1)), (360, (6, 10)), (9999, (3, 1111)),
    ])
    def test_split(self, n, expected):
        assert squarefree_split(n) == expected

    def test_random_roundtrip(self):
        rng = random.Random(3)
        for _ in range(300):
            n = rng.randint(0, 10**6)
            s, d = squarefree_split(n)
            assert s * s * d == n
            # d squarefree: no prime square divides it
            for p in range(2, 60):
                assert d % (p * p) != 0


class TestCatalog:
    def test_size_and_uniqueness(self):
        catalog = two_cos_catalog()
        pairs = [(t.m, t.k) for t in catalog]
        assert len(pairs) == len(set(pairs)) == 24

    def test_trivial_orders(self):
        by_pair = {(t.m, t.k): t.value for t in two_cos_catalog()}
        assert by_pair[(1, 1)] == qn(2)
        assert by_pair[(2, 1)] == qn(-2)

    def test_tenth_root_value(self):
        by_pair = {(t.m, t.k): t.value for t in two_cos_catalog()}
        assert by_pair[(10, 1)] == GOLDEN
        # (2cos36)^2 = 1 + 2cos36 exactly
        v = by_pair[(10, 1)]
        assert v * v == v + 1

    def test_fifth_root_value(self):
        by_pair = {(t.m, t.k): t.value for t in two_cos_catalog()}
        v = by_pair[(5, 1)]
        assert v == qn(Fraction(-1, 2), Fraction(1, 2), 5)
        assert v * v + v == qn(1)

    def test_all_bounded_by_two(self):
        for t in two_cos_catalog():
            assert qn_compare(t.value, qn(2)) is not Ordering.GT
            assert qn_compare(t.value, qn(-2)) is not Ordering.LT

    def test_chebyshev_primitivity(self):
        # t_j = 2cos(2pi j k/m) via t_{j+1} = v t_j - t_{j-1}: returns to 2
        # exactly at j = m and never before
        two = qn(2)
        for t in two_cos_catalog():
            prev, cur = two, t.value
            for j in range(1, t.m):
                assert cur != two, (t.m, t.k, j)
                prev, cur = cur, t.value * cur - prev
            assert cur == two, (t.m, t.k)

    def test_orders_complete_for_degree_two(self):
        # phi(m) <= 4 is exactly the catalog's order set
        def phi(m):
            return sum(1 for k in range(1, m + 1) if math.gcd(k, m) == 1)

        low_degree = {m for m in range(1, 200) if phi(m) <= 4}
        assert low_degree == {t.m for t in two_cos_catalog()}

    def test_all_coprime_k_listed(self):
        from collections import Counter

        counts = Counter(t.m for t in two_cos_catalog())
        for m in counts:
            expected = 1 if m == 1 else sum(
                1 for k in range(1, m) if math.gcd(k, m) == 1
            )
            assert counts[m] == expected

    def test_values_match_floating_cosine(self):
        for t in two_cos_catalog():
            approx = float(decimal_value(t.value, 30))
            assert abs(approx - 2 * math.cos(2 * math.pi * t.k / t.m)) < 1e-12


class TestTextualForm:
    @pytest.mark.parametrize("value,text", [
        (qn(2), "2"),
        (qn(Fraction(-1, 2)), "-1/2"),
        (GOLDEN, "1/2 + 1/2*sqrt(5)"),
        (GOLDEN_CONJ, "1/2 - 1/2*sqrt(5)"),
        (qn(0, 1, 5), "1*sqrt(5)"),
        (qn(0, Fraction(-3, 2), 2), "-3/2*sqrt(2)"),
        (qn(0), "0"),
    ])
    def test_render(self, value, text):
        assert render(value) == text

    def test_parse_roundtrip_random(self):
        rng = random.Random(11)
        for _ in range(300):
            value = qn(
                Fraction(rng.randint(-40, 40), rng.randint(1, 12)),
                Fraction(rng.randint(-40, 40), rng.randint(1, 12)),
                rng.choice([0, 2, 3, 5, 13]),
            )
            assert parse(render(value)) == value

    def test_parse_bare_sqrt(self):
        assert parse("sqrt(5)") == qn(0, 1, 5)
        assert parse("-sqrt(2)") == qn(0, -1, 2)
        assert parse("2 + sqrt(5)") == qn(2, 1, 5)

    @pytest.mark.parametrize("bad", ["", "foo", "1 +", "sqrt(-3)", "1/0", "2 ** 3"])
    def test_parse_rejects(self, bad):
        with pytest.raises((ParseError, ZeroDivisionError)):
            parse(bad)


def random_qn(rng, D):
    return qn(
        Fraction(rng.randint(-20, 20), rng.randint(1, 10)),
        Fraction(rng.randint(-20, 20), rng.randint(1, 10)),
        D,
    )


class TestFieldProperties:
    def test_field_axioms_random(self):
        rng = random.Random(2024)
        zero, one = qn(0), qn(1)
        for _ in range(1000):
            D = rng.choice([0, 2, 3, 5, 13])
            x, y, z = (random_qn(rng, D) for _ in range(3))
            assert (x + y) + z == x + (y + z)
            assert (x * y) * z == x * (y * z)
            assert x * (y + z) == x * y + x * z
            assert x + (-x) == zero
            assert x * y == y * x
            if not x.is_zero():
                assert x * x.inverse() == one

    def test_order_against_decimal_oracle(self):
        rng = random.Random(99)
        for _ in range(1000):
            D = rng.choice([0, 2, 3, 5, 13])
            x, y = random_qn(rng, D), random_qn(rng, D)
            verdict = qn_compare(x, y)
            diff = decimal_value(x) - decimal_value(y)
            if verdict is Ordering.EQ:
                assert abs(diff) < Decimal("1e-40")
            elif verdict is Ordering.GT:
                assert diff > Decimal("1e-40")
            else:
                assert diff < Decimal("-1e-40")

    def test_conjugation_is_automorphism(self):
        rng = random.Random(5)
        for _ in range(500):
            D = rng.choice([2, 3, 5, 13])
            x, y = random_qn(rng, D), random_qn(rng, D)
            assert galois_conjugate(x * y) == galois_conjugate(x) * galois_conjugate(y)
            assert galois_conjugate(x + y) == galois_conjugate(x) + galois_conjugate(y)
