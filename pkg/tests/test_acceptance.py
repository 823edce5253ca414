"""Acceptance criteria 1-9, one test each; a summary line per criterion is printed."""

import time

from horadam import reference
from horadam.graph import build_graph, degree_histogram
from horadam.hamilton import (
    NoCycle,
    Walk,
    cycle_guaranteed,
    hamiltonian_cycle,
    hamiltonian_path,
    path_endpoints,
    validate_walk,
)
from horadam.oracle import brute_edge_count, brute_median_closed, brute_subcube_count
from horadam.sequences import (
    cube_coefficients,
    cube_number,
    degree_rows,
    degree_table,
    edge_count,
    edge_count_a1_identity,
    edge_count_binomial,
    edge_count_convolution,
    edge_counts,
    horadam_numbers,
    vertex_count,
    vertex_count_closed,
)
from horadam.series import expand_named
from horadam.verify import Grid, run_suite
from horadam.words import Params

AB4 = [(a, b) for a in range(1, 5) for b in range(1, 5)]
AB3 = [(a, b) for a in range(1, 4) for b in range(1, 4)]


def _failures(report):
    return [c for c in report.checks if c.status == "fail"]


def test_criterion_1_sequence_identities(criterion):
    with criterion(1, "vertex counts: recurrence = closed form = S(x), n <= 25"):
        start = time.perf_counter()
        for a, b in AB4:
            s = expand_named("S", a, b, 26).as_list()
            for n in range(26):
                p = Params(a, b, n)
                assert vertex_count(p) == vertex_count_closed(p) == s[n]
        assert time.perf_counter() - start < 1.0
        assert vertex_count(Params(1, 1, 5)) == 8
        assert vertex_count(Params(2, 1, 4)) == 29
        assert vertex_count(Params(1, 2, 5)) == 21


def test_criterion_2_edge_formulas(criterion):
    with criterion(2, "edge counts: recurrence = convolution = binomial = E(x) = brute force"):
        for a, b in AB4:
            e_series = expand_named("E", a, b, 26).as_list()
            s = horadam_numbers(a, b, 25)
            for n in range(26):
                p = Params(a, b, n)
                e = edge_count(p)
                assert e == edge_count_convolution(p) == edge_count_binomial(p) == e_series[n]
                if s[n] <= 2000:
                    assert brute_edge_count(build_graph(p)) == e
        assert edge_count(Params(3, 2, 2)) == 14
        assert edge_count(Params(2, 2, 4)) == 88
        assert edge_count(Params(2, 1, 4)) == 58


def test_criterion_3_edge_identities(criterion):
    with criterion(3, "2e = n s for a = 2 and the a = 1 convolution identity"):
        for b in range(1, 5):
            e2 = edge_counts(2, b, 25)
            s2 = horadam_numbers(2, b, 25)
            e1 = edge_counts(1, b, 25)
            for n in range(26):
                assert 2 * e2[n] == n * s2[n]
                assert edge_count_a1_identity(b, n) == e1[n]


def test_criterion_4_degree_tables(criterion):
    with criterion(4, "degree tables = histograms; reference rows match modulo 2 flagged cells"):
        for a, b in AB4:
            s = horadam_numbers(a, b, 8)
            for n in range(9):
                if s[n] > 20000:
                    continue
                p = Params(a, b, n)
                assert degree_table(p).row() == degree_histogram(build_graph(p))
        mismatched = set()
        for (a, b), table in reference.DEGREE_ROWS.items():
            rows = degree_rows(a, b, 5)
            for n, printed in table.items():
                computed = {k: rows[n].get(k, 0) for k in range(0, len(printed) + 1)}
                shown = {0: 0, **{k + 1: v for k, v in enumerate(printed)}}
                mismatched |= {(a, b, n, k) for k in computed if computed[k] != shown[k]}
        assert mismatched == {(1, 2, 1, 0), (1, 2, 1, 1)}
        report = run_suite("degrees", Grid((1, 2, 3), (2,), 5))
        assert report.passed and "degree-row-a1-b2-n1" in report.flags


def test_criterion_5_cube_coefficients(criterion):
    with criterion(5, "cube coefficients = subcube counts; reference polynomials; cube number"):
        for a, b in AB3:
            for n in range(6):
                p = Params(a, b, n)
                g = build_graph(p)
                c = cube_coefficients(p).as_list()
                for k in range(5):
                    assert brute_subcube_count(g, k) == (c[k] if k < len(c) else 0)
                assert cube_number(p) == sum(c)
        for (a, b), table in reference.CUBE_POLYNOMIALS.items():
            for n, printed in table.items():
                assert cube_coefficients(Params(a, b, n)).as_list() == printed


def test_criterion_6_structure(criterion):
    with criterion(6, "2-coloring, F_(n+1) grids, quotient = Fibonacci cube, sigma induced"):
        grid = Grid((1, 2, 3, 4), (1, 2, 3, 4), 8)
        for suite in ("grids", "quotient", "embedding"):
            report = run_suite(suite, grid)
            assert report.passed, _failures(report)
            assert len(report.checks) > 40


def test_criterion_7_median_closure(criterion):
    with criterion(7, "median closure for |V| <= 300 and median(042,204,110) = 112"):
        checked = 0
        for a, b in AB4:
            s = horadam_numbers(a, b, 20)
            for n in range(21):
                if s[n] <= 300:
                    assert brute_median_closed(build_graph(Params(a, b, n)))
                    checked += 1
        assert checked > 60
        report = run_suite("median", Grid((3,), (2,), 0))
        assert report.passed and report.checks[0].observed == "112"


def test_criterion_8_hamiltonicity(criterion):
    with criterion(8, "Hamiltonian paths with contract endpoints; cycles in guaranteed classes"):
        cycles = 0
        for a, b in AB4:
            s = horadam_numbers(a, b, 7)
            for n in range(1, 8):
                if s[n] > 20000:
                    continue
                p = Params(a, b, n)
                g = build_graph(p)
                walk = hamiltonian_path(p, g)
                assert validate_walk(g, walk)
                ends = (g.vertices[walk.vertices[0]], g.vertices[walk.vertices[-1]])
                contract = path_endpoints(p)
                assert ends == contract.oriented() and set(ends) == {contract.start, contract.end}
                result = hamiltonian_cycle(p, g)
                if cycle_guaranteed(p):
                    assert isinstance(result, Walk) and validate_walk(g, result)
                    cycles += 1
                else:
                    assert isinstance(result, NoCycle)
                    assert (result.status == "impossible") == (s[n] % 2 == 1)
        assert cycles > 20
        for abn, size in [((2, 2, 4), 44), ((1, 3, 5), 40)]:
            result = hamiltonian_cycle(Params(*abn))
            assert isinstance(result, Walk) and len(result) == size


def test_criterion_9_generating_functions(criterion):
    with criterion(9, "Delta(x,y) and A(x,y) expansions match recurrences to x^12"):
        for a, b in AB3:
            rows = degree_rows(a, b, 12)
            delta = expand_named("Delta", a, b, 13, 40)
            cubes = expand_named("A", a, b, 13, 14)
            for n in range(13):
                assert delta.row(n) == [rows[n].get(k, 0) for k in range(40)]
                c = cube_coefficients(Params(a, b, n)).as_list()
                assert cubes.row(n) == c + [0] * (14 - len(c))
