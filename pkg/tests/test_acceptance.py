"""Acceptance gate: one PASS/FAIL line per criterion.

Run under pytest (``pytest tests/test_acceptance.py -v``) or directly as a
script (``python3 tests/test_acceptance.py``).
"""
import json
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from circuitsplit.cli import main as cli_main
from circuitsplit.core import ExtMatrix, ExtRat, parse_matrix
from circuitsplit.duality import planar_dual
from circuitsplit.electrical import equivalent, resistance_matrix, response_matrix
from circuitsplit.enumeration import (composition_count, count_series, enumerate_cells, lagrange_count,
                                      omega_count, xi_image_count)
from circuitsplit.generate import cactus_corpus, planar_corpus, random_split_system
from circuitsplit.maps import rho, sigma, xi, xi_prime
from circuitsplit.plabic import planarity_obstruction
from circuitsplit.splits import is_kalmanson, metric_of_splits, split_decomposition

from conftest import CACTUS_SEED, DATA, PLANAR_SEED, load_matrix, load_network

CORPUS_SIZE = 120
CACTUS_SIZE = 40
ROUND_TRIPS = 1000


def cli_matrix(*argv):
    """Run the CLI in-process and parse the matrix it prints."""
    import contextlib
    import io
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = cli_main([str(a) for a in argv])
    assert code == 0
    return parse_matrix(json.loads(buf.getvalue()))


def criterion_1():
    w = cli_matrix("resistance", DATA / "nonplanar5_response.json")
    ok = w == load_matrix("nonplanar5_resistance") and w.at(3, 4) == ExtRat("109/48")
    return ok, f"W_34 = {w.at(3, 4)}"


def criterion_2():
    w = cli_matrix("resistance", DATA / "cactus6_response.json")
    w_dual = cli_matrix("resistance", DATA / "cactus6_dual_response.json")
    ok = w == load_matrix("cactus6_resistance") and w_dual == load_matrix("cactus6_dual_resistance")
    zeros = sum(1 for i in range(6) for j in range(6) if i != j and not w[i, j])
    infs = sum(1 for i in range(6) for j in range(6) if w_dual[i, j].is_inf)
    return ok, f"{zeros} off-diagonal zeros and {infs} inf entries reproduced"


def criterion_3():
    m_dual = load_matrix("octagon_response")
    target = xi_prime(m_dual)
    # a planar network with exactly this response; rho of its dual must equal xi_prime
    realization = load_network("octagon_network")
    assert response_matrix(realization) == m_dual
    w = resistance_matrix(planar_dual(realization).relabel(-1))
    kalmanson = is_kalmanson(w).verdict
    system = rho(w)
    part = {tuple(sorted(s)): wt for s, wt in system.parts[0].splits}
    nonzero = [(i, j) for i in range(1, 9) for j in range(i + 1, 9) if m_dual.at(i, j)]
    weights_match = sorted(m_dual.at(i, j).fraction() for i, j in nonzero) == sorted(part.values())
    ok = (kalmanson and system == target and part[(2, 3, 4, 5)] == Fraction(15, 28)
          and part[(2, 3, 4, 5, 6, 7, 8)] == Fraction(11, 28) and weights_match
          and len(part) == len(nonzero) and is_kalmanson(resistance_matrix(m_dual)).verdict)
    return ok, f"{len(nonzero)} nonzero off-diagonal pairs, {len(part)} splits"


def criterion_4():
    nets = planar_corpus(PLANAR_SEED, CORPUS_SIZE)
    bad = [k for k, net in enumerate(nets) if sigma(net) != rho(net)]
    return not bad, f"{len(nets)} networks, mismatches {bad}"


def criterion_5():
    nets = planar_corpus(PLANAR_SEED, CORPUS_SIZE) + cactus_corpus(CACTUS_SEED, CACTUS_SIZE)
    bad = []
    for k, net in enumerate(nets):
        d = planar_dual(net)
        if not (xi(net) == rho(d) and xi_prime(d) == rho(net) and equivalent(planar_dual(d), net.relabel(1))):
            bad.append(k)
    cacti = sum(1 for net in nets if net.is_cactus)
    return not bad, f"{len(nets)} networks ({cacti} cactus), mismatches {bad}"


def criterion_6():
    ns = range(1, 6)
    omega = [omega_count(n) for n in ns]
    omega_base, psi_base, xi_base = count_series("omega", 5), count_series("psi", 5), count_series("xiImage", 5)
    omega_bar = [composition_count(omega_base, n) for n in ns]
    psi = [psi_base[n] for n in ns]
    psi_bar_l = [lagrange_count(psi_base, n) for n in ns]
    psi_bar_c = [composition_count(psi_base, n) for n in ns]
    xi_image = [xi_image_count(n) for n in ns]
    faithful = [composition_count(xi_base, n) for n in ns]
    ok = (omega == [1, 2, 8, 52, 464] and omega_bar == [1, 3, 15, 105, 945] and psi == [1, 2, 8, 64, 1024]
          and psi_bar_l == psi_bar_c == [1, 3, 15, 117, 1565] and xi_image == [1, 2, 8, 49, 373]
          and faithful == [1, 3, 15, 102, 839]
          and faithful == [lagrange_count(xi_base, n) for n in ns])
    return ok, f"faithful {faithful}"


def criterion_7():
    psi_bar = enumerate_cells("psiBar", 4).f_vector
    faithful = enumerate_cells("faithfulBar", 4).f_vector
    psi = enumerate_cells("psi", 4).f_vector
    ok = (psi_bar == (14, 28, 29, 24, 15, 6, 1) and faithful == (14, 28, 28, 20, 9, 2, 1)
          and psi == (1, 6, 15, 20, 15, 6, 1))
    return ok, "Omega_4 f-vector not computed (cell dimensions of Omega_n are out of scope)"


def criterion_8():
    rng = random.Random(PLANAR_SEED)
    bad = 0
    for _ in range(ROUND_TRIPS):
        system = random_split_system(rng, rng.randint(1, 8))
        w = metric_of_splits(system)
        if metric_of_splits(split_decomposition(w, system.order)) != w:
            bad += 1
    return bad == 0, f"{ROUND_TRIPS} matrices, {bad} failures"


def _support_matrix(n, chords):
    rows = [[ExtRat(0)] * n for _ in range(n)]
    for i, j in chords:
        rows[i - 1][j - 1] = rows[j - 1][i - 1] = ExtRat(1)
    for i in range(n):
        rows[i][i] = -sum((rows[i][j] for j in range(n) if j != i), ExtRat(0))
    return ExtMatrix(rows)


OBSTRUCTED_FIXTURES = [
    (4, [(1, 3), (2, 4)]),
    (4, [(1, 3), (2, 4), (1, 2), (2, 3), (3, 4)]),
    (5, [(1, 3), (2, 5)]),
    (6, [(1, 4), (2, 5), (3, 6)]),
]


def criterion_9():
    nets = planar_corpus(PLANAR_SEED, CORPUS_SIZE)
    clean = all(planarity_obstruction(response_matrix(net)).verdict == "NO_OBSTRUCTION" for net in nets)
    fixtures = [load_matrix("crossing_pair_response")] + [_support_matrix(n, c) for n, c in OBSTRUCTED_FIXTURES]
    caught = all(planarity_obstruction(m).verdict == "OBSTRUCTED" for m in fixtures)
    return clean and caught, f"{len(nets)} planar networks, {len(fixtures)} obstructed fixtures"


CRITERIA = [
    (1, "golden 5x5 resistance matrix", criterion_1, 1),
    (2, "cactus response and resistance matrices", criterion_2, 1),
    (3, "map coherence on the 8-label response matrix", criterion_3, 1),
    (4, "sigma equals rho on random planar networks", criterion_4, 120),
    (5, "duality: xi, xi-prime, rho and double dual", criterion_5, 120),
    (6, "enumeration table n = 1..5", criterion_6, 30),
    (7, "f-vectors", criterion_7, 30),
    (8, "split decomposition round trip", criterion_8, 60),
    (9, "planarity obstruction", criterion_9, 10),
]


def evaluate(number):
    _, title, fn, limit = CRITERIA[number - 1]
    start = time.perf_counter()
    ok, detail = fn()
    elapsed = time.perf_counter() - start
    passed = bool(ok) and elapsed < limit
    line = f"{'PASS' if passed else 'FAIL'} criterion {number}: {title} [{elapsed:.2f}s < {limit}s] {detail}"
    return passed, line


def _check(capsys, number):
    passed, line = evaluate(number)
    with capsys.disabled():
        print("\n" + line)
    assert passed, line


def test_criterion_1(capsys):
    _check(capsys, 1)


def test_criterion_2(capsys):
    _check(capsys, 2)


def test_criterion_3(capsys):
    _check(capsys, 3)


def test_criterion_4(capsys):
    _check(capsys, 4)


def test_criterion_5(capsys):
    _check(capsys, 5)


def test_criterion_6(capsys):
    _check(capsys, 6)


def test_criterion_7(capsys):
    _check(capsys, 7)


def test_criterion_8(capsys):
    _check(capsys, 8)


def test_criterion_9(capsys):
    _check(capsys, 9)


if __name__ == "__main__":
    results = [evaluate(k) for k in range(1, len(CRITERIA) + 1)]
    for _, line in results:
        print(line)
    sys.exit(0 if all(p for p, _ in results) else 1)
