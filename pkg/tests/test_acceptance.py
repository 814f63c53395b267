"""Acceptance criteria 1-9.

Each test records one PASS/FAIL line; the lines are printed in the pytest
terminal summary, or directly when this file is run as a script.
"""

import itertools
import random
import sys
import time

import pytest

from crosspath.exact import Len
from crosspath.escaliers import predict_escalier
from crosspath.formats import plan_to_record
from crosspath.grid import (
    Cell,
    EscalierParams,
    Line,
    configuration,
    gen_escalier,
    gen_line,
    is_4_connected,
    normalize,
)
from crosspath.lines import admissible, generate_model
from crosspath.oracle import (
    Classification,
    check_lemma_escalier,
    classify,
    enumerate_witnesses,
    find_witness,
)
from crosspath.plan import Witness, checkerboard_alternates, extract_schema, glue, thread_length, validate
from crosspath.stitcher import (
    stitch_all_components,
    stitch_component_restricted,
    stitch_iterative,
    stitch_recursive,
)

from conftest import method_one_plan, method_two_plan, random_configs, random_glue_pair

RESULTS: dict[str, str] = {}

STRONG = Classification.STRONGLY_BRODABLE
ONLY = Classification.BRODABLE_ONLY

# criterion 2/3 suite: 300 seeded configurations of 1..40 cells
SUITE = random_configs(300, 40, seed=2024)
ALL_STARTS = SUITE[:30]


def record(label: str, ok: bool, detail: str) -> None:
    RESULTS[label] = f"{label}: {'PASS' if ok else 'FAIL'} ({detail})"
    print(RESULTS[label])


def test_criterion_1_line_models():
    t0 = time.perf_counter()
    bad = checked = 0
    for n in range(1, 9):
        line = Line(0, 0, n - 1)
        for model, k in admissible(line):
            r = validate(generate_model(model, line, k), line.cells())
            checked += 1
            if not (r.witness is Witness.CLOSED_MINIMAL and r.back_len == Len(2 * n, 0)
                    and thread_length(r) == Len(2 * n, 2 * n)):
                bad += 1
    elapsed = time.perf_counter() - t0
    ok = bad == 0 and elapsed < 1.0
    record("criterion 1", ok, f"{checked} plans, {bad} wrong, {elapsed:.2f}s < 1s")
    assert ok


def test_criterion_2_connected_patterns():
    t0 = time.perf_counter()
    bad = runs = 0
    for cells in SUITE:
        assert is_4_connected(cells)
        runs += 1
        if validate(stitch_recursive(cells), cells).witness is not Witness.CLOSED_MINIMAL:
            bad += 1
    for cells in ALL_STARTS:
        for start in cells:
            runs += 1
            if validate(stitch_recursive(cells, start), cells).witness is not Witness.CLOSED_MINIMAL:
                bad += 1
    elapsed = time.perf_counter() - t0
    ok = bad == 0 and elapsed < 10.0
    sizes = [len(c) for c in SUITE]
    record("criterion 2", ok, f"{runs} stitchings of {min(sizes)}-{max(sizes)} cells, "
                              f"{bad} not closed-minimal, {elapsed:.2f}s < 10s")
    assert ok


def test_criterion_3_engine_equivalence():
    cases = [(c, None) for c in SUITE] + [(c, s) for c in ALL_STARTS for s in sorted(c)]
    differ = sum(
        plan_to_record(stitch_recursive(c, s)) != plan_to_record(stitch_iterative(c, s))
        for c, s in cases
    )
    ok = differ == 0
    record("criterion 3", ok, f"{len(cases)} record pairs, {differ} differ")
    assert ok


def test_criterion_4_simple_staircases():
    lines, ok = [], True
    for n in range(2, 8):
        t0 = time.perf_counter()
        got = classify(gen_escalier(EscalierParams.simple(n)))
        elapsed = time.perf_counter() - t0
        want = STRONG if n == 2 else ONLY
        ok &= got is want and elapsed < 10.0
        lines.append(f"E_{n}={got.value}/{elapsed:.2f}s")
    record("criterion 4", ok, ", ".join(lines))
    assert ok


def test_criterion_5_landing_staircases():
    t0 = time.perf_counter()
    mismatches, count, seen = [], 0, set()
    for g, p, d in itertools.product(range(1, 7), range(2, 7), range(1, 7)):
        if g + p + d > 8:
            continue
        params = EscalierParams.palier(g, p, d)
        got, want = classify(gen_escalier(params)), predict_escalier(params)
        count += 1
        seen.add(got)
        if got is not want:
            mismatches.append(f"{params}: {got.value} vs {want.value}")
    elapsed = time.perf_counter() - t0
    ok = not mismatches and elapsed < 300 and len(seen) == 3
    record("criterion 5", ok, f"{count} (g,p,d), {len(mismatches)} mismatches, "
                              f"{len(seen)} classes seen, {elapsed:.2f}s < 300s")
    assert ok, mismatches


def test_criterion_6_implication_diagram():
    connected = [c for c in SUITE if len(c) <= 8] + random_configs(60, 8, seed=66)
    a = all(classify(c) is STRONG for c in connected)
    b = classify(configuration({(0, 0), (2, 0)})) is STRONG
    tested = connected + [configuration({(0, 0), (2, 0)}), configuration({(0, 0), (1, 1)})]
    tested += [gen_escalier(EscalierParams.simple(n)) for n in range(2, 8)]
    tested += [gen_escalier(EscalierParams.palier(g, p, d))
               for g, p, d in itertools.product(range(1, 4), range(2, 5), range(1, 4)) if g + p + d <= 8]
    c = all(find_witness(x, closed=False) is not None
            for x in tested if find_witness(x, closed=True) is not None)
    ok = a and b and c
    record("criterion 6", ok, f"(a) {len(connected)} connected all strong: {a}; "
                              f"(b) gap pair strong: {b}; (c) strong implies open on {len(tested)}: {c}")
    assert ok


CORNER_PAIR = configuration({(0, 0), (1, 1)})


def test_criterion_7a_unrestricted_corner_pair():
    plan = stitch_recursive(CORNER_PAIR, (0, 0))
    ok = plan.cells() == CORNER_PAIR
    record("criterion 7a", ok, f"unrestricted from (0,0) stitched {len(plan.cells())} of 2 cells")
    assert ok


def test_criterion_7b_restricted_corner_pair():
    plan = stitch_component_restricted(CORNER_PAIR, (0, 0))
    ok = plan.cells() == {Cell(0, 0)} and validate(plan, plan.cells()).witness is Witness.CLOSED_MINIMAL
    record("criterion 7b", ok, f"restricted from (0,0) stitched {sorted(plan.cells())}")
    assert ok


def test_criterion_7c_per_component():
    plans = stitch_all_components(CORNER_PAIR)
    ok = len(plans) == 2 and all(
        validate(p, p.cells()).witness is Witness.CLOSED_MINIMAL for p in plans)
    record("criterion 7c", ok, f"{len(plans)} plans, all closed-minimal: {ok}")
    assert ok


def _window_corpus():
    window = [Cell(x, y) for x in range(3) for y in range(3)]
    shapes = {normalize(c) for k in range(1, 7) for c in itertools.combinations(window, k)}
    return sorted(shapes, key=lambda c: (len(c), sorted(c)))


def test_criterion_8_property_suites():
    t0 = time.perf_counter()
    corpus = _window_corpus()
    witnessed = plans = bad_colors = 0
    for cells in corpus:
        found = False
        for closed in (False, True):
            for plan in enumerate_witnesses(cells, closed, limit=1000):
                found = True
                plans += 1
                bad_colors += not checkerboard_alternates(plan)
        witnessed += found
    lemma = all(check_lemma_escalier(gen_escalier(EscalierParams.simple(n)), closed=closed)
                for n in range(2, 6) for closed in (False, True))
    rng = random.Random(808)
    glue_bad = 0
    for _ in range(100):
        cells, host, guest_cells, guest, anchor = random_glue_pair(rng)
        out = glue(host, guest, anchor)
        additive = (validate(out, cells | guest_cells).back_len
                    == validate(host, cells).back_len + validate(guest, guest_cells).back_len)
        hs, gs, os_ = extract_schema(host), extract_schema(guest), extract_schema(out)
        union = all(os_.marks[v] == hs.marks.get(v, frozenset()) | gs.marks.get(v, frozenset())
                    for v in set(hs.marks) | set(gs.marks))
        glue_bad += not (additive and union)
    elapsed = time.perf_counter() - t0
    ok = bad_colors == 0 and lemma and glue_bad == 0 and elapsed < 120
    record("criterion 8", ok, f"coloring: {plans} witnesses of {witnessed}/{len(corpus)} shapes, "
                              f"{bad_colors} bad; lemma E_2..E_5: {lemma}; glue: 100 pairs, "
                              f"{glue_bad} bad; {elapsed:.1f}s < 120s")
    assert ok


def test_criterion_9_two_methods():
    two = gen_line(2)
    one = validate(method_one_plan(), two).back_len
    other = validate(method_two_plan(), two).back_len
    ok = one == Len(2, 1) and other == Len(3, 0)
    record("criterion 9", ok, f"method 1 back {one}, method 2 back {other}")
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
