"""Both kernel backends must agree exactly, including tie-breaks."""
import random
import subprocess
import sys

import pytest

from vpgmis import _pure, kernels

BACKENDS = ["pure"] + (["compiled"] if kernels.COMPILED_AVAILABLE else [])


@pytest.fixture(params=BACKENDS)
def backend(request):
    with kernels.using_backend(request.param):
        yield request.param


def random_shapes(rng, n, side=20, arm=8):
    xc = [rng.randint(-side, side) for _ in range(n)]
    yc = [rng.randint(-side, side) for _ in range(n)]
    xh = [x + rng.choice([-1, 1]) * rng.randint(1, arm) for x in xc]
    yv = [y + rng.choice([-1, 1]) * rng.randint(1, arm) for y in yc]
    return xc, yc, xh, yv


def test_backend_switching():
    with kernels.using_backend("pure"):
        assert kernels.backend() == "pure"
    with pytest.raises(ValueError):
        kernels.set_backend("gpu")


@pytest.mark.skipif(not kernels.COMPILED_AVAILABLE, reason="compiled kernels not built")
def test_compiled_matches_pure():
    rng = random.Random(11)
    core = kernels._compiled
    q = kernels._q
    for _ in range(300):
        n = rng.randint(0, 40)
        cols = random_shapes(rng, n)
        assert core.conflict_masks(*map(q, cols)) == _pure.conflict_masks(*cols)
        assert core.first_conflict(*map(q, cols)) == _pure.first_conflict(*cols)
        seq = [rng.randint(0, 10) for _ in range(n)]
        assert core.lis_positions(q(seq)) == _pure.lis_positions(seq)
        cuts = sorted({0, n, *(rng.randint(0, n) for _ in range(3))})
        assert core.segment_lis(q(seq), cuts) == _pure.segment_lis(seq, cuts)
        masks = _pure.conflict_masks(*cols)[: min(n, 28)]
        masks = [m & ((1 << len(masks)) - 1) for m in masks]
        assert core.max_independent_set(masks) == _pure.max_independent_set(masks)
        box = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(4)]
        assert core.box_lis(*map(q, box)) == _pure.box_lis(*box)
        pos = [[rng.randint(0, 40) for _ in range(n)] for _ in range(2)]
        den = rng.randint(1, 3)
        arms = [[p + rng.randint(2 * den, 60) for p in col] for col in pos]  # arm >= 2 * den
        grid = (pos[0], pos[1], arms[0], arms[1])
        for tie in (False, True):
            assert core.grid_cells(*map(q, grid), den, den, tie) == _pure.grid_cells(*grid, den, den, tie)


def test_large_values_fall_back(backend):
    big = 1 << 70
    # collinear horizontal arms overlapping on [big, big + 1]
    xc, yc, xh, yv = [0, big], [0, 0], [big + 1, 2 * big], [big + 1, 2 * big]
    assert kernels.conflict_masks(xc, yc, xh, yv) == [0b10, 0b01]
    yc = [0, 1]
    assert kernels.conflict_masks(xc, yc, xh, yv) == [0, 0]
    assert kernels.lis_positions([big, -big, 2 * big]) == [1, 2]  # smallest tail wins


def test_lis_smallest_tail_reconstruction(backend):
    # several optimal answers exist; patience sorting keeps the smallest tails
    assert kernels.lis_positions([3, 1, 2, 0, 4]) == [1, 2, 4]
    assert kernels.lis_positions([]) == []
    assert kernels.lis_positions([5, 5, 5]) == [2]


def test_max_independent_set_small_graphs(backend):
    assert kernels.max_independent_set([]) == 0
    # path 0-1-2: {0, 2}
    assert kernels.max_independent_set([0b010, 0b101, 0b010]) == 0b101
    # 5-cycle
    c5 = [(1 << ((v + 1) % 5)) | (1 << ((v - 1) % 5)) for v in range(5)]
    assert bin(kernels.max_independent_set(c5)).count("1") == 2


def test_max_independent_set_above_64_vertices(backend):
    n = 70  # a perfect matching: alpha = 35
    masks = [1 << (v ^ 1) for v in range(n)]
    assert bin(kernels.max_independent_set(masks)).count("1") == 35


def test_box_lis_boxes_are_independent(backend):
    r = [0, 0, 1, 1]
    c = [0, 0, 0, 0]
    x = [0, 1, 0, 1]
    y = [1, 0, 0, 1]  # box (0,0) is an inversion, box (1,0) is increasing
    assert kernels.box_lis(r, c, x, y) in ([0, 2, 3], [1, 2, 3])
    assert kernels.box_lis([], [], [], []) == []


def test_import_without_extension():
    # a missing build must silently select the pure kernels
    code = (
        "import sys; sys.modules['vpgmis._core'] = None\n"
        "from vpgmis import kernels\n"
        "from vpgmis.solver import solve\n"
        "from vpgmis.geometry import LShape\n"
        "assert not kernels.COMPILED_AVAILABLE and kernels.backend() == 'pure'\n"
        "print(len(solve([LShape(0, 0, 1, 1), LShape(2, 0, 3, 1)])))\n"
    )
    proc = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout.strip() == "2"
