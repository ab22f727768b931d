import random
from pathlib import Path

import pytest
from hypothesis import strategies as st

from topadjoint.category import MonotoneMap
from topadjoint.continuity import SetFunction
from topadjoint.topology import enumerate_spaces, validate_space

DATA = Path(__file__).parent / "data"

SMALL_SPACES = [X for n in range(4) for X in enumerate_spaces(n)]


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture
def sierpinski():
    return validate_space(2, [0b00, 0b10, 0b11], ["a", "b"])


def random_monotone(source, target, rng: random.Random) -> MonotoneMap:
    """Uniform choice at each step among closed sets above the join of the
    images of all closed subsets already placed."""
    table = []
    tgt = target.closed_family
    for i, u in enumerate(source.closed_family):
        floor = 0
        for j in range(i):
            if source.closed_family[j] & ~u == 0:
                floor |= tgt[table[j]]
        choices = [k for k, v in enumerate(tgt) if floor & ~v == 0]
        table.append(rng.choice(choices))
    return MonotoneMap(source, target, tuple(table))


spaces = st.sampled_from(SMALL_SPACES)


@st.composite
def functions(draw, spaces=spaces):
    X = draw(spaces)
    Y = draw(spaces.filter(lambda Y: Y.point_count > 0 or X.point_count == 0))
    mapping = draw(st.lists(
        st.integers(0, max(Y.point_count - 1, 0)),
        min_size=X.point_count, max_size=X.point_count,
    ))
    return SetFunction(X, Y, tuple(mapping))


@st.composite
def monotone_maps(draw, source=None, target=None):
    S = source or draw(spaces)
    T = target or draw(spaces)
    seed = draw(st.integers(0, 2**32 - 1))
    return random_monotone(S, T, random.Random(seed))


ACCEPTANCE: dict[str, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: (int(k.split()[0]), k)):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {key}: {detail}")
