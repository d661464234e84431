import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from pgpartial import ParityGame

settings.register_profile(
    "default", max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def games(draw, min_nodes=1, max_nodes=6, max_color=4, max_degree=3):
    n = draw(st.integers(min_nodes, max_nodes))
    owner = draw(st.lists(st.integers(0, 1), min_size=n, max_size=n))
    color = draw(st.lists(st.integers(0, max_color), min_size=n, max_size=n))
    succ = [
        draw(st.lists(st.integers(0, n - 1), min_size=1, max_size=min(max_degree, n), unique=True))
        for _ in range(n)
    ]
    return ParityGame(owner, color, succ)


def cycle2():
    """a(V0, c=0) -> b, b(V1, c=1) -> a."""
    return ParityGame([0, 1], [0, 1], [[1], [0]])
