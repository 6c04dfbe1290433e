from hypothesis import strategies as st

from hooklab.partitions import Partition


def partitions(max_size: int = 25):
    """Hypothesis strategy for partitions of size at most ``max_size``."""

    @st.composite
    def build(draw):
        parts = []
        room = draw(st.integers(0, max_size))
        while room > 0:
            part = draw(st.integers(1, room))
            parts.append(part)
            room -= part
        return Partition(sorted(parts, reverse=True))

    return build()
