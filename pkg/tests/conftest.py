from __future__ import annotations

from hypothesis import strategies as st

from linedetect.partitions import Partition


@st.composite
def partitions(draw, max_size: int = 8, max_len: int | None = None) -> Partition:
    """Random partition built from a random multiset of part sizes."""
    n = draw(st.integers(min_value=0, max_value=max_size))
    parts: list[int] = []
    left = n
    while left:
        cap = left if not parts else min(left, parts[-1])
        if max_len is not None and len(parts) == max_len - 1:
            if left > cap:
                break
            parts.append(left)
            left = 0
            break
        p = draw(st.integers(min_value=1, max_value=cap))
        parts.append(p)
        left -= p
    return Partition(parts)
