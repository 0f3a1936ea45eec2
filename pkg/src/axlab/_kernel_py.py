"""Pure-Python search over partitions into connected blocks.

Same contract as the compiled module axlab._kernel_cy; axlab.kernel picks
whichever is available. Scores are integers (the caller scales the objective
so exact rational comparison reduces to integer comparison):

    mode 0:  block term = 4*a*e_c - d_c^2          (a = total edge count)
    mode 1:  block term = b*e_c - a*C(n_c, 2)      (gamma = a / b)

The search anchors each block at the smallest unassigned vertex and grows
connected supersets through a frontier with an explicit forbidden set, so
every partition into connected blocks is produced exactly once and blocks
appear in canonical order. A new block's term can never exceed its edge
contribution, which gives the admissible bound used for pruning; pruning is
strict, so tied optima are all kept.
"""

from __future__ import annotations

from typing import Sequence


def best_connected_partitions(
    adj: Sequence[int],
    degrees: Sequence[int],
    mode: int,
    a: int,
    b: int,
) -> tuple[int, list[tuple[int, ...]]]:
    """All maximum-score partitions of vertices 0..len(adj)-1 into connected blocks.

    Returns (best_score, partitions); each partition is a tuple of vertex
    bitmasks ordered by smallest member. The empty graph yields the single
    empty partition with score 0.
    """
    n = len(adj)
    if mode not in (0, 1):
        raise ValueError("mode must be 0 (modularity) or 1 (cpm)")
    if n == 0:
        return 0, [()]
    if n > 63:
        raise ValueError("kernel supports at most 63 vertices per component")
    adj = tuple(adj)
    degrees = tuple(degrees)
    full = (1 << n) - 1

    best: int | None = None
    out: list[tuple[int, ...]] = []
    stack: list[int] = []

    if mode == 0:
        def term(e: int, d: int, size: int) -> int:
            return 4 * a * e - d * d

        edge_scale = 4 * a
    else:
        def term(e: int, d: int, size: int) -> int:
            return b * e - a * (size * (size - 1) // 2)

        edge_scale = b

    def edges_within(mask: int) -> int:
        total = 0
        m = mask
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            total += (adj[v] & mask).bit_count()
        return total // 2

    def partition(rem: int, acc: int) -> None:
        nonlocal best
        if rem == 0:
            if best is None or acc > best:
                best = acc
                out.clear()
                out.append(tuple(stack))
            elif acc == best:
                out.append(tuple(stack))
            return
        if best is not None and acc + edge_scale * edges_within(rem) < best:
            return
        v_bit = rem & -rem
        v = v_bit.bit_length() - 1

        def grow(block: int, e: int, d: int, size: int, frontier: int, forbidden: int) -> None:
            if frontier == 0:
                stack.append(block)
                partition(rem & ~block, acc + term(e, d, size))
                stack.pop()
                return
            u_bit = frontier & -frontier
            grow(block, e, d, size, frontier ^ u_bit, forbidden | u_bit)
            u = u_bit.bit_length() - 1
            new_block = block | u_bit
            new_frontier = (frontier | (adj[u] & rem)) & ~new_block & ~forbidden
            grow(
                new_block,
                e + (adj[u] & block).bit_count(),
                d + degrees[u],
                size + 1,
                new_frontier,
                forbidden,
            )

        grow(v_bit, 0, degrees[v], 1, adj[v] & rem & ~v_bit, 0)

    partition(full, 0)
    assert best is not None
    return best, out
