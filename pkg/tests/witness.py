"""Explicit counterexample walks for the leftmost property, used as a test oracle."""

from cfsindex.walks import walk


def leftmost_violation(g, rank, p, u, depth):
    """A walk ``Q`` to ``u`` that meets the p-walk ``P`` of ``u`` at some
    position ``j <= depth`` while ``Q[j-1]`` ranks below ``P[j-1]``, or None.

    Walks are listed from ``u`` backwards, so ``Q[0] == P[0] == u``.
    """
    P = walk(p, u, depth)
    layers = [{u}]  # layers[k]: nodes with a k-edge path to u
    for _ in range(depth):
        layers.append({x for y in layers[-1] for x in g.pred[y]})
    for j in range(2, depth):  # 0-based position of the shared node
        x = P[j]
        for y in g.succ[x]:
            if y in layers[j - 1] and rank[y] < rank[P[j - 1]]:
                q = [x, y]
                for k in range(j - 2, -1, -1):
                    q.append(next(z for z in g.succ[q[-1]] if z in layers[k]))
                q.reverse()
                assert q[0] == u and all(q[i + 1] in g.pred[q[i]] for i in range(len(q) - 1))
                return q
    return None


def any_violation(g, rank, p, depth):
    return next(
        (w for u in range(g.n) if (w := leftmost_violation(g, rank, p, u, depth)) is not None),
        None,
    )
