"""Inner loops over CSR adjacency arrays.

Each kernel is written once as plain Python over numpy arrays (the ``*_py``
names) and exported under its public name either jitted or as-is, depending
on :data:`dicycles._accel.NUMBA_ENABLED`.
"""

import numpy as np

from ._accel import NUMBA_ENABLED, njit

__all__ = [
    "NUMBA_ENABLED",
    "girth_sweep",
    "girth_sweep_py",
    "longest_path_search",
    "longest_path_search_py",
]


def girth_sweep_py(indptr, indices, n):
    """Return ``(length, start)`` of a shortest cycle, or ``(0, -1)`` if acyclic.

    The BFS from ``s`` only walks vertices ``>= s``, so every cycle is found
    from its smallest vertex. ``start`` is the smallest vertex lying on some
    shortest cycle.
    """
    best = n + 1
    best_start = -1
    dist = np.full(n, -1, dtype=np.int64)
    queue = np.empty(n, dtype=np.int64)
    for s in range(n):
        if best == 2:
            break
        dist[s] = 0
        queue[0] = s
        head = 0
        tail = 1
        found = False
        while head < tail and not found:
            u = queue[head]
            head += 1
            du = dist[u]
            if du + 1 >= best:
                break
            for e in range(indptr[u], indptr[u + 1]):
                w = indices[e]
                if w < s:
                    continue
                if w == s:
                    best = du + 1
                    best_start = s
                    found = True
                    break
                if dist[w] == -1:
                    dist[w] = du + 1
                    queue[tail] = w
                    tail += 1
        for i in range(tail):
            dist[queue[i]] = -1
    if best_start == -1:
        return 0, -1
    return best, best_start


def longest_path_search_py(indptr, indices, n, upper, budget):
    """Exhaustive DFS for a longest simple path.

    Returns ``(length, path, expansions, complete)`` where ``path`` holds the
    ``length + 1`` vertices of the first maximum found in DFS order (starts
    ascending, neighbours in CSR order). ``complete`` is False when more than
    ``budget`` extensions were needed. The search stops early once a path of
    ``upper`` arcs is found.

    Before extending to ``w`` the search counts the vertices reachable from
    ``w`` off the current path, keeping at most one dead end (a dead end can
    only close a path); branches that cannot beat the best length are skipped.
    The count is inlined so the jitted and plain versions share one body.
    """
    best_len = -1
    best_path = np.zeros(max(n, 1), dtype=np.int64)
    path = np.empty(max(n, 1), dtype=np.int64)
    nxt = np.empty(max(n, 1), dtype=np.int64)
    onpath = np.zeros(max(n, 1), dtype=np.bool_)
    mark = np.zeros(max(n, 1), dtype=np.bool_)
    queue = np.empty(max(n, 1), dtype=np.int64)
    expansions = 0
    complete = True
    for s in range(n):
        if best_len >= upper or not complete:
            break
        path[0] = s
        onpath[s] = True
        nxt[0] = indptr[s]
        depth = 0
        if best_len < 0:
            best_len = 0
            best_path[0] = s
        while depth >= 0:
            if best_len >= upper or not complete:
                for i in range(depth + 1):
                    onpath[path[i]] = False
                break
            u = path[depth]
            e = nxt[depth]
            end = indptr[u + 1]
            advanced = False
            while e < end:
                w = indices[e]
                e += 1
                if onpath[w]:
                    continue
                # reach bound from w
                mark[w] = True
                queue[0] = w
                head = 0
                tail = 1
                sinks = 0
                while head < tail:
                    x = queue[head]
                    head += 1
                    live = False
                    for f in range(indptr[x], indptr[x + 1]):
                        y = indices[f]
                        if onpath[y]:
                            continue
                        live = True
                        if not mark[y]:
                            mark[y] = True
                            queue[tail] = y
                            tail += 1
                    if not live:
                        sinks += 1
                for i in range(tail):
                    mark[queue[i]] = False
                reach = tail - sinks + 1 if sinks > 1 else tail
                if depth + reach <= best_len:
                    continue
                expansions += 1
                if expansions > budget:
                    complete = False
                    break
                nxt[depth] = e
                depth += 1
                path[depth] = w
                onpath[w] = True
                nxt[depth] = indptr[w]
                if depth > best_len:
                    best_len = depth
                    for i in range(depth + 1):
                        best_path[i] = path[i]
                advanced = True
                break
            if not complete:
                continue
            if not advanced:
                onpath[u] = False
                depth -= 1
    if best_len < 0:
        return 0, best_path[:0], expansions, complete
    return best_len, best_path[: best_len + 1].copy(), expansions, complete


if NUMBA_ENABLED:
    girth_sweep = njit(girth_sweep_py)
    longest_path_search = njit(longest_path_search_py)
else:
    girth_sweep = girth_sweep_py
    longest_path_search = longest_path_search_py
