"""Maximum cardinality matching in general graphs.

Classic blossom-contraction search: grow BFS trees from free vertices,
contract odd cycles on the fly (tracking cycle bases), and augment along
alternating paths.  O(V^3), exact, no weights.  The graphs handled here
are proximity graphs of surviving objects, a handful of vertices, so
clarity beats constant-factor tuning.
"""

from __future__ import annotations

from collections import deque

__all__ = ["max_cardinality_matching"]


def max_cardinality_matching(n: int, edges) -> list[int]:
    """Mate array for a maximum matching of an n-vertex graph.

    edges is an iterable of (u, v) pairs with 0 <= u, v < n, u != v.
    Returns mate with mate[v] = partner of v, or -1 if v is unmatched.
    """
    adj: list[list[int]] = [[] for _ in range(n)]
    seen = set()
    for u, v in edges:
        if u == v:
            raise ValueError("self-loops are not allowed")
        key = (min(u, v), max(u, v))
        if key in seen:
            continue
        seen.add(key)
        adj[u].append(v)
        adj[v].append(u)

    mate = [-1] * n
    # cheap greedy seed; augmentation fixes the rest
    for u in range(n):
        if mate[u] == -1:
            for v in adj[u]:
                if mate[v] == -1:
                    mate[u] = v
                    mate[v] = u
                    break

    parent = [-1] * n
    base = list(range(n))
    in_queue = [False] * n

    def lca(a: int, b: int) -> int:
        mark = [False] * n
        while True:
            a = base[a]
            mark[a] = True
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if mark[b]:
                return b
            b = parent[mate[b]]

    def mark_path(v: int, b: int, child: int, in_blossom: list[bool]) -> None:
        while base[v] != b:
            in_blossom[base[v]] = True
            in_blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    def try_augment(root: int) -> bool:
        for i in range(n):
            parent[i] = -1
            base[i] = i
            in_queue[i] = False
        q = deque([root])
        in_queue[root] = True
        while q:
            v = q.popleft()
            for to in adj[v]:
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                    # odd cycle: contract the blossom around its base
                    curbase = lca(v, to)
                    in_blossom = [False] * n
                    mark_path(v, curbase, to, in_blossom)
                    mark_path(to, curbase, v, in_blossom)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = curbase
                            if not in_queue[i]:
                                in_queue[i] = True
                                q.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if mate[to] == -1:
                        # alternating path from root to free vertex: augment
                        while to != -1:
                            v2 = parent[to]
                            nxt = mate[v2]
                            mate[to] = v2
                            mate[v2] = to
                            to = nxt
                        return True
                    if not in_queue[mate[to]]:
                        in_queue[mate[to]] = True
                        q.append(mate[to])
        return False

    for v in range(n):
        if mate[v] == -1:
            try_augment(v)
    return mate
