"""Pure-Python reference implementations of the hot kernels.

Same contracts as nbhdclust._kernels_c; selected by nbhdclust._backend when
the compiled extension is absent or NBHDCLUST_PURE_PYTHON is set.
"""

IMPLEMENTATION = "python"


def sweep_1d(lefts_by_left, rights_by_right, left_pos_to_right_pos, r, cap=-1):
    """Greedy left-to-right center placement over presorted intervals.

    lefts_by_left: left endpoints in ascending order.
    rights_by_right: right endpoints in ascending order.
    left_pos_to_right_pos: position i of the by-left order is position
        left_pos_to_right_pos[i] of the by-right order (same interval).
    r: covering radius, >= 0.

    Places a center at (smallest remaining right endpoint) + r, discards
    every interval whose left endpoint lies within 2r of that right
    endpoint, repeats.  Returns (count, centers).  With cap >= 0 the sweep
    stops as soon as count exceeds cap; the returned centers are then
    partial and only the fact count > cap is meaningful.
    """
    lefts = list(lefts_by_left)
    rights = list(rights_by_right)
    pos = list(left_pos_to_right_pos)
    m = len(rights)
    removed = bytearray(m)
    centers = []
    i = 0
    j = 0
    while i < m:
        if removed[i]:
            i += 1
            continue
        beta = rights[i]
        centers.append(beta + r)
        if 0 <= cap < len(centers):
            return len(centers), centers
        reach = beta + 2.0 * r
        while j < m and lefts[j] <= reach:
            removed[pos[j]] = 1
            j += 1
        i += 1
    return len(centers), centers


def min_cover_size(masks, full, cap):
    """Fewest masks whose bitwise OR equals full; cap + 1 if above cap.

    masks: bitmasks over at most 63 objects.  Dominated (subset) masks are
    permitted but slow the search down; callers should pre-filter.
    """
    full = int(full)
    cap = int(cap)
    if full == 0:
        return 0
    msks = [int(m) for m in masks]
    nm = len(msks)

    # greedy pass for an initial upper bound
    best = cap + 1
    uncovered = full
    used = 0
    while uncovered and used < best:
        pick = 0
        pick_gain = 0
        for mk in msks:
            gain = (mk & uncovered).bit_count()
            if gain > pick_gain:
                pick_gain = gain
                pick = mk
        if pick_gain == 0:
            break
        uncovered &= ~pick
        used += 1
    if uncovered == 0 and used < best:
        best = used
    if best <= 1:
        return best

    def dfs(uncov, depth):
        nonlocal best
        if uncov == 0:
            if depth < best:
                best = depth
            return
        if depth + 1 >= best:
            return
        bit = uncov & (-uncov)
        for t in range(nm):
            mk = msks[t]
            if mk & bit:
                dfs(uncov & ~mk, depth + 1)

    dfs(full, 0)
    return best
