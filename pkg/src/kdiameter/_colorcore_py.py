"""Pure-Python k-coloring backtracking kernel.

Same contract as the compiled `_colorcore` extension: DSATUR-style dynamic
vertex selection, optional fixed assignments, optional color symmetry
breaking, and a hard node budget.  `kdiameter.coloring` picks whichever
implementation imports.
"""

BACKEND = "python"

MODE_FIRST = 0
MODE_ENUMERATE = 1

STATUS_OK = 0
STATUS_BUDGET = 1


def search(adj, k, fixed=None, mode=MODE_FIRST, limit=0, budget=10**9):
    """Backtracking search over proper k-colorings.

    adj    -- list of neighbor bitsets (int), one per vertex
    fixed  -- per-vertex preassigned color or -1
    mode   -- MODE_FIRST returns the first proper coloring found;
              MODE_ENUMERATE collects colorings (canonical representatives
              under color permutation when nothing is fixed)
    limit  -- cap on collected colorings in enumerate mode (0 = no cap)
    budget -- node budget; exceeding it aborts with STATUS_BUDGET

    Returns (status, payload, nodes): payload is a coloring list or None in
    first mode, a list of colorings in enumerate mode.
    """
    n = len(adj)
    colors = [-1] * n
    counts = [[0] * k for _ in range(n)]
    degrees = [adj[v].bit_count() for v in range(n)]
    symmetry = True
    if fixed is not None:
        for v, c in enumerate(fixed):
            if c is None or c < 0:
                continue
            if c >= k:
                return STATUS_OK, None if mode == MODE_FIRST else [], 0
            symmetry = False
            colors[v] = c
        for v in range(n):
            c = colors[v]
            if c < 0:
                continue
            nb = adj[v]
            while nb:
                w = (nb & -nb).bit_length() - 1
                nb &= nb - 1
                if colors[w] == c:
                    return STATUS_OK, None if mode == MODE_FIRST else [], 0
                counts[w][c] += 1
    free = [v for v in range(n) if colors[v] < 0]
    full = (1 << k) - 1
    nodes = 0
    found = []

    def saturation(v):
        return sum(1 for c in range(k) if counts[v][c])

    def pick():
        best, best_key = -1, None
        for v in free:
            if colors[v] >= 0:
                continue
            key = (saturation(v), degrees[v], -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        return best

    def rec(remaining, used):
        nonlocal nodes
        if remaining == 0:
            if mode == MODE_FIRST:
                found.append(list(colors))
                return True
            found.append(list(colors))
            return bool(limit) and len(found) >= limit
        v = pick()
        avail = full
        for c in range(k):
            if counts[v][c]:
                avail &= ~(1 << c)
        if symmetry:
            avail &= (1 << min(k, used + 1)) - 1
        while avail:
            c = (avail & -avail).bit_length() - 1
            avail &= avail - 1
            nodes += 1
            if nodes > budget:
                raise _Budget
            colors[v] = c
            nb = adj[v]
            while nb:
                w = (nb & -nb).bit_length() - 1
                nb &= nb - 1
                counts[w][c] += 1
            if rec(remaining - 1, max(used, c + 1)):
                colors[v] = -1
                nb = adj[v]
                while nb:
                    w = (nb & -nb).bit_length() - 1
                    nb &= nb - 1
                    counts[w][c] -= 1
                return True
            colors[v] = -1
            nb = adj[v]
            while nb:
                w = (nb & -nb).bit_length() - 1
                nb &= nb - 1
                counts[w][c] -= 1
        return False

    class _Budget(Exception):
        pass

    try:
        used0 = max((c + 1 for c in colors if c >= 0), default=0)
        rec(len(free), used0)
    except _Budget:
        return STATUS_BUDGET, None if mode == MODE_FIRST else found, nodes

    if mode == MODE_FIRST:
        return STATUS_OK, (found[0] if found else None), nodes
    return STATUS_OK, found, nodes
