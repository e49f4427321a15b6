"""Pure-Python HLT coset enumeration kernel (fallback for the C extension).

Enumerates cosets of the trivial subgroup in a group whose generators are all
involutions (so every generator is its own inverse and the coset table is
symmetric: table[a][x] == b iff table[b][x] == a).  Structurally parallel to
the Cython kernel in _coset.pyx; keep the two in sync.
"""

from __future__ import annotations


def enumerate_cosets(n_gens: int, relators: list[list[int]], cap: int) -> tuple[bool, int, int]:
    """Run HLT enumeration.

    relators: words in generator indices (involution relators included by the
    caller).  cap bounds the total number of cosets ever defined (live + dead).
    Returns (complete, order, cosets_defined); order is the live-coset count
    when complete, else 0.
    """
    table = [[-1] * n_gens]      # row per coset
    p = [0]                      # union-find parent, p[i] <= i

    def rep(k: int) -> int:
        while p[k] != k:
            k = p[k]
        return k

    def merge(a: int, b: int, queue: list[int]) -> None:
        a, b = rep(a), rep(b)
        if a != b:
            if a > b:
                a, b = b, a
            p[b] = a
            queue.append(b)

    def coincidence(a: int, b: int) -> None:
        queue: list[int] = []
        merge(a, b, queue)
        i = 0
        while i < len(queue):
            g = queue[i]
            i += 1
            row = table[g]
            for x in range(n_gens):
                d = row[x]
                if d == -1:
                    continue
                table[d][x] = -1
                row[x] = -1
                mu, nu = rep(g), rep(d)
                if table[mu][x] != -1:
                    merge(nu, table[mu][x], queue)
                elif table[nu][x] != -1:
                    merge(mu, table[nu][x], queue)
                else:
                    table[mu][x] = nu
                    table[nu][x] = mu

    def define(a: int, x: int) -> int:
        if len(table) >= cap:
            return -1
        n = len(table)
        table.append([-1] * n_gens)
        p.append(n)
        table[a][x] = n
        table[n][x] = a
        return n

    def scan_and_fill(a: int, w: list[int]) -> bool:
        """Scan relator w at coset a, defining cosets to fill gaps.

        Returns False when the coset cap is hit.
        """
        f, i = a, 0
        b, j = a, len(w) - 1
        while True:
            while i <= j and table[f][w[i]] != -1:
                f = table[f][w[i]]
                i += 1
            if i > j:
                if f != b:
                    coincidence(f, b)
                return True
            while j >= i and table[b][w[j]] != -1:
                b = table[b][w[j]]
                j -= 1
            if j < i:
                coincidence(f, b)
                return True
            if j == i:
                table[f][w[i]] = b
                table[b][w[i]] = f
                return True
            if define(f, w[i]) == -1:
                return False

    alpha = 0
    while alpha < len(table):
        if p[alpha] != alpha:
            alpha += 1
            continue
        for w in relators:
            if not scan_and_fill(alpha, w):
                return False, 0, len(table)
            if p[alpha] != alpha:
                break
        if p[alpha] == alpha:
            for x in range(n_gens):
                if table[alpha][x] == -1:
                    if define(alpha, x) == -1:
                        return False, 0, len(table)
        alpha += 1

    order = sum(1 for k in range(len(p)) if p[k] == k)
    return True, order, len(table)
