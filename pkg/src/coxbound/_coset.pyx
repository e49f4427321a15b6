# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""HLT coset enumeration kernel (compiled).

Same algorithm as _coset_py.py: all generators are involutions, so the coset
table is symmetric and no inverse columns are needed.  Keep the two files in
sync.
"""

from libc.stdlib cimport malloc, free


cdef inline int rep(int* p, int k) noexcept nogil:
    while p[k] != k:
        k = p[k]
    return k


cdef int merge(int* p, int a, int b, int* queue, int* qlen) noexcept nogil:
    a = rep(p, a)
    b = rep(p, b)
    if a == b:
        return 0
    if a > b:
        a, b = b, a
    p[b] = a
    queue[qlen[0]] = b
    qlen[0] += 1
    return 0


cdef void coincidence(int* table, int* p, int n_gens, int a, int b,
                      int* queue) noexcept nogil:
    cdef int qlen = 0, i = 0, g, x, d, mu, nu
    merge(p, a, b, queue, &qlen)
    while i < qlen:
        g = queue[i]
        i += 1
        for x in range(n_gens):
            d = table[g * n_gens + x]
            if d == -1:
                continue
            table[d * n_gens + x] = -1
            table[g * n_gens + x] = -1
            mu = rep(p, g)
            nu = rep(p, d)
            if table[mu * n_gens + x] != -1:
                merge(p, nu, table[mu * n_gens + x], queue, &qlen)
            elif table[nu * n_gens + x] != -1:
                merge(p, mu, table[nu * n_gens + x], queue, &qlen)
            else:
                table[mu * n_gens + x] = nu
                table[nu * n_gens + x] = mu


def enumerate_cosets(int n_gens, relators, int cap):
    """HLT enumeration over the trivial subgroup; see _coset_py.enumerate_cosets."""
    cdef int n_rel = len(relators)
    cdef int total_len = 0
    cdef int k, i, j, x, f, b, a, d, alpha, ncos, order, w_off, w_len
    for r in relators:
        total_len += len(r)

    cdef int* rel_data = <int*> malloc(total_len * sizeof(int))
    cdef int* rel_off = <int*> malloc((n_rel + 1) * sizeof(int))
    cdef int* table = <int*> malloc(cap * n_gens * sizeof(int))
    cdef int* p = <int*> malloc(cap * sizeof(int))
    cdef int* queue = <int*> malloc(cap * sizeof(int))
    if rel_data == NULL or rel_off == NULL or table == NULL or p == NULL or queue == NULL:
        free(rel_data)
        free(rel_off)
        free(table)
        free(p)
        free(queue)
        raise MemoryError()

    k = 0
    rel_off[0] = 0
    for i in range(n_rel):
        for g in relators[i]:
            rel_data[k] = g
            k += 1
        rel_off[i + 1] = k

    for x in range(n_gens):
        table[x] = -1
    p[0] = 0
    ncos = 1
    alpha = 0
    cdef bint complete = True, scanning

    try:
        with nogil:
            while alpha < ncos:
                if p[alpha] != alpha:
                    alpha += 1
                    continue
                for k in range(n_rel):
                    w_off = rel_off[k]
                    w_len = rel_off[k + 1] - w_off
                    # scan_and_fill(alpha, relator k)
                    f = alpha
                    i = 0
                    b = alpha
                    j = w_len - 1
                    scanning = True
                    while scanning:
                        while i <= j and table[f * n_gens + rel_data[w_off + i]] != -1:
                            f = table[f * n_gens + rel_data[w_off + i]]
                            i += 1
                        if i > j:
                            if f != b:
                                coincidence(table, p, n_gens, f, b, queue)
                            scanning = False
                            continue
                        while j >= i and table[b * n_gens + rel_data[w_off + j]] != -1:
                            b = table[b * n_gens + rel_data[w_off + j]]
                            j -= 1
                        if j < i:
                            coincidence(table, p, n_gens, f, b, queue)
                            scanning = False
                        elif j == i:
                            x = rel_data[w_off + i]
                            table[f * n_gens + x] = b
                            table[b * n_gens + x] = f
                            scanning = False
                        else:
                            # define new coset at the forward gap
                            if ncos >= cap:
                                complete = False
                                break
                            x = rel_data[w_off + i]
                            for d in range(n_gens):
                                table[ncos * n_gens + d] = -1
                            p[ncos] = ncos
                            table[f * n_gens + x] = ncos
                            table[ncos * n_gens + x] = f
                            ncos += 1
                    if not complete or p[alpha] != alpha:
                        break
                if not complete:
                    break
                if p[alpha] == alpha:
                    for x in range(n_gens):
                        if table[alpha * n_gens + x] == -1:
                            if ncos >= cap:
                                complete = False
                                break
                            for d in range(n_gens):
                                table[ncos * n_gens + d] = -1
                            p[ncos] = ncos
                            table[alpha * n_gens + x] = ncos
                            table[ncos * n_gens + x] = alpha
                            ncos += 1
                    if not complete:
                        break
                alpha += 1

        if not complete:
            return False, 0, ncos
        order = 0
        for k in range(ncos):
            if p[k] == k:
                order += 1
        return True, order, ncos
    finally:
        free(rel_data)
        free(rel_off)
        free(table)
        free(p)
        free(queue)
